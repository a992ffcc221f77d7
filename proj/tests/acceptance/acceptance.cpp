// One PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.

#include "simplotope/face_count.hpp"
#include "simplotope/io.hpp"
#include "simplotope/standard.hpp"
#include "simplotope/tri_square.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

using namespace simplotope;

namespace {

struct Outcome {
  bool ok = true;
  int problems = 0;
  std::ostringstream detail;

  // Keeps the first few problems; the rest are only counted.
  void fail(const std::string& what) {
    if (ok) detail.str("");
    ok = false;
    if (++problems <= 5) detail << (problems > 1 ? "; " : "") << what;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.ok) ++failures;
  std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " [" << std::fixed;
  std::cout.precision(2);
  std::cout << secs << "s]";
  auto d = o.detail.str();
  if (o.problems > 5) d += "; " + std::to_string(o.problems - 5) + " more";
  if (!d.empty()) std::cout << " - " << d;
  std::cout << std::endl;
}

VTable published_v() { return VTable(CubeCaps::load(CubeCaps::default_path()), VPolicy::published); }

SimplotopeSpec st(int s, int t) { return SimplotopeSpec::segments_triangles(s, t); }

// Every nondegenerate full vertex simplex of the spec.
void for_each_simplex(const SimplotopeSpec& spec, const std::function<void(const VertexSimplex&)>& visit) {
  auto verts = all_vertices(spec);
  for_each_combination(static_cast<int>(verts.size()), spec.dimension() + 1, [&](std::span<const int> idx) {
    std::vector<VertexPoint> v;
    for (int i : idx) v.push_back(verts[i]);
    VertexSimplex x(spec, std::move(v));
    if (!x.degenerate()) visit(x);
  });
}

// All multisets of positive integers summing to at most n, as factor lists.
void partitions(int remaining, int largest, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (!cur.empty()) out.push_back(cur);
  for (int p = std::min(remaining, largest); p >= 1; --p) {
    cur.push_back(p);
    partitions(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

int main() {
  auto v = published_v();

  criterion(1, "bounds table at desk scale", [&](Outcome& o) {
    FBounds f(v);
    std::map<std::pair<int, int>, int> expected{{{0, 0}, 1}, {{1, 0}, 1}, {{2, 0}, 2}, {{3, 0}, 5}, {{0, 1}, 1}, {{1, 1}, 3},
                                                {{2, 1}, 9}, {{0, 2}, 6}, {{1, 2}, 20}, {{2, 2}, 68}, {{0, 3}, 50}};
    std::size_t matched = 0;
    for (const auto& c : bounds_table(3, 3, 6, f, 4)) {
      auto it = expected.find({c.s, c.t});
      if (it == expected.end()) continue;
      if (!c.computed) {
        o.fail("(" + std::to_string(c.s) + "," + std::to_string(c.t) + ") skipped: " + c.skip_reason);
        continue;
      }
      ++matched;
      if (c.lower_bound != it->second)
        o.fail("(" + std::to_string(c.s) + "," + std::to_string(c.t) + ") = " + to_string(c.lower_bound) + ", expected " +
               std::to_string(it->second));
    }
    if (matched != expected.size()) o.fail("only " + std::to_string(matched) + " cells computed");
    if (o.ok) o.detail << matched << " cells match";
  });

  criterion(2, "maximum simplex classes", [&](Outcome& o) {
    std::map<std::pair<int, int>, int> expected{{{1, 1}, 1}, {{0, 2}, 1}, {{2, 1}, 2}, {{1, 2}, 3}, {{0, 3}, 4}, {{3, 0}, 2}};
    for (auto [key, want] : expected) {
      VmaxStats stats;
      Int got = v_max_exhaustive(st(key.first, key.second), &stats);
      if (got != want)
        o.fail("V(" + std::to_string(key.first) + "," + std::to_string(key.second) + ") = " + to_string(got));
      if (key == std::pair{0, 3}) {
        if (stats.subsets != 888030) o.fail("(0,3) enumerated " + std::to_string(stats.subsets) + " subsets");
        else if (o.ok) o.detail << "(0,3) over " << stats.subsets << " subsets";
      }
    }
  });

  criterion(3, "recurrence worked examples", [&](Outcome& o) {
    FBounds f(v);
    Int a = f.f_recurrence({1, 1, 1, 2, 0, 1});
    Int b = f.f_recurrence({2, 1, 1, 1, 1, 1});
    if (a != 3) o.fail("F(1,1,1,2,0,1) recurrence = " + to_string(a));
    if (b != 2) o.fail("F(2,1,1,1,1,1) recurrence = " + to_string(b));
  });

  criterion(4, "face counts agree three ways", [&](Outcome& o) {
    int checked = 0;
    for (int s = 0; s <= 4; ++s)
      for (int t = 0; t <= 4; ++t) {
        auto hist = face_histogram(s, t);
        for (int tp = 0; tp <= t; ++tp)
          for (int sp = 0; sp <= s + t; ++sp) {
            QQuery q{s, t, sp, tp};
            Int closed = q_count(q), gen = q_by_generating_function(q);
            auto it = hist.find({sp, tp});
            Int enumerated = it == hist.end() ? Int(0) : it->second;
            ++checked;
            if (closed != gen || closed != enumerated)
              o.fail("Q(" + std::to_string(s) + "," + std::to_string(t) + "," + std::to_string(sp) + "," + std::to_string(tp) +
                     "): " + to_string(closed) + " / " + to_string(gen) + " / " + to_string(enumerated));
          }
      }
    if (q_count({0, 2, 2, 0}) != 9) o.fail("Q(0,2,2,0) = " + to_string(q_count({0, 2, 2, 0})));
    if (o.ok) o.detail << checked << " values";
  });

  criterion(5, "corner simplices attain the counting bound", [&](Outcome& o) {
    FBounds f(v);
    for (int s = 0; s <= 5; ++s)
      for (int t = 0; s + 2 * t <= 5; ++t) {
        if (s + t == 0) continue;
        auto spec = st(s, t);
        auto x = corner_simplex(spec, all_vertices(spec).front());
        for (int tp = 0; tp <= t; ++tp)
          for (int sp = 0; sp + tp <= s + t; ++sp) {
            if (sp + 2 * tp < 1) continue;
            Int n = static_cast<long>(exterior_faces(x, sp, tp).size());
            Int want = sp == 1 && tp == 0 ? Int(s + 3 * t) : f.comb_bound({s, t, 1, sp, tp, 1});
            if (n != want)
              o.fail("(" + std::to_string(s) + "," + std::to_string(t) + ") faces (" + std::to_string(sp) + "," +
                     std::to_string(tp) + "): " + to_string(n) + " vs " + to_string(want));
          }
      }
  });

  criterion(6, "exterior-face counts never exceed F", [&](Outcome& o) {
    FBounds f(v);
    std::uint64_t simplices = 0;
    for (auto [s, t] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {0, 2}, {3, 0}}) {
      for_each_simplex(st(s, t), [&](const VertexSimplex& x) {
        ++simplices;
        std::map<std::tuple<int, int, Int>, int> counts;
        for (const auto& e : all_exterior_faces(x)) {
          auto sig = e.face.signature();
          ++counts[{sig.segments, sig.triangles, e.klass}];
        }
        const int c = static_cast<int>(x.klass());
        for (const auto& [key, n] : counts) {
          auto [sp, tp, cp] = key;
          FKey k{s, t, c, sp, tp, static_cast<int>(cp)};
          Int bound = f.f_bound(k);
          if (Int(n) > bound) o.fail(k.to_string() + ": " + std::to_string(n) + " > " + to_string(bound));
        }
      });
    }
    if (o.ok) o.detail << simplices << " simplices";
  });

  criterion(7, "products of two simplices are unimodular", [&](Outcome& o) {
    std::uint64_t simplices = 0;
    for (int a = 1; a <= 4; ++a)
      for (int b = 1; a + b <= 5; ++b) {
        SimplotopeSpec spec({a, b});
        for_each_simplex(spec, [&](const VertexSimplex& x) {
          ++simplices;
          if (x.klass() != 1) o.fail("Π(" + std::to_string(a) + "," + std::to_string(b) + ") has class " + to_string(x.klass()));
        });
      }
    if (o.ok) o.detail << simplices << " simplices";
  });

  criterion(8, "standard triangulation", [&](Outcome& o) {
    std::vector<std::vector<int>> specs;
    std::vector<int> cur;
    partitions(6, 6, cur, specs);
    int certified = 0;
    for (const auto& factors : specs) {
      SimplotopeSpec spec(factors);
      auto simplices = standard_triangulation(spec);
      if (Int(static_cast<long>(simplices.size())) != standard_size(spec)) o.fail(spec.to_string() + " size mismatch");
      if (spec.dimension() > 5) continue;
      if (!verify({spec, simplices}, 4).certified()) o.fail(spec.to_string() + " does not certify");
      else ++certified;
    }
    if (o.ok) o.detail << specs.size() << " sizes, " << certified << " certified";
  });

  criterion(9, "triangle-cross-square case study", [&](Outcome& o) {
    auto all = enumerate_class2();
    if (all.size() != 24) o.fail(std::to_string(all.size()) + " class-2 simplices");
    std::vector<Rat> expected{0, Rat(1, 6), Rat(1, 6), Rat(1, 3), Rat(1, 3)};
    for (const auto& x : all) {
      auto c = center_in_facet(x);
      std::sort(c.begin(), c.end());
      if (c != expected) o.fail(encode_simplex(x) + " center coefficients differ");
    }
    const std::size_t n = all.size();
    std::vector<std::vector<bool>> overlap(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) overlap[i][j] = interiors_overlap(all[i], all[j]);
    int triples = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          ++triples;
          if (!overlap[i][j] && !overlap[i][k] && !overlap[j][k])
            o.fail("disjoint triple " + encode_simplex(all[i]) + " " + encode_simplex(all[j]) + " " + encode_simplex(all[k]));
        }
    if (triples != 2024) o.fail(std::to_string(triples) + " triples");

    auto cand = read_triangulation(std::filesystem::path(SIMPLOTOPE_DATA_DIR) / "tri_square_10.json");
    auto report = verify(cand, 2);
    auto classes = report.classes;
    std::sort(classes.begin(), classes.end());
    if (!report.certified()) o.fail("bundled triangulation does not certify");
    if (report.total_class != 12) o.fail("total class " + to_string(report.total_class));
    if (classes != std::vector<Int>{1, 1, 1, 1, 1, 1, 1, 1, 2, 2}) o.fail("class multiset differs");

    auto x = decode_simplex("1850*").sorted_vertices(), y = decode_simplex("1358*").sorted_vertices();
    std::vector<VertexPoint> common;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
    if (common != decode_simplex("158*").sorted_vertices()) o.fail("class-2 pair does not share 158*");

    auto index = [&](std::string_view w) {
      auto key = decode_simplex(w).sorted_vertices();
      for (std::size_t i = 0; i < cand.simplices.size(); ++i)
        if (cand.simplices[i].sorted_vertices() == key) return i;
      return cand.simplices.size();
    };
    auto has_edge = [&](std::string_view a, std::string_view b) {
      auto i = index(a), j = index(b);
      return std::ranges::count(report.adjacency, std::pair{std::min(i, j), std::max(i, j)}) == 1;
    };
    if (report.adjacency.size() != 11) o.fail(std::to_string(report.adjacency.size()) + " adjacencies");
    if (!has_edge("1850*", "1358*") || !has_edge("#850*", "1850*") || !has_edge("13582", "1358*"))
      o.fail("adjacency structure differs");

    FBounds f(v);
    auto arg = lower_bound_10_argument(f);
    for (const auto& ing : arg.ingredients)
      if (!ing.ok) o.fail("ingredient " + ing.id + " fails: " + ing.detail);
    if (arg.bound != 10 || !arg.ok) o.fail("reported bound " + std::to_string(arg.bound));
    if (o.ok) o.detail << "bound " << arg.bound << " (linear program " << arg.lp_bound << ")";
  });

  criterion(10, "construction replay", [&](Outcome& o) {
    std::vector<std::size_t> sizes;
    for (const auto& stage : construction_replay()) {
      sizes.push_back(stage.candidate.simplices.size());
      if (!verify(stage.candidate, 2).certified()) o.fail(stage.label + " does not certify");
    }
    if (sizes != std::vector<std::size_t>{12, 11, 10}) o.fail("stage sizes differ");
    if (o.ok) o.detail << "12 -> 11 -> 10";
  });

  return failures == 0 ? 0 : 1;
}
