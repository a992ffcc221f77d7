// simplotope: bounds, verification and case-study reports.
//
// Exit codes: 0 success, 1 a check failed, 2 usage error.

#include "simplotope/face_count.hpp"
#include "simplotope/io.hpp"
#include "simplotope/standard.hpp"
#include "simplotope/tri_square.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>

using namespace simplotope;

namespace {

constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;

struct VOptions {
  std::string config;
  std::string policy = "published";

  void add(CLI::App* app) {
    app->add_option("--config", config, "cube cap file (default: bundled data/cube_caps.conf)");
    app->add_option("--v-policy", policy, "V(s,t) source: published (brute force on the five listed pairs) or brute")
        ->check(CLI::IsMember({"published", "brute"}));
  }

  VTable table() const {
    auto caps = CubeCaps::load(config.empty() ? CubeCaps::default_path() : std::filesystem::path(config));
    return VTable(std::move(caps), parse_v_policy(policy));
  }
};

std::string approx(const Rat& r) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(4) << r.convert_to<double>();
  return o.str();
}

int run_bounds(int max_s, int max_t, int dim_cap, const std::string& format, const VOptions& vo, int jobs,
               const std::string& memo_dir) {
  VTable v = vo.table();
  FBounds f(v);
  std::filesystem::path memo_file;
  if (!memo_dir.empty()) {
    std::filesystem::create_directories(memo_dir);
    memo_file = std::filesystem::path(memo_dir) / (std::string("f_memo_") + to_string(v.policy()) + ".txt");
    f.load(memo_file);
  }
  auto cells = bounds_table(max_s, max_t, dim_cap, f, jobs);
  if (!memo_file.empty()) f.save(memo_file);

  if (format == "json") {
    std::cout << bounds_to_json(cells, v).dump(2) << '\n';
  } else if (format == "csv") {
    write_bounds_csv(std::cout, cells);
  } else {
    std::cout << "V policy: " << to_string(v.policy()) << "\n";
    for (const auto& c : cells) {
      std::cout << "(" << c.s << "," << c.t << ")  ";
      if (c.computed) {
        std::cout << "bound " << c.lower_bound << "  LP " << to_string(c.lp_value) << " (~" << approx(c.lp_value)
                  << ")  V " << c.v_used << " [" << to_string(c.v_provenance) << "]\n";
      } else {
        std::cout << "skipped: " << c.skip_reason << "\n";
      }
    }
  }
  for (const auto& c : cells) {
    if (!c.computed) {
      std::cerr << "cell (" << c.s << "," << c.t << ") skipped: " << c.skip_reason << "\n";
      return exit_check_failed;
    }
  }
  return 0;
}

int run_verify(const std::string& input, const std::string& format, int jobs) {
  auto cand = read_triangulation(input);
  auto rep = verify(cand, jobs);
  if (format == "json") {
    std::cout << report_to_json(rep, cand).dump(2) << '\n';
  } else {
    std::cout << "simplotope Π(" << cand.spec.to_string() << "), " << cand.simplices.size() << " simplices\n";
    std::cout << "classes:";
    for (const auto& c : rep.classes) std::cout << ' ' << c;
    std::cout << "\ntotal class " << rep.total_class << ", polytope class " << rep.polytope_class << "\n";
    std::cout << "classes " << (rep.classes_ok ? "ok" : "FAIL") << ", interiors disjoint "
              << (rep.disjoint_ok ? "ok" : "FAIL") << ", face-to-face " << (rep.face_to_face_ok ? "ok" : "FAIL") << "\n";
    std::cout << "adjacent pairs: " << rep.adjacency.size() << "\n";
    for (const auto& d : rep.diagnostics) std::cout << "  " << d << "\n";
    std::cout << (rep.certified() ? "certified triangulation" : "NOT certified") << "\n";
  }
  return rep.certified() ? 0 : exit_check_failed;
}

int run_standard(const std::string& spec_text, const std::string& out) {
  auto spec = SimplotopeSpec::parse(spec_text);
  TriangulationCandidate cand{spec, standard_triangulation(spec)};
  Json meta;
  meta["construction"] = "standard";
  meta["size"] = standard_size(spec).str();
  auto doc = triangulation_to_json(cand, std::nullopt, meta);
  if (out.empty() || out == "-") {
    std::cout << doc.dump(2) << '\n';
  } else {
    write_triangulation(out, doc);
    std::cerr << "wrote " << cand.simplices.size() << " simplices to " << out << "\n";
  }
  return 0;
}

int run_vmax(const std::string& spec_text, int s, int t, bool exhaustive) {
  SimplotopeSpec spec = spec_text.empty() ? SimplotopeSpec::segments_triangles(s, t) : SimplotopeSpec::parse(spec_text);
  VmaxStats stats;
  Int v = exhaustive ? v_max_exhaustive(spec, &stats) : v_max_search(spec, &stats);
  std::cout << v << "\n";
  std::cerr << "Π(" << spec.to_string() << "): " << stats.subsets << " determinants";
  if (!exhaustive) std::cerr << ", " << stats.nodes << " search nodes";
  std::cerr << "\n";
  return 0;
}

int run_q(const QQuery& q, bool check) {
  Int value = q_count(q);
  std::cout << value << "\n";
  if (!check) return 0;
  Int gf = q_by_generating_function(q);
  std::cerr << "generating function: " << gf << "\n";
  bool ok = gf == value;
  if (q_enumeration_feasible(q.s, q.t)) {
    Int en = q_by_enumeration(q);
    std::cerr << "enumeration: " << en << "\n";
    ok = ok && en == value;
  } else {
    std::cerr << "enumeration: skipped (beyond the face-count guard)\n";
  }
  std::cerr << (ok ? "oracles agree" : "ORACLES DISAGREE") << "\n";
  return ok ? 0 : exit_check_failed;
}

int run_fbound(const FKey& k, const VOptions& vo) {
  VTable v = vo.table();
  FBounds f(v);
  std::cout << f.f_bound(k) << "\n";
  std::cerr << "comb bound " << f.comb_bound(k) << ", recurrence " << f.f_recurrence(k) << "\n";
  return 0;
}

int run_tri_square(const std::string& check, const VOptions& vo) {
  bool ok = true;
  auto line = [&](bool pass, const std::string& text) {
    std::cout << (pass ? "PASS " : "FAIL ") << text << "\n";
    ok = ok && pass;
  };
  const bool all = check == "all";

  if (all || check == "class2") {
    auto fat = enumerate_class2();
    std::string words;
    for (const auto& x : fat) words += " " + encode_simplex(x);
    line(fat.size() == 24, std::to_string(fat.size()) + " class-2 simplices:" + words);
  }
  if (all || check == "center") {
    bool good = true;
    for (const auto& x : enumerate_class2()) {
      auto c = center_in_facet(x);
      std::sort(c.begin(), c.end());
      good = good && c == std::vector<Rat>{0, Rat(1, 6), Rat(1, 6), Rat(1, 3), Rat(1, 3)};
    }
    line(good, "center coefficients {0, 1/6, 1/6, 1/3, 1/3} in every class-2 simplex");
  }
  if (all || check == "triangulation") {
    auto cand = minimal_triangulation_10();
    auto rep = verify(cand);
    std::string classes;
    for (std::size_t i = 0; i < cand.simplices.size(); ++i) {
      classes += " " + encode_simplex(cand.simplices[i]) + ":" + rep.classes[i].str();
    }
    line(rep.certified(), "ten-simplex triangulation certified, total class " + rep.total_class.str() + ";" + classes);
    std::string edges;
    for (auto [a, b] : rep.adjacency) edges += " " + encode_simplex(cand.simplices[a]) + "-" + encode_simplex(cand.simplices[b]);
    std::cout << "     adjacency (" << rep.adjacency.size() << "):" << edges << "\n";
  }
  if (all || check == "replay") {
    for (const auto& stage : construction_replay()) {
      auto rep = verify(stage.candidate);
      line(rep.certified(), stage.label + ": " + std::to_string(stage.words.size()) + " simplices certified");
    }
  }
  if (all || check == "argument") {
    VTable v = vo.table();
    FBounds f(v);
    auto arg = lower_bound_10_argument(f);
    for (const auto& i : arg.ingredients) line(i.ok, "(" + i.id + ") " + i.claim + ": " + i.detail);
    std::cout << "minimal cover of Π*_{2,1}: " << arg.bound << " simplices\n";
    ok = ok && arg.ok;
  }
  return ok ? 0 : exit_check_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lower bounds and triangulation checks for products of simplices"};
  app.require_subcommand(1);

  auto* bounds = app.add_subcommand("bounds", "LP lower bounds for Π*_{s,t}");
  int max_s = 0, max_t = 0, dim_cap = v_brute_dimension, jobs = 1;
  std::string format = "csv", memo_dir;
  VOptions bounds_v;
  bounds->add_option("--max-s", max_s, "largest segment count")->check(CLI::NonNegativeNumber);
  bounds->add_option("--max-t", max_t, "largest triangle count")->check(CLI::NonNegativeNumber);
  bounds->add_option("--dim-cap", dim_cap, "largest dimension s + 2t")->check(CLI::NonNegativeNumber);
  bounds->add_option("--format", format, "csv, json or text")->check(CLI::IsMember({"csv", "json", "text"}));
  bounds->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  bounds->add_option("--memo-dir", memo_dir, "directory for a persistent F memo");
  bounds_v.add(bounds);

  auto* verify_cmd = app.add_subcommand("verify", "certify a triangulation file");
  std::string input, verify_format = "text";
  int verify_jobs = 1;
  verify_cmd->add_option("--input", input, "triangulation JSON")->required();
  verify_cmd->add_option("--format", verify_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_option("--jobs", verify_jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* standard = app.add_subcommand("standard", "write the standard triangulation");
  std::string spec_text, out;
  standard->add_option("--spec", spec_text, "factor dimensions, e.g. 1,1,2")->required();
  standard->add_option("--out", out, "output file (default: standard output)");

  auto* vmax = app.add_subcommand("vmax", "largest class of a vertex simplex");
  std::string vmax_spec;
  int vs = -1, vt = -1;
  bool exhaustive = false;
  auto* vmax_spec_opt = vmax->add_option("--spec", vmax_spec, "factor dimensions");
  auto* vs_opt = vmax->add_option("--s", vs, "segments")->check(CLI::NonNegativeNumber);
  auto* vt_opt = vmax->add_option("--t", vt, "triangles")->check(CLI::NonNegativeNumber);
  vs_opt->excludes(vmax_spec_opt);
  vt_opt->excludes(vmax_spec_opt);
  vmax->add_flag("--exhaustive", exhaustive, "take every (d+1)-subset instead of the pruned search");

  auto* q = app.add_subcommand("q", "number of Π_{s',t'} faces of Π*_{s,t}");
  QQuery query;
  bool q_check = false;
  q->add_option("--s", query.s)->required();
  q->add_option("--t", query.t)->required();
  q->add_option("--sp", query.s_prime)->required();
  q->add_option("--tp", query.t_prime)->required();
  q->add_flag("--check", q_check, "cross-check against the generating function and face enumeration");

  auto* fbound = app.add_subcommand("fbound", "upper bound on F(s,t,c,s',t',c')");
  FKey key;
  VOptions fbound_v;
  fbound->add_option("--s", key.s)->required();
  fbound->add_option("--t", key.t)->required();
  fbound->add_option("--c", key.c)->required();
  fbound->add_option("--sp", key.s_prime)->required();
  fbound->add_option("--tp", key.t_prime)->required();
  fbound->add_option("--cp", key.c_prime)->required();
  fbound_v.add(fbound);

  auto* case_cmd = app.add_subcommand("case", "case studies");
  case_cmd->require_subcommand(1);
  auto* tri = case_cmd->add_subcommand("tri-square", "the triangle-cross-square Π*_{2,1}");
  std::string check = "all";
  VOptions tri_v;
  tri->add_option("--check", check, "all, class2, center, triangulation, replay or argument")
      ->check(CLI::IsMember({"all", "class2", "center", "triangulation", "replay", "argument"}));
  tri_v.add(tri);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_usage;
  }

  try {
    if (*bounds) return run_bounds(max_s, max_t, dim_cap, format, bounds_v, jobs, memo_dir);
    if (*verify_cmd) return run_verify(input, verify_format, verify_jobs);
    if (*standard) return run_standard(spec_text, out);
    if (*vmax) {
      if (vmax_spec.empty() && (vs < 0 || vt < 0)) {
        std::cerr << "vmax: give --spec or both --s and --t\n";
        return exit_usage;
      }
      return run_vmax(vmax_spec, vs, vt, exhaustive);
    }
    if (*q) return run_q(query, q_check);
    if (*fbound) return run_fbound(key, fbound_v);
    if (*tri) return run_tri_square(check, tri_v);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_check_failed;
  }
  return exit_usage;
}
