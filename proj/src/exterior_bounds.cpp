#include "simplotope/exterior_bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifndef SIMPLOTOPE_DATA_DIR
#define SIMPLOTOPE_DATA_DIR "data"
#endif

namespace simplotope {

// ---------------------------------------------------------------------------
// Cube caps

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

CubeCaps CubeCaps::parse(const std::string& text, const std::string& origin) {
  CubeCaps caps;
  caps.origin_ = origin;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto where = origin + ":" + std::to_string(lineno);
    auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument(where + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.rfind("dim.", 0) != 0) throw std::invalid_argument(where + ": unknown key '" + key + "'");
    int dim = -1;
    try {
      std::size_t used = 0;
      dim = std::stoi(key.substr(4), &used);
      if (used != key.size() - 4) dim = -1;
    } catch (const std::exception&) {
      dim = -1;
    }
    if (dim < 0) throw std::invalid_argument(where + ": bad dimension in '" + key + "'");
    Int v;
    try {
      v = Int(value);
    } catch (const std::exception&) {
      throw std::invalid_argument(where + ": bad value '" + value + "'");
    }
    if (v < 1) throw std::invalid_argument(where + ": cap must be positive");
    caps.caps_[dim] = v;
  }
  return caps;
}

CubeCaps CubeCaps::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read cube caps from " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.string());
}

std::filesystem::path CubeCaps::default_path() { return std::filesystem::path(SIMPLOTOPE_DATA_DIR) / "cube_caps.conf"; }

std::optional<Int> CubeCaps::cap(int dimension) const {
  auto it = caps_.find(dimension);
  if (it == caps_.end()) return std::nullopt;
  return it->second;
}

const char* to_string(VProvenance p) {
  return p == VProvenance::brute_forced ? "brute-forced" : "configured-cube-cap";
}

const char* to_string(VPolicy p) { return p == VPolicy::published ? "published" : "brute"; }

VPolicy parse_v_policy(const std::string& text) {
  if (text == "published") return VPolicy::published;
  if (text == "brute") return VPolicy::brute;
  throw std::invalid_argument("unknown V policy '" + text + "' (expected published or brute)");
}

// ---------------------------------------------------------------------------
// Brute-force V

namespace {

constexpr int max_search_dimension = 16;

std::vector<std::vector<int>> reduced_vertices(const SimplotopeSpec& spec) {
  auto verts = all_vertices(spec);
  const VertexPoint& pivot = verts.front();
  std::vector<std::vector<int>> out;
  for (const auto& v : verts) out.push_back(v.reduced(spec, pivot));
  return out;
}

}  // namespace

Int v_max_exhaustive(const SimplotopeSpec& spec, VmaxStats* stats) {
  const int d = spec.dimension();
  if (d > max_search_dimension) throw std::invalid_argument("v_max_exhaustive: dimension too large");
  auto verts = reduced_vertices(spec);
  const int n = static_cast<int>(verts.size());
  const int m = d + 1;
  std::int64_t best = 0;
  std::uint64_t count = 0;
  std::vector<std::int64_t> buf(static_cast<std::size_t>(m) * m);
  for_each_combination(n, m, [&](std::span<const int> idx) {
    for (int r = 0; r < m; ++r) {
      buf[static_cast<std::size_t>(r) * m] = 1;
      for (int c = 0; c < d; ++c) buf[static_cast<std::size_t>(r) * m + c + 1] = verts[idx[r]][c];
    }
    std::int64_t v = det_small(buf, m);
    best = std::max(best, v < 0 ? -v : v);
    ++count;
  });
  if (stats) stats->subsets += count;
  return best;
}

namespace {

// Depth-first choice of d vertices besides the pinned origin, carrying an
// orthonormal basis of the chosen prefix. The product of residual norms is
// |det| up to rounding.
struct Search {
  int d;
  std::vector<std::vector<double>> vec;
  std::vector<std::vector<int>> ints;
  std::array<std::array<double, max_search_dimension>, max_search_dimension> basis{};
  std::array<int, max_search_dimension> chosen{};
  std::int64_t best = 0;
  VmaxStats stats;

  void run(int depth, int start, double volume) {
    ++stats.nodes;
    if (depth == d) {
      if (volume > static_cast<double>(best) - 0.5) {
        std::vector<std::int64_t> buf(static_cast<std::size_t>(d) * d);
        for (int r = 0; r < d; ++r)
          for (int c = 0; c < d; ++c) buf[static_cast<std::size_t>(r) * d + c] = ints[chosen[r]][c];
        std::int64_t v = det_small(buf, d);
        ++stats.subsets;
        best = std::max(best, v < 0 ? -v : v);
      }
      return;
    }
    const int n = static_cast<int>(vec.size());
    for (int i = start; i <= n - (d - depth); ++i) {
      auto& r = basis[depth];
      for (int c = 0; c < d; ++c) r[c] = vec[i][c];
      for (int k = 0; k < depth; ++k) {
        double dot = 0;
        for (int c = 0; c < d; ++c) dot += r[c] * basis[k][c];
        for (int c = 0; c < d; ++c) r[c] -= dot * basis[k][c];
      }
      double norm = 0;
      for (int c = 0; c < d; ++c) norm += r[c] * r[c];
      norm = std::sqrt(norm);
      // Residuals of independent integer vectors are at least 1 / (volume
      // of the prefix), far above this threshold at these dimensions.
      if (norm < 1e-6) continue;
      for (int c = 0; c < d; ++c) r[c] /= norm;
      chosen[depth] = i;
      run(depth + 1, i + 1, volume * norm);
    }
  }
};

}  // namespace

Int v_max_search(const SimplotopeSpec& spec, VmaxStats* stats) {
  const int d = spec.dimension();
  if (d > max_search_dimension) throw std::invalid_argument("v_max_search: dimension too large");
  Search s;
  s.d = d;
  auto verts = reduced_vertices(spec);
  for (std::size_t i = 1; i < verts.size(); ++i) {
    s.ints.push_back(verts[i]);
    s.vec.emplace_back(verts[i].begin(), verts[i].end());
  }
  s.run(0, 0, 1.0);
  if (stats) {
    stats->subsets += s.stats.subsets;
    stats->nodes += s.stats.nodes;
  }
  return s.best;
}

std::optional<VEntry> v_max(int s, int t, const CubeCaps& caps) {
  if (s < 0 || t < 0) throw std::invalid_argument("v_max: negative argument");
  if (s + 2 * t <= v_brute_dimension) {
    if (s + t == 0) return VEntry{1, VProvenance::brute_forced};  // a point
    return VEntry{v_max_search(SimplotopeSpec::segments_triangles(s, t)), VProvenance::brute_forced};
  }
  auto cap = caps.cap(s + 2 * t);
  if (!cap) return std::nullopt;
  return VEntry{*cap, VProvenance::configured_cube_cap};
}

VTable::VTable(CubeCaps caps, VPolicy policy) : caps_(std::move(caps)), policy_(policy) {}

bool VTable::uses_brute_force(int s, int t) const {
  if (policy_ == VPolicy::brute) return s + 2 * t <= v_brute_dimension;
  static const std::pair<int, int> listed[] = {{1, 1}, {0, 2}, {2, 1}, {1, 2}, {0, 3}};
  return std::find(std::begin(listed), std::end(listed), std::pair{s, t}) != std::end(listed);
}

std::optional<VEntry> VTable::lookup(int s, int t) const {
  if (s < 0 || t < 0) return VEntry{0, VProvenance::brute_forced};
  if (uses_brute_force(s, t)) {
    std::lock_guard lock(mutex_);
    auto it = brute_.find({s, t});
    if (it == brute_.end()) {
      Int v = s + t == 0 ? Int(1) : v_max_search(SimplotopeSpec::segments_triangles(s, t));
      it = brute_.emplace(std::pair{s, t}, v).first;
    }
    return VEntry{it->second, VProvenance::brute_forced};
  }
  auto cap = caps_.cap(s + 2 * t);
  if (!cap) return std::nullopt;
  return VEntry{*cap, VProvenance::configured_cube_cap};
}

Int VTable::value(int s, int t) const {
  auto e = lookup(s, t);
  if (!e) {
    throw std::out_of_range("no V(" + std::to_string(s) + "," + std::to_string(t) + "): dimension " +
                            std::to_string(s + 2 * t) + " has no configured cube cap");
  }
  return e->value;
}

std::string VTable::fingerprint() const {
  std::string f = std::string("policy=") + to_string(policy_) + ";caps=";
  for (const auto& [d, v] : caps_.entries()) f += std::to_string(d) + ":" + v.str() + ",";
  return f;
}

// ---------------------------------------------------------------------------
// F bounds

std::string FKey::to_string() const {
  std::ostringstream o;
  o << "F(" << s << "," << t << "," << c << "," << s_prime << "," << t_prime << "," << c_prime << ")";
  return o.str();
}

bool FBounds::zero_by_convention(const FKey& k) const {
  if (k.s < 0 || k.t < 0 || k.s_prime < 0 || k.t_prime < 0) return true;
  if (k.c < 1 || k.c_prime < 1) return true;
  if (k.s_prime + 2 * k.t_prime > k.s + 2 * k.t) return true;
  if (k.c % k.c_prime != 0) return true;
  return Int(k.c) > v_.value(k.s, k.t);
}

Int FBounds::comb_bound(const FKey& k) const {
  if (zero_by_convention(k)) return 0;
  const int s = k.s, t = k.t, sp = k.s_prime, tp = k.t_prime;
  if (sp == 0 && tp == 0) return s + 2 * t + 1;
  if (sp == 1 && tp == 0) return s + 3 * t;
  Int sum = 0;
  for (int q = 0; q <= std::min(s, sp); ++q) sum += binomial(s, q) * binomial(t - tp, sp - q) * power(2, sp - q);
  return binomial(t, tp) * sum;
}

Int FBounds::recurrence(const FKey& k, FStats* stats) {
  const int s = k.s, t = k.t, c = k.c, sp = k.s_prime, tp = k.t_prime, cp = k.c_prime;
  if (c % cp != 0) return 0;
  Int best = 0;
  for (int e = std::max(0, s - sp); e <= std::min(s + t - sp - tp, s); ++e) {
    const int s2 = sp - s + 2 * e;
    const int t2 = s + t - sp - tp - e;
    const int w_top = std::min(sp - s + e, tp);
    Int total = 0;
    for (int w = 0; w <= w_top; ++w)
      for (int kk = 1; kk <= cp; ++kk) {
        if (cp % kk != 0) continue;
        for (int j = 0; j <= tp; ++j)
          for (int i = w; i <= std::min(sp + tp - j, sp + w); ++i) {
            Int footprint = term({sp, tp, cp, i, j, kk}, stats);
            if (footprint == 0) continue;
            total += footprint * term({s2, t2, c / cp, sp - i + 2 * w, tp - j - w, cp / kk}, stats);
          }
      }
    best = std::max(best, total);
  }
  return best;
}

Int FBounds::term(const FKey& k, FStats* stats) {
  if (zero_by_convention(k)) return 0;
  if (k.s_prime == k.s && k.t_prime == k.t) return k.c == k.c_prime ? 1 : 0;
  if (k.s_prime == 0 && k.t_prime == 0) return k.c_prime == 1 ? 1 : 0;
  // The footprint/shadow sum undercounts edges once a triangle factor is
  // present (a triangle has three exterior edges, the sum allows two), so
  // edges keep the counting bound.
  if (k.s_prime == 1 && k.t_prime == 0 && k.t > 0) return comb_bound(k);
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(k);
    if (it != memo_.end()) {
      if (stats) ++stats->memo_hits;
      return it->second;
    }
  }
  if (stats) ++stats->memo_misses;
  Int v = std::min(comb_bound(k), recurrence(k, stats));
  std::unique_lock lock(mutex_);
  return memo_.emplace(k, v).first->second;
}

Int FBounds::f_recurrence(const FKey& k, FStats* stats) { return recurrence(k, stats); }

Int FBounds::f_bound(const FKey& k, FStats* stats) {
  if (zero_by_convention(k)) return 0;
  if (k.s_prime == k.s && k.t_prime == k.t) return k.c == k.c_prime ? 1 : 0;
  if (k.s_prime == 0 && k.t_prime == 0) return k.c_prime == 1 ? Int(k.s + 2 * k.t + 1) : Int(0);
  return term(k, stats);
}

std::size_t FBounds::memo_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

std::size_t FBounds::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return 0;
  std::string header;
  if (!std::getline(in, header) || header != "# " + v_.fingerprint()) return 0;
  std::map<FKey, Int> read;
  FKey k;
  std::string value;
  while (in >> k.s >> k.t >> k.c >> k.s_prime >> k.t_prime >> k.c_prime >> value) read.emplace(k, Int(value));
  std::unique_lock lock(mutex_);
  for (auto& [key, v] : read) memo_.emplace(key, std::move(v));
  return read.size();
}

void FBounds::save(const std::filesystem::path& file) const {
  auto tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write F memo to " + tmp.string());
    out << "# " << v_.fingerprint() << "\n";
    std::shared_lock lock(mutex_);
    for (const auto& [k, v] : memo_) {
      out << k.s << ' ' << k.t << ' ' << k.c << ' ' << k.s_prime << ' ' << k.t_prime << ' ' << k.c_prime << ' ' << v
          << '\n';
    }
  }
  std::filesystem::rename(tmp, file);
}

}  // namespace simplotope
