// Upper bounds on F(s, t, c, s', t', c'), the largest number of exterior
// class-c' faces of signature (s', t') that a class-c simplex of Π*_{s,t}
// can have, and the maximum-class table V(s, t).

#pragma once

#include "simplotope/core.hpp"

#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>

namespace simplotope {

// ---------------------------------------------------------------------------
// V(s, t)

/// Largest 0/1 determinant by dimension, read from a key-value file:
///
///   # comment
///   dim.7 = 32
///
/// Keys other than dim.<n> are rejected.
class CubeCaps {
public:
  CubeCaps() = default;
  static CubeCaps parse(const std::string& text, const std::string& origin = "<string>");
  static CubeCaps load(const std::filesystem::path& path);
  /// data/cube_caps.conf from the source tree.
  static std::filesystem::path default_path();

  std::optional<Int> cap(int dimension) const;
  void set(int dimension, Int value) { caps_[dimension] = std::move(value); }
  const std::map<int, Int>& entries() const { return caps_; }
  std::string origin() const { return origin_; }

private:
  std::map<int, Int> caps_;
  std::string origin_;
};

enum class VProvenance { brute_forced, configured_cube_cap };
const char* to_string(VProvenance p);

struct VEntry {
  Int value;
  VProvenance provenance;
};

/// Which pairs take their V from the brute-force search.
///  published: the five pairs (1,1), (0,2), (2,1), (1,2), (0,3); every other
///             pair uses the cube cap of its dimension. This is the table
///             behind the published bounds.
///  brute:     every pair with s + 2t <= brute_dimension.
enum class VPolicy { published, brute };
const char* to_string(VPolicy p);
VPolicy parse_v_policy(const std::string& text);

struct VmaxStats {
  std::uint64_t subsets = 0;  // vertex subsets whose determinant was taken
  std::uint64_t nodes = 0;    // search nodes (pruned search only)
};

/// Maximum class over all (d+1)-subsets of the simplotope's vertices, each
/// subset's determinant taken exactly.
Int v_max_exhaustive(const SimplotopeSpec& spec, VmaxStats* stats = nullptr);

/// Same maximum with one vertex pinned (the product of simplices is
/// vertex-transitive) and linearly dependent prefixes pruned in floating
/// point; every candidate maximum is confirmed with an exact determinant.
Int v_max_search(const SimplotopeSpec& spec, VmaxStats* stats = nullptr);

/// Largest dimension for which v_max brute-forces.
constexpr int v_brute_dimension = 6;

/// Brute force for s + 2t <= v_brute_dimension, else the configured cap.
/// Returns nullopt when a cap is needed but not configured.
std::optional<VEntry> v_max(int s, int t, const CubeCaps& caps);

class VTable {
public:
  VTable(CubeCaps caps, VPolicy policy);

  /// 0 for negative arguments. Throws std::out_of_range when the pair
  /// needs a cube cap that is not configured.
  Int value(int s, int t) const;
  std::optional<VEntry> lookup(int s, int t) const;

  VPolicy policy() const { return policy_; }
  const CubeCaps& caps() const { return caps_; }
  bool uses_brute_force(int s, int t) const;
  /// Identifies the policy and caps, for memo files.
  std::string fingerprint() const;

private:
  CubeCaps caps_;
  VPolicy policy_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, int>, Int> brute_;
};

// ---------------------------------------------------------------------------
// F(s, t, c, s', t', c')

struct FKey {
  int s = 0, t = 0, c = 1, s_prime = 0, t_prime = 0, c_prime = 1;
  auto operator<=>(const FKey&) const = default;
  std::string to_string() const;
};

struct FStats {
  std::uint64_t memo_hits = 0;
  std::uint64_t memo_misses = 0;
};

class FBounds {
public:
  explicit FBounds(const VTable& v) : v_(v) {}
  FBounds(const FBounds&) = delete;
  FBounds& operator=(const FBounds&) = delete;

  const VTable& v_table() const { return v_; }

  /// Negative arguments, c < 1, c' < 1, s' + 2t' > s + 2t, c > V(s,t)
  /// or c' not dividing c.
  bool zero_by_convention(const FKey& k) const;

  /// Counting bound, achieved by corner simplices:
  ///   (s', t') = (0, 0): s + 2t + 1, the vertex count of a full simplex
  ///   (s', t') = (1, 0): s + 3t
  ///   otherwise C(t,t') sum_q C(s,q) C(t-t', s'-q) 2^{s'-q}
  Int comb_bound(const FKey& k) const;

  /// Maximum over e of the footprint/shadow sum. Inside the sum a vertex
  /// term F(.,.,.,0,0,1) counts 1 (the footprint of a vertex of σ).
  Int f_recurrence(const FKey& k, FStats* stats = nullptr);

  /// Zero conventions first, then 1 / 0 for (s', t') = (s, t), the vertex
  /// count for (0, 0), comb_bound alone for edges of products with a
  /// triangle factor, and min(comb_bound, f_recurrence) otherwise.
  /// Memoized.
  Int f_bound(const FKey& k, FStats* stats = nullptr);

  std::size_t memo_size() const;
  /// Memo persistence; the file records the V table's fingerprint and a
  /// mismatching file is ignored. load() returns the number of entries read.
  std::size_t load(const std::filesystem::path& file);
  void save(const std::filesystem::path& file) const;

private:
  Int term(const FKey& k, FStats* stats);
  Int recurrence(const FKey& k, FStats* stats);

  const VTable& v_;
  mutable std::shared_mutex mutex_;
  std::map<FKey, Int> memo_;
};

}  // namespace simplotope
