// Q(s, t, s', t'): the number of Π_{s',t'} faces of Π*_{s,t}.

#pragma once

#include "simplotope/exact.hpp"

#include <cstdint>
#include <map>
#include <utility>

namespace simplotope {

struct QQuery {
  int s = 0, t = 0, s_prime = 0, t_prime = 0;
};

/// Closed form; 0 outside the valid range.
Int q_count(const QQuery& q);

/// Coefficient of x^{s'} y^{t'} in (x + 2)^s (y + 3x + 3)^t.
Int q_by_generating_function(const QQuery& q);

/// Faces of Π*_{s,t} enumerated by zero set: each segment factor has 3
/// zero patterns and each triangle factor 7, so the guard is on
/// 3^s 7^t rather than on the dimension.
constexpr std::uint64_t q_enumeration_limit = 20'000'000;
bool q_enumeration_feasible(int s, int t);

/// Throws std::invalid_argument beyond q_enumeration_limit faces.
Int q_by_enumeration(const QQuery& q);

/// Every (s', t') count of Π*_{s,t} from one enumeration pass.
std::map<std::pair<int, int>, Int> face_histogram(int s, int t);

}  // namespace simplotope
