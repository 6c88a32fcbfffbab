#pragma once

#include <functional>
#include <vector>

#include "pathlat/bigint.hpp"
#include "pathlat/path.hpp"

namespace pathlat::oracle {

// Deliberately naive ground-truth reimplementations used by the tests. They
// share nothing with the fast modules beyond Path and leq: membership is
// checked by scanning all 2^n step patterns, covers come from the order
// relation instead of valley surgery, fillings are joins of covers, the
// Moebius function is computed by its defining recursion, and valley
// conditions are checked literally against enumerated multichains. Keep it
// that way: agreement with the fast modules is the whole point.

struct EnumFilter {
  enum class Kind { All, DyckPath, DyckPrefix, Filling, DegreeEquals };
  Kind kind = Kind::All;
  int degree = 0;  // only read for DegreeEquals

  static EnumFilter all() { return {}; }
  static EnumFilter dyck_path() { return {Kind::DyckPath, 0}; }
  static EnumFilter dyck_prefix() { return {Kind::DyckPrefix, 0}; }
  static EnumFilter filling() { return {Kind::Filling, 0}; }
  static EnumFilter degree_equals(int k) { return {Kind::DegreeEquals, k}; }

  bool matches(const Path& p) const;
};

// Visits every path of length n passing the filter, in lexicographic step
// order with d before u (so all-down first, all-up last). Throws
// LimitExceeded when n exceeds `limit`.
void for_each_path(int n, const EnumFilter& filter,
                   const std::function<void(const Path&)>& fn, int limit = 16);
std::vector<Path> enumerate_paths(int n, const EnumFilter& filter, int limit = 16);

// |[P, Q]| by scanning all paths of that length.
BigInt brute_interval_count(const Path& p, const Path& q, int limit = 20);

// f(P) by depth-first enumeration of all minimal-length chains with small
// intervals, with fillings computed as joins of order-theoretic covers.
BigInt brute_f(const Path& p, int limit = 10);

// V(a, s) by enumerating the multichains and checking the shared-valley
// condition literally at every level.
BigInt brute_v_count(const Path& a, const Path& s, int limit = 12);

// Every valley-respecting multichain counted by brute_v_count, listed
// explicitly (each chain runs a = sigma_0 <= ... <= sigma_h = s).
std::vector<std::vector<Path>> brute_v_chains(const Path& a, const Path& s, int limit = 10);

// k-th Moebius convolution power on [P, Q], with mu obtained from its
// defining recursion mu(x,x) = 1, mu(x,y) = -sum of mu(x,z) over x <= z < y.
BigInt brute_mobius_power(const Path& p, const Path& q, int k, int limit = 10);

// Length of the shortest chain with small intervals from P to the all-up
// path (breadth-first search over the small-step relation).
int brute_min_small_chain_length(const Path& p, int limit = 8);

}  // namespace pathlat::oracle
