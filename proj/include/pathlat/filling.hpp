#pragma once

#include <vector>

#include "pathlat/bigint.hpp"
#include "pathlat/path.hpp"

namespace pathlat {

// Turns every valley of P into a peak at once. Equals the join of all
// covers of P; fixes the all-up path and nothing else.
Path filling(const Path& p);

// Turns only the valleys at the lowest valley height.
Path low_fill(const Path& p);

// Turns every valley except the last one when P ends with a downstep
// (equals filling(p) when P ends with an upstep or has no valleys).
Path star_fill(const Path& p);

// Number of filling iterations needed to reach the all-up path. Computed by
// iterating and cross-checked against the closed form |P| - 1 - lv(P); a
// mismatch would be a bug, not bad input, and throws std::logic_error.
int degree(const Path& p);

// Recognizes images of the filling map: P is a filling iff P is not the
// single downstep, contains no dduu factor, does not start with duu and
// does not end with dd.
bool is_filling(const Path& p);

// Number of fillings among the 2^n paths of length n: the third-order
// recurrence a_0 = a_1 = 1, a_2 = 3, a_n = a_{n-1} + a_{n-2} + a_{n-3}.
BigInt count_fillings(int n);

// Number of length-n paths of degree k: binom(min(n, k), floor((k+2)/2))
// for 1 <= k <= 2n-1; degree 0 counts the all-up path alone. Throws
// DomainError for k outside [0, max(0, 2n-1)].
BigInt degree_count(int n, int k);

struct FillingReport {
  Path filling;
  Path low_fill;
  Path star_fill;
  int degree = 0;
  std::vector<Path> iterates;  // P = iterates[0], ..., iterates[degree] = all-up
};

FillingReport filling_report(const Path& p);

}  // namespace pathlat
