#pragma once

#include <cstddef>
#include <vector>

#include "pathlat/path.hpp"

namespace pathlat {

namespace limits {
// Default bound on materialized interval enumerations.
inline constexpr std::size_t default_enum_cap = std::size_t{1} << 22;
}  // namespace limits

// P <= Q iff the height profile of P lies pointwise below Q's. Paths of
// equal length form a finite distributive lattice under this order.
// Throws DomainError on length mismatch.
bool leq(const Path& p, const Path& q);

Path join(const Path& p, const Path& q);  // pointwise max of heights
Path meet(const Path& p, const Path& q);  // pointwise min of heights

// All Q covering P, one per valley of P (turn that valley into a peak),
// listed by valley position.
std::vector<Path> covers(const Path& p);

// Common length of every maximal chain in [P, Q]: half the total gap
// between the height profiles. Requires P <= Q.
long long chain_dist(const Path& p, const Path& q);

// Rank in the graded lattice: sum of (n - i + 1) over the upstep positions
// i (1-based). Equals chain_dist from the all-down path; the all-up path
// has rank n(n+1)/2.
long long rank(const Path& p);

// Flip every step (u <-> d), negating the height profile. An involution
// that reverses the order, swaps join with meet, and turns each valley
// into a peak of the image at the same point.
Path dual(const Path& p);

// A checked closed interval [lo, hi].
struct Interval {
  Path lo, hi;
  Interval(Path lo_, Path hi_);  // throws DomainError unless lo <= hi
};

// Every R with lo <= R <= hi, in lexicographic order of height profiles
// (so lo comes first and hi last). Generated by a walk over positions with
// height bounds, so memory stays linear in the output. Throws CapExceeded
// if the interval holds more than cap elements.
std::vector<Path> interval_elements(const Interval& iv, std::size_t cap = limits::default_enum_cap);
std::vector<Path> interval_elements(const Path& lo, const Path& hi,
                                    std::size_t cap = limits::default_enum_cap);

}  // namespace pathlat
