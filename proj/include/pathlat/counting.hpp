#pragma once

#include <span>

#include "pathlat/bigint.hpp"
#include "pathlat/path.hpp"

namespace pathlat {

// Binomial coefficient with the lattice-counting convention: zero whenever
// k < 0, n < 0 or k > n.
BigInt binom(long long n, long long k);

// Determinant of the binomial matrix attached to two k-sequence encodings,
// truncated to their first m entries (the final entry of each encoding is
// never consulted, so trailing maximal entries may be trimmed without
// changing the value). Entry (i, j), 1-based, is
//   binom(hi_i - lo_j + 1, j - i + 1).
// Evaluated exactly by fraction-free elimination.
BigInt same_endpoint_det(std::span<const int> lo, std::span<const int> hi);

// |[P, Q]| for endpoints with equally many downsteps, via the determinant
// above applied to their k-sequences. Requires |P| = |Q|, equal downstep
// counts and P <= Q.
BigInt interval_count_same_end(const Path& p, const Path& q);

enum class OnIncomparable { Throw, Zero };

// |[P, Q]| for arbitrary endpoints of equal length. Same-endpoint intervals
// go straight to the determinant; otherwise the interval is partitioned by
// final height and the per-endpoint counts are summed. Incomparable
// endpoints throw DomainError, or yield 0 under OnIncomparable::Zero.
BigInt interval_count(const Path& p, const Path& q,
                      OnIncomparable mode = OnIncomparable::Throw);

// |[a, pyramid]| for a Dyck path a: the number of Dyck paths of the same
// length weakly above a. Throws DomainError if a is not a Dyck path.
BigInt count_to_pyramid(const Path& a);

// |[P, all-up path]|: the number of paths of the same length weakly above P.
BigInt count_to_top(const Path& p);

}  // namespace pathlat
