#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pathlat/bigint.hpp"
#include "pathlat/lattice.hpp"
#include "pathlat/path.hpp"

namespace pathlat {

// A chain P = P_0 < P_1 < ... < P_k = all-up has small intervals when each
// P_i lies below the filling of P_{i-1}. f(P) counts such chains of the
// minimal possible length, which is degree(P).

enum class FMethod {
  Recursive,  // memoized recursion f(P) = sum of f(Q) over Q in [low_fill(P), filling(P)]
  Closed,     // factor at the leftmost minimum, then evaluate the prefix part
              // through valley-multichain weights and interval determinants
  Auto,       // currently the closed evaluator; both always agree
};

struct FTraceEvent {
  std::string rule;
  std::string detail;
};
using FTrace = std::vector<FTraceEvent>;

// f(P), the number of minimal chains with small intervals from P to the
// all-up path. `trace` (optional) records which reductions fired, in order;
// the closed evaluator reports when a pure Dyck-suffix factor forces it
// back onto the memoized recursion.
BigInt f_eval(const Path& p, FMethod method = FMethod::Auto, FTrace* trace = nullptr,
              std::size_t cap = limits::default_enum_cap);

// V(a, s) for equal-length Dyck paths: the number of multichains
// a = sigma_0 <= ... <= sigma_h = s, h the highest valley height of a, in
// which sigma_j and sigma_{j-1} share all valleys at heights up to h - j.
// Valley-free paths take h = 0, so then V(a, s) = [a = s]. Nonzero only
// when a and s return to zero at the same positions. Throws DomainError
// unless both are Dyck paths of equal length.
BigInt v_count(const Path& a, const Path& s, std::size_t cap = limits::default_enum_cap);

struct VBijection {
  Path w;                   // lands in [a, star_fill(a)]
  std::vector<Path> chain;  // valley-respecting multichain from w up to s
};

// Forward direction of the chain bijection behind the valley-multichain
// recurrence: consumes a valid multichain a = sigma_0 <= ... <= sigma_h
// (h = highest valley height of a, valley condition as in v_count) together
// with a Dyck path s >= sigma_h, and produces w in [a, star_fill(a)] plus a
// multichain of the same kind from w ending at s. Throws DomainError when
// the input chain is malformed.
VBijection v_bijection_forward(const std::vector<Path>& chain, const Path& s);

// Multichains P = P_0 <= P_1 <= ... <= P_k = Q where every P_i lies below
// the filling of P_{i-1}. Requires P <= Q.
BigInt count_small_multichains(const Path& p, const Path& q, int k,
                               std::size_t cap = limits::default_enum_cap);

// Moebius function of the lattice: for P <= Q it is (-1)^{chain_dist(P,Q)}
// when Q <= filling(P) and zero otherwise. Throws DomainError when P > Q.
BigInt mobius(const Path& p, const Path& q);

// k-th convolution powers of the Moebius and zeta functions on [P, Q],
// evaluated through the incidence matrix over interval_elements(P, Q).
// k = 0 is the identity element (delta). zeta_power(P, Q, k) counts the
// multichains P <= R_1 <= ... <= R_{k-1} <= Q.
BigInt mobius_power(const Path& p, const Path& q, int k,
                    std::size_t cap = limits::default_enum_cap);
BigInt zeta_power(const Path& p, const Path& q, int k,
                  std::size_t cap = limits::default_enum_cap);

// True iff a is a Dyck path whose valleys all sit at height zero, i.e. a
// concatenation of pyramids. These are exactly the paths whose f-values
// reduce to pure multichain counts.
bool is_product_of_pyramids(const Path& a);

enum class ZetaVariant { Pyramid, Top };

// For a product of pyramids a, checks the two zeta-power identities:
//   Pyramid: f(u^k a d^k) == zeta^{k+1}(a, pyramid),  k >= 0
//   Top:     f(d u^k a)   == zeta^{k+1}(a, all-up),   k >= 1
// Returns the comparison result; throws DomainError when a is not a product
// of pyramids or k is out of range.
bool zeta_corollary_check(const Path& a, int k, ZetaVariant variant);

}  // namespace pathlat
