#include "pathlat/chains.hpp"

#include <map>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "pathlat/counting.hpp"
#include "pathlat/filling.hpp"

namespace pathlat {

namespace {

struct PathPair {
  Path a, b;
  bool operator==(const PathPair&) const = default;
};

struct PathPairHash {
  std::size_t operator()(const PathPair& k) const {
    const std::size_t h = k.a.hash();
    return h ^ (k.b.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};

// Memo tables are confined to the evaluating thread: lock-free, and safe to
// share across the many evaluations a sweep performs.
struct Caches {
  std::unordered_map<PathPair, BigInt, PathPairHash> v;
  std::unordered_map<Path, BigInt, PathHash> to_top;      // count_to_top by path
  std::unordered_map<Path, BigInt, PathHash> to_pyramid;  // count_to_pyramid by Dyck path
  std::unordered_map<Path, BigInt, PathHash> f_rec;
  std::unordered_map<Path, BigInt, PathHash> f_prime;     // keyed by the prime's interior
  std::unordered_map<Path, BigInt, PathHash> f_du;        // keyed by P in f(duP)
};

Caches& caches() {
  thread_local Caches c;
  return c;
}

const BigInt& memo_to_top(const Path& p) {
  auto& m = caches().to_top;
  auto it = m.find(p);
  if (it == m.end()) it = m.emplace(p, count_to_top(p)).first;
  return it->second;
}

const BigInt& memo_to_pyramid(const Path& p) {
  auto& m = caches().to_pyramid;
  auto it = m.find(p);
  if (it == m.end()) it = m.emplace(p, count_to_pyramid(p)).first;
  return it->second;
}

// Points where the path returns to height zero (1-based).
std::vector<int> return_points(const Path& p) {
  std::vector<int> pts;
  int h = 0;
  for (int i = 0; i < p.size(); ++i) {
    h += p.step(i) == Step::Up ? 1 : -1;
    if (h == 0) pts.push_back(i + 1);
  }
  return pts;
}

void trace_push(FTrace* trace, const char* rule, std::string detail) {
  if (trace) trace->push_back({rule, std::move(detail)});
}

}  // namespace

bool is_product_of_pyramids(const Path& a) {
  if (!classify(a).dyck_path) return false;
  const PathStats st = path_stats(a);
  return st.valleys.empty() || *st.hv == 0;
}

BigInt v_count(const Path& a, const Path& s, std::size_t cap) {
  if (a.size() != s.size()) throw DomainError("v_count: paths must have equal length");
  if (!classify(a).dyck_path || !classify(s).dyck_path)
    throw DomainError("v_count: both arguments must be Dyck paths");
  if (!leq(a, s)) return 0;
  if (a == s) return 1;  // only the constant multichain qualifies
  auto& memo = caches().v;
  const PathPair key{a, s};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  BigInt result = 0;
  if (return_points(a) == return_points(s)) {
    // Aligned prime factors multiply independently; a single prime pair
    // u x d <= u y d unwinds one level: V(uxd, uyd) = sum of V(x, t) over
    // Dyck paths t <= y (only t >= x contributes).
    const auto pa = decompose(a, DecompositionKind::PrimeFactors).parts;
    const auto ps = decompose(s, DecompositionKind::PrimeFactors).parts;
    result = 1;
    for (std::size_t i = 0; i < pa.size() && result != 0; ++i) {
      const Path x = pa[i].subpath(1, pa[i].size() - 2);
      const Path y = ps[i].subpath(1, ps[i].size() - 2);
      BigInt factor = 0;
      if (leq(x, y))
        for (const Path& t : interval_elements(x, y, cap)) factor += v_count(x, t, cap);
      result *= factor;
    }
  }
  memo.emplace(key, result);
  return result;
}

namespace {

// Filtered valley-set equality: both paths must have identical valleys at
// every height <= max_height.
bool same_valleys_upto(const std::vector<PointStat>& a, const std::vector<PointStat>& b,
                       int max_height) {
  auto keep = [max_height](const PointStat& v) { return v.height <= max_height; };
  std::size_t i = 0, j = 0;
  while (true) {
    while (i < a.size() && !keep(a[i])) ++i;
    while (j < b.size() && !keep(b[j])) ++j;
    if (i == a.size() || j == b.size()) return i == a.size() && j == b.size();
    if (!(a[i] == b[j])) return false;
    ++i, ++j;
  }
}

bool has_valley(const std::vector<PointStat>& vs, const PointStat& v) {
  for (const PointStat& x : vs)
    if (x == v) return true;
  return false;
}

}  // namespace

VBijection v_bijection_forward(const std::vector<Path>& chain, const Path& s) {
  if (chain.empty()) throw DomainError("v_bijection_forward: empty chain");
  const Path& a = chain.front();
  const int n = a.size();
  for (const Path& c : chain)
    if (c.size() != n || !classify(c).dyck_path)
      throw DomainError("v_bijection_forward: chain must consist of equal-length Dyck paths");
  if (s.size() != n || !classify(s).dyck_path)
    throw DomainError("v_bijection_forward: s must be a Dyck path of the chain's length");

  const PathStats sta = path_stats(a);
  const int h = sta.hv.value_or(0);
  if (static_cast<int>(chain.size()) != h + 1)
    throw DomainError("v_bijection_forward: chain length must be hv(a) + 1");

  std::vector<std::vector<PointStat>> vsets(static_cast<std::size_t>(h) + 2);
  for (int i = 0; i <= h; ++i) vsets[static_cast<std::size_t>(i)] = path_stats(chain[static_cast<std::size_t>(i)]).valleys;
  vsets[static_cast<std::size_t>(h) + 1] = path_stats(s).valleys;

  for (int j = 1; j <= h; ++j) {
    if (!leq(chain[static_cast<std::size_t>(j) - 1], chain[static_cast<std::size_t>(j)]))
      throw DomainError("v_bijection_forward: not a multichain");
    if (!same_valleys_upto(vsets[static_cast<std::size_t>(j) - 1], vsets[static_cast<std::size_t>(j)], h - j))
      throw DomainError("v_bijection_forward: valley condition violated at level " +
                        std::to_string(j));
  }
  if (!leq(chain.back(), s))
    throw DomainError("v_bijection_forward: chain must end below s");

  // tau_i: turn the valleys of sigma_i at each height j <= h - i that the
  // chain has already abandoned, i.e. that are not valleys of sigma_{h+1-j}
  // (with sigma_{h+1} = s).
  std::vector<Path> tau(static_cast<std::size_t>(h) + 2);
  for (int i = 0; i <= h + 1; ++i) {
    const Path& sigma = i <= h ? chain[static_cast<std::size_t>(i)] : s;
    std::vector<int> turns;
    for (const PointStat& v : vsets[static_cast<std::size_t>(i)])
      if (v.height <= h - i && !has_valley(vsets[static_cast<std::size_t>(h + 1 - v.height)], v))
        turns.push_back(v.point);
    tau[static_cast<std::size_t>(i)] = with_valleys_turned(sigma, turns);
  }

  VBijection out;
  out.w = tau.front();
  const int k = path_stats(out.w).hv.value_or(0);
  // The first h + 1 - k entries coincide with w; the true chain is the rest.
  if (tau[static_cast<std::size_t>(h + 1 - k)] != out.w)
    throw std::logic_error("v_bijection_forward: construction invariant failed");
  out.chain.assign(tau.begin() + (h + 1 - k), tau.end());
  return out;
}

// ---------------------------------------------------------------------------
// f evaluators

namespace {

BigInt f_recursive(const Path& p, std::size_t cap) {
  const PathStats st = path_stats(p);
  if (st.valleys.empty()) return 1;  // all-up path (or empty)
  auto& memo = caches().f_rec;
  if (auto it = memo.find(p); it != memo.end()) return it->second;
  // Minimal chains factor through any element between the low fill and the
  // full filling; summing f over that interval drops the degree by one.
  BigInt total = 0;
  for (const Path& q : interval_elements(low_fill(p), filling(p), cap))
    total += f_recursive(q, cap);
  memo.emplace(p, total);
  return total;
}

BigInt closed_dyck(const Path& a, FTrace* trace, std::size_t cap);
BigInt closed_du_prefix(const std::vector<Path>& parts, FTrace* trace, std::size_t cap);

// f(u b d) for a prime with interior b: weight every Dyck path s >= b that
// keeps b's returns by its multichain count, then count the s-to-pyramid
// interval. Only same-return s contribute, so the sum runs over [b, pyramid].
BigInt closed_prime(const Path& b, FTrace* trace, std::size_t cap) {
  auto& memo = caches().f_prime;
  if (auto it = memo.find(b); it != memo.end()) return it->second;
  trace_push(trace, "prime-sum",
             "f(u" + render_path(b) + "d) = sum of V * pyramid-interval counts");
  BigInt total = 0;
  for (const Path& s : interval_elements(b, pyramid(b.size() / 2), cap)) {
    const BigInt v = v_count(b, s, cap);
    if (v != 0) total += v * memo_to_pyramid(s);
  }
  memo.emplace(b, total);
  return total;
}

BigInt closed_dyck(const Path& a, FTrace* trace, std::size_t cap) {
  if (a.empty()) return 1;
  const auto primes = decompose(a, DecompositionKind::PrimeFactors).parts;
  if (primes.size() > 1)
    trace_push(trace, "dyck-product",
               "f multiplies over " + std::to_string(primes.size()) + " prime factors");
  BigInt r = 1;
  for (const Path& prime : primes)
    r *= closed_prime(prime.subpath(1, prime.size() - 2), trace, cap);
  return r;
}

// f(d u (b_0 u b_1 ... u b_k)) where the b_i are the Dyck blocks of the
// prefix following the initial du. Every block independently relaxes to a
// same-return Dyck path s_i weighted by V(b_i, s_i); the tail is then capped
// by a telescoping family of Dyck prefixes V_k, ..., V_1 with
// V_i >= u s_i V_{i+1}, and each completed head s_0 V_1 contributes its
// count of paths to the all-up top.
BigInt closed_du_prefix(const std::vector<Path>& parts, FTrace* trace, std::size_t cap) {
  Path assembled;  // b_0 u b_1 ... u b_k, the memo key
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) assembled = assembled + Path::all_up(1);
    assembled = assembled + parts[i];
  }
  auto& memo = caches().f_du;
  if (auto it = memo.find(assembled); it != memo.end()) return it->second;
  trace_push(trace, "du-prefix",
             "f(du" + render_path(assembled) + ") via weighted tail coverings, " +
                 std::to_string(parts.size()) + " blocks");

  const int k = static_cast<int>(parts.size()) - 1;
  // Per-block candidates: (s, V(b_i, s)) for s in [b_i, pyramid], V nonzero.
  std::vector<std::vector<std::pair<Path, BigInt>>> cand(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const Path& s : interval_elements(parts[i], pyramid(parts[i].size() / 2), cap)) {
      BigInt v = v_count(parts[i], s, cap);
      if (v != 0) cand[i].emplace_back(s, std::move(v));
    }
  }

  // Tail sweep: weights[V_i] accumulates the products of the V factors of
  // blocks i..k over all choices leading to that cap path.
  std::map<Path, BigInt, PathLexLess> weights;
  weights.emplace(Path(), 1);
  for (int i = k; i >= 1; --i) {
    std::map<Path, BigInt, PathLexLess> next;
    for (const auto& [s, v] : cand[static_cast<std::size_t>(i)])
      for (const auto& [tail, weight] : weights) {
        const Path base = Path::all_up(1) + s + tail;
        for (const Path& vi : interval_elements(base, Path::all_up(base.size()), cap))
          next[vi] += v * weight;
      }
    weights = std::move(next);
  }

  BigInt total = 0;
  for (const auto& [s0, v0] : cand[0])
    for (const auto& [v1, weight] : weights)
      total += v0 * weight * memo_to_top(s0 + v1);
  memo.emplace(assembled, total);
  return total;
}

// f(d P2) for a Dyck prefix P2, reduced purely through its block structure
// (never through another minimum split, which could recurse forever when the
// caller's left factor was a lone downstep).
BigInt closed_d_prefix(const Path& p2, FTrace* trace, std::size_t cap) {
  if (p2.empty()) return 1;  // f(d) = 1
  auto parts = decompose(p2, DecompositionKind::PrefixForm).parts;
  if (!parts[0].empty()) {
    // P2 returns to zero, so the leading d is immaterial: f(dP2) = f(P2),
    // and P2 itself splits as the Dyck path a_0 times the lifted remainder.
    trace_push(trace, "drop-d", "f(d" + render_path(p2) + ") = f(" + render_path(p2) + ")");
    const BigInt head = closed_dyck(parts[0], trace, cap);
    if (parts.size() == 1) return head;
    return head * closed_du_prefix({parts.begin() + 1, parts.end()}, trace, cap);
  }
  if (parts.size() == 1) return 1;  // unreachable: p2 nonempty with a_0 empty has k >= 1
  return closed_du_prefix({parts.begin() + 1, parts.end()}, trace, cap);
}

BigInt closed_f(const Path& p, FTrace* trace, std::size_t cap) {
  // Leading upsteps never matter.
  int lead = 0;
  while (lead < p.size() && p.step(lead) == Step::Up) ++lead;
  if (lead == p.size()) return 1;
  Path rest = p.subpath(lead, p.size() - lead);
  if (lead > 0)
    trace_push(trace, "strip-up",
               "f(" + render_path(p) + ") = f(" + render_path(rest) + ")");
  // rest starts with a downstep; cut at the leftmost minimum.
  const auto split = decompose(rest, DecompositionKind::MinSplit).parts;
  const Path& left = split[0];
  const Path& right = split[1];
  const BigInt right_value = closed_d_prefix(right, trace, cap);  // f(d right)
  if (left.size() == 1) return right_value;  // rest == d right already
  trace_push(trace, "suffix-prefix",
             "f splits at the leftmost minimum: " + render_path(left) + " | " +
                 render_path(right));
  // The left factor ends strictly at its only minimum, so no further split
  // or block form applies; the memoized recursion finishes it.
  trace_push(trace, "suffix-recursion",
             "Dyck-suffix factor " + render_path(left) + " via the basic recursion");
  return f_recursive(left, cap) * right_value;
}

}  // namespace

BigInt f_eval(const Path& p, FMethod method, FTrace* trace, std::size_t cap) {
  switch (method) {
    case FMethod::Recursive: return f_recursive(p, cap);
    case FMethod::Closed:
    case FMethod::Auto: return closed_f(p, trace, cap);
  }
  throw DomainError("f_eval: unknown method");
}

BigInt count_small_multichains(const Path& p, const Path& q, int k, std::size_t cap) {
  if (k < 0) throw DomainError("count_small_multichains: negative length");
  if (!leq(p, q)) throw DomainError("count_small_multichains: needs p <= q");
  const std::vector<Path> elems = interval_elements(p, q, cap);
  const std::size_t n = elems.size();
  std::vector<Path> fills(n);
  for (std::size_t i = 0; i < n; ++i) fills[i] = filling(elems[i]);
  std::size_t ip = n, iq = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (elems[i] == p) ip = i;
    if (elems[i] == q) iq = i;
  }
  std::vector<BigInt> g(n, 0);
  g[ip] = 1;
  for (int t = 0; t < k; ++t) {
    std::vector<BigInt> next(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      if (g[x] == 0) continue;
      for (std::size_t y = 0; y < n; ++y)
        if (leq(elems[x], elems[y]) && leq(elems[y], fills[x])) next[y] += g[x];
    }
    g = std::move(next);
  }
  return g[iq];
}

BigInt mobius(const Path& p, const Path& q) {
  if (!leq(p, q)) throw DomainError("mobius: needs p <= q");
  if (!leq(q, filling(p))) return 0;
  return chain_dist(p, q) % 2 == 0 ? 1 : -1;
}

namespace {

BigInt incidence_power(const Path& p, const Path& q, int k, bool use_mobius,
                       std::size_t cap) {
  if (k < 0) throw DomainError("incidence power: negative exponent");
  if (!leq(p, q)) throw DomainError("incidence power: needs p <= q");
  const std::vector<Path> elems = interval_elements(p, q, cap);
  const std::size_t n = elems.size();
  std::size_t ip = n, iq = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (elems[i] == p) ip = i;
    if (elems[i] == q) iq = i;
  }
  // Entries of mu and zeta fit in a signed byte; the growth lives in the
  // accumulating vector.
  std::vector<std::vector<signed char>> m(n, std::vector<signed char>(n, 0));
  for (std::size_t x = 0; x < n; ++x) {
    const Path fx = use_mobius ? filling(elems[x]) : Path();
    for (std::size_t y = 0; y < n; ++y) {
      if (!leq(elems[x], elems[y])) continue;
      if (!use_mobius)
        m[x][y] = 1;
      else if (leq(elems[y], fx))
        m[x][y] = chain_dist(elems[x], elems[y]) % 2 == 0 ? 1 : -1;
    }
  }
  std::vector<BigInt> v(n, 0);
  v[ip] = 1;
  for (int t = 0; t < k; ++t) {
    std::vector<BigInt> next(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      if (v[x] == 0) continue;
      for (std::size_t y = 0; y < n; ++y)
        if (m[x][y] != 0) next[y] += m[x][y] > 0 ? v[x] : -v[x];
    }
    v = std::move(next);
  }
  return v[iq];
}

}  // namespace

BigInt mobius_power(const Path& p, const Path& q, int k, std::size_t cap) {
  return incidence_power(p, q, k, true, cap);
}

BigInt zeta_power(const Path& p, const Path& q, int k, std::size_t cap) {
  return incidence_power(p, q, k, false, cap);
}

bool zeta_corollary_check(const Path& a, int k, ZetaVariant variant) {
  if (!is_product_of_pyramids(a))
    throw DomainError("zeta_corollary_check: a must be a product of pyramids");
  if (variant == ZetaVariant::Pyramid) {
    if (k < 0) throw DomainError("zeta_corollary_check: needs k >= 0");
    const Path path = Path::all_up(k) + a + Path::all_down(k);
    return f_eval(path, FMethod::Closed) == zeta_power(a, pyramid(a.size() / 2), k + 1);
  }
  if (k < 1) throw DomainError("zeta_corollary_check: top variant needs k >= 1");
  const Path path = Path::all_down(1) + Path::all_up(k) + a;
  return f_eval(path, FMethod::Closed) == zeta_power(a, Path::all_up(a.size()), k + 1);
}

}  // namespace pathlat
