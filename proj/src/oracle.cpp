#include "pathlat/oracle.hpp"

#include <cstdint>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pathlat/filling.hpp"
#include "pathlat/lattice.hpp"

namespace pathlat::oracle {

namespace {

// Step i (0-based) of an n-step path sits at bit (n-1-i), so counting masks
// upward walks the paths in lexicographic order with d before u.
inline bool mask_up(std::uint64_t m, int i, int n) { return (m >> (n - 1 - i)) & 1u; }

Path mask_to_path(std::uint64_t m, int n) {
  std::vector<Step> steps(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    steps[static_cast<std::size_t>(i)] = mask_up(m, i, n) ? Step::Up : Step::Down;
  return Path::from_steps(steps);
}

std::uint64_t path_to_mask(const Path& p) {
  std::uint64_t m = 0;
  for (int i = 0; i < p.size(); ++i)
    if (p.step(i) == Step::Up) m |= std::uint64_t{1} << (p.size() - 1 - i);
  return m;
}

bool mask_leq(std::uint64_t a, std::uint64_t b, int n) {
  int ha = 0, hb = 0;
  for (int i = 0; i < n; ++i) {
    ha += mask_up(a, i, n) ? 1 : -1;
    hb += mask_up(b, i, n) ? 1 : -1;
    if (ha > hb) return false;
  }
  return true;
}

// Half the total height gap; call only when mask_leq(a, b, n).
long long mask_gap(std::uint64_t a, std::uint64_t b, int n) {
  long long g = 0;
  int ha = 0, hb = 0;
  for (int i = 0; i < n; ++i) {
    ha += mask_up(a, i, n) ? 1 : -1;
    hb += mask_up(b, i, n) ? 1 : -1;
    g += hb - ha;
  }
  return g / 2;
}

void check_limit(int n, int limit, const char* who) {
  if (n > limit)
    throw LimitExceeded(std::string(who) + ": length " + std::to_string(n) +
                        " exceeds the configured limit " + std::to_string(limit));
  if (n > 62) throw LimitExceeded(std::string(who) + ": length exceeds mask width");
}

// Join of all covers of m, where a cover is anything exactly one rank above
// in the order. Scans every path of the same length; no valley reasoning.
std::uint64_t brute_fill(std::uint64_t m, int n) {
  thread_local std::unordered_map<std::uint64_t, std::uint64_t> cache;
  const std::uint64_t key = (static_cast<std::uint64_t>(n) << 56) | m;
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  std::vector<int> hmax(static_cast<std::size_t>(n) + 1, 0);
  {
    int h = 0;
    for (int i = 0; i < n; ++i) {
      h += mask_up(m, i, n) ? 1 : -1;
      hmax[static_cast<std::size_t>(i) + 1] = h;
    }
  }
  for (std::uint64_t q = 0; q < (std::uint64_t{1} << n); ++q) {
    if (q == m || !mask_leq(m, q, n) || mask_gap(m, q, n) != 1) continue;
    int h = 0;
    for (int i = 0; i < n; ++i) {
      h += mask_up(q, i, n) ? 1 : -1;
      if (h > hmax[static_cast<std::size_t>(i) + 1]) hmax[static_cast<std::size_t>(i) + 1] = h;
    }
  }
  std::uint64_t out = 0;
  for (int i = 0; i < n; ++i)
    if (hmax[static_cast<std::size_t>(i) + 1] > hmax[static_cast<std::size_t>(i)])
      out |= std::uint64_t{1} << (n - 1 - i);
  cache.emplace(key, out);
  return out;
}

int brute_degree(std::uint64_t m, int n) {
  const std::uint64_t top = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
  int d = 0;
  while (m != top) {
    m = brute_fill(m, n);
    ++d;
  }
  return d;
}

std::vector<std::pair<int, int>> mask_valleys(std::uint64_t m, int n) {
  std::vector<std::pair<int, int>> out;
  int h = 0;
  for (int i = 0; i < n; ++i) {
    const bool up = mask_up(m, i, n);
    h += up ? 1 : -1;
    const bool run_ends = i + 1 == n || mask_up(m, i + 1, n) != up;
    if (!up && run_ends) out.emplace_back(i + 1, h);
  }
  return out;
}

bool same_valleys_upto(const std::vector<std::pair<int, int>>& a,
                       const std::vector<std::pair<int, int>>& b, int max_height) {
  std::size_t i = 0, j = 0;
  while (true) {
    while (i < a.size() && a[i].second > max_height) ++i;
    while (j < b.size() && b[j].second > max_height) ++j;
    if (i == a.size() || j == b.size()) return i == a.size() && j == b.size();
    if (a[i] != b[j]) return false;
    ++i, ++j;
  }
}

}  // namespace

bool EnumFilter::matches(const Path& p) const {
  switch (kind) {
    case Kind::All: return true;
    case Kind::DyckPath: return p.min_height() >= 0 && p.final_height() == 0;
    case Kind::DyckPrefix: return p.min_height() >= 0;
    case Kind::Filling: return is_filling(p);
    case Kind::DegreeEquals: return pathlat::degree(p) == degree;
  }
  return false;
}

void for_each_path(int n, const EnumFilter& filter,
                   const std::function<void(const Path&)>& fn, int limit) {
  if (n < 0) throw DomainError("for_each_path: negative length");
  check_limit(n, limit, "for_each_path");
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    Path p = mask_to_path(m, n);
    if (filter.matches(p)) fn(p);
  }
}

std::vector<Path> enumerate_paths(int n, const EnumFilter& filter, int limit) {
  std::vector<Path> out;
  for_each_path(n, filter, [&out](const Path& p) { out.push_back(p); }, limit);
  return out;
}

BigInt brute_interval_count(const Path& p, const Path& q, int limit) {
  if (p.size() != q.size())
    throw DomainError("brute_interval_count: paths must have equal length");
  const int n = p.size();
  check_limit(n, limit, "brute_interval_count");
  const std::uint64_t pm = path_to_mask(p), qm = path_to_mask(q);
  BigInt count = 0;
  for (std::uint64_t r = 0; r < (std::uint64_t{1} << n); ++r)
    if (mask_leq(pm, r, n) && mask_leq(r, qm, n)) ++count;
  return count;
}

BigInt brute_f(const Path& p, int limit) {
  const int n = p.size();
  check_limit(n, limit, "brute_f");
  const std::uint64_t top = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
  // Chains of exact remaining length r; memo on (state, r).
  std::map<std::pair<std::uint64_t, int>, BigInt> memo;
  auto rec = [&](auto&& self, std::uint64_t m, int r) -> BigInt {
    if (r == 0) return m == top ? 1 : 0;
    const auto key = std::make_pair(m, r);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const std::uint64_t fill = brute_fill(m, n);
    BigInt total = 0;
    for (std::uint64_t q = 0; q < (std::uint64_t{1} << n); ++q)
      if (q != m && mask_leq(m, q, n) && mask_leq(q, fill, n))
        total += self(self, q, r - 1);
    memo.emplace(key, total);
    return total;
  };
  const std::uint64_t m = path_to_mask(p);
  return rec(rec, m, brute_degree(m, n));
}

namespace {

// Shared enumeration behind brute_v_count and brute_v_chains: walks every
// multichain a = s_0 <= ... <= s_h = s whose consecutive members share all
// valleys at heights up to h - level, checking the condition literally.
template <typename Visit>
void walk_v_chains(const Path& a, const Path& s, int limit, Visit&& visit) {
  if (a.size() != s.size()) throw DomainError("v chains: paths must have equal length");
  if (!classify(a).dyck_path || !classify(s).dyck_path)
    throw DomainError("v chains: both arguments must be Dyck paths");
  const int n = a.size();
  check_limit(n, limit, "v chains");
  const std::uint64_t am = path_to_mask(a), sm = path_to_mask(s);
  int h = 0;
  for (const auto& v : mask_valleys(am, n)) h = std::max(h, v.second);
  std::vector<std::uint64_t> chain{am};
  auto rec = [&](auto&& self, std::uint64_t prev, int level) -> void {
    if (level == h + 1) {
      visit(chain);
      return;
    }
    const auto pv = mask_valleys(prev, n);
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) {
      if (!mask_leq(prev, c, n) || !mask_leq(c, sm, n)) continue;
      if (level == h && c != sm) continue;  // the chain must end exactly at s
      if (!same_valleys_upto(pv, mask_valleys(c, n), h - level)) continue;
      chain.push_back(c);
      self(self, c, level + 1);
      chain.pop_back();
    }
  };
  if (h == 0) {
    if (am == sm) visit(chain);
    return;
  }
  if (mask_leq(am, sm, n)) rec(rec, am, 1);
}

}  // namespace

BigInt brute_v_count(const Path& a, const Path& s, int limit) {
  BigInt count = 0;
  walk_v_chains(a, s, limit, [&count](const std::vector<std::uint64_t>&) { ++count; });
  return count;
}

std::vector<std::vector<Path>> brute_v_chains(const Path& a, const Path& s, int limit) {
  std::vector<std::vector<Path>> out;
  const int n = a.size();
  walk_v_chains(a, s, limit, [&out, n](const std::vector<std::uint64_t>& chain) {
    std::vector<Path> paths;
    paths.reserve(chain.size());
    for (std::uint64_t m : chain) paths.push_back(mask_to_path(m, n));
    out.push_back(std::move(paths));
  });
  return out;
}

BigInt brute_mobius_power(const Path& p, const Path& q, int k, int limit) {
  if (p.size() != q.size())
    throw DomainError("brute_mobius_power: paths must have equal length");
  if (k < 0) throw DomainError("brute_mobius_power: negative exponent");
  const int n = p.size();
  check_limit(n, limit, "brute_mobius_power");
  const std::uint64_t pm = path_to_mask(p), qm = path_to_mask(q);
  if (!mask_leq(pm, qm, n)) throw DomainError("brute_mobius_power: needs p <= q");
  // Ascending masks are a linear extension of the order, so the defining
  // recursion can be filled in one pass.
  std::vector<std::uint64_t> elems;
  for (std::uint64_t r = 0; r < (std::uint64_t{1} << n); ++r)
    if (mask_leq(pm, r, n) && mask_leq(r, qm, n)) elems.push_back(r);
  const std::size_t sz = elems.size();
  std::vector<std::vector<bool>> le(sz, std::vector<bool>(sz, false));
  for (std::size_t x = 0; x < sz; ++x)
    for (std::size_t y = x; y < sz; ++y) le[x][y] = mask_leq(elems[x], elems[y], n);
  std::vector<std::vector<BigInt>> mu(sz, std::vector<BigInt>(sz, 0));
  for (std::size_t x = 0; x < sz; ++x) {
    mu[x][x] = 1;
    for (std::size_t y = x + 1; y < sz; ++y) {
      if (!le[x][y]) continue;
      BigInt acc = 0;
      for (std::size_t z = x; z < y; ++z)
        if (le[x][z] && le[z][y]) acc += mu[x][z];
      mu[x][y] = -acc;
    }
  }
  std::size_t ip = sz, iq = sz;
  for (std::size_t i = 0; i < sz; ++i) {
    if (elems[i] == pm) ip = i;
    if (elems[i] == qm) iq = i;
  }
  std::vector<BigInt> v(sz, 0);
  v[ip] = 1;
  for (int t = 0; t < k; ++t) {
    std::vector<BigInt> next(sz, 0);
    for (std::size_t x = 0; x < sz; ++x) {
      if (v[x] == 0) continue;
      for (std::size_t y = x; y < sz; ++y)
        if (mu[x][y] != 0) next[y] += v[x] * mu[x][y];
    }
    v = std::move(next);
  }
  return v[iq];
}

int brute_min_small_chain_length(const Path& p, int limit) {
  const int n = p.size();
  check_limit(n, limit, "brute_min_small_chain_length");
  const std::uint64_t top = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
  std::uint64_t start = path_to_mask(p);
  if (start == top) return 0;
  std::vector<std::uint64_t> frontier{start};
  std::vector<bool> seen(std::size_t{1} << n, false);
  seen[start] = true;
  for (int dist = 1;; ++dist) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t m : frontier) {
      const std::uint64_t fill = brute_fill(m, n);
      for (std::uint64_t q = 0; q < (std::uint64_t{1} << n); ++q) {
        if (q == m || seen[q] || !mask_leq(m, q, n) || !mask_leq(q, fill, n)) continue;
        if (q == top) return dist;
        seen[q] = true;
        next.push_back(q);
      }
    }
    if (next.empty())
      throw std::logic_error("brute_min_small_chain_length: top unreachable");
    frontier = std::move(next);
  }
}

}  // namespace pathlat::oracle
