#include "pathlat/counting.hpp"

#include <utility>
#include <vector>

#include "pathlat/lattice.hpp"

namespace pathlat {

BigInt binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is binom(n-k+i, i) after this step
  }
  return r;
}

BigInt same_endpoint_det(std::span<const int> lo, std::span<const int> hi) {
  if (lo.size() != hi.size())
    throw DomainError("same_endpoint_det: sequences must have equal length");
  const int m = static_cast<int>(lo.size());
  if (m == 0) return 1;
  std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(m),
                                     std::vector<BigInt>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          binom(hi[static_cast<std::size_t>(i)] - lo[static_cast<std::size_t>(j)] + 1,
                j - i + 1);
  // Bareiss fraction-free elimination; every division below is exact.
  int sign = 1;
  BigInt prev = 1;
  for (int k = 0; k + 1 < m; ++k) {
    if (a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
      int pivot = -1;
      for (int r = k + 1; r < m; ++r)
        if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return 0;
      std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(pivot)]);
      sign = -sign;
    }
    for (int i = k + 1; i < m; ++i)
      for (int j = k + 1; j < m; ++j) {
        auto& aij = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        aij = (aij * a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
               a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                   a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) /
              prev;
      }
    prev = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
  }
  return sign * a[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(m - 1)];
}

BigInt interval_count_same_end(const Path& p, const Path& q) {
  if (p.size() != q.size())
    throw DomainError("interval_count_same_end: paths must have equal length");
  if (p.downs() != q.downs())
    throw DomainError("interval_count_same_end: paths must share their endpoint");
  if (!leq(p, q)) throw DomainError("interval_count_same_end: needs p <= q");
  const int m = p.downs();
  const KSequence kp = to_kseq(p);
  const KSequence kq = to_kseq(q);
  return same_endpoint_det(std::span<const int>(kp.ks).first(static_cast<std::size_t>(m)),
                           std::span<const int>(kq.ks).first(static_cast<std::size_t>(m)));
}

namespace {

// Last `count` downsteps of p turned into upsteps.
Path raise_last_downs(const Path& p, int count) {
  std::vector<Step> s = p.steps();
  for (int i = p.size() - 1; i >= 0 && count > 0; --i)
    if (s[static_cast<std::size_t>(i)] == Step::Down) {
      s[static_cast<std::size_t>(i)] = Step::Up;
      --count;
    }
  return Path::from_steps(s);
}

// Last `count` upsteps of p turned into downsteps.
Path lower_last_ups(const Path& p, int count) {
  std::vector<Step> s = p.steps();
  for (int i = p.size() - 1; i >= 0 && count > 0; --i)
    if (s[static_cast<std::size_t>(i)] == Step::Up) {
      s[static_cast<std::size_t>(i)] = Step::Down;
      --count;
    }
  return Path::from_steps(s);
}

}  // namespace

BigInt interval_count(const Path& p, const Path& q, OnIncomparable mode) {
  if (p.size() != q.size())
    throw DomainError("interval_count: paths must have equal length");
  if (!leq(p, q)) {
    if (mode == OnIncomparable::Zero) return 0;
    throw DomainError("interval_count: endpoints are incomparable");
  }
  const int drop = p.downs() - q.downs();  // nonnegative once p <= q
  if (drop == 0) return interval_count_same_end(p, q);
  // Partition by final height: class i holds the members with q.downs() + i
  // downsteps, a same-endpoint interval between the trimmed bounds.
  BigInt total = 0;
  for (int i = 0; i <= drop; ++i) {
    const Path lo = raise_last_downs(p, drop - i);
    const Path hi = lower_last_ups(q, i);
    if (leq(lo, hi)) total += interval_count_same_end(lo, hi);
  }
  return total;
}

BigInt count_to_pyramid(const Path& a) {
  if (!classify(a).dyck_path)
    throw DomainError("count_to_pyramid: needs a Dyck path");
  return interval_count_same_end(a, pyramid(a.size() / 2));
}

BigInt count_to_top(const Path& p) {
  return interval_count(p, Path::all_up(p.size()));
}

}  // namespace pathlat
