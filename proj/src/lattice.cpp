#include "pathlat/lattice.hpp"

#include <algorithm>
#include <utility>

namespace pathlat {

bool leq(const Path& p, const Path& q) {
  if (p.size() != q.size()) throw DomainError("leq: paths must have equal length");
  int hp = 0, hq = 0;
  for (int i = 0; i < p.size(); ++i) {
    hp += p.step(i) == Step::Up ? 1 : -1;
    hq += q.step(i) == Step::Up ? 1 : -1;
    if (hp > hq) return false;
  }
  return true;
}

namespace {

template <typename Pick>
Path pointwise(const Path& p, const Path& q, Pick pick) {
  if (p.size() != q.size()) throw DomainError("join/meet: paths must have equal length");
  std::vector<int> h(static_cast<std::size_t>(p.size()));
  int hp = 0, hq = 0;
  for (int i = 0; i < p.size(); ++i) {
    hp += p.step(i) == Step::Up ? 1 : -1;
    hq += q.step(i) == Step::Up ? 1 : -1;
    h[static_cast<std::size_t>(i)] = pick(hp, hq);
  }
  return Path::from_heights(h);
}

}  // namespace

Path join(const Path& p, const Path& q) {
  return pointwise(p, q, [](int a, int b) { return std::max(a, b); });
}

Path meet(const Path& p, const Path& q) {
  return pointwise(p, q, [](int a, int b) { return std::min(a, b); });
}

std::vector<Path> covers(const Path& p) {
  std::vector<Path> out;
  for (const PointStat& v : path_stats(p).valleys) {
    const int pt[1] = {v.point};
    out.push_back(with_valleys_turned(p, pt));
  }
  return out;
}

long long chain_dist(const Path& p, const Path& q) {
  if (!leq(p, q)) throw DomainError("chain_dist: needs p <= q");
  long long gap = 0;
  int hp = 0, hq = 0;
  for (int i = 0; i < p.size(); ++i) {
    hp += p.step(i) == Step::Up ? 1 : -1;
    hq += q.step(i) == Step::Up ? 1 : -1;
    gap += hq - hp;
  }
  return gap / 2;
}

long long rank(const Path& p) {
  long long r = 0;
  const int n = p.size();
  for (int i = 0; i < n; ++i)
    if (p.step(i) == Step::Up) r += n - i;  // n - (i+1) + 1 with 1-based i
  return r;
}

Path dual(const Path& p) {
  std::vector<Step> steps(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i)
    steps[static_cast<std::size_t>(i)] = flipped(p.step(i));
  return Path::from_steps(steps);
}

Interval::Interval(Path lo_, Path hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (!leq(lo, hi)) throw DomainError("Interval: needs lo <= hi");
}

std::vector<Path> interval_elements(const Interval& iv, std::size_t cap) {
  const int n = iv.lo.size();
  const auto hlo = iv.lo.heights();
  const auto hhi = iv.hi.heights();
  std::vector<Path> out;
  std::vector<int> h(static_cast<std::size_t>(n) + 1, 0);
  // Depth-first over positions, lower branch first: emits height profiles in
  // lexicographic order, and every partial profile extends to a full one, so
  // the walk never backtracks fruitlessly.
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      if (out.size() >= cap) throw CapExceeded("interval_elements: more than cap elements");
      out.push_back(Path::from_heights(std::span<const int>(h).subspan(1)));
      return;
    }
    for (int d : {-1, +1}) {
      const int nh = h[static_cast<std::size_t>(i)] + d;
      if (nh < hlo[static_cast<std::size_t>(i) + 1] || nh > hhi[static_cast<std::size_t>(i) + 1])
        continue;
      h[static_cast<std::size_t>(i) + 1] = nh;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<Path> interval_elements(const Path& lo, const Path& hi, std::size_t cap) {
  return interval_elements(Interval(lo, hi), cap);
}

}  // namespace pathlat
