#include "pathlat/filling.hpp"

#include <stdexcept>
#include <string>

#include "pathlat/counting.hpp"

namespace pathlat {

namespace {

std::vector<int> valley_points(const PathStats& st, bool low_only) {
  std::vector<int> pts;
  for (const PointStat& v : st.valleys)
    if (!low_only || v.height == *st.lv) pts.push_back(v.point);
  return pts;
}

}  // namespace

Path filling(const Path& p) {
  const PathStats st = path_stats(p);
  return with_valleys_turned(p, valley_points(st, false));
}

Path low_fill(const Path& p) {
  const PathStats st = path_stats(p);
  if (st.valleys.empty()) return p;
  return with_valleys_turned(p, valley_points(st, true));
}

Path star_fill(const Path& p) {
  const PathStats st = path_stats(p);
  std::vector<int> pts = valley_points(st, false);
  // When p ends with a downstep the endpoint is its last valley; keep it.
  if (!p.empty() && p.step(p.size() - 1) == Step::Down) pts.pop_back();
  return with_valleys_turned(p, pts);
}

int degree(const Path& p) {
  const Path top = Path::all_up(p.size());
  int iterations = 0;
  Path cur = p;
  while (cur != top) {
    cur = filling(cur);
    ++iterations;
    if (iterations > 2 * p.size())
      throw std::logic_error("degree: filling iteration failed to terminate");
  }
  if (p != top) {
    const PathStats st = path_stats(p);
    const int expected = p.size() - 1 - *st.lv;
    if (iterations != expected)
      throw std::logic_error("degree: iteration count " + std::to_string(iterations) +
                             " disagrees with closed form " + std::to_string(expected));
  }
  return iterations;
}

bool is_filling(const Path& p) {
  const int n = p.size();
  if (n == 1 && p.step(0) == Step::Down) return false;
  if (n >= 2 && p.step(n - 2) == Step::Down && p.step(n - 1) == Step::Down) return false;
  if (n >= 3 && p.step(0) == Step::Down && p.step(1) == Step::Up && p.step(2) == Step::Up)
    return false;
  for (int i = 0; i + 3 < n; ++i)
    if (p.step(i) == Step::Down && p.step(i + 1) == Step::Down &&
        p.step(i + 2) == Step::Up && p.step(i + 3) == Step::Up)
      return false;
  return true;
}

BigInt count_fillings(int n) {
  if (n < 0) throw DomainError("count_fillings: negative length");
  // a_0 = a_1 = 1, a_2 = 3, then each term sums the previous three.
  BigInt a = 1, b = 1, c = 3;
  if (n == 0 || n == 1) return 1;
  if (n == 2) return 3;
  for (int i = 3; i <= n; ++i) {
    BigInt next = a + b + c;
    a = b;
    b = c;
    c = next;
  }
  return c;
}

BigInt degree_count(int n, int k) {
  if (n < 0) throw DomainError("degree_count: negative length");
  const int max_degree = n == 0 ? 0 : 2 * n - 1;
  if (k < 0 || k > max_degree) throw DomainError("degree_count: degree out of range");
  if (k == 0) return 1;  // the all-up path
  return binom(std::min(n, k), (k + 2) / 2);
}

FillingReport filling_report(const Path& p) {
  FillingReport rep;
  rep.filling = filling(p);
  rep.low_fill = low_fill(p);
  rep.star_fill = star_fill(p);
  const Path top = Path::all_up(p.size());
  rep.iterates.push_back(p);
  while (rep.iterates.back() != top) rep.iterates.push_back(filling(rep.iterates.back()));
  rep.degree = static_cast<int>(rep.iterates.size()) - 1;
  if (rep.degree != degree(p))
    throw std::logic_error("filling_report: degree mismatch");
  return rep;
}

}  // namespace pathlat
