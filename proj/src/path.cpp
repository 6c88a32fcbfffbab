#include "pathlat/path.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <limits>

namespace pathlat {

namespace {
// Plumbing guard so a literal like "u999999999999" fails cleanly instead of
// exhausting memory. Generous next to the sizes the algorithms can handle.
constexpr long long kMaxPathLength = 1 << 24;
}  // namespace

void Path::resize_zeroed(int n) {
  n_ = n;
  words_.assign((static_cast<std::size_t>(n) + 63) / 64, 0);
}

Path Path::from_steps(std::span<const Step> steps) {
  Path p;
  p.resize_zeroed(static_cast<int>(steps.size()));
  for (std::size_t i = 0; i < steps.size(); ++i)
    if (steps[i] == Step::Up) p.set_up(static_cast<int>(i));
  return p;
}

Path Path::all_up(int n) {
  Path p;
  p.resize_zeroed(n);
  for (int i = 0; i < n; ++i) p.set_up(i);
  return p;
}

Path Path::all_down(int n) {
  Path p;
  p.resize_zeroed(n);
  return p;
}

Path Path::from_heights(std::span<const int> heights) {
  Path p;
  p.resize_zeroed(static_cast<int>(heights.size()));
  int prev = 0;
  for (std::size_t i = 0; i < heights.size(); ++i) {
    const int d = heights[i] - prev;
    if (d != 1 && d != -1)
      throw DomainError("from_heights: consecutive heights must differ by one");
    if (d == 1) p.set_up(static_cast<int>(i));
    prev = heights[i];
  }
  return p;
}

int Path::ups() const {
  int total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

std::vector<int> Path::heights() const {
  std::vector<int> h(static_cast<std::size_t>(n_) + 1, 0);
  for (int i = 0; i < n_; ++i) h[i + 1] = h[i] + (step(i) == Step::Up ? 1 : -1);
  return h;
}

int Path::min_height() const {
  int h = 0, m = 0;
  for (int i = 0; i < n_; ++i) {
    h += step(i) == Step::Up ? 1 : -1;
    m = std::min(m, h);
  }
  return m;
}

std::vector<Step> Path::steps() const {
  std::vector<Step> out(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) out[i] = step(i);
  return out;
}

Path Path::subpath(int pos, int len) const {
  if (pos < 0 || len < 0 || pos + len > n_)
    throw DomainError("subpath: range out of bounds");
  Path p;
  p.resize_zeroed(len);
  for (int i = 0; i < len; ++i)
    if (step(pos + i) == Step::Up) p.set_up(i);
  return p;
}

Path operator+(const Path& a, const Path& b) {
  Path p;
  p.resize_zeroed(a.n_ + b.n_);
  for (int i = 0; i < a.n_; ++i)
    if (a.step(i) == Step::Up) p.set_up(i);
  for (int i = 0; i < b.n_; ++i)
    if (b.step(i) == Step::Up) p.set_up(a.n_ + i);
  return p;
}

bool Path::lex_less(const Path& a, const Path& b) {
  const int n = std::min(a.n_, b.n_);
  for (int i = 0; i < n; ++i) {
    if (a.step(i) != b.step(i)) return a.step(i) == Step::Down;
  }
  return a.n_ < b.n_;
}

std::size_t Path::hash() const {
  std::size_t h = static_cast<std::size_t>(n_) * 0x9e3779b97f4a7c15ULL;
  for (std::uint64_t w : words_)
    h ^= static_cast<std::size_t>(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

Path pyramid(int half) { return Path::all_up(half) + Path::all_down(half); }

Path parse_path(std::string_view text) {
  std::vector<Step> steps;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    Step s;
    if (c == 'u')
      s = Step::Up;
    else if (c == 'd')
      s = Step::Down;
    else
      throw ParseError(std::string("parse_path: unexpected character '") + c +
                       "' at position " + std::to_string(i));
    ++i;
    long long count = 1;
    if (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      std::size_t j = i;
      while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
      auto res = std::from_chars(text.data() + i, text.data() + j, count);
      if (res.ec != std::errc{} || count < 1)
        throw ParseError("parse_path: repeat count must be a decimal integer >= 1");
      i = j;
    }
    if (count > kMaxPathLength ||
        static_cast<long long>(steps.size()) + count > kMaxPathLength)
      throw ParseError("parse_path: path longer than the supported maximum");
    steps.insert(steps.end(), static_cast<std::size_t>(count), s);
  }
  return Path::from_steps(steps);
}

std::string render_path(const Path& p) {
  std::string out;
  out.reserve(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) out += p.step(i) == Step::Up ? 'u' : 'd';
  return out;
}

std::string render_path_runlength(const Path& p) {
  std::string out;
  int i = 0;
  while (i < p.size()) {
    int j = i;
    while (j < p.size() && p.step(j) == p.step(i)) ++j;
    out += p.step(i) == Step::Up ? 'u' : 'd';
    if (j - i > 1) out += std::to_string(j - i);
    i = j;
  }
  return out;
}

PathStats path_stats(const Path& p) {
  PathStats st;
  st.heights = p.heights();
  const int n = p.size();
  for (int i = 1; i <= n; ++i) {
    const bool up = p.step(i - 1) == Step::Up;
    const bool run_ends = i == n || (p.step(i) == Step::Up) != up;
    if (!run_ends) continue;
    (up ? st.peaks : st.valleys).push_back({i, st.heights[static_cast<std::size_t>(i)]});
  }
  for (const PointStat& v : st.valleys) {
    st.lv = st.lv ? std::min(*st.lv, v.height) : v.height;
    st.hv = st.hv ? std::max(*st.hv, v.height) : v.height;
  }
  return st;
}

Path with_valleys_turned(const Path& p, std::span<const int> valley_points) {
  std::vector<Step> steps = p.steps();
  const int n = p.size();
  for (int pt : valley_points) {
    const bool interior_valley = pt >= 1 && pt < n && steps[pt - 1] == Step::Down &&
                                 steps[pt] == Step::Up;
    const bool end_valley = pt == n && n > 0 && steps[pt - 1] == Step::Down;
    if (interior_valley) {
      steps[pt - 1] = Step::Up;
      steps[pt] = Step::Down;
    } else if (end_valley) {
      steps[pt - 1] = Step::Up;
    } else {
      throw DomainError("with_valleys_turned: point " + std::to_string(pt) +
                        " is not a valley");
    }
  }
  return Path::from_steps(steps);
}

KSequence to_kseq(const Path& p) {
  KSequence seq;
  int ups_seen = 0;
  for (int i = 0; i < p.size(); ++i) {
    if (p.step(i) == Step::Up)
      ++ups_seen;
    else
      seq.ks.push_back(ups_seen);
  }
  seq.ks.push_back(p.ups());
  return seq;
}

Path from_kseq(const KSequence& seq, int n) {
  if (seq.ks.empty()) throw DomainError("from_kseq: sequence must be nonempty");
  const int m = static_cast<int>(seq.ks.size()) - 1;
  if (n < m) throw DomainError("from_kseq: more downsteps than path length");
  if (seq.ks.front() < 0) throw DomainError("from_kseq: negative entry");
  for (std::size_t i = 1; i < seq.ks.size(); ++i)
    if (seq.ks[i] < seq.ks[i - 1]) throw DomainError("from_kseq: sequence must be non-decreasing");
  if (seq.ks.back() != n - m)
    throw DomainError("from_kseq: final entry inconsistent with length");
  std::vector<Step> steps;
  steps.reserve(static_cast<std::size_t>(n));
  int ups_emitted = 0;
  for (int i = 0; i <= m; ++i) {
    for (; ups_emitted < seq.ks[static_cast<std::size_t>(i)]; ++ups_emitted)
      steps.push_back(Step::Up);
    if (i < m) steps.push_back(Step::Down);
  }
  return Path::from_steps(steps);
}

PathClass classify(const Path& p) {
  PathClass c;
  const int minh = p.min_height();
  const int fin = p.final_height();
  c.dyck_prefix = minh >= 0;
  c.dyck_path = c.dyck_prefix && fin == 0;
  c.dyck_suffix = fin == minh;
  return c;
}

namespace {

Decomposition prefix_form(const Path& p) {
  if (!classify(p).dyck_prefix)
    throw DomainError("decompose: PrefixForm needs a Dyck prefix");
  const auto h = p.heights();
  const int n = p.size();
  const int k = p.final_height();
  Decomposition d{DecompositionKind::PrefixForm, {}};
  // a_j ends at the last visit to height j; the step after it is the
  // separating upstep that is never undone.
  int start = 0;
  for (int j = 0; j <= k; ++j) {
    int last = -1;
    for (int i = n; i >= 0; --i)
      if (h[static_cast<std::size_t>(i)] == j) {
        last = i;
        break;
      }
    d.parts.push_back(p.subpath(start, last - start));
    start = last + 1;  // skip the separating upstep
  }
  return d;
}

Decomposition suffix_form(const Path& p) {
  if (!classify(p).dyck_suffix)
    throw DomainError("decompose: SuffixForm needs a Dyck suffix");
  const auto h = p.heights();
  const int n = p.size();
  const int k = -p.final_height();
  Decomposition d{DecompositionKind::SuffixForm, {}};
  // a_{j-1} ends just before the first visit to height -j; that arrival
  // downstep separates, and the path never climbs back above -(j-1).
  int start = 0;
  for (int j = 1; j <= k; ++j) {
    int first = -1;
    for (int i = 0; i <= n; ++i)
      if (h[static_cast<std::size_t>(i)] == -j) {
        first = i;
        break;
      }
    d.parts.push_back(p.subpath(start, first - 1 - start));
    start = first;
  }
  d.parts.push_back(p.subpath(start, n - start));
  return d;
}

Decomposition prime_factors(const Path& p) {
  if (!classify(p).dyck_path)
    throw DomainError("decompose: PrimeFactors needs a Dyck path");
  const auto h = p.heights();
  Decomposition d{DecompositionKind::PrimeFactors, {}};
  int start = 0;
  for (int i = 1; i <= p.size(); ++i) {
    if (h[static_cast<std::size_t>(i)] == 0) {
      d.parts.push_back(p.subpath(start, i - start));
      start = i;
    }
  }
  return d;
}

Decomposition min_split(const Path& p) {
  const auto h = p.heights();
  int best = 0;
  for (int i = 1; i <= p.size(); ++i)
    if (h[static_cast<std::size_t>(i)] < h[static_cast<std::size_t>(best)]) best = i;
  Decomposition d{DecompositionKind::MinSplit, {}};
  d.parts.push_back(p.subpath(0, best));
  d.parts.push_back(p.subpath(best, p.size() - best));
  return d;
}

}  // namespace

Decomposition decompose(const Path& p, DecompositionKind kind) {
  switch (kind) {
    case DecompositionKind::PrefixForm: return prefix_form(p);
    case DecompositionKind::SuffixForm: return suffix_form(p);
    case DecompositionKind::PrimeFactors: return prime_factors(p);
    case DecompositionKind::MinSplit: return min_split(p);
  }
  throw DomainError("decompose: unknown kind");
}

Path Decomposition::reassemble() const {
  Path sep;
  switch (kind) {
    case DecompositionKind::PrefixForm: sep = Path::all_up(1); break;
    case DecompositionKind::SuffixForm: sep = Path::all_down(1); break;
    default: break;
  }
  Path out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out = out + sep;
    out = out + parts[i];
  }
  return out;
}

}  // namespace pathlat
