#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pathlat/errors.hpp"

namespace pathlat {

enum class Step : std::uint8_t { Down = 0, Up = 1 };

inline Step flipped(Step s) { return s == Step::Up ? Step::Down : Step::Up; }

// An immutable binary lattice path: a finite sequence of up/down steps,
// drawn with steps (1,1) and (1,-1) starting at the origin. Steps are packed
// into words (Up = 1) so paths compare, hash and copy cheaply; every
// algorithm in the library keys its memo tables on this type.
class Path {
 public:
  Path() = default;

  static Path from_steps(std::span<const Step> steps);
  static Path all_up(int n);
  static Path all_down(int n);

  // Rebuilds a path from its height profile h_1..h_n (h_0 = 0 implied).
  // Throws DomainError unless consecutive heights differ by exactly one.
  static Path from_heights(std::span<const int> heights);

  int size() const { return n_; }
  bool empty() const { return n_ == 0; }

  // 0-based step access.
  Step step(int i) const {
    return ((words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u)
               ? Step::Up
               : Step::Down;
  }

  int ups() const;
  int downs() const { return n_ - ups(); }
  int final_height() const { return 2 * ups() - n_; }

  // Height profile h_0..h_n with h_0 = 0.
  std::vector<int> heights() const;
  // Minimum over all points, h_0 = 0 included (so never positive).
  int min_height() const;

  std::vector<Step> steps() const;

  // Steps [pos, pos+len), 0-based. Throws DomainError on bad bounds.
  Path subpath(int pos, int len) const;

  friend Path operator+(const Path& a, const Path& b);

  bool operator==(const Path& other) const {
    return n_ == other.n_ && words_ == other.words_;
  }
  bool operator!=(const Path& other) const { return !(*this == other); }

  // Plain lexicographic order on steps with d < u. This is a container and
  // output ordering only, not the lattice order (see lattice.hpp::leq).
  static bool lex_less(const Path& a, const Path& b);

  std::size_t hash() const;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;  // unused high bits kept at zero

  void resize_zeroed(int n);
  void set_up(int i) { words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
};

struct PathHash {
  std::size_t operator()(const Path& p) const { return p.hash(); }
};

struct PathLexLess {
  bool operator()(const Path& a, const Path& b) const { return Path::lex_less(a, b); }
};

// The maximal Dyck path of length 2*half: half upsteps then half downsteps.
Path pyramid(int half);

// Parses the path literal grammar: a sequence of tokens `u` or `d`, each
// optionally followed by a decimal repeat count >= 1 ("uudd" == "u2d2").
// The empty string is the empty path. Throws ParseError on anything else.
Path parse_path(std::string_view text);

// Plain letter rendering ("uudd"); inverse of parse_path up to run-length.
std::string render_path(const Path& p);
// Run-length rendering ("u2d2"); counts of one are omitted.
std::string render_path_runlength(const Path& p);

// A valley or peak. `point` is the 1-based index of the lattice point (the
// point reached after `point` steps); `height` is its y-coordinate.
struct PointStat {
  int point = 0;
  int height = 0;
  bool operator==(const PointStat&) const = default;
};

// A valley (peak) is the last point of a maximal descent (ascent). The
// endpoint counts: a path ending with a downstep ends in a valley.
struct PathStats {
  std::vector<int> heights;  // h_0..h_n, heights[0] = 0
  std::vector<PointStat> valleys;
  std::vector<PointStat> peaks;
  std::optional<int> lv;  // lowest valley height; absent iff no valleys
  std::optional<int> hv;  // highest valley height; absent iff no valleys
};

PathStats path_stats(const Path& p);

// Copy of p with the listed valleys turned into peaks: an interior valley
// swaps its (down, up) step pair, the endpoint valley flips the final
// downstep. Distinct valleys are never adjacent, so the edits commute.
// Throws DomainError if a listed point is not a valley of p.
Path with_valleys_turned(const Path& p, std::span<const int> valley_points);

// The k-sequence encoding: ks[i-1] = number of upsteps before the i-th
// downstep, for i in [1, m], plus a final entry ks[m] = total number of
// upsteps. Non-decreasing; determines the path together with its length.
struct KSequence {
  std::vector<int> ks;
  bool operator==(const KSequence&) const = default;
};

KSequence to_kseq(const Path& p);
// Inverse of to_kseq. n is the path length; throws DomainError when the
// sequence is not non-decreasing, is negative, or is inconsistent with n.
Path from_kseq(const KSequence& seq, int n);

struct PathClass {
  bool dyck_path = false;    // ends at height 0 and never dips below 0
  bool dyck_prefix = false;  // never dips below 0
  bool dyck_suffix = false;  // ends at its global minimum (origin included)
  bool general() const { return !dyck_path && !dyck_prefix && !dyck_suffix; }
};

PathClass classify(const Path& p);

enum class DecompositionKind { PrefixForm, SuffixForm, PrimeFactors, MinSplit };

// PrefixForm:   P = a_0 u a_1 u ... u a_k with every a_i a Dyck path at its
//               own baseline; requires a Dyck prefix, k = final height.
// SuffixForm:   P = a_0 d a_1 d ... d a_k dually; requires a Dyck suffix.
// PrimeFactors: a Dyck path as the concatenation of its prime factors
//               u a_i d (split at the returns to height zero).
// MinSplit:     P = P1 P2 split at the leftmost point of minimal height;
//               P1 is then a Dyck suffix and P2 a Dyck prefix.
struct Decomposition {
  DecompositionKind kind = DecompositionKind::MinSplit;
  std::vector<Path> parts;

  // Concatenates the parts back, re-inserting the u/d separators for the
  // forms that have them. Always reproduces the decomposed path.
  Path reassemble() const;
};

Decomposition decompose(const Path& p, DecompositionKind kind);

}  // namespace pathlat
