#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <random>
#include <span>
#include <vector>

#include "pathlat/counting.hpp"
#include "pathlat/lattice.hpp"
#include "pathlat/oracle.hpp"

using namespace pathlat;

TEST_CASE("binomials follow the all-or-nothing convention") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(0, 0) == 1);
  CHECK(binom(4, 0) == 1);
  CHECK(binom(4, 4) == 1);
  CHECK(binom(-1, 0) == 0);
  CHECK(binom(3, -1) == 0);
  CHECK(binom(3, 5) == 0);
  CHECK(binom(-2, -2) == 0);
  CHECK(binom(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("same-endpoint determinant matches known interval sizes") {
  // Entry (i,j) is binom(hi_i - lo_j + 1, j - i + 1); the matrix order is the
  // number of downsteps shared by the two paths.
  const std::array<int, 1> lo1{0};
  const std::array<int, 1> hi1{2};
  CHECK(same_endpoint_det(lo1, hi1) == 3);

  // Appending an entry where the paths agree must not change the value.
  const std::array<int, 2> lo2{0, 2};
  const std::array<int, 2> hi2{2, 2};
  CHECK(same_endpoint_det(lo2, hi2) == 3);

  CHECK(same_endpoint_det(std::span<const int>(), std::span<const int>()) == 1);
}

TEST_CASE("interval counts reproduce the worked same-endpoint values") {
  const Path a = parse_path("u2d2u3dudud3");
  const char* tops[] = {"u2d2u3dudud3", "u2d2u4d2ud3", "u2d2u3du2d4",
                        "u2d2u4dud4", "u2d2u5d5"};
  const int vals[] = {71, 51, 46, 36, 21};
  for (int i = 0; i < 5; ++i) {
    const Path s = parse_path(tops[i]);
    CHECK(count_to_pyramid(s) == vals[i]);
    CHECK(interval_count(s, pyramid(s.size() / 2)) == vals[i]);
    CHECK(interval_count_same_end(s, pyramid(s.size() / 2)) == vals[i]);
  }
  CHECK(count_to_pyramid(a) == 71);
  CHECK_THROWS_AS(count_to_pyramid(parse_path("uud")), DomainError);
  CHECK_THROWS_AS(interval_count_same_end(parse_path("ud"), parse_path("uu")),
                  DomainError);
}

TEST_CASE("counts to the top exercise the endpoint partition") {
  const char* ps[] = {"u2du2d3u2d", "u2du2d3u3", "u3dud3u2d",
                      "u3dud3u3", "u4d4u2d", "u4d4u3"};
  const int vals[] = {218, 183, 166, 141, 114, 99};
  for (int i = 0; i < 6; ++i) {
    const Path p = parse_path(ps[i]);
    CHECK(count_to_top(p) == vals[i]);
    CHECK(interval_count(p, Path::all_up(p.size())) == vals[i]);
  }
  CHECK(count_to_top(Path()) == 1);
  CHECK(count_to_top(Path::all_down(1)) == 2);
}

TEST_CASE("interval_count agrees with the scan oracle everywhere small") {
  for (int n = 0; n <= 6; ++n) {
    const auto all = oracle::enumerate_paths(n, oracle::EnumFilter::all());
    for (const Path& p : all)
      for (const Path& q : all)
        if (leq(p, q))
          CHECK(interval_count(p, q) == oracle::brute_interval_count(p, q));
  }
}

TEST_CASE("incomparable pairs throw unless lenient") {
  const Path p = parse_path("ud"), q = parse_path("du");
  CHECK_THROWS_AS(interval_count(p, q), DomainError);
  CHECK(interval_count(p, q, OnIncomparable::Zero) == 0);
  CHECK(interval_count(q, p, OnIncomparable::Zero) == 2);  // q really is below p
  CHECK_THROWS_AS(interval_count(p, parse_path("u")), DomainError);
}

TEST_CASE("interval counts grow monotonically under widening") {
  std::mt19937 rng(5);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 9);
    std::vector<Step> steps(static_cast<std::size_t>(n));
    for (auto& s : steps) s = (rng() & 1u) ? Step::Up : Step::Down;
    const Path x = Path::from_steps(steps);
    for (auto& s : steps) s = (rng() & 1u) ? Step::Up : Step::Down;
    const Path y = Path::from_steps(steps);
    const Path lo = meet(x, y), hi = join(x, y);
    const BigInt inner = interval_count(lo, hi);
    CHECK(inner >= 1);
    CHECK(interval_count(meet(lo, Path::all_down(n)), hi) >= inner);
    CHECK(interval_count(lo, join(hi, Path::all_up(n))) >= inner);
    CHECK(interval_count(Path::all_down(n), Path::all_up(n)) == BigInt(1) << n);
  }
}
