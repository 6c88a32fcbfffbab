#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "pathlat/filling.hpp"
#include "pathlat/lattice.hpp"
#include "pathlat/oracle.hpp"

using namespace pathlat;

TEST_CASE("fillings turn every valley at once") {
  const Path p = parse_path("dduudududdd");
  CHECK(filling(p) == parse_path("duduududddu"));
  CHECK(low_fill(p) == parse_path("dduudududdu"));
  CHECK(star_fill(p) == parse_path("duduududddd"));
  CHECK(filling(Path::all_up(4)) == Path::all_up(4));
  CHECK(low_fill(Path()) == Path());
  CHECK(star_fill(parse_path("udu")) == parse_path("uud"));  // no final downstep
  CHECK(filling(parse_path("dd")) == parse_path("du"));
  CHECK(filling(parse_path("du")) == parse_path("ud"));
  CHECK(filling(parse_path("ud")) == parse_path("uu"));
}

TEST_CASE("the filling is the join of all covers") {
  for (int n = 0; n <= 10; ++n)
    oracle::for_each_path(n, oracle::EnumFilter::all(), [](const Path& p) {
      Path acc = p;
      for (const Path& c : covers(p)) acc = join(acc, c);
      CHECK(acc == filling(p));
      CHECK(leq(p, low_fill(p)));
      CHECK(leq(low_fill(p), filling(p)));
      CHECK(leq(star_fill(p), filling(p)));
    });
}

TEST_CASE("degree counts filling iterations and matches the height formula") {
  CHECK(degree(Path()) == 0);
  CHECK(degree(Path::all_up(6)) == 0);
  CHECK(degree(parse_path("dd")) == 3);
  CHECK(degree(parse_path("ud")) == 1);
  for (int n = 1; n <= 8; ++n) CHECK(degree(Path::all_down(n)) == 2 * n - 1);
  for (int n = 0; n <= 10; ++n)
    oracle::for_each_path(n, oracle::EnumFilter::all(), [](const Path& p) {
      const auto st = path_stats(p);
      if (st.lv)
        CHECK(degree(p) == p.size() - 1 - *st.lv);
      else
        CHECK(degree(p) == 0);
    });
}

TEST_CASE("filling reports chain the iterates to the top") {
  const FillingReport rep = filling_report(parse_path("dd"));
  REQUIRE(rep.iterates.size() == 4);
  CHECK(rep.iterates[0] == parse_path("dd"));
  CHECK(rep.iterates[1] == parse_path("du"));
  CHECK(rep.iterates[2] == parse_path("ud"));
  CHECK(rep.iterates[3] == parse_path("uu"));
  CHECK(rep.degree == 3);
  CHECK(rep.filling == parse_path("du"));
}

TEST_CASE("is_filling recognizes exactly the images of the filling map") {
  CHECK(is_filling(Path()));
  CHECK(is_filling(parse_path("u")));
  CHECK_FALSE(is_filling(parse_path("d")));
  CHECK(is_filling(parse_path("du")));
  CHECK_FALSE(is_filling(parse_path("duu")));       // forbidden prefix
  CHECK_FALSE(is_filling(parse_path("udd")));       // forbidden suffix
  CHECK_FALSE(is_filling(parse_path("udduuu")));    // forbidden factor
  for (int n = 0; n <= 11; ++n) {
    // Collect the image of the filling map over all length-n paths and
    // compare it with the predicate.
    std::vector<Path> image;
    oracle::for_each_path(n, oracle::EnumFilter::all(), [&image](const Path& p) {
      image.push_back(filling(p));
    });
    oracle::for_each_path(n, oracle::EnumFilter::all(), [&image](const Path& q) {
      const bool in_image =
          std::find(image.begin(), image.end(), q) != image.end();
      CHECK(in_image == is_filling(q));
    });
  }
}

TEST_CASE("count_fillings satisfies the three-term recurrence") {
  CHECK(count_fillings(0) == 1);
  CHECK(count_fillings(1) == 1);
  CHECK(count_fillings(2) == 3);
  CHECK(count_fillings(3) == 5);
  CHECK(count_fillings(4) == 9);
  CHECK(count_fillings(7) == 57);
  for (int n = 3; n <= 30; ++n)
    CHECK(count_fillings(n) ==
          count_fillings(n - 1) + count_fillings(n - 2) + count_fillings(n - 3));
  CHECK_THROWS_AS(count_fillings(-1), DomainError);
}

TEST_CASE("degree_count matches the binomial formula and sums to 2^n") {
  CHECK(degree_count(2, 3) == 1);
  CHECK(degree_count(3, 3) == 3);
  CHECK(degree_count(0, 0) == 1);
  CHECK(degree_count(5, 1) == 1);
  for (int n = 0; n <= 12; ++n) {
    BigInt total = degree_count(n, 0);
    for (int k = 1; k <= 2 * n - 1; ++k) total += degree_count(n, k);
    CHECK(total == BigInt(1) << n);
  }
  CHECK_THROWS_AS(degree_count(2, 6), DomainError);
  CHECK_THROWS_AS(degree_count(2, -1), DomainError);
  CHECK_THROWS_AS(degree_count(-1, 0), DomainError);
  CHECK_THROWS_AS(degree_count(0, 1), DomainError);
}
