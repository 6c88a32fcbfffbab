#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "pathlat/filling.hpp"
#include "pathlat/oeis.hpp"
#include "pathlat/oracle.hpp"

using namespace pathlat;

TEST_CASE("enumeration is lexicographic with d before u") {
  const auto all = oracle::enumerate_paths(2, oracle::EnumFilter::all());
  REQUIRE(all.size() == 4);
  CHECK(all[0] == parse_path("dd"));
  CHECK(all[1] == parse_path("du"));
  CHECK(all[2] == parse_path("ud"));
  CHECK(all[3] == parse_path("uu"));
  CHECK(oracle::enumerate_paths(0, oracle::EnumFilter::all()).size() == 1);
}

TEST_CASE("the Dyck filter counts Catalan numbers") {
  const auto catalan = local_sequence("A000108", 6);
  for (int n = 0; n <= 10; ++n) {
    const auto dyck = oracle::enumerate_paths(n, oracle::EnumFilter::dyck_path());
    if (n % 2 == 1)
      CHECK(dyck.empty());
    else
      CHECK(BigInt(dyck.size()) == catalan[static_cast<std::size_t>(n / 2)]);
  }
}

TEST_CASE("the Dyck prefix filter counts central binomials") {
  const auto central = local_sequence("A001405", 17);
  for (int n = 0; n <= 16; ++n) {
    BigInt seen = 0;
    oracle::for_each_path(n, oracle::EnumFilter::dyck_prefix(),
                          [&seen](const Path&) { ++seen; });
    CHECK(seen == central[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("degree and filling filters agree with the module under test") {
  const auto fillings = oracle::enumerate_paths(6, oracle::EnumFilter::filling());
  CHECK(BigInt(fillings.size()) == count_fillings(6));
  for (int k = 0; k <= 11; ++k) {
    const auto paths = oracle::enumerate_paths(6, oracle::EnumFilter::degree_equals(k));
    CHECK(BigInt(paths.size()) == degree_count(6, k));
    for (const Path& p : paths) CHECK(degree(p) == k);
  }
}

TEST_CASE("brute interval and chain counts on tiny cases") {
  CHECK(oracle::brute_interval_count(parse_path("dd"), parse_path("uu")) == 4);
  CHECK(oracle::brute_interval_count(parse_path("ud"), parse_path("ud")) == 1);
  CHECK(oracle::brute_f(parse_path("dd")) == 1);
  CHECK(oracle::brute_f(Path()) == 1);
  CHECK(oracle::brute_f(parse_path("dudd")) == 2);
  CHECK(oracle::brute_min_small_chain_length(parse_path("dd")) == 3);
  CHECK(oracle::brute_min_small_chain_length(Path::all_up(3)) == 0);
  CHECK_THROWS_AS(oracle::brute_interval_count(parse_path("u"), parse_path("uu")),
                  DomainError);
}

TEST_CASE("brute V counting checks the valley condition literally") {
  const Path a = parse_path("u2d2u3dudud3");
  CHECK(oracle::brute_v_count(a, parse_path("u2d2u4dud4"), 14) == 4);
  CHECK(oracle::brute_v_count(parse_path("ud"), parse_path("ud")) == 1);
  CHECK(oracle::brute_v_count(parse_path("udud"), parse_path("u2d2")) == 0);
  const auto chains = oracle::brute_v_chains(parse_path("u2dud2"), parse_path("u2dud2"));
  REQUIRE(chains.size() == 1);  // hv = 1, so chains have two members
  CHECK(chains[0].size() == 2);
  CHECK(chains[0][0] == parse_path("u2dud2"));
  CHECK(chains[0][1] == parse_path("u2dud2"));
  CHECK_THROWS_AS(oracle::brute_v_count(parse_path("uud"), parse_path("uud")),
                  DomainError);
}

TEST_CASE("limits guard against runaway enumeration") {
  CHECK_THROWS_AS(oracle::enumerate_paths(17, oracle::EnumFilter::all()),
                  LimitExceeded);
  CHECK_THROWS_AS(oracle::brute_f(Path::all_down(11)), LimitExceeded);
  CHECK_THROWS_AS(oracle::brute_interval_count(Path::all_down(21), Path::all_up(21)),
                  LimitExceeded);
  CHECK_THROWS_AS(oracle::brute_min_small_chain_length(Path::all_down(9)),
                  LimitExceeded);
  CHECK_THROWS_AS(oracle::brute_v_count(pyramid(7), pyramid(7)), LimitExceeded);
  CHECK(oracle::enumerate_paths(17, oracle::EnumFilter::all(), 17).size() == 131072);
}

TEST_CASE("fixture files parse with comments and blanks") {
  const auto terms = read_sequence_fixture("data/oeis/A000108.txt");
  REQUIRE(terms.size() >= 20);
  CHECK(terms[0] == 1);
  CHECK(terms[1] == 1);
  CHECK(terms[2] == 2);
  CHECK(terms[10] == 16796);
  CHECK(local_sequence("A000108", static_cast<int>(terms.size())) == terms);

  const auto fillings = read_sequence_fixture("data/oeis/A000213.txt");
  REQUIRE(fillings.size() >= 22);
  CHECK(local_sequence("A000213", static_cast<int>(fillings.size())) == fillings);
  for (int n = 0; n + 1 < static_cast<int>(fillings.size()); ++n)
    CHECK(fillings[static_cast<std::size_t>(n) + 1] == count_fillings(n));

  const auto central = read_sequence_fixture("data/oeis/A001405.txt");
  CHECK(local_sequence("A001405", static_cast<int>(central.size())) == central);

  CHECK_THROWS_AS(read_sequence_fixture("data/oeis/does-not-exist.txt"), DomainError);
  CHECK_THROWS_AS(local_sequence("A000000", 3), DomainError);
}
