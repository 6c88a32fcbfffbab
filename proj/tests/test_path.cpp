#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "pathlat/oracle.hpp"
#include "pathlat/path.hpp"

using namespace pathlat;

TEST_CASE("parsing accepts run-length words and rejects junk") {
  CHECK(parse_path("") == Path());
  CHECK(parse_path("u") == Path::all_up(1));
  CHECK(parse_path("d3") == Path::all_down(3));
  CHECK(parse_path("u2d2") == parse_path("uudd"));
  CHECK(parse_path("ud10u") == parse_path("ud" + std::string(9, 'd') + "u"));
  CHECK_THROWS_AS(parse_path("x"), ParseError);
  CHECK_THROWS_AS(parse_path("u0"), ParseError);
  CHECK_THROWS_AS(parse_path("3u"), ParseError);
  CHECK_THROWS_AS(parse_path("u-1"), ParseError);
  CHECK_THROWS_AS(parse_path("ud2x"), ParseError);
  CHECK_THROWS_AS(parse_path("u 2"), ParseError);
}

TEST_CASE("rendering round-trips through both formats") {
  for (int n = 0; n <= 8; ++n)
    oracle::for_each_path(n, oracle::EnumFilter::all(), [](const Path& p) {
      CHECK(parse_path(render_path(p)) == p);
      CHECK(parse_path(render_path_runlength(p)) == p);
    });
  CHECK(render_path(parse_path("u3d2")) == "uuudd");
  CHECK(render_path_runlength(parse_path("uuudd")) == "u3d2");
  CHECK(render_path_runlength(Path()) == "");
}

TEST_CASE("basic accessors and constructions") {
  const Path p = parse_path("u2d3u");
  CHECK(p.size() == 6);
  CHECK(p.ups() == 3);
  CHECK(p.downs() == 3);
  CHECK(p.final_height() == 0);
  CHECK(p.min_height() == -1);
  CHECK(p.step(0) == Step::Up);
  CHECK(p.step(2) == Step::Down);
  CHECK(p.heights() == std::vector<int>{0, 1, 2, 1, 0, -1, 0});
  CHECK(Path::from_heights(std::vector<int>{1, 2, 1, 0, -1, 0}) == p);
  CHECK_THROWS_AS(Path::from_heights(std::vector<int>{2}), DomainError);
  CHECK(p.subpath(1, 3) == parse_path("udd"));
  CHECK_THROWS_AS(p.subpath(4, 3), DomainError);
  CHECK(parse_path("ud") + parse_path("du") == parse_path("uddu"));
  CHECK(pyramid(3) == parse_path("u3d3"));
  CHECK(pyramid(0) == Path());
}

TEST_CASE("lexicographic order and hashing agree with enumeration order") {
  const auto all = oracle::enumerate_paths(5, oracle::EnumFilter::all());
  for (std::size_t i = 0; i + 1 < all.size(); ++i) {
    CHECK(Path::lex_less(all[i], all[i + 1]));
    CHECK_FALSE(Path::lex_less(all[i + 1], all[i]));
    CHECK(all[i].hash() == Path(all[i]).hash());
  }
  CHECK(Path::lex_less(parse_path("ud"), parse_path("udd")));
  CHECK_FALSE(Path::lex_less(parse_path("ud"), parse_path("ud")));
}

TEST_CASE("stats find valleys, peaks, and the extreme valley heights") {
  const Path p = parse_path("dduudududdd");
  const PathStats st = path_stats(p);
  REQUIRE(st.valleys.size() == 4);
  CHECK(st.valleys[0].point == 2);
  CHECK(st.valleys[0].height == -2);
  CHECK(st.valleys[1].point == 5);
  CHECK(st.valleys[1].height == -1);
  CHECK(st.valleys[2].point == 7);
  CHECK(st.valleys[2].height == -1);
  CHECK(st.valleys[3].point == 11);
  CHECK(st.valleys[3].height == -3);
  REQUIRE(st.peaks.size() == 3);
  CHECK(st.peaks[0].point == 4);
  CHECK(st.peaks[1].point == 6);
  CHECK(st.peaks[2].point == 8);
  CHECK(st.lv == -3);
  CHECK(st.hv == -1);

  const PathStats top = path_stats(Path::all_up(4));
  CHECK(top.valleys.empty());
  CHECK_FALSE(top.lv.has_value());
  CHECK(top.peaks.size() == 1);
  CHECK(top.peaks[0].point == 4);

  CHECK_FALSE(path_stats(Path()).lv.has_value());
}

TEST_CASE("turning valleys swaps interior steps and flips a final downstep") {
  const Path p = parse_path("dduudududdd");
  const int all_pts[] = {2, 5, 7, 11};
  CHECK(with_valleys_turned(p, all_pts) == parse_path("duduududddu"));
  const int end_only[] = {11};
  CHECK(with_valleys_turned(p, end_only) == parse_path("dduudududdu"));
  const int bad[] = {3};
  CHECK_THROWS_AS(with_valleys_turned(p, bad), DomainError);
}

TEST_CASE("k-sequences record upsteps before each downstep") {
  CHECK(to_kseq(parse_path("u2d2u3dudud3")).ks ==
        std::vector<int>{2, 2, 5, 6, 7, 7, 7, 7});
  CHECK(to_kseq(parse_path("d3")).ks == std::vector<int>{0, 0, 0, 0});
  CHECK(to_kseq(Path()).ks == std::vector<int>{0});
  for (int n = 0; n <= 12; ++n)
    oracle::for_each_path(n, oracle::EnumFilter::all(), [n](const Path& p) {
      CHECK(from_kseq(to_kseq(p), n) == p);
    });
  CHECK_THROWS_AS(from_kseq(KSequence{{2, 1, 3}}, 5), DomainError);
  CHECK_THROWS_AS(from_kseq(KSequence{{-1, 0}}, 2), DomainError);
  CHECK_THROWS_AS(from_kseq(KSequence{{}}, 0), DomainError);
  CHECK_THROWS_AS(from_kseq(KSequence{{0, 5}}, 3), DomainError);
}

TEST_CASE("classification distinguishes the Dyck families") {
  CHECK(classify(Path()).dyck_path);
  CHECK(classify(Path()).dyck_prefix);
  CHECK(classify(Path()).dyck_suffix);
  CHECK(classify(parse_path("udud")).dyck_path);
  const PathClass pre = classify(parse_path("uud"));
  CHECK(pre.dyck_prefix);
  CHECK_FALSE(pre.dyck_path);
  CHECK_FALSE(pre.dyck_suffix);
  const PathClass suf = classify(parse_path("dd"));
  CHECK(suf.dyck_suffix);
  CHECK_FALSE(suf.dyck_prefix);
  CHECK(classify(parse_path("ddu")).general());
  CHECK_FALSE(classify(parse_path("udud")).general());
}

TEST_CASE("decompositions split and reassemble") {
  const Decomposition pf = decompose(parse_path("uduu"), DecompositionKind::PrefixForm);
  REQUIRE(pf.parts.size() == 3);
  CHECK(pf.parts[0] == parse_path("ud"));
  CHECK(pf.parts[1] == Path());
  CHECK(pf.parts[2] == Path());

  const Decomposition ms = decompose(parse_path("uddu"), DecompositionKind::MinSplit);
  REQUIRE(ms.parts.size() == 2);
  CHECK(ms.parts[0] == parse_path("udd"));
  CHECK(ms.parts[1] == parse_path("u"));

  const Decomposition prime = decompose(parse_path("udud"), DecompositionKind::PrimeFactors);
  REQUIRE(prime.parts.size() == 2);
  CHECK(prime.parts[0] == parse_path("ud"));
  CHECK(prime.parts[1] == parse_path("ud"));

  const Decomposition sf = decompose(parse_path("dud"), DecompositionKind::SuffixForm);
  CHECK(sf.reassemble() == parse_path("dud"));

  CHECK_THROWS_AS(decompose(parse_path("du"), DecompositionKind::PrefixForm), DomainError);
  CHECK_THROWS_AS(decompose(parse_path("du"), DecompositionKind::SuffixForm), DomainError);
  CHECK_THROWS_AS(decompose(parse_path("u"), DecompositionKind::PrimeFactors), DomainError);

  for (int n = 0; n <= 10; ++n)
    oracle::for_each_path(n, oracle::EnumFilter::all(), [](const Path& p) {
      const PathClass c = classify(p);
      if (c.dyck_prefix)
        CHECK(decompose(p, DecompositionKind::PrefixForm).reassemble() == p);
      if (c.dyck_suffix)
        CHECK(decompose(p, DecompositionKind::SuffixForm).reassemble() == p);
      if (c.dyck_path)
        CHECK(decompose(p, DecompositionKind::PrimeFactors).reassemble() == p);
      CHECK(decompose(p, DecompositionKind::MinSplit).reassemble() == p);
    });
}
