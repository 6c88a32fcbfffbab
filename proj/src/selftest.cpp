#include "pathlat/selftest.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathlat/chains.hpp"
#include "pathlat/counting.hpp"
#include "pathlat/filling.hpp"
#include "pathlat/lattice.hpp"
#include "pathlat/oeis.hpp"
#include "pathlat/oracle.hpp"

namespace pathlat {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

std::string ctx(const Path& p) { return render_path(p); }

// 1. Worked values reproduced by the closed evaluator in under a second.
void crit_worked_examples(const AcceptanceOptions&) {
  const auto start = std::chrono::steady_clock::now();

  require(f_eval(parse_path("u3d2u3dudud4"), FMethod::Closed) == 514,
          "f(u3d2u3dudud4) != 514");
  require(f_eval(parse_path("du3du2d3u2d"), FMethod::Closed) == 921,
          "f(du3du2d3u2d) != 921");

  const Path a = parse_path("u2d2u3dudud3");
  const char* s_strs[] = {"u2d2u3dudud3", "u2d2u4d2ud3", "u2d2u3du2d4",
                          "u2d2u4dud4", "u2d2u5d5"};
  const int i_vals[] = {71, 51, 46, 36, 21};
  const int v_vals[] = {1, 2, 2, 4, 5};
  for (int i = 0; i < 5; ++i) {
    const Path s = parse_path(s_strs[i]);
    require(count_to_pyramid(s) == i_vals[i], std::string("I(") + s_strs[i] + ")");
    require(v_count(a, s) == v_vals[i], std::string("V(a, ") + s_strs[i] + ")");
  }

  const char* j_strs[] = {"u2du2d3u2d", "u2du2d3u3", "u3dud3u2d",
                          "u3dud3u3", "u4d4u2d", "u4d4u3"};
  const int j_vals[] = {218, 183, 166, 141, 114, 99};
  for (int i = 0; i < 6; ++i)
    require(count_to_top(parse_path(j_strs[i])) == j_vals[i],
            std::string("J(") + j_strs[i] + ")");

  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  require(ms < 1000, "worked examples took " + std::to_string(ms) + " ms (>= 1 s)");
}

// 2. interval_count equals the scan oracle: exhaustive through length 7,
// then 10,000 seeded random comparable pairs through length 12.
void crit_interval_oracle(const AcceptanceOptions& opts) {
  for (int n = 0; n <= 7; ++n) {
    const auto all = oracle::enumerate_paths(n, oracle::EnumFilter::all());
    for (const Path& p : all)
      for (const Path& q : all) {
        if (!leq(p, q)) continue;
        require(interval_count(p, q) == oracle::brute_interval_count(p, q),
                "interval mismatch at [" + ctx(p) + ", " + ctx(q) + "]");
      }
  }
  std::mt19937 rng(opts.random_seed);
  auto random_path = [&rng](int n) {
    std::vector<Step> steps(static_cast<std::size_t>(n));
    for (auto& s : steps) s = (rng() & 1u) ? Step::Up : Step::Down;
    return Path::from_steps(steps);
  };
  for (int iter = 0; iter < 10000; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Path x = random_path(n), y = random_path(n);
    const Path p = meet(x, y), q = join(x, y);
    require(interval_count(p, q) == oracle::brute_interval_count(p, q),
            "random interval mismatch at [" + ctx(p) + ", " + ctx(q) + "]");
  }
}

// 3. Recursive, closed, and brute f agree through length 8; the two fast
// routes agree through length 12.
void crit_f_oracle(const AcceptanceOptions&) {
  for (int n = 0; n <= 12; ++n) {
    oracle::for_each_path(n, oracle::EnumFilter::all(), [n](const Path& p) {
      const BigInt rec = f_eval(p, FMethod::Recursive);
      const BigInt clo = f_eval(p, FMethod::Closed);
      require(rec == clo, "recursive/closed disagree on " + ctx(p));
      if (n <= 8)
        require(clo == oracle::brute_f(p), "brute f disagrees on " + ctx(p));
    });
  }
}

// 4. Moebius convolution powers vanish below the degree and hit
// (-1)^l(P,1) f(P) exactly at it.
void crit_mobius_power(const AcceptanceOptions&) {
  for (int n = 0; n <= 7; ++n) {
    const Path top = Path::all_up(n);
    oracle::for_each_path(n, oracle::EnumFilter::all(), [&top](const Path& p) {
      const int del = degree(p);
      for (int k = 0; k < del; ++k)
        require(mobius_power(p, top, k) == 0,
                "mu^" + std::to_string(k) + " nonzero below degree on " + ctx(p));
      const BigInt f = f_eval(p, FMethod::Closed);
      const BigInt expect = (chain_dist(p, top) % 2 == 0) ? f : -f;
      require(mobius_power(p, top, del) == expect,
              "mu^degree wrong on " + ctx(p));
    });
  }
}

// 5. Filling census matches the three-term recurrence and the bundled
// fixture (offset one: fixture term n+1 is the count for length n).
void crit_filling_census(const AcceptanceOptions& opts) {
  for (int n = 0; n <= 14; ++n) {
    BigInt seen = 0;
    oracle::for_each_path(n, oracle::EnumFilter::filling(),
                          [&seen](const Path&) { ++seen; });
    require(seen == count_fillings(n),
            "filling census off at length " + std::to_string(n));
  }
  const auto fixture = read_sequence_fixture(
      std::filesystem::path(opts.fixture_dir) / "A000213.txt");
  require(fixture.size() >= 22, "fixture A000213.txt has fewer than 22 terms");
  for (int n = 0; n <= 20; ++n)
    require(count_fillings(n) == fixture[static_cast<std::size_t>(n) + 1],
            "fixture mismatch at length " + std::to_string(n));
}

// 6. Degree distribution matches the binomial formula, including the top
// degree 2n-1 attained only by the all-down path.
void crit_degree_distribution(const AcceptanceOptions&) {
  for (int n = 0; n <= 10; ++n) {
    std::map<int, BigInt> histo;
    oracle::for_each_path(n, oracle::EnumFilter::all(),
                          [&histo](const Path& p) { ++histo[degree(p)]; });
    require(histo[0] == 1, "degree 0 class is not a singleton at length " +
                               std::to_string(n));
    for (int k = 1; k <= 2 * n - 1; ++k)
      require(histo[k] == degree_count(n, k),
              "degree histogram off at n=" + std::to_string(n) +
                  " k=" + std::to_string(k));
    for (const auto& [k, cnt] : histo)
      require(k >= 0 && k <= std::max(0, 2 * n - 1),
              "degree out of range at length " + std::to_string(n));
    if (n >= 1)
      require(degree(Path::all_down(n)) == 2 * n - 1,
              "degree of the all-down path is not 2n-1 at n=" + std::to_string(n));
  }
}

// 7. Both zeta-power corollaries hold for every product of pyramids
// through length 8, for all k through 3.
void crit_zeta_corollaries(const AcceptanceOptions&) {
  for (int n = 0; n <= 8; n += 2) {
    oracle::for_each_path(n, oracle::EnumFilter::dyck_path(), [](const Path& a) {
      if (!is_product_of_pyramids(a)) return;
      for (int k = 0; k <= 3; ++k)
        require(zeta_corollary_check(a, k, ZetaVariant::Pyramid),
                "pyramid corollary fails for " + ctx(a) + " k=" + std::to_string(k));
      for (int k = 1; k <= 3; ++k)
        require(zeta_corollary_check(a, k, ZetaVariant::Top),
                "top corollary fails for " + ctx(a) + " k=" + std::to_string(k));
    });
  }
}

// 8. The multichain counter matches its oracle, satisfies both identities
// used by the closed method, and the bijection reproduces the worked
// mapping exactly.
void crit_v_machinery(const AcceptanceOptions&) {
  for (int n = 0; n <= 8; n += 2) {
    const auto dyck = oracle::enumerate_paths(n, oracle::EnumFilter::dyck_path());
    for (const Path& a : dyck) {
      for (const Path& s : dyck) {
        require(v_count(a, s) == oracle::brute_v_count(a, s),
                "V oracle mismatch on (" + ctx(a) + ", " + ctx(s) + ")");
        // Wrapping identity: V(uad, usd) equals the sum of V(a, t) over t <= s.
        const Path ua = Path::all_up(1) + a + Path::all_down(1);
        const Path us = Path::all_up(1) + s + Path::all_down(1);
        BigInt sum_below = 0;
        for (const Path& t : dyck)
          if (leq(t, s)) sum_below += v_count(a, t);
        require(v_count(ua, us) == sum_below,
                "wrapping identity fails on (" + ctx(a) + ", " + ctx(s) + ")");
        // Bijection cardinality: the same sum equals the sum of V(w, s)
        // over w between a and its starred filling.
        BigInt sum_star = 0;
        for (const Path& w : interval_elements(a, star_fill(a)))
          sum_star += v_count(w, s);
        require(sum_below == sum_star,
                "bijection cardinality fails on (" + ctx(a) + ", " + ctx(s) + ")");
      }
    }
  }

  const std::vector<Path> chain = {
      parse_path("u2du2du2d2u2d3ud2u3du2dud2udud3"),
      parse_path("u2du2du2d2u2d3ud2u3du3d3udud3"),
      parse_path("u2du4d2udud3ud2u5du2d4ud3"),
      parse_path("u4du2d2ududud4u6dud4ud3")};
  const Path s = parse_path("u5du3d3ud3udu4dudud3ud4");
  const Path w = parse_path("u3du2dududud2ud2udu3du2d2ud2ud3");
  const std::vector<Path> expect = {w, parse_path("u3du3d2udud2ud2udu4du2d4ud3"),
                                    parse_path("u4du2d2ududud3udu5dud4ud3"), s};
  const VBijection out = v_bijection_forward(chain, s);
  require(out.w == w, "bijection produces the wrong base path");
  require(out.chain == expect, "bijection produces the wrong multichain");
}

// 9. No chain with small intervals reaches the top in fewer than
// degree(P) steps (breadth-first search, exhaustive through length 6).
void crit_chain_minimality(const AcceptanceOptions&) {
  for (int n = 0; n <= 6; ++n) {
    oracle::for_each_path(n, oracle::EnumFilter::all(), [](const Path& p) {
      require(oracle::brute_min_small_chain_length(p) == degree(p),
              "shortest small-interval chain differs from degree on " + ctx(p));
    });
  }
}

}  // namespace

int run_acceptance(std::ostream& out, const AcceptanceOptions& opts) {
  struct Criterion {
    const char* name;
    void (*body)(const AcceptanceOptions&);
  };
  const Criterion criteria[] = {
      {"worked examples (closed evaluator)", crit_worked_examples},
      {"interval counts vs scan oracle", crit_interval_oracle},
      {"f: recursive = closed = brute", crit_f_oracle},
      {"Moebius powers detect the degree", crit_mobius_power},
      {"filling census and fixture", crit_filling_census},
      {"degree distribution", crit_degree_distribution},
      {"zeta-power corollaries", crit_zeta_corollaries},
      {"multichain counts and bijection", crit_v_machinery},
      {"minimal chain length equals degree", crit_chain_minimality},
  };
  int failures = 0;
  int idx = 0;
  for (const auto& c : criteria) {
    ++idx;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.body(opts);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    if (error.empty()) {
      out << "[PASS] " << idx << ". " << c.name << " [" << ms << " ms]\n";
    } else {
      ++failures;
      out << "[FAIL] " << idx << ". " << c.name << " [" << ms
          << " ms]: " << error << "\n";
    }
  }
  out << (failures == 0 ? "all criteria passed"
                        : std::to_string(failures) + " criteria failed")
      << "\n";
  return failures;
}

}  // namespace pathlat
