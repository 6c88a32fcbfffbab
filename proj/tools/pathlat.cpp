#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pathlat/chains.hpp"
#include "pathlat/counting.hpp"
#include "pathlat/errors.hpp"
#include "pathlat/filling.hpp"
#include "pathlat/lattice.hpp"
#include "pathlat/oeis.hpp"
#include "pathlat/oracle.hpp"
#include "pathlat/selftest.hpp"

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
      .count();
}

std::string class_name(const pathlat::PathClass& c) {
  if (c.dyck_path) return "dyck-path";
  if (c.dyck_prefix) return "dyck-prefix";
  if (c.dyck_suffix) return "dyck-suffix";
  return "general";
}

json points_json(const std::vector<pathlat::PointStat>& pts) {
  json arr = json::array();
  for (const auto& p : pts) arr.push_back({{"point", p.point}, {"height", p.height}});
  return arr;
}

std::string points_text(const std::vector<pathlat::PointStat>& pts) {
  if (pts.empty()) return "none";
  std::string out;
  for (const auto& p : pts) {
    if (!out.empty()) out += ' ';
    out += '(' + std::to_string(p.point) + ',' + std::to_string(p.height) + ')';
  }
  return out;
}

void emit(bool as_json, const std::string& command, const json& inputs,
          const json& value, const std::optional<std::string>& method,
          long long elapsed, const std::string& plain) {
  if (as_json) {
    json out{{"command", command},
             {"inputs", inputs},
             {"value", value},
             {"elapsed_ms", elapsed}};
    if (method) out["method"] = *method;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << plain << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact order, counting, and chain arithmetic on the lattice of "
               "binary paths"};
  app.require_subcommand(1);

  bool as_json = false;
  app.add_flag("--json", as_json, "emit one JSON object (counts as decimal strings)");
  std::size_t cap = pathlat::limits::default_enum_cap;
  app.add_option("--cap", cap, "abort enumerations larger than this many elements");

  int exit_code = 0;

  // stats <path>
  auto* c_stats = app.add_subcommand("stats", "structural report for one path");
  std::string stats_path;
  c_stats->add_option("path", stats_path, "path word, e.g. u3d2ud or dduu")->required();
  c_stats->callback([&] {
    const auto t0 = Clock::now();
    const pathlat::Path p = pathlat::parse_path(stats_path);
    const pathlat::PathStats st = pathlat::path_stats(p);
    const pathlat::PathClass cls = pathlat::classify(p);
    const pathlat::FillingReport rep = pathlat::filling_report(p);
    const auto ks = pathlat::to_kseq(p);
    json value{{"length", p.size()},
               {"upsteps", p.ups()},
               {"downsteps", p.downs()},
               {"final_height", p.final_height()},
               {"class", class_name(cls)},
               {"valleys", points_json(st.valleys)},
               {"peaks", points_json(st.peaks)},
               {"lv", st.lv ? json(*st.lv) : json()},
               {"hv", st.hv ? json(*st.hv) : json()},
               {"rank", pathlat::rank(p)},
               {"degree", rep.degree},
               {"filling", pathlat::render_path_runlength(rep.filling)},
               {"low_fill", pathlat::render_path_runlength(rep.low_fill)},
               {"star_fill", pathlat::render_path_runlength(rep.star_fill)},
               {"is_filling", pathlat::is_filling(p)},
               {"k_sequence", ks.ks}};
    std::string plain;
    plain += "path:         " + pathlat::render_path(p) + "\n";
    plain += "length:       " + std::to_string(p.size()) + " (" +
             std::to_string(p.ups()) + " up, " + std::to_string(p.downs()) +
             " down, ends at " + std::to_string(p.final_height()) + ")\n";
    plain += "class:        " + class_name(cls) + "\n";
    plain += "valleys:      " + points_text(st.valleys) + "\n";
    plain += "peaks:        " + points_text(st.peaks) + "\n";
    plain += "lv / hv:      " + (st.lv ? std::to_string(*st.lv) : "none") + " / " +
             (st.hv ? std::to_string(*st.hv) : "none") + "\n";
    plain += "rank:         " + std::to_string(pathlat::rank(p)) + "\n";
    plain += "degree:       " + std::to_string(rep.degree) + "\n";
    plain += "filling:      " + pathlat::render_path_runlength(rep.filling) + "\n";
    plain += "low fill:     " + pathlat::render_path_runlength(rep.low_fill) + "\n";
    plain += "star fill:    " + pathlat::render_path_runlength(rep.star_fill) + "\n";
    plain += std::string("is filling:   ") + (pathlat::is_filling(p) ? "yes" : "no") + "\n";
    std::string seq;
    for (std::size_t i = 0; i < ks.ks.size(); ++i)
      seq += (i ? "," : "") + std::to_string(ks.ks[i]);
    plain += "k-sequence:   (" + seq + ")";
    emit(as_json, "stats", {{"path", stats_path}}, value, std::nullopt,
         ms_since(t0), plain);
  });

  // interval <p> <q>
  auto* c_interval = app.add_subcommand("interval", "cardinality of [P, Q]");
  std::string int_p, int_q;
  bool int_lenient = false;
  c_interval->add_option("p", int_p, "lower path")->required();
  c_interval->add_option("q", int_q, "upper path")->required();
  c_interval->add_flag("--lenient", int_lenient,
                       "report 0 instead of failing when P is not below Q");
  c_interval->callback([&] {
    const auto t0 = Clock::now();
    const pathlat::Path p = pathlat::parse_path(int_p);
    const pathlat::Path q = pathlat::parse_path(int_q);
    const pathlat::BigInt n = pathlat::interval_count(
        p, q,
        int_lenient ? pathlat::OnIncomparable::Zero : pathlat::OnIncomparable::Throw);
    emit(as_json, "interval", {{"p", int_p}, {"q", int_q}},
         pathlat::to_decimal(n), std::nullopt, ms_since(t0), pathlat::to_decimal(n));
  });

  // f <path>
  auto* c_f = app.add_subcommand("f", "number of minimal chains with small intervals");
  std::string f_path, f_method = "auto";
  bool f_trace = false;
  c_f->add_option("path", f_path, "path word")->required();
  c_f->add_option("--method", f_method, "recursive, closed, or auto (default)")
      ->check(CLI::IsMember({"recursive", "closed", "auto"}));
  c_f->add_flag("--trace", f_trace, "print which evaluation rules fired");
  c_f->callback([&] {
    const auto t0 = Clock::now();
    const pathlat::Path p = pathlat::parse_path(f_path);
    pathlat::FMethod m = pathlat::FMethod::Auto;
    if (f_method == "recursive") m = pathlat::FMethod::Recursive;
    if (f_method == "closed") m = pathlat::FMethod::Closed;
    pathlat::FTrace trace;
    const pathlat::BigInt v =
        pathlat::f_eval(p, m, f_trace ? &trace : nullptr, cap);
    const std::string used =
        (m == pathlat::FMethod::Recursive) ? "recursive" : "closed";
    std::string plain;
    json jtrace = json::array();
    for (const auto& ev : trace) {
      plain += ev.rule + ": " + ev.detail + "\n";
      jtrace.push_back({{"rule", ev.rule}, {"detail", ev.detail}});
    }
    plain += pathlat::to_decimal(v);
    json value = pathlat::to_decimal(v);
    if (as_json && f_trace)
      value = json{{"count", pathlat::to_decimal(v)}, {"trace", jtrace}};
    emit(as_json, "f", {{"path", f_path}}, value, used, ms_since(t0), plain);
  });

  // vcount <a> <s>
  auto* c_v = app.add_subcommand("vcount", "valley-respecting multichain count V(a, s)");
  std::string v_a, v_s;
  c_v->add_option("a", v_a, "starting Dyck path")->required();
  c_v->add_option("s", v_s, "ending Dyck path")->required();
  c_v->callback([&] {
    const auto t0 = Clock::now();
    const pathlat::BigInt v =
        pathlat::v_count(pathlat::parse_path(v_a), pathlat::parse_path(v_s), cap);
    emit(as_json, "vcount", {{"a", v_a}, {"s", v_s}}, pathlat::to_decimal(v),
         std::nullopt, ms_since(t0), pathlat::to_decimal(v));
  });

  // mobius-power / zeta-power <p> <q> <k>
  std::string mp_p, mp_q;
  int mp_k = 0;
  bool mp_zeta = false;
  auto add_power = [&](const char* name, const char* help, bool zeta) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("p", mp_p, "lower path")->required();
    c->add_option("q", mp_q, "upper path")->required();
    c->add_option("k", mp_k, "convolution exponent")->required();
    c->callback([&, zeta] { mp_zeta = zeta; });
    return c;
  };
  auto* c_mp = add_power("mobius-power", "k-th Moebius convolution power on [P, Q]", false);
  auto* c_zp = add_power("zeta-power", "k-th zeta convolution power on [P, Q]", true);
  auto run_power = [&](const char* cmd) {
    const auto t0 = Clock::now();
    const pathlat::Path p = pathlat::parse_path(mp_p);
    const pathlat::Path q = pathlat::parse_path(mp_q);
    const pathlat::BigInt v = mp_zeta ? pathlat::zeta_power(p, q, mp_k, cap)
                                      : pathlat::mobius_power(p, q, mp_k, cap);
    emit(as_json, cmd, {{"p", mp_p}, {"q", mp_q}, {"k", std::to_string(mp_k)}},
         pathlat::to_decimal(v), std::nullopt, ms_since(t0), pathlat::to_decimal(v));
  };

  // enumerate <n>
  auto* c_enum = app.add_subcommand("enumerate", "count or list paths of one length");
  int en_n = 0, en_k = 0, en_limit = 16;
  std::string en_filter = "all";
  bool en_list = false;
  c_enum->add_option("n", en_n, "path length")->required();
  c_enum->add_option("--filter", en_filter, "all, dyck, dyck-prefix, filling, or degree")
      ->check(CLI::IsMember({"all", "dyck", "dyck-prefix", "filling", "degree"}));
  c_enum->add_option("--k", en_k, "degree value for --filter degree");
  c_enum->add_flag("--list", en_list, "print every matching path");
  c_enum->add_option("--limit", en_limit, "refuse lengths above this (default 16)");
  c_enum->callback([&] {
    const auto t0 = Clock::now();
    pathlat::oracle::EnumFilter filter;
    if (en_filter == "dyck") filter = pathlat::oracle::EnumFilter::dyck_path();
    if (en_filter == "dyck-prefix") filter = pathlat::oracle::EnumFilter::dyck_prefix();
    if (en_filter == "filling") filter = pathlat::oracle::EnumFilter::filling();
    if (en_filter == "degree") filter = pathlat::oracle::EnumFilter::degree_equals(en_k);
    pathlat::BigInt count = 0;
    std::string listing;
    json jpaths = json::array();
    pathlat::oracle::for_each_path(
        en_n, filter,
        [&](const pathlat::Path& p) {
          ++count;
          if (en_list) {
            listing += pathlat::render_path(p) + "\n";
            if (as_json) jpaths.push_back(pathlat::render_path(p));
          }
        },
        en_limit);
    json value = pathlat::to_decimal(count);
    if (as_json && en_list)
      value = json{{"count", pathlat::to_decimal(count)}, {"paths", jpaths}};
    emit(as_json, "enumerate", {{"n", std::to_string(en_n)}, {"filter", en_filter}},
         value, std::nullopt, ms_since(t0), listing + pathlat::to_decimal(count));
  });

  // selftest
  auto* c_self = app.add_subcommand("selftest", "run the full acceptance suite");
  pathlat::AcceptanceOptions self_opts;
  c_self->add_option("--fixtures", self_opts.fixture_dir,
                     "directory with the OEIS fixture files");
  c_self->add_option("--seed", self_opts.random_seed,
                     "seed for the randomized interval sweep");
  c_self->callback([&] {
    if (pathlat::run_acceptance(std::cout, self_opts) != 0) exit_code = 1;
  });

  // oeis
  auto* c_oeis = app.add_subcommand("oeis", "check bundled fixtures against generators");
  std::string oeis_dir = "data/oeis";
  int oeis_upto = -1;
  c_oeis->add_option("--fixtures", oeis_dir, "directory with the fixture files");
  c_oeis->add_option("--upto", oeis_upto, "compare only the first N terms");
  c_oeis->callback([&] {
    const char* ids[] = {"A000108", "A000213", "A001405"};
    for (const char* id : ids) {
      const auto fixture = pathlat::read_sequence_fixture(
          std::filesystem::path(oeis_dir) / (std::string(id) + ".txt"));
      std::size_t n = fixture.size();
      if (oeis_upto >= 0 && static_cast<std::size_t>(oeis_upto) < n)
        n = static_cast<std::size_t>(oeis_upto);
      const auto local = pathlat::local_sequence(id, static_cast<int>(n));
      bool ok = true;
      for (std::size_t i = 0; i < n; ++i)
        if (fixture[i] != local[i]) {
          ok = false;
          std::cout << id << ": MISMATCH at term " << i << " (fixture "
                    << pathlat::to_decimal(fixture[i]) << ", generator "
                    << pathlat::to_decimal(local[i]) << ")\n";
          break;
        }
      if (ok) std::cout << id << ": PASS (" << n << " terms)\n";
      if (!ok) exit_code = 1;
    }
  });

  try {
    app.parse(argc, argv);
    if (c_mp->parsed()) run_power("mobius-power");
    if (c_zp->parsed()) run_power("zeta-power");
    (void)c_stats;
    (void)c_interval;
    (void)c_f;
    (void)c_v;
    (void)c_enum;
    (void)c_self;
    (void)c_oeis;
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const pathlat::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const pathlat::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 4;
  } catch (const pathlat::LimitExceeded& e) {
    std::cerr << "limit exceeded: " << e.what() << "\n";
    return 4;
  } catch (const pathlat::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  }
  return exit_code;
}
