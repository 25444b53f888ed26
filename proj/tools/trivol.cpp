// Command-line front end: volume, breakdown, verify, sweep, selftest.
// Exit codes: 0 success, 1 verification failure, 2 usage/input error.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trivol/envelope.hpp"
#include "trivol/formula.hpp"
#include "trivol/oracle.hpp"

namespace {

using nlohmann::json;
using namespace trivol;

struct DomainOptions {
  std::vector<std::string> bounds;  // three "lo,hi"
  std::vector<std::string> cl;      // three "c,l"
  std::string file;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<Scalar, Scalar> parse_pair(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw UsageError("expected 'x,y', got '" + text + "'");
  }
  return {parse_scalar(text.substr(0, comma)), parse_scalar(text.substr(comma + 1))};
}

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return Scalar(static_cast<unsigned long>(j.get<std::uint64_t>()));
  if (j.is_number_float()) {
    Scalar q;
    mpq_set_d(q.get_mpq_t(), j.get<double>());
    return q;
  }
  throw UsageError("expected a number or \"p/q\" string");
}

BoxDomain3 domain_from_json(const json& j) {
  BoxDomain3 d;
  if (j.contains("bounds")) {
    const auto& b = j.at("bounds");
    if (!b.is_array() || b.size() != 3) throw UsageError("\"bounds\" must list three pairs");
    for (int i = 0; i < 3; ++i) {
      if (!b[i].is_array() || b[i].size() != 2) throw UsageError("each bound must be [lo, hi]");
      d.iv[i] = Interval::from_bounds(scalar_from_json(b[i][0]), scalar_from_json(b[i][1]));
    }
    return d;
  }
  if (j.contains("intervals")) {
    const auto& ivs = j.at("intervals");
    if (!ivs.is_array() || ivs.size() != 3) throw UsageError("\"intervals\" must list three items");
    for (int i = 0; i < 3; ++i) {
      d.iv[i] =
          Interval::from_center(scalar_from_json(ivs[i].at("c")), scalar_from_json(ivs[i].at("l")));
    }
    return d;
  }
  throw UsageError("domain object needs \"bounds\" or \"intervals\"");
}

BoxDomain3 resolve_domain(const DomainOptions& opts) {
  int sources = (!opts.bounds.empty()) + (!opts.cl.empty()) + (!opts.file.empty());
  if (sources != 1) {
    throw UsageError("give exactly one of --bounds, --cl, or a domain file");
  }
  BoxDomain3 d;
  if (!opts.bounds.empty()) {
    for (int i = 0; i < 3; ++i) {
      auto [lo, hi] = parse_pair(opts.bounds[i]);
      d.iv[i] = Interval::from_bounds(lo, hi);
    }
    return d;
  }
  if (!opts.cl.empty()) {
    for (int i = 0; i < 3; ++i) {
      auto [c, l] = parse_pair(opts.cl[i]);
      d.iv[i] = Interval::from_center(c, l);
    }
    return d;
  }
  std::ifstream in(opts.file);
  if (!in) throw UsageError("cannot open domain file '" + opts.file + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw UsageError("invalid JSON in '" + opts.file + "': " + e.what());
  }
  return domain_from_json(j);
}

void add_domain_options(CLI::App* cmd, DomainOptions& opts) {
  cmd->add_option("file", opts.file, "JSON domain file");
  cmd->add_option("--bounds", opts.bounds, "three intervals as lo,hi")->expected(3);
  cmd->add_option("--cl", opts.cl, "three intervals as center,half_length")->expected(3);
}

void emit(const json& envelope) { std::cout << envelope.dump(2) << "\n"; }

// ---------------------------------------------------------------------------
// sweep

struct SweepRange {
  Scalar start, stop, step;
};

SweepRange parse_range(const std::string& text) {
  auto p1 = text.find(':');
  auto p2 = text.find(':', p1 == std::string::npos ? p1 : p1 + 1);
  if (p1 == std::string::npos || p2 == std::string::npos) {
    throw UsageError("expected start:stop:step, got '" + text + "'");
  }
  SweepRange r{parse_scalar(text.substr(0, p1)), parse_scalar(text.substr(p1 + 1, p2 - p1 - 1)),
               parse_scalar(text.substr(p2 + 1))};
  if (r.step <= 0) throw UsageError("sweep step must be > 0");
  if (r.start > r.stop) throw UsageError("sweep start must be <= stop");
  return r;
}

std::vector<Scalar> range_values(const SweepRange& r) {
  std::vector<Scalar> out;
  for (Scalar v = r.start; v <= r.stop; v += r.step) out.push_back(v);
  return out;
}

int run_sweep(const std::string& r1, const std::string& r2, const std::string& r3,
              const std::string& lengths, const std::string& domains_file,
              const std::string& out_path) {
  std::vector<BoxDomain3> domains;
  std::vector<std::array<Scalar, 3>> row_ratios;

  if (!domains_file.empty()) {
    std::ifstream in(domains_file);
    if (!in) throw UsageError("cannot open domain list '" + domains_file + "'");
    json j;
    in >> j;
    if (!j.is_array()) throw UsageError("domain list must be a JSON array");
    for (const auto& item : j) {
      BoxDomain3 d = domain_from_json(item);
      row_ratios.push_back(d.ratios());
      domains.push_back(d);
    }
  } else {
    if (r1.empty() || r2.empty() || r3.empty()) {
      throw UsageError("sweep needs --r1/--r2/--r3 ranges or --domains FILE");
    }
    std::array<Scalar, 3> l;
    {
      std::stringstream ss(lengths);
      std::string tok;
      for (int i = 0; i < 3; ++i) {
        if (!std::getline(ss, tok, ',')) throw UsageError("--l needs three values l1,l2,l3");
        l[i] = parse_scalar(tok);
        if (l[i] <= 0) throw UsageError("half-lengths must be > 0");
      }
    }
    for (const Scalar& a : range_values(parse_range(r1))) {
      for (const Scalar& b : range_values(parse_range(r2))) {
        for (const Scalar& c : range_values(parse_range(r3))) {
          BoxDomain3 d{{Interval{a * l[0], l[0]}, Interval{b * l[1], l[1]},
                        Interval{c * l[2], l[2]}}};
          row_ratios.push_back({a, b, c});
          domains.push_back(d);
        }
      }
    }
  }

  std::ofstream file_out;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file_out.open(out_path);
    if (!file_out) throw UsageError("cannot write to '" + out_path + "'");
    out = &file_out;
  }

  *out << "r1,r2,r3,l1,l2,l3,case,qqr_case,qrr_case,volq_case,volume_rat,volume_f64\n";
  for (std::size_t i = 0; i < domains.size(); ++i) {
    VolumeReport rep = hull_volume_any(domains[i]);
    const auto& r = row_ratios[i];
    *out << fraction_string(r[0]) << ',' << fraction_string(r[1]) << ',' << fraction_string(r[2])
         << ',' << fraction_string(domains[i].iv[0].half_length) << ','
         << fraction_string(domains[i].iv[1].half_length) << ','
         << fraction_string(domains[i].iv[2].half_length) << ',' << rep.theorem6_case << ','
         << rep.qqr_subcase << ',' << rep.qrr_subcase << ',' << rep.volq_subcase << ','
         << fraction_string(rep.closed_form) << ',' << double_string(rep.closed_form) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// selftest

BoxDomain3 box_from_cl(std::array<std::pair<int, int>, 3> c, std::array<int, 3> l) {
  BoxDomain3 d;
  for (int i = 0; i < 3; ++i) {
    d.iv[i] = Interval{Scalar(c[i].first, c[i].second), Scalar(l[i])};
  }
  return d;
}

int run_selftest() {
  std::string failed;
  auto check = [&](const std::string& name, bool ok) {
    if (!ok && failed.empty()) failed = name;
    std::cout << (ok ? "ok " : "FAIL ") << name << "\n";
  };

  {
    BoxDomain3 d{{Interval::from_bounds(3, 7), Interval::from_bounds(-2, 4),
                  Interval::from_bounds(-3, -1)}};
    VolumeReport rep = hull_volume_any(d);
    check("golden-example", rep.closed_form == 960 && rep.theorem6_case == 2 &&
                                rep.record.perm_to == std::array<int, 3>{2, 0, 1});
  }
  {
    BoxDomain3 d{{Interval::from_bounds(-1, 1), Interval::from_bounds(-1, 1),
                  Interval::from_bounds(-1, 1)}};
    check("symmetric-box", hull_volume_any(d).closed_form == Scalar(32, 3));
  }
  {
    BoxDomain3 d = box_from_cl({{{2, 1}, {3, 1}, {4, 1}}}, {1, 1, 1});
    check("theorem2-agreement", hull_volume(d) == hull_volume_nonneg(d));
  }

  const std::array<std::pair<std::string, BoxDomain3>, 6> per_case = {{
      {"case1-oracle", box_from_cl({{{2, 1}, {3, 1}, {4, 1}}}, {1, 1, 1})},
      {"case2-oracle", box_from_cl({{{1, 1}, {2, 1}, {5, 1}}}, {3, 1, 2})},
      {"case3-oracle", box_from_cl({{{1, 2}, {1, 2}, {2, 1}}}, {1, 1, 1})},
      {"case4-oracle", box_from_cl({{{0, 1}, {9, 10}, {9, 10}}}, {1, 1, 1})},
      {"case5-oracle", box_from_cl({{{4, 5}, {17, 20}, {9, 10}}}, {1, 1, 1})},
      {"case6-oracle", box_from_cl({{{0, 1}, {0, 1}, {0, 1}}}, {1, 1, 1})},
  }};
  for (int i = 0; i < 6; ++i) {
    const auto& [name, d] = per_case[i];
    bool ok = classify(d) == i + 1 && hull_volume(d) == oracle_volume_quadrature(d);
    check(name, ok);
  }

  if (!failed.empty()) {
    std::cerr << "selftest failure: " << failed << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact 4D volume of the convex hull of the trilinear monomial graph over a box"};
  app.require_subcommand(1);

  std::string mode = "rational";
  if (const char* env = std::getenv("TRIVOL_MODE")) mode = env;
  bool force_float = false;
  bool json_flag = false;  // JSON is the only single-domain output format
  app.add_flag("--float", force_float, "use the floating oracle mode");
  app.add_flag("--json", json_flag, "emit JSON envelopes (default)");

  DomainOptions vol_opts, brk_opts, ver_opts;
  auto* cmd_volume = app.add_subcommand("volume", "closed-form hull volume");
  add_domain_options(cmd_volume, vol_opts);
  auto* cmd_breakdown = app.add_subcommand("breakdown", "full derivation pipeline");
  add_domain_options(cmd_breakdown, brk_opts);

  std::uint64_t mc_samples = 0, mc_seed = 0;
  auto* cmd_verify = app.add_subcommand("verify", "check the closed form against the oracles");
  add_domain_options(cmd_verify, ver_opts);
  cmd_verify->add_option("--mc-samples", mc_samples, "Monte-Carlo sample count (0 disables)");
  cmd_verify->add_option("--seed", mc_seed, "Monte-Carlo seed");

  std::string sw_r1, sw_r2, sw_r3, sw_l = "1,1,1", sw_domains, sw_out;
  auto* cmd_sweep = app.add_subcommand("sweep", "grid sweep to CSV");
  cmd_sweep->add_option("--r1", sw_r1, "ratio range start:stop:step");
  cmd_sweep->add_option("--r2", sw_r2, "ratio range start:stop:step");
  cmd_sweep->add_option("--r3", sw_r3, "ratio range start:stop:step");
  cmd_sweep->add_option("--l", sw_l, "fixed half-lengths l1,l2,l3");
  cmd_sweep->add_option("--domains", sw_domains, "JSON file with an array of domains");
  cmd_sweep->add_option("--out", sw_out, "output CSV path (default stdout)");

  app.add_subcommand("selftest", "run the embedded golden suite");

  // Let global flags (--float, --json) appear after the subcommand name.
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  if (force_float) mode = "float";
  if (mode != "rational" && mode != "float") {
    std::cerr << "TRIVOL_MODE must be 'rational' or 'float'\n";
    return 2;
  }

  try {
    if (cmd_volume->parsed()) {
      emit(volume_envelope(hull_volume_any(resolve_domain(vol_opts)), mode));
      return 0;
    }
    if (cmd_breakdown->parsed()) {
      emit(breakdown_envelope(hull_volume_any(resolve_domain(brk_opts)), mode));
      return 0;
    }
    if (cmd_verify->parsed()) {
      VolumeReport rep = hull_volume_any(resolve_domain(ver_opts));
      std::optional<McEstimate> mc;
      if (mc_samples > 0) {
        mc = oracle_volume_montecarlo(rep.canonical, mc_samples, mc_seed);
      }
      if (mode == "float") {
        json env = verify_envelope_float(rep, oracle_volume_quadrature_f(rep.canonical), mc);
        emit(env);
        return env["verified"].get<bool>() ? 0 : 1;
      }
      json env = verify_envelope(rep, oracle_volume_quadrature(rep.canonical), mc, mode);
      emit(env);
      return env["verified"].get<bool>() ? 0 : 1;
    }
    if (cmd_sweep->parsed()) {
      return run_sweep(sw_r1, sw_r2, sw_r3, sw_l, sw_domains, sw_out);
    }
    return run_selftest();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
