// ctkit: verify constant-term identities over parameter grids, or print
// single coefficients of the kernels.

#include "ctkit/harness.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

using namespace ctkit;

namespace {

std::string known_identities() {
  std::string out;
  for (const auto& info : identity_registry()) out += "  " + info.name + "\n";
  return out;
}

int default_jobs() {
  if (const char* env = std::getenv("CTKIT_JOBS")) {
    try {
      const int j = std::stoi(env);
      if (j >= 1) return j;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

/// "1:2,2:3" -> {(1,2), (2,3)}.
PairSet parse_pairs(const std::string& text, int n) {
  PairSet out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, comma - pos);
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("bad pair: " + item);
    const Composition ij = parse_composition(item.substr(0, colon) + "," + item.substr(colon + 1));
    if (ij[0] < 1 || ij[0] >= ij[1] || ij[1] > n) throw UsageError("pair out of range: " + item);
    out.emplace_back(ij[0], ij[1]);
    pos = comma + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string ct_kernel(const std::string& kernel, const Composition& a, const Composition& v, const std::string& reversed) {
  const int n = static_cast<int>(a.size());
  if (static_cast<int>(v.size()) != n) throw UsageError("--v must have as many entries as --a");
  for (int ai : a)
    if (ai < 0) throw UsageError("--a entries must be nonnegative");
  if (kernel != "dyson")
    for (int ai : a)
      if (ai < 1) throw UsageError("this kernel needs positive --a entries");
  if (kernel == "dyson") return dyson_coefficient(a, v).str();
  TablePtr table;
  std::vector<MPoly> fs;
  if (kernel == "tkernel") {
    table = make_table({.x = n, .t = n});
    fs = tkernel_factors(table, a);
  } else if (kernel == "tournament") {
    table = make_table({.x = n});
    const auto edges = Tournament::from_pairset(parse_pairs(reversed, n), n).edges();
    fs = tournament_factors(table, edges, a);
  } else if (kernel == "alternating") {
    table = make_table({.x = n});
    fs = bg_alternating_factors(table, a);
  } else {
    throw UsageError("unknown kernel: " + kernel + " (dyson, tkernel, tournament, alternating)");
  }
  if (fs.empty()) fs.push_back(MPoly::constant(table, 1));
  MPoly c = coeff_x_of_product(fs, v);
  if (kernel == "tkernel") c = remap(c, t_table(n));
  return c.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact constant-term identity engine"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string n_range = "2-3", t_mode = "symbolic";
  std::optional<std::uint64_t> seed;
  std::optional<long> budget_ms;
  std::optional<int> jobs;
  auto* verify = app.add_subcommand("verify", "Verify an identity over a parameter grid");
  verify->add_option("identity", cfg.identity, "Identity name (see `list`)")->required();
  verify->add_option("--n", n_range, "n or a range lo-hi")->capture_default_str();
  verify->add_option("--a-max", cfg.a_max, "Bound on each entry of a")->capture_default_str();
  verify->add_option("--m-max", cfg.m_max, "Bound on m, or on |lambda|")->capture_default_str();
  verify->add_option("--sum-max", cfg.sum_max, "Bound on |a|");
  verify->add_option("--t-mode", t_mode, "symbolic, qa or zero")->capture_default_str();
  verify->add_option("--jobs", jobs, "Worker threads (default $CTKIT_JOBS or 1)");
  verify->add_option("--format", cfg.format, "json or text")->capture_default_str();
  verify->add_option("--seed", seed, "Seed for randomised grids");
  verify->add_option("--budget-ms", budget_ms, "Time budget per case");
  verify->add_flag("--timing", cfg.timing, "Include per-case timings");

  std::string kernel, a_text, v_text, reversed;
  auto* ct = app.add_subcommand("ct", "Print the coefficient of x^v in a kernel");
  ct->add_option("kernel", kernel, "dyson, tkernel, tournament or alternating")->required();
  ct->add_option("--a", a_text, "Comma-separated a")->required();
  ct->add_option("--v", v_text, "Comma-separated exponent vector")->required();
  ct->add_option("--reversed", reversed, "Reversed pairs for tournament, e.g. 1:2,2:3");

  auto* list = app.add_subcommand("list", "List the identities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*list) {
      for (const auto& info : identity_registry()) std::cout << info.name << "  " << info.summary << '\n';
      return 0;
    }
    if (*ct) {
      std::cout << ct_kernel(kernel, parse_composition(a_text), parse_composition(v_text), reversed) << '\n';
      return 0;
    }
    std::tie(cfg.n_lo, cfg.n_hi) = parse_range(n_range);
    cfg.t_mode = parse_tmode(t_mode);
    cfg.jobs = jobs.value_or(default_jobs());
    cfg.seed = seed;
    if (budget_ms) cfg.budget = std::chrono::milliseconds(*budget_ms);
    if (!find_identity(cfg.identity)) {
      std::cerr << "unknown identity: " << cfg.identity << "\nknown identities:\n" << known_identities();
      return 2;
    }
    validate(cfg);
    std::size_t ok = 0, total = 0;
    const auto reports = run(cfg, [&](const VerifyReport& r) {
      ++total;
      ok += r.equal ? 1 : 0;
      std::cout << format_report(r, cfg) << '\n';
    });
    const int status = exit_status(reports);
    std::cerr << cfg.identity << ": " << ok << '/' << total << " equal\n";
    return status;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
