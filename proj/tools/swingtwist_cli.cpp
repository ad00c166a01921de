// Command-line harness: one-shot decomposition, randomized validation
// campaigns and micro-benchmarks against the quaternion baselines.
//
// Exit codes: 0 success, 1 invariant failure, 2 usage/config error,
// 3 decomposition impossible for the requested spinor/axis pair.

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "swingtwist/report_json.hpp"
#include "swingtwist/swingtwist.hpp"

namespace {

using namespace swingtwist;

std::vector<double> parse_csv_numbers(const std::string& text, std::size_t count,
                                      const char* what) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw std::invalid_argument(item);
      values.push_back(v);
    } catch (const std::exception&) {
      raise(errc::bad_config, std::string(what) + ": '" + item + "' is not a number");
    }
    if (!std::isfinite(values.back())) {
      raise(errc::bad_config, std::string(what) + " must be finite");
    }
  }
  if (values.size() != count) {
    raise(errc::bad_config, std::string(what) + " expects " + std::to_string(count) +
                                " comma-separated values");
  }
  return values;
}

int run_decompose(const std::string& spinor_csv, const std::string& axis_csv,
                  const std::string& rep_name, bool as_json) {
  const std::vector<double> sc = parse_csv_numbers(spinor_csv, 4, "--spinor");
  const std::vector<double> ac = parse_csv_numbers(axis_csv, 3, "--axis");
  const Representation rep = parse_representation(rep_name);

  // Input coefficients are accepted as a pinor and normalized here; only a
  // zero-norm input is rejected.
  const Spinor s = normalize_pinor(Pinor{sc[0], sc[1], sc[2], sc[3]});
  const Vector3 v{ac[0], ac[1], ac[2]};

  const SwingTwist st = decompose(s, v, rep);
  const double residual = max_abs_diff(st.compose(), s);

  if (as_json) {
    nlohmann::ordered_json j;
    j["spinor"] = {s.a, s.b, s.c, s.d};
    j["axis"] = {v.x, v.y, v.z};
    j["rep"] = representation_name(rep);
    j["swing"] = {st.swing.a, st.swing.b, st.swing.c, st.swing.d};
    j["twist"] = {st.twist.a, st.twist.b, st.twist.c, st.twist.d};
    j["residual"] = residual;
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::printf("spinor (normalized): %+.12g %+.12g e12 %+.12g e23 %+.12g e31\n",
              s.a, s.b, s.c, s.d);
  std::printf("axis:                %+.12g %+.12g %+.12g\n", v.x, v.y, v.z);
  std::printf("representation:      %s (%s)\n", representation_name(rep),
              rep == Representation::swing_after_twist ? "s = swing * twist"
                                                       : "s = twist * swing");
  std::printf("swing:               %+.12g %+.12g e12 %+.12g e23 %+.12g e31\n",
              st.swing.a, st.swing.b, st.swing.c, st.swing.d);
  std::printf("twist:               %+.12g %+.12g e12 %+.12g e23 %+.12g e31\n",
              st.twist.a, st.twist.b, st.twist.c, st.twist.d);
  std::printf("composition residual (max abs): %.3g\n", residual);
  return 0;
}

int run_validate(const TrialConfig& cfg, int workers, const std::string& json_path) {
  const ValidationReport report = run_validation(cfg, workers);

  std::printf("validation: trials=%lld seed=%llu tol=%.3g degenerate=%.3g workers=%d\n",
              report.config.trials,
              static_cast<unsigned long long>(report.config.seed),
              report.config.tolerance, report.config.degenerate_fraction, workers);
  std::printf("%-32s %10s %10s %12s\n", "property", "trials", "failures", "max_error");
  for (const auto& p : report.properties) {
    std::printf("%-32s %10lld %10lld %12.3g\n", p.name.c_str(), p.trials,
                p.failures, p.max_error);
  }
  std::printf("counters: degenerate_trials=%lld not_decomposable=%lld degenerate_twist=%lld\n",
              report.degenerate_trials, report.not_decomposable_count,
              report.degenerate_twist_count);
  for (const auto& f : report.failures) {
    std::printf("failure: property=%s trial=%lld seed=%llu spinor=%.17g,%.17g,%.17g,%.17g "
                "axis=%.17g,%.17g,%.17g\n",
                f.property.c_str(), f.trial,
                static_cast<unsigned long long>(f.seed), f.spinor[0], f.spinor[1],
                f.spinor[2], f.spinor[3], f.axis[0], f.axis[1], f.axis[2]);
  }

  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::fprintf(stderr, "error: cannot write %s\n", json_path.c_str());
      return 2;
    }
    out << to_json(report).dump(2) << "\n";
  }

  const bool ok = report.all_passed();
  std::printf("result: %s (wall %.1f ms)\n", ok ? "PASS" : "FAIL", report.wall_ms);
  return ok ? 0 : 1;
}

int run_bench(const BenchConfig& cfg, const std::string& csv_path,
              const std::string& json_path) {
  const BenchReport report = run_benchmark(cfg);

  std::printf("benchmark: iters=%lld seed=%llu\n", report.iters,
              static_cast<unsigned long long>(report.config.seed));
  std::printf("%-20s %12s %12s %10s\n", "method", "median_ns", "p95_ns", "speedup");
  for (const auto& m : report.methods) {
    std::printf("%-20s %12.2f %12.2f %9.2fx\n", m.method.c_str(), m.median_ns,
                m.p95_ns, m.speedup_vs_direct);
  }
  std::printf("wall: %.1f ms\n", report.wall_ms);

  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) {
      std::fprintf(stderr, "error: cannot write %s\n", csv_path.c_str());
      return 2;
    }
    out << to_csv(report);
  }
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::fprintf(stderr, "error: cannot write %s\n", json_path.c_str());
      return 2;
    }
    out << to_json(report).dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"swing-twist decomposition of 3-D rotations in Cl(3,0)"};
  app.require_subcommand(1);

  // decompose
  auto* dec = app.add_subcommand("decompose", "decompose one spinor about an axis");
  std::string spinor_csv;
  std::string axis_csv;
  std::string rep_name = "sat";
  bool dec_json = false;
  dec->add_option("--spinor", spinor_csv,
                  "spinor coefficients a,b,c,d on 1,e12,e23,e31 (normalized on input)")
      ->required();
  dec->add_option("--axis", axis_csv, "base vector x,y,z")->required();
  dec->add_option("--rep", rep_name, "representation: sat (s = p q) or tas (s = q p)")
      ->check(CLI::IsMember({"sat", "tas"}));
  dec->add_flag("--json", dec_json, "print machine-readable JSON");

  // validate
  auto* val = app.add_subcommand("validate", "run the randomized invariant suite");
  TrialConfig tcfg;
  int workers = 1;
  std::string val_json;
  std::string val_rep = "sat";
  val->add_option("--trials", tcfg.trials, "number of randomized trials")
      ->default_val(1000);
  val->add_option("--seed", tcfg.seed, "master seed")->default_val(0);
  val->add_option("--tol", tcfg.tolerance, "base tolerance for the 1e-12-class invariants")
      ->default_val(1e-12);
  val->add_option("--degenerate", tcfg.degenerate_fraction,
                  "fraction of adversarial near-degenerate inputs in [0,1]")
      ->default_val(0.0);
  val->add_option("--rep", val_rep, "representation tag recorded in the report")
      ->check(CLI::IsMember({"sat", "tas"}));
  val->add_option("--workers", workers, "worker threads (results are identical for any count)")
      ->default_val(1);
  val->add_option("--json", val_json, "write the JSON report to this path");

  // bench
  auto* ben = app.add_subcommand("bench", "micro-benchmark against the baselines");
  BenchConfig bcfg;
  std::string csv_path;
  std::string bench_json;
  ben->add_option("--iters", bcfg.iters, "decompositions per method")->default_val(1000000);
  ben->add_option("--seed", bcfg.seed, "input stream seed")->default_val(0);
  ben->add_option("--csv", csv_path, "write per-method timings to this CSV path");
  ben->add_option("--json", bench_json, "write the JSON report to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (dec->parsed()) return run_decompose(spinor_csv, axis_csv, rep_name, dec_json);
    if (val->parsed()) {
      tcfg.representation = parse_representation(val_rep);
      if (workers < 1) raise(errc::bad_config, "--workers must be >= 1");
      return run_validate(tcfg, workers, val_json);
    }
    if (ben->parsed()) return run_bench(bcfg, csv_path, bench_json);
  } catch (const error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return e.code() == errc::not_decomposable ? 3 : 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
