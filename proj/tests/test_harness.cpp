#include <algorithm>
#include <cmath>
#include <string>

#include <gtest/gtest.h>

#include "swingtwist/bench.hpp"
#include "swingtwist/random.hpp"
#include "swingtwist/report_json.hpp"
#include "swingtwist/validate.hpp"

namespace {

using namespace swingtwist;

TEST(RandomGenerators, DeterministicForEqualSeeds) {
  RngState a(42);
  RngState b(42);
  for (int i = 0; i < 100; ++i) {
    const Spinor sa = random_unit_spinor(a);
    const Spinor sb = random_unit_spinor(b);
    EXPECT_EQ(0.0, max_abs_diff(sa, sb));
    const Vector3 va = random_vector(a, 0.5, 2.0);
    const Vector3 vb = random_vector(b, 0.5, 2.0);
    EXPECT_EQ(0.0, (va - vb).norm());
  }
}

TEST(RandomGenerators, SpinorsAreUniformOnTheThreeSphere) {
  RngState rng(99);
  double sum_a2 = 0.0;
  constexpr int kSamples = 100000;
  for (int i = 0; i < kSamples; ++i) {
    const Spinor s = random_unit_spinor(rng);
    EXPECT_TRUE(s.is_unit());
    sum_a2 += s.a * s.a;
  }
  EXPECT_NEAR(0.25, sum_a2 / kSamples, 0.01);
}

TEST(RandomGenerators, VectorLengthRange) {
  RngState rng(7);
  for (int i = 0; i < 200; ++i) {
    const Vector3 unit_len = random_vector(rng, 1.0, 1.0);
    EXPECT_NEAR(1.0, unit_len.norm(), 1e-9);
    const Vector3 ranged = random_vector(rng, 0.25, 4.0);
    EXPECT_GE(ranged.norm(), 0.25 * (1.0 - 1e-12));
    EXPECT_LE(ranged.norm(), 4.0 * (1.0 + 1e-12));
  }
  EXPECT_THROW(random_vector(rng, 0.0, 1.0), error);
  EXPECT_THROW(random_vector(rng, 2.0, 1.0), error);
}

TEST(RandomGenerators, MixSeedSeparatesStreams) {
  EXPECT_NE(mix_seed(1, 0), mix_seed(1, 1));
  EXPECT_NE(mix_seed(1, 0), mix_seed(2, 0));
  EXPECT_EQ(mix_seed(5, 9), mix_seed(5, 9));
}

TEST(RunValidation, AllPropertiesPassOnHealthyBuild) {
  TrialConfig cfg;
  cfg.trials = 1000;
  cfg.seed = 7;
  cfg.tolerance = 1e-12;
  const ValidationReport report = run_validation(cfg);
  EXPECT_TRUE(report.all_passed());
  EXPECT_TRUE(report.failures.empty());
  for (const auto& p : report.properties) {
    EXPECT_GT(p.trials, 0) << p.name << " was never exercised";
    EXPECT_EQ(0, p.failures) << p.name << " max_error=" << p.max_error;
  }
  EXPECT_GT(report.wall_ms, 0.0);
}

TEST(RunValidation, DegenerateFractionProducesNotDecomposableCases) {
  TrialConfig cfg;
  cfg.trials = 500;
  cfg.seed = 11;
  cfg.degenerate_fraction = 0.2;
  const ValidationReport report = run_validation(cfg);
  EXPECT_GT(report.degenerate_trials, 0);
  EXPECT_GT(report.not_decomposable_count, 0);
  EXPECT_TRUE(report.all_passed());
}

TEST(RunValidation, ConfigErrors) {
  TrialConfig cfg;
  cfg.trials = 0;
  try {
    run_validation(cfg);
    FAIL() << "expected bad_config error";
  } catch (const error& e) {
    EXPECT_EQ(errc::bad_config, e.code());
  }

  cfg.trials = 10;
  cfg.tolerance = -1.0;
  EXPECT_THROW(run_validation(cfg), error);

  cfg.tolerance = 1e-12;
  cfg.degenerate_fraction = 1.5;
  EXPECT_THROW(run_validation(cfg), error);
}

nlohmann::ordered_json without_timing(const ValidationReport& report) {
  nlohmann::ordered_json j = to_json(report);
  j.erase("timing");
  return j;
}

TEST(RunValidation, WorkerCountDoesNotChangeResults) {
  TrialConfig cfg;
  cfg.trials = 400;
  cfg.seed = 23;
  cfg.degenerate_fraction = 0.15;
  const ValidationReport serial = run_validation(cfg, 1);
  const ValidationReport parallel = run_validation(cfg, 4);
  EXPECT_EQ(without_timing(serial).dump(), without_timing(parallel).dump());
}

TEST(RunValidation, ReportsAreByteIdenticalExceptTiming) {
  TrialConfig cfg;
  cfg.trials = 300;
  cfg.seed = 5;
  cfg.degenerate_fraction = 0.1;
  const ValidationReport first = run_validation(cfg);
  const ValidationReport second = run_validation(cfg);
  EXPECT_EQ(without_timing(first).dump(), without_timing(second).dump());
}

TEST(RunValidation, JsonSchemaKeys) {
  TrialConfig cfg;
  cfg.trials = 50;
  cfg.seed = 3;
  const nlohmann::ordered_json j = to_json(run_validation(cfg));
  EXPECT_TRUE(j.contains("config"));
  EXPECT_TRUE(j.contains("properties"));
  EXPECT_TRUE(j.contains("failures"));
  EXPECT_TRUE(j.contains("counters"));
  EXPECT_TRUE(j.contains("timing"));
  ASSERT_FALSE(j["properties"].empty());
  const auto& p = j["properties"][0];
  EXPECT_TRUE(p.contains("name"));
  EXPECT_TRUE(p.contains("trials"));
  EXPECT_TRUE(p.contains("failures"));
  EXPECT_TRUE(p.contains("max_error"));
}

TEST(RunBenchmark, SmokeAndDeterminism) {
  BenchConfig cfg;
  cfg.iters = 4000;
  cfg.seed = 1;
  const BenchReport report = run_benchmark(cfg);
  EXPECT_EQ(cfg.iters, report.iters);
  ASSERT_EQ(3u, report.methods.size());
  EXPECT_EQ("spinor_decompose", report.methods[0].method);
  EXPECT_EQ("direct_method", report.methods[1].method);
  EXPECT_EQ("huyghe_general", report.methods[2].method);
  for (const auto& m : report.methods) {
    EXPECT_GT(m.median_ns, 0.0);
    EXPECT_GT(m.p95_ns, 0.0);
    EXPECT_GT(m.speedup_vs_direct, 0.0);
  }
  EXPECT_EQ(1.0, report.methods[1].speedup_vs_direct);

  // Identical seeds must produce identical input streams.
  const auto a = detail::make_inputs(cfg.seed, 256);
  const auto b = detail::make_inputs(cfg.seed, 256);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(0.0, max_abs_diff(a[i].s, b[i].s));
    EXPECT_EQ(0.0, (a[i].v - b[i].v).norm());
    EXPECT_EQ(0.0, max_abs_diff(a[i].q, b[i].q));
  }

  EXPECT_THROW(run_benchmark({0, 1}), error);
}

TEST(RunBenchmark, CsvShape) {
  BenchConfig cfg;
  cfg.iters = 2000;
  cfg.seed = 2;
  const std::string csv = to_csv(run_benchmark(cfg));
  EXPECT_EQ(0u, csv.find("method,median_ns,p95_ns,speedup_vs_direct\n"));
  EXPECT_NE(std::string::npos, csv.find("spinor_decompose,"));
  EXPECT_NE(std::string::npos, csv.find("direct_method,"));
  EXPECT_NE(std::string::npos, csv.find("huyghe_general,"));
  // header + 3 method rows
  EXPECT_EQ(4, std::count(csv.begin(), csv.end(), '\n'));
}

TEST(BenchJson, SchemaKeys) {
  BenchConfig cfg;
  cfg.iters = 1000;
  cfg.seed = 4;
  const nlohmann::ordered_json j = to_json(run_benchmark(cfg));
  EXPECT_TRUE(j.contains("config"));
  EXPECT_TRUE(j.contains("iters"));
  EXPECT_TRUE(j.contains("methods"));
  EXPECT_TRUE(j.contains("timing"));
}

}  // namespace
