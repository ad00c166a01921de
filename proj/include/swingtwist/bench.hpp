#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "swingtwist/cl3.hpp"
#include "swingtwist/decompose.hpp"
#include "swingtwist/errors.hpp"
#include "swingtwist/quaternion.hpp"
#include "swingtwist/random.hpp"

// Micro-benchmark comparing the projection-based decomposition against the
// quaternion baselines on one pre-materialized input stream. Methodology:
// median and p95 of per-batch timings over iterations split into fixed-size
// batches, after a warmup pass; input generation is excluded from timing.

namespace swingtwist {

struct BenchConfig {
  long long iters = 1000000;
  std::uint64_t seed = 0;
};

inline void validate_config(const BenchConfig& cfg) {
  if (cfg.iters < 1) raise(errc::bad_config, "iters must be >= 1");
}

struct MethodTiming {
  std::string method;
  double median_ns = 0.0;
  double p95_ns = 0.0;
  double speedup_vs_direct = 0.0;  // direct-method median / this median
};

struct BenchReport {
  BenchConfig config;
  long long iters = 0;
  std::vector<MethodTiming> methods;
  double wall_ms = 0.0;
};

namespace detail {

// Keeps the accumulated checksum alive so the timed loops cannot be
// eliminated.
inline void observe_value(double& value) {
#if defined(__GNUC__) || defined(__clang__)
  asm volatile("" : "+m"(value) : : "memory");
#else
  volatile double sink = value;
  (void)sink;
#endif
}

struct BenchInput {
  Spinor s;
  Vector3 v;
  Quaternion q;
};

// Inputs are unit rotations paired with base vectors, filtered away from
// every method's degeneracy so all three run their full arithmetic path.
inline std::vector<BenchInput> make_inputs(std::uint64_t seed, std::size_t count) {
  std::vector<BenchInput> inputs;
  inputs.reserve(count);
  for (std::uint64_t i = 0; inputs.size() < count; ++i) {
    RngState rng(mix_seed(seed, i));
    BenchInput in;
    in.q = random_unit_quaternion(rng);
    in.v = random_vector(rng, 0.5, 2.0);
    in.s = quat_to_spinor(in.q);
    if (!is_decomposable(in.s, in.v)) continue;
    const Vector3 vn = in.v / in.v.norm();
    const Vector3 wn = in.q.rotate(vn);
    if (vn.cross(wn).norm() <= 1e-3) continue;
    const double proj = in.q.x * vn.x + in.q.y * vn.y + in.q.z * vn.z;
    if (in.q.w * in.q.w + proj * proj <= 1e-6) continue;
    inputs.push_back(in);
  }
  return inputs;
}

template <typename Fn>
inline std::pair<double, double> time_batches(const Fn& fn, long long iters,
                                              std::size_t input_count) {
  using Clock = std::chrono::steady_clock;
  constexpr int kBatches = 64;
  const long long batch_size = std::max<long long>(1, iters / kBatches);
  const int batches = static_cast<int>((iters + batch_size - 1) / batch_size);

  // Warmup: one batch, untimed.
  double checksum = 0.0;
  for (long long i = 0; i < batch_size; ++i) {
    checksum += fn(static_cast<std::size_t>(i) % input_count);
  }
  observe_value(checksum);

  std::vector<double> ns_per_op;
  ns_per_op.reserve(static_cast<std::size_t>(batches));
  long long done = 0;
  std::size_t cursor = 0;
  for (int b = 0; b < batches; ++b) {
    const long long todo = std::min(batch_size, iters - done);
    const auto t0 = Clock::now();
    for (long long i = 0; i < todo; ++i) {
      checksum += fn(cursor);
      cursor = cursor + 1 == input_count ? 0 : cursor + 1;
    }
    const auto t1 = Clock::now();
    observe_value(checksum);
    const double ns = std::chrono::duration<double, std::nano>(t1 - t0).count();
    ns_per_op.push_back(ns / static_cast<double>(todo));
    done += todo;
  }

  std::sort(ns_per_op.begin(), ns_per_op.end());
  const std::size_t n = ns_per_op.size();
  const double median = n % 2 == 1 ? ns_per_op[n / 2]
                                   : 0.5 * (ns_per_op[n / 2 - 1] + ns_per_op[n / 2]);
  const double p95 = ns_per_op[std::min(n - 1, static_cast<std::size_t>(0.95 * (n - 1) + 0.5))];
  return {std::max(median, 1e-3), std::max(p95, 1e-3)};
}

}  // namespace detail

inline BenchReport run_benchmark(const BenchConfig& cfg) {
  validate_config(cfg);
  const auto start = std::chrono::steady_clock::now();

  const std::size_t pool = static_cast<std::size_t>(
      std::min<long long>(cfg.iters, 1 << 14));
  const std::vector<detail::BenchInput> inputs = detail::make_inputs(cfg.seed, pool);

  const auto spinor_fn = [&](std::size_t i) {
    const detail::BenchInput& in = inputs[i];
    const SwingTwist st = decompose(in.s, in.v, Representation::swing_after_twist);
    return st.twist.a + st.swing.a;
  };
  const auto direct_fn = [&](std::size_t i) {
    const detail::BenchInput& in = inputs[i];
    const QuatSwingTwist st = direct_method_decompose(in.q, in.v);
    return st.twist.w + st.swing.w;
  };
  const auto huyghe_fn = [&](std::size_t i) {
    const detail::BenchInput& in = inputs[i];
    const QuatSwingTwist st = huyghe_general_decompose(in.q, in.v);
    return st.twist.w + st.swing.w;
  };

  const auto [spinor_med, spinor_p95] = detail::time_batches(spinor_fn, cfg.iters, pool);
  const auto [direct_med, direct_p95] = detail::time_batches(direct_fn, cfg.iters, pool);
  const auto [huyghe_med, huyghe_p95] = detail::time_batches(huyghe_fn, cfg.iters, pool);

  BenchReport report;
  report.config = cfg;
  report.iters = cfg.iters;
  report.methods = {
      {"spinor_decompose", spinor_med, spinor_p95, direct_med / spinor_med},
      {"direct_method", direct_med, direct_p95, 1.0},
      {"huyghe_general", huyghe_med, huyghe_p95, direct_med / huyghe_med},
  };
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

inline std::string to_csv(const BenchReport& report) {
  std::string out = "method,median_ns,p95_ns,speedup_vs_direct\n";
  char line[160];
  for (const auto& m : report.methods) {
    std::snprintf(line, sizeof(line), "%s,%.3f,%.3f,%.4f\n", m.method.c_str(),
                  m.median_ns, m.p95_ns, m.speedup_vs_direct);
    out += line;
  }
  return out;
}

}  // namespace swingtwist
