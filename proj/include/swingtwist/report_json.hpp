#pragma once

#include <json.hpp>

#include "swingtwist/bench.hpp"
#include "swingtwist/validate.hpp"

// JSON serialization of harness reports. Key order is fixed (ordered_json)
// and all non-timing content is deterministic for a given config, so two
// runs differ only in the "timing" objects.

namespace swingtwist {

inline nlohmann::ordered_json to_json(const ValidationReport& report) {
  nlohmann::ordered_json j;
  j["config"] = {
      {"trials", report.config.trials},
      {"seed", report.config.seed},
      {"tolerance", report.config.tolerance},
      {"representation", representation_name(report.config.representation)},
      {"degenerate_fraction", report.config.degenerate_fraction},
  };
  j["properties"] = nlohmann::ordered_json::array();
  for (const auto& p : report.properties) {
    j["properties"].push_back({
        {"name", p.name},
        {"trials", p.trials},
        {"failures", p.failures},
        {"max_error", p.max_error},
    });
  }
  j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : report.failures) {
    j["failures"].push_back({
        {"property", f.property},
        {"trial", f.trial},
        {"seed", f.seed},
        {"inputs", {{"spinor", f.spinor}, {"axis", f.axis}}},
    });
  }
  j["counters"] = {
      {"degenerate_trials", report.degenerate_trials},
      {"not_decomposable", report.not_decomposable_count},
      {"degenerate_twist", report.degenerate_twist_count},
  };
  j["timing"] = {{"wall_ms", report.wall_ms}};
  return j;
}

inline nlohmann::ordered_json to_json(const BenchReport& report) {
  nlohmann::ordered_json j;
  j["config"] = {
      {"iters", report.config.iters},
      {"seed", report.config.seed},
  };
  j["iters"] = report.iters;
  j["methods"] = nlohmann::ordered_json::array();
  for (const auto& m : report.methods) {
    j["methods"].push_back({
        {"method", m.method},
        {"median_ns", m.median_ns},
        {"p95_ns", m.p95_ns},
        {"speedup_vs_direct", m.speedup_vs_direct},
    });
  }
  j["timing"] = {{"wall_ms", report.wall_ms}};
  return j;
}

}  // namespace swingtwist
