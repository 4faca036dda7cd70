#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "casimir/geometry.hpp"
#include "casimir/kernels.hpp"
#include "casimir/thermal.hpp"

namespace casimir {

enum class Task { Energy, Force, Sweep, Series, Validate };

struct SweepSpec {
  std::string parameter = "R";  // "R" (center distance) or "T" (temperature)
  double min = 0.0;
  double max = 0.0;
  int points = 2;
  bool log_scale = false;
};

struct SceneConfig {
  FieldKind kind = FieldKind::em();
  std::vector<Body> bodies;
  ThermalSpec thermal = ZeroTemperature{};
  QuadratureSpec quad;
  Task task = Task::Energy;
  std::optional<SweepSpec> sweep;
  double force_dr = 1e-3;  // relative to the current separation
  bool force_richardson = false;
  int series_n_max = 4;
};

struct ParseOutcome {
  std::optional<SceneConfig> config;
  std::vector<std::string> errors;  // path-addressed, one per violation
};

// Parse and validate a JSON scene description (schema/casimir_scene.schema.json).
ParseOutcome parse_config(const std::string& text);

// Exit codes: 0 success, 2 validation failure, 3 convergence failure,
// 4 validate-task check failure, 1 internal error.
int run_task(const SceneConfig& config, std::ostream& out);

}  // namespace casimir
