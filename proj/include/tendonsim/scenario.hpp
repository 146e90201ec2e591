#ifndef TENDONSIM_SCENARIO_HPP
#define TENDONSIM_SCENARIO_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tendonsim/joint.hpp"
#include "tendonsim/structures.hpp"

namespace tendonsim {

enum class ScenarioKind {
  Sweep,
  TorqueCurve,
  ScrewHome,
  SoftLimit,
  MomentArm,
  SlipStability,
  GradientCheck,
};

const char* to_string(ScenarioKind kind);

enum class SweepAxisChoice { X, Y, Both };

struct SweepScenario {
  SweepAxisChoice axis = SweepAxisChoice::Both;
  double max_displacement_mm = 20.0;
  int steps = 201;
  AttachmentLayout layout;
  WireParams wire;
};

struct TorqueCurveScenario {
  double pitch_fixed_rad = 0.0;
  double yaw_max_rad = 0.35;
  int steps = 141;
  CollateralGeometry collateral;
};

struct ScrewHomeScenario {
  double initial_yaw_max_rad = 0.2617993877991494;  // 15 deg
  double pitch_start_rad = 1.9600047499896520;      // 112.3 deg
  int pitch_steps = 100;
  int trials = 10;
  CollateralGeometry collateral;
};

struct SoftLimitScenario {
  double angle_min_rad = -1.0471975511965976;  // -60 deg
  double angle_max_rad = 0.7853981633974483;   // +45 deg
  int steps = 2101;
  WrappedHinge hip;
};

// Patella-style wrap: tendon from a proximal anchor over a circular boss at
// the joint center down to a tibial anchor that swings with flexion.
struct PatellaGeometry {
  Vec2 proximal_anchor{-14.0, 95.0};
  Vec2 distal_anchor{-10.0, -80.0};
  CircleObstacle boss{{0.0, 0.0}, 15.0};
  Vec2 pivot{0.0, 0.0};
};

struct MomentArmScenario {
  double flexion_max_rad = 1.0471975511965976;  // 60 deg
  int steps = 61;
  PatellaGeometry patella;
};

struct SlipStabilityScenario {
  Vec3 anchor_a{-100.0, 0.0, 10.0};
  Vec3 anchor_b{100.0, 0.0, 10.0};
  Vec3 sphere_center{0.0, 0.0, 0.0};
  double sphere_radius = 20.0;
  int samples = 181;
};

struct GradientCheckScenario {
  int configurations = 100;
  double fd_step_rel = 1e-6;
};

struct Scenario {
  std::string name;
  ScenarioKind kind = ScenarioKind::Sweep;
  std::uint64_t seed = 1;
  std::variant<SweepScenario, TorqueCurveScenario, ScrewHomeScenario, SoftLimitScenario,
               MomentArmScenario, SlipStabilityScenario, GradientCheckScenario>
      params;
};

struct RunOptions {
  std::filesystem::path out_dir = ".";
  bool svg = false;
  std::optional<std::uint64_t> seed_override;
};

// Parses and validates scenario JSON text. Every kind has a key schema;
// missing keys are reported by name and unknown keys are rejected. Throws
// ConfigError on any problem.
Scenario parse_scenario_text(const std::string& text);

// Loads a scenario from a file (IoError when unreadable) or, when no such
// file exists, from the bundled scenario of that name.
Scenario load_scenario(const std::string& file_or_bundled_name);

// Bundled scenario name -> JSON text.
const std::map<std::string, std::string>& bundled_scenarios();

// Runs the scenario and writes its CSV (and optional SVG) artifacts into
// options.out_dir as <name>.csv / <name>.svg (sweeps over both axes emit
// <name>_x.* and <name>_y.*). Files are written whole via temp-and-rename.
// Throws ConfigError / domain errors / IoError.
void execute_scenario(const Scenario& scenario, const RunOptions& options);

// execute_scenario with errors mapped to the process exit contract:
// 0 success, 2 configuration, 3 domain/numeric, 4 I/O. Prints one
// diagnostic line to stderr on failure.
int run_scenario(const Scenario& scenario, const RunOptions& options);

}  // namespace tendonsim

#endif  // TENDONSIM_SCENARIO_HPP
