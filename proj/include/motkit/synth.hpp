#pragma once

#include <cstdint>
#include <vector>

#include "motkit/mot_io.hpp"

namespace motkit {

/// Knobs of the synthetic constant-velocity scene generator. Everything is
/// deterministic for a fixed seed.
struct ScenarioConfig {
  int num_objects = 10;
  int num_frames = 100;
  double min_speed = 0.5;   // px/frame
  double max_speed = 3.0;
  double min_size = 20.0;   // box side, px
  double max_size = 60.0;
  double image_width = 1920.0;
  double image_height = 1080.0;
  double noise_sigma = 0.0;        // per-corner Gaussian noise on detections
  double dropout_prob = 0.0;       // chance a live object goes undetected
  double false_positive_rate = 0.0;  // expected spurious detections per frame
  std::uint64_t seed = 0;
  // When false, objects move in disjoint horizontal lanes and stay inside
  // the image for the whole run; when true, they spawn and move freely and
  // may exit (their ground truth ends there).
  bool allow_crossing = false;
};

struct Scenario {
  std::vector<GtEntry> gt;
  std::vector<Detection> detections;
};

/// Generate ground truth and corruptible detections for the configured
/// scene. Throws std::invalid_argument on infeasible configurations
/// (objects larger than the image, probabilities outside [0, 1], ...).
Scenario generate(const ScenarioConfig& config);

/// Fixed two-object scene: a large box sweeps over a small one; on frames
/// where the two overlap only the large object is detected, while ground
/// truth keeps both. 40 frames, the occlusion spans frames 18-22.
Scenario occlusion_scenario();

}  // namespace motkit
