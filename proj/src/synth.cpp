#include "motkit/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace motkit {

namespace {

struct MovingObject {
  double x = 0, y = 0;  // top-left at frame 1
  double w = 0, h = 0;
  double vx = 0, vy = 0;
  bool alive = true;
};

void validate(const ScenarioConfig& c) {
  auto fail = [](const char* msg) { throw std::invalid_argument(std::string("scenario: ") + msg); };
  if (c.num_objects < 0 || c.num_frames < 0) fail("object and frame counts must be nonnegative");
  if (c.image_width <= 0 || c.image_height <= 0) fail("image bounds must be positive");
  if (c.min_size <= 0 || c.max_size < c.min_size) fail("invalid box size range");
  if (c.min_speed < 0 || c.max_speed < c.min_speed) fail("invalid speed range");
  if (c.dropout_prob < 0 || c.dropout_prob > 1) fail("dropout probability outside [0, 1]");
  if (c.false_positive_rate < 0) fail("false-positive rate must be nonnegative");
  if (c.noise_sigma < 0) fail("noise sigma must be nonnegative");
  if (c.max_size > c.image_width || c.max_size > c.image_height)
    fail("objects larger than the image");
  if (!c.allow_crossing && c.num_objects > 0 &&
      c.image_height / c.num_objects < c.min_size)
    fail("too many lanes: objects larger than the image lanes");
}

}  // namespace

Scenario generate(const ScenarioConfig& config) {
  validate(config);
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };

  const double W = config.image_width;
  const double H = config.image_height;
  const int T = config.num_frames;

  std::vector<MovingObject> objects;
  objects.reserve(static_cast<std::size_t>(config.num_objects));
  const double lane_h = config.num_objects > 0 ? H / config.num_objects : H;

  for (int i = 0; i < config.num_objects; ++i) {
    MovingObject o;
    if (config.allow_crossing) {
      o.w = uniform(config.min_size, config.max_size);
      o.h = uniform(config.min_size, config.max_size);
      const double speed = uniform(config.min_speed, config.max_speed);
      const double angle = uniform(0.0, 2.0 * 3.14159265358979323846);
      o.vx = speed * std::cos(angle);
      o.vy = speed * std::sin(angle);
      o.x = uniform(0.0, W - o.w);
      o.y = uniform(0.0, H - o.h);
    } else {
      // Lane layout: fixed y per object, horizontal motion capped so the
      // object stays inside the image for all frames.
      o.w = uniform(config.min_size, config.max_size);
      o.h = uniform(config.min_size, std::min(config.max_size, lane_h));
      double vx = uniform(config.min_speed, config.max_speed);
      if (unit(rng) < 0.5) vx = -vx;
      const double max_travel = W - o.w;
      if (T > 1 && std::abs(vx) * (T - 1) > max_travel) {
        vx = std::copysign(max_travel / (T - 1), vx);
      }
      o.vx = vx;
      o.vy = 0.0;
      const double lo = std::max(0.0, -vx * (T - 1));
      const double hi = std::min(W - o.w, W - o.w - vx * (T - 1));
      o.x = uniform(lo, hi);
      o.y = i * lane_h + (lane_h - o.h) * 0.5;
    }
    objects.push_back(o);
  }

  Scenario scenario;
  std::normal_distribution<double> noise(0.0, config.noise_sigma > 0 ? config.noise_sigma : 1.0);

  for (int f = 1; f <= T; ++f) {
    const double t = static_cast<double>(f - 1);
    // Ground truth first, in object order.
    std::vector<std::pair<int, Box>> live;  // (object index, clipped box)
    for (int i = 0; i < config.num_objects; ++i) {
      auto& o = objects[static_cast<std::size_t>(i)];
      if (!o.alive) continue;
      const Box raw{o.x + o.vx * t, o.y + o.vy * t, o.x + o.vx * t + o.w, o.y + o.vy * t + o.h};
      const Box clipped{std::max(raw.x1, 0.0), std::max(raw.y1, 0.0), std::min(raw.x2, W),
                        std::min(raw.y2, H)};
      if (clipped.width() < 1.0 || clipped.height() < 1.0) {
        o.alive = false;  // exited the image; terminated for good
        continue;
      }
      scenario.gt.push_back(GtEntry{f, i + 1, clipped});
      live.emplace_back(i, clipped);
    }

    // Detections: corrupted copies of the live boxes.
    for (const auto& [i, box] : live) {
      (void)i;
      if (config.dropout_prob > 0.0 && unit(rng) < config.dropout_prob) continue;
      Box det = box;
      if (config.noise_sigma > 0.0) {
        det.x1 += noise(rng);
        det.y1 += noise(rng);
        det.x2 += noise(rng);
        det.y2 += noise(rng);
        if (det.x2 <= det.x1) det.x2 = det.x1 + 0.1;
        if (det.y2 <= det.y1) det.y2 = det.y1 + 0.1;
      }
      scenario.detections.push_back(Detection{f, det, 1.0});
    }

    // Spurious detections, uniform over the image.
    if (config.false_positive_rate > 0.0) {
      std::poisson_distribution<int> spurious(config.false_positive_rate);
      const int count = spurious(rng);
      for (int k = 0; k < count; ++k) {
        const double w = uniform(config.min_size, config.max_size);
        const double h = uniform(config.min_size, config.max_size);
        const double x = uniform(0.0, W - w);
        const double y = uniform(0.0, H - h);
        scenario.detections.push_back(Detection{f, Box{x, y, x + w, y + h}, 1.0});
      }
    }
  }
  return scenario;
}

Scenario occlusion_scenario() {
  // Small 20x20 target moving right, large 80x80 occluder moving left,
  // shared lane at y = 100 inside a 640x480 image. Their x-extents overlap
  // exactly on frames 18-22.
  constexpr int kFrames = 40;
  Scenario scenario;
  for (int f = 1; f <= kFrames; ++f) {
    const Box small{30.0 + 10.0 * f, 90.0, 50.0 + 10.0 * f, 110.0};
    const Box large{400.0 - 10.0 * f, 60.0, 480.0 - 10.0 * f, 140.0};
    scenario.gt.push_back(GtEntry{f, 1, small});
    scenario.gt.push_back(GtEntry{f, 2, large});

    const bool occluded = iou(small, large) > 0.0;
    if (!occluded) {
      scenario.detections.push_back(Detection{f, small, 1.0});
    }
    scenario.detections.push_back(Detection{f, large, 1.0});
  }
  return scenario;
}

}  // namespace motkit
