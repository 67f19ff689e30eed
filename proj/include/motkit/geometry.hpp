#pragma once

#include <stdexcept>

namespace motkit {

/// Axis-aligned bounding box in pixel coordinates, corner form.
/// Coordinates are real-valued; x2 >= x1 and y2 >= y1 for a valid box.
struct Box {
  double x1 = 0.0;
  double y1 = 0.0;
  double x2 = 0.0;
  double y2 = 0.0;

  double width() const { return x2 - x1; }
  double height() const { return y2 - y1; }
  double area() const { return width() * height(); }
};

/// Center/area/aspect parameterization of a box: u,v are the center in
/// pixels, s is the area and r the width/height ratio.
struct Observation {
  double u = 0.0;
  double v = 0.0;
  double s = 0.0;
  double r = 0.0;
};

/// Intersection-over-union of two boxes. Returns 0 for disjoint boxes and
/// for any pairing involving a zero-area box (never NaN).
double iou(const Box& a, const Box& b);

/// Convert a positive-area box to its (u, v, s, r) observation.
/// Throws std::invalid_argument for zero or negative width/height.
Observation box_to_observation(const Box& b);

/// Inverse of box_to_observation: w = sqrt(s*r), h = s/w, centered at (u, v).
/// Throws std::invalid_argument when s <= 0 or r <= 0.
Box observation_to_box(const Observation& o);

}  // namespace motkit
