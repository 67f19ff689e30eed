#include "motkit/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace motkit {

double iou(const Box& a, const Box& b) {
  const double iw = std::min(a.x2, b.x2) - std::max(a.x1, b.x1);
  const double ih = std::min(a.y2, b.y2) - std::max(a.y1, b.y1);
  if (iw <= 0.0 || ih <= 0.0) {
    return 0.0;
  }
  const double inter = iw * ih;
  const double uni = a.area() + b.area() - inter;
  if (uni <= 0.0) {
    return 0.0;
  }
  return inter / uni;
}

Observation box_to_observation(const Box& b) {
  const double w = b.width();
  const double h = b.height();
  if (w <= 0.0 || h <= 0.0) {
    throw std::invalid_argument("box_to_observation: degenerate box (zero width or height)");
  }
  return Observation{(b.x1 + b.x2) * 0.5, (b.y1 + b.y2) * 0.5, w * h, w / h};
}

Box observation_to_box(const Observation& o) {
  if (!(o.s > 0.0) || !(o.r > 0.0)) {
    throw std::invalid_argument("observation_to_box: area and aspect ratio must be positive");
  }
  const double w = std::sqrt(o.s * o.r);
  const double h = o.s / w;
  return Box{o.u - w * 0.5, o.v - h * 0.5, o.u + w * 0.5, o.v + h * 0.5};
}

}  // namespace motkit
