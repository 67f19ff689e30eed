#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "motkit/geometry.hpp"

namespace motkit {

/// Dense rectangular matrix of pairwise overlaps, rows = detections,
/// cols = predicted track boxes. Entries live in [0, 1].
struct OverlapMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;  // row-major

  OverlapMatrix() = default;
  OverlapMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), values(r * c, 0.0) {}

  double& at(std::size_t i, std::size_t j) { return values[i * cols + j]; }
  double at(std::size_t i, std::size_t j) const { return values[i * cols + j]; }
};

/// Per-frame association outcome: matched (detection, track) pairs with
/// their overlap, plus the leftovers on both sides. Every detection index
/// and every track index appears exactly once across the structure.
struct FrameAssignment {
  struct Match {
    int detection = 0;
    int track = 0;
    double overlap = 0.0;
  };
  std::vector<Match> matches;
  std::vector<int> unmatched_detections;
  std::vector<int> unmatched_tracks;
};

/// Optimal bipartite assignment maximizing the total overlap (equivalently,
/// minimizing the total 1 - overlap). Handles rectangular and empty inputs;
/// the matching has size min(rows, cols). Deterministic: rows augmented in
/// increasing order.
std::vector<std::pair<int, int>> solve_assignment(const OverlapMatrix& overlaps);

/// Build the overlap matrix, solve it optimally, then demote matched pairs
/// below iou_min to unmatched on both sides.
FrameAssignment associate(std::span<const Box> detections, std::span<const Box> predictions,
                          double iou_min);

}  // namespace motkit
