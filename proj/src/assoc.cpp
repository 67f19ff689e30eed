#include "motkit/assoc.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace motkit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Shortest-augmenting-path solver for the rectangular min-cost assignment
// problem (Jonker-Volgenant style, with dual potentials). Requires
// nr <= nc and finite costs; returns col4row of size nr.
std::vector<int> lsap_min(std::size_t nr, std::size_t nc, const std::vector<double>& cost) {
  assert(nr <= nc);
  std::vector<double> u(nr, 0.0), v(nc, 0.0), shortest(nc, 0.0);
  std::vector<int> path(nc, -1), col4row(nr, -1), row4col(nc, -1);
  std::vector<char> in_rows(nr, 0), in_cols(nc, 0);

  for (std::size_t cur = 0; cur < nr; ++cur) {
    std::fill(in_rows.begin(), in_rows.end(), 0);
    std::fill(in_cols.begin(), in_cols.end(), 0);
    std::fill(shortest.begin(), shortest.end(), kInf);

    double min_val = 0.0;
    std::size_t i = cur;
    int sink = -1;
    while (sink == -1) {
      in_rows[i] = 1;
      double lowest = kInf;
      std::size_t index = nc;
      for (std::size_t j = 0; j < nc; ++j) {
        if (in_cols[j]) continue;
        const double reduced = min_val + cost[i * nc + j] - u[i] - v[j];
        if (reduced < shortest[j]) {
          path[j] = static_cast<int>(i);
          shortest[j] = reduced;
        }
        // Among equally short columns, prefer an unassigned one.
        if (shortest[j] < lowest || (shortest[j] == lowest && row4col[j] == -1)) {
          lowest = shortest[j];
          index = j;
        }
      }
      assert(index < nc);
      min_val = lowest;
      in_cols[index] = 1;
      if (row4col[index] == -1) {
        sink = static_cast<int>(index);
      } else {
        i = static_cast<std::size_t>(row4col[index]);
      }
    }

    u[cur] += min_val;
    for (std::size_t r = 0; r < nr; ++r) {
      if (in_rows[r] && r != cur) {
        u[r] += min_val - shortest[static_cast<std::size_t>(col4row[r])];
      }
    }
    for (std::size_t c = 0; c < nc; ++c) {
      if (in_cols[c]) {
        v[c] -= min_val - shortest[c];
      }
    }

    // Augment along the stored predecessor path.
    int j = sink;
    while (true) {
      const int r = path[static_cast<std::size_t>(j)];
      row4col[static_cast<std::size_t>(j)] = r;
      const int freed = col4row[static_cast<std::size_t>(r)];
      col4row[static_cast<std::size_t>(r)] = j;
      j = freed;
      if (static_cast<std::size_t>(r) == cur) break;
    }
  }
  return col4row;
}

}  // namespace

std::vector<std::pair<int, int>> solve_assignment(const OverlapMatrix& overlaps) {
  const std::size_t m = overlaps.rows;
  const std::size_t n = overlaps.cols;
  std::vector<std::pair<int, int>> pairs;
  if (m == 0 || n == 0) {
    return pairs;
  }

  // Minimize 1 - overlap; transpose so rows are the smaller side.
  const bool transpose = m > n;
  const std::size_t nr = transpose ? n : m;
  const std::size_t nc = transpose ? m : n;
  std::vector<double> cost(nr * nc);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) {
      cost[i * nc + j] = 1.0 - (transpose ? overlaps.at(j, i) : overlaps.at(i, j));
    }
  }

  const auto col4row = lsap_min(nr, nc, cost);
  pairs.reserve(nr);
  for (std::size_t i = 0; i < nr; ++i) {
    const int r = transpose ? col4row[i] : static_cast<int>(i);
    const int c = transpose ? static_cast<int>(i) : col4row[i];
    pairs.emplace_back(r, c);
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

FrameAssignment associate(std::span<const Box> detections, std::span<const Box> predictions,
                          double iou_min) {
  const std::size_t m = detections.size();
  const std::size_t n = predictions.size();

  FrameAssignment out;
  std::vector<char> det_matched(m, 0), trk_matched(n, 0);

  if (m > 0 && n > 0) {
    OverlapMatrix overlaps(m, n);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        overlaps.at(i, j) = iou(detections[i], predictions[j]);
      }
    }
    for (const auto& [r, c] : solve_assignment(overlaps)) {
      const double ov = overlaps.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
      if (ov >= iou_min) {
        out.matches.push_back({r, c, ov});
        det_matched[static_cast<std::size_t>(r)] = 1;
        trk_matched[static_cast<std::size_t>(c)] = 1;
      }
    }
  }

  for (std::size_t i = 0; i < m; ++i) {
    if (!det_matched[i]) out.unmatched_detections.push_back(static_cast<int>(i));
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!trk_matched[j]) out.unmatched_tracks.push_back(static_cast<int>(j));
  }
  return out;
}

}  // namespace motkit
