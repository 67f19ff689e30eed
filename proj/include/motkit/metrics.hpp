#pragma once

#include <stdexcept>
#include <vector>

#include "motkit/mot_io.hpp"

namespace motkit {

/// How a ground-truth trajectory qualifies as mostly tracked.
///   coverage:     matched on >= 80% of its lifespan, any identity.
///   strict_label: a single hypothesis identity covers >= 80% of it.
/// Mostly lost is always coverage below 20% of the lifespan.
enum class MostlyTrackedMode { coverage, strict_label };

struct EvalOptions {
  MostlyTrackedMode mt_mode = MostlyTrackedMode::coverage;
};

struct MetricsReport {
  double mota = 0.0;  // 1 - (FN + FP + IDsw) / num_gt; can be negative
  double motp = 0.0;  // mean overlap across matched pairs
  double faf = 0.0;   // false positives per frame
  int mostly_tracked = 0;
  int partially_tracked = 0;
  int mostly_lost = 0;
  long long false_positives = 0;
  long long false_negatives = 0;
  long long id_switches = 0;
  long long fragmentations = 0;
  long long num_gt = 0;       // total ground-truth boxes
  int num_frames = 0;
  long long num_matches = 0;  // matched pairs over all frames
  double total_overlap = 0.0; // sum of matched overlaps (for aggregation)
};

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Frame-by-frame correspondence with temporal continuity: pairings above
/// 50% overlap carry over while they stay valid, the remainder is re-matched
/// optimally each frame, and misses/false alarms/identity switches are
/// accumulated into the report.
/// Throws EvalError on duplicate (frame, id) records in either stream.
MetricsReport evaluate(const std::vector<GtEntry>& gt, const std::vector<TrackOutput>& results,
                       const EvalOptions& options = {});

/// Combine per-sequence reports: counts are summed and the ratio metrics
/// recomputed from the summed counts.
MetricsReport aggregate(const std::vector<MetricsReport>& reports);

}  // namespace motkit
