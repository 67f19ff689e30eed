#pragma once

#include <span>
#include <vector>

#include "motkit/assoc.hpp"
#include "motkit/kalman.hpp"
#include "motkit/mot_io.hpp"

namespace motkit {

struct TrackerConfig {
  int max_age = 1;      // consecutive misses a track survives
  int min_hits = 3;     // probationary length before a track is reported
  double iou_min = 0.3; // association gate
  // Report already-updated tracks during the first min_hits frames of a
  // sequence even before their streak is long enough; without this the
  // start of every sequence is unreportable. Newly created tracks are
  // still withheld unless min_hits is 1.
  bool warmup_exemption = true;
  FilterParams filter;
};

struct Track {
  int id = 0;
  StateVector state;
  Covariance cov;
  int time_since_update = 0;
  int hits = 0;        // total matched updates, counting the spawning detection
  int hit_streak = 0;  // consecutive matched frames
  int age = 0;         // frames since creation
};

/// Association record of the most recent step, in terms of stable track ids.
struct StepLog {
  struct Match {
    int detection = 0;
    int track_id = 0;
    double overlap = 0.0;
  };
  int frame = 0;
  std::vector<Match> matches;
  std::vector<int> unmatched_detections;
  std::vector<int> unmatched_track_ids;
};

/// Reporting rule: a track is reported when it was updated this frame and
/// either its streak passed probation or the sequence is still warming up.
bool confirm(const Track& track, const TrackerConfig& config, int frame);

/// Online tracker: one instance per sequence, stepped once per frame.
class Tracker {
 public:
  explicit Tracker(TrackerConfig config = {});

  /// Process the next frame's detections (confidence filtering is the
  /// caller's job). Predicts all tracks, associates, updates matches,
  /// spawns tracks for unmatched detections, prunes stale tracks, and
  /// returns the confirmed tracks' posterior boxes.
  std::vector<TrackOutput> step(std::span<const Box> detections);
  std::vector<TrackOutput> step(std::initializer_list<Box> detections) {
    return step(std::span<const Box>(detections.begin(), detections.size()));
  }

  int frame_count() const { return frame_count_; }
  std::size_t track_count() const { return tracks_.size(); }
  const std::vector<Track>& tracks() const { return tracks_; }
  const StepLog& last_log() const { return log_; }
  const TrackerConfig& config() const { return config_; }

 private:
  TrackerConfig config_;
  std::vector<Track> tracks_;
  StepLog log_;
  int frame_count_ = 0;
  int next_id_ = 1;
};

class SequenceOrderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SequenceRun {
  std::vector<TrackOutput> outputs;
  int frames = 0;
  double tracking_seconds = 0.0;  // stepping only; grouping excluded
};

/// Drive a Tracker over a whole detection stream. Detections must arrive
/// grouped by non-decreasing frame; every frame from 1 through the last
/// (or num_frames if larger) is stepped, including empty ones.
/// Throws SequenceOrderError on out-of-order input.
SequenceRun run_sequence_timed(const std::vector<Detection>& detections,
                               const TrackerConfig& config, int num_frames = 0);

std::vector<TrackOutput> run_sequence(const std::vector<Detection>& detections,
                                      const TrackerConfig& config, int num_frames = 0);

}  // namespace motkit
