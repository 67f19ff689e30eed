#include "motkit/tracker.hpp"

#include <algorithm>
#include <chrono>

namespace motkit {

bool confirm(const Track& track, const TrackerConfig& config, int frame) {
  if (track.time_since_update != 0) {
    return false;
  }
  if (track.hit_streak >= config.min_hits) {
    return true;
  }
  // Warm-up: during the first min_hits frames a pre-existing track counts as
  // confirmed as soon as it is re-matched. Tracks born this frame (age 0)
  // get no exemption, so false positives stay suppressed at sequence start.
  return config.warmup_exemption && frame <= config.min_hits && track.age > 0;
}

Tracker::Tracker(TrackerConfig config) : config_(std::move(config)) {}

std::vector<TrackOutput> Tracker::step(std::span<const Box> detections) {
  ++frame_count_;

  // 1. Advance every track one frame.
  std::vector<Box> predicted;
  predicted.reserve(tracks_.size());
  for (auto& track : tracks_) {
    auto fs = predict(track.state, track.cov, config_.filter);
    track.state = fs.state;
    track.cov = fs.cov;
    track.age += 1;
    predicted.push_back(state_box(track.state));
  }

  // 2. Associate detections with predicted boxes.
  const FrameAssignment assignment = associate(detections, predicted, config_.iou_min);

  log_ = StepLog{};
  log_.frame = frame_count_;
  log_.unmatched_detections = assignment.unmatched_detections;
  for (const int t : assignment.unmatched_tracks) {
    log_.unmatched_track_ids.push_back(tracks_[static_cast<std::size_t>(t)].id);
  }

  // 3. Correct matched tracks with their detection.
  for (const auto& m : assignment.matches) {
    auto& track = tracks_[static_cast<std::size_t>(m.track)];
    const auto obs = box_to_observation(detections[static_cast<std::size_t>(m.detection)]);
    auto fs = update(track.state, track.cov, obs, config_.filter);
    track.state = fs.state;
    track.cov = fs.cov;
    track.time_since_update = 0;
    track.hits += 1;
    track.hit_streak += 1;
    log_.matches.push_back({m.detection, track.id, m.overlap});
  }

  // 4. Age out the streaks of unmatched tracks.
  for (const int t : assignment.unmatched_tracks) {
    auto& track = tracks_[static_cast<std::size_t>(t)];
    track.time_since_update += 1;
    track.hit_streak = 0;
  }

  // 5. Every unmatched detection signifies an untracked object.
  for (const int d : assignment.unmatched_detections) {
    const auto obs = box_to_observation(detections[static_cast<std::size_t>(d)]);
    auto fs = init_filter(obs, config_.filter);
    Track track;
    track.id = next_id_++;
    track.state = fs.state;
    track.cov = fs.cov;
    track.time_since_update = 0;
    track.hits = 1;
    track.hit_streak = 1;
    track.age = 0;
    tracks_.push_back(track);
  }

  // 6. Drop tracks that have coasted past max_age.
  std::erase_if(tracks_, [this](const Track& t) { return t.time_since_update > config_.max_age; });

  // 7. Report confirmed tracks from their posterior state.
  std::vector<TrackOutput> outputs;
  for (const auto& track : tracks_) {
    if (confirm(track, config_, frame_count_)) {
      outputs.push_back(TrackOutput{frame_count_, track.id, state_box(track.state)});
    }
  }
  return outputs;
}

SequenceRun run_sequence_timed(const std::vector<Detection>& detections,
                               const TrackerConfig& config, int num_frames) {
  // Group by frame up front so the timed region is pure tracking.
  int last_frame = num_frames;
  for (const auto& d : detections) {
    last_frame = std::max(last_frame, d.frame);
  }
  std::vector<std::vector<Box>> frames(static_cast<std::size_t>(last_frame) + 1);
  int prev = 0;
  for (const auto& d : detections) {
    if (d.frame < prev) {
      throw SequenceOrderError("detections out of order: frame " + std::to_string(d.frame) +
                               " after frame " + std::to_string(prev));
    }
    prev = d.frame;
    frames[static_cast<std::size_t>(d.frame)].push_back(d.box);
  }

  SequenceRun run;
  run.frames = last_frame;
  Tracker tracker(config);

  const auto start = std::chrono::steady_clock::now();
  for (int f = 1; f <= last_frame; ++f) {
    auto outputs = tracker.step(frames[static_cast<std::size_t>(f)]);
    run.outputs.insert(run.outputs.end(), outputs.begin(), outputs.end());
  }
  const auto stop = std::chrono::steady_clock::now();
  run.tracking_seconds = std::chrono::duration<double>(stop - start).count();
  return run;
}

std::vector<TrackOutput> run_sequence(const std::vector<Detection>& detections,
                                      const TrackerConfig& config, int num_frames) {
  return run_sequence_timed(detections, config, num_frames).outputs;
}

}  // namespace motkit
