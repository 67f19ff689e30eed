#include "motkit/metrics.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "motkit/assoc.hpp"

namespace motkit {

namespace {

constexpr double kOverlapGate = 0.5;  // true positives need at least 50% overlap

struct FrameItem {
  int id = 0;
  Box box;
};

struct GtTrackStats {
  int present = 0;
  int matched = 0;
  int last_hyp = -1;                   // most recent matched hypothesis id; gaps keep it
  bool ever_matched = false;
  bool matched_at_last_presence = false;
  std::unordered_map<int, int> label_counts;  // hypothesis id -> matched frames
};

template <typename Record>
std::map<int, std::vector<FrameItem>> group_frames(const std::vector<Record>& records,
                                                   const char* stream_name) {
  std::map<int, std::vector<FrameItem>> frames;
  std::set<std::pair<int, int>> seen;
  for (const auto& r : records) {
    if (!seen.insert({r.frame, r.id}).second) {
      throw EvalError(std::string(stream_name) + ": duplicate (frame, id) = (" +
                      std::to_string(r.frame) + ", " + std::to_string(r.id) + ")");
    }
    frames[r.frame].push_back(FrameItem{r.id, r.box});
  }
  return frames;
}

void finish_ratios(MetricsReport& rep) {
  if (rep.num_gt > 0) {
    rep.mota = 1.0 - static_cast<double>(rep.false_negatives + rep.false_positives +
                                         rep.id_switches) /
                         static_cast<double>(rep.num_gt);
  } else {
    rep.mota = (rep.false_positives + rep.id_switches == 0) ? 1.0 : 0.0;
  }
  rep.motp = rep.num_matches > 0 ? rep.total_overlap / static_cast<double>(rep.num_matches) : 0.0;
  rep.faf = rep.num_frames > 0
                ? static_cast<double>(rep.false_positives) / static_cast<double>(rep.num_frames)
                : 0.0;
}

}  // namespace

MetricsReport evaluate(const std::vector<GtEntry>& gt, const std::vector<TrackOutput>& results,
                       const EvalOptions& options) {
  const auto gt_frames = group_frames(gt, "ground truth");
  const auto hyp_frames = group_frames(results, "results");

  MetricsReport rep;
  rep.num_gt = static_cast<long long>(gt.size());
  int last_frame = 0;
  if (!gt_frames.empty()) last_frame = std::max(last_frame, gt_frames.rbegin()->first);
  if (!hyp_frames.empty()) last_frame = std::max(last_frame, hyp_frames.rbegin()->first);
  rep.num_frames = last_frame;

  std::unordered_map<int, GtTrackStats> stats;
  std::unordered_map<int, int> correspondence;  // gt id -> hyp id, valid last frame

  static const std::vector<FrameItem> kEmpty;
  auto frame_of = [](const std::map<int, std::vector<FrameItem>>& m,
                     int f) -> const std::vector<FrameItem>& {
    const auto it = m.find(f);
    return it == m.end() ? kEmpty : it->second;
  };

  for (int f = 1; f <= last_frame; ++f) {
    const auto& gts = frame_of(gt_frames, f);
    const auto& hyps = frame_of(hyp_frames, f);

    std::unordered_map<int, std::size_t> hyp_index;
    for (std::size_t j = 0; j < hyps.size(); ++j) hyp_index[hyps[j].id] = j;

    std::vector<char> gt_taken(gts.size(), 0), hyp_taken(hyps.size(), 0);
    std::vector<std::tuple<std::size_t, std::size_t, double>> paired;  // (gt idx, hyp idx, iou)

    // Carry over still-valid pairings from the previous frame.
    std::unordered_map<int, int> next_correspondence;
    for (std::size_t i = 0; i < gts.size(); ++i) {
      const auto it = correspondence.find(gts[i].id);
      if (it == correspondence.end()) continue;
      const auto jt = hyp_index.find(it->second);
      if (jt == hyp_index.end()) continue;
      const double ov = iou(gts[i].box, hyps[jt->second].box);
      if (ov >= kOverlapGate) {
        gt_taken[i] = 1;
        hyp_taken[jt->second] = 1;
        paired.emplace_back(i, jt->second, ov);
      }
    }

    // Optimal matching over the remainder, gated at 50% overlap.
    std::vector<std::size_t> free_gt, free_hyp;
    for (std::size_t i = 0; i < gts.size(); ++i)
      if (!gt_taken[i]) free_gt.push_back(i);
    for (std::size_t j = 0; j < hyps.size(); ++j)
      if (!hyp_taken[j]) free_hyp.push_back(j);

    if (!free_gt.empty() && !free_hyp.empty()) {
      OverlapMatrix overlaps(free_gt.size(), free_hyp.size());
      for (std::size_t a = 0; a < free_gt.size(); ++a)
        for (std::size_t b = 0; b < free_hyp.size(); ++b)
          overlaps.at(a, b) = iou(gts[free_gt[a]].box, hyps[free_hyp[b]].box);
      for (const auto& [a, b] : solve_assignment(overlaps)) {
        const double ov = overlaps.at(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
        if (ov >= kOverlapGate) {
          const std::size_t i = free_gt[static_cast<std::size_t>(a)];
          const std::size_t j = free_hyp[static_cast<std::size_t>(b)];
          gt_taken[i] = 1;
          hyp_taken[j] = 1;
          paired.emplace_back(i, j, ov);
        }
      }
    }

    for (const auto& [i, j, ov] : paired) {
      const int gid = gts[i].id;
      const int hid = hyps[j].id;
      auto& st = stats[gid];
      st.matched += 1;
      st.label_counts[hid] += 1;
      if (st.last_hyp != -1 && st.last_hyp != hid) {
        rep.id_switches += 1;
      }
      if (st.ever_matched && !st.matched_at_last_presence) {
        rep.fragmentations += 1;
      }
      st.last_hyp = hid;
      st.ever_matched = true;
      rep.num_matches += 1;
      rep.total_overlap += ov;
      next_correspondence[gid] = hid;
    }

    for (std::size_t i = 0; i < gts.size(); ++i) {
      auto& st = stats[gts[i].id];
      st.present += 1;
      st.matched_at_last_presence = gt_taken[i] != 0;
      if (!gt_taken[i]) rep.false_negatives += 1;
    }
    for (std::size_t j = 0; j < hyps.size(); ++j) {
      if (!hyp_taken[j]) rep.false_positives += 1;
    }

    correspondence = std::move(next_correspondence);
  }

  for (const auto& [gid, st] : stats) {
    (void)gid;
    if (st.present == 0) continue;
    const double coverage = static_cast<double>(st.matched) / static_cast<double>(st.present);
    double mt_ratio = coverage;
    if (options.mt_mode == MostlyTrackedMode::strict_label) {
      int best = 0;
      for (const auto& [hid, count] : st.label_counts) {
        (void)hid;
        best = std::max(best, count);
      }
      mt_ratio = static_cast<double>(best) / static_cast<double>(st.present);
    }
    if (mt_ratio >= 0.8) {
      rep.mostly_tracked += 1;
    } else if (coverage < 0.2) {
      rep.mostly_lost += 1;
    } else {
      rep.partially_tracked += 1;
    }
  }

  finish_ratios(rep);
  return rep;
}

MetricsReport aggregate(const std::vector<MetricsReport>& reports) {
  MetricsReport total;
  for (const auto& r : reports) {
    total.mostly_tracked += r.mostly_tracked;
    total.partially_tracked += r.partially_tracked;
    total.mostly_lost += r.mostly_lost;
    total.false_positives += r.false_positives;
    total.false_negatives += r.false_negatives;
    total.id_switches += r.id_switches;
    total.fragmentations += r.fragmentations;
    total.num_gt += r.num_gt;
    total.num_frames += r.num_frames;
    total.num_matches += r.num_matches;
    total.total_overlap += r.total_overlap;
  }
  finish_ratios(total);
  return total;
}

}  // namespace motkit
