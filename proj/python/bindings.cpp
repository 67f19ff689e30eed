#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "motkit/metrics.hpp"
#include "motkit/synth.hpp"
#include "motkit/tracker.hpp"

namespace py = pybind11;
using namespace motkit;

namespace {

std::vector<std::vector<double>> cov_rows(const Covariance& p) {
  std::vector<std::vector<double>> rows(7, std::vector<double>(7));
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) rows[i][j] = p(i, j);
  return rows;
}

}  // namespace

PYBIND11_MODULE(_motkit, m) {
  m.doc() = "Online multi-object tracking: constant-velocity box filter, "
            "optimal overlap assignment, track lifecycle management, MOT "
            "text I/O, CLEAR-style evaluation, and synthetic scenes.";

  py::class_<Box>(m, "Box")
      .def(py::init<>())
      .def(py::init<double, double, double, double>(), py::arg("x1"), py::arg("y1"),
           py::arg("x2"), py::arg("y2"))
      .def_readwrite("x1", &Box::x1)
      .def_readwrite("y1", &Box::y1)
      .def_readwrite("x2", &Box::x2)
      .def_readwrite("y2", &Box::y2)
      .def("width", &Box::width)
      .def("height", &Box::height)
      .def("area", &Box::area)
      .def("__repr__", [](const Box& b) {
        std::ostringstream os;
        os << "Box(" << b.x1 << ", " << b.y1 << ", " << b.x2 << ", " << b.y2 << ")";
        return os.str();
      });

  py::class_<Observation>(m, "Observation")
      .def(py::init<>())
      .def(py::init<double, double, double, double>(), py::arg("u"), py::arg("v"), py::arg("s"),
           py::arg("r"))
      .def_readwrite("u", &Observation::u)
      .def_readwrite("v", &Observation::v)
      .def_readwrite("s", &Observation::s)
      .def_readwrite("r", &Observation::r);

  m.def("iou", &iou, py::arg("a"), py::arg("b"), "Intersection-over-union of two boxes");
  m.def("box_to_observation", &box_to_observation, py::arg("box"));
  m.def("observation_to_box", &observation_to_box, py::arg("obs"));

  // filter
  py::class_<StateVector>(m, "StateVector")
      .def(py::init<>())
      .def_readwrite("u", &StateVector::u)
      .def_readwrite("v", &StateVector::v)
      .def_readwrite("s", &StateVector::s)
      .def_readwrite("r", &StateVector::r)
      .def_readwrite("du", &StateVector::du)
      .def_readwrite("dv", &StateVector::dv)
      .def_readwrite("ds", &StateVector::ds);

  py::class_<FilterParams>(m, "FilterParams")
      .def(py::init<>())
      .def_readwrite("process_noise_diag", &FilterParams::process_noise_diag)
      .def_readwrite("measurement_noise_diag", &FilterParams::measurement_noise_diag)
      .def_readwrite("initial_covariance_diag", &FilterParams::initial_covariance_diag);

  py::class_<FilterState>(m, "FilterState")
      .def_readwrite("state", &FilterState::state)
      .def_property_readonly("cov", [](const FilterState& f) { return cov_rows(f.cov); });

  m.def("init_filter", &init_filter, py::arg("obs"), py::arg("params") = FilterParams{});
  m.def(
      "predict",
      [](const FilterState& fs, const FilterParams& p) { return predict(fs.state, fs.cov, p); },
      py::arg("filter"), py::arg("params") = FilterParams{});
  m.def(
      "update",
      [](const FilterState& fs, const Observation& z, const FilterParams& p) {
        return update(fs.state, fs.cov, z, p);
      },
      py::arg("filter"), py::arg("obs"), py::arg("params") = FilterParams{});
  m.def("state_box", &state_box, py::arg("state"));

  // association
  py::class_<FrameAssignment::Match>(m, "Match")
      .def_readonly("detection", &FrameAssignment::Match::detection)
      .def_readonly("track", &FrameAssignment::Match::track)
      .def_readonly("overlap", &FrameAssignment::Match::overlap);

  py::class_<FrameAssignment>(m, "FrameAssignment")
      .def_readonly("matches", &FrameAssignment::matches)
      .def_readonly("unmatched_detections", &FrameAssignment::unmatched_detections)
      .def_readonly("unmatched_tracks", &FrameAssignment::unmatched_tracks);

  m.def(
      "solve_assignment",
      [](const std::vector<std::vector<double>>& rows) {
        OverlapMatrix overlaps(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t i = 0; i < overlaps.rows; ++i) {
          if (rows[i].size() != overlaps.cols) {
            throw std::invalid_argument("ragged overlap matrix");
          }
          for (std::size_t j = 0; j < overlaps.cols; ++j) overlaps.at(i, j) = rows[i][j];
        }
        return solve_assignment(overlaps);
      },
      py::arg("overlaps"),
      "Optimal assignment maximizing total overlap; returns (row, col) pairs");

  m.def(
      "associate",
      [](const std::vector<Box>& dets, const std::vector<Box>& preds, double iou_min) {
        return associate(dets, preds, iou_min);
      },
      py::arg("detections"), py::arg("predictions"), py::arg("iou_min"));

  // tracker
  py::class_<TrackerConfig>(m, "TrackerConfig")
      .def(py::init<>())
      .def_readwrite("max_age", &TrackerConfig::max_age)
      .def_readwrite("min_hits", &TrackerConfig::min_hits)
      .def_readwrite("iou_min", &TrackerConfig::iou_min)
      .def_readwrite("warmup_exemption", &TrackerConfig::warmup_exemption)
      .def_readwrite("filter", &TrackerConfig::filter);

  py::class_<Track>(m, "Track")
      .def_readonly("id", &Track::id)
      .def_readonly("time_since_update", &Track::time_since_update)
      .def_readonly("hits", &Track::hits)
      .def_readonly("hit_streak", &Track::hit_streak)
      .def_readonly("age", &Track::age)
      .def_property_readonly("box", [](const Track& t) { return state_box(t.state); });

  py::class_<TrackOutput>(m, "TrackOutput")
      .def(py::init<>())
      .def(py::init<int, int, Box>(), py::arg("frame"), py::arg("id"), py::arg("box"))
      .def_readwrite("frame", &TrackOutput::frame)
      .def_readwrite("id", &TrackOutput::id)
      .def_readwrite("box", &TrackOutput::box)
      .def("__repr__", [](const TrackOutput& o) {
        std::ostringstream os;
        os << "TrackOutput(frame=" << o.frame << ", id=" << o.id << ")";
        return os.str();
      });

  py::class_<StepLog::Match>(m, "StepMatch")
      .def_readonly("detection", &StepLog::Match::detection)
      .def_readonly("track_id", &StepLog::Match::track_id)
      .def_readonly("overlap", &StepLog::Match::overlap);

  py::class_<StepLog>(m, "StepLog")
      .def_readonly("frame", &StepLog::frame)
      .def_readonly("matches", &StepLog::matches)
      .def_readonly("unmatched_detections", &StepLog::unmatched_detections)
      .def_readonly("unmatched_track_ids", &StepLog::unmatched_track_ids);

  py::class_<Tracker>(m, "Tracker")
      .def(py::init<TrackerConfig>(), py::arg("config") = TrackerConfig{})
      .def(
          "step",
          [](Tracker& t, const std::vector<Box>& dets) { return t.step(dets); },
          py::arg("detections"))
      .def_property_readonly("frame_count", &Tracker::frame_count)
      .def_property_readonly("track_count", &Tracker::track_count)
      .def_property_readonly("tracks", &Tracker::tracks)
      .def_property_readonly("last_log", &Tracker::last_log);

  m.def("run_sequence", &run_sequence, py::arg("detections"), py::arg("config") = TrackerConfig{},
        py::arg("num_frames") = 0);

  // I/O
  py::class_<Detection>(m, "Detection")
      .def(py::init<>())
      .def(py::init<int, Box, double>(), py::arg("frame"), py::arg("box"), py::arg("conf"))
      .def_readwrite("frame", &Detection::frame)
      .def_readwrite("box", &Detection::box)
      .def_readwrite("conf", &Detection::conf);

  py::class_<GtEntry>(m, "GtEntry")
      .def(py::init<>())
      .def(py::init<int, int, Box>(), py::arg("frame"), py::arg("id"), py::arg("box"))
      .def_readwrite("frame", &GtEntry::frame)
      .def_readwrite("id", &GtEntry::id)
      .def_readwrite("box", &GtEntry::box);

  m.def(
      "load_detections",
      [](const std::filesystem::path& path) {
        return to_detections(parse_mot_file(path).records);
      },
      py::arg("path"), "Read a MOT detection file (rejected rows are dropped)");
  m.def(
      "load_ground_truth",
      [](const std::filesystem::path& path) {
        return to_gt_entries(parse_mot_file(path).records);
      },
      py::arg("path"));
  m.def(
      "write_results",
      [](const std::vector<TrackOutput>& outputs, const std::filesystem::path& path) {
        write_results(outputs, path);
      },
      py::arg("outputs"), py::arg("path"));
  m.def("filter_confidence", &filter_confidence, py::arg("detections"), py::arg("threshold"));

  // metrics
  py::class_<MetricsReport>(m, "MetricsReport")
      .def_readonly("mota", &MetricsReport::mota)
      .def_readonly("motp", &MetricsReport::motp)
      .def_readonly("faf", &MetricsReport::faf)
      .def_readonly("mostly_tracked", &MetricsReport::mostly_tracked)
      .def_readonly("partially_tracked", &MetricsReport::partially_tracked)
      .def_readonly("mostly_lost", &MetricsReport::mostly_lost)
      .def_readonly("false_positives", &MetricsReport::false_positives)
      .def_readonly("false_negatives", &MetricsReport::false_negatives)
      .def_readonly("id_switches", &MetricsReport::id_switches)
      .def_readonly("fragmentations", &MetricsReport::fragmentations)
      .def_readonly("num_gt", &MetricsReport::num_gt)
      .def_readonly("num_frames", &MetricsReport::num_frames)
      .def("__repr__", [](const MetricsReport& r) {
        std::ostringstream os;
        os << "MetricsReport(mota=" << r.mota << ", motp=" << r.motp << ", fp="
           << r.false_positives << ", fn=" << r.false_negatives << ", idsw=" << r.id_switches
           << ")";
        return os.str();
      });

  m.def(
      "evaluate",
      [](const std::vector<GtEntry>& gt, const std::vector<TrackOutput>& results,
         bool strict_mt) {
        EvalOptions options;
        options.mt_mode =
            strict_mt ? MostlyTrackedMode::strict_label : MostlyTrackedMode::coverage;
        return evaluate(gt, results, options);
      },
      py::arg("gt"), py::arg("results"), py::arg("strict_mt") = false);
  m.def("aggregate", &aggregate, py::arg("reports"));

  // synthetic scenes
  py::class_<ScenarioConfig>(m, "ScenarioConfig")
      .def(py::init<>())
      .def_readwrite("num_objects", &ScenarioConfig::num_objects)
      .def_readwrite("num_frames", &ScenarioConfig::num_frames)
      .def_readwrite("min_speed", &ScenarioConfig::min_speed)
      .def_readwrite("max_speed", &ScenarioConfig::max_speed)
      .def_readwrite("min_size", &ScenarioConfig::min_size)
      .def_readwrite("max_size", &ScenarioConfig::max_size)
      .def_readwrite("image_width", &ScenarioConfig::image_width)
      .def_readwrite("image_height", &ScenarioConfig::image_height)
      .def_readwrite("noise_sigma", &ScenarioConfig::noise_sigma)
      .def_readwrite("dropout_prob", &ScenarioConfig::dropout_prob)
      .def_readwrite("false_positive_rate", &ScenarioConfig::false_positive_rate)
      .def_readwrite("seed", &ScenarioConfig::seed)
      .def_readwrite("allow_crossing", &ScenarioConfig::allow_crossing);

  py::class_<Scenario>(m, "Scenario")
      .def_readonly("gt", &Scenario::gt)
      .def_readonly("detections", &Scenario::detections);

  m.def("generate", &generate, py::arg("config"));
  m.def("occlusion_scenario", &occlusion_scenario);

  m.attr("__version__") = "0.1.0";
}
