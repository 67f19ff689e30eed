// Command-line front end: track / eval / bench / synth subcommands over the
// motkit library. Exit codes: 0 success, 1 processing error, 2 usage or
// input error.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "motkit/metrics.hpp"
#include "motkit/synth.hpp"
#include "motkit/tracker.hpp"

namespace fs = std::filesystem;
using namespace motkit;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TrackerCliOpts {
  TrackerConfig config;
  double conf_thresh = 0.5;
  bool no_warmup = false;
  std::string q_diag, r_diag, p0_diag;
  std::string config_path;
};

// --config files are flat key=value lines mirroring the long option names.
// Explicitly passed flags win over file values; unknown keys are rejected.
struct KeyBinding {
  std::string key;
  std::function<void(const std::string&)> set;
};

std::function<void(const std::string&)> set_double(double& ref) {
  return [&ref](const std::string& v) { ref = std::stod(v); };
}
std::function<void(const std::string&)> set_int(int& ref) {
  return [&ref](const std::string& v) { ref = std::stoi(v); };
}
std::function<void(const std::string&)> set_u64(std::uint64_t& ref) {
  return [&ref](const std::string& v) { ref = std::stoull(v); };
}
std::function<void(const std::string&)> set_string(std::string& ref) {
  return [&ref](const std::string& v) { ref = v; };
}
std::function<void(const std::string&)> set_bool(bool& ref) {
  return [&ref](const std::string& v) {
    if (v == "1" || v == "true" || v == "yes") ref = true;
    else if (v == "0" || v == "false" || v == "no") ref = false;
    else throw std::invalid_argument("expected a boolean");
  };
}

std::string trim_copy(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

void apply_config_file(const CLI::App* cmd, const std::string& path,
                       const std::vector<KeyBinding>& keys) {
  if (path.empty()) return;
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file: " + path);

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim_copy(line);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw UsageError("config line " + std::to_string(line_no) + ": expected key=value");
    }
    const std::string key = trim_copy(text.substr(0, eq));
    const std::string value = trim_copy(text.substr(eq + 1));

    const auto it = std::find_if(keys.begin(), keys.end(),
                                 [&key](const KeyBinding& b) { return b.key == key; });
    if (it == keys.end()) {
      throw UsageError("unknown config key '" + key + "' (line " + std::to_string(line_no) + ")");
    }
    const auto* opt = cmd->get_option_no_throw("--" + key);
    if (opt != nullptr && opt->count() > 0) continue;  // the explicit flag wins
    try {
      it->set(value);
    } catch (const std::exception&) {
      throw UsageError("config line " + std::to_string(line_no) + ": bad value '" + value +
                       "' for key '" + key + "'");
    }
  }
}

template <std::size_t N>
std::array<double, N> parse_diag(const std::string& text, const char* name) {
  std::array<double, N> out{};
  std::size_t idx = 0, start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string field =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (idx >= N) throw UsageError(std::string(name) + ": expected " + std::to_string(N) + " entries");
    try {
      out[idx++] = std::stod(field);
    } catch (const std::exception&) {
      throw UsageError(std::string(name) + ": bad number '" + field + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (idx != N) throw UsageError(std::string(name) + ": expected " + std::to_string(N) + " entries");
  return out;
}

void add_tracker_options(CLI::App* cmd, TrackerCliOpts& opts) {
  cmd->add_option("--iou-min", opts.config.iou_min, "Minimum overlap to accept an association")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd->add_option("--max-age", opts.config.max_age, "Consecutive misses before a track is dropped")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--min-hits", opts.config.min_hits, "Matched frames before a track is reported")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--conf-thresh", opts.conf_thresh,
                  "Keep detections with confidence strictly above this")
      ->capture_default_str();
  cmd->add_flag("--no-warmup", opts.no_warmup, "Disable the sequence-start reporting exemption");
  cmd->add_option("--q-diag", opts.q_diag, "Process noise diagonal, 7 comma-separated values");
  cmd->add_option("--r-diag", opts.r_diag, "Measurement noise diagonal, 4 comma-separated values");
  cmd->add_option("--p0-diag", opts.p0_diag,
                  "Initial covariance diagonal, 7 comma-separated values");
  cmd->add_option("--config", opts.config_path,
                  "Config file with key=value lines; explicit flags win");
}

std::vector<KeyBinding> tracker_bindings(TrackerCliOpts& opts) {
  return {
      {"iou-min", set_double(opts.config.iou_min)},
      {"max-age", set_int(opts.config.max_age)},
      {"min-hits", set_int(opts.config.min_hits)},
      {"conf-thresh", set_double(opts.conf_thresh)},
      {"no-warmup", set_bool(opts.no_warmup)},
      {"q-diag", set_string(opts.q_diag)},
      {"r-diag", set_string(opts.r_diag)},
      {"p0-diag", set_string(opts.p0_diag)},
  };
}

TrackerConfig finalize_tracker_config(TrackerCliOpts& opts) {
  opts.config.warmup_exemption = !opts.no_warmup;
  if (!opts.q_diag.empty())
    opts.config.filter.process_noise_diag = parse_diag<7>(opts.q_diag, "--q-diag");
  if (!opts.r_diag.empty())
    opts.config.filter.measurement_noise_diag = parse_diag<4>(opts.r_diag, "--r-diag");
  if (!opts.p0_diag.empty())
    opts.config.filter.initial_covariance_diag = parse_diag<7>(opts.p0_diag, "--p0-diag");
  return opts.config;
}

std::vector<Detection> load_detections(const fs::path& path, double conf_thresh) {
  const auto parsed = parse_mot_file(path);
  if (parsed.rejected > 0) {
    std::cerr << "warning: " << parsed.rejected << " record(s) with non-positive size rejected in "
              << path << "\n";
  }
  return filter_confidence(to_detections(parsed.records), conf_thresh);
}

struct SequenceResult {
  std::string name;
  int frames = 0;
  std::size_t boxes = 0;
  double hz = 0.0;
};

SequenceResult track_one(const std::string& name, const fs::path& det_path, int num_frames,
                         const TrackerConfig& config, double conf_thresh, const fs::path& out) {
  const auto dets = load_detections(det_path, conf_thresh);
  auto run = run_sequence_timed(dets, config, num_frames);
  std::stable_sort(run.outputs.begin(), run.outputs.end(), [](const auto& a, const auto& b) {
    return a.frame != b.frame ? a.frame < b.frame : a.id < b.id;
  });
  write_results(run.outputs, out);
  SequenceResult r;
  r.name = name;
  r.frames = run.frames;
  r.boxes = run.outputs.size();
  r.hz = run.tracking_seconds > 0 ? run.frames / run.tracking_seconds : 0.0;
  return r;
}

void report_sequence(const SequenceResult& r) {
  std::fprintf(stderr, "%s: %d frames, %zu boxes, %.1f Hz\n", r.name.c_str(), r.frames, r.boxes,
               r.hz);
}

int cmd_track(const fs::path& input, const fs::path& output, TrackerCliOpts& opts, int threads) {
  const TrackerConfig config = finalize_tracker_config(opts);
  if (!fs::exists(input)) {
    throw UsageError("input not found: " + input.string());
  }

  if (fs::is_regular_file(input)) {
    report_sequence(track_one(input.filename().string(), input, 0, config, opts.conf_thresh, output));
    return 0;
  }

  if (fs::is_regular_file(input / "det" / "det.txt")) {
    const auto spec = read_sequence_dir(input);
    report_sequence(
        track_one(spec.name, spec.det_path, spec.frame_count, config, opts.conf_thresh, output));
    return 0;
  }

  // Benchmark directory: one result file per sequence, sequences in parallel.
  const auto specs = discover_sequences(input);
  if (specs.empty()) {
    throw UsageError("no sequences under " + input.string());
  }
  fs::create_directories(output);

  unsigned n_threads = threads > 0 ? static_cast<unsigned>(threads)
                                   : std::max(1u, std::thread::hardware_concurrency());
  n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(specs.size()));

  std::atomic<std::size_t> next{0};
  std::mutex io_mutex;
  std::vector<std::string> errors;
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < specs.size(); i = next.fetch_add(1)) {
      const auto& spec = specs[i];
      try {
        const auto r = track_one(spec.name, spec.det_path, spec.frame_count, config,
                                 opts.conf_thresh, output / (spec.name + ".txt"));
        const std::lock_guard<std::mutex> lock(io_mutex);
        report_sequence(r);
      } catch (const std::exception& e) {
        const std::lock_guard<std::mutex> lock(io_mutex);
        errors.push_back(spec.name + ": " + e.what());
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  if (!errors.empty()) {
    for (const auto& e : errors) std::cerr << "error: " << e << "\n";
    return 1;
  }
  return 0;
}

struct NamedReport {
  std::string name;
  MetricsReport report;
};

void print_reports(const std::vector<NamedReport>& rows, bool csv) {
  if (csv) {
    std::printf("name,MOTA,MOTP,FAF,MT,ML,FP,FN,IDsw,Frag\n");
    for (const auto& [name, r] : rows) {
      std::printf("%s,%.1f,%.1f,%.2f,%d,%d,%lld,%lld,%lld,%lld\n", name.c_str(), 100.0 * r.mota,
                  100.0 * r.motp, r.faf, r.mostly_tracked, r.mostly_lost, r.false_positives,
                  r.false_negatives, r.id_switches, r.fragmentations);
    }
    return;
  }
  std::size_t width = 8;
  for (const auto& row : rows) width = std::max(width, row.name.size());
  std::printf("%-*s %7s %7s %7s %5s %5s %8s %8s %6s %6s\n", static_cast<int>(width), "Seq", "MOTA",
              "MOTP", "FAF", "MT", "ML", "FP", "FN", "IDsw", "Frag");
  for (const auto& [name, r] : rows) {
    std::printf("%-*s %7.1f %7.1f %7.2f %5d %5d %8lld %8lld %6lld %6lld\n",
                static_cast<int>(width), name.c_str(), 100.0 * r.mota, 100.0 * r.motp, r.faf,
                r.mostly_tracked, r.mostly_lost, r.false_positives, r.false_negatives,
                r.id_switches, r.fragmentations);
  }
}

std::vector<TrackOutput> load_results(const fs::path& path) {
  const auto parsed = parse_mot_file(path);
  std::vector<TrackOutput> outputs;
  outputs.reserve(parsed.records.size());
  for (const auto& rec : parsed.records) {
    outputs.push_back(TrackOutput{
        rec.frame, rec.id, Box{rec.left, rec.top, rec.left + rec.width, rec.top + rec.height}});
  }
  return outputs;
}

NamedReport eval_pair(const std::string& name, const fs::path& gt_path, const fs::path& res_path,
                      const EvalOptions& options) {
  const auto gt = to_gt_entries(parse_mot_file(gt_path).records);
  const auto results = load_results(res_path);
  int gt_last = 0, res_last = 0;
  for (const auto& e : gt) gt_last = std::max(gt_last, e.frame);
  for (const auto& o : results) res_last = std::max(res_last, o.frame);
  if (gt_last != res_last) {
    std::cerr << "warning: " << name << ": ground truth ends at frame " << gt_last
              << " but results end at frame " << res_last << "\n";
  }
  return NamedReport{name, evaluate(gt, results, options)};
}

int cmd_eval(const fs::path& gt_path, const fs::path& res_path, bool csv, bool strict_mt) {
  if (!fs::exists(gt_path)) throw UsageError("ground truth not found: " + gt_path.string());
  if (!fs::exists(res_path)) throw UsageError("results not found: " + res_path.string());

  EvalOptions options;
  options.mt_mode = strict_mt ? MostlyTrackedMode::strict_label : MostlyTrackedMode::coverage;

  std::vector<NamedReport> rows;
  if (fs::is_regular_file(gt_path)) {
    rows.push_back(eval_pair("all", gt_path, res_path, options));
  } else {
    // Directory mode: gt root holds sequence dirs, results dir holds
    // <sequence>.txt files.
    if (!fs::is_directory(res_path)) {
      throw UsageError("results must be a directory when ground truth is one");
    }
    for (const auto& spec : discover_sequences(gt_path)) {
      if (spec.gt_path.empty()) continue;
      const auto res_file = res_path / (spec.name + ".txt");
      if (!fs::is_regular_file(res_file)) {
        throw UsageError("missing results for sequence " + spec.name + ": " + res_file.string());
      }
      rows.push_back(eval_pair(spec.name, spec.gt_path, res_file, options));
    }
    if (rows.empty()) throw UsageError("no annotated sequences under " + gt_path.string());
    std::vector<MetricsReport> reports;
    for (const auto& row : rows) reports.push_back(row.report);
    rows.push_back(NamedReport{"OVERALL", aggregate(reports)});
  }
  print_reports(rows, csv);
  return 0;
}

int cmd_bench(const std::string& dets_file, const std::string& gt_file, int objects, int frames,
              double fp_rate, int reps, std::uint64_t seed, TrackerCliOpts& opts, bool csv) {
  const TrackerConfig config = finalize_tracker_config(opts);
  if (reps < 1) throw UsageError("--reps must be >= 1");

  std::vector<Detection> dets;
  std::vector<GtEntry> gt;
  if (!dets_file.empty()) {
    if (!fs::exists(dets_file)) throw UsageError("detections not found: " + dets_file);
    dets = load_detections(dets_file, opts.conf_thresh);
    if (!gt_file.empty()) {
      if (!fs::exists(gt_file)) throw UsageError("ground truth not found: " + gt_file);
      gt = to_gt_entries(parse_mot_file(fs::path(gt_file)).records);
    }
  } else {
    ScenarioConfig scenario;
    scenario.num_objects = objects;
    scenario.num_frames = frames;
    scenario.false_positive_rate = fp_rate;
    scenario.seed = seed;
    auto s = generate(scenario);
    dets = filter_confidence(std::move(s.detections), opts.conf_thresh);
    gt = std::move(s.gt);
  }

  std::vector<double> rates;
  SequenceRun last;
  for (int rep = 0; rep < reps; ++rep) {
    last = run_sequence_timed(dets, config, 0);
    const double hz = last.tracking_seconds > 0 ? last.frames / last.tracking_seconds : 0.0;
    rates.push_back(hz);
    std::fprintf(stderr, "rep %d: %.1f Hz (%d frames in %.4f s)\n", rep + 1, hz, last.frames,
                 last.tracking_seconds);
  }
  std::sort(rates.begin(), rates.end());
  const double median = rates[rates.size() / 2];

  const double dets_per_frame =
      last.frames > 0 ? static_cast<double>(dets.size()) / last.frames : 0.0;

  bool have_mota = false;
  double mota = 0.0;
  if (!gt.empty()) {
    auto outputs = last.outputs;
    std::stable_sort(outputs.begin(), outputs.end(), [](const auto& a, const auto& b) {
      return a.frame != b.frame ? a.frame < b.frame : a.id < b.id;
    });
    mota = 100.0 * evaluate(gt, outputs).mota;
    have_mota = true;
  }

  if (csv) {
    if (have_mota) {
      std::printf("hz,mota\n%.1f,%.1f\n", median, mota);
    } else {
      std::printf("hz\n%.1f\n", median);
    }
  } else {
    std::printf("frames:            %d\n", last.frames);
    std::printf("detections/frame:  %.1f\n", dets_per_frame);
    std::printf("median throughput: %.1f Hz\n", median);
    if (have_mota) {
      std::printf("mota:              %.1f\n", mota);
      std::printf("point: %.1f %.1f\n", median, mota);
    } else {
      std::printf("point: %.1f\n", median);
    }
  }
  return 0;
}

int cmd_synth(const fs::path& outdir, ScenarioConfig& scenario, const std::string& preset) {
  Scenario s;
  try {
    if (preset == "occlusion") {
      s = occlusion_scenario();
      scenario.num_frames = 40;
    } else if (preset.empty()) {
      s = generate(scenario);
    } else {
      throw UsageError("unknown preset: " + preset);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  fs::create_directories(outdir / "det");
  fs::create_directories(outdir / "gt");
  write_detections(s.detections, outdir / "det" / "det.txt");
  write_ground_truth(s.gt, outdir / "gt" / "gt.txt");

  std::FILE* ini = std::fopen((outdir / "seqinfo.ini").string().c_str(), "w");
  if (ini) {
    std::fprintf(ini, "[Sequence]\nname=%s\nseqLength=%d\nframeRate=30\nimWidth=%d\nimHeight=%d\n",
                 outdir.filename().string().c_str(), scenario.num_frames,
                 static_cast<int>(scenario.image_width), static_cast<int>(scenario.image_height));
    std::fclose(ini);
  }
  std::fprintf(stderr, "%s: %zu gt boxes, %zu detections over %d frames\n",
               outdir.string().c_str(), s.gt.size(), s.detections.size(), scenario.num_frames);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online multi-object tracking over bounding-box detections"};
  app.require_subcommand(1);

  // track
  auto* track = app.add_subcommand("track", "Associate detections into identity-labeled tracks");
  std::string track_input, track_output;
  int track_threads = 0;
  TrackerCliOpts track_opts;
  track->add_option("input", track_input,
                    "Detection file, sequence directory, or benchmark directory")
      ->required();
  track->add_option("-o,--output", track_output, "Output file (or directory for benchmark input)")
      ->required();
  track->add_option("--threads", track_threads, "Worker threads for benchmark directories");
  add_tracker_options(track, track_opts);

  // eval
  auto* eval = app.add_subcommand("eval", "Score tracking results against ground truth");
  std::string eval_gt, eval_results;
  bool eval_csv = false, eval_strict_mt = false;
  eval->add_option("gt", eval_gt, "Ground-truth file or benchmark directory")->required();
  eval->add_option("results", eval_results, "Results file or directory of <sequence>.txt files")
      ->required();
  eval->add_flag("--csv", eval_csv, "Machine-readable comma-separated output");
  eval->add_flag("--strict-mt", eval_strict_mt,
                 "Require a single identity for mostly-tracked classification");
  std::string eval_config;
  eval->add_option("--config", eval_config, "Config file with key=value lines");

  // bench
  auto* bench = app.add_subcommand("bench", "Measure tracking throughput");
  std::string bench_dets, bench_gt;
  int bench_objects = 10, bench_frames = 1000, bench_reps = 5;
  double bench_fp_rate = 0.0;
  std::uint64_t bench_seed = 42;
  bool bench_csv = false;
  TrackerCliOpts bench_opts;
  bench->add_option("--dets", bench_dets, "Benchmark an existing detection file");
  bench->add_option("--gt", bench_gt, "Ground truth for the accuracy half of the data point");
  bench->add_option("--objects", bench_objects, "Synthetic objects per frame")
      ->capture_default_str();
  bench->add_option("--frames", bench_frames, "Synthetic sequence length")->capture_default_str();
  bench->add_option("--fp-rate", bench_fp_rate, "Synthetic false positives per frame")
      ->capture_default_str();
  bench->add_option("--reps", bench_reps, "Repetitions (median is reported)")
      ->capture_default_str();
  bench->add_option("--seed", bench_seed, "Synthetic scenario seed")->capture_default_str();
  bench->add_flag("--csv", bench_csv, "Machine-readable output");
  add_tracker_options(bench, bench_opts);

  // synth
  auto* synth = app.add_subcommand("synth", "Generate a synthetic sequence");
  std::string synth_out, synth_preset;
  ScenarioConfig scenario;
  synth->add_option("-o,--output", synth_out, "Sequence directory to create")->required();
  synth->add_option("--objects", scenario.num_objects, "Number of objects")->capture_default_str();
  synth->add_option("--frames", scenario.num_frames, "Number of frames")->capture_default_str();
  synth->add_option("--noise", scenario.noise_sigma, "Detection corner noise sigma (px)")
      ->capture_default_str();
  synth->add_option("--dropout", scenario.dropout_prob, "Detection dropout probability")
      ->capture_default_str();
  synth->add_option("--fp-rate", scenario.false_positive_rate, "False positives per frame")
      ->capture_default_str();
  synth->add_option("--seed", scenario.seed, "RNG seed")->capture_default_str();
  synth->add_option("--width", scenario.image_width, "Image width (px)")->capture_default_str();
  synth->add_option("--height", scenario.image_height, "Image height (px)")->capture_default_str();
  synth->add_option("--min-size", scenario.min_size, "Smallest box side (px)")
      ->capture_default_str();
  synth->add_option("--max-size", scenario.max_size, "Largest box side (px)")
      ->capture_default_str();
  synth->add_option("--min-speed", scenario.min_speed, "Slowest speed (px/frame)")
      ->capture_default_str();
  synth->add_option("--max-speed", scenario.max_speed, "Fastest speed (px/frame)")
      ->capture_default_str();
  synth->add_flag("--crossing", scenario.allow_crossing, "Let trajectories cross and exit");
  synth->add_option("--preset", synth_preset, "Named scenario: occlusion");
  std::string synth_config;
  synth->add_option("--config", synth_config, "Config file with key=value lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*track) {
      auto bindings = tracker_bindings(track_opts);
      bindings.push_back({"threads", set_int(track_threads)});
      apply_config_file(track, track_opts.config_path, bindings);
      return cmd_track(track_input, track_output, track_opts, track_threads);
    }
    if (*eval) {
      apply_config_file(eval, eval_config,
                        {{"csv", set_bool(eval_csv)}, {"strict-mt", set_bool(eval_strict_mt)}});
      return cmd_eval(eval_gt, eval_results, eval_csv, eval_strict_mt);
    }
    if (*bench) {
      auto bindings = tracker_bindings(bench_opts);
      bindings.push_back({"objects", set_int(bench_objects)});
      bindings.push_back({"frames", set_int(bench_frames)});
      bindings.push_back({"fp-rate", set_double(bench_fp_rate)});
      bindings.push_back({"reps", set_int(bench_reps)});
      bindings.push_back({"seed", set_u64(bench_seed)});
      apply_config_file(bench, bench_opts.config_path, bindings);
      return cmd_bench(bench_dets, bench_gt, bench_objects, bench_frames, bench_fp_rate,
                       bench_reps, bench_seed, bench_opts, bench_csv);
    }
    if (*synth) {
      apply_config_file(synth, synth_config,
                        {{"objects", set_int(scenario.num_objects)},
                         {"frames", set_int(scenario.num_frames)},
                         {"noise", set_double(scenario.noise_sigma)},
                         {"dropout", set_double(scenario.dropout_prob)},
                         {"fp-rate", set_double(scenario.false_positive_rate)},
                         {"seed", set_u64(scenario.seed)},
                         {"width", set_double(scenario.image_width)},
                         {"height", set_double(scenario.image_height)},
                         {"min-size", set_double(scenario.min_size)},
                         {"max-size", set_double(scenario.max_size)},
                         {"min-speed", set_double(scenario.min_speed)},
                         {"max-speed", set_double(scenario.max_speed)},
                         {"crossing", set_bool(scenario.allow_crossing)},
                         {"preset", set_string(synth_preset)}});
      return cmd_synth(synth_out, scenario, synth_preset);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
