#include "motkit/mot_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

namespace motkit {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view field, int line_no) {
  field = trim(field);
  const char* begin = field.data();
  const char* end = begin + field.size();
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || field.empty()) {
    throw ParseError(line_no, "non-numeric field '" + std::string(field) + "'");
  }
  return value;
}

int parse_int(std::string_view field, int line_no) {
  field = trim(field);
  const char* begin = field.data();
  const char* end = begin + field.size();
  int value = 0;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || field.empty()) {
    throw ParseError(line_no, "non-integer field '" + std::string(field) + "'");
  }
  return value;
}

void split_fields(std::string_view line, std::vector<std::string_view>& fields) {
  fields.clear();
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

void write_row(std::ostream& out, int frame, int id, const Box& b, const char* tail) {
  char buf[160];
  const int n = std::snprintf(buf, sizeof(buf), "%d,%d,%.2f,%.2f,%.2f,%.2f,%s\n", frame, id, b.x1,
                              b.y1, b.width(), b.height(), tail);
  out.write(buf, n);
}

void write_det_row(std::ostream& out, const Detection& d) {
  char buf[192];
  const int n = std::snprintf(buf, sizeof(buf), "%d,-1,%.2f,%.2f,%.2f,%.2f,%.6g,-1,-1,-1\n",
                              d.frame, d.box.x1, d.box.y1, d.box.width(), d.box.height(), d.conf);
  out.write(buf, n);
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open for writing: " + path.string());
  }
  return out;
}

}  // namespace

ParseResult parse_mot_file(std::istream& in) {
  ParseResult result;
  std::vector<std::string_view> fields;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view sv = trim(line);
    if (sv.empty()) continue;
    split_fields(sv, fields);
    if (fields.size() < 7) {
      throw ParseError(line_no, "expected at least 7 comma-separated fields, got " +
                                    std::to_string(fields.size()));
    }
    MotRecord rec;
    rec.frame = parse_int(fields[0], line_no);
    rec.id = parse_int(fields[1], line_no);
    rec.left = parse_double(fields[2], line_no);
    rec.top = parse_double(fields[3], line_no);
    rec.width = parse_double(fields[4], line_no);
    rec.height = parse_double(fields[5], line_no);
    rec.conf = parse_double(fields[6], line_no);
    if (rec.frame < 1) {
      throw ParseError(line_no, "frame index must be >= 1");
    }
    if (rec.width <= 0.0 || rec.height <= 0.0) {
      ++result.rejected;
      continue;
    }
    result.records.push_back(rec);
  }
  return result;
}

ParseResult parse_mot_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open file: " + path.string());
  }
  return parse_mot_file(in);
}

std::vector<Detection> to_detections(const std::vector<MotRecord>& records) {
  std::vector<Detection> dets;
  dets.reserve(records.size());
  for (const auto& r : records) {
    dets.push_back(
        Detection{r.frame, Box{r.left, r.top, r.left + r.width, r.top + r.height}, r.conf});
  }
  return dets;
}

std::vector<GtEntry> to_gt_entries(const std::vector<MotRecord>& records) {
  std::vector<GtEntry> entries;
  entries.reserve(records.size());
  for (const auto& r : records) {
    if (r.id < 1) {
      throw std::runtime_error("ground-truth identity must be positive (frame " +
                               std::to_string(r.frame) + ")");
    }
    entries.push_back(
        GtEntry{r.frame, r.id, Box{r.left, r.top, r.left + r.width, r.top + r.height}});
  }
  return entries;
}

void write_results(std::span<const TrackOutput> outputs, std::ostream& out) {
  for (const auto& o : outputs) {
    write_row(out, o.frame, o.id, o.box, "1,-1,-1,-1");
  }
}

void write_results(std::span<const TrackOutput> outputs, const std::filesystem::path& path) {
  auto out = open_out(path);
  write_results(outputs, out);
}

void write_ground_truth(std::span<const GtEntry> entries, std::ostream& out) {
  for (const auto& e : entries) {
    write_row(out, e.frame, e.id, e.box, "1,-1,-1,-1");
  }
}

void write_ground_truth(std::span<const GtEntry> entries, const std::filesystem::path& path) {
  auto out = open_out(path);
  write_ground_truth(entries, out);
}

void write_detections(std::span<const Detection> detections, std::ostream& out) {
  for (const auto& d : detections) {
    write_det_row(out, d);
  }
}

void write_detections(std::span<const Detection> detections, const std::filesystem::path& path) {
  auto out = open_out(path);
  write_detections(detections, out);
}

std::vector<Detection> filter_confidence(std::vector<Detection> detections, double threshold) {
  std::erase_if(detections, [threshold](const Detection& d) { return !(d.conf > threshold); });
  return detections;
}

namespace {

// Minimal seqinfo.ini reader: only seqLength and frameRate matter here.
void read_seqinfo(const std::filesystem::path& path, SequenceSpec& spec) {
  std::ifstream in(path);
  if (!in) return;
  std::string line;
  while (std::getline(in, line)) {
    const auto sv = trim(line);
    const auto eq = sv.find('=');
    if (eq == std::string_view::npos) continue;
    const auto key = trim(sv.substr(0, eq));
    const auto value = trim(sv.substr(eq + 1));
    try {
      if (key == "seqLength") {
        spec.frame_count = std::stoi(std::string(value));
      } else if (key == "frameRate") {
        spec.frame_rate = std::stod(std::string(value));
      }
    } catch (const std::exception&) {
      // tolerate junk values; the fields stay at their defaults
    }
  }
}

}  // namespace

SequenceSpec read_sequence_dir(const std::filesystem::path& dir) {
  SequenceSpec spec;
  spec.name = dir.filename().string();
  if (spec.name.empty()) {
    spec.name = dir.parent_path().filename().string();
  }
  spec.det_path = dir / "det" / "det.txt";
  if (!std::filesystem::is_regular_file(spec.det_path)) {
    throw std::runtime_error("not a sequence directory (missing det/det.txt): " + dir.string());
  }
  const auto gt = dir / "gt" / "gt.txt";
  if (std::filesystem::is_regular_file(gt)) {
    spec.gt_path = gt;
  }
  read_seqinfo(dir / "seqinfo.ini", spec);
  return spec;
}

std::vector<SequenceSpec> discover_sequences(const std::filesystem::path& root) {
  std::vector<SequenceSpec> specs;
  if (!std::filesystem::is_directory(root)) {
    throw std::runtime_error("not a directory: " + root.string());
  }
  for (const auto& entry : std::filesystem::directory_iterator(root)) {
    if (!entry.is_directory()) continue;
    if (std::filesystem::is_regular_file(entry.path() / "det" / "det.txt")) {
      specs.push_back(read_sequence_dir(entry.path()));
    }
  }
  std::sort(specs.begin(), specs.end(),
            [](const SequenceSpec& a, const SequenceSpec& b) { return a.name < b.name; });
  return specs;
}

}  // namespace motkit
