#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "motkit/geometry.hpp"

namespace motkit {

/// One observed box with its frame index and detector confidence.
struct Detection {
  int frame = 0;
  Box box;
  double conf = 0.0;
};

/// One annotated box of a ground-truth trajectory.
struct GtEntry {
  int frame = 0;
  int id = 0;
  Box box;
};

/// One reported box of a confirmed track.
struct TrackOutput {
  int frame = 0;
  int id = 0;
  Box box;
};

/// Raw line of a MOT-format text file:
/// frame,id,left,top,width,height,conf[,x,y,z]
struct MotRecord {
  int frame = 0;
  int id = 0;
  double left = 0.0;
  double top = 0.0;
  double width = 0.0;
  double height = 0.0;
  double conf = 0.0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_ = 0;
};

struct ParseResult {
  std::vector<MotRecord> records;
  std::size_t rejected = 0;  // records dropped for non-positive width/height
};

/// Parse a MOT-format text stream. Blank lines are skipped; fields beyond
/// the 7th are ignored. Malformed lines raise ParseError with the line
/// number; records with non-positive width/height are dropped and counted.
ParseResult parse_mot_file(std::istream& in);
ParseResult parse_mot_file(const std::filesystem::path& path);

std::vector<Detection> to_detections(const std::vector<MotRecord>& records);

/// Records interpreted as ground truth; requires positive identities.
std::vector<GtEntry> to_gt_entries(const std::vector<MotRecord>& records);

/// Write results as "frame,id,left,top,width,height,1,-1,-1,-1" with
/// coordinates to two decimals. Expects outputs sorted by (frame, id).
void write_results(std::span<const TrackOutput> outputs, std::ostream& out);
void write_results(std::span<const TrackOutput> outputs, const std::filesystem::path& path);

/// Ground-truth writer, same line format with the trajectory identity.
void write_ground_truth(std::span<const GtEntry> entries, std::ostream& out);
void write_ground_truth(std::span<const GtEntry> entries, const std::filesystem::path& path);

/// Detection writer: identity -1, real confidence.
void write_detections(std::span<const Detection> detections, std::ostream& out);
void write_detections(std::span<const Detection> detections, const std::filesystem::path& path);

/// Keep detections with confidence strictly greater than the threshold,
/// preserving order.
std::vector<Detection> filter_confidence(std::vector<Detection> detections, double threshold);

/// One sequence of a benchmark directory: <seq>/det/det.txt and, when
/// annotated, <seq>/gt/gt.txt. Frame count and rate come from seqinfo.ini
/// when present.
struct SequenceSpec {
  std::string name;
  int frame_count = 0;
  double frame_rate = 0.0;
  std::filesystem::path det_path;
  std::filesystem::path gt_path;  // empty when absent
};

/// Enumerate sequences under a benchmark root, sorted by name.
std::vector<SequenceSpec> discover_sequences(const std::filesystem::path& root);

/// Read one sequence directory (a directory containing det/det.txt).
SequenceSpec read_sequence_dir(const std::filesystem::path& dir);

}  // namespace motkit
