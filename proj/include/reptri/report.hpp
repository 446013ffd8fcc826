#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reptri/natural.hpp"
#include "reptri/search.hpp"
#include "reptri/triples.hpp"

namespace reptri {

enum class RecordKind { Hit, NoWitness, Verdict, Summary, FamilyInstance, Error };

std::string_view to_string(RecordKind kind);

/// One output line. Absent optionals are omitted from JSON and left blank
/// in CSV; field order is fixed (see kReportColumns).
struct ReportRecord {
  RecordKind kind = RecordKind::Error;
  std::optional<TriangleType> type;
  std::optional<std::uint64_t> k;
  std::optional<std::uint64_t> b;
  std::optional<std::uint64_t> d;
  std::optional<std::array<Natural, 3>> sides;  // digit-power leg, other leg, hypotenuse
  std::optional<TripleParams> params;
  std::optional<int> theorem;
  std::optional<Verdict> verdict;
  std::optional<std::uint64_t> hits;
  std::optional<std::uint64_t> specs_tested;
  std::optional<std::uint64_t> prefilter_rejections;
  std::optional<std::uint64_t> full_checks;
  std::optional<double> elapsed_ms;
  std::vector<std::pair<std::string, std::string>> provenance;
  std::string message;

  static ReportRecord from_witness(RecordKind kind, const TriangleWitness& w);
};

inline constexpr std::array<std::string_view, 23> kReportColumns = {
    "record",       "type",       "k",           "b",          "d",
    "leg_a",        "leg_b",      "hypotenuse",  "leg_a_base_b", "leg_b_base_b",
    "hypotenuse_base_b", "delta", "m",           "n",          "theorem",
    "verdict",      "hits",       "specs_tested", "prefilter_rejections", "full_checks",
    "elapsed_ms",   "provenance", "message",
};

enum class OutputFormat { JsonLines, Csv };

/// Single-line JSON object, no trailing newline.
std::string to_json_line(const ReportRecord& record);
/// Single CSV row over kReportColumns; provenance is flattened to
/// "key=value;key=value".
std::string to_csv_row(const ReportRecord& record);
std::string csv_header();

class RecordWriter {
 public:
  RecordWriter(std::ostream& out, OutputFormat format) : out_(out), format_(format) {}

  void write(const ReportRecord& record);

 private:
  std::ostream& out_;
  OutputFormat format_;
  bool header_written_ = false;
};

}  // namespace reptri
