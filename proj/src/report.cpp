#include "reptri/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "reptri/repdigit.hpp"

namespace reptri {

std::string_view to_string(RecordKind kind) {
  switch (kind) {
    case RecordKind::Hit: return "hit";
    case RecordKind::NoWitness: return "no_witness";
    case RecordKind::Verdict: return "verdict";
    case RecordKind::Summary: return "summary";
    case RecordKind::FamilyInstance: return "family_instance";
    case RecordKind::Error: return "error";
  }
  return "?";
}

ReportRecord ReportRecord::from_witness(RecordKind kind, const TriangleWitness& w) {
  ReportRecord r;
  r.kind = kind;
  r.type = w.type;
  r.k = w.spec.k();
  r.b = w.spec.base();
  r.d = w.spec.digit();
  r.sides = std::array<Natural, 3>{w.leg_a, w.leg_b, w.hypotenuse};
  r.params = w.params;
  return r;
}

namespace {

std::string format_ms(double ms) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << ms;
  return os.str();
}

// Column values in kReportColumns order; nullopt for absent fields.
std::array<std::optional<std::string>, kReportColumns.size()> columns(const ReportRecord& r) {
  std::array<std::optional<std::string>, kReportColumns.size()> c;
  auto num = [](const std::optional<std::uint64_t>& v) -> std::optional<std::string> {
    if (!v) return std::nullopt;
    return std::to_string(*v);
  };
  c[0] = std::string(to_string(r.kind));
  if (r.type) c[1] = std::string(to_string(*r.type));
  c[2] = num(r.k);
  c[3] = num(r.b);
  c[4] = num(r.d);
  if (r.sides) {
    for (std::size_t i = 0; i < 3; ++i) {
      c[5 + i] = (*r.sides)[i].to_string();
      if (r.b && *r.b >= 2) c[8 + i] = render_base((*r.sides)[i], *r.b);
    }
  }
  if (r.params) {
    c[11] = r.params->delta().to_string();
    c[12] = r.params->m().to_string();
    c[13] = r.params->n().to_string();
  }
  if (r.theorem) c[14] = std::to_string(*r.theorem);
  if (r.verdict) c[15] = std::string(to_string(*r.verdict));
  c[16] = num(r.hits);
  c[17] = num(r.specs_tested);
  c[18] = num(r.prefilter_rejections);
  c[19] = num(r.full_checks);
  if (r.elapsed_ms) c[20] = format_ms(*r.elapsed_ms);
  if (!r.provenance.empty()) {
    std::string flat;
    for (const auto& [key, value] : r.provenance) {
      if (!flat.empty()) flat.push_back(';');
      flat += key + "=" + value;
    }
    c[21] = flat;
  }
  if (!r.message.empty()) c[22] = r.message;
  return c;
}

// Columns emitted as JSON numbers rather than strings. Side lengths and
// triple parameters stay strings since they exceed 64 bits at large k.
bool is_numeric_column(std::size_t i) {
  return (i >= 2 && i <= 4) || i == 14 || (i >= 16 && i <= 19);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out.push_back('"');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string to_json_line(const ReportRecord& record) {
  nlohmann::ordered_json j;
  const auto c = columns(record);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::string key(kReportColumns[i]);
    if (key == "provenance") {
      if (record.provenance.empty()) continue;
      nlohmann::ordered_json prov = nlohmann::ordered_json::object();
      for (const auto& [k, v] : record.provenance) prov[k] = v;
      j[key] = std::move(prov);
      continue;
    }
    if (key == "elapsed_ms" && record.elapsed_ms) {
      j[key] = nlohmann::ordered_json::parse(*c[i]);
      continue;
    }
    if (!c[i]) continue;
    if (is_numeric_column(i)) {
      j[key] = std::stoull(*c[i]);
    } else {
      j[key] = *c[i];
    }
  }
  return j.dump();
}

std::string csv_header() {
  std::string out;
  for (std::size_t i = 0; i < kReportColumns.size(); ++i) {
    if (i != 0) out.push_back(',');
    out += kReportColumns[i];
  }
  return out;
}

std::string to_csv_row(const ReportRecord& record) {
  std::string out;
  const auto c = columns(record);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i != 0) out.push_back(',');
    if (c[i]) out += csv_escape(*c[i]);
  }
  return out;
}

void RecordWriter::write(const ReportRecord& record) {
  if (format_ == OutputFormat::Csv) {
    if (!header_written_) {
      out_ << csv_header() << '\n';
      header_written_ = true;
    }
    out_ << to_csv_row(record) << '\n';
  } else {
    out_ << to_json_line(record) << '\n';
  }
  out_.flush();
}

}  // namespace reptri
