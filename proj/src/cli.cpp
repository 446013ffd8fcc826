#include "reptri/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>
#include <string_view>

#include "CLI11.hpp"

#include "reptri/error.hpp"
#include "reptri/families.hpp"
#include "reptri/report.hpp"
#include "reptri/search.hpp"
#include "reptri/triples.hpp"

namespace reptri::cli {
namespace {

using Provenance = std::vector<std::pair<std::string, std::string>>;

std::uint64_t non_negative(std::string_view name, std::int64_t value) {
  if (value < 0) throw ConstraintError(std::string(name) + " must be non-negative (got " + std::to_string(value) + ")");
  return static_cast<std::uint64_t>(value);
}

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConstraintError("malformed " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return v;
}

// "A..B" or a single "A".
std::pair<std::uint64_t, std::uint64_t> parse_base_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const auto v = parse_u64(text, "base range");
    return {v, v};
  }
  return {parse_u64(text.substr(0, dots), "base range"), parse_u64(text.substr(dots + 2), "base range")};
}

std::string join_digits(const std::vector<std::uint64_t>& digits) {
  if (digits.empty()) return "all";
  std::string out;
  for (auto d : digits) {
    if (!out.empty()) out.push_back(',');
    out += std::to_string(d);
  }
  return out;
}

std::string join_types(const SearchRange& r) {
  if (r.type1 && r.type2) return "t1,t2";
  return r.type1 ? "t1" : "t2";
}

Provenance range_provenance(std::string source, const SearchRange& r, bool prefilters) {
  return {
      {"source", std::move(source)},
      {"bases", std::to_string(r.base_min) + ".." + std::to_string(r.base_max)},
      {"digits", join_digits(r.digits)},
      {"k_max", std::to_string(r.k_max)},
      {"types", join_types(r)},
      {"prefilters", prefilters ? "on" : "off"},
  };
}

double to_ms(std::chrono::nanoseconds ns) { return static_cast<double>(ns.count()) / 1e6; }

ReportRecord error_record(const std::string& message) {
  ReportRecord r;
  r.kind = RecordKind::Error;
  r.message = message;
  return r;
}

ReportRecord instance_record(const FamilyInstance& inst, Provenance prov) {
  ReportRecord r = ReportRecord::from_witness(RecordKind::FamilyInstance, inst.witness);
  prov.emplace_back("family", std::string(to_string(inst.params.family)));
  for (const auto& [name, value] : inst.params.named()) prov.emplace_back(name, std::to_string(value));
  r.provenance = std::move(prov);
  return r;
}

struct Globals {
  std::string format = "jsonl";
  unsigned threads = 0;
};

struct CheckArgs {
  std::int64_t k = 0, b = 0, d = 0;
  std::string type;
};

struct VerifyArgs {
  int id = 0;
  std::int64_t k_max = 64;
  std::int64_t b_max = 10'000;
  bool no_prefilter = false;
};

struct SearchArgs {
  std::string bases;
  std::vector<std::int64_t> digits;
  std::int64_t k_max = 64;
  std::vector<std::string> types{"t1", "t2"};
  bool no_prefilter = false;
};

struct FamilyArgs {
  std::string name;
  std::optional<std::int64_t> l, q, r, t, grid;
};

struct CorollaryArgs {
  std::int64_t d = 0;
  std::string type;
};

TriangleType require_type(const std::string& text) {
  auto t = parse_triangle_type(text);
  if (!t) throw ConstraintError("triangle type must be t1 or t2 (got '" + text + "')");
  return *t;
}

int do_check(const CheckArgs& a, RecordWriter& w) {
  const RepdigitSpec spec(non_negative("k", a.k), non_negative("b", a.b), non_negative("d", a.d));
  const TriangleType type = require_type(a.type);
  auto witness = check_type(spec, type);
  if (witness) {
    ReportRecord r = ReportRecord::from_witness(RecordKind::Hit, *witness);
    r.provenance = {{"source", "check"}};
    w.write(r);
    return kOk;
  }
  ReportRecord r;
  r.kind = RecordKind::NoWitness;
  r.type = type;
  r.k = spec.k();
  r.b = spec.base();
  r.d = spec.digit();
  r.provenance = {{"source", "check"}};
  r.message = "no triangle of this type exists for the spec";
  w.write(r);
  return kAbsent;
}

int do_verify(const VerifyArgs& a, const Globals& g, RecordWriter& w) {
  TheoremBounds bounds{non_negative("k-max", a.k_max), non_negative("b-max", a.b_max)};
  const bool prefilters = !a.no_prefilter;
  const TheoremReport t = verify_theorem(a.id, bounds, SearchOptions{prefilters, g.threads});

  Provenance prov = range_provenance("verify-theorem", t.report.range, prefilters);
  prov.insert(prov.begin() + 1, {"theorem", std::to_string(a.id)});
  for (const auto& hit : t.report.hits) {
    ReportRecord r = ReportRecord::from_witness(RecordKind::Hit, hit);
    r.provenance = prov;
    w.write(r);
  }
  ReportRecord v;
  v.kind = RecordKind::Verdict;
  v.theorem = a.id;
  v.verdict = t.verdict;
  v.hits = t.report.hits.size();
  v.specs_tested = t.report.specs_tested;
  v.prefilter_rejections = t.report.prefilter_rejections;
  v.full_checks = t.report.full_checks;
  v.elapsed_ms = to_ms(t.report.elapsed);
  v.provenance = prov;
  if (t.verdict == Verdict::Violation) {
    std::string msg;
    for (const auto& h : t.unexpected) {
      msg += "unexpected " + std::string(to_string(h.type)) + "(" + std::to_string(h.spec.k()) + "," +
             std::to_string(h.spec.base()) + "," + std::to_string(h.spec.digit()) + ");";
    }
    for (const auto& s : t.missing) {
      msg += "missing (" + std::to_string(s.k()) + "," + std::to_string(s.base()) + "," + std::to_string(s.digit()) +
             ");";
    }
    v.message = msg;
  } else {
    v.message = "verified for the listed finite range";
  }
  w.write(v);
  return t.verdict == Verdict::Consistent ? kOk : kTheoremViolation;
}

int do_search(const SearchArgs& a, const Globals& g, RecordWriter& w) {
  SearchRange range;
  std::tie(range.base_min, range.base_max) = parse_base_range(a.bases);
  for (auto d : a.digits) range.digits.push_back(non_negative("digit", d));
  range.k_max = non_negative("k-max", a.k_max);
  range.type1 = range.type2 = false;
  for (const auto& t : a.types) {
    (require_type(t) == TriangleType::Type1 ? range.type1 : range.type2) = true;
  }
  const bool prefilters = !a.no_prefilter;
  const SearchReport report = search(range, SearchOptions{prefilters, g.threads});

  const Provenance prov = range_provenance("search", range, prefilters);
  for (const auto& hit : report.hits) {
    ReportRecord r = ReportRecord::from_witness(RecordKind::Hit, hit);
    r.provenance = prov;
    w.write(r);
  }
  ReportRecord s;
  s.kind = RecordKind::Summary;
  s.hits = report.hits.size();
  s.specs_tested = report.specs_tested;
  s.prefilter_rejections = report.prefilter_rejections;
  s.full_checks = report.full_checks;
  s.elapsed_ms = to_ms(report.elapsed);
  s.provenance = prov;
  w.write(s);
  return kOk;
}

int do_family(const FamilyArgs& a, RecordWriter& w) {
  auto id = parse_family_id(a.name);
  if (!id) throw ConstraintError("family name must be one of F1, F2, S1, S2, U (got '" + a.name + "')");
  const Provenance prov = {{"source", "family"}};

  if (a.grid) {
    for (const auto& inst : enumerate_family(*id, non_negative("grid", *a.grid))) w.write(instance_record(inst, prov));
    return kOk;
  }
  auto need = [](const std::optional<std::int64_t>& v, const char* flag) {
    if (!v) throw ConstraintError(std::string("missing ") + flag + " (or give --grid N)");
    return non_negative(flag, *v);
  };
  FamilyParams params{*id, 0, 0};
  switch (*id) {
    case FamilyId::F1:
    case FamilyId::F2: params = {*id, need(a.l, "--l"), need(a.q, "--q")}; break;
    case FamilyId::S1:
    case FamilyId::S2: params = {*id, need(a.r, "--r"), need(a.q, "--q")}; break;
    case FamilyId::U: params = FamilyParams::u(need(a.t, "--t")); break;
  }
  w.write(instance_record(generate_family(params), prov));
  return kOk;
}

int do_corollary(const CorollaryArgs& a, RecordWriter& w) {
  const auto digit = non_negative("d", a.d);
  const CorollaryResult c = corollary_base(digit, require_type(a.type));
  w.write(instance_record(c.instance, {{"source", "corollary"}}));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pythagorean triangles with repdigit sides", "repdigit"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"jsonl", "csv"}));
  app.add_option("--threads", g.threads, "Search worker threads (0 = all cores)")->envname("REPDIGIT_THREADS");

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Test one (k, b, d) spec for a Type 1 or Type 2 triangle");
  check->add_option("--k", check_args.k, "Digit count")->required();
  check->add_option("--b", check_args.b, "Base")->required();
  check->add_option("--d", check_args.d, "Digit")->required();
  check->add_option("--type", check_args.type, "t1 or t2")->required();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify-theorem", "Exhaustively check one non-existence result on a finite range");
  verify->add_option("--id", verify_args.id, "Statement id, 1..5")->required();
  verify->add_option("--k-max", verify_args.k_max, "Largest digit count (theorems 1-4)")->capture_default_str();
  verify->add_option("--b-max", verify_args.b_max, "Largest base for id 5")->capture_default_str();
  verify->add_flag("--no-prefilter", verify_args.no_prefilter, "Disable modular prefilters");

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "Search a (b, d, k) box for triangles");
  search_cmd->add_option("--bases", search_args.bases, "Base interval A..B")->required();
  search_cmd->add_option("--digits", search_args.digits, "Digits to test (default: all)")->delimiter(',');
  search_cmd->add_option("--k-max", search_args.k_max, "Largest digit count")->capture_default_str();
  search_cmd->add_option("--types", search_args.types, "t1,t2")->capture_default_str()->delimiter(',');
  search_cmd->add_flag("--no-prefilter", search_args.no_prefilter, "Disable modular prefilters");

  FamilyArgs family_args;
  auto* family = app.add_subcommand("family", "Generate two-digit family members");
  family->add_option("--name", family_args.name, "F1, F2, S1, S2 or U")->required();
  family->add_option("--l", family_args.l, "l (F1, F2)");
  family->add_option("--q", family_args.q, "q (F1, F2, S1, S2)");
  family->add_option("--r", family_args.r, "r (S1, S2)");
  family->add_option("--t", family_args.t, "t (U)");
  family->add_option("--grid", family_args.grid, "Enumerate every valid tuple with parameters <= N");

  CorollaryArgs corollary_args;
  auto* corollary = app.add_subcommand("corollary", "Base b admitting a two-digit triangle for digit d");
  corollary->add_option("--d", corollary_args.d, "Digit")->required();
  corollary->add_option("--type", corollary_args.type, "t1 or t2")->required();

  std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(reversed.begin(), reversed.end());

  const OutputFormat default_format = OutputFormat::JsonLines;
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kOk;
    RecordWriter w(out, default_format);
    w.write(error_record(e.what()));
    return kUsageError;
  }

  RecordWriter w(out, g.format == "csv" ? OutputFormat::Csv : OutputFormat::JsonLines);
  try {
    if (*check) return do_check(check_args, w);
    if (*verify) return do_verify(verify_args, g, w);
    if (*search_cmd) return do_search(search_args, g, w);
    if (*family) return do_family(family_args, w);
    if (*corollary) return do_corollary(corollary_args, w);
  } catch (const ConstraintError& e) {
    w.write(error_record(e.what()));
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace reptri::cli
