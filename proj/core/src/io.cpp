#include "zgraph/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "zgraph/constructions.hpp"
#include "zgraph/zgen.hpp"

namespace zgraph {

namespace {

constexpr int kReportSchemaVersion = 1;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << is.rdbuf();
  return std::move(buf).str();
}

GroupFileFormat by_extension(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (ext == ".cayley" || ext == ".tbl" || ext == ".table")
    return GroupFileFormat::cayley;
  if (ext == ".perm" || ext == ".perms" || ext == ".gens" || ext == ".cycles")
    return GroupFileFormat::permutations;
  if (ext == ".zp" || ext == ".zparams") return GroupFileFormat::zparams;
  return GroupFileFormat::auto_detect;
}

GroupFileFormat sniff(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '(') return GroupFileFormat::permutations;
    break;
  }
  if (text.find(':') != std::string_view::npos)
    return GroupFileFormat::zparams;
  return GroupFileFormat::cayley;
}

FiniteGroup parse_cayley_text(std::string_view text, std::string name,
                              const GroupOptions& opts) {
  std::istringstream is{std::string(text)};
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(is, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  auto bad = [&](const std::string& why) -> ParseError {
    return ParseError("line " + std::to_string(lineno) + ": " + why);
  };
  if (!next_line()) throw ParseError("empty Cayley-table file");
  int n = 0;
  {
    std::istringstream ss(line);
    if (!(ss >> n) || n < 1) throw bad("expected the group order");
    std::string rest;
    if (ss >> rest) throw bad("trailing tokens after the order");
  }
  std::vector<std::vector<int>> rows;
  for (int r = 0; r < n; ++r) {
    if (!next_line()) throw ParseError("expected " + std::to_string(n) +
                                       " table rows, got " + std::to_string(r));
    std::istringstream ss(line);
    std::vector<int> row(n);
    for (int c = 0; c < n; ++c)
      if (!(ss >> row[c])) throw bad("expected " + std::to_string(n) +
                                     " entries in table row");
    std::string rest;
    if (ss >> rest) throw bad("trailing tokens in table row");
    rows.push_back(std::move(row));
  }
  return FiniteGroup::from_cayley_table(rows, std::move(name), opts);
}

FiniteGroup parse_permutations_text(std::string_view text, std::string name,
                                    const GroupOptions& opts) {
  std::istringstream is{std::string(text)};
  std::string line;
  int lineno = 0;
  std::vector<Permutation> gens;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      gens.push_back(parse_cycles(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (gens.empty()) throw ParseError("no generators in permutation file");
  return from_permutation_generators(std::move(gens), std::move(name), opts);
}

FiniteGroup parse_zparams_text(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t\r");
    try {
      return realize(ZParams::parse(line.substr(begin, end - begin + 1)));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  throw ParseError("no m:n:r line in parameter file");
}

std::string source_kind_of(GroupFileFormat format) {
  switch (format) {
    case GroupFileFormat::cayley: return "file";
    case GroupFileFormat::permutations: return "permutations";
    case GroupFileFormat::zparams: return "zparams";
    case GroupFileFormat::auto_detect: break;
  }
  return "file";
}

}  // namespace

ParsedGroup parse_group_text(std::string_view text, GroupFileFormat format,
                             std::string name, const GroupOptions& opts) {
  if (format == GroupFileFormat::auto_detect) format = sniff(text);
  switch (format) {
    case GroupFileFormat::cayley:
      return {parse_cayley_text(text, std::move(name), opts), format,
              source_kind_of(format)};
    case GroupFileFormat::permutations:
      return {parse_permutations_text(text, std::move(name), opts), format,
              source_kind_of(format)};
    case GroupFileFormat::zparams:
      return {parse_zparams_text(text), format, source_kind_of(format)};
    case GroupFileFormat::auto_detect: break;
  }
  throw ParseError("could not determine group file format");
}

ParsedGroup parse_group_file(const std::filesystem::path& path,
                             GroupFileFormat format, const GroupOptions& opts) {
  const std::string text = read_file(path);
  if (format == GroupFileFormat::auto_detect) format = by_extension(path);
  return parse_group_text(text, format, path.stem().string(), opts);
}

void write_cayley_table(const FiniteGroup& g, std::ostream& os) {
  os << g.order() << "\n";
  for (int x = 0; x < g.order(); ++x) {
    for (int y = 0; y < g.order(); ++y) os << (y ? " " : "") << g.mul(x, y);
    os << "\n";
  }
}

void write_cayley_table(const FiniteGroup& g,
                        const std::filesystem::path& path) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot open " + path.string() + " for writing");
  write_cayley_table(g, os);
  if (!os) throw IoError("write failed: " + path.string());
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json diam_json(const DiameterResult& d) {
  switch (d.kind) {
    case DiameterResult::Kind::finite:
      return {{"kind", "finite"}, {"value", d.value}};
    case DiameterResult::Kind::disconnected:
      return {{"kind", "disconnected"}};
    case DiameterResult::Kind::empty:
      return {{"kind", "empty"}};
  }
  return {};
}

ordered_json metrics_json(const GraphMetrics& m) {
  return {{"vertices", m.vertices},
          {"edges", m.edges},
          {"components", m.components},
          {"diameter", diam_json(m.diam)},
          {"dominating", m.dominating}};
}

}  // namespace

std::string report_json_line(const GroupReport& r) {
  ordered_json j;
  j["schema"] = kReportSchemaVersion;
  j["record"] = "group";
  j["name"] = r.name;
  j["order"] = r.order;
  j["source"] = r.source;
  if (!r.error.empty()) {
    j["error"] = r.error;
    return j.dump();
  }
  j["z_group"] = r.is_z_group;
  j["frobenius"] = r.is_frobenius;
  j["nilpotent"] = r.is_nilpotent;
  j["solvable"] = r.is_solvable;
  j["center_order"] = r.center_order;
  j["derived_order"] = r.derived_order;
  ordered_json graphs;
  graphs["cyclic"] = metrics_json(r.cyclic);
  graphs["commuting"] =
      r.commuting ? metrics_json(*r.commuting) : ordered_json(nullptr);
  graphs["enhanced_power"] = metrics_json(r.enhanced);
  j["graphs"] = std::move(graphs);
  ordered_json checks = ordered_json::array();
  for (const TheoremCheck& t : r.theorems) {
    ordered_json c;
    c["id"] = theorem_name(t.id);
    c["applicable"] = t.applicable;
    if (t.applicable) c["passed"] = t.passed;
    if (!t.witness.empty()) c["witness"] = t.witness;
    checks.push_back(std::move(c));
  }
  j["theorems"] = std::move(checks);
  return j.dump();
}

std::string summary_json_line(const SuiteReport& s) {
  ordered_json j;
  j["schema"] = kReportSchemaVersion;
  j["record"] = "summary";
  j["corpus"] = s.corpus_description;
  j["groups"] = s.group_count;
  ordered_json totals;
  for (const auto& [name, t] : s.per_theorem)
    totals[name] = {{"applicable", t.applicable},
                    {"passed", t.passed},
                    {"failed", t.failed}};
  j["theorems"] = std::move(totals);
  ordered_json failures = ordered_json::array();
  for (const SuiteFailure& f : s.failures)
    failures.push_back({{"group", f.group},
                        {"theorem", f.theorem},
                        {"witness", f.witness}});
  j["failures"] = std::move(failures);
  j["duration_ms"] =
      static_cast<std::int64_t>(s.duration_seconds * 1000.0 + 0.5);
  return j.dump();
}

void write_suite_report(std::ostream& os,
                        const std::vector<GroupReport>& reports,
                        const SuiteReport& suite) {
  for (const GroupReport& r : reports) os << report_json_line(r) << "\n";
  os << summary_json_line(suite) << "\n";
}

}  // namespace zgraph
