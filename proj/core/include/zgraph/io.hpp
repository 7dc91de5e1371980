#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "zgraph/group.hpp"
#include "zgraph/verifier.hpp"

namespace zgraph {

enum class GroupFileFormat { auto_detect, cayley, permutations, zparams };

/// Cayley-table text: first line n, then n lines of n 0-based indices.
/// Permutation text: one generator per line in disjoint-cycle notation.
/// ZParams text: a single "m:n:r" line.
struct ParsedGroup {
  FiniteGroup group;
  GroupFileFormat format;
  /// Source kind for reports: "file" for tables, "permutations", "zparams".
  std::string source_kind;
};

/// Format chosen by the explicit argument, else by extension
/// (.cayley/.tbl, .perm/.perms/.gens, .zp/.zparams), else sniffed from the
/// first nonblank line.
ParsedGroup parse_group_file(const std::filesystem::path& path,
                             GroupFileFormat format = GroupFileFormat::auto_detect,
                             const GroupOptions& opts = {});

ParsedGroup parse_group_text(std::string_view text, GroupFileFormat format,
                             std::string name, const GroupOptions& opts = {});

void write_cayley_table(const FiniteGroup& g, std::ostream& os);
void write_cayley_table(const FiniteGroup& g, const std::filesystem::path& path);

/// Line-delimited report records (schema version 1): one JSON object per
/// group followed by one summary object.
std::string report_json_line(const GroupReport& report);
std::string summary_json_line(const SuiteReport& suite);
void write_suite_report(std::ostream& os,
                        const std::vector<GroupReport>& reports,
                        const SuiteReport& suite);

}  // namespace zgraph
