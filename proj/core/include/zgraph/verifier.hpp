#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zgraph/graph.hpp"
#include "zgraph/group.hpp"
#include "zgraph/structure.hpp"

namespace zgraph {

/// The checkable statements. A/B: a Z-group's cyclic graph is disconnected
/// iff the group is Frobenius, and has diameter <= 4 when connected.
/// C: diameter <= 2 iff the center is nontrivial. DOM: a dominating vertex
/// exists iff some prime p has exactly p-1 elements of order p, all central.
/// D: the per-element dominating-vertex characterization through primary
/// components and Sylow structure. NILP: the nilpotent-group corollary of
/// DOM. GD: for centerless Z-groups the cyclic and commuting graphs
/// coincide. COMM: centerless non-Frobenius Z-groups have commuting-graph
/// diameter 3 or 4. ROSE: a Z-group's derived subgroup is a cyclic Hall
/// subgroup with cyclic quotient. BASIC: the elementary facts every group
/// must satisfy (coprime-commuting adjacency, conjugation covariance,
/// cyclic-graph edges inside the commuting graph, enhanced-power-graph
/// connectivity, and for Z-groups p-nilpotency at the smallest prime and
/// solvability).
enum class TheoremId { A, B, C, DOM, D, NILP, GD, COMM, ROSE, BASIC };

inline constexpr TheoremId kAllTheorems[] = {
    TheoremId::A,    TheoremId::B,  TheoremId::C,    TheoremId::DOM,
    TheoremId::D,    TheoremId::NILP, TheoremId::GD, TheoremId::COMM,
    TheoremId::ROSE, TheoremId::BASIC};

const char* theorem_name(TheoremId id);
TheoremId theorem_id_from_string(std::string_view name);  // UnknownTheoremId

struct TheoremCheck {
  TheoremId id;
  bool applicable = false;
  bool passed = false;       // meaningful only when applicable
  std::string witness;       // nonempty on failure: a violating element/pair
};

struct VerifyConfig {
  /// Random (x, y, g) conjugation-covariance samples per group; exhaustive
  /// instead when exhaustive_covariance is set.
  int covariance_samples = 200;
  bool exhaustive_covariance = false;
  std::uint64_t seed = 0x9E3779B97F4A7C15ULL;
  /// Deliberately flips one cyclic-graph edge per group so the suite must
  /// report failures; negative-control fixture.
  bool negative_control = false;
  int jobs = 1;
  GroupOptions group;
  StructureOptions structure;
};

/// Everything the theorem checks consume, computed once per group. Exposed
/// so tests can corrupt a graph and watch the checks fail.
struct AnalysisContext {
  FiniteGroup group;
  ElemSet center_set;
  ElemSet derived_set;
  bool z_group = false;
  bool nilpotent = false;
  bool solvable = false;
  FrobeniusResult frobenius;
  /// Per prime divisor of |G|: Sylow p-subgroup cyclic or generalized
  /// quaternion.
  std::map<std::int64_t, bool> sylow_cyc_or_gq;

  Graph delta;                 // cyclic graph
  std::optional<Graph> gamma;  // commuting graph; absent for abelian groups
  Graph epg;                   // enhanced power graph

  DiameterResult delta_diam;
  std::optional<DiameterResult> gamma_diam;
  DiameterResult epg_diam;
  int delta_components = 0;
  std::vector<int> delta_dominating;
};

/// Requires |g| >= 2.
AnalysisContext build_context(const FiniteGroup& g,
                              const VerifyConfig& cfg = {});

TheoremCheck check_theorem(const AnalysisContext& ctx, TheoremId id,
                           const VerifyConfig& cfg = {});
TheoremCheck check_theorem(const FiniteGroup& g, TheoremId id,
                           const VerifyConfig& cfg = {});

struct GraphMetrics {
  int vertices = 0;
  std::int64_t edges = 0;
  int components = 0;
  DiameterResult diam;
  int dominating = 0;
};

struct GroupReport {
  std::string name;
  int order = 0;
  std::string source;  // constructor | zparams | file | permutations
  bool is_z_group = false;
  bool is_frobenius = false;
  bool is_nilpotent = false;
  bool is_solvable = false;
  int center_order = 0;
  int derived_order = 0;
  GraphMetrics cyclic;
  std::optional<GraphMetrics> commuting;
  GraphMetrics enhanced;
  std::vector<TheoremCheck> theorems;
  std::string error;  // nonempty when analysis itself failed

  int failed_checks() const;
};

GroupReport analyze(const FiniteGroup& g, const VerifyConfig& cfg = {},
                    std::string source = "constructor");

struct GroupSource {
  std::string kind;  // constructor | zparams | file | permutations
  std::function<FiniteGroup()> make;
};

struct TheoremTotals {
  int applicable = 0;
  int passed = 0;
  int failed = 0;
};

struct SuiteFailure {
  std::string group;
  std::string theorem;  // theorem name, or "error" for analysis failures
  std::string witness;
};

struct SuiteReport {
  std::string corpus_description;
  int group_count = 0;
  std::vector<std::pair<std::string, TheoremTotals>> per_theorem;  // fixed order
  std::vector<SuiteFailure> failures;
  double duration_seconds = 0.0;

  int failed_total() const { return static_cast<int>(failures.size()); }
};

/// Analyze every source (cfg.jobs groups in flight), aggregate totals.
/// Reports come back sorted by (order, name, source); per-group errors are
/// recorded as failures, never propagated.
SuiteReport run_suite(const std::vector<GroupSource>& corpus,
                      const VerifyConfig& cfg = {},
                      std::vector<GroupReport>* out_reports = nullptr,
                      std::string corpus_description = "");

/// The default corpus: every Z-group of order min_order..max_order, plus
/// (with extras) dihedral 3..12, dicyclic 2..8, cyclic 2..64, C2xC2, C2xC4,
/// Q8xC3, and the permutation groups S4, A4, A5, F20.
std::vector<GroupSource> default_corpus(int min_order, int max_order,
                                        bool extras = true);

}  // namespace zgraph
