#include "zgraph/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <random>
#include <thread>

#include "zgraph/constructions.hpp"
#include "zgraph/primes.hpp"
#include "zgraph/zgen.hpp"

namespace zgraph {

const char* theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::A: return "A";
    case TheoremId::B: return "B";
    case TheoremId::C: return "C";
    case TheoremId::DOM: return "DOM";
    case TheoremId::D: return "D";
    case TheoremId::NILP: return "NILP";
    case TheoremId::GD: return "GD";
    case TheoremId::COMM: return "COMM";
    case TheoremId::ROSE: return "ROSE";
    case TheoremId::BASIC: return "BASIC";
  }
  return "?";
}

TheoremId theorem_id_from_string(std::string_view name) {
  for (TheoremId id : kAllTheorems)
    if (name == theorem_name(id)) return id;
  throw UnknownTheoremId("unknown theorem id '" + std::string(name) + "'");
}

namespace {

std::string elem(const FiniteGroup& g, int x) {
  return std::to_string(x) + "(ord " + std::to_string(g.element_order(x)) + ")";
}

void sabotage_delta(const FiniteGroup& g, Graph& delta) {
  const int n = g.order();
  // prefer a pair whose adjacency is forced either way, so some check fires
  for (int x = 1; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (g.commutes(x, y) &&
          std::gcd(g.element_order(x), g.element_order(y)) == 1) {
        delta.toggle_edge(delta.position(x), delta.position(y));
        return;
      }
  for (int x = 1; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (!g.commutes(x, y)) {
        delta.toggle_edge(delta.position(x), delta.position(y));
        return;
      }
  if (delta.vertex_count() >= 2) delta.toggle_edge(0, 1);
}

bool dominating_in(const Graph& graph, int label) {
  const int pos = graph.position(label);
  return pos >= 0 && graph.degree(pos) == graph.vertex_count() - 1;
}

}  // namespace

AnalysisContext build_context(const FiniteGroup& g, const VerifyConfig& cfg) {
  if (g.order() < 2) throw InvalidParameter("build_context: need |G| >= 2");
  AnalysisContext ctx{.group = g};
  ctx.center_set = center(g);
  ctx.derived_set = derived_subgroup(g);
  ctx.z_group = is_z_group(g);
  ctx.nilpotent = is_nilpotent(g);
  ctx.solvable = is_solvable(g);
  ctx.frobenius = is_frobenius(g, cfg.structure);
  for (std::int64_t p : prime_divisors(g.order()))
    ctx.sylow_cyc_or_gq[p] = sylow_cyclic_or_generalized_quaternion(g, p);

  ctx.delta = cyclic_graph(g);
  if (cfg.negative_control) sabotage_delta(g, ctx.delta);
  if (!g.is_abelian()) ctx.gamma = commuting_graph(g);
  ctx.epg = enhanced_power_graph(g);

  ctx.delta_diam = diameter(ctx.delta);
  if (ctx.gamma) ctx.gamma_diam = diameter(*ctx.gamma);
  ctx.epg_diam = diameter(ctx.epg);
  ctx.delta_components =
      static_cast<int>(connected_components(ctx.delta).size());
  ctx.delta_dominating = dominating_vertices(ctx.delta);
  return ctx;
}

namespace {

TheoremCheck check_A(const AnalysisContext& ctx) {
  TheoremCheck out{TheoremId::A, ctx.z_group};
  if (!out.applicable) return out;
  const bool disconnected =
      ctx.delta_diam.kind == DiameterResult::Kind::disconnected;
  out.passed = disconnected == ctx.frobenius.is_frobenius;
  if (!out.passed)
    out.witness = "delta components=" + std::to_string(ctx.delta_components) +
                  " frobenius=" + (ctx.frobenius.is_frobenius ? "yes" : "no");
  return out;
}

TheoremCheck check_B(const AnalysisContext& ctx) {
  TheoremCheck out{TheoremId::B, ctx.z_group && ctx.delta_diam.is_finite()};
  if (!out.applicable) return out;
  out.passed = ctx.delta_diam.value <= 4;
  if (!out.passed) out.witness = "diam=" + ctx.delta_diam.str();
  return out;
}

TheoremCheck check_C(const AnalysisContext& ctx) {
  TheoremCheck out{TheoremId::C, ctx.z_group};
  if (!out.applicable) return out;
  const bool small_diam = ctx.delta_diam.finite_at_most(2);
  const bool nontrivial_center = ctx.center_set.size() > 1;
  out.passed = small_diam == nontrivial_center;
  if (!out.passed)
    out.witness = "diam=" + ctx.delta_diam.str() +
                  " |Z|=" + std::to_string(ctx.center_set.size());
  return out;
}

TheoremCheck check_DOM(const AnalysisContext& ctx) {
  TheoremCheck out{TheoremId::DOM, true};
  const FiniteGroup& g = ctx.group;
  bool unique_central_prime_subgroup = false;
  std::int64_t found_p = 0;
  for (std::int64_t p : prime_divisors(g.order())) {
    std::int64_t count = 0;
    bool all_central = true;
    for (int x = 1; x < g.order(); ++x)
      if (g.element_order(x) == p) {
        ++count;
        all_central = all_central && ctx.center_set.contains(x);
      }
    if (count == p - 1 && all_central) {
      unique_central_prime_subgroup = true;
      found_p = p;
      break;
    }
  }
  const bool dominatable = !ctx.delta_dominating.empty();
  out.passed = dominatable == unique_central_prime_subgroup;
  if (!out.passed)
    out.witness = "dominating=" + std::to_string(ctx.delta_dominating.size()) +
                  " unique-central-subgroup-of-prime-order=" +
                  (unique_central_prime_subgroup
                       ? "p=" + std::to_string(found_p)
                       : "none");
  return out;
}

TheoremCheck check_D(const AnalysisContext& ctx) {
  TheoremCheck out{TheoremId::D, true, true};
  const FiniteGroup& g = ctx.group;
  for (int x = 1; x < g.order(); ++x) {
    const bool dominating = dominating_in(ctx.delta, x);
    bool characterized = true;
    for (const auto& [p, part] : primary_decomposition(g, x)) {
      if (!ctx.sylow_cyc_or_gq.at(p) || !ctx.center_set.contains(part)) {
        characterized = false;
        break;
      }
    }
    if (dominating != characterized) {
      out.passed = false;
      out.witness = "element " + elem(g, x) + ": dominating=" +
                    (dominating ? "yes" : "no") + " characterization=" +
                    (characterized ? "yes" : "no");
      return out;
    }
  }
  return out;
}

TheoremCheck check_NILP(const AnalysisContext& ctx) {
  TheoremCheck out{TheoremId::NILP, ctx.nilpotent};
  if (!out.applicable) return out;
  bool has_good_sylow = false;
  for (const auto& [p, good] : ctx.sylow_cyc_or_gq)
    has_good_sylow = has_good_sylow || good;
  const bool dominatable = !ctx.delta_dominating.empty();
  out.passed = dominatable == has_good_sylow;
  if (!out.passed)
    out.witness = "dominating=" + std::to_string(ctx.delta_dominating.size()) +
                  " cyclic-or-quaternion-sylow=" +
                  (has_good_sylow ? "yes" : "no");
  return out;
}

TheoremCheck check_GD(const AnalysisContext& ctx) {
  TheoremCheck out{TheoremId::GD, ctx.z_group && !ctx.group.is_abelian() &&
                                      ctx.center_set.size() == 1};
  if (!out.applicable) return out;
  const Graph& delta = ctx.delta;
  const Graph& gamma = *ctx.gamma;
  if (delta.vertices() != gamma.vertices()) {
    out.witness = "vertex sets differ";
    return out;
  }
  for (int a = 0; a < delta.vertex_count(); ++a)
    for (int b = a + 1; b < delta.vertex_count(); ++b)
      if (delta.adjacent(a, b) != gamma.adjacent(a, b)) {
        out.witness = "edge (" + std::to_string(delta.label(a)) + "," +
                      std::to_string(delta.label(b)) + ") differs";
        return out;
      }
  out.passed = true;
  return out;
}

TheoremCheck check_COMM(const AnalysisContext& ctx) {
  TheoremCheck out{TheoremId::COMM, ctx.z_group && ctx.center_set.size() == 1 &&
                                        !ctx.frobenius.is_frobenius};
  if (!out.applicable) return out;
  out.passed = ctx.gamma_diam && ctx.gamma_diam->is_finite() &&
               (ctx.gamma_diam->value == 3 || ctx.gamma_diam->value == 4);
  if (!out.passed)
    out.witness =
        "gamma diam=" + (ctx.gamma_diam ? ctx.gamma_diam->str() : "n/a");
  return out;
}

TheoremCheck check_ROSE(const AnalysisContext& ctx) {
  TheoremCheck out{TheoremId::ROSE, ctx.z_group};
  if (!out.applicable) return out;
  const FiniteGroup& g = ctx.group;
  const ElemSet& derived = ctx.derived_set;
  if (!is_cyclic(g, derived)) {
    out.witness = "derived subgroup of size " + std::to_string(derived.size()) +
                  " is not cyclic";
    return out;
  }
  const int index = g.order() / derived.size();
  if (std::gcd<std::int64_t>(derived.size(), index) != 1) {
    out.witness = "derived subgroup is not a Hall subgroup: |G'|=" +
                  std::to_string(derived.size()) +
                  " index=" + std::to_string(index);
    return out;
  }
  const FiniteGroup q = quotient_group(g, derived);
  bool quotient_cyclic = false;
  for (int x = 0; x < q.order() && !quotient_cyclic; ++x)
    quotient_cyclic = q.element_order(x) == q.order();
  if (!quotient_cyclic) {
    out.witness = "G/G' of order " + std::to_string(q.order()) +
                  " is not cyclic";
    return out;
  }
  out.passed = true;
  return out;
}

TheoremCheck check_BASIC(const AnalysisContext& ctx, const VerifyConfig& cfg) {
  TheoremCheck out{TheoremId::BASIC, true};
  const FiniteGroup& g = ctx.group;
  const Graph& delta = ctx.delta;
  const int n = g.order();

  // commuting elements with coprime orders must be adjacent
  for (int x = 1; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (g.commutes(x, y) &&
          std::gcd(g.element_order(x), g.element_order(y)) == 1 &&
          !delta.adjacent(delta.position(x), delta.position(y))) {
        out.witness = "coprime commuting pair not adjacent: " + elem(g, x) +
                      "," + elem(g, y);
        return out;
      }

  // conjugation preserves adjacency
  auto covariant_at = [&](int x, int y, int a) {
    const int xa = g.conj(x, a), ya = g.conj(y, a);
    return delta.adjacent(delta.position(x), delta.position(y)) ==
           delta.adjacent(delta.position(xa), delta.position(ya));
  };
  if (cfg.exhaustive_covariance) {
    for (int x = 1; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        for (int a = 0; a < n; ++a)
          if (!covariant_at(x, y, a)) {
            out.witness = "conjugation covariance fails: x=" + elem(g, x) +
                          " y=" + elem(g, y) + " g=" + std::to_string(a);
            return out;
          }
  } else if (n > 2) {
    std::mt19937_64 rng(cfg.seed ^ std::hash<std::string>{}(g.name()) ^
                        static_cast<std::uint64_t>(n));
    std::uniform_int_distribution<int> nonident(1, n - 1);
    std::uniform_int_distribution<int> any(0, n - 1);
    for (int i = 0; i < cfg.covariance_samples; ++i) {
      const int x = nonident(rng);
      int y = nonident(rng);
      if (x == y) continue;
      const int a = any(rng);
      if (!covariant_at(x, y, a)) {
        out.witness = "conjugation covariance fails: x=" + elem(g, x) +
                      " y=" + elem(g, y) + " g=" + std::to_string(a);
        return out;
      }
    }
  }

  // every delta edge between noncentral vertices is a commuting-graph edge
  if (ctx.gamma) {
    const Graph& gamma = *ctx.gamma;
    for (int a = 0; a < delta.vertex_count(); ++a) {
      const int pa = gamma.position(delta.label(a));
      if (pa < 0) continue;  // central vertex, not in gamma
      for (int b = a + 1; b < delta.vertex_count(); ++b) {
        const int pb = gamma.position(delta.label(b));
        if (pb < 0) continue;
        if (delta.adjacent(a, b) && !gamma.adjacent(pa, pb)) {
          out.witness = "delta edge missing from commuting graph: (" +
                        std::to_string(delta.label(a)) + "," +
                        std::to_string(delta.label(b)) + ")";
          return out;
        }
      }
    }
  }

  if (!ctx.epg_diam.is_finite()) {
    out.witness = "enhanced power graph not connected";
    return out;
  }

  if (ctx.z_group) {
    const auto primes = prime_divisors(n);
    if (!is_p_nilpotent(g, primes.front(), cfg.structure)) {
      out.witness = "no normal p-complement at smallest prime " +
                    std::to_string(primes.front());
      return out;
    }
    if (!ctx.solvable) {
      out.witness = "Z-group not solvable";
      return out;
    }
  }

  out.passed = true;
  return out;
}

}  // namespace

TheoremCheck check_theorem(const AnalysisContext& ctx, TheoremId id,
                           const VerifyConfig& cfg) {
  switch (id) {
    case TheoremId::A: return check_A(ctx);
    case TheoremId::B: return check_B(ctx);
    case TheoremId::C: return check_C(ctx);
    case TheoremId::DOM: return check_DOM(ctx);
    case TheoremId::D: return check_D(ctx);
    case TheoremId::NILP: return check_NILP(ctx);
    case TheoremId::GD: return check_GD(ctx);
    case TheoremId::COMM: return check_COMM(ctx);
    case TheoremId::ROSE: return check_ROSE(ctx);
    case TheoremId::BASIC: return check_BASIC(ctx, cfg);
  }
  throw UnknownTheoremId("unknown theorem id");
}

TheoremCheck check_theorem(const FiniteGroup& g, TheoremId id,
                           const VerifyConfig& cfg) {
  return check_theorem(build_context(g, cfg), id, cfg);
}

namespace {

GraphMetrics metrics_of(const Graph& graph, const DiameterResult& diam) {
  GraphMetrics m;
  m.vertices = graph.vertex_count();
  m.edges = graph.edge_count();
  m.components = static_cast<int>(connected_components(graph).size());
  m.diam = diam;
  m.dominating = static_cast<int>(dominating_vertices(graph).size());
  return m;
}

}  // namespace

int GroupReport::failed_checks() const {
  int failed = 0;
  for (const auto& t : theorems)
    if (t.applicable && !t.passed) ++failed;
  return failed;
}

GroupReport analyze(const FiniteGroup& g, const VerifyConfig& cfg,
                    std::string source) {
  const AnalysisContext ctx = build_context(g, cfg);
  GroupReport report;
  report.name = g.name();
  report.order = g.order();
  report.source = std::move(source);
  report.is_z_group = ctx.z_group;
  report.is_frobenius = ctx.frobenius.is_frobenius;
  report.is_nilpotent = ctx.nilpotent;
  report.is_solvable = ctx.solvable;
  report.center_order = ctx.center_set.size();
  report.derived_order = ctx.derived_set.size();
  report.cyclic = metrics_of(ctx.delta, ctx.delta_diam);
  if (ctx.gamma) report.commuting = metrics_of(*ctx.gamma, *ctx.gamma_diam);
  report.enhanced = metrics_of(ctx.epg, ctx.epg_diam);
  for (TheoremId id : kAllTheorems)
    report.theorems.push_back(check_theorem(ctx, id, cfg));
  return report;
}

SuiteReport run_suite(const std::vector<GroupSource>& corpus,
                      const VerifyConfig& cfg,
                      std::vector<GroupReport>* out_reports,
                      std::string corpus_description) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<GroupReport> reports(corpus.size());

  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t i = cursor.fetch_add(1); i < corpus.size();
         i = cursor.fetch_add(1)) {
      GroupReport& report = reports[i];
      try {
        const FiniteGroup g = corpus[i].make();
        report = analyze(g, cfg, corpus[i].kind);
      } catch (const std::exception& e) {
        report.source = corpus[i].kind;
        if (report.name.empty()) report.name = "<unnamed>";
        report.error = e.what();
      }
    }
  };
  const int jobs = std::max(1, cfg.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::sort(reports.begin(), reports.end(),
            [](const GroupReport& a, const GroupReport& b) {
              return std::tie(a.order, a.name, a.source) <
                     std::tie(b.order, b.name, b.source);
            });

  SuiteReport suite;
  suite.corpus_description = std::move(corpus_description);
  suite.group_count = static_cast<int>(reports.size());
  for (TheoremId id : kAllTheorems)
    suite.per_theorem.emplace_back(theorem_name(id), TheoremTotals{});
  for (const GroupReport& report : reports) {
    if (!report.error.empty()) {
      suite.failures.push_back({report.name, "error", report.error});
      continue;
    }
    for (const TheoremCheck& check : report.theorems) {
      auto& totals = suite.per_theorem[static_cast<int>(check.id)].second;
      if (!check.applicable) continue;
      ++totals.applicable;
      if (check.passed) {
        ++totals.passed;
      } else {
        ++totals.failed;
        suite.failures.push_back(
            {report.name, theorem_name(check.id), check.witness});
      }
    }
  }
  suite.duration_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (out_reports) *out_reports = std::move(reports);
  return suite;
}

std::vector<GroupSource> default_corpus(int min_order, int max_order,
                                        bool extras) {
  std::vector<GroupSource> corpus;
  for (int n = std::max(2, min_order); n <= max_order; ++n)
    for (const ZParams& params : enumerate_z_params(n))
      corpus.push_back({"zparams", [params] { return realize(params); }});
  if (extras) {
    for (int n = 3; n <= 12; ++n)
      corpus.push_back({"constructor", [n] { return dihedral_group(n); }});
    for (int n = 2; n <= 8; ++n)
      corpus.push_back({"constructor", [n] { return dicyclic_group(n); }});
    for (int n = 2; n <= 64; ++n)
      corpus.push_back({"constructor", [n] { return cyclic_group(n); }});
    corpus.push_back({"constructor", [] {
                        return direct_product(cyclic_group(2), cyclic_group(2));
                      }});
    corpus.push_back({"constructor", [] {
                        return direct_product(cyclic_group(2), cyclic_group(4));
                      }});
    corpus.push_back({"constructor", [] {
                        return direct_product(dicyclic_group(2).renamed("Q8"),
                                              cyclic_group(3));
                      }});
    corpus.push_back({"permutations", [] { return symmetric_group(4); }});
    corpus.push_back({"permutations", [] { return alternating_group(4); }});
    corpus.push_back({"permutations", [] { return alternating_group(5); }});
    corpus.push_back({"permutations", [] { return frobenius_group_20(); }});
  }
  return corpus;
}

}  // namespace zgraph
