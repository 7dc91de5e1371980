#include "zgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>

#include "zgraph/structure.hpp"

namespace zgraph {

const char* to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::cyclic: return "cyclic";
    case GraphKind::commuting: return "commuting";
    case GraphKind::enhanced_power: return "enhanced_power";
  }
  return "?";
}

std::string DiameterResult::str() const {
  switch (kind) {
    case Kind::finite: return std::to_string(value);
    case Kind::disconnected: return "disconnected";
    case Kind::empty: return "empty";
  }
  return "?";
}

Graph::Graph(GraphKind kind, std::string group_name, std::vector<int> labels,
             std::vector<int> label_orders)
    : kind_(kind),
      group_name_(std::move(group_name)),
      labels_(std::move(labels)),
      label_orders_(std::move(label_orders)) {
  words_ = (vertex_count() + 63) / 64;
  bits_.assign(static_cast<std::size_t>(vertex_count()) * words_, 0);
}

int Graph::position(int label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return -1;
  return static_cast<int>(it - labels_.begin());
}

void Graph::add_edge(int a, int b) {
  if (a == b) return;
  bits_[static_cast<std::size_t>(a) * words_ + (b >> 6)] |= 1ull << (b & 63);
  bits_[static_cast<std::size_t>(b) * words_ + (a >> 6)] |= 1ull << (a & 63);
}

void Graph::toggle_edge(int a, int b) {
  if (a == b) return;
  bits_[static_cast<std::size_t>(a) * words_ + (b >> 6)] ^= 1ull << (b & 63);
  bits_[static_cast<std::size_t>(b) * words_ + (a >> 6)] ^= 1ull << (a & 63);
}

void Graph::or_row(int pos, std::span<const std::uint64_t> mask) {
  std::uint64_t* row_bits = bits_.data() + static_cast<std::size_t>(pos) * words_;
  for (int i = 0; i < words_; ++i) row_bits[i] |= mask[i];
  row_bits[pos >> 6] &= ~(1ull << (pos & 63));
}

int Graph::degree(int pos) const {
  int d = 0;
  for (std::uint64_t w : row(pos)) d += std::popcount(w);
  return d;
}

std::int64_t Graph::edge_count() const {
  std::int64_t total = 0;
  for (int v = 0; v < vertex_count(); ++v) total += degree(v);
  return total / 2;
}

namespace {

/// Mark the clique spanned by the elements of <z> for every z, which is
/// exactly the "some cyclic subgroup contains both" edge rule. include_identity
/// selects the enhanced-power vertex set.
Graph build_cyclic_rule_graph(const FiniteGroup& g, GraphKind kind,
                              bool include_identity) {
  const int n = g.order();
  std::vector<int> labels;
  labels.reserve(include_identity ? n : n - 1);
  for (int x = include_identity ? 0 : 1; x < n; ++x) labels.push_back(x);
  std::vector<int> orders(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i)
    orders[i] = g.element_order(labels[i]);
  Graph graph(kind, g.name(), std::move(labels), std::move(orders));

  const int words = graph.words_per_row();
  std::vector<std::uint64_t> mask(words);
  std::vector<int> members;
  auto pos_of = [&](int label) { return include_identity ? label : label - 1; };
  for (int z = 1; z < n; ++z) {
    std::fill(mask.begin(), mask.end(), 0);
    members.clear();
    if (include_identity) {
      members.push_back(pos_of(FiniteGroup::kIdentity));
      mask[0] |= 1ull;
    }
    int w = z;
    while (w != FiniteGroup::kIdentity) {
      const int pos = pos_of(w);
      members.push_back(pos);
      mask[pos >> 6] |= 1ull << (pos & 63);
      w = g.mul(w, z);
    }
    for (int pos : members) graph.or_row(pos, mask);
  }
  return graph;
}

}  // namespace

Graph cyclic_graph(const FiniteGroup& g) {
  if (g.order() < 2) throw TrivialGroup("cyclic_graph: need |G| >= 2");
  return build_cyclic_rule_graph(g, GraphKind::cyclic, false);
}

Graph cyclic_graph_naive(const FiniteGroup& g) {
  if (g.order() < 2) throw TrivialGroup("cyclic_graph: need |G| >= 2");
  const int n = g.order();
  std::vector<int> labels(n - 1);
  std::vector<int> orders(n - 1);
  for (int x = 1; x < n; ++x) {
    labels[x - 1] = x;
    orders[x - 1] = g.element_order(x);
  }
  Graph graph(GraphKind::cyclic, g.name(), std::move(labels), std::move(orders));
  for (int x = 1; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (cyclic_pair(g, x, y)) graph.add_edge(x - 1, y - 1);
  return graph;
}

Graph commuting_graph(const FiniteGroup& g) {
  if (g.is_abelian())
    throw AbelianGroup("commuting_graph: defined for nonabelian groups only");
  const ElemSet z = center(g);
  std::vector<int> labels;
  for (int x = 0; x < g.order(); ++x)
    if (!z.contains(x)) labels.push_back(x);
  std::vector<int> orders(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i)
    orders[i] = g.element_order(labels[i]);
  Graph graph(GraphKind::commuting, g.name(), std::move(labels),
              std::move(orders));
  const int v = graph.vertex_count();
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b)
      if (g.commutes(graph.label(a), graph.label(b))) graph.add_edge(a, b);
  return graph;
}

Graph enhanced_power_graph(const FiniteGroup& g) {
  if (g.order() < 1) throw TrivialGroup("enhanced_power_graph: need |G| >= 1");
  return build_cyclic_rule_graph(g, GraphKind::enhanced_power, true);
}

namespace {

/// One BFS with bit-row frontier expansion; returns (eccentricity, reached).
std::pair<int, int> bfs_eccentricity(const Graph& g, int src,
                                     std::vector<std::uint64_t>& visited,
                                     std::vector<std::uint64_t>& frontier,
                                     std::vector<std::uint64_t>& next) {
  const int words = g.words_per_row();
  std::fill(visited.begin(), visited.end(), 0);
  std::fill(frontier.begin(), frontier.end(), 0);
  visited[src >> 6] = frontier[src >> 6] = 1ull << (src & 63);
  int depth = 0;
  int reached = 1;
  while (true) {
    std::fill(next.begin(), next.end(), 0);
    for (int w = 0; w < words; ++w) {
      std::uint64_t bits = frontier[w];
      while (bits) {
        const int v = (w << 6) + std::countr_zero(bits);
        bits &= bits - 1;
        const auto row = g.row(v);
        for (int i = 0; i < words; ++i) next[i] |= row[i];
      }
    }
    int fresh = 0;
    for (int i = 0; i < words; ++i) {
      next[i] &= ~visited[i];
      visited[i] |= next[i];
      fresh += std::popcount(next[i]);
    }
    if (fresh == 0) break;
    reached += fresh;
    ++depth;
    std::swap(frontier, next);
  }
  return {depth, reached};
}

}  // namespace

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int v = g.vertex_count();
  std::vector<char> seen(v, 0);
  std::vector<std::vector<int>> components;
  for (int s = 0; s < v; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      comp.push_back(g.label(u));
      const auto row = g.row(u);
      for (int w = 0; w < g.words_per_row(); ++w) {
        std::uint64_t bits = row[w];
        while (bits) {
          const int t = (w << 6) + std::countr_zero(bits);
          bits &= bits - 1;
          if (!seen[t]) {
            seen[t] = 1;
            stack.push_back(t);
          }
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

DiameterResult diameter(const Graph& g) {
  const int v = g.vertex_count();
  if (v == 0) return DiameterResult::empty();
  if (v == 1) return DiameterResult::finite(0);
  const int words = g.words_per_row();
  std::vector<std::uint64_t> visited(words), frontier(words), next(words);
  int diam = 0;
  for (int s = 0; s < v; ++s) {
    auto [ecc, reached] = bfs_eccentricity(g, s, visited, frontier, next);
    if (reached < v) return DiameterResult::disconnected();
    diam = std::max(diam, ecc);
  }
  return DiameterResult::finite(diam);
}

std::vector<int> dominating_vertices(const Graph& g) {
  std::vector<int> out;
  for (int pos = 0; pos < g.vertex_count(); ++pos)
    if (g.degree(pos) == g.vertex_count() - 1) out.push_back(g.label(pos));
  return out;
}

void export_dot(const Graph& g, std::ostream& os) {
  os << "graph \"" << to_string(g.kind()) << ":" << g.group_name() << "\" {\n";
  for (int pos = 0; pos < g.vertex_count(); ++pos)
    os << "  " << g.label(pos) << " [label=\"" << g.label(pos) << " (ord "
       << g.label_order(pos) << ")\"];\n";
  for (int a = 0; a < g.vertex_count(); ++a)
    for (int b = a + 1; b < g.vertex_count(); ++b)
      if (g.adjacent(a, b))
        os << "  " << g.label(a) << " -- " << g.label(b) << ";\n";
  os << "}\n";
}

void export_dot(const Graph& g, const std::filesystem::path& path) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot open " + path.string() + " for writing");
  export_dot(g, os);
  if (!os) throw IoError("write failed: " + path.string());
}

void export_edge_list(const Graph& g, std::ostream& os) {
  for (int a = 0; a < g.vertex_count(); ++a)
    for (int b = a + 1; b < g.vertex_count(); ++b)
      if (g.adjacent(a, b)) os << g.label(a) << " " << g.label(b) << "\n";
}

void export_edge_list(const Graph& g, const std::filesystem::path& path) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot open " + path.string() + " for writing");
  export_edge_list(g, os);
  if (!os) throw IoError("write failed: " + path.string());
}

EdgeList read_edge_list(std::istream& is) {
  EdgeList out;
  std::string line;
  int lineno = 0;
  auto bad = [&](const std::string& why) {
    throw ParseError("line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(is, line)) {
    ++lineno;
    // strip comments and DOT decoration
    if (auto h = line.find("//"); h != std::string::npos) line.resize(h);
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    if (auto h = line.find('['); h != std::string::npos) line.resize(h);
    std::string cleaned;
    for (char c : line) {
      if (c == ';' || c == '{' || c == '}') continue;
      cleaned += c;
    }
    if (auto dash = cleaned.find("--"); dash != std::string::npos)
      cleaned.replace(dash, 2, " ");
    std::istringstream ss(cleaned);
    std::string first;
    if (!(ss >> first)) continue;
    if (first == "graph" || first == "strict") continue;
    auto to_int = [&](const std::string& tok) {
      try {
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size() || v < 0) bad("bad vertex '" + tok + "'");
        return v;
      } catch (const ParseError&) {
        throw;
      } catch (...) {
        bad("bad vertex '" + tok + "'");
        return 0;
      }
    };
    const int u = to_int(first);
    std::string second;
    if (ss >> second) {
      const int v = to_int(second);
      std::string rest;
      if (ss >> rest) bad("trailing tokens");
      if (u != v) out.edges.emplace_back(std::min(u, v), std::max(u, v));
      out.vertices.push_back(u);
      out.vertices.push_back(v);
    } else {
      out.vertices.push_back(u);
    }
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()),
                     out.vertices.end());
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()),
                  out.edges.end());
  return out;
}

}  // namespace zgraph
