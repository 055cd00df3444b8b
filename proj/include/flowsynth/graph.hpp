#pragma once

#include <array>
#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "flowsynth/vocab.hpp"

namespace flowsynth {

// Maximum node count the edge classifier can express; charts are generated
// with 3..kPad nodes.
inline constexpr int kPad = 6;

// Edge cell classes: 0 none, 1 normal flow or the YES branch of a decision,
// 2 the NO branch.
inline constexpr int kEdgeNone = 0;
inline constexpr int kEdgeYes = 1;
inline constexpr int kEdgeNo = 2;

enum class NodeKind { process, decision };

struct NodeRecord {
  int id = 0;
  std::string text;
  NodeKind kind = NodeKind::process;
};

class AdjacencyMatrix {
 public:
  AdjacencyMatrix() : n_nodes_(0) {
    for (auto& row : cells_) row.fill(0);
  }

  explicit AdjacencyMatrix(int n_nodes) : AdjacencyMatrix() {
    if (n_nodes < 0 || n_nodes > kPad)
      throw std::invalid_argument("AdjacencyMatrix: n_nodes out of range");
    n_nodes_ = n_nodes;
  }

  int n_nodes() const { return n_nodes_; }

  int at(int i, int j) const {
    check_index(i, j);
    return cells_[i][j];
  }

  void set(int i, int j, int value) {
    check_index(i, j);
    if (value != kEdgeNone && value != kEdgeYes && value != kEdgeNo)
      throw std::invalid_argument("AdjacencyMatrix: cell value must be 0/1/2");
    cells_[i][j] = value;
  }

  bool operator==(const AdjacencyMatrix& other) const {
    return n_nodes_ == other.n_nodes_ && cells_ == other.cells_;
  }
  bool operator!=(const AdjacencyMatrix& other) const {
    return !(*this == other);
  }

 private:
  static void check_index(int i, int j) {
    if (i < 0 || i >= kPad || j < 0 || j >= kPad)
      throw std::out_of_range("AdjacencyMatrix: index out of range");
  }

  std::array<std::array<int, kPad>, kPad> cells_;
  int n_nodes_;
};

struct FlowGraph {
  AdjacencyMatrix adjacency;
  std::vector<NodeRecord> nodes;
};

// Kind implied by a node's outgoing edges: any NO branch marks a decision.
inline NodeKind derive_kind(const AdjacencyMatrix& m, int row) {
  for (int j = 0; j < kPad; ++j)
    if (m.at(row, j) == kEdgeNo) return NodeKind::decision;
  return NodeKind::process;
}

inline bool is_terminal_row(const AdjacencyMatrix& m, int row) {
  for (int j = 0; j < kPad; ++j)
    if (m.at(row, j) != kEdgeNone) return false;
  return true;
}

// Returns every structural violation found, one message each; an empty list
// means the graph is a well-formed chart.
inline std::vector<std::string> validate_graph(const FlowGraph& g) {
  std::vector<std::string> issues;
  const auto& m = g.adjacency;
  const int n = m.n_nodes();

  if (n < 3 || n > kPad) {
    issues.push_back("n_nodes must be in [3, " + std::to_string(kPad) +
                     "], got " + std::to_string(n));
    return issues;
  }

  for (int i = 0; i < kPad; ++i) {
    if (m.at(i, i) != kEdgeNone)
      issues.push_back("self edge at node " + std::to_string(i));
    for (int j = 0; j < kPad; ++j) {
      if ((i >= n || j >= n) && m.at(i, j) != kEdgeNone)
        issues.push_back("padding cell (" + std::to_string(i) + "," +
                         std::to_string(j) + ") must be 0");
    }
  }

  if (static_cast<int>(g.nodes.size()) != n) {
    issues.push_back("node list has " + std::to_string(g.nodes.size()) +
                     " entries for n_nodes=" + std::to_string(n));
  } else {
    const auto& vocab = Vocabulary::canonical();
    for (int i = 0; i < n; ++i) {
      if (g.nodes[i].id != i)
        issues.push_back("node list ids must be 0..n-1 in order; entry " +
                         std::to_string(i) + " has id " +
                         std::to_string(g.nodes[i].id));
      if (!vocab.contains_all(g.nodes[i].text))
        issues.push_back("node " + std::to_string(i) +
                         " text contains characters outside the vocabulary");
      if (g.nodes[i].kind != derive_kind(m, i))
        issues.push_back("node " + std::to_string(i) +
                         " kind does not match its outgoing edges");
    }
  }

  int terminals = 0;
  for (int i = 0; i < n; ++i) {
    int yes = 0, no = 0;
    for (int j = 0; j < n; ++j) {
      if (m.at(i, j) == kEdgeYes) ++yes;
      if (m.at(i, j) == kEdgeNo) ++no;
    }
    if (yes == 0 && no == 0) {
      ++terminals;
    } else if (no == 0) {
      if (yes != 1)
        issues.push_back("process node " + std::to_string(i) +
                         " has " + std::to_string(yes) + " outgoing edges");
    } else {
      if (yes != 1 || no != 1)
        issues.push_back("decision node " + std::to_string(i) +
                         " must have exactly one YES and one NO edge");
    }
  }
  if (terminals != 1)
    issues.push_back("graph must have exactly one terminal node, found " +
                     std::to_string(terminals));

  // Every node must be reachable from the entry node 0.
  std::vector<bool> seen(n, false);
  std::vector<int> stack = {0};
  seen[0] = true;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v) {
      if (m.at(u, v) != kEdgeNone && !seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  for (int i = 0; i < n; ++i)
    if (!seen[i])
      issues.push_back("node " + std::to_string(i) +
                       " is unreachable from the entry node");

  return issues;
}

// ---- Edge classifier target / decode ----

using ClassGrid = std::array<std::array<int, kPad>, kPad>;

// Per-cell class scores produced by the edge head.
struct EdgeScores {
  std::array<std::array<std::array<double, 3>, kPad>, kPad> v{};
};

inline ClassGrid encode_adjacency_target(const FlowGraph& g) {
  auto issues = validate_graph(g);
  if (!issues.empty())
    throw std::invalid_argument("encode_adjacency_target: invalid graph: " +
                                issues.front());
  ClassGrid grid{};
  for (int i = 0; i < kPad; ++i)
    for (int j = 0; j < kPad; ++j) grid[i][j] = g.adjacency.at(i, j);
  return grid;
}

struct DecodedAdjacency {
  AdjacencyMatrix matrix;
  bool no_graph = false;  // every cell decoded to class 0
};

// Per-cell argmax with lowest-index tie break; the node count is implied by
// the highest row or column index any nonzero cell touches.
inline DecodedAdjacency decode_adjacency(const EdgeScores& scores) {
  ClassGrid cls{};
  int max_index = -1;
  for (int i = 0; i < kPad; ++i) {
    for (int j = 0; j < kPad; ++j) {
      int best = 0;
      for (int c = 1; c < 3; ++c)
        if (scores.v[i][j][c] > scores.v[i][j][best]) best = c;
      cls[i][j] = best;
      if (best != kEdgeNone) max_index = std::max({max_index, i, j});
    }
  }
  DecodedAdjacency out;
  if (max_index < 0) {
    out.no_graph = true;
    out.matrix = AdjacencyMatrix(0);
    return out;
  }
  out.matrix = AdjacencyMatrix(max_index + 1);
  for (int i = 0; i < kPad; ++i)
    for (int j = 0; j < kPad; ++j)
      if (cls[i][j] != kEdgeNone) out.matrix.set(i, j, cls[i][j]);
  return out;
}

// ---- Tagged node text ----

inline std::string tag_text(int id, const std::string& text) {
  if (id < 0) throw std::invalid_argument("tag_text: negative id");
  return std::to_string(id) + ":" + text;
}

struct TaggedText {
  int id = 0;
  std::string text;
};

inline std::optional<TaggedText> try_strip_text(const std::string& tagged) {
  auto sep = tagged.find(':');
  if (sep == std::string::npos || sep == 0) return std::nullopt;
  for (std::size_t i = 0; i < sep; ++i)
    if (!std::isdigit(static_cast<unsigned char>(tagged[i])))
      return std::nullopt;
  if (sep > 9) return std::nullopt;  // id out of any plausible range
  return TaggedText{std::stoi(tagged.substr(0, sep)), tagged.substr(sep + 1)};
}

inline TaggedText strip_text(const std::string& tagged) {
  auto parsed = try_strip_text(tagged);
  if (!parsed)
    throw std::invalid_argument("strip_text: no 'id:' prefix in \"" + tagged +
                                "\"");
  return *parsed;
}

// ---- Graphviz text form, used for diagnostics and error reports ----

inline std::string to_dot(const FlowGraph& g) {
  auto escape = [](const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out;
  };
  std::string dot = "digraph flowchart {\n";
  const int n = g.adjacency.n_nodes();
  for (int i = 0; i < n; ++i) {
    std::string label = std::to_string(i);
    NodeKind kind = derive_kind(g.adjacency, i);
    if (i < static_cast<int>(g.nodes.size())) {
      label = tag_text(g.nodes[i].id, g.nodes[i].text);
      kind = g.nodes[i].kind;
    }
    dot += "  n" + std::to_string(i) + " [shape=" +
           (kind == NodeKind::decision ? "diamond" : "box") + " label=\"" +
           escape(label) + "\"];\n";
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int cell = g.adjacency.at(i, j);
      if (cell == kEdgeNone) continue;
      dot += "  n" + std::to_string(i) + " -> n" + std::to_string(j);
      if (derive_kind(g.adjacency, i) == NodeKind::decision)
        dot += cell == kEdgeYes ? " [label=\"yes\"]" : " [label=\"no\"]";
      dot += ";\n";
    }
  }
  dot += "}\n";
  return dot;
}

}  // namespace flowsynth
