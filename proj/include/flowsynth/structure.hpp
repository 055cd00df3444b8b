#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "flowsynth/ast.hpp"
#include "flowsynth/graph.hpp"

namespace flowsynth {

class StructureError : public std::runtime_error {
 public:
  explicit StructureError(const std::string& what)
      : std::runtime_error(what) {}
};

// ---- Program tree -> flow chart ----

struct GraphOfResult {
  FlowGraph graph;
  // For each graph node, the source_id of the tree node that produced it
  // (-1 when the tree carried none).
  std::vector<int> source_ids;
};

namespace detail {

class GraphBuilder {
 public:
  struct Stub {
    int from;
    int label;
  };
  struct Visit {
    int entry;
    std::vector<Stub> exits;
  };

  GraphOfResult build(const AstNode& program) {
    Visit v = program.kind == AstNode::Kind::sequence ? visit_list(program.items)
                                                      : visit_item(program);
    if (v.exits.size() != 1 || v.exits[0].label != kEdgeYes ||
        !out_[v.exits[0].from].empty())
      throw StructureError(
          "graph_of: program must end in a single plain statement");

    GraphOfResult result;
    const int n = static_cast<int>(texts_.size());
    result.graph.adjacency = AdjacencyMatrix(n);
    for (const auto& [from, targets] : out_)
      for (const auto& [to, label] : targets)
        result.graph.adjacency.set(from, to, label);
    for (int i = 0; i < n; ++i)
      result.graph.nodes.push_back(
          {i, texts_[i], derive_kind(result.graph.adjacency, i)});
    result.source_ids = source_ids_;

    auto issues = validate_graph(result.graph);
    if (!issues.empty())
      throw StructureError("graph_of: produced an invalid chart: " +
                           issues.front());
    return result;
  }

 private:
  int add_node(const std::string& text, int source_id) {
    if (static_cast<int>(texts_.size()) >= kPad)
      throw StructureError("graph_of: program needs more than " +
                           std::to_string(kPad) + " chart nodes");
    texts_.push_back(text);
    source_ids_.push_back(source_id);
    out_.emplace(static_cast<int>(texts_.size()) - 1,
                 std::map<int, int>{});
    return static_cast<int>(texts_.size()) - 1;
  }

  void wire(const std::vector<Stub>& stubs, int target) {
    for (const auto& s : stubs) {
      if (s.from == target)
        throw StructureError("graph_of: construct would wire a self edge");
      if (out_[s.from].count(target))
        throw StructureError("graph_of: two branches join the same edge cell");
      out_[s.from][target] = s.label;
    }
  }

  Visit visit_list(const std::vector<AstNode>& items) {
    if (items.empty())
      throw StructureError("graph_of: empty sequence");
    Visit head = visit_item(items[0]);
    std::vector<Stub> exits = head.exits;
    for (std::size_t i = 1; i < items.size(); ++i) {
      Visit next = visit_item(items[i]);
      wire(exits, next.entry);
      exits = next.exits;
    }
    return {head.entry, exits};
  }

  Visit visit_item(const AstNode& node) {
    switch (node.kind) {
      case AstNode::Kind::statement: {
        int id = add_node(node.text, node.source_id);
        return {id, {{id, kEdgeYes}}};
      }
      case AstNode::Kind::sequence:
        return visit_list(node.items);
      case AstNode::Kind::if_else: {
        if (node.items.empty() && node.else_items.empty())
          throw StructureError("graph_of: conditional with two empty branches");
        int c = add_node(node.text, node.source_id);
        std::vector<Stub> exits;
        if (node.items.empty()) {
          exits.push_back({c, kEdgeYes});
        } else {
          Visit t = visit_list(node.items);
          wire({{c, kEdgeYes}}, t.entry);
          exits.insert(exits.end(), t.exits.begin(), t.exits.end());
        }
        if (node.else_items.empty()) {
          exits.push_back({c, kEdgeNo});
        } else {
          Visit e = visit_list(node.else_items);
          wire({{c, kEdgeNo}}, e.entry);
          exits.insert(exits.end(), e.exits.begin(), e.exits.end());
        }
        return {c, exits};
      }
      case AstNode::Kind::while_loop: {
        if (node.items.empty())
          throw StructureError("graph_of: loop with an empty body");
        int c = add_node(node.text, node.source_id);
        Visit body = visit_list(node.items);
        wire({{c, kEdgeYes}}, body.entry);
        wire(body.exits, c);
        return {c, {{c, kEdgeNo}}};
      }
      case AstNode::Kind::do_while: {
        if (node.items.empty())
          throw StructureError("graph_of: loop with an empty body");
        Visit body = visit_list(node.items);
        int c = add_node(node.text, node.source_id);
        wire(body.exits, c);
        wire({{c, kEdgeYes}}, body.entry);
        return {body.entry, {{c, kEdgeNo}}};
      }
    }
    throw StructureError("graph_of: unknown tree node kind");
  }

  std::vector<std::string> texts_;
  std::vector<int> source_ids_;
  std::map<int, std::map<int, int>> out_;
};

}  // namespace detail

// Compiles a program tree into its flow chart. Node ids are assigned in
// source order, so the entry node is always id 0.
inline GraphOfResult graph_of(const AstNode& program) {
  detail::GraphBuilder builder;
  return builder.build(program);
}

// ---- Flow chart -> program tree ----

namespace detail {

// Reduction state: surviving blocks with their partial trees plus the labeled
// edges between them.
class Reducer {
 public:
  explicit Reducer(const FlowGraph& g) : graph_(g) {
    const int n = g.adjacency.n_nodes();
    for (int i = 0; i < n; ++i) {
      blocks_[i] = AstNode::statement(g.nodes[i].text, i);
      texts_[i] = g.nodes[i].text;
      for (int j = 0; j < n; ++j)
        if (g.adjacency.at(i, j) != kEdgeNone)
          out_[i][j] = g.adjacency.at(i, j);
      out_.emplace(i, std::map<int, int>{});
    }
  }

  AstNode run() {
    bool reduced = true;
    while (reduced && blocks_.size() > 1) {
      reduced = false;
      for (const auto& [id, ast] : blocks_) {
        if (try_sequence(id) || try_while(id) || try_do_while(id) ||
            try_if(id)) {
          reduced = true;
          break;  // maps changed; restart the scan
        }
      }
    }
    if (blocks_.size() != 1 || !out_[entry_].empty())
      throw StructureError("structure: irreducible control flow\n" +
                           residual_report());
    return canonical(blocks_.at(entry_));
  }

 private:
  bool is_decision(int id) const {
    const auto& targets = out_.at(id);
    for (const auto& [to, label] : targets)
      if (label == kEdgeNo) return true;
    return false;
  }

  int in_degree(int id) const {
    int n = 0;
    for (const auto& [from, targets] : out_)
      if (targets.count(id)) ++n;
    return n;
  }

  // Single outgoing plain edge; returns target or -1.
  int plain_successor(int id) const {
    const auto& targets = out_.at(id);
    if (targets.size() != 1) return -1;
    const auto& [to, label] = *targets.begin();
    return label == kEdgeYes ? to : -1;
  }

  // YES/NO successors of a decision block; {-1,-1} when not a decision pair.
  std::pair<int, int> branch_successors(int id) const {
    const auto& targets = out_.at(id);
    if (targets.size() != 2) return {-1, -1};
    int yes = -1, no = -1;
    for (const auto& [to, label] : targets) {
      if (label == kEdgeYes) yes = to;
      if (label == kEdgeNo) no = to;
    }
    if (yes < 0 || no < 0) return {-1, -1};
    return {yes, no};
  }

  void erase_block(int id) {
    blocks_.erase(id);
    out_.erase(id);
    for (auto& [from, targets] : out_) targets.erase(id);
  }

  // u -> v where both are plain blocks collapses into one sequence block.
  bool try_sequence(int u) {
    if (is_decision(u)) return false;
    const int v = plain_successor(u);
    if (v < 0 || v == u || v == entry_ || is_decision(v)) return false;
    if (in_degree(v) != 1) return false;
    if (out_.at(v).count(u)) return false;  // collapsing would self-loop
    blocks_[u] = AstNode::sequence({blocks_.at(u), blocks_.at(v)});
    auto v_out = out_.at(v);
    erase_block(v);
    out_[u] = v_out;
    return true;
  }

  // d -(yes)-> b -> d with exit on NO is a while loop when the body is only
  // entered through d.
  bool try_while(int d) {
    if (!is_decision(d)) return false;
    auto [b, t] = branch_successors(d);
    if (b < 0 || b == d || t == d || t == b) return false;
    if (is_decision(b) || plain_successor(b) != d) return false;
    if (in_degree(b) != 1 || b == entry_) return false;
    blocks_[d] = AstNode::while_loop(texts_.at(d), {blocks_.at(b)},
                                     source_of(d));
    erase_block(b);
    out_[d] = {{t, kEdgeYes}};
    return true;
  }

  // h -> d -(yes)-> h with exit on NO is a do-while when d is only reached
  // through h and h is entered from outside the loop (or is the entry).
  bool try_do_while(int d) {
    if (!is_decision(d) || d == entry_) return false;
    auto [h, t] = branch_successors(d);
    if (h < 0 || h == d || t == d || t == h) return false;
    if (is_decision(h) || plain_successor(h) != d) return false;
    if (in_degree(d) != 1) return false;
    if (in_degree(h) < 2 && h != entry_) return false;
    blocks_[h] = AstNode::do_while(texts_.at(d), {blocks_.at(h)},
                                   source_of(d));
    erase_block(d);
    out_[h] = {{t, kEdgeYes}};
    return true;
  }

  // Both branch targets rejoin at one block; an empty branch is the join
  // point itself.
  bool try_if(int d) {
    if (!is_decision(d)) return false;
    auto [a, b] = branch_successors(d);
    if (a < 0 || a == d || b == d || a == b) return false;

    auto arm_joins_at = [&](int arm, int other) {
      // arm is a reducible branch body whose single exit is `other`'s join.
      return arm != entry_ && !is_decision(arm) && in_degree(arm) == 1 &&
             plain_successor(arm) == other;
    };

    // Full if/else: a -> t and b -> t for a common t.
    if (!is_decision(a) && !is_decision(b) && a != entry_ && b != entry_ &&
        in_degree(a) == 1 && in_degree(b) == 1) {
      int ta = plain_successor(a), tb = plain_successor(b);
      if (ta >= 0 && ta == tb && ta != d && ta != a && ta != b) {
        blocks_[d] = AstNode::if_else(texts_.at(d), {blocks_.at(a)},
                                      {blocks_.at(b)}, source_of(d));
        erase_block(a);
        erase_block(b);
        out_[d] = {{ta, kEdgeYes}};
        return true;
      }
    }
    // Empty else: the NO branch goes straight to the join.
    if (arm_joins_at(a, b) && b != d) {
      blocks_[d] = AstNode::if_else(texts_.at(d), {blocks_.at(a)}, {},
                                    source_of(d));
      erase_block(a);
      out_[d] = {{b, kEdgeYes}};
      return true;
    }
    // Empty then: the YES branch goes straight to the join.
    if (arm_joins_at(b, a) && a != d) {
      blocks_[d] = AstNode::if_else(texts_.at(d), {}, {blocks_.at(b)},
                                    source_of(d));
      erase_block(b);
      out_[d] = {{a, kEdgeYes}};
      return true;
    }
    return false;
  }

  int source_of(int id) const { return id; }

  std::string residual_report() const {
    FlowGraph residual;
    std::string report = "residual blocks:\n";
    for (const auto& [id, ast] : blocks_) {
      report += "  block " + std::to_string(id) +
                (is_decision(id) ? " (decision)" : "") + ":\n";
      std::string body = emit(ast);
      std::size_t pos = 0;
      while (pos < body.size()) {
        std::size_t nl = body.find('\n', pos);
        report += "    " + body.substr(pos, nl - pos) + "\n";
        pos = nl == std::string::npos ? body.size() : nl + 1;
      }
    }
    report += "residual edges:\n";
    for (const auto& [from, targets] : out_)
      for (const auto& [to, label] : targets)
        report += "  " + std::to_string(from) +
                  (label == kEdgeNo ? " -no-> " : " -> ") + std::to_string(to) +
                  "\n";
    report += "input chart:\n" + to_dot(graph_);
    return report;
  }

  FlowGraph graph_;
  std::map<int, AstNode> blocks_;
  std::map<int, std::string> texts_;
  std::map<int, std::map<int, int>> out_;
  int entry_ = 0;
};

}  // namespace detail

// Recovers the program tree of a chart by pattern reduction. Throws
// StructureError (with a residual-subgraph report) when the chart does not
// reduce to structured control flow.
inline AstNode structure(const FlowGraph& g) {
  auto issues = validate_graph(g);
  if (!issues.empty())
    throw StructureError("structure: invalid chart: " + issues.front() +
                         "\n" + to_dot(g));
  return detail::Reducer(g).run();
}

}  // namespace flowsynth
