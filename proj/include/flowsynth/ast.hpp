#pragma once

#include <memory>
#include <string>
#include <vector>

namespace flowsynth {

// Structured program tree recovered from a flow chart. `text` holds the
// statement body or the branch/loop condition; `source_id` remembers which
// graph node produced it (-1 when the tree was not derived from a graph).
struct AstNode {
  enum class Kind { statement, sequence, if_else, while_loop, do_while };

  Kind kind = Kind::statement;
  std::string text;
  int source_id = -1;
  std::vector<AstNode> items;       // sequence items, then-branch, loop body
  std::vector<AstNode> else_items;  // if_else only

  static AstNode statement(std::string text, int source_id = -1) {
    AstNode n;
    n.kind = Kind::statement;
    n.text = std::move(text);
    n.source_id = source_id;
    return n;
  }

  static AstNode sequence(std::vector<AstNode> items) {
    AstNode n;
    n.kind = Kind::sequence;
    n.items = std::move(items);
    return n;
  }

  static AstNode if_else(std::string cond, std::vector<AstNode> then_items,
                         std::vector<AstNode> else_items, int source_id = -1) {
    AstNode n;
    n.kind = Kind::if_else;
    n.text = std::move(cond);
    n.source_id = source_id;
    n.items = std::move(then_items);
    n.else_items = std::move(else_items);
    return n;
  }

  static AstNode while_loop(std::string cond, std::vector<AstNode> body,
                            int source_id = -1) {
    AstNode n;
    n.kind = Kind::while_loop;
    n.text = std::move(cond);
    n.source_id = source_id;
    n.items = std::move(body);
    return n;
  }

  static AstNode do_while(std::string cond, std::vector<AstNode> body,
                          int source_id = -1) {
    AstNode n;
    n.kind = Kind::do_while;
    n.text = std::move(cond);
    n.source_id = source_id;
    n.items = std::move(body);
    return n;
  }
};

// Splices nested sequences flat so structurally equal programs compare equal.
inline AstNode canonical(const AstNode& node) {
  auto flatten = [](const std::vector<AstNode>& in) {
    std::vector<AstNode> out;
    for (const auto& item : in) {
      AstNode c = canonical(item);
      if (c.kind == AstNode::Kind::sequence) {
        for (auto& sub : c.items) out.push_back(std::move(sub));
      } else {
        out.push_back(std::move(c));
      }
    }
    return out;
  };
  AstNode out = node;
  out.items = flatten(node.items);
  out.else_items = flatten(node.else_items);
  return out;
}

// Structural equality on canonical trees; source ids are bookkeeping, not
// program content.
inline bool ast_equal(const AstNode& a, const AstNode& b) {
  if (a.kind != b.kind || a.text != b.text) return false;
  auto lists_equal = [](const std::vector<AstNode>& x,
                        const std::vector<AstNode>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!ast_equal(x[i], y[i])) return false;
    return true;
  };
  return lists_equal(a.items, b.items) &&
         lists_equal(a.else_items, b.else_items);
}

inline int count_statements_and_conditions(const AstNode& node) {
  int n = node.kind == AstNode::Kind::sequence ? 0 : 1;
  for (const auto& c : node.items) n += count_statements_and_conditions(c);
  for (const auto& c : node.else_items) n += count_statements_and_conditions(c);
  return n;
}

inline void collect_texts(const AstNode& node, std::vector<std::string>& out) {
  if (node.kind != AstNode::Kind::sequence) out.push_back(node.text);
  for (const auto& c : node.items) collect_texts(c, out);
  for (const auto& c : node.else_items) collect_texts(c, out);
}

namespace detail {

inline void emit_into(const AstNode& node, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  switch (node.kind) {
    case AstNode::Kind::statement:
      out += pad + node.text + ";\n";
      break;
    case AstNode::Kind::sequence:
      for (const auto& item : node.items) emit_into(item, depth, out);
      break;
    case AstNode::Kind::if_else:
      out += pad + "if (" + node.text + ") {\n";
      for (const auto& item : node.items) emit_into(item, depth + 1, out);
      if (node.else_items.empty()) {
        out += pad + "}\n";
      } else {
        out += pad + "} else {\n";
        for (const auto& item : node.else_items)
          emit_into(item, depth + 1, out);
        out += pad + "}\n";
      }
      break;
    case AstNode::Kind::while_loop:
      out += pad + "while (" + node.text + ") {\n";
      for (const auto& item : node.items) emit_into(item, depth + 1, out);
      out += pad + "}\n";
      break;
    case AstNode::Kind::do_while:
      out += pad + "do {\n";
      for (const auto& item : node.items) emit_into(item, depth + 1, out);
      out += pad + "} while (" + node.text + ");\n";
      break;
  }
}

}  // namespace detail

// Renders the tree as C-like source, two-space indent.
inline std::string emit(const AstNode& node) {
  std::string out;
  detail::emit_into(node, 0, out);
  return out;
}

}  // namespace flowsynth
