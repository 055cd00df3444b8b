#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "flowsynth/ast.hpp"
#include "flowsynth/font.hpp"
#include "flowsynth/graph.hpp"
#include "flowsynth/image.hpp"
#include "flowsynth/rng.hpp"
#include "flowsynth/structure.hpp"

namespace flowsynth {

// Visual knobs sampled per chart. The natural layout is scaled down
// uniformly when it exceeds the canvas limits; it is never scaled up.
struct RenderSpec {
  int line_width = 2;  // stroke width in px before scaling, 1..5
  int font_size = 24;  // node text size in px before scaling, 20..30
  Rgb font_color = kBlack;

  static constexpr int kMaxWidth = 200;
  static constexpr int kMaxHeight = 400;
};

inline RenderSpec sample_render_spec(Rng& rng) {
  RenderSpec s;
  s.line_width = rng.uniform_int(1, 5);
  s.font_size = rng.uniform_int(20, 30);
  s.font_color = {static_cast<std::uint8_t>(rng.uniform_int(0, 255)),
                  static_cast<std::uint8_t>(rng.uniform_int(0, 255)),
                  static_cast<std::uint8_t>(rng.uniform_int(0, 255))};
  return s;
}

struct RenderResult {
  Image image;
  // Per node id: x1, y1, x2, y2 of the shape outline in final pixels.
  std::vector<std::array<double, 4>> boxes;
  std::string dot;
};

class RenderError : public std::runtime_error {
 public:
  explicit RenderError(const std::string& what) : std::runtime_error(what) {}
};

namespace renderdetail {

struct NodeShape {
  int id = -1;
  bool diamond = false;
  double x1 = 0, y1 = 0, x2 = 0, y2 = 0;
  std::string label;
};

struct Wire {
  std::vector<std::array<double, 2>> points;  // axis-aligned polyline
  bool arrow = true;                          // arrowhead at the last point
};

struct SmallLabel {
  double x = 0, y = 0;  // top-left of the first glyph cell
  std::string text;
};

struct Prims {
  std::vector<NodeShape> nodes;
  std::vector<Wire> wires;
  std::vector<SmallLabel> labels;

  void translate(double dx, double dy) {
    for (auto& n : nodes) {
      n.x1 += dx;
      n.y1 += dy;
      n.x2 += dx;
      n.y2 += dy;
    }
    for (auto& w : wires)
      for (auto& p : w.points) {
        p[0] += dx;
        p[1] += dy;
      }
    for (auto& l : labels) {
      l.x += dx;
      l.y += dy;
    }
  }

  void scale(double s) {
    for (auto& n : nodes) {
      n.x1 *= s;
      n.y1 *= s;
      n.x2 *= s;
      n.y2 *= s;
    }
    for (auto& w : wires)
      for (auto& p : w.points) {
        p[0] *= s;
        p[1] *= s;
      }
    for (auto& l : labels) {
      l.x *= s;
      l.y *= s;
    }
  }

  void merge(Prims&& other) {
    for (auto& n : other.nodes) nodes.push_back(std::move(n));
    for (auto& w : other.wires) wires.push_back(std::move(w));
    for (auto& l : other.labels) labels.push_back(std::move(l));
  }
};

// Measures and places one structured block; all blocks keep their entry and
// exit points on the vertical center line.
class Layout {
 public:
  explicit Layout(const RenderSpec& spec)
      : fs_(spec.font_size),
        label_size_(0.6 * spec.font_size),
        label_h_(font::text_height(0.6 * spec.font_size)),
        gap_(font::text_height(0.6 * spec.font_size) + 9) {}

  struct Block {
    Prims prims;
    double w = 0, h = 0;
    double entry_x = 0, exit_x = 0;
  };

  Block item(const AstNode& node) {
    switch (node.kind) {
      case AstNode::Kind::statement:
        return statement_block(node);
      case AstNode::Kind::sequence:
        return list(node.items);
      case AstNode::Kind::if_else:
        return conditional_block(node);
      case AstNode::Kind::while_loop:
        return while_block(node);
      case AstNode::Kind::do_while:
        return do_while_block(node);
    }
    throw RenderError("layout: unknown tree node kind");
  }

  Block list(const std::vector<AstNode>& items) {
    if (items.empty()) throw RenderError("layout: empty sequence");
    std::vector<Block> parts;
    parts.reserve(items.size());
    double width = 0;
    for (const auto& it : items) {
      parts.push_back(item(it));
      width = std::max(width, parts.back().w);
    }
    Block out;
    out.w = width;
    double y = 0;
    double prev_exit_x = 0, prev_bottom = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      auto& p = parts[i];
      const double dx = (width - p.w) / 2;
      p.prims.translate(dx, y);
      if (i == 0) {
        out.entry_x = dx + p.entry_x;
      } else {
        const double ex = dx + p.entry_x;
        Wire w;
        if (prev_exit_x == ex) {
          w.points = {{prev_exit_x, prev_bottom}, {ex, y}};
        } else {
          const double mid = (prev_bottom + y) / 2;
          w.points = {{prev_exit_x, prev_bottom},
                      {prev_exit_x, mid},
                      {ex, mid},
                      {ex, y}};
        }
        out.prims.wires.push_back(std::move(w));
      }
      prev_exit_x = dx + p.exit_x;
      prev_bottom = y + p.h;
      out.prims.merge(std::move(p.prims));
      y = prev_bottom + gap_;
    }
    out.h = prev_bottom;
    out.exit_x = prev_exit_x;
    return out;
  }

 private:
  Block statement_block(const AstNode& node) {
    const std::string label = tag_text(node.source_id, node.text);
    const double tw = font::text_width(label, fs_);
    const double th = font::text_height(fs_);
    Block b;
    b.w = tw + 14;
    b.h = th + 10;
    b.entry_x = b.exit_x = b.w / 2;
    b.prims.nodes.push_back({node.source_id, false, 0, 0, b.w, b.h, label});
    return b;
  }

  // Diamond sized so the text rectangle clears the sloped sides.
  Block diamond_block(const AstNode& node) {
    const std::string label = tag_text(node.source_id, node.text);
    const double half_w = font::text_width(label, fs_) + 4;
    const double half_h = font::text_height(fs_) + 3;
    Block b;
    b.w = 2 * half_w;
    b.h = 2 * half_h;
    b.entry_x = b.exit_x = half_w;
    b.prims.nodes.push_back({node.source_id, true, 0, 0, b.w, b.h, label});
    return b;
  }

  Block conditional_block(const AstNode& node) {
    Block cond = diamond_block(node);
    const bool has_then = !node.items.empty();
    const bool has_else = !node.else_items.empty();
    if (!has_then && !has_else)
      throw RenderError("layout: conditional with two empty branches");
    Block then_col = has_then ? list(node.items) : Block{};
    Block else_col = has_else ? list(node.else_items) : Block{};

    const double body_w = then_col.w + kHGap + else_col.w;
    const double width = std::max(cond.w, body_w);
    const double cx = width / 2;
    const double ch = cond.h;
    const double rail_y = ch + label_h_ + 5;   // split rail
    const double branch_y = rail_y + 8;        // branch tops
    const double bx = (width - body_w) / 2;

    cond.prims.translate((width - cond.w) / 2, 0);
    then_col.prims.translate(bx, branch_y);
    else_col.prims.translate(bx + then_col.w + kHGap, branch_y);

    const double yes_x = has_then ? bx + then_col.entry_x : bx;
    const double no_x = has_else
                            ? bx + then_col.w + kHGap + else_col.entry_x
                            : bx + then_col.w + kHGap;
    const double branch_bottom =
        branch_y + std::max(then_col.h, else_col.h);
    const double join_y = branch_bottom + gap_ / 2;
    const double height = branch_bottom + gap_;

    Block out;
    out.w = width;
    out.h = height;
    out.entry_x = out.exit_x = cx;
    out.prims.merge(std::move(cond.prims));
    out.prims.merge(std::move(then_col.prims));
    out.prims.merge(std::move(else_col.prims));

    // The YES side carries the shared tail from the join rail to the exit.
    if (has_then) {
      out.prims.wires.push_back(
          {{{cx, ch}, {cx, rail_y}, {yes_x, rail_y}, {yes_x, branch_y}},
           true});
      out.prims.wires.push_back({{{bx + then_col.exit_x, branch_y + then_col.h},
                                  {bx + then_col.exit_x, join_y},
                                  {cx, join_y},
                                  {cx, height}},
                                 false});
    } else {
      out.prims.wires.push_back({{{cx, ch},
                                  {cx, rail_y},
                                  {yes_x, rail_y},
                                  {yes_x, join_y},
                                  {cx, join_y},
                                  {cx, height}},
                                 false});
    }
    if (has_else) {
      const double exit_x = bx + then_col.w + kHGap + else_col.exit_x;
      out.prims.wires.push_back(
          {{{cx, ch}, {cx, rail_y}, {no_x, rail_y}, {no_x, branch_y}}, true});
      out.prims.wires.push_back({{{exit_x, branch_y + else_col.h},
                                  {exit_x, join_y},
                                  {cx, join_y}},
                                 false});
    } else {
      out.prims.wires.push_back(
          {{{cx, ch}, {cx, rail_y}, {no_x, rail_y}, {no_x, join_y}, {cx, join_y}},
           false});
    }
    out.prims.labels.push_back(
        {cx - font::text_width("yes", label_size_) - 4, ch + 2, "yes"});
    out.prims.labels.push_back({cx + 4, ch + 2, "no"});
    return out;
  }

  Block while_block(const AstNode& node) {
    Block cond = diamond_block(node);
    Block body = list(node.items);
    const double no_w = font::text_width("no", label_size_);
    const double margin = std::max(14.0, no_w + 6);
    const double inner = std::max(cond.w, body.w);
    const double width = inner + 2 * margin;
    const double cx = width / 2;
    const double ch = cond.h;
    const double body_y = ch + label_h_ + 8;

    cond.prims.translate((width - cond.w) / 2, 0);
    body.prims.translate((width - body.w) / 2, body_y);

    const double body_bottom = body_y + body.h;
    const double back_y = body_bottom + gap_ / 2;
    const double height = body_bottom + gap_;
    const double left_x = margin / 2;
    const double right_x = width - margin / 2;
    const double cond_left = cx - cond.w / 2;
    const double cond_right = cx + cond.w / 2;
    const double cond_mid_y = ch / 2;

    Block out;
    out.w = width;
    out.h = height;
    out.entry_x = out.exit_x = cx;
    out.prims.merge(std::move(cond.prims));
    out.prims.merge(std::move(body.prims));

    out.prims.wires.push_back({{{cx, ch}, {cx, body_y}}, true});
    out.prims.wires.push_back({{{cx, body_bottom},
                                {cx, back_y},
                                {left_x, back_y},
                                {left_x, cond_mid_y},
                                {cond_left, cond_mid_y}},
                               true});
    out.prims.wires.push_back({{{cond_right, cond_mid_y},
                                {right_x, cond_mid_y},
                                {right_x, height},
                                {cx, height}},
                               false});
    out.prims.labels.push_back({cx + 4, ch + 2, "yes"});
    out.prims.labels.push_back(
        {cond_right + 3, cond_mid_y - label_h_ - 2, "no"});
    return out;
  }

  Block do_while_block(const AstNode& node) {
    Block body = list(node.items);
    Block cond = diamond_block(node);
    const double yes_w = font::text_width("yes", label_size_);
    const double margin = std::max(14.0, yes_w + 6);
    const double inner = std::max(cond.w, body.w);
    const double width = inner + 2 * margin;
    const double cx = width / 2;
    const double body_y = 10;

    body.prims.translate((width - body.w) / 2, body_y);
    const double cond_y = body_y + body.h + gap_;
    cond.prims.translate((width - cond.w) / 2, cond_y);

    const double height = cond_y + cond.h;
    const double cond_mid_y = cond_y + cond.h / 2;
    const double cond_left = cx - cond.w / 2;
    const double left_x = margin / 2;

    Block out;
    out.w = width;
    out.h = height;
    out.entry_x = out.exit_x = cx;
    out.prims.merge(std::move(body.prims));
    out.prims.merge(std::move(cond.prims));

    out.prims.wires.push_back({{{cx, 0}, {cx, body_y}}, true});
    out.prims.wires.push_back({{{cx, body_y + body.h}, {cx, cond_y}}, true});
    out.prims.wires.push_back({{{cond_left, cond_mid_y},
                                {left_x, cond_mid_y},
                                {left_x, 5},
                                {cx, 5}},
                               true});
    out.prims.labels.push_back(
        {cond_left - yes_w - 3, cond_mid_y - label_h_ - 2, "yes"});
    out.prims.labels.push_back({cx + 4, height + 1, "no"});
    return out;
  }

  static constexpr double kHGap = 22;

  double fs_;
  double label_size_;
  double label_h_;
  double gap_;
};

inline void draw_arrowhead(Image& img, const Wire& wire, double stroke,
                           Rgb color) {
  const auto& pts = wire.points;
  const auto& tip = pts.back();
  const auto& prev = pts[pts.size() - 2];
  double dx = tip[0] - prev[0], dy = tip[1] - prev[1];
  const double len = std::hypot(dx, dy);
  if (len == 0) return;
  dx /= len;
  dy /= len;
  const double arrow_len = 3.0 + 1.6 * stroke;
  const double arrow_half = 1.8 + 0.9 * stroke;
  const std::array<double, 2> base{tip[0] - dx * arrow_len,
                                   tip[1] - dy * arrow_len};
  const std::array<double, 2> a{base[0] - dy * arrow_half,
                                base[1] + dx * arrow_half};
  const std::array<double, 2> b{base[0] + dy * arrow_half,
                                base[1] - dx * arrow_half};
  fill_triangle(img, {tip[0], tip[1]}, a, b, color);
}

}  // namespace renderdetail

// Renders a structured chart. Node boxes come straight from the layout
// geometry, so they are exact ground truth for the detector. Throws
// StructureError for charts without structured control flow and RenderError
// for internal layout faults.
inline RenderResult render_chart(const FlowGraph& g, const RenderSpec& spec) {
  const AstNode program = structure(g);
  renderdetail::Layout layout(spec);
  auto root = program.kind == AstNode::Kind::sequence
                  ? layout.list(program.items)
                  : layout.item(program);

  constexpr double kMargin = 8;
  root.prims.translate(kMargin, kMargin);
  const double natural_w = root.w + 2 * kMargin;
  const double natural_h = root.h + 2 * kMargin;
  const double scale =
      std::min({1.0, RenderSpec::kMaxWidth / natural_w,
                RenderSpec::kMaxHeight / natural_h});
  root.prims.scale(scale);

  const int canvas_w = std::min(
      RenderSpec::kMaxWidth,
      static_cast<int>(std::ceil(natural_w * scale - 1e-6)));
  const int canvas_h = std::min(
      RenderSpec::kMaxHeight,
      static_cast<int>(std::ceil(natural_h * scale - 1e-6)));

  Image img(canvas_w, canvas_h, kWhite);
  const double stroke =
      std::max(1.0, static_cast<double>(
                        std::lround(spec.line_width * scale)));

  for (const auto& wire : root.prims.wires) {
    for (std::size_t i = 1; i < wire.points.size(); ++i)
      draw_segment(img, wire.points[i - 1][0], wire.points[i - 1][1],
                   wire.points[i][0], wire.points[i][1], stroke, kBlack);
    if (wire.arrow && wire.points.size() >= 2)
      renderdetail::draw_arrowhead(img, wire, stroke, kBlack);
  }

  const double text_size = spec.font_size * scale;
  const double label_size = 0.6 * spec.font_size * scale;
  for (const auto& shape : root.prims.nodes) {
    if (shape.diamond) {
      const double cx = (shape.x1 + shape.x2) / 2;
      const double cy = (shape.y1 + shape.y2) / 2;
      draw_line(img, cx, shape.y1, shape.x2, cy, stroke, kBlack);
      draw_line(img, shape.x2, cy, cx, shape.y2, stroke, kBlack);
      draw_line(img, cx, shape.y2, shape.x1, cy, stroke, kBlack);
      draw_line(img, shape.x1, cy, cx, shape.y1, stroke, kBlack);
    } else {
      stroke_rect(img, shape.x1, shape.y1, shape.x2, shape.y2, stroke, kBlack);
    }
    const double tw = font::text_width(shape.label, text_size);
    const double th = font::text_height(text_size);
    font::draw_text(img, (shape.x1 + shape.x2) / 2 - tw / 2,
                    (shape.y1 + shape.y2) / 2 - th / 2, shape.label, text_size,
                    spec.font_color);
  }
  for (const auto& label : root.prims.labels)
    font::draw_text(img, label.x, label.y, label.text, label_size,
                    spec.font_color);

  const int n = g.adjacency.n_nodes();
  RenderResult result;
  result.boxes.assign(n, {0, 0, 0, 0});
  std::vector<bool> seen(n, false);
  for (const auto& shape : root.prims.nodes) {
    if (shape.id < 0 || shape.id >= n || seen[shape.id])
      throw RenderError("render_chart: node ids and shapes disagree");
    seen[shape.id] = true;
    result.boxes[shape.id] = {shape.x1, shape.y1, shape.x2, shape.y2};
  }
  for (int i = 0; i < n; ++i)
    if (!seen[i]) throw RenderError("render_chart: node without a shape");

  result.image = std::move(img);
  result.dot = to_dot(g);
  return result;
}

}  // namespace flowsynth
