#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "flowsynth/rng.hpp"

namespace flowsynth {

// Axis-aligned box, center/size parameterization in pixels.
struct Box {
  double x = 0, y = 0, w = 0, h = 0;

  static Box from_corners(double x1, double y1, double x2, double y2) {
    return Box{(x1 + x2) / 2, (y1 + y2) / 2, x2 - x1, y2 - y1};
  }

  double x1() const { return x - w / 2; }
  double y1() const { return y - h / 2; }
  double x2() const { return x + w / 2; }
  double y2() const { return y + h / 2; }
  double area() const { return w * h; }
};

inline double iou(const Box& a, const Box& b) {
  const double ix = std::max(
      0.0, std::min(a.x2(), b.x2()) - std::max(a.x1(), b.x1()));
  const double iy = std::max(
      0.0, std::min(a.y2(), b.y2()) - std::max(a.y1(), b.y1()));
  const double inter = ix * iy;
  const double uni = a.area() + b.area() - inter;
  return uni > 0 ? inter / uni : 0.0;
}

struct BoxDelta {
  double tx = 0, ty = 0, tw = 0, th = 0;
};

inline BoxDelta encode_delta(const Box& gt, const Box& anchor) {
  if (gt.w <= 0 || gt.h <= 0 || anchor.w <= 0 || anchor.h <= 0)
    throw std::invalid_argument("encode_delta: boxes must have positive size");
  return BoxDelta{(gt.x - anchor.x) / anchor.w, (gt.y - anchor.y) / anchor.h,
                  std::log(gt.w / anchor.w), std::log(gt.h / anchor.h)};
}

inline Box decode_delta(const BoxDelta& d, const Box& anchor) {
  if (anchor.w <= 0 || anchor.h <= 0)
    throw std::invalid_argument("decode_delta: anchor must have positive size");
  return Box{anchor.x + d.tx * anchor.w, anchor.y + d.ty * anchor.h,
             anchor.w * std::exp(d.tw), anchor.h * std::exp(d.th)};
}

inline Box clip_box(Box b, double image_w, double image_h) {
  double x1 = std::clamp(b.x1(), 0.0, image_w);
  double y1 = std::clamp(b.y1(), 0.0, image_h);
  double x2 = std::clamp(b.x2(), 0.0, image_w);
  double y2 = std::clamp(b.y2(), 0.0, image_h);
  return Box::from_corners(x1, y1, x2, y2);
}

// One anchor box per feature-map cell, centered on the cell.
struct AnchorGrid {
  int rows = 0, cols = 0;
  double stride = 8, anchor_w = 120, anchor_h = 40;

  int count() const { return rows * cols; }

  Box at(int row, int col) const {
    if (row < 0 || row >= rows || col < 0 || col >= cols)
      throw std::out_of_range("AnchorGrid::at: cell out of range");
    return Box{(col + 0.5) * stride, (row + 0.5) * stride, anchor_w, anchor_h};
  }

  // Row-major flat index.
  Box at_index(int index) const { return at(index / cols, index % cols); }
};

enum class AnchorState { positive, negative, ignore };

struct AnchorLabel {
  AnchorState state = AnchorState::ignore;
  int gt_index = -1;  // matched ground-truth box for positives
};

// Anchor labeling: an anchor is positive when it has the highest IoU with
// some ground-truth box or overlaps any box above 0.9; it is negative when
// its IoU with every box is below 0.3; anything else is ignored.
inline std::vector<AnchorLabel> assign_labels(const AnchorGrid& grid,
                                              const std::vector<Box>& gt) {
  if (gt.empty())
    throw std::invalid_argument("assign_labels: no ground-truth boxes");
  const int a_count = grid.count();
  const int g_count = static_cast<int>(gt.size());

  std::vector<double> overlap(static_cast<std::size_t>(a_count) * g_count);
  for (int a = 0; a < a_count; ++a) {
    const Box anchor = grid.at_index(a);
    for (int g = 0; g < g_count; ++g)
      overlap[static_cast<std::size_t>(a) * g_count + g] = iou(anchor, gt[g]);
  }
  auto ov = [&](int a, int g) {
    return overlap[static_cast<std::size_t>(a) * g_count + g];
  };

  std::vector<AnchorLabel> labels(a_count);
  for (int a = 0; a < a_count; ++a) {
    int best_g = 0;
    for (int g = 1; g < g_count; ++g)
      if (ov(a, g) > ov(a, best_g)) best_g = g;
    const double best = ov(a, best_g);
    if (best > 0.9) {
      labels[a] = {AnchorState::positive, best_g};
    } else if (best < 0.3) {
      labels[a] = {AnchorState::negative, -1};
    } else {
      labels[a] = {AnchorState::ignore, -1};
    }
  }

  // The best anchor for each box is positive even below the IoU gate, so no
  // box is left unclaimed. When several boxes claim one anchor the highest
  // overlap wins, lowest box index on ties.
  for (int g = 0; g < g_count; ++g) {
    double best = 0;
    for (int a = 0; a < a_count; ++a) best = std::max(best, ov(a, g));
    if (best <= 0) continue;
    for (int a = 0; a < a_count; ++a) {
      if (ov(a, g) == best) {
        if (labels[a].state == AnchorState::positive &&
            ov(a, labels[a].gt_index) >= best)
          continue;
        labels[a] = {AnchorState::positive, g};
      }
    }
  }
  return labels;
}

struct BalancedSample {
  std::vector<int> positives;
  std::vector<int> negatives;
};

// Draws as many negatives as there are positives, uniformly without
// replacement. Returns nullopt when there are no positives (caller skips the
// objectness term) and throws when negatives cannot cover the positives.
inline std::optional<BalancedSample> balanced_sample(
    const std::vector<AnchorLabel>& labels, Rng& rng) {
  BalancedSample out;
  std::vector<int> negatives;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
    if (labels[i].state == AnchorState::positive) out.positives.push_back(i);
    if (labels[i].state == AnchorState::negative) negatives.push_back(i);
  }
  if (out.positives.empty()) return std::nullopt;
  const int need = static_cast<int>(out.positives.size());
  if (static_cast<int>(negatives.size()) < need)
    throw std::runtime_error("balanced_sample: fewer negatives than positives");
  auto picks = rng.sample_indices(static_cast<int>(negatives.size()), need);
  std::sort(picks.begin(), picks.end());
  for (int p : picks) out.negatives.push_back(negatives[p]);
  return out;
}

struct ScoredBox {
  Box box;
  double score = 0;
};

// Keeps the top-k proposals by score, then collapses connected components of
// the IoU > threshold relation (transitive, unlike greedy suppression) to
// the highest-scoring member of each component. Survivors come back in
// descending score order.
inline std::vector<ScoredBox> group_proposals(std::vector<ScoredBox> proposals,
                                              int top_k = 50,
                                              double iou_threshold = 0.2) {
  std::stable_sort(proposals.begin(), proposals.end(),
                   [](const ScoredBox& a, const ScoredBox& b) {
                     return a.score > b.score;
                   });
  if (static_cast<int>(proposals.size()) > top_k) proposals.resize(top_k);
  const int n = static_cast<int>(proposals.size());

  std::vector<int> component(n, -1);
  int next_component = 0;
  for (int i = 0; i < n; ++i) {
    if (component[i] != -1) continue;
    component[i] = next_component;
    std::vector<int> stack = {i};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v) {
        if (component[v] == -1 &&
            iou(proposals[u].box, proposals[v].box) > iou_threshold) {
          component[v] = next_component;
          stack.push_back(v);
        }
      }
    }
    ++next_component;
  }

  // proposals are score-sorted, so the first member of a component wins.
  std::vector<ScoredBox> out;
  std::vector<bool> taken(next_component, false);
  for (int i = 0; i < n; ++i) {
    if (!taken[component[i]]) {
      taken[component[i]] = true;
      out.push_back(proposals[i]);
    }
  }
  return out;
}

}  // namespace flowsynth
