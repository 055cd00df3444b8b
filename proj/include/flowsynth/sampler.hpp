#pragma once

#include <string>
#include <vector>

#include "flowsynth/ast.hpp"
#include "flowsynth/graph.hpp"
#include "flowsynth/rng.hpp"
#include "flowsynth/structure.hpp"
#include "flowsynth/vocab.hpp"

namespace flowsynth {

// Node text: 3..9 characters drawn uniformly from the vocabulary minus the
// trailing ':' which is reserved as the id separator.
inline std::string random_text(Rng& rng) {
  const auto& vocab = Vocabulary::canonical();
  const int len = rng.uniform_int(3, 9);
  std::string s;
  s.reserve(len);
  for (int i = 0; i < len; ++i)
    s += vocab.at(rng.uniform_int(0, vocab.size() - 2));
  return s;
}

namespace detail {

// Budgets below count chart nodes: one per statement, one per condition.
inline int min_construct_cost(int inner_decisions) {
  return inner_decisions == 0 ? 2 : 3;
}

inline std::vector<AstNode> gen_statements(Rng& rng, int count) {
  std::vector<AstNode> out;
  for (int i = 0; i < count; ++i)
    out.push_back(AstNode::statement(random_text(rng)));
  return out;
}

std::vector<AstNode> gen_sequence(Rng& rng, int budget, int decisions);

inline AstNode gen_construct(Rng& rng, int budget, int inner_decisions) {
  const int body_budget = budget - 1;
  if (rng.bernoulli(0.5)) {
    auto body = gen_sequence(rng, body_budget, inner_decisions);
    std::string cond = random_text(rng);
    return rng.bernoulli(0.5) ? AstNode::while_loop(cond, std::move(body))
                              : AstNode::do_while(cond, std::move(body));
  }
  // Conditional: empty-else, empty-then, or two populated branches.
  const bool can_pair = body_budget >= (inner_decisions ? 3 : 2);
  const int variant = rng.uniform_int(0, can_pair ? 2 : 1);
  std::string cond = random_text(rng);
  if (variant == 0)
    return AstNode::if_else(cond, gen_sequence(rng, body_budget, inner_decisions),
                            {});
  if (variant == 1)
    return AstNode::if_else(cond, {},
                            gen_sequence(rng, body_budget, inner_decisions));
  if (inner_decisions) {
    const int inner_side = rng.uniform_int(2, body_budget - 1);
    auto inner = gen_sequence(rng, inner_side, 1);
    auto other = gen_sequence(rng, body_budget - inner_side, 0);
    return rng.bernoulli(0.5)
               ? AstNode::if_else(cond, std::move(inner), std::move(other))
               : AstNode::if_else(cond, std::move(other), std::move(inner));
  }
  const int then_budget = rng.uniform_int(1, body_budget - 1);
  return AstNode::if_else(cond, gen_sequence(rng, then_budget, 0),
                          gen_sequence(rng, body_budget - then_budget, 0));
}

inline std::vector<AstNode> append_construct(Rng& rng, AstNode construct,
                                             int extra_statements) {
  const int before = rng.uniform_int(0, extra_statements);
  auto out = gen_statements(rng, before);
  out.push_back(std::move(construct));
  auto after = gen_statements(rng, extra_statements - before);
  for (auto& s : after) out.push_back(std::move(s));
  return out;
}

inline std::vector<AstNode> gen_sequence(Rng& rng, int budget, int decisions) {
  if (decisions == 0) return gen_statements(rng, budget);
  if (decisions == 1) {
    const int cost = rng.uniform_int(min_construct_cost(0), budget);
    return append_construct(rng, gen_construct(rng, cost, 0), budget - cost);
  }
  // Two decisions: one construct nested in the other, or two side by side.
  const bool can_nest = budget >= min_construct_cost(1);
  const bool can_pair = budget >= 2 * min_construct_cost(0);
  if (can_nest && (!can_pair || rng.bernoulli(0.5))) {
    const int cost = rng.uniform_int(min_construct_cost(1), budget);
    return append_construct(rng, gen_construct(rng, cost, 1), budget - cost);
  }
  const int cost1 = rng.uniform_int(2, budget - 2);
  const int cost2 = rng.uniform_int(2, budget - cost1);
  const int rest = budget - cost1 - cost2;
  const int gap0 = rng.uniform_int(0, rest);
  const int gap1 = rng.uniform_int(0, rest - gap0);
  auto out = gen_statements(rng, gap0);
  out.push_back(gen_construct(rng, cost1, 0));
  for (auto& s : gen_statements(rng, gap1)) out.push_back(std::move(s));
  out.push_back(gen_construct(rng, cost2, 0));
  for (auto& s : gen_statements(rng, rest - gap0 - gap1))
    out.push_back(std::move(s));
  return out;
}

}  // namespace detail

// Random program with exactly n_nodes chart nodes and n_decisions branches or
// loops; the last node is always the plain terminal statement.
inline AstNode sample_program(Rng& rng, int n_nodes, int n_decisions) {
  if (n_nodes < 3 || n_nodes > kPad)
    throw std::invalid_argument("sample_program: n_nodes out of range");
  const int budget = n_nodes - 1;  // everything before the terminal statement
  const int needed = n_decisions == 0   ? 0
                     : n_decisions == 1 ? detail::min_construct_cost(0)
                                        : detail::min_construct_cost(1);
  if (n_decisions < 0 || n_decisions > 2 || budget < needed)
    throw std::invalid_argument("sample_program: n_decisions infeasible");
  auto items = detail::gen_sequence(rng, budget, n_decisions);
  items.push_back(AstNode::statement(random_text(rng)));
  return AstNode::sequence(std::move(items));
}

inline int max_decisions(int n_nodes) { return n_nodes >= 4 ? 2 : 1; }

inline FlowGraph sample_graph(Rng& rng, int n_nodes, int n_decisions) {
  return graph_of(sample_program(rng, n_nodes, n_decisions)).graph;
}

// Chart sizes 3..6 nodes with 0..2 decisions, as the dataset uses.
inline FlowGraph sample_graph(Rng& rng) {
  const int n = rng.uniform_int(3, kPad);
  const int d = rng.uniform_int(0, max_decisions(n));
  return sample_graph(rng, n, d);
}

}  // namespace flowsynth
