#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sclab/automata.hpp"

namespace sclab {

enum class BoolOp { kUnion, kSymDiff, kDifference, kIntersection };

std::string_view to_string(BoolOp op);
std::optional<BoolOp> parse_bool_op(std::string_view name);
/// Set-theoretic meaning of op on membership bits.
bool combine(BoolOp op, bool in_left, bool in_right);

/// Component of a product state. nullopt stands for the empty (sink) state
/// added when a side had to be completed.
struct ProductStateLabel {
  std::optional<State> left;
  std::optional<State> right;

  std::string to_string() const;
  friend bool operator==(const ProductStateLabel&, const ProductStateLabel&) = default;
};

struct LabeledDfa {
  Dfa dfa;
  std::vector<ProductStateLabel> labels;  // one per state of dfa
};

/// Direct product over the union alphabet. Each input is completed with a
/// sink only if it lacks some letter; only reachable pairs are built.
LabeledDfa direct_product(const Dfa& left, const Dfa& right, BoolOp finals_rule);

/// Minimal DFA of L(left) op L(right) over the result's own alphabet.
Dfa boolean_op(const Dfa& left, const Dfa& right, BoolOp op);

/// Epsilon-NFA for L(left)L(right): finals of left become non-final and get
/// an epsilon move to the initial state of right. Left states keep their
/// numbers; right state q becomes left.size() + q.
Nfa concat_nfa(const Dfa& left, const Dfa& right);
Dfa concat(const Dfa& left, const Dfa& right, std::size_t budget = kDefaultSubsetBudget);

/// Fresh initial state (final) with an epsilon move to d's initial state;
/// finals of d get an epsilon move back to d's initial state.
Nfa star_nfa(const Dfa& d);
Dfa star(const Dfa& d, std::size_t budget = kDefaultSubsetBudget);

Nfa reverse_nfa(const Dfa& d);
Dfa reverse(const Dfa& d, std::size_t budget = kDefaultSubsetBudget);

/// Reachable subsets of the concatenation NFA sorted into the three shapes
/// of the product upper bound:
///   (a) {p'} ∪ S with p' non-final in left,
///   (b) {p', 0} ∪ S with p' final in left,
///   (c) S ⊆ Q_n.
struct ProductCensus {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t k = 0;  // final states of left
  std::size_t class_a = 0;
  std::size_t class_b = 0;
  std::size_t class_c = 0;

  std::size_t total() const noexcept { return class_a + class_b + class_c; }
  /// (m-k)2^n + k2^(n-1) + 2^n
  std::size_t bound() const noexcept;
};

ProductCensus product_subset_census(const Dfa& left, const Dfa& right,
                                    std::size_t budget = kDefaultSubsetBudget);

}  // namespace sclab
