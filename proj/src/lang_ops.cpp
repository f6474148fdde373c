#include "sclab/lang_ops.hpp"

#include <unordered_map>

#include "sclab/error.hpp"

namespace sclab {

std::string_view to_string(BoolOp op) {
  switch (op) {
    case BoolOp::kUnion: return "union";
    case BoolOp::kSymDiff: return "symdiff";
    case BoolOp::kDifference: return "difference";
    case BoolOp::kIntersection: return "intersection";
  }
  return "?";
}

std::optional<BoolOp> parse_bool_op(std::string_view name) {
  for (auto op : {BoolOp::kUnion, BoolOp::kSymDiff, BoolOp::kDifference, BoolOp::kIntersection}) {
    if (to_string(op) == name) return op;
  }
  return std::nullopt;
}

bool combine(BoolOp op, bool in_left, bool in_right) {
  switch (op) {
    case BoolOp::kUnion: return in_left || in_right;
    case BoolOp::kSymDiff: return in_left != in_right;
    case BoolOp::kDifference: return in_left && !in_right;
    case BoolOp::kIntersection: return in_left && in_right;
  }
  return false;
}

std::string ProductStateLabel::to_string() const {
  auto side = [](const std::optional<State>& q, const char* prime) {
    return (q ? std::to_string(*q) : std::string("empty")) + prime;
  };
  return "(" + side(left, "'") + "," + side(right, "") + ")";
}

LabeledDfa direct_product(const Dfa& left, const Dfa& right, BoolOp finals_rule) {
  const Alphabet sigma = left.alphabet().union_with(right.alphabet());
  const Dfa l = complete(left, sigma);
  const Dfa r = complete(right, sigma);
  const bool left_sink = l.size() > left.size();
  const bool right_sink = r.size() > right.size();
  const std::size_t k = sigma.size();

  std::unordered_map<std::uint64_t, State> index;
  std::vector<std::pair<State, State>> pairs;
  auto intern = [&](State p, State q) {
    const std::uint64_t key = (std::uint64_t{p} << 32) | q;
    auto [it, fresh] = index.emplace(key, static_cast<State>(pairs.size()));
    if (fresh) pairs.emplace_back(p, q);
    return it->second;
  };
  intern(l.initial(), r.initial());
  std::vector<State> rows;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t x = 0; x < k; ++x) {
      const auto [p, q] = pairs[i];
      rows.push_back(intern(l.next(p, x), r.next(q, x)));
    }
  }

  const std::size_t n = pairs.size();
  std::vector<State> table(n * k);
  std::vector<State> finals;
  std::vector<ProductStateLabel> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t x = 0; x < k; ++x) table[x * n + i] = rows[i * k + x];
    const auto [p, q] = pairs[i];
    if (combine(finals_rule, l.is_final(p), r.is_final(q))) finals.push_back(static_cast<State>(i));
    ProductStateLabel label;
    if (!(left_sink && p == left.size())) label.left = p;
    if (!(right_sink && q == right.size())) label.right = q;
    labels.push_back(label);
  }
  return {Dfa(n, sigma, std::move(table), 0, std::move(finals)), std::move(labels)};
}

Dfa boolean_op(const Dfa& left, const Dfa& right, BoolOp op) {
  return minimize_over_effective_alphabet(direct_product(left, right, op).dfa);
}

Nfa concat_nfa(const Dfa& left, const Dfa& right) {
  const Alphabet sigma = left.alphabet().union_with(right.alphabet());
  const std::size_t m = left.size();
  Nfa nfa(m + right.size(), sigma);
  for (std::size_t x = 0; x < sigma.size(); ++x) {
    if (auto lx = left.alphabet().index_of(sigma[x])) {
      for (State p = 0; p < m; ++p) nfa.add_transition(p, x, left.next(p, *lx));
    }
    if (auto rx = right.alphabet().index_of(sigma[x])) {
      for (State q = 0; q < right.size(); ++q)
        nfa.add_transition(static_cast<State>(m + q), x, static_cast<State>(m + right.next(q, *rx)));
    }
  }
  nfa.add_initial(left.initial());
  for (State f : left.finals()) nfa.add_epsilon(f, static_cast<State>(m + right.initial()));
  for (State f : right.finals()) nfa.add_final(static_cast<State>(m + f));
  return nfa;
}

Dfa concat(const Dfa& left, const Dfa& right, std::size_t budget) {
  return minimize_over_effective_alphabet(determinize(concat_nfa(left, right), budget));
}

Nfa star_nfa(const Dfa& d) {
  const std::size_t n = d.size();
  const auto fresh = static_cast<State>(n);
  Nfa nfa(n + 1, d.alphabet());
  for (std::size_t x = 0; x < d.alphabet().size(); ++x) {
    for (State q = 0; q < n; ++q) nfa.add_transition(q, x, d.next(q, x));
  }
  nfa.add_initial(fresh);
  nfa.add_final(fresh);
  nfa.add_epsilon(fresh, d.initial());
  for (State f : d.finals()) {
    nfa.add_final(f);
    nfa.add_epsilon(f, d.initial());
  }
  return nfa;
}

Dfa star(const Dfa& d, std::size_t budget) {
  return minimize_over_effective_alphabet(determinize(star_nfa(d), budget));
}

Nfa reverse_nfa(const Dfa& d) {
  Nfa nfa(d.size(), d.alphabet());
  for (std::size_t x = 0; x < d.alphabet().size(); ++x) {
    for (State q = 0; q < d.size(); ++q) nfa.add_transition(d.next(q, x), x, q);
  }
  for (State f : d.finals()) nfa.add_initial(f);
  nfa.add_final(d.initial());
  return nfa;
}

Dfa reverse(const Dfa& d, std::size_t budget) {
  return minimize_over_effective_alphabet(determinize(reverse_nfa(d), budget));
}

std::size_t ProductCensus::bound() const noexcept {
  const std::size_t full = std::size_t{1} << n;
  return (m - k) * full + k * (full / 2) + full;
}

ProductCensus product_subset_census(const Dfa& left, const Dfa& right, std::size_t budget) {
  const auto det = determinize_with_subsets(concat_nfa(left, right), budget);
  const std::size_t m = left.size();
  const auto right_initial = static_cast<State>(m + right.initial());
  ProductCensus census;
  census.m = m;
  census.n = right.size();
  census.k = left.finals().size();
  for (const StateSet& s : det.subsets) {
    std::optional<State> primed;
    for (State q : s.members()) {
      if (q >= m) break;
      if (primed)
        throw InvariantError("reachable subset " + s.to_string() + " holds two states of the left DFA");
      primed = q;
    }
    if (!primed) {
      ++census.class_c;
    } else if (!left.is_final(*primed)) {
      ++census.class_a;
    } else if (s.contains(right_initial)) {
      ++census.class_b;
    } else {
      throw InvariantError("reachable subset " + s.to_string() +
                           " holds a final left state without the right initial state");
    }
  }
  return census;
}

}  // namespace sclab
