#include "sclab/automata.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>

#include "sclab/error.hpp"

namespace sclab {

namespace {

std::string letter_str(Letter x) { return std::string(1, x.symbol); }

}  // namespace

// ---------------------------------------------------------------------------
// Dfa

Dfa::Dfa(std::size_t n, Alphabet alphabet, std::vector<State> table, State initial,
         std::vector<State> finals)
    : n_(n), alphabet_(std::move(alphabet)), table_(std::move(table)), initial_(initial) {
  if (n_ == 0) throw PreconditionError("a DFA needs at least one state");
  if (table_.size() != n_ * alphabet_.size())
    throw PreconditionError("transition table has " + std::to_string(table_.size()) +
                            " entries, expected " + std::to_string(n_ * alphabet_.size()));
  for (State t : table_) {
    if (t >= n_) throw PreconditionError("transition target " + std::to_string(t) + " out of range");
  }
  if (initial_ >= n_) throw PreconditionError("initial state out of range");
  finals_.assign(n_, 0);
  for (State f : finals) {
    if (f >= n_) throw PreconditionError("final state " + std::to_string(f) + " out of range");
    finals_[f] = 1;
  }
}

std::vector<State> Dfa::finals() const {
  std::vector<State> out;
  for (State q = 0; q < n_; ++q) {
    if (finals_[q]) out.push_back(q);
  }
  return out;
}

std::vector<State> Dfa::column(std::size_t x) const {
  return {table_.begin() + static_cast<std::ptrdiff_t>(x * n_),
          table_.begin() + static_cast<std::ptrdiff_t>((x + 1) * n_)};
}

State Dfa::run(State q, const Word& w) const {
  for (Letter c : w) {
    auto x = alphabet_.index_of(c);
    if (!x) throw PreconditionError("letter '" + letter_str(c) + "' is not in the alphabet " + alphabet_.to_string());
    q = next(q, *x);
  }
  return q;
}

Dfa Dfa::with_initial(State q) const { return Dfa(n_, alphabet_, table_, q, finals()); }

Dfa Dfa::with_finals(std::vector<State> finals) const {
  return Dfa(n_, alphabet_, table_, initial_, std::move(finals));
}

// ---------------------------------------------------------------------------
// Nfa

Nfa::Nfa(std::size_t n, Alphabet alphabet)
    : n_(n),
      alphabet_(std::move(alphabet)),
      delta_(n * alphabet_.size()),
      epsilon_(n),
      initials_(n),
      finals_(n) {}

void Nfa::check_state(State q) const {
  if (q >= n_) throw PreconditionError("NFA state " + std::to_string(q) + " out of range");
}

void Nfa::add_transition(State from, std::size_t letter, State to) {
  check_state(from);
  check_state(to);
  if (letter >= alphabet_.size()) throw PreconditionError("NFA letter index out of range");
  auto& v = delta_[letter * n_ + from];
  if (std::find(v.begin(), v.end(), to) == v.end()) v.push_back(to);
}

void Nfa::add_epsilon(State from, State to) {
  check_state(from);
  check_state(to);
  auto& v = epsilon_[from];
  if (std::find(v.begin(), v.end(), to) == v.end()) v.push_back(to);
  has_epsilon_ = true;
}

void Nfa::add_initial(State q) { initials_.insert(q); }
void Nfa::add_final(State q) { finals_.insert(q); }

StateSet Nfa::closure(StateSet s) const {
  if (!has_epsilon_) return s;
  std::vector<State> stack = s.members();
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (State t : epsilon_[q]) {
      if (!s.contains(t)) {
        s.insert(t);
        stack.push_back(t);
      }
    }
  }
  return s;
}

StateSet Nfa::step(const StateSet& s, std::size_t letter) const {
  StateSet out(n_);
  for (State q : s.members()) {
    for (State t : targets(q, letter)) out.insert(t);
  }
  return closure(std::move(out));
}

bool Nfa::accepts(const Word& w) const {
  StateSet cur = closure(initials_);
  for (Letter c : w) {
    auto x = alphabet_.index_of(c);
    if (!x) throw PreconditionError("letter '" + letter_str(c) + "' is not in the alphabet " + alphabet_.to_string());
    cur = step(cur, *x);
  }
  for (State q : cur.members()) {
    if (finals_.contains(q)) return true;
  }
  return false;
}

Nfa Nfa::from_dfa(const Dfa& d) {
  Nfa nfa(d.size(), d.alphabet());
  for (std::size_t x = 0; x < d.alphabet().size(); ++x) {
    for (State q = 0; q < d.size(); ++q) nfa.add_transition(q, x, d.next(q, x));
  }
  nfa.add_initial(d.initial());
  for (State f : d.finals()) nfa.add_final(f);
  return nfa;
}

// ---------------------------------------------------------------------------
// Semantic primitives

bool accepts(const Dfa& d, const Word& w) { return d.is_final(d.run(d.initial(), w)); }

bool in_language(const Dfa& d, const Word& w) {
  State q = d.initial();
  for (Letter c : w) {
    auto x = d.alphabet().index_of(c);
    if (!x) return false;
    q = d.next(q, *x);
  }
  return d.is_final(q);
}

std::vector<bool> reachable_states(const Dfa& d) {
  std::vector<bool> seen(d.size(), false);
  std::vector<State> stack{d.initial()};
  seen[d.initial()] = true;
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (std::size_t x = 0; x < d.alphabet().size(); ++x) {
      State t = d.next(q, x);
      if (!seen[t]) {
        seen[t] = true;
        stack.push_back(t);
      }
    }
  }
  return seen;
}

std::vector<bool> coreachable_states(const Dfa& d) {
  const std::size_t n = d.size();
  const std::size_t k = d.alphabet().size();
  std::vector<std::vector<State>> preds(n);
  for (std::size_t x = 0; x < k; ++x) {
    for (State q = 0; q < n; ++q) preds[d.next(q, x)].push_back(q);
  }
  std::vector<bool> seen(n, false);
  std::vector<State> stack;
  for (State f : d.finals()) {
    seen[f] = true;
    stack.push_back(f);
  }
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (State p : preds[q]) {
      if (!seen[p]) {
        seen[p] = true;
        stack.push_back(p);
      }
    }
  }
  return seen;
}

Alphabet effective_alphabet(const Dfa& d) {
  const auto reach = reachable_states(d);
  const auto coreach = coreachable_states(d);
  std::vector<Letter> used;
  for (std::size_t x = 0; x < d.alphabet().size(); ++x) {
    for (State q = 0; q < d.size(); ++q) {
      if (reach[q] && coreach[d.next(q, x)]) {
        used.push_back(d.alphabet()[x]);
        break;
      }
    }
  }
  return Alphabet(std::move(used));
}

Dfa complete(const PartialDfa& d, const Alphabet& target) {
  if (!d.alphabet.is_subset_of(target))
    throw PreconditionError("completion target " + target.to_string() +
                            " does not contain the alphabet " + d.alphabet.to_string());
  if (d.table.size() != d.n * d.alphabet.size())
    throw PreconditionError("partial transition table has the wrong size");
  const bool missing_letters = target.size() != d.alphabet.size();
  const bool missing_entries =
      std::find(d.table.begin(), d.table.end(), PartialDfa::kMissing) != d.table.end();
  const bool add_sink = missing_letters || missing_entries;
  const std::size_t n = d.n + (add_sink ? 1 : 0);
  const auto sink = static_cast<State>(d.n);

  std::vector<State> table(n * target.size());
  for (std::size_t x = 0; x < target.size(); ++x) {
    const auto src = d.alphabet.index_of(target[x]);
    for (State q = 0; q < n; ++q) {
      State t = sink;
      if (src && q < d.n) {
        t = d.table[*src * d.n + q];
        if (t == PartialDfa::kMissing) t = sink;
      }
      table[x * n + q] = t;
    }
  }
  return Dfa(n, target, std::move(table), d.initial, d.finals);
}

Dfa complete(const Dfa& d, const Alphabet& target) {
  PartialDfa p{d.size(), d.alphabet(), d.table(), d.initial(), d.finals()};
  return complete(p, target);
}

Dfa restrict(const Dfa& d, const Alphabet& sub) {
  if (!sub.is_subset_of(d.alphabet()))
    throw PreconditionError("restriction alphabet " + sub.to_string() + " is not a subset of " +
                            d.alphabet().to_string());
  const Alphabet kept = d.alphabet().intersect_with(sub);
  std::vector<State> table;
  table.reserve(d.size() * kept.size());
  for (Letter c : kept) {
    const auto col = d.column(*d.alphabet().index_of(c));
    table.insert(table.end(), col.begin(), col.end());
  }
  return Dfa(d.size(), kept, std::move(table), d.initial(), d.finals());
}

// ---------------------------------------------------------------------------
// Subset construction

Determinized determinize_with_subsets(const Nfa& nfa, std::size_t budget) {
  const std::size_t k = nfa.alphabet().size();
  std::unordered_map<StateSet, State, StateSetHash> index;
  std::vector<StateSet> subsets;
  std::vector<State> rows;  // state-major while building

  auto intern = [&](StateSet s) -> State {
    auto it = index.find(s);
    if (it != index.end()) return it->second;
    if (subsets.size() >= budget)
      throw ResourceError("subset construction exceeded its state budget", budget,
                          subsets.size() + 1);
    const auto id = static_cast<State>(subsets.size());
    index.emplace(s, id);
    subsets.push_back(std::move(s));
    return id;
  };

  intern(nfa.closure(nfa.initials()));
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t x = 0; x < k; ++x) {
      StateSet next = nfa.step(subsets[i], x);
      rows.push_back(intern(std::move(next)));
    }
  }

  const std::size_t n = subsets.size();
  std::vector<State> table(n * k);
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t x = 0; x < k; ++x) table[x * n + q] = rows[q * k + x];
  }
  std::vector<State> finals;
  for (std::size_t q = 0; q < n; ++q) {
    for (State s : subsets[q].members()) {
      if (nfa.finals().contains(s)) {
        finals.push_back(static_cast<State>(q));
        break;
      }
    }
  }
  return {Dfa(n, nfa.alphabet(), std::move(table), 0, std::move(finals)), std::move(subsets)};
}

Dfa determinize(const Nfa& nfa, std::size_t budget) {
  return determinize_with_subsets(nfa, budget).dfa;
}

// ---------------------------------------------------------------------------
// Minimization

Dfa canonical_numbering(const Dfa& d) {
  const std::size_t k = d.alphabet().size();
  constexpr State kUnset = static_cast<State>(-1);
  std::vector<State> id(d.size(), kUnset);
  std::vector<State> order{d.initial()};
  id[d.initial()] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t x = 0; x < k; ++x) {
      State t = d.next(order[i], x);
      if (id[t] == kUnset) {
        id[t] = static_cast<State>(order.size());
        order.push_back(t);
      }
    }
  }
  const std::size_t n = order.size();
  std::vector<State> table(n * k);
  std::vector<State> finals;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t x = 0; x < k; ++x) table[x * n + i] = id[d.next(order[i], x)];
    if (d.is_final(order[i])) finals.push_back(static_cast<State>(i));
  }
  return Dfa(n, d.alphabet(), std::move(table), 0, std::move(finals));
}

Dfa trim(const Dfa& d) { return canonical_numbering(d); }

namespace {

// Hopcroft's algorithm on a DFA whose states are all reachable. Returns the
// block index of every state.
std::vector<std::size_t> hopcroft_blocks(const Dfa& d) {
  const std::size_t n = d.size();
  const std::size_t k = d.alphabet().size();

  // inverse[x][t] = predecessors of t under x
  std::vector<std::vector<std::vector<State>>> inverse(k, std::vector<std::vector<State>>(n));
  for (std::size_t x = 0; x < k; ++x) {
    for (State q = 0; q < n; ++q) inverse[x][d.next(q, x)].push_back(q);
  }

  std::vector<std::vector<State>> blocks;
  std::vector<std::size_t> block_of(n);
  {
    std::vector<State> fin, non;
    for (State q = 0; q < n; ++q) (d.is_final(q) ? fin : non).push_back(q);
    for (auto* b : {&fin, &non}) {
      if (b->empty()) continue;
      for (State q : *b) block_of[q] = blocks.size();
      blocks.push_back(std::move(*b));
    }
  }

  std::deque<std::pair<std::size_t, std::size_t>> work;
  std::vector<std::vector<char>> in_work;  // [block][letter]
  auto push = [&](std::size_t b, std::size_t x) {
    if (in_work.size() <= b) in_work.resize(b + 1, std::vector<char>(k, 0));
    if (!in_work[b][x]) {
      in_work[b][x] = 1;
      work.emplace_back(b, x);
    }
  };
  in_work.assign(blocks.size(), std::vector<char>(k, 0));
  if (blocks.size() == 2) {
    const std::size_t smaller = blocks[0].size() <= blocks[1].size() ? 0 : 1;
    for (std::size_t x = 0; x < k; ++x) push(smaller, x);
  }

  std::vector<char> marked(n, 0);
  std::vector<std::size_t> touched_count;
  std::vector<std::size_t> touched;
  while (!work.empty()) {
    auto [splitter, x] = work.front();
    work.pop_front();
    in_work[splitter][x] = 0;

    std::vector<State> pre;
    for (State t : blocks[splitter]) {
      for (State p : inverse[x][t]) pre.push_back(p);
    }
    touched.clear();
    touched_count.resize(blocks.size(), 0);
    for (State p : pre) {
      if (marked[p]) continue;
      marked[p] = 1;
      const std::size_t b = block_of[p];
      if (touched_count[b]++ == 0) touched.push_back(b);
    }
    for (std::size_t b : touched) {
      if (touched_count[b] < blocks[b].size()) {
        std::vector<State> inside, outside;
        for (State q : blocks[b]) (marked[q] ? inside : outside).push_back(q);
        const std::size_t fresh = blocks.size();
        for (State q : inside) block_of[q] = fresh;
        blocks[b] = std::move(outside);
        blocks.push_back(std::move(inside));
        touched_count.push_back(0);
        for (std::size_t c = 0; c < k; ++c) {
          if (in_work.size() > b && in_work[b][c]) {
            push(fresh, c);
          } else {
            push(blocks[b].size() <= blocks[fresh].size() ? b : fresh, c);
          }
        }
      }
      touched_count[b] = 0;
    }
    for (State p : pre) marked[p] = 0;
  }
  return block_of;
}

}  // namespace

Dfa minimize(const Dfa& d) {
  const Dfa r = canonical_numbering(d);
  const std::size_t k = r.alphabet().size();
  const auto block_of = hopcroft_blocks(r);
  const std::size_t nb = *std::max_element(block_of.begin(), block_of.end()) + 1;
  std::vector<State> table(nb * k);
  std::vector<State> finals;
  std::vector<char> done(nb, 0);
  for (State q = 0; q < r.size(); ++q) {
    const std::size_t b = block_of[q];
    if (done[b]) continue;
    done[b] = 1;
    for (std::size_t x = 0; x < k; ++x)
      table[x * nb + b] = static_cast<State>(block_of[r.next(q, x)]);
    if (r.is_final(q)) finals.push_back(static_cast<State>(b));
  }
  Dfa quotient(nb, r.alphabet(), std::move(table), static_cast<State>(block_of[r.initial()]),
               std::move(finals));
  return canonical_numbering(quotient);
}

Dfa minimize_over_effective_alphabet(const Dfa& d) {
  return minimize(restrict(d, effective_alphabet(d)));
}

std::size_t quotient_complexity(const Dfa& d) {
  return minimize_over_effective_alphabet(d).size();
}

bool has_empty_alphabet(const Dfa& d) { return effective_alphabet(d).empty(); }

bool equivalent(const Dfa& d1, const Dfa& d2) {
  const Alphabet u = d1.alphabet().union_with(d2.alphabet());
  return minimize(complete(d1, u)) == minimize(complete(d2, u));
}

}  // namespace sclab
