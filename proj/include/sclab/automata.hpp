#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sclab/alphabet.hpp"
#include "sclab/state_set.hpp"

namespace sclab {

/// Complete deterministic automaton. States are 0..n-1 and the transition
/// table is total: every (state, letter) pair has exactly one image.
///
/// The table is stored letter-major, `table[x * n + q] = delta(q, x)`, which
/// is also the layout of the JSON interchange format.
class Dfa {
 public:
  Dfa(std::size_t n, Alphabet alphabet, std::vector<State> table, State initial,
      std::vector<State> finals);

  std::size_t size() const noexcept { return n_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  State initial() const noexcept { return initial_; }
  bool is_final(State q) const { return finals_.at(q) != 0; }
  std::vector<State> finals() const;

  /// Image of q under the letter at position x of alphabet().
  State next(State q, std::size_t x) const { return table_[x * n_ + q]; }
  /// Images of all states under the letter at position x.
  std::vector<State> column(std::size_t x) const;
  const std::vector<State>& table() const noexcept { return table_; }

  /// Runs w from state q. Throws PreconditionError on letters outside alphabet().
  State run(State q, const Word& w) const;

  /// Same automaton with a different initial state.
  Dfa with_initial(State q) const;
  /// Same transitions with a different final-state set.
  Dfa with_finals(std::vector<State> finals) const;

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  std::size_t n_;
  Alphabet alphabet_;
  std::vector<State> table_;
  State initial_;
  std::vector<char> finals_;
};

/// A DFA that may be missing transitions. Only `complete` consumes it.
struct PartialDfa {
  static constexpr State kMissing = static_cast<State>(-1);

  std::size_t n = 0;
  Alphabet alphabet;
  std::vector<State> table;  // letter-major, kMissing for absent transitions
  State initial = 0;
  std::vector<State> finals;
};

/// Nondeterministic automaton with a set of initial states and optional
/// epsilon transitions.
class Nfa {
 public:
  Nfa(std::size_t n, Alphabet alphabet);

  std::size_t size() const noexcept { return n_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }

  void add_transition(State from, std::size_t letter, State to);
  void add_epsilon(State from, State to);
  void add_initial(State q);
  void add_final(State q);

  const std::vector<State>& targets(State q, std::size_t letter) const {
    return delta_[letter * n_ + q];
  }
  const std::vector<State>& epsilon_targets(State q) const { return epsilon_[q]; }
  bool has_epsilon() const noexcept { return has_epsilon_; }
  const StateSet& initials() const noexcept { return initials_; }
  const StateSet& finals() const noexcept { return finals_; }

  /// Epsilon closure of a set of states.
  StateSet closure(StateSet s) const;
  /// Epsilon closure of the image of s under letter.
  StateSet step(const StateSet& s, std::size_t letter) const;

  bool accepts(const Word& w) const;

  /// Views a DFA as an NFA.
  static Nfa from_dfa(const Dfa& d);

 private:
  void check_state(State q) const;

  std::size_t n_;
  Alphabet alphabet_;
  std::vector<std::vector<State>> delta_;
  std::vector<std::vector<State>> epsilon_;
  bool has_epsilon_ = false;
  StateSet initials_;
  StateSet finals_;
};

/// Default limit on subsets materialized by the subset construction.
inline constexpr std::size_t kDefaultSubsetBudget = 2'000'000;

/// Result of the subset construction together with the subset each DFA state
/// stands for.
struct Determinized {
  Dfa dfa;
  std::vector<StateSet> subsets;
};

bool accepts(const Dfa& d, const Word& w);
/// Like accepts, but a word using letters outside the alphabet is simply not
/// in the language.
bool in_language(const Dfa& d, const Word& w);

/// States reachable from the initial state.
std::vector<bool> reachable_states(const Dfa& d);
/// States from which some final state is reachable.
std::vector<bool> coreachable_states(const Dfa& d);

/// Letters that occur in some accepted word, in alphabet order.
Alphabet effective_alphabet(const Dfa& d);

/// Completes d over target. Adds exactly one sink state (as the highest
/// index) if any transition is missing; otherwise only reorders columns to
/// match target.
Dfa complete(const Dfa& d, const Alphabet& target);
Dfa complete(const PartialDfa& d, const Alphabet& target);

/// Keeps only the letters of sub; the language becomes L(d) ∩ sub*.
Dfa restrict(const Dfa& d, const Alphabet& sub);

/// Accessible subset construction with epsilon closure. The empty subset,
/// when reached, becomes an ordinary sink state.
Determinized determinize_with_subsets(const Nfa& nfa,
                                      std::size_t budget = kDefaultSubsetBudget);
Dfa determinize(const Nfa& nfa, std::size_t budget = kDefaultSubsetBudget);

/// Drops unreachable states.
Dfa trim(const Dfa& d);

/// Partition-refinement minimization. States of the result are numbered in
/// BFS order from the initial state, visiting letters in alphabet order, so
/// two minimal DFAs of one language over one alphabet compare equal.
Dfa minimize(const Dfa& d);

/// Renumbers reachable states in canonical BFS order (no merging).
Dfa canonical_numbering(const Dfa& d);

/// Restricts d to its effective alphabet and minimizes. This is the only
/// correct way to obtain the minimal DFA of a language over its own
/// alphabet; every operation result goes through it.
Dfa minimize_over_effective_alphabet(const Dfa& d);

/// Number of quotients of L(d), i.e. states of the minimal complete DFA over
/// the language's own alphabet. Languages with an empty alphabet (the empty
/// language and {ε}) get 1.
std::size_t quotient_complexity(const Dfa& d);

/// True for the empty language and {ε}, where quotient complexity is only
/// defined by convention.
bool has_empty_alphabet(const Dfa& d);

/// Language equality over the union of both alphabets.
bool equivalent(const Dfa& d1, const Dfa& d2);

}  // namespace sclab
