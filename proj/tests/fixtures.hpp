#pragma once

#include "sclab/automata.hpp"

namespace sclab::testing {

// {a,b}*b: 0' -b-> 1', 1' -a-> 0', loops 0' on a and 1' on b.
inline Dfa two_state_left() { return Dfa(2, Alphabet{'a', 'b'}, {0, 0, 1, 1}, 0, {1}); }

// {a,c}*c
inline Dfa two_state_right() { return Dfa(2, Alphabet{'a', 'c'}, {0, 0, 1, 1}, 0, {1}); }

inline Alphabet abc() { return Alphabet{'a', 'b', 'c'}; }

// Left fixture completed by hand: sink 2' takes c from 0' and 1'.
inline Dfa completed_left() {
  return Dfa(3, abc(), {0, 0, 2, /*b*/ 1, 1, 2, /*c*/ 2, 2, 2}, 0, {1});
}

// Right fixture completed: sink 2 takes b from 0 and 1.
inline Dfa completed_right() {
  return Dfa(3, abc(), {0, 0, 2, /*b*/ 2, 2, 2, /*c*/ 1, 1, 2}, 0, {1});
}

inline Dfa universal_language(const Alphabet& sigma) {
  return Dfa(1, sigma, std::vector<State>(sigma.size(), 0), 0, {0});
}

inline Dfa empty_language(const Alphabet& sigma) {
  return Dfa(1, sigma, std::vector<State>(sigma.size(), 0), 0, {});
}

// {ε}: final initial state, everything else to a sink.
inline Dfa epsilon_language(const Alphabet& sigma) {
  std::vector<State> table(2 * sigma.size(), 1);
  return Dfa(2, sigma, table, 0, {0});
}

}  // namespace sclab::testing
