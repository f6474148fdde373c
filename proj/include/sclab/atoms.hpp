#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sclab/automata.hpp"
#include "sclab/state_set.hpp"
#include "sclab/transforms.hpp"

namespace sclab {

/// Size of the transition semigroup of the minimal DFA of L(d) (the
/// transformations induced by nonempty words). d is minimized first when
/// it is not already minimal.
std::size_t syntactic_semigroup_size(const Dfa& d);
std::size_t syntactic_semigroup_size(const Dfa& d, std::size_t budget);

/// Quotient complexity of the language of every state of d, i.e. of each
/// quotient when d is minimal.
std::vector<std::size_t> quotient_complexities(const Dfa& d);

/// The vector (0w, 1w, ..., (n-1)w) reached by a word w.
using TupleState = Transformation;

struct AtomProfile {
  StateSet set;  // S: the quotients the atom's words belong to
  bool nonempty = false;
  std::optional<std::size_t> measured_kappa;  // present iff nonempty
};

struct AtomReport {
  std::size_t n = 0;               // states of the minimal DFA
  bool minimized_input = false;    // true when atoms() had to minimize d
  std::size_t tuple_states = 0;    // reachable tuples
  std::vector<AtomProfile> atoms;  // every S ⊆ Q_n, ordered by bitmask

  std::size_t atom_count() const;
};

/// Limit on reachable tuples; n^n is the most a DFA can reach.
inline constexpr std::size_t kDefaultTupleBudget = 1'000'000;

/// Atoms of L(d) and the quotient complexity of each one. Atom A_S holds
/// the words w with {q : qw final} = S. One tuple automaton is built and
/// re-finalized per S.
AtomReport atoms(const Dfa& d, std::size_t budget = kDefaultTupleBudget);

/// Closed-form complexity of atom A_S with |S| = s for the most complex
/// stream: 2^n - 1 when s is 0 or n, otherwise
/// 1 + sum_{x=1..s} sum_{y=1..n-s} C(n,x) C(n-x,y).
std::uint64_t atom_formula(std::size_t n, std::size_t s);

/// Exact binomial coefficient.
std::uint64_t binomial(std::size_t n, std::size_t k);

}  // namespace sclab
