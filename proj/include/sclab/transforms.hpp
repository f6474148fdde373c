#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "sclab/automata.hpp"
#include "sclab/state_set.hpp"

namespace sclab {

/// Total map of Q_n = {0, ..., n-1} to itself; images()[q] is the image qt.
class Transformation {
 public:
  explicit Transformation(std::vector<State> images);
  Transformation(std::initializer_list<State> images)
      : Transformation(std::vector<State>(images)) {}

  std::size_t degree() const noexcept { return images_.size(); }
  State operator()(State q) const { return images_.at(q); }
  const std::vector<State>& images() const noexcept { return images_; }

  bool is_permutation() const;
  bool is_identity() const;

  /// Cycle notation with fixed points elided, "1" for the identity, "(p->q)"
  /// for a single point map, and the image list otherwise.
  std::string to_string() const;

  /// One byte per image; dedup key for semigroup closure.
  std::string key() const;

  friend bool operator==(const Transformation&, const Transformation&) = default;
  friend auto operator<=>(const Transformation&, const Transformation&) = default;

 private:
  std::vector<State> images_;
};

Transformation make_identity(std::size_t n);
/// (q0, q1, ..., q_{k-1}): q_i -> q_{i+1 mod k}, all other states fixed.
Transformation make_cycle(std::size_t n, const std::vector<State>& states);
/// (p, q)
Transformation make_transposition(std::size_t n, State p, State q);
/// (p -> q): p goes to q, everything else fixed.
Transformation make_point(std::size_t n, State p, State q);

/// Left action: q(s * t) = (qs)t, i.e. apply s first, then t.
Transformation compose(const Transformation& s, const Transformation& t);

/// Pt = {pt | p in P}
StateSet apply_to_set(const Transformation& t, const StateSet& p);

/// Transformation induced by the letter at position x of d's alphabet.
Transformation letter_transformation(const Dfa& d, std::size_t x);

/// Transformations of a semigroup in discovery (BFS) order. Products of one
/// or more generators only: the identity appears only if it is generated.
struct Semigroup {
  std::vector<Transformation> generators;
  std::vector<Transformation> elements;

  std::size_t size() const noexcept { return elements.size(); }
  bool contains(const Transformation& t) const;
};

/// n^n + 1, saturating.
std::size_t default_semigroup_budget(std::size_t n);

/// Closure of the generators under composition. Throws ResourceError once
/// more than `budget` elements have been discovered.
Semigroup generate_semigroup(const std::vector<Transformation>& generators, std::size_t budget);
Semigroup generate_semigroup(const std::vector<Transformation>& generators);

}  // namespace sclab
