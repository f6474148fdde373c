#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "sclab/automata.hpp"

namespace sclab {

/// The four-letter master alphabet (a, b, c, d) of the universal witness.
const Alphabet& master_alphabet();

/// Injective partial map on the master alphabet. Entry i is the letter that
/// replaces master letter i, or nullopt when that letter is deleted.
class PartialPermutation {
 public:
  static constexpr std::size_t kMasterSize = 4;

  PartialPermutation() = default;
  explicit PartialPermutation(std::array<std::optional<Letter>, kMasterSize> mapping);

  /// Parses "b,a,-,d". Trailing undefined entries may be omitted ("b,a").
  static PartialPermutation parse(std::string_view text);
  static PartialPermutation identity();

  const std::optional<Letter>& operator[](std::size_t i) const { return mapping_.at(i); }
  std::optional<Letter> image(Letter x) const;
  bool is_total() const;

  /// Inverse image of a letter, if any.
  std::optional<Letter> preimage(Letter y) const;

  /// "b,a,-,d" with trailing undefined entries dropped.
  std::string to_string() const;

  friend bool operator==(const PartialPermutation&, const PartialPermutation&) = default;

 private:
  std::array<std::optional<Letter>, kMasterSize> mapping_{};
};

/// U_n(a,b,c,d): initial 0, final {n-1}, a: (0,...,n-1), b: (0,1),
/// c: (n-1 -> 0), d: identity. Requires n >= 3.
Dfa universal_witness(std::size_t n);

/// Renames letters by pi (letter pi(x) acts as x did) and deletes letters
/// where pi is undefined. States and numbering are unchanged. The result
/// alphabet is listed in master order.
Dfa dialect(const Dfa& d, const PartialPermutation& pi);

/// Shorthand for dialect(universal_witness(n), parse(spec)).
Dfa witness(std::size_t n, std::string_view dialect_spec);

enum class OpKind { kUnion, kSymDiff, kDifference, kIntersection, kProduct };

std::string_view to_string(OpKind op);
std::optional<OpKind> parse_op_kind(std::string_view name);

struct WitnessPair {
  Dfa left;
  Dfa right;
  PartialPermutation left_dialect;
  PartialPermutation right_dialect;
};

/// The witness pair meeting the different-alphabet bound for op:
///   union, symdiff, product: L'_m(a,b,-,c) and L_n(b,a,-,d)
///   difference:              L'_m(a,b,-,c) and L_n(b,a)
///   intersection:            L'_m(a,b)     and L_n(b,a)
WitnessPair witness_pair(OpKind op, std::size_t m, std::size_t n);

/// Dialects over one shared alphabet, used to reproduce the classical
/// same-alphabet bounds for comparison.
WitnessPair same_alphabet_witness_pair(OpKind op, std::size_t m, std::size_t n);

}  // namespace sclab
