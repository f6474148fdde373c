#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sclab {

/// A single printable symbol.
struct Letter {
  char symbol = 0;

  friend bool operator==(Letter, Letter) = default;
  friend auto operator<=>(Letter, Letter) = default;
};

using Word = std::vector<Letter>;

/// Converts "abba" into a word. Only used at API boundaries.
Word word_from_string(std::string_view text);
std::string word_to_string(const Word& w);

/// Ordered set of letters. Position in the sequence is the letter's index
/// within this alphabet; the order is preserved by every operation.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Letter> letters);
  Alphabet(std::initializer_list<char> symbols);
  /// "abc" -> {a, b, c}
  static Alphabet from_string(std::string_view symbols);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_.at(i); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  std::optional<std::size_t> index_of(Letter x) const noexcept;
  bool contains(Letter x) const noexcept { return index_of(x).has_value(); }
  bool is_subset_of(const Alphabet& other) const noexcept;

  /// Letters of *this in order, followed by letters of other not already present.
  Alphabet union_with(const Alphabet& other) const;
  /// Letters of *this, in this order, that also occur in other.
  Alphabet intersect_with(const Alphabet& other) const;

  std::string to_string() const;

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<Letter> letters_;
};

}  // namespace sclab
