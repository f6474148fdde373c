#include "sclab/alphabet.hpp"

#include <algorithm>
#include <cctype>

#include "sclab/error.hpp"

namespace sclab {

Word word_from_string(std::string_view text) {
  Word w;
  w.reserve(text.size());
  for (char c : text) w.push_back(Letter{c});
  return w;
}

std::string word_to_string(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Letter x : w) s.push_back(x.symbol);
  return s;
}

Alphabet::Alphabet(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const char c = letters_[i].symbol;
    if (!std::isgraph(static_cast<unsigned char>(c)))
      throw PreconditionError("alphabet letters must be printable symbols");
    for (std::size_t j = 0; j < i; ++j) {
      if (letters_[j] == letters_[i])
        throw PreconditionError(std::string("duplicate letter '") + c + "' in alphabet");
    }
  }
}

Alphabet::Alphabet(std::initializer_list<char> symbols)
    : Alphabet([&] {
        std::vector<Letter> v;
        for (char c : symbols) v.push_back(Letter{c});
        return v;
      }()) {}

Alphabet Alphabet::from_string(std::string_view symbols) {
  std::vector<Letter> v;
  for (char c : symbols) v.push_back(Letter{c});
  return Alphabet(std::move(v));
}

std::optional<std::size_t> Alphabet::index_of(Letter x) const noexcept {
  auto it = std::find(letters_.begin(), letters_.end(), x);
  if (it == letters_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - letters_.begin());
}

bool Alphabet::is_subset_of(const Alphabet& other) const noexcept {
  return std::all_of(letters_.begin(), letters_.end(),
                     [&](Letter x) { return other.contains(x); });
}

Alphabet Alphabet::union_with(const Alphabet& other) const {
  std::vector<Letter> v = letters_;
  for (Letter x : other.letters_) {
    if (!contains(x)) v.push_back(x);
  }
  return Alphabet(std::move(v));
}

Alphabet Alphabet::intersect_with(const Alphabet& other) const {
  std::vector<Letter> v;
  for (Letter x : letters_) {
    if (other.contains(x)) v.push_back(x);
  }
  return Alphabet(std::move(v));
}

std::string Alphabet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += ',';
    s += letters_[i].symbol;
  }
  return s + "}";
}

}  // namespace sclab
