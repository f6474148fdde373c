#include "sclab/state_set.hpp"

#include <bit>

#include "sclab/error.hpp"

namespace sclab {

StateSet::StateSet(std::size_t capacity)
    : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

StateSet::StateSet(std::size_t capacity, std::initializer_list<State> members)
    : StateSet(capacity) {
  for (State q : members) insert(q);
}

bool StateSet::contains(State q) const {
  if (q >= capacity_) return false;
  return (words_[q / 64] >> (q % 64)) & 1u;
}

void StateSet::insert(State q) {
  if (q >= capacity_)
    throw PreconditionError("state " + std::to_string(q) + " outside state set of capacity " +
                            std::to_string(capacity_));
  words_[q / 64] |= std::uint64_t{1} << (q % 64);
}

void StateSet::erase(State q) {
  if (q < capacity_) words_[q / 64] &= ~(std::uint64_t{1} << (q % 64));
}

std::size_t StateSet::size() const noexcept {
  std::size_t k = 0;
  for (auto w : words_) k += static_cast<std::size_t>(std::popcount(w));
  return k;
}

bool StateSet::empty() const noexcept {
  for (auto w : words_) {
    if (w) return false;
  }
  return true;
}

std::vector<State> StateSet::members() const {
  std::vector<State> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w) {
      const int bit = std::countr_zero(w);
      out.push_back(static_cast<State>(i * 64 + bit));
      w &= w - 1;
    }
  }
  return out;
}

StateSet& StateSet::operator|=(const StateSet& other) {
  if (other.capacity_ != capacity_)
    throw PreconditionError("state sets of different capacity");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

std::string StateSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (State q : members()) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(q);
  }
  return s + "}";
}

std::size_t StateSet::hash() const noexcept {
  // FNV-1a over the words
  std::uint64_t h = 1469598103934665603ull;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ capacity_);
}

}  // namespace sclab
