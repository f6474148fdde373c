#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sclab {

using State = std::uint32_t;

/// Fixed-capacity bitset over the states [0, n) of one automaton.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::size_t capacity);
  StateSet(std::size_t capacity, std::initializer_list<State> members);

  std::size_t capacity() const noexcept { return capacity_; }
  bool contains(State q) const;
  void insert(State q);
  void erase(State q);
  std::size_t size() const noexcept;
  bool empty() const noexcept;

  /// Members in increasing order.
  std::vector<State> members() const;

  StateSet& operator|=(const StateSet& other);
  friend StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }

  /// "{0,2}"
  std::string to_string() const;

  std::size_t hash() const noexcept;

  friend bool operator==(const StateSet&, const StateSet&) = default;

 private:
  std::size_t capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

struct StateSetHash {
  std::size_t operator()(const StateSet& s) const noexcept { return s.hash(); }
};

}  // namespace sclab
