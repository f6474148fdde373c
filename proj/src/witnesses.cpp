#include "sclab/witnesses.hpp"

#include <algorithm>
#include <cctype>

#include "sclab/error.hpp"
#include "sclab/transforms.hpp"

namespace sclab {

const Alphabet& master_alphabet() {
  static const Alphabet kMaster{'a', 'b', 'c', 'd'};
  return kMaster;
}

PartialPermutation::PartialPermutation(std::array<std::optional<Letter>, kMasterSize> mapping)
    : mapping_(mapping) {
  for (std::size_t i = 0; i < kMasterSize; ++i) {
    if (!mapping_[i]) continue;
    if (!master_alphabet().contains(*mapping_[i]))
      throw PreconditionError(std::string("dialect target '") + mapping_[i]->symbol +
                              "' is not in the master alphabet {a,b,c,d}");
    for (std::size_t j = 0; j < i; ++j) {
      if (mapping_[j] == mapping_[i])
        throw PreconditionError(std::string("dialect maps two letters to '") +
                                mapping_[i]->symbol + "'");
    }
  }
}

PartialPermutation PartialPermutation::parse(std::string_view text) {
  std::array<std::optional<Letter>, kMasterSize> mapping{};
  std::size_t i = 0;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view field = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.front()))) field.remove_prefix(1);
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.back()))) field.remove_suffix(1);
    if (i >= kMasterSize)
      throw ParseError("dialect \"" + std::string(text) + "\" has more than four entries");
    if (field.size() != 1)
      throw ParseError("dialect entry \"" + std::string(field) + "\" must be a single letter or '-'");
    if (field[0] != '-') mapping[i] = Letter{field[0]};
    ++i;
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  try {
    return PartialPermutation(mapping);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

PartialPermutation PartialPermutation::identity() {
  std::array<std::optional<Letter>, kMasterSize> mapping{};
  for (std::size_t i = 0; i < kMasterSize; ++i) mapping[i] = master_alphabet()[i];
  return PartialPermutation(mapping);
}

std::optional<Letter> PartialPermutation::image(Letter x) const {
  auto i = master_alphabet().index_of(x);
  if (!i) return std::nullopt;
  return mapping_[*i];
}

bool PartialPermutation::is_total() const {
  return std::all_of(mapping_.begin(), mapping_.end(), [](const auto& e) { return e.has_value(); });
}

std::optional<Letter> PartialPermutation::preimage(Letter y) const {
  for (std::size_t i = 0; i < kMasterSize; ++i) {
    if (mapping_[i] == y) return master_alphabet()[i];
  }
  return std::nullopt;
}

std::string PartialPermutation::to_string() const {
  std::size_t last = kMasterSize;
  while (last > 0 && !mapping_[last - 1]) --last;
  std::string out;
  for (std::size_t i = 0; i < last; ++i) {
    if (i) out += ',';
    out += mapping_[i] ? mapping_[i]->symbol : '-';
  }
  return out;
}

Dfa universal_witness(std::size_t n) {
  if (n < 3) throw PreconditionError("the universal witness needs n >= 3, got " + std::to_string(n));
  const auto last = static_cast<State>(n - 1);
  std::vector<State> cycle(n);
  for (std::size_t q = 0; q < n; ++q) cycle[q] = static_cast<State>(q);
  const Transformation a = make_cycle(n, cycle);
  const Transformation b = make_transposition(n, 0, 1);
  const Transformation c = make_point(n, last, 0);
  const Transformation d = make_identity(n);
  std::vector<State> table;
  for (const auto* t : {&a, &b, &c, &d}) table.insert(table.end(), t->images().begin(), t->images().end());
  return Dfa(n, master_alphabet(), std::move(table), 0, {last});
}

Dfa dialect(const Dfa& d, const PartialPermutation& pi) {
  std::vector<Letter> letters;
  for (Letter y : master_alphabet()) {
    auto x = pi.preimage(y);
    if (x && d.alphabet().contains(*x)) letters.push_back(y);
  }
  for (Letter x : d.alphabet()) {
    if (!master_alphabet().contains(x))
      throw PreconditionError(std::string("letter '") + x.symbol +
                              "' is outside the master alphabet; dialects rename master letters only");
  }
  std::vector<State> table;
  for (Letter y : letters) {
    const auto col = d.column(*d.alphabet().index_of(*pi.preimage(y)));
    table.insert(table.end(), col.begin(), col.end());
  }
  return Dfa(d.size(), Alphabet(std::move(letters)), std::move(table), d.initial(), d.finals());
}

Dfa witness(std::size_t n, std::string_view dialect_spec) {
  return dialect(universal_witness(n), PartialPermutation::parse(dialect_spec));
}

std::string_view to_string(OpKind op) {
  switch (op) {
    case OpKind::kUnion: return "union";
    case OpKind::kSymDiff: return "symdiff";
    case OpKind::kDifference: return "difference";
    case OpKind::kIntersection: return "intersection";
    case OpKind::kProduct: return "product";
  }
  return "?";
}

std::optional<OpKind> parse_op_kind(std::string_view name) {
  for (auto op : {OpKind::kUnion, OpKind::kSymDiff, OpKind::kDifference, OpKind::kIntersection,
                  OpKind::kProduct}) {
    if (to_string(op) == name) return op;
  }
  return std::nullopt;
}

namespace {

WitnessPair make_pair(std::size_t m, std::size_t n, std::string_view left, std::string_view right) {
  if (m < 3 || n < 3)
    throw PreconditionError("witness pairs need m, n >= 3, got (" + std::to_string(m) + "," +
                            std::to_string(n) + ")");
  auto lp = PartialPermutation::parse(left);
  auto rp = PartialPermutation::parse(right);
  return {dialect(universal_witness(m), lp), dialect(universal_witness(n), rp), lp, rp};
}

}  // namespace

WitnessPair witness_pair(OpKind op, std::size_t m, std::size_t n) {
  switch (op) {
    case OpKind::kUnion:
    case OpKind::kSymDiff:
    case OpKind::kProduct:
      return make_pair(m, n, "a,b,-,c", "b,a,-,d");
    case OpKind::kDifference:
      return make_pair(m, n, "a,b,-,c", "b,a");
    case OpKind::kIntersection:
      return make_pair(m, n, "a,b", "b,a");
  }
  throw PreconditionError("unknown operation kind");
}

WitnessPair same_alphabet_witness_pair(OpKind op, std::size_t m, std::size_t n) {
  switch (op) {
    case OpKind::kUnion:
    case OpKind::kSymDiff:
    case OpKind::kDifference:
    case OpKind::kIntersection:
      return make_pair(m, n, "a,b", "b,a");
    case OpKind::kProduct:
      return make_pair(m, n, "a,b,c", "a,b,c");
  }
  throw PreconditionError("unknown operation kind");
}

}  // namespace sclab
