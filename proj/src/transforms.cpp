#include "sclab/transforms.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "sclab/error.hpp"

namespace sclab {

Transformation::Transformation(std::vector<State> images) : images_(std::move(images)) {
  for (State q : images_) {
    if (q >= images_.size())
      throw PreconditionError("transformation image " + std::to_string(q) + " outside Q_" +
                              std::to_string(images_.size()));
  }
}

bool Transformation::is_permutation() const {
  std::vector<char> hit(images_.size(), 0);
  for (State q : images_) {
    if (hit[q]) return false;
    hit[q] = 1;
  }
  return true;
}

bool Transformation::is_identity() const {
  for (std::size_t q = 0; q < images_.size(); ++q) {
    if (images_[q] != q) return false;
  }
  return true;
}

std::string Transformation::to_string() const {
  const std::size_t n = images_.size();
  if (is_identity()) return "1";
  if (is_permutation()) {
    std::string out;
    std::vector<char> seen(n, 0);
    for (State start = 0; start < n; ++start) {
      if (seen[start] || images_[start] == start) continue;
      out += '(';
      State q = start;
      bool first = true;
      do {
        seen[q] = 1;
        if (!first) out += ',';
        first = false;
        out += std::to_string(q);
        q = images_[q];
      } while (q != start);
      out += ')';
    }
    return out;
  }
  std::size_t moved = 0;
  State p = 0;
  for (State q = 0; q < n; ++q) {
    if (images_[q] != q) {
      ++moved;
      p = q;
    }
  }
  if (moved == 1) return "(" + std::to_string(p) + "->" + std::to_string(images_[p]) + ")";
  std::string out = "[";
  for (std::size_t q = 0; q < n; ++q) {
    if (q) out += ',';
    out += std::to_string(images_[q]);
  }
  return out + "]";
}

std::string Transformation::key() const {
  std::string k;
  k.reserve(images_.size() * (images_.size() > 255 ? 4 : 1));
  for (State q : images_) {
    if (images_.size() > 255) {
      for (int shift = 0; shift < 32; shift += 8) k.push_back(static_cast<char>((q >> shift) & 0xff));
    } else {
      k.push_back(static_cast<char>(q));
    }
  }
  return k;
}

Transformation make_identity(std::size_t n) {
  std::vector<State> v(n);
  for (std::size_t q = 0; q < n; ++q) v[q] = static_cast<State>(q);
  return Transformation(std::move(v));
}

namespace {

void check_distinct_in_range(std::size_t n, const std::vector<State>& states) {
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i] >= n)
      throw PreconditionError("state " + std::to_string(states[i]) + " outside Q_" + std::to_string(n));
    for (std::size_t j = 0; j < i; ++j) {
      if (states[i] == states[j])
        throw PreconditionError("state " + std::to_string(states[i]) + " listed twice");
    }
  }
}

}  // namespace

Transformation make_cycle(std::size_t n, const std::vector<State>& states) {
  check_distinct_in_range(n, states);
  auto images = make_identity(n).images();
  for (std::size_t i = 0; i < states.size(); ++i) images[states[i]] = states[(i + 1) % states.size()];
  return Transformation(std::move(images));
}

Transformation make_transposition(std::size_t n, State p, State q) {
  return make_cycle(n, {p, q});
}

Transformation make_point(std::size_t n, State p, State q) {
  check_distinct_in_range(n, {p, q});
  auto images = make_identity(n).images();
  images[p] = q;
  return Transformation(std::move(images));
}

Transformation compose(const Transformation& s, const Transformation& t) {
  if (s.degree() != t.degree())
    throw PreconditionError("cannot compose transformations of Q_" + std::to_string(s.degree()) +
                            " and Q_" + std::to_string(t.degree()));
  std::vector<State> images(s.degree());
  // q(s * t) = (qs)t
  for (std::size_t q = 0; q < s.degree(); ++q) images[q] = t(s(static_cast<State>(q)));
  return Transformation(std::move(images));
}

StateSet apply_to_set(const Transformation& t, const StateSet& p) {
  if (p.capacity() != t.degree())
    throw PreconditionError("state set capacity does not match transformation degree");
  StateSet out(t.degree());
  for (State q : p.members()) out.insert(t(q));
  return out;
}

Transformation letter_transformation(const Dfa& d, std::size_t x) {
  return Transformation(d.column(x));
}

bool Semigroup::contains(const Transformation& t) const {
  return std::find(elements.begin(), elements.end(), t) != elements.end();
}

std::size_t default_semigroup_budget(std::size_t n) {
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  std::size_t power = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (n != 0 && power > kMax / n) return kMax;
    power *= n;
  }
  return power == kMax ? kMax : power + 1;
}

Semigroup generate_semigroup(const std::vector<Transformation>& generators, std::size_t budget) {
  Semigroup sg;
  sg.generators = generators;
  if (generators.empty()) return sg;
  const std::size_t n = generators.front().degree();
  for (const auto& g : generators) {
    if (g.degree() != n) throw PreconditionError("generators act on different state sets");
  }

  std::unordered_set<std::string> seen;
  auto add = [&](Transformation t) {
    if (!seen.insert(t.key()).second) return;
    if (sg.elements.size() >= budget)
      throw ResourceError("semigroup closure exceeded its element budget", budget,
                          sg.elements.size() + 1);
    sg.elements.push_back(std::move(t));
  };
  for (const auto& g : generators) add(g);
  // Extending a word by one more letter on the right: w -> w * g.
  for (std::size_t i = 0; i < sg.elements.size(); ++i) {
    for (const auto& g : generators) add(compose(sg.elements[i], g));
  }
  return sg;
}

Semigroup generate_semigroup(const std::vector<Transformation>& generators) {
  const std::size_t n = generators.empty() ? 0 : generators.front().degree();
  return generate_semigroup(generators, default_semigroup_budget(n));
}

}  // namespace sclab
