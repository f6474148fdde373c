#include "sclab/atoms.hpp"

#include <unordered_map>

#include "sclab/error.hpp"

namespace sclab {

namespace {

bool is_minimal(const Dfa& d) { return minimize(d).size() == d.size(); }

std::vector<Transformation> letter_transformations(const Dfa& d) {
  std::vector<Transformation> gens;
  for (std::size_t x = 0; x < d.alphabet().size(); ++x) gens.push_back(letter_transformation(d, x));
  return gens;
}

}  // namespace

std::size_t syntactic_semigroup_size(const Dfa& d, std::size_t budget) {
  const Dfa m = minimize(d);
  return generate_semigroup(letter_transformations(m), budget).size();
}

std::size_t syntactic_semigroup_size(const Dfa& d) {
  return syntactic_semigroup_size(d, default_semigroup_budget(minimize(d).size()));
}

std::vector<std::size_t> quotient_complexities(const Dfa& d) {
  std::vector<std::size_t> out;
  out.reserve(d.size());
  for (State q = 0; q < d.size(); ++q) out.push_back(quotient_complexity(d.with_initial(q)));
  return out;
}

std::size_t AtomReport::atom_count() const {
  std::size_t k = 0;
  for (const auto& a : atoms) k += a.nonempty ? 1 : 0;
  return k;
}

AtomReport atoms(const Dfa& d, std::size_t budget) {
  AtomReport report;
  const bool minimal = is_minimal(d);
  const Dfa m = minimal ? d : minimize(d);
  report.minimized_input = !minimal;
  const std::size_t n = m.size();
  report.n = n;
  if (n >= 8 * sizeof(std::size_t))
    throw ResourceError("too many quotients to enumerate atoms", 8 * sizeof(std::size_t) - 1, n);

  // Tuple automaton: the identity tuple, extended letter by letter.
  const auto gens = letter_transformations(m);
  const std::size_t k = gens.size();
  std::unordered_map<std::string, State> index;
  std::vector<TupleState> tuples;
  auto intern = [&](TupleState t) {
    auto [it, fresh] = index.emplace(t.key(), static_cast<State>(tuples.size()));
    if (fresh) {
      if (tuples.size() >= budget)
        throw ResourceError("tuple automaton exceeded its state budget", budget, tuples.size() + 1);
      tuples.push_back(std::move(t));
    }
    return it->second;
  };
  intern(make_identity(n));
  std::vector<State> rows;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    for (const auto& g : gens) rows.push_back(intern(compose(tuples[i], g)));
  }
  const std::size_t size = tuples.size();
  report.tuple_states = size;
  std::vector<State> table(size * k);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t x = 0; x < k; ++x) table[x * size + i] = rows[i * k + x];
  }

  // profile[i] = bitmask of quotients containing the words that reach tuple i
  std::vector<std::size_t> profile(size, 0);
  for (std::size_t i = 0; i < size; ++i) {
    for (State q = 0; q < n; ++q) {
      if (m.is_final(tuples[i](q))) profile[i] |= std::size_t{1} << q;
    }
  }

  const std::size_t subsets = std::size_t{1} << n;
  std::vector<std::vector<State>> finals_by_profile(subsets);
  for (std::size_t i = 0; i < size; ++i) finals_by_profile[profile[i]].push_back(static_cast<State>(i));

  const Dfa skeleton(size, m.alphabet(), std::move(table), 0, {});
  report.atoms.reserve(subsets);
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    AtomProfile atom;
    atom.set = StateSet(n);
    for (State q = 0; q < n; ++q) {
      if (mask & (std::size_t{1} << q)) atom.set.insert(q);
    }
    atom.nonempty = !finals_by_profile[mask].empty();
    if (atom.nonempty)
      atom.measured_kappa = quotient_complexity(skeleton.with_finals(finals_by_profile[mask]));
    report.atoms.push_back(std::move(atom));
  }
  return report;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  // r * (n - k + i) / i stays integral at every step
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t atom_formula(std::size_t n, std::size_t s) {
  if (s > n) throw PreconditionError("atom size " + std::to_string(s) + " exceeds n = " + std::to_string(n));
  if (s == 0 || s == n) return (std::uint64_t{1} << n) - 1;
  std::uint64_t total = 1;
  for (std::size_t x = 1; x <= s; ++x) {
    for (std::size_t y = 1; y <= n - s; ++y) total += binomial(n, x) * binomial(n - x, y);
  }
  return total;
}

}  // namespace sclab
