#include <random>

#include "doctest.h"
#include "sclab/error.hpp"
#include "sclab/transforms.hpp"
#include "sclab/witnesses.hpp"

using namespace sclab;

namespace {

Transformation random_transformation(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<State> pick(0, static_cast<State>(n - 1));
  std::vector<State> v(n);
  for (auto& q : v) q = pick(rng);
  return Transformation(v);
}

std::vector<Transformation> letters_of(const Dfa& d) {
  std::vector<Transformation> out;
  for (std::size_t x = 0; x < d.alphabet().size(); ++x) out.push_back(letter_transformation(d, x));
  return out;
}

}  // namespace

TEST_CASE("constructors") {
  CHECK(make_cycle(3, {0, 1, 2}).images() == std::vector<State>{1, 2, 0});
  CHECK(make_identity(4).images() == std::vector<State>{0, 1, 2, 3});
  CHECK(make_point(3, 2, 0).images() == std::vector<State>{0, 1, 0});
  CHECK(make_transposition(4, 0, 1).images() == std::vector<State>{1, 0, 2, 3});
  CHECK(make_cycle(5, {1, 3}).images() == std::vector<State>{0, 3, 2, 1, 4});

  CHECK_THROWS_AS(make_cycle(3, {0, 0}), PreconditionError);
  CHECK_THROWS_AS(make_cycle(3, {0, 3}), PreconditionError);
  CHECK_THROWS_AS(make_point(3, 1, 1), PreconditionError);
  CHECK_THROWS_AS(Transformation({0, 5}), PreconditionError);
}

TEST_CASE("compose uses the left action q(s*t) = (qs)t") {
  const auto swap = make_transposition(3, 0, 1);
  CHECK(compose(swap, swap).is_identity());
  const auto a = make_cycle(3, {0, 1, 2});
  CHECK(compose(a, a).images() == std::vector<State>{2, 0, 1});
  CHECK(compose(a, make_identity(3)) == a);

  // Order matters: (2->0) then (0,1) differs from (0,1) then (2->0).
  const auto c = make_point(3, 2, 0);
  CHECK(compose(c, swap).images() == std::vector<State>{1, 0, 1});
  CHECK(compose(swap, c).images() == std::vector<State>{1, 0, 0});

  CHECK_THROWS_AS(compose(make_identity(2), make_identity(3)), PreconditionError);
}

TEST_CASE("composition is associative") {
  std::mt19937 rng(17);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + i % 6;
    const auto s = random_transformation(rng, n);
    const auto t = random_transformation(rng, n);
    const auto u = random_transformation(rng, n);
    CHECK(compose(compose(s, t), u) == compose(s, compose(t, u)));
  }
}

TEST_CASE("apply_to_set") {
  const auto a = make_cycle(3, {0, 1, 2});
  CHECK(apply_to_set(a, StateSet(3, {0, 2})) == StateSet(3, {0, 1}));
  CHECK(apply_to_set(make_identity(3), StateSet(3, {1, 2})) == StateSet(3, {1, 2}));
  const auto shrunk = apply_to_set(make_point(3, 2, 0), StateSet(3, {0, 2}));
  CHECK(shrunk == StateSet(3, {0}));
  CHECK(shrunk.size() == 1);

  SUBCASE("distributes over union") {
    std::mt19937 rng(4);
    for (int i = 0; i < 200; ++i) {
      const std::size_t n = 1 + i % 6;
      const auto t = random_transformation(rng, n);
      StateSet p(n), r(n);
      for (State q = 0; q < n; ++q) {
        if (rng() % 2) p.insert(q);
        if (rng() % 2) r.insert(q);
      }
      CHECK(apply_to_set(t, p | r) == (apply_to_set(t, p) | apply_to_set(t, r)));
    }
  }
  SUBCASE("permutations preserve cardinality") {
    std::mt19937 rng(9);
    for (int i = 0; i < 200; ++i) {
      const std::size_t n = 1 + i % 5;
      const auto t = random_transformation(rng, n);
      StateSet all(n);
      for (State q = 0; q < n; ++q) all.insert(q);
      CHECK(t.is_permutation() == (apply_to_set(t, all).size() == n));
    }
  }
}

TEST_CASE("text form") {
  CHECK(make_identity(3).to_string() == "1");
  CHECK(make_cycle(4, {0, 1, 2, 3}).to_string() == "(0,1,2,3)");
  CHECK(make_transposition(4, 0, 1).to_string() == "(0,1)");
  CHECK(make_point(3, 2, 0).to_string() == "(2->0)");
  CHECK(Transformation({0, 0, 0}).to_string() == "[0,0,0]");
  CHECK(Transformation({1, 0, 3, 2}).to_string() == "(0,1)(2,3)");
}

TEST_CASE("generate_semigroup") {
  SUBCASE("U_n(a,b,c) generates the full transformation monoid") {
    CHECK(generate_semigroup(letters_of(witness(3, "a,b,c"))).size() == 27);
    CHECK(generate_semigroup(letters_of(witness(4, "a,b,c"))).size() == 256);
    for (std::size_t n = 5; n <= 6; ++n) {
      std::size_t full = 1;
      for (std::size_t i = 0; i < n; ++i) full *= n;
      CHECK(generate_semigroup(letters_of(witness(n, "a,b,c"))).size() == full);
    }
  }
  SUBCASE("identity alone") {
    const auto sg = generate_semigroup({make_identity(3)});
    CHECK(sg.size() == 1);
    CHECK(sg.contains(make_identity(3)));
  }
  SUBCASE("identity is not added unless generated") {
    const auto sg = generate_semigroup({make_point(3, 2, 0)});
    CHECK(sg.size() == 1);
    CHECK_FALSE(sg.contains(make_identity(3)));
  }
  SUBCASE("bounded by n^n on random generators") {
    std::mt19937 rng(21);
    for (int i = 0; i < 40; ++i) {
      const std::size_t n = 1 + i % 4;
      std::vector<Transformation> gens;
      for (int g = 0; g < 3; ++g) gens.push_back(random_transformation(rng, n));
      std::size_t full = 1;
      for (std::size_t j = 0; j < n; ++j) full *= n;
      const auto sg = generate_semigroup(gens);
      CHECK(sg.size() <= full);
      // closed under right multiplication by generators
      for (const auto& e : sg.elements) {
        for (const auto& g : gens) CHECK(sg.contains(compose(e, g)));
      }
    }
  }
  SUBCASE("budget") {
    const auto gens = letters_of(witness(4, "a,b,c"));
    CHECK_THROWS_AS(generate_semigroup(gens, 100), ResourceError);
    try {
      generate_semigroup(gens, 100);
    } catch (const ResourceError& e) {
      CHECK(e.budget() == 100);
      CHECK(e.reached() == 101);
    }
  }
  CHECK(default_semigroup_budget(3) == 28);
}
