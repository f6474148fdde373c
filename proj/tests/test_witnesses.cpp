#include "doctest.h"
#include "oracles.hpp"
#include "sclab/error.hpp"
#include "sclab/transforms.hpp"
#include "sclab/witnesses.hpp"

using namespace sclab;
using namespace sclab::testing;

TEST_CASE("universal_witness") {
  const Dfa u3 = universal_witness(3);
  CHECK(u3.alphabet() == Alphabet{'a', 'b', 'c', 'd'});
  CHECK(u3.column(0) == std::vector<State>{1, 2, 0});
  CHECK(u3.column(1) == std::vector<State>{1, 0, 2});
  CHECK(u3.column(2) == std::vector<State>{0, 1, 0});
  CHECK(u3.column(3) == std::vector<State>{0, 1, 2});
  CHECK(u3.initial() == 0);
  CHECK(u3.finals() == std::vector<State>{2});

  CHECK(accepts(universal_witness(4), word_from_string("aaa")));
  for (std::size_t n = 3; n <= 8; ++n) {
    CHECK(quotient_complexity(universal_witness(n)) == n);
    CHECK(minimize(universal_witness(n)).size() == n);
    CHECK(effective_alphabet(universal_witness(n)) == master_alphabet());
  }
  CHECK_THROWS_AS(universal_witness(2), PreconditionError);
}

TEST_CASE("PartialPermutation parsing") {
  const auto pi = PartialPermutation::parse("b,a,-,d");
  CHECK(pi[0] == Letter{'b'});
  CHECK(pi[1] == Letter{'a'});
  CHECK_FALSE(pi[2].has_value());
  CHECK(pi[3] == Letter{'d'});
  CHECK(pi.to_string() == "b,a,-,d");

  CHECK(PartialPermutation::parse("b,a") == PartialPermutation::parse("b,a,-,-"));
  CHECK(PartialPermutation::parse("b,a,-,-").to_string() == "b,a");
  CHECK(PartialPermutation::parse("a,b,c,d") == PartialPermutation::identity());

  CHECK_THROWS_AS(PartialPermutation::parse("a,a"), ParseError);
  CHECK_THROWS_AS(PartialPermutation::parse("a,b,c,d,a"), ParseError);
  CHECK_THROWS_AS(PartialPermutation::parse("a,e"), ParseError);
  CHECK_THROWS_AS(PartialPermutation::parse("ab"), ParseError);
  CHECK_THROWS_AS(PartialPermutation::parse(""), ParseError);
}

TEST_CASE("dialect") {
  SUBCASE("identity") { CHECK(dialect(universal_witness(5), PartialPermutation::identity()) == universal_witness(5)); }

  SUBCASE("L'_m(a,b,-,c)") {
    const Dfa d = witness(4, "a,b,-,c");
    CHECK(d.alphabet() == Alphabet{'a', 'b', 'c'});
    CHECK(letter_transformation(d, 0) == make_cycle(4, {0, 1, 2, 3}));
    CHECK(letter_transformation(d, 1) == make_transposition(4, 0, 1));
    CHECK(letter_transformation(d, 2).is_identity());
  }
  SUBCASE("L_n(b,a,-,d)") {
    const Dfa d = witness(4, "b,a,-,d");
    CHECK(d.alphabet() == Alphabet{'a', 'b', 'd'});
    CHECK(letter_transformation(d, 0) == make_transposition(4, 0, 1));
    CHECK(letter_transformation(d, 1) == make_cycle(4, {0, 1, 2, 3}));
    CHECK(letter_transformation(d, 2).is_identity());
    CHECK(d.size() == 4);
  }
  SUBCASE("substitution semantics on words") {
    for (const char* spec : {"b,a,-,d", "a,b,-,c", "c,-,a,b", "d,c,b,a"}) {
      const auto pi = PartialPermutation::parse(spec);
      for (std::size_t n = 3; n <= 4; ++n) {
        const Dfa u = universal_witness(n);
        const Dfa d = dialect(u, pi);
        for (const Word& w : all_words(master_alphabet(), 6)) {
          bool defined = true;
          Word pre;
          for (Letter y : w) {
            auto x = pi.preimage(y);
            if (!x) {
              defined = false;
              break;
            }
            pre.push_back(*x);
          }
          const bool expected = defined && accepts(u, pre);
          REQUIRE(in_language(d, w) == expected);
        }
      }
    }
  }
  SUBCASE("total renamings keep the complexity") {
    for (const char* spec : {"b,a,c,d", "d,c,b,a", "c,a,d,b"}) {
      for (std::size_t n = 3; n <= 6; ++n) CHECK(quotient_complexity(witness(n, spec)) == n);
    }
  }
  SUBCASE("letters outside the master alphabet") {
    const Dfa d(1, Alphabet{'x'}, {0}, 0, {0});
    CHECK_THROWS_AS(dialect(d, PartialPermutation::identity()), PreconditionError);
  }
}

TEST_CASE("witness_pair") {
  SUBCASE("union") {
    const auto w = witness_pair(OpKind::kUnion, 3, 3);
    CHECK(w.left.size() == 3);
    CHECK(w.right.size() == 3);
    CHECK(w.left.alphabet() == Alphabet{'a', 'b', 'c'});
    CHECK(w.right.alphabet() == Alphabet{'a', 'b', 'd'});
    // Each side has a letter the other lacks.
    CHECK(w.left.alphabet().union_with(w.right.alphabet()).size() == 4);
    CHECK(!w.left.alphabet().contains(Letter{'d'}));
    CHECK(!w.right.alphabet().contains(Letter{'c'}));
  }
  SUBCASE("intersection") {
    const auto w = witness_pair(OpKind::kIntersection, 3, 3);
    CHECK(w.left.alphabet() == Alphabet{'a', 'b'});
    CHECK(w.right.alphabet() == Alphabet{'a', 'b'});
  }
  SUBCASE("difference") {
    const auto w = witness_pair(OpKind::kDifference, 3, 4);
    CHECK(w.right.alphabet() == Alphabet{'a', 'b'});
    CHECK(w.right.size() == 4);
    CHECK(w.left_dialect.to_string() == "a,b,-,c");
  }
  CHECK_THROWS_AS(witness_pair(OpKind::kUnion, 2, 3), PreconditionError);
  CHECK(parse_op_kind("symdiff") == OpKind::kSymDiff);
  CHECK_FALSE(parse_op_kind("shuffle").has_value());
}
