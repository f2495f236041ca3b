#include <doctest.h>

#include "corpus.hpp"
#include "oracles.hpp"
#include "seqth/error.hpp"
#include "seqth/sigma.hpp"
#include "seqth/syntax.hpp"

using namespace seqth;

namespace {

Seq S(std::string_view text) { return parse_seq(text); }
Formula F(std::string_view text) { return parse_formula(text); }

}  // namespace

TEST_CASE("term evaluation") {
  CHECK(eval_term(parse_term("(cat e e)")) == S("()"));
  CHECK(eval_term(parse_term("(cat (app e e) (app e e))")) == S("(() ())"));
  CHECK(eval_term(parse_term("(app x x)"), {{"x", S("(())")}}) == S("(() (()))"));
  CHECK_THROWS_AS(eval_term(parse_term("(app x e)")), DomainError);
  CHECK_THROWS_AS(eval_term(parse_term("(pair bot bot)")), DomainError);
}

TEST_CASE("Σ evaluation examples") {
  CHECK(eval_sigma(F("(= (cat e e) e)"), 3).truth == Truth::yes);
  CHECK(eval_sigma(F("(= (app e e) e)"), 3).truth == Truth::no);
  CHECK(eval_sigma(F("(all-prefix x (app e e) (or (= x e) (= x (app e e))))"), 1).truth == Truth::yes);
  for (std::size_t budget : {0, 1, 3, 6}) {
    CHECK(eval_sigma(F("(exists x (= (app x x) x))"), budget).truth == Truth::unknown);
  }
  CHECK(eval_sigma(F("(not (prefix (app e e) e))"), 1).truth == Truth::yes);
  CHECK(eval_sigma(F("(prefix (app e (app e e)) (app e e))"), 4).truth == Truth::no);
}

TEST_CASE("witnesses are reported and genuine") {
  const Formula f = F("(exists x (= (app x e) (app (app e e) e)))");
  CHECK(eval_sigma(f, 1).truth == Truth::unknown);
  const Verdict v = eval_sigma(f, 2);
  REQUIRE(v.truth == Truth::yes);
  REQUIRE(v.witnesses.size() == 1);
  CHECK(v.witnesses[0] == Binding{"x", S("(())")});
}

TEST_CASE("planted sentences are found true with their witnesses") {
  for (const auto& p : corpus::planted_sentences(150, 5)) {
    const Verdict v = eval_sigma(p.sentence, p.budget);
    REQUIRE(v.truth == Truth::yes);
    for (const auto& b : v.witnesses) CHECK(b.value.size() <= p.budget);
    // Larger budgets never lose a verdict.
    CHECK(eval_sigma(p.sentence, p.budget + 1).truth == Truth::yes);
    CHECK(eval_bounded(p.sentence, p.budget));
  }
}

TEST_CASE("monotone in the budget") {
  const Formula f = F("(exists x (exists y (and (= (cat x y) (app (app e e) (app e e))) (not (= x y)))))");
  Truth previous = Truth::unknown;
  for (std::size_t budget = 0; budget <= 5; ++budget) {
    const Truth now = eval_sigma(f, budget).truth;
    if (previous == Truth::yes) CHECK(now == Truth::yes);
    previous = now;
  }
  CHECK(previous == Truth::yes);
}

TEST_CASE("only closed Σ-sentences are accepted") {
  CHECK_THROWS_AS(eval_sigma(F("(forall x (= x x))"), 2), DomainError);
  CHECK_THROWS_AS(eval_sigma(F("(= x e)"), 2), DomainError);
  CHECK_THROWS_AS(eval_sigma(F("(-> (= e e) (= e e))"), 2), DomainError);
}

TEST_CASE("bounded evaluation") {
  CHECK(eval_bounded(F("(forall x (prefix e x))"), 4));
  CHECK_FALSE(eval_bounded(F("(forall x (exists y (= (app x e) y)))"), 3));
  CHECK(eval_bounded(F("(forall x (not (= (app x e) e)))"), 4));
  CHECK(eval_bounded(F("(in e (app e e))"), 2));
}

TEST_CASE("τ-membership examples") {
  CHECK(tau_member(S("()"), S("(() (()))")));
  CHECK(tau_member(S("(())"), S("(() (()))")));
  CHECK_FALSE(tau_member(S("(() ())"), S("(() (()))")));
  CHECK_FALSE(tau_member(S("()"), S("()")));
}

TEST_CASE("τ-membership agrees with its definition") {
  const auto d = enumerate(5);
  for (const auto& y : d) {
    for (const auto& u : d) CHECK(tau_member(u, y) == oracle::tau_by_definition(u, y));
  }
}
