#include <doctest.h>

#include <random>

#include "ciore/error.hpp"
#include "ciore/parser.hpp"
#include "ciore/prop_prover.hpp"
#include "gen.hpp"

using namespace ciore;
using T = TruthValue;

namespace {

Formula f(const std::string& s) { return parse_formula(s); }
Sequent seq(const std::string& s) { return parse_sequent(s); }

void check_verdict(const Sequent& s, const Verdict& v) {
  INFO(to_string(s));
  CHECK(v.proved == testgen::o_valid(s));
  if (v.proved) {
    REQUIRE(v.proof);
    CHECK(v.proof->sequent == s);
    CHECK_FALSE(v.proof->uses_cut());
    CHECK(check_proof(*v.proof, Calculus::GCiorePrime, false).ok);
    CHECK(check_subformula_property(*v.proof).ok);
  } else {
    CHECK_FALSE(sequent_satisfied(v.valuation, s));
  }
}

// Walks a proof produced by decide and checks that the search measure drops
// from each node to each premise.
void check_measure(const Proof& p, FormulaSet marked) {
  if (p.rule == RuleId::Axiom || p.rule == RuleId::Weakenings) return;
  auto before = search_measure(p.sequent, marked);
  if (p.rule == RuleId::NegR2) marked.insert(*p.principal);
  for (const auto& q : p.premises) {
    CHECK(search_measure(q.sequent, marked) < before);
    check_measure(q, marked);
  }
}

}  // namespace

TEST_CASE("examples") {
  auto v1 = decide(seq("|- o o p"));
  CHECK(v1.proved);
  check_verdict(seq("|- o o p"), v1);

  auto v2 = decide(seq("|- p, ~p"));
  CHECK(v2.proved);
  CHECK(v2.proof->rule == RuleId::NegR2);

  CHECK_FALSE(decide(seq("|- p & ~p")).proved);

  auto v4 = decide(seq("p |- o p"));
  CHECK_FALSE(v4.proved);
  CHECK(v4.valuation == Valuation{{"p", T::Half}});

  auto empty = decide(Sequent{});
  CHECK_FALSE(empty.proved);
  CHECK(empty.valuation.empty());
}

TEST_CASE("axiom closure") {
  auto v = decide(seq("p |- p"));
  REQUIRE(v.proved);
  CHECK(v.proof->rule == RuleId::Axiom);
  auto w = decide(seq("p, q |- p, r"));
  REQUIRE(w.proved);
  CHECK(w.proof->rule == RuleId::Weakenings);
  CHECK(w.proof->premises[0].rule == RuleId::Axiom);
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(decide(seq("|- P(a1)")), InvalidArgument);
  CHECK_THROWS_AS(decide(seq("|- p, q, r"), 2), ResourceError);
}

TEST_CASE("nine theorems") {
  auto suite = theorem_suite();
  REQUIRE(suite.size() == 9);
  CHECK(suite[2].second == seq("|- (o p -> o ~p) & (o ~p -> o p)"));
  CHECK(suite[6].second == Sequent{{}, {Formula::iff(f("o p | o q"), f("o (p & q)"))}});
  for (const auto& [name, s] : suite) {
    auto v = decide(s);
    CHECK(v.proved);
    check_verdict(s, v);
  }
  // instantiated at compound formulas
  for (const auto& [name, s] : theorem_suite(f("p -> ~q"), f("o r"))) check_verdict(s, decide(s));
}

TEST_CASE("agreement with brute force on random sequents") {
  std::mt19937 rng(41);
  for (int i = 0; i < 600; ++i) {
    Sequent s = testgen::random_sequent(rng, 2, 3, 3);
    auto v = decide(s);
    check_verdict(s, v);
    if (v.proved) check_measure(*v.proof, {});
  }
}

TEST_CASE("contradiction scan") {
  for (const char* s : {"p", "o p & p", "~(p | ~p)", "~~p -> q"}) CHECK_FALSE(contradiction_scan(f(s)).proved);
}

TEST_CASE("cut elimination") {
  Sequent goal = seq("|- p -> p");
  Proof inner = decide(goal).proof.value();
  Proof left{seq("|- p -> p, q"), RuleId::WeakR, f("q"), std::nullopt, {inner}};
  Proof right{seq("q |- p -> p"), RuleId::WeakL, f("q"), std::nullopt, {inner}};
  Proof cut{goal, RuleId::Cut, f("q"), std::nullopt, {left, right}};
  REQUIRE(check_proof(cut, Calculus::GCiore, true).ok);
  Proof clean = eliminate_cut(cut);
  CHECK(clean.sequent == goal);
  CHECK_FALSE(clean.uses_cut());
  CHECK(check_proof(clean, Calculus::GCiorePrime, false).ok);
  CHECK_FALSE(eliminate_cut(clean).uses_cut());
}

TEST_CASE("determinism") {
  std::mt19937 rng(43);
  for (int i = 0; i < 50; ++i) {
    Sequent s = testgen::random_sequent(rng, 2, 3, 3);
    auto a = decide(s), b = decide(s);
    CHECK(a.proved == b.proved);
    CHECK(a.valuation == b.valuation);
    if (a.proved) CHECK(a.proof->node_count() == b.proof->node_count());
  }
}
