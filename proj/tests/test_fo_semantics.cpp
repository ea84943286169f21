#include <doctest.h>

#include <random>

#include "ciore/error.hpp"
#include "ciore/fo_semantics.hpp"
#include "ciore/json_io.hpp"
#include "ciore/parser.hpp"
#include "gen.hpp"

using namespace ciore;
using T = TruthValue;

namespace {

Formula f(const std::string& s) { return parse_formula(s); }
Sequent seq(const std::string& s) { return parse_sequent(s); }

Structure two_element(T p0, T p1) {
  Structure st;
  st.domain = {"0", "1"};
  st.add_predicate("P", 1);
  st.set_predicate_value("P", {0}, p0);
  st.set_predicate_value("P", {1}, p1);
  return st;
}

std::vector<Triple> all_triples(std::size_t n) {
  std::vector<Triple> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<T> vs;
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= 3) vs.push_back(static_cast<T>(c % 3));
    out.emplace_back(vs);
  }
  return out;
}

}  // namespace

TEST_CASE("triple components") {
  Triple r = Triple::from_components(2, {0}, {}, {1});
  Triple n = triple_neg(r);
  CHECK(n.plus().empty());
  CHECK(n.minus() == std::set<std::size_t>{0});
  CHECK(n.circ() == std::set<std::size_t>{1});
  Triple c = triple_circ(r);
  CHECK(c.plus() == std::set<std::size_t>{0});
  CHECK(c.minus() == std::set<std::size_t>{1});
  CHECK(c.circ().empty());
  CHECK_THROWS_AS(Triple::from_components(2, {0}, {0}, {1}), InvalidArgument);
  CHECK_THROWS_AS(Triple::from_components(2, {0}, {}, {}), InvalidArgument);
  CHECK_THROWS_AS(triple_and(Triple::constant(1, T::One), Triple::constant(2, T::One)), InvalidArgument);
}

TEST_CASE("triple operations are pointwise") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto ts = all_triples(n);
    for (const auto& r : ts) {
      Triple neg = triple_neg(r), circ = triple_circ(r);
      CHECK(circ.circ().empty());
      for (std::size_t x = 0; x < n; ++x) {
        CHECK(neg[x] == testgen::o_neg(r[x]));
        CHECK(circ[x] == testgen::o_circ(r[x]));
      }
      for (const auto& u : ts) {
        Triple a = triple_and(r, u), o = triple_or(r, u), i = triple_imp(r, u);
        for (std::size_t x = 0; x < n; ++x) {
          CHECK(a[x] == testgen::o_and(r[x], u[x]));
          CHECK(o[x] == testgen::o_or(r[x], u[x]));
          CHECK(i[x] == testgen::o_imp(r[x], u[x]));
        }
      }
    }
  }
}

TEST_CASE("quantifier value functions") {
  CHECK(tilde_forall({T::One, T::Half}) == T::One);
  CHECK(tilde_forall({T::Half}) == T::Half);
  CHECK(tilde_forall({T::Zero, T::One}) == T::Zero);
  CHECK(tilde_exists({T::Half}) == T::Half);
  CHECK(tilde_exists({T::Zero, T::Half}) == T::One);
  CHECK(tilde_exists({T::Zero}) == T::Zero);
  CHECK_THROWS_AS(tilde_forall({}), InvalidArgument);
  CHECK_THROWS_AS(tilde_exists({}), InvalidArgument);
}

TEST_CASE("terms") {
  Structure st;
  st.domain = {"u", "v"};
  st.constants["c"] = 1;
  st.functions["f"] = FunctionTable{1, {1, 0}};
  CHECK(eval_term(parse_term("a1"), st, {{"a1", 0}}) == 0);
  CHECK(eval_term(parse_term("c"), st, {}) == 1);
  CHECK(eval_term(parse_term("f(a1)"), st, {{"a1", 0}}) == 1);
  CHECK(eval_term(parse_term("f(f(c))"), st, {}) == 1);
  CHECK_THROWS_AS(eval_term(parse_term("a2"), st, {{"a1", 0}}), InvalidArgument);
}

TEST_CASE("denotation examples") {
  Structure st = two_element(T::One, T::Half);
  CHECK(denote(f("forall x. P(x)"), st).triple == Triple::constant(1, T::One));
  CHECK(denote(f("exists x. o P(x)"), st).triple == Triple::constant(1, T::One));
  Denotation d = denote(f("P(a1)"), st);
  CHECK(d.vars == std::vector<std::string>{"a1"});
  CHECK(d.triple[d.index({{"a1", 1}}, 2)] == T::Half);
}

TEST_CASE("satisfaction and validity") {
  Structure st = two_element(T::One, T::Zero);
  CHECK_FALSE(fo_sequent_valid_in(st, seq("exists x. P(x) |- forall x. P(x)")));
  for (const auto& s : testgen::unary_structures(2, {"P"})) {
    CHECK(fo_sequent_valid_in(s, seq("forall x. P(x) |- P(a1)")));
    CHECK(valid_in(s, f("o (forall x. P(x)) <-> (exists x. o P(x))")));
  }
  CHECK(satisfies(st, {{"a1", 0}}, f("P(a1)")));
  CHECK_FALSE(satisfies(st, {{"a1", 1}}, f("P(a1)")));
  auto bad = falsifying_assignment(st, seq("|- P(a1)"));
  REQUIRE(bad);
  CHECK(bad->at("a1") == 1);
  CHECK_FALSE(falsifying_assignment(st, seq("P(a1) |- P(a1)")));
}

TEST_CASE("propositional atoms inside structures") {
  Structure st = two_element(T::One, T::Zero);
  st.propositions["p"] = T::Half;
  CHECK(evaluate(f("p & ~p"), st, {}) == T::Half);
  CHECK(evaluate(f("o p"), st, {}) == T::Zero);
}

TEST_CASE("quantifier axioms are valid in small structures") {
  auto axioms = quantifier_axioms(f("P(a1)"), "a1", Term::free_var("a2"));
  REQUIRE(axioms.size() == 4);
  for (std::size_t n = 1; n <= 2; ++n)
    for (const auto& st : testgen::unary_structures(n, {"P"}))
      for (const auto& [name, ax] : axioms) {
        INFO(name);
        CHECK(valid_in(st, ax));
      }
}

TEST_CASE("recursive, pointwise and component semantics agree") {
  std::mt19937 rng(53);
  auto structures = testgen::unary_structures(2, {"P", "Q"});
  for (int i = 0; i < 150; ++i) {
    Formula g = testgen::random_fo_formula(rng, 3, {"a1"});
    const auto& st = structures[rng() % structures.size()];
    auto fv = free_variables(g);
    std::vector<std::string> vars(fv.begin(), fv.end());
    auto comp = testgen::components(g, st, vars);
    Denotation d = denote_over(g, st, vars);
    for (const auto& s : testgen::assignments_over(vars, st.size())) {
      INFO(to_string(g));
      T expected = testgen::component_value(comp, s);
      CHECK(d.triple[d.index(s, st.size())] == expected);
      CHECK(evaluate(g, st, s) == expected);
    }
  }
}

TEST_CASE("relevance: extra variables do not change values") {
  Structure st = two_element(T::Half, T::Zero);
  Formula g = f("exists x. P(x) -> P(a1)");
  for (std::size_t m = 0; m < 2; ++m)
    for (std::size_t k = 0; k < 2; ++k) CHECK(evaluate(g, st, {{"a1", m}}) == evaluate(g, st, {{"a1", m}, {"a7", k}}));
}

TEST_CASE("structure validation and JSON") {
  Structure st = two_element(T::One, T::Half);
  st.propositions["p"] = T::Zero;
  Json j = structure_to_json(st);
  CHECK(j["predicates"]["P"]["plus"] == Json::parse(R"([["0"]])"));
  CHECK(j["predicates"]["P"]["circ"] == Json::parse(R"([["1"]])"));
  Structure back = structure_from_json(j);
  CHECK(back.domain == st.domain);
  CHECK(back.predicates.at("P").values == st.predicates.at("P").values);
  CHECK(back.propositions == st.propositions);

  Json overlap = Json::parse(R"({"domain":["0","1"],"predicates":{"P":{"plus":[["0"]],"minus":[["0"]],"circ":[["1"]]}}})");
  CHECK_THROWS_AS(structure_from_json(overlap), InvalidArgument);
  Json gap = Json::parse(R"({"domain":["0","1"],"predicates":{"P":{"plus":[["0"]],"minus":[],"circ":[]}}})");
  CHECK_THROWS_AS(structure_from_json(gap), InvalidArgument);
  Json empty = Json::parse(R"({"domain":[]})");
  CHECK_THROWS_AS(structure_from_json(empty), InvalidArgument);
  CHECK_THROWS_AS(structure_from_json(Json::parse("[1]")), ParseError);

  Json funcs = Json::parse(R"({"domain":["u","v"],"functions":{"f":[["u","v"],["v","u"]]},"constants":{"c":"v"}})");
  Structure fs = structure_from_json(funcs);
  CHECK(eval_term(parse_term("f(c)"), fs, {}) == 0);
  CHECK(structure_from_json(structure_to_json(fs)).functions.at("f").values == fs.functions.at("f").values);
}
