#pragma once

#include <string>

#include "ciore/sequent.hpp"
#include "ciore/syntax.hpp"

namespace ciore {

// ASCII grammar:
//   ~A        negation          o A       consistency
//   A & B     conjunction       A | B     disjunction (both left-associative)
//   A -> B    implication (right-associative), A <-> B abbreviates (A->B)&(B->A)
//   forall x. A / exists x. A   scope runs to the end of the enclosing parenthesis
//   p, q1     propositional atoms (lowercase identifiers other than `o`)
//   P(t, ...) predicate atoms (capitalized identifiers)
// Inside a term list a name bound by an enclosing quantifier is a bound variable,
// a1, a2, ... are free variables, f(t, ...) is an application, and any other
// identifier is a constant. Sequents: `A, B |- C, D`, either side may be empty.

Formula parse_formula(const std::string& text);
Sequent parse_sequent(const std::string& text);
Term parse_term(const std::string& text);

std::string to_string(const Term& t);
std::string to_string(const Formula& f);
std::string to_string(const Sequent& s);

}  // namespace ciore
