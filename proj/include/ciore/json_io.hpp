#pragma once

#include <json.hpp>

#include "ciore/fo_prover.hpp"
#include "ciore/fo_semantics.hpp"
#include "ciore/matrix.hpp"
#include "ciore/prop_prover.hpp"
#include "ciore/sequent.hpp"

namespace ciore {

using Json = nlohmann::json;

// Readers throw ParseError on malformed documents and InvalidArgument on
// well-formed documents describing something invalid.

Json sequent_to_json(const Sequent& s);
Sequent sequent_from_json(const Json& j);

/// {sequent, rule, principal, side, premises}, formulas in the text grammar.
Json proof_to_json(const Proof& p);
Proof proof_from_json(const Json& j);

/// {"p": "1/2", ...}
Json valuation_to_json(const Valuation& v);
Valuation valuation_from_json(const Json& j);

/// {domain, predicates: {R: {plus, minus, circ}}, functions: {f: [[args..., value]]},
/// constants: {c: element}, propositions: {p: value}}. Tuples list element names.
Json structure_to_json(const Structure& st);
Structure structure_from_json(const Json& j);

Json assignment_to_json(const Assignment& a, const Structure& st);

Json verdict_to_json(const Sequent& goal, const Verdict& v);
Json fo_verdict_to_json(const Sequent& goal, const FoVerdict& v);

}  // namespace ciore
