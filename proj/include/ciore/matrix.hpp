#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ciore/sequent.hpp"
#include "ciore/syntax.hpp"

namespace ciore {

/// Truth values of the matrix, declared in the order 0 < 1/2 < 1.
enum class TruthValue : std::uint8_t { Zero, Half, One };

inline constexpr TruthValue kTruthValues[3] = {TruthValue::Zero, TruthValue::Half, TruthValue::One};

/// D = {1, 1/2}.
inline bool designated(TruthValue v) { return v != TruthValue::Zero; }

/// "0", "1/2", "1".
const std::string& to_string(TruthValue v);
/// Accepts "0", "1/2", "1" (also "0.5", "½"). Throws ParseError.
TruthValue truth_value_from_string(const std::string& s);

TruthValue tv_and(TruthValue a, TruthValue b);
TruthValue tv_or(TruthValue a, TruthValue b);
TruthValue tv_imp(TruthValue a, TruthValue b);
TruthValue tv_neg(TruthValue a);
TruthValue tv_circ(TruthValue a);

using Valuation = std::map<std::string, TruthValue>;

/// Throws InvalidArgument on an unbound atom or on first-order input.
TruthValue eval(const Formula& f, const Valuation& v);

bool sequent_satisfied(const Valuation& v, const Sequent& s);

inline constexpr std::size_t kDefaultAtomCap = 12;

/// First falsifying valuation in the fixed order (atoms sorted by name, first
/// atom most significant, values 0 < 1/2 < 1). Throws ResourceError above cap.
std::optional<Valuation> find_countermodel(const Sequent& s, std::size_t atom_cap = kDefaultAtomCap);
bool matrix_valid(const Sequent& s, std::size_t atom_cap = kDefaultAtomCap);

struct SignedFormula {
  TruthValue sign;
  Formula formula;
};

/// Slots indexed by value: g0 holds 0-signed, half 1/2-signed, g1 1-signed formulas.
struct NSequent {
  FormulaSet g0;
  FormulaSet half;
  FormulaSet g1;
};

bool signed_satisfied(const Valuation& v, const SignedFormula& sf);
bool nsequent_satisfied(const Valuation& v, const NSequent& ns);

/// The antecedent goes to the slot of the undesignated value, the succedent to
/// both designated slots.
NSequent to_nsequent(const Sequent& s);

struct Witness {
  Formula formula;
  bool designated;
};

/// Conditions pinning v(f) = t using only designation: 0 -> {f not in D};
/// 1/2 -> {f in D, ~f in D}; 1 -> {f in D, ~f not in D}.
std::vector<Witness> expressiveness_witnesses(const Formula& f, TruthValue t);

}  // namespace ciore

namespace ciore {

/// The sixteen propositional Hilbert axiom schemata at alpha, beta, gamma, in
/// their printed order, named Ax1..Ax10, bc1, ci, cf, co1..co3.
std::vector<std::pair<std::string, Formula>> hilbert_axioms(const Formula& alpha, const Formula& beta,
                                                            const Formula& gamma);

}  // namespace ciore
