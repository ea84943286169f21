#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ciore/matrix.hpp"
#include "ciore/sequent.hpp"

namespace ciore {

struct Verdict {
  bool proved = false;
  std::optional<Proof> proof;   // set when proved
  Valuation valuation;          // falsifying valuation when refuted
};

/// Decision procedure for propositional sequents in GCiore'. Proofs are
/// cut-free; refutations are checked against the goal before returning.
/// Throws ResourceError when the sequent has more atoms than `atom_cap`.
Verdict decide(const Sequent& s, std::size_t atom_cap = kDefaultAtomCap);

/// Cut-free proof of the end-sequent of `p`. Throws InternalError if the
/// end-sequent turns out not to be valid.
Proof eliminate_cut(const Proof& p, std::size_t atom_cap = kDefaultAtomCap);

/// decide(|- f & ~f).
Verdict contradiction_scan(const Formula& f, std::size_t atom_cap = kDefaultAtomCap);

/// The nine cut-free theorems, instantiated at alpha and beta.
std::vector<std::pair<std::string, Sequent>> theorem_suite(const Formula& alpha = Formula::atom("p"),
                                                           const Formula& beta = Formula::atom("q"));

/// Termination measure of a search node: weight of the unmarked formulas and
/// number of unmarked negated literals in the succedent.
std::pair<std::size_t, std::size_t> search_measure(const Sequent& s, const FormulaSet& marked);

}  // namespace ciore
