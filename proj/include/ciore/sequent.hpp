#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ciore/syntax.hpp"

namespace ciore {

/// Two-sided sequent over finite formula sets.
struct Sequent {
  FormulaSet ante;
  FormulaSet succ;

  bool closed() const;  // ante and succ share a formula
  friend auto operator<=>(const Sequent&, const Sequent&) = default;
  friend bool operator==(const Sequent&, const Sequent&) = default;
};

std::vector<Formula> formulas_of(const Sequent& s);
std::set<std::string> free_variables(const Sequent& s);
std::set<std::string> atoms(const Sequent& s);
bool is_propositional(const Sequent& s);

enum class RuleId {
  Axiom,
  WeakL,
  WeakR,
  OrL,
  OrR,
  NegOrL,
  NegOrR,
  NegOrR2,
  AndL,
  AndR,
  NegAndL,
  NegAndR,
  NegAndR2,
  ImpL,
  ImpR,
  NegImpL,
  NegImpR,
  NegImpR2,
  NegR,
  NegR2,
  NegNegL,
  NegNegR,
  CircL,
  CircR,
  NegCircL,
  Cut,
  ForallL,
  ForallR,
  ExistsL,
  ExistsR,
  CircForallL,
  CircForallR,
  CircExistsL,
  CircExistsR,
  // Several weakenings in one step, the "(w's)" of printed proofs.
  Weakenings,
  // Leaf standing for an assumed sequent (derived-rule hypotheses).
  Hyp,
};

const std::string& rule_name(RuleId r);
/// Throws ParseError on an unknown name.
RuleId rule_from_name(const std::string& name);
const std::vector<RuleId>& all_rules();

enum class Calculus { GCiore, GCiorePrime, GQCiore };

const std::string& calculus_name(Calculus c);
Calculus calculus_from_name(const std::string& name);

/// Whether `r` is a rule of `c`. Axiom and the weakenings belong to every calculus,
/// Cut only when allow_cut, Hyp never (check_proof handles it).
bool rule_in_calculus(RuleId r, Calculus c, bool allow_cut);

bool is_eigenvariable_rule(RuleId r);
bool is_instance_rule(RuleId r);  // quantifier rules with an arbitrary instance

struct Proof {
  Sequent sequent;
  RuleId rule = RuleId::Axiom;
  std::optional<Formula> principal;
  std::optional<Term> side;
  std::vector<Proof> premises;

  std::size_t node_count() const;
  bool uses_cut() const;
};

struct CheckResult {
  bool ok = true;
  std::string message;
  /// Premise indices from the root down to the first bad node.
  std::vector<std::size_t> path;

  explicit operator bool() const { return ok; }
};

/// Premise additions (antecedent, succedent) a rule schema puts on top of the
/// context for a given principal. Empty when the principal has the wrong shape.
struct PremiseShape {
  FormulaSet ante;
  FormulaSet succ;
};

/// Side of the principal formula in the conclusion: true for the antecedent.
bool principal_on_left(RuleId r);

/// Premise schema of a logical rule. For quantifier rules `side` is the
/// instantiating variable. Returns nullopt if the principal does not fit.
std::optional<std::vector<PremiseShape>> rule_premises(RuleId r, const Formula& principal,
                                                       const std::optional<Term>& side);

CheckResult check_rule_instance(RuleId r, const Sequent& conclusion, const std::vector<Sequent>& premises,
                                const std::optional<Formula>& principal, const std::optional<Term>& side);

/// Checks every node. `hypotheses` lists the sequents a Hyp leaf may stand for.
CheckResult check_proof(const Proof& p, Calculus c, bool allow_cut, const std::vector<Sequent>& hypotheses = {});

struct Application {
  RuleId rule;
  Formula principal;
  std::optional<Term> side;
  std::vector<Sequent> premises;
};

/// Every logical rule instance with conclusion `s`, in rule order then canonical
/// principal order. The principal is dropped from the premises except for NegR2
/// and the arbitrary-instance quantifier rules. Instances range over the free
/// variables of `s` plus one fresh variable.
std::vector<Application> backward_applications(const Sequent& s, Calculus c);

enum class DerivedRule {
  NegOrRPrime,   // G,a => D   G,b => D   /  G => D, ~(a|b)
  NegAndRPrime,  // G,a,b => D              /  G => D, ~(a&b)
  NegImpRPrime,  // G => D,a   G,b => D     /  G => D, ~(a->b)
  NegRPrime,     // G => D,a   G => D,~a    /  G => D, ~a
  ForallIntro,   // => f -> g(a)            /  => f -> forall x. g(x)
  ExistsIntro,   // => f(a) -> g            /  => (exists x. f(x)) -> g
};

const std::string& derived_rule_name(DerivedRule r);

/// Expands a derived rule into primitive steps. Premises of the derived rule
/// become Hyp leaves. `principal` names the introduced formula (the succedent
/// formula of the conclusion); `side` is the variable a for the two quantifier
/// rules. Throws InvalidArgument on a schema mismatch.
Proof expand_derived_rule(DerivedRule r, const Sequent& conclusion, const std::vector<Sequent>& premises,
                          const Formula& principal, const std::optional<Term>& side = std::nullopt);

/// Generalized-subformula property: every formula of every node lies in the
/// union of gsub over the end-sequent. Propositional proofs only.
CheckResult check_subformula_property(const Proof& p);

}  // namespace ciore
