#include "ciore/prop_prover.hpp"

namespace ciore {

namespace {

std::optional<RuleId> left_rule(const Formula& f) {
  switch (f.op()) {
    case Connective::Or:
      return RuleId::OrL;
    case Connective::And:
      return RuleId::AndL;
    case Connective::Imp:
      return RuleId::ImpL;
    case Connective::Circ:
      return RuleId::CircL;
    case Connective::Neg:
      switch (f.sub().op()) {
        case Connective::Or:
          return RuleId::NegOrL;
        case Connective::And:
          return RuleId::NegAndL;
        case Connective::Imp:
          return RuleId::NegImpL;
        case Connective::Neg:
          return RuleId::NegNegL;
        case Connective::Circ:
          return RuleId::NegCircL;
        default:
          return std::nullopt;
      }
    default:
      return std::nullopt;
  }
}

// Rules that strictly lower the weight; succedent ~oA goes through NegR2.
std::optional<RuleId> right_rule(const Formula& f) {
  switch (f.op()) {
    case Connective::Or:
      return RuleId::OrR;
    case Connective::And:
      return RuleId::AndR;
    case Connective::Imp:
      return RuleId::ImpR;
    case Connective::Circ:
      return RuleId::CircR;
    case Connective::Neg:
      switch (f.sub().op()) {
        case Connective::Or:
          return RuleId::NegOrR2;
        case Connective::And:
          return RuleId::NegAndR2;
        case Connective::Imp:
          return RuleId::NegImpR2;
        case Connective::Neg:
          return RuleId::NegNegR;
        case Connective::Circ:
          return RuleId::NegR2;
        default:
          return std::nullopt;
      }
    default:
      return std::nullopt;
  }
}

struct Search {
  std::optional<Sequent> leaf_sequent;  // literal sequent that stays open
};

Proof close(const Sequent& s) {
  // first formula common to both sides
  for (const auto& f : s.ante) {
    if (!s.succ.count(f)) continue;
    Proof ax{Sequent{{f}, {f}}, RuleId::Axiom, f, std::nullopt, {}};
    if (s.ante.size() == 1 && s.succ.size() == 1) return ax;
    return Proof{s, RuleId::Weakenings, std::nullopt, std::nullopt, {std::move(ax)}};
  }
  throw InternalError("close called on an open sequent");
}

// Returns a proof, or nullopt after recording the open literal leaf in `out`.
std::optional<Proof> search(const Sequent& s, FormulaSet marked, Search& out) {
  if (s.closed()) return close(s);

  std::optional<std::pair<RuleId, Formula>> pick;
  for (const auto& f : s.ante) {
    if (auto r = left_rule(f)) {
      pick.emplace(*r, f);
      break;
    }
  }
  if (!pick) {
    for (const auto& f : s.succ) {
      if (marked.count(f)) continue;
      if (auto r = right_rule(f)) {
        pick.emplace(*r, f);
        break;
      }
    }
  }
  if (!pick) {
    for (const auto& f : s.succ) {
      if (f.is_neg() && f.sub().is_atom() && !marked.count(f)) {
        pick.emplace(RuleId::NegR2, f);
        break;
      }
    }
  }
  if (!pick) {
    out.leaf_sequent = s;
    return std::nullopt;
  }

  const auto& [rule, principal] = *pick;
  auto shapes = rule_premises(rule, principal, std::nullopt);
  if (!shapes) throw InternalError("selected rule does not fit its principal");
  Sequent base = s;
  if (rule == RuleId::NegR2) {
    marked.insert(principal);
  } else {
    (principal_on_left(rule) ? base.ante : base.succ).erase(principal);
  }

  Proof node{s, rule, principal, std::nullopt, {}};
  for (const auto& shape : *shapes) {
    Sequent prem = base;
    prem.ante.insert(shape.ante.begin(), shape.ante.end());
    prem.succ.insert(shape.succ.begin(), shape.succ.end());
    auto sub = search(prem, marked, out);
    if (!sub) return std::nullopt;
    node.premises.push_back(std::move(*sub));
  }
  return node;
}

}  // namespace

std::pair<std::size_t, std::size_t> search_measure(const Sequent& s, const FormulaSet& marked) {
  std::size_t w = 0, lits = 0;
  for (const auto& f : s.ante) w += weight(f);
  for (const auto& f : s.succ) {
    if (marked.count(f)) continue;
    w += weight(f);
    if (f.is_neg() && f.sub().is_atom()) ++lits;
  }
  return {w, lits};
}

Verdict decide(const Sequent& s, std::size_t atom_cap) {
  if (!is_propositional(s)) throw InvalidArgument("decide needs a propositional sequent");
  auto names = atoms(s);
  if (names.size() > atom_cap)
    throw ResourceError("sequent has " + std::to_string(names.size()) + " atoms, cap is " + std::to_string(atom_cap));

  Search st;
  auto proof = search(s, {}, st);
  Verdict v;
  if (proof) {
    v.proved = true;
    v.proof = std::move(proof);
    return v;
  }
  const Sequent& leaf = *st.leaf_sequent;
  for (const auto& p : names) {
    Formula a = Formula::atom(p);
    bool pos = leaf.ante.count(a) > 0;
    bool neg = leaf.ante.count(Formula::neg(a)) > 0;
    v.valuation[p] = !pos ? TruthValue::Zero : neg ? TruthValue::Half : TruthValue::One;
  }
  if (sequent_satisfied(v.valuation, s)) throw InternalError("extracted valuation does not falsify the goal");
  return v;
}

Proof eliminate_cut(const Proof& p, std::size_t atom_cap) {
  Verdict v = decide(p.sequent, atom_cap);
  if (!v.proved) throw InternalError("cut elimination found a refutable end-sequent");
  return std::move(*v.proof);
}

Verdict contradiction_scan(const Formula& f, std::size_t atom_cap) {
  return decide(Sequent{{}, {Formula::conj(f, Formula::neg(f))}}, atom_cap);
}

std::vector<std::pair<std::string, Sequent>> theorem_suite(const Formula& a, const Formula& b) {
  using F = Formula;
  auto thm = [](F f) { return Sequent{{}, {std::move(f)}}; };
  auto contra = [](const F& x) { return F::conj(x, F::neg(x)); };
  F both = F::conj(contra(a), contra(b));
  F some_consistent = F::disj(F::circ(a), F::circ(b));
  return {
      {"i", thm(F::iff(contra(a), F::neg(F::circ(a))))},
      {"ii", thm(F::circ(F::circ(a)))},
      {"iii", thm(F::iff(F::circ(a), F::circ(F::neg(a))))},
      {"iv", thm(F::iff(both, contra(F::conj(a, b))))},
      {"v", thm(F::iff(both, contra(F::disj(a, b))))},
      {"vi", thm(F::iff(both, contra(F::imp(a, b))))},
      {"vii", thm(F::iff(some_consistent, F::circ(F::conj(a, b))))},
      {"viii", thm(F::iff(some_consistent, F::circ(F::disj(a, b))))},
      {"ix", thm(F::iff(some_consistent, F::circ(F::imp(a, b))))},
  };
}

}  // namespace ciore
