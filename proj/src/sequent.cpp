#include "ciore/sequent.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>

namespace ciore {

bool Sequent::closed() const {
  auto a = ante.begin();
  auto b = succ.begin();
  while (a != ante.end() && b != succ.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      return true;
    }
  }
  return false;
}

std::vector<Formula> formulas_of(const Sequent& s) {
  std::vector<Formula> out(s.ante.begin(), s.ante.end());
  out.insert(out.end(), s.succ.begin(), s.succ.end());
  return out;
}

std::set<std::string> free_variables(const Sequent& s) {
  std::set<std::string> out;
  for (const auto& f : formulas_of(s)) {
    auto v = free_variables(f);
    out.insert(v.begin(), v.end());
  }
  return out;
}

std::set<std::string> atoms(const Sequent& s) {
  std::set<std::string> out;
  for (const auto& f : formulas_of(s)) {
    auto v = atoms(f);
    out.insert(v.begin(), v.end());
  }
  return out;
}

bool is_propositional(const Sequent& s) {
  for (const auto& f : formulas_of(s))
    if (!is_propositional(f)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Rule names
// ---------------------------------------------------------------------------

namespace {

const std::vector<std::pair<RuleId, std::string>>& rule_table() {
  static const std::vector<std::pair<RuleId, std::string>> table = {
      {RuleId::Axiom, "Axiom"},
      {RuleId::WeakL, "WeakL"},
      {RuleId::WeakR, "WeakR"},
      {RuleId::OrL, "OrL"},
      {RuleId::OrR, "OrR"},
      {RuleId::NegOrL, "NegOrL"},
      {RuleId::NegOrR, "NegOrR"},
      {RuleId::NegOrR2, "NegOrR2"},
      {RuleId::AndL, "AndL"},
      {RuleId::AndR, "AndR"},
      {RuleId::NegAndL, "NegAndL"},
      {RuleId::NegAndR, "NegAndR"},
      {RuleId::NegAndR2, "NegAndR2"},
      {RuleId::ImpL, "ImpL"},
      {RuleId::ImpR, "ImpR"},
      {RuleId::NegImpL, "NegImpL"},
      {RuleId::NegImpR, "NegImpR"},
      {RuleId::NegImpR2, "NegImpR2"},
      {RuleId::NegR, "NegR"},
      {RuleId::NegR2, "NegR2"},
      {RuleId::NegNegL, "NegNegL"},
      {RuleId::NegNegR, "NegNegR"},
      {RuleId::CircL, "CircL"},
      {RuleId::CircR, "CircR"},
      {RuleId::NegCircL, "NegCircL"},
      {RuleId::Cut, "Cut"},
      {RuleId::ForallL, "ForallL"},
      {RuleId::ForallR, "ForallR"},
      {RuleId::ExistsL, "ExistsL"},
      {RuleId::ExistsR, "ExistsR"},
      {RuleId::CircForallL, "CircForallL"},
      {RuleId::CircForallR, "CircForallR"},
      {RuleId::CircExistsL, "CircExistsL"},
      {RuleId::CircExistsR, "CircExistsR"},
      {RuleId::Weakenings, "Weakenings"},
      {RuleId::Hyp, "Hyp"},
  };
  return table;
}

}  // namespace

const std::string& rule_name(RuleId r) {
  for (const auto& [id, name] : rule_table())
    if (id == r) return name;
  throw InternalError("unnamed rule");
}

RuleId rule_from_name(const std::string& name) {
  for (const auto& [id, n] : rule_table())
    if (n == name) return id;
  throw ParseError("unknown rule: " + name);
}

const std::vector<RuleId>& all_rules() {
  static const std::vector<RuleId> rules = [] {
    std::vector<RuleId> v;
    for (const auto& [id, n] : rule_table()) v.push_back(id);
    return v;
  }();
  return rules;
}

const std::string& calculus_name(Calculus c) {
  static const std::array<std::string, 3> names = {"GCiore", "GCiore'", "GQCiore"};
  return names[static_cast<std::size_t>(c)];
}

Calculus calculus_from_name(const std::string& name) {
  std::string n;
  for (char ch : name)
    if (ch != '-' && ch != '_') n += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (n == "gciore") return Calculus::GCiore;
  if (n == "gciore'" || n == "gcioreprime" || n == "prime") return Calculus::GCiorePrime;
  if (n == "gqciore") return Calculus::GQCiore;
  throw ParseError("unknown calculus: " + name);
}

namespace {

bool is_structural(RuleId r) {
  return r == RuleId::Axiom || r == RuleId::WeakL || r == RuleId::WeakR || r == RuleId::Weakenings;
}

bool is_quantifier_rule(RuleId r) { return r >= RuleId::ForallL && r <= RuleId::CircExistsR; }

bool is_primed(RuleId r) {
  return r == RuleId::NegOrR2 || r == RuleId::NegAndR2 || r == RuleId::NegImpR2 || r == RuleId::NegR2;
}

bool is_unprimed_counterpart(RuleId r) {
  return r == RuleId::NegOrR || r == RuleId::NegAndR || r == RuleId::NegImpR || r == RuleId::NegR;
}

bool is_logical(RuleId r) { return r >= RuleId::OrL && r <= RuleId::CircExistsR && r != RuleId::Cut; }

}  // namespace

bool rule_in_calculus(RuleId r, Calculus c, bool allow_cut) {
  if (is_structural(r)) return true;
  if (r == RuleId::Cut) return allow_cut;
  if (r == RuleId::Hyp) return false;
  switch (c) {
    case Calculus::GCiore:
      return !is_quantifier_rule(r) && !is_primed(r);
    case Calculus::GCiorePrime:
      return !is_quantifier_rule(r) && !is_unprimed_counterpart(r);
    case Calculus::GQCiore:
      return true;
  }
  return false;
}

bool is_eigenvariable_rule(RuleId r) {
  return r == RuleId::ForallR || r == RuleId::ExistsL || r == RuleId::CircExistsL || r == RuleId::CircForallL;
}

bool is_instance_rule(RuleId r) {
  return r == RuleId::ForallL || r == RuleId::ExistsR || r == RuleId::CircForallR || r == RuleId::CircExistsR;
}

bool principal_on_left(RuleId r) {
  switch (r) {
    case RuleId::OrL:
    case RuleId::NegOrL:
    case RuleId::AndL:
    case RuleId::NegAndL:
    case RuleId::ImpL:
    case RuleId::NegImpL:
    case RuleId::NegNegL:
    case RuleId::CircL:
    case RuleId::NegCircL:
    case RuleId::ForallL:
    case RuleId::ExistsL:
    case RuleId::CircForallL:
    case RuleId::CircExistsL:
    case RuleId::WeakL:
      return true;
    default:
      return false;
  }
}

std::size_t Proof::node_count() const {
  std::size_t n = 1;
  for (const auto& p : premises) n += p.node_count();
  return n;
}

bool Proof::uses_cut() const {
  if (rule == RuleId::Cut) return true;
  return std::any_of(premises.begin(), premises.end(), [](const Proof& p) { return p.uses_cut(); });
}

// ---------------------------------------------------------------------------
// Rule schemata
// ---------------------------------------------------------------------------

namespace {

using Shapes = std::vector<PremiseShape>;

PremiseShape sh(std::initializer_list<Formula> a, std::initializer_list<Formula> s) {
  return PremiseShape{FormulaSet(a), FormulaSet(s)};
}

Formula N(const Formula& f) { return Formula::neg(f); }

bool negated(const Formula& f, Connective inner) { return f.is_neg() && f.sub().op() == inner; }

}  // namespace

std::optional<std::vector<PremiseShape>> rule_premises(RuleId r, const Formula& p, const std::optional<Term>& side) {
  if (is_quantifier_rule(r)) {
    if (!side || !side->is_free_var()) return std::nullopt;
    const Term& t = *side;
    switch (r) {
      case RuleId::ForallL:
        if (p.op() != Connective::Forall) return std::nullopt;
        return Shapes{sh({instantiate(p, t)}, {})};
      case RuleId::ForallR:
        if (p.op() != Connective::Forall) return std::nullopt;
        return Shapes{sh({}, {instantiate(p, t)})};
      case RuleId::ExistsL:
        if (p.op() != Connective::Exists) return std::nullopt;
        return Shapes{sh({instantiate(p, t)}, {})};
      case RuleId::ExistsR:
        if (p.op() != Connective::Exists) return std::nullopt;
        return Shapes{sh({}, {instantiate(p, t)})};
      case RuleId::CircForallL:
        if (!p.is_circ() || p.sub().op() != Connective::Forall) return std::nullopt;
        return Shapes{sh({Formula::circ(instantiate(p.sub(), t))}, {})};
      case RuleId::CircForallR:
        if (!p.is_circ() || p.sub().op() != Connective::Forall) return std::nullopt;
        return Shapes{sh({}, {Formula::circ(instantiate(p.sub(), t))})};
      case RuleId::CircExistsL:
        if (!p.is_circ() || p.sub().op() != Connective::Exists) return std::nullopt;
        return Shapes{sh({Formula::circ(instantiate(p.sub(), t))}, {})};
      case RuleId::CircExistsR:
        if (!p.is_circ() || p.sub().op() != Connective::Exists) return std::nullopt;
        return Shapes{sh({}, {Formula::circ(instantiate(p.sub(), t))})};
      default:
        return std::nullopt;
    }
  }
  if (side) return std::nullopt;

  switch (r) {
    case RuleId::OrL:
      if (p.op() != Connective::Or) return std::nullopt;
      return Shapes{sh({p.left()}, {}), sh({p.right()}, {})};
    case RuleId::OrR:
      if (p.op() != Connective::Or) return std::nullopt;
      return Shapes{sh({}, {p.left(), p.right()})};
    case RuleId::AndL:
      if (p.op() != Connective::And) return std::nullopt;
      return Shapes{sh({p.left(), p.right()}, {})};
    case RuleId::AndR:
      if (p.op() != Connective::And) return std::nullopt;
      return Shapes{sh({}, {p.left()}), sh({}, {p.right()})};
    case RuleId::ImpL:
      if (p.op() != Connective::Imp) return std::nullopt;
      return Shapes{sh({}, {p.left()}), sh({p.right()}, {})};
    case RuleId::ImpR:
      if (p.op() != Connective::Imp) return std::nullopt;
      return Shapes{sh({p.left()}, {p.right()})};
    case RuleId::CircL:
      if (!p.is_circ()) return std::nullopt;
      return Shapes{sh({}, {p.sub()}), sh({}, {N(p.sub())})};
    case RuleId::CircR:
      if (!p.is_circ()) return std::nullopt;
      return Shapes{sh({p.sub(), N(p.sub())}, {})};
    default:
      break;
  }

  if (!p.is_neg()) return std::nullopt;
  const Formula& g = p.sub();
  switch (r) {
    case RuleId::NegR:
      return Shapes{sh({g}, {})};
    case RuleId::NegR2:
      return Shapes{sh({g}, {p})};
    case RuleId::NegNegL:
      if (!g.is_neg()) return std::nullopt;
      return Shapes{sh({g.sub()}, {})};
    case RuleId::NegNegR:
      if (!g.is_neg()) return std::nullopt;
      return Shapes{sh({}, {g.sub()})};
    case RuleId::NegCircL:
      if (!g.is_circ()) return std::nullopt;
      return Shapes{sh({g.sub(), N(g.sub())}, {})};
    default:
      break;
  }
  if (!g.is_binary()) return std::nullopt;
  const Formula& a = g.left();
  const Formula& b = g.right();
  switch (r) {
    case RuleId::NegOrL:
      if (!negated(p, Connective::Or)) return std::nullopt;
      return Shapes{sh({a, N(a), b, N(b)}, {}), sh({N(a), N(b)}, {a, b})};
    case RuleId::NegOrR:
      if (!negated(p, Connective::Or)) return std::nullopt;
      return Shapes{sh({}, {a}), sh({}, {N(a)}), sh({}, {b}), sh({}, {N(b)})};
    case RuleId::NegOrR2:
      if (!negated(p, Connective::Or)) return std::nullopt;
      return Shapes{sh({a}, {N(a)}), sh({a}, {b}), sh({a}, {N(b)}),
                    sh({b}, {a}), sh({b}, {N(a)}), sh({b}, {N(b)})};
    case RuleId::NegAndL:
      if (!negated(p, Connective::And)) return std::nullopt;
      return Shapes{sh({}, {a, b}), sh({N(a)}, {a}), sh({N(b)}, {b}), sh({N(a), N(b)}, {})};
    case RuleId::NegAndR:
      if (!negated(p, Connective::And)) return std::nullopt;
      return Shapes{sh({}, {a}), sh({}, {N(a)}), sh({}, {b}), sh({}, {N(b)})};
    case RuleId::NegAndR2:
      if (!negated(p, Connective::And)) return std::nullopt;
      return Shapes{sh({a, b}, {N(a)}), sh({a, b}, {N(b)})};
    case RuleId::NegImpL:
      if (!negated(p, Connective::Imp)) return std::nullopt;
      return Shapes{sh({a, N(b)}, {b}), sh({a, N(a), N(b)}, {})};
    case RuleId::NegImpR:
      if (!negated(p, Connective::Imp)) return std::nullopt;
      return Shapes{sh({}, {a}), sh({}, {N(a)}), sh({}, {b}), sh({}, {N(b)})};
    case RuleId::NegImpR2:
      if (!negated(p, Connective::Imp)) return std::nullopt;
      return Shapes{sh({}, {a}), sh({b}, {N(a)}), sh({b}, {N(b)})};
    default:
      return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// Checking
// ---------------------------------------------------------------------------

namespace {

CheckResult fail(std::string msg) { return CheckResult{false, std::move(msg), {}}; }

Sequent add(const Sequent& base, const PremiseShape& s) {
  Sequent out = base;
  out.ante.insert(s.ante.begin(), s.ante.end());
  out.succ.insert(s.succ.begin(), s.succ.end());
  return out;
}

bool subset(const FormulaSet& a, const FormulaSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

CheckResult check_weakening(bool left, const Sequent& c, const std::vector<Sequent>& ps,
                            const std::optional<Formula>& principal) {
  if (ps.size() != 1) return fail("weakening needs exactly one premise");
  const Sequent& p = ps[0];
  const FormulaSet& grown = left ? c.ante : c.succ;
  const FormulaSet& kept = left ? c.succ : c.ante;
  const FormulaSet& pgrown = left ? p.ante : p.succ;
  const FormulaSet& pkept = left ? p.succ : p.ante;
  if (kept != pkept) return fail("weakening changed the other side");
  if (!subset(pgrown, grown)) return fail("premise side is not contained in the conclusion");
  if (grown.size() > pgrown.size() + 1) return fail("single weakening adds more than one formula");
  if (principal) {
    if (!grown.count(*principal)) return fail("weakened formula is not in the conclusion");
    FormulaSet expect = pgrown;
    expect.insert(*principal);
    if (expect != grown) return fail("weakened formula does not account for the difference");
  }
  return {};
}

}  // namespace

CheckResult check_rule_instance(RuleId r, const Sequent& c, const std::vector<Sequent>& ps,
                                const std::optional<Formula>& principal, const std::optional<Term>& side) {
  switch (r) {
    case RuleId::Axiom:
      if (!ps.empty()) return fail("axiom has no premises");
      if (c.ante.size() != 1 || c.succ.size() != 1 || !(*c.ante.begin() == *c.succ.begin()))
        return fail("axiom must have the form A |- A");
      if (principal && !(*principal == *c.ante.begin())) return fail("axiom principal differs from its formula");
      return {};
    case RuleId::WeakL:
      return check_weakening(true, c, ps, principal);
    case RuleId::WeakR:
      return check_weakening(false, c, ps, principal);
    case RuleId::Weakenings:
      if (ps.size() != 1) return fail("weakenings need exactly one premise");
      if (!subset(ps[0].ante, c.ante) || !subset(ps[0].succ, c.succ))
        return fail("premise is not a subsequent of the conclusion");
      return {};
    case RuleId::Cut: {
      if (ps.size() != 2) return fail("cut needs two premises");
      if (!principal) return fail("cut needs its cut formula");
      Sequent left = c, right = c;
      left.succ.insert(*principal);
      right.ante.insert(*principal);
      if (!(ps[0] == left) || !(ps[1] == right)) return fail("cut premises do not match G |- D,A and G,A |- D");
      return {};
    }
    case RuleId::Hyp:
      return fail("hypothesis leaves are only accepted against a hypothesis list");
    default:
      break;
  }

  if (!principal) return fail(rule_name(r) + " needs a principal formula");
  const bool left = principal_on_left(r);
  const FormulaSet& home = left ? c.ante : c.succ;
  if (!home.count(*principal)) return fail("principal formula is not on the rule's side of the conclusion");
  auto shapes = rule_premises(r, *principal, side);
  if (!shapes) {
    if (is_quantifier_rule(r) && (!side || !side->is_free_var()))
      return fail(rule_name(r) + " needs a free variable as side datum");
    return fail("principal formula does not fit " + rule_name(r));
  }
  if (is_eigenvariable_rule(r) && free_variables(c).count(side->name()))
    return fail("eigenvariable " + side->name() + " occurs in the lower sequent");
  if (shapes->size() != ps.size())
    return fail(rule_name(r) + " expects " + std::to_string(shapes->size()) + " premises, got " +
                std::to_string(ps.size()));

  Sequent without = c;
  (left ? without.ante : without.succ).erase(*principal);
  for (const Sequent* base : std::array<const Sequent*, 2>{&without, &c}) {
    bool all = true;
    for (std::size_t i = 0; i < ps.size() && all; ++i) all = add(*base, (*shapes)[i]) == ps[i];
    if (all) return {};
  }
  return fail("premises do not match the schema of " + rule_name(r));
}

namespace {

CheckResult check_node(const Proof& p, Calculus c, bool allow_cut, const std::vector<Sequent>& hyps,
                       std::vector<std::size_t>& path) {
  if (p.rule == RuleId::Hyp) {
    if (!p.premises.empty()) return CheckResult{false, "hypothesis leaf has premises", path};
    if (std::find(hyps.begin(), hyps.end(), p.sequent) == hyps.end())
      return CheckResult{false, "sequent is not among the hypotheses", path};
    return {};
  }
  if (!rule_in_calculus(p.rule, c, allow_cut)) {
    std::string why = p.rule == RuleId::Cut ? "cut is not allowed" : rule_name(p.rule) + " is not a rule of " + calculus_name(c);
    return CheckResult{false, why, path};
  }
  std::vector<Sequent> prem;
  prem.reserve(p.premises.size());
  for (const auto& q : p.premises) prem.push_back(q.sequent);
  CheckResult here = check_rule_instance(p.rule, p.sequent, prem, p.principal, p.side);
  if (!here) {
    here.path = path;
    return here;
  }
  for (std::size_t i = 0; i < p.premises.size(); ++i) {
    path.push_back(i);
    CheckResult sub = check_node(p.premises[i], c, allow_cut, hyps, path);
    path.pop_back();
    if (!sub) return sub;
  }
  return {};
}

}  // namespace

CheckResult check_proof(const Proof& p, Calculus c, bool allow_cut, const std::vector<Sequent>& hypotheses) {
  std::vector<std::size_t> path;
  return check_node(p, c, allow_cut, hypotheses, path);
}

// ---------------------------------------------------------------------------
// Backward search support
// ---------------------------------------------------------------------------

std::vector<Application> backward_applications(const Sequent& s, Calculus c) {
  std::vector<Application> out;
  std::vector<std::string> vars;
  {
    auto fv = free_variables(s);
    vars.assign(fv.begin(), fv.end());
    std::sort(vars.begin(), vars.end(), FreeVarLess{});
    vars.push_back(fresh_free_variable(fv));
  }
  const std::string& fresh = vars.back();

  for (RuleId r : all_rules()) {
    if (!is_logical(r) || !rule_in_calculus(r, c, false)) continue;
    const bool left = principal_on_left(r);
    for (const Formula& p : left ? s.ante : s.succ) {
      std::vector<std::optional<Term>> sides;
      if (is_instance_rule(r)) {
        for (const auto& v : vars) sides.emplace_back(Term::free_var(v));
      } else if (is_eigenvariable_rule(r)) {
        sides.emplace_back(Term::free_var(fresh));
      } else {
        sides.emplace_back(std::nullopt);
      }
      for (const auto& side : sides) {
        auto shapes = rule_premises(r, p, side);
        if (!shapes) continue;
        Sequent base = s;
        if (r != RuleId::NegR2 && !is_instance_rule(r)) (left ? base.ante : base.succ).erase(p);
        Application app{r, p, side, {}};
        for (const auto& shape : *shapes) app.premises.push_back(add(base, shape));
        out.push_back(std::move(app));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Derived rules
// ---------------------------------------------------------------------------

const std::string& derived_rule_name(DerivedRule r) {
  static const std::array<std::string, 6> names = {"NegOrR'", "NegAndR'", "NegImpR'",
                                                   "NegR'",   "ForallIntro", "ExistsIntro"};
  return names[static_cast<std::size_t>(r)];
}

namespace {

Proof hyp(const Sequent& s) { return Proof{s, RuleId::Hyp, std::nullopt, std::nullopt, {}}; }

Proof node(Sequent s, RuleId r, std::optional<Formula> principal, std::vector<Proof> premises,
           std::optional<Term> side = std::nullopt) {
  return Proof{std::move(s), r, std::move(principal), std::move(side), std::move(premises)};
}

Proof axiom(const Formula& f) { return node(Sequent{{f}, {f}}, RuleId::Axiom, f, {}); }

Sequent with(const Sequent& s, std::initializer_list<Formula> a, std::initializer_list<Formula> b) {
  Sequent out = s;
  out.ante.insert(a.begin(), a.end());
  out.succ.insert(b.begin(), b.end());
  return out;
}

void expect_premises(const std::vector<Sequent>& got, const std::vector<Sequent>& want, DerivedRule r) {
  if (got != want) throw InvalidArgument("premises do not match the schema of " + derived_rule_name(r));
}

// From  |- phi -> chi  build  phi |- chi  through the cut pattern of the
// quantifier-introduction derivations.
Proof cut_out_implication(const Sequent& hypothesis, const Formula& phi, const Formula& chi) {
  Formula imp = Formula::imp(phi, chi);
  Sequent s1{{phi}, {imp}};
  Sequent s2{{phi}, {imp, chi}};
  Proof left = node(s2, RuleId::WeakR, chi, {node(s1, RuleId::WeakL, phi, {hyp(hypothesis)})});
  Proof imp_left_a = node(Sequent{{phi}, {phi, chi}}, RuleId::WeakR, chi, {axiom(phi)});
  Proof imp_left_b = node(Sequent{{phi, chi}, {chi}}, RuleId::WeakL, phi, {axiom(chi)});
  Proof right = node(Sequent{{phi, imp}, {chi}}, RuleId::ImpL, imp, {imp_left_a, imp_left_b});
  return node(Sequent{{phi}, {chi}}, RuleId::Cut, imp, {left, right});
}

}  // namespace

Proof expand_derived_rule(DerivedRule r, const Sequent& conclusion, const std::vector<Sequent>& premises,
                          const Formula& principal, const std::optional<Term>& side) {
  if (!conclusion.succ.count(principal)) throw InvalidArgument("principal is not in the conclusion's succedent");
  Sequent ctx = conclusion;
  ctx.succ.erase(principal);

  auto neg_of = [&](Connective op) -> const Formula& {
    if (!negated(principal, op)) throw InvalidArgument("principal does not fit " + derived_rule_name(r));
    return principal.sub();
  };

  switch (r) {
    case DerivedRule::NegOrRPrime: {
      const Formula& g = neg_of(Connective::Or);
      Sequent p1 = with(ctx, {g.left()}, {}), p2 = with(ctx, {g.right()}, {});
      expect_premises(premises, {p1, p2}, r);
      Proof inner = node(with(ctx, {g}, {}), RuleId::OrL, g, {hyp(p1), hyp(p2)});
      return node(conclusion, RuleId::NegR, principal, {inner});
    }
    case DerivedRule::NegAndRPrime: {
      const Formula& g = neg_of(Connective::And);
      Sequent p1 = with(ctx, {g.left(), g.right()}, {});
      expect_premises(premises, {p1}, r);
      Proof inner = node(with(ctx, {g}, {}), RuleId::AndL, g, {hyp(p1)});
      return node(conclusion, RuleId::NegR, principal, {inner});
    }
    case DerivedRule::NegImpRPrime: {
      const Formula& g = neg_of(Connective::Imp);
      Sequent p1 = with(ctx, {}, {g.left()}), p2 = with(ctx, {g.right()}, {});
      expect_premises(premises, {p1, p2}, r);
      Proof inner = node(with(ctx, {g}, {}), RuleId::ImpL, g, {hyp(p1), hyp(p2)});
      return node(conclusion, RuleId::NegR, principal, {inner});
    }
    case DerivedRule::NegRPrime: {
      if (!principal.is_neg()) throw InvalidArgument("principal does not fit " + derived_rule_name(r));
      expect_premises(premises, {with(ctx, {}, {principal.sub()}), conclusion}, r);
      return hyp(conclusion);
    }
    case DerivedRule::ForallIntro: {
      if (!conclusion.ante.empty() || conclusion.succ.size() != 1 || principal.op() != Connective::Imp ||
          principal.right().op() != Connective::Forall)
        throw InvalidArgument("conclusion must be |- f -> forall x. g(x)");
      if (!side || !side->is_free_var()) throw InvalidArgument("ForallIntro needs its variable");
      const Formula& phi = principal.left();
      const Formula& all = principal.right();
      if (free_variables(phi).count(side->name())) throw InvalidArgument("the variable occurs in the antecedent formula");
      if (free_variables(all).count(side->name())) throw InvalidArgument("the variable occurs in the conclusion");
      Formula chi = instantiate(all, *side);
      Sequent h{{}, {Formula::imp(phi, chi)}};
      expect_premises(premises, {h}, r);
      Proof cut = cut_out_implication(h, phi, chi);
      Proof gen = node(Sequent{{phi}, {all}}, RuleId::ForallR, all, {cut}, side);
      return node(conclusion, RuleId::ImpR, principal, {gen});
    }
    case DerivedRule::ExistsIntro: {
      if (!conclusion.ante.empty() || conclusion.succ.size() != 1 || principal.op() != Connective::Imp ||
          principal.left().op() != Connective::Exists)
        throw InvalidArgument("conclusion must be |- (exists x. f(x)) -> g");
      if (!side || !side->is_free_var()) throw InvalidArgument("ExistsIntro needs its variable");
      const Formula& ex = principal.left();
      const Formula& psi = principal.right();
      if (free_variables(psi).count(side->name())) throw InvalidArgument("the variable occurs in the consequent formula");
      if (free_variables(ex).count(side->name())) throw InvalidArgument("the variable occurs in the conclusion");
      Formula phi = instantiate(ex, *side);
      Sequent h{{}, {Formula::imp(phi, psi)}};
      expect_premises(premises, {h}, r);
      Proof cut = cut_out_implication(h, phi, psi);
      Proof gen = node(Sequent{{ex}, {psi}}, RuleId::ExistsL, ex, {cut}, side);
      return node(conclusion, RuleId::ImpR, principal, {gen});
    }
  }
  throw InternalError("unhandled derived rule");
}

// ---------------------------------------------------------------------------
// Generalized subformula property
// ---------------------------------------------------------------------------

namespace {

CheckResult gsub_node(const Proof& p, const FormulaSet& allowed, std::vector<std::size_t>& path) {
  for (const auto& f : formulas_of(p.sequent))
    if (!allowed.count(f)) return CheckResult{false, "formula outside the generalized subformulas", path};
  for (std::size_t i = 0; i < p.premises.size(); ++i) {
    path.push_back(i);
    CheckResult r = gsub_node(p.premises[i], allowed, path);
    path.pop_back();
    if (!r) return r;
  }
  return {};
}

}  // namespace

CheckResult check_subformula_property(const Proof& p) {
  FormulaSet allowed;
  for (const auto& f : formulas_of(p.sequent)) {
    auto g = gsub(f);
    allowed.insert(g.begin(), g.end());
  }
  std::vector<std::size_t> path;
  return gsub_node(p, allowed, path);
}

}  // namespace ciore
