#include "ciore/fo_prover.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "ciore/parser.hpp"

namespace ciore {

namespace {

const std::array<std::string, kPhaseCount> kPhaseNames = {
    "(o|-)",      "(|-o)",      "(|-~)",       "(~o|-)",     "(&|-)",       "(|-&)",         "(v|-)",
    "(|-v)",      "(->|-)",     "(|-->)",      "(~v|-)",     "(|-~v)",      "(~&|-)",        "(|-~&)",
    "(~->|-)",    "(|-~->)",    "(~~|-)",      "(|-~~)",     "(forall|-)",  "(|-forall)",    "(exists|-)",
    "(|-exists)", "(oforall|-)", "(|-oforall)", "(oexists|-)", "(|-oexists)", "(copy)",
};

const std::array<RuleId, kPhaseCount - 1> kPhaseRules = {
    RuleId::CircL,       RuleId::CircR,       RuleId::NegR,        RuleId::NegCircL,    RuleId::AndL,
    RuleId::AndR,        RuleId::OrL,         RuleId::OrR,         RuleId::ImpL,        RuleId::ImpR,
    RuleId::NegOrL,      RuleId::NegOrR,      RuleId::NegAndL,     RuleId::NegAndR2,    RuleId::NegImpL,
    RuleId::NegImpR2,    RuleId::NegNegL,     RuleId::NegNegR,     RuleId::ForallL,     RuleId::ForallR,
    RuleId::ExistsL,     RuleId::ExistsR,     RuleId::CircForallL, RuleId::CircForallR, RuleId::CircExistsL,
    RuleId::CircExistsR,
};

}  // namespace

const std::string& phase_name(Phase p) { return kPhaseNames[static_cast<std::size_t>(p)]; }

Phase phase_at_stage(std::size_t k) { return static_cast<Phase>(k % kPhaseCount); }

RuleId phase_rule(Phase p) {
  if (p == Phase::Copy) throw InvalidArgument("the copy phase applies no rule");
  return kPhaseRules[static_cast<std::size_t>(p)];
}

const std::string& status_name(NodeStatus s) {
  static const std::array<std::string, 5> names = {"closed", "expanded", "saturated", "unverified", "unexpanded"};
  return names[static_cast<std::size_t>(s)];
}

const std::string& status_name(FoVerdict::Status s) {
  static const std::array<std::string, 3> names = {"proved", "refuted", "unknown"};
  return names[static_cast<std::size_t>(s)];
}

std::vector<std::size_t> ReductionTree::branch(std::size_t leaf) const {
  std::vector<std::size_t> out;
  std::optional<std::size_t> cur = leaf;
  while (cur) {
    out.push_back(*cur);
    cur = nodes[*cur].parent;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::size_t ReductionTree::max_depth() const {
  std::size_t d = 0;
  for (const auto& n : nodes) d = std::max(d, n.depth);
  return d;
}

namespace {

struct Planned {
  Reduction reduction;
  std::vector<PremiseShape> shapes;
};

const Term kProbe = Term::free_var("a1");

bool fits(Phase ph, const Formula& f) { return rule_premises(phase_rule(ph), f, kProbe).has_value() || rule_premises(phase_rule(ph), f, std::nullopt).has_value(); }

void require_prover_input(const Sequent& s) {
  for (const auto& f : formulas_of(s)) {
    check_well_formed(f);
    if (has_function_symbols_or_constants(f))
      throw InvalidArgument("the reduction tree handles no function symbols or constants");
  }
  infer_signature(formulas_of(s)).validate();
}

class Builder {
 public:
  Builder(const Sequent& root, const Budget& budget, bool early_stop)
      : root_(root), budget_(budget), early_stop_(early_stop) {
    ReductionNode n;
    n.sequent = root;
    auto fv = free_variables(root);
    n.available.assign(fv.begin(), fv.end());
    std::sort(n.available.begin(), n.available.end(), FreeVarLess{});
    if (n.available.empty()) n.available.push_back("a1");
    tree_.nodes.push_back(std::move(n));
  }

  void run() { expand(0); }

  ReductionTree& tree() { return tree_; }
  std::optional<std::size_t> refuting_leaf() const { return found_; }

 private:
  std::vector<Planned> plan(std::size_t id, Phase ph) const {
    std::vector<Planned> out;
    if (ph == Phase::Copy) return out;
    const ReductionNode& n = tree_.nodes[id];
    const RuleId rule = phase_rule(ph);
    const bool left = principal_on_left(rule);
    std::vector<std::string> taken;  // new variables handed out in this step
    for (const Formula& f : left ? n.sequent.ante : n.sequent.succ) {
      if (!fits(ph, f)) continue;
      std::optional<Term> side;
      if (is_instance_rule(rule)) {
        auto it = n.used.find({f, ph});
        for (const auto& v : n.available) {
          if (it == n.used.end() || !it->second.count(v)) {
            side = Term::free_var(v);
            break;
          }
        }
        if (!side) continue;
      } else {
        if (n.marks.count({f, ph})) continue;
        if (is_eigenvariable_rule(rule)) {
          for (unsigned i = 1;; ++i) {
            std::string v = "a" + std::to_string(i);
            if (std::find(n.available.begin(), n.available.end(), v) != n.available.end()) continue;
            if (std::find(taken.begin(), taken.end(), v) != taken.end()) continue;
            taken.push_back(v);
            side = Term::free_var(v);
            break;
          }
        }
      }
      auto shapes = rule_premises(rule, f, side);
      if (!shapes) throw InternalError("phase principal does not fit its rule");
      out.push_back(Planned{Reduction{ph, f, side, shapes->size()}, std::move(*shapes)});
    }
    return out;
  }

  void expand(std::size_t id) {
    if (tree_.nodes[id].sequent.closed()) {
      tree_.nodes[id].status = NodeStatus::Closed;
      return;
    }
    std::size_t k = tree_.nodes[id].stage + 1;
    for (std::size_t idle = 0; idle < kPhaseCount; ++k) {
      Phase ph = phase_at_stage(k);
      std::vector<Planned> planned = plan(id, ph);
      if (planned.empty()) {
        ++idle;
        continue;
      }
      std::size_t count = 1;
      for (const auto& p : planned) count *= p.shapes.size();
      if (tree_.nodes[id].depth + 1 > budget_.max_depth || tree_.nodes.size() + count > budget_.max_nodes) {
        tree_.nodes[id].status = NodeStatus::Unexpanded;
        tree_.budget_exhausted = true;
        return;
      }
      std::vector<std::size_t> kids;
      for (std::size_t idx = 0; idx < count; ++idx) {
        const ReductionNode& n = tree_.nodes[id];
        ReductionNode c;
        c.sequent = n.sequent;
        c.stage = k;
        c.depth = n.depth + 1;
        c.parent = id;
        c.marks = n.marks;
        c.used = n.used;
        c.available = n.available;
        std::size_t rest = idx;
        std::vector<std::size_t> digits(planned.size());
        for (std::size_t i = planned.size(); i > 0; --i) {
          digits[i - 1] = rest % planned[i - 1].shapes.size();
          rest /= planned[i - 1].shapes.size();
        }
        for (std::size_t i = 0; i < planned.size(); ++i) {
          const Planned& p = planned[i];
          const PremiseShape& shape = p.shapes[digits[i]];
          c.sequent.ante.insert(shape.ante.begin(), shape.ante.end());
          c.sequent.succ.insert(shape.succ.begin(), shape.succ.end());
          const RuleId rule = phase_rule(ph);
          if (is_instance_rule(rule)) {
            c.used[{p.reduction.principal, ph}].insert(p.reduction.side->name());
          } else {
            c.marks.insert({p.reduction.principal, ph});
            if (is_eigenvariable_rule(rule)) c.available.push_back(p.reduction.side->name());
          }
        }
        tree_.nodes.push_back(std::move(c));
        kids.push_back(tree_.nodes.size() - 1);
      }
      ReductionNode& n = tree_.nodes[id];
      n.children = kids;
      n.step_stage = k;
      for (auto& p : planned) n.step.push_back(p.reduction);
      n.status = NodeStatus::Expanded;
      for (auto kid : kids) {
        if (stop_) break;
        expand(kid);
      }
      return;
    }
    saturated(id);
  }

  void saturated(std::size_t id) {
    auto [st, asg] = extract_countermodel(tree_, id);
    bool refutes = false;
    try {
      refutes = !fo_sequent_satisfied(st, asg, root_);
    } catch (const InvalidArgument&) {
      refutes = false;
    }
    tree_.nodes[id].status = refutes ? NodeStatus::Saturated : NodeStatus::Unverified;
    if (refutes && !found_) found_ = id;
    if (refutes && early_stop_) stop_ = true;
  }

  Sequent root_;
  Budget budget_;
  bool early_stop_;
  bool stop_ = false;
  std::optional<std::size_t> found_;
  ReductionTree tree_;
};

Proof close_leaf(const Sequent& s) {
  for (const auto& f : s.ante) {
    if (!s.succ.count(f)) continue;
    Proof ax{Sequent{{f}, {f}}, RuleId::Axiom, f, std::nullopt, {}};
    if (s.ante.size() == 1 && s.succ.size() == 1) return ax;
    return Proof{s, RuleId::Weakenings, std::nullopt, std::nullopt, {std::move(ax)}};
  }
  throw InternalError("closing an open leaf");
}

Proof compile_node(const ReductionTree& t, std::size_t id);

Proof compile_chain(const ReductionTree& t, std::size_t id, const Sequent& seq, std::size_t i, std::size_t prefix) {
  const ReductionNode& n = t.nodes[id];
  if (i == n.step.size()) {
    std::size_t child = n.children.at(prefix);
    if (!(t.nodes[child].sequent == seq)) throw InternalError("compiled chain diverges from the reduction tree");
    return compile_node(t, child);
  }
  const Reduction& red = n.step[i];
  const RuleId rule = phase_rule(red.phase);
  auto shapes = rule_premises(rule, red.principal, red.side);
  if (!shapes) throw InternalError("recorded reduction does not fit its rule");
  Proof p{seq, rule, red.principal, red.side, {}};
  for (std::size_t j = 0; j < shapes->size(); ++j) {
    Sequent prem = seq;
    prem.ante.insert((*shapes)[j].ante.begin(), (*shapes)[j].ante.end());
    prem.succ.insert((*shapes)[j].succ.begin(), (*shapes)[j].succ.end());
    p.premises.push_back(compile_chain(t, id, prem, i + 1, prefix * shapes->size() + j));
  }
  return p;
}

Proof compile_node(const ReductionTree& t, std::size_t id) {
  const ReductionNode& n = t.nodes[id];
  switch (n.status) {
    case NodeStatus::Closed:
      return close_leaf(n.sequent);
    case NodeStatus::Expanded:
      return compile_chain(t, id, n.sequent, 0, 0);
    default:
      throw InvalidArgument("reduction tree has an open leaf");
  }
}

void dump_node(const ReductionTree& t, std::size_t id, std::ostringstream& out) {
  const ReductionNode& n = t.nodes[id];
  out << std::string(2 * n.depth, ' ') << "k=" << n.stage << ' ' << phase_name(phase_at_stage(n.stage)) << ' '
      << to_string(n.sequent);
  if (n.parent) {
    const ReductionNode& p = t.nodes[*n.parent];
    out << " [";
    for (std::size_t i = 0; i < p.step.size(); ++i) {
      if (i) out << "; ";
      out << phase_name(p.step[i].phase) << ' ' << to_string(p.step[i].principal);
      if (p.step[i].side) out << " @" << p.step[i].side->name();
    }
    out << ']';
  }
  if (n.status != NodeStatus::Expanded) out << ' ' << status_name(n.status);
  out << '\n';
  for (auto c : n.children) dump_node(t, c, out);
}

}  // namespace

ReductionTree build_reduction_tree(const Sequent& s, const Budget& budget) {
  require_prover_input(s);
  Builder b(s, budget, false);
  b.run();
  return std::move(b.tree());
}

std::string dump_reduction_tree(const ReductionTree& t) {
  std::ostringstream out;
  if (!t.nodes.empty()) dump_node(t, 0, out);
  if (t.budget_exhausted) out << "budget exhausted\n";
  return out.str();
}

std::pair<Structure, Assignment> extract_countermodel(const ReductionTree& t, std::size_t leaf) {
  FormulaSet gamma, delta;
  for (auto id : t.branch(leaf)) {
    gamma.insert(t.nodes[id].sequent.ante.begin(), t.nodes[id].sequent.ante.end());
    delta.insert(t.nodes[id].sequent.succ.begin(), t.nodes[id].sequent.succ.end());
  }
  std::vector<Formula> all(gamma.begin(), gamma.end());
  all.insert(all.end(), delta.begin(), delta.end());

  std::set<std::string> vars;
  std::set<std::string> props;
  for (const auto& f : all) {
    auto v = free_variables(f);
    vars.insert(v.begin(), v.end());
    auto p = atoms(f);
    props.insert(p.begin(), p.end());
  }
  Structure st;
  st.domain.assign(vars.begin(), vars.end());
  std::sort(st.domain.begin(), st.domain.end(), FreeVarLess{});
  if (st.domain.empty()) st.domain.push_back("a1");

  auto recipe = [&](const Formula& atom) {
    if (!gamma.count(atom)) return TruthValue::Zero;
    return gamma.count(Formula::neg(atom)) ? TruthValue::Half : TruthValue::One;
  };

  Signature sig = infer_signature(all);
  for (const auto& [name, arity] : sig.predicates) {
    st.add_predicate(name, arity);
    for (std::size_t idx = 0; idx < st.tuple_count(arity); ++idx) {
      auto tuple = st.tuple_at(idx, arity);
      std::vector<Term> terms;
      for (auto e : tuple) terms.push_back(Term::free_var(st.domain[e]));
      st.predicates[name].values[idx] = recipe(Formula::pred(name, terms));
    }
  }
  for (const auto& p : props) st.propositions[p] = recipe(Formula::atom(p));

  Assignment asg;
  for (std::size_t i = 0; i < st.domain.size(); ++i)
    if (is_free_var_name(st.domain[i])) asg[st.domain[i]] = i;
  return {std::move(st), std::move(asg)};
}

Proof compile_proof(const ReductionTree& t) {
  if (t.nodes.empty()) throw InvalidArgument("empty reduction tree");
  return compile_node(t, 0);
}

FoVerdict decide_fo(const Sequent& s, const Budget& budget) {
  require_prover_input(s);
  Builder b(s, budget, true);
  b.run();
  ReductionTree& t = b.tree();
  FoVerdict v;
  v.nodes = t.nodes.size();
  if (auto leaf = b.refuting_leaf()) {
    auto [st, asg] = extract_countermodel(t, *leaf);
    v.status = FoVerdict::Status::Refuted;
    v.structure = std::move(st);
    v.assignment = std::move(asg);
    v.report = "saturated branch at depth " + std::to_string(t.nodes[*leaf].depth);
    return v;
  }
  std::size_t unverified = 0, cut_off = 0;
  for (const auto& n : t.nodes) {
    if (n.status == NodeStatus::Unverified) ++unverified;
    if (n.status == NodeStatus::Unexpanded) ++cut_off;
  }
  if (unverified == 0 && cut_off == 0 && !t.budget_exhausted) {
    v.status = FoVerdict::Status::Proved;
    v.proof = compile_proof(t);
    v.report = "all branches closed";
    return v;
  }
  v.status = FoVerdict::Status::Unknown;
  v.report = "nodes=" + std::to_string(t.nodes.size()) + " max_depth=" + std::to_string(t.max_depth()) +
             " budget_exhausted=" + (t.budget_exhausted ? "true" : "false") +
             " unverified_branches=" + std::to_string(unverified);
  return v;
}

std::vector<FoRegressionCase> fo_regression_suite() {
  using F = Formula;
  const Term b = Term::free_var("a1");
  const F pb = F::pred("P", {b});
  const F px = F::pred("P", {Term::bound_var("x")});
  const F ex_circ = F::exists("x", F::circ(px));
  auto thm = [](F f) { return Sequent{{}, {std::move(f)}}; };

  std::vector<FoRegressionCase> out = {
      {"i", thm(F::imp(pb, F::exists("x", px))), std::nullopt, {}},
      {"ii", thm(F::imp(F::forall("x", px), pb)), std::nullopt, {}},
      {"iii", thm(F::iff(F::circ(F::exists("x", px)), ex_circ)), std::nullopt, {}},
      {"iv", thm(F::iff(F::circ(F::forall("x", px)), ex_circ)), std::nullopt, {}},
  };

  const F q = F::pred("Q", {Term::free_var("a2")});
  {
    F goal = F::imp(q, F::forall("x", px));
    Sequent concl = thm(goal);
    Sequent hyp = thm(F::imp(q, pb));
    out.push_back({"forall-intro", concl, expand_derived_rule(DerivedRule::ForallIntro, concl, {hyp}, goal, b), {hyp}});
  }
  {
    F goal = F::imp(F::exists("x", px), q);
    Sequent concl = thm(goal);
    Sequent hyp = thm(F::imp(pb, q));
    out.push_back({"exists-intro", concl, expand_derived_rule(DerivedRule::ExistsIntro, concl, {hyp}, goal, b), {hyp}});
  }
  return out;
}

}  // namespace ciore
