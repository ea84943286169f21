#include "ciore/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace ciore {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_term(const Term& t) {
  std::size_t h = mix(static_cast<std::size_t>(t.kind()), std::hash<std::string>{}(t.name()));
  for (const auto& a : t.args()) h = mix(h, hash_term(a));
  return h;
}

}  // namespace

// ---------------------------------------------------------------------------
// Term
// ---------------------------------------------------------------------------

Term Term::free_var(std::string name) {
  if (!is_free_var_name(name)) throw InvalidArgument("not a free-variable name: " + name);
  return Term(TermKind::FreeVar, std::move(name), {});
}

Term Term::bound_var(std::string name) {
  if (name.empty() || is_free_var_name(name)) throw InvalidArgument("not a bound-variable name: " + name);
  return Term(TermKind::BoundVar, std::move(name), {});
}

Term Term::constant(std::string name) {
  if (name.empty() || is_free_var_name(name)) throw InvalidArgument("not a constant name: " + name);
  return Term(TermKind::Const, std::move(name), {});
}

Term Term::apply(std::string name, std::vector<Term> args) {
  if (args.empty()) throw InvalidArgument("function application needs arguments: " + name);
  if (is_free_var_name(name)) throw InvalidArgument("not a function name: " + name);
  return Term(TermKind::FunApp, std::move(name), std::move(args));
}

bool Term::contains_bound_var() const {
  if (kind_ == TermKind::BoundVar) return true;
  return std::any_of(args_.begin(), args_.end(), [](const Term& a) { return a.contains_bound_var(); });
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.name_ <=> b.name_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.args_.begin(), a.args_.end(), b.args_.begin(), b.args_.end());
}

// ---------------------------------------------------------------------------
// Formula
// ---------------------------------------------------------------------------

Formula Formula::make(Connective op, std::string name, std::vector<Term> terms, const Formula* lhs,
                      const Formula* rhs) {
  auto node = std::make_shared<FormulaNode>();
  node->op = op;
  node->name = std::move(name);
  node->terms = std::move(terms);
  if (lhs) node->lhs = *lhs;
  if (rhs) node->rhs = *rhs;
  std::size_t h = mix(static_cast<std::size_t>(op) + 1, std::hash<std::string>{}(node->name));
  for (const auto& t : node->terms) h = mix(h, hash_term(t));
  if (node->lhs) h = mix(h, node->lhs->hash());
  if (node->rhs) h = mix(h, node->rhs->hash());
  node->hash = h;
  return Formula(std::move(node));
}

Formula Formula::atom(std::string name) {
  if (name.empty()) throw InvalidArgument("empty atom name");
  return make(Connective::PropAtom, std::move(name), {}, nullptr, nullptr);
}

Formula Formula::pred(std::string name, std::vector<Term> terms) {
  if (name.empty()) throw InvalidArgument("empty predicate name");
  if (terms.empty()) throw InvalidArgument("predicate needs arguments: " + name);
  return make(Connective::PredAtom, std::move(name), std::move(terms), nullptr, nullptr);
}

Formula Formula::neg(Formula f) { return make(Connective::Neg, {}, {}, &f, nullptr); }
Formula Formula::circ(Formula f) { return make(Connective::Circ, {}, {}, &f, nullptr); }
Formula Formula::conj(Formula a, Formula b) { return make(Connective::And, {}, {}, &a, &b); }
Formula Formula::disj(Formula a, Formula b) { return make(Connective::Or, {}, {}, &a, &b); }
Formula Formula::imp(Formula a, Formula b) { return make(Connective::Imp, {}, {}, &a, &b); }

Formula Formula::iff(const Formula& a, const Formula& b) { return conj(imp(a, b), imp(b, a)); }

Formula Formula::forall(std::string var, Formula body) {
  return quantified(Quantifier::Forall, std::move(var), std::move(body));
}

Formula Formula::exists(std::string var, Formula body) {
  return quantified(Quantifier::Exists, std::move(var), std::move(body));
}

Formula Formula::quantified(Quantifier q, std::string var, Formula body) {
  if (var.empty() || is_free_var_name(var)) throw InvalidArgument("not a bound-variable name: " + var);
  return make(q == Quantifier::Forall ? Connective::Forall : Connective::Exists, std::move(var), {}, &body,
              nullptr);
}

Connective Formula::op() const { return node_->op; }
const std::string& Formula::name() const { return node_->name; }
const std::vector<Term>& Formula::terms() const { return node_->terms; }

const Formula& Formula::sub() const {
  if (!node_->lhs || node_->rhs) throw InvalidArgument("formula has no single operand");
  return *node_->lhs;
}

const Formula& Formula::left() const {
  if (!node_->rhs) throw InvalidArgument("formula is not binary");
  return *node_->lhs;
}

const Formula& Formula::right() const {
  if (!node_->rhs) throw InvalidArgument("formula is not binary");
  return *node_->rhs;
}

bool Formula::is_literal() const { return is_atom() || (is_neg() && sub().is_atom()); }

std::size_t Formula::hash() const { return node_->hash; }

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const FormulaNode& x = *a.node_;
  const FormulaNode& y = *b.node_;
  if (auto c = x.op <=> y.op; c != 0) return c;
  if (auto c = x.name <=> y.name; c != 0) return c;
  if (auto c = std::lexicographical_compare_three_way(x.terms.begin(), x.terms.end(), y.terms.begin(),
                                                      y.terms.end());
      c != 0)
    return c;
  if (x.lhs) {
    if (auto c = *x.lhs <=> *y.lhs; c != 0) return c;
  }
  if (x.rhs) return *x.rhs <=> *y.rhs;
  return std::strong_ordering::equal;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash) return false;
  return (a <=> b) == 0;
}

// ---------------------------------------------------------------------------
// Names
// ---------------------------------------------------------------------------

bool is_free_var_name(const std::string& name) {
  if (name.size() < 2 || name[0] != 'a' || name[1] == '0') return false;
  return std::all_of(name.begin() + 1, name.end(), [](unsigned char c) { return std::isdigit(c); });
}

unsigned free_var_index(const std::string& name) {
  if (!is_free_var_name(name)) throw InvalidArgument("not a free-variable name: " + name);
  return static_cast<unsigned>(std::stoul(name.substr(1)));
}

bool FreeVarLess::operator()(const std::string& a, const std::string& b) const {
  bool fa = is_free_var_name(a), fb = is_free_var_name(b);
  if (fa && fb) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
  if (fa != fb) return fa;
  return a < b;
}

// ---------------------------------------------------------------------------
// Signature and well-formedness
// ---------------------------------------------------------------------------

void Signature::validate() const {
  for (const auto& [n, k] : predicates) {
    if (k == 0) throw InvalidArgument("predicate arity must be positive: " + n);
    if (functions.count(n) || constants.count(n)) throw InvalidArgument("symbol used with two kinds: " + n);
  }
  for (const auto& [n, k] : functions) {
    if (k == 0) throw InvalidArgument("function arity must be positive: " + n);
    if (constants.count(n)) throw InvalidArgument("symbol used with two kinds: " + n);
  }
}

namespace {

void absorb_term(Signature& sig, const Term& t) {
  switch (t.kind()) {
    case TermKind::Const:
      if (sig.functions.count(t.name()) || sig.predicates.count(t.name()))
        throw InvalidArgument("symbol used with two kinds: " + t.name());
      sig.constants.insert(t.name());
      break;
    case TermKind::FunApp: {
      if (sig.constants.count(t.name()) || sig.predicates.count(t.name()))
        throw InvalidArgument("symbol used with two kinds: " + t.name());
      auto [it, fresh] = sig.functions.emplace(t.name(), t.args().size());
      if (!fresh && it->second != t.args().size()) throw InvalidArgument("inconsistent arity for " + t.name());
      for (const auto& a : t.args()) absorb_term(sig, a);
      break;
    }
    default:
      break;
  }
}

}  // namespace

void Signature::absorb(const Formula& f) {
  switch (f.op()) {
    case Connective::PropAtom:
      break;
    case Connective::PredAtom: {
      if (functions.count(f.name()) || constants.count(f.name()))
        throw InvalidArgument("symbol used with two kinds: " + f.name());
      auto [it, fresh] = predicates.emplace(f.name(), f.terms().size());
      if (!fresh && it->second != f.terms().size()) throw InvalidArgument("inconsistent arity for " + f.name());
      for (const auto& t : f.terms()) absorb_term(*this, t);
      break;
    }
    case Connective::Neg:
    case Connective::Circ:
    case Connective::Forall:
    case Connective::Exists:
      absorb(f.sub());
      break;
    default:
      absorb(f.left());
      absorb(f.right());
  }
}

Signature infer_signature(const std::vector<Formula>& formulas) {
  Signature sig;
  for (const auto& f : formulas) sig.absorb(f);
  return sig;
}

namespace {

void check_term(const Term& t, const std::vector<std::string>& scope, const Signature* sig) {
  switch (t.kind()) {
    case TermKind::FreeVar:
      if (!is_free_var_name(t.name())) throw InvalidArgument("bad free variable " + t.name());
      break;
    case TermKind::BoundVar:
      if (std::find(scope.begin(), scope.end(), t.name()) == scope.end())
        throw InvalidArgument("bound variable " + t.name() + " outside its binder");
      break;
    case TermKind::Const:
      if (sig && !sig->constants.count(t.name())) throw InvalidArgument("unknown constant " + t.name());
      break;
    case TermKind::FunApp:
      if (sig) {
        auto it = sig->functions.find(t.name());
        if (it == sig->functions.end() || it->second != t.args().size())
          throw InvalidArgument("function " + t.name() + " does not match the signature");
      }
      for (const auto& a : t.args()) check_term(a, scope, sig);
      break;
  }
}

void check_formula(const Formula& f, std::vector<std::string>& scope, const Signature* sig) {
  switch (f.op()) {
    case Connective::PropAtom:
      break;
    case Connective::PredAtom:
      if (sig) {
        auto it = sig->predicates.find(f.name());
        if (it == sig->predicates.end() || it->second != f.terms().size())
          throw InvalidArgument("predicate " + f.name() + " does not match the signature");
      }
      for (const auto& t : f.terms()) check_term(t, scope, sig);
      break;
    case Connective::Neg:
    case Connective::Circ:
      check_formula(f.sub(), scope, sig);
      break;
    case Connective::Forall:
    case Connective::Exists:
      if (std::find(scope.begin(), scope.end(), f.name()) != scope.end())
        throw InvalidArgument("nested rebinding of " + f.name());
      scope.push_back(f.name());
      check_formula(f.sub(), scope, sig);
      scope.pop_back();
      break;
    default:
      check_formula(f.left(), scope, sig);
      check_formula(f.right(), scope, sig);
  }
}

}  // namespace

void check_well_formed(const Formula& f) {
  std::vector<std::string> scope;
  check_formula(f, scope, nullptr);
  infer_signature({f}).validate();
}

void check_well_formed(const Formula& f, const Signature& sig) {
  sig.validate();
  std::vector<std::string> scope;
  check_formula(f, scope, &sig);
}

bool is_quantifier_free(const Formula& f) {
  switch (f.op()) {
    case Connective::PropAtom:
    case Connective::PredAtom:
      return true;
    case Connective::Forall:
    case Connective::Exists:
      return false;
    case Connective::Neg:
    case Connective::Circ:
      return is_quantifier_free(f.sub());
    default:
      return is_quantifier_free(f.left()) && is_quantifier_free(f.right());
  }
}

bool is_propositional(const Formula& f) {
  switch (f.op()) {
    case Connective::PropAtom:
      return true;
    case Connective::PredAtom:
    case Connective::Forall:
    case Connective::Exists:
      return false;
    case Connective::Neg:
    case Connective::Circ:
      return is_propositional(f.sub());
    default:
      return is_propositional(f.left()) && is_propositional(f.right());
  }
}

namespace {
bool term_has_symbols(const Term& t) { return t.kind() == TermKind::Const || t.kind() == TermKind::FunApp; }
}  // namespace

bool has_function_symbols_or_constants(const Formula& f) {
  switch (f.op()) {
    case Connective::PropAtom:
      return false;
    case Connective::PredAtom:
      return std::any_of(f.terms().begin(), f.terms().end(), term_has_symbols);
    case Connective::Neg:
    case Connective::Circ:
    case Connective::Forall:
    case Connective::Exists:
      return has_function_symbols_or_constants(f.sub());
    default:
      return has_function_symbols_or_constants(f.left()) || has_function_symbols_or_constants(f.right());
  }
}

// ---------------------------------------------------------------------------
// Substitution and binding
// ---------------------------------------------------------------------------

namespace {

// Replaces terms matching `match` by `by`.
Term replace_term(const Term& term, const Term& match, const Term& by) {
  if (term == match) return by;
  if (term.kind() != TermKind::FunApp) return term;
  std::vector<Term> args;
  args.reserve(term.args().size());
  for (const auto& a : term.args()) args.push_back(replace_term(a, match, by));
  return Term::apply(term.name(), std::move(args));
}

Formula replace(const Formula& f, const Term& match, const Term& by) {
  switch (f.op()) {
    case Connective::PropAtom:
      return f;
    case Connective::PredAtom: {
      std::vector<Term> ts;
      ts.reserve(f.terms().size());
      bool changed = false;
      for (const auto& t : f.terms()) {
        ts.push_back(replace_term(t, match, by));
        changed = changed || !(ts.back() == t);
      }
      return changed ? Formula::pred(f.name(), std::move(ts)) : f;
    }
    case Connective::Neg: {
      Formula s = replace(f.sub(), match, by);
      return s == f.sub() ? f : Formula::neg(s);
    }
    case Connective::Circ: {
      Formula s = replace(f.sub(), match, by);
      return s == f.sub() ? f : Formula::circ(s);
    }
    case Connective::Forall:
    case Connective::Exists: {
      Formula s = replace(f.sub(), match, by);
      if (s == f.sub()) return f;
      return Formula::quantified(f.op() == Connective::Forall ? Quantifier::Forall : Quantifier::Exists, f.name(), s);
    }
    default: {
      Formula l = replace(f.left(), match, by);
      Formula r = replace(f.right(), match, by);
      if (l == f.left() && r == f.right()) return f;
      if (f.op() == Connective::And) return Formula::conj(l, r);
      if (f.op() == Connective::Or) return Formula::disj(l, r);
      return Formula::imp(l, r);
    }
  }
}

bool term_mentions(const Term& t, const std::string& bound) {
  if (t.kind() == TermKind::BoundVar && t.name() == bound) return true;
  return std::any_of(t.args().begin(), t.args().end(), [&](const Term& a) { return term_mentions(a, bound); });
}

bool mentions_bound(const Formula& f, const std::string& bound) {
  switch (f.op()) {
    case Connective::PropAtom:
      return false;
    case Connective::PredAtom:
      return std::any_of(f.terms().begin(), f.terms().end(), [&](const Term& t) { return term_mentions(t, bound); });
    case Connective::Forall:
    case Connective::Exists:
      return f.name() == bound || mentions_bound(f.sub(), bound);
    case Connective::Neg:
    case Connective::Circ:
      return mentions_bound(f.sub(), bound);
    default:
      return mentions_bound(f.left(), bound) || mentions_bound(f.right(), bound);
  }
}

}  // namespace

Term substitute(const Term& term, const std::string& var, const Term& t) {
  if (t.contains_bound_var()) throw InvalidArgument("substituted term contains a bound variable");
  return replace_term(term, Term::free_var(var), t);
}

Formula substitute(const Formula& f, const std::string& var, const Term& t) {
  if (t.contains_bound_var()) throw InvalidArgument("substituted term contains a bound variable");
  return replace(f, Term::free_var(var), t);
}

Formula bind(const Formula& f, const std::string& var, const std::string& bound, Quantifier q) {
  if (mentions_bound(f, bound)) throw InvalidArgument("bound variable " + bound + " already occurs");
  return Formula::quantified(q, bound, replace(f, Term::free_var(var), Term::bound_var(bound)));
}

Formula instantiate(const Formula& quantified, const Term& t) {
  if (!quantified.is_quantifier()) throw InvalidArgument("instantiate needs a quantified formula");
  if (t.contains_bound_var()) throw InvalidArgument("instantiating term contains a bound variable");
  return replace(quantified.sub(), Term::bound_var(quantified.name()), t);
}

// ---------------------------------------------------------------------------
// Measures
// ---------------------------------------------------------------------------

std::size_t complexity(const Formula& f) {
  switch (f.op()) {
    case Connective::PropAtom:
    case Connective::PredAtom:
      return 0;
    case Connective::Neg:
    case Connective::Circ:
    case Connective::Forall:
    case Connective::Exists:
      return 1 + complexity(f.sub());
    default:
      return 1 + complexity(f.left()) + complexity(f.right());
  }
}

std::size_t size(const Formula& f) {
  switch (f.op()) {
    case Connective::PropAtom:
    case Connective::PredAtom:
      return 1;
    case Connective::Neg:
    case Connective::Circ:
    case Connective::Forall:
    case Connective::Exists:
      return 1 + size(f.sub());
    default:
      return 1 + size(f.left()) + size(f.right());
  }
}

std::size_t weight(const Formula& f) {
  if (f.is_quantifier()) throw InvalidArgument("weight is defined on quantifier-free formulas");
  if (f.is_literal()) return 0;
  if (f.is_binary()) return weight(f.left()) + weight(f.right()) + 1;
  if (f.is_circ()) return weight(f.sub()) + weight(Formula::neg(f.sub())) + 1;
  const Formula& g = f.sub();  // f = ~g, g not an atom
  if (g.is_quantifier()) throw InvalidArgument("weight is defined on quantifier-free formulas");
  if (g.is_neg()) return weight(g) + 1;
  if (g.is_circ()) return weight(g) + 1;
  return weight(g.left()) + weight(Formula::neg(g.left())) + weight(g.right()) + weight(Formula::neg(g.right())) + 2;
}

std::size_t weight(const FormulaSet& fs) {
  std::size_t w = 0;
  for (const auto& f : fs) w += weight(f);
  return w;
}

namespace {

void gsub_into(const Formula& f, FormulaSet& out) {
  if (!out.insert(f).second) return;
  switch (f.op()) {
    case Connective::PropAtom:
    case Connective::PredAtom:
      return;
    case Connective::Neg: {
      const Formula& g = f.sub();
      gsub_into(g, out);
      if (g.is_binary()) {
        gsub_into(Formula::neg(g.left()), out);
        gsub_into(Formula::neg(g.right()), out);
      }
      return;
    }
    case Connective::Circ:
      gsub_into(Formula::neg(f.sub()), out);
      return;
    case Connective::Forall:
    case Connective::Exists:
      throw InvalidArgument("gsub is defined on quantifier-free formulas");
    default:
      gsub_into(f.left(), out);
      gsub_into(f.right(), out);
  }
}

void term_vars(const Term& t, std::set<std::string>& out) {
  if (t.kind() == TermKind::FreeVar) out.insert(t.name());
  for (const auto& a : t.args()) term_vars(a, out);
}

void formula_vars(const Formula& f, std::set<std::string>& out) {
  switch (f.op()) {
    case Connective::PropAtom:
      return;
    case Connective::PredAtom:
      for (const auto& t : f.terms()) term_vars(t, out);
      return;
    case Connective::Neg:
    case Connective::Circ:
    case Connective::Forall:
    case Connective::Exists:
      formula_vars(f.sub(), out);
      return;
    default:
      formula_vars(f.left(), out);
      formula_vars(f.right(), out);
  }
}

void atoms_into(const Formula& f, std::set<std::string>& out) {
  switch (f.op()) {
    case Connective::PropAtom:
      out.insert(f.name());
      return;
    case Connective::PredAtom:
      return;
    case Connective::Neg:
    case Connective::Circ:
    case Connective::Forall:
    case Connective::Exists:
      atoms_into(f.sub(), out);
      return;
    default:
      atoms_into(f.left(), out);
      atoms_into(f.right(), out);
  }
}

}  // namespace

FormulaSet gsub(const Formula& f) {
  FormulaSet out;
  gsub_into(f, out);
  return out;
}

std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> out;
  formula_vars(f, out);
  return out;
}

std::set<std::string> free_variables(const Term& t) {
  std::set<std::string> out;
  term_vars(t, out);
  return out;
}

std::string fresh_free_variable(const std::set<std::string>& avoid) {
  for (unsigned i = 1;; ++i) {
    std::string name = "a" + std::to_string(i);
    if (!avoid.count(name)) return name;
  }
}

std::set<std::string> atoms(const Formula& f) {
  std::set<std::string> out;
  atoms_into(f, out);
  return out;
}

}  // namespace ciore
