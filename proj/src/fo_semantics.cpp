#include "ciore/fo_semantics.hpp"

#include <algorithm>

namespace ciore {

// ---------------------------------------------------------------------------
// Triples
// ---------------------------------------------------------------------------

std::set<std::size_t> Triple::component(TruthValue v) const {
  std::set<std::size_t> out;
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] == v) out.insert(i);
  return out;
}

Triple Triple::from_components(std::size_t n, const std::set<std::size_t>& plus, const std::set<std::size_t>& minus,
                               const std::set<std::size_t>& circ) {
  std::vector<int> seen(n, 0);
  std::vector<TruthValue> vals(n, TruthValue::Zero);
  auto put = [&](const std::set<std::size_t>& xs, TruthValue v) {
    for (auto x : xs) {
      if (x >= n) throw InvalidArgument("component element outside the base set");
      ++seen[x];
      vals[x] = v;
    }
  };
  put(plus, TruthValue::One);
  put(minus, TruthValue::Zero);
  put(circ, TruthValue::Half);
  for (int c : seen)
    if (c != 1) throw InvalidArgument("components do not partition the base set");
  return Triple(std::move(vals));
}

namespace {

using Set = std::set<std::size_t>;

Set unite(const Set& a, const Set& b) {
  Set out = a;
  out.insert(b.begin(), b.end());
  return out;
}

Set meet(const Set& a, const Set& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

void same_base(const Triple& r, const Triple& u) {
  if (r.size() != u.size()) throw InvalidArgument("triples over different base sets");
}

}  // namespace

Triple triple_and(const Triple& r, const Triple& u) {
  same_base(r, u);
  Set p = unite(unite(meet(r.plus(), u.plus()), meet(r.plus(), u.circ())), meet(r.circ(), u.plus()));
  return Triple::from_components(r.size(), p, unite(r.minus(), u.minus()), meet(r.circ(), u.circ()));
}

Triple triple_or(const Triple& r, const Triple& u) {
  same_base(r, u);
  Set p = unite(unite(r.plus(), u.plus()), unite(meet(r.circ(), u.minus()), meet(r.minus(), u.circ())));
  return Triple::from_components(r.size(), p, meet(r.minus(), u.minus()), meet(r.circ(), u.circ()));
}

Triple triple_imp(const Triple& r, const Triple& u) {
  same_base(r, u);
  Set p = unite(unite(r.minus(), u.plus()), meet(r.plus(), u.circ()));
  Set m = meet(unite(r.plus(), r.circ()), u.minus());
  return Triple::from_components(r.size(), p, m, meet(r.circ(), u.circ()));
}

Triple triple_neg(const Triple& r) { return Triple::from_components(r.size(), r.minus(), r.plus(), r.circ()); }

Triple triple_circ(const Triple& r) {
  return Triple::from_components(r.size(), unite(r.plus(), r.minus()), r.circ(), {});
}

TruthValue tilde_forall(const std::set<TruthValue>& ys) {
  if (ys.empty()) throw InvalidArgument("quantifier value of the empty set");
  if (ys.count(TruthValue::Zero)) return TruthValue::Zero;
  if (ys.count(TruthValue::One)) return TruthValue::One;
  return TruthValue::Half;
}

TruthValue tilde_exists(const std::set<TruthValue>& ys) {
  if (ys.empty()) throw InvalidArgument("quantifier value of the empty set");
  if (ys.size() == 1 && ys.count(TruthValue::Half)) return TruthValue::Half;
  if (ys.size() == 1 && ys.count(TruthValue::Zero)) return TruthValue::Zero;
  return TruthValue::One;
}

// ---------------------------------------------------------------------------
// Structures
// ---------------------------------------------------------------------------

std::size_t Structure::tuple_count(std::size_t arity) const {
  std::size_t n = 1;
  for (std::size_t i = 0; i < arity; ++i) n *= size();
  return n;
}

std::size_t Structure::tuple_index(const std::vector<std::size_t>& args) const {
  std::size_t idx = 0;
  for (auto a : args) {
    if (a >= size()) throw InvalidArgument("element outside the domain");
    idx = idx * size() + a;
  }
  return idx;
}

std::vector<std::size_t> Structure::tuple_at(std::size_t index, std::size_t arity) const {
  std::vector<std::size_t> out(arity);
  for (std::size_t i = arity; i > 0; --i) {
    out[i - 1] = index % size();
    index /= size();
  }
  return out;
}

void Structure::add_predicate(const std::string& name, std::size_t arity, TruthValue fill) {
  predicates[name] = PredicateTable{arity, std::vector<TruthValue>(tuple_count(arity), fill)};
}

TruthValue Structure::predicate_value(const std::string& name, const std::vector<std::size_t>& args) const {
  auto it = predicates.find(name);
  if (it == predicates.end()) throw InvalidArgument("structure does not interpret predicate " + name);
  if (it->second.arity != args.size()) throw InvalidArgument("arity mismatch for predicate " + name);
  return it->second.values.at(tuple_index(args));
}

void Structure::set_predicate_value(const std::string& name, const std::vector<std::size_t>& args, TruthValue v) {
  auto it = predicates.find(name);
  if (it == predicates.end()) throw InvalidArgument("structure does not interpret predicate " + name);
  if (it->second.arity != args.size()) throw InvalidArgument("arity mismatch for predicate " + name);
  it->second.values.at(tuple_index(args)) = v;
}

Triple Structure::predicate_triple(const std::string& name) const {
  auto it = predicates.find(name);
  if (it == predicates.end()) throw InvalidArgument("structure does not interpret predicate " + name);
  return Triple(it->second.values);
}

std::size_t Structure::element(const std::string& name) const {
  auto it = std::find(domain.begin(), domain.end(), name);
  if (it == domain.end()) throw InvalidArgument("no domain element named " + name);
  return static_cast<std::size_t>(it - domain.begin());
}

void Structure::validate() const {
  if (domain.empty()) throw InvalidArgument("structure domain is empty");
  std::set<std::string> names(domain.begin(), domain.end());
  if (names.size() != domain.size()) throw InvalidArgument("duplicate domain element names");
  for (const auto& [n, p] : predicates) {
    if (p.arity == 0) throw InvalidArgument("predicate arity must be positive: " + n);
    if (p.values.size() != tuple_count(p.arity)) throw InvalidArgument("predicate table is not total: " + n);
  }
  for (const auto& [n, f] : functions) {
    if (f.arity == 0) throw InvalidArgument("function arity must be positive: " + n);
    if (f.values.size() != tuple_count(f.arity)) throw InvalidArgument("function table is not total: " + n);
    for (auto v : f.values)
      if (v >= size()) throw InvalidArgument("function value outside the domain: " + n);
  }
  for (const auto& [n, c] : constants)
    if (c >= size()) throw InvalidArgument("constant outside the domain: " + n);
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

namespace {

using Env = std::map<std::string, std::size_t>;

std::size_t term_value(const Term& t, const Structure& st, const Assignment& s, const Env& bound) {
  switch (t.kind()) {
    case TermKind::FreeVar: {
      auto it = s.find(t.name());
      if (it == s.end()) throw InvalidArgument("assignment does not cover " + t.name());
      if (it->second >= st.size()) throw InvalidArgument("assignment value outside the domain");
      return it->second;
    }
    case TermKind::BoundVar: {
      auto it = bound.find(t.name());
      if (it == bound.end()) throw InvalidArgument("unbound variable " + t.name());
      return it->second;
    }
    case TermKind::Const: {
      auto it = st.constants.find(t.name());
      if (it == st.constants.end()) throw InvalidArgument("structure does not interpret constant " + t.name());
      return it->second;
    }
    case TermKind::FunApp: {
      auto it = st.functions.find(t.name());
      if (it == st.functions.end() || it->second.arity != t.args().size())
        throw InvalidArgument("structure does not interpret function " + t.name());
      std::vector<std::size_t> args;
      for (const auto& a : t.args()) args.push_back(term_value(a, st, s, bound));
      return it->second.values.at(st.tuple_index(args));
    }
  }
  throw InternalError("unknown term kind");
}

TruthValue value(const Formula& f, const Structure& st, const Assignment& s, Env& bound) {
  switch (f.op()) {
    case Connective::PropAtom: {
      auto it = st.propositions.find(f.name());
      if (it == st.propositions.end()) throw InvalidArgument("structure does not interpret atom " + f.name());
      return it->second;
    }
    case Connective::PredAtom: {
      std::vector<std::size_t> args;
      for (const auto& t : f.terms()) args.push_back(term_value(t, st, s, bound));
      return st.predicate_value(f.name(), args);
    }
    case Connective::Neg:
      return tv_neg(value(f.sub(), st, s, bound));
    case Connective::Circ:
      return tv_circ(value(f.sub(), st, s, bound));
    case Connective::And:
      return tv_and(value(f.left(), st, s, bound), value(f.right(), st, s, bound));
    case Connective::Or:
      return tv_or(value(f.left(), st, s, bound), value(f.right(), st, s, bound));
    case Connective::Imp:
      return tv_imp(value(f.left(), st, s, bound), value(f.right(), st, s, bound));
    case Connective::Forall:
    case Connective::Exists: {
      std::set<TruthValue> ys;
      const auto it = bound.find(f.name());
      const bool shadowing = it != bound.end();
      const std::size_t saved = shadowing ? it->second : 0;
      for (std::size_t m = 0; m < st.size(); ++m) {
        bound[f.name()] = m;
        ys.insert(value(f.sub(), st, s, bound));
      }
      if (shadowing) {
        bound[f.name()] = saved;
      } else {
        bound.erase(f.name());
      }
      return f.op() == Connective::Forall ? tilde_forall(ys) : tilde_exists(ys);
    }
  }
  throw InternalError("unknown connective");
}

}  // namespace

std::size_t eval_term(const Term& t, const Structure& st, const Assignment& s) { return term_value(t, st, s, {}); }

TruthValue evaluate(const Formula& f, const Structure& st, const Assignment& s) {
  if (st.domain.empty()) throw InvalidArgument("structure domain is empty");
  Env bound;
  return value(f, st, s, bound);
}

std::size_t Denotation::index(const Assignment& s, std::size_t n) const {
  std::size_t idx = 0;
  for (const auto& v : vars) {
    auto it = s.find(v);
    if (it == s.end()) throw InvalidArgument("assignment does not cover " + v);
    idx = idx * n + it->second;
  }
  return idx;
}

std::vector<Assignment> all_assignments(const std::vector<std::string>& vars, std::size_t n) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) total *= n;
  std::vector<Assignment> out;
  out.reserve(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    Assignment s;
    std::size_t rest = idx;
    for (std::size_t i = vars.size(); i > 0; --i) {
      s[vars[i - 1]] = rest % n;
      rest /= n;
    }
    out.push_back(std::move(s));
  }
  return out;
}

Denotation denote_over(const Formula& f, const Structure& st, const std::vector<std::string>& vars) {
  if (st.domain.empty()) throw InvalidArgument("structure domain is empty");
  const std::size_t n = st.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) total *= n;

  switch (f.op()) {
    case Connective::PropAtom: {
      auto it = st.propositions.find(f.name());
      if (it == st.propositions.end()) throw InvalidArgument("structure does not interpret atom " + f.name());
      return {vars, Triple::constant(total, it->second)};
    }
    case Connective::PredAtom: {
      std::vector<TruthValue> vals;
      vals.reserve(total);
      for (const auto& s : all_assignments(vars, n)) {
        std::vector<std::size_t> args;
        for (const auto& t : f.terms()) args.push_back(eval_term(t, st, s));
        vals.push_back(st.predicate_value(f.name(), args));
      }
      return {vars, Triple(std::move(vals))};
    }
    case Connective::Neg:
      return {vars, triple_neg(denote_over(f.sub(), st, vars).triple)};
    case Connective::Circ:
      return {vars, triple_circ(denote_over(f.sub(), st, vars).triple)};
    case Connective::And:
      return {vars, triple_and(denote_over(f.left(), st, vars).triple, denote_over(f.right(), st, vars).triple)};
    case Connective::Or:
      return {vars, triple_or(denote_over(f.left(), st, vars).triple, denote_over(f.right(), st, vars).triple)};
    case Connective::Imp:
      return {vars, triple_imp(denote_over(f.left(), st, vars).triple, denote_over(f.right(), st, vars).triple)};
    case Connective::Forall:
    case Connective::Exists: {
      std::set<std::string> avoid(vars.begin(), vars.end());
      auto fv = free_variables(f);
      avoid.insert(fv.begin(), fv.end());
      std::string a = fresh_free_variable(avoid);
      std::vector<std::string> wider = vars;
      wider.push_back(a);
      Triple body = denote_over(instantiate(f, Term::free_var(a)), st, wider).triple;
      std::vector<TruthValue> vals(total);
      for (std::size_t i = 0; i < total; ++i) {
        std::set<TruthValue> ys;
        for (std::size_t m = 0; m < n; ++m) ys.insert(body[i * n + m]);
        vals[i] = f.op() == Connective::Forall ? tilde_forall(ys) : tilde_exists(ys);
      }
      return {vars, Triple(std::move(vals))};
    }
  }
  throw InternalError("unknown connective");
}

Denotation denote(const Formula& f, const Structure& st) {
  auto fv = free_variables(f);
  std::vector<std::string> vars(fv.begin(), fv.end());
  std::sort(vars.begin(), vars.end(), FreeVarLess{});
  return denote_over(f, st, vars);
}

bool satisfies(const Structure& st, const Assignment& s, const Formula& f) { return designated(evaluate(f, st, s)); }

namespace {
std::vector<std::string> sorted_vars(const std::set<std::string>& fv) {
  std::vector<std::string> vars(fv.begin(), fv.end());
  std::sort(vars.begin(), vars.end(), FreeVarLess{});
  return vars;
}
}  // namespace

bool valid_in(const Structure& st, const Formula& f) {
  for (const auto& s : all_assignments(sorted_vars(free_variables(f)), st.size()))
    if (!satisfies(st, s, f)) return false;
  return true;
}

bool fo_sequent_satisfied(const Structure& st, const Assignment& s, const Sequent& seq) {
  for (const auto& f : seq.ante)
    if (!satisfies(st, s, f)) return true;
  for (const auto& f : seq.succ)
    if (satisfies(st, s, f)) return true;
  return false;
}

std::optional<Assignment> falsifying_assignment(const Structure& st, const Sequent& seq) {
  for (const auto& s : all_assignments(sorted_vars(free_variables(seq)), st.size()))
    if (!fo_sequent_satisfied(st, s, seq)) return s;
  return std::nullopt;
}

bool fo_sequent_valid_in(const Structure& st, const Sequent& seq) { return !falsifying_assignment(st, seq); }

}  // namespace ciore

namespace ciore {

std::vector<std::pair<std::string, Formula>> quantifier_axioms(const Formula& phi, const std::string& var,
                                                               const Term& t, const std::string& bound) {
  using F = Formula;
  F all = ciore::bind(phi, var, bound, Quantifier::Forall);
  F some = ciore::bind(phi, var, bound, Quantifier::Exists);
  F some_circ = ciore::bind(F::circ(phi), var, bound, Quantifier::Exists);
  F inst = substitute(phi, var, t);
  return {
      {"Ax11", F::imp(inst, some)},
      {"Ax12", F::imp(all, inst)},
      {"Ax13", F::iff(F::circ(some), some_circ)},
      {"Ax14", F::iff(F::circ(all), some_circ)},
  };
}

}  // namespace ciore
