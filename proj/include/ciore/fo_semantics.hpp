#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ciore/matrix.hpp"
#include "ciore/sequent.hpp"
#include "ciore/syntax.hpp"

namespace ciore {

/// A map from a finite base set {0, ..., n-1} into the truth values, read as
/// the three components plus (value 1), minus (value 0) and circ (value 1/2).
class Triple {
 public:
  Triple() = default;
  explicit Triple(std::vector<TruthValue> values) : values_(std::move(values)) {}
  /// Throws InvalidArgument unless the three sets partition {0, ..., n-1}.
  static Triple from_components(std::size_t n, const std::set<std::size_t>& plus, const std::set<std::size_t>& minus,
                                const std::set<std::size_t>& circ);
  static Triple constant(std::size_t n, TruthValue v) { return Triple(std::vector<TruthValue>(n, v)); }

  std::size_t size() const { return values_.size(); }
  TruthValue operator[](std::size_t x) const { return values_.at(x); }
  const std::vector<TruthValue>& values() const { return values_; }

  std::set<std::size_t> plus() const { return component(TruthValue::One); }
  std::set<std::size_t> minus() const { return component(TruthValue::Zero); }
  std::set<std::size_t> circ() const { return component(TruthValue::Half); }

  friend bool operator==(const Triple&, const Triple&) = default;

 private:
  std::set<std::size_t> component(TruthValue v) const;
  std::vector<TruthValue> values_;
};

// Set-level operations on triples over the same base set. Throw
// InvalidArgument on a base-set mismatch.
Triple triple_and(const Triple& r, const Triple& u);
Triple triple_or(const Triple& r, const Triple& u);
Triple triple_imp(const Triple& r, const Triple& u);
Triple triple_neg(const Triple& r);
Triple triple_circ(const Triple& r);

/// Quantifier value functions on a nonempty set of values.
TruthValue tilde_forall(const std::set<TruthValue>& ys);
TruthValue tilde_exists(const std::set<TruthValue>& ys);

struct PredicateTable {
  std::size_t arity = 1;
  std::vector<TruthValue> values;  // tuples in mixed radix, first argument most significant
};

struct FunctionTable {
  std::size_t arity = 1;
  std::vector<std::size_t> values;
};

/// Finite structure. Elements are indices into `domain`; propositional atoms
/// are interpreted directly.
struct Structure {
  std::vector<std::string> domain;
  std::map<std::string, PredicateTable> predicates;
  std::map<std::string, FunctionTable> functions;
  std::map<std::string, std::size_t> constants;
  std::map<std::string, TruthValue> propositions;

  std::size_t size() const { return domain.size(); }
  std::size_t tuple_count(std::size_t arity) const;
  std::size_t tuple_index(const std::vector<std::size_t>& args) const;
  std::vector<std::size_t> tuple_at(std::size_t index, std::size_t arity) const;

  /// Adds a predicate with every tuple at `fill`.
  void add_predicate(const std::string& name, std::size_t arity, TruthValue fill = TruthValue::Zero);
  TruthValue predicate_value(const std::string& name, const std::vector<std::size_t>& args) const;
  void set_predicate_value(const std::string& name, const std::vector<std::size_t>& args, TruthValue v);
  Triple predicate_triple(const std::string& name) const;

  std::size_t element(const std::string& name) const;

  /// Nonempty domain with distinct names, total tables, constants in range.
  void validate() const;
};

/// Free variable name -> element index.
using Assignment = std::map<std::string, std::size_t>;

/// Throws InvalidArgument on an unassigned variable or unknown symbol.
std::size_t eval_term(const Term& t, const Structure& st, const Assignment& s);

/// Value of a formula under an assignment, evaluated pointwise.
TruthValue evaluate(const Formula& f, const Structure& st, const Assignment& s);

/// Denotation as a triple over the assignments of `vars` (mixed radix, first
/// variable most significant).
struct Denotation {
  std::vector<std::string> vars;
  Triple triple;

  std::size_t index(const Assignment& s, std::size_t domain_size) const;
};

/// Recursive triple semantics over the free variables of f (sorted by index).
Denotation denote(const Formula& f, const Structure& st);
/// Same over a chosen variable list, which must cover the free variables of f.
Denotation denote_over(const Formula& f, const Structure& st, const std::vector<std::string>& vars);

/// All assignments of `vars` in mixed-radix order.
std::vector<Assignment> all_assignments(const std::vector<std::string>& vars, std::size_t domain_size);

bool satisfies(const Structure& st, const Assignment& s, const Formula& f);
bool valid_in(const Structure& st, const Formula& f);
bool fo_sequent_satisfied(const Structure& st, const Assignment& s, const Sequent& seq);
bool fo_sequent_valid_in(const Structure& st, const Sequent& seq);
/// First assignment (over the free variables of seq) that falsifies it.
std::optional<Assignment> falsifying_assignment(const Structure& st, const Sequent& seq);

}  // namespace ciore

namespace ciore {

/// The four quantifier axiom schemata for phi(a) (a free variable `var`
/// occurring in `phi`), bound as x, and the instance term t:
/// phi(t) -> exists x phi, forall x phi -> phi(t), o exists x phi <-> exists x o phi,
/// o forall x phi <-> exists x o phi.
std::vector<std::pair<std::string, Formula>> quantifier_axioms(const Formula& phi, const std::string& var,
                                                               const Term& t, const std::string& bound = "x");

}  // namespace ciore
