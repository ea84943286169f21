#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ciore/error.hpp"

namespace ciore {

// ---------------------------------------------------------------------------
// Terms
// ---------------------------------------------------------------------------

enum class TermKind : std::uint8_t { FreeVar, BoundVar, Const, FunApp };

/// First-order term. Free variables live in the `a1, a2, ...` namespace and
/// bound variables in a disjoint namespace; the two never mix.
class Term {
 public:
  static Term free_var(std::string name);
  static Term bound_var(std::string name);
  static Term constant(std::string name);
  static Term apply(std::string name, std::vector<Term> args);

  TermKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const std::vector<Term>& args() const { return args_; }

  bool is_free_var() const { return kind_ == TermKind::FreeVar; }
  bool contains_bound_var() const;

  friend std::strong_ordering operator<=>(const Term& a, const Term& b);
  friend bool operator==(const Term& a, const Term& b) { return (a <=> b) == 0; }

 private:
  Term(TermKind kind, std::string name, std::vector<Term> args)
      : kind_(kind), name_(std::move(name)), args_(std::move(args)) {}

  TermKind kind_;
  std::string name_;
  std::vector<Term> args_;
};

// ---------------------------------------------------------------------------
// Formulas
// ---------------------------------------------------------------------------

/// Constructor tags. The declaration order is the canonical tag order used by
/// every deterministic enumeration in the library.
enum class Connective : std::uint8_t { PropAtom, PredAtom, Neg, Circ, And, Or, Imp, Forall, Exists };

enum class Quantifier : std::uint8_t { Forall, Exists };

struct FormulaNode;

/// Immutable, structurally compared formula handle. Copies share the node.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula pred(std::string name, std::vector<Term> terms);
  static Formula neg(Formula f);
  static Formula circ(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula imp(Formula a, Formula b);
  /// (a -> b) & (b -> a)
  static Formula iff(const Formula& a, const Formula& b);
  static Formula forall(std::string var, Formula body);
  static Formula exists(std::string var, Formula body);
  static Formula quantified(Quantifier q, std::string var, Formula body);

  Connective op() const;
  /// Atom / predicate name, or the bound variable of a quantifier.
  const std::string& name() const;
  const std::vector<Term>& terms() const;
  /// Operand of Neg/Circ, body of a quantifier.
  const Formula& sub() const;
  const Formula& left() const;
  const Formula& right() const;

  bool is_atom() const { return op() == Connective::PropAtom || op() == Connective::PredAtom; }
  bool is_binary() const { return op() == Connective::And || op() == Connective::Or || op() == Connective::Imp; }
  bool is_quantifier() const { return op() == Connective::Forall || op() == Connective::Exists; }
  bool is_neg() const { return op() == Connective::Neg; }
  bool is_circ() const { return op() == Connective::Circ; }
  /// An atom or a negated atom.
  bool is_literal() const;

  std::size_t hash() const;

  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);
  friend bool operator==(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}
  static Formula make(Connective op, std::string name, std::vector<Term> terms, const Formula* lhs,
                      const Formula* rhs);
  std::shared_ptr<const FormulaNode> node_;
};

struct FormulaNode {
  Connective op;
  std::string name;
  std::vector<Term> terms;
  std::optional<Formula> lhs;
  std::optional<Formula> rhs;
  std::size_t hash = 0;
};

using FormulaSet = std::set<Formula>;

// ---------------------------------------------------------------------------
// Signature and well-formedness
// ---------------------------------------------------------------------------

struct Signature {
  std::map<std::string, std::size_t> predicates;
  std::map<std::string, std::size_t> functions;
  std::set<std::string> constants;

  /// Throws InvalidArgument on a name clash or non-positive arity.
  void validate() const;
  /// Merges the symbols used by `f`; throws on inconsistent arities.
  void absorb(const Formula& f);
};

Signature infer_signature(const std::vector<Formula>& formulas);

/// Checks variable discipline: bound variables only under a binder of the same
/// name, no nested rebinding of a name, free variables from the a-namespace.
void check_well_formed(const Formula& f);
/// As above, plus arity conformance with `sig`.
void check_well_formed(const Formula& f, const Signature& sig);

bool is_free_var_name(const std::string& name);
/// Index of a free-variable name (`a7` -> 7). Requires is_free_var_name.
unsigned free_var_index(const std::string& name);

/// Quantifier-free and without predicate atoms.
bool is_propositional(const Formula& f);
bool is_quantifier_free(const Formula& f);
bool has_function_symbols_or_constants(const Formula& f);

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// Replaces every FreeVar(var) by `t` simultaneously. Throws if `t` contains a
/// bound variable.
Formula substitute(const Formula& f, const std::string& var, const Term& t);
Term substitute(const Term& term, const std::string& var, const Term& t);

/// Q x. (f with FreeVar(var) turned into BoundVar(x)). Throws if x occurs in f.
Formula bind(const Formula& f, const std::string& var, const std::string& bound, Quantifier q);

/// Body of a quantified formula with its bound variable replaced by `t`.
Formula instantiate(const Formula& quantified, const Term& t);

/// Number of connective and quantifier nodes.
std::size_t complexity(const Formula& f);

/// Termination weight of the propositional decision procedure. Throws on
/// quantified input.
std::size_t weight(const Formula& f);
std::size_t weight(const FormulaSet& fs);

/// Generalized subformulas (least set closed under the five clauses).
FormulaSet gsub(const Formula& f);

std::set<std::string> free_variables(const Formula& f);
std::set<std::string> free_variables(const Term& t);
/// Least-indexed `a_i` not in `avoid`.
std::string fresh_free_variable(const std::set<std::string>& avoid);

/// Propositional atom names occurring in f.
std::set<std::string> atoms(const Formula& f);

/// Number of subformula occurrences (nodes of the syntax tree).
std::size_t size(const Formula& f);

/// Orders free-variable names by index (a2 < a10), other names lexicographically after.
struct FreeVarLess {
  bool operator()(const std::string& a, const std::string& b) const;
};

}  // namespace ciore

template <>
struct std::hash<ciore::Formula> {
  std::size_t operator()(const ciore::Formula& f) const noexcept { return f.hash(); }
};
