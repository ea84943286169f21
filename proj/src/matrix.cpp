#include "ciore/matrix.hpp"

#include <array>

namespace ciore {

namespace {

using T = TruthValue;
constexpr T O = T::One, H = T::Half, Z = T::Zero;

// Rows and columns indexed by 0, 1/2, 1.
constexpr std::array<std::array<T, 3>, 3> kAnd = {{
    {Z, Z, Z},  // 0
    {Z, H, O},  // 1/2
    {Z, O, O},  // 1
}};
constexpr std::array<std::array<T, 3>, 3> kOr = {{
    {Z, O, O},
    {O, H, O},
    {O, O, O},
}};
constexpr std::array<std::array<T, 3>, 3> kImp = {{
    {O, O, O},
    {Z, H, O},
    {Z, O, O},
}};
constexpr std::array<T, 3> kNeg = {O, H, Z};
constexpr std::array<T, 3> kCirc = {O, Z, O};

std::size_t ix(T v) { return static_cast<std::size_t>(v); }

}  // namespace

const std::string& to_string(TruthValue v) {
  static const std::array<std::string, 3> names = {"0", "1/2", "1"};
  return names[ix(v)];
}

TruthValue truth_value_from_string(const std::string& s) {
  if (s == "0") return Z;
  if (s == "1") return O;
  if (s == "1/2" || s == "0.5" || s == "½") return H;
  throw ParseError("not a truth value: " + s);
}

TruthValue tv_and(T a, T b) { return kAnd[ix(a)][ix(b)]; }
TruthValue tv_or(T a, T b) { return kOr[ix(a)][ix(b)]; }
TruthValue tv_imp(T a, T b) { return kImp[ix(a)][ix(b)]; }
TruthValue tv_neg(T a) { return kNeg[ix(a)]; }
TruthValue tv_circ(T a) { return kCirc[ix(a)]; }

TruthValue eval(const Formula& f, const Valuation& v) {
  switch (f.op()) {
    case Connective::PropAtom: {
      auto it = v.find(f.name());
      if (it == v.end()) throw InvalidArgument("valuation does not cover atom " + f.name());
      return it->second;
    }
    case Connective::Neg:
      return tv_neg(eval(f.sub(), v));
    case Connective::Circ:
      return tv_circ(eval(f.sub(), v));
    case Connective::And:
      return tv_and(eval(f.left(), v), eval(f.right(), v));
    case Connective::Or:
      return tv_or(eval(f.left(), v), eval(f.right(), v));
    case Connective::Imp:
      return tv_imp(eval(f.left(), v), eval(f.right(), v));
    default:
      throw InvalidArgument("matrix evaluation needs a propositional formula");
  }
}

bool sequent_satisfied(const Valuation& v, const Sequent& s) {
  for (const auto& f : s.ante)
    if (!designated(eval(f, v))) return true;
  for (const auto& f : s.succ)
    if (designated(eval(f, v))) return true;
  return false;
}

std::optional<Valuation> find_countermodel(const Sequent& s, std::size_t atom_cap) {
  if (!is_propositional(s)) throw InvalidArgument("matrix validity needs a propositional sequent");
  auto names = atoms(s);
  if (names.size() > atom_cap)
    throw ResourceError("sequent has " + std::to_string(names.size()) + " atoms, cap is " + std::to_string(atom_cap));
  std::vector<std::string> order(names.begin(), names.end());
  std::vector<std::size_t> digits(order.size(), 0);
  Valuation v;
  for (const auto& n : order) v[n] = Z;
  while (true) {
    if (!sequent_satisfied(v, s)) return v;
    // odometer, last atom fastest
    std::size_t i = order.size();
    while (i > 0) {
      --i;
      if (++digits[i] < 3) {
        v[order[i]] = kTruthValues[digits[i]];
        break;
      }
      digits[i] = 0;
      v[order[i]] = Z;
      if (i == 0) return std::nullopt;
    }
    if (order.empty()) return std::nullopt;
  }
}

bool matrix_valid(const Sequent& s, std::size_t atom_cap) { return !find_countermodel(s, atom_cap).has_value(); }

bool signed_satisfied(const Valuation& v, const SignedFormula& sf) { return eval(sf.formula, v) == sf.sign; }

bool nsequent_satisfied(const Valuation& v, const NSequent& ns) {
  for (const auto& f : ns.g0)
    if (eval(f, v) == Z) return true;
  for (const auto& f : ns.half)
    if (eval(f, v) == H) return true;
  for (const auto& f : ns.g1)
    if (eval(f, v) == O) return true;
  return false;
}

NSequent to_nsequent(const Sequent& s) { return NSequent{s.ante, s.succ, s.succ}; }

std::vector<Witness> expressiveness_witnesses(const Formula& f, TruthValue t) {
  switch (t) {
    case Z:
      return {{f, false}};
    case H:
      return {{f, true}, {Formula::neg(f), true}};
    case O:
      return {{f, true}, {Formula::neg(f), false}};
  }
  return {};
}

}  // namespace ciore

namespace ciore {

std::vector<std::pair<std::string, Formula>> hilbert_axioms(const Formula& a, const Formula& b, const Formula& c) {
  using F = Formula;
  F co = F::disj(F::circ(a), F::circ(b));
  return {
      {"Ax1", F::imp(a, F::imp(b, a))},
      {"Ax2", F::imp(F::imp(a, F::imp(b, c)), F::imp(F::imp(a, b), F::imp(a, c)))},
      {"Ax3", F::imp(a, F::imp(b, F::conj(a, b)))},
      {"Ax4", F::imp(F::conj(a, b), a)},
      {"Ax5", F::imp(F::conj(a, b), b)},
      {"Ax6", F::imp(a, F::disj(a, b))},
      {"Ax7", F::imp(b, F::disj(a, b))},
      {"Ax8", F::imp(F::imp(a, c), F::imp(F::imp(b, c), F::imp(F::disj(a, b), c)))},
      {"Ax9", F::disj(F::imp(a, b), a)},
      {"Ax10", F::disj(a, F::neg(a))},
      {"bc1", F::imp(F::circ(a), F::imp(a, F::imp(F::neg(a), b)))},
      {"ci", F::imp(F::neg(F::circ(a)), F::conj(a, F::neg(a)))},
      {"cf", F::iff(F::neg(F::neg(a)), a)},
      {"co1", F::iff(co, F::circ(F::conj(a, b)))},
      {"co2", F::iff(co, F::circ(F::disj(a, b)))},
      {"co3", F::iff(co, F::circ(F::imp(a, b)))},
  };
}

}  // namespace ciore
