// One line per acceptance criterion: PASS/FAIL, what was checked, elapsed time.
// Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "ciore/fo_prover.hpp"
#include "ciore/fo_semantics.hpp"
#include "ciore/matrix.hpp"
#include "ciore/parser.hpp"
#include "ciore/prop_prover.hpp"
#include "gen.hpp"

using namespace ciore;
using T = TruthValue;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> body;
};

std::string ratio(std::size_t good, std::size_t total) {
  return std::to_string(good) + "/" + std::to_string(total);
}

// --- 1 ---------------------------------------------------------------------

Outcome truth_tables() {
  // rows: first argument 0, 1/2, 1; columns: second argument in the same order
  const T and_t[3][3] = {{T::Zero, T::Zero, T::Zero}, {T::Zero, T::Half, T::One}, {T::Zero, T::One, T::One}};
  const T or_t[3][3] = {{T::Zero, T::One, T::One}, {T::One, T::Half, T::One}, {T::One, T::One, T::One}};
  const T imp_t[3][3] = {{T::One, T::One, T::One}, {T::Zero, T::Half, T::One}, {T::Zero, T::One, T::One}};
  const T neg_t[3] = {T::One, T::Half, T::Zero};
  const T circ_t[3] = {T::One, T::Zero, T::One};
  const T vals[3] = {T::Zero, T::Half, T::One};
  std::size_t good = 0, total = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      good += tv_and(vals[i], vals[j]) == and_t[i][j];
      good += tv_or(vals[i], vals[j]) == or_t[i][j];
      good += tv_imp(vals[i], vals[j]) == imp_t[i][j];
      total += 3;
    }
    good += tv_neg(vals[i]) == neg_t[i];
    good += tv_circ(vals[i]) == circ_t[i];
    total += 2;
  }
  return {good == total && total == 33, ratio(good, total) + " cells"};
}

// --- 2 ---------------------------------------------------------------------

Outcome hilbert_axioms_valid() {
  std::mt19937 rng(1001);
  std::map<std::string, std::size_t> passed;
  std::size_t failures = 0;
  for (int i = 0; i < 120; ++i) {
    auto a = testgen::random_formula(rng, 3, 4), b = testgen::random_formula(rng, 3, 4),
         c = testgen::random_formula(rng, 3, 4);
    for (const auto& [name, ax] : hilbert_axioms(a, b, c)) {
      Sequent s{{}, {ax}};
      bool ok = matrix_valid(s) && testgen::o_valid(s);
      if (ok)
        ++passed[name];
      else
        ++failures;
    }
  }
  std::size_t least = passed.empty() ? 0 : SIZE_MAX;
  for (const auto& [n, k] : passed) least = std::min(least, k);
  return {failures == 0 && passed.size() == 16 && least >= 100,
          std::to_string(passed.size()) + " schemata, >=" + std::to_string(least) + " instances each, " +
              std::to_string(failures) + " failures"};
}

// --- 3 ---------------------------------------------------------------------

struct Agreement {
  std::size_t total = 0, disagree = 0, bad_valuation = 0, proved = 0;

  void check(const Sequent& s) {
    ++total;
    Verdict v = decide(s);
    bool valid = matrix_valid(s);
    if (v.proved != valid) ++disagree;
    if (v.proved) {
      ++proved;
    } else {
      bool falsified = false;
      // evaluate each formula directly rather than through sequent_satisfied
      bool some_ante_undesignated = false, some_succ_designated = false;
      for (const auto& f : s.ante) some_ante_undesignated |= !designated(eval(f, v.valuation));
      for (const auto& f : s.succ) some_succ_designated |= designated(eval(f, v.valuation));
      falsified = !some_ante_undesignated && !some_succ_designated;
      if (!falsified) ++bad_valuation;
    }
  }
};

Outcome oracle_equivalence() {
  Agreement a;
  auto atoms = testgen::atom_list(2);
  // every sequent with up to two formulas per side from the depth <= 1 formulas
  auto shallow = testgen::small_subsets(testgen::all_formulas(atoms, 1), 2);
  for (const auto& l : shallow)
    for (const auto& r : shallow) a.check(Sequent{l, r});
  std::size_t part1 = a.total;
  // every sequent with at most one formula per side from the depth <= 2 formulas
  auto deep = testgen::small_subsets(testgen::all_formulas(atoms, 2), 1);
  for (const auto& l : deep)
    for (const auto& r : deep) a.check(Sequent{l, r});
  std::size_t part2 = a.total - part1;
  std::mt19937 rng(1003);
  for (int i = 0; i < 1000; ++i) a.check(testgen::random_sequent(rng, 3, 4, 4));
  return {a.disagree == 0 && a.bad_valuation == 0,
          std::to_string(part1) + " + " + std::to_string(part2) + " exhaustive + 1000 random sequents, " +
              std::to_string(a.proved) + " proved, " + std::to_string(a.disagree) + " disagreements, " +
              std::to_string(a.bad_valuation) + " bad valuations"};
}

// --- 4 ---------------------------------------------------------------------

Outcome nine_theorems() {
  std::size_t good = 0;
  auto suite = theorem_suite();
  for (const auto& [name, s] : suite) {
    Verdict v = decide(s);
    if (v.proved && v.proof->sequent == s && !v.proof->uses_cut() &&
        check_proof(*v.proof, Calculus::GCiorePrime, false).ok && check_subformula_property(*v.proof).ok)
      ++good;
  }
  return {good == 9 && suite.size() == 9, ratio(good, suite.size()) + " proved cut-free and checked"};
}

// --- 5 ---------------------------------------------------------------------

Outcome cut_elimination() {
  std::mt19937 rng(1005);
  std::size_t done = 0, good = 0;
  while (done < 100) {
    Sequent s = testgen::random_sequent(rng, 2, 3, 3);
    if (!matrix_valid(s)) continue;
    ++done;
    Proof inner = decide(s).proof.value();
    Formula chi = testgen::random_formula(rng, 2, 3);
    if (s.ante.count(chi) || s.succ.count(chi)) chi = Formula::atom("z");
    Sequent left = s, right = s;
    left.succ.insert(chi);
    right.ante.insert(chi);
    Proof cut{s,
              RuleId::Cut,
              chi,
              std::nullopt,
              {Proof{left, RuleId::WeakR, chi, std::nullopt, {inner}},
               Proof{right, RuleId::WeakL, chi, std::nullopt, {inner}}}};
    // decide's proofs use the primed rules, so the wrapped proof lives in GCiore'
    if (!check_proof(cut, Calculus::GCiorePrime, true).ok || check_proof(cut, Calculus::GCiorePrime, false).ok) continue;
    Proof clean = eliminate_cut(cut);
    if (clean.sequent == s && !clean.uses_cut() && check_proof(clean, Calculus::GCiorePrime, false).ok) ++good;
  }
  return {good == 100, ratio(good, done) + " cut proofs accepted and reduced to cut-free proofs"};
}

// --- 6 ---------------------------------------------------------------------

Outcome no_contradiction() {
  std::mt19937 rng(1006);
  std::size_t refuted = 0;
  for (int i = 0; i < 200; ++i) {
    Formula phi = testgen::random_formula(rng, 4, 4);
    Verdict v = decide(Sequent{{}, {Formula::conj(phi, Formula::neg(phi))}});
    if (!v.proved) ++refuted;
  }
  bool empty_refuted = !decide(Sequent{}).proved;
  return {refuted == 200 && empty_refuted,
          ratio(refuted, 200) + " contradictions refuted, empty sequent " + (empty_refuted ? "refuted" : "proved")};
}

// --- 7 ---------------------------------------------------------------------

using Ix = std::set<std::size_t>;

Ix cup(const Ix& a, const Ix& b) {
  Ix o = a;
  o.insert(b.begin(), b.end());
  return o;
}
Ix cap(const Ix& a, const Ix& b) {
  Ix o;
  for (auto x : a)
    if (b.count(x)) o.insert(x);
  return o;
}

Outcome triple_algebra() {
  std::size_t pairs = 0, bad = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    std::vector<Triple> ts;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<T> vs;
      std::size_t c = code;
      for (std::size_t i = 0; i < n; ++i, c /= 3) vs.push_back(static_cast<T>(c % 3));
      ts.emplace_back(vs);
    }
    for (const auto& r : ts) {
      Triple ng = triple_neg(r), ci = triple_circ(r);
      bad += !(ng.plus() == r.minus() && ng.minus() == r.plus() && ng.circ() == r.circ());
      bad += !(ci.plus() == cup(r.plus(), r.minus()) && ci.minus() == r.circ() && ci.circ().empty());
      for (std::size_t x = 0; x < n; ++x)
        bad += ng[x] != testgen::o_neg(r[x]) || ci[x] != testgen::o_circ(r[x]);
      for (const auto& u : ts) {
        ++pairs;
        Triple a = triple_and(r, u), o = triple_or(r, u), i = triple_imp(r, u);
        bad += !(a.plus() == cup(cup(cap(r.plus(), u.plus()), cap(r.plus(), u.circ())), cap(r.circ(), u.plus())) &&
                 a.minus() == cup(r.minus(), u.minus()) && a.circ() == cap(r.circ(), u.circ()));
        bad += !(o.plus() == cup(cup(cup(r.plus(), u.plus()), cap(r.circ(), u.minus())), cap(r.minus(), u.circ())) &&
                 o.minus() == cap(r.minus(), u.minus()) && o.circ() == cap(r.circ(), u.circ()));
        bad += !(i.plus() == cup(cup(r.minus(), u.plus()), cap(r.plus(), u.circ())) &&
                 i.minus() == cap(cup(r.plus(), r.circ()), u.minus()) && i.circ() == cap(r.circ(), u.circ()));
        for (std::size_t x = 0; x < n; ++x)
          bad += a[x] != testgen::o_and(r[x], u[x]) || o[x] != testgen::o_or(r[x], u[x]) ||
                 i[x] != testgen::o_imp(r[x], u[x]);
      }
    }
  }
  return {bad == 0, std::to_string(pairs) + " operand pairs over |X| = 1..3, " + std::to_string(bad) + " mismatches"};
}

// --- 8 ---------------------------------------------------------------------

// Component sets as bitmasks over the assignments of (a1, x, y) in a two-element
// domain; bit index a1 + 2x + 4y.
struct Mask {
  std::uint8_t plus = 0, minus = 0, circ = 0;
};

struct Entry {
  Formula f;
  Mask m;
};

constexpr std::uint8_t kAll = 0xff;

// For each assignment, combine the two values of coordinate `bit` (1 = a1, 2 = x, 4 = y).
std::uint8_t exists_hat(std::uint8_t y, std::uint8_t bit) {
  std::uint8_t out = 0;
  for (unsigned s = 0; s < 8; ++s)
    if ((y >> (s & ~bit)) & 1 || (y >> (s | bit)) & 1) out |= static_cast<std::uint8_t>(1u << s);
  return out;
}
std::uint8_t forall_hat(std::uint8_t y, std::uint8_t bit) {
  std::uint8_t out = 0;
  for (unsigned s = 0; s < 8; ++s)
    if ((y >> (s & ~bit)) & 1 && (y >> (s | bit)) & 1) out |= static_cast<std::uint8_t>(1u << s);
  return out;
}

// All formulas of depth <= d over P, with the bound names in `bound` in scope
// (x first, then y). Component masks are built alongside.
std::vector<std::vector<Entry>> enumerate(const std::array<T, 2>& pv, int d, std::vector<std::string> bound) {
  std::vector<std::vector<Entry>> levels(d + 1);
  auto atom_mask = [&](std::uint8_t coord) {
    Mask m;
    for (unsigned s = 0; s < 8; ++s) {
      T v = pv[(s & coord) ? 1 : 0];
      auto bit = static_cast<std::uint8_t>(1u << s);
      (v == T::One ? m.plus : v == T::Zero ? m.minus : m.circ) |= bit;
    }
    return m;
  };
  std::vector<Entry> atoms{{Formula::pred("P", {Term::free_var("a1")}), atom_mask(1)}};
  const std::uint8_t coords[2] = {2, 4};
  for (std::size_t i = 0; i < bound.size(); ++i)
    atoms.push_back({Formula::pred("P", {Term::bound_var(bound[i])}), atom_mask(coords[i])});
  levels[0] = atoms;
  std::vector<std::vector<Entry>> inner;
  if (bound.size() < 2 && d > 0) {
    auto b = bound;
    b.push_back(bound.empty() ? "x" : "y");
    inner = enumerate(pv, d - 1, b);
  }
  for (int k = 1; k <= d; ++k) {
    std::vector<Entry> below;
    for (int j = 0; j < k; ++j) below.insert(below.end(), levels[j].begin(), levels[j].end());
    auto& out = levels[k];
    // exactly depth k: at least one immediate subformula of depth k-1
    const auto& top = levels[k - 1];
    for (const auto& a : top) {
      out.push_back({Formula::neg(a.f), {a.m.minus, a.m.plus, a.m.circ}});
      out.push_back({Formula::circ(a.f), {static_cast<std::uint8_t>(a.m.plus | a.m.minus), a.m.circ, 0}});
    }
    auto binaries = [&](const Entry& a, const Entry& b) {
      const Mask &r = a.m, &u = b.m;
      out.push_back({Formula::conj(a.f, b.f),
                     {static_cast<std::uint8_t>((r.plus & u.plus) | (r.plus & u.circ) | (r.circ & u.plus)),
                      static_cast<std::uint8_t>(r.minus | u.minus), static_cast<std::uint8_t>(r.circ & u.circ)}});
      out.push_back({Formula::disj(a.f, b.f),
                     {static_cast<std::uint8_t>(r.plus | u.plus | (r.circ & u.minus) | (r.minus & u.circ)),
                      static_cast<std::uint8_t>(r.minus & u.minus), static_cast<std::uint8_t>(r.circ & u.circ)}});
      out.push_back({Formula::imp(a.f, b.f),
                     {static_cast<std::uint8_t>(r.minus | u.plus | (r.plus & u.circ)),
                      static_cast<std::uint8_t>((r.plus | r.circ) & u.minus),
                      static_cast<std::uint8_t>(r.circ & u.circ)}});
    };
    std::size_t lower = below.size() - top.size();
    for (std::size_t i = 0; i < below.size(); ++i)
      for (std::size_t j = 0; j < below.size(); ++j)
        if (i >= lower || j >= lower) binaries(below[i], below[j]);
    if (!inner.empty()) {
      const std::string name = bound.empty() ? "x" : "y";
      const std::uint8_t bit = coords[bound.size()];
      for (const auto& e : inner[k - 1]) {
        const Mask& m = e.m;
        Mask fa{static_cast<std::uint8_t>(exists_hat(m.plus, bit) & ~exists_hat(m.minus, bit)),
                exists_hat(m.minus, bit), forall_hat(m.circ, bit)};
        Mask ex{static_cast<std::uint8_t>(kAll & ~(forall_hat(m.minus, bit) | forall_hat(m.circ, bit))),
                forall_hat(m.minus, bit), forall_hat(m.circ, bit)};
        out.push_back({Formula::forall(name, e.f), fa});
        out.push_back({Formula::exists(name, e.f), ex});
      }
    }
  }
  return levels;
}

Outcome denotation_equivalence() {
  std::size_t formulas = 0, checks = 0, bad = 0;
  for (T v0 : kTruthValues)
    for (T v1 : kTruthValues) {
      Structure st;
      st.domain = {"e1", "e2"};
      st.add_predicate("P", 1);
      st.set_predicate_value("P", {0}, v0);
      st.set_predicate_value("P", {1}, v1);
      auto levels = enumerate({v0, v1}, 3, {});
      const std::vector<std::string> vars{"a1"};
      for (const auto& level : levels)
        for (const auto& e : level) {
          ++formulas;
          Denotation d = denote_over(e.f, st, vars);
          for (std::size_t m = 0; m < 2; ++m) {
            ++checks;
            auto bit = static_cast<std::uint8_t>(1u << m);
            T want = (e.m.plus & bit) ? T::One : (e.m.circ & bit) ? T::Half : T::Zero;
            int covered = !!(e.m.plus & bit) + !!(e.m.minus & bit) + !!(e.m.circ & bit);
            if (covered != 1 || d.triple[d.index({{"a1", m}}, 2)] != want) ++bad;
          }
        }
    }
  return {bad == 0 && formulas > 0, std::to_string(formulas) + " formula/structure pairs, " + std::to_string(checks) +
                                        " values, " + std::to_string(bad) + " mismatches"};
}

// --- 9 ---------------------------------------------------------------------

Outcome quantifier_axioms_valid() {
  const Term a1 = Term::free_var("a1"), a2 = Term::free_var("a2");
  const Formula pa = Formula::pred("P", {a1});
  const std::vector<Formula> phis = {pa, Formula::neg(pa), Formula::circ(pa),
                                     Formula::imp(pa, Formula::pred("P", {a2})), Formula::conj(pa, Formula::neg(pa))};
  std::size_t checked = 0, bad = 0;
  for (const auto& phi : phis)
    for (const auto& t : {a1, a2})
      for (const auto& [name, ax] : quantifier_axioms(phi, "a1", t))
        for (std::size_t n = 1; n <= 2; ++n)
          for (const auto& st : testgen::unary_structures(n, {"P"})) {
            ++checked;
            bad += !valid_in(st, ax);
          }
  return {bad == 0, std::to_string(checked) + " axiom/structure pairs, " + std::to_string(bad) + " invalid"};
}

// --- 10 --------------------------------------------------------------------

Structure random_structure(std::mt19937& rng) {
  std::uniform_int_distribution<int> size(1, 3), val(0, 2);
  Structure st;
  int n = size(rng);
  for (int i = 0; i < n; ++i) st.domain.push_back("e" + std::to_string(i + 1));
  for (const char* p : {"P", "Q"}) {
    st.add_predicate(p, 1);
    for (int i = 0; i < n; ++i) st.set_predicate_value(p, {static_cast<std::size_t>(i)}, static_cast<T>(val(rng)));
  }
  return st;
}

std::vector<Formula> shapes_for(std::mt19937& rng) {
  const std::vector<std::string> vars{"a1", "a2"};
  auto r = [&] { return testgen::random_fo_formula(rng, 1, vars); };
  Formula a = r(), b = r();
  Formula body = testgen::random_fo_formula(rng, 1, vars, {"x"});
  Formula fa = Formula::forall("x", body), ex = Formula::exists("x", body);
  return {Formula::disj(a, b), Formula::conj(a, b), Formula::imp(a, b), Formula::neg(Formula::disj(a, b)),
          Formula::neg(Formula::conj(a, b)), Formula::neg(Formula::imp(a, b)), Formula::neg(a),
          Formula::neg(Formula::neg(a)), Formula::circ(a), Formula::neg(Formula::circ(a)), fa, ex,
          Formula::circ(fa), Formula::circ(ex)};
}

Outcome rule_soundness() {
  std::mt19937 rng(1010);
  std::vector<RuleId> rules;
  for (RuleId r : all_rules())
    if (rule_in_calculus(r, Calculus::GQCiore, false) && r != RuleId::Axiom && r != RuleId::Weakenings &&
        r != RuleId::Hyp)
      rules.push_back(r);
  std::size_t instances = 0, nonvacuous = 0, violations = 0, malformed = 0, least_nonvacuous = SIZE_MAX;
  const std::vector<std::string> vars{"a1", "a2"};
  std::uniform_int_distribution<int> ctx_size(0, 1);
  for (RuleId r : rules) {
    std::size_t here = 0;
    // keep drawing until 200 instances have premises valid in their structure
    for (int i = 0; i < 20000 && here < 200; ++i) {
      Sequent ctx;
      for (int k = ctx_size(rng); k > 0; --k) ctx.ante.insert(testgen::random_fo_formula(rng, 1, vars));
      for (int k = ctx_size(rng); k > 0; --k) ctx.succ.insert(testgen::random_fo_formula(rng, 1, vars));
      Formula principal = Formula::atom("unused");
      std::optional<Term> side;
      std::optional<std::vector<PremiseShape>> shape;
      for (int attempt = 0; attempt < 50 && !shape; ++attempt) {
        auto cands = shapes_for(rng);
        std::shuffle(cands.begin(), cands.end(), rng);
        for (const auto& c : cands) {
          std::optional<Term> sd;
          if (r == RuleId::WeakL || r == RuleId::WeakR) {
            principal = c;
            shape = std::vector<PremiseShape>{PremiseShape{}};
            break;
          }
          if (is_eigenvariable_rule(r) || is_instance_rule(r)) {
            Sequent probe = ctx;
            (principal_on_left(r) ? probe.ante : probe.succ).insert(c);
            if (is_eigenvariable_rule(r)) {
              sd = Term::free_var(fresh_free_variable(free_variables(probe)));
            } else {
              std::uniform_int_distribution<int> pick(1, 3);
              sd = Term::free_var("a" + std::to_string(pick(rng)));
            }
          }
          if (auto s = rule_premises(r, c, sd)) {
            principal = c;
            side = sd;
            shape = s;
            break;
          }
        }
      }
      if (!shape) {
        ++malformed;
        continue;
      }
      ctx.ante.erase(principal);
      ctx.succ.erase(principal);
      Sequent concl = ctx;
      (principal_on_left(r) ? concl.ante : concl.succ).insert(principal);
      std::vector<Sequent> premises;
      for (const auto& sh : *shape) {
        Sequent p = ctx;
        p.ante.insert(sh.ante.begin(), sh.ante.end());
        p.succ.insert(sh.succ.begin(), sh.succ.end());
        premises.push_back(p);
      }
      if (!check_rule_instance(r, concl, premises, principal, side).ok) {
        ++malformed;
        continue;
      }
      ++instances;
      Structure st = random_structure(rng);
      bool all_valid = true;
      for (const auto& p : premises) all_valid = all_valid && fo_sequent_valid_in(st, p);
      if (!all_valid) continue;
      ++nonvacuous;
      ++here;
      if (!fo_sequent_valid_in(st, concl)) ++violations;
    }
    least_nonvacuous = std::min(least_nonvacuous, here);
  }
  std::ostringstream d;
  d << rules.size() << " rules, " << instances << " instances (" << nonvacuous << " with valid premises, >= "
    << least_nonvacuous << " per rule), " << violations << " violations, " << malformed << " malformed";
  return {violations == 0 && malformed == 0 && least_nonvacuous >= 200, d.str()};
}

// --- 11 --------------------------------------------------------------------

Outcome fo_regression() {
  std::size_t good = 0, total = 0;
  for (const auto& c : fo_regression_suite()) {
    ++total;
    if (c.expansion) {
      good += c.expansion->sequent == c.goal && check_proof(*c.expansion, Calculus::GQCiore, true, c.hypotheses).ok;
      continue;
    }
    FoVerdict v = decide_fo(c.goal);
    good += v.status == FoVerdict::Status::Proved && v.proof->sequent == c.goal && !v.proof->uses_cut() &&
            check_proof(*v.proof, Calculus::GQCiore, false).ok;
  }
  return {good == total && total == 6, ratio(good, total) + " (four proved cut-free, two derived-rule expansions)"};
}

// --- 12 --------------------------------------------------------------------

Outcome fo_refutation() {
  std::size_t good = 0;
  std::string sizes;
  for (const char* text :
       {"exists x. P(x) |- forall x. P(x)", "|- (forall x. (P(x) | Q(x))) -> ((forall x. P(x)) | (forall x. Q(x)))"}) {
    Sequent s = parse_sequent(text);
    FoVerdict v = decide_fo(s);
    if (v.status == FoVerdict::Status::Refuted && v.structure && !fo_sequent_satisfied(*v.structure, v.assignment, s))
      ++good;
    if (v.structure) sizes += (sizes.empty() ? "" : ", ") + std::to_string(v.structure->size());
  }
  return {good == 2, ratio(good, 2) + " refuted with verified countermodels (domain sizes " + sizes + ")"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "truth-table conformance", 1, truth_tables},
      {2, "Hilbert axiom validity", 10, hilbert_axioms_valid},
      {3, "decision procedure agrees with the matrix", 120, oracle_equivalence},
      {4, "nine theorems proved cut-free", 10, nine_theorems},
      {5, "cut elimination", 60, cut_elimination},
      {6, "no contradiction is provable", 30, no_contradiction},
      {7, "triple algebra coherence", 30, triple_algebra},
      {8, "recursive and component denotations agree", 60, denotation_equivalence},
      {9, "quantifier axiom validity", 30, quantifier_axioms_valid},
      {10, "first-order rule soundness", 120, rule_soundness},
      {11, "first-order regression", 60, fo_regression},
      {12, "first-order refutation", 60, fo_refutation},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = o.ok && secs < c.limit_seconds;
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " [" << std::setw(2) << c.number << "] " << c.name << ": " << o.detail
              << " (" << std::fixed << std::setprecision(2) << secs << "s, limit " << std::setprecision(0)
              << c.limit_seconds << "s)" << std::endl;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed ? 1 : 0;
}
