#include "ciore/cli.hpp"

#include <CLI11.hpp>

#include <array>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ciore/fo_prover.hpp"
#include "ciore/fo_semantics.hpp"
#include "ciore/json_io.hpp"
#include "ciore/matrix.hpp"
#include "ciore/parser.hpp"
#include "ciore/prop_prover.hpp"

namespace ciore::cli {

namespace {

struct Options {
  bool fo = false;
  bool json = false;
  bool allow_cut = false;
  std::size_t depth = Budget{}.max_depth;
  std::size_t nodes = Budget{}.max_nodes;
  std::optional<std::size_t> atom_cap;
  std::string structure_file;
  std::string calculus;
  std::vector<std::string> hyps;
  std::string sequent;
  std::string proof_file = "-";
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::size_t atom_cap(const Options& o) {
  if (o.atom_cap) return *o.atom_cap;
  if (const char* env = std::getenv("CIORE_ATOM_CAP")) {
    try {
      std::size_t pos = 0;
      unsigned long v = std::stoul(env, &pos);
      if (pos == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("CIORE_ATOM_CAP must be a nonnegative integer");
  }
  return kDefaultAtomCap;
}

// A bare formula is read as a sequent with empty antecedent.
Sequent read_sequent(const std::string& text) {
  if (text.find("|-") == std::string::npos) return Sequent{{}, {parse_formula(text)}};
  return parse_sequent(text);
}

Sequent goal(const Options& o) {
  Sequent s = read_sequent(o.sequent);
  if (!o.fo && !is_propositional(s)) throw UsageError("first-order input needs --fo");
  return s;
}

Budget budget(const Options& o) { return Budget{o.nodes, o.depth}; }

std::string read_file(const std::string& path, std::istream& input) {
  if (path == "-") {
    std::ostringstream ss;
    ss << input.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path, std::istream& input) {
  try {
    return Json::parse(read_file(path, input));
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
}

void print_proof(const Proof& p, std::ostream& out, std::size_t indent = 0) {
  out << std::string(indent, ' ') << to_string(p.sequent) << "   (" << rule_name(p.rule);
  if (p.principal) out << ' ' << to_string(*p.principal);
  if (p.side) out << " @" << to_string(*p.side);
  out << ")\n";
  for (const auto& q : p.premises) print_proof(q, out, indent + 2);
}

void print_structure(const Structure& st, const Assignment& a, std::ostream& out) {
  out << structure_to_json(st).dump() << '\n';
  if (!a.empty()) out << "assignment " << assignment_to_json(a, st).dump() << '\n';
}

int cmd_prove(const Options& o, std::ostream& out) {
  Sequent s = goal(o);
  if (!o.fo) {
    Verdict v = decide(s, atom_cap(o));
    if (o.json) {
      out << verdict_to_json(s, v).dump(2) << '\n';
    } else if (v.proved) {
      out << "proved\n";
      print_proof(*v.proof, out);
    } else {
      out << "refuted\n" << valuation_to_json(v.valuation).dump() << '\n';
    }
    return v.proved ? kExitOk : kExitNegative;
  }
  FoVerdict v = decide_fo(s, budget(o));
  if (o.json) {
    out << fo_verdict_to_json(s, v).dump(2) << '\n';
  } else {
    out << status_name(v.status) << '\n';
    if (v.proof) print_proof(*v.proof, out);
    if (v.structure) print_structure(*v.structure, v.assignment, out);
    if (v.status == FoVerdict::Status::Unknown) out << v.report << '\n';
  }
  switch (v.status) {
    case FoVerdict::Status::Proved:
      return kExitOk;
    case FoVerdict::Status::Refuted:
      return kExitNegative;
    default:
      return kExitUnknown;
  }
}

int cmd_validity(const Options& o, bool want_countermodel, std::istream& input, std::ostream& out) {
  Sequent s = goal(o);
  if (!o.structure_file.empty()) {
    Structure st = structure_from_json(read_json(o.structure_file, input));
    auto bad = falsifying_assignment(st, s);
    if (o.json) {
      Json j = {{"sequent", to_string(s)}, {"valid", !bad}};
      if (bad && want_countermodel) j["assignment"] = assignment_to_json(*bad, st);
      out << j.dump(2) << '\n';
    } else {
      out << (bad ? "invalid" : "valid") << '\n';
      if (bad && want_countermodel) out << assignment_to_json(*bad, st).dump() << '\n';
    }
    return bad ? kExitNegative : kExitOk;
  }
  if (!o.fo) {
    auto cm = find_countermodel(s, atom_cap(o));
    if (o.json) {
      Json j = {{"sequent", to_string(s)}, {"valid", !cm}};
      if (cm && want_countermodel) j["valuation"] = valuation_to_json(*cm);
      out << j.dump(2) << '\n';
    } else if (cm && want_countermodel) {
      out << valuation_to_json(*cm).dump() << '\n';
    } else {
      out << (cm ? "invalid" : "valid") << '\n';
    }
    return cm ? kExitNegative : kExitOk;
  }
  FoVerdict v = decide_fo(s, budget(o));
  const char* word = v.status == FoVerdict::Status::Proved    ? "valid"
                     : v.status == FoVerdict::Status::Refuted ? "invalid"
                                                              : "unknown";
  if (o.json) {
    Json j = {{"sequent", to_string(s)}, {"status", word}};
    if (v.structure && want_countermodel) {
      j["structure"] = structure_to_json(*v.structure);
      j["assignment"] = assignment_to_json(v.assignment, *v.structure);
    }
    if (v.status == FoVerdict::Status::Unknown) j["report"] = v.report;
    out << j.dump(2) << '\n';
  } else {
    out << word << '\n';
    if (v.structure && want_countermodel) print_structure(*v.structure, v.assignment, out);
    if (v.status == FoVerdict::Status::Unknown) out << v.report << '\n';
  }
  return v.status == FoVerdict::Status::Proved ? kExitOk
         : v.status == FoVerdict::Status::Refuted ? kExitNegative
                                                  : kExitUnknown;
}

int cmd_check(const Options& o, std::istream& input, std::ostream& out) {
  Proof p = proof_from_json(read_json(o.proof_file, input));
  std::vector<Sequent> hyps;
  for (const auto& h : o.hyps) hyps.push_back(read_sequent(h));
  std::vector<Calculus> calculi;
  if (o.calculus.empty()) {
    calculi = {Calculus::GCiore, Calculus::GCiorePrime, Calculus::GQCiore};
  } else {
    try {
      calculi = {calculus_from_name(o.calculus)};
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  CheckResult first;
  for (std::size_t i = 0; i < calculi.size(); ++i) {
    const Calculus c = calculi[i];
    CheckResult r = check_proof(p, c, o.allow_cut, hyps);
    if (r.ok) {
      if (o.json) {
        out << Json{{"ok", true}, {"calculus", calculus_name(c)}, {"nodes", p.node_count()}}.dump(2) << '\n';
      } else {
        out << "ok (" << calculus_name(c) << ", " << p.node_count() << " nodes)\n";
      }
      return kExitOk;
    }
    first = r;  // the last calculus is the broadest
  }
  const Proof* bad = &p;
  for (auto i : first.path) bad = &bad->premises.at(i);
  if (o.json) {
    out << Json{{"ok", false}, {"message", first.message}, {"path", first.path}, {"node", to_string(bad->sequent)}}.dump(2)
        << '\n';
  } else {
    out << "fail: " << first.message << "\nat node " << to_string(bad->sequent) << " (" << rule_name(bad->rule)
        << "), path [";
    for (std::size_t i = 0; i < first.path.size(); ++i) out << (i ? "," : "") << first.path[i];
    out << "]\n";
  }
  return kExitNegative;
}

int cmd_tree(const Options& o, std::ostream& out) {
  Sequent s = read_sequent(o.sequent);
  ReductionTree t = build_reduction_tree(s, budget(o));
  out << dump_reduction_tree(t);
  bool open = false, refuted = false;
  for (const auto& n : t.nodes) {
    if (n.status == NodeStatus::Saturated) refuted = true;
    if (n.status != NodeStatus::Closed && n.status != NodeStatus::Expanded) open = true;
  }
  if (refuted) return kExitNegative;
  return open ? kExitUnknown : kExitOk;
}

struct Check {
  std::string name;
  bool ok;
  std::string detail;
};

std::vector<Check> truth_table_checks() {
  using T = TruthValue;
  // rows by first argument, columns by second, both in the order 0, 1/2, 1
  const T and_t[3][3] = {{T::Zero, T::Zero, T::Zero}, {T::Zero, T::Half, T::One}, {T::Zero, T::One, T::One}};
  const T or_t[3][3] = {{T::Zero, T::One, T::One}, {T::One, T::Half, T::One}, {T::One, T::One, T::One}};
  const T imp_t[3][3] = {{T::One, T::One, T::One}, {T::Zero, T::Half, T::One}, {T::Zero, T::One, T::One}};
  const T neg_t[3] = {T::One, T::Half, T::Zero};
  const T circ_t[3] = {T::One, T::Zero, T::One};
  std::size_t bad = 0, cells = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      bad += tv_and(kTruthValues[i], kTruthValues[j]) != and_t[i][j];
      bad += tv_or(kTruthValues[i], kTruthValues[j]) != or_t[i][j];
      bad += tv_imp(kTruthValues[i], kTruthValues[j]) != imp_t[i][j];
      cells += 3;
    }
    bad += tv_neg(kTruthValues[i]) != neg_t[i];
    bad += tv_circ(kTruthValues[i]) != circ_t[i];
    cells += 2;
  }
  return {{"truth tables", bad == 0, std::to_string(cells - bad) + "/" + std::to_string(cells) + " cells"}};
}

std::vector<Check> axiom_checks(std::size_t cap) {
  std::vector<Check> out;
  const Formula p = Formula::atom("p"), q = Formula::atom("q"), r = Formula::atom("r");
  const std::vector<std::array<Formula, 3>> instances = {
      {p, q, r},
      {Formula::neg(p), Formula::circ(q), Formula::conj(p, r)},
      {Formula::imp(p, Formula::neg(q)), Formula::disj(Formula::circ(p), r), Formula::neg(Formula::neg(q))},
  };
  for (const auto& [name, _] : hilbert_axioms(p, q, r)) {
    bool ok = true;
    for (const auto& inst : instances) {
      for (const auto& [n2, f] : hilbert_axioms(inst[0], inst[1], inst[2]))
        if (n2 == name && !matrix_valid(Sequent{{}, {f}}, cap)) ok = false;
    }
    out.push_back({"axiom " + name, ok, ""});
  }
  const Formula pa = Formula::pred("P", {Term::free_var("a1")});
  for (const auto& [name, f] : quantifier_axioms(pa, "a1", Term::free_var("a2"))) {
    bool ok = true;
    for (std::size_t n = 1; n <= 2 && ok; ++n) {
      Structure st;
      for (std::size_t i = 0; i < n; ++i) st.domain.push_back("e" + std::to_string(i + 1));
      st.add_predicate("P", 1);
      std::size_t total = 1;
      for (std::size_t i = 0; i < n; ++i) total *= 3;
      for (std::size_t code = 0; code < total && ok; ++code) {
        std::size_t c = code;
        for (std::size_t i = 0; i < n; ++i, c /= 3) st.predicates["P"].values[i] = kTruthValues[c % 3];
        ok = fo_sequent_valid_in(st, Sequent{{}, {f}});
      }
    }
    out.push_back({"axiom " + name, ok, "all structures up to size 2"});
  }
  return out;
}

std::vector<Check> theorem_checks(std::size_t cap) {
  std::vector<Check> out;
  for (const auto& [name, s] : theorem_suite()) {
    Verdict v = decide(s, cap);
    bool ok = v.proved && !v.proof->uses_cut() && check_proof(*v.proof, Calculus::GCiorePrime, false).ok &&
              check_subformula_property(*v.proof).ok;
    out.push_back({"theorem " + name, ok, to_string(s)});
  }
  return out;
}

std::vector<Check> fo_checks() {
  std::vector<Check> out;
  for (const auto& c : fo_regression_suite()) {
    bool ok;
    if (c.expansion) {
      ok = c.expansion->sequent == c.goal && check_proof(*c.expansion, Calculus::GQCiore, true, c.hypotheses).ok;
    } else {
      FoVerdict v = decide_fo(c.goal);
      ok = v.status == FoVerdict::Status::Proved && !v.proof->uses_cut() &&
           check_proof(*v.proof, Calculus::GQCiore, false).ok;
    }
    out.push_back({"first-order " + c.name, ok, to_string(c.goal)});
  }
  return out;
}

int cmd_selftest(const Options& o, std::ostream& out) {
  std::vector<Check> all;
  auto add = [&](std::vector<Check> v) { all.insert(all.end(), v.begin(), v.end()); };
  add(truth_table_checks());
  add(axiom_checks(atom_cap(o)));
  add(theorem_checks(atom_cap(o)));
  add(fo_checks());
  std::size_t failed = 0;
  for (const auto& c : all) {
    failed += !c.ok;
    if (o.json) continue;
    out << (c.ok ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << "  " << c.detail;
    out << '\n';
  }
  if (o.json) {
    Json j = Json::array();
    for (const auto& c : all) j.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    out << Json{{"checks", j}, {"failed", failed}}.dump(2) << '\n';
  } else {
    out << all.size() - failed << "/" << all.size() << " checks passed\n";
  }
  return failed ? kExitNegative : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& input, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decision procedures and proof checking for the paraconsistent logic Ciore and its first-order extension",
               "ciore"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool with_sequent) {
    sub->add_flag("--fo", o.fo, "Accept first-order input and use the reduction-tree prover");
    sub->add_flag("--json", o.json, "Machine-readable output");
    sub->add_option("--depth", o.depth, "Reduction-tree depth limit")->check(CLI::PositiveNumber);
    sub->add_option("--nodes", o.nodes, "Reduction-tree node limit")->check(CLI::PositiveNumber);
    sub->add_option("--atom-cap", o.atom_cap, "Maximum number of atoms for propositional procedures");
    if (with_sequent) sub->add_option("sequent", o.sequent, "Sequent such as \"p, ~p |- q\"")->required();
  };

  auto* prove = app.add_subcommand("prove", "Decide a sequent and print a proof or a countermodel");
  common(prove, true);
  auto* validity = app.add_subcommand("validity", "Print valid or invalid");
  common(validity, true);
  validity->add_option("--structure", o.structure_file, "Check validity in the finite structure in this JSON file");
  auto* countermodel = app.add_subcommand("countermodel", "Print a falsifying valuation or structure");
  common(countermodel, true);
  countermodel->add_option("--structure", o.structure_file, "Search assignments in this finite structure");
  auto* check = app.add_subcommand("check-proof", "Check a proof in JSON (file or - for standard input)");
  common(check, false);
  check->add_option("file", o.proof_file, "Proof JSON file");
  check->add_flag("--allow-cut", o.allow_cut, "Accept the cut rule");
  check->add_option("--calculus", o.calculus, "gciore, gciore-prime or gqciore (default: any)");
  check->add_option("--hyp", o.hyps, "Sequent a Hyp leaf may stand for (repeatable)");
  auto* selftest = app.add_subcommand("selftest", "Run the built-in regression suites");
  common(selftest, false);
  auto* tree = app.add_subcommand("reduction-tree", "Dump the reduction tree of a first-order sequent");
  common(tree, true);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (prove->parsed()) return cmd_prove(o, out);
    if (validity->parsed()) return cmd_validity(o, false, input, out);
    if (countermodel->parsed()) return cmd_validity(o, true, input, out);
    if (check->parsed()) return cmd_check(o, input, out);
    if (selftest->parsed()) return cmd_selftest(o, out);
    if (tree->parsed()) return cmd_tree(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const InvalidArgument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitUnknown;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  err << "usage error: no command\n";
  return kExitUsage;
}

}  // namespace ciore::cli
