#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ciore/fo_semantics.hpp"
#include "ciore/sequent.hpp"

namespace ciore {

/// Reduction phases in cyclic order; stage k runs phase k mod 27.
enum class Phase : std::uint8_t {
  CircL,
  CircR,
  NegR,
  NegCircL,
  AndL,
  AndR,
  OrL,
  OrR,
  ImpL,
  ImpR,
  NegOrL,
  NegOrR,
  NegAndL,
  NegAndR,
  NegImpL,
  NegImpR,
  NegNegL,
  NegNegR,
  ForallL,
  ForallR,
  ExistsL,
  ExistsR,
  CircForallL,
  CircForallR,
  CircExistsL,
  CircExistsR,
  Copy,
};

inline constexpr std::size_t kPhaseCount = 27;

/// "(o|-)", "(|-o)", "(|-~)", ... in the ASCII notation of the printer.
const std::string& phase_name(Phase p);
Phase phase_at_stage(std::size_t k);
/// The single-principal rule a phase applies.
RuleId phase_rule(Phase p);

struct Budget {
  std::size_t max_nodes = 20000;
  std::size_t max_depth = 400;
};

/// One principal reduced in a step.
struct Reduction {
  Phase phase;
  Formula principal;
  std::optional<Term> side;  // instance or eigenvariable
  std::size_t alternatives;  // number of premises of the rule
};

enum class NodeStatus {
  Closed,      // antecedent and succedent share a formula
  Expanded,    // has children
  Saturated,   // a full cycle changes nothing; countermodel verified
  Unverified,  // saturated but the extracted structure does not refute the root
  Unexpanded,  // cut off by the budget or by an early stop
};

const std::string& status_name(NodeStatus s);

struct ReductionNode {
  Sequent sequent;
  std::size_t stage = 0;  // stage at which the node was written
  std::size_t depth = 0;
  std::optional<std::size_t> parent;
  std::vector<std::size_t> children;
  std::vector<Reduction> step;  // reductions producing the children
  std::size_t step_stage = 0;
  std::set<std::pair<Formula, Phase>> marks;                        // reductions already applied
  std::map<std::pair<Formula, Phase>, std::set<std::string>> used;  // instances already taken
  std::vector<std::string> available;
  NodeStatus status = NodeStatus::Unexpanded;
};

struct ReductionTree {
  std::vector<ReductionNode> nodes;  // nodes[0] is the root
  bool budget_exhausted = false;

  std::vector<std::size_t> branch(std::size_t leaf) const;  // root first
  std::size_t max_depth() const;
};

/// Builds the whole tree (every branch, up to the budget). Throws
/// InvalidArgument on function symbols or constants.
ReductionTree build_reduction_tree(const Sequent& s, const Budget& budget = {});

/// Indented text, one node per line.
std::string dump_reduction_tree(const ReductionTree& t);

/// Structure and identity assignment read off the branch ending at `leaf`,
/// not yet verified.
std::pair<Structure, Assignment> extract_countermodel(const ReductionTree& t, std::size_t leaf);

/// Proof assembled from a tree whose leaves are all closed.
Proof compile_proof(const ReductionTree& t);

struct FoVerdict {
  enum class Status { Proved, Refuted, Unknown };
  Status status = Status::Unknown;
  std::optional<Proof> proof;
  std::optional<Structure> structure;
  Assignment assignment;
  std::string report;
  std::size_t nodes = 0;
};

const std::string& status_name(FoVerdict::Status s);

/// Proof when every branch closes; a verified countermodel from the first
/// saturated branch; Unknown otherwise.
FoVerdict decide_fo(const Sequent& s, const Budget& budget = {});

struct FoRegressionCase {
  std::string name;
  Sequent goal;
  // For derived-rule cases: the expansion and the hypotheses it rests on.
  std::optional<Proof> expansion;
  std::vector<Sequent> hypotheses;
};

/// The four quantifier sequents and the two derived introduction rules, over a
/// unary P (and Q for the derived rules) with b := a1.
std::vector<FoRegressionCase> fo_regression_suite();

}  // namespace ciore
