#pragma once

// Camina-pair decisions and the per-group bound checks for pairs (G, Z(G)).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "camina/characters.hpp"
#include "camina/group.hpp"
#include "camina/structure.hpp"

namespace camina {

/// g outside N and the element n of N that the criterion could not reach.
struct PairWitness {
  ElementId g = 0;
  ElementId n = 0;
};

struct CriterionResult {
  bool holds = true;
  std::optional<PairWitness> witness;
};

/// Throws InvalidPairTarget unless 1 < N < G and N is normal.
void validate_pair_target(const FiniteGroup& g, const Subgroup& n);

/// Every g outside N is conjugate to all of gN.
CriterionResult camina_by_classes(const FiniteGroup& g, const Subgroup& n);
/// For every g outside N, {[y, g] : y in G} contains N.
CriterionResult camina_by_commutators(const FiniteGroup& g, const Subgroup& n);
/// |C_G(g)| = |C_{G/N}(gN)| for every g outside N.
CriterionResult camina_by_centralizers(const FiniteGroup& g, const Subgroup& n);

struct CaminaVerdict {
  Subgroup pair_target;
  bool by_classes = false;
  bool by_commutators = false;
  bool by_centralizers = false;
  /// Present when a character table was supplied.
  std::optional<bool> by_characters;
  std::optional<PairWitness> witness;
  /// (G, G') is a Camina pair with 1 < G' < G.
  bool is_camina_group = false;

  bool holds() const { return by_classes; }
};

/// Runs all criteria for (G, N). Throws EquivalenceViolation if they
/// disagree, InvalidPairTarget for an invalid N.
CaminaVerdict camina_verdict(const FiniteGroup& g, const Subgroup& n, const CharacterTable* table = nullptr);

bool is_camina_group(const FiniteGroup& g);

enum class CheckOutcome { Pass, Fail, Vacuous };

std::string_view to_string(CheckOutcome outcome);

/// An implication "hypothesis => conclusion" evaluated on one group. The
/// two halves are kept separately so vacuous passes stay visible.
struct NamedCheck {
  std::string id;
  bool hypothesis = true;
  bool conclusion = true;
  std::string detail;

  CheckOutcome outcome() const {
    if (!hypothesis) return CheckOutcome::Vacuous;
    return conclusion ? CheckOutcome::Pass : CheckOutcome::Fail;
  }
};

/// Check ids in report column order.
const std::vector<std::string>& bound_check_ids();

struct BoundReport {
  /// |G:Z| = p^n, |Z| = p^m, |G':Z| = p^l.
  std::uint64_t p = 0;
  int n = 0;
  int m = 0;
  int l = 0;
  std::optional<int> class_c;
  /// exp(G/Z) = p^quotient_exponent_n.
  int quotient_exponent_n = 0;
  std::vector<NamedCheck> checks;

  const NamedCheck* find(std::string_view id) const;
  bool any_fail() const;
};

/// Elements x with C(x) meet G' strictly larger than Z. Throws
/// NotApplicable when Z = G' (the set is empty by convention).
std::vector<ElementId> script_c(const FiniteGroup& g, const Subgroup& z, const Subgroup& derived);
/// Union of C(a) over a in G' \ Z, sorted.
std::vector<ElementId> script_c_union(const FiniteGroup& g, const Subgroup& z, const Subgroup& derived);

/// Evaluates every bound check for a true (G, Z(G)) verdict. The character
/// part of L2.4 is skipped (and noted in its detail) when table is null.
BoundReport verify_bounds(const FiniteGroup& g, const CaminaVerdict& verdict, const CharacterTable* table = nullptr);

struct CenterPairAnalysis {
  /// False when Z(G) is trivial or all of G.
  bool applicable = false;
  std::optional<CaminaVerdict> verdict;
  std::optional<BoundReport> report;

  bool is_center_pair() const { return verdict && verdict->holds(); }
};

CenterPairAnalysis analyze_center_pair(const FiniteGroup& g, const CharacterTable* table = nullptr);

}  // namespace camina
