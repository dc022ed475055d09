#pragma once
// Classification layer: centre data of the ambient group, the pleasantness
// threshold of a pair class across its isogeny classes, Sekiguchi's nice
// pairs, provable regularity, and a cross-check of the generic pleasantness
// criteria against the per-family classification.

#include <map>
#include <string>
#include <vector>

#include "satake/types.hpp"

namespace satake {

enum class ThetaAction : std::uint8_t { fixes, inverts, mixed };
const char* theta_action_name(ThetaAction a);

/// Centre of the simply connected ambient group together with the action of
/// the defining involution on it. `fixes` means element-wise (always the
/// case for inner involutions); `inverts` means z -> z^-1 on a cyclic
/// centre; `mixed` covers the remaining nontrivial actions (the Klein
/// centre of an even orthogonal ambient under an involution negating the
/// volume element, and the factor swap on a diagonal pair). Inversion on a
/// centre of order <= 2 is reported as `fixes`.
struct CenterData {
  int order = 1;
  std::string structure;  // "1", "Z5", "Z2xZ2", "Z3xZ3", ...
  ThetaAction theta_action = ThetaAction::fixes;
};
CenterData center_of(const PairId& p);

/// The pleasantness threshold of a pair class: the isogeny class closest to
/// the simply connected cover at which the pair is pleasant. Every central
/// quotient of the threshold form is pleasant; no covered form strictly
/// nearer the simply connected cover is. Encodings:
///   sc       pleasant for every isogeny class;
///   so       orthogonal ambients: the vector quotient SO and below;
///   quot(k)  linear ambients: SL/Z_k and below (k the full 2-part of the
///            centre order);
///   adj      only the adjoint form (which is pleasant for every pair).
Form pleasant_threshold(const PairId& p);

/// Rule id witnessing the threshold: "centerless", "center-odd-fixed",
/// "center-odd-inverted", "eigenspace-unequal", "eigenspace-swap",
/// "spin-odd-parts", "cyclic-center-parity", "case-analysis",
/// "trivial-pair", "diagonal-pair".
std::string threshold_rule(const PairId& p);

enum class Pleasant : std::uint8_t { yes, no, depends_on_form };
const char* pleasant_name(Pleasant v);

/// Class-level classification record. `pleasant` summarizes the threshold:
/// yes = pleasant at the simply connected cover (hence everywhere), no =
/// pleasant only at the adjoint form, depends_on_form = some intermediate
/// isogeny class is the cutoff. `regular_known` is the provable-regularity
/// flag at the simply connected cover: false means "not provable here",
/// never "irregular".
struct Status {
  Pleasant pleasant = Pleasant::no;
  std::string pleasant_rule;
  Form threshold{};
  bool nice = false;
  bool regular_known = false;
  std::vector<std::string> provenance;
};
Status classify(const PairId& p);

/// Sekiguchi's classification of nice pairs, by family. Precondition: the
/// pair is irreducible (not a trivial or diagonal pair); throws
/// contract_error otherwise.
bool is_nice(const PairId& p);

enum class FormVerdict : std::uint8_t { yes, no, form_not_covered };
const char* form_verdict_name(FormVerdict v);

/// Pleasantness of the concrete pair p at its recorded isogeny class (the
/// default form is the simply connected cover). A form outside the decided
/// set — a half-spin quotient of an even orthogonal ambient, or a form
/// that does not exist for the ambient — yields form_not_covered with the
/// reason in `rule`; the verdict is reported, never guessed.
struct FormAnswer {
  FormVerdict verdict = FormVerdict::no;
  std::string rule;
  std::vector<std::string> provenance;
};
FormAnswer is_pleasant(const PairId& p);

/// True when regularity of p (at its recorded form) is provable here:
/// pleasant at that form, or nice, or a trivial/diagonal pair. False means
/// not provable by these criteria, not a claim of irregularity.
bool is_regular_known(const PairId& p);

/// Replays the generic pleasantness criteria (centre parity, eigenspace
/// dimensions, the spin parity rule) over the catalog and checks each
/// verdict they force against the per-family classification. Any
/// disagreement is a defect in one of the two.
struct CrosscheckReport {
  int pairs = 0;          // irreducible pairs examined
  int covered = 0;        // pairs with at least one applicable generic rule
  int disagreements = 0;
  std::map<std::string, int> fires;  // rule id -> number of pairs it fired on
  std::vector<std::string> conflicts;   // empty on success
  std::vector<std::string> uncovered;   // pairs decided by case analysis only
  std::string summary() const;
};
CrosscheckReport crosscheck_rules_vs_tables(int max_rank);

}  // namespace satake
