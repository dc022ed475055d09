#pragma once
// Descendant enumeration by white-node erasure on extended Satake diagrams,
// with arithmetic witnesses: every admissible erasure names a torsion element
// of a maximal torus whose centralizer realizes the descendant, and the
// witness is checked independently against the ambient root system.

#include <Eigen/Core>

#include <string>
#include <vector>

#include "satake/catalog.hpp"
#include "satake/types.hpp"

namespace satake {

/// Arithmetic witness for one erasure: exponents over the ambient simple
/// basis (1 on erased non-lowest-root nodes, 0 elsewhere) and the order of
/// the witnessing torsion element.
struct Witness {
  Eigen::VectorXi exponents;
  int modulus = 0;
};

/// One admissible erasure from the extended Satake diagram of `pair`:
/// a nonempty bar-closed set of white nodes (never just the lowest-root
/// orbit), the recognized decomposition of the survivors, and the witness.
/// Diagonal-pair ambients carry no arithmetic witness (exponents empty);
/// they are checked structurally instead.
struct ErasureCase {
  PairId pair;
  std::vector<std::string> erased;  // node ids, sorted
  Decomposition result;
  Witness witness;
};

/// A deduplicated descendant: the decomposition plus the smallest witness
/// modulus over all erasures that produce it.
struct DescendantRecord {
  Decomposition decomposition;
  int min_modulus = 0;
};

/// All admissible erasures of p, in deterministic order (erasure size, then
/// node ids). The trivial family has none (no white nodes); erasures whose
/// survivors are empty (pure torus) are excluded.
std::vector<ErasureCase> enumerate_erasures(const PairId& p);

/// Deduplicated direct descendants of p, ordered by (smallest modulus,
/// factor names, torus rank). Trivial pairs yield the empty list.
std::vector<DescendantRecord> enumerate_descendants(const PairId& p);

/// Transitive closure under taking descendant factors.
struct DescendantClosure {
  std::vector<DescendantRecord> direct;  // of the starting pair
  std::vector<PairId> closure;           // reachable pairs incl. the start,
                                         // catalog order
};
DescendantClosure descendant_closure(const PairId& p);

/// Independent verification of one erasure case against the ambient root
/// system: the centralizer subsystem of the witnessed torsion element must
/// match the decomposition's semisimple types and its corank the torus rank.
/// Returns false (with no side effects) on any mismatch.
bool verify_witness(const ErasureCase& c);

/// True if the decomposition is the pair itself (single factor equal to the
/// pair, no torus) — the reference tables omit these rows.
bool is_self_descendant(const PairId& p, const Decomposition& d);

/// Check one descendant decomposition of a CLASSICAL pair against the
/// closed-form row schema of the reference classification: an optional
/// lowest-root-end cap, any number of middle factors of the family's middle
/// class, and an optional opposite-end cap preserving the family's
/// invariant. Throws contract_error for non-classical ancestors. On
/// mismatch, *why (if non-null) receives a diagnostic.
bool matches_family_schema(const PairId& ancestor, const Decomposition& d,
                           std::string* why = nullptr);

/// Human-readable descendant table for every catalog pair whose family name
/// matches the pattern (exact name, prefix ending in '*', or "*").
std::string emit_table(const std::string& family_pattern, int max_rank);

/// Record formatting: ancestor id, ';'-joined factor ids, torus rank, and
/// modulus, tab-separated.
std::string descendant_record_line(const PairId& p, const DescendantRecord& r);

/// Split a displayed decomposition "(G,H)+(G,H)+..." into factor displays
/// (splitting on '+' at parenthesis depth zero only).
std::vector<std::string> split_decomposition_display(const std::string& text);

/// Parse a displayed decomposition into canonical factors (torus rank is not
/// part of the display; it is left 0).
std::vector<PairId> parse_decomposition_display(const std::string& text);

}  // namespace satake
