#pragma once
// The catalog of complex symmetric pairs: canonical pair identifiers for the
// classical families, the twelve exceptional pairs, and the trivial and
// diagonal constructions; Satake diagrams and their extended forms; inverse
// recognition of a Satake diagram as a catalog entry; and enumeration up to
// a rank bound.

#include <string>
#include <vector>

#include "satake/diagram.hpp"
#include "satake/types.hpp"

namespace satake {

/// True if p is a canonical catalog id (parameters in range, not an alias of
/// a smaller or different family).
bool is_canonical_pair(const PairId& p);

/// Rewrite p to its canonical spelling: orders symmetric parameters, folds
/// degenerate and coincidental low-rank parameters onto their canonical
/// family (e.g. a rank-1 symplectic split pair is the rank-1 split linear
/// pair), and preserves the form. Throws contract_error for parameters that
/// denote no pair at all.
PairId canonicalize(const PairId& p);

/// Bit-exact grammar `FAMILY(param=value,...)[@form]`; parse accepts named or
/// positional parameters and an optional form suffix; the printer emits named
/// parameters, omits `b=0`, and omits the default simply-connected form.
std::string pair_name(const PairId& p);
PairId parse_pair_name(const std::string& text);

/// Human display "(G,H)" with subscripted types, e.g. "(A_5,D_3)"; rank-0
/// summands of H are dropped; a torus summand prints as C.
std::string display_name(const PairId& p);

/// Parse a display form back into a canonical pair. Accepts the notational
/// variants found in the reference tables (degenerate rank-0 summands,
/// alias spellings); throws parse_error when the display is inconsistent —
/// e.g. the summand sizes cannot fill the stated ambient — which is exactly
/// the mechanical test that convicts a misprinted table entry.
PairId parse_display_name(const std::string& text);

/// Ambient group data. ambient_type throws for the diagonal family (the
/// ambient there is a product); ambient_rank handles every family (diagonal:
/// twice the factor rank).
SimpleType ambient_type(const PairId& p);
int ambient_rank(const PairId& p);

/// Rank used for catalog listing order and the enumeration cutoff: the
/// factor rank for trivial and diagonal pairs, the ambient rank otherwise.
int catalog_rank(const PairId& p);

/// The Satake diagram of a canonical pair (node ids follow the ambient
/// Dynkin diagram; the diagonal family uses two suffixed copies).
SatakeDiagram satake_of(const PairId& p);

/// The extended Satake diagram: ambient extended Dynkin diagram(s) with
/// colors and bars, the lowest-root node(s) designated, and node marks set
/// to the highest-root coefficients (lowest-root nodes carry mark 1).
ExtendedSatakeDiagram extended_satake_of(const PairId& p);

/// Identify a connected Satake diagram (connected counting bars) as a
/// canonical pair: all-black diagrams are trivial pairs, bar-matched doubles
/// are diagonal pairs, anything else is matched against the catalog by
/// canonical form. Unmatched input raises contract_error with the serialized
/// diagram in the message.
PairId recognize(const SatakeDiagram& d);

/// All canonical pairs with catalog_rank <= max_rank, sorted by
/// (catalog_rank, family, parameters); forms are not enumerated (all sc).
std::vector<PairId> catalog_enumerate(int max_rank);

/// Listing order: (catalog_rank, family, parameters, form).
bool catalog_less(const PairId& a, const PairId& b);

}  // namespace satake
