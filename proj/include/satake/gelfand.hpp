#pragma once
// Gelfand-property certification by closure descent: a symmetric pair whose
// descendant closure consists of provably regular pairs satisfies the
// multiplicity-one (Gelfand) property, and the certificate transfers to the
// central quotients of a certified simply connected pair. The engine never
// claims the property fails: a pair it cannot certify is conditional, with
// the uncertified closure members named.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "satake/types.hpp"

namespace satake {

struct GelfandOptions {
  /// Pair classes hypothetically assumed regular (at the simply connected
  /// level); forms on the entries are ignored. Enlarging this set can only
  /// enlarge the certified set.
  std::vector<PairId> assume_regular;
};

enum class GelfandKind : std::uint8_t { gelfand_certified, conditional, out_of_scope };
const char* gelfand_kind_name(GelfandKind k);

struct GelfandVerdict {
  PairId pair;
  GelfandKind verdict = GelfandKind::conditional;
  /// Closure members without a regularity certificate, in catalog order.
  /// Empty exactly when the verdict is gelfand_certified.
  std::vector<PairId> blocking;
  std::vector<std::string> provenance;
};

/// Certification of p. At the simply connected form the verdict is
/// gelfand_certified or conditional according to whether every pair in the
/// descendant closure is provably regular (pleasant, nice, trivial, or
/// diagonal — or assumed). At any other form the verdict is certified when
/// the simply connected pair certifies (quotient transfer), out_of_scope
/// otherwise, carrying the simply connected blocking set.
GelfandVerdict gelfand_status(const PairId& p, const GelfandOptions& opt = {});

/// One-line record: `pair verdict blocking:[id;id] provenance:[s;s]`.
std::string gelfand_record_line(const GelfandVerdict& v);

enum class BlockingScope : std::uint8_t { exceptional, all };

/// Union of the blocking sets over the chosen seeds: the twelve exceptional
/// pairs, or every catalog pair of rank <= max_rank. Deduplicated, catalog
/// order, grouped by family.
struct BlockingReport {
  std::vector<PairId> pairs;
  std::vector<std::pair<std::string, std::vector<PairId>>> by_family;
};
BlockingReport blocking_report(BlockingScope scope, int max_rank,
                               const GelfandOptions& opt = {});

/// Catalog pairs of rank <= max_rank partitioned by certificate source:
/// certified by the descent engine; uncertified here but Gelfand by the
/// cited literature; neither (open).
struct CertifiedList {
  std::vector<PairId> engine;
  std::vector<PairId> external;
  std::vector<PairId> open;
};
CertifiedList certified_list(int max_rank, const GelfandOptions& opt = {});

/// Citation when the pair class is known to satisfy the Gelfand property in
/// the literature, independently of the descent engine.
std::optional<std::string> literature_gelfand(const PairId& p);

/// Irreducible catalog pairs of rank <= max_rank whose regularity the
/// engine cannot certify — the natural hypothesis set for assume_regular.
std::vector<PairId> open_pairs(int max_rank);

}  // namespace satake
