#pragma once
// Core vocabulary for the symmetric-pair machinery: simple Lie types with
// their documented low-rank aliases, isogeny classes (group forms), canonical
// symmetric-pair identifiers (Araki family labels plus integer parameters),
// and decompositions (multisets of pair classes plus a central-torus rank).

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace satake {

/// Violation of a documented internal contract (maps to CLI exit code 3).
struct contract_error : std::logic_error {
  using std::logic_error::logic_error;
};

/// Malformed user-facing input: pair-id strings, CLI arguments, fixture rows
/// (maps to CLI exit code 1).
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class TypeLetter : std::uint8_t { A, B, C, D, E, F, G };

/// A simple Lie type in canonical spelling.
///
/// Canonical ranks: A(n>=1), B(n>=2), C(n>=3), D(n>=4), E(6..8), F(4), G(2).
/// The aliases B1 = C1 = A1, C2 = B2, D3 = A3 and the decomposable D2 =
/// A1+A1 are accepted by normalize_types(); a canonical SimpleType never
/// holds an alias spelling.
struct SimpleType {
  TypeLetter letter{TypeLetter::A};
  int rank{1};
  auto operator<=>(const SimpleType&) const = default;
};

/// True iff (letter, rank) is a canonical spelling.
bool is_canonical_type(TypeLetter letter, int rank);

/// Canonicalize a necessarily-simple type; rejects decomposable or empty
/// spellings (D2, D1, rank 0). Accepts B1/C1 -> A1, C2 -> B2, D3 -> A3.
SimpleType make_type(TypeLetter letter, int rank);

/// Full normalization of a (possibly degenerate) type spelling into canonical
/// simple factors plus a torus-rank contribution:
///   rank 0 (A0/B0/C0/D0) -> no factors; D1 -> torus + 1; D2 -> {A1, A1};
///   otherwise one factor per make_type.
struct NormalizedTypes {
  std::vector<SimpleType> factors;
  int torus = 0;
};
NormalizedTypes normalize_types(TypeLetter letter, int rank);

/// "A3", "E8", ... (canonical or not; prints the spelling given).
std::string type_name(TypeLetter letter, int rank);
std::string type_name(const SimpleType& t);

/// Parse "A3", "D4", ... into letter/rank (no normalization).
void parse_type_name(const std::string& text, TypeLetter& letter, int& rank);
/// Parse and canonicalize; rejects decomposable spellings.
SimpleType parse_simple_type(const std::string& text);

/// All canonical simple types of rank <= max_rank, ordered by (rank, letter).
std::vector<SimpleType> all_simple_types(int max_rank);

// ---------------------------------------------------------------------------

/// Isogeny class of the ambient group. `sc` is simply connected (default);
/// `so` is the special-orthogonal form of B/D ambients; `adj` is adjoint;
/// `quot{k}` is SL_{n+1}/Z_k for A ambients (and the corresponding unique
/// central quotient where one exists).
struct Form {
  enum Kind : std::uint8_t { sc, so, adj, quot } kind = sc;
  int k = 0;  // quotient order, used only when kind == quot
  auto operator<=>(const Form&) const = default;
};

/// Araki family labels, following the reference table's association of label,
/// diagram, and fixed-point type. TRIV is the trivial pair (G,G); DIAG the
/// diagonal pair (GxG, G).
enum class Family : std::uint8_t {
  AI, AII, AIIIa, AIIIb,
  CI, CIIa, CIIb,
  BI, BII,
  DIa, DIb, DIc, DIIIa, DIIIb,
  GI, FI, FII,
  EI, EII, EIII, EIV, EV, EVI, EVII, EVIII, EIX,
  TRIV, DIAG,
};

const char* family_name(Family f);

/// Canonical identifier of a symmetric-pair class.
///
/// Parameter usage by family:
///   AI/AII/AIIIb/CI/CIIb/DIIIa/DIIIb: n;
///   AIIIa/CIIa/BI/BII: r, s;
///   DIa/DIb/DIc: r, s and b (b=0: (D_{r+s}, D_r+D_s); b=1:
///     (D_{r+s+1}, B_r+B_s));
///   exceptional families: no parameters;
///   TRIV/DIAG: the simple type t.
/// The form tracks the ambient isogeny class and is ignored by diagram-level
/// operations (the Satake diagram is form-blind).
struct PairId {
  Family family{Family::AI};
  int n = 0;
  int r = 0, s = 0, b = 0;
  SimpleType t{TypeLetter::A, 1};
  Form form{};

  auto operator<=>(const PairId&) const = default;
};

/// A multiset of pair classes plus a central-torus rank — the result type of
/// descendant recognition. Factors carry unresolved forms (Lie-type level).
struct Decomposition {
  std::vector<PairId> factors;  // kept sorted (canonical order)
  int torus_rank = 0;

  auto operator<=>(const Decomposition&) const = default;
};

}  // namespace satake
