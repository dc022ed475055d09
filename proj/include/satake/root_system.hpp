#pragma once
// Root systems for the simple types A–G: positive roots as exact integer
// coefficient vectors over the simple basis, Cartan matrices, integer-scaled
// invariant bilinear forms, highest-root marks, extended (affine) Dynkin
// diagrams, Lie-type identification of abstract simple-root sets, and
// centralizer subsystems of semisimple torsion elements.
//
// Everything is exact integer arithmetic (Eigen integer matrices); no
// floating point is used anywhere.

#include <Eigen/Core>

#include <vector>

#include "satake/diagram.hpp"
#include "satake/types.hpp"

namespace satake {

/// A simple root system with its full positive-root set.
///
/// Roots are stored as integer coefficient vectors over the simple basis
/// (simple root i is the i-th unit vector). `cartan(i,j)` is the Cartan
/// integer <alpha_i, alpha_j^vee>; `bilinear` is the invariant inner product
/// scaled so all entries are integers (long roots have squared length 4 in
/// B/C/F, 6 in G2, and 2 in the simply-laced types).
struct RootSystem {
  SimpleType type;
  Eigen::MatrixXi cartan;
  Eigen::MatrixXi bilinear;
  std::vector<Eigen::VectorXi> positive_roots;  // includes the simple roots
  Eigen::VectorXi highest_root;                 // the marks

  int rank() const { return static_cast<int>(cartan.rows()); }
};

/// Build the root system of a canonical simple type. Positive roots are
/// generated by closing the simple roots under root-string addition; the
/// highest root is the unique maximal element.
RootSystem build_root_system(SimpleType t);

/// <beta, alpha_i^vee> for a coefficient vector beta.
int simple_pairing(const RootSystem& rs, const Eigen::VectorXi& beta, int i);

/// Cartan integer <beta, gamma^vee> = 2(beta,gamma)/(gamma,gamma) between two
/// coefficient vectors (exact integer division; asserts divisibility).
int cartan_integer(const RootSystem& rs, const Eigen::VectorXi& beta,
                   const Eigen::VectorXi& gamma);

/// The Dynkin diagram of t, with node ids "a1".."an" in Bourbaki numbering.
Diagram dynkin_diagram(SimpleType t);

/// The extended (affine) Dynkin diagram: dynkin_diagram(t) plus the
/// lowest-root node "g", edges computed from the Cartan pairings of the
/// lowest root with the simple roots, and node marks (highest-root
/// coefficients; the extra node carries mark 1).
Diagram extended_diagram(SimpleType t);

/// Classify an abstract simple-root set inside an ambient system: compute the
/// mutual Cartan integers, split into connected components, and name each
/// component's type. Decomposable input is permitted; canonical low-rank
/// spellings are returned. Throws contract_error if a component is not of
/// finite type (signals a bug upstream).
std::vector<SimpleType> identify(const RootSystem& ambient,
                                 const std::vector<Eigen::VectorXi>& simple_system);

/// A root subsystem cut out of an ambient system.
struct Subsystem {
  std::vector<Eigen::VectorXi> roots;          // positive part
  std::vector<Eigen::VectorXi> simple_system;  // indecomposable positives
  std::vector<SimpleType> type_decomposition;  // sorted
  int corank = 0;  // ambient rank - rank spanned by simple_system
};

/// The subsystem { beta = sum c_i alpha_i : sum c_i * exponents_i == 0 mod
/// modulus } — the root system of the centralizer of the torsion element
/// whose simple-root exponents are given. modulus >= 1; modulus 1 yields the
/// full system.
Subsystem centralizer_subsystem(const RootSystem& rs,
                                const Eigen::VectorXi& exponents, int modulus);

/// Rank of an integer matrix by fraction-free elimination (exact).
int integer_matrix_rank(Eigen::MatrixXi m);

}  // namespace satake
