#pragma once
// Dynkin and Satake diagrams: labeled multigraphs with edge multiplicities
// and arrow directions, node colors (white/black), a bar involution on white
// nodes, and optional node marks. Includes canonical forms (isomorphism
// classification by exhaustive backtracking with partition refinement),
// connected components (bars count as connections), white-node erasure, and
// the byte-exact textual serialization used by fixtures and the CLI.

#include <set>
#include <string>
#include <vector>

#include "satake/types.hpp"

namespace satake {

/// One edge record per unordered node pair. `arrow` is the index of the
/// SHORTER root's node for multiplicity >= 2, or -1 when the edge is
/// undirected (single edges; the equal-length affine A1 bond).
struct DiagramEdge {
  int u = 0, v = 0;  // node indices, u < v
  int mult = 1;      // 1, 2, or 3
  int arrow = -1;

  auto operator<=>(const DiagramEdge&) const = default;
};

/// A plain diagram: nodes with string ids, edges, optional marks.
struct Diagram {
  std::vector<std::string> nodes;
  std::vector<DiagramEdge> edges;
  std::vector<int> marks;  // parallel to nodes; 0 = unmarked; else positive

  int size() const { return static_cast<int>(nodes.size()); }
  int index_of(const std::string& id) const;  // -1 if absent
};

/// Natural ordering for node ids ("a2" < "a10" < "g"; copy suffixes ".1" <
/// ".2" compare after the base id). Used by serialization only.
bool node_id_less(const std::string& a, const std::string& b);

/// Construction helpers (ids must be unique; edges reference existing ids).
void add_node(Diagram& d, const std::string& id, int mark = 0);
void add_edge(Diagram& d, const std::string& a, const std::string& b,
              int mult = 1, const std::string& short_end = "");

/// A Satake diagram: colored diagram plus a bar involution on white nodes.
struct SatakeDiagram {
  Diagram base;
  std::vector<bool> black;  // parallel to base.nodes
  std::vector<int> bar;     // partner node index, or -1; only on white nodes

  int size() const { return base.size(); }
};

/// A Satake diagram of the given shape, all nodes white (or all black), no
/// bars.
SatakeDiagram monochrome(const Diagram& d, bool all_black);

/// Check the documented invariants (bars only on whites, involution,
/// fixed-point-free on support; edge sanity). Throws contract_error.
void validate(const SatakeDiagram& d);

/// An extended Satake diagram: designated lowest-root node(s). One white
/// gamma node for nontrivial irreducible pairs; black for the trivial pair;
/// two bar-joined gamma nodes for the diagonal pair.
struct ExtendedSatakeDiagram {
  SatakeDiagram base;
  std::vector<int> gamma_nodes;
};

/// Isomorphism-canonical byte string: equal strings iff the diagrams are
/// isomorphic as graphs with multiplicities, arrows, colors, bars, and marks.
/// Deterministic (no randomized hashing); diagrams have <= 18 nodes.
std::string canonical_form(const SatakeDiagram& d);

/// Connected components. Connectivity uses BOTH Dynkin edges AND bars, so a
/// diagonal pair (two edge-disjoint copies joined by bars) is one component.
std::vector<SatakeDiagram> components(const SatakeDiagram& d);

/// Erase a bar-closed nonempty set of white nodes (given by id) together
/// with incident edges; surviving colors, bars, and marks are unchanged
/// (marks are dropped — the result is an ordinary Satake diagram).
/// Throws contract_error if s is empty, contains a black or unknown node, or
/// is not bar-closed.
SatakeDiagram erase(const ExtendedSatakeDiagram& d,
                    const std::set<std::string>& s);

/// Classify a CONNECTED plain diagram shape as a canonical simple type.
/// Throws contract_error for shapes that are not of finite type (affine
/// shapes can never survive a nonempty erasure; seeing one is a bug).
SimpleType classify_shape(const Diagram& connected);

/// Textual serialization: one node line `id color mark bar-partner?` then one
/// edge line `id id multiplicity direction?` per edge, each section sorted by
/// natural id order; byte-exact across platforms.
std::string serialize(const SatakeDiagram& d);

/// Inverse of serialize (accepts exactly the documented format).
SatakeDiagram parse_satake(const std::string& text);

}  // namespace satake
