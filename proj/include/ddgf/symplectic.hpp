#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ddgf/ddg.hpp"
#include "ddgf/field.hpp"
#include "ddgf/graphs.hpp"

namespace ddgf {

/// Symplectic graph Sp(2t,q) on the 1-dimensional subspaces of GF(q)^{2t}
/// with the standard alternating form; verified strongly regular with the
/// theorem parameters before returning. Vertex count capped at 1500.
Graph sp_graph(std::size_t t, std::uint64_t q);

/// Sp(4,q), q odd, in the GF(q^2) model: vertices are the F_q^*-orbits of
/// nonzero pairs (z1,z2), adjacent when z1 z2' - z2 z1' lies in F_q.
struct Sp4Model {
  QuadExt field;  // GF(q^2) as pairs over GF(q)
  std::uint64_t q = 0;
  Graph graph;
  std::vector<std::array<felt, 2>> labels;  // vertex -> canonical (z1,z2)
  std::vector<std::uint32_t> vertex_of;     // pair code z1*q^2+z2 -> vertex
  std::size_t vertex(felt z1, felt z2) const;  // canonicalizes, then looks up
};

Sp4Model sp4_extension_model(std::uint64_t q);

/// The map (z1,z2) -> (i z1, i z2) on canonical vertex labels.
std::vector<std::size_t> sp4_involution(const Sp4Model& model);

struct Sp4ComplementDdg {
  Sp4Model model;
  ThinDDG ddg;  // complement graph, involution-orbit partition
};

/// Complement of Sp(4,q) with the involution-orbit partition, verified as an
/// almost proper thin DDG with parameters (v, q^3, q^2(q-1), q^2(q-1), v/2, 2).
Sp4ComplementDdg sp4_complement_ddg(std::uint64_t q);

struct Sp4Star {
  Sp4Model model;
  Graph graph;        // Sp(4,q) minus the determinant-zero edges
  Partition spread;   // the q^2+1 deleted (q+1)-cliques
  IntersectionArray array;
  Partition antipodal;
};

/// Deletes the determinant-zero edges of Sp(4,q); verifies the deleted edges
/// form a spread, the result is distance-regular of diameter 3, and the
/// antipodal classes equal the spread cliques.
Sp4Star sp4_star(std::uint64_t q);

struct MathonGraph {
  Graph graph;
  std::vector<std::array<felt, 2>> labels;  // vertex -> canonical K-orbit rep
  std::vector<std::uint32_t> vertex_of;     // pair code -> vertex
  IntersectionArray array;
  Partition antipodal;
  std::uint64_t q = 0;  // field size
  std::size_t r = 0;    // subgroup index
  std::uint64_t m = 0;  // subgroup order
};

/// M(q) on the K-orbits of GF(q)^2 \ {0}, K the index-r multiplicative
/// subgroup, adjacency x1 y2 - x2 y1 in bK; verified antipodal
/// distance-regular of diameter 3 with r(q+1) vertices and valency q.
/// Needs q = rm+1 with r > 1 and (m even or q a power of 2).
MathonGraph mathon_graph(std::uint64_t q_size, std::size_t r, felt b = 1);

struct MathonQuotientReport {
  std::uint64_t q = 0;
  std::size_t ddg_order = 0;    // 2 * class_count
  std::size_t class_count = 0;  // order of R, Q and M(q^2)
  std::size_t weight = 0;       // w(Q) = q^2
  std::string mathon_array;
  std::vector<std::string> verified;  // one line per verified identity
};

/// Builds (R,Q) from the complement-of-Sp(4,q) DDG and M(q^2) from the
/// subgroup K' = F_q^* union i F_q^* of order 2(q-1), identifies classes
/// {v, iv} with K'-orbits via canonical representatives, and verifies
/// B = R = Q (mod 2), Q^2 = q^2 I with zero diagonal, and |Q| = B, i.e. Q is
/// an orthogonal signing of M(q^2).
MathonQuotientReport mathon_quotient_check(std::uint64_t q);

}  // namespace ddgf
