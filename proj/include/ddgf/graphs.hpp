#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ddgf/matrix.hpp"

namespace ddgf {

/// Simple undirected graph: a symmetric 0/1 adjacency matrix with zero
/// diagonal. Stored compactly; adjacency() materializes the IntMatrix.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : n_(n), a_(n * n, 0) {}
  static Graph from_adjacency(const IntMatrix& adj);

  std::size_t order() const { return n_; }
  bool adjacent(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  void set_edge(std::size_t i, std::size_t j, bool present);
  std::size_t degree(std::size_t i) const;
  std::size_t edge_count() const;

  IntMatrix adjacency() const;
  Graph complement() const;

  bool operator==(const Graph& other) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> a_;
};

/// Packed adjacency rows for fast common-neighbor counts.
struct BitRows {
  std::size_t n = 0, words = 0;
  std::vector<std::uint64_t> bits;

  explicit BitRows(const Graph& g);
  std::size_t common_neighbors(std::size_t i, std::size_t j) const;
};

/// Ordered partition of {0..n-1}. Class order and within-class order are
/// part of the value (they fix block layouts).
struct Partition {
  std::vector<std::vector<std::size_t>> classes;

  std::size_t class_count() const { return classes.size(); }
  std::size_t total() const;
  void validate(std::size_t n) const;  // disjoint cover of {0..n-1}
  /// index -> class containing it
  std::vector<std::size_t> class_of(std::size_t n) const;
};

struct SrgParams {
  std::size_t v = 0, k = 0, lambda = 0, mu = 0;
  bool operator==(const SrgParams&) const = default;
};

struct VklParams {
  std::size_t v = 0, k = 0, lambda = 0;
  bool operator==(const VklParams&) const = default;
};

/// Strong regularity by brute-force common-neighbor counts. Rejects the
/// empty, complete and edgeless graphs with distinct errors.
SrgParams verify_srg(const Graph& g);

/// (v,k,lambda)-graph check (lambda = mu): every two distinct vertices have
/// exactly lambda common neighbors. Complete graphs are allowed.
VklParams verify_vkl_graph(const Graph& g);

/// Quotient matrix of an equitable partition; NotEquitable with a witness
/// vertex and class otherwise.
IntMatrix quotient_equitable(const Graph& g, const Partition& p);

struct IntersectionArray {
  std::vector<std::size_t> b;  // b_0 .. b_{d-1}
  std::vector<std::size_t> c;  // c_1 .. c_d
  std::size_t diameter = 0;
  std::size_t valency() const { return b.empty() ? 0 : b[0]; }
  std::vector<std::size_t> a() const;  // a_j = k - b_j - c_j
  std::string to_string() const;       // "{b0,..;c1,..}"
  bool operator==(const IntersectionArray&) const = default;
};

IntersectionArray verify_distance_regular(const Graph& g);

/// Antipodal classes of a distance-regular graph: the classes of the
/// "equal or at distance d" relation, verified to be an equivalence.
Partition antipodal_classes(const Graph& g, const IntersectionArray& arr);

struct InvolutionReport {
  std::vector<std::size_t> fixed_points;
  std::size_t edge_orbits = 0;
  std::size_t nonedge_orbits = 0;
  Partition orbits;  // classes sorted by minimum vertex, 2-orbits as {min,max}
  bool fixed_point_free() const { return fixed_points.empty(); }
};

/// Verifies perm is an automorphism of order dividing 2 and classifies its
/// 2-orbits as edges or non-edges.
InvolutionReport involution_analyze(const Graph& g,
                                    const std::vector<std::size_t>& perm);

/// Rook's graph on an n x n grid: vertices (i,j), adjacent iff they agree in
/// exactly one coordinate; row-major vertex order.
Graph lattice_graph(std::size_t n);

/// BFS distances from every vertex; -1 is encoded as n (unreachable).
std::vector<std::vector<std::size_t>> all_pairs_distances(const Graph& g);

// Graph text format: the matrix format of the adjacency matrix.
void write_graph(std::ostream& os, const Graph& g);
Graph read_graph(std::istream& is);
// Partition text format: one class per line, space-separated 0-based indices.
void write_partition(std::ostream& os, const Partition& p);
Partition read_partition(std::istream& is, std::size_t n);

}  // namespace ddgf
