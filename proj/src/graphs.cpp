#include "ddgf/graphs.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

#include "ddgf/errors.hpp"
#include "ddgf/parallel.hpp"

namespace ddgf {

Graph Graph::from_adjacency(const IntMatrix& adj) {
  require(adj.is_square(), errc::not_square, "adjacency matrix must be square");
  const std::size_t n = adj.rows();
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Int& v = adj.at(i, j);
      require(v == 0 || v == 1, errc::bad_entries,
              "adjacency entry not 0/1 at (" + std::to_string(i) + "," +
                  std::to_string(j) + ")");
      if (i == j)
        require(v == 0, errc::bad_entries,
                "nonzero diagonal at " + std::to_string(i));
      require(v == adj.at(j, i), errc::not_symmetric,
              "adjacency not symmetric at (" + std::to_string(i) + "," +
                  std::to_string(j) + ")");
      g.a_[i * n + j] = v == 1 ? 1 : 0;
    }
  return g;
}

void Graph::set_edge(std::size_t i, std::size_t j, bool present) {
  require(i != j, errc::bad_entries, "no loops");
  a_[i * n_ + j] = present ? 1 : 0;
  a_[j * n_ + i] = present ? 1 : 0;
}

std::size_t Graph::degree(std::size_t i) const {
  std::size_t d = 0;
  for (std::size_t j = 0; j < n_; ++j) d += a_[i * n_ + j];
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t s = 0;
  for (auto v : a_) s += v;
  return s / 2;
}

IntMatrix Graph::adjacency() const {
  IntMatrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (a_[i * n_ + j]) m.at(i, j) = 1;
  return m;
}

Graph Graph::complement() const {
  Graph c(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      c.a_[i * n_ + j] = (i != j && !a_[i * n_ + j]) ? 1 : 0;
  return c;
}

BitRows::BitRows(const Graph& g)
    : n(g.order()), words((g.order() + 63) / 64), bits(n * words, 0) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g.adjacent(i, j)) bits[i * words + j / 64] |= std::uint64_t(1) << (j % 64);
}

std::size_t BitRows::common_neighbors(std::size_t i, std::size_t j) const {
  std::size_t count = 0;
  const std::uint64_t* ri = bits.data() + i * words;
  const std::uint64_t* rj = bits.data() + j * words;
  for (std::size_t w = 0; w < words; ++w)
    count += static_cast<std::size_t>(std::popcount(ri[w] & rj[w]));
  return count;
}

std::size_t Partition::total() const {
  std::size_t t = 0;
  for (const auto& c : classes) t += c.size();
  return t;
}

void Partition::validate(std::size_t n) const {
  std::vector<std::uint8_t> seen(n, 0);
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    require(!classes[ci].empty(), errc::bad_partition,
            "empty class " + std::to_string(ci));
    for (std::size_t v : classes[ci]) {
      require(v < n, errc::bad_partition,
              "vertex " + std::to_string(v) + " out of range");
      require(!seen[v], errc::bad_partition,
              "vertex " + std::to_string(v) + " appears twice");
      seen[v] = 1;
    }
  }
  require(total() == n, errc::bad_partition, "classes do not cover all vertices");
}

std::vector<std::size_t> Partition::class_of(std::size_t n) const {
  std::vector<std::size_t> owner(n, classes.size());
  for (std::size_t ci = 0; ci < classes.size(); ++ci)
    for (std::size_t v : classes[ci]) owner[v] = ci;
  return owner;
}

namespace {

std::size_t checked_valency(const Graph& g) {
  const std::size_t k = g.degree(0);
  for (std::size_t i = 1; i < g.order(); ++i)
    require(g.degree(i) == k, errc::not_regular,
            "vertex " + std::to_string(i) + " has degree " +
                std::to_string(g.degree(i)) + ", vertex 0 has " +
                std::to_string(k));
  return k;
}

std::string pair_str(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

SrgParams verify_srg(const Graph& g) {
  const std::size_t n = g.order();
  require(n > 0, errc::empty_graph, "graph has no vertices");
  const std::size_t edges = g.edge_count();
  require(edges > 0, errc::edgeless_graph, "graph has no edges");
  require(edges < n * (n - 1) / 2, errc::complete_graph, "graph is complete");
  const std::size_t k = checked_valency(g);
  const BitRows rows(g);
  bool have_lambda = false, have_mu = false;
  std::size_t lambda = 0, mu = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t common = rows.common_neighbors(i, j);
      if (g.adjacent(i, j)) {
        if (!have_lambda) {
          lambda = common;
          have_lambda = true;
        } else {
          require(common == lambda, errc::not_strongly_regular,
                  "adjacent pair " + pair_str(i, j) + " has " +
                      std::to_string(common) + " common neighbours, expected " +
                      std::to_string(lambda));
        }
      } else {
        if (!have_mu) {
          mu = common;
          have_mu = true;
        } else {
          require(common == mu, errc::not_strongly_regular,
                  "non-adjacent pair " + pair_str(i, j) + " has " +
                      std::to_string(common) + " common neighbours, expected " +
                      std::to_string(mu));
        }
      }
    }
  return {n, k, lambda, mu};
}

VklParams verify_vkl_graph(const Graph& g) {
  const std::size_t n = g.order();
  require(n > 0, errc::empty_graph, "graph has no vertices");
  const std::size_t k = checked_valency(g);
  const BitRows rows(g);
  const std::size_t lambda =
      n > 1 ? rows.common_neighbors(0, 1) : std::size_t(0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      require(rows.common_neighbors(i, j) == lambda, errc::not_vkl_graph,
              "pair " + pair_str(i, j) + " has " +
                  std::to_string(rows.common_neighbors(i, j)) +
                  " common neighbours, expected " + std::to_string(lambda));
  return {n, k, lambda};
}

IntMatrix quotient_equitable(const Graph& g, const Partition& p) {
  p.validate(g.order());
  const auto owner = p.class_of(g.order());
  const std::size_t m = p.class_count();
  IntMatrix quotient(m, m);
  for (std::size_t ci = 0; ci < m; ++ci) {
    std::vector<std::size_t> expected(m, 0);
    bool first = true;
    for (std::size_t v : p.classes[ci]) {
      std::vector<std::size_t> counts(m, 0);
      for (std::size_t w = 0; w < g.order(); ++w)
        if (g.adjacent(v, w)) ++counts[owner[w]];
      if (first) {
        expected = counts;
        first = false;
      } else {
        for (std::size_t cj = 0; cj < m; ++cj)
          require(counts[cj] == expected[cj], errc::not_equitable,
                  "vertex " + std::to_string(v) + " has " +
                      std::to_string(counts[cj]) + " neighbours in class " +
                      std::to_string(cj) + ", class representative has " +
                      std::to_string(expected[cj]));
      }
    }
    for (std::size_t cj = 0; cj < m; ++cj)
      quotient.at(ci, cj) = static_cast<unsigned long>(expected[cj]);
  }
  return quotient;
}

std::vector<std::vector<std::size_t>> all_pairs_distances(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::size_t>> dist(n);
  parallel_chunks(n, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t src = lo; src < hi; ++src) {
      auto& d = dist[src];
      d.assign(n, n);  // n encodes "unreachable"
      d[src] = 0;
      std::queue<std::size_t> queue;
      queue.push(src);
      while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop();
        for (std::size_t w = 0; w < n; ++w)
          if (g.adjacent(u, w) && d[w] == n) {
            d[w] = d[u] + 1;
            queue.push(w);
          }
      }
    }
  });
  return dist;
}

std::vector<std::size_t> IntersectionArray::a() const {
  std::vector<std::size_t> out(diameter + 1, 0);
  const std::size_t k = valency();
  for (std::size_t j = 0; j <= diameter; ++j) {
    const std::size_t bj = j < diameter ? b[j] : 0;
    const std::size_t cj = j == 0 ? 0 : c[j - 1];
    out[j] = k - bj - cj;
  }
  return out;
}

std::string IntersectionArray::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t j = 0; j < b.size(); ++j) os << (j ? "," : "") << b[j];
  os << ';';
  for (std::size_t j = 0; j < c.size(); ++j) os << (j ? "," : "") << c[j];
  os << '}';
  return os.str();
}

IntersectionArray verify_distance_regular(const Graph& g) {
  const std::size_t n = g.order();
  require(n > 0, errc::empty_graph, "graph has no vertices");
  const auto dist = all_pairs_distances(g);
  std::size_t diameter = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      require(dist[i][j] < n, errc::not_connected,
              "no path between " + pair_str(i, j));
      diameter = std::max(diameter, dist[i][j]);
    }
  const std::size_t k = g.degree(0);
  // b_j, c_j (and implicitly a_j) must be constant over pairs at distance j
  const std::size_t unset = n + 1;
  std::vector<std::size_t> b(diameter + 1, unset), c(diameter + 1, unset);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t j = dist[x][y];
      std::size_t down = 0, up = 0;
      for (std::size_t w = 0; w < n; ++w)
        if (g.adjacent(y, w)) {
          if (dist[x][w] + 1 == j) ++down;
          else if (dist[x][w] == j + 1) ++up;
        }
      if (b[j] == unset) {
        b[j] = up;
        c[j] = down;
      } else {
        require(b[j] == up && c[j] == down, errc::not_distance_regular,
                "pair " + pair_str(x, y) + " at distance " + std::to_string(j) +
                    " sees (b,c)=(" + std::to_string(up) + "," +
                    std::to_string(down) + "), expected (" +
                    std::to_string(b[j]) + "," + std::to_string(c[j]) + ")");
      }
    }
  require(b[0] == k, errc::not_distance_regular, "b0 differs from valency");
  IntersectionArray arr;
  arr.diameter = diameter;
  arr.b.assign(b.begin(), b.begin() + diameter);
  arr.c.assign(c.begin() + 1, c.end());
  return arr;
}

Partition antipodal_classes(const Graph& g, const IntersectionArray& arr) {
  const std::size_t n = g.order();
  const std::size_t d = arr.diameter;
  const auto dist = all_pairs_distances(g);
  auto related = [&](std::size_t x, std::size_t y) {
    return x == y || dist[x][y] == d;
  };
  // transitivity: x~y and y~z must imply x~z
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!related(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z)
        if (related(y, z))
          require(related(x, z), errc::not_antipodal,
                  "triple (" + std::to_string(x) + "," + std::to_string(y) +
                      "," + std::to_string(z) + ") violates transitivity");
    }
  Partition p;
  std::vector<std::uint8_t> used(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    if (used[x]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t y = x; y < n; ++y)
      if (related(x, y)) {
        cls.push_back(y);
        used[y] = 1;
      }
    p.classes.push_back(std::move(cls));
  }
  return p;
}

InvolutionReport involution_analyze(const Graph& g,
                                    const std::vector<std::size_t>& perm) {
  const std::size_t n = g.order();
  require(perm.size() == n, errc::not_involution, "permutation length differs");
  std::vector<std::uint8_t> hit(n, 0);
  for (std::size_t v : perm) {
    require(v < n, errc::not_involution, "image out of range");
    require(!hit[v], errc::not_involution, "not a permutation");
    hit[v] = 1;
  }
  for (std::size_t v = 0; v < n; ++v)
    require(perm[perm[v]] == v, errc::not_involution,
            "square moves vertex " + std::to_string(v));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      require(g.adjacent(perm[x], perm[y]) == g.adjacent(x, y),
              errc::not_automorphism,
              "pair " + pair_str(x, y) + " maps to " +
                  pair_str(perm[x], perm[y]) + " with different adjacency");
  InvolutionReport report;
  for (std::size_t v = 0; v < n; ++v) {
    if (perm[v] == v) {
      report.fixed_points.push_back(v);
      report.orbits.classes.push_back({v});
    } else if (perm[v] > v) {
      report.orbits.classes.push_back({v, perm[v]});
      if (g.adjacent(v, perm[v]))
        ++report.edge_orbits;
      else
        ++report.nonedge_orbits;
    }
  }
  return report;
}

Graph lattice_graph(std::size_t n) {
  require(n >= 2, errc::bad_parameters, "lattice graph needs side >= 2");
  Graph g(n * n);
  for (std::size_t i1 = 0; i1 < n; ++i1)
    for (std::size_t j1 = 0; j1 < n; ++j1)
      for (std::size_t i2 = 0; i2 < n; ++i2)
        for (std::size_t j2 = 0; j2 < n; ++j2) {
          const bool same_row = i1 == i2, same_col = j1 == j2;
          if (same_row == same_col) continue;  // equal or differ in both
          g.set_edge(i1 * n + j1, i2 * n + j2, true);
        }
  return g;
}

void write_graph(std::ostream& os, const Graph& g) {
  write_matrix(os, g.adjacency());
}

Graph read_graph(std::istream& is) {
  return Graph::from_adjacency(read_matrix(is));
}

void write_partition(std::ostream& os, const Partition& p) {
  for (const auto& cls : p.classes) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (i) os << ' ';
      os << cls[i];
    }
    os << '\n';
  }
}

Partition read_partition(std::istream& is, std::size_t n) {
  Partition p;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line[0] == '#') continue;
    std::istringstream ls(line);
    std::vector<std::size_t> cls;
    std::size_t v;
    while (ls >> v) cls.push_back(v);
    if (!cls.empty()) p.classes.push_back(std::move(cls));
  }
  p.validate(n);
  return p;
}

}  // namespace ddgf
