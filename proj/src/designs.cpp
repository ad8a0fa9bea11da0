#include "ddgf/designs.hpp"

#include <string>

#include "ddgf/errors.hpp"
#include "ddgf/field.hpp"

namespace ddgf {

namespace {

std::string pair_str(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void require_entries_pm1_0(const IntMatrix& m, bool allow_zero) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Int& v = m.at(i, j);
      const bool ok = v == 1 || v == -1 || (allow_zero && v == 0);
      require(ok, errc::bad_entries,
              "entry " + v.get_str() + " at " + pair_str(i, j));
    }
}

Int row_dot(const IntMatrix& m, std::size_t i, std::size_t j) {
  Int s = 0;
  for (std::size_t t = 0; t < m.cols(); ++t) s += m.at(i, t) * m.at(j, t);
  return s;
}

}  // namespace

WeighingMatrix verify_weighing(const IntMatrix& m) {
  require(m.is_square(), errc::not_square, "weighing matrix must be square");
  require_entries_pm1_0(m, true);
  const std::size_t n = m.rows();
  const Int w = row_dot(m, 0, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Int dot = row_dot(m, i, j);
      const Int want = i == j ? w : Int(0);
      require(dot == want, errc::not_weighing,
              "rows " + pair_str(i, j) + " have inner product " +
                  dot.get_str() + ", expected " + want.get_str());
    }
  return {m, n, static_cast<std::size_t>(w.get_ui())};
}

std::size_t verify_hadamard(const IntMatrix& m) {
  require(m.is_square(), errc::not_square, "Hadamard matrix must be square");
  require_entries_pm1_0(m, false);
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Int dot = row_dot(m, i, j);
      const Int want = i == j ? Int(static_cast<unsigned long>(n)) : Int(0);
      require(dot == want, errc::not_hadamard,
              "rows " + pair_str(i, j) + " have inner product " + dot.get_str());
    }
  return n;
}

IntMatrix hadamard_sylvester(unsigned k) {
  require(k <= 10, errc::too_large, "Sylvester order above 1024");
  IntMatrix h = IntMatrix::of({{1}});
  const IntMatrix step = IntMatrix::of({{1, 1}, {1, -1}});
  for (unsigned i = 0; i < k; ++i) h = kronecker(step, h);
  return h;
}

ConferenceMatrix verify_conference(const IntMatrix& m) {
  const WeighingMatrix w = verify_weighing(m);
  require(w.w == w.n - 1, errc::not_conference,
          "weight " + std::to_string(w.w) + " differs from order-1");
  for (std::size_t i = 0; i < w.n; ++i)
    require(m.at(i, i) == 0, errc::not_conference,
            "nonzero diagonal at " + std::to_string(i));
  ConferenceMatrix c;
  c.c = m;
  c.n = w.n;
  c.symmetric = m.is_symmetric();
  c.normalized = true;
  for (std::size_t i = 1; i < w.n; ++i)
    if (m.at(0, i) != 1 || m.at(i, 0) != 1) c.normalized = false;
  return c;
}

ConferenceMatrix conference_paley(std::uint64_t q) {
  const auto [p, k] = factor_prime_power(q);
  require(q % 4 == 1, errc::bad_residue,
          std::to_string(q) + " is not 1 mod 4");
  const FieldCtx f = FieldCtx::build(p, k);
  const std::size_t n = static_cast<std::size_t>(q) + 1;
  IntMatrix c(n, n);
  for (std::size_t i = 1; i < n; ++i) {
    c.at(0, i) = 1;
    c.at(i, 0) = 1;
  }
  for (felt x = 0; x < q; ++x)
    for (felt y = 0; y < q; ++y) {
      if (x == y) continue;
      const felt d = f.sub(x, y);
      c.at(1 + x, 1 + y) = f.is_square(d) ? 1 : -1;
    }
  const ConferenceMatrix out = verify_conference(c);
  require(out.symmetric && out.normalized, errc::verify_failed,
          "Paley construction output malformed");
  return out;
}

ConferenceMatrix conference_square(const ConferenceMatrix& c) {
  require(c.symmetric, errc::not_symmetric, "input conference not symmetric");
  require(c.normalized, errc::not_normalized, "input conference not normalized");
  const std::size_t v = c.n - 1;
  IntMatrix core(v, v);
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j) core.at(i, j) = c.c.at(i + 1, j + 1);
  const IntMatrix big =
      add(sub(kronecker(core, core),
              kronecker(IntMatrix::ones(v, v), IntMatrix::identity(v))),
          kronecker(IntMatrix::identity(v), IntMatrix::ones(v, v)));
  const std::size_t order = v * v + 1;
  IntMatrix out(order, order);
  for (std::size_t i = 1; i < order; ++i) {
    out.at(0, i) = 1;
    out.at(i, 0) = 1;
  }
  for (std::size_t i = 0; i < v * v; ++i)
    for (std::size_t j = 0; j < v * v; ++j) out.at(i + 1, j + 1) = big.at(i, j);
  ConferenceMatrix result;
  try {
    result = verify_conference(out);
  } catch (const check_error& e) {
    fail(errc::verify_failed,
         std::string("conference squaring output failed: ") + e.what());
  }
  return result;
}

RSHCD verify_rshcd(const IntMatrix& m) {
  require(m.is_square(), errc::not_square, "RSHCD must be square");
  require_entries_pm1_0(m, false);
  require(m.is_symmetric(), errc::not_symmetric, "matrix not symmetric");
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Int dot = row_dot(m, i, j);
      const Int want = i == j ? Int(static_cast<unsigned long>(n)) : Int(0);
      require(dot == want, errc::not_hadamard,
              "rows " + pair_str(i, j) + " have inner product " + dot.get_str());
    }
  Int a = 0;
  for (std::size_t j = 0; j < n; ++j) a += m.at(0, j);
  for (std::size_t i = 1; i < n; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < n; ++j) s += m.at(i, j);
    require(s == a, errc::not_regular,
            "row " + std::to_string(i) + " sums to " + s.get_str() +
                ", row 0 sums to " + a.get_str());
  }
  const Int e = m.at(0, 0);
  for (std::size_t i = 1; i < n; ++i)
    require(m.at(i, i) == e, errc::diagonal_not_constant,
            "diagonal differs at " + std::to_string(i));
  require(a * a == Int(static_cast<unsigned long>(n)), errc::not_regular,
          "row sum squared differs from order");
  RSHCD h;
  h.h = m;
  h.n = n;
  h.a = static_cast<long>(a.get_si());
  h.e = static_cast<int>(e.get_si());
  h.eps = (a.get_si() * e.get_si()) > 0 ? 1 : -1;
  return h;
}

RSHCD rshcd_base(int eps, int diag) {
  require((eps == 1 || eps == -1) && (diag == 1 || diag == -1),
          errc::bad_parameters, "type and diagonal must be +-1");
  IntMatrix m = eps == 1 ? IntMatrix::of({{1, -1, 1, 1},
                                          {-1, 1, 1, 1},
                                          {1, 1, 1, -1},
                                          {1, 1, -1, 1}})
                         : IntMatrix::of({{-1, 1, 1, 1},
                                          {1, -1, 1, 1},
                                          {1, 1, -1, 1},
                                          {1, 1, 1, -1}});
  // both bases carry diagonal eps; negating flips the diagonal, keeps the type
  if (diag != eps) m = m.negate();
  const RSHCD h = verify_rshcd(m);
  require(h.eps == eps && h.e == diag, errc::verify_failed,
          "base RSHCD malformed");
  return h;
}

RSHCD rshcd_kronecker(const RSHCD& h1, const RSHCD& h2) {
  RSHCD out;
  try {
    out = verify_rshcd(kronecker(h1.h, h2.h));
  } catch (const check_error& e) {
    fail(errc::verify_failed,
         std::string("Kronecker product not an RSHCD: ") + e.what());
  }
  require(out.eps == h1.eps * h2.eps, errc::verify_failed,
          "Kronecker type differs from product of types");
  return out;
}

namespace {

// Menon (v,k,lambda)-graph parameters carried by an RSHCD of order 4u^2.
VklParams menon_graph_params(std::size_t n, int eps) {
  const Int u2 = Int(static_cast<unsigned long>(n)) / 4;
  require(is_perfect_square(u2), errc::not_vkl_graph,
          "order is not of the form 4u^2");
  const long u = static_cast<long>(isqrt(u2).get_si());
  const long k = 2 * u * u - eps * u;
  const long lam = u * u - eps * u;
  return {n, static_cast<std::size_t>(k), static_cast<std::size_t>(lam)};
}

}  // namespace

Graph rshcd_to_graph(const RSHCD& h) {
  IntMatrix a(h.n, h.n);
  for (std::size_t i = 0; i < h.n; ++i)
    for (std::size_t j = 0; j < h.n; ++j)
      a.at(i, j) = (1 - h.e * h.h.at(i, j)) / 2;
  const Graph g = Graph::from_adjacency(a);
  const VklParams got = verify_vkl_graph(g);
  require(got == menon_graph_params(h.n, h.eps), errc::verify_failed,
          "converted graph has unexpected parameters");
  return g;
}

RSHCD rshcd_from_graph(const Graph& g, int e) {
  require(e == 1 || e == -1, errc::bad_parameters, "diagonal must be +-1");
  VklParams params;
  try {
    params = verify_vkl_graph(g);
  } catch (const check_error& err) {
    fail(errc::not_vkl_graph,
         std::string("input is not a (v,k,lambda)-graph: ") + err.what());
  }
  const std::size_t n = g.order();
  IntMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h.at(i, j) = e * (1 - 2 * (g.adjacent(i, j) ? 1 : 0));
  RSHCD out;
  try {
    out = verify_rshcd(h);
  } catch (const check_error& err) {
    fail(errc::not_vkl_graph,
         std::string("graph does not convert to an RSHCD: ") + err.what());
  }
  require(params == menon_graph_params(out.n, out.eps), errc::not_vkl_graph,
          "graph parameters are not of Menon form");
  return out;
}

ConferenceMatrix conference_from_srg(const Graph& g) {
  SrgParams p;
  try {
    p = verify_srg(g);
  } catch (const check_error& e) {
    fail(errc::not_conference_graph,
         std::string("input is not strongly regular: ") + e.what());
  }
  // half-case parameters (4t+1, 2t, t-1, t)
  const std::size_t t = p.mu;
  require(p.v == 4 * t + 1 && p.k == 2 * t && t >= 1 && p.lambda == t - 1,
          errc::not_conference_graph,
          "parameters (" + std::to_string(p.v) + "," + std::to_string(p.k) +
              "," + std::to_string(p.lambda) + "," + std::to_string(p.mu) +
              ") are not of conference-graph form");
  const std::size_t v = p.v;
  IntMatrix out(v + 1, v + 1);
  for (std::size_t i = 1; i <= v; ++i) {
    out.at(0, i) = 1;
    out.at(i, 0) = 1;
  }
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j) {
      if (i == j) continue;
      out.at(i + 1, j + 1) = g.adjacent(i, j) ? -1 : 1;  // Seidel J - I - 2A
    }
  ConferenceMatrix c = verify_conference(out);
  require(c.symmetric && c.normalized, errc::verify_failed,
          "bordered Seidel matrix malformed");
  return c;
}

Graph srg_from_conference(const ConferenceMatrix& c) {
  require(c.symmetric, errc::not_conference, "conference matrix not symmetric");
  require(c.normalized, errc::not_normalized,
          "conference matrix not normalized");
  const std::size_t v = c.n - 1;
  IntMatrix a(v, v);
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j) {
      if (i == j) continue;
      a.at(i, j) = (1 - c.c.at(i + 1, j + 1)) / 2;  // A = (J - I - S)/2
    }
  const Graph g = Graph::from_adjacency(a);
  SrgParams p;
  try {
    p = verify_srg(g);
  } catch (const check_error& e) {
    fail(errc::not_conference_graph,
         std::string("core does not give a strongly regular graph: ") +
             e.what());
  }
  const std::size_t t = p.mu;
  require(p.v == 4 * t + 1 && p.k == 2 * t && t >= 1 && p.lambda == t - 1,
          errc::not_conference_graph, "core graph is not a conference graph");
  return g;
}

bool two_squares_check(std::uint64_t v) {
  for (std::uint64_t a = 0; a * a <= v; ++a) {
    const std::uint64_t rest = v - a * a;
    const auto r = static_cast<std::uint64_t>(isqrt(Int(rest)).get_ui());
    if (r * r == rest) return true;
  }
  return false;
}

MenonParams menon_check(const RSHCD& h) {
  require(h.n > 1, errc::bad_parameters, "order must exceed 1");
  IntMatrix inc(h.n, h.n);
  for (std::size_t i = 0; i < h.n; ++i)
    for (std::size_t j = 0; j < h.n; ++j)
      inc.at(i, j) = (1 + h.h.at(i, j)) / 2;
  const int d = h.a > 0 ? 1 : -1;
  const long u = (h.a > 0 ? h.a : -h.a) / 2;
  const long k = 2 * u * u + d * u;
  const long lam = u * u + d * u;
  const IntMatrix gram = mul(inc, inc.transpose());
  for (std::size_t i = 0; i < h.n; ++i)
    for (std::size_t j = 0; j < h.n; ++j) {
      const Int want = i == j ? Int(k) : Int(lam);
      require(gram.at(i, j) == want, errc::design_check_failed,
              "Gram entry at " + pair_str(i, j) + " is " +
                  gram.at(i, j).get_str() + ", expected " + want.get_str());
    }
  return {h.n, static_cast<std::size_t>(k), static_cast<std::size_t>(lam)};
}

}  // namespace ddgf
