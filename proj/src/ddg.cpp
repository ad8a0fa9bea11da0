#include "ddgf/ddg.hpp"

#include <sstream>

#include "ddgf/errors.hpp"

namespace ddgf {

const char* ddg_class_name(DdgClass c) {
  switch (c) {
    case DdgClass::proper: return "proper";
    case DdgClass::almost_proper: return "almost-proper";
    case DdgClass::improper_non_equitable: return "improper-non-equitable";
  }
  return "?";
}

std::string DDGParameters::to_string() const {
  std::ostringstream os;
  os << '(' << v << ',' << k << ',' << lambda1 << ',' << lambda2 << ',' << m
     << ',' << n << ')';
  return os.str();
}

DdgVerification verify_ddg(const Graph& g, const Partition& p) {
  const std::size_t v = g.order();
  p.validate(v);
  const std::size_t m = p.class_count();
  const std::size_t n = p.classes[0].size();
  for (std::size_t ci = 1; ci < m; ++ci)
    require(p.classes[ci].size() == n, errc::unequal_classes,
            "class " + std::to_string(ci) + " has size " +
                std::to_string(p.classes[ci].size()) + ", class 0 has " +
                std::to_string(n));
  const std::size_t k = g.degree(0);
  for (std::size_t i = 1; i < v; ++i)
    require(g.degree(i) == k, errc::not_regular,
            "vertex " + std::to_string(i) + " has degree " +
                std::to_string(g.degree(i)));
  const auto owner = p.class_of(v);
  const BitRows rows(g);
  bool have1 = false, have2 = false;
  std::size_t lambda1 = 0, lambda2 = 0;
  for (std::size_t x = 0; x < v; ++x)
    for (std::size_t y = x + 1; y < v; ++y) {
      const std::size_t common = rows.common_neighbors(x, y);
      const bool same = owner[x] == owner[y];
      std::size_t& ref = same ? lambda1 : lambda2;
      bool& have = same ? have1 : have2;
      if (!have) {
        ref = common;
        have = true;
      } else {
        require(common == ref, errc::not_ddg,
                std::string(same ? "same-class" : "cross-class") + " pair (" +
                    std::to_string(x) + "," + std::to_string(y) + ") has " +
                    std::to_string(common) + " common neighbours, expected " +
                    std::to_string(ref));
      }
    }
  if (!have1) lambda1 = lambda2;  // n = 1: no same-class pairs
  if (!have2) lambda2 = lambda1;  // m = 1: no cross-class pairs
  DdgVerification out;
  out.params = {v, k, lambda1, lambda2, m, n};
  if (lambda1 != lambda2 && m > 1 && n > 1) {
    out.cls = DdgClass::proper;
  } else {
    bool equitable = true;
    try {
      quotient_equitable(g, p);
    } catch (const check_error&) {
      equitable = false;
    }
    out.cls = (equitable && m > 1 && n > 1) ? DdgClass::almost_proper
                                            : DdgClass::improper_non_equitable;
  }
  return out;
}

RQPair validate_rq_pair(const IntMatrix& r, const IntMatrix& q) {
  // Q: symmetric weighing with diagonal in {0,-1}
  require(q.is_square(), errc::not_square, "Q must be square");
  require(q.is_symmetric(), errc::not_symmetric, "Q is not symmetric");
  const WeighingMatrix wq = verify_weighing(q);
  for (std::size_t i = 0; i < wq.n; ++i)
    require(q.at(i, i) != 1, errc::diagonal_violation,
            "Q has diagonal entry 1 at " + std::to_string(i));
  // R: symmetric (0,1,2) with no 2 on the diagonal
  require(r.is_square() && r.rows() == q.rows(), errc::dimension_mismatch,
          "R and Q orders differ");
  require(r.is_symmetric(), errc::not_symmetric, "R is not symmetric");
  const std::size_t m = r.rows();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Int& v = r.at(i, j);
      require(v == 0 || v == 1 || v == 2, errc::bad_entries,
              "R entry " + v.get_str() + " at (" + std::to_string(i) + "," +
                  std::to_string(j) + ")");
    }
  for (std::size_t i = 0; i < m; ++i)
    require(r.at(i, i) != 2, errc::diagonal_has_two,
            "R has diagonal entry 2 at " + std::to_string(i));
  // R^2 = alpha I + beta J with beta even
  const auto ab = detect_alpha_beta(mul(r, r));
  require(ab.has_value(), errc::not_alpha_beta_form,
          "R^2 is not of the form alpha I + beta J");
  require(mpz_even_p(ab->beta.get_mpz_t()), errc::odd_beta,
          "beta = " + ab->beta.get_str() + " is odd");
  // congruence mod 2
  require(mod2_congruent(r, q), errc::not_congruent_mod2,
          "R and Q differ mod 2");
  // alpha + m*beta must be the square of the valency
  const Int k2 = ab->alpha + Int(static_cast<unsigned long>(m)) * ab->beta;
  require(is_perfect_square(k2), errc::not_perfect_square,
          "alpha + m*beta = " + k2.get_str() + " is not a perfect square");
  return {r, q, ab->alpha, ab->beta, wq.w};
}

ThinDDG assemble_from_rq(const RQPair& pair) {
  const std::size_t m = pair.m();
  const Int k_int = isqrt(pair.alpha + Int(static_cast<unsigned long>(m)) * pair.beta);
  const std::size_t k = static_cast<std::size_t>(k_int.get_ui());
  require(k >= pair.w, errc::verify_failed,
          "valency below weighing weight: no nonnegative lambda1");
  IntMatrix a(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Int plus = (pair.r.at(i, j) + pair.q.at(i, j)) / 2;
      const Int minus = (pair.r.at(i, j) - pair.q.at(i, j)) / 2;
      a.at(i, j) = plus;
      a.at(i + m, j + m) = plus;
      a.at(i, j + m) = minus;
      a.at(i + m, j) = minus;
    }
  ThinDDG d;
  d.graph = Graph::from_adjacency(a);
  for (std::size_t i = 0; i < m; ++i) d.partition.classes.push_back({i, i + m});
  const DdgVerification got = verify_ddg(d.graph, d.partition);
  const Int beta_half = pair.beta / 2;
  const DDGParameters expect = {2 * m, k, k - pair.w,
                                static_cast<std::size_t>(beta_half.get_ui()), m,
                                2};
  require(got.params == expect, errc::verify_failed,
          "assembled DDG has parameters " + got.params.to_string() +
              ", theorem gives " + expect.to_string());
  d.params = got.params;
  d.cls = got.cls;
  return d;
}

RQPair decompose_to_rq(const Graph& g, const Partition& p) {
  p.validate(g.order());
  const std::size_t m = p.class_count();
  for (std::size_t ci = 0; ci < m; ++ci)
    require(p.classes[ci].size() == 2, errc::unequal_classes,
            "class " + std::to_string(ci) + " does not have size 2");
  IntMatrix r(m, m), q(m, m);
  for (std::size_t ci = 0; ci < m; ++ci)
    for (std::size_t cj = 0; cj < m; ++cj) {
      const std::size_t x0 = p.classes[ci][0], x1 = p.classes[ci][1];
      const std::size_t y0 = p.classes[cj][0], y1 = p.classes[cj][1];
      const int a = g.adjacent(x0, y0) ? 1 : 0;
      const int b = g.adjacent(x0, y1) ? 1 : 0;
      require(ci == cj || ((g.adjacent(x1, y1) ? 1 : 0) == a &&
                           (g.adjacent(x1, y0) ? 1 : 0) == b),
              errc::bad_block_form,
              "block (" + std::to_string(ci) + "," + std::to_string(cj) +
                  ") is not of the form [[a,b],[b,a]]");
      if (ci == cj) {
        // diagonal block: [[0, b],[b, 0]] with b the within-class adjacency
        const int within = g.adjacent(x0, x1) ? 1 : 0;
        r.at(ci, ci) = within;
        q.at(ci, ci) = -within;
      } else {
        r.at(ci, cj) = a + b;
        q.at(ci, cj) = a - b;
      }
    }
  try {
    verify_weighing(q);
  } catch (const check_error& e) {
    fail(errc::partner_not_weighing,
         std::string("partner matrix is not a weighing matrix: ") + e.what());
  }
  return validate_rq_pair(r, q);
}

RQPair decompose_to_rq(const ThinDDG& d) {
  RQPair pair = decompose_to_rq(d.graph, d.partition);
  // Q^2 = (k - lambda1) I
  require(pair.w == d.params.k - d.params.lambda1, errc::verify_failed,
          "partner weight differs from k - lambda1");
  const IntMatrix q2 = mul(pair.q, pair.q);
  const auto ab = detect_alpha_beta(q2);
  require(ab.has_value() && ab->beta == 0 &&
              ab->alpha == Int(static_cast<unsigned long>(pair.w)),
          errc::verify_failed, "Q^2 is not (k - lambda1) I");
  // round-trip: reassembling must reproduce the adjacency matrix exactly
  // under the relabeling class i -> {i, i+m}
  const ThinDDG re = assemble_from_rq(pair);
  const std::size_t m = pair.m();
  std::vector<std::size_t> relabel(d.graph.order());
  for (std::size_t ci = 0; ci < m; ++ci) {
    relabel[d.partition.classes[ci][0]] = ci;
    relabel[d.partition.classes[ci][1]] = ci + m;
  }
  Graph relabeled(d.graph.order());
  for (std::size_t x = 0; x < d.graph.order(); ++x)
    for (std::size_t y = x + 1; y < d.graph.order(); ++y)
      if (d.graph.adjacent(x, y))
        relabeled.set_edge(relabel[x], relabel[y], true);
  require(relabeled == re.graph, errc::verify_failed,
          "round-trip reassembly does not reproduce the adjacency matrix");
  return pair;
}

namespace {

struct RshcdBatch {
  std::size_t order = 0;
  int eps = 0;
  long u = 0;
};

// common checks for a family of RSHCD inputs: equal order, equal type,
// diagonal -1 everywhere
RshcdBatch check_rshcd_inputs(const std::vector<IntMatrix>& ms) {
  RshcdBatch batch;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const RSHCD h = verify_rshcd(ms[i]);
    require(h.e == -1, errc::bad_diagonal,
            "input " + std::to_string(i) + " does not have -1 diagonal");
    if (i == 0) {
      batch.order = h.n;
      batch.eps = h.eps;
      batch.u = (h.a > 0 ? h.a : -h.a) / 2;
      require(h.a % 2 == 0 && batch.u >= 1, errc::input_constraint_violated,
              "order is not of the form 4u^2");
    } else {
      require(h.n == batch.order, errc::dimension_mismatch,
              "input orders differ");
      require(h.eps == batch.eps, errc::type_mismatch, "input types differ");
    }
  }
  return batch;
}

IntMatrix half(const IntMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j) / 2;
  return out;
}

void check_detected(const IntMatrix& r, const Int& alpha, const Int& beta) {
  const auto ab = detect_alpha_beta(mul(r, r));
  require(ab.has_value() && ab->alpha == alpha && ab->beta == beta,
          errc::alpha_beta_failed,
          "R^2 differs from " + alpha.get_str() + " I + " + beta.get_str() +
              " J");
}

}  // namespace

RMatrix build_r_multipartite(const std::vector<IntMatrix>& rshcds) {
  require(rshcds.size() >= 2, errc::bad_parameters,
          "need at least two parts");
  const RshcdBatch batch = check_rshcd_inputs(rshcds);
  const std::size_t t = rshcds.size(), y = batch.order;
  const IntMatrix j = IntMatrix::ones(y, y);
  IntMatrix r(t * y, t * y);
  for (std::size_t bi = 0; bi < t; ++bi)
    for (std::size_t bj = 0; bj < t; ++bj)
      for (std::size_t i = 0; i < y; ++i)
        for (std::size_t jj = 0; jj < y; ++jj)
          r.at(bi * y + i, bj * y + jj) =
              bi == bj ? Int(rshcds[bi].at(i, jj) + 1) : Int(1);
  const long u = batch.u;
  const Int alpha = Int(4) * u * u;
  const Int beta = Int(4) * static_cast<long>(t) * u * u - 4 * batch.eps * u;
  check_detected(r, alpha, beta);
  return {r, alpha, beta};
}

RMatrix build_r_bipartite_menon(const IntMatrix& regular_hadamard) {
  const std::size_t y = verify_hadamard(regular_hadamard);
  Int a = 0;
  for (std::size_t j = 0; j < y; ++j) a += regular_hadamard.at(0, j);
  for (std::size_t i = 1; i < y; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < y; ++j) s += regular_hadamard.at(i, j);
    require(s == a, errc::not_regular,
            "row " + std::to_string(i) + " sums to " + s.get_str() +
                ", row 0 sums to " + a.get_str());
  }
  const long arow = static_cast<long>(a.get_si());
  require(arow != 0 && arow % 2 == 0, errc::input_constraint_violated,
          "row sum must be a nonzero even integer 2*delta*u");
  const long u = (arow > 0 ? arow : -arow) / 2;
  const int delta = arow > 0 ? 1 : -1;
  const IntMatrix j = IntMatrix::ones(y, y);
  const IntMatrix jh = add(j, regular_hadamard);
  const IntMatrix r = from_blocks({{j, jh}, {jh.transpose(), j}});
  const Int alpha = Int(4) * u * u;
  const Int beta = Int(8) * u * u + 4 * delta * u;
  check_detected(r, alpha, beta);
  return {r, alpha, beta};
}

RMatrix build_r_ps22(Ps22Variant variant, const WeighingMatrix& q) {
  require(q.m.is_symmetric(), errc::not_symmetric, "Q must be symmetric");
  require(q.n % 4 == 0 && q.n >= 8, errc::bad_parameters,
          "Q order must be 4t with t >= 2");
  const std::size_t t = q.n / 4;
  require(q.w == 4 * (t - 1), errc::bad_parameters,
          "Q weight must be 4(t-1)");
  for (std::size_t b = 0; b < t; ++b)
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        require(q.m.at(4 * b + i, 4 * b + j) == 0, errc::diagonal_violation,
                "diagonal 4x4 block " + std::to_string(b) + " is not zero");
  IntMatrix r(q.n, q.n);
  for (std::size_t i = 0; i < q.n; ++i)
    for (std::size_t j = 0; j < q.n; ++j) r.at(i, j) = abs(q.m.at(i, j));
  const std::size_t cell = variant == Ps22Variant::a ? 4 : 2;
  for (std::size_t b = 0; b < q.n / cell; ++b)
    for (std::size_t i = 0; i < cell; ++i)
      for (std::size_t j = 0; j < cell; ++j)
        if (i != j) r.at(b * cell + i, b * cell + j) += 2;
  const auto ab = detect_alpha_beta(mul(r, r));
  require(ab.has_value(), errc::not_alpha_beta_form,
          "R^2 is not of the form alpha I + beta J");
  return {r, ab->alpha, ab->beta};
}

WeighingMatrix build_q_kronecker(const ConferenceMatrix& c,
                                 const IntMatrix& sym_hadamard) {
  require(c.n % 4 == 2, errc::bad_conference_order,
          "conference order " + std::to_string(c.n) + " is not 2 mod 4");
  const ConferenceMatrix cc = verify_conference(c.c);
  require(cc.symmetric, errc::not_symmetric, "conference matrix not symmetric");
  const std::size_t y = verify_hadamard(sym_hadamard);
  require(sym_hadamard.is_symmetric(), errc::not_symmetric,
          "Hadamard factor not symmetric");
  const IntMatrix qm = kronecker(c.c, sym_hadamard);
  const WeighingMatrix q = verify_weighing(qm);
  require(q.w == y * (c.n - 1), errc::verify_failed, "unexpected weight");
  for (std::size_t b = 0; b < c.n; ++b)
    for (std::size_t i = 0; i < y; ++i)
      for (std::size_t j = 0; j < y; ++j)
        require(qm.at(b * y + i, b * y + j) == 0, errc::diagonal_violation,
                "diagonal block " + std::to_string(b) + " not zero");
  return q;
}

WeighingMatrix build_q_bipartite(const IntMatrix& hadamard) {
  const std::size_t y = verify_hadamard(hadamard);
  const IntMatrix zero(y, y);
  const IntMatrix qm =
      from_blocks({{zero, hadamard}, {hadamard.transpose(), zero}});
  const WeighingMatrix q = verify_weighing(qm);
  require(q.w == y, errc::verify_failed, "unexpected weight");
  return q;
}

WeighingMatrix build_q_block_diagonal(const IntMatrix& h1,
                                      const IntMatrix& h2) {
  const std::size_t y = verify_hadamard(h1);
  require(verify_hadamard(h2) == y, errc::dimension_mismatch,
          "blocks have different orders");
  for (const IntMatrix* h : {&h1, &h2}) {
    require(h->is_symmetric(), errc::not_symmetric, "block not symmetric");
    for (std::size_t i = 0; i < y; ++i)
      require(h->at(i, i) == -1, errc::diagonal_violation,
              "block diagonal entry differs from -1 at " + std::to_string(i));
  }
  const IntMatrix zero(y, y);
  const IntMatrix qm = from_blocks({{h1, zero}, {zero, h2}});
  const WeighingMatrix q = verify_weighing(qm);
  require(q.w == y, errc::verify_failed, "unexpected weight");
  return q;
}

namespace {

DDGParameters expect_params(long v, long k, long l1, long l2, long m) {
  require(v > 0 && k >= 0 && l1 >= 0 && l2 >= 0, errc::parameter_mismatch,
          "theorem formula gives a negative parameter");
  return {static_cast<std::size_t>(v), static_cast<std::size_t>(k),
          static_cast<std::size_t>(l1), static_cast<std::size_t>(l2),
          static_cast<std::size_t>(m), 2};
}

void check_family_params(const ThinDDG& ddg, const DDGParameters& expect) {
  require(ddg.params == expect, errc::parameter_mismatch,
          "constructed DDG has parameters " + ddg.params.to_string() +
              ", theorem formula gives " + expect.to_string());
}

}  // namespace

FamilyResult family_multipartite(const std::vector<IntMatrix>& rshcds,
                                 const WeighingMatrix& signing) {
  require(rshcds.size() >= 3, errc::input_constraint_violated,
          "multipartite family needs t >= 3 parts");
  const RshcdBatch batch = check_rshcd_inputs(rshcds);
  const long t = static_cast<long>(rshcds.size());
  const long u = batch.u, e = batch.eps, y = static_cast<long>(batch.order);
  const RMatrix rm = build_r_multipartite(rshcds);
  require(signing.n == static_cast<std::size_t>(t * y),
          errc::dimension_mismatch, "signing order differs from 4tu^2");
  require(signing.m.is_symmetric(), errc::not_symmetric,
          "signing not symmetric");
  for (long b = 0; b < t; ++b)
    for (long i = 0; i < y; ++i)
      for (long j = 0; j < y; ++j)
        require(signing.m.at(b * y + i, b * y + j) == 0,
                errc::diagonal_violation,
                "signing diagonal block " + std::to_string(b) + " not zero");
  FamilyResult out;
  out.pair = validate_rq_pair(rm.r, signing.m);
  out.ddg = assemble_from_rq(out.pair);
  check_family_params(out.ddg,
                      expect_params(8 * t * u * u, 4 * t * u * u - 2 * e * u,
                                    4 * u * u - 2 * e * u,
                                    2 * t * u * u - 2 * e * u, 4 * t * u * u));
  return out;
}

FamilyResult family_bipartite(const IntMatrix& h1, const IntMatrix& h2,
                              const IntMatrix& h) {
  std::vector<IntMatrix> parts{h1, h2};
  RshcdBatch batch;
  try {
    batch = check_rshcd_inputs(parts);
  } catch (const check_error& e) {
    fail(errc::input_constraint_violated, e.what());
  }
  const long u = batch.u, e = batch.eps;
  require(verify_hadamard(h) == batch.order, errc::dimension_mismatch,
          "Hadamard factor has a different order");
  const RMatrix rm = build_r_multipartite(parts);
  // the theorem's displayed adjacency corresponds to signing by -H
  const WeighingMatrix signing = build_q_bipartite(h.negate());
  FamilyResult out;
  out.pair = validate_rq_pair(rm.r, signing.m);
  out.ddg = assemble_from_rq(out.pair);
  check_family_params(
      out.ddg, expect_params(16 * u * u, 8 * u * u - 2 * e * u,
                             4 * u * u - 2 * e * u, 4 * u * u - 2 * e * u,
                             8 * u * u));
  require(out.ddg.cls == DdgClass::almost_proper, errc::parameter_mismatch,
          "bipartite family output is not almost proper");
  // exact match with the theorem's 4x4 block display
  const std::size_t y = batch.order;
  const IntMatrix j = IntMatrix::ones(y, y);
  const IntMatrix jh1 = add(j, h1), jh2 = add(j, h2);
  const IntMatrix jph = add(j, h), jmh = sub(j, h);
  const IntMatrix display =
      half(from_blocks({{jh1, jmh, jh1, jph},
                        {jmh.transpose(), jh2, jph.transpose(), jh2},
                        {jh1, jph, jh1, jmh},
                        {jph.transpose(), jh2, jmh.transpose(), jh2}}));
  require(out.ddg.graph.adjacency() == display, errc::verify_failed,
          "adjacency differs from the theorem block display");
  return out;
}

FamilyResult family_pair_of_cliques(const IntMatrix& regular_h,
                                    const IntMatrix& h1, const IntMatrix& h2) {
  const RMatrix rm = build_r_bipartite_menon(regular_h);
  const std::size_t y = regular_h.rows();
  require(h1.rows() == y && h2.rows() == y, errc::dimension_mismatch,
          "diagonal blocks must match the Hadamard order");
  const WeighingMatrix signing = build_q_block_diagonal(h1, h2);
  Int a = 0;
  for (std::size_t j = 0; j < y; ++j) a += regular_h.at(0, j);
  const long arow = static_cast<long>(a.get_si());
  const long u = (arow > 0 ? arow : -arow) / 2;
  const int delta = arow > 0 ? 1 : -1;
  FamilyResult out;
  out.pair = validate_rq_pair(rm.r, signing.m);
  out.ddg = assemble_from_rq(out.pair);
  check_family_params(
      out.ddg, expect_params(16 * u * u, 8 * u * u + 2 * delta * u,
                             4 * u * u + 2 * delta * u,
                             4 * u * u + 2 * delta * u, 8 * u * u));
  require(out.ddg.cls == DdgClass::almost_proper, errc::parameter_mismatch,
          "pair-of-cliques family output is not almost proper");
  const IntMatrix j = IntMatrix::ones(y, y);
  const IntMatrix jh = add(j, regular_h);
  const IntMatrix jh1p = add(j, h1), jh1m = sub(j, h1);
  const IntMatrix jh2p = add(j, h2), jh2m = sub(j, h2);
  const IntMatrix display =
      half(from_blocks({{jh1p, jh, jh1m, jh},
                        {jh.transpose(), jh2p, jh.transpose(), jh2m},
                        {jh1m, jh, jh1p, jh},
                        {jh.transpose(), jh2m, jh.transpose(), jh2p}}));
  require(out.ddg.graph.adjacency() == display, errc::verify_failed,
          "adjacency differs from the theorem block display");
  return out;
}

FamilyResult family_ps22(Ps22Variant variant, const WeighingMatrix& q) {
  const RMatrix rm = build_r_ps22(variant, q);
  const long t = static_cast<long>(q.n / 4);
  FamilyResult out;
  out.pair = validate_rq_pair(rm.r, q.m);
  out.ddg = assemble_from_rq(out.pair);
  const DDGParameters expect =
      variant == Ps22Variant::a
          ? expect_params(8 * t, 4 * t + 2, 6, 2 * t + 2, 4 * t)
          : expect_params(8 * t, 4 * t - 2, 2, 2 * t - 2, 4 * t);
  check_family_params(out.ddg, expect);
  return out;
}

RSHCD rshcd_recursion_a(const IntMatrix& h1, const IntMatrix& h2,
                        const IntMatrix& h) {
  RshcdBatch batch;
  try {
    batch = check_rshcd_inputs({h1, h2});
  } catch (const check_error& e) {
    fail(errc::input_constraint_violated, e.what());
  }
  require(verify_hadamard(h) == batch.order, errc::input_constraint_violated,
          "Hadamard factor has a different order");
  const IntMatrix ht = h.transpose(), hn = h.negate(), hnt = ht.negate();
  const IntMatrix out = from_blocks({{h1, hn, h1, h},
                                     {hnt, h2, ht, h2},
                                     {h1, h, h1, hn},
                                     {ht, h2, hnt, h2}});
  RSHCD result;
  try {
    result = verify_rshcd(out);
  } catch (const check_error& e) {
    fail(errc::verify_failed,
         std::string("recursion A output is not an RSHCD: ") + e.what());
  }
  require(result.eps == batch.eps, errc::verify_failed,
          "recursion A output type differs from the input type");
  return result;
}

RSHCD rshcd_recursion_b(const IntMatrix& regular_h, const IntMatrix& h1,
                        const IntMatrix& h2) {
  const std::size_t y = verify_hadamard(regular_h);
  Int a = 0;
  for (std::size_t j = 0; j < y; ++j) a += regular_h.at(0, j);
  for (std::size_t i = 1; i < y; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < y; ++j) s += regular_h.at(i, j);
    require(s == a, errc::input_constraint_violated,
            "Hadamard matrix is not regular");
  }
  const long arow = static_cast<long>(a.get_si());
  require(arow != 0 && arow % 2 == 0, errc::input_constraint_violated,
          "row sum must be a nonzero even integer");
  const int delta = arow > 0 ? 1 : -1;
  for (const IntMatrix* m : {&h1, &h2}) {
    require(verify_hadamard(*m) == y, errc::input_constraint_violated,
            "diagonal blocks must match the Hadamard order");
    require(m->is_symmetric(), errc::input_constraint_violated,
            "diagonal blocks must be symmetric");
    for (std::size_t i = 0; i < y; ++i)
      require(m->at(i, i) == -1, errc::input_constraint_violated,
              "diagonal blocks must have -1 diagonal");
  }
  const IntMatrix ht = regular_h.transpose();
  const IntMatrix out = from_blocks({{h1, regular_h, h1.negate(), regular_h},
                                     {ht, h2, ht, h2.negate()},
                                     {h1.negate(), regular_h, h1, regular_h},
                                     {ht, h2.negate(), ht, h2}});
  RSHCD result;
  try {
    result = verify_rshcd(out);
  } catch (const check_error& e) {
    fail(errc::verify_failed,
         std::string("recursion B output is not an RSHCD: ") + e.what());
  }
  require(result.eps == -delta, errc::verify_failed,
          "recursion B output type differs from -delta");
  return result;
}

bool spectrum_factorization_check(const ThinDDG& d) {
  const RQPair pair = decompose_to_rq(d);
  const ThinDDG canonical = assemble_from_rq(pair);
  const auto lhs = char_poly(canonical.graph.adjacency());
  const auto rhs = poly_mul(char_poly(pair.r), char_poly(pair.q));
  return lhs == rhs;
}

}  // namespace ddgf
