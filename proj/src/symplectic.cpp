#include "ddgf/symplectic.hpp"

#include <algorithm>
#include <limits>

#include "ddgf/errors.hpp"

namespace ddgf {

namespace {

constexpr std::uint32_t kNoVertex = std::numeric_limits<std::uint32_t>::max();
constexpr std::size_t kVertexCap = 1500;

std::uint64_t ipow(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

// Orbit space of a scalar subgroup acting on GF(Q)^2 \ {0}: canonical orbit
// representatives (minimal pair code z1*Q+z2) in ascending order, plus a
// pair-code -> vertex lookup.
template <FieldLike F>
struct OrbitSpace {
  std::uint64_t big = 0;
  std::vector<std::array<felt, 2>> labels;
  std::vector<std::uint32_t> vertex_of;

  std::uint64_t code(felt z1, felt z2) const {
    return static_cast<std::uint64_t>(z1) * big + z2;
  }
};

template <FieldLike F>
OrbitSpace<F> enumerate_orbits(const F& f, const std::vector<felt>& scalars) {
  OrbitSpace<F> space;
  space.big = f.order();
  space.vertex_of.assign(space.big * space.big, kNoVertex);
  for (felt z1 = 0; z1 < space.big; ++z1)
    for (felt z2 = 0; z2 < space.big; ++z2) {
      if (z1 == 0 && z2 == 0) continue;
      if (space.vertex_of[space.code(z1, z2)] != kNoVertex) continue;
      const auto id = static_cast<std::uint32_t>(space.labels.size());
      space.labels.push_back({z1, z2});
      for (felt s : scalars)
        space.vertex_of[space.code(f.mul(s, z1), f.mul(s, z2))] = id;
    }
  return space;
}

template <FieldLike F>
felt pair_det(const F& f, const std::array<felt, 2>& x,
              const std::array<felt, 2>& y) {
  return f.sub(f.mul(x[0], y[1]), f.mul(x[1], y[0]));
}

std::vector<felt> base_scalars_embedded(const QuadExt& ext) {
  std::vector<felt> scalars;
  for (felt a = 1; a < ext.base().order(); ++a)
    scalars.push_back(ext.embed(a));
  return scalars;
}

Partition sorted_classes(std::vector<std::vector<std::size_t>> classes) {
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end());
  Partition p;
  p.classes = std::move(classes);
  return p;
}

}  // namespace

Graph sp_graph(std::size_t t, std::uint64_t q) {
  require(t >= 2, errc::bad_parameters, "need t >= 2");
  const auto [p, k] = factor_prime_power(q);
  const std::uint64_t total = ipow(q, 2 * t);
  const std::uint64_t v = (total - 1) / (q - 1);
  require(v <= kVertexCap, errc::too_large,
          "vertex count " + std::to_string(v) + " above 1500");
  const FieldCtx f = FieldCtx::build(p, k);
  // projective points: vectors whose first nonzero coordinate is 1,
  // enumerated in ascending big-endian encoding
  std::vector<std::vector<felt>> points;
  points.reserve(v);
  for (std::uint64_t codeword = 0; codeword < total; ++codeword) {
    std::vector<felt> coords(2 * t);
    std::uint64_t rest = codeword;
    for (std::size_t i = 2 * t; i-- > 0;) {
      coords[i] = static_cast<felt>(rest % q);
      rest /= q;
    }
    std::size_t lead = 0;
    while (lead < 2 * t && coords[lead] == 0) ++lead;
    if (lead == 2 * t || coords[lead] != 1) continue;
    points.push_back(std::move(coords));
  }
  require(points.size() == v, errc::verify_failed,
          "projective point count mismatch");
  Graph g(v);
  for (std::size_t x = 0; x < v; ++x)
    for (std::size_t y = x + 1; y < v; ++y) {
      felt form = 0;
      for (std::size_t i = 0; i < t; ++i) {
        const felt plus = f.mul(points[x][2 * i], points[y][2 * i + 1]);
        const felt minus = f.mul(points[x][2 * i + 1], points[y][2 * i]);
        form = f.add(form, f.sub(plus, minus));
      }
      if (form == 0) g.set_edge(x, y, true);
    }
  const SrgParams got = verify_srg(g);
  const std::uint64_t mid = ipow(q, 2 * t - 2);
  const SrgParams expect = {
      static_cast<std::size_t>(v),
      static_cast<std::size_t>(q * (mid - 1) / (q - 1)),
      static_cast<std::size_t>(q * q * (ipow(q, 2 * t - 4) - 1) / (q - 1) + q -
                               1),
      static_cast<std::size_t>((mid - 1) / (q - 1))};
  require(got == expect, errc::srg_check_failed,
          "Sp(2t,q) parameters differ from the theorem formulas");
  return g;
}

std::size_t Sp4Model::vertex(felt z1, felt z2) const {
  const std::uint64_t qq = field.order();
  const std::uint32_t id = vertex_of[static_cast<std::uint64_t>(z1) * qq + z2];
  require(id != kNoVertex, errc::verify_failed, "pair has no vertex");
  return id;
}

Sp4Model sp4_extension_model(std::uint64_t q) {
  require(q % 2 == 1, errc::even_q, "the GF(q^2) model needs odd q");
  const auto [p, k] = factor_prime_power(q);
  const std::uint64_t v = q * q * q + q * q + q + 1;
  require(v <= kVertexCap, errc::too_large,
          "vertex count " + std::to_string(v) + " above 1500");
  Sp4Model model{QuadExt::build(FieldCtx::build(p, k)), q, Graph(), {}, {}};
  const QuadExt& ext = model.field;
  auto space = enumerate_orbits(ext, base_scalars_embedded(ext));
  require(space.labels.size() == v, errc::verify_failed,
          "orbit count differs from (q^4-1)/(q-1)");
  model.labels = std::move(space.labels);
  model.vertex_of = std::move(space.vertex_of);
  Graph g(v);
  for (std::size_t x = 0; x < v; ++x)
    for (std::size_t y = x + 1; y < v; ++y)
      if (ext.in_base(pair_det(ext, model.labels[x], model.labels[y])))
        g.set_edge(x, y, true);
  model.graph = std::move(g);
  SrgParams got;
  try {
    got = verify_srg(model.graph);
  } catch (const check_error& e) {
    fail(errc::srg_check_failed,
         std::string("extension model not strongly regular: ") + e.what());
  }
  const SrgParams expect = {static_cast<std::size_t>(v),
                            static_cast<std::size_t>(q * (q * q + 1)),
                            static_cast<std::size_t>(q - 1),
                            static_cast<std::size_t>(q * q + 1)};
  require(got == expect, errc::srg_check_failed,
          "extension model parameters differ from Sp(4,q)");
  return model;
}

std::vector<std::size_t> sp4_involution(const Sp4Model& model) {
  const QuadExt& ext = model.field;
  const felt i = ext.i();
  std::vector<std::size_t> perm(model.labels.size());
  for (std::size_t vtx = 0; vtx < model.labels.size(); ++vtx)
    perm[vtx] = model.vertex(ext.mul(i, model.labels[vtx][0]),
                             ext.mul(i, model.labels[vtx][1]));
  return perm;
}

Sp4ComplementDdg sp4_complement_ddg(std::uint64_t q) {
  Sp4ComplementDdg out{sp4_extension_model(q), {}};
  const auto perm = sp4_involution(out.model);
  const InvolutionReport report = involution_analyze(out.model.graph, perm);
  require(report.fixed_point_free(), errc::verify_failed,
          "involution has fixed points");
  require(report.nonedge_orbits == 0, errc::verify_failed,
          "involution interchanges non-adjacent vertices");
  const Graph comp = out.model.graph.complement();
  const DdgVerification got = verify_ddg(comp, report.orbits);
  const std::size_t v = out.model.graph.order();
  const DDGParameters expect = {v,
                                static_cast<std::size_t>(q * q * q),
                                static_cast<std::size_t>(q * q * (q - 1)),
                                static_cast<std::size_t>(q * q * (q - 1)),
                                v / 2,
                                2};
  require(got.params == expect, errc::parameter_mismatch,
          "complement DDG has parameters " + got.params.to_string() +
              ", corollary gives " + expect.to_string());
  require(got.cls == DdgClass::almost_proper, errc::parameter_mismatch,
          "complement DDG is not almost proper");
  out.ddg = {comp, report.orbits, got.params, got.cls};
  return out;
}

Sp4Star sp4_star(std::uint64_t q) {
  Sp4Star out{sp4_extension_model(q), Graph(), {}, {}, {}};
  const QuadExt& ext = out.model.field;
  const std::size_t v = out.model.graph.order();
  Graph star = out.model.graph;
  std::vector<std::vector<std::size_t>> lines;
  std::vector<std::size_t> owner(v, v);
  for (std::size_t x = 0; x < v; ++x) {
    if (owner[x] < v) continue;
    std::vector<std::size_t> line{x};
    owner[x] = lines.size();
    for (std::size_t y = x + 1; y < v; ++y)
      if (owner[y] == v &&
          pair_det(ext, out.model.labels[x], out.model.labels[y]) == 0) {
        line.push_back(y);
        owner[y] = lines.size();
      }
    lines.push_back(std::move(line));
  }
  // the deleted edges must be exactly the within-class pairs, and must form
  // q^2+1 disjoint cliques of order q+1
  require(lines.size() == static_cast<std::size_t>(q * q + 1),
          errc::spread_check_failed,
          "determinant-zero relation gives " + std::to_string(lines.size()) +
              " classes, expected q^2+1");
  for (const auto& line : lines)
    require(line.size() == static_cast<std::size_t>(q + 1),
            errc::spread_check_failed, "spread class is not a (q+1)-clique");
  for (std::size_t x = 0; x < v; ++x)
    for (std::size_t y = x + 1; y < v; ++y) {
      const bool zero =
          pair_det(ext, out.model.labels[x], out.model.labels[y]) == 0;
      require(zero == (owner[x] == owner[y]), errc::spread_check_failed,
              "determinant-zero relation is not a disjoint union of cliques");
      if (zero) {
        require(star.adjacent(x, y), errc::spread_check_failed,
                "spread pair was not an edge of Sp(4,q)");
        star.set_edge(x, y, false);
      }
    }
  out.spread = sorted_classes(std::move(lines));
  out.graph = std::move(star);
  out.array = verify_distance_regular(out.graph);
  require(out.array.diameter == 3, errc::not_distance_regular,
          "diameter is " + std::to_string(out.array.diameter) +
              ", expected 3");
  out.antipodal =
      sorted_classes(antipodal_classes(out.graph, out.array).classes);
  require(out.antipodal.classes == out.spread.classes, errc::not_antipodal,
          "antipodal classes differ from the spread");
  return out;
}

namespace {

template <FieldLike F>
MathonGraph mathon_from_field(const F& f, std::size_t r, felt b) {
  const std::uint64_t q = f.order();
  require(r > 1, errc::bad_parameters, "subgroup index must exceed 1");
  require((q - 1) % r == 0, errc::bad_parameters,
          "index must divide the multiplicative group order");
  const std::uint64_t m = (q - 1) / r;
  require(m % 2 == 0 || factor_prime_power(q).first == 2, errc::bad_parameters,
          "need m even or q a power of 2");
  require(r * (q + 1) <= kVertexCap, errc::bad_parameters,
          "vertex count above 1500");
  require(b != 0 && b < q, errc::bad_parameters, "b must be a nonzero element");

  std::vector<felt> subgroup;
  for (felt x = 1; x < q; ++x)
    if (subgroup_member(f, x, m)) subgroup.push_back(x);
  require(subgroup.size() == m, errc::verify_failed,
          "subgroup of order m not found");
  // coset table: x in bK  <=>  x != 0 and (x b^{-1})^m = 1
  const felt binv = f.inverse(b);
  std::vector<std::uint8_t> in_bk(q, 0);
  for (felt x = 1; x < q; ++x)
    in_bk[x] = f.pow(f.mul(x, binv), m) == f.one() ? 1 : 0;

  auto space = enumerate_orbits(f, subgroup);
  const std::size_t v = r * (q + 1);
  require(space.labels.size() == v, errc::verify_failed,
          "orbit count differs from r(q+1)");
  MathonGraph out;
  out.q = q;
  out.r = r;
  out.m = m;
  out.labels = std::move(space.labels);
  out.vertex_of = std::move(space.vertex_of);
  Graph g(v);
  for (std::size_t x = 0; x < v; ++x)
    for (std::size_t y = x + 1; y < v; ++y)
      if (in_bk[pair_det(f, out.labels[x], out.labels[y])])
        g.set_edge(x, y, true);
  out.graph = std::move(g);
  out.array = verify_distance_regular(out.graph);
  require(out.array.diameter == 3, errc::not_distance_regular,
          "diameter is " + std::to_string(out.array.diameter) +
              ", expected 3");
  require(out.array.valency() == q, errc::verify_failed,
          "valency differs from the field size");
  out.antipodal =
      sorted_classes(antipodal_classes(out.graph, out.array).classes);
  return out;
}

}  // namespace

MathonGraph mathon_graph(std::uint64_t q_size, std::size_t r, felt b) {
  const auto [p, k] = factor_prime_power(q_size);
  const FieldCtx f = FieldCtx::build(p, k);
  return mathon_from_field(f, r, b);
}

MathonQuotientReport mathon_quotient_check(std::uint64_t q) {
  const Sp4ComplementDdg comp = sp4_complement_ddg(q);
  const QuadExt& ext = comp.model.field;
  MathonQuotientReport report;
  report.q = q;
  report.ddg_order = comp.ddg.graph.order();
  report.class_count = report.ddg_order / 2;

  const RQPair pair = decompose_to_rq(comp.ddg);
  require(pair.w == static_cast<std::size_t>(q * q),
          errc::not_orthogonal_signing,
          "partner weight is " + std::to_string(pair.w) + ", expected q^2");
  for (std::size_t i = 0; i < report.class_count; ++i)
    require(pair.q.at(i, i) == 0, errc::not_orthogonal_signing,
            "partner diagonal nonzero at " + std::to_string(i));
  report.weight = pair.w;
  report.verified.push_back("Q is a symmetric W(" +
                            std::to_string(report.class_count) + "," +
                            std::to_string(pair.w) +
                            ") with zero diagonal and Q^2 = q^2 I");

  // K' = F_q^* union i F_q^*, realized as the subgroup of order 2(q-1)
  const std::uint64_t korder = 2 * (q - 1);
  for (felt a = 1; a < q; ++a)
    require(subgroup_member(ext, ext.embed(a), korder), errc::verify_failed,
            "K' does not contain the base multiplicative group");
  require(subgroup_member(ext, ext.i(), korder), errc::verify_failed,
          "K' does not contain i");
  const MathonGraph mathon =
      mathon_from_field(ext, static_cast<std::size_t>((q + 1) / 2), felt(1));
  report.mathon_array = mathon.array.to_string();
  report.verified.push_back("M(q^2) has " +
                            std::to_string(mathon.graph.order()) +
                            " vertices and intersection array " +
                            report.mathon_array);

  // classes {v, iv} <-> K'-orbits via canonical representatives
  const std::size_t m = report.class_count;
  std::vector<std::size_t> to_mathon(m);
  std::vector<std::uint8_t> hit(m, 0);
  for (std::size_t ci = 0; ci < m; ++ci) {
    const std::size_t rep = comp.ddg.partition.classes[ci][0];
    const auto& w = comp.model.labels[rep];
    const std::uint32_t mv =
        mathon.vertex_of[static_cast<std::uint64_t>(w[0]) * ext.order() + w[1]];
    require(mv != kNoVertex && mv < m && !hit[mv], errc::correspondence_failed,
            "class representatives do not biject onto M(q^2) vertices");
    hit[mv] = 1;
    to_mathon[ci] = mv;
  }
  report.verified.push_back(
      "canonical class representatives biject onto the K'-orbits");

  // B (reindexed) = R = Q (mod 2) and |Q| = B
  IntMatrix b(m, m);
  for (std::size_t ci = 0; ci < m; ++ci)
    for (std::size_t cj = 0; cj < m; ++cj)
      if (mathon.graph.adjacent(to_mathon[ci], to_mathon[cj]))
        b.at(ci, cj) = 1;
  require(mod2_congruent(b, pair.r), errc::congruence_failed,
          "B and R differ mod 2");
  require(mod2_congruent(pair.r, pair.q), errc::congruence_failed,
          "R and Q differ mod 2");
  report.verified.push_back("B = R = Q (mod 2) under the identification");
  for (std::size_t ci = 0; ci < m; ++ci)
    for (std::size_t cj = 0; cj < m; ++cj)
      require(abs(pair.q.at(ci, cj)) == b.at(ci, cj),
              errc::not_orthogonal_signing,
              "|Q| differs from the adjacency matrix of M(q^2) at (" +
                  std::to_string(ci) + "," + std::to_string(cj) + ")");
  report.verified.push_back("|Q| equals the adjacency matrix of M(q^2)");
  return report;
}

}  // namespace ddgf
