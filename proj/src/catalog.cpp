#include "ddgf/catalog.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "ddgf/ddg.hpp"
#include "ddgf/designs.hpp"
#include "ddgf/errors.hpp"
#include "ddgf/graphs.hpp"
#include "ddgf/matrix.hpp"
#include "ddgf/symplectic.hpp"

namespace ddgf {

namespace {

std::string srg_str(const SrgParams& p) {
  std::ostringstream os;
  os << '(' << p.v << ',' << p.k << ',' << p.lambda << ',' << p.mu << ')';
  return os.str();
}

std::string vkl_str(const VklParams& p) {
  std::ostringstream os;
  os << '(' << p.v << ',' << p.k << ',' << p.lambda << ')';
  return os.str();
}

std::string ddg_str(const DDGParameters& p, DdgClass cls) {
  return p.to_string() + " " + ddg_class_name(cls);
}

struct Runner {
  Report& report;

  void add(int criterion, const std::string& name, const std::string& instance,
           const std::string& expected,
           const std::function<std::string()>& fn) {
    CheckRecord rec;
    rec.criterion = criterion;
    rec.name = name;
    rec.instance = instance;
    rec.expected = expected;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      rec.observed = fn();
      rec.pass = rec.observed == rec.expected;
    } catch (const std::exception& e) {
      rec.observed = e.what();
      rec.pass = false;
    }
    const auto t1 = std::chrono::steady_clock::now();
    rec.elapsed_ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    report.records.push_back(std::move(rec));
  }
};

std::vector<std::uint64_t> symplectic_qs(int max_q) {
  std::vector<std::uint64_t> qs{3};
  if (max_q >= 5) qs.push_back(5);
  if (max_q >= 7) qs.push_back(7);
  return qs;
}

// coordinate involution of the 4x4 lattice graph: swap 0<->1 and 2<->3 in
// both coordinates
std::vector<std::size_t> lattice4_involution() {
  static const std::size_t sigma[4] = {1, 0, 3, 2};
  std::vector<std::size_t> perm(16);
  for (std::size_t i = 0; i < 16; ++i)
    perm[i] = sigma[i / 4] * 4 + sigma[i % 4];
  return perm;
}

}  // namespace

bool Report::all_pass() const {
  for (const auto& r : records)
    if (!r.pass) return false;
  return true;
}

Report run_catalog(int max_q) {
  require(max_q == 3 || max_q == 5 || max_q == 7, errc::bad_parameters,
          "max_q must be 3, 5 or 7");
  Report report;
  report.max_q = max_q;
  Runner run{report};
  const auto qs = symplectic_qs(max_q);

  // shared small ingredients
  const IntMatrix h4 = hadamard_sylvester(2);
  const IntMatrix base_p1 = rshcd_base(1, -1).h;   // type +1, diagonal -1
  const IntMatrix base_m1 = rshcd_base(-1, -1).h;  // J - 2I

  // 1. symplectic strongly regular graphs
  run.add(1, "sp-graph", "t=2 q=2", "(15,6,1,3)",
          [] { return srg_str(verify_srg(sp_graph(2, 2))); });
  run.add(1, "sp-graph", "t=2 q=3", "(40,12,2,4)",
          [] { return srg_str(verify_srg(sp_graph(2, 3))); });
  {
    const std::vector<std::string> expects{"(40,12,2,4)", "(156,30,4,6)",
                                           "(400,56,6,8)"};
    for (std::size_t i = 0; i < qs.size(); ++i)
      run.add(1, "sp4-extension-model", "q=" + std::to_string(qs[i]),
              expects[i], [&, i] {
                return srg_str(verify_srg(sp4_extension_model(qs[i]).graph));
              });
  }

  // 2. fixed-point free involution interchanging only adjacent vertices
  for (const auto q : qs) {
    const std::size_t orbits = (q * q * q + q * q + q + 1) / 2;
    run.add(2, "sp4-involution", "q=" + std::to_string(q),
            "fixed-point free, " + std::to_string(orbits) +
                " orbits, all edges",
            [q] {
              const Sp4Model model = sp4_extension_model(q);
              const auto report = involution_analyze(model.graph,
                                                     sp4_involution(model));
              std::ostringstream os;
              os << (report.fixed_point_free() ? "fixed-point free"
                                               : "has fixed points")
                 << ", " << report.orbits.class_count() << " orbits, "
                 << (report.nonedge_orbits == 0 ? "all edges"
                                                : "some non-edges");
              return os.str();
            });
  }

  // 3. complement of Sp(4,q) as an almost proper thin DDG
  for (const auto q : qs) {
    const std::size_t v = q * q * q + q * q + q + 1;
    std::ostringstream expect;
    expect << '(' << v << ',' << q * q * q << ',' << q * q * (q - 1) << ','
           << q * q * (q - 1) << ',' << v / 2 << ",2) almost-proper, Q=W("
           << v / 2 << ',' << q * q << ") zero diagonal, Q^2=" << q * q
           << "I";
    run.add(3, "sp4-complement-ddg", "q=" + std::to_string(q), expect.str(),
            [q] {
              const Sp4ComplementDdg c = sp4_complement_ddg(q);
              const RQPair pair = decompose_to_rq(c.ddg);
              for (std::size_t i = 0; i < pair.m(); ++i)
                require(pair.q.at(i, i) == 0, errc::not_orthogonal_signing,
                        "partner diagonal nonzero");
              const auto q2 = detect_alpha_beta(mul(pair.q, pair.q));
              require(q2 && q2->beta == 0 &&
                          q2->alpha == Int(static_cast<unsigned long>(q * q)),
                      errc::verify_failed, "Q^2 is not q^2 I");
              std::ostringstream os;
              os << ddg_str(c.ddg.params, c.ddg.cls) << ", Q=W(" << pair.m()
                 << ',' << pair.w << ") zero diagonal, Q^2=" << pair.w << "I";
              return os.str();
            });
  }

  // 4. Sp(4,q)*: spread deletion, distance regularity, antipodality
  for (const auto q : qs) {
    std::ostringstream expect;
    if (q == 3)
      expect << "spread 10x4, array {9,6,1;1,2,9} (s=2), antipodal=spread";
    else
      expect << "spread " << q * q + 1 << 'x' << q + 1
             << ", array shape {q^2,q^2-s-1,1;1,s,q^2}, antipodal=spread";
    run.add(4, "sp4-star", "q=" + std::to_string(q), expect.str(), [q] {
      const Sp4Star star = sp4_star(q);
      const std::size_t k = q * q;
      const std::size_t s = star.array.c[1];
      const IntersectionArray shape{{k, k - s - 1, 1}, {1, s, k}, 3};
      require(star.array == shape, errc::not_distance_regular,
              "array " + star.array.to_string() +
                  " does not match the antipodal shape");
      std::ostringstream os;
      if (q == 3)
        os << "spread " << star.spread.class_count() << 'x'
           << star.spread.classes[0].size() << ", array "
           << star.array.to_string() << " (s=" << s << "), antipodal=spread";
      else
        os << "spread " << star.spread.class_count() << 'x'
           << star.spread.classes[0].size()
           << ", array shape {q^2,q^2-s-1,1;1,s,q^2}, antipodal=spread";
      return os.str();
    });
  }

  // 5. quotient of Sp(4,q)* and the orthogonal signing of M(q^2)
  for (const auto q : qs) {
    run.add(5, "mathon-quotient", "q=" + std::to_string(q),
            "B=R=Q (mod 2), |Q|=B, Q=W(" +
                std::to_string((q * q * q + q * q + q + 1) / 2) + "," +
                std::to_string(q * q) + ")",
            [q] {
              const MathonQuotientReport rep = mathon_quotient_check(q);
              return "B=R=Q (mod 2), |Q|=B, Q=W(" +
                     std::to_string(rep.class_count) + "," +
                     std::to_string(rep.weight) + ")";
            });
  }

  // 6 + 7. thin-DDG construction grid, with the spectrum factorization of
  // every DDG built here and in criterion 3
  struct GridEntry {
    std::string name;
    std::string instance;
    std::string expected;
    std::function<FamilyResult()> build;
  };
  const ConferenceMatrix c2 = verify_conference(IntMatrix::of({{0, 1}, {1, 0}}));
  std::vector<GridEntry> grid;
  grid.push_back({"ps22-a", "t=2", "(16,10,6,6,8,2)", [&] {
                    return family_ps22(Ps22Variant::a,
                                       build_q_kronecker(c2, h4));
                  }});
  grid.push_back({"ps22-b", "t=2", "(16,6,2,2,8,2)", [&] {
                    return family_ps22(Ps22Variant::b,
                                       build_q_kronecker(c2, h4));
                  }});
  for (const int eps : {1, -1}) {
    const std::string expect =
        eps == 1 ? "(48,22,2,10,24,2)" : "(48,26,6,14,24,2)";
    grid.push_back({"multipartite", "t=6 u=1 eps=" + std::to_string(eps),
                    expect, [&, eps] {
                      const IntMatrix part = rshcd_base(eps, -1).h;
                      const std::vector<IntMatrix> parts(6, part);
                      return family_multipartite(
                          parts, build_q_kronecker(conference_paley(5), h4));
                    }});
  }
  for (const int eps : {1, -1}) {
    const std::string expect =
        eps == 1 ? "(16,6,2,2,8,2)" : "(16,10,6,6,8,2)";
    grid.push_back({"bipartite", "u=1 eps=" + std::to_string(eps), expect,
                    [&, eps] {
                      const IntMatrix part = rshcd_base(eps, -1).h;
                      return family_bipartite(part, part, h4);
                    }});
  }
  for (const int delta : {1, -1}) {
    const std::string expect =
        delta == 1 ? "(16,10,6,6,8,2)" : "(16,6,2,2,8,2)";
    grid.push_back({"pair-of-cliques", "u=1 delta=" + std::to_string(delta),
                    expect, [&, delta] {
                      const IntMatrix reg =
                          delta == 1 ? base_m1 : base_m1.negate();
                      return family_pair_of_cliques(reg, base_m1, base_m1);
                    }});
  }
  for (const auto& entry : grid) {
    run.add(6, entry.name, entry.instance, entry.expected, [&entry] {
      const FamilyResult result = entry.build();
      return result.ddg.params.to_string();
    });
    run.add(7, "spectrum-factorization", entry.name + " " + entry.instance,
            "charpoly(A) = charpoly(R) * charpoly(Q)", [&entry] {
              const FamilyResult result = entry.build();
              require(spectrum_factorization_check(result.ddg),
                      errc::verify_failed, "polynomial identity fails");
              return std::string(
                  "charpoly(A) = charpoly(R) * charpoly(Q)");
            });
  }
  run.add(6, "round-trip", "decompose after assemble, full grid",
          "identity on (R,Q)", [&grid] {
            for (const auto& entry : grid) {
              const FamilyResult result = entry.build();
              const RQPair back = decompose_to_rq(result.ddg);
              require(back.r == result.pair.r && back.q == result.pair.q,
                      errc::verify_failed,
                      entry.name + ": decompose does not invert assemble");
            }
            return std::string("identity on (R,Q)");
          });
  for (const auto q : qs) {
    run.add(7, "spectrum-factorization",
            "sp4-complement-ddg q=" + std::to_string(q),
            "charpoly(A) = charpoly(R) * charpoly(Q)", [q] {
              const Sp4ComplementDdg c = sp4_complement_ddg(q);
              require(spectrum_factorization_check(c.ddg),
                      errc::verify_failed, "polynomial identity fails");
              return std::string(
                  "charpoly(A) = charpoly(R) * charpoly(Q)");
            });
  }

  // 8. recursive RSHCD constructions
  for (const int eps : {1, -1}) {
    run.add(8, "rshcd-recursion-a", "u=1 eps=" + std::to_string(eps),
            "order 16, type " + std::to_string(eps), [&, eps] {
              const IntMatrix part = rshcd_base(eps, -1).h;
              const RSHCD out = rshcd_recursion_a(part, part, h4);
              return "order " + std::to_string(out.n) + ", type " +
                     std::to_string(out.eps);
            });
  }
  for (const int delta : {1, -1}) {
    run.add(8, "rshcd-recursion-b", "u=1 delta=" + std::to_string(delta),
            "order 16, type " + std::to_string(-delta), [&, delta] {
              const IntMatrix reg = delta == 1 ? base_m1 : base_m1.negate();
              const RSHCD out = rshcd_recursion_b(reg, base_m1, base_m1);
              return "order " + std::to_string(out.n) + ", type " +
                     std::to_string(out.eps);
            });
  }
  run.add(8, "rshcd-recursion-a", "H1=H2=H, both types",
          "equals the Kronecker product", [&] {
            const IntMatrix pos4 = rshcd_base(1, 1).h;
            for (const int eps : {1, -1}) {
              const IntMatrix h = rshcd_base(eps, -1).h;
              const RSHCD out = rshcd_recursion_a(h, h, h);
              require(out.h == kronecker(pos4, h), errc::verify_failed,
                      "output differs from the Kronecker product");
            }
            return std::string("equals the Kronecker product");
          });
  run.add(8, "rshcd-kronecker", "(4,delta) x (4,eps)",
          "order 16, type delta*eps, all four signs", [] {
            for (const int d : {1, -1})
              for (const int e : {1, -1}) {
                const RSHCD out =
                    rshcd_kronecker(rshcd_base(d, -1), rshcd_base(e, -1));
                require(out.n == 16 && out.eps == d * e, errc::verify_failed,
                        "unexpected Kronecker type");
              }
            return std::string("order 16, type delta*eps, all four signs");
          });

  // 9. conference machinery
  run.add(9, "conference-paley", "q=5", "W(6,5) symmetric normalized", [] {
    const ConferenceMatrix c = conference_paley(5);
    require(c.n % 4 == 2, errc::verify_failed, "order not 2 mod 4");
    return "W(" + std::to_string(c.n) + "," + std::to_string(c.n - 1) + ")" +
           (c.symmetric ? " symmetric" : "") +
           (c.normalized ? " normalized" : "");
  });
  run.add(9, "conference-paley", "q=9", "W(10,9) symmetric normalized", [] {
    const ConferenceMatrix c = conference_paley(9);
    require(c.n % 4 == 2, errc::verify_failed, "order not 2 mod 4");
    return "W(" + std::to_string(c.n) + "," + std::to_string(c.n - 1) + ")" +
           (c.symmetric ? " symmetric" : "") +
           (c.normalized ? " normalized" : "");
  });
  run.add(9, "conference-square", "core of Paley(5)",
          "order 26, C C^T = 25 I", [] {
            const ConferenceMatrix sq = conference_square(conference_paley(5));
            require(sq.n % 4 == 2, errc::verify_failed, "order not 2 mod 4");
            const IntMatrix gram = mul(sq.c, sq.c.transpose());
            const auto ab = detect_alpha_beta(gram);
            require(ab && ab->beta == 0 && ab->alpha == 25,
                    errc::verify_failed, "Gram matrix is not 25 I");
            return "order " + std::to_string(sq.n) + ", C C^T = 25 I";
          });
  run.add(9, "conference-graph-bridge", "pentagon", "round-trip identity", [] {
    Graph pentagon(5);
    for (std::size_t i = 0; i < 5; ++i)
      pentagon.set_edge(i, (i + 1) % 5, true);
    const ConferenceMatrix c = conference_from_srg(pentagon);
    require(c.n == 6 && c.symmetric && c.n % 4 == 2, errc::verify_failed,
            "pentagon does not border to an order-6 conference matrix");
    require(srg_from_conference(c) == pentagon, errc::verify_failed,
            "round-trip does not reproduce the pentagon");
    return std::string("round-trip identity");
  });
  run.add(9, "conference-graph-bridge", "Paley(9)", "round-trip identity", [] {
    const ConferenceMatrix c = conference_paley(9);
    const Graph g = srg_from_conference(c);
    require(verify_srg(g) == SrgParams{9, 4, 1, 2}, errc::verify_failed,
            "core graph is not an SRG(9,4,1,2)");
    require(conference_from_srg(g).c == c.c, errc::verify_failed,
            "round-trip does not reproduce the conference matrix");
    return std::string("round-trip identity");
  });

  // 10. sum-of-two-squares feasibility filter
  run.add(10, "two-squares", "v=21 and v=45", "21 no, 45 yes", [] {
    require(!two_squares_check(21), errc::verify_failed, "21 accepted");
    require(two_squares_check(45), errc::verify_failed, "45 rejected");
    return std::string("21 no, 45 yes");
  });
  run.add(10, "two-squares", "naive oracle v <= 10^4", "exhaustive agreement",
          [] {
            for (std::uint64_t v = 0; v <= 10000; ++v) {
              bool naive = false;
              for (std::uint64_t a = 0; a * a <= v && !naive; ++a)
                for (std::uint64_t b = a; a * a + b * b <= v; ++b)
                  if (a * a + b * b == v) {
                    naive = true;
                    break;
                  }
              require(two_squares_check(v) == naive, errc::verify_failed,
                      "disagreement at v = " + std::to_string(v));
            }
            return std::string("exhaustive agreement");
          });

  // 11. lattice graph anchor
  run.add(11, "lattice-graph", "n=4", "(16,6,2)", [] {
    return vkl_str(verify_vkl_graph(lattice_graph(4)));
  });
  run.add(11, "lattice-involution", "sigma=(01)(23) on both coordinates",
          "fixed-point free, 8 non-edge orbits", [] {
            const Graph l4 = lattice_graph(4);
            const auto report = involution_analyze(l4, lattice4_involution());
            std::ostringstream os;
            os << (report.fixed_point_free() ? "fixed-point free"
                                             : "has fixed points")
               << ", " << report.nonedge_orbits << " non-edge orbits";
            require(report.edge_orbits == 0, errc::verify_failed,
                    "involution interchanges adjacent vertices");
            return os.str();
          });
  run.add(11, "lattice-ddg", "orbit partition", "(16,6,2,2,8,2) almost-proper",
          [] {
            const Graph l4 = lattice_graph(4);
            const auto report = involution_analyze(l4, lattice4_involution());
            const DdgVerification v = verify_ddg(l4, report.orbits);
            return ddg_str(v.params, v.cls);
          });

  return report;
}

void write_report_json(std::ostream& os, const Report& report) {
  nlohmann::ordered_json j;
  j["max_q"] = report.max_q;
  j["all_pass"] = report.all_pass();
  j["records"] = nlohmann::ordered_json::array();
  for (const auto& r : report.records) {
    nlohmann::ordered_json rec;
    rec["criterion"] = r.criterion;
    rec["name"] = r.name;
    rec["instance"] = r.instance;
    rec["expected"] = r.expected;
    rec["observed"] = r.observed;
    rec["pass"] = r.pass;
    rec["elapsed_ms"] = r.elapsed_ms;
    j["records"].push_back(std::move(rec));
  }
  os << j.dump(2) << '\n';
}

}  // namespace ddgf
