#pragma once

#include <string>
#include <vector>

#include "ddgf/designs.hpp"
#include "ddgf/graphs.hpp"
#include "ddgf/matrix.hpp"

namespace ddgf {

enum class DdgClass { proper, almost_proper, improper_non_equitable };
const char* ddg_class_name(DdgClass c);

struct DDGParameters {
  std::size_t v = 0, k = 0, lambda1 = 0, lambda2 = 0, m = 0, n = 0;
  bool operator==(const DDGParameters&) const = default;
  std::string to_string() const;
};

struct DdgVerification {
  DDGParameters params;
  DdgClass cls = DdgClass::improper_non_equitable;
};

/// Brute-force divisible-design check: k-regularity, lambda1 common
/// neighbours within each class, lambda2 across classes. Improper results
/// (lambda1 = lambda2) are classified almost-proper when the partition is
/// equitable and m,n > 1.
DdgVerification verify_ddg(const Graph& g, const Partition& p);

/// Quotient matrix R with partner weighing matrix Q. Invariants: R symmetric
/// (0,1,2) with no 2 on the diagonal, Q symmetric weighing with diagonal in
/// {0,-1}, R = Q (mod 2), R^2 = alpha I + beta J with beta even, and
/// alpha + m*beta a perfect square.
struct RQPair {
  IntMatrix r, q;
  Int alpha, beta;
  std::size_t w = 0;
  std::size_t m() const { return r.rows(); }
};

/// Checks every hypothesis above, one distinct error per violation.
RQPair validate_rq_pair(const IntMatrix& r, const IntMatrix& q);

struct ThinDDG {
  Graph graph;
  Partition partition;  // canonical classes {i, i+m}
  DDGParameters params;
  DdgClass cls = DdgClass::improper_non_equitable;
};

/// A = [[R+Q, R-Q], [R-Q, R+Q]]/2 with classes {i, i+m} and parameters
/// (2m, sqrt(alpha+m*beta), k-w, beta/2, m, 2); output re-verified.
ThinDDG assemble_from_rq(const RQPair& pair);

/// Per-block inverse: R_ij = a+b, Q_ij = a-b from the [[a,b],[b,a]] blocks.
RQPair decompose_to_rq(const Graph& g, const Partition& p);
/// Additionally verifies Q^2 = (k-lambda1) I and that reassembly reproduces
/// the adjacency matrix exactly under the induced class relabeling.
RQPair decompose_to_rq(const ThinDDG& d);

struct RMatrix {
  IntMatrix r;
  Int alpha, beta;
};

/// Complete multipartite frame with diagonal blocks H_i + J from RSHCDs of
/// equal order, equal type, all diagonals -1; verifies
/// R^2 = 4u^2 I + (4tu^2 - 4 eps u) J.
RMatrix build_r_multipartite(const std::vector<IntMatrix>& rshcds);

/// R = [[J, J+H],[(J+H)^T, J]] from a regular Hadamard matrix with row sum
/// 2 delta u; verifies R^2 = 4u^2 I + (8u^2 + 4 delta u) J.
RMatrix build_r_bipartite_menon(const IntMatrix& regular_hadamard);

enum class Ps22Variant { a, b };

/// R = |Q| + 2 I_t (x) (J_4 - I_4)   (variant a), or
/// R = |Q| + 2 I_2t (x) (J_2 - I_2)  (variant b),
/// for a symmetric (4t, 4(t-1)) weighing matrix with 4x4 zero diagonal
/// blocks; alpha and beta are detected, not asserted.
RMatrix build_r_ps22(Ps22Variant variant, const WeighingMatrix& q);

/// C (x) H for a symmetric zero-diagonal conference matrix of order
/// t = 2 (mod 4) and a symmetric Hadamard matrix: a symmetric weighing
/// matrix of order yt, weight y(t-1), with t zero diagonal blocks.
WeighingMatrix build_q_kronecker(const ConferenceMatrix& c,
                                 const IntMatrix& sym_hadamard);

/// [[O, H],[H^T, O]] for any Hadamard matrix: an orthogonal signing of the
/// complete bipartite graph with parts of size y.
WeighingMatrix build_q_bipartite(const IntMatrix& hadamard);

/// diag(H_1, H_2) for symmetric Hadamard matrices with -1 diagonals.
WeighingMatrix build_q_block_diagonal(const IntMatrix& h1, const IntMatrix& h2);

struct FamilyResult {
  ThinDDG ddg;
  RQPair pair;
};

/// t >= 3 parts: parameters (8tu^2, 4tu^2-2eu, 4u^2-2eu, 2tu^2-2eu, 4tu^2, 2).
FamilyResult family_multipartite(const std::vector<IntMatrix>& rshcds,
                                 const WeighingMatrix& signing);
/// Two RSHCDs of type eps plus an arbitrary Hadamard matrix: almost proper,
/// parameters (16u^2, 8u^2-2eu, 4u^2-2eu, 4u^2-2eu, 8u^2, 2); the adjacency
/// matrix is checked against the theorem's 4x4 block display exactly.
FamilyResult family_bipartite(const IntMatrix& h1, const IntMatrix& h2,
                              const IntMatrix& h);
/// Regular Hadamard with row sum 2 delta u plus two symmetric Hadamard
/// matrices with -1 diagonals: almost proper, parameters
/// (16u^2, 8u^2+2du, 4u^2+2du, 4u^2+2du, 8u^2, 2), block display checked.
FamilyResult family_pair_of_cliques(const IntMatrix& regular_h,
                                    const IntMatrix& h1, const IntMatrix& h2);
/// Parameters (8t, 4t+2, 6, 2t+2, 4t, 2) (a) or (8t, 4t-2, 2, 2t-2, 4t, 2) (b).
FamilyResult family_ps22(Ps22Variant variant, const WeighingMatrix& q);

/// Recursive RSHCD constructions of order 16u^2 from order-4u^2 inputs.
/// Variant A keeps the input type; variant B produces type -delta.
RSHCD rshcd_recursion_a(const IntMatrix& h1, const IntMatrix& h2,
                        const IntMatrix& h);
RSHCD rshcd_recursion_b(const IntMatrix& regular_h, const IntMatrix& h1,
                        const IntMatrix& h2);

/// charpoly(A) = charpoly(R) * charpoly(Q) as an exact integer polynomial
/// identity, with A in the {i, i+m} class layout.
bool spectrum_factorization_check(const ThinDDG& d);

}  // namespace ddgf
