#pragma once

#include <cstdint>

#include "ddgf/graphs.hpp"
#include "ddgf/matrix.hpp"

namespace ddgf {

struct WeighingMatrix {
  IntMatrix m;
  std::size_t n = 0;  // order
  std::size_t w = 0;  // weight: m * m^T = w I
};

/// Checks entries in {-1,0,1} and m m^T = w I; reports the first offending
/// inner product on failure.
WeighingMatrix verify_weighing(const IntMatrix& m);

/// Symmetric order-2^k Hadamard matrix by iterated Kronecker of [[1,1],[1,-1]].
IntMatrix hadamard_sylvester(unsigned k);  // 2^k <= 1024

/// Hadamard check (no symmetry or regularity demanded): entries +-1 and
/// m m^T = n I. Returns the order.
std::size_t verify_hadamard(const IntMatrix& m);

struct ConferenceMatrix {
  IntMatrix c;
  std::size_t n = 0;
  bool symmetric = false;
  bool normalized = false;
};

/// Validates a conference matrix (zero diagonal, weight n-1) and records
/// whether it is symmetric / normalized.
ConferenceMatrix verify_conference(const IntMatrix& m);

/// Paley symmetric conference matrix of order q+1 for a prime power
/// q = 1 (mod 4): border of ones around the quadratic-character core.
ConferenceMatrix conference_paley(std::uint64_t q);

/// From a symmetric normalized conference matrix with core S of order v,
/// borders S (x) S + I (x) J - J (x) I into a conference matrix of order
/// v^2 + 1, verified before returning.
ConferenceMatrix conference_square(const ConferenceMatrix& c);

struct RSHCD {
  IntMatrix h;
  std::size_t n = 0;
  long a = 0;   // constant row sum, a^2 = n
  int e = 0;    // constant diagonal, +1 or -1
  int eps = 0;  // type: sign(a*e)
};

RSHCD verify_rshcd(const IntMatrix& m);

/// Order-4 base RSHCD of the requested type and diagonal. Type +1 comes from
/// the matrix [[1,-1,1,1],[-1,1,1,1],[1,1,1,-1],[1,1,-1,1]], type -1 from
/// J - 2I; negation flips the diagonal and preserves the type.
RSHCD rshcd_base(int eps, int diag);

/// Kronecker product of RSHCDs; the type of the result is the product of the
/// input types (re-verified).
RSHCD rshcd_kronecker(const RSHCD& h1, const RSHCD& h2);

/// A = (J - eH)/2, verified as a (4u^2, 2u^2 - eps*u, u^2 - eps*u)-graph.
Graph rshcd_to_graph(const RSHCD& h);
/// Inverse: H = e(J - 2A) from a Menon-parameter (v,k,lambda)-graph.
RSHCD rshcd_from_graph(const Graph& g, int e);

/// Conference graph SRG(4t+1, 2t, t-1, t) -> symmetric conference matrix of
/// order v+1 via the bordered Seidel matrix.
ConferenceMatrix conference_from_srg(const Graph& g);
/// Inverse: strip the border of a symmetric normalized conference matrix and
/// recover the conference graph A = (J - I - S)/2.
Graph srg_from_conference(const ConferenceMatrix& c);

/// v = a^2 + b^2 for some integers a,b >= 0 (exhaustive a <= sqrt(v)).
bool two_squares_check(std::uint64_t v);

struct MenonParams {
  std::size_t v = 0, k = 0, lambda = 0;
  bool operator==(const MenonParams&) const = default;
};

/// N = (J+H)/2 verified as the incidence matrix of a Menon design with
/// parameters (4u^2, 2u^2 + du, u^2 + du), d = sign(a).
MenonParams menon_check(const RSHCD& h);

}  // namespace ddgf
