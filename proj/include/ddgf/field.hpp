#pragma once

#include <concepts>
#include <cstdint>
#include <vector>

namespace ddgf {

/// Field element handle: the canonical index of the element. For GF(p^k) in
/// the polynomial model the index encodes the coefficient vector c0..c_{k-1}
/// (little-endian base p: index = sum c_i p^i); for a quadratic extension
/// x + i*y over GF(q) it is x_index + q * y_index. The index order is the
/// canonical (coefficient-lexicographic) element order used everywhere a
/// deterministic choice is needed.
using felt = std::uint32_t;

/// GF(p^k), p prime, k >= 1, with the lexicographically smallest monic
/// irreducible modulus. Order capped at 2^20. Immutable after construction.
class FieldCtx {
 public:
  static FieldCtx build(std::uint64_t p, std::uint32_t k);

  std::uint64_t order() const { return order_; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  /// Monic modulus, little-endian coefficients, length k+1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  felt zero() const { return 0; }
  felt one() const { return 1; }
  felt add(felt a, felt b) const;
  felt sub(felt a, felt b) const;
  felt neg(felt a) const;
  felt mul(felt a, felt b) const;
  felt inverse(felt a) const;  // ZeroInverse on a == 0
  felt pow(felt a, std::uint64_t e) const;

  std::vector<std::uint32_t> coeffs(felt a) const;  // length k
  felt from_coeffs(const std::vector<std::uint32_t>& c) const;

  /// Quadratic character support (odd order): true iff a is a nonzero square
  /// or zero.
  bool is_square(felt a) const;

 private:
  FieldCtx() = default;
  std::uint32_t p_ = 0, k_ = 0;
  std::uint64_t order_ = 0;
  std::vector<std::uint32_t> modulus_;
};

/// GF(q^2) modeled as pairs x + i*y over a base GF(q) of odd order, with
/// i^2 = c for the smallest non-square c of the base field.
class QuadExt {
 public:
  static QuadExt build(FieldCtx base);  // EvenCharacteristic on even order

  const FieldCtx& base() const { return base_; }
  felt non_square() const { return c_; }
  std::uint64_t order() const { return q_ * q_; }

  felt make(felt x, felt y) const { return x + static_cast<felt>(q_) * y; }
  felt re(felt z) const { return z % static_cast<felt>(q_); }
  felt im(felt z) const { return z / static_cast<felt>(q_); }
  felt i() const { return make(0, 1); }
  felt embed(felt base_elt) const { return make(base_elt, 0); }
  bool in_base(felt z) const { return im(z) == 0; }

  felt zero() const { return 0; }
  felt one() const { return 1; }
  felt add(felt a, felt b) const;
  felt sub(felt a, felt b) const;
  felt neg(felt a) const;
  felt mul(felt a, felt b) const;
  felt inverse(felt a) const;
  felt pow(felt a, std::uint64_t e) const;

 private:
  explicit QuadExt(FieldCtx base);
  FieldCtx base_;
  std::uint64_t q_ = 0;
  felt c_ = 0;
};

template <class F>
concept FieldLike = requires(const F& f, felt a, felt b, std::uint64_t e) {
  { f.order() } -> std::convertible_to<std::uint64_t>;
  { f.zero() } -> std::same_as<felt>;
  { f.one() } -> std::same_as<felt>;
  { f.add(a, b) } -> std::same_as<felt>;
  { f.sub(a, b) } -> std::same_as<felt>;
  { f.neg(a) } -> std::same_as<felt>;
  { f.mul(a, b) } -> std::same_as<felt>;
  { f.inverse(a) } -> std::same_as<felt>;
  { f.pow(a, e) } -> std::same_as<felt>;
};

/// True iff x lies in the unique multiplicative subgroup of order m.
/// Requires m | order-1 (NotDivisor) and x != 0 (ZeroElement).
template <FieldLike F>
bool subgroup_member(const F& f, felt x, std::uint64_t m);

extern template bool subgroup_member<FieldCtx>(const FieldCtx&, felt,
                                               std::uint64_t);
extern template bool subgroup_member<QuadExt>(const QuadExt&, felt,
                                              std::uint64_t);

/// Factors a prime power: returns (p, k) with q = p^k, or throws
/// NotPrimePower.
std::pair<std::uint64_t, std::uint32_t> factor_prime_power(std::uint64_t q);

bool is_prime(std::uint64_t p);

}  // namespace ddgf
