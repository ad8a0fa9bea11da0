#include "ddgf/field.hpp"

#include <string>

#include "ddgf/errors.hpp"

namespace ddgf {

namespace {

constexpr std::uint64_t kOrderCap = std::uint64_t(1) << 20;

using Poly = std::vector<std::uint32_t>;  // little-endian, over GF(p)

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b, b monic-normalizable (leading coefficient invertible mod p)
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  // leading coefficient inverse mod p
  std::uint64_t lead = b[db], inv = 1;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) inv = inv * lead % p;
    lead = lead * lead % p;
  }
  while (a.size() > db) {
    const std::size_t da = a.size() - 1;
    const std::uint64_t f = a[da] * inv % p;
    if (f != 0)
      for (std::size_t i = 0; i <= db; ++i) {
        const std::uint64_t s = f * b[i] % p;
        const std::size_t pos = da - db + i;
        a[pos] = static_cast<std::uint32_t>((a[pos] + p - s) % p);
      }
    a.pop_back();
    trim(a);
    if (a.size() <= db) break;
  }
  return a;
}

bool is_zero(const Poly& a) {
  for (auto c : a)
    if (c) return false;
  return true;
}

// decodes m < p^len into len little-endian digits
Poly digits(std::uint64_t m, std::uint32_t p, std::size_t len) {
  Poly d(len);
  for (std::size_t i = 0; i < len; ++i) {
    d[i] = static_cast<std::uint32_t>(m % p);
    m /= p;
  }
  return d;
}

// irreducibility over GF(p) by trial division against all monic polynomials
// of degree 1..deg/2
bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t m = 0; m < count; ++m) {
      Poly g = digits(m, p, d);
      g.push_back(1);  // monic of degree d
      Poly r = poly_mod(f, g, p);
      if (is_zero(r)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::pair<std::uint64_t, std::uint32_t> factor_prime_power(std::uint64_t q) {
  require(q >= 2, errc::not_prime_power, std::to_string(q) + " is not a prime power");
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  std::uint32_t k = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  require(rest == 1, errc::not_prime_power,
          std::to_string(q) + " is not a prime power");
  return {p, k};
}

FieldCtx FieldCtx::build(std::uint64_t p, std::uint32_t k) {
  require(k >= 1, errc::degree_zero, "extension degree must be >= 1");
  require(is_prime(p), errc::not_prime, std::to_string(p) + " is composite");
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    order *= p;
    require(order <= kOrderCap, errc::too_large, "field order above 2^20");
  }
  FieldCtx f;
  f.p_ = static_cast<std::uint32_t>(p);
  f.k_ = k;
  f.order_ = order;
  // smallest monic irreducible of degree k, scanning the non-leading
  // coefficient vectors in canonical index order
  for (std::uint64_t m = 0; m < order; ++m) {
    Poly mod = digits(m, f.p_, k);
    mod.push_back(1);
    if (k == 1 || is_irreducible(mod, f.p_)) {
      f.modulus_ = std::move(mod);
      return f;
    }
  }
  fail(errc::not_prime, "no irreducible modulus found");  // unreachable
}

std::vector<std::uint32_t> FieldCtx::coeffs(felt a) const {
  return digits(a, p_, k_);
}

felt FieldCtx::from_coeffs(const std::vector<std::uint32_t>& c) const {
  require(c.size() == k_, errc::bad_entries, "coefficient vector length");
  std::uint64_t idx = 0;
  for (std::size_t i = k_; i-- > 0;) {
    require(c[i] < p_, errc::bad_entries, "coefficient out of range");
    idx = idx * p_ + c[i];
  }
  return static_cast<felt>(idx);
}

felt FieldCtx::add(felt a, felt b) const {
  std::uint64_t out = 0, mult = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out += (a % p_ + b % p_) % p_ * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return static_cast<felt>(out);
}

felt FieldCtx::neg(felt a) const {
  std::uint64_t out = 0, mult = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out += (p_ - a % p_) % p_ * mult;
    a /= p_;
    mult *= p_;
  }
  return static_cast<felt>(out);
}

felt FieldCtx::sub(felt a, felt b) const { return add(a, neg(b)); }

felt FieldCtx::mul(felt a, felt b) const {
  if (k_ == 1) return static_cast<felt>(std::uint64_t(a) * b % p_);
  const Poly da = coeffs(a), db = coeffs(b);
  Poly prod(2 * k_ - 1, 0);
  for (std::uint32_t i = 0; i < k_; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < k_; ++j)
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + std::uint64_t(da[i]) * db[j]) % p_);
  }
  Poly rem = poly_mod(std::move(prod), modulus_, p_);
  rem.resize(k_, 0);
  return from_coeffs(rem);
}

felt FieldCtx::pow(felt a, std::uint64_t e) const {
  felt r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

felt FieldCtx::inverse(felt a) const {
  require(a != 0, errc::zero_inverse, "zero has no multiplicative inverse");
  return pow(a, order_ - 2);
}

bool FieldCtx::is_square(felt a) const {
  if (a == 0) return true;
  require(order_ % 2 == 1, errc::even_characteristic,
          "quadratic character needs odd order");
  return pow(a, (order_ - 1) / 2) == one();
}

QuadExt::QuadExt(FieldCtx base) : base_(std::move(base)), q_(base_.order()) {}

QuadExt QuadExt::build(FieldCtx base) {
  require(base.order() % 2 == 1, errc::even_characteristic,
          "quadratic extension model needs odd base order");
  QuadExt ext(std::move(base));
  require(ext.q_ * ext.q_ <= (std::uint64_t(1) << 20), errc::too_large,
          "extension order above 2^20");
  felt c = 0;
  for (felt e = 1; e < ext.q_; ++e)
    if (!ext.base_.is_square(e)) {
      c = e;
      break;
    }
  require(c != 0, errc::even_characteristic, "no non-square in base field");
  ext.c_ = c;
  return ext;
}

felt QuadExt::add(felt a, felt b) const {
  return make(base_.add(re(a), re(b)), base_.add(im(a), im(b)));
}

felt QuadExt::sub(felt a, felt b) const {
  return make(base_.sub(re(a), re(b)), base_.sub(im(a), im(b)));
}

felt QuadExt::neg(felt a) const {
  return make(base_.neg(re(a)), base_.neg(im(a)));
}

felt QuadExt::mul(felt a, felt b) const {
  const felt x1 = re(a), y1 = im(a), x2 = re(b), y2 = im(b);
  const felt real =
      base_.add(base_.mul(x1, x2), base_.mul(c_, base_.mul(y1, y2)));
  const felt imag = base_.add(base_.mul(x1, y2), base_.mul(x2, y1));
  return make(real, imag);
}

felt QuadExt::inverse(felt a) const {
  require(a != 0, errc::zero_inverse, "zero has no multiplicative inverse");
  const felt x = re(a), y = im(a);
  // (x + iy)(x - iy) = x^2 - c y^2, nonzero since c is a non-square
  const felt norm =
      base_.sub(base_.mul(x, x), base_.mul(c_, base_.mul(y, y)));
  const felt ninv = base_.inverse(norm);
  return make(base_.mul(x, ninv), base_.mul(base_.neg(y), ninv));
}

felt QuadExt::pow(felt a, std::uint64_t e) const {
  felt r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

template <FieldLike F>
bool subgroup_member(const F& f, felt x, std::uint64_t m) {
  require(m >= 1 && (f.order() - 1) % m == 0, errc::not_divisor,
          "subgroup order must divide the group order " +
              std::to_string(f.order() - 1));
  require(x != f.zero(), errc::zero_element,
          "zero is not in the multiplicative group");
  return f.pow(x, m) == f.one();
}

template bool subgroup_member<FieldCtx>(const FieldCtx&, felt, std::uint64_t);
template bool subgroup_member<QuadExt>(const QuadExt&, felt, std::uint64_t);

}  // namespace ddgf
