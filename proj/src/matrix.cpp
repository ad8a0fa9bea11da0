#include "ddgf/matrix.hpp"

#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "ddgf/errors.hpp"
#include "ddgf/parallel.hpp"

namespace ddgf {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols,
                     std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  require(entries_.size() == rows_ * cols_, errc::dimension_mismatch,
          "entry count does not match rows*cols");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::ones(std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = 1;
  return m;
}

IntMatrix IntMatrix::of(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  IntMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    require(row.size() == c, errc::dimension_mismatch, "ragged row literal");
    std::size_t j = 0;
    for (long v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::negate() const {
  IntMatrix t(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(i, j) = -at(i, j);
  return t;
}

IntMatrix add(const IntMatrix& a, const IntMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(),
          errc::dimension_mismatch, "add: shapes differ");
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      c.at(i, j) = a.at(i, j) + b.at(i, j);
  return c;
}

IntMatrix sub(const IntMatrix& a, const IntMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(),
          errc::dimension_mismatch, "sub: shapes differ");
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      c.at(i, j) = a.at(i, j) - b.at(i, j);
  return c;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  require(a.cols() == b.rows(), errc::dimension_mismatch,
          "mul: inner dimensions differ");
  IntMatrix c(a.rows(), b.cols());
  parallel_chunks(a.rows(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      for (std::size_t l = 0; l < a.cols(); ++l) {
        const Int& ail = a.at(i, l);
        if (ail == 0) continue;
        for (std::size_t j = 0; j < b.cols(); ++j) {
          const Int& blj = b.at(l, j);
          if (blj == 0) continue;
          mpz_addmul(c.at(i, j).get_mpz_t(), ail.get_mpz_t(), blj.get_mpz_t());
        }
      }
    }
  });
  return c;
}

IntMatrix scalar_mul(const Int& s, const IntMatrix& a) {
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = s * a.at(i, j);
  return c;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Int& aij = a.at(i, j);
      if (aij == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          c.at(i * b.rows() + k, j * b.cols() + l) = aij * b.at(k, l);
    }
  return c;
}

IntMatrix from_blocks(const std::vector<std::vector<IntMatrix>>& blocks) {
  require(!blocks.empty() && !blocks[0].empty(), errc::dimension_mismatch,
          "from_blocks: empty grid");
  const std::size_t grid_cols = blocks[0].size();
  std::size_t total_rows = 0, total_cols = 0;
  for (std::size_t j = 0; j < grid_cols; ++j) total_cols += blocks[0][j].cols();
  for (const auto& row : blocks) {
    require(row.size() == grid_cols, errc::dimension_mismatch,
            "from_blocks: ragged grid");
    total_rows += row[0].rows();
  }
  IntMatrix m(total_rows, total_cols);
  std::size_t row_off = 0;
  for (const auto& row : blocks) {
    const std::size_t h = row[0].rows();
    std::size_t col_off = 0;
    for (const auto& blk : row) {
      require(blk.rows() == h, errc::dimension_mismatch,
              "from_blocks: block heights differ within a grid row");
      for (std::size_t i = 0; i < blk.rows(); ++i)
        for (std::size_t j = 0; j < blk.cols(); ++j)
          m.at(row_off + i, col_off + j) = blk.at(i, j);
      col_off += blk.cols();
    }
    require(col_off == total_cols, errc::dimension_mismatch,
            "from_blocks: block widths differ between grid rows");
    row_off += h;
  }
  return m;
}

std::optional<AlphaBeta> detect_alpha_beta(const IntMatrix& m) {
  require(m.is_square(), errc::not_square, "detect_alpha_beta: not square");
  const std::size_t n = m.rows();
  AlphaBeta ab;
  ab.beta = n > 1 ? m.at(0, 1) : Int(0);
  ab.alpha = m.at(0, 0) - ab.beta;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Int want = i == j ? Int(ab.alpha + ab.beta) : ab.beta;
      if (m.at(i, j) != want) return std::nullopt;
    }
  return ab;
}

bool mod2_congruent(const IntMatrix& a, const IntMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(),
          errc::dimension_mismatch, "mod2_congruent: shapes differ");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Int d = a.at(i, j) - b.at(i, j);
      if (mpz_odd_p(d.get_mpz_t())) return false;
    }
  return true;
}

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Int> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return c;
}

bool is_perfect_square(const Int& v) {
  return v >= 0 && mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

Int isqrt(const Int& v) {
  require(v >= 0, errc::not_perfect_square, "isqrt of negative value");
  Int r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

// ---------------------------------------------------------------------------
// Characteristic polynomial
// ---------------------------------------------------------------------------

namespace detail {

std::vector<Int> char_poly_faddeev(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Int> coeffs(n + 1);
  coeffs[n] = 1;
  IntMatrix acc = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix m = mul(a, acc);
    Int tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += m.at(i, i);
    Int c = -tr;
    // the trace of the k-th Faddeev-LeVerrier iterate is divisible by k
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k));
    coeffs[n - k] = c;
    acc = std::move(m);
    for (std::size_t i = 0; i < n; ++i) acc.at(i, i) += coeffs[n - k];
  }
  return coeffs;
}

namespace {

// Montgomery arithmetic mod an odd prime p < 2^62.
struct Mont {
  std::uint64_t p;
  std::uint64_t ninv;  // -p^{-1} mod 2^64
  std::uint64_t r2;    // 2^128 mod p
  std::uint64_t one;

  explicit Mont(std::uint64_t mod) : p(mod) {
    std::uint64_t inv = p;
    for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
    ninv = ~inv + 1;
    unsigned __int128 r = (static_cast<unsigned __int128>(1) << 64) % p;
    r2 = static_cast<std::uint64_t>((r * r) % p);
    one = to(1);
  }

  std::uint64_t redc(unsigned __int128 t) const {
    const std::uint64_t m = static_cast<std::uint64_t>(t) * ninv;
    const unsigned __int128 s = t + static_cast<unsigned __int128>(m) * p;
    std::uint64_t r = static_cast<std::uint64_t>(s >> 64);
    return r >= p ? r - p : r;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return redc(static_cast<unsigned __int128>(a) * b);
  }
  std::uint64_t to(std::uint64_t x) const { return mul(x % p, r2); }
  std::uint64_t from(std::uint64_t x) const { return redc(x); }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p - b;
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = one;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint64_t inverse(std::uint64_t a) const { return pow(a, p - 2); }
};

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t s : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % s == 0) return n == s;
  }
  const Mont mt(n);
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  const std::uint64_t mone = mt.to(n - 1);
  for (std::uint64_t base : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                             19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = mt.pow(mt.to(base), d);
    if (x == mt.one || x == mone) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mt.mul(x, x);
      if (x == mone) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// charpoly of an upper Hessenberg matrix mod p, coefficients ascending,
// everything in the Montgomery domain.
std::vector<std::uint64_t> hessenberg_char_poly(const Mont& mt,
                                                std::vector<std::uint64_t>& h,
                                                std::size_t n) {
  auto hv = [&](std::size_t i, std::size_t j) -> std::uint64_t& {
    return h[i * n + j];
  };
  // similarity reduction to upper Hessenberg form
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = n;
    for (std::size_t i = j + 1; i < n; ++i)
      if (hv(i, j) != 0) {
        piv = i;
        break;
      }
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t t = 0; t < n; ++t) std::swap(hv(piv, t), hv(j + 1, t));
      for (std::size_t t = 0; t < n; ++t) std::swap(hv(t, piv), hv(t, j + 1));
    }
    const std::uint64_t inv = mt.inverse(hv(j + 1, j));
    for (std::size_t i = j + 2; i < n; ++i) {
      if (hv(i, j) == 0) continue;
      const std::uint64_t f = mt.mul(hv(i, j), inv);
      for (std::size_t t = j; t < n; ++t)
        hv(i, t) = mt.sub(hv(i, t), mt.mul(f, hv(j + 1, t)));
      for (std::size_t t = 0; t < n; ++t)
        hv(t, j + 1) = mt.add(hv(t, j + 1), mt.mul(f, hv(t, i)));
    }
  }
  // p_k = (x - h[k-1][k-1]) p_{k-1} - sum_i h[k-1-i][k-1] (prod subdiag) p_{k-1-i}
  std::vector<std::vector<std::uint64_t>> polys(n + 1);
  polys[0] = {mt.one};
  for (std::size_t k = 1; k <= n; ++k) {
    const auto& prev = polys[k - 1];
    std::vector<std::uint64_t> cur(k + 1, 0);
    for (std::size_t t = 0; t < prev.size(); ++t) {
      cur[t + 1] = mt.add(cur[t + 1], prev[t]);
      cur[t] = mt.sub(cur[t], mt.mul(hv(k - 1, k - 1), prev[t]));
    }
    std::uint64_t prod = mt.one;
    for (std::size_t i = 1; i < k; ++i) {
      prod = mt.mul(prod, hv(k - i, k - i - 1));
      if (prod == 0) break;
      const std::uint64_t coef = mt.mul(hv(k - 1 - i, k - 1), prod);
      if (coef == 0) continue;
      const auto& lower = polys[k - 1 - i];
      for (std::size_t t = 0; t < lower.size(); ++t)
        cur[t] = mt.sub(cur[t], mt.mul(coef, lower[t]));
    }
    polys[k] = std::move(cur);
  }
  return polys[n];
}

}  // namespace

std::vector<Int> char_poly_modular(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return {Int(1)};
  // coefficient bound: |c_{n-k}| <= C(n,k) * (B^2 k)^{ceil(k/2)}, B = max|entry|
  Int bmax = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Int v = abs(a.at(i, j));
      if (v > bmax) bmax = v;
    }
  Int bound = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Int binom, pw;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    Int base = bmax * bmax * static_cast<unsigned long>(k);
    mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(),
               static_cast<unsigned long>((k + 1) / 2));
    Int term = binom * pw;
    if (term > bound) bound = term;
  }
  bound = 2 * bound + 1;

  std::vector<std::uint64_t> primes;
  Int prod = 1;
  std::uint64_t cand = (std::uint64_t(1) << 62) - 1;
  while (prod <= bound) {
    while (!is_prime_u64(cand)) cand -= 2;
    primes.push_back(cand);
    prod *= Int(static_cast<unsigned long>(cand));
    cand -= 2;
  }

  // residues per prime, computed independently (parallel across primes)
  std::vector<std::vector<std::uint64_t>> residues(primes.size());
  parallel_chunks(primes.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t pi = lo; pi < hi; ++pi) {
      const Mont mt(primes[pi]);
      std::vector<std::uint64_t> h(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const unsigned long r = mpz_fdiv_ui(a.at(i, j).get_mpz_t(),
                                              static_cast<unsigned long>(mt.p));
          h[i * n + j] = mt.to(r);
        }
      auto poly = hessenberg_char_poly(mt, h, n);
      auto& out = residues[pi];
      out.resize(n + 1);
      for (std::size_t t = 0; t <= n; ++t) out[t] = mt.from(poly[t]);
    }
  });

  // CRT per coefficient, then lift to the symmetric range
  std::vector<Int> coeffs(n + 1);
  for (std::size_t t = 0; t <= n; ++t) {
    Int x = static_cast<unsigned long>(residues[0][t]);
    Int m = static_cast<unsigned long>(primes[0]);
    for (std::size_t pi = 1; pi < primes.size(); ++pi) {
      const std::uint64_t p = primes[pi];
      const Mont mt(p);
      const std::uint64_t xr = mpz_fdiv_ui(x.get_mpz_t(), p);
      const std::uint64_t mr = mpz_fdiv_ui(m.get_mpz_t(), p);
      const std::uint64_t diff = mt.sub(residues[pi][t] % p, xr % p);
      const std::uint64_t delta =
          mt.from(mt.mul(mt.to(diff), mt.inverse(mt.to(mr))));
      x += m * Int(static_cast<unsigned long>(delta));
      m *= Int(static_cast<unsigned long>(p));
    }
    if (2 * x > m) x -= m;
    coeffs[t] = x;
  }
  return coeffs;
}

}  // namespace detail

std::vector<Int> char_poly(const IntMatrix& m) {
  require(m.is_square(), errc::not_square, "char_poly: not square");
  require(m.rows() <= 512, errc::too_large, "char_poly: order above 512");
  if (m.rows() <= 32) return detail::char_poly_faddeev(m);
  return detail::char_poly_modular(m);
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

void write_matrix(std::ostream& os, const IntMatrix& m) {
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m.at(i, j);
    }
    os << '\n';
  }
}

IntMatrix read_matrix(std::istream& is) {
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line[0] == '#') continue;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    break;
  }
  require(!line.empty(), errc::bad_format, "matrix header missing");
  std::istringstream header(line);
  long long rows = -1, cols = -1;
  header >> rows >> cols;
  require(rows >= 0 && cols >= 0 && !header.fail(), errc::bad_format,
          "matrix header must be '<rows> <cols>'");
  IntMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Int v;
      is >> v;
      require(!is.fail(), errc::bad_format, "matrix entry missing or invalid");
      m.at(i, j) = v;
    }
  return m;
}

void save_matrix(const std::string& path, const IntMatrix& m) {
  std::ofstream os(path);
  require(os.good(), errc::io_error, "cannot open for writing: " + path);
  write_matrix(os, m);
  require(os.good(), errc::io_error, "write failed: " + path);
}

IntMatrix load_matrix(const std::string& path) {
  std::ifstream is(path);
  require(is.good(), errc::io_error, "cannot open for reading: " + path);
  return read_matrix(is);
}

}  // namespace ddgf
