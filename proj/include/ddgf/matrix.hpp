#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ddgf {

using Int = mpz_class;

/// Dense exact-integer matrix. All arithmetic is exact; there is no floating
/// point anywhere in this library.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

  static IntMatrix identity(std::size_t n);
  static IntMatrix ones(std::size_t rows, std::size_t cols);
  // Row-major literal, mainly for tests and small fixed matrices.
  static IntMatrix of(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  bool is_symmetric() const;
  IntMatrix transpose() const;
  IntMatrix negate() const;

  bool operator==(const IntMatrix& other) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> entries_;
};

IntMatrix add(const IntMatrix& a, const IntMatrix& b);
IntMatrix sub(const IntMatrix& a, const IntMatrix& b);
IntMatrix mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix scalar_mul(const Int& c, const IntMatrix& a);

/// Kronecker product: block (i,j) of the result equals a[i,j] * b.
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

/// Assembles a matrix from a rectangular grid of blocks. All blocks in a grid
/// row must share a height, all blocks in a grid column a width.
IntMatrix from_blocks(const std::vector<std::vector<IntMatrix>>& blocks);

struct AlphaBeta {
  Int alpha;
  Int beta;
};

/// Returns (alpha, beta) with m = alpha*I + beta*J if such integers exist.
std::optional<AlphaBeta> detect_alpha_beta(const IntMatrix& m);

/// True iff a and b agree entrywise mod 2.
bool mod2_congruent(const IntMatrix& a, const IntMatrix& b);

/// Coefficients of det(xI - m), ascending degree (index = degree, monic).
/// Exact for any integer input; order capped at 512.
std::vector<Int> char_poly(const IntMatrix& m);

namespace detail {
// The two exact routes behind char_poly, exposed for cross-checking.
std::vector<Int> char_poly_faddeev(const IntMatrix& m);
std::vector<Int> char_poly_modular(const IntMatrix& m);
}  // namespace detail

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b);

bool is_perfect_square(const Int& v);
Int isqrt(const Int& v);

// Matrix text format. Line 1: "<rows> <cols>"; then `rows` lines of `cols`
// base-10 integers separated by single spaces; lines starting with '#' before
// the header are comments; trailing newline on write. The reader accepts
// repeated spaces between tokens.
void write_matrix(std::ostream& os, const IntMatrix& m);
IntMatrix read_matrix(std::istream& is);
void save_matrix(const std::string& path, const IntMatrix& m);
IntMatrix load_matrix(const std::string& path);

}  // namespace ddgf
