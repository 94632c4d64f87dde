#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace mvq {

using Rational = mpq_class;
using BigInt = mpz_class;

// Parses "p", "-p" or "p/q". Throws InputError on malformed text or q == 0.
Rational parse_rational(std::string_view text);

// Canonical text: "p" for integers, "p/q" otherwise (lowest terms, q > 0).
std::string to_string(const Rational& value);

// Dense rational matrix, row-major. Exact arithmetic only.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  std::size_t rank() const;
  std::size_t kernel_dim() const { return cols_ - rank(); }

  // [this | other]; row counts must agree.
  QMatrix hstack(const QMatrix& other) const;
  // Copy `block` into this matrix with its top-left corner at (r, c).
  void set_block(std::size_t r, std::size_t c, const QMatrix& block);

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const Rational& s, const QMatrix& a);
  friend bool operator==(const QMatrix& a, const QMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

QMatrix block_diagonal(const QMatrix& a, const QMatrix& b);

// Column span of `sub` is contained in column span of `super`.
bool column_span_contains(const QMatrix& super, const QMatrix& sub);

}  // namespace mvq
