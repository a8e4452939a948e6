#pragma once

// Exact arithmetic kernel: rationals (GMP), Gaussian rationals, half-integer
// Gamma-function ratios with pole bookkeeping, and a small dense matrix type
// over an exact field with reduced row echelon form and canonical nullspaces.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace soclelab {

using Rational = mpq_class;

// Thrown when Gamma(x)/Gamma(y) has a pole in the numerator that is not
// cancelled by a pole in the denominator.
struct PoleError : std::runtime_error {
  explicit PoleError(const std::string& msg) : std::runtime_error(msg) {}
};

std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

// alpha (alpha-1) ... (alpha-k+1); equals 1 when k == 0.
Rational falling_factorial(const Rational& alpha, unsigned k);

// Gamma(x)/Gamma(y) for half-integers passed doubled (x2 = 2x, y2 = 2y) with
// x - y an integer.  Conventions:
//  * a Gamma-pole in the denominator only makes the ratio 0 (1/Gamma(-k) = 0);
//  * a pole in the numerator only throws PoleError;
//  * poles in both are resolved by the limit along constant x - y, giving
//    (-1)^(x-y) Gamma(1-y)/Gamma(1-x).
Rational gamma_ratio(long x2, long y2);

// Binomial coefficient for non-negative integer arguments (0 when k > n).
Rational binomial(long n, long k);

struct GaussianRational {
  Rational re, im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(const Rational& r) : re(r), im(0) {}
  GaussianRational(const Rational& r, const Rational& i) : re(r), im(i) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational operator+(const GaussianRational& o) const {
    return {re + o.re, im + o.im};
  }
  GaussianRational operator-(const GaussianRational& o) const {
    return {re - o.re, im - o.im};
  }
  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }
  GaussianRational inverse() const {
    Rational n = norm();
    if (n == 0) throw std::domain_error("division by zero GaussianRational");
    return {re / n, -im / n};
  }
  GaussianRational operator/(const GaussianRational& o) const {
    return *this * o.inverse();
  }
  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    *this = *this * o;
    return *this;
  }
  bool operator==(const GaussianRational& o) const {
    return re == o.re && im == o.im;
  }
  bool operator!=(const GaussianRational& o) const { return !(*this == o); }

  static GaussianRational i() { return {Rational(0), Rational(1)}; }
};

std::string to_string(const GaussianRational& z);

namespace detail {
inline bool field_is_zero(const Rational& x) { return x == 0; }
inline bool field_is_zero(const GaussianRational& x) { return x.is_zero(); }
inline Rational field_inverse(const Rational& x) { return Rational(1) / x; }
inline GaussianRational field_inverse(const GaussianRational& x) {
  return x.inverse();
}
}  // namespace detail

// Dense matrix over an exact field (Rational or GaussianRational).
template <class F>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = F(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  F& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const F& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const F& a = at(i, k);
        if (detail::field_is_zero(a)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          out.at(i, j) += a * o.at(k, j);
      }
    return out;
  }

  Matrix operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matrix shape mismatch");
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + o.e_[i];
    return out;
  }

  Matrix scaled(const F& s) const {
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] * s;
    return out;
  }

  std::vector<F> apply(const std::vector<F>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector size mismatch");
    std::vector<F> out(rows_, F(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!detail::field_is_zero(at(i, j))) out[i] += at(i, j) * v[j];
      }
    return out;
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!detail::field_is_zero(x)) return false;
    return true;
  }

  // In-place reduction to reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t sel = rows_;
      for (std::size_t r = row; r < rows_; ++r)
        if (!detail::field_is_zero(at(r, col))) {
          sel = r;
          break;
        }
      if (sel == rows_) continue;
      if (sel != row)
        for (std::size_t c = 0; c < cols_; ++c)
          std::swap(at(sel, c), at(row, c));
      F inv = detail::field_inverse(at(row, col));
      for (std::size_t c = col; c < cols_; ++c) at(row, c) = at(row, c) * inv;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == row || detail::field_is_zero(at(r, col))) continue;
        F f = at(r, col);
        for (std::size_t c = col; c < cols_; ++c)
          at(r, c) = at(r, c) - f * at(row, c);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix tmp = *this;
    return tmp.rref().size();
  }

  // Canonical basis of the right nullspace: one vector per free column, in
  // ascending free-column order, each scaled so its first nonzero entry is 1.
  std::vector<std::vector<F>> nullspace() const {
    Matrix tmp = *this;
    std::vector<std::size_t> pivots = tmp.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<F> v(cols_, F(0));
      v[free] = F(1);
      for (std::size_t r = 0; r < pivots.size(); ++r)
        v[pivots[r]] = -tmp.at(r, free);
      for (std::size_t c = 0; c < cols_; ++c) {
        if (!detail::field_is_zero(v[c])) {
          F inv = detail::field_inverse(v[c]);
          for (std::size_t k = 0; k < cols_; ++k) v[k] = v[k] * inv;
          break;
        }
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

  // Solves A x = b exactly; returns false when inconsistent. When the system
  // is underdetermined the free variables are set to 0.
  bool solve(const std::vector<F>& b, std::vector<F>& x) const {
    if (b.size() != rows_) throw std::invalid_argument("rhs size mismatch");
    Matrix aug(rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
      aug.at(r, cols_) = b[r];
    }
    std::vector<std::size_t> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return false;
    x.assign(cols_, F(0));
    for (std::size_t r = 0; r < pivots.size(); ++r)
      x[pivots[r]] = aug.at(r, cols_);
    return true;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<F> e_;
};

using ExactMatrix = Matrix<Rational>;
using GaussMatrix = Matrix<GaussianRational>;

}  // namespace soclelab
