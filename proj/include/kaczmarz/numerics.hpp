#pragma once

// Small dense linear algebra for regressor-sized problems (n <= ~64).

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

namespace kaczmarz {

using Vector = std::vector<double>;

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);
double max_abs(std::span<const double> a);

// Square n x n matrix, row-major. Used for the information matrix and the
// gain; symmetry is restored explicitly with symmetrize().
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}
  SymMatrix(std::size_t n, std::vector<double> row_major);

  static SymMatrix identity(std::size_t n, double scale = 1.0);

  std::size_t dim() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }
  std::span<const double> data() const noexcept { return data_; }

  Vector apply(std::span<const double> x) const;
  SymMatrix operator*(const SymMatrix& rhs) const;
  SymMatrix operator-(const SymMatrix& rhs) const;
  SymMatrix& operator*=(double s);

  double trace() const;
  double max_abs_entry() const;
  double frobenius() const;

  bool operator==(const SymMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

struct Vec2 {
  double x0 = 0.0;
  double x1 = 0.0;
};

// [[a, b], [c, d]]
struct Mat2 {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  double det() const { return a * d - b * c; }
  double max_abs_entry() const;
  Vec2 apply(Vec2 x) const { return {a * x.x0 + b * x.x1, c * x.x0 + d * x.x1}; }
};

std::ostream& operator<<(std::ostream& os, const SymMatrix& m);

// Solves m x = rhs. Returns nullopt when |det m| <= rel_tol * max_abs_entry(m)^2,
// which callers treat as "skip this step".
std::optional<Vec2> solve2(const Mat2& m, Vec2 rhs, double rel_tol);

// Inverse under the same guard as solve2.
std::optional<Mat2> invert2(const Mat2& m, double rel_tol);

// Gauss-Jordan elimination with partial pivoting, result symmetrized.
// nullopt once a pivot magnitude drops below 1e-12 * max_abs_entry(m).
std::optional<SymMatrix> invert_sym(const SymMatrix& m);

SymMatrix symmetrize(const SymMatrix& m);

// lambda * a + Q D Q^T with Q = [q_new, q_old] and D = diag[1, -1], symmetrized.
SymMatrix rank_two_downdate_apply(const SymMatrix& a, std::span<const double> q_new,
                                  std::span<const double> q_old, double lambda);

// ||a - b||_F / ||b||_F (absolute when b is zero).
double relative_frobenius_error(const SymMatrix& a, const SymMatrix& b);

}  // namespace kaczmarz
