#include "kaczmarz/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "kaczmarz/errors.hpp"

namespace kaczmarz {

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

double max_abs(std::span<const double> a) {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}

SymMatrix::SymMatrix(std::size_t n, std::vector<double> row_major)
    : n_(n), data_(std::move(row_major)) {
  if (data_.size() != n * n) throw DimensionMismatch("SymMatrix: storage is not n*n");
}

SymMatrix SymMatrix::identity(std::size_t n, double scale) {
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = scale;
  return m;
}

Vector SymMatrix::apply(std::span<const double> x) const {
  if (x.size() != n_) throw DimensionMismatch("SymMatrix::apply: length mismatch");
  Vector y(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) y[i] = dot(row(i), x);
  return y;
}

SymMatrix SymMatrix::operator*(const SymMatrix& rhs) const {
  if (rhs.n_ != n_) throw DimensionMismatch("SymMatrix product: dimension mismatch");
  SymMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const double aik = (*this)(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n_; ++j) out(i, j) += aik * rhs(k, j);
    }
  }
  return out;
}

SymMatrix SymMatrix::operator-(const SymMatrix& rhs) const {
  if (rhs.n_ != n_) throw DimensionMismatch("SymMatrix difference: dimension mismatch");
  SymMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

SymMatrix& SymMatrix::operator*=(double s) {
  for (double& v : data_) v *= s;
  return *this;
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double SymMatrix::max_abs_entry() const { return max_abs(data_); }

double SymMatrix::frobenius() const { return norm2(data_); }

std::ostream& operator<<(std::ostream& os, const SymMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.dim(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.dim(); ++j) os << (j ? ", " : "") << m(i, j);
  }
  return os << ']';
}

double Mat2::max_abs_entry() const {
  return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
}

namespace {

bool is_singular2(const Mat2& m, double rel_tol) {
  const double scale = m.max_abs_entry();
  const double det = m.det();
  return !std::isfinite(det) || std::abs(det) <= rel_tol * scale * scale;
}

}  // namespace

std::optional<Vec2> solve2(const Mat2& m, Vec2 rhs, double rel_tol) {
  if (is_singular2(m, rel_tol)) return std::nullopt;
  const double det = m.det();
  return Vec2{(m.d * rhs.x0 - m.b * rhs.x1) / det, (m.a * rhs.x1 - m.c * rhs.x0) / det};
}

std::optional<Mat2> invert2(const Mat2& m, double rel_tol) {
  if (is_singular2(m, rel_tol)) return std::nullopt;
  const double det = m.det();
  return Mat2{m.d / det, -m.b / det, -m.c / det, m.a / det};
}

std::optional<SymMatrix> invert_sym(const SymMatrix& m) {
  const std::size_t n = m.dim();
  const double threshold = 1e-12 * m.max_abs_entry();
  if (n == 0) return SymMatrix{};
  if (m.max_abs_entry() == 0.0) return std::nullopt;

  SymMatrix work(m);
  SymMatrix inv = SymMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(work(r, col)) > std::abs(work(pivot, col))) pivot = r;
    }
    if (!(std::abs(work(pivot, col)) >= threshold)) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(col, j), work(pivot, j));
        std::swap(inv(col, j), inv(pivot, j));
      }
    }
    const double p = work(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      work(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = work(r, col);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        work(r, j) -= f * work(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return symmetrize(inv);
}

SymMatrix symmetrize(const SymMatrix& m) {
  const std::size_t n = m.dim();
  SymMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out(i, i) = m(i, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = 0.5 * (m(i, j) + m(j, i));
      out(i, j) = v;
      out(j, i) = v;
    }
  }
  return out;
}

SymMatrix rank_two_downdate_apply(const SymMatrix& a, std::span<const double> q_new,
                                  std::span<const double> q_old, double lambda) {
  const std::size_t n = a.dim();
  if (q_new.size() != n || q_old.size() != n) {
    throw DimensionMismatch("rank_two_downdate_apply: column length mismatch");
  }
  SymMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = lambda * a(i, j) + q_new[i] * q_new[j] - q_old[i] * q_old[j];
    }
  }
  return symmetrize(out);
}

double relative_frobenius_error(const SymMatrix& a, const SymMatrix& b) {
  const double diff = (a - b).frobenius();
  const double ref = b.frobenius();
  return ref > 0.0 ? diff / ref : diff;
}

}  // namespace kaczmarz
