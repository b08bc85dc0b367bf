#include "paving/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace paving {

double dot(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot: dimension mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

double Vector::norm_sq() const { return dot(coords_, coords_); }
double Vector::norm() const { return std::sqrt(norm_sq()); }

SymmetricMatrix::SymmetricMatrix(std::size_t n, std::vector<double> entries) : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n * n) {
    throw std::invalid_argument("SymmetricMatrix: expected " + std::to_string(n * n) + " entries, got " +
                                std::to_string(entries_.size()));
  }
  const double tol = 1e-12 * max_abs();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double& upper = entries_[i * n + j];
      double& lower = entries_[j * n + i];
      if (std::abs(upper - lower) > tol) {
        throw std::invalid_argument("SymmetricMatrix: entries (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") and transpose differ");
      }
      const double avg = 0.5 * (upper + lower);
      upper = avg;
      lower = avg;
    }
  }
}

SymmetricMatrix SymmetricMatrix::zero(std::size_t n) { return {n, std::vector<double>(n * n, 0.0)}; }

SymmetricMatrix SymmetricMatrix::identity(std::size_t n) {
  std::vector<double> e(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1.0;
  return {n, std::move(e)};
}

SymmetricMatrix SymmetricMatrix::diagonal(std::span<const double> diag) {
  const std::size_t n = diag.size();
  std::vector<double> e(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = diag[i];
  return {n, std::move(e)};
}

double SymmetricMatrix::max_abs() const {
  double m = 0.0;
  for (double x : entries_) m = std::max(m, std::abs(x));
  return m;
}

OrthonormalFrame::OrthonormalFrame(std::size_t rank, std::size_t dim, std::vector<double> rows)
    : rank_(rank), dim_(dim), rows_(std::move(rows)) {
  if (rows_.size() != rank * dim) throw std::invalid_argument("OrthonormalFrame: row storage has wrong size");
}

OrthonormalFrame OrthonormalFrame::from_rows(const std::vector<Vector>& rows, std::size_t dim) {
  std::vector<double> data;
  data.reserve(rows.size() * dim);
  for (const auto& r : rows) {
    if (r.size() != dim) throw std::invalid_argument("OrthonormalFrame: row length differs from dimension");
    data.insert(data.end(), r.coords().begin(), r.coords().end());
  }
  return {rows.size(), dim, std::move(data)};
}

std::vector<double> OrthonormalFrame::column(std::size_t i) const {
  std::vector<double> c(rank_);
  for (std::size_t k = 0; k < rank_; ++k) c[k] = rows_[k * dim_ + i];
  return c;
}

bool OrthonormalFrame::is_orthonormal(double tol) const {
  for (std::size_t a = 0; a < rank_; ++a) {
    for (std::size_t b = a; b < rank_; ++b) {
      const double target = a == b ? 1.0 : 0.0;
      if (std::abs(dot(row(a), row(b)) - target) > tol) return false;
    }
  }
  return true;
}

Projection::Projection(OrthonormalFrame frame) : frame_(std::move(frame)) {
  if (!frame_.is_orthonormal(1e-10)) throw std::invalid_argument("Projection: frame rows are not orthonormal");
}

Projection Projection::identity(std::size_t n) {
  std::vector<double> e(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1.0;
  return Projection(OrthonormalFrame(n, n, std::move(e)));
}

Projection Projection::onto(const Vector& v) {
  const double len = v.norm();
  if (len == 0.0) throw std::invalid_argument("Projection::onto: zero vector");
  std::vector<double> row(v.coords().begin(), v.coords().end());
  for (double& x : row) x /= len;
  return Projection(OrthonormalFrame(1, v.size(), std::move(row)));
}

std::vector<double> Projection::to_frame(std::span<const double> x) const {
  if (x.size() != dim()) throw std::invalid_argument("Projection: dimension mismatch");
  std::vector<double> c(rank());
  for (std::size_t k = 0; k < rank(); ++k) c[k] = dot(frame_.row(k), x);
  return c;
}

Vector Projection::from_frame(std::span<const double> c) const {
  if (c.size() != rank()) throw std::invalid_argument("Projection: frame coordinate count mismatch");
  Vector out(dim());
  for (std::size_t k = 0; k < rank(); ++k) {
    const auto row = frame_.row(k);
    for (std::size_t i = 0; i < dim(); ++i) out[i] += c[k] * row[i];
  }
  return out;
}

Vector Projection::apply(const Vector& x) const { return from_frame(to_frame(x.coords())); }

Symmetry::Symmetry(std::vector<std::int8_t> signs) : signs_(std::move(signs)) {
  for (std::size_t i = 0; i < signs_.size(); ++i) {
    if (signs_[i] != 1 && signs_[i] != -1) {
      throw std::invalid_argument("Symmetry: entry " + std::to_string(i) + " is not +1 or -1");
    }
  }
}

Symmetry Symmetry::from_mask(const std::vector<bool>& in_q) {
  std::vector<std::int8_t> s(in_q.size());
  for (std::size_t i = 0; i < in_q.size(); ++i) s[i] = in_q[i] ? 1 : -1;
  return Symmetry(std::move(s));
}

Symmetry Symmetry::negated() const {
  std::vector<std::int8_t> s(signs_);
  for (auto& x : s) x = static_cast<std::int8_t>(-x);
  return Symmetry(std::move(s));
}

SymmetricMatrix gram(const OrthonormalFrame& f) {
  const std::size_t r = f.rank();
  std::vector<double> g(r * r);
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = a; b < r; ++b) {
      g[a * r + b] = g[b * r + a] = dot(f.row(a), f.row(b));
    }
  }
  return {r, std::move(g)};
}

SymmetricMatrix materialize(const Projection& p) {
  const std::size_t n = p.dim();
  std::vector<double> m(n * n, 0.0);
  for (std::size_t k = 0; k < p.rank(); ++k) {
    const auto row = p.frame().row(k);
    for (std::size_t i = 0; i < n; ++i) {
      if (row[i] == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) m[i * n + j] += row[i] * row[j];
    }
  }
  return {n, std::move(m)};
}

SymmetricMatrix compress_psp(const Projection& p, const Symmetry& s) {
  if (s.size() != p.dim()) throw std::invalid_argument("compress_psp: symmetry length differs from dimension");
  const std::size_t r = p.rank();
  const std::size_t n = p.dim();
  std::vector<double> m(r * r, 0.0);
  for (std::size_t a = 0; a < r; ++a) {
    const auto ra = p.frame().row(a);
    for (std::size_t b = a; b < r; ++b) {
      const auto rb = p.frame().row(b);
      double acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) acc += s[i] * ra[i] * rb[i];
      m[a * r + b] = m[b * r + a] = acc;
    }
  }
  return {r, std::move(m)};
}

Vector apply_psp(const Projection& p, const Symmetry& s, const Vector& v) {
  if (s.size() != p.dim() || v.size() != p.dim()) throw std::invalid_argument("apply_psp: dimension mismatch");
  Vector pv = p.apply(v);
  for (std::size_t i = 0; i < pv.size(); ++i) pv[i] *= s[i];
  return p.apply(pv);
}

}  // namespace paving
