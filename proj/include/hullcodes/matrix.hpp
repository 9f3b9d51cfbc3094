#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "hullcodes/field.hpp"

namespace hc {

/// Dense matrix of field-element indices.
using Matrix = Eigen::Matrix<std::int32_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RowVec = Eigen::Matrix<std::int32_t, 1, Eigen::Dynamic>;

/// Arithmetic policy for F_p on plain residues.
struct PrimeField {
  std::uint32_t p;

  std::int32_t zero() const { return 0; }
  std::int32_t one() const { return 1; }
  std::int32_t add(std::int32_t a, std::int32_t b) const { return static_cast<std::int32_t>((a + b) % p); }
  std::int32_t sub(std::int32_t a, std::int32_t b) const {
    return static_cast<std::int32_t>((a + static_cast<std::int32_t>(p) - b) % p);
  }
  std::int32_t neg(std::int32_t a) const { return a == 0 ? 0 : static_cast<std::int32_t>(p) - a; }
  std::int32_t mul(std::int32_t a, std::int32_t b) const {
    return static_cast<std::int32_t>(static_cast<std::int64_t>(a) * b % p);
  }
  std::int32_t inv(std::int32_t a) const {
    std::int64_t r = 1, base = a;
    for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
    }
    return static_cast<std::int32_t>(r);
  }
};

/// Arithmetic policy for F_{p^m} through a field context.
struct ExtField {
  const FieldCtx* ctx;

  std::int32_t zero() const { return 0; }
  std::int32_t one() const { return 1; }
  std::int32_t add(std::int32_t a, std::int32_t b) const { return idx(ctx->add(el(a), el(b))); }
  std::int32_t sub(std::int32_t a, std::int32_t b) const { return idx(ctx->sub(el(a), el(b))); }
  std::int32_t neg(std::int32_t a) const { return idx(ctx->neg(el(a))); }
  std::int32_t mul(std::int32_t a, std::int32_t b) const { return idx(ctx->mul(el(a), el(b))); }
  std::int32_t inv(std::int32_t a) const { return idx(ctx->inv(el(a))); }

 private:
  static Elem el(std::int32_t a) { return Elem{static_cast<std::uint32_t>(a)}; }
  static std::int32_t idx(Elem a) { return static_cast<std::int32_t>(a.index); }
};

/// Rows of a above rows of b (either may be empty).
inline Matrix vstack(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.rows() ? a.cols() : b.cols());
  if (a.rows()) out.topRows(a.rows()) = a;
  if (b.rows()) out.bottomRows(b.rows()) = b;
  return out;
}

/// Reduced row echelon form with zero rows dropped; `pivots[r]` is the
/// pivot column of row r.
struct Echelon {
  Matrix rows;
  std::vector<Eigen::Index> pivots;
};

template <class F>
Echelon rref(Matrix a, const F& f) {
  const Eigen::Index nr = a.rows(), nc = a.cols();
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < nc && r < nr; ++c) {
    Eigen::Index piv = r;
    while (piv < nr && a(piv, c) == 0) ++piv;
    if (piv == nr) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    const std::int32_t s = f.inv(a(r, c));
    for (Eigen::Index j = c; j < nc; ++j) a(r, j) = f.mul(a(r, j), s);
    for (Eigen::Index i = 0; i < nr; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const std::int32_t factor = a(i, c);
      for (Eigen::Index j = c; j < nc; ++j) {
        if (a(r, j) != 0) a(i, j) = f.sub(a(i, j), f.mul(factor, a(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return Echelon{a.topRows(r), std::move(pivots)};
}

template <class F>
Eigen::Index rank(const Matrix& a, const F& f) {
  return static_cast<Eigen::Index>(rref(a, f).pivots.size());
}

/// Basis (as rows, in RREF) of {x : a x^T = 0} for a matrix with n columns.
template <class F>
Matrix nullspace(const Matrix& a, Eigen::Index n, const F& f) {
  Echelon e = a.rows() == 0 ? Echelon{Matrix(0, n), {}} : rref(a, f);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  const Eigen::Index dim = n - static_cast<Eigen::Index>(e.pivots.size());
  Matrix basis = Matrix::Zero(dim, n);
  Eigen::Index row = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (is_pivot[static_cast<std::size_t>(j)]) continue;
    basis(row, j) = f.one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      basis(row, e.pivots[r]) = f.neg(e.rows(static_cast<Eigen::Index>(r), j));
    }
    ++row;
  }
  return dim == 0 ? basis : rref(basis, f).rows;
}

/// Intersection of two row spaces, via the left kernel of the stacked
/// generators: u A = v B.
template <class F>
Matrix intersect_rowspaces(const Matrix& a, const Matrix& b, const F& f) {
  const Eigen::Index n = a.cols();
  if (a.rows() == 0 || b.rows() == 0) return Matrix(0, n);
  const Matrix stacked = vstack(a, b);
  const Matrix t = stacked.transpose();
  const Matrix kernel = nullspace(t, stacked.rows(), f);
  Matrix out = Matrix::Zero(kernel.rows(), n);
  for (Eigen::Index r = 0; r < kernel.rows(); ++r) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      const std::int32_t u = kernel(r, i);
      if (u == 0) continue;
      for (Eigen::Index j = 0; j < n; ++j) out(r, j) = f.add(out(r, j), f.mul(u, a(i, j)));
    }
  }
  return out.rows() == 0 ? out : rref(out, f).rows;
}

/// u * M for a row vector u.
template <class F>
RowVec left_multiply(const RowVec& u, const Matrix& m, const F& f) {
  RowVec out = RowVec::Zero(m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (u(i) == 0) continue;
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(j) = f.add(out(j), f.mul(u(i), m(i, j)));
  }
  return out;
}

}  // namespace hc
