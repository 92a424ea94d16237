// Exact Gauss-Jordan reduction and canonical subspace arithmetic.
//
// Every subspace is held in reduced column echelon form, so two subspaces are
// equal exactly when their stored bases are equal entrywise.
#pragma once

#include <optional>
#include <vector>

#include "stratakit/matrix.hpp"

namespace stratakit {

template <class S> struct Rref {
  Mat<S> mat;               // reduced row echelon form
  std::vector<Index> pivots;  // pivot column per nonzero row
};

// Row-reduce to the canonical reduced echelon form: pivots are 1, pivot
// columns are elementary, pivot columns strictly increase.
template <class S> Rref<S> rref(Mat<S> m) {
  Rref<S> out;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index piv = -1;
    for (Index i = row; i < m.rows(); ++i)
      if (!is_zero(m(i, col))) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    S inv = S(1) / m(row, col);
    for (Index j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      S f = m(i, col);
      for (Index j = col; j < m.cols(); ++j)
        m(i, j) = m(i, j) - f * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.mat = std::move(m);
  return out;
}

template <class S> Index rank(const Mat<S>& m) {
  return static_cast<Index>(rref(m).pivots.size());
}

// Canonical kernel basis: one column per free column of m, with a 1 in the
// free position. Asserts rank + nullity = cols.
template <class S> Mat<S> kernel_basis(const Mat<S>& m, const FieldSpec& fs) {
  Rref<S> r = rref(m);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
  for (Index p : r.pivots) is_pivot[static_cast<size_t>(p)] = true;
  Index nullity = m.cols() - static_cast<Index>(r.pivots.size());
  STRATAKIT_CHECK(nullity >= 0, "rank exceeds column count");
  Mat<S> ker = mat_zero<S>(fs, m.cols(), nullity);
  Index k = 0;
  for (Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    ker(free, k) = scalar_from_int<S>(fs, 1);
    for (size_t i = 0; i < r.pivots.size(); ++i)
      ker(r.pivots[i], k) = -r.mat(static_cast<Index>(i), free);
    ++k;
  }
  STRATAKIT_CHECK(k == nullity, "rank-nullity mismatch in kernel_basis");
  return ker;
}

// Solve m x = b; the particular solution sets all free variables to zero.
template <class S>
std::optional<Vec<S>> solve(const Mat<S>& m, const Vec<S>& b,
                            const FieldSpec& fs) {
  STRATAKIT_CHECK(m.rows() == b.size(), "solve: shape mismatch");
  Mat<S> aug = hcat(m, densify(b));
  Rref<S> r = rref(aug);
  for (Index p : r.pivots)
    if (p == m.cols()) return std::nullopt;  // pivot in the augmented column
  Vec<S> x = vec_zero<S>(fs, m.cols());
  for (size_t i = 0; i < r.pivots.size(); ++i)
    x(r.pivots[i]) = r.mat(static_cast<Index>(i), m.cols());
  return x;
}

template <class S>
std::optional<Mat<S>> inverse(const Mat<S>& m, const FieldSpec& fs) {
  STRATAKIT_CHECK(m.rows() == m.cols(), "inverse: not square");
  Rref<S> r = rref(hcat(m, mat_identity<S>(fs, m.rows())));
  if (static_cast<Index>(r.pivots.size()) != m.rows()) return std::nullopt;
  for (Index i = 0; i < m.rows(); ++i)
    if (r.pivots[static_cast<size_t>(i)] != i) return std::nullopt;
  return densify(r.mat.rightCols(m.cols()));
}

// A subspace of k^n in reduced column echelon form. pivot_rows(j) is the row
// where column j is 1 and every other column is 0; coordinates of a member
// vector can be read off those rows directly.
template <class S> class Subspace {
public:
  Subspace(const FieldSpec& fs, Index ambient)
      : fs_(fs), basis_(mat_zero<S>(fs, ambient, 0)) {}

  static Subspace full(const FieldSpec& fs, Index ambient) {
    return span_of(mat_identity<S>(fs, ambient), fs);
  }

  static Subspace span_of(const Mat<S>& vectors, const FieldSpec& fs) {
    Subspace sub(fs, vectors.rows());
    Rref<S> r = rref(densify(vectors.transpose()));
    Index rk = static_cast<Index>(r.pivots.size());
    sub.basis_ = densify(r.mat.topRows(rk).transpose());
    sub.pivot_rows_ = r.pivots;
    return sub;
  }

  const FieldSpec& field() const { return fs_; }
  Index ambient() const { return basis_.rows(); }
  Index dim() const { return basis_.cols(); }
  bool is_zero() const { return dim() == 0; }
  const Mat<S>& basis() const { return basis_; }
  const std::vector<Index>& pivot_rows() const { return pivot_rows_; }

  bool operator==(const Subspace& o) const {
    return ambient() == o.ambient() && mat_equal(basis_, o.basis_);
  }

  // Coordinates of v in the stored basis, or nullopt if v is outside.
  std::optional<Vec<S>> coords(const Vec<S>& v) const {
    STRATAKIT_CHECK(v.size() == ambient(), "coords: ambient mismatch");
    Vec<S> x = vec_zero<S>(fs_, dim());
    for (Index j = 0; j < dim(); ++j) x(j) = v(pivot_rows_[static_cast<size_t>(j)]);
    if (!vec_equal<S>(densify_vec(basis_ * x), v)) return std::nullopt;
    return x;
  }

  bool contains(const Vec<S>& v) const { return coords(v).has_value(); }

  bool contains(const Subspace& o) const {
    for (Index j = 0; j < o.dim(); ++j)
      if (!contains(Vec<S>(o.basis_.col(j)))) return false;
    return true;
  }

  Subspace sum(const Subspace& o) const {
    STRATAKIT_CHECK(ambient() == o.ambient(), "sum: ambient mismatch");
    return span_of(hcat(basis_, o.basis_), fs_);
  }

  Subspace intersect(const Subspace& o) const {
    STRATAKIT_CHECK(ambient() == o.ambient(), "intersect: ambient mismatch");
    if (is_zero() || o.is_zero()) return Subspace(fs_, ambient());
    Mat<S> ker = kernel_basis(hcat(basis_, o.basis_), fs_);
    Mat<S> vecs = densify(basis_ * ker.topRows(dim()));
    return span_of(vecs, fs_);
  }

  // Basis vectors of this subspace extending `sub` to a basis; `sub` must be
  // contained in this subspace. Deterministic: scans the stored basis.
  std::vector<Vec<S>> complement_of(const Subspace& sub) const {
    STRATAKIT_CHECK(contains(sub), "complement_of: not a subspace");
    std::vector<Vec<S>> out;
    Subspace acc = sub;
    for (Index j = 0; j < dim(); ++j) {
      Vec<S> v = basis_.col(j);
      if (acc.contains(v)) continue;
      out.push_back(v);
      acc = acc.sum(span_of(densify(v), fs_));
    }
    STRATAKIT_CHECK(acc == *this, "complement_of: did not fill the space");
    return out;
  }

private:
  FieldSpec fs_;
  Mat<S> basis_;
  std::vector<Index> pivot_rows_;
};

// Incremental spanning: keeps a growing echelonized basis and accepts a
// vector only when it enlarges the span. Cheaper than re-running span_of when
// vectors arrive one at a time, and the final canonical form is recovered
// with finish().
template <class S> class SpanBuilder {
public:
  SpanBuilder(const FieldSpec& fs, Index ambient)
      : fs_(fs), ambient_(ambient) {}

  // Returns true when v enlarged the span.
  bool add(Vec<S> v) {
    STRATAKIT_CHECK(v.size() == ambient_, "SpanBuilder: ambient mismatch");
    for (size_t i = 0; i < rows_.size(); ++i) {
      const S& lead = v(pivots_[i]);
      if (!is_zero(lead)) v -= lead * rows_[i];
    }
    Index piv = -1;
    for (Index i = 0; i < ambient_; ++i)
      if (!is_zero(v(i))) { piv = i; break; }
    if (piv < 0) return false;
    Vec<S> row = v * (S(1) / v(piv));
    rows_.push_back(std::move(row));
    pivots_.push_back(piv);
    return true;
  }

  bool would_grow(Vec<S> v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
      const S& lead = v(pivots_[i]);
      if (!is_zero(lead)) v -= lead * rows_[i];
    }
    return !vec_is_zero(v);
  }

  Index dim() const { return static_cast<Index>(rows_.size()); }

  Subspace<S> finish() const {
    Mat<S> m = mat_zero<S>(fs_, ambient_, dim());
    for (Index j = 0; j < dim(); ++j) m.col(j) = rows_[static_cast<size_t>(j)];
    return Subspace<S>::span_of(m, fs_);
  }

private:
  FieldSpec fs_;
  Index ambient_;
  std::vector<Vec<S>> rows_;
  std::vector<Index> pivots_;
};

}  // namespace stratakit
