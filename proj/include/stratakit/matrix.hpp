// Dense matrix and vector aliases over an exact scalar, plus small helpers
// that keep every entry bound to the ambient field.
#pragma once

#include <Eigen/Core>

#include <string>
#include <vector>

#include "stratakit/field.hpp"

// boost 1.74's byte-container probe dereferences C::const_iterator, which
// Eigen defines as void on two-dimensional expressions; the resulting hard
// error escapes SFINAE whenever overload resolution asks whether an Eigen
// expression converts to a multiprecision scalar (later boost releases made
// the probe lazy). Answering "no" up front for the Eigen families keeps
// every such is_convertible instantiation well-formed.
namespace boost { namespace multiprecision { namespace detail {
template <class S, int R, int C, int O, int MR, int MC>
struct is_byte_container<Eigen::Matrix<S, R, C, O, MR, MC>>
    : public boost::false_type {};
template <class X, int R, int C, bool P>
struct is_byte_container<Eigen::Block<X, R, C, P>>
    : public boost::false_type {};
template <class X>
struct is_byte_container<Eigen::Transpose<X>> : public boost::false_type {};
template <class L, class R, int O>
struct is_byte_container<Eigen::Product<L, R, O>>
    : public boost::false_type {};
template <class F, class L, class R>
struct is_byte_container<Eigen::CwiseBinaryOp<F, L, R>>
    : public boost::false_type {};
template <class F, class X>
struct is_byte_container<Eigen::CwiseUnaryOp<F, X>>
    : public boost::false_type {};
template <class F, class P>
struct is_byte_container<Eigen::CwiseNullaryOp<F, P>>
    : public boost::false_type {};
template <class X, int S>
struct is_byte_container<Eigen::VectorBlock<X, S>>
    : public boost::false_type {};
template <class X, int I>
struct is_byte_container<Eigen::Diagonal<X, I>> : public boost::false_type {};
}}}  // namespace boost::multiprecision::detail

namespace stratakit {

template <class S> using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S> using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

template <class S> Mat<S> mat_zero(const FieldSpec& fs, Index rows, Index cols) {
  return Mat<S>::Constant(rows, cols, scalar_from_int<S>(fs, 0));
}

template <class S> Mat<S> mat_identity(const FieldSpec& fs, Index n) {
  Mat<S> m = mat_zero<S>(fs, n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = scalar_from_int<S>(fs, 1);
  return m;
}

template <class S> Vec<S> vec_zero(const FieldSpec& fs, Index n) {
  return Vec<S>::Constant(n, scalar_from_int<S>(fs, 0));
}

template <class S> Vec<S> vec_unit(const FieldSpec& fs, Index n, Index i) {
  Vec<S> v = vec_zero<S>(fs, n);
  v(i) = scalar_from_int<S>(fs, 1);
  return v;
}

// Materialize an Eigen expression into a plain matrix/vector through
// assignment. Constructing a plain object straight from a 2-D expression
// trips a non-SFINAE-safe byte-container probe in boost 1.74 when the scalar
// is a multiprecision rational, so evaluation routes through operator=.
template <class E> Mat<typename E::Scalar> densify(const E& e) {
  Mat<typename E::Scalar> m(e.rows(), e.cols());
  m = e;
  return m;
}

template <class E> Vec<typename E::Scalar> densify_vec(const E& e) {
  STRATAKIT_CHECK(e.cols() == 1, "densify_vec: not a column");
  Vec<typename E::Scalar> v(e.rows());
  v = e;
  return v;
}

template <class S> bool mat_is_zero(const Mat<S>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <class S> bool mat_equal(const Mat<S>& a, const Mat<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

template <class S> bool vec_is_zero(const Vec<S>& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!is_zero(v(i))) return false;
  return true;
}

template <class S> bool vec_equal(const Vec<S>& a, const Vec<S>& b) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

template <class S> Mat<S> hcat(const Mat<S>& a, const Mat<S>& b) {
  STRATAKIT_CHECK(a.rows() == b.rows(), "hcat: row mismatch");
  Mat<S> m(a.rows(), a.cols() + b.cols());
  m.leftCols(a.cols()) = a;
  m.rightCols(b.cols()) = b;
  return m;
}

template <class S> Mat<S> vcat(const Mat<S>& a, const Mat<S>& b) {
  STRATAKIT_CHECK(a.cols() == b.cols(), "vcat: column mismatch");
  Mat<S> m(a.rows() + b.rows(), a.cols());
  m.topRows(a.rows()) = a;
  m.bottomRows(b.rows()) = b;
  return m;
}

template <class S> Mat<S> cols_from(const std::vector<Vec<S>>& vs,
                                    const FieldSpec& fs, Index ambient) {
  Mat<S> m = mat_zero<S>(fs, ambient, static_cast<Index>(vs.size()));
  for (Index j = 0; j < m.cols(); ++j) {
    STRATAKIT_CHECK(vs[static_cast<size_t>(j)].size() == ambient,
                    "cols_from: ambient mismatch");
    m.col(j) = vs[static_cast<size_t>(j)];
  }
  return m;
}

template <class S> std::string mat_str(const Mat<S>& m) {
  std::string out;
  for (Index i = 0; i < m.rows(); ++i) {
    out += "[";
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += scalar_str(m(i, j));
    }
    out += "]";
    if (i + 1 < m.rows()) out += "\n";
  }
  return out;
}

template <class S> std::string vec_str(const Vec<S>& v) {
  std::string out = "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += scalar_str(v(i));
  }
  return out + ")";
}

}  // namespace stratakit
