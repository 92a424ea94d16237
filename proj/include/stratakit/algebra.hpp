// Finite-dimensional associative unital algebras over an exact field, held
// as structure constants through the left regular representation, plus the
// corner / opposite / quotient constructions with coordinate transport.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stratakit/linalg.hpp"

namespace stratakit {

template <class S> struct Algebra;
template <class S> using AlgPtr = std::shared_ptr<const Algebra<S>>;

template <class S> struct Algebra {
  FieldSpec field{0};
  std::vector<std::string> basis_names;
  std::vector<Mat<S>> lmul;  // left multiplication by each basis element
  Vec<S> unit;

  // Distinguished orthogonal idempotent family summing to the unit. For a
  // one-object algebra this is just the unit.
  std::vector<std::string> objects;
  Mat<S> object_idempotents;  // dim x |objects|, one column per object

  // peirce[m] = (target object, source object) when basis element m lies in
  // a single component e_t A e_s; (-1, -1) otherwise.
  std::vector<std::pair<int, int>> peirce;

  // True when e_i A e_j = 0 for all i < j in the stored object order.
  bool objects_directed = false;

  std::string kind;  // "path", "ei", "corner", "quotient", "opposite"

  // Jacobson radical; certified nilpotent two-sided ideal with semisimple
  // quotient before the algebra is handed out.
  Subspace<S> radical{FieldSpec{0}, 0};

  Index dim() const { return static_cast<Index>(basis_names.size()); }
  Index n_objects() const { return static_cast<Index>(objects.size()); }

  Vec<S> basis_vec(Index i) const { return vec_unit<S>(field, dim(), i); }

  Vec<S> object_idem(Index i) const {
    return densify_vec(object_idempotents.col(i));
  }

  Vec<S> zero_vec() const { return vec_zero<S>(field, dim()); }

  // Product of two elements, iterating only the nonzero coordinates.
  Vec<S> mul(const Vec<S>& x, const Vec<S>& y) const {
    Vec<S> out = zero_vec();
    const Index n = dim();
    for (Index i = 0; i < n; ++i) {
      if (is_zero(x(i))) continue;
      const Mat<S>& L = lmul[static_cast<size_t>(i)];
      for (Index j = 0; j < n; ++j) {
        if (is_zero(y(j))) continue;
        S c = x(i) * y(j);
        if (is_zero(c)) continue;
        for (Index r = 0; r < n; ++r) {
          const S& l = L(r, j);
          if (!is_zero(l)) out(r) += c * l;
        }
      }
    }
    return out;
  }

  Mat<S> left_mul(const Vec<S>& x) const {
    Mat<S> m = mat_zero<S>(field, dim(), dim());
    for (Index i = 0; i < dim(); ++i)
      if (!is_zero(x(i))) m += x(i) * lmul[static_cast<size_t>(i)];
    return m;
  }

  // Matrix of y -> y * x; column j is b_j * x = lmul[j] * x.
  Mat<S> right_mul(const Vec<S>& x) const {
    Mat<S> m = mat_zero<S>(field, dim(), dim());
    for (Index j = 0; j < dim(); ++j)
      m.col(j) = lmul[static_cast<size_t>(j)] * x;
    return m;
  }

  std::string element_str(const Vec<S>& v) const {
    std::string out;
    for (Index i = 0; i < dim(); ++i) {
      if (is_zero(v(i))) continue;
      if (!out.empty()) out += " + ";
      if (!is_one(v(i))) out += scalar_str(v(i)) + "*";
      out += basis_names[static_cast<size_t>(i)];
    }
    return out.empty() ? "0" : out;
  }
};

// Sum of a subset of object idempotents.
template <class S>
Vec<S> object_sum(const Algebra<S>& a, const std::vector<int>& which) {
  Vec<S> e = a.zero_vec();
  for (int i : which) {
    STRATAKIT_CHECK(i >= 0 && i < a.n_objects(), "object index out of range");
    e += a.object_idem(i);
  }
  return e;
}

// Structural certification: unit laws, associativity on all basis triples
// (sparse-aware), idempotent family laws. Throws InternalError.
template <class S> void validate_algebra(const Algebra<S>& a) {
  const Index n = a.dim();
  STRATAKIT_CHECK(static_cast<Index>(a.lmul.size()) == n,
                  "algebra: lmul size mismatch");
  STRATAKIT_CHECK(a.unit.size() == n, "algebra: unit size mismatch");
  for (const auto& L : a.lmul)
    STRATAKIT_CHECK(L.rows() == n && L.cols() == n,
                    "algebra: lmul shape mismatch");

  // Unit laws.
  STRATAKIT_CHECK(mat_equal(a.left_mul(a.unit), mat_identity<S>(a.field, n)),
                  "algebra: unit is not a left identity");
  for (Index j = 0; j < n; ++j)
    STRATAKIT_CHECK(
        vec_equal(densify_vec(a.lmul[static_cast<size_t>(j)] * a.unit),
                  a.basis_vec(j)),
        "algebra: unit is not a right identity");

  // Associativity: (b_i b_j) b_k = b_i (b_j b_k) for all triples.
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      Vec<S> v = densify_vec(a.lmul[static_cast<size_t>(i)].col(j));
      for (Index k = 0; k < n; ++k) {
        Vec<S> lhs = a.mul(v, a.basis_vec(k));
        Vec<S> w = densify_vec(a.lmul[static_cast<size_t>(j)].col(k));
        Vec<S> rhs = a.mul(a.basis_vec(i), w);
        STRATAKIT_CHECK(vec_equal(lhs, rhs),
                        "algebra: associativity fails on a basis triple");
      }
    }
  }

  // Object idempotent family.
  const Index no = a.n_objects();
  STRATAKIT_CHECK(no >= 1, "algebra: no objects");
  STRATAKIT_CHECK(a.object_idempotents.rows() == n &&
                      a.object_idempotents.cols() == no,
                  "algebra: object idempotent shape mismatch");
  Vec<S> total = a.zero_vec();
  for (Index i = 0; i < no; ++i) {
    Vec<S> ei = a.object_idem(i);
    total += ei;
    for (Index j = 0; j < no; ++j) {
      Vec<S> prod = a.mul(ei, a.object_idem(j));
      if (i == j)
        STRATAKIT_CHECK(vec_equal(prod, ei), "algebra: e_i not idempotent");
      else
        STRATAKIT_CHECK(vec_is_zero(prod),
                        "algebra: object idempotents not orthogonal");
    }
  }
  STRATAKIT_CHECK(vec_equal(total, a.unit),
                  "algebra: object idempotents do not sum to the unit");
}

// Peirce data: locate each basis element inside e_t A e_s when it sits in a
// single component.
template <class S> void compute_peirce(Algebra<S>& a) {
  a.peirce.assign(static_cast<size_t>(a.dim()), {-1, -1});
  for (Index m = 0; m < a.dim(); ++m) {
    Vec<S> b = a.basis_vec(m);
    int tgt = -1, src = -1;
    for (Index i = 0; i < a.n_objects(); ++i) {
      Vec<S> left = a.mul(a.object_idem(i), b);
      if (vec_is_zero(left)) continue;
      if (vec_equal(left, b) && tgt < 0) tgt = static_cast<int>(i);
      else { tgt = -2; break; }
    }
    for (Index i = 0; i < a.n_objects() && tgt >= 0; ++i) {
      Vec<S> right = a.mul(b, a.object_idem(i));
      if (vec_is_zero(right)) continue;
      if (vec_equal(right, b) && src < 0) src = static_cast<int>(i);
      else { src = -2; break; }
    }
    if (tgt >= 0 && src >= 0) a.peirce[static_cast<size_t>(m)] = {tgt, src};
  }
}

// e_i A e_j as a subspace of A.
template <class S>
Subspace<S> hom_component(const Algebra<S>& a, Index tgt_obj, Index src_obj) {
  SpanBuilder<S> sb(a.field, a.dim());
  Vec<S> et = a.object_idem(tgt_obj);
  Vec<S> es = a.object_idem(src_obj);
  for (Index m = 0; m < a.dim(); ++m) {
    const auto& pe = a.peirce[static_cast<size_t>(m)];
    if (pe.first >= 0) {
      if (pe.first == tgt_obj && pe.second == src_obj)
        sb.add(a.basis_vec(m));
      continue;
    }
    sb.add(a.mul(et, a.mul(a.basis_vec(m), es)));
  }
  return sb.finish();
}

template <class S> bool object_order_is_directed(const Algebra<S>& a) {
  for (Index i = 0; i < a.n_objects(); ++i)
    for (Index j = i + 1; j < a.n_objects(); ++j)
      if (!hom_component(a, i, j).is_zero()) return false;
  return true;
}

// Span of all products u*v with u in U, v in V.
template <class S>
Subspace<S> product_subspace(const Algebra<S>& a, const Subspace<S>& u,
                             const Subspace<S>& v) {
  SpanBuilder<S> sb(a.field, a.dim());
  for (Index i = 0; i < u.dim(); ++i)
    for (Index j = 0; j < v.dim(); ++j)
      sb.add(a.mul(densify_vec(u.basis().col(i)),
                   densify_vec(v.basis().col(j))));
  return sb.finish();
}

// Two-sided ideal generated by a set of elements: close the span under left
// and right multiplication by basis elements.
template <class S>
Subspace<S> ideal_generated_by(const Algebra<S>& a,
                               const std::vector<Vec<S>>& gens) {
  SpanBuilder<S> sb(a.field, a.dim());
  std::vector<Vec<S>> frontier;
  for (const auto& g : gens)
    if (sb.add(g)) frontier.push_back(g);
  while (!frontier.empty()) {
    std::vector<Vec<S>> next;
    for (const auto& x : frontier) {
      for (Index m = 0; m < a.dim(); ++m) {
        Vec<S> l = a.mul(a.basis_vec(m), x);
        if (sb.add(l)) next.push_back(l);
        Vec<S> r = a.mul(x, a.basis_vec(m));
        if (sb.add(r)) next.push_back(r);
      }
    }
    frontier = std::move(next);
  }
  return sb.finish();
}

template <class S>
bool is_two_sided_ideal(const Algebra<S>& a, const Subspace<S>& j) {
  for (Index c = 0; c < j.dim(); ++c) {
    Vec<S> x = densify_vec(j.basis().col(c));
    for (Index m = 0; m < a.dim(); ++m) {
      if (!j.contains(a.mul(a.basis_vec(m), x))) return false;
      if (!j.contains(a.mul(x, a.basis_vec(m)))) return false;
    }
  }
  return true;
}

// Degree at which powers of the subspace vanish: least d with W^d = 0, or
// nullopt if the powers stabilize without vanishing.
template <class S>
std::optional<int> nilpotency_degree(const Algebra<S>& a,
                                     const Subspace<S>& w) {
  if (w.is_zero()) return 1;
  Subspace<S> power = w;
  for (int d = 2; d <= a.dim() + 1; ++d) {
    Subspace<S> next = product_subspace(a, power, w);
    if (next.is_zero()) return d;
    if (next == power) return std::nullopt;
    power = next;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Derived algebras with coordinate transport.

template <class S> struct CornerLink {
  AlgPtr<S> algebra;  // the corner eAe
  AlgPtr<S> parent;
  Vec<S> idempotent;        // e, in parent coordinates
  Mat<S> embed;             // parent_dim x corner_dim
  Subspace<S> component{FieldSpec{0}, 0};  // eAe inside the parent
  std::vector<int> object_subset;  // parent objects inside the corner, or {}
};

template <class S> struct QuotientLink {
  AlgPtr<S> algebra;  // A / J
  AlgPtr<S> parent;
  Subspace<S> ideal{FieldSpec{0}, 0};
  Mat<S> project;  // quotient_dim x parent_dim
  Mat<S> lift;     // parent_dim x quotient_dim, section of project
};

// Declared in radical.hpp; builders below certify their radicals through it.
template <class S> Subspace<S> compute_radical_raw(const Algebra<S>& a);

namespace detail {

// Shared quotient scaffolding: representatives, projection, and structure
// constants, with no radical work.
template <class S> struct RawQuotient {
  Algebra<S> algebra;
  Mat<S> project;
  Mat<S> lift;
};

template <class S>
RawQuotient<S> make_quotient_data(const Algebra<S>& a, const Subspace<S>& j) {
  STRATAKIT_CHECK(is_two_sided_ideal(a, j), "quotient: not a two-sided ideal");
  const FieldSpec fs = a.field;
  const Index n = a.dim();
  Subspace<S> full = Subspace<S>::full(fs, n);
  // complement_of scans the standard basis, so every representative is a
  // standard basis vector and keeps its name.
  std::vector<Vec<S>> reps = full.complement_of(j);
  const Index q = static_cast<Index>(reps.size());
  Mat<S> lift = cols_from(reps, fs, n);

  Mat<S> basis_change = hcat(j.basis(), lift);
  auto inv = inverse(basis_change, fs);
  STRATAKIT_CHECK(inv.has_value(), "quotient: representatives do not span");
  Mat<S> project = densify(inv->bottomRows(q));

  RawQuotient<S> out{Algebra<S>{}, std::move(project), std::move(lift)};
  const Mat<S>& sect = out.lift;
  Algebra<S>& b = out.algebra;
  b.field = fs;
  b.kind = "quotient";
  for (Index c = 0; c < q; ++c) {
    // Representative indices in the parent basis.
    Index idx = -1;
    for (Index r = 0; r < n; ++r)
      if (!is_zero(reps[static_cast<size_t>(c)](r))) { idx = r; break; }
    STRATAKIT_CHECK(idx >= 0, "quotient: zero representative");
    b.basis_names.push_back(a.basis_names[static_cast<size_t>(idx)]);
  }
  b.unit = densify_vec(out.project * a.unit);
  for (Index i = 0; i < q; ++i) {
    Mat<S> L = mat_zero<S>(fs, q, q);
    Vec<S> xi = densify_vec(sect.col(i));
    for (Index jj = 0; jj < q; ++jj)
      L.col(jj) = out.project * a.mul(xi, densify_vec(sect.col(jj)));
    b.lmul.push_back(std::move(L));
  }
  // Objects: surviving projections of the parent family.
  std::vector<Vec<S>> obj_cols;
  for (Index i = 0; i < a.n_objects(); ++i) {
    Vec<S> img = densify_vec(out.project * a.object_idem(i));
    if (vec_is_zero(img)) continue;
    obj_cols.push_back(img);
    b.objects.push_back(a.objects[static_cast<size_t>(i)]);
  }
  b.object_idempotents = cols_from(obj_cols, fs, q);
  return out;
}

}  // namespace detail

// Post-construction pass shared by all builders: validates the structure,
// installs a certified radical (computed, or transported and re-certified),
// fills peirce data and the directedness flag.
template <class S>
AlgPtr<S> finalize_algebra(Algebra<S> a,
                           std::optional<Subspace<S>> transported_radical = {}) {
  validate_algebra(a);
  Subspace<S> rad = transported_radical ? std::move(*transported_radical)
                                        : compute_radical_raw(a);
  // Certification, independent of how the subspace was obtained: a nilpotent
  // two-sided ideal with semisimple quotient is the radical.
  STRATAKIT_CHECK(is_two_sided_ideal(a, rad), "radical: not an ideal");
  STRATAKIT_CHECK(nilpotency_degree(a, rad).has_value(),
                  "radical: not nilpotent");
  a.radical = std::move(rad);
  if (!a.radical.is_zero() || transported_radical) {
    auto quo = detail::make_quotient_data(a, a.radical);
    STRATAKIT_CHECK(compute_radical_raw(quo.algebra).is_zero(),
                    "radical: quotient is not semisimple");
  }
  compute_peirce(a);
  a.objects_directed = object_order_is_directed(a);
  return std::make_shared<const Algebra<S>>(std::move(a));
}

template <class S>
QuotientLink<S> quotient_algebra(const AlgPtr<S>& a, const Subspace<S>& j) {
  auto raw = detail::make_quotient_data(*a, j);
  std::optional<Subspace<S>> rad;
  if (a->radical.contains(j)) {
    // rad(A/J) = rad(A)/J when J sits inside the radical.
    SpanBuilder<S> sb(a->field, raw.algebra.dim());
    for (Index c = 0; c < a->radical.dim(); ++c)
      sb.add(densify_vec(raw.project * a->radical.basis().col(c)));
    rad = sb.finish();
  }
  QuotientLink<S> link;
  link.parent = a;
  link.ideal = j;
  link.project = raw.project;
  link.lift = raw.lift;
  link.algebra = finalize_algebra(std::move(raw.algebra), std::move(rad));
  return link;
}

template <class S>
CornerLink<S> corner_algebra(const AlgPtr<S>& a, const Vec<S>& e) {
  const FieldSpec fs = a->field;
  STRATAKIT_CHECK(vec_equal(a->mul(e, e), e), "corner: not an idempotent");
  STRATAKIT_CHECK(!vec_is_zero(e), "corner: zero idempotent");
  Mat<S> exe = mat_zero<S>(fs, a->dim(), a->dim());
  for (Index k = 0; k < a->dim(); ++k)
    exe.col(k) = a->mul(e, a->mul(a->basis_vec(k), e));
  Subspace<S> comp = Subspace<S>::span_of(exe, fs);
  const Index d = comp.dim();

  Algebra<S> c;
  c.field = fs;
  c.kind = "corner";
  for (Index i = 0; i < d; ++i) {
    Vec<S> x = densify_vec(comp.basis().col(i));
    // Echelon columns of a path-style corner are parent basis vectors; keep
    // their names readable either way.
    c.basis_names.push_back(a->element_str(x));
  }
  for (Index i = 0; i < d; ++i) {
    Vec<S> xi = densify_vec(comp.basis().col(i));
    Mat<S> L = mat_zero<S>(fs, d, d);
    for (Index j = 0; j < d; ++j) {
      Vec<S> prod = a->mul(xi, densify_vec(comp.basis().col(j)));
      auto cc = comp.coords(prod);
      STRATAKIT_CHECK(cc.has_value(), "corner: product left the corner");
      L.col(j) = *cc;
    }
    c.lmul.push_back(std::move(L));
  }
  auto ue = comp.coords(e);
  STRATAKIT_CHECK(ue.has_value(), "corner: idempotent outside its corner");
  c.unit = *ue;

  // Objects: parent object idempotents lying under e, if they add up to e.
  std::vector<int> subset;
  std::vector<Vec<S>> obj_cols;
  Vec<S> partial = a->zero_vec();
  for (Index i = 0; i < a->n_objects(); ++i) {
    Vec<S> ei = a->object_idem(i);
    if (vec_equal(a->mul(e, a->mul(ei, e)), ei) && comp.contains(ei)) {
      subset.push_back(static_cast<int>(i));
      partial += ei;
    }
  }
  if (vec_equal(partial, e)) {
    for (int i : subset) {
      c.objects.push_back(a->objects[static_cast<size_t>(i)]);
      obj_cols.push_back(*comp.coords(a->object_idem(i)));
    }
  } else {
    subset.clear();
    c.objects.push_back("*");
    obj_cols.push_back(c.unit);
  }
  c.object_idempotents = cols_from(obj_cols, fs, d);

  // rad(eAe) = e rad(A) e.
  SpanBuilder<S> rb(fs, d);
  for (Index k = 0; k < a->radical.dim(); ++k) {
    Vec<S> r = densify_vec(a->radical.basis().col(k));
    Vec<S> ere = a->mul(e, a->mul(r, e));
    auto cc = comp.coords(ere);
    STRATAKIT_CHECK(cc.has_value(), "corner: radical transport failed");
    rb.add(*cc);
  }

  CornerLink<S> link;
  link.parent = a;
  link.idempotent = e;
  link.embed = comp.basis();
  link.component = comp;
  link.object_subset = subset;
  link.algebra =
      finalize_algebra(std::move(c), std::optional<Subspace<S>>(rb.finish()));
  return link;
}

// The opposite algebra shares coordinates with the original; only the
// multiplication (and hence the directed object order) reverses.
template <class S> AlgPtr<S> opposite_algebra(const AlgPtr<S>& a) {
  Algebra<S> o;
  o.field = a->field;
  o.kind = "opposite";
  o.basis_names = a->basis_names;
  o.unit = a->unit;
  for (Index i = 0; i < a->dim(); ++i)
    o.lmul.push_back(a->right_mul(a->basis_vec(i)));
  const Index no = a->n_objects();
  std::vector<Vec<S>> obj_cols;
  for (Index i = no; i-- > 0;) {
    o.objects.push_back(a->objects[static_cast<size_t>(i)]);
    obj_cols.push_back(a->object_idem(i));
  }
  o.object_idempotents = cols_from(obj_cols, a->field, a->dim());
  return finalize_algebra(std::move(o),
                          std::optional<Subspace<S>>(a->radical));
}

}  // namespace stratakit
