// Finite-dimensional left modules over the algebras built in algebra.hpp:
// construction with certified action tables, submodules / quotients / sums,
// cyclic projectives, tops and radicals, projective covers, hom spaces and
// isomorphism testing, restriction to corners and inflation along quotients.
#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "stratakit/algebra.hpp"
#include "stratakit/radical.hpp"

namespace stratakit {

// A left module, stored as one action matrix per algebra basis element.
template <class S> struct FModule {
  AlgPtr<S> algebra;
  std::vector<Mat<S>> action;

  Index dim() const {
    return action.empty() ? 0 : action.front().rows();
  }
  FieldSpec field() const { return algebra->field; }

  const Mat<S>& act_basis(Index i) const {
    return action[static_cast<size_t>(i)];
  }

  Mat<S> act(const Vec<S>& x) const {
    Mat<S> out = mat_zero<S>(field(), dim(), dim());
    for (Index i = 0; i < x.size(); ++i)
      if (!is_zero(x(i))) out += x(i) * action[static_cast<size_t>(i)];
    return out;
  }

  Vec<S> apply(const Vec<S>& x, const Vec<S>& v) const {
    Vec<S> out = vec_zero<S>(field(), dim());
    for (Index i = 0; i < x.size(); ++i)
      if (!is_zero(x(i))) out += x(i) * (action[static_cast<size_t>(i)] * v);
    return out;
  }
};

namespace detail {

inline std::uint64_t splitmix_next(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t x = state;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Empty string when the table is a module structure; otherwise a description
// of the first violation. The structure-constant pass multiplies column by
// column against the sparsity of the right factor, so sparse regular actions
// stay cheap.
template <class S>
std::string module_defect(const Algebra<S>& a,
                          const std::vector<Mat<S>>& action) {
  const Index n = a.dim();
  if (static_cast<Index>(action.size()) != n)
    return "expected " + std::to_string(n) +
           " action matrices, one per algebra basis element, got " +
           std::to_string(action.size());
  const Index d = action.empty() ? 0 : action.front().rows();
  for (Index i = 0; i < n; ++i) {
    const Mat<S>& m = action[static_cast<size_t>(i)];
    if (m.rows() != d || m.cols() != d)
      return "action matrix for '" + a.basis_names[static_cast<size_t>(i)] +
             "' is " + std::to_string(m.rows()) + "x" +
             std::to_string(m.cols()) + ", want " + std::to_string(d) + "x" +
             std::to_string(d);
  }
  Mat<S> u = mat_zero<S>(a.field, d, d);
  for (Index i = 0; i < n; ++i)
    if (!is_zero(a.unit(i))) u += a.unit(i) * action[static_cast<size_t>(i)];
  if (!mat_equal(u, mat_identity<S>(a.field, d)))
    return "the unit must act as the identity";
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      Mat<S> lhs = mat_zero<S>(a.field, d, d);
      const Mat<S>& aj = action[static_cast<size_t>(j)];
      for (Index c = 0; c < d; ++c)
        for (Index k = 0; k < d; ++k) {
          const S& s = aj(k, c);
          if (is_zero(s)) continue;
          lhs.col(c) += s * action[static_cast<size_t>(i)].col(k);
        }
      Mat<S> rhs = mat_zero<S>(a.field, d, d);
      const auto prod = a.lmul[static_cast<size_t>(i)].col(j);
      for (Index k = 0; k < n; ++k)
        if (!is_zero(prod(k))) rhs += prod(k) * action[static_cast<size_t>(k)];
      if (!mat_equal(lhs, rhs))
        return "action does not respect the product '" +
               a.basis_names[static_cast<size_t>(i)] + "' * '" +
               a.basis_names[static_cast<size_t>(j)] + "'";
    }
  return "";
}

template <class S>
void assert_module(const Algebra<S>& a, const std::vector<Mat<S>>& action) {
  std::string defect = module_defect(a, action);
  STRATAKIT_CHECK(defect.empty(), "constructed module is invalid: " + defect);
}

// Section data for the quotient of the full space by a subspace: project has
// one row per quotient coordinate, lift is a right inverse whose columns are
// standard basis vectors completing the subspace.
template <class S> struct QuotPair {
  Mat<S> project;
  Mat<S> lift;
};

template <class S>
QuotPair<S> quot_pair(const FieldSpec& fs, const Subspace<S>& u) {
  const Index d = u.ambient();
  const Index q = d - u.dim();
  std::vector<Vec<S>> comp = Subspace<S>::full(fs, d).complement_of(u);
  Mat<S> lift = cols_from(comp, fs, d);
  if (u.dim() == 0) {
    return {densify(mat_identity<S>(fs, d)), lift};
  }
  Mat<S> basis_then_lift = hcat(densify(u.basis()), lift);
  auto inv = inverse(basis_then_lift, fs);
  STRATAKIT_CHECK(inv.has_value(), "quotient section is singular");
  Mat<S> project = densify(inv->bottomRows(q));
  return {project, lift};
}

// Name of an algebra basis element that moves the subspace out of itself, or
// empty when the subspace is a submodule.
template <class S>
std::string stability_defect(const FModule<S>& m, const Subspace<S>& u) {
  const Algebra<S>& a = *m.algebra;
  for (Index i = 0; i < a.dim(); ++i)
    for (Index c = 0; c < u.dim(); ++c) {
      Vec<S> img = densify_vec(m.act_basis(i) * u.basis().col(c));
      if (!u.contains(img)) return a.basis_names[static_cast<size_t>(i)];
    }
  return "";
}

}  // namespace detail

template <class S>
void validate_module(const AlgPtr<S>& a, const std::vector<Mat<S>>& action) {
  std::string defect = detail::module_defect(*a, action);
  if (!defect.empty()) throw InputError("invalid module: " + defect);
}

template <class S>
FModule<S> make_module(const AlgPtr<S>& a, std::vector<Mat<S>> action) {
  validate_module(a, action);
  return FModule<S>{a, std::move(action)};
}

template <class S> FModule<S> zero_module(const AlgPtr<S>& a) {
  std::vector<Mat<S>> action(static_cast<size_t>(a->dim()),
                             mat_zero<S>(a->field, 0, 0));
  return FModule<S>{a, std::move(action)};
}

template <class S> FModule<S> regular_module(const AlgPtr<S>& a) {
  // Left multiplication tables are the action; the algebra certifies them.
  return FModule<S>{a, a->lmul};
}

struct DimensionVector {
  std::vector<std::string> labels;
  std::vector<Index> dims;

  bool operator==(const DimensionVector& o) const {
    return labels == o.labels && dims == o.dims;
  }
  std::string str() const {
    std::string out = "(";
    for (size_t i = 0; i < dims.size(); ++i) {
      if (i) out += ", ";
      out += std::to_string(dims[i]);
    }
    return out + ")";
  }
};

// Ranks of the object idempotent actions; these always add up to the module
// dimension because the idempotents are orthogonal and sum to the unit.
template <class S> DimensionVector dim_vector(const FModule<S>& m) {
  const Algebra<S>& a = *m.algebra;
  DimensionVector dv;
  Index total = 0;
  for (Index o = 0; o < a.n_objects(); ++o) {
    dv.labels.push_back(a.objects[static_cast<size_t>(o)]);
    Index r = m.dim() == 0 ? 0 : rank(m.act(a.object_idem(o)));
    dv.dims.push_back(r);
    total += r;
  }
  STRATAKIT_CHECK(total == m.dim(),
                  "object slices must add up to the module dimension");
  return dv;
}

template <class S> struct SubmoduleLink {
  FModule<S> module;
  Mat<S> embed;  // parent module coords x submodule coords
  Subspace<S> space{FieldSpec{0}, 0};
};

template <class S>
SubmoduleLink<S> submodule(const FModule<S>& m, const Subspace<S>& u) {
  if (u.ambient() != m.dim())
    throw InputError("submodule: subspace lives in dimension " +
                     std::to_string(u.ambient()) + ", module has " +
                     std::to_string(m.dim()));
  const Algebra<S>& a = *m.algebra;
  const Index q = u.dim();
  std::vector<Mat<S>> action;
  action.reserve(static_cast<size_t>(a.dim()));
  for (Index i = 0; i < a.dim(); ++i) {
    Mat<S> sub = mat_zero<S>(a.field, q, q);
    for (Index c = 0; c < q; ++c) {
      Vec<S> img = densify_vec(m.act_basis(i) * u.basis().col(c));
      // Coordinates exist exactly when the image stays inside.
      auto co = u.coords(img);
      if (!co)
        throw InputError("subspace is not stable under the action of '" +
                         a.basis_names[static_cast<size_t>(i)] + "'");
      sub.col(c) = *co;
    }
    action.push_back(std::move(sub));
  }
  return SubmoduleLink<S>{FModule<S>{m.algebra, std::move(action)},
                          densify(u.basis()), u};
}

template <class S> struct ModuleQuotientLink {
  FModule<S> module;
  Mat<S> project;  // quotient coords x parent coords
  Mat<S> lift;     // parent coords x quotient coords, section of project
};

namespace detail {

// Quotient by a subspace already known to be stable; skips the stability scan.
template <class S>
ModuleQuotientLink<S> quotient_from(const FModule<S>& m, const Subspace<S>& u) {
  const Algebra<S>& a = *m.algebra;
  auto qp = quot_pair(a.field, u);
  std::vector<Mat<S>> action;
  action.reserve(static_cast<size_t>(a.dim()));
  for (Index i = 0; i < a.dim(); ++i)
    action.push_back(densify(qp.project * m.act_basis(i) * qp.lift));
  return ModuleQuotientLink<S>{FModule<S>{m.algebra, std::move(action)},
                               qp.project, qp.lift};
}

// The subspace rad(A)*M alone, cheaper than top_and_radical when neither the
// quotient nor the submodule structure is needed.
template <class S> Subspace<S> radical_space(const FModule<S>& m) {
  const Algebra<S>& a = *m.algebra;
  const Index d = m.dim();
  if (d == 0) return Subspace<S>(a.field, 0);
  SpanBuilder<S> sb(a.field, d);
  for (Index j = 0; j < a.radical.dim(); ++j) {
    Mat<S> rj = m.act(densify_vec(a.radical.basis().col(j)));
    for (Index c = 0; c < d; ++c) sb.add(densify_vec(rj.col(c)));
  }
  return sb.finish();
}

}  // namespace detail

template <class S>
ModuleQuotientLink<S> quotient_module(const FModule<S>& m,
                                      const Subspace<S>& u) {
  if (u.ambient() != m.dim())
    throw InputError("quotient_module: subspace lives in dimension " +
                     std::to_string(u.ambient()) + ", module has " +
                     std::to_string(m.dim()));
  std::string moved = detail::stability_defect(m, u);
  if (!moved.empty())
    throw InputError("subspace is not stable under the action of '" + moved +
                     "'");
  return detail::quotient_from(m, u);
}

template <class S> struct SumLink {
  FModule<S> module;
  std::vector<Index> offset;  // block starts, one past the end included
};

template <class S>
SumLink<S> direct_sum(const AlgPtr<S>& a,
                      const std::vector<FModule<S>>& parts) {
  Index total = 0;
  std::vector<Index> offset = {0};
  for (const auto& p : parts) {
    if (p.algebra.get() != a.get())
      throw InputError("direct_sum: summands must share the algebra");
    total += p.dim();
    offset.push_back(total);
  }
  std::vector<Mat<S>> action;
  action.reserve(static_cast<size_t>(a->dim()));
  for (Index i = 0; i < a->dim(); ++i) {
    Mat<S> blk = mat_zero<S>(a->field, total, total);
    for (size_t k = 0; k < parts.size(); ++k) {
      Index at = offset[k];
      Index d = parts[k].dim();
      blk.block(at, at, d, d) = parts[k].act_basis(i);
    }
    action.push_back(std::move(blk));
  }
  return SumLink<S>{FModule<S>{a, std::move(action)}, std::move(offset)};
}

// The cyclic left module A*e for an idempotent e, as a submodule of the
// regular module.
template <class S>
SubmoduleLink<S> projective_at(const AlgPtr<S>& a, const Vec<S>& e) {
  if (!vec_equal(a->mul(e, e), e))
    throw InputError("projective_at: the element is not idempotent");
  Subspace<S> space = Subspace<S>::span_of(a->right_mul(e), a->field);
  return submodule(regular_module(a), space);
}

template <class S> struct TopAndRadical {
  FModule<S> radical;
  Mat<S> rad_embed;
  Subspace<S> rad_space{FieldSpec{0}, 0};
  FModule<S> top;
  Mat<S> project;
  Mat<S> lift;
};

template <class S> TopAndRadical<S> top_and_radical(const FModule<S>& m) {
  const Algebra<S>& a = *m.algebra;
  const Index d = m.dim();
  const Index rd = a.radical.dim();
  if (d == 0) {
    Mat<S> none = mat_zero<S>(a.field, 0, 0);
    return TopAndRadical<S>{m,    none, Subspace<S>(a.field, 0),
                            m,    none, none};
  }
  Subspace<S> rad_space = detail::radical_space(m);
  auto sl = submodule(m, rad_space);
  auto ql = detail::quotient_from(m, rad_space);
  // The top must be semisimple: every radical element acts as zero on it.
  for (Index j = 0; j < rd; ++j)
    STRATAKIT_CHECK(
        mat_is_zero(ql.module.act(densify_vec(a.radical.basis().col(j)))),
        "radical does not annihilate the computed top");
  return TopAndRadical<S>{std::move(sl.module), std::move(sl.embed),
                          std::move(sl.space),  std::move(ql.module),
                          std::move(ql.project), std::move(ql.lift)};
}

namespace detail {

// Dimension of the endomorphism field of each simple: dim e(A/rad A)e at the
// class representative.
template <class S>
std::vector<Index> class_end_dims(const Algebra<S>& a,
                                  const Primitives<S>& prims) {
  std::vector<Index> out;
  for (int rep : prims.class_rep) {
    const Vec<S>& e = prims.idempotents[static_cast<size_t>(rep)];
    Mat<S> le = a.left_mul(e);
    Mat<S> re = a.right_mul(e);
    Mat<S> ece = densify(le * re);
    Index full = rank(ece);
    Index inrad = a.radical.dim() == 0
                      ? 0
                      : rank(densify(le * (re * a.radical.basis())));
    STRATAKIT_CHECK(full > inrad, "corner of a primitive idempotent is radical");
    out.push_back(full - inrad);
  }
  return out;
}

}  // namespace detail

template <class S> struct ProjectiveCover {
  FModule<S> p;                       // direct sum of cyclic projectives
  std::vector<Index> multiplicity;    // per isomorphism class
  std::vector<int> summand_class;     // class of each cyclic block, in order
  std::vector<Index> offset;          // block starts within p
  Mat<S> onto;                        // module coords x p coords, surjective
  Subspace<S> kernel{FieldSpec{0}, 0};  // inside p
};

namespace detail {

// Data reused across many covers over one algebra: the cyclic projectives at
// the class representatives, their radical subspaces, and the endomorphism
// dimensions of the simples.
template <class S> struct CoverCache {
  std::vector<Index> end_dims;
  std::vector<SubmoduleLink<S>> cyclic;
  std::vector<Mat<S>> cyclic_rad;  // radical basis of each cyclic, block coords
};

template <class S>
CoverCache<S> make_cover_cache(const AlgPtr<S>& a, const Primitives<S>& prims) {
  CoverCache<S> cc;
  cc.end_dims = class_end_dims(*a, prims);
  for (int rep : prims.class_rep) {
    cc.cyclic.push_back(
        projective_at(a, prims.idempotents[static_cast<size_t>(rep)]));
    cc.cyclic_rad.push_back(
        densify(radical_space(cc.cyclic.back().module).basis()));
  }
  return cc;
}

// Minimal projective cover: one cyclic summand A*e_c per simple constituent
// of the top, with generators picked greedily from the idempotent slices.
template <class S>
ProjectiveCover<S> cover_with(const FModule<S>& m, const Primitives<S>& prims,
                              const CoverCache<S>& cache) {
  const Algebra<S>& a = *m.algebra;
  const FieldSpec fs = a.field;
  const Index nc = static_cast<Index>(prims.class_rep.size());
  Subspace<S> rad = radical_space(m);
  Mat<S> radb = densify(rad.basis());

  // Multiplicities from two ranks per class: the top slice at e is
  // e*M / (e*M ∩ rad*M), and e*M ∩ rad*M = e*rad*M since e is idempotent
  // and rad*M is stable.
  std::vector<Index> mult;
  std::vector<Mat<S>> slices;
  for (Index c = 0; c < nc; ++c) {
    const Vec<S>& e =
        prims.idempotents[static_cast<size_t>(prims.class_rep[static_cast<size_t>(c)])];
    Mat<S> slice = m.act(e);
    Index top_dim = rank(slice);
    if (rad.dim() > 0) top_dim -= rank(densify(slice * radb));
    STRATAKIT_CHECK(top_dim % cache.end_dims[static_cast<size_t>(c)] == 0,
                    "top slice is not a multiple of the endomorphism dimension");
    mult.push_back(top_dim / cache.end_dims[static_cast<size_t>(c)]);
    slices.push_back(std::move(slice));
  }

  // Greedy generators: go through the columns of act(e) and keep those that
  // still grow the picked span modulo the radical part.
  SpanBuilder<S> total(fs, std::max<Index>(m.dim(), 1));
  if (m.dim() > 0)
    for (Index c = 0; c < rad.dim(); ++c)
      total.add(densify_vec(rad.basis().col(c)));
  std::vector<std::vector<Vec<S>>> gens(static_cast<size_t>(nc));
  for (Index c = 0; c < nc; ++c) {
    if (mult[static_cast<size_t>(c)] == 0) continue;
    const Mat<S>& slice = slices[static_cast<size_t>(c)];
    for (Index col = 0; col < slice.cols(); ++col) {
      if (static_cast<Index>(gens[static_cast<size_t>(c)].size()) ==
          mult[static_cast<size_t>(c)])
        break;
      Vec<S> g = densify_vec(slice.col(col));
      if (vec_is_zero(g) || !total.would_grow(g)) continue;
      gens[static_cast<size_t>(c)].push_back(g);
      // A*g is already a submodule, so adding the basis images closes it.
      for (Index i = 0; i < a.dim(); ++i)
        total.add(densify_vec(m.act_basis(i) * g));
    }
    STRATAKIT_CHECK(static_cast<Index>(gens[static_cast<size_t>(c)].size()) ==
                        mult[static_cast<size_t>(c)],
                    "generator search did not reach the top multiplicity");
  }

  // Assemble the cover and the structure map block by block.
  std::vector<FModule<S>> parts;
  std::vector<int> summand_class;
  std::vector<Mat<S>> blocks;
  for (Index c = 0; c < nc; ++c)
    for (const Vec<S>& g : gens[static_cast<size_t>(c)]) {
      const auto& pc = cache.cyclic[static_cast<size_t>(c)];
      parts.push_back(pc.module);
      summand_class.push_back(static_cast<int>(c));
      Mat<S> blk = mat_zero<S>(fs, m.dim(), pc.module.dim());
      for (Index col = 0; col < pc.module.dim(); ++col)
        blk.col(col) = m.apply(densify_vec(pc.embed.col(col)), g);
      blocks.push_back(std::move(blk));
    }
  auto sum = direct_sum(m.algebra, parts);
  Mat<S> onto = mat_zero<S>(fs, m.dim(), sum.module.dim());
  for (size_t k = 0; k < blocks.size(); ++k)
    onto.block(0, sum.offset[k], m.dim(), blocks[k].cols()) = blocks[k];

  STRATAKIT_CHECK(rank(onto) == m.dim(), "cover map is not onto");
  Subspace<S> kernel =
      Subspace<S>::span_of(kernel_basis(onto, fs), fs);
  if (sum.module.dim() > 0 && kernel.dim() > 0) {
    // rad(P) of a direct sum is the blockwise radical, all cached.
    Index rad_total = 0;
    for (int c : summand_class)
      rad_total += cache.cyclic_rad[static_cast<size_t>(c)].cols();
    Mat<S> radp = mat_zero<S>(fs, sum.module.dim(), rad_total);
    Index at = 0;
    for (size_t k = 0; k < summand_class.size(); ++k) {
      const Mat<S>& rb =
          cache.cyclic_rad[static_cast<size_t>(summand_class[k])];
      radp.block(sum.offset[k], at, rb.rows(), rb.cols()) = rb;
      at += rb.cols();
    }
    STRATAKIT_CHECK(Subspace<S>::span_of(radp, fs).contains(kernel),
                    "cover kernel escapes the radical, the cover is not minimal");
  }
  return ProjectiveCover<S>{std::move(sum.module), std::move(mult),
                            std::move(summand_class), std::move(sum.offset),
                            std::move(onto), std::move(kernel)};
}

}  // namespace detail

template <class S>
ProjectiveCover<S> projective_cover(const FModule<S>& m,
                                    const Primitives<S>& prims) {
  auto cache = detail::make_cover_cache(m.algebra, prims);
  return detail::cover_with(m, prims, cache);
}

// Simple modules, one per isomorphism class of primitive idempotents, as
// tops of the cyclic projectives at the class representatives.
template <class S>
std::vector<FModule<S>> simples(const AlgPtr<S>& a,
                                const Primitives<S>& prims) {
  std::vector<FModule<S>> out;
  for (int rep : prims.class_rep) {
    auto p = projective_at(a, prims.idempotents[static_cast<size_t>(rep)]);
    out.push_back(top_and_radical(p.module).top);
  }
  return out;
}

// Restriction of a module along a corner link: the slice e*M as a module
// over e*A*e.
template <class S>
SubmoduleLink<S> restrict_module(const FModule<S>& m,
                                 const CornerLink<S>& link) {
  if (link.parent.get() != m.algebra.get())
    throw InputError("restrict_module: module does not live over the corner's parent");
  const FieldSpec fs = m.field();
  Subspace<S> slice = m.dim() == 0
                          ? Subspace<S>(fs, 0)
                          : Subspace<S>::span_of(m.act(link.idempotent), fs);
  const Index q = slice.dim();
  const AlgPtr<S>& c = link.algebra;
  std::vector<Mat<S>> action;
  action.reserve(static_cast<size_t>(c->dim()));
  for (Index j = 0; j < c->dim(); ++j) {
    Vec<S> x = densify_vec(link.embed.col(j));  // corner element in parent coords
    Mat<S> full = m.act(x);
    Mat<S> sub = mat_zero<S>(fs, q, q);
    for (Index col = 0; col < q; ++col) {
      Vec<S> img = densify_vec(full * slice.basis().col(col));
      auto co = slice.coords(img);
      STRATAKIT_CHECK(co.has_value(), "corner action leaves the slice");
      sub.col(col) = *co;
    }
    action.push_back(std::move(sub));
  }
  Mat<S> embed = q == 0 ? mat_zero<S>(fs, m.dim(), 0) : densify(slice.basis());
  return SubmoduleLink<S>{FModule<S>{c, std::move(action)}, std::move(embed),
                          std::move(slice)};
}

// Inflation of a module over A/J back to A through the projection.
template <class S>
FModule<S> inflate(const QuotientLink<S>& link, const FModule<S>& m) {
  if (link.algebra.get() != m.algebra.get())
    throw InputError("inflate: module does not live over the quotient algebra");
  const Algebra<S>& parent = *link.parent;
  std::vector<Mat<S>> action;
  action.reserve(static_cast<size_t>(parent.dim()));
  for (Index i = 0; i < parent.dim(); ++i)
    action.push_back(m.act(densify_vec(link.project.col(i))));
  return FModule<S>{link.parent, std::move(action)};
}

// True when x intertwines the two actions: x act_m(b) = act_n(b) x for every
// basis element b.
template <class S>
bool intertwines(const FModule<S>& m, const FModule<S>& n, const Mat<S>& x) {
  if (x.rows() != n.dim() || x.cols() != m.dim()) return false;
  for (Index i = 0; i < m.algebra->dim(); ++i)
    if (!mat_equal(densify(x * m.act_basis(i)),
                   densify(n.act_basis(i) * x)))
      return false;
  return true;
}

// Basis of the space of module maps m -> n. Maps respect the object
// decomposition, so the solve runs block by block in bases adapted to the
// object slices.
template <class S>
std::vector<Mat<S>> hom_space(const FModule<S>& m, const FModule<S>& n) {
  if (m.algebra.get() != n.algebra.get())
    throw InputError("hom_space: modules live over different algebras");
  const Algebra<S>& a = *m.algebra;
  const FieldSpec fs = a.field;
  const Index dm = m.dim();
  const Index dn = n.dim();
  if (dm == 0 || dn == 0) return {};

  const Index no = a.n_objects();
  auto adapt = [&](const FModule<S>& mod, std::vector<Index>& sizes) {
    std::vector<Vec<S>> cols;
    for (Index o = 0; o < no; ++o) {
      Subspace<S> img = Subspace<S>::span_of(mod.act(a.object_idem(o)), fs);
      sizes.push_back(img.dim());
      for (Index c = 0; c < img.dim(); ++c)
        cols.push_back(densify_vec(img.basis().col(c)));
    }
    return cols_from(cols, fs, mod.dim());
  };
  std::vector<Index> msz, nsz;
  Mat<S> tm = adapt(m, msz);
  Mat<S> tn = adapt(n, nsz);
  STRATAKIT_CHECK(tm.cols() == dm && tn.cols() == dn,
                  "object slices do not fill the module");
  auto tmi = inverse(tm, fs);
  auto tni = inverse(tn, fs);
  STRATAKIT_CHECK(tmi.has_value() && tni.has_value(),
                  "adapted object basis is singular");

  std::vector<Index> moff = {0}, noff = {0};
  for (Index o = 0; o < no; ++o) {
    moff.push_back(moff.back() + msz[static_cast<size_t>(o)]);
    noff.push_back(noff.back() + nsz[static_cast<size_t>(o)]);
  }
  // Variables: one block X_o of size nsz[o] x msz[o] per object.
  std::vector<Index> voff = {0};
  for (Index o = 0; o < no; ++o)
    voff.push_back(voff.back() +
                   nsz[static_cast<size_t>(o)] * msz[static_cast<size_t>(o)]);
  const Index vars = voff.back();
  if (vars == 0) return {};

  std::vector<Vec<S>> rows;
  for (Index i = 0; i < a.dim(); ++i) {
    Mat<S> am = densify(*tmi * m.act_basis(i) * tm);
    Mat<S> an = densify(*tni * n.act_basis(i) * tn);
    for (Index t = 0; t < no; ++t)
      for (Index s = 0; s < no; ++s) {
        const Index mt = msz[static_cast<size_t>(t)];
        const Index ms = msz[static_cast<size_t>(s)];
        const Index nt = nsz[static_cast<size_t>(t)];
        const Index ns = nsz[static_cast<size_t>(s)];
        // Equation rows are nt x ms; nothing to impose when either is empty.
        if (nt == 0 || ms == 0) continue;
        Mat<S> amb = mt > 0
                         ? densify(am.block(moff[static_cast<size_t>(t)],
                                            moff[static_cast<size_t>(s)], mt, ms))
                         : mat_zero<S>(fs, 0, ms);
        Mat<S> anb = ns > 0
                         ? densify(an.block(noff[static_cast<size_t>(t)],
                                            noff[static_cast<size_t>(s)], nt, ns))
                         : mat_zero<S>(fs, nt, 0);
        bool am_zero = mat_is_zero(amb);
        bool an_zero = mat_is_zero(anb);
        if (am_zero && an_zero) continue;
        // Equation block: X_t * am[t,s] - an[t,s] * X_s = 0, entries nt x ms.
        for (Index r = 0; r < nt; ++r)
          for (Index c = 0; c < ms; ++c) {
            Vec<S> row = vec_zero<S>(fs, vars);
            if (!am_zero && mt > 0)
              for (Index k = 0; k < mt; ++k) {
                Index v = voff[static_cast<size_t>(t)] + r * mt + k;
                row(v) = row(v) + amb(k, c);
              }
            if (!an_zero && ns > 0)
              for (Index k = 0; k < ns; ++k) {
                Index v = voff[static_cast<size_t>(s)] + k * ms + c;
                row(v) = row(v) - anb(r, k);
              }
            if (!vec_is_zero(row)) rows.push_back(std::move(row));
          }
      }
  }

  Mat<S> ker;
  if (rows.empty()) {
    ker = densify(mat_identity<S>(fs, vars));
  } else {
    Mat<S> sys = mat_zero<S>(fs, static_cast<Index>(rows.size()), vars);
    for (Index r = 0; r < static_cast<Index>(rows.size()); ++r)
      sys.row(r) = rows[static_cast<size_t>(r)].transpose();
    ker = kernel_basis(sys, fs);
  }

  std::vector<Mat<S>> out;
  for (Index col = 0; col < ker.cols(); ++col) {
    Mat<S> hat = mat_zero<S>(fs, dn, dm);
    for (Index o = 0; o < no; ++o) {
      const Index ms = msz[static_cast<size_t>(o)];
      const Index ns = nsz[static_cast<size_t>(o)];
      for (Index r = 0; r < ns; ++r)
        for (Index c = 0; c < ms; ++c)
          hat(noff[static_cast<size_t>(o)] + r,
              moff[static_cast<size_t>(o)] + c) =
              ker(voff[static_cast<size_t>(o)] + r * ms + c, col);
    }
    out.push_back(densify(tn * hat * *tmi));
  }
  return out;
}

template <class S> struct IsoYes {
  Mat<S> map;  // invertible intertwiner m -> n
};
struct IsoNo {
  std::string reason;
};
struct IsoInconclusive {
  std::string note;
};
template <class S>
using IsoResult = std::variant<IsoYes<S>, IsoNo, IsoInconclusive>;

namespace detail {

template <class S> std::vector<Index> radical_layer_dims(const FModule<S>& m) {
  const Algebra<S>& a = *m.algebra;
  std::vector<Index> out;
  Mat<S> cur = densify(mat_identity<S>(a.field, m.dim()));
  for (Index guard = 0; guard <= m.dim() + 1; ++guard) {
    SpanBuilder<S> sb(a.field, std::max<Index>(m.dim(), 1));
    for (Index j = 0; j < a.radical.dim(); ++j) {
      Mat<S> img = m.act(densify_vec(a.radical.basis().col(j)));
      Mat<S> prod = densify(img * cur);
      for (Index c = 0; c < prod.cols(); ++c)
        sb.add(densify_vec(prod.col(c)));
    }
    Subspace<S> layer = sb.finish();
    out.push_back(layer.dim());
    if (layer.dim() == 0) return out;
    cur = densify(layer.basis());
  }
  STRATAKIT_CHECK(false, "radical series did not terminate");
  return out;
}

}  // namespace detail

// Decide whether two modules over one algebra are isomorphic. Cheap
// invariants give a reasoned no; otherwise the hom space is searched for an
// invertible map, and exhaustion is reported as inconclusive rather than as
// a verdict.
template <class S>
IsoResult<S> is_isomorphic(const FModule<S>& m, const FModule<S>& n,
                           std::uint64_t seed = 0) {
  if (m.algebra.get() != n.algebra.get())
    throw InputError("is_isomorphic: modules live over different algebras");
  const FieldSpec fs = m.field();
  if (m.dim() != n.dim())
    return IsoNo{"total dimensions differ: " + std::to_string(m.dim()) +
                 " vs " + std::to_string(n.dim())};
  if (m.dim() == 0) return IsoYes<S>{mat_zero<S>(fs, 0, 0)};
  DimensionVector dm = dim_vector(m);
  DimensionVector dn = dim_vector(n);
  if (!(dm == dn))
    return IsoNo{"dimension vectors differ: " + dm.str() + " vs " + dn.str()};
  if (detail::radical_layer_dims(m) != detail::radical_layer_dims(n))
    return IsoNo{"radical series dimensions differ"};
  size_t em = hom_space(m, m).size();
  size_t en = hom_space(n, n).size();
  if (em != en)
    return IsoNo{"endomorphism space dimensions differ: " +
                 std::to_string(em) + " vs " + std::to_string(en)};
  std::vector<Mat<S>> h = hom_space(m, n);
  if (h.empty()) return IsoNo{"no nonzero homomorphisms"};

  auto try_map = [&](const Mat<S>& x) -> std::optional<Mat<S>> {
    if (inverse(x, fs).has_value()) return x;
    return std::nullopt;
  };
  for (const auto& x : h)
    if (auto got = try_map(x)) return IsoYes<S>{*got};
  if (h.size() <= 16) {
    for (size_t i = 0; i < h.size(); ++i)
      for (size_t j = i + 1; j < h.size(); ++j) {
        if (auto got = try_map(densify(h[i] + h[j]))) return IsoYes<S>{*got};
        for (size_t k = j + 1; k < h.size(); ++k)
          if (auto got = try_map(densify(h[i] + h[j] + h[k])))
            return IsoYes<S>{*got};
      }
  }
  std::uint64_t state = seed;
  for (int trial = 0; trial < 200; ++trial) {
    Mat<S> x = mat_zero<S>(fs, n.dim(), m.dim());
    for (const auto& b : h) {
      long long c =
          static_cast<long long>(detail::splitmix_next(state) % 7) - 3;
      if (c != 0) x += scalar_from_int<S>(fs, c) * b;
    }
    if (auto got = try_map(x)) return IsoYes<S>{*got};
  }
  return IsoInconclusive{
      "no invertible map found within the search budget; the modules share "
      "all computed invariants"};
}

template <class S> struct SelfInjective {
  bool yes = false;
  std::vector<Index> socle_class;  // per class: class of the socle of P_c
  std::string defect;
};

// An algebra is self-injective here when every cyclic projective at a class
// representative has a simple socle and the socle classes permute the
// classes.
template <class S>
SelfInjective<S> is_self_injective(const AlgPtr<S>& a,
                                   const Primitives<S>& prims) {
  const FieldSpec fs = a->field;
  const Index nc = static_cast<Index>(prims.class_rep.size());
  std::vector<Index> end_dims = detail::class_end_dims(*a, prims);
  SelfInjective<S> out;
  for (Index c = 0; c < nc; ++c) {
    auto p = projective_at(
        a, prims.idempotents[static_cast<size_t>(prims.class_rep[static_cast<size_t>(c)])]);
    const Index d = p.module.dim();
    const Index rd = a->radical.dim();
    Mat<S> z;
    if (rd == 0) {
      z = densify(mat_identity<S>(fs, d));
    } else {
      Mat<S> stacked = mat_zero<S>(fs, rd * d, d);
      for (Index j = 0; j < rd; ++j)
        stacked.block(j * d, 0, d, d) =
            p.module.act(densify_vec(a->radical.basis().col(j)));
      z = kernel_basis(stacked, fs);
    }
    Subspace<S> soc = Subspace<S>::span_of(z, fs);
    auto sl = submodule(p.module, soc);
    Index constituents = 0;
    Index socle_of = -1;
    for (Index dcls = 0; dcls < nc; ++dcls) {
      const Vec<S>& e = prims.idempotents[static_cast<size_t>(
          prims.class_rep[static_cast<size_t>(dcls)])];
      Index r = sl.module.dim() == 0 ? 0 : rank(sl.module.act(e));
      STRATAKIT_CHECK(r % end_dims[static_cast<size_t>(dcls)] == 0,
                      "socle slice is not a multiple of the endomorphism dimension");
      Index k = r / end_dims[static_cast<size_t>(dcls)];
      constituents += k;
      if (k > 0) socle_of = dcls;
    }
    if (constituents != 1) {
      out.yes = false;
      out.defect = "projective at class '" +
                   prims.class_labels[static_cast<size_t>(c)] +
                   "' has a socle of dimension " + std::to_string(soc.dim()) +
                   " with " + std::to_string(constituents) +
                   " simple constituents";
      out.socle_class.clear();
      return out;
    }
    out.socle_class.push_back(socle_of);
  }
  std::vector<bool> hit(static_cast<size_t>(nc), false);
  for (Index c : out.socle_class) hit[static_cast<size_t>(c)] = true;
  for (Index c = 0; c < nc; ++c)
    if (!hit[static_cast<size_t>(c)]) {
      out.yes = false;
      out.defect = "socle classes do not permute the simple classes; '" +
                   prims.class_labels[static_cast<size_t>(c)] +
                   "' is never a socle";
      return out;
    }
  out.yes = true;
  return out;
}

}  // namespace stratakit
