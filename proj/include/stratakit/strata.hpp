// Directed stratifications and the structure checks built on them:
// verification and search, support profiles and ideals of objects,
// restriction and cover theorems, stratifying-ideal and standard-layer
// tests, finitistic and global dimension bounds, recollement conditions,
// and a contravariant-finiteness obstruction.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "stratakit/algebra.hpp"
#include "stratakit/module.hpp"
#include "stratakit/quiver.hpp"
#include "stratakit/radical.hpp"
#include "stratakit/resolve.hpp"

namespace stratakit {

// The object set handed to a restriction check is not closed under incoming
// morphisms.
class NotAnIdealError : public InputError {
 public:
  explicit NotAnIdealError(const std::string& what) : InputError(what) {}
};

// The position handed to a restricted-resolution check is not minimal for
// the module.
class NotMinimalObjectError : public InputError {
 public:
  explicit NotMinimalObjectError(const std::string& what) : InputError(what) {}
};

// The two elements handed to the obstruction check do not share endpoints.
class NotParallelError : public InputError {
 public:
  explicit NotParallelError(const std::string& what) : InputError(what) {}
};

// An ordered complete family of orthogonal idempotents e_1, ..., e_n with
// e_i A e_j = 0 whenever i < j: no morphism runs from a later position into
// an earlier one, so earlier positions only map forward.
template <class S> struct DirectedStratification {
  AlgPtr<S> algebra;
  std::vector<Vec<S>> idempotents;
  std::vector<std::string> labels;        // one printable name per position
  std::vector<std::vector<int>> classes;  // simple classes per position, when
                                          // the family came out of the search
  Index length() const { return static_cast<Index>(idempotents.size()); }
};

// Why a candidate family fails: the offending positions and, where it
// applies, a witness element written out in the algebra basis.
struct StratificationDefect {
  std::string reason;
  int i = -1;
  int j = -1;
  std::string witness;
};

template <class S>
using StratVerdict = std::variant<DirectedStratification<S>, StratificationDefect>;

// Checks the three axioms in order: idempotency and orthogonality, sum equal
// to the identity, and directedness. Semantic failures come back as a
// defect, only malformed input throws.
template <class S>
StratVerdict<S> verify_stratification(const AlgPtr<S>& a,
                                      const std::vector<Vec<S>>& es,
                                      std::vector<std::string> labels = {}) {
  if (es.empty())
    throw InputError("verify_stratification: empty idempotent family");
  for (const auto& e : es)
    if (e.size() != a->dim())
      throw InputError("verify_stratification: element lives in dimension " +
                       std::to_string(e.size()) + ", algebra has " +
                       std::to_string(a->dim()));
  const Index n = static_cast<Index>(es.size());
  if (!labels.empty() && static_cast<Index>(labels.size()) != n)
    throw InputError("verify_stratification: one label per idempotent");

  for (Index i = 0; i < n; ++i) {
    const Vec<S>& e = es[static_cast<size_t>(i)];
    if (!vec_equal(densify_vec(a->mul(e, e)), e))
      return StratificationDefect{"position is not idempotent",
                                  static_cast<int>(i), static_cast<int>(i),
                                  a->element_str(e)};
  }
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      if (i == j) continue;
      Vec<S> w = a->mul(es[static_cast<size_t>(i)], es[static_cast<size_t>(j)]);
      if (!vec_is_zero(w))
        return StratificationDefect{"positions are not orthogonal",
                                    static_cast<int>(i), static_cast<int>(j),
                                    a->element_str(w)};
    }
  Vec<S> sum = a->zero_vec();
  for (const auto& e : es) sum = densify_vec(sum + e);
  if (!vec_equal(sum, a->unit))
    return StratificationDefect{"family does not sum to the identity", -1, -1,
                                a->element_str(sum)};
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      for (Index b = 0; b < a->dim(); ++b) {
        Vec<S> w = a->mul(es[static_cast<size_t>(i)],
                          a->mul(a->basis_vec(b), es[static_cast<size_t>(j)]));
        if (!vec_is_zero(w))
          return StratificationDefect{
              "a morphism runs from a later position into an earlier one",
              static_cast<int>(i), static_cast<int>(j),
              a->element_str(w) + " (from '" +
                  a->basis_names[static_cast<size_t>(b)] + "')"};
      }

  DirectedStratification<S> out;
  out.algebra = a;
  out.idempotents = es;
  if (labels.empty())
    for (Index i = 0; i < n; ++i)
      out.labels.push_back("e" + std::to_string(i + 1));
  else
    out.labels = std::move(labels);
  return out;
}

// Search over the Gabriel quiver: the trivial single-block family, one
// candidate per directed bipartition (sources first), and the full
// condensation order when it is longer than two blocks. Candidates lift by
// summing every primitive idempotent of the classes in a block and are then
// re-verified on the algebra itself, independently of the quiver reasoning.
template <class S>
std::vector<DirectedStratification<S>> find_stratifications(
    const AlgPtr<S>& a, std::uint64_t seed = 0) {
  auto gq = gabriel_quiver(a, seed);
  const Primitives<S>& prims = gq.primitives;
  const int nc = static_cast<int>(prims.class_rep.size());

  auto block_idem = [&](const std::vector<int>& cls) {
    Vec<S> e = a->zero_vec();
    for (size_t k = 0; k < prims.idempotents.size(); ++k)
      if (std::find(cls.begin(), cls.end(), prims.cls[k]) != cls.end())
        e = densify_vec(e + prims.idempotents[k]);
    return e;
  };
  auto block_label = [&](const std::vector<int>& cls) {
    std::string out;
    for (size_t i = 0; i < cls.size(); ++i) {
      if (i) out += "+";
      out += prims.class_labels[static_cast<size_t>(cls[i])];
    }
    return out;
  };

  std::vector<std::vector<std::vector<int>>> candidates;
  {
    std::vector<int> all(static_cast<size_t>(nc));
    for (int c = 0; c < nc; ++c) all[static_cast<size_t>(c)] = c;
    candidates.push_back({all});
  }
  for (const auto& bp : directed_bipartitions(gq.quiver))
    candidates.push_back({bp.upper, bp.lower});
  auto finest = finest_stratification_order(gq.quiver);
  if (finest.size() > 2) candidates.push_back(finest);

  std::vector<DirectedStratification<S>> out;
  for (auto& cand : candidates) {
    std::vector<Vec<S>> es;
    std::vector<std::string> labels;
    for (const auto& block : cand) {
      es.push_back(block_idem(block));
      labels.push_back(block_label(block));
    }
    auto v = verify_stratification(a, es, labels);
    auto* ds = std::get_if<DirectedStratification<S>>(&v);
    STRATAKIT_CHECK(ds != nullptr,
                    "a search candidate failed verification on the algebra");
    ds->classes = cand;
    bool dup = false;
    for (const auto& prev : out) {
      if (prev.length() != ds->length()) continue;
      bool same = true;
      for (Index i = 0; i < ds->length() && same; ++i)
        same = vec_equal(prev.idempotents[static_cast<size_t>(i)],
                         ds->idempotents[static_cast<size_t>(i)]);
      if (same) { dup = true; break; }
    }
    if (!dup) out.push_back(std::move(*ds));
  }
  return out;
}

namespace detail {

// dim e_i A e_j for every ordered pair of positions: the space of morphisms
// from position j into position i.
template <class S>
std::vector<std::vector<Index>> position_hom_dims(
    const DirectedStratification<S>& s) {
  const Algebra<S>& a = *s.algebra;
  const Index n = s.length();
  std::vector<Mat<S>> left, right;
  for (Index i = 0; i < n; ++i) {
    left.push_back(a.left_mul(s.idempotents[static_cast<size_t>(i)]));
    right.push_back(a.right_mul(s.idempotents[static_cast<size_t>(i)]));
  }
  std::vector<std::vector<Index>> out(
      static_cast<size_t>(n), std::vector<Index>(static_cast<size_t>(n), 0));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      out[static_cast<size_t>(i)][static_cast<size_t>(j)] = rank(
          densify(left[static_cast<size_t>(i)] * right[static_cast<size_t>(j)]));
  return out;
}

// Peirce endpoints of an element: the unique objects o, t with v 1_o = v and
// 1_t v = v. Empty when the element mixes components.
template <class S>
std::optional<std::pair<int, int>> endpoints(const Algebra<S>& a,
                                             const Vec<S>& v) {
  int src = -1, tgt = -1;
  for (Index o = 0; o < a.n_objects(); ++o) {
    Vec<S> w = a.mul(v, a.object_idem(o));
    if (vec_is_zero(w)) continue;
    if (src >= 0 || !vec_equal(w, v)) return std::nullopt;
    src = static_cast<int>(o);
  }
  for (Index o = 0; o < a.n_objects(); ++o) {
    Vec<S> w = a.mul(a.object_idem(o), v);
    if (vec_is_zero(w)) continue;
    if (tgt >= 0 || !vec_equal(w, v)) return std::nullopt;
    tgt = static_cast<int>(o);
  }
  if (src < 0 || tgt < 0) return std::nullopt;
  return std::make_pair(src, tgt);
}

}  // namespace detail

// Where a module lives relative to a stratification: the slice dimensions,
// the minimal supported positions (nothing else supported maps into them),
// and the one-step closure of the minimal positions under outgoing
// morphisms. The closure contains every minimal position through its own
// identity component.
struct SupportProfile {
  std::vector<Index> dims;
  std::vector<int> minimal;
  std::vector<int> closure;
};

template <class S>
SupportProfile support_profile(const FModule<S>& m,
                               const DirectedStratification<S>& s) {
  if (m.algebra.get() != s.algebra.get())
    throw InputError(
        "support_profile: module and stratification live over different "
        "algebras");
  const Index n = s.length();
  SupportProfile out;
  out.dims.assign(static_cast<size_t>(n), 0);
  for (Index i = 0; i < n; ++i)
    out.dims[static_cast<size_t>(i)] =
        m.dim() == 0 ? 0 : rank(m.act(s.idempotents[static_cast<size_t>(i)]));
  auto hom = detail::position_hom_dims(s);
  for (Index x = 0; x < n; ++x) {
    if (out.dims[static_cast<size_t>(x)] == 0) continue;
    bool minimal = true;
    for (Index y = 0; y < n && minimal; ++y) {
      if (y == x) continue;
      if (hom[static_cast<size_t>(x)][static_cast<size_t>(y)] > 0 &&
          out.dims[static_cast<size_t>(y)] > 0)
        minimal = false;
    }
    if (minimal) out.minimal.push_back(static_cast<int>(x));
  }
  for (Index y = 0; y < n; ++y)
    for (int x : out.minimal)
      if (hom[static_cast<size_t>(y)][static_cast<size_t>(x)] > 0) {
        out.closure.push_back(static_cast<int>(y));
        break;
      }
  return out;
}

// True when the position set is closed under incoming morphisms: for every
// member x, any position that maps into x is a member too.
template <class S>
bool is_ideal(const DirectedStratification<S>& s, const std::vector<int>& objs) {
  const Index n = s.length();
  std::vector<bool> in(static_cast<size_t>(n), false);
  for (int x : objs) {
    if (x < 0 || x >= static_cast<int>(n))
      throw InputError("is_ideal: position " + std::to_string(x) +
                       " out of range");
    if (in[static_cast<size_t>(x)])
      throw InputError("is_ideal: duplicate position " + std::to_string(x));
    in[static_cast<size_t>(x)] = true;
  }
  auto hom = detail::position_hom_dims(s);
  for (int x : objs)
    for (Index y = 0; y < n; ++y)
      if (hom[static_cast<size_t>(x)][static_cast<size_t>(y)] > 0 &&
          !in[static_cast<size_t>(y)])
        return false;
  return true;
}

// Restriction of one cyclic projective to the corner at an ideal of
// positions, with the cover kernel that decides projectivity there.
struct RestrictionEntry {
  int cls = -1;
  std::string label;
  Index full_dim = 0;
  Index restricted_dim = 0;
  Index cover_kernel_dim = 0;
  bool projective = false;
};

struct RestrictionReport {
  std::vector<int> objects;
  bool all_projective = false;
  std::vector<RestrictionEntry> entries;
};

// Restricting to an ideal of positions must keep every projective
// projective. Throws NotAnIdealError on a set that is not closed under
// incoming morphisms.
template <class S>
RestrictionReport check_restriction_preserves_projectives(
    const DirectedStratification<S>& s, const std::vector<int>& objs,
    std::uint64_t seed = 0) {
  if (!is_ideal(s, objs))
    throw NotAnIdealError(
        "check_restriction_preserves_projectives: the position set is not "
        "closed under incoming morphisms");
  const AlgPtr<S>& a = s.algebra;
  auto prims = primitive_idempotents(a, seed);
  const Index nc = static_cast<Index>(prims.class_rep.size());

  RestrictionReport out;
  out.objects = objs;
  Vec<S> eb = a->zero_vec();
  for (int x : objs)
    eb = densify_vec(eb + s.idempotents[static_cast<size_t>(x)]);

  if (vec_is_zero(eb)) {
    // Restriction to nothing: every projective restricts to zero.
    for (Index c = 0; c < nc; ++c) {
      auto p = projective_at(
          a, prims.idempotents[static_cast<size_t>(
                 prims.class_rep[static_cast<size_t>(c)])]);
      out.entries.push_back({static_cast<int>(c),
                             prims.class_labels[static_cast<size_t>(c)],
                             p.module.dim(), 0, 0, true});
    }
    out.all_projective = true;
    return out;
  }

  auto corner = corner_algebra(a, eb);
  auto cp = primitive_idempotents(corner.algebra, seed);
  out.all_projective = true;
  for (Index c = 0; c < nc; ++c) {
    auto p = projective_at(a, prims.idempotents[static_cast<size_t>(
                                  prims.class_rep[static_cast<size_t>(c)])]);
    auto rp = restrict_module(p.module, corner);
    Index kd = rp.module.dim() == 0
                   ? 0
                   : projective_cover(rp.module, cp).kernel.dim();
    RestrictionEntry ent{static_cast<int>(c),
                         prims.class_labels[static_cast<size_t>(c)],
                         p.module.dim(), rp.module.dim(), kd, kd == 0};
    if (!ent.projective) out.all_projective = false;
    out.entries.push_back(std::move(ent));
  }
  return out;
}

// The checks run at one minimal position of a module's support: the
// restricted cover must be a projective cover over the corner.
struct CoverMinimalCheck {
  int position = -1;
  Index module_slice_dim = 0;
  Index cover_slice_dim = 0;
  Index cover_kernel_dim = 0;
  bool restricted_projective = false;
  bool restricted_surjective = false;
  bool kernel_inside_radical = false;
  bool pass = false;
};

struct CoverTheoremReport {
  SupportProfile profile;
  std::vector<Index> cover_dims;
  std::vector<int> support_violations;
  std::vector<CoverMinimalCheck> minimal_checks;
  bool pass = false;
};

// Two claims about the projective cover P of a module M: the slices of P
// vanish outside the one-step closure of the minimal support, and at every
// minimal position the restriction of P -> M is again a projective cover
// over the corner there.
template <class S>
CoverTheoremReport check_cover_theorem(const FModule<S>& m,
                                       const DirectedStratification<S>& s,
                                       std::uint64_t seed = 0) {
  if (m.algebra.get() != s.algebra.get())
    throw InputError(
        "check_cover_theorem: module and stratification live over different "
        "algebras");
  const AlgPtr<S>& a = s.algebra;
  const FieldSpec fs = a->field;
  const Index n = s.length();
  auto prims = primitive_idempotents(a, seed);
  auto cover = projective_cover(m, prims);

  CoverTheoremReport out;
  out.profile = support_profile(m, s);
  out.cover_dims.assign(static_cast<size_t>(n), 0);
  for (Index i = 0; i < n; ++i)
    out.cover_dims[static_cast<size_t>(i)] =
        cover.p.dim() == 0
            ? 0
            : rank(cover.p.act(s.idempotents[static_cast<size_t>(i)]));
  std::vector<bool> in_closure(static_cast<size_t>(n), false);
  for (int y : out.profile.closure) in_closure[static_cast<size_t>(y)] = true;
  for (Index i = 0; i < n; ++i)
    if (out.cover_dims[static_cast<size_t>(i)] > 0 &&
        !in_closure[static_cast<size_t>(i)])
      out.support_violations.push_back(static_cast<int>(i));

  for (int x : out.profile.minimal) {
    auto corner = corner_algebra(a, s.idempotents[static_cast<size_t>(x)]);
    auto cp = primitive_idempotents(corner.algebra, seed);
    auto rp = restrict_module(cover.p, corner);
    auto rm = restrict_module(m, corner);

    CoverMinimalCheck chk;
    chk.position = x;
    chk.module_slice_dim = rm.module.dim();
    chk.cover_slice_dim = rp.module.dim();
    chk.cover_kernel_dim = rp.module.dim() == 0
                               ? 0
                               : projective_cover(rp.module, cp).kernel.dim();
    chk.restricted_projective = chk.cover_kernel_dim == 0;

    // The covering map on the slice, in corner coordinates on both sides.
    Mat<S> rmap = mat_zero<S>(fs, rm.module.dim(), rp.module.dim());
    for (Index j = 0; j < rp.module.dim(); ++j) {
      Vec<S> img = densify_vec(cover.onto * rp.space.basis().col(j));
      auto co = rm.space.coords(img);
      STRATAKIT_CHECK(co.has_value(), "cover image escapes the module slice");
      rmap.col(j) = *co;
    }
    chk.restricted_surjective = rank(rmap) == rm.module.dim();
    Mat<S> ker = kernel_basis(rmap, fs);
    chk.kernel_inside_radical =
        ker.cols() == 0 ||
        detail::radical_space(rp.module).contains(Subspace<S>::span_of(ker, fs));
    chk.pass = chk.restricted_projective && chk.restricted_surjective &&
               chk.kernel_inside_radical;
    out.minimal_checks.push_back(chk);
  }

  out.pass = out.support_violations.empty();
  for (const auto& chk : out.minimal_checks)
    if (!chk.pass) out.pass = false;
  return out;
}

// Outcome of restricting a minimal resolution to the corner at one minimal
// position of the module's support: the restriction must again be a minimal
// projective resolution there, stage by stage as far as it was computed.
struct RestrictedResolutionReport {
  int position = -1;
  Index restricted_target_dim = 0;
  std::vector<Index> term_dims;
  bool terms_projective = false;
  bool exact = false;
  bool minimal = false;
  bool complete = false;  // the full resolution was finite, so nothing was cut
  bool pass = false;
  std::string defect;
};

template <class S>
RestrictedResolutionReport check_restricted_resolution(
    const FModule<S>& m, const DirectedStratification<S>& s, int x,
    Index cutoff = kDefaultCutoff, std::uint64_t seed = 0) {
  if (m.algebra.get() != s.algebra.get())
    throw InputError(
        "check_restricted_resolution: module and stratification live over "
        "different algebras");
  if (x < 0 || x >= static_cast<int>(s.length()))
    throw InputError("check_restricted_resolution: position out of range");
  auto profile = support_profile(m, s);
  if (std::find(profile.minimal.begin(), profile.minimal.end(), x) ==
      profile.minimal.end())
    throw NotMinimalObjectError("check_restricted_resolution: position " +
                                std::to_string(x) +
                                " is not minimal for the module");

  const AlgPtr<S>& a = s.algebra;
  const FieldSpec fs = a->field;
  auto prims = primitive_idempotents(a, seed);
  auto res = minimal_resolution(m, prims, cutoff, true);
  auto corner = corner_algebra(a, s.idempotents[static_cast<size_t>(x)]);
  auto cp = primitive_idempotents(corner.algebra, seed);

  RestrictedResolutionReport out;
  out.position = x;
  out.complete = std::get_if<ResFinite>(&res.status) != nullptr;

  auto rt = restrict_module(m, corner);
  out.restricted_target_dim = rt.module.dim();
  std::vector<SubmoduleLink<S>> rterm;
  for (const auto& term : res.terms) {
    rterm.push_back(restrict_module(term, corner));
    out.term_dims.push_back(rterm.back().module.dim());
  }
  const Index nterm = static_cast<Index>(rterm.size());
  const Index ndiff = static_cast<Index>(res.differentials.size());

  // Each restricted map, rewritten in corner coordinates on both sides.
  auto restricted_map = [&](const Mat<S>& full, const SubmoduleLink<S>& dom,
                            const SubmoduleLink<S>& cod) {
    Mat<S> out_map = mat_zero<S>(fs, cod.module.dim(), dom.module.dim());
    for (Index j = 0; j < dom.module.dim(); ++j) {
      Vec<S> img = densify_vec(full * dom.space.basis().col(j));
      auto co = cod.space.coords(img);
      STRATAKIT_CHECK(co.has_value(), "restricted map escapes the slice");
      out_map.col(j) = *co;
    }
    return out_map;
  };
  Mat<S> raug = restricted_map(res.augmentation, rterm[0], rt);
  std::vector<Mat<S>> rd;
  for (Index k = 0; k < ndiff; ++k)
    rd.push_back(restricted_map(res.differentials[static_cast<size_t>(k)],
                                rterm[static_cast<size_t>(k + 1)],
                                rterm[static_cast<size_t>(k)]));

  out.terms_projective = true;
  for (Index k = 0; k < nterm; ++k) {
    if (rterm[static_cast<size_t>(k)].module.dim() == 0) continue;
    if (projective_cover(rterm[static_cast<size_t>(k)].module, cp)
            .kernel.dim() != 0) {
      out.terms_projective = false;
      out.defect = "restricted term " + std::to_string(k) +
                   " is not projective over the corner";
      break;
    }
  }

  out.exact = true;
  if (rank(raug) != rt.module.dim()) {
    out.exact = false;
    if (out.defect.empty())
      out.defect = "restricted augmentation is not surjective";
  }
  for (Index k = 0; k < ndiff && out.exact; ++k) {
    const Mat<S>& outgoing = k == 0 ? raug : rd[static_cast<size_t>(k - 1)];
    // The composite vanishes because it restricts a vanishing composite.
    STRATAKIT_CHECK(
        mat_is_zero(densify(outgoing * rd[static_cast<size_t>(k)])),
        "restricted composite does not vanish");
    if (rank(rd[static_cast<size_t>(k)]) + rank(outgoing) !=
        rterm[static_cast<size_t>(k)].module.dim()) {
      out.exact = false;
      out.defect = "restricted resolution is not exact at stage " +
                   std::to_string(k);
    }
  }
  if (out.exact && out.complete) {
    // A finite resolution must restrict to a finite one: the final map is
    // injective (with no differentials the augmentation itself is).
    const Mat<S>& last = ndiff == 0 ? raug : rd[static_cast<size_t>(ndiff - 1)];
    if (rank(last) != last.cols()) {
      out.exact = false;
      out.defect = "restricted resolution does not terminate";
    }
  }

  out.minimal = true;
  {
    Mat<S> aker = kernel_basis(raug, fs);
    if (aker.cols() > 0 &&
        !detail::radical_space(rterm[0].module)
             .contains(Subspace<S>::span_of(aker, fs))) {
      out.minimal = false;
      if (out.defect.empty())
        out.defect = "restricted augmentation kernel escapes the radical";
    }
  }
  for (Index k = 0; k < ndiff && out.minimal; ++k) {
    if (rd[static_cast<size_t>(k)].cols() == 0) continue;
    if (!detail::radical_space(rterm[static_cast<size_t>(k)].module)
             .contains(Subspace<S>::span_of(rd[static_cast<size_t>(k)], fs))) {
      out.minimal = false;
      out.defect = "restricted differential " + std::to_string(k) +
                   " escapes the radical";
    }
  }

  out.pass = out.terms_projective && out.exact && out.minimal;
  return out;
}

// Evidence that J = A f A is a stratifying ideal for f = 1 - e: the
// multiplication map Af (x)_{fAf} fA -> J is bijective, and the higher Tor
// of the two factors over the corner vanishes as far as it was computed.
struct StratifyingIdealReport {
  Index j_dim = 0;
  Index corner_dim = 0;
  Index af_dim = 0;
  Index fa_dim = 0;
  Index tensor_dim = 0;
  Index mult_image_dim = 0;
  bool mult_iso = false;
  std::vector<HomologyDim> tor;  // degrees 1..torDepth
  bool tor_vanishes = false;
  bool pass = false;
};

template <class S>
StratifyingIdealReport stratifying_ideal_check(const AlgPtr<S>& a,
                                               const Vec<S>& e,
                                               Index tor_depth = 4,
                                               std::uint64_t seed = 0) {
  if (e.size() != a->dim())
    throw InputError("stratifying_ideal_check: element dimension mismatch");
  if (!vec_equal(densify_vec(a->mul(e, e)), e))
    throw InputError("stratifying_ideal_check: the element is not idempotent");
  if (tor_depth < 0)
    throw InputError("stratifying_ideal_check: negative Tor depth");
  const FieldSpec fs = a->field;

  StratifyingIdealReport out;
  Vec<S> f = densify_vec(a->unit - e);
  if (vec_is_zero(f)) {
    // J = 0: the zero ideal is stratifying with nothing to compute.
    out.tor.assign(static_cast<size_t>(tor_depth), HomologyDim{true, 0});
    out.mult_iso = true;
    out.tor_vanishes = true;
    out.pass = true;
    return out;
  }

  Subspace<S> j = ideal_generated_by(*a, {f});
  out.j_dim = j.dim();
  auto corner = corner_algebra(a, f);
  out.corner_dim = corner.algebra->dim();
  auto op = opposite_algebra(corner.algebra);
  auto prims_op = primitive_idempotents(op, seed);

  Subspace<S> af = Subspace<S>::span_of(a->right_mul(f), fs);
  Subspace<S> fa = Subspace<S>::span_of(a->left_mul(f), fs);
  out.af_dim = af.dim();
  out.fa_dim = fa.dim();

  // Af is a right module over the corner; its right action, column by
  // column, is a left module over the opposite.
  std::vector<Mat<S>> right_action, left_action;
  for (Index i = 0; i < corner.algebra->dim(); ++i) {
    Vec<S> c = densify_vec(corner.embed.col(i));
    Mat<S> ra = mat_zero<S>(fs, af.dim(), af.dim());
    for (Index col = 0; col < af.dim(); ++col) {
      Vec<S> img = a->mul(densify_vec(af.basis().col(col)), c);
      auto co = af.coords(img);
      STRATAKIT_CHECK(co.has_value(), "Af is not stable under the corner");
      ra.col(col) = *co;
    }
    right_action.push_back(std::move(ra));
    Mat<S> la = mat_zero<S>(fs, fa.dim(), fa.dim());
    for (Index col = 0; col < fa.dim(); ++col) {
      Vec<S> img = a->mul(c, densify_vec(fa.basis().col(col)));
      auto co = fa.coords(img);
      STRATAKIT_CHECK(co.has_value(), "fA is not stable under the corner");
      la.col(col) = *co;
    }
    left_action.push_back(std::move(la));
  }
  auto af_op = make_module(op, std::move(right_action));
  auto fa_mod = make_module(corner.algebra, std::move(left_action));

  auto ts = tensor_over(corner.algebra, af_op, fa_mod);
  out.tensor_dim = ts.dim;

  SpanBuilder<S> mult(fs, a->dim());
  for (Index u = 0; u < af.dim(); ++u)
    for (Index v = 0; v < fa.dim(); ++v) {
      Vec<S> w = a->mul(densify_vec(af.basis().col(u)),
                        densify_vec(fa.basis().col(v)));
      STRATAKIT_CHECK(vec_is_zero(w) || j.contains(w),
                      "a product of Af and fA escapes the ideal");
      mult.add(w);
    }
  out.mult_image_dim = mult.finish().dim();
  out.mult_iso =
      out.tensor_dim == out.j_dim && out.mult_image_dim == out.j_dim;

  if (tor_depth > 0) {
    auto sweep =
        tor_sweep(corner.algebra, af_op, fa_mod, prims_op, tor_depth);
    out.tor.assign(sweep.begin() + 1, sweep.end());
  }
  out.tor_vanishes = true;
  for (const auto& h : out.tor)
    if (!h.known || h.dim != 0) out.tor_vanishes = false;

  out.pass = out.mult_iso && out.tor_vanishes;
  return out;
}

// One layer of the ideal chain J_1 ⊆ J_2 ⊆ ... ⊆ J_n = A, where J_i is
// generated by the sum of the last i idempotents. The layer J_i / J_{i-1}
// must be projective over A / J_{i-1}.
struct StandardLayer {
  Index index = 0;              // 1-based chain position
  std::vector<int> generating;  // stratification positions generating J_i
  Index ideal_dim = 0;
  Index layer_dim = 0;
  Index cover_kernel_dim = 0;
  bool projective = false;
};

struct WebbEntry {
  std::string morphism;
  std::string target;
  Index stabilizer_order = 0;
  bool order_invertible = false;
};

struct StandardlyStratifiedReport {
  std::vector<StandardLayer> layers;
  bool standard = false;
  bool webb_applicable = false;
  bool webb_pass = false;
  std::vector<WebbEntry> webb;
};

template <class S>
StandardlyStratifiedReport standardly_stratified_check(
    const AlgPtr<S>& a, const DirectedStratification<S>& s,
    std::uint64_t seed = 0) {
  if (a.get() != s.algebra.get())
    throw InputError(
        "standardly_stratified_check: stratification lives over a different "
        "algebra");
  const Index n = s.length();
  const FieldSpec fs = a->field;

  StandardlyStratifiedReport out;
  out.standard = true;
  Subspace<S> prev(fs, a->dim());
  std::optional<Primitives<S>> aprims;
  for (Index i = 1; i <= n; ++i) {
    Vec<S> fsum = a->zero_vec();
    StandardLayer layer;
    layer.index = i;
    for (Index l = n - i; l < n; ++l) {
      fsum = densify_vec(fsum + s.idempotents[static_cast<size_t>(l)]);
      layer.generating.push_back(static_cast<int>(l));
    }
    Subspace<S> ji = ideal_generated_by(*a, {fsum});
    STRATAKIT_CHECK(ji.contains(prev), "ideal chain is not increasing");
    layer.ideal_dim = ji.dim();
    layer.layer_dim = ji.dim() - prev.dim();
    if (layer.layer_dim == 0) {
      layer.projective = true;
      out.layers.push_back(std::move(layer));
      prev = std::move(ji);
      continue;
    }
    if (prev.dim() == 0) {
      // First nonzero layer: J_i itself as a left module over A.
      if (!aprims) aprims = primitive_idempotents(a, seed);
      auto sl = submodule(regular_module(a), ji);
      layer.cover_kernel_dim = projective_cover(sl.module, *aprims).kernel.dim();
    } else {
      auto ql = quotient_algebra(a, prev);
      SpanBuilder<S> sb(fs, ql.algebra->dim());
      for (Index c = 0; c < ji.dim(); ++c)
        sb.add(densify_vec(ql.project * ji.basis().col(c)));
      Subspace<S> layer_space = sb.finish();
      STRATAKIT_CHECK(layer_space.dim() == layer.layer_dim,
                      "layer dimension does not match the chain step");
      auto bprims = primitive_idempotents(ql.algebra, seed);
      auto sl = submodule(regular_module(ql.algebra), layer_space);
      layer.cover_kernel_dim = projective_cover(sl.module, bprims).kernel.dim();
    }
    layer.projective = layer.cover_kernel_dim == 0;
    if (!layer.projective) out.standard = false;
    out.layers.push_back(std::move(layer));
    prev = std::move(ji);
  }

  // For a genuine EI category algebra the layer condition has a group-order
  // reformulation: every morphism's stabilizer inside the automorphisms of
  // its target must have order invertible in the field.
  if (a->kind == "ei") {
    out.webb_applicable = true;
    out.webb_pass = true;
    const std::uint32_t p = fs.characteristic;
    std::vector<std::pair<int, int>> ends;
    for (Index b = 0; b < a->dim(); ++b) {
      auto ep = detail::endpoints(*a, a->basis_vec(b));
      STRATAKIT_CHECK(ep.has_value(), "basis morphism without endpoints");
      ends.push_back(*ep);
    }
    for (Index b = 0; b < a->dim(); ++b) {
      const int tgt = ends[static_cast<size_t>(b)].second;
      Index stab = 0;
      for (Index t = 0; t < a->dim(); ++t) {
        if (ends[static_cast<size_t>(t)].first != tgt ||
            ends[static_cast<size_t>(t)].second != tgt)
          continue;
        Vec<S> w = a->mul(a->basis_vec(t), a->basis_vec(b));
        if (vec_equal(w, a->basis_vec(b))) ++stab;
      }
      WebbEntry ent;
      ent.morphism = a->basis_names[static_cast<size_t>(b)];
      ent.target = a->objects[static_cast<size_t>(tgt)];
      ent.stabilizer_order = stab;
      ent.order_invertible = p == 0 || stab % static_cast<Index>(p) != 0;
      if (!ent.order_invertible) out.webb_pass = false;
      out.webb.push_back(std::move(ent));
    }
  }
  return out;
}

// Where a stratum's finitistic dimension bound came from.
enum class DimSource { Oracle, SelfInjective, GlobalDimension, Unknown };

struct StratumDim {
  int position = -1;
  std::string label;
  Index corner_dim = 0;
  bool known = false;
  Index value = 0;
  DimSource source = DimSource::Unknown;
};

struct FindimBound {
  std::vector<StratumDim> strata;
  bool known = false;
  Index bound = 0;  // sum of the stratum values plus length minus one
  std::vector<int> unknown_positions;
};

// Bound on the finitistic dimension from the strata: a user oracle value
// wins, a self-injective corner contributes zero, a corner of finite global
// dimension contributes that, and anything else leaves the combined bound
// unknown with the positions responsible.
template <class S>
FindimBound findim_bound(const AlgPtr<S>& a, const DirectedStratification<S>& s,
                         const std::map<int, Index>& oracle = {},
                         Index cutoff = kDefaultCutoff, std::uint64_t seed = 0) {
  if (a.get() != s.algebra.get())
    throw InputError("findim_bound: stratification lives over a different algebra");
  const Index n = s.length();
  for (const auto& [pos, val] : oracle) {
    if (pos < 0 || pos >= static_cast<int>(n))
      throw InputError("findim_bound: oracle position " + std::to_string(pos) +
                       " out of range");
    if (val < 0)
      throw InputError("findim_bound: negative oracle value");
  }

  FindimBound out;
  for (Index i = 0; i < n; ++i) {
    StratumDim d;
    d.position = static_cast<int>(i);
    d.label = s.labels[static_cast<size_t>(i)];
    const Vec<S>& e = s.idempotents[static_cast<size_t>(i)];
    if (auto it = oracle.find(static_cast<int>(i)); it != oracle.end()) {
      d.known = true;
      d.value = it->second;
      d.source = DimSource::Oracle;
    } else if (vec_is_zero(e)) {
      // The zero algebra has nothing to resolve.
      d.known = true;
      d.value = 0;
      d.source = DimSource::GlobalDimension;
    } else {
      auto corner = corner_algebra(a, e);
      d.corner_dim = corner.algebra->dim();
      auto cp = primitive_idempotents(corner.algebra, seed);
      auto si = is_self_injective(corner.algebra, cp);
      if (si.yes) {
        d.known = true;
        d.value = 0;
        d.source = DimSource::SelfInjective;
      } else {
        auto gd = gl_dim(corner.algebra, cp, cutoff);
        if (gd.kind == PdKind::Finite) {
          d.known = true;
          d.value = gd.value;
          d.source = DimSource::GlobalDimension;
        }
      }
    }
    if (!d.known) out.unknown_positions.push_back(static_cast<int>(i));
    out.strata.push_back(std::move(d));
  }
  out.known = out.unknown_positions.empty();
  if (out.known) {
    Index sum = 0;
    for (const auto& d : out.strata) sum += d.value;
    out.bound = sum + n - 1;
  }
  return out;
}

struct GldimStratum {
  int position = -1;
  std::string label;
  Index corner_dim = 0;
  PdKind kind = PdKind::Unknown;
  Index value = 0;
};

template <class S> struct GldimBound {
  std::vector<GldimStratum> strata;
  bool bound_known = false;
  Index bound = 0;  // sum of the stratum values plus length minus one
  GlDim<S> algebra;
};

// Global dimension of every corner and of the algebra itself. When all
// corners are finite the combined bound applies, and the definite verdicts
// must be consistent in both directions: finite strata cap the algebra, and
// a finite algebra forbids a certified-infinite stratum.
template <class S>
GldimBound<S> gldim_bound(const AlgPtr<S>& a, const DirectedStratification<S>& s,
                          Index cutoff = kDefaultCutoff, std::uint64_t seed = 0) {
  if (a.get() != s.algebra.get())
    throw InputError("gldim_bound: stratification lives over a different algebra");
  const Index n = s.length();
  GldimBound<S> out;
  bool all_finite = true;
  Index sum = 0;
  for (Index i = 0; i < n; ++i) {
    GldimStratum d;
    d.position = static_cast<int>(i);
    d.label = s.labels[static_cast<size_t>(i)];
    const Vec<S>& e = s.idempotents[static_cast<size_t>(i)];
    if (vec_is_zero(e)) {
      d.kind = PdKind::Finite;
      d.value = 0;
    } else {
      auto corner = corner_algebra(a, e);
      d.corner_dim = corner.algebra->dim();
      auto cp = primitive_idempotents(corner.algebra, seed);
      auto gd = gl_dim(corner.algebra, cp, cutoff);
      d.kind = gd.kind;
      d.value = gd.kind == PdKind::Finite ? gd.value : 0;
    }
    if (d.kind != PdKind::Finite) all_finite = false;
    else sum += d.value;
    out.strata.push_back(std::move(d));
  }
  if (all_finite) {
    out.bound_known = true;
    out.bound = sum + n - 1;
  }
  out.algebra = gl_dim(a, primitive_idempotents(a, seed), cutoff);

  if (out.bound_known) {
    STRATAKIT_CHECK(out.algebra.kind != PdKind::Infinite,
                    "all strata have finite global dimension but the algebra "
                    "is certified infinite");
    if (out.algebra.kind == PdKind::Finite)
      STRATAKIT_CHECK(out.algebra.value <= out.bound,
                      "global dimension exceeds the stratified bound");
  }
  if (out.algebra.kind == PdKind::Finite)
    for (const auto& d : out.strata)
      STRATAKIT_CHECK(d.kind != PdKind::Infinite,
                      "the algebra has finite global dimension but a stratum "
                      "is certified infinite");
  return out;
}

enum class RecollementStatus { Pass, Fail, Inconclusive };

// One indecomposable-class summand of the quotient as a left module, with
// its projective dimension.
template <class S> struct RecollementSummand {
  int cls = -1;
  std::string label;
  Index dim = 0;
  ProjDim<S> pd;
};

template <class S> struct RecollementReport {
  Index j_dim = 0;
  Index b_dim = 0;
  ProjDim<S> left_pd, right_pd;
  std::vector<HomologyDim> left_ext, right_ext;  // degrees 1..cutoff
  std::vector<RecollementSummand<S>> left_summands;
  RecollementStatus status = RecollementStatus::Inconclusive;
  std::string failing;
};

// The two homological conditions for the quotient functor to sit in a
// recollement with the corner at e: B = A / A(1-e)A needs finite projective
// dimension over A and no self-extensions in positive degrees, on both
// sides. The left side is decomposed into class summands so a failure can
// point at the summand responsible.
template <class S>
RecollementReport<S> recollement_condition_check(const AlgPtr<S>& a,
                                                 const Vec<S>& e,
                                                 Index cutoff = kDefaultCutoff,
                                                 std::uint64_t seed = 0) {
  if (e.size() != a->dim())
    throw InputError("recollement_condition_check: element dimension mismatch");
  if (!vec_equal(densify_vec(a->mul(e, e)), e))
    throw InputError(
        "recollement_condition_check: the element is not idempotent");
  const FieldSpec fs = a->field;

  RecollementReport<S> out;
  Vec<S> f = densify_vec(a->unit - e);
  Subspace<S> j = vec_is_zero(f) ? Subspace<S>(fs, a->dim())
                                 : ideal_generated_by(*a, {f});
  out.j_dim = j.dim();
  if (j.dim() == a->dim()) {
    // B = 0: both conditions hold with nothing to resolve.
    out.left_pd = ProjDim<S>{PdKind::Finite, 0, nullptr};
    out.right_pd = out.left_pd;
    out.left_ext.assign(static_cast<size_t>(cutoff), HomologyDim{true, 0});
    out.right_ext = out.left_ext;
    out.status = RecollementStatus::Pass;
    return out;
  }

  auto prims = primitive_idempotents(a, seed);
  auto ql = quotient_algebra(a, j);
  out.b_dim = ql.algebra->dim();
  FModule<S> b_left = inflate(ql, regular_module(ql.algebra));

  // An infinite projective dimension already decides failure, and its corner
  // certificate needs no resolution. When that cheap route fires, a shallow
  // resolution still supplies low-degree self-extension evidence without
  // paying for the full cutoff on a growing complex; the deeper degrees are
  // reported unknown.
  const Index evidence_depth = std::min<Index>(cutoff, 4);
  auto fill_side = [&](const FModule<S>& bmod, const Primitives<S>& pr,
                       ProjDim<S>& pd_out, std::vector<HomologyDim>& ext_out) {
    auto quick = detail::try_corner_infinite(bmod, pr, cutoff, 0);
    const Index depth = quick ? evidence_depth : cutoff;
    auto res = minimal_resolution(bmod, pr, depth, true);
    pd_out = quick ? *quick : detail::proj_dim_with(bmod, res, pr, cutoff);
    auto sweep = ext_sweep(res, bmod, depth);
    ext_out.assign(sweep.begin() + 1, sweep.end());
    ext_out.resize(static_cast<size_t>(cutoff), HomologyDim{false, 0});
  };
  fill_side(b_left, prims, out.left_pd, out.left_ext);

  // The left quotient splits into class summands B*ebar_c; their projective
  // dimensions locate a failure precisely.
  const Index nc = static_cast<Index>(prims.class_rep.size());
  for (Index c = 0; c < nc; ++c) {
    Vec<S> esum = a->zero_vec();
    for (size_t k = 0; k < prims.idempotents.size(); ++k)
      if (prims.cls[k] == static_cast<int>(c))
        esum = densify_vec(esum + prims.idempotents[k]);
    Vec<S> ebar = densify_vec(ql.project * esum);
    if (vec_is_zero(ebar)) continue;
    Subspace<S> space =
        Subspace<S>::span_of(ql.algebra->right_mul(ebar), fs);
    if (space.dim() == 0) continue;
    auto sl = submodule(b_left, space);
    RecollementSummand<S> sm;
    sm.cls = static_cast<int>(c);
    sm.label = prims.class_labels[static_cast<size_t>(c)];
    sm.dim = sl.module.dim();
    sm.pd = proj_dim(sl.module, prims, cutoff);
    out.left_summands.push_back(std::move(sm));
  }

  auto aop = opposite_algebra(a);
  auto prims_op = primitive_idempotents(aop, seed);
  // The same subspace is a two-sided ideal of the opposite, so the right
  // side runs through the identical machinery.
  auto qlop = quotient_algebra(aop, j);
  FModule<S> b_right = inflate(qlop, regular_module(qlop.algebra));
  auto res_right = minimal_resolution(b_right, prims_op, cutoff, true);
  out.right_pd = detail::proj_dim_with(b_right, res_right, prims_op, cutoff);
  {
    auto sweep = ext_sweep(res_right, b_right, cutoff);
    out.right_ext.assign(sweep.begin() + 1, sweep.end());
  }

  auto first_infinite_summand = [&]() -> const RecollementSummand<S>* {
    for (const auto& sm : out.left_summands)
      if (sm.pd.kind == PdKind::Infinite) return &sm;
    return nullptr;
  };
  if (out.left_pd.kind == PdKind::Infinite) {
    out.status = RecollementStatus::Fail;
    out.failing =
        "the quotient has infinite projective dimension as a left module";
    if (const auto* sm = first_infinite_summand())
      out.failing += ", witnessed by the summand at class " + sm->label;
    return out;
  }
  if (out.right_pd.kind == PdKind::Infinite) {
    out.status = RecollementStatus::Fail;
    out.failing =
        "the quotient has infinite projective dimension as a right module";
    return out;
  }
  for (size_t d = 0; d < out.left_ext.size(); ++d)
    if (out.left_ext[d].known && out.left_ext[d].dim != 0) {
      out.status = RecollementStatus::Fail;
      out.failing = "left self-extensions survive in degree " +
                    std::to_string(d + 1);
      return out;
    }
  for (size_t d = 0; d < out.right_ext.size(); ++d)
    if (out.right_ext[d].known && out.right_ext[d].dim != 0) {
      out.status = RecollementStatus::Fail;
      out.failing = "right self-extensions survive in degree " +
                    std::to_string(d + 1);
      return out;
    }
  bool definite = out.left_pd.kind == PdKind::Finite &&
                  out.right_pd.kind == PdKind::Finite;
  for (const auto& h : out.left_ext)
    if (!h.known) definite = false;
  for (const auto& h : out.right_ext)
    if (!h.known) definite = false;
  out.status =
      definite ? RecollementStatus::Pass : RecollementStatus::Inconclusive;
  if (!definite)
    out.failing = "open where the resolutions ran past the cutoff";
  return out;
}

// The four-part obstruction at a parallel pair p, q: anything composed after
// p dies, anything composed before q dies, the cyclic module A q has finite
// projective dimension, and the simple top at the shared target does not.
// When all four hold, no minimal right approximation of the target's
// projective can exist.
template <class S> struct ObstructionReport {
  int source_object = -1;
  int target_object = -1;
  Index rad_p_dim = 0;  // dim rad * p
  Index q_rad_dim = 0;  // dim q * rad
  bool rad_annihilates_p = false;
  bool q_annihilates_rad = false;
  ProjDim<S> cyclic_pd;  // of A q
  ProjDim<S> top_pd;     // of the top of A 1_target
  bool cyclic_finite = false;
  bool top_infinite = false;
  bool present = false;
};

template <class S>
ObstructionReport<S> contravariant_finiteness_obstruction(
    const AlgPtr<S>& a, const Vec<S>& p, const Vec<S>& q,
    Index cutoff = kDefaultCutoff, std::uint64_t seed = 0) {
  if (p.size() != a->dim() || q.size() != a->dim())
    throw InputError(
        "contravariant_finiteness_obstruction: element dimension mismatch");
  if (vec_is_zero(p) || vec_is_zero(q))
    throw InputError("contravariant_finiteness_obstruction: zero element");
  auto pe = detail::endpoints(*a, p);
  auto qe = detail::endpoints(*a, q);
  if (!pe || !qe)
    throw NotParallelError(
        "contravariant_finiteness_obstruction: an element mixes object "
        "components");
  if (*pe != *qe)
    throw NotParallelError(
        "contravariant_finiteness_obstruction: the elements do not share "
        "endpoints");
  if (vec_equal(densify_vec(p), densify_vec(q)))
    throw InputError(
        "contravariant_finiteness_obstruction: the elements coincide");
  if (!a->radical.contains(densify_vec(q)))
    throw InputError(
        "contravariant_finiteness_obstruction: the second element must have "
        "positive length");
  const FieldSpec fs = a->field;

  ObstructionReport<S> out;
  out.source_object = pe->first;
  out.target_object = pe->second;

  const Subspace<S>& rad = a->radical;
  SpanBuilder<S> rp(fs, a->dim()), qr(fs, a->dim());
  for (Index c = 0; c < rad.dim(); ++c) {
    Vec<S> r = densify_vec(rad.basis().col(c));
    rp.add(a->mul(r, p));
    qr.add(a->mul(q, r));
  }
  out.rad_p_dim = rp.finish().dim();
  out.q_rad_dim = qr.finish().dim();
  out.rad_annihilates_p = out.rad_p_dim == 0;
  out.q_annihilates_rad = out.q_rad_dim == 0;

  auto prims = primitive_idempotents(a, seed);
  auto aq = submodule(regular_module(a),
                      Subspace<S>::span_of(a->right_mul(q), fs));
  out.cyclic_pd = proj_dim(aq.module, prims, cutoff);
  out.cyclic_finite = out.cyclic_pd.kind == PdKind::Finite;

  auto pt = projective_at(a, a->object_idem(out.target_object));
  auto tr = top_and_radical(pt.module);
  out.top_pd = proj_dim(tr.top, prims, cutoff);
  out.top_infinite = out.top_pd.kind == PdKind::Infinite;

  out.present = out.rad_annihilates_p && out.q_annihilates_rad &&
                out.cyclic_finite && out.top_infinite;
  return out;
}

}  // namespace stratakit
