// Seeded generators shared by the strata property tests and the acceptance
// run: random acyclic quivers with monomial relations, random algebras that
// admit nontrivial stratifications, and random modules over them. Everything
// is deterministic in the Rng state.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stratakit/present.hpp"
#include "stratakit/strata.hpp"
#include "testutil.hpp"

namespace testutil {

using stratakit::AlgPtr;
using stratakit::DirectedStratification;
using stratakit::FModule;
using stratakit::Index;
using stratakit::PathAlgebraBuild;
using stratakit::Primitives;
using stratakit::Subspace;

// Random acyclic quiver: arrows only run from a smaller to a larger vertex,
// so the vertex order is already topological.
inline Quiver random_acyclic_quiver(Rng& rng, int max_vertices,
                                    int max_arrows) {
  const int nv = static_cast<int>(rng.range(2, max_vertices));
  Quiver q;
  for (int v = 1; v <= nv; ++v) q.vertices.push_back(std::to_string(v));
  const int na = static_cast<int>(rng.range(0, max_arrows));
  for (int t = 0; t < na; ++t) {
    int s = static_cast<int>(rng.below(static_cast<std::uint64_t>(nv)));
    int d = static_cast<int>(rng.below(static_cast<std::uint64_t>(nv)));
    if (s == d) continue;
    if (s > d) std::swap(s, d);
    q.arrows.push_back({"a" + std::to_string(t), s, d});
  }
  return q;
}

// About a third of the composable arrow pairs, as monomial relations. Paths
// of length two are always admissible.
inline std::vector<Relation> random_monomial_relations(Rng& rng,
                                                       const Quiver& q) {
  std::vector<Relation> rels;
  const int na = static_cast<int>(q.arrows.size());
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      if (q.arrows[static_cast<size_t>(i)].tgt !=
          q.arrows[static_cast<size_t>(j)].src)
        continue;
      if (rng.below(3) != 0) continue;
      rels.push_back(Relation{{RelationTerm{1, 1, {i, j}}}});
    }
  return rels;
}

// Acyclic backbone plus a few nilpotent loops: the loops keep single-vertex
// condensation classes but give the corners nontrivial radicals.
inline PathPresentation random_stratified_presentation(Rng& rng,
                                                       int max_vertices,
                                                       int max_arrows,
                                                       int max_loops) {
  PathPresentation p;
  p.quiver = random_acyclic_quiver(rng, max_vertices, max_arrows);
  const int nv = static_cast<int>(p.quiver.vertices.size());
  p.relations = random_monomial_relations(rng, p.quiver);
  const int nl = static_cast<int>(rng.range(0, max_loops));
  for (int l = 0; l < nl; ++l) {
    const int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(nv)));
    bool taken = false;
    for (const auto& ar : p.quiver.arrows)
      if (ar.src == v && ar.tgt == v) taken = true;
    if (taken) continue;
    const int idx = static_cast<int>(p.quiver.arrows.size());
    p.quiver.arrows.push_back({"x" + std::to_string(l), v, v});
    RelationTerm t;
    t.arrows.assign(static_cast<size_t>(rng.range(2, 3)), idx);
    p.relations.push_back(Relation{{std::move(t)}});
  }
  return p;
}

// Draws presentations until the algebra fits the dimension cap.
template <class S>
PathAlgebraBuild<S> random_stratified_algebra(Rng& rng, const FieldSpec& fs,
                                              Index dim_cap,
                                              int max_vertices = 4,
                                              int max_arrows = 5,
                                              int max_loops = 2) {
  for (;;) {
    auto pres = random_stratified_presentation(rng, max_vertices, max_arrows,
                                               max_loops);
    auto build = stratakit::path_algebra<S>(pres, fs);
    if (build.algebra->dim() <= dim_cap) return build;
  }
}

// The longest stratification the search finds: the lifted condensation
// order, or the trivial one when the condensation has a single class.
template <class S>
DirectedStratification<S> finest_stratification(const AlgPtr<S>& a,
                                                std::uint64_t seed = 0) {
  auto all = stratakit::find_stratifications(a, seed);
  size_t best = 0;
  for (size_t i = 1; i < all.size(); ++i)
    if (all[i].length() > all[best].length()) best = i;
  return all[best];
}

// Random module: a generated submodule of a small random direct sum of
// cyclic projectives, or the quotient by one.
template <class S>
FModule<S> random_module(Rng& rng, const AlgPtr<S>& a,
                         const Primitives<S>& prims, Index dim_cap) {
  const FieldSpec fs = a->field;
  const Index nc = static_cast<Index>(prims.class_rep.size());
  std::vector<stratakit::SubmoduleLink<S>> blocks;
  Index total = 0;
  for (Index c = 0; c < nc; ++c) {
    const Index mult = static_cast<Index>(rng.below(3));
    for (Index k = 0; k < mult; ++k) {
      auto p = stratakit::projective_at(
          a, prims.idempotents[static_cast<size_t>(
                 prims.class_rep[static_cast<size_t>(c)])]);
      if (total + p.module.dim() > dim_cap) break;
      total += p.module.dim();
      blocks.push_back(std::move(p));
    }
  }
  if (blocks.empty()) {
    blocks.push_back(stratakit::projective_at(a, prims.idempotents[0]));
    total = blocks[0].module.dim();
  }
  std::vector<Mat<S>> action;
  for (Index i = 0; i < a->dim(); ++i) {
    Mat<S> act = stratakit::mat_zero<S>(fs, total, total);
    Index off = 0;
    for (const auto& b : blocks) {
      const Index d = b.module.dim();
      act.block(off, off, d, d) = b.module.act_basis(i);
      off += d;
    }
    action.push_back(std::move(act));
  }
  FModule<S> p = stratakit::make_module(a, std::move(action));

  stratakit::SpanBuilder<S> sb(fs, total);
  const int ngen = static_cast<int>(rng.range(0, 2));
  for (int g = 0; g < ngen; ++g) {
    Vec<S> v = stratakit::vec_zero<S>(fs, total);
    for (Index i = 0; i < total; ++i)
      v(i) = stratakit::scalar_from_int<S>(fs, rng.range(-2, 2));
    // The span of all basis actions on v is the submodule v generates,
    // because the identity is a sum of basis idempotents.
    for (Index i = 0; i < a->dim(); ++i)
      sb.add(stratakit::densify_vec(p.act_basis(i) * v));
  }
  Subspace<S> n = sb.finish();
  if (rng.below(2) == 0) return stratakit::submodule(p, n).module;
  return stratakit::quotient_module(p, n).module;
}

}  // namespace testutil
