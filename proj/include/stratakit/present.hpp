// Building concrete algebras from presentations: quivers with relations
// (filtered leading-term elimination over the path basis) and finite
// one-way categories given by an explicit composition table.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "stratakit/algebra.hpp"
#include "stratakit/quiver.hpp"
#include "stratakit/radical.hpp"

namespace stratakit {

// One summand of a relation: coefficient times a path, the path given by
// arrow indices in application order.
struct RelationTerm {
  long long num = 1;
  long long den = 1;
  std::vector<int> arrows;
};

struct Relation {
  std::vector<RelationTerm> terms;
};

struct PathPresentation {
  Quiver quiver;
  std::vector<Relation> relations;
};

template <class S> struct PathAlgebraBuild {
  AlgPtr<S> algebra;
  Quiver quiver;
  std::vector<Path> basis_paths;  // parallel to the algebra basis
  bool homogeneous = false;       // all relations length-homogeneous
  int degree_reached = 0;
  int arrow_nilpotency = 1;       // smallest L with (arrow ideal)^L = 0
};

namespace detail {

// Sparse element of the path space: path id -> coefficient, ids ascending.
// The id order (length, then label sequence) is multiplication compatible,
// so the leading term of u*r*v is u*lead(r)*v.
template <class S> using PathRow = std::map<int, S>;

template <class S>
PathRow<S> path_normal_form(PathRow<S> x,
                            const std::map<int, PathRow<S>>& table) {
  PathRow<S> out;
  while (!x.empty()) {
    auto it = std::prev(x.end());
    if (is_zero(it->second)) { x.erase(it); continue; }
    int lead = it->first;
    S c = it->second;
    auto t = table.find(lead);
    if (t == table.end()) {
      out[lead] = c;
      x.erase(it);
      continue;
    }
    for (const auto& [id, tc] : t->second) {
      auto slot = x.find(id);
      if (slot == x.end()) {
        x[id] = -(c * tc);
        if (is_zero(x[id])) x.erase(id);
      } else {
        slot->second -= c * tc;
        if (is_zero(slot->second)) x.erase(slot);
      }
    }
  }
  return out;
}

}  // namespace detail

// Quotient of the path algebra kQ / <relations>. Works degree by degree:
// all ideal elements u*r*v with leading length d are echelonized against the
// accumulated table, and the loop closes once a degree produces no new basis
// path, the registry covers twice the longest surviving path (so products of
// basis paths reduce), and no reduction fell below the current degree. The
// procedure is exact for length-homogeneous relations; in general the result
// is certified after the fact by the structural validation.
template <class S>
PathAlgebraBuild<S> path_algebra(const PathPresentation& pres,
                                 const FieldSpec& fs) {
  const Quiver& qv = pres.quiver;
  qv.validate();
  const int nv = static_cast<int>(qv.vertices.size());

  // Validate relations: each term a composable arrow chain of length >= 2,
  // all terms of one relation parallel, nonzero after coefficient merging.
  struct PreppedRelation {
    std::vector<std::pair<S, Path>> terms;
    int src = -1, tgt = -1, lead_len = 0;
  };
  std::vector<PreppedRelation> rels;
  bool homogeneous = true;
  for (const Relation& r : pres.relations) {
    PreppedRelation pr;
    std::map<std::vector<int>, S> merged;
    for (const RelationTerm& t : r.terms) {
      if (t.arrows.size() < 2)
        throw InputError("relation term shorter than two arrows");
      for (std::size_t i = 0; i < t.arrows.size(); ++i) {
        int a = t.arrows[i];
        if (a < 0 || a >= static_cast<int>(qv.arrows.size()))
          throw InputError("relation term uses an unknown arrow");
        if (i > 0 && qv.arrows[static_cast<size_t>(t.arrows[i - 1])].tgt !=
                         qv.arrows[static_cast<size_t>(a)].src)
          throw InputError("relation term is not a composable arrow chain");
      }
      int s = qv.arrows[static_cast<size_t>(t.arrows.front())].src;
      int g = qv.arrows[static_cast<size_t>(t.arrows.back())].tgt;
      if (pr.src < 0) { pr.src = s; pr.tgt = g; }
      else if (pr.src != s || pr.tgt != g)
        throw InputError("relation mixes non-parallel paths");
      S c = scalar_from_ratio<S>(fs, t.num, t.den);
      auto [it, fresh] = merged.try_emplace(t.arrows, c);
      if (!fresh) it->second += c;
    }
    std::size_t len0 = 0;
    bool first = true;
    for (const auto& [arrs, c] : merged) {
      if (is_zero(c)) continue;
      Path p;
      p.source = qv.arrows[static_cast<size_t>(arrs.front())].src;
      p.arrows = arrs;
      pr.terms.push_back({c, p});
      pr.lead_len = std::max(pr.lead_len, p.length());
      if (first) { len0 = arrs.size(); first = false; }
      else if (arrs.size() != len0) homogeneous = false;
    }
    if (pr.terms.empty())
      throw InputError("relation vanishes over " + fs.label());
    rels.push_back(std::move(pr));
  }

  // Path registry, ids in (length, label-sequence) order.
  std::vector<Path> paths;
  std::map<std::vector<int>, int> path_id;  // key: {source, arrows...}
  std::vector<std::vector<int>> ids_of_len;
  auto key_of = [](const Path& p) {
    std::vector<int> k{p.source};
    k.insert(k.end(), p.arrows.begin(), p.arrows.end());
    return k;
  };
  auto register_degree = [&](int d) {
    std::vector<Path> batch;
    if (d == 0) {
      for (int v = 0; v < nv; ++v) batch.push_back(Path{v, {}});
      std::sort(batch.begin(), batch.end(), [&](const Path& a, const Path& b) {
        return qv.vertices[static_cast<size_t>(a.source)] <
               qv.vertices[static_cast<size_t>(b.source)];
      });
    } else {
      for (int id : ids_of_len[static_cast<size_t>(d - 1)]) {
        const Path& p = paths[static_cast<size_t>(id)];
        int end = p.target(qv);
        for (int a = 0; a < static_cast<int>(qv.arrows.size()); ++a) {
          if (qv.arrows[static_cast<size_t>(a)].src != end) continue;
          Path ext = p;
          ext.arrows.push_back(a);
          batch.push_back(std::move(ext));
        }
      }
      std::sort(batch.begin(), batch.end(), [&](const Path& a, const Path& b) {
        for (int i = 0; i < d; ++i) {
          const std::string& la =
              qv.arrows[static_cast<size_t>(a.arrows[static_cast<size_t>(i)])].label;
          const std::string& lb =
              qv.arrows[static_cast<size_t>(b.arrows[static_cast<size_t>(i)])].label;
          if (la != lb) return la < lb;
        }
        return false;
      });
    }
    ids_of_len.push_back({});
    for (Path& p : batch) {
      int id = static_cast<int>(paths.size());
      path_id.emplace(key_of(p), id);
      ids_of_len.back().push_back(id);
      paths.push_back(std::move(p));
      if (paths.size() > 500000)
        throw InputError("path registry exceeded 500000 entries; "
                         "the relations do not confine the path algebra");
    }
  };
  register_degree(0);
  register_degree(1);

  // Leading-term table over the filtered path basis.
  std::map<int, detail::PathRow<S>> table;
  auto insert_row = [&](detail::PathRow<S> row) -> std::optional<int> {
    row = detail::path_normal_form(std::move(row), table);
    if (row.empty()) return std::nullopt;
    int lead = std::prev(row.end())->first;
    S inv = S(1) / std::prev(row.end())->second;
    for (auto& [id, c] : row) c *= inv;
    table.emplace(lead, std::move(row));
    return lead;
  };

  int max_lead = 2;
  for (const auto& pr : rels) max_lead = std::max(max_lead, pr.lead_len);
  const int degree_cap = 2 * max_lead * nv + 8;

  int last_survivor_deg = 1;
  if (qv.arrows.empty()) last_survivor_deg = 0;
  int d = 1;
  while (true) {
    ++d;
    if (d > degree_cap)
      throw InputError(
          "relations do not confine the path algebra within degree " +
          std::to_string(degree_cap));
    register_degree(d);
    bool short_row = false;
    for (const auto& pr : rels) {
      int rest = d - pr.lead_len;
      if (rest < 0) continue;
      for (int ulen = 0; ulen <= rest; ++ulen) {
        int vlen = rest - ulen;
        for (int uid : ids_of_len[static_cast<size_t>(ulen)]) {
          const Path& u = paths[static_cast<size_t>(uid)];
          if (u.source != pr.tgt) continue;
          for (int vid : ids_of_len[static_cast<size_t>(vlen)]) {
            const Path& v = paths[static_cast<size_t>(vid)];
            if (v.target(qv) != pr.src) continue;
            detail::PathRow<S> row;
            for (const auto& [c, t] : pr.terms) {
              Path w;
              w.source = v.source;
              w.arrows = v.arrows;
              w.arrows.insert(w.arrows.end(), t.arrows.begin(),
                              t.arrows.end());
              w.arrows.insert(w.arrows.end(), u.arrows.begin(),
                              u.arrows.end());
              auto it = path_id.find(key_of(w));
              STRATAKIT_CHECK(it != path_id.end(),
                              "path algebra: unregistered product path");
              auto [slot, fresh] = row.try_emplace(it->second, c);
              if (!fresh) slot->second += c;
            }
            auto lead = insert_row(std::move(row));
            if (lead &&
                paths[static_cast<size_t>(*lead)].length() < d)
              short_row = true;
          }
        }
      }
    }
    int survivors = 0;
    for (int id : ids_of_len[static_cast<size_t>(d)])
      if (!table.count(id)) ++survivors;
    if (survivors > 0) last_survivor_deg = d;
    if (survivors == 0 && !short_row && d >= 2 * last_survivor_deg) break;
  }

  // Surviving paths form the basis, in id order.
  std::vector<int> normal_ids;
  std::vector<int> basis_index(paths.size(), -1);
  for (int id = 0; id < static_cast<int>(paths.size()); ++id) {
    if (table.count(id)) continue;
    if (paths[static_cast<size_t>(id)].length() > last_survivor_deg) continue;
    basis_index[static_cast<size_t>(id)] = static_cast<int>(normal_ids.size());
    normal_ids.push_back(id);
  }
  for (int id = 0; id < static_cast<int>(paths.size()); ++id)
    STRATAKIT_CHECK(
        table.count(id) ||
            paths[static_cast<size_t>(id)].length() <= last_survivor_deg,
        "path algebra: unreduced path beyond the surviving degree");

  const Index n = static_cast<Index>(normal_ids.size());
  Algebra<S> alg;
  alg.field = fs;
  alg.kind = "path";
  for (int id : normal_ids)
    alg.basis_names.push_back(paths[static_cast<size_t>(id)].label(qv));

  auto coords_of_row = [&](const detail::PathRow<S>& row) {
    Vec<S> out = vec_zero<S>(fs, n);
    for (const auto& [id, c] : row) {
      int b = basis_index[static_cast<size_t>(id)];
      STRATAKIT_CHECK(b >= 0, "path algebra: normal form hit a dead path");
      out(b) = c;
    }
    return out;
  };

  // Structure constants: concatenate basis paths and reduce.
  for (Index i = 0; i < n; ++i) {
    const Path& p =
        paths[static_cast<size_t>(normal_ids[static_cast<size_t>(i)])];
    Mat<S> L = mat_zero<S>(fs, n, n);
    for (Index j = 0; j < n; ++j) {
      const Path& q =
          paths[static_cast<size_t>(normal_ids[static_cast<size_t>(j)])];
      if (q.target(qv) != p.source) continue;
      Path w = compose(qv, p, q);
      auto it = path_id.find(key_of(w));
      STRATAKIT_CHECK(it != path_id.end(),
                      "path algebra: basis product not registered");
      detail::PathRow<S> row{{it->second, S(1)}};
      L.col(j) = coords_of_row(
          detail::path_normal_form(std::move(row), table));
    }
    alg.lmul.push_back(std::move(L));
  }

  // Unit and object idempotents from the trivial paths.
  alg.unit = vec_zero<S>(fs, n);
  std::vector<Vec<S>> obj_cols;
  for (int v = 0; v < nv; ++v) {
    Path triv{v, {}};
    auto it = path_id.find(key_of(triv));
    STRATAKIT_CHECK(it != path_id.end(), "path algebra: missing trivial path");
    int b = basis_index[static_cast<size_t>(it->second)];
    STRATAKIT_CHECK(b >= 0, "path algebra: trivial path was eliminated");
    alg.objects.push_back(qv.vertices[static_cast<size_t>(v)]);
    Vec<S> col = vec_unit<S>(fs, n, b);
    obj_cols.push_back(col);
    alg.unit += col;
  }
  alg.object_idempotents = cols_from(obj_cols, fs, n);

  // Every relation must vanish in the quotient.
  for (const auto& pr : rels) {
    detail::PathRow<S> row;
    for (const auto& [c, t] : pr.terms) {
      auto it = path_id.find(key_of(t));
      STRATAKIT_CHECK(it != path_id.end(), "path algebra: lost relation term");
      auto [slot, fresh] = row.try_emplace(it->second, c);
      if (!fresh) slot->second += c;
    }
    STRATAKIT_CHECK(detail::path_normal_form(std::move(row), table).empty(),
                    "path algebra: a relation does not vanish");
  }

  // For length-homogeneous relations the non-trivial survivors span a
  // nilpotent ideal with semisimple quotient k^Q0; hand it to the finalizer
  // for certification. Otherwise the radical is computed from scratch.
  std::optional<Subspace<S>> rad;
  if (homogeneous) {
    SpanBuilder<S> sb(fs, n);
    for (Index i = 0; i < n; ++i)
      if (paths[static_cast<size_t>(normal_ids[static_cast<size_t>(i)])]
              .length() > 0)
        sb.add(vec_unit<S>(fs, n, i));
    rad = sb.finish();
  }

  PathAlgebraBuild<S> out;
  out.quiver = qv;
  for (int id : normal_ids) out.basis_paths.push_back(paths[static_cast<size_t>(id)]);
  out.homogeneous = homogeneous;
  out.degree_reached = d;
  out.arrow_nilpotency = last_survivor_deg + 1;
  out.algebra = finalize_algebra(std::move(alg), std::move(rad));
  return out;
}

// ---------------------------------------------------------------------------
// Finite one-way categories from an explicit composition table.

struct EIMorphism {
  std::string label;
  int src = -1;
  int tgt = -1;
};

struct EIPresentation {
  std::vector<std::string> objects;
  std::vector<EIMorphism> morphisms;
  std::vector<int> identity_of;                // object -> morphism index
  std::map<std::pair<int, int>, int> compose;  // (i, j) -> i after j
};

template <class S> struct EIAlgebraBuild {
  AlgPtr<S> algebra;
  std::vector<int> basis_morphism;  // basis index -> presentation index
  std::vector<int> object_order;    // algebra object -> presentation object
};

// Category algebra of a finite skeletal category whose endomorphisms are all
// invertible. Morphisms form the basis; the product of two basis elements is
// their composite when defined and zero otherwise. Objects are ordered
// topologically (sources first), which is the order the stratification
// machinery wants.
template <class S>
EIAlgebraBuild<S> ei_algebra(const EIPresentation& pres, const FieldSpec& fs) {
  const int no = static_cast<int>(pres.objects.size());
  const int nm = static_cast<int>(pres.morphisms.size());
  if (no == 0) throw InputError("category with no objects");
  {
    std::set<std::string> seen;
    for (const auto& ob : pres.objects) {
      if (ob.empty()) throw InputError("empty object label");
      if (!seen.insert(ob).second)
        throw InputError("duplicate object label: " + ob);
    }
    seen.clear();
    for (const auto& m : pres.morphisms) {
      if (m.label.empty()) throw InputError("empty morphism label");
      if (!seen.insert(m.label).second)
        throw InputError("duplicate morphism label: " + m.label);
      if (m.src < 0 || m.src >= no || m.tgt < 0 || m.tgt >= no)
        throw InputError("morphism endpoint out of range: " + m.label);
    }
  }
  if (static_cast<int>(pres.identity_of.size()) != no)
    throw InputError("identity table size mismatch");
  for (int ob = 0; ob < no; ++ob) {
    int id = pres.identity_of[static_cast<size_t>(ob)];
    if (id < 0 || id >= nm) throw InputError("identity index out of range");
    if (pres.morphisms[static_cast<size_t>(id)].src != ob ||
        pres.morphisms[static_cast<size_t>(id)].tgt != ob)
      throw InputError("identity morphism endpoints mismatch object " +
                       pres.objects[static_cast<size_t>(ob)]);
  }

  auto lookup = [&](int i, int j) {
    auto it = pres.compose.find({i, j});
    if (it == pres.compose.end())
      throw InputError("composition table missing " +
                       pres.morphisms[static_cast<size_t>(i)].label + " after " +
                       pres.morphisms[static_cast<size_t>(j)].label);
    return it->second;
  };

  // Table totality, endpoint coherence, stray entries.
  for (const auto& [key, val] : pres.compose) {
    auto [i, j] = key;
    if (i < 0 || i >= nm || j < 0 || j >= nm || val < 0 || val >= nm)
      throw InputError("composition table index out of range");
    const auto& mi = pres.morphisms[static_cast<size_t>(i)];
    const auto& mj = pres.morphisms[static_cast<size_t>(j)];
    if (mj.tgt != mi.src)
      throw InputError("composition table entry for a non-composable pair");
    const auto& mk = pres.morphisms[static_cast<size_t>(val)];
    if (mk.src != mj.src || mk.tgt != mi.tgt)
      throw InputError("composite endpoints mismatch for " + mi.label +
                       " after " + mj.label);
  }
  for (int i = 0; i < nm; ++i)
    for (int j = 0; j < nm; ++j)
      if (pres.morphisms[static_cast<size_t>(j)].tgt ==
          pres.morphisms[static_cast<size_t>(i)].src)
        (void)lookup(i, j);

  // Identity laws and associativity straight off the table.
  for (int i = 0; i < nm; ++i) {
    const auto& m = pres.morphisms[static_cast<size_t>(i)];
    if (lookup(pres.identity_of[static_cast<size_t>(m.tgt)], i) != i ||
        lookup(i, pres.identity_of[static_cast<size_t>(m.src)]) != i)
      throw InputError("identity law fails at " + m.label);
  }
  for (int i = 0; i < nm; ++i)
    for (int j = 0; j < nm; ++j) {
      const auto& mi = pres.morphisms[static_cast<size_t>(i)];
      const auto& mj = pres.morphisms[static_cast<size_t>(j)];
      if (mj.tgt != mi.src) continue;
      int ij = lookup(i, j);
      for (int k = 0; k < nm; ++k) {
        const auto& mk = pres.morphisms[static_cast<size_t>(k)];
        if (mk.tgt != mj.src) continue;
        if (lookup(ij, k) != lookup(i, lookup(j, k)))
          throw InputError("composition is not associative at (" + mi.label +
                           ", " + mj.label + ", " +
                           pres.morphisms[static_cast<size_t>(k)].label + ")");
      }
    }

  // Every endomorphism must be invertible.
  for (int i = 0; i < nm; ++i) {
    const auto& m = pres.morphisms[static_cast<size_t>(i)];
    if (m.src != m.tgt) continue;
    int id = pres.identity_of[static_cast<size_t>(m.src)];
    bool invertible = false;
    for (int j = 0; j < nm && !invertible; ++j) {
      const auto& mj = pres.morphisms[static_cast<size_t>(j)];
      if (mj.src != m.src || mj.tgt != m.src) continue;
      if (lookup(i, j) == id && lookup(j, i) == id) invertible = true;
    }
    if (!invertible)
      throw InputError("endomorphism " + m.label +
                       " is not invertible; the category is not one-way");
  }

  // One-way between distinct objects.
  std::vector<std::vector<bool>> hom(static_cast<size_t>(no),
                                     std::vector<bool>(no, false));
  for (const auto& m : pres.morphisms)
    hom[static_cast<size_t>(m.src)][static_cast<size_t>(m.tgt)] = true;
  for (int x = 0; x < no; ++x)
    for (int y = x + 1; y < no; ++y)
      if (hom[static_cast<size_t>(x)][static_cast<size_t>(y)] &&
          hom[static_cast<size_t>(y)][static_cast<size_t>(x)])
        throw InputError("objects " + pres.objects[static_cast<size_t>(x)] +
                         " and " + pres.objects[static_cast<size_t>(y)] +
                         " map to each other; the category is not one-way");

  // Topological object order, sources first, smallest label on ties.
  std::vector<int> order;
  {
    std::vector<int> indeg(static_cast<size_t>(no), 0);
    for (int x = 0; x < no; ++x)
      for (int y = 0; y < no; ++y)
        if (x != y && hom[static_cast<size_t>(x)][static_cast<size_t>(y)])
          ++indeg[static_cast<size_t>(y)];
    std::vector<bool> done(static_cast<size_t>(no), false);
    for (int step = 0; step < no; ++step) {
      int pick = -1;
      for (int x = 0; x < no; ++x) {
        if (done[static_cast<size_t>(x)] || indeg[static_cast<size_t>(x)] > 0)
          continue;
        if (pick < 0 || pres.objects[static_cast<size_t>(x)] <
                            pres.objects[static_cast<size_t>(pick)])
          pick = x;
      }
      STRATAKIT_CHECK(pick >= 0, "object order: cycle survived validation");
      done[static_cast<size_t>(pick)] = true;
      order.push_back(pick);
      for (int y = 0; y < no; ++y)
        if (y != pick && hom[static_cast<size_t>(pick)][static_cast<size_t>(y)])
          --indeg[static_cast<size_t>(y)];
    }
  }
  std::vector<int> pos(static_cast<size_t>(no), -1);
  for (int i = 0; i < no; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;

  // Basis order: identities first (object order), then by source position,
  // target position, label.
  std::vector<int> basis;  // presentation morphism indices
  std::vector<bool> is_id(static_cast<size_t>(nm), false);
  for (int ob : order)
    basis.push_back(pres.identity_of[static_cast<size_t>(ob)]);
  for (int b : basis) is_id[static_cast<size_t>(b)] = true;
  std::vector<int> rest;
  for (int i = 0; i < nm; ++i)
    if (!is_id[static_cast<size_t>(i)]) rest.push_back(i);
  std::sort(rest.begin(), rest.end(), [&](int a, int b) {
    const auto& ma = pres.morphisms[static_cast<size_t>(a)];
    const auto& mb = pres.morphisms[static_cast<size_t>(b)];
    int ka = pos[static_cast<size_t>(ma.src)], kb = pos[static_cast<size_t>(mb.src)];
    if (ka != kb) return ka < kb;
    ka = pos[static_cast<size_t>(ma.tgt)]; kb = pos[static_cast<size_t>(mb.tgt)];
    if (ka != kb) return ka < kb;
    return ma.label < mb.label;
  });
  basis.insert(basis.end(), rest.begin(), rest.end());
  std::vector<int> bidx(static_cast<size_t>(nm), -1);
  for (int i = 0; i < nm; ++i) bidx[static_cast<size_t>(basis[static_cast<size_t>(i)])] = i;

  Algebra<S> alg;
  alg.field = fs;
  alg.kind = "ei";
  const Index n = static_cast<Index>(nm);
  for (int b : basis)
    alg.basis_names.push_back(pres.morphisms[static_cast<size_t>(b)].label);
  for (int bi = 0; bi < nm; ++bi) {
    int i = basis[static_cast<size_t>(bi)];
    const auto& mi = pres.morphisms[static_cast<size_t>(i)];
    Mat<S> L = mat_zero<S>(fs, n, n);
    for (int bj = 0; bj < nm; ++bj) {
      int j = basis[static_cast<size_t>(bj)];
      if (pres.morphisms[static_cast<size_t>(j)].tgt != mi.src) continue;
      L(bidx[static_cast<size_t>(lookup(i, j))], bj) = S(1);
    }
    alg.lmul.push_back(std::move(L));
  }
  alg.unit = vec_zero<S>(fs, n);
  std::vector<Vec<S>> obj_cols;
  for (int k = 0; k < no; ++k) {
    int ob = order[static_cast<size_t>(k)];
    alg.objects.push_back(pres.objects[static_cast<size_t>(ob)]);
    Vec<S> col = vec_unit<S>(
        fs, n,
        bidx[static_cast<size_t>(pres.identity_of[static_cast<size_t>(ob)])]);
    obj_cols.push_back(col);
    alg.unit += col;
  }
  alg.object_idempotents = cols_from(obj_cols, fs, n);

  EIAlgebraBuild<S> out;
  out.basis_morphism = basis;
  out.object_order = order;
  out.algebra = finalize_algebra(std::move(alg));
  return out;
}

}  // namespace stratakit
