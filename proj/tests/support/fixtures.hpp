// Shared inputs for the construction and homological test suites: the
// five-vertex quiver with relations, two small one-way categories whose
// behavior differs by characteristic, group algebras given as one-object
// categories, and a few tiny quiver presentations.
#pragma once

#include <string>
#include <vector>

#include "stratakit/present.hpp"
#include "stratakit/quiver.hpp"

namespace testutil {

using stratakit::EIMorphism;
using stratakit::EIPresentation;
using stratakit::PathPresentation;
using stratakit::Quiver;
using stratakit::Relation;
using stratakit::RelationTerm;

// One relation term from arrow labels listed in application order (first
// applied first).
inline RelationTerm term(const Quiver& q, long long num,
                         std::vector<std::string> applied) {
  RelationTerm t;
  t.num = num;
  for (const auto& lbl : applied) t.arrows.push_back(q.arrow_index(lbl));
  return t;
}

inline Relation monomial(const Quiver& q, std::vector<std::string> applied) {
  return Relation{{term(q, 1, std::move(applied))}};
}

// Five vertices in a row with two parallel first arrows, a loop in the
// middle, a commuting square, and a loop at the end.
inline Quiver five_vertex_quiver() {
  Quiver q;
  q.vertices = {"1", "2", "3", "4", "5"};
  q.arrows = {
      {"alpha", 0, 1}, {"beta", 0, 1}, {"gamma", 1, 1},  {"delta1", 1, 2},
      {"eps1", 1, 3},  {"delta2", 2, 4}, {"eps2", 3, 4}, {"rho", 4, 4},
  };
  return q;
}

inline std::vector<Relation> five_vertex_relations(const Quiver& q) {
  std::vector<Relation> rels;
  rels.push_back(monomial(q, {"gamma", "gamma"}));
  rels.push_back(monomial(q, {"beta", "gamma"}));
  rels.push_back(monomial(q, {"beta", "eps1"}));
  rels.push_back(monomial(q, {"beta", "delta1"}));
  rels.push_back(monomial(q, {"gamma", "eps1"}));
  rels.push_back(monomial(q, {"gamma", "delta1"}));
  rels.push_back(Relation{{term(q, 1, {"eps1", "eps2"}),
                           term(q, -1, {"delta1", "delta2"})}});
  rels.push_back(monomial(q, {"eps2", "rho"}));
  rels.push_back(monomial(q, {"delta2", "rho"}));
  rels.push_back(monomial(q, {"rho", "rho", "rho", "rho", "rho"}));
  return rels;
}

inline PathPresentation five_vertex_presentation() {
  PathPresentation p;
  p.quiver = five_vertex_quiver();
  p.relations = five_vertex_relations(p.quiver);
  return p;
}

// Two objects y, x; order-2 automorphism groups on both sides and a single
// arrow class al : y -> x absorbed by both group actions.
inline EIPresentation ei_char2_presentation() {
  EIPresentation c;
  c.objects = {"y", "x"};
  c.morphisms = {{"1y", 0, 0}, {"g", 0, 0}, {"al", 0, 1},
                 {"1x", 1, 1}, {"h", 1, 1}};
  c.identity_of = {0, 3};
  c.compose[{0, 0}] = 0;  // 1y 1y
  c.compose[{0, 1}] = 1;  // 1y g
  c.compose[{1, 0}] = 1;  // g 1y
  c.compose[{1, 1}] = 0;  // g g
  c.compose[{2, 0}] = 2;  // al 1y
  c.compose[{2, 1}] = 2;  // al g
  c.compose[{3, 2}] = 2;  // 1x al
  c.compose[{4, 2}] = 2;  // h al
  c.compose[{3, 3}] = 3;  // 1x 1x
  c.compose[{3, 4}] = 4;  // 1x h
  c.compose[{4, 3}] = 4;  // h 1x
  c.compose[{4, 4}] = 3;  // h h
  return c;
}

// Same shape with a trivial automorphism group at y.
inline EIPresentation ei_remark_presentation() {
  EIPresentation c;
  c.objects = {"y", "x"};
  c.morphisms = {{"1y", 0, 0}, {"al", 0, 1}, {"1x", 1, 1}, {"h", 1, 1}};
  c.identity_of = {0, 2};
  c.compose[{0, 0}] = 0;  // 1y 1y
  c.compose[{1, 0}] = 1;  // al 1y
  c.compose[{2, 1}] = 1;  // 1x al
  c.compose[{3, 1}] = 1;  // h al
  c.compose[{2, 2}] = 2;  // 1x 1x
  c.compose[{2, 3}] = 3;  // 1x h
  c.compose[{3, 2}] = 3;  // h 1x
  c.compose[{3, 3}] = 2;  // h h
  return c;
}

// Cyclic group of order n as a one-object category.
inline EIPresentation cyclic_group_presentation(int n) {
  EIPresentation c;
  c.objects = {"x"};
  for (int i = 0; i < n; ++i)
    c.morphisms.push_back({i == 0 ? "1" : "g" + std::to_string(i), 0, 0});
  c.identity_of = {0};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c.compose[{i, j}] = (i + j) % n;
  return c;
}

// Klein four group: indices compose by xor.
inline EIPresentation klein_four_presentation() {
  EIPresentation c;
  c.objects = {"x"};
  c.morphisms = {{"1", 0, 0}, {"a", 0, 0}, {"b", 0, 0}, {"c", 0, 0}};
  c.identity_of = {0};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c.compose[{i, j}] = i ^ j;
  return c;
}

// One vertex, one loop x, single relation x^power.
inline PathPresentation loop_presentation(int power) {
  PathPresentation p;
  p.quiver.vertices = {"v"};
  p.quiver.arrows = {{"x", 0, 0}};
  p.relations.push_back(
      monomial(p.quiver, std::vector<std::string>(power, "x")));
  return p;
}

// Three vertices in a row with the length-2 path killed.
inline PathPresentation acyclic_a3_presentation() {
  PathPresentation p;
  p.quiver.vertices = {"1", "2", "3"};
  p.quiver.arrows = {{"a", 0, 1}, {"b", 1, 2}};
  p.relations.push_back(monomial(p.quiver, {"a", "b"}));
  return p;
}

}  // namespace testutil
