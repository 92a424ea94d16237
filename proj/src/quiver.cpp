#include "stratakit/quiver.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace stratakit {

int Quiver::vertex_index(const std::string& name) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == name) return static_cast<int>(i);
  return -1;
}

int Quiver::arrow_index(const std::string& name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].label == name) return static_cast<int>(i);
  return -1;
}

void Quiver::validate() const {
  std::set<std::string> seen;
  for (const auto& v : vertices) {
    if (v.empty()) throw InputError("quiver: empty vertex label");
    if (!seen.insert(v).second)
      throw InputError("quiver: duplicate vertex label '" + v + "'");
  }
  std::set<std::string> aseen;
  const int n = static_cast<int>(vertices.size());
  for (const auto& a : arrows) {
    if (a.label.empty()) throw InputError("quiver: empty arrow label");
    if (!aseen.insert(a.label).second)
      throw InputError("quiver: duplicate arrow label '" + a.label + "'");
    if (seen.count(a.label))
      throw InputError("quiver: label '" + a.label +
                       "' used for both a vertex and an arrow");
    if (a.src < 0 || a.src >= n || a.tgt < 0 || a.tgt >= n)
      throw InputError("quiver: arrow '" + a.label +
                       "' has an endpoint outside the vertex list");
  }
}

bool Quiver::is_acyclic() const {
  for (const auto& cls : condensation(*this))
    if (cls.size() > 1) return false;
  // Single-vertex classes may still carry loops.
  for (const auto& a : arrows)
    if (a.src == a.tgt) return false;
  return true;
}

int Path::target(const Quiver& q) const {
  return arrows.empty() ? source : q.arrows[arrows.back()].tgt;
}

std::string Path::label(const Quiver& q) const {
  if (arrows.empty()) return "e_" + q.vertices[source];
  std::string out;
  for (auto it = arrows.rbegin(); it != arrows.rend(); ++it) {
    if (!out.empty()) out += '*';
    out += q.arrows[*it].label;
  }
  return out;
}

bool composable(const Quiver& qv, const Path& p, const Path& q) {
  return q.target(qv) == p.source;
}

Path compose(const Quiver& qv, const Path& p, const Path& q) {
  STRATAKIT_CHECK(composable(qv, p, q), "compose: endpoints do not match");
  Path out;
  out.source = q.source;
  out.arrows = q.arrows;
  out.arrows.insert(out.arrows.end(), p.arrows.begin(), p.arrows.end());
  return out;
}

namespace {

// Application-order label sequence comparison; lengths are equal by level.
bool path_label_less(const Quiver& q, const Path& a, const Path& b) {
  if (a.trivial()) return q.vertices[a.source] < q.vertices[b.source];
  for (std::size_t i = 0; i < a.arrows.size(); ++i) {
    const std::string& la = q.arrows[a.arrows[i]].label;
    const std::string& lb = q.arrows[b.arrows[i]].label;
    if (la != lb) return la < lb;
  }
  return false;
}

}  // namespace

std::vector<Path> enumerate_paths(const Quiver& q, int max_len,
                                  std::size_t limit) {
  std::vector<Path> all;
  std::vector<Path> level;
  for (std::size_t v = 0; v < q.vertices.size(); ++v)
    level.push_back(Path{static_cast<int>(v), {}});
  std::sort(level.begin(), level.end(),
            [&](const Path& a, const Path& b) { return path_label_less(q, a, b); });
  for (int len = 0; len <= max_len && !level.empty(); ++len) {
    for (const auto& p : level) {
      all.push_back(p);
      if (all.size() > limit)
        throw InputError("enumerate_paths: more than " +
                         std::to_string(limit) + " paths; quiver too large");
    }
    std::vector<Path> next;
    for (const auto& p : level) {
      const int at = p.target(q);
      for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
        if (q.arrows[ai].src != at) continue;
        Path ext = p;
        ext.arrows.push_back(static_cast<int>(ai));
        next.push_back(std::move(ext));
      }
    }
    std::sort(next.begin(), next.end(),
              [&](const Path& a, const Path& b) { return path_label_less(q, a, b); });
    level = std::move(next);
  }
  return all;
}

std::vector<std::vector<bool>> positive_reachability(const Quiver& q) {
  const std::size_t n = q.vertices.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (const auto& a : q.arrows) reach[a.src][a.tgt] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  return reach;
}

namespace {

struct TarjanState {
  const Quiver& q;
  std::vector<std::vector<int>> out;
  std::vector<int> index, low, comp;
  std::vector<bool> onstack;
  std::vector<int> stack;
  int counter = 0;
  int ncomp = 0;

  explicit TarjanState(const Quiver& qq) : q(qq) {
    const int n = static_cast<int>(q.vertices.size());
    out.resize(n);
    for (const auto& a : q.arrows) out[a.src].push_back(a.tgt);
    index.assign(n, -1);
    low.assign(n, 0);
    comp.assign(n, -1);
    onstack.assign(n, false);
  }

  void visit(int v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    onstack[v] = true;
    for (int w : out[v]) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (onstack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      while (true) {
        int w = stack.back();
        stack.pop_back();
        onstack[w] = false;
        comp[w] = ncomp;
        if (w == v) break;
      }
      ++ncomp;
    }
  }
};

}  // namespace

std::vector<std::vector<int>> condensation(const Quiver& q) {
  const int n = static_cast<int>(q.vertices.size());
  TarjanState t(q);
  for (int v = 0; v < n; ++v)
    if (t.index[v] < 0) t.visit(v);

  std::vector<std::vector<int>> members(t.ncomp);
  for (int v = 0; v < n; ++v) members[t.comp[v]].push_back(v);
  for (auto& m : members)
    std::sort(m.begin(), m.end(), [&](int a, int b) {
      return q.vertices[a] < q.vertices[b];
    });

  // Kahn ordering on the class DAG, sources first; among ready classes pick
  // the one whose smallest vertex label is least.
  std::vector<std::set<int>> succ(t.ncomp);
  std::vector<int> indeg(t.ncomp, 0);
  for (const auto& a : q.arrows) {
    int cs = t.comp[a.src], ct = t.comp[a.tgt];
    if (cs != ct && succ[cs].insert(ct).second) ++indeg[ct];
  }
  auto class_label = [&](int c) { return q.vertices[members[c][0]]; };
  std::vector<std::vector<int>> order;
  std::vector<bool> done(t.ncomp, false);
  for (int step = 0; step < t.ncomp; ++step) {
    int pick = -1;
    for (int c = 0; c < t.ncomp; ++c) {
      if (done[c] || indeg[c] != 0) continue;
      if (pick < 0 || class_label(c) < class_label(pick)) pick = c;
    }
    STRATAKIT_CHECK(pick >= 0, "condensation: class DAG has a cycle");
    done[pick] = true;
    order.push_back(members[pick]);
    for (int s : succ[pick]) --indeg[s];
  }
  return order;
}

std::vector<VertexBipartition> directed_bipartitions(const Quiver& q) {
  const auto classes = condensation(q);
  const int c = static_cast<int>(classes.size());
  if (c > 24)
    throw InputError("directed_bipartitions: more than 24 strongly connected "
                     "components; enumeration too large");
  std::vector<VertexBipartition> out;
  if (c < 2) return out;

  // Class-level ancestor masks: anc[i] = classes with a path into class i.
  const auto reach = positive_reachability(q);
  std::vector<int> cls(q.vertices.size());
  for (int i = 0; i < c; ++i)
    for (int v : classes[i]) cls[v] = i;
  std::vector<std::uint32_t> anc(c, 0);
  for (std::size_t v = 0; v < q.vertices.size(); ++v)
    for (std::size_t w = 0; w < q.vertices.size(); ++w)
      if (reach[v][w] && cls[v] != cls[w])
        anc[cls[w]] |= (std::uint32_t{1} << cls[v]);

  // The upper block must be ancestor-closed: nothing flows back into it.
  for (std::uint32_t m = 1; m + 1 < (std::uint32_t{1} << c); ++m) {
    bool closed = true;
    for (int i = 0; i < c && closed; ++i)
      if ((m >> i) & 1)
        if ((anc[i] & ~m) != 0) closed = false;
    if (!closed) continue;
    VertexBipartition b;
    for (int i = 0; i < c; ++i) {
      auto& side = ((m >> i) & 1) ? b.upper : b.lower;
      side.insert(side.end(), classes[i].begin(), classes[i].end());
    }
    auto bylabel = [&](int x, int y) { return q.vertices[x] < q.vertices[y]; };
    std::sort(b.lower.begin(), b.lower.end(), bylabel);
    std::sort(b.upper.begin(), b.upper.end(), bylabel);
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(),
            [&](const VertexBipartition& a, const VertexBipartition& b) {
              if (a.lower.size() != b.lower.size())
                return a.lower.size() < b.lower.size();
              std::vector<std::string> la, lb;
              for (int v : a.lower) la.push_back(q.vertices[v]);
              for (int v : b.lower) lb.push_back(q.vertices[v]);
              return la < lb;
            });
  return out;
}

std::vector<std::vector<int>> finest_stratification_order(const Quiver& q) {
  return condensation(q);
}

}  // namespace stratakit
