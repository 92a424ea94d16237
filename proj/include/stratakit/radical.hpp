// Jacobson radical (characteristic 0 and p), primitive idempotent
// decomposition with certified splitness, and the Gabriel quiver.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "stratakit/algebra.hpp"
#include "stratakit/quiver.hpp"

namespace stratakit {

// Raised when the simple quotients are provably (or undecidably) not split
// over the ground field; carries the offending evidence.
class NotSplitError : public InputError {
 public:
  explicit NotSplitError(const std::string& what) : InputError(what) {}
};

namespace detail {

// Characteristic zero: kernel of the trace form (x, y) -> tr(L_x L_y).
inline Subspace<Rat> radical_by_trace_form(const Algebra<Rat>& a) {
  const Index n = a.dim();
  Mat<Rat> g = mat_zero<Rat>(a.field, n, n);
  for (Index i = 0; i < n; ++i) {
    const Mat<Rat>& li = a.lmul[static_cast<size_t>(i)];
    for (Index j = i; j < n; ++j) {
      const Mat<Rat>& lj = a.lmul[static_cast<size_t>(j)];
      Rat t(0);
      for (Index r = 0; r < n; ++r)
        for (Index c = 0; c < n; ++c) {
          if (is_zero(li(r, c)) || is_zero(lj(c, r))) continue;
          t += li(r, c) * lj(c, r);
        }
      g(i, j) = t;
      g(j, i) = t;
    }
  }
  return Subspace<Rat>::span_of(kernel_basis(g, a.field), a.field);
}

// Integer matrix power mod m with 128-bit accumulation.
inline std::vector<std::vector<std::uint64_t>> int_mat_mul_mod(
    const std::vector<std::vector<std::uint64_t>>& x,
    const std::vector<std::vector<std::uint64_t>>& y, std::uint64_t m) {
  const std::size_t n = x.size();
  std::vector<std::vector<std::uint64_t>> out(
      n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (x[i][k] == 0) continue;
      const unsigned __int128 xv = x[i][k];
      for (std::size_t j = 0; j < n; ++j) {
        if (y[k][j] == 0) continue;
        unsigned __int128 acc = out[i][j];
        acc += xv * y[k][j] % m;
        out[i][j] = static_cast<std::uint64_t>(acc % m);
      }
    }
  return out;
}

inline std::vector<std::vector<std::uint64_t>> int_mat_pow_mod(
    std::vector<std::vector<std::uint64_t>> base, std::uint64_t exp,
    std::uint64_t m) {
  const std::size_t n = base.size();
  std::vector<std::vector<std::uint64_t>> acc(n,
                                              std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) acc[i][i] = 1 % m;
  while (exp > 0) {
    if (exp & 1) acc = int_mat_mul_mod(acc, base, m);
    base = int_mat_mul_mod(base, base, m);
    exp >>= 1;
  }
  return acc;
}

// Characteristic p: descending chain of subspaces. Level k refines the
// current subspace by the kernel of the form
//   (x, u) -> tr(lift(L_{x u})^{p^k}) / p^k  (mod p),
// which is linear in x there; after level floor(log_p dim) the chain is the
// radical. The result is certified downstream regardless.
inline Subspace<Fp> radical_char_p(const Algebra<Fp>& a) {
  const std::uint32_t p = a.field.characteristic;
  const Index n = a.dim();
  Subspace<Fp> cur = Subspace<Fp>::full(a.field, n);
  std::uint64_t pk = 1;  // p^k
  for (int level = 0; pk <= static_cast<std::uint64_t>(n);
       ++level, pk *= p) {
    const Index d = cur.dim();
    if (d == 0) break;
    const std::uint64_t modulus = pk * p;  // p^{k+1}
    Mat<Fp> c = mat_zero<Fp>(a.field, d, d);
    for (Index i = 0; i < d; ++i) {
      Vec<Fp> ui = densify_vec(cur.basis().col(i));
      for (Index j = 0; j < d; ++j) {
        Vec<Fp> z = a.mul(ui, densify_vec(cur.basis().col(j)));
        Mat<Fp> lz = a.left_mul(z);
        std::vector<std::vector<std::uint64_t>> lifted(
            static_cast<size_t>(n), std::vector<std::uint64_t>(n, 0));
        for (Index r = 0; r < n; ++r)
          for (Index cc = 0; cc < n; ++cc) {
            long long raw = lz(r, cc).v % static_cast<long long>(modulus);
            if (raw < 0) raw += static_cast<long long>(modulus);
            lifted[static_cast<size_t>(r)][static_cast<size_t>(cc)] =
                static_cast<std::uint64_t>(raw);
          }
        auto pow = int_mat_pow_mod(std::move(lifted), pk, modulus);
        std::uint64_t tr = 0;
        for (Index r = 0; r < n; ++r)
          tr = (tr + pow[static_cast<size_t>(r)][static_cast<size_t>(r)]) %
               modulus;
        STRATAKIT_CHECK(tr % pk == 0, "radical: trace level not divisible");
        c(i, j) = Fp(static_cast<long long>((tr / pk) % p), p);
      }
    }
    // x = sum_i lambda_i u_i descends iff lambda^T c = 0.
    Mat<Fp> lambda = kernel_basis(densify(c.transpose()), a.field);
    Mat<Fp> vecs = densify(cur.basis() * lambda);
    cur = Subspace<Fp>::span_of(vecs, a.field);
  }
  return cur;
}

}  // namespace detail

template <class S> Subspace<S> compute_radical_raw(const Algebra<S>& a) {
  if constexpr (std::is_same_v<S, Rat>) {
    return detail::radical_by_trace_form(a);
  } else {
    return detail::radical_char_p(a);
  }
}

// ---------------------------------------------------------------------------
// Idempotent splitting inside a semisimple algebra.

namespace detail {

// Monic minimal polynomial coefficients c_0..c_{d-1}, carrying z^d =
// -(c_0 + c_1 z + ... + c_{d-1} z^{d-1}).
template <class S>
std::vector<S> min_poly(const Algebra<S>& a, const Vec<S>& z) {
  std::vector<Vec<S>> powers;
  Vec<S> cur = a.unit;
  for (Index d = 0; d <= a.dim(); ++d) {
    Mat<S> m = cols_from(powers, a.field, a.dim());
    auto sol = solve(m, cur, a.field);
    if (sol.has_value()) {
      std::vector<S> coeffs;
      for (Index i = 0; i < sol->size(); ++i) coeffs.push_back(-(*sol)(i));
      return coeffs;  // cur = z^d, so z^d - sum sol_i z^i = 0
    }
    powers.push_back(cur);
    cur = a.mul(z, cur);
  }
  throw InternalError("min_poly: no dependence up to the dimension");
}

template <class S>
S eval_poly(const std::vector<S>& coeffs, const S& lambda) {
  // Monic: x^d + coeffs[d-1] x^{d-1} + ... + coeffs[0].
  S acc = S(1);
  for (std::size_t i = coeffs.size(); i-- > 0;)
    acc = acc * lambda + coeffs[i];
  return acc;
}

inline std::vector<BigInt> divisors_with_budget(BigInt n, bool& complete) {
  complete = true;
  if (n < 0) n = -n;
  std::vector<BigInt> primes;
  std::vector<int> mult;
  BigInt rest = n;
  for (BigInt d = 2; d * d <= rest && d <= 1000000; ++d) {
    if (rest % d != 0) continue;
    primes.push_back(d);
    mult.push_back(0);
    while (rest % d == 0) { rest /= d; ++mult.back(); }
  }
  if (rest > 1) {
    primes.push_back(rest);
    mult.push_back(1);
    // A leftover above the trial bound may itself be composite.
    if (rest > 1000000LL * 1000000LL) complete = false;
  }
  std::vector<BigInt> divs{BigInt(1)};
  for (std::size_t i = 0; i < primes.size(); ++i) {
    std::size_t base = divs.size();
    BigInt pw = 1;
    for (int e = 1; e <= mult[i]; ++e) {
      pw *= primes[i];
      for (std::size_t k = 0; k < base; ++k) divs.push_back(divs[k] * pw);
    }
  }
  return divs;
}

// All rational roots of a monic polynomial with rational coefficients.
// Throws InputError when the integer factorization budget cannot certify
// the candidate list is complete and no root was found.
inline std::vector<Rat> rational_roots(const std::vector<Rat>& coeffs) {
  // Clear denominators: p(x) = x^d + c_{d-1} x^{d-1} + ... + c_0 times lcm
  // gives integer coefficients a_d x^d + ... + a_0.
  BigInt lcm = 1;
  for (const auto& c : coeffs) {
    BigInt den = boost::multiprecision::denominator(c);
    lcm = boost::multiprecision::lcm(lcm, den);
  }
  std::vector<BigInt> ic;
  for (const auto& c : coeffs) {
    Rat scaled = c * Rat(lcm);
    STRATAKIT_CHECK(boost::multiprecision::denominator(scaled) == 1,
                    "rational_roots: clearing denominators failed");
    ic.push_back(boost::multiprecision::numerator(scaled));
  }
  BigInt lead = lcm;  // coefficient of x^d after scaling

  std::vector<Rat> roots;
  auto try_root = [&](const Rat& cand) {
    if (is_zero(eval_poly(coeffs, cand))) {
      for (const auto& r : roots)
        if (r == cand) return;
      roots.push_back(cand);
    }
  };
  try_root(Rat(0));
  try_root(Rat(1));
  try_root(Rat(-1));

  // Zero constant coefficient: 0 is a root (already tried); strip it for
  // the divisor search.
  std::size_t low = 0;
  while (low < ic.size() && ic[low] == 0) ++low;
  if (low == ic.size()) return roots;  // poly is x^d
  bool c0_complete = true, cd_complete = true;
  auto c0_divs = divisors_with_budget(ic[low], c0_complete);
  auto cd_divs = divisors_with_budget(lead, cd_complete);
  for (const auto& num : c0_divs)
    for (const auto& den : cd_divs) {
      Rat cand = Rat(num) / Rat(den);
      try_root(cand);
      try_root(-cand);
    }
  if (roots.empty() && !(c0_complete && cd_complete))
    throw InputError(
        "rational root search: integer factorization budget exceeded, "
        "cannot certify the root candidate list");
  std::sort(roots.begin(), roots.end());
  return roots;
}

inline std::vector<Fp> fp_roots(const std::vector<Fp>& coeffs,
                                std::uint32_t p) {
  if (p > 65536)
    throw InputError("root search over F_p with p > 2^16 is not supported");
  std::vector<Fp> roots;
  for (std::uint32_t v = 0; v < p; ++v) {
    Fp cand(static_cast<long long>(v), p);
    if (is_zero(eval_poly(coeffs, cand))) roots.push_back(cand);
  }
  return roots;
}

template <class S>
std::vector<S> scalar_roots(const FieldSpec& fs, const std::vector<S>& coeffs) {
  if constexpr (std::is_same_v<S, Rat>) {
    (void)fs;
    return rational_roots(coeffs);
  } else {
    return fp_roots(coeffs, fs.characteristic);
  }
}

// Center of the algebra: elements commuting with every basis element.
template <class S> Subspace<S> center_subspace(const Algebra<S>& a) {
  const Index n = a.dim();
  Mat<S> stacked = mat_zero<S>(a.field, n * n, n);
  for (Index i = 0; i < n; ++i) {
    Mat<S> diff = densify(a.lmul[static_cast<size_t>(i)] -
                          a.right_mul(a.basis_vec(i)));
    stacked.middleRows(i * n, n) = diff;
  }
  return Subspace<S>::span_of(kernel_basis(stacked, a.field), a.field);
}

// Given a zero divisor candidate w != 0 with a nonzero kernel ideal, return
// the idempotent generating that left ideal (right identity of I = ker of
// right multiplication by w). Returns nullopt when w is invertible or zero.
template <class S>
std::optional<Vec<S>> idempotent_from_zero_divisor(const Algebra<S>& t,
                                                   const Vec<S>& w) {
  if (vec_is_zero(w)) return std::nullopt;
  Mat<S> rw = t.right_mul(w);
  Mat<S> ker = kernel_basis(rw, t.field);
  const Index d = ker.cols();
  if (d == 0 || d == t.dim()) return std::nullopt;
  // Solve x_i * g = x_i for every kernel basis vector x_i, with g in the
  // kernel ideal. In a semisimple algebra the ideal is generated by an
  // idempotent, so the system is consistent.
  Mat<S> sys = mat_zero<S>(t.field, d * t.dim(), d);
  Vec<S> rhs = vec_zero<S>(t.field, d * t.dim());
  for (Index i = 0; i < d; ++i) {
    Vec<S> xi = densify_vec(ker.col(i));
    Mat<S> lx = t.left_mul(xi);  // g -> x_i * g
    sys.middleRows(i * t.dim(), t.dim()) = densify(lx * ker);
    rhs.segment(i * t.dim(), t.dim()) = xi;
  }
  auto sol = solve(sys, rhs, t.field);
  if (!sol.has_value()) return std::nullopt;
  Vec<S> g = densify_vec(ker * *sol);
  if (!vec_equal(t.mul(g, g), g) || vec_is_zero(g)) return std::nullopt;
  return g;
}

// Search for a nontrivial idempotent in a semisimple algebra T with
// dim T >= 2. Center elements are tried first (their rootless minimal
// polynomials certify a genuine field extension, i.e. non-splitness); then
// a budgeted zero-divisor hunt handles matrix blocks. Throws NotSplitError
// with evidence when the search proves or cannot rule out a division ring.
template <class S>
Vec<S> find_nontrivial_idempotent(const Algebra<S>& t, std::uint64_t seed) {
  auto try_element = [&](const Vec<S>& z) -> std::optional<Vec<S>> {
    std::vector<S> mp = min_poly(t, z);
    if (mp.size() < 2) return std::nullopt;  // scalar multiple of the unit
    for (const S& lam : scalar_roots<S>(t.field, mp)) {
      Vec<S> w = z - densify_vec(t.unit * lam);
      auto g = idempotent_from_zero_divisor(t, w);
      if (g) return g;
    }
    return std::nullopt;
  };

  // Pass 1: central elements; a rootless minimal polynomial of degree >= 2
  // here certifies a field extension inside the center.
  Subspace<S> z = center_subspace(t);
  for (Index i = 0; i < z.dim(); ++i) {
    Vec<S> zi = densify_vec(z.basis().col(i));
    std::vector<S> mp = min_poly(t, zi);
    if (mp.size() < 2) continue;
    if (!scalar_roots<S>(t.field, mp).empty()) {
      auto g = try_element(zi);
      if (g) return *g;
      throw InternalError(
          "central zero divisor produced no idempotent; input algebra is "
          "not semisimple");
    }
    std::string poly = "x^" + std::to_string(mp.size());
    for (std::size_t k = mp.size(); k-- > 0;)
      if (!is_zero(mp[k]))
        poly += " + " + scalar_str(mp[k]) +
                (k ? "*x^" + std::to_string(k) : "");
    throw NotSplitError("simple block not split: central element " +
                        t.element_str(zi) + " has minimal polynomial " + poly +
                        " with no root in " + t.field.label());
  }

  // Pass 2: zero-divisor hunt for matrix blocks over the ground field.
  for (Index i = 0; i < t.dim(); ++i) {
    auto g = try_element(t.basis_vec(i));
    if (g) return *g;
  }
  for (Index i = 0; i < t.dim(); ++i)
    for (Index j = i + 1; j < t.dim(); ++j) {
      Vec<S> zp = t.basis_vec(i) + t.basis_vec(j);
      auto g = try_element(zp);
      if (g) return *g;
      Vec<S> zm = t.basis_vec(i) - t.basis_vec(j);
      g = try_element(zm);
      if (g) return *g;
    }
  std::uint64_t state = seed ^ 0x9e3779b97f4a7c15ULL;
  auto next = [&state]() {
    std::uint64_t x = (state += 0x9e3779b97f4a7c15ULL);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  };
  for (int trial = 0; trial < 200; ++trial) {
    Vec<S> zr = t.zero_vec();
    for (Index i = 0; i < t.dim(); ++i)
      zr(i) = scalar_from_int<S>(t.field,
                                 static_cast<long long>(next() % 7) - 3);
    auto g = try_element(zr);
    if (g) return *g;
  }
  throw NotSplitError(
      "simple block of dimension " + std::to_string(t.dim()) +
      " over " + t.field.label() +
      ": no zero divisor found within the search budget, cannot certify a "
      "split decomposition");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Primitive idempotent decomposition.

template <class S> struct Primitives {
  std::vector<Vec<S>> idempotents;   // orthogonal, summing to 1
  std::vector<int> object_of;        // object whose idempotent was refined
  std::vector<int> cls;              // isomorphism class per idempotent
  std::vector<int> class_rep;        // representative index per class
  std::vector<std::string> class_labels;
};

namespace detail {

// Lift an idempotent of A/rad to A inside the corner (1-E) A (1-E), then
// iterate to an exact idempotent: Frobenius x -> x^p in characteristic p,
// Newton x -> 3x^2 - 2x^3 in characteristic 0.
template <class S>
Vec<S> lift_idempotent(const Algebra<S>& a, Vec<S> x, const Vec<S>& already) {
  Vec<S> c = a.unit - already;
  x = a.mul(c, a.mul(x, c));
  const std::uint32_t p = a.field.characteristic;
  for (int iter = 0; iter < 64; ++iter) {
    Vec<S> sq = a.mul(x, x);
    if (vec_equal(sq, x)) return x;
    if (p == 0) {
      Vec<S> cube = a.mul(sq, x);
      x = densify_vec(sq * scalar_from_int<S>(a.field, 3) -
                      cube * scalar_from_int<S>(a.field, 2));
    } else {
      Vec<S> pw = x;
      for (std::uint32_t k = 1; k < p; ++k) pw = a.mul(pw, x);
      x = pw;
    }
  }
  throw InternalError("idempotent lift did not converge");
}

}  // namespace detail

// Decompose the unit into primitive orthogonal idempotents, refining the
// object family through the semisimple quotient. Certifies: each idempotent
// is nonzero with local corner (one-dimensional top), the family is
// orthogonal and complete. Throws NotSplitError when a simple block fails
// to split over the ground field.
template <class S>
Primitives<S> primitive_idempotents(const AlgPtr<S>& a, std::uint64_t seed = 0) {
  const FieldSpec fs = a->field;
  QuotientLink<S> ss = quotient_algebra(a, a->radical);
  const AlgPtr<S>& q = ss.algebra;

  // Refine each object idempotent inside the semisimple quotient.
  struct Item { Vec<S> e; int object; };
  std::vector<Item> finished;
  for (Index ob = 0; ob < q->n_objects(); ++ob) {
    int parent_object = -1;
    for (Index po = 0; po < a->n_objects(); ++po)
      if (a->objects[static_cast<size_t>(po)] ==
          q->objects[static_cast<size_t>(ob)]) parent_object = static_cast<int>(po);
    std::vector<Vec<S>> queue{q->object_idem(ob)};
    while (!queue.empty()) {
      Vec<S> e = queue.back();
      queue.pop_back();
      CornerLink<S> corner = corner_algebra(q, e);
      if (corner.algebra->dim() == 1) {
        finished.push_back({e, parent_object});
        continue;
      }
      Vec<S> g_corner =
          detail::find_nontrivial_idempotent(*corner.algebra, seed);
      Vec<S> g = densify_vec(corner.embed * g_corner);
      Vec<S> rest = e - g;
      queue.push_back(rest);
      queue.push_back(g);
    }
  }

  // Lift to A, keeping the family orthogonal via corner corrections.
  Primitives<S> out;
  Vec<S> accum = a->zero_vec();
  for (const auto& item : finished) {
    Vec<S> pre = densify_vec(ss.lift * item.e);
    Vec<S> e = detail::lift_idempotent(*a, pre, accum);
    STRATAKIT_CHECK(!vec_is_zero(e), "primitive idempotent lifted to zero");
    STRATAKIT_CHECK(vec_equal(a->mul(e, e), e), "lift not idempotent");
    out.idempotents.push_back(e);
    out.object_of.push_back(item.object);
    accum += e;
  }
  STRATAKIT_CHECK(vec_equal(accum, a->unit),
                  "primitive idempotents do not sum to the unit");
  for (std::size_t i = 0; i < out.idempotents.size(); ++i)
    for (std::size_t j = 0; j < out.idempotents.size(); ++j) {
      if (i == j) continue;
      STRATAKIT_CHECK(
          vec_is_zero(a->mul(out.idempotents[i], out.idempotents[j])),
          "primitive idempotents not orthogonal");
    }

  // Certify locality: top of each corner is one-dimensional; this is also
  // the splitness certificate for the simple quotients.
  for (const auto& e : out.idempotents) {
    Subspace<S> corner_span(fs, a->dim());
    {
      SpanBuilder<S> sb(fs, a->dim());
      for (Index k = 0; k < a->dim(); ++k)
        sb.add(a->mul(e, a->mul(a->basis_vec(k), e)));
      corner_span = sb.finish();
    }
    SpanBuilder<S> rb(fs, a->dim());
    for (Index k = 0; k < a->radical.dim(); ++k)
      rb.add(a->mul(e, a->mul(densify_vec(a->radical.basis().col(k)), e)));
    STRATAKIT_CHECK(corner_span.dim() - rb.dim() == 1,
                    "primitive idempotent corner is not local");
  }

  // Isomorphism classes in the semisimple quotient: e ~ f iff
  // ebar S fbar != 0.
  const std::size_t np = out.idempotents.size();
  std::vector<Vec<S>> bars;
  for (const auto& e : out.idempotents)
    bars.push_back(densify_vec(ss.project * e));
  out.cls.assign(np, -1);
  int nclasses = 0;
  for (std::size_t i = 0; i < np; ++i) {
    if (out.cls[i] >= 0) continue;
    out.cls[i] = nclasses;
    out.class_rep.push_back(static_cast<int>(i));
    for (std::size_t j = i + 1; j < np; ++j) {
      if (out.cls[j] >= 0) continue;
      bool linked = false;
      for (Index m = 0; m < q->dim() && !linked; ++m) {
        Vec<S> prod = q->mul(bars[i], q->mul(q->basis_vec(m), bars[j]));
        if (!vec_is_zero(prod)) linked = true;
      }
      if (linked) out.cls[j] = nclasses;
    }
    ++nclasses;
  }

  // Class labels: object label, with a counter when an object carries
  // several classes.
  std::map<std::string, int> seen;
  for (int c = 0; c < nclasses; ++c) {
    int rep = out.class_rep[static_cast<size_t>(c)];
    std::string base =
        out.object_of[static_cast<size_t>(rep)] >= 0
            ? a->objects[static_cast<size_t>(
                  out.object_of[static_cast<size_t>(rep)])]
            : std::string("s");
    int n = ++seen[base];
    out.class_labels.push_back(n == 1 ? base : base + ":" + std::to_string(n));
  }
  return out;
}

// Gabriel quiver: one vertex per isomorphism class of simples, with
// dim ebar_j (rad / rad^2) ebar_i arrows from class i to class j.
template <class S> struct GabrielQuiver {
  Quiver quiver;
  Primitives<S> primitives;
};

template <class S>
GabrielQuiver<S> gabriel_quiver(const AlgPtr<S>& a, std::uint64_t seed = 0) {
  GabrielQuiver<S> out;
  out.primitives = primitive_idempotents(a, seed);
  const auto& prim = out.primitives;
  const int nc = static_cast<int>(prim.class_labels.size());
  out.quiver.vertices = prim.class_labels;

  Subspace<S> rad2 = product_subspace(*a, a->radical, a->radical);
  for (int i = 0; i < nc; ++i) {
    Vec<S> ei = prim.idempotents[static_cast<size_t>(prim.class_rep[static_cast<size_t>(i)])];
    for (int j = 0; j < nc; ++j) {
      Vec<S> ej = prim.idempotents[static_cast<size_t>(prim.class_rep[static_cast<size_t>(j)])];
      SpanBuilder<S> top(a->field, a->dim());
      SpanBuilder<S> bot(a->field, a->dim());
      for (Index k = 0; k < a->radical.dim(); ++k)
        top.add(a->mul(ej, a->mul(densify_vec(a->radical.basis().col(k)), ei)));
      for (Index k = 0; k < rad2.dim(); ++k)
        bot.add(a->mul(ej, a->mul(densify_vec(rad2.basis().col(k)), ei)));
      Index count = top.dim() - bot.dim();
      for (Index t = 0; t < count; ++t) {
        Arrow ar;
        ar.label = "q:" + prim.class_labels[static_cast<size_t>(i)] + ">" +
                   prim.class_labels[static_cast<size_t>(j)] +
                   (count > 1 ? ":" + std::to_string(t + 1) : "");
        ar.src = i;
        ar.tgt = j;
        out.quiver.arrows.push_back(ar);
      }
    }
  }
  return out;
}

}  // namespace stratakit
