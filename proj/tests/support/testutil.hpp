// Shared helpers for the test suites: literal matrix/vector builders and a
// small deterministic RNG so every randomized case is reproducible from a
// printed seed.
#pragma once

#include <cstdint>
#include <vector>

#include "stratakit/matrix.hpp"

namespace testutil {

using stratakit::FieldSpec;
using stratakit::Index;
using stratakit::Mat;
using stratakit::Vec;

template <class S>
Mat<S> mat_lit(const FieldSpec& fs, std::vector<std::vector<long long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows[0].size());
  Mat<S> m = stratakit::mat_zero<S>(fs, r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j)
      m(i, j) = stratakit::scalar_from_int<S>(fs, rows[i][j]);
  return m;
}

template <class S>
Vec<S> vec_lit(const FieldSpec& fs, std::vector<long long> entries) {
  Vec<S> v = stratakit::vec_zero<S>(fs, static_cast<Index>(entries.size()));
  for (Index i = 0; i < v.size(); ++i)
    v(i) = stratakit::scalar_from_int<S>(fs, entries[i]);
  return v;
}

// splitmix64: tiny, deterministic across platforms.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
};

template <class S>
Mat<S> random_mat(const FieldSpec& fs, Rng& rng, Index r, Index c,
                  long long lo = -4, long long hi = 4) {
  Mat<S> m = stratakit::mat_zero<S>(fs, r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j)
      m(i, j) = stratakit::scalar_from_int<S>(fs, rng.range(lo, hi));
  return m;
}

}  // namespace testutil
