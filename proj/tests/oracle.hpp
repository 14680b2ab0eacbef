#pragma once

// Brute-force reference computations used to check the engine. Nothing here
// calls into the canonical-form code it is meant to verify.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "freyd/linalg.hpp"

namespace oracle {

using freyd::linalg::CoeffRing;
using freyd::linalg::Mat;
using freyd::linalg::Row;
using freyd::linalg::Scalar;

// Calls f on every vector in {0..n-1}^len.
inline void for_each_vector(std::size_t len, Scalar n, const std::function<void(const Row&)>& f) {
  Row v(len, 0);
  for (;;) {
    f(v);
    std::size_t i = 0;
    while (i < len && ++v[i] == n) v[i++] = 0;
    if (i == len) return;
  }
}

inline Row combo(const Mat& a, const Row& coeffs) {
  Scalar n = a.ring().modulus();
  Row out(a.cols(), 0);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out[c] = (out[c] + coeffs[r] * a(r, c)) % n;
  return out;
}

// Every element of the row span of a over Z/n, by enumerating all coefficient
// vectors.
inline std::set<Row> row_span(const Mat& a) {
  std::set<Row> span;
  for_each_vector(a.rows(), a.ring().modulus(), [&](const Row& c) { span.insert(combo(a, c)); });
  if (a.rows() == 0) span.insert(Row(a.cols(), 0));
  return span;
}

// All solutions x of x * a = b (b a single row), by enumeration.
inline std::vector<Row> all_solutions(const Mat& a, const Row& b) {
  std::vector<Row> out;
  for_each_vector(a.rows(), a.ring().modulus(), [&](const Row& x) {
    if (combo(a, x) == b) out.push_back(x);
  });
  return out;
}

inline Mat random_mat(std::mt19937_64& rng, CoeffRing ring, std::size_t rows, std::size_t cols,
                      Scalar lo = 0, Scalar hi = -1) {
  if (hi < lo) hi = ring.modulus() - 1;
  Mat m(ring, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m.set(r, c, lo + static_cast<Scalar>(rng() % static_cast<std::uint64_t>(hi - lo + 1)));
  return m;
}

// Invariant factors of an integer matrix via gcds of k x k minors.
inline Scalar det(std::vector<std::vector<Scalar>> m) {
  // Bareiss fraction-free elimination.
  std::size_t n = m.size();
  Scalar sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return n == 0 ? 1 : sign * m[n - 1][n - 1];
}

inline Scalar gcd_of_minors(const Mat& a, std::size_t k) {
  Scalar g = 0;
  std::vector<std::size_t> rs(k), cs(k);
  std::function<void(std::size_t, std::size_t)> pick_cols;
  std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t i, std::size_t from) {
    if (i == k) return pick_cols(0, 0);
    for (std::size_t r = from; r < a.rows(); ++r) rs[i] = r, pick_rows(i + 1, r + 1);
  };
  pick_cols = [&](std::size_t i, std::size_t from) {
    if (i == k) {
      std::vector<std::vector<Scalar>> m(k, std::vector<Scalar>(k));
      for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y) m[x][y] = a(rs[x], cs[y]);
      Scalar d = det(m);
      g = std::gcd(g, d < 0 ? -d : d);
      return;
    }
    for (std::size_t c = from; c < a.cols(); ++c) cs[i] = c, pick_cols(i + 1, c + 1);
  };
  pick_rows(0, 0);
  return g;
}

}  // namespace oracle

namespace oracle {

// A module Lambda^g / span(rels) modelled by brute force: every element is
// the lexicographically least member of its coset.
struct BruteModule {
  CoeffRing ring;
  std::size_t gens;
  std::set<Row> relspan;

  BruteModule(const Mat& rels, std::size_t g) : ring(rels.ring()), gens(g), relspan(row_span(rels)) {}

  Row add(const Row& a, const Row& b) const {
    Row out(gens);
    for (std::size_t i = 0; i < gens; ++i) out[i] = (a[i] + b[i]) % ring.modulus();
    return out;
  }
  Row canon(const Row& v) const {
    Row best = add(v, Row(gens, 0));
    for (const auto& s : relspan) best = std::min(best, add(v, s));
    return best;
  }
  std::set<Row> elements() const {
    std::set<Row> out;
    for_each_vector(gens, ring.modulus(), [&](const Row& v) { out.insert(canon(v)); });
    return out;
  }
  bool is_zero(const Row& v) const { return relspan.count(add(v, Row(gens, 0))) > 0; }
};

// All well-defined maps src -> dst, as distinct classes, by trying every
// matrix of generator images.
inline std::vector<Mat> brute_homs(const BruteModule& src, const Mat& src_rels, const BruteModule& dst) {
  std::vector<Mat> out;
  std::set<std::vector<Row>> seen;
  Scalar n = src.ring.modulus();
  for_each_vector(src.gens * dst.gens, n, [&](const Row& flat) {
    Mat m(src.ring, src.gens, dst.gens, flat);
    for (std::size_t r = 0; r < src_rels.rows(); ++r)
      if (!dst.is_zero(combo(m, src_rels.row(r)))) return;
    std::vector<Row> key;
    for (std::size_t r = 0; r < src.gens; ++r) key.push_back(dst.canon(m.row(r)));
    if (seen.insert(key).second) out.push_back(m);
  });
  return out;
}

}  // namespace oracle
