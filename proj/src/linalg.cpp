#include "freyd/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <utility>

#include "freyd/errors.hpp"

namespace freyd::linalg {

namespace {

Scalar checked_add(Scalar a, Scalar b) {
  Scalar r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in addition");
  return r;
}

Scalar checked_mul(Scalar a, Scalar b) {
  Scalar r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in multiplication");
  return r;
}

struct Egcd {
  Scalar g, s, t;
};

// s*a + t*b = g = gcd(a, b) >= 0.
Egcd ext_gcd(Scalar a, Scalar b) {
  Scalar old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Scalar q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

void require_same_ring(const Mat& a, const Mat& b) {
  if (!(a.ring() == b.ring()))
    throw RingMismatch("matrices over " + a.ring().name() + " and " + b.ring().name());
}

}  // namespace

CoeffRing CoeffRing::mod(Scalar n) {
  if (n < 2) throw Error("modulus must be at least 2");
  if (n > (Scalar{1} << 30)) throw Error("modulus too large");
  return CoeffRing(n);
}

bool CoeffRing::is_field() const {
  if (modulus_ < 2) return false;
  for (Scalar d = 2; d * d <= modulus_; ++d)
    if (modulus_ % d == 0) return false;
  return true;
}

Scalar CoeffRing::reduce(Scalar x) const {
  if (modulus_ == 0) return x;
  Scalar r = x % modulus_;
  return r < 0 ? r + modulus_ : r;
}

Scalar CoeffRing::add(Scalar a, Scalar b) const {
  if (modulus_ == 0) return checked_add(a, b);
  return reduce(a + b);
}

Scalar CoeffRing::sub(Scalar a, Scalar b) const {
  if (modulus_ == 0) return checked_add(a, -b);
  return reduce(a - b);
}

Scalar CoeffRing::mul(Scalar a, Scalar b) const {
  if (modulus_ == 0) return checked_mul(a, b);
  return reduce(a * b);
}

bool CoeffRing::is_unit(Scalar a) const {
  if (modulus_ == 0) return a == 1 || a == -1;
  return std::gcd(reduce(a), modulus_) == 1;
}

Scalar CoeffRing::inverse(Scalar a) const {
  if (!is_unit(a)) throw NoSolution("element is not a unit");
  if (modulus_ == 0) return a;
  return reduce(ext_gcd(reduce(a), modulus_).s);
}

std::string CoeffRing::name() const {
  return modulus_ == 0 ? std::string("Z") : "Z/" + std::to_string(modulus_);
}

// ---------------------------------------------------------------------------

Mat::Mat(CoeffRing ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Mat::Mat(CoeffRing ring, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : ring_(ring), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw ShapeError("entry count does not match shape");
  for (auto& x : data_) x = ring_.reduce(x);
}

Mat Mat::identity(CoeffRing ring, std::size_t n) {
  Mat m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

Mat Mat::from_rows(CoeffRing ring, std::size_t cols, const std::vector<Row>& rows) {
  Mat m(ring, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeError("ragged matrix rows");
    m.set_row(r, rows[r]);
  }
  return m;
}

Mat Mat::from_rows(CoeffRing ring, std::initializer_list<std::initializer_list<Scalar>> rows) {
  std::vector<Row> rs;
  for (auto& r : rows) rs.emplace_back(r);
  return from_rows(ring, rs.empty() ? 0 : rs.front().size(), rs);
}

Mat Mat::row_vector(CoeffRing ring, const Row& v) { return from_rows(ring, v.size(), {v}); }

Row Mat::row(std::size_t r) const {
  return Row(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Mat::set_row(std::size_t r, const Row& v) {
  if (v.size() != cols_) throw ShapeError("row length mismatch");
  for (std::size_t c = 0; c < cols_; ++c) data_[r * cols_ + c] = ring_.reduce(v[c]);
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Scalar x) { return x == 0; });
}

Mat Mat::transpose() const {
  Mat t(ring_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = (*this)(r, c);
  return t;
}

Mat Mat::rows_range(std::size_t begin, std::size_t end) const {
  Mat m(ring_, end - begin, cols_);
  std::copy(data_.begin() + static_cast<std::ptrdiff_t>(begin * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>(end * cols_), m.data_.begin());
  return m;
}

Mat Mat::cols_range(std::size_t begin, std::size_t end) const {
  Mat m(ring_, rows_, end - begin);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = begin; c < end; ++c) m.data_[r * (end - begin) + c - begin] = (*this)(r, c);
  return m;
}

Mat Mat::select_rows(const std::vector<std::size_t>& idx) const {
  Mat m(ring_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) m.set_row(i, row(idx[i]));
  return m;
}

Mat operator*(const Mat& a, const Mat& b) {
  require_same_ring(a, b);
  if (a.cols() != b.rows()) throw ShapeError("product shape mismatch");
  const auto& R = a.ring();
  std::vector<Scalar> out(a.rows() * b.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Scalar x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out[i * b.cols() + j] = R.add(out[i * b.cols() + j], R.mul(x, b(k, j)));
    }
  return Mat(R, a.rows(), b.cols(), std::move(out));
}

Mat operator+(const Mat& a, const Mat& b) {
  require_same_ring(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("sum shape mismatch");
  std::vector<Scalar> out(a.entries().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.ring().add(a.entries()[i], b.entries()[i]);
  return Mat(a.ring(), a.rows(), a.cols(), std::move(out));
}

Mat operator-(const Mat& a) { return scale(-1, a); }
Mat operator-(const Mat& a, const Mat& b) { return a + (-b); }

Mat scale(Scalar k, const Mat& a) {
  std::vector<Scalar> out(a.entries().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.ring().mul(k, a.entries()[i]);
  return Mat(a.ring(), a.rows(), a.cols(), std::move(out));
}

Mat hstack(const Mat& a, const Mat& b) {
  require_same_ring(a, b);
  if (a.rows() != b.rows()) throw ShapeError("hstack row mismatch");
  Mat m(a.ring(), a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m.set(r, c, a(r, c));
    for (std::size_t c = 0; c < b.cols(); ++c) m.set(r, a.cols() + c, b(r, c));
  }
  return m;
}

Mat vstack(const Mat& a, const Mat& b) {
  require_same_ring(a, b);
  if (a.cols() != b.cols()) throw ShapeError("vstack column mismatch");
  std::vector<Scalar> e = a.entries();
  e.insert(e.end(), b.entries().begin(), b.entries().end());
  return Mat(a.ring(), a.rows() + b.rows(), a.cols(), std::move(e));
}

Mat block_diag(const Mat& a, const Mat& b) {
  require_same_ring(a, b);
  Mat m(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m.set(r, c, a(r, c));
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m.set(a.rows() + r, a.cols() + c, b(r, c));
  return m;
}

Mat kron(const Mat& a, const Mat& b) {
  require_same_ring(a, b);
  const auto& R = a.ring();
  Mat m(R, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Scalar x = a(i, j);
      if (x == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          m.set(i * b.rows() + k, j * b.cols() + l, R.mul(x, b(k, l)));
    }
  return m;
}

Row row_times(const Row& x, const Mat& a) {
  if (x.size() != a.rows()) throw ShapeError("vector length mismatch");
  const auto& R = a.ring();
  Row out(a.cols(), 0);
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] = R.add(out[j], R.mul(x[k], a(k, j)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Howell form

namespace {

struct TrackedRow {
  Row v;
  Row t;
};

void axpy(const CoeffRing& R, Row& y, Scalar k, const Row& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = R.add(y[i], R.mul(k, x[i]));
}

TrackedRow combine(const CoeffRing& R, Scalar s, const TrackedRow& p, Scalar t, const TrackedRow& q) {
  TrackedRow out{Row(p.v.size(), 0), Row(p.t.size(), 0)};
  axpy(R, out.v, s, p.v);
  axpy(R, out.v, t, q.v);
  axpy(R, out.t, s, p.t);
  axpy(R, out.t, t, q.t);
  return out;
}

TrackedRow scaled(const CoeffRing& R, Scalar k, const TrackedRow& p) {
  TrackedRow out{Row(p.v.size(), 0), Row(p.t.size(), 0)};
  axpy(R, out.v, k, p.v);
  axpy(R, out.t, k, p.t);
  return out;
}

bool all_zero(const Row& v) {
  return std::all_of(v.begin(), v.end(), [](Scalar x) { return x == 0; });
}

// A unit u with u * a == gcd(a, n) (mod n).
Scalar normalizing_unit(Scalar a, Scalar n) {
  Scalar d = std::gcd(a, n);
  Scalar m = n / d;
  Scalar base = 1;
  if (m > 1) {
    Scalar inv = ext_gcd((a / d) % m, m).s % m;
    base = inv < 0 ? inv + m : inv;
  }
  for (Scalar u = base; u < n + m; u += m)
    if (std::gcd(u, n) == 1) return u % n;
  throw InternalError("no normalizing unit found");
}

}  // namespace

HowellResult howell_form(const Mat& a) {
  const CoeffRing R = a.ring();
  if (!R.is_finite()) throw RingMismatch("howell_form requires Z/n; use smith_form over Z");
  const Scalar n = R.modulus();
  std::vector<TrackedRow> pending;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    TrackedRow tr{a.row(r), Row(a.rows(), 0)};
    tr.t[r] = 1;
    if (!all_zero(tr.v)) pending.push_back(std::move(tr));
  }
  std::vector<TrackedRow> pivots;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t col = 0; col < a.cols(); ++col) {
    auto first = std::find_if(pending.begin(), pending.end(),
                              [&](const TrackedRow& r) { return r.v[col] != 0; });
    if (first == pending.end()) continue;
    TrackedRow piv = std::move(*first);
    pending.erase(first);
    for (auto& q : pending) {
      if (q.v[col] == 0) continue;
      Scalar x = piv.v[col], y = q.v[col];
      auto [g, s, t] = ext_gcd(x, y);
      TrackedRow np = combine(R, s, piv, t, q);
      TrackedRow nq = combine(R, -(y / g), piv, x / g, q);
      piv = std::move(np);
      q = std::move(nq);
    }
    std::erase_if(pending, [](const TrackedRow& r) { return all_zero(r.v); });
    piv = scaled(R, normalizing_unit(piv.v[col], n), piv);
    const Scalar h = piv.v[col];
    TrackedRow ann = scaled(R, n / h, piv);
    if (!all_zero(ann.v)) pending.push_back(std::move(ann));
    pivots.push_back(std::move(piv));
    pivot_cols.push_back(col);
  }
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    const std::size_t c = pivot_cols[k];
    const Scalar h = pivots[k].v[c];
    for (std::size_t i = 0; i < k; ++i) {
      Scalar q = pivots[i].v[c] / h;
      if (q != 0) {
        axpy(R, pivots[i].v, -q, pivots[k].v);
        axpy(R, pivots[i].t, -q, pivots[k].t);
      }
    }
  }
  Mat h(R, pivots.size(), a.cols());
  Mat u(R, pivots.size(), a.rows());
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    h.set_row(k, pivots[k].v);
    u.set_row(k, pivots[k].t);
  }
  return {std::move(h), std::move(u)};
}

std::vector<std::size_t> pivot_columns(const Mat& howell) {
  std::vector<std::size_t> cols;
  for (std::size_t r = 0; r < howell.rows(); ++r) {
    std::size_t c = 0;
    while (c < howell.cols() && howell(r, c) == 0) ++c;
    cols.push_back(c);
  }
  return cols;
}

Row reduce_row(const Mat& howell, Row v) {
  const auto& R = howell.ring();
  for (auto& x : v) x = R.reduce(x);
  auto pc = pivot_columns(howell);
  for (std::size_t k = 0; k < howell.rows(); ++k) {
    Scalar q = v[pc[k]] / howell(k, pc[k]);
    if (q != 0) axpy(R, v, -q, howell.row(k));
  }
  return v;
}

Mat reduce_rows(const Mat& howell, const Mat& a) {
  Mat out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) out.set_row(r, reduce_row(howell, a.row(r)));
  return out;
}

bool in_row_span(const Mat& howell, const Row& v) { return all_zero(reduce_row(howell, v)); }

std::uint64_t span_size(const Mat& howell) {
  std::uint64_t size = 1;
  auto pc = pivot_columns(howell);
  for (std::size_t k = 0; k < howell.rows(); ++k)
    size *= static_cast<std::uint64_t>(howell.ring().modulus() / howell(k, pc[k]));
  return size;
}

// ---------------------------------------------------------------------------
// Smith form over Z

std::vector<Scalar> SmithResult::invariants() const {
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
  return out;
}

namespace {

struct SmithWork {
  std::vector<Row> a;  // rows x cols
  std::vector<Row> p, p_inv, q, q_inv;
  std::size_t rows, cols;

  // row_i += k * row_j
  void row_add(std::size_t i, std::size_t j, Scalar k) {
    for (std::size_t c = 0; c < cols; ++c) a[i][c] = checked_add(a[i][c], checked_mul(k, a[j][c]));
    for (std::size_t c = 0; c < rows; ++c) p[i][c] = checked_add(p[i][c], checked_mul(k, p[j][c]));
    // P^{-1} <- P^{-1} * E^{-1}: column_j -= k * column_i
    for (std::size_t r = 0; r < rows; ++r)
      p_inv[r][j] = checked_add(p_inv[r][j], -checked_mul(k, p_inv[r][i]));
  }
  void col_add(std::size_t i, std::size_t j, Scalar k) {
    for (std::size_t r = 0; r < rows; ++r) a[r][i] = checked_add(a[r][i], checked_mul(k, a[r][j]));
    for (std::size_t r = 0; r < cols; ++r) q[r][i] = checked_add(q[r][i], checked_mul(k, q[r][j]));
    // Q^{-1} <- F^{-1} * Q^{-1}: row_j -= k * row_i
    for (std::size_t c = 0; c < cols; ++c)
      q_inv[j][c] = checked_add(q_inv[j][c], -checked_mul(k, q_inv[i][c]));
  }
  void row_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    std::swap(p[i], p[j]);
    for (std::size_t r = 0; r < rows; ++r) std::swap(p_inv[r][i], p_inv[r][j]);
  }
  void col_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
    for (std::size_t r = 0; r < cols; ++r) std::swap(q[r][i], q[r][j]);
    std::swap(q_inv[i], q_inv[j]);
  }
  void row_negate(std::size_t i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : p[i]) x = -x;
    for (std::size_t r = 0; r < rows; ++r) p_inv[r][i] = -p_inv[r][i];
  }
};

std::vector<Row> identity_rows(std::size_t n) {
  std::vector<Row> m(n, Row(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

SmithResult smith_form(const Mat& a) {
  if (!a.ring().is_integers()) throw RingMismatch("smith_form requires Z");
  const CoeffRing Z = a.ring();
  SmithWork w;
  w.rows = a.rows();
  w.cols = a.cols();
  for (std::size_t r = 0; r < a.rows(); ++r) w.a.push_back(a.row(r));
  w.p = w.p_inv = identity_rows(w.rows);
  w.q = w.q_inv = identity_rows(w.cols);

  const std::size_t lim = std::min(w.rows, w.cols);
  for (std::size_t t = 0; t < lim; ++t) {
    // smallest nonzero entry of the trailing block
    auto bring_min = [&]() -> bool {
      std::size_t bi = 0, bj = 0;
      Scalar best = 0;
      for (std::size_t i = t; i < w.rows; ++i)
        for (std::size_t j = t; j < w.cols; ++j) {
          Scalar x = std::abs(w.a[i][j]);
          if (x != 0 && (best == 0 || x < best)) best = x, bi = i, bj = j;
        }
      if (best == 0) return false;
      w.row_swap(t, bi);
      w.col_swap(t, bj);
      return true;
    };
    if (!bring_min()) break;
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < w.rows; ++i) {
        if (w.a[i][t] == 0) continue;
        w.row_add(i, t, -(w.a[i][t] / w.a[t][t]));
        if (w.a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < w.cols; ++j) {
        if (w.a[t][j] == 0) continue;
        w.col_add(j, t, -(w.a[t][j] / w.a[t][t]));
        if (w.a[t][j] != 0) clean = false;
      }
      if (!clean) {
        bring_min();
        continue;
      }
      bool divides = true;
      for (std::size_t i = t + 1; i < w.rows && divides; ++i)
        for (std::size_t j = t + 1; j < w.cols; ++j)
          if (w.a[i][j] % w.a[t][t] != 0) {
            w.row_add(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (w.a[t][t] < 0) w.row_negate(t);
  }
  SmithResult out;
  out.d = Mat::from_rows(Z, w.cols, w.a);
  out.p = Mat::from_rows(Z, w.rows, w.p);
  out.p_inv = Mat::from_rows(Z, w.rows, w.p_inv);
  out.q = Mat::from_rows(Z, w.cols, w.q);
  out.q_inv = Mat::from_rows(Z, w.cols, w.q_inv);
  return out;
}

// ---------------------------------------------------------------------------

Mat left_kernel(const Mat& a) {
  const CoeffRing R = a.ring();
  if (R.is_integers()) {
    auto s = smith_form(a);
    std::size_t rank = 0;
    for (Scalar x : s.invariants())
      if (x != 0) ++rank;
    return s.p.rows_range(rank, a.rows());
  }
  Mat aug = hstack(a, Mat::identity(R, a.rows()));
  Mat h = howell_basis(aug);
  auto pc = pivot_columns(h);
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < h.rows(); ++k)
    if (pc[k] >= a.cols()) keep.push_back(k);
  return howell_basis(h.select_rows(keep).cols_range(a.cols(), a.cols() + a.rows()));
}

namespace {

Mat solve_right_integers(const Mat& a, const Mat& b) {
  auto s = smith_form(a);
  // x a = b  <=>  (x p^{-1}) d = b q
  Mat bq = b * s.q;
  Mat y(a.ring(), b.rows(), a.rows());
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Scalar d = j < a.rows() ? s.d(j, j) : 0;
      if (d == 0) {
        if (bq(r, j) != 0) throw NoSolution("right-hand side not in the row span");
      } else {
        if (bq(r, j) % d != 0) throw NoSolution("right-hand side not in the row span");
        y.set(r, j, bq(r, j) / d);
      }
    }
  return y * s.p;
}

}  // namespace

Mat solve_right(const Mat& a, const Mat& b) {
  require_same_ring(a, b);
  if (a.cols() != b.cols()) throw ShapeError("solve_right: column mismatch");
  const CoeffRing R = a.ring();
  if (R.is_integers()) return solve_right_integers(a, b);
  auto [h, u] = howell_form(a);
  auto pc = pivot_columns(h);
  Mat kernel = left_kernel(a);
  Mat x(R, b.rows(), a.rows());
  for (std::size_t r = 0; r < b.rows(); ++r) {
    Row rest = b.row(r);
    Row y(h.rows(), 0);
    for (std::size_t k = 0; k < h.rows(); ++k) {
      Scalar piv = h(k, pc[k]);
      if (rest[pc[k]] % piv != 0) throw NoSolution("right-hand side not in the row span");
      y[k] = rest[pc[k]] / piv;
      axpy(R, rest, -y[k], h.row(k));
    }
    if (!all_zero(rest)) throw NoSolution("right-hand side not in the row span");
    Row sol = h.rows() == 0 ? Row(a.rows(), 0) : row_times(y, u);
    x.set_row(r, reduce_row(kernel, sol));
  }
  return x;
}

std::string to_string(const Mat& a) {
  std::ostringstream os;
  os << a.ring().name() << " [";
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (r) os << ",";
    os << "[";
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (c) os << ",";
      os << a(r, c);
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace freyd::linalg
