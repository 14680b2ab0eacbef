#pragma once

// Exact matrix arithmetic over Z and Z/n.
//
// Matrices act on row vectors: a matrix of shape (r x c) is the map
// Lambda^r -> Lambda^c, x |-> x * A. Composition "first A then B" is A * B.
// Every entry over Z/n is kept as its canonical residue in [0, n).

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace freyd::linalg {

using Scalar = std::int64_t;
using Row = std::vector<Scalar>;

class CoeffRing {
 public:
  // modulus 0 denotes the integers.
  constexpr CoeffRing() = default;

  static CoeffRing integers() { return CoeffRing(0); }
  static CoeffRing mod(Scalar n);

  bool is_integers() const { return modulus_ == 0; }
  bool is_finite() const { return modulus_ != 0; }
  Scalar modulus() const { return modulus_; }
  bool is_field() const;

  Scalar reduce(Scalar x) const;
  Scalar add(Scalar a, Scalar b) const;
  Scalar sub(Scalar a, Scalar b) const;
  Scalar mul(Scalar a, Scalar b) const;
  Scalar neg(Scalar a) const { return sub(0, a); }
  bool is_unit(Scalar a) const;
  Scalar inverse(Scalar a) const;

  // "Z" or "Z/n".
  std::string name() const;

  friend bool operator==(const CoeffRing&, const CoeffRing&) = default;

 private:
  explicit constexpr CoeffRing(Scalar n) : modulus_(n) {}
  Scalar modulus_ = 0;
};

class Mat {
 public:
  Mat() = default;
  Mat(CoeffRing ring, std::size_t rows, std::size_t cols);
  Mat(CoeffRing ring, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Mat identity(CoeffRing ring, std::size_t n);
  static Mat zero(CoeffRing ring, std::size_t rows, std::size_t cols) {
    return Mat(ring, rows, cols);
  }
  static Mat from_rows(CoeffRing ring, std::size_t cols, const std::vector<Row>& rows);
  static Mat from_rows(CoeffRing ring, std::initializer_list<std::initializer_list<Scalar>> rows);
  static Mat row_vector(CoeffRing ring, const Row& v);

  const CoeffRing& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Scalar v) { data_[r * cols_ + c] = ring_.reduce(v); }
  const std::vector<Scalar>& entries() const { return data_; }

  Row row(std::size_t r) const;
  std::span<const Scalar> row_view(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  void set_row(std::size_t r, const Row& v);

  bool is_zero() const;
  Mat transpose() const;
  Mat rows_range(std::size_t begin, std::size_t end) const;
  Mat cols_range(std::size_t begin, std::size_t end) const;
  Mat select_rows(const std::vector<std::size_t>& idx) const;

  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  CoeffRing ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Mat operator*(const Mat& a, const Mat& b);
Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator-(const Mat& a);
Mat scale(Scalar k, const Mat& a);

Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);
Mat block_diag(const Mat& a, const Mat& b);
// Kronecker product; row and column indices are (i, j) -> i * b.dim + j.
Mat kron(const Mat& a, const Mat& b);

Row row_times(const Row& x, const Mat& a);

struct HowellResult {
  Mat h;  // Howell normal form, zero rows dropped
  Mat u;  // h = u * a
};

// Canonical generating set of the row span over Z/n.
HowellResult howell_form(const Mat& a);
inline Mat howell_basis(const Mat& a) { return howell_form(a).h; }

// Column of the first nonzero entry of each row of a Howell basis.
std::vector<std::size_t> pivot_columns(const Mat& howell);

// Canonical representative of v + rowspan(howell). `howell` must be a Howell
// basis; the result is the lexicographically least member of the coset.
Row reduce_row(const Mat& howell, Row v);
Mat reduce_rows(const Mat& howell, const Mat& a);
bool in_row_span(const Mat& howell, const Row& v);

// Number of elements of the row span of a Howell basis.
std::uint64_t span_size(const Mat& howell);

struct SmithResult {
  Mat d;
  Mat p;
  Mat q;
  Mat p_inv;
  Mat q_inv;
  // Diagonal entries d_0 | d_1 | ..., length min(rows, cols).
  std::vector<Scalar> invariants() const;
};

// d = p * a * q over Z with p, q unimodular.
SmithResult smith_form(const Mat& a);

// Basis of the left kernel { x : x * a = 0 }; Howell form over Z/n, a Z-basis
// over the integers.
Mat left_kernel(const Mat& a);

// Solves x * a = b for x of shape (b.rows x a.rows). Over Z/n the solution is
// the canonical one: each row reduced modulo the Howell basis of the left
// kernel of a. Throws NoSolution.
Mat solve_right(const Mat& a, const Mat& b);

std::string to_string(const Mat& a);

}  // namespace freyd::linalg
