#pragma once

// Finitely presented modules over a finite commutative ring Z/n.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "freyd/linalg.hpp"

namespace freyd {

using linalg::CoeffRing;
using linalg::Mat;
using linalg::Row;
using linalg::Scalar;

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;
inline constexpr std::size_t kDefaultGeneratorCap = 6;

// Lambda^gens / rowspan(rels), with rels kept in Howell form.
class FPMod {
 public:
  FPMod() = default;
  FPMod(CoeffRing ring, std::size_t gens, const Mat& rels);

  static FPMod free(CoeffRing ring, std::size_t rank);
  static FPMod cyclic(CoeffRing ring, Scalar a);  // Lambda / (a)
  static FPMod zero(CoeffRing ring) { return free(ring, 0); }

  const CoeffRing& ring() const { return ring_; }
  std::size_t gens() const { return gens_; }
  const Mat& rels() const { return rels_; }

  std::uint64_t cardinality() const;
  bool is_zero() const { return cardinality() == 1; }

  // Canonical representative of the class of v.
  Row reduce(const Row& v) const { return linalg::reduce_row(rels_, v); }
  bool is_zero_element(const Row& v) const;

  // Canonical representatives of all elements, in lexicographic order.
  std::vector<Row> elements(std::uint64_t budget = kDefaultBudget) const;

  // Nontrivial invariant factors (divisors of n greater than 1), ascending.
  std::vector<Scalar> invariants() const;

  std::string to_string() const;

  friend bool operator==(const FPMod&, const FPMod&) = default;

 private:
  CoeffRing ring_;
  std::size_t gens_ = 0;
  Mat rels_;
};

class ModHom {
 public:
  ModHom() = default;
  // Throws ShapeError when the matrix does not define a module map.
  ModHom(FPMod src, FPMod dst, const Mat& mat);

  static ModHom identity(const FPMod& m);
  static ModHom zero(const FPMod& src, const FPMod& dst);

  const FPMod& src() const { return src_; }
  const FPMod& dst() const { return dst_; }
  const Mat& mat() const { return mat_; }

  Row apply(const Row& x) const;
  bool is_zero() const { return mat_.is_zero(); }
  bool is_identity() const;

  friend bool operator==(const ModHom&, const ModHom&) = default;

 private:
  FPMod src_;
  FPMod dst_;
  Mat mat_;
};

// g . f  (first f, then g)
ModHom compose(const ModHom& g, const ModHom& f);
ModHom operator+(const ModHom& a, const ModHom& b);
ModHom operator-(const ModHom& a, const ModHom& b);
ModHom scale(Scalar k, const ModHom& a);

struct Isomorphic {
  FPMod module;
  ModHom to;    // original -> module
  ModHom from;  // module -> original
};

// Eliminates generators killed by unit-pivot relations.
Isomorphic canonical_form(const FPMod& m);

// span(gens rows + zero rows) / span(zero rows) inside Lambda^d, presented
// with its own generators.
class Subquotient {
 public:
  Subquotient(const Mat& gens, const Mat& zero);

  const FPMod& module() const { return module_; }
  // Vector in Lambda^d of the i-th generator of module().
  const Mat& generators() const { return gens_; }
  const Mat& zero_rows() const { return zero_; }
  // Coordinates of v (which must lie in span(gens) + span(zero)).
  Row coords(const Row& v) const;
  Row lift(const Row& c) const { return linalg::row_times(c, gens_); }
  bool contains(const Row& v) const;

 private:
  FPMod module_;
  Mat gens_;
  Mat zero_;
  Mat stacked_;
  Mat to_;
};

struct KernelResult {
  FPMod module;
  ModHom embedding;
};

struct CokernelResult {
  FPMod module;
  ModHom projection;
  Mat section;  // generator i of module lifted to the target of h
};

KernelResult kernel(const ModHom& h);
CokernelResult cokernel(const ModHom& h);
KernelResult image(const ModHom& h);

struct DirectSum {
  FPMod module;
  std::vector<ModHom> inj;
  std::vector<ModHom> proj;
};
DirectSum direct_sum(const std::vector<FPMod>& parts);

FPMod tensor_mod(const FPMod& m, const FPMod& n);
// f (x) g on tensor products presented by tensor_mod.
ModHom tensor_hom(const ModHom& f, const ModHom& g);

class HomGroup {
 public:
  HomGroup(const FPMod& src, const FPMod& dst);

  const FPMod& src() const { return src_; }
  const FPMod& dst() const { return dst_; }
  const FPMod& module() const { return sq_.module(); }
  std::vector<ModHom> generators() const;
  Row coords(const ModHom& h) const;
  ModHom element(const Row& c) const;
  std::vector<ModHom> elements(std::uint64_t budget = kDefaultBudget) const;

 private:
  FPMod src_;
  FPMod dst_;
  Subquotient sq_;
};

HomGroup hom_group(const FPMod& m, const FPMod& n);

// An isomorphism with verified inverse, or nothing.
std::optional<Isomorphic> find_iso(const FPMod& m, const FPMod& n);
bool isomorphic(const FPMod& m, const FPMod& n);

bool is_indecomposable(const FPMod& m, std::uint64_t budget = kDefaultBudget);

// Indecomposable modules with at most `cap` generators up to isomorphism,
// largest first, ties broken by presentation. Throws CapExceeded when the
// search would exceed the budget.
std::vector<FPMod> enumerate_indec_modules(CoeffRing ring, std::size_t cap,
                                           std::uint64_t budget = kDefaultBudget);

}  // namespace freyd
