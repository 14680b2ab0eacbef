#pragma once

// Subobject lattices, radicals, simple and indecomposable objects of Ab(C),
// found by exhaustive search over the finite test-module data.

#include <cstdint>
#include <vector>

#include "freyd/functor.hpp"

namespace freyd {

// A subfunctor of F, given by its value at each test module as the preimage
// in Lambda^{g_k} (Howell basis, containing the relations of F(X_k)).
using SubfunctorParts = std::vector<Mat>;

class SubfunctorLattice {
 public:
  explicit SubfunctorLattice(const FPFunctor& f, std::size_t max_elements = 4096);

  const FPFunctor& functor() const { return f_; }
  std::size_t size() const { return parts_.size(); }
  const SubfunctorParts& parts(std::size_t i) const { return parts_[i]; }
  // Product of |S(X_k)| over the test modules.
  std::uint64_t weight(std::size_t i) const { return weight_[i]; }
  bool contains(std::size_t big, std::size_t small) const;
  std::size_t bottom() const { return 0; }
  std::size_t top() const { return parts_.size() - 1; }
  std::size_t index_of(const SubfunctorParts& p) const;

  std::vector<std::size_t> atoms() const;
  std::vector<std::size_t> coatoms() const;
  std::size_t socle() const;
  std::size_t radical() const;
  std::size_t length() const;
  bool is_simple() const { return parts_.size() == 2; }

  SubfunctorParts sum(const SubfunctorParts& a, const SubfunctorParts& b) const;
  SubfunctorParts intersection(const SubfunctorParts& a, const SubfunctorParts& b) const;

  // The subfunctor as an object with its inclusion into F.
  FunctorKernel realize(std::size_t i) const;

 private:
  FPFunctor f_;
  std::vector<Subquotient> values_;
  std::vector<SubfunctorParts> parts_;
  std::vector<std::uint64_t> weight_;
};

// Subobject of F generated by the given elements, as image of a map from a
// sum of representables. parts[k] lists elements of F(X_k) as rows.
FunctorKernel realize_subfunctor(const FPFunctor& f, const SubfunctorParts& parts);

// rad(X, -) inside (X, -), from the definition: f in rad(X, Y) iff 1 - g f
// is invertible for every g: Y -> X.
FunctorKernel radical_rep(const FPMod& x);

// One simple per indecomposable test module: (X, -) / rad(X, -).
std::vector<FPFunctor> simples(CoeffRing ring);

bool is_indecomposable(const FPFunctor& f);
// Splits F along idempotents of End(F) until every piece is indecomposable.
std::vector<FPFunctor> decompose(const FPFunctor& f);

struct IndecCaps {
  std::size_t max_objects = 24;
  std::size_t max_rounds = 8;
  std::uint64_t hom_budget = 4096;
};

// Closure of the representables of the test modules under kernels and
// cokernels of all morphisms, split into indecomposables and deduplicated.
// Throws CapExceeded when a cap is hit before the fixpoint.
std::vector<FPFunctor> list_indec(CoeffRing ring, const IndecCaps& caps = {});

}  // namespace freyd
