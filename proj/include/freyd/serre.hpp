#pragma once

// The kernel of an induced exact functor M~ on Ab(C), closure checks for
// classes of objects, and homs in the quotient A(M) = Ab(C) / Ker(M~).

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "freyd/structure.hpp"

namespace freyd {

class KernelSpec {
 public:
  explicit KernelSpec(MSpec spec);

  const MSpec& mspec() const { return spec_; }
  const CoeffRing& ring() const { return spec_.source; }
  // M~(F) = 0. Verdicts are cached by presentation.
  bool contains(const FPFunctor& f) const;

 private:
  MSpec spec_;
  struct Cache {
    std::mutex mu;
    std::map<std::string, bool> verdicts;
  };
  std::shared_ptr<Cache> cache_;
};

bool kernel_member(const FPFunctor& f, const KernelSpec& k);

// Evaluation at a module as an MSpec over the same ring.
MSpec evaluation_at(const FPMod& x, const std::string& name = "");

struct ClosureWitness {
  std::string kind;  // "subobject", "quotient" or "extension"
  FPFunctor object;  // the object of the universe involved
  FPFunctor piece;   // offending subobject or quotient, or the middle term
};

struct ClosureReport {
  bool closed = true;
  std::vector<std::size_t> members;  // indices into the universe
  std::vector<ClosureWitness> witnesses;
};

// Whether add(class) is closed under subobjects, quotients and extensions,
// checked through the subobject lattices of the objects of the universe.
// The universe should contain every indecomposable that matters; the
// extension test then covers every two-step filtration.
ClosureReport closure_check(const std::vector<FPFunctor>& universe, const std::vector<std::size_t>& cls);

// The class is the set of universe objects in the kernel.
ClosureReport serre_closure_check(const KernelSpec& k, const std::vector<FPFunctor>& universe);

// Membership in add(class) via decomposition into indecomposables.
bool in_additive_closure(const FPFunctor& f, const std::vector<FPFunctor>& cls);

struct IdealFailure {
  FPFunctor f;
  FPFunctor g;
  FPMod image;  // M~(f (x) g), nonzero
};

struct IdealReport {
  bool ideal = true;
  std::size_t pairs = 0;
  std::vector<IdealFailure> failures;
};

// Checks f (x) g in Ker for f in Ker. Pairs are every (member, member),
// then every (member, universe object), then `samples` pairs of random
// functors drawn with mt19937_64 seeded by `seed`.
IdealReport tensor_ideal_check(const KernelSpec& k, const std::vector<FPFunctor>& universe, std::size_t samples,
                               std::uint64_t seed);

struct QuotientHom {
  FunctorKernel source_part;      // smallest f' in f with f / f' in Ker
  FunctorCokernel target_part;    // g / g' for the largest g' in Ker
  FPMod group;                    // Hom(f', g / g')
  std::vector<FunHom> elements;
  std::size_t source_lattice = 0;
  std::size_t target_lattice = 0;
  // Hom(f', g/g') -> Hom(M~f, M~g) is injective.
  bool faithful = true;
  std::size_t image_size = 0;
};

// Hom in A(M) for finite-length objects: the colimit of Hom(f', g / g')
// stabilizes at the extreme pair of the two finite lattices.
QuotientHom quotient_hom(const FPFunctor& f, const FPFunctor& g, const KernelSpec& k,
                         std::size_t max_lattice = 4096);

// Whether the two kernels agree on every object of the universe.
bool kernels_agree(const KernelSpec& a, const KernelSpec& b, const std::vector<FPFunctor>& universe);

}  // namespace freyd
