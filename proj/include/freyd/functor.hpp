#pragma once

// Finitely presented functors on mod-Lambda: the abelian category Ab(C) for
// C = add(Lambda).
//
// A functor is presented by a module map g: M -> N and stands for
//   X |-> coker( Hom(N, X) -> Hom(M, X) ),  psi |-> psi . g.
// A morphism F(g: M -> N) -> G(g': M' -> N') is a square u: M' -> M,
// v: N' -> N with g . u = v . g', modulo u ~ u + s . g'.

#include <optional>
#include <string>
#include <vector>

#include "freyd/fpmod.hpp"

namespace freyd {

struct EngineOptions {
  // Test hook: "tensor-flat" drops half of the relations of every flat tensor
  // product. Empty for normal operation.
  std::string fault;
};

class FPFunctor {
 public:
  FPFunctor() = default;
  explicit FPFunctor(ModHom pres) : pres_(std::move(pres)) {}

  static FPFunctor zero(CoeffRing ring);

  const CoeffRing& ring() const { return pres_.src().ring(); }
  const ModHom& pres() const { return pres_; }
  const FPMod& m() const { return pres_.src(); }
  const FPMod& n() const { return pres_.dst(); }

  std::string to_string() const;

  friend bool operator==(const FPFunctor&, const FPFunctor&) = default;

 private:
  ModHom pres_;
};

class FunHom {
 public:
  FunHom() = default;
  // Checks the square and stores the canonical representative of the class.
  FunHom(FPFunctor src, FPFunctor dst, const ModHom& u, const ModHom& v);

  static FunHom identity(const FPFunctor& f);
  static FunHom zero(const FPFunctor& src, const FPFunctor& dst);

  const FPFunctor& src() const { return src_; }
  const FPFunctor& dst() const { return dst_; }
  const ModHom& u() const { return u_; }
  const ModHom& v() const { return v_; }
  bool is_zero() const { return u_.is_zero(); }

  friend bool operator==(const FunHom&, const FunHom&) = default;

 private:
  FPFunctor src_;
  FPFunctor dst_;
  ModHom u_;
  ModHom v_;
};

// beta . alpha
FunHom compose(const FunHom& beta, const FunHom& alpha);
FunHom operator+(const FunHom& a, const FunHom& b);
FunHom scale(Scalar k, const FunHom& a);

// An additive functor C -> mod-Lambda' determined by V = M(Lambda), a
// Lambda'-module on which Lambda = Z/n acts through the integers.
struct MSpec {
  CoeffRing source;
  FPMod target;
  std::string name;
};

// Evaluates functors and morphisms through an MSpec: the exact extension
// M~ of the additive functor it describes. Evaluation at X is the MSpec
// (Lambda, Lambda, X).
class Realization {
 public:
  // Throws IllFormedFunctor unless n * V = 0.
  explicit Realization(const MSpec& spec);
  Realization(CoeffRing source, const FPMod& x) : Realization(MSpec{source, x, ""}) {}

  const MSpec& spec() const { return spec_; }
  // M(phi) for a matrix over Lambda.
  Mat lift(const Mat& lambda_mat) const;
  // M~((m, -)) inside V^{m.gens}.
  Subquotient representable(const FPMod& m) const;
  // M~(F).
  Subquotient value(const FPFunctor& f) const;
  // M~(alpha) between the given values of its source and target.
  ModHom map(const FunHom& alpha, const Subquotient& src_value, const Subquotient& dst_value) const;
  ModHom map(const FunHom& alpha) const;

 private:
  MSpec spec_;
};

FPFunctor yoneda(const FPMod& m);
// (phi, -) : (B, -) -> (A, -) for phi: A -> B.
FunHom yoneda_map(const ModHom& phi);
// Image of a morphism Lambda^a -> Lambda^b of C under C -> Ab(C).
FunHom embed_free_map(const Mat& phi);

FPMod evaluate(const FPFunctor& f, const FPMod& x);
// F(xi): F(X) -> F(Y) on the modules returned by evaluate.
ModHom evaluate_map(const FPFunctor& f, const ModHom& xi);
ModHom evaluate_hom(const FunHom& alpha, const FPMod& x);

// Indecomposable test modules (cap 1), cached per ring.
const std::vector<FPMod>& test_modules(CoeffRing ring);

struct FunctorTable {
  std::vector<FPMod> values;                 // F(X) per test module
  std::vector<std::vector<Scalar>> invariants;
  friend bool operator==(const FunctorTable& a, const FunctorTable& b) { return a.invariants == b.invariants; }
};
FunctorTable table(const FPFunctor& f);

bool is_zero(const FPFunctor& f);
// Pointwise mono/epi/iso at every test module.
bool is_mono(const FunHom& alpha);
bool is_epi(const FunHom& alpha);
bool is_iso(const FunHom& alpha);

// Solves for v given u; throws NotLiftable.
FunHom lift_hom(const FPFunctor& src, const FPFunctor& dst, const ModHom& u);

class HomFunctors {
 public:
  HomFunctors(const FPFunctor& f, const FPFunctor& g);
  const FPMod& module() const { return kernel_.module; }
  std::vector<FunHom> generators() const;
  FunHom element(const Row& c) const;
  Row coords(const FunHom& alpha) const;
  std::vector<FunHom> elements(std::uint64_t budget = kDefaultBudget) const;

 private:
  FPFunctor f_;
  FPFunctor g_;
  Subquotient at_m_;  // G(M_F)
  KernelResult kernel_;
};

HomFunctors hom_functors(const FPFunctor& f, const FPFunctor& g);

struct FunctorIso {
  FunHom to;
  FunHom from;
};
std::optional<FunctorIso> find_iso(const FPFunctor& f, const FPFunctor& g);
bool isomorphic(const FPFunctor& f, const FPFunctor& g);

struct FunctorKernel {
  FPFunctor object;
  FunHom inclusion;
};
struct FunctorCokernel {
  FPFunctor object;
  FunHom projection;
};

// Both are validated pointwise at every test module; a mismatch raises
// InternalError.
FunctorKernel kernel_f(const FunHom& alpha);
FunctorCokernel cokernel_f(const FunHom& alpha);
// Image as a subobject of the target.
FunctorKernel image_f(const FunHom& alpha);

struct FunctorSum {
  FPFunctor object;
  std::vector<FunHom> inj;
  std::vector<FunHom> proj;
};
FunctorSum direct_sum_f(const std::vector<FPFunctor>& parts);

// Presentation with unit-pivot generators removed, and the identifying iso.
FunctorIso simplify(const FPFunctor& f);

// Flat tensor product of free-presented modules, respecting the fault hook.
FPMod flat_tensor_module(const FPMod& m, const FPMod& n, const EngineOptions& opts = {});
FPFunctor tensor_flat(const FPMod& m, const FPMod& n, const EngineOptions& opts = {});
FPFunctor tensor_general(const FPFunctor& f, const FPFunctor& g, const EngineOptions& opts = {});
FunHom tensor_hom(const FunHom& alpha, const FunHom& beta, const EngineOptions& opts = {});
FPFunctor unit_functor(CoeffRing ring);

// Coherence constraints on the presentations produced by tensor_general.
FunHom associator(const FPFunctor& f, const FPFunctor& g, const FPFunctor& h);
FunHom left_unitor(const FPFunctor& f);   // 1 (x) F -> F
FunHom right_unitor(const FPFunctor& f);  // F (x) 1 -> F
FunHom braiding(const FPFunctor& f, const FPFunctor& g);  // F (x) G -> G (x) F

// Induced exact functor M~ on a functor.
FPMod induced_functor(const MSpec& spec, const FPFunctor& f);

}  // namespace freyd
