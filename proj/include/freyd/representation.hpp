#pragma once

// Tensor representations of a tensor quiver in mod-Lambda, Lambda = Z/n, and
// the additive functor they induce on ZD^{(x),+} (signed when the quiver is).
//
// File format, one item per line, '#' comments:
//   ring Z/3
//   rep vertex <v> = <module literal>
//   rep edge <e> = <matrix literal>       (any edge name, also <e,w> / [w,e])
//   kappa <u> <v> = <matrix literal>      T(u) (x) T(v) -> T(u (x) v)
//   kappa0 = <matrix literal>             Lambda -> T(1)
//
// Structural and derived edges without an explicit matrix get the value their
// diagram forces:
//   T(alpha_vw)    = s(v,w) kappa_vw^-1 . swap . kappa_wv
//   T(e (x) id_w)  = s(e,w) kappa^-1 . (T(e) (x) id) . kappa
//   T(id_w (x) e)  =        kappa^-1 . (id (x) T(e)) . kappa
//   T(beta_uvw)    = (kappa_u,vw . (id (x) kappa_vw))^-1 . (kappa_uv (x) id) . kappa_uv,w
//   T(u_v)         = (kappa0 (x) id) . kappa_1v
// where s(a,b) = (-1)^{|a||b|} on signed quivers and 1 otherwise. Explicit
// matrices are checked against the same diagrams.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "freyd/fpmod.hpp"
#include "freyd/quiver.hpp"

namespace freyd {

struct RepSpec {
  CoeffRing ring = CoeffRing::mod(2);
  std::map<std::string, FPMod> vertices;
  std::map<std::string, Mat> edges;
  std::map<std::pair<std::string, std::string>, Mat> kappa;
  std::optional<Mat> kappa0;

  // Throws ParseError.
  static RepSpec parse(const std::string& text);
};

// A two-sided inverse, or nothing.
std::optional<ModHom> invert(const ModHom& h);

class Representation {
 public:
  // Resolves names against the quiver; throws ShapeError on missing data or
  // mismatched shapes.
  Representation(const TensorQuiver& q, const RepSpec& spec);

  const TensorQuiver& quiver() const { return q_; }
  const CoeffRing& ring() const { return ring_; }
  const FPMod& object(VertexId v) const { return objects_.at(v); }
  const ModHom& kappa(VertexId u, VertexId v) const { return kappa_.at({u, v}); }
  const ModHom& kappa0() const { return kappa0_; }
  // Throws NoSolution if kappa_uv is not invertible.
  const ModHom& kappa_inv(VertexId u, VertexId v) const;

  bool is_explicit(EdgeId e) const { return explicit_.count(e) > 0; }
  // The given matrix, or the forced one.
  ModHom edge(EdgeId e) const;
  // The value forced by the diagram of a structural or derived edge.
  ModHom forced(EdgeId e) const;
  // The two sides of the diagram of a non-declared edge: both equal iff the
  // diagram commutes.
  std::pair<ModHom, ModHom> diagram(EdgeId e) const;

  ModHom path(const Path& p) const;
  ModHom lincomb(const LinComb& c) const;
  // swap: A (x) B -> B (x) A on tensor_mod presentations.
  static ModHom swap(const FPMod& a, const FPMod& b);

 private:
  TensorQuiver q_;
  CoeffRing ring_;
  std::vector<FPMod> objects_;
  std::map<std::pair<VertexId, VertexId>, ModHom> kappa_;
  ModHom kappa0_;
  std::map<EdgeId, ModHom> explicit_;
  mutable std::map<std::pair<VertexId, VertexId>, ModHom> kappa_inv_;
  mutable std::map<EdgeId, ModHom> cache_;
};

struct DiagramFailure {
  std::string check;
  std::string where;
  Mat lhs;
  Mat rhs;
};

struct RepCheckEntry {
  std::string name;
  std::size_t instances = 0;
  std::optional<DiagramFailure> failure;
};

struct RepReport {
  bool ok = true;
  std::vector<RepCheckEntry> entries;
  std::optional<DiagramFailure> first_failure;
};

// Relations (instances with edges of depth <= max_depth, dropped ones
// excluded, and the declared ones) as matrix identities; invertibility of
// kappa; the squares for alpha, gamma (x) id (signed) and id (x) gamma
// (unsigned); associativity and unit compatibility.
RepReport check_representation(const TensorQuiver& q, const RepSpec& spec, int max_depth = 1);

// Morphisms of ZD^{(x),+}: matrices of parallel combinations, entry (i, j)
// going from src[i] to dst[j].
struct AddMorphism {
  std::vector<VertexId> src;
  std::vector<VertexId> dst;
  std::vector<std::vector<LinComb>> entries;
};

AddMorphism compose(const TensorQuiver& q, const AddMorphism& later, const AddMorphism& first);

// The additive functor M on ZD^{(x),+} induced by a representation.
class InducedFunctor {
 public:
  // Runs check_representation; throws IllFormedFunctor when it fails.
  InducedFunctor(const TensorQuiver& q, const RepSpec& spec);

  const Representation& rep() const { return *rep_; }
  FPMod object(const std::vector<VertexId>& vs) const;
  ModHom morphism(const AddMorphism& m) const;
  ModHom lincomb(const LinComb& c) const { return rep_->lincomb(c); }
  // kappa^-1 . (M(a) (x) M(b)) . kappa between single vertices.
  ModHom tensor(const LinComb& a, const LinComb& b) const;
  // M(e) = T(e) on every edge of depth <= max_depth and on every vertex;
  // the names of the edges where it fails.
  std::vector<std::string> factorization_failures(int max_depth = 1) const;

 private:
  std::shared_ptr<Representation> rep_;
};

struct UniversalFailure {
  std::string check;
  std::string where;
  std::string detail;
};

struct UniversalReport {
  std::size_t exactness = 0;      // kernel/cokernel diagrams checked
  std::size_t functoriality = 0;  // composable pairs checked
  std::size_t tensor = 0;         // tensor pairs checked
  std::vector<UniversalFailure> failures;
  bool ok() const { return failures.empty(); }
};

// Samples morphisms of ZD^{(x),+} whose entries combine at most two hom-basis
// paths of length <= cap (mt19937_64 seeded by `seed`) and checks that M
// respects composition and normal forms, that M~ carries the kernel and cokernel of each sample to an
// exact sequence at every test module, and that M is compatible with the
// tensor product (matrices, and on representables up to isomorphism).
UniversalReport universal_property_check(const TensorQuiver& q, const RepSpec& spec, std::size_t samples,
                                         std::uint64_t seed, std::size_t cap = 2);

struct QuotientLift {
  std::size_t classes = 0;
  std::vector<std::string> failures;
};

// D1 = D plus the relation lhs = rhs. Every hom-basis class of ZD1^+ (length
// <= cap) is lifted to its normal form in ZD^+ and must map back to itself.
QuotientLift quotient_lift_check(const TensorQuiver& d, const std::string& lhs, const std::string& rhs,
                                 std::size_t cap = 2);

}  // namespace freyd
