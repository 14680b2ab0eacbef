#include <doctest.h>

#include "freyd/errors.hpp"
#include "freyd/serre.hpp"

using namespace freyd;

namespace {

const CoeffRing Z4 = CoeffRing::mod(4);
const CoeffRing F2 = CoeffRing::mod(2);
const FPMod z4 = FPMod::free(Z4, 1);
const FPMod z2 = FPMod::cyclic(Z4, 2);
const ModHom j(z2, z4, Mat::from_rows(Z4, {{2}}));
const ModHom p(z4, z2, Mat::from_rows(Z4, {{1}}));

FPFunctor functor_t() { return cokernel_f(yoneda_map(j)).object; }
FPFunctor functor_s() { return cokernel_f(yoneda_map(p)).object; }

std::size_t find(const std::vector<FPFunctor>& objs, const FPFunctor& f) {
  for (std::size_t i = 0; i < objs.size(); ++i)
    if (isomorphic(objs[i], f)) return i;
  return objs.size();
}

}  // namespace

TEST_CASE("kernel membership for evaluation at Z/4") {
  KernelSpec k(evaluation_at(z4));
  CHECK(kernel_member(functor_t(), k));
  CHECK_FALSE(kernel_member(yoneda(z2), k));
  CHECK_FALSE(kernel_member(functor_s(), k));
  CHECK(kernel_member(FPFunctor::zero(Z4), k));
  CHECK(kernel_member(direct_sum_f({functor_t(), functor_t()}).object, k));
  CHECK_FALSE(kernel_member(direct_sum_f({functor_t(), functor_s()}).object, k));
  CHECK_THROWS_AS(KernelSpec(MSpec{Z4, FPMod::free(CoeffRing::mod(8), 1), "bad"}), IllFormedFunctor);
}

TEST_CASE("the kernel of evaluation at Z/4 is add(T) and is Serre") {
  auto universe = list_indec(Z4);
  KernelSpec k(evaluation_at(z4));
  auto rep = serre_closure_check(k, universe);
  CHECK(rep.closed);
  REQUIRE(rep.members.size() == 1);
  CHECK(isomorphic(universe[rep.members[0]], functor_t()));
}

TEST_CASE("closure of other classes") {
  auto universe = list_indec(Z4);
  std::size_t s = find(universe, functor_s()), t = find(universe, functor_t()), y2 = find(universe, yoneda(z2));
  REQUIRE(s < universe.size());
  // add(S) is the kernel of evaluation at Z/2
  CHECK(closure_check(universe, {s}).closed);
  KernelSpec k2(evaluation_at(z2));
  auto r2 = serre_closure_check(k2, universe);
  REQUIRE(r2.members.size() == 1);
  CHECK(r2.members[0] == s);
  // S and T together miss the extension (Z/2,-)
  auto st = closure_check(universe, {s, t});
  CHECK_FALSE(st.closed);
  bool ext = false;
  for (const auto& w : st.witnesses) ext = ext || (w.kind == "extension" && isomorphic(w.object, yoneda(z2)));
  CHECK(ext);
  auto only = closure_check(universe, {y2});
  CHECK_FALSE(only.closed);
  CHECK(closure_check(universe, {}).closed);
}

TEST_CASE("tensor ideal check") {
  auto universe = list_indec(Z4);
  KernelSpec k(evaluation_at(z4));
  auto rep = tensor_ideal_check(k, universe, 10, 0);
  CHECK_FALSE(rep.ideal);
  REQUIRE(!rep.failures.empty());
  CHECK(isomorphic(rep.failures[0].f, functor_t()));
  CHECK(isomorphic(rep.failures[0].g, functor_t()));
  CHECK(isomorphic(rep.failures[0].image, z2));

  KernelSpec kf(evaluation_at(FPMod::free(F2, 1)));
  auto field = tensor_ideal_check(kf, list_indec(F2), 30, 1);
  CHECK(field.ideal);
  CHECK(field.pairs == 30);
  KernelSpec kf2(MSpec{F2, FPMod::free(F2, 2), "double"});
  CHECK(tensor_ideal_check(kf2, list_indec(F2), 30, 2).ideal);
}

TEST_CASE("homs in the quotient") {
  KernelSpec k(evaluation_at(z4));
  auto tt = quotient_hom(functor_t(), functor_t(), k);
  CHECK(tt.group.is_zero());
  auto yy = quotient_hom(yoneda(z2), yoneda(z2), k);
  CHECK(yy.faithful);
  // the identity of (Z/2,-) restricted to f' and pushed to g / g'
  FunHom id = compose(yy.target_part.projection, yy.source_part.inclusion);
  CHECK_FALSE(id.is_zero());
  bool has_id = false;
  for (const auto& a : yy.elements) has_id = has_id || a == id;
  CHECK(has_id);
  auto y24 = quotient_hom(yoneda(z2), yoneda(z4), k);
  CHECK(y24.faithful);
  CHECK(y24.image_size == y24.group.cardinality());
  // compare with Hom(M~(Z/2,-), M~(Z/4,-)) = Hom(Z/2, Z/4)
  CHECK(y24.image_size <= hom_group(z2, z4).module().cardinality());
  CHECK(y24.image_size == 2);
  for (const auto& f : list_indec(Z4))
    for (const auto& g : list_indec(Z4)) {
      auto q = quotient_hom(f, g, k);
      CHECK(q.faithful);
      CHECK(q.source_lattice <= 4096);
    }
}

TEST_CASE("kernels agree under a faithful exact comparison") {
  auto universe = list_indec(Z4);
  KernelSpec a(evaluation_at(z4)), b(evaluation_at(FPMod::free(Z4, 2))), c(evaluation_at(z2));
  CHECK(kernels_agree(a, b, universe));
  CHECK_FALSE(kernels_agree(a, c, universe));
}
