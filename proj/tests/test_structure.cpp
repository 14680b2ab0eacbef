#include <doctest.h>

#include "freyd/errors.hpp"
#include "freyd/structure.hpp"

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

}  // namespace

TEST_CASE("radical of representables over Z/4") {
  auto r = radical_rep(z4);
  CHECK(isomorphic(r.object, yoneda(z2)));
  CHECK(is_mono(r.inclusion));
  auto r2 = radical_rep(z2);
  CHECK(isomorphic(r2.object, functor_s()));
}

TEST_CASE("radical agrees with the intersection of maximal subfunctors") {
  for (const auto& x : test_modules(Z4)) {
    SubfunctorLattice lat(yoneda(x));
    auto r = radical_rep(x);
    CHECK(isomorphic(lat.realize(lat.radical()).object, r.object));
  }
  SubfunctorLattice lf(yoneda(FPMod::free(F2, 1)));
  CHECK(lf.size() == 2);
  CHECK(is_zero(radical_rep(FPMod::free(F2, 1)).object));
}

TEST_CASE("simple objects over Z/4 and over a field") {
  auto s = simples(Z4);
  REQUIRE(s.size() == 2);
  CHECK(isomorphic(s[0], functor_s()));
  CHECK(isomorphic(s[1], functor_t()));
  for (const auto& x : s) CHECK(SubfunctorLattice(x).is_simple());
  CHECK(simples(F2).size() == 1);
}

TEST_CASE("length and socle of (Z/2,-)") {
  SubfunctorLattice lat(yoneda(z2));
  CHECK(lat.length() == 2);
  CHECK(isomorphic(lat.realize(lat.socle()).object, functor_s()));
  SubfunctorLattice l4(yoneda(z4));
  CHECK(l4.length() == 3);
  CHECK(SubfunctorLattice(FPFunctor::zero(Z4)).length() == 0);
}

TEST_CASE("decomposition splits sums") {
  auto sum = direct_sum_f({functor_t(), yoneda(z2)}).object;
  CHECK_FALSE(is_indecomposable(sum));
  auto pieces = decompose(sum);
  REQUIRE(pieces.size() == 2);
  CHECK(is_indecomposable(functor_t()));
}

TEST_CASE("indecomposables over Z/4") {
  auto objs = list_indec(Z4);
  REQUIRE(objs.size() == 5);
  CHECK(isomorphic(objs[0], yoneda(z4)));
  CHECK(isomorphic(objs[1], yoneda(z2)));
  int s = 0, t = 0;
  for (const auto& o : objs) {
    s += isomorphic(o, functor_s());
    t += isomorphic(o, functor_t());
  }
  CHECK(s == 1);
  CHECK(t == 1);
}

TEST_CASE("indecomposables over a field are the representables") {
  auto objs = list_indec(F2);
  REQUIRE(objs.size() == 1);
  CHECK(isomorphic(objs[0], yoneda(FPMod::free(F2, 1))));
}
