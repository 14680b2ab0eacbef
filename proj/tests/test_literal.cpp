#include <doctest.h>

#include "freyd/errors.hpp"
#include "freyd/literal.hpp"
#include "freyd/structure.hpp"

using namespace freyd;

TEST_CASE("matrix literals") {
  Mat a = parse_matrix("Z/4 [[2,2],[2,0]]");
  CHECK(a.ring() == CoeffRing::mod(4));
  CHECK(a.rows() == 2);
  CHECK(a.cols() == 2);
  CHECK(a(0, 1) == 2);
  CHECK(a(1, 1) == 0);
  CHECK(parse_matrix("Z/3 [[-1, 4]]")(0, 0) == 2);
  CHECK(parse_matrix("Z/3 [[-1, 4]]")(0, 1) == 1);
  Mat e = parse_matrix("Z/4 2x0 []");
  CHECK(e.rows() == 2);
  CHECK(e.cols() == 0);
  Mat t = parse_matrix("Z/4 0x3 []");
  CHECK(t.rows() == 0);
  CHECK(t.cols() == 3);
  CHECK(parse_matrix("Z/4 []").rows() == 0);
  Mat z = parse_matrix("Z/4 2x0 [[],[]]");
  CHECK(z.rows() == 2);
  CHECK(z.cols() == 0);
  CHECK(linalg::to_string(parse_matrix(linalg::to_string(a))) == linalg::to_string(a));
  CHECK(parse_matrix("Z [[5]]").ring().is_integers());
}

TEST_CASE("malformed matrix literals report a column") {
  try {
    parse_matrix("Z/4 [[1,2],[3]]");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 12);
  }
  CHECK_THROWS_AS(parse_matrix("Z/1 [[1]]"), ParseError);
  CHECK_THROWS_AS(parse_matrix("Q [[1]]"), ParseError);
  CHECK_THROWS_AS(parse_matrix("Z/4 [[1]] x"), ParseError);
  CHECK_THROWS_AS(parse_matrix("Z/4 [[1,]]"), ParseError);
  CHECK_THROWS_AS(parse_matrix("Z/4 3x1 [[1]]"), ParseError);
}

TEST_CASE("module literals") {
  CoeffRing R = CoeffRing::mod(4);
  CHECK(parse_module("mod Z/4 gens 1 rels [[2]]") == FPMod::cyclic(R, 2));
  CHECK(parse_module("free(Z/4, 3)") == FPMod::free(R, 3));
  CHECK(parse_module("cyc(Z/4,2)").cardinality() == 2);
  CHECK(parse_module("mod Z/4 gens 2 rels []").cardinality() == 16);
  FPMod m = parse_module("mod Z/4 gens 2 rels [[2,0],[0,1]]");
  CHECK(parse_module(m.to_string()) == m);
  CHECK_THROWS_AS(parse_module("mod Z/4 gens 2 rels [[1]]"), ParseError);
  CHECK_THROWS_AS(parse_module("free(Z/4)"), ParseError);
  CHECK_THROWS_AS(parse_module("lump(Z/4, 1)"), ParseError);
}

TEST_CASE("functor expressions") {
  CoeffRing R = CoeffRing::mod(4);
  FPFunctor y4 = parse_functor("yon(free(Z/4,1))");
  CHECK(isomorphic(y4, yoneda(FPMod::free(R, 1))));
  FPFunctor rad = parse_functor("rad(free(Z/4,1))");
  CHECK(isomorphic(rad, yoneda(FPMod::cyclic(R, 2))));
  // T and S of the Z/4 example
  FPFunctor t = parse_functor("coker(yonmap(cyc(Z/4,2), free(Z/4,1), Z/4 [[2]]))");
  FPFunctor s = parse_functor("coker(yonmap(free(Z/4,1), free(Z/4,1), Z/4 [[1]]))");
  CHECK(is_zero(s));
  CHECK(!is_zero(t));
  CHECK(evaluate(t, FPMod::free(R, 1)).is_zero());
  CHECK(evaluate(t, FPMod::cyclic(R, 2)).cardinality() == 2);
  CHECK(isomorphic(parse_functor("tensor(" + std::string("coker(yonmap(cyc(Z/4,2), free(Z/4,1), Z/4 [[2]]))") + "," +
                                 "coker(yonmap(cyc(Z/4,2), free(Z/4,1), Z/4 [[2]])))"),
                   yoneda(FPMod::cyclic(R, 2))));
  FPFunctor simple = parse_functor("simple(free(Z/4,1))");
  CHECK(evaluate(simple, FPMod::free(R, 1)).cardinality() == 2);
  CHECK(evaluate(simple, FPMod::cyclic(R, 2)).is_zero());
  FPFunctor k = parse_functor("ker(yonmap(cyc(Z/4,2), free(Z/4,1), Z/4 [[2]]))");
  CHECK(is_zero(k) == false);
  FPFunctor p = parse_functor("pres(cyc(Z/4,2), free(Z/4,1), Z/4 [[2]])");
  CHECK(p.m() == FPMod::cyclic(R, 2));
}

TEST_CASE("morphism literals") {
  FunHom id = parse_funhom("hom(yon(free(Z/4,1)), yon(free(Z/4,1)), Z/4 [[1]], Z/4 [])");
  CHECK(id == FunHom::identity(yoneda(FPMod::free(CoeffRing::mod(4), 1))));
  CHECK_THROWS_AS(parse_funhom("mystery(free(Z/4,1))"), ParseError);
  CHECK_THROWS_AS(parse_functor("yon(free(Z/4,1)"), ParseError);
  CHECK_THROWS(parse_funhom("yonmap(free(Z/4,1), free(Z/4,2), Z/4 [[1]])"));
}
