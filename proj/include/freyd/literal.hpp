#pragma once

// Text literals for rings, matrices, modules and functor expressions.
//
//   ring     Z | Z/n
//   matrix   Z/4 [[2,2],[2,0]]         (Z/4 [] is 0 x 0; "Z/4 2x0 []" gives
//                                       an explicit shape)
//   module   mod Z/4 gens 1 rels [[2]] | free(Z/4, k) | cyc(Z/4, a)
//   functor  yon(<module>) | ker(<funhom>) | coker(<funhom>)
//            | tensor(<functor>, <functor>) | rad(<module>) | simple(<module>)
//            | pres(<module>, <module>, <matrix>)
//   funhom   yonmap(<module>, <module>, <matrix>)      (phi, -) for phi: M -> N
//            | hom(<functor>, <functor>, <matrix>, <matrix>)   the square (u, v)

#include <string>

#include "freyd/functor.hpp"

namespace freyd {

CoeffRing parse_ring(const std::string& text);
Mat parse_matrix(const std::string& text);
FPMod parse_module(const std::string& text);
FPFunctor parse_functor(const std::string& text);
FunHom parse_funhom(const std::string& text);

}  // namespace freyd
