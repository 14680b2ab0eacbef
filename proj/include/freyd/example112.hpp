#pragma once

// The Z/4 example: simples, radicals, the five indecomposables, the tensor
// identities and the failure of evaluation at Z/4 to be a tensor functor.

#include <cstdint>

#include "freyd/report.hpp"

namespace freyd {

struct Example112Options {
  EngineOptions engine;
  std::size_t samples = 20;
  std::uint64_t seed = 0;
};

// The ten checks, in order: simples, rad(Z/4,-), length of (Z/2,-),
// indecomposables, (id,-)(x)(j,-), T(x)T, T(x)(Z/2,-), T(x)(p,-) not monic,
// Ker(eval at Z/4), tensor ideal.
std::vector<Check> example112_checks(const Example112Options& opts = {});
Report run_example112(const Example112Options& opts = {});

}  // namespace freyd
