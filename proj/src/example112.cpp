#include "freyd/example112.hpp"

#include "freyd/errors.hpp"
#include "freyd/serre.hpp"
#include "freyd/structure.hpp"

namespace freyd {

namespace {

struct Z4Data {
  CoeffRing R = CoeffRing::mod(4);
  FPMod z4 = FPMod::free(R, 1);
  FPMod z2 = FPMod::cyclic(R, 2);
  ModHom j{z2, z4, Mat::from_rows(R, {{2}})};
  ModHom p{z4, z2, Mat::from_rows(R, {{1}})};
  FPFunctor t = cokernel_f(yoneda_map(j)).object;
  FPFunctor s = cokernel_f(yoneda_map(p)).object;
};

Check verdict(bool ok, const std::string& pass, const std::string& fail, Json witness = Json::object()) {
  return Check{"", ok ? Status::Pass : Status::Fail, ok ? pass : fail, std::move(witness)};
}

bool same_size(const FPMod& a, std::uint64_t n) { return a.cardinality() == n; }

}  // namespace

std::vector<Check> example112_checks(const Example112Options& opts) {
  const Z4Data d;
  const EngineOptions& eo = opts.engine;
  std::vector<Check> out;

  out.push_back(guarded("simples", [&] {
    auto sims = simples(d.R);
    Json w = Json::array();
    for (const auto& f : sims) w.push_back(to_json(f));
    bool ok = sims.size() == 2;
    bool have_s = false, have_t = false;
    for (const auto& f : sims) {
      FPMod at4 = evaluate(f, d.z4), at2 = evaluate(f, d.z2);
      if (isomorphic(f, d.s) && same_size(at4, 2) && isomorphic(at4, d.z2) && at2.is_zero()) have_s = true;
      if (isomorphic(f, d.t) && at4.is_zero() && same_size(at2, 2) && isomorphic(at2, d.z2)) have_t = true;
    }
    ok = ok && have_s && have_t;
    return verdict(ok, "two simples: S(Z/4) = Z/2, S(Z/2) = 0 and T(Z/4) = 0, T(Z/2) = Z/2",
                   std::to_string(sims.size()) + " simples, not S and T", Json{{"simples", w}});
  }));

  out.push_back(guarded("rad(Z/4,-)", [&] {
    FunctorKernel rad = radical_rep(d.z4);
    bool ok = isomorphic(rad.object, yoneda(d.z2));
    return verdict(ok, "rad(Z/4,-) = (Z/2,-)", "rad(Z/4,-) is not (Z/2,-)", Json{{"radical", to_json(rad.object)}});
  }));

  out.push_back(guarded("(Z/2,-) length and socle", [&] {
    SubfunctorLattice lat(yoneda(d.z2));
    FunctorKernel soc = lat.realize(lat.socle());
    bool ok = lat.length() == 2 && isomorphic(soc.object, d.s);
    return verdict(ok, "(Z/2,-) has length 2 with socle S", "length or socle differ",
                   Json{{"length", lat.length()}, {"lattice", lat.size()}, {"socle", to_json(soc.object)}});
  }));

  std::vector<FPFunctor> universe;
  out.push_back(guarded("indecomposables", [&] {
    universe = list_indec(d.R);
    SubfunctorLattice lat(yoneda(d.z4));
    FunctorKernel soc = lat.realize(lat.socle());
    if (!isomorphic(soc.object, d.s)) return verdict(false, "", "the socle of (Z/4,-) is not S", to_json(soc.object));
    std::vector<FPFunctor> expect{yoneda(d.z4), yoneda(d.z2), d.s, d.t, cokernel_f(soc.inclusion).object};
    Json w = Json::array();
    for (const auto& f : universe) w.push_back(to_json(f));
    bool ok = universe.size() == 5;
    for (const auto& e : expect) {
      std::size_t hits = 0;
      for (const auto& f : universe) hits += isomorphic(e, f);
      ok = ok && hits == 1;
    }
    return verdict(ok, "exactly (Z/4,-), (Z/2,-), S, T and (Z/4,-)/S",
                   std::to_string(universe.size()) + " indecomposables, not the expected five", Json{{"objects", w}});
  }));

  out.push_back(guarded("(id_Z/2,-)⊗(j,-)", [&] {
    FunHom h = tensor_hom(FunHom::identity(yoneda(d.z2)), yoneda_map(d.j), eo);
    return verdict(h.is_zero(), "(id_Z/2,-) ⊗ (j,-) = 0", "(id_Z/2,-) ⊗ (j,-) is nonzero",
                   Json{{"u", to_json(h.u().mat())}, {"v", to_json(h.v().mat())}});
  }));

  out.push_back(guarded("T⊗T", [&] {
    FPFunctor tt = tensor_general(d.t, d.t, eo);
    return verdict(isomorphic(tt, yoneda(d.z2)), "T ⊗ T = (Z/2,-)", "T ⊗ T is not (Z/2,-)",
                   Json{{"tensor", to_json(tt)}, {"expected", to_json(yoneda(d.z2))}});
  }));

  out.push_back(guarded("T⊗(Z/2,-)", [&] {
    FPFunctor t2 = tensor_general(d.t, yoneda(d.z2), eo);
    return verdict(isomorphic(t2, yoneda(d.z2)), "T ⊗ (Z/2,-) = (Z/2,-)", "T ⊗ (Z/2,-) is not (Z/2,-)",
                   Json{{"tensor", to_json(t2)}});
  }));

  out.push_back(guarded("T⊗(p,-) not monic", [&] {
    FunHom tp = tensor_hom(FunHom::identity(d.t), yoneda_map(d.p), eo);
    FPFunctor k = kernel_f(tp).object;
    return verdict(!is_zero(k), "T ⊗ (p,-) has a nonzero kernel, so ⊗ is not exact", "T ⊗ (p,-) is monic",
                   Json{{"kernel", to_json(k)}});
  }));

  KernelSpec k(evaluation_at(d.z4, "eval Z/4"));
  out.push_back(guarded("Ker(eval Z/4)", [&] {
    if (universe.empty()) universe = list_indec(d.R);
    ClosureReport rep = serre_closure_check(k, universe);
    bool only_t = rep.members.size() == 1 && isomorphic(universe[rep.members[0]], d.t);
    bool sums = k.contains(direct_sum_f({d.t, d.t, d.t}).object) && !k.contains(direct_sum_f({d.t, d.s}).object);
    Json members = Json::array();
    for (std::size_t i : rep.members) members.push_back(to_json(universe[i]));
    return verdict(only_t && sums && rep.closed, "the kernel is add(T): sums of copies of T, a Serre subcategory",
                   "the kernel is not add(T)", Json{{"members", members}, {"serre", rep.closed}});
  }));

  out.push_back(guarded("tensor ideal", [&] {
    if (universe.empty()) universe = list_indec(d.R);
    IdealReport rep = tensor_ideal_check(k, universe, opts.samples, opts.seed);
    bool witness_tt = !rep.failures.empty() && isomorphic(rep.failures[0].f, d.t) && isomorphic(rep.failures[0].g, d.t);
    Json w{{"pairs", rep.pairs}, {"failures", rep.failures.size()}};
    if (!rep.failures.empty()) {
      w["f"] = to_json(rep.failures[0].f);
      w["g"] = to_json(rep.failures[0].g);
      w["image"] = to_json(rep.failures[0].image);
    }
    return verdict(!rep.ideal && witness_tt, "not a tensor ideal: M~(T ⊗ T) = Z/2 though M~(T) = 0",
                   "no (T, T) witness against the tensor ideal", w);
  }));
  return out;
}

Report run_example112(const Example112Options& opts) {
  Report r("example112");
  for (auto& c : example112_checks(opts)) r.add(std::move(c));
  return r;
}

}  // namespace freyd
