#include "freyd/serre.hpp"

#include <random>

#include "freyd/errors.hpp"

namespace freyd {

KernelSpec::KernelSpec(MSpec spec) : spec_(std::move(spec)), cache_(std::make_shared<Cache>()) {
  Realization check(spec_);
  (void)check;
}

bool KernelSpec::contains(const FPFunctor& f) const {
  if (f.ring() != ring()) throw RingMismatch("functor and kernel spec over different rings");
  std::string key = f.to_string();
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->verdicts.find(key);
    if (it != cache_->verdicts.end()) return it->second;
  }
  bool verdict = induced_functor(spec_, f).is_zero();
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->verdicts.emplace(key, verdict);
  return verdict;
}

bool kernel_member(const FPFunctor& f, const KernelSpec& k) { return k.contains(f); }

MSpec evaluation_at(const FPMod& x, const std::string& name) { return MSpec{x.ring(), x, name}; }

bool in_additive_closure(const FPFunctor& f, const std::vector<FPFunctor>& cls) {
  for (const auto& piece : decompose(f)) {
    bool found = false;
    for (const auto& c : cls)
      if (isomorphic(piece, c)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

ClosureReport closure_check(const std::vector<FPFunctor>& universe, const std::vector<std::size_t>& cls) {
  ClosureReport rep;
  rep.members = cls;
  std::vector<FPFunctor> objs;
  for (std::size_t i : cls) objs.push_back(universe.at(i));

  for (const auto& x : objs) {
    SubfunctorLattice lat(x);
    bool sub_ok = true, quo_ok = true;
    for (std::size_t s = 1; s + 1 < lat.size(); ++s) {
      FunctorKernel sub = lat.realize(s);
      if (sub_ok && !in_additive_closure(sub.object, objs)) {
        rep.witnesses.push_back({"subobject", x, sub.object});
        sub_ok = false;
      }
      FPFunctor quo = cokernel_f(sub.inclusion).object;
      if (quo_ok && !in_additive_closure(quo, objs)) {
        rep.witnesses.push_back({"quotient", x, quo});
        quo_ok = false;
      }
    }
  }
  for (const auto& e : universe) {
    if (in_additive_closure(e, objs)) continue;
    SubfunctorLattice lat(e);
    for (std::size_t s = 1; s + 1 < lat.size(); ++s) {
      FunctorKernel sub = lat.realize(s);
      if (in_additive_closure(sub.object, objs) && in_additive_closure(cokernel_f(sub.inclusion).object, objs)) {
        rep.witnesses.push_back({"extension", e, sub.object});
        break;
      }
    }
  }
  rep.closed = rep.witnesses.empty();
  return rep;
}

ClosureReport serre_closure_check(const KernelSpec& k, const std::vector<FPFunctor>& universe) {
  std::vector<std::size_t> cls;
  for (std::size_t i = 0; i < universe.size(); ++i)
    if (k.contains(universe[i])) cls.push_back(i);
  return closure_check(universe, cls);
}

namespace {

FPMod random_module(std::mt19937_64& rng, const CoeffRing& R) {
  std::size_t g = 1 + rng() % 2, r = rng() % 3;
  Mat rels(R, r, g);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < g; ++j) rels.set(i, j, static_cast<Scalar>(rng() % R.modulus()));
  return FPMod(R, g, rels);
}

FPFunctor random_functor(std::mt19937_64& rng, const CoeffRing& R) {
  FPMod m = random_module(rng, R), n = random_module(rng, R);
  auto homs = hom_group(m, n).elements();
  return FPFunctor(homs[rng() % homs.size()]);
}

}  // namespace

IdealReport tensor_ideal_check(const KernelSpec& k, const std::vector<FPFunctor>& universe, std::size_t samples,
                               std::uint64_t seed) {
  IdealReport rep;
  std::vector<FPFunctor> members;
  for (const auto& x : universe)
    if (k.contains(x)) members.push_back(x);
  auto test = [&](const FPFunctor& f, const FPFunctor& g) {
    ++rep.pairs;
    FPFunctor t = tensor_general(f, g);
    FPMod image = induced_functor(k.mspec(), t);
    if (!image.is_zero()) rep.failures.push_back({f, g, image});
  };
  for (const auto& f : members)
    for (const auto& g : members) test(f, g);
  for (const auto& f : members)
    for (const auto& g : universe)
      if (!k.contains(g)) test(f, g);
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    FPFunctor g = random_functor(rng, k.ring());
    FPFunctor f = members.empty() ? FPFunctor::zero(k.ring()) : members[rng() % members.size()];
    if (rng() % 4 == 0) f = FPFunctor::zero(k.ring());
    test(f, g);
  }
  rep.ideal = rep.failures.empty();
  return rep;
}

QuotientHom quotient_hom(const FPFunctor& f, const FPFunctor& g, const KernelSpec& k, std::size_t max_lattice) {
  QuotientHom out;
  SubfunctorLattice lf(f, max_lattice), lg(g, max_lattice);
  out.source_lattice = lf.size();
  out.target_lattice = lg.size();

  // f' with f / f' in Ker: these are closed under intersection, take the least
  std::vector<std::size_t> cand;
  for (std::size_t i = 0; i < lf.size(); ++i)
    if (k.contains(cokernel_f(lf.realize(i).inclusion).object)) cand.push_back(i);
  std::size_t least = cand.front();
  for (std::size_t i : cand)
    if (lf.weight(i) < lf.weight(least)) least = i;
  for (std::size_t i : cand)
    if (!lf.contains(i, least)) throw InternalError("no least subobject with quotient in the kernel");

  std::vector<std::size_t> gcand;
  for (std::size_t i = 0; i < lg.size(); ++i)
    if (k.contains(lg.realize(i).object)) gcand.push_back(i);
  std::size_t greatest = gcand.front();
  for (std::size_t i : gcand)
    if (lg.weight(i) > lg.weight(greatest)) greatest = i;
  for (std::size_t i : gcand)
    if (!lg.contains(greatest, i)) throw InternalError("no greatest subobject in the kernel");

  out.source_part = lf.realize(least);
  out.target_part = cokernel_f(lg.realize(greatest).inclusion);
  HomFunctors hom(out.source_part.object, out.target_part.object);
  out.group = hom.module();
  out.elements = hom.elements();

  Realization real(k.mspec());
  std::size_t zeros = 0;
  for (const auto& a : out.elements)
    if (real.map(a).is_zero()) ++zeros;
  out.faithful = zeros == 1;
  out.image_size = out.elements.size() / zeros;
  return out;
}

bool kernels_agree(const KernelSpec& a, const KernelSpec& b, const std::vector<FPFunctor>& universe) {
  for (const auto& x : universe)
    if (a.contains(x) != b.contains(x)) return false;
  return true;
}

}  // namespace freyd
