#include "freyd/functor.hpp"

#include <map>
#include <mutex>

#include "freyd/errors.hpp"

namespace freyd {

using linalg::block_diag;
using linalg::hstack;
using linalg::kron;

namespace {

constexpr std::uint64_t kIsoSearchBudget = 1 << 16;

Row flatten(const Mat& a) { return a.entries(); }

Mat unflatten(CoeffRing ring, std::size_t rows, std::size_t cols, const Row& v) {
  return Mat(ring, rows, cols, v);
}

Mat rows_of(CoeffRing ring, std::size_t cols, const std::vector<Row>& rows) {
  return Mat::from_rows(ring, cols, rows);
}

// Map between subquotients induced by a linear map `lin` of the ambient spaces.
ModHom induced_map(const Subquotient& src, const Subquotient& dst, const Mat& lin) {
  std::vector<Row> rows;
  const Mat& gens = src.generators();
  for (std::size_t i = 0; i < gens.rows(); ++i) rows.push_back(dst.coords(linalg::row_times(gens.row(i), lin)));
  return ModHom(src.module(), dst.module(), rows_of(src.module().ring(), dst.module().gens(), rows));
}

// Preimage of x under an injective module map.
Row preimage(const ModHom& inj, const Row& x) {
  Mat a = vstack(inj.mat(), inj.dst().rels());
  Mat sol = linalg::solve_right(a, Mat::row_vector(a.ring(), x));
  Row c(inj.src().gens());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = sol(0, i);
  return inj.src().reduce(c);
}

// v with g_src . u = v . g_dst, canonical; throws NotLiftable.
ModHom solve_v(const FPFunctor& src, const FPFunctor& dst, const ModHom& u) {
  const FPMod& n_src = src.n();
  const FPMod& n_dst = dst.n();
  const CoeffRing R = src.ring();
  Mat target_mat = u.mat() * src.pres().mat();  // M_dst -> N_src
  HomGroup hg(n_dst, n_src);
  auto gens = hg.generators();
  std::vector<Row> cols;
  for (const auto& t : gens) cols.push_back(flatten(dst.pres().mat() * t.mat()));
  const std::size_t width = dst.m().gens() * n_src.gens();
  Mat system = vstack(rows_of(R, width, cols), kron(Mat::identity(R, dst.m().gens()), n_src.rels()));
  Mat sol;
  try {
    sol = linalg::solve_right(system, Mat::row_vector(R, flatten(target_mat)));
  } catch (const NoSolution&) {
    throw NotLiftable("no v completes the square for the given u");
  }
  Mat v(R, n_dst.gens(), n_src.gens());
  for (std::size_t j = 0; j < gens.size(); ++j) v = v + linalg::scale(sol(0, j), gens[j].mat());
  return ModHom(n_dst, n_src, v);
}

}  // namespace

// ---------------------------------------------------------------------------

FPFunctor FPFunctor::zero(CoeffRing ring) {
  FPMod z = FPMod::zero(ring);
  return FPFunctor(ModHom::identity(z));
}

std::string FPFunctor::to_string() const {
  return "coker(" + n().to_string() + " -> " + m().to_string() + " by " + linalg::to_string(pres_.mat()) + ")";
}

// ---------------------------------------------------------------------------

Realization::Realization(const MSpec& spec) : spec_(spec) {
  const FPMod& v = spec.target;
  const Scalar n = spec.source.modulus();
  for (std::size_t i = 0; i < v.gens(); ++i) {
    Row e(v.gens(), 0);
    e[i] = v.ring().reduce(n);
    if (!v.is_zero_element(e))
      throw IllFormedFunctor("target module is not killed by " + std::to_string(n) +
                             ", so it carries no action of " + spec.source.name());
  }
}

Mat Realization::lift(const Mat& lambda_mat) const {
  const FPMod& v = spec_.target;
  Mat converted(v.ring(), lambda_mat.rows(), lambda_mat.cols(), lambda_mat.entries());
  return kron(converted, Mat::identity(v.ring(), v.gens()));
}

Subquotient Realization::representable(const FPMod& m) const {
  const FPMod& v = spec_.target;
  const CoeffRing R = v.ring();
  Mat constraint = vstack(lift(m.rels().transpose()), kron(Mat::identity(R, m.rels().rows()), v.rels()));
  Mat gens = linalg::left_kernel(constraint).cols_range(0, m.gens() * v.gens());
  return Subquotient(gens, kron(Mat::identity(R, m.gens()), v.rels()));
}

Subquotient Realization::value(const FPFunctor& f) const {
  const FPMod& v = spec_.target;
  Subquotient at_m = representable(f.m());
  Subquotient at_n = representable(f.n());
  Mat images = at_n.generators() * lift(f.pres().mat().transpose());
  return Subquotient(at_m.generators(),
                     vstack(images, kron(Mat::identity(v.ring(), f.m().gens()), v.rels())));
}

ModHom Realization::map(const FunHom& alpha, const Subquotient& src_value, const Subquotient& dst_value) const {
  return induced_map(src_value, dst_value, lift(alpha.u().mat().transpose()));
}

ModHom Realization::map(const FunHom& alpha) const {
  return map(alpha, value(alpha.src()), value(alpha.dst()));
}

// ---------------------------------------------------------------------------

FunHom::FunHom(FPFunctor src, FPFunctor dst, const ModHom& u, const ModHom& v)
    : src_(std::move(src)), dst_(std::move(dst)) {
  if (!(u.src() == dst_.m() && u.dst() == src_.m() && v.src() == dst_.n() && v.dst() == src_.n()))
    throw ShapeError("functor morphism components have the wrong modules");
  if (!(compose(src_.pres(), u) == compose(v, dst_.pres())))
    throw ShapeError("functor morphism square does not commute");
  Subquotient classes = Realization(src_.ring(), src_.m()).value(dst_);
  Row canon = classes.lift(classes.coords(flatten(u.mat())));
  u_ = ModHom(dst_.m(), src_.m(), unflatten(src_.ring(), dst_.m().gens(), src_.m().gens(), canon));
  v_ = solve_v(src_, dst_, u_);
}

FunHom FunHom::identity(const FPFunctor& f) {
  return FunHom(f, f, ModHom::identity(f.m()), ModHom::identity(f.n()));
}

FunHom FunHom::zero(const FPFunctor& src, const FPFunctor& dst) {
  return FunHom(src, dst, ModHom::zero(dst.m(), src.m()), ModHom::zero(dst.n(), src.n()));
}

FunHom compose(const FunHom& beta, const FunHom& alpha) {
  if (!(alpha.dst() == beta.src())) throw ShapeError("composition of non-composable functor morphisms");
  return FunHom(alpha.src(), beta.dst(), compose(alpha.u(), beta.u()), compose(alpha.v(), beta.v()));
}

FunHom operator+(const FunHom& a, const FunHom& b) {
  if (!(a.src() == b.src() && a.dst() == b.dst())) throw ShapeError("sum of non-parallel functor morphisms");
  return FunHom(a.src(), a.dst(), a.u() + b.u(), a.v() + b.v());
}

FunHom scale(Scalar k, const FunHom& a) { return FunHom(a.src(), a.dst(), scale(k, a.u()), scale(k, a.v())); }

// ---------------------------------------------------------------------------

FPFunctor yoneda(const FPMod& m) { return FPFunctor(ModHom::zero(m, FPMod::zero(m.ring()))); }

FunHom yoneda_map(const ModHom& phi) {
  FPFunctor src = yoneda(phi.dst());
  FPFunctor dst = yoneda(phi.src());
  FPMod z = FPMod::zero(phi.src().ring());
  return FunHom(src, dst, phi, ModHom::identity(z));
}

FunHom embed_free_map(const Mat& phi) {
  const CoeffRing R = phi.ring();
  FPMod a = FPMod::free(R, phi.rows()), b = FPMod::free(R, phi.cols());
  return yoneda_map(ModHom(b, a, phi.transpose()));
}

FPMod evaluate(const FPFunctor& f, const FPMod& x) { return Realization(f.ring(), x).value(f).module(); }

ModHom evaluate_map(const FPFunctor& f, const ModHom& xi) {
  Subquotient at_x = Realization(f.ring(), xi.src()).value(f);
  Subquotient at_y = Realization(f.ring(), xi.dst()).value(f);
  return induced_map(at_x, at_y, kron(Mat::identity(f.ring(), f.m().gens()), xi.mat()));
}

ModHom evaluate_hom(const FunHom& alpha, const FPMod& x) { return Realization(alpha.src().ring(), x).map(alpha); }

const std::vector<FPMod>& test_modules(CoeffRing ring) {
  static std::mutex mu;
  static std::map<Scalar, std::vector<FPMod>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(ring.modulus());
  if (it == cache.end()) it = cache.emplace(ring.modulus(), enumerate_indec_modules(ring, 1)).first;
  return it->second;
}

FunctorTable table(const FPFunctor& f) {
  FunctorTable t;
  for (const auto& x : test_modules(f.ring())) {
    t.values.push_back(evaluate(f, x));
    t.invariants.push_back(t.values.back().invariants());
  }
  return t;
}

bool is_zero(const FPFunctor& f) {
  for (const auto& x : test_modules(f.ring()))
    if (!evaluate(f, x).is_zero()) return false;
  return true;
}

bool is_mono(const FunHom& alpha) {
  for (const auto& x : test_modules(alpha.src().ring()))
    if (!kernel(evaluate_hom(alpha, x)).module.is_zero()) return false;
  return true;
}

bool is_epi(const FunHom& alpha) {
  for (const auto& x : test_modules(alpha.src().ring()))
    if (!cokernel(evaluate_hom(alpha, x)).module.is_zero()) return false;
  return true;
}

bool is_iso(const FunHom& alpha) { return is_mono(alpha) && is_epi(alpha); }

FunHom lift_hom(const FPFunctor& src, const FPFunctor& dst, const ModHom& u) {
  return FunHom(src, dst, u, solve_v(src, dst, u));
}

// ---------------------------------------------------------------------------

namespace {

KernelResult hom_kernel(const FPFunctor& f, const FPFunctor& g, const Subquotient& at_m) {
  Subquotient at_n = Realization(f.ring(), f.n()).value(g);
  ModHom gmap = induced_map(at_m, at_n, kron(Mat::identity(f.ring(), g.m().gens()), f.pres().mat()));
  return kernel(gmap);
}

}  // namespace

HomFunctors::HomFunctors(const FPFunctor& f, const FPFunctor& g)
    : f_(f), g_(g), at_m_(Realization(f.ring(), f.m()).value(g)), kernel_(hom_kernel(f, g, at_m_)) {}

FunHom HomFunctors::element(const Row& c) const {
  Row x = kernel_.embedding.apply(c);
  Mat u = unflatten(f_.ring(), g_.m().gens(), f_.m().gens(), at_m_.lift(x));
  return lift_hom(f_, g_, ModHom(g_.m(), f_.m(), u));
}

std::vector<FunHom> HomFunctors::generators() const {
  std::vector<FunHom> out;
  for (std::size_t i = 0; i < module().gens(); ++i) {
    Row e(module().gens(), 0);
    e[i] = 1;
    out.push_back(element(e));
  }
  return out;
}

Row HomFunctors::coords(const FunHom& alpha) const {
  Row x = at_m_.coords(flatten(alpha.u().mat()));
  return preimage(kernel_.embedding, x);
}

std::vector<FunHom> HomFunctors::elements(std::uint64_t budget) const {
  std::vector<FunHom> out;
  for (const auto& c : module().elements(budget)) out.push_back(element(c));
  return out;
}

HomFunctors hom_functors(const FPFunctor& f, const FPFunctor& g) { return HomFunctors(f, g); }

std::optional<FunctorIso> find_iso(const FPFunctor& f, const FPFunctor& g) {
  if (!(table(f) == table(g))) return std::nullopt;
  if (f.n().is_zero() && g.n().is_zero()) {
    auto iso = find_iso(f.m(), g.m());
    if (!iso) return std::nullopt;
    return FunctorIso{FunHom(f, g, iso->from, ModHom::zero(g.n(), f.n())),
                      FunHom(g, f, iso->to, ModHom::zero(f.n(), g.n()))};
  }
  HomFunctors fg(f, g), gf(g, f);
  FunHom id_f = FunHom::identity(f), id_g = FunHom::identity(g);
  for (const auto& alpha : fg.elements(kIsoSearchBudget)) {
    if (!is_iso(alpha)) continue;
    for (const auto& beta : gf.elements(kIsoSearchBudget))
      if (compose(beta, alpha) == id_f && compose(alpha, beta) == id_g) return FunctorIso{alpha, beta};
    throw InternalError("pointwise isomorphism without an inverse");
  }
  return std::nullopt;
}

bool isomorphic(const FPFunctor& f, const FPFunctor& g) { return find_iso(f, g).has_value(); }

// ---------------------------------------------------------------------------

namespace {

void validate_kernel(const FunHom& alpha, const FunctorKernel& k) {
  for (const auto& x : test_modules(alpha.src().ring())) {
    ModHom a = evaluate_hom(alpha, x);
    ModHom inc = evaluate_hom(k.inclusion, x);
    if (!kernel(inc).module.is_zero() || !compose(a, inc).is_zero() ||
        inc.src().cardinality() != kernel(a).module.cardinality())
      throw InternalError("functor kernel disagrees with pointwise kernel at " + x.to_string());
  }
}

void validate_cokernel(const FunHom& alpha, const FunctorCokernel& c) {
  for (const auto& x : test_modules(alpha.src().ring())) {
    ModHom a = evaluate_hom(alpha, x);
    ModHom proj = evaluate_hom(c.projection, x);
    if (!cokernel(proj).module.is_zero() || !compose(proj, a).is_zero() ||
        proj.dst().cardinality() != cokernel(a).module.cardinality())
      throw InternalError("functor cokernel disagrees with pointwise cokernel at " + x.to_string());
  }
}

// Map from the target module of a cokernel to the cokernel, and a matrix
// expressing the cokernel generators in the target.
struct Pushout {
  FPMod module;
  ModHom projection;
  Mat section;
};

Pushout pushout_like(const ModHom& h) {
  auto c = cokernel(h);
  return {c.module, c.projection, c.section};
}

}  // namespace

FunctorKernel kernel_f(const FunHom& alpha) {
  const FPFunctor& f = alpha.src();
  const FPFunctor& g = alpha.dst();
  const CoeffRing R = f.ring();
  // P = M (+) N' / (u x, -g' x),  Q = N (+) N' / (g u x, -g' x)
  DirectSum mn = direct_sum({f.m(), g.n()});
  DirectSum nn = direct_sum({f.n(), g.n()});
  Mat neg_gp = linalg::scale(-1, g.pres().mat());
  Pushout p = pushout_like(ModHom(g.m(), mn.module, hstack(alpha.u().mat(), neg_gp)));
  Pushout q = pushout_like(ModHom(g.m(), nn.module, hstack(alpha.u().mat() * f.pres().mat(), neg_gp)));
  Mat h_ambient = block_diag(f.pres().mat(), Mat::identity(R, g.n().gens()));
  ModHom h(p.module, q.module, p.section * h_ambient * q.projection.mat());
  FPFunctor k(h);
  Mat u_inc = hstack(Mat::identity(R, f.m().gens()), Mat(R, f.m().gens(), g.n().gens())) * p.projection.mat();
  Mat v_inc = hstack(Mat::identity(R, f.n().gens()), Mat(R, f.n().gens(), g.n().gens())) * q.projection.mat();
  FunctorKernel out{k, FunHom(k, f, ModHom(f.m(), p.module, u_inc), ModHom(f.n(), q.module, v_inc))};
  validate_kernel(alpha, out);
  return out;
}

FunctorCokernel cokernel_f(const FunHom& alpha) {
  const FPFunctor& f = alpha.src();
  const FPFunctor& g = alpha.dst();
  const CoeffRing R = f.ring();
  DirectSum target = direct_sum({g.n(), f.m()});
  FPFunctor c(ModHom(g.m(), target.module, hstack(g.pres().mat(), alpha.u().mat())));
  Mat v = vstack(Mat::identity(R, g.n().gens()), Mat(R, f.m().gens(), g.n().gens()));
  FunctorCokernel out{c, FunHom(g, c, ModHom::identity(g.m()), ModHom(target.module, g.n(), v))};
  validate_cokernel(alpha, out);
  return out;
}

FunctorKernel image_f(const FunHom& alpha) { return kernel_f(cokernel_f(alpha).projection); }

FunctorSum direct_sum_f(const std::vector<FPFunctor>& parts) {
  if (parts.empty()) throw ShapeError("direct sum of no functors needs a ring");
  std::vector<FPMod> ms, ns;
  Mat g(parts.front().ring(), 0, 0);
  for (const auto& p : parts) {
    ms.push_back(p.m());
    ns.push_back(p.n());
    g = block_diag(g, p.pres().mat());
  }
  DirectSum m = direct_sum(ms), n = direct_sum(ns);
  FPFunctor sum(ModHom(m.module, n.module, g));
  FunctorSum out{sum, {}, {}};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out.inj.emplace_back(parts[i], sum, m.proj[i], n.proj[i]);
    out.proj.emplace_back(sum, parts[i], m.inj[i], n.inj[i]);
  }
  return out;
}

FunctorIso simplify(const FPFunctor& f) {
  auto cm = canonical_form(f.m());
  auto cn = canonical_form(f.n());
  FPFunctor s(compose(cn.to, compose(f.pres(), cm.from)));
  FunHom to(f, s, cm.from, cn.from);
  FunHom from(s, f, cm.to, cn.to);
  return {to, from};
}

// ---------------------------------------------------------------------------

FPMod flat_tensor_module(const FPMod& m, const FPMod& n, const EngineOptions& opts) {
  if (opts.fault != "tensor-flat") return tensor_mod(m, n);
  const CoeffRing R = m.ring();
  return FPMod(R, m.gens() * n.gens(), kron(m.rels(), Mat::identity(R, n.gens())));
}

FPFunctor tensor_flat(const FPMod& m, const FPMod& n, const EngineOptions& opts) {
  const CoeffRing R = m.ring();
  const std::size_t a1 = m.gens(), a2 = n.gens();
  Mat rel = kron(m.rels(), Mat::identity(R, a2));
  if (opts.fault != "tensor-flat") rel = vstack(rel, kron(Mat::identity(R, a1), n.rels()));
  // (Lambda^{a1 a2}, -) -> (Lambda^{b1 a2} (+) Lambda^{a1 b2}, -) induced by the relations
  FunHom map = yoneda_map(ModHom(FPMod::free(R, rel.rows()), FPMod::free(R, a1 * a2), rel));
  FPFunctor k = kernel_f(map).object;
  return simplify(k).to.dst();
}

FPFunctor unit_functor(CoeffRing ring) { return yoneda(FPMod::free(ring, 1)); }

FPFunctor tensor_general(const FPFunctor& f, const FPFunctor& g, const EngineOptions& opts) {
  const CoeffRing R = f.ring();
  FPMod mm = flat_tensor_module(f.m(), g.m(), opts);
  FPMod nm = flat_tensor_module(f.n(), g.m(), opts);
  FPMod mn = flat_tensor_module(f.m(), g.n(), opts);
  DirectSum target = direct_sum({nm, mn});
  Mat phi = hstack(kron(f.pres().mat(), Mat::identity(R, g.m().gens())),
                   kron(Mat::identity(R, f.m().gens()), g.pres().mat()));
  return FPFunctor(ModHom(mm, target.module, phi));
}

FunHom tensor_hom(const FunHom& alpha, const FunHom& beta, const EngineOptions& opts) {
  FPFunctor src = tensor_general(alpha.src(), beta.src(), opts);
  FPFunctor dst = tensor_general(alpha.dst(), beta.dst(), opts);
  Mat u = kron(alpha.u().mat(), beta.u().mat());
  Mat v = block_diag(kron(alpha.v().mat(), beta.u().mat()), kron(alpha.u().mat(), beta.v().mat()));
  return FunHom(src, dst, ModHom(dst.m(), src.m(), u), ModHom(dst.n(), src.n(), v));
}

FunHom associator(const FPFunctor& f, const FPFunctor& g, const FPFunctor& h) {
  FPFunctor src = tensor_general(tensor_general(f, g), h);
  FPFunctor dst = tensor_general(f, tensor_general(g, h));
  return lift_hom(src, dst, ModHom(dst.m(), src.m(), Mat::identity(f.ring(), src.m().gens())));
}

FunHom left_unitor(const FPFunctor& f) {
  FPFunctor src = tensor_general(unit_functor(f.ring()), f);
  return lift_hom(src, f, ModHom(f.m(), src.m(), Mat::identity(f.ring(), f.m().gens())));
}

FunHom right_unitor(const FPFunctor& f) {
  FPFunctor src = tensor_general(f, unit_functor(f.ring()));
  return lift_hom(src, f, ModHom(f.m(), src.m(), Mat::identity(f.ring(), f.m().gens())));
}

FunHom braiding(const FPFunctor& f, const FPFunctor& g) {
  FPFunctor src = tensor_general(f, g);
  FPFunctor dst = tensor_general(g, f);
  const std::size_t a = f.m().gens(), b = g.m().gens();
  Mat swap(f.ring(), a * b, a * b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) swap.set(j * a + i, i * b + j, 1);
  return lift_hom(src, dst, ModHom(dst.m(), src.m(), swap));
}

FPMod induced_functor(const MSpec& spec, const FPFunctor& f) { return Realization(spec).value(f).module(); }

}  // namespace freyd
