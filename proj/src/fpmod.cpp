#include "freyd/fpmod.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "freyd/errors.hpp"

namespace freyd {

using linalg::howell_basis;
using linalg::kron;
using linalg::pivot_columns;

namespace {

void require_same_ring(const CoeffRing& a, const CoeffRing& b) {
  if (!(a == b)) throw RingMismatch("modules over " + a.name() + " and " + b.name());
}

Mat lift_to_integers(const Mat& a) {
  return Mat(CoeffRing::integers(), a.rows(), a.cols(), a.entries());
}

Mat reduce_into(CoeffRing ring, const Mat& a) { return Mat(ring, a.rows(), a.cols(), a.entries()); }

Row flatten(const Mat& a) { return a.entries(); }

}  // namespace

FPMod::FPMod(CoeffRing ring, std::size_t gens, const Mat& rels) : ring_(ring), gens_(gens) {
  if (!ring.is_finite()) throw RingMismatch("modules require a finite coefficient ring");
  if (rels.cols() != gens) throw ShapeError("relation matrix must have one column per generator");
  require_same_ring(ring, rels.ring());
  rels_ = howell_basis(rels);
}

FPMod FPMod::free(CoeffRing ring, std::size_t rank) { return FPMod(ring, rank, Mat(ring, 0, rank)); }

FPMod FPMod::cyclic(CoeffRing ring, Scalar a) {
  return FPMod(ring, 1, Mat::from_rows(ring, 1, {Row{ring.reduce(a)}}));
}

std::uint64_t FPMod::cardinality() const {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < gens_; ++i) {
    if (total > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(ring_.modulus()))
      throw CapExceeded("module cardinality overflows");
    total *= static_cast<std::uint64_t>(ring_.modulus());
  }
  return total / linalg::span_size(rels_);
}

bool FPMod::is_zero_element(const Row& v) const {
  return linalg::in_row_span(rels_, v);
}

std::vector<Row> FPMod::elements(std::uint64_t budget) const {
  std::uint64_t card = cardinality();
  if (card > budget) throw CapExceeded("element enumeration of a module with " + std::to_string(card) + " elements");
  std::vector<Scalar> bound(gens_, ring_.modulus());
  auto pc = pivot_columns(rels_);
  for (std::size_t k = 0; k < rels_.rows(); ++k) bound[pc[k]] = rels_(k, pc[k]);
  std::vector<Row> out;
  out.reserve(card);
  Row v(gens_, 0);
  for (;;) {
    out.push_back(v);
    std::size_t i = gens_;
    while (i > 0) {
      --i;
      if (++v[i] < bound[i]) break;
      v[i] = 0;
      if (i == 0) return out;
    }
    if (gens_ == 0) return out;
  }
}

std::vector<Scalar> FPMod::invariants() const {
  const Scalar n = ring_.modulus();
  Mat a = vstack(lift_to_integers(rels_), scale(n, Mat::identity(CoeffRing::integers(), gens_)));
  std::vector<Scalar> out;
  for (Scalar d : linalg::smith_form(a).invariants())
    if (d != 1) out.push_back(d);
  return out;
}

std::string FPMod::to_string() const {
  std::ostringstream os;
  os << "mod " << ring_.name() << " gens " << gens_ << " rels [";
  for (std::size_t r = 0; r < rels_.rows(); ++r) {
    if (r) os << ",";
    os << "[";
    for (std::size_t c = 0; c < gens_; ++c) os << (c ? "," : "") << rels_(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------

ModHom::ModHom(FPMod src, FPMod dst, const Mat& mat) : src_(std::move(src)), dst_(std::move(dst)) {
  require_same_ring(src_.ring(), dst_.ring());
  require_same_ring(src_.ring(), mat.ring());
  if (mat.rows() != src_.gens() || mat.cols() != dst_.gens())
    throw ShapeError("hom matrix shape does not match generator counts");
  Mat images = src_.rels() * mat;
  for (std::size_t r = 0; r < images.rows(); ++r)
    if (!dst_.is_zero_element(images.row(r))) throw ShapeError("matrix does not respect relations");
  mat_ = linalg::reduce_rows(dst_.rels(), mat);
}

ModHom ModHom::identity(const FPMod& m) { return ModHom(m, m, Mat::identity(m.ring(), m.gens())); }

ModHom ModHom::zero(const FPMod& src, const FPMod& dst) {
  return ModHom(src, dst, Mat(src.ring(), src.gens(), dst.gens()));
}

Row ModHom::apply(const Row& x) const { return dst_.reduce(linalg::row_times(x, mat_)); }

bool ModHom::is_identity() const { return *this == identity(src_); }

ModHom compose(const ModHom& g, const ModHom& f) {
  if (!(f.dst() == g.src())) throw ShapeError("composition of non-composable module maps");
  return ModHom(f.src(), g.dst(), f.mat() * g.mat());
}

ModHom operator+(const ModHom& a, const ModHom& b) {
  if (!(a.src() == b.src() && a.dst() == b.dst())) throw ShapeError("sum of non-parallel maps");
  return ModHom(a.src(), a.dst(), a.mat() + b.mat());
}

ModHom operator-(const ModHom& a, const ModHom& b) { return a + scale(-1, b); }

ModHom scale(Scalar k, const ModHom& a) { return ModHom(a.src(), a.dst(), linalg::scale(k, a.mat())); }

// ---------------------------------------------------------------------------

Isomorphic canonical_form(const FPMod& m) {
  const CoeffRing R = m.ring();
  const Mat& rels = m.rels();
  auto pc = pivot_columns(rels);
  std::vector<bool> eliminated(m.gens(), false);
  for (std::size_t k = 0; k < rels.rows(); ++k)
    if (rels(k, pc[k]) == 1) eliminated[pc[k]] = true;
  std::vector<std::size_t> kept;
  std::vector<std::size_t> index(m.gens(), 0);
  for (std::size_t j = 0; j < m.gens(); ++j)
    if (!eliminated[j]) index[j] = kept.size(), kept.push_back(j);

  Mat to(R, m.gens(), kept.size());
  Mat from(R, kept.size(), m.gens());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    to.set(kept[i], i, 1);
    from.set(i, kept[i], 1);
  }
  std::vector<Row> new_rels;
  for (std::size_t k = 0; k < rels.rows(); ++k) {
    Row restricted(kept.size(), 0);
    for (std::size_t i = 0; i < kept.size(); ++i) restricted[i] = rels(k, kept[i]);
    if (rels(k, pc[k]) == 1) {
      for (std::size_t i = 0; i < kept.size(); ++i) to.set(pc[k], i, -restricted[i]);
    } else {
      new_rels.push_back(restricted);
    }
  }
  FPMod out(R, kept.size(), Mat::from_rows(R, kept.size(), new_rels));
  return {out, ModHom(m, out, to), ModHom(out, m, from)};
}

// ---------------------------------------------------------------------------

Subquotient::Subquotient(const Mat& gens, const Mat& zero) : zero_(zero) {
  const CoeffRing R = gens.ring();
  const std::size_t k = gens.rows();
  stacked_ = vstack(gens, zero);
  Mat raw_rels = linalg::left_kernel(stacked_).cols_range(0, k);
  auto canon = canonical_form(FPMod(R, k, raw_rels));
  module_ = canon.module;
  gens_ = canon.from.mat() * gens;
  to_ = canon.to.mat();
}

Row Subquotient::coords(const Row& v) const {
  Mat x = linalg::solve_right(stacked_, Mat::row_vector(stacked_.ring(), v));
  Row raw(to_.rows(), 0);
  for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = x(0, i);
  return module_.reduce(linalg::row_times(raw, to_));
}

bool Subquotient::contains(const Row& v) const {
  try {
    linalg::solve_right(stacked_, Mat::row_vector(stacked_.ring(), v));
    return true;
  } catch (const NoSolution&) {
    return false;
  }
}

KernelResult kernel(const ModHom& h) {
  const FPMod& m = h.src();
  Mat k = linalg::left_kernel(vstack(h.mat(), h.dst().rels())).cols_range(0, m.gens());
  Subquotient sq(k, m.rels());
  return {sq.module(), ModHom(sq.module(), m, sq.generators())};
}

KernelResult image(const ModHom& h) {
  Subquotient sq(h.mat(), h.dst().rels());
  return {sq.module(), ModHom(sq.module(), h.dst(), sq.generators())};
}

CokernelResult cokernel(const ModHom& h) {
  const FPMod& n = h.dst();
  FPMod raw(n.ring(), n.gens(), vstack(n.rels(), h.mat()));
  auto canon = canonical_form(raw);
  return {canon.module, ModHom(n, canon.module, canon.to.mat()), canon.from.mat()};
}

DirectSum direct_sum(const std::vector<FPMod>& parts) {
  if (parts.empty()) throw ShapeError("direct sum of no modules needs a ring");
  const CoeffRing R = parts.front().ring();
  Mat rels(R, 0, 0);
  std::size_t total = 0;
  for (const auto& p : parts) {
    require_same_ring(R, p.ring());
    rels = linalg::block_diag(rels, p.rels());
    total += p.gens();
  }
  DirectSum out{FPMod(R, total, rels), {}, {}};
  std::size_t offset = 0;
  for (const auto& p : parts) {
    Mat inj(R, p.gens(), total), proj(R, total, p.gens());
    for (std::size_t i = 0; i < p.gens(); ++i) {
      inj.set(i, offset + i, 1);
      proj.set(offset + i, i, 1);
    }
    out.inj.emplace_back(p, out.module, inj);
    out.proj.emplace_back(out.module, p, proj);
    offset += p.gens();
  }
  return out;
}

FPMod tensor_mod(const FPMod& m, const FPMod& n) {
  require_same_ring(m.ring(), n.ring());
  const CoeffRing R = m.ring();
  Mat rels = vstack(kron(m.rels(), Mat::identity(R, n.gens())), kron(Mat::identity(R, m.gens()), n.rels()));
  return FPMod(R, m.gens() * n.gens(), rels);
}

ModHom tensor_hom(const ModHom& f, const ModHom& g) {
  return ModHom(tensor_mod(f.src(), g.src()), tensor_mod(f.dst(), g.dst()), kron(f.mat(), g.mat()));
}

// ---------------------------------------------------------------------------

namespace {

Subquotient hom_subquotient(const FPMod& m, const FPMod& n) {
  require_same_ring(m.ring(), n.ring());
  const CoeffRing R = m.ring();
  const Mat& rm = m.rels();
  const Mat& rn = n.rels();
  Mat constraint = vstack(kron(rm.transpose(), Mat::identity(R, n.gens())),
                          kron(Mat::identity(R, rm.rows()), rn));
  Mat gens = linalg::left_kernel(constraint).cols_range(0, m.gens() * n.gens());
  Mat zero = kron(Mat::identity(R, m.gens()), rn);
  return Subquotient(gens, zero);
}

}  // namespace

HomGroup::HomGroup(const FPMod& src, const FPMod& dst)
    : src_(src), dst_(dst), sq_(hom_subquotient(src, dst)) {}

std::vector<ModHom> HomGroup::generators() const {
  std::vector<ModHom> out;
  for (std::size_t i = 0; i < sq_.module().gens(); ++i) {
    Row e(sq_.module().gens(), 0);
    e[i] = 1;
    out.push_back(element(e));
  }
  return out;
}

Row HomGroup::coords(const ModHom& h) const { return sq_.coords(flatten(h.mat())); }

ModHom HomGroup::element(const Row& c) const {
  Row v = sq_.lift(c);
  return ModHom(src_, dst_, Mat(src_.ring(), src_.gens(), dst_.gens(), v));
}

std::vector<ModHom> HomGroup::elements(std::uint64_t budget) const {
  std::vector<ModHom> out;
  for (const auto& c : sq_.module().elements(budget)) out.push_back(element(c));
  return out;
}

HomGroup hom_group(const FPMod& m, const FPMod& n) { return HomGroup(m, n); }

// ---------------------------------------------------------------------------

namespace {

struct StandardForm {
  linalg::SmithResult smith;
  std::vector<Scalar> diag;  // length gens
};

StandardForm standard_form(const FPMod& m) {
  const Scalar n = m.ring().modulus();
  Mat a = vstack(lift_to_integers(m.rels()), scale(n, Mat::identity(CoeffRing::integers(), m.gens())));
  StandardForm out{linalg::smith_form(a), {}};
  out.diag = out.smith.invariants();
  return out;
}

// Map m -> n sending the j-th nontrivial cyclic summand of m to that of n.
ModHom standard_map(const FPMod& m, const StandardForm& sm, const FPMod& n, const StandardForm& sn) {
  const CoeffRing Z = CoeffRing::integers();
  std::vector<std::size_t> im, in;
  for (std::size_t i = 0; i < sm.diag.size(); ++i)
    if (sm.diag[i] != 1) im.push_back(i);
  for (std::size_t i = 0; i < sn.diag.size(); ++i)
    if (sn.diag[i] != 1) in.push_back(i);
  Mat s(Z, m.gens(), n.gens());
  for (std::size_t k = 0; k < im.size(); ++k) s.set(im[k], in[k], 1);
  Mat total = sm.smith.q * s * sn.smith.q_inv;
  return ModHom(m, n, reduce_into(m.ring(), total));
}

}  // namespace

std::optional<Isomorphic> find_iso(const FPMod& m, const FPMod& n) {
  require_same_ring(m.ring(), n.ring());
  if (m.cardinality() != n.cardinality()) return std::nullopt;
  if (m.invariants() != n.invariants()) return std::nullopt;
  auto sm = standard_form(m);
  auto sn = standard_form(n);
  ModHom to = standard_map(m, sm, n, sn);
  ModHom from = standard_map(n, sn, m, sm);
  if (!compose(from, to).is_identity() || !compose(to, from).is_identity())
    throw InternalError("isomorphism candidate failed inverse check");
  return Isomorphic{n, to, from};
}

bool isomorphic(const FPMod& m, const FPMod& n) { return find_iso(m, n).has_value(); }

bool is_indecomposable(const FPMod& m, std::uint64_t budget) {
  if (m.is_zero()) return false;
  HomGroup end(m, m);
  for (const auto& e : end.elements(budget)) {
    if (e.is_zero() || e.is_identity()) continue;
    if (compose(e, e) == e) return false;
  }
  return true;
}

namespace {

bool presentation_less(const FPMod& a, const FPMod& b) {
  if (a.gens() != b.gens()) return a.gens() < b.gens();
  if (a.rels().rows() != b.rels().rows()) return a.rels().rows() < b.rels().rows();
  return a.rels().entries() < b.rels().entries();
}

}  // namespace

std::vector<FPMod> enumerate_indec_modules(CoeffRing ring, std::size_t cap, std::uint64_t budget) {
  if (!ring.is_finite()) throw RingMismatch("module enumeration requires a finite ring");
  const Scalar n = ring.modulus();
  std::map<std::vector<Scalar>, FPMod> classes;
  std::uint64_t work = 0;
  for (std::size_t g = 1; g <= cap; ++g) {
    std::uint64_t vectors = 1;
    for (std::size_t i = 0; i < g; ++i) {
      vectors *= static_cast<std::uint64_t>(n);
      if (vectors > budget) throw CapExceeded("submodule search for " + std::to_string(g) + " generators");
    }
    auto key = [](const Mat& h) {
      std::vector<Scalar> k{static_cast<Scalar>(h.rows())};
      k.insert(k.end(), h.entries().begin(), h.entries().end());
      return k;
    };
    std::map<std::vector<Scalar>, Mat> seen;
    std::vector<Mat> frontier{Mat(ring, 0, g)};
    seen.emplace(key(frontier.front()), frontier.front());
    while (!frontier.empty()) {
      std::vector<Mat> next;
      for (const Mat& sub : frontier) {
        work += vectors;
        if (work > budget) throw CapExceeded("submodule search exceeded the budget");
        FPMod full(ring, g, sub);
        for (const Row& v : FPMod::free(ring, g).elements(budget)) {
          if (full.is_zero_element(v)) continue;
          Mat h = howell_basis(vstack(sub, Mat::row_vector(ring, v)));
          if (seen.emplace(key(h), h).second) next.push_back(h);
        }
      }
      frontier = std::move(next);
    }
    for (const auto& [k, rels] : seen) {
      FPMod m = canonical_form(FPMod(ring, g, rels)).module;
      if (m.is_zero()) continue;
      auto inv = m.invariants();
      auto it = classes.find(inv);
      if (it == classes.end())
        classes.emplace(inv, m);
      else if (presentation_less(m, it->second))
        it->second = m;
    }
  }
  std::vector<FPMod> out;
  for (const auto& [inv, m] : classes)
    if (is_indecomposable(m, budget)) out.push_back(m);
  std::sort(out.begin(), out.end(), [](const FPMod& a, const FPMod& b) {
    if (a.cardinality() != b.cardinality()) return a.cardinality() > b.cardinality();
    return presentation_less(a, b);
  });
  return out;
}

}  // namespace freyd
