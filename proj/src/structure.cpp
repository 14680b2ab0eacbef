#include "freyd/structure.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "freyd/errors.hpp"

namespace freyd {

using linalg::howell_basis;

namespace {

using Key = std::vector<std::vector<Scalar>>;

Key key_of(const SubfunctorParts& p) {
  Key k;
  for (const auto& m : p) {
    std::vector<Scalar> e{static_cast<Scalar>(m.rows())};
    e.insert(e.end(), m.entries().begin(), m.entries().end());
    k.push_back(std::move(e));
  }
  return k;
}

bool span_contains(const Mat& big, const Mat& small) {
  for (std::size_t r = 0; r < small.rows(); ++r)
    if (!linalg::in_row_span(big, small.row(r))) return false;
  return true;
}

Mat span_intersection(const Mat& a, const Mat& b) {
  Mat k = linalg::left_kernel(vstack(a, b)).cols_range(0, a.rows());
  return howell_basis(k * a);
}

Row flatten(const Mat& a) { return a.entries(); }

}  // namespace

FunctorKernel realize_subfunctor(const FPFunctor& f, const SubfunctorParts& parts) {
  const CoeffRing R = f.ring();
  const auto& tms = test_modules(R);
  std::vector<FPMod> targets;
  std::vector<Mat> components;
  for (std::size_t k = 0; k < tms.size(); ++k) {
    Subquotient value = Realization(R, tms[k]).value(f);
    const Mat& rows = parts[k];
    for (std::size_t r = 0; r < rows.rows(); ++r) {
      Row x = value.module().reduce(rows.row(r));
      if (std::all_of(x.begin(), x.end(), [](Scalar s) { return s == 0; })) continue;
      targets.push_back(tms[k]);
      components.push_back(Mat(R, f.m().gens(), tms[k].gens(), value.lift(x)));
    }
  }
  if (targets.empty()) {
    FPFunctor z = FPFunctor::zero(R);
    return {z, FunHom::zero(z, f)};
  }
  DirectSum sum = direct_sum(targets);
  Mat u = components.front();
  for (std::size_t i = 1; i < components.size(); ++i) u = linalg::hstack(u, components[i]);
  FunHom gen = lift_hom(yoneda(sum.module), f, ModHom(f.m(), sum.module, u));
  return image_f(gen);
}

// ---------------------------------------------------------------------------

SubfunctorLattice::SubfunctorLattice(const FPFunctor& f, std::size_t max_elements) : f_(f) {
  const CoeffRing R = f.ring();
  const auto& tms = test_modules(R);
  const std::size_t t = tms.size();
  for (const auto& x : tms) values_.push_back(Realization(R, x).value(f));

  // action[i][j]: matrices of F(xi) for generators xi of Hom(X_i, X_j)
  std::vector<std::vector<std::vector<Mat>>> action(t, std::vector<std::vector<Mat>>(t));
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j)
      for (const auto& xi : hom_group(tms[i], tms[j]).generators())
        action[i][j].push_back(evaluate_map(f, xi).mat());
  auto rels = [&](std::size_t k) { return values_[k].module().rels(); };

  std::vector<SubfunctorParts> cyclic;
  std::map<Key, std::size_t> cyclic_seen;
  for (std::size_t i = 0; i < t; ++i)
    for (const auto& x : values_[i].module().elements()) {
      SubfunctorParts c(t);
      for (std::size_t j = 0; j < t; ++j) {
        Mat rows = rels(j);
        for (const auto& a : action[i][j]) rows = vstack(rows, Mat::row_vector(R, linalg::row_times(x, a)));
        c[j] = howell_basis(rows);
      }
      if (cyclic_seen.emplace(key_of(c), cyclic.size()).second) cyclic.push_back(c);
    }

  SubfunctorParts zero(t);
  for (std::size_t k = 0; k < t; ++k) zero[k] = rels(k);
  std::map<Key, SubfunctorParts> seen{{key_of(zero), zero}};
  std::vector<SubfunctorParts> frontier{zero};
  while (!frontier.empty()) {
    std::vector<SubfunctorParts> next;
    for (const auto& s : frontier)
      for (const auto& c : cyclic) {
        SubfunctorParts u = sum(s, c);
        if (seen.emplace(key_of(u), u).second) {
          if (seen.size() > max_elements) throw CapExceeded("subfunctor lattice exceeds " + std::to_string(max_elements));
          next.push_back(u);
        }
      }
    frontier = std::move(next);
  }
  std::vector<std::pair<std::uint64_t, SubfunctorParts>> sorted;
  for (auto& [k, p] : seen) {
    std::uint64_t w = 1;
    for (std::size_t j = 0; j < t; ++j) w *= linalg::span_size(p[j]) / linalg::span_size(rels(j));
    sorted.emplace_back(w, p);
  }
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [w, p] : sorted) {
    weight_.push_back(w);
    parts_.push_back(std::move(p));
  }
}

SubfunctorParts SubfunctorLattice::sum(const SubfunctorParts& a, const SubfunctorParts& b) const {
  SubfunctorParts out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = howell_basis(vstack(a[k], b[k]));
  return out;
}

SubfunctorParts SubfunctorLattice::intersection(const SubfunctorParts& a, const SubfunctorParts& b) const {
  SubfunctorParts out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = span_intersection(a[k], b[k]);
  return out;
}

bool SubfunctorLattice::contains(std::size_t big, std::size_t small) const {
  for (std::size_t k = 0; k < parts_[big].size(); ++k)
    if (!span_contains(parts_[big][k], parts_[small][k])) return false;
  return true;
}

std::size_t SubfunctorLattice::index_of(const SubfunctorParts& p) const {
  Key k = key_of(p);
  for (std::size_t i = 0; i < parts_.size(); ++i)
    if (key_of(parts_[i]) == k) return i;
  throw InternalError("subfunctor not in the lattice");
}

std::vector<std::size_t> SubfunctorLattice::atoms() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 1; j < size() && minimal; ++j)
      if (j != i && contains(i, j)) minimal = false;
    if (minimal) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> SubfunctorLattice::coatoms() const {
  std::vector<std::size_t> out;
  if (size() < 2) return out;
  for (std::size_t i = 0; i + 1 < size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j + 1 < size() && maximal; ++j)
      if (j != i && contains(j, i)) maximal = false;
    if (maximal) out.push_back(i);
  }
  return out;
}

std::size_t SubfunctorLattice::socle() const {
  SubfunctorParts s = parts_[0];
  for (std::size_t a : atoms()) s = sum(s, parts_[a]);
  return index_of(s);
}

std::size_t SubfunctorLattice::radical() const {
  SubfunctorParts r = parts_[top()];
  for (std::size_t c : coatoms()) r = intersection(r, parts_[c]);
  return index_of(r);
}

std::size_t SubfunctorLattice::length() const {
  std::vector<std::size_t> chain(size(), 0);
  for (std::size_t i = 1; i < size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (weight_[j] < weight_[i] && contains(i, j)) chain[i] = std::max(chain[i], chain[j] + 1);
  return chain[top()];
}

FunctorKernel SubfunctorLattice::realize(std::size_t i) const { return realize_subfunctor(f_, parts_[i]); }

// ---------------------------------------------------------------------------

FunctorKernel radical_rep(const FPMod& x) {
  const CoeffRing R = x.ring();
  const auto& tms = test_modules(R);
  FPFunctor yx = yoneda(x);
  SubfunctorParts parts;
  for (const auto& y : tms) {
    Subquotient value = Realization(R, y).value(yx);
    auto back = hom_group(y, x).elements();
    Mat rows = value.module().rels();
    for (const auto& f : hom_group(x, y).elements()) {
      bool radical = true;
      for (const auto& g : back) {
        ModHom d = ModHom::identity(x) - compose(g, f);
        if (!kernel(d).module.is_zero()) {
          radical = false;
          break;
        }
      }
      if (radical) rows = vstack(rows, Mat::row_vector(R, value.coords(flatten(f.mat()))));
    }
    parts.push_back(howell_basis(rows));
  }
  return realize_subfunctor(yx, parts);
}

std::vector<FPFunctor> simples(CoeffRing ring) {
  std::vector<FPFunctor> out;
  for (const auto& x : test_modules(ring)) {
    FPFunctor s = cokernel_f(radical_rep(x).inclusion).object;
    bool fresh = true;
    for (const auto& o : out) fresh = fresh && !isomorphic(o, s);
    if (fresh) out.push_back(s);
  }
  return out;
}

namespace {

std::optional<FunHom> nontrivial_idempotent(const FPFunctor& f) {
  FunHom id = FunHom::identity(f);
  for (const auto& e : hom_functors(f, f).elements()) {
    if (e.is_zero() || e == id) continue;
    if (compose(e, e) == e) return e;
  }
  return std::nullopt;
}

}  // namespace

bool is_indecomposable(const FPFunctor& f) { return !is_zero(f) && !nontrivial_idempotent(f); }

std::vector<FPFunctor> decompose(const FPFunctor& f) {
  if (is_zero(f)) return {};
  auto e = nontrivial_idempotent(f);
  if (!e) return {simplify(f).to.dst()};
  FunHom rest = FunHom::identity(f) + scale(-1, *e);
  std::vector<FPFunctor> out = decompose(image_f(*e).object);
  for (auto& piece : decompose(image_f(rest).object)) out.push_back(std::move(piece));
  return out;
}

std::vector<FPFunctor> list_indec(CoeffRing ring, const IndecCaps& caps) {
  std::vector<FPFunctor> objects;
  auto add = [&](const FPFunctor& f) {
    bool grew = false;
    for (const auto& piece : decompose(f)) {
      bool fresh = true;
      for (const auto& o : objects)
        if (isomorphic(o, piece)) {
          fresh = false;
          break;
        }
      if (!fresh) continue;
      if (objects.size() >= caps.max_objects)
        throw CapExceeded("more than " + std::to_string(caps.max_objects) + " indecomposable objects");
      objects.push_back(piece);
      grew = true;
    }
    return grew;
  };
  for (const auto& x : test_modules(ring)) add(yoneda(x));
  std::set<std::pair<std::size_t, std::size_t>> done;
  for (std::size_t round = 0;; ++round) {
    if (round >= caps.max_rounds) throw CapExceeded("indecomposable search did not reach a fixpoint");
    bool grew = false;
    const std::size_t count = objects.size();
    for (std::size_t a = 0; a < count; ++a)
      for (std::size_t b = 0; b < count; ++b) {
        if (!done.emplace(a, b).second) continue;
        for (const auto& alpha : hom_functors(objects[a], objects[b]).elements(caps.hom_budget)) {
          grew = add(kernel_f(alpha).object) || grew;
          grew = add(cokernel_f(alpha).object) || grew;
        }
      }
    if (!grew) break;
  }
  return objects;
}

}  // namespace freyd
