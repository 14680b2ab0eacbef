#include "freyd/representation.hpp"

#include <random>
#include <set>
#include <sstream>

#include "freyd/errors.hpp"
#include "freyd/functor.hpp"
#include "freyd/literal.hpp"

namespace freyd {

namespace {

Scalar sign_of(int parity) { return parity % 2 ? -1 : 1; }

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Position of the top-level comma in "a,b" with bracketed a and b.
std::size_t top_comma(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '<' || c == '[') ++depth;
    if (c == '>' || c == ']') --depth;
    if (c == ',' && depth == 0) return i;
  }
  return std::string::npos;
}

// Declared names first, then the default names <e,w> and [w,e].
EdgeId resolve_edge(const TensorQuiver& q, const std::string& name) {
  try {
    return q.edge_by_name(name);
  } catch (const Error&) {
  }
  if (name.size() > 2 && ((name.front() == '<' && name.back() == '>') || (name.front() == '[' && name.back() == ']'))) {
    std::string body = name.substr(1, name.size() - 2);
    std::size_t c = top_comma(body);
    if (c != std::string::npos) {
      std::string a = trim(body.substr(0, c)), b = trim(body.substr(c + 1));
      if (name.front() == '<') return q.left(resolve_edge(q, a), q.vertex(b));
      return q.right(q.vertex(a), resolve_edge(q, b));
    }
  }
  throw ShapeError("unknown edge '" + name + "'");
}

}  // namespace

RepSpec RepSpec::parse(const std::string& text) {
  RepSpec spec;
  bool have_ring = false;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = raw.substr(0, raw.find('#'));
    if (trim(s).empty()) continue;
    std::size_t eq = s.find('=');
    std::istringstream head(eq == std::string::npos ? s : s.substr(0, eq));
    std::vector<std::string> words;
    for (std::string w; head >> w;) words.push_back(w);
    auto col = [&](std::size_t off) { return static_cast<int>(off) + 1; };
    auto value = [&]() -> std::string {
      if (eq == std::string::npos) throw ParseError("expected '='", line, col(s.size()));
      return s.substr(eq + 1);
    };
    auto literal = [&](auto parse) {
      std::string v = value();
      try {
        return parse(v);
      } catch (const ParseError& e) {
        throw ParseError(e.message(), line, static_cast<int>(eq + 1) + e.column());
      }
    };
    const std::string& kw = words.empty() ? s : words[0];
    if (kw == "ring" && words.size() == 2 && eq == std::string::npos) {
      try {
        spec.ring = parse_ring(words[1]);
      } catch (const ParseError& e) {
        throw ParseError(e.message(), line, col(s.find(words[1])));
      }
      if (!spec.ring.is_finite()) throw ParseError("representations need a finite ring", line, col(s.find(words[1])));
      have_ring = true;
    } else if (kw == "rep" && words.size() == 3 && (words[1] == "vertex" || words[1] == "edge")) {
      if (!have_ring) throw ParseError("'ring' must come first", line, 1);
      if (words[1] == "vertex") {
        FPMod m = literal([](const std::string& v) { return parse_module(v); });
        if (m.ring() != spec.ring) throw ParseError("module over the wrong ring", line, col(eq + 1));
        if (!spec.vertices.emplace(words[2], m).second) throw ParseError("vertex given twice", line, col(s.find(words[2])));
      } else {
        Mat a = literal([](const std::string& v) { return parse_matrix(v); });
        if (a.ring() != spec.ring) throw ParseError("matrix over the wrong ring", line, col(eq + 1));
        if (!spec.edges.emplace(words[2], a).second) throw ParseError("edge given twice", line, col(s.find(words[2])));
      }
    } else if (kw == "kappa" && words.size() == 3) {
      if (!have_ring) throw ParseError("'ring' must come first", line, 1);
      Mat a = literal([](const std::string& v) { return parse_matrix(v); });
      if (a.ring() != spec.ring) throw ParseError("matrix over the wrong ring", line, col(eq + 1));
      if (!spec.kappa.emplace(std::make_pair(words[1], words[2]), a).second)
        throw ParseError("kappa given twice", line, 1);
    } else if (kw == "kappa0" && words.size() == 1) {
      if (!have_ring) throw ParseError("'ring' must come first", line, 1);
      Mat a = literal([](const std::string& v) { return parse_matrix(v); });
      if (a.ring() != spec.ring) throw ParseError("matrix over the wrong ring", line, col(eq + 1));
      if (spec.kappa0) throw ParseError("kappa0 given twice", line, 1);
      spec.kappa0 = a;
    } else {
      throw ParseError("unrecognized line", line, col(s.find_first_not_of(" \t")));
    }
  }
  if (!have_ring) throw ParseError("no 'ring' line", line, 1);
  return spec;
}

std::optional<ModHom> invert(const ModHom& h) {
  const FPMod& m = h.src();
  const FPMod& n = h.dst();
  const CoeffRing& R = m.ring();
  Mat system = linalg::vstack(h.mat(), n.rels());
  Mat sol;
  try {
    sol = linalg::solve_right(system, Mat::identity(R, n.gens()));
  } catch (const NoSolution&) {
    return std::nullopt;
  }
  Mat g(R, n.gens(), m.gens());
  for (std::size_t i = 0; i < n.gens(); ++i)
    for (std::size_t j = 0; j < m.gens(); ++j) g.set(i, j, sol(i, j));
  // well defined: relations of n go to zero in m
  for (std::size_t r = 0; r < n.rels().rows(); ++r)
    if (!m.is_zero_element(linalg::row_times(n.rels().row(r), g))) return std::nullopt;
  ModHom inv(n, m, g);
  if (!compose(inv, h).is_identity() || !compose(h, inv).is_identity()) return std::nullopt;
  return inv;
}

ModHom Representation::swap(const FPMod& a, const FPMod& b) {
  const CoeffRing& R = a.ring();
  std::size_t p = a.gens(), r = b.gens();
  Mat s(R, p * r, p * r);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < r; ++j) s.set(i * r + j, j * p + i, 1);
  return ModHom(tensor_mod(a, b), tensor_mod(b, a), s);
}

Representation::Representation(const TensorQuiver& q, const RepSpec& spec) : q_(q), ring_(spec.ring) {
  const VertexId n = static_cast<VertexId>(q.vertex_count());
  for (VertexId v = 0; v < n; ++v) {
    auto it = spec.vertices.find(q.vertex_name(v));
    if (it == spec.vertices.end()) throw ShapeError("no module for vertex '" + q.vertex_name(v) + "'");
    objects_.push_back(it->second);
  }
  for (const auto& [name, m] : spec.vertices) (void)q.vertex(name);

  auto shaped = [&](const Mat& a, const FPMod& src, const FPMod& dst, const std::string& what) {
    if (a.rows() != src.gens() || a.cols() != dst.gens())
      throw ShapeError(what + ": expected " + std::to_string(src.gens()) + "x" + std::to_string(dst.gens()) +
                       ", got " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    for (std::size_t r = 0; r < src.rels().rows(); ++r)
      if (!dst.is_zero_element(linalg::row_times(src.rels().row(r), a)))
        throw ShapeError(what + ": not a module map");
    return ModHom(src, dst, a);
  };

  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v) {
      auto it = spec.kappa.find({q.vertex_name(u), q.vertex_name(v)});
      std::string what = "kappa " + q.vertex_name(u) + " " + q.vertex_name(v);
      if (it == spec.kappa.end()) throw ShapeError("missing " + what);
      kappa_.emplace(std::make_pair(u, v),
                     shaped(it->second, tensor_mod(objects_[u], objects_[v]), objects_[q.tensor(u, v)], what));
    }
  for (const auto& [k, m] : spec.kappa) (void)q.vertex(k.first), (void)q.vertex(k.second);
  if (!spec.kappa0) throw ShapeError("missing kappa0");
  kappa0_ = shaped(*spec.kappa0, FPMod::free(ring_, 1), objects_[q.unit()], "kappa0");

  for (const auto& [name, a] : spec.edges) {
    EdgeId e = resolve_edge(q_, name);
    const EdgeTerm& t = q_.edge(e);
    explicit_.emplace(e, shaped(a, objects_[t.src], objects_[t.dst], "edge " + name));
  }
  for (EdgeId e : q.declared_edges())
    if (!explicit_.count(e)) throw ShapeError("no matrix for edge '" + q.edge(e).name + "'");
}

const ModHom& Representation::kappa_inv(VertexId u, VertexId v) const {
  auto it = kappa_inv_.find({u, v});
  if (it != kappa_inv_.end()) return it->second;
  auto inv = invert(kappa(u, v));
  if (!inv) throw NoSolution("kappa " + q_.vertex_name(u) + " " + q_.vertex_name(v) + " is not invertible");
  return kappa_inv_.emplace(std::make_pair(u, v), *inv).first->second;
}

ModHom Representation::edge(EdgeId e) const {
  auto it = explicit_.find(e);
  if (it != explicit_.end()) return it->second;
  return forced(e);
}

ModHom Representation::forced(EdgeId e) const {
  auto hit = cache_.find(e);
  if (hit != cache_.end()) return hit->second;
  const EdgeTerm& t = q_.edge(e);
  const bool sg = q_.signs();
  auto I = [&](VertexId v) { return ModHom::identity(objects_[v]); };
  ModHom out;
  switch (t.kind) {
    case EdgeKind::Base:
      throw ShapeError("no matrix for edge '" + t.name + "'");
    case EdgeKind::Id:
      out = I(t.a);
      break;
    case EdgeKind::Alpha: {
      VertexId v = t.a, w = t.b;
      out = compose(kappa(w, v), compose(swap(objects_[v], objects_[w]), kappa_inv(v, w)));
      if (sg) out = scale(sign_of(q_.grade(v) * q_.grade(w)), out);
      break;
    }
    case EdgeKind::Left: {
      const EdgeTerm& in = q_.edge(t.inner);
      VertexId w = t.a;
      out = compose(kappa(in.dst, w), compose(tensor_hom(edge(t.inner), I(w)), kappa_inv(in.src, w)));
      if (sg) out = scale(sign_of(q_.edge_grade(t.inner) * q_.grade(w)), out);
      break;
    }
    case EdgeKind::Right: {
      const EdgeTerm& in = q_.edge(t.inner);
      VertexId w = t.a;
      out = compose(kappa(w, in.dst), compose(tensor_hom(I(w), edge(t.inner)), kappa_inv(w, in.src)));
      break;
    }
    case EdgeKind::Beta:
    case EdgeKind::BetaInv: {
      VertexId u = t.a, v = t.b, w = t.c;
      VertexId uv = q_.tensor(u, v), vw = q_.tensor(v, w);
      // both from T(u) (x) T(v) (x) T(w)
      ModHom to_left = compose(kappa(u, vw), tensor_hom(I(u), kappa(v, w)));
      ModHom to_right = compose(kappa(uv, w), tensor_hom(kappa(u, v), I(w)));
      auto li = invert(to_left), ri = invert(to_right);
      if (!li || !ri) throw NoSolution("kappa is not invertible");
      out = t.kind == EdgeKind::Beta ? compose(to_right, *li) : compose(to_left, *ri);
      break;
    }
    case EdgeKind::Unit:
    case EdgeKind::UnitInv: {
      VertexId v = t.a;
      const FPMod one = FPMod::free(ring_, 1);
      // T(v) = Lambda (x) T(v) on the nose
      ModHom lambda_inv(objects_[v], tensor_mod(one, objects_[v]), Mat::identity(ring_, objects_[v].gens()));
      ModHom u = compose(kappa(q_.unit(), v), compose(tensor_hom(kappa0_, I(v)), lambda_inv));
      if (t.kind == EdgeKind::Unit) {
        out = u;
      } else {
        auto ui = invert(u);
        if (!ui) throw NoSolution("the unit map of " + q_.vertex_name(v) + " is not invertible");
        out = *ui;
      }
      break;
    }
  }
  return cache_.emplace(e, out).first->second;
}

std::pair<ModHom, ModHom> Representation::diagram(EdgeId e) const {
  const EdgeTerm& t = q_.edge(e);
  const bool sg = q_.signs();
  auto I = [&](VertexId v) { return ModHom::identity(objects_[v]); };
  ModHom te = edge(e);
  switch (t.kind) {
    case EdgeKind::Base:
      throw ShapeError("declared edges have no diagram");
    case EdgeKind::Id:
      return {te, I(t.a)};
    case EdgeKind::Alpha: {
      // T(alpha) . kappa_vw = s kappa_wv . swap
      VertexId v = t.a, w = t.b;
      ModHom rhs = compose(kappa(w, v), swap(objects_[v], objects_[w]));
      if (sg) rhs = scale(sign_of(q_.grade(v) * q_.grade(w)), rhs);
      return {compose(te, kappa(v, w)), rhs};
    }
    case EdgeKind::Left: {
      // T(gamma (x) id) . kappa = s kappa . (T(gamma) (x) id)
      const EdgeTerm& in = q_.edge(t.inner);
      VertexId w = t.a;
      ModHom rhs = compose(kappa(in.dst, w), tensor_hom(edge(t.inner), I(w)));
      if (sg) rhs = scale(sign_of(q_.edge_grade(t.inner) * q_.grade(w)), rhs);
      return {compose(te, kappa(in.src, w)), rhs};
    }
    case EdgeKind::Right: {
      const EdgeTerm& in = q_.edge(t.inner);
      VertexId w = t.a;
      return {compose(te, kappa(w, in.src)), compose(kappa(w, in.dst), tensor_hom(I(w), edge(t.inner)))};
    }
    case EdgeKind::Beta:
    case EdgeKind::BetaInv: {
      VertexId u = t.a, v = t.b, w = t.c;
      VertexId uv = q_.tensor(u, v), vw = q_.tensor(v, w);
      ModHom to_left = compose(kappa(u, vw), tensor_hom(I(u), kappa(v, w)));
      ModHom to_right = compose(kappa(uv, w), tensor_hom(kappa(u, v), I(w)));
      if (t.kind == EdgeKind::Beta) return {compose(te, to_left), to_right};
      return {compose(te, to_right), to_left};
    }
    case EdgeKind::Unit:
    case EdgeKind::UnitInv: {
      VertexId v = t.a;
      const FPMod one = FPMod::free(ring_, 1);
      ModHom lambda_inv(objects_[v], tensor_mod(one, objects_[v]), Mat::identity(ring_, objects_[v].gens()));
      ModHom u = compose(kappa(q_.unit(), v), compose(tensor_hom(kappa0_, I(v)), lambda_inv));
      if (t.kind == EdgeKind::Unit) return {te, u};
      return {compose(te, u), I(v)};
    }
  }
  throw InternalError("unknown edge kind");
}

ModHom Representation::path(const Path& p) const {
  ModHom out = ModHom::identity(objects_.at(p.src));
  for (auto it = p.edges.rbegin(); it != p.edges.rend(); ++it) out = compose(edge(*it), out);
  return out;
}

ModHom Representation::lincomb(const LinComb& c) const {
  ModHom out = ModHom::zero(objects_.at(c.src), objects_.at(c.dst));
  for (const auto& [p, k] : c.terms) out = out + scale(ring_.reduce(k), path(p));
  return out;
}

namespace {

bool dropped_instance(const TensorQuiver& q, const RelationInstance& r) {
  if (r.clause == 0) return false;
  std::vector<VertexId> vs;
  std::stringstream in(r.label);
  for (std::string name; std::getline(in, name, ',');) {
    try {
      vs.push_back(q.vertex(name));
    } catch (const Error&) {
      return false;
    }
  }
  return q.dropped(r.clause, vs);
}

const char* square_name(EdgeKind k) {
  switch (k) {
    case EdgeKind::Alpha:
      return "square (1): alpha";
    case EdgeKind::Left:
      return "square (2): gamma (x) id";
    case EdgeKind::Right:
      return "square (3): id (x) gamma";
    case EdgeKind::Beta:
    case EdgeKind::BetaInv:
      return "associativity";
    case EdgeKind::Unit:
    case EdgeKind::UnitInv:
      return "unit";
    default:
      return "identity";
  }
}

}  // namespace

RepReport check_representation(const TensorQuiver& q, const RepSpec& spec, int max_depth) {
  Representation rep(q, spec);
  RepReport out;
  auto fail = [&](RepCheckEntry& entry, const std::string& where, const Mat& lhs, const Mat& rhs) {
    if (!entry.failure) entry.failure = DiagramFailure{entry.name, where, lhs, rhs};
  };

  RepCheckEntry inv{"kappa invertible", 0, std::nullopt};
  const VertexId n = static_cast<VertexId>(q.vertex_count());
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v) {
      ++inv.instances;
      try {
        rep.kappa_inv(u, v);
      } catch (const NoSolution&) {
        fail(inv, "kappa " + q.vertex_name(u) + " " + q.vertex_name(v), rep.kappa(u, v).mat(), Mat());
      }
    }
  out.entries.push_back(inv);

  if (!inv.failure) {
    std::vector<EdgeId> edges = q.edges_up_to(max_depth);
    std::set<EdgeId> seen(edges.begin(), edges.end());
    for (EdgeId e = 0; e < static_cast<EdgeId>(q.edge_count()); ++e)
      if (rep.is_explicit(e) && q.edge(e).kind != EdgeKind::Base && !seen.count(e)) edges.push_back(e);

    std::vector<RepCheckEntry> squares;
    for (EdgeKind k : {EdgeKind::Alpha, EdgeKind::Left, EdgeKind::Right, EdgeKind::Beta, EdgeKind::Unit}) {
      RepCheckEntry entry{square_name(k), 0, std::nullopt};
      for (EdgeId e : edges) {
        const EdgeTerm& t = q.edge(e);
        if (t.kind == EdgeKind::Base || t.kind == EdgeKind::Id || square_name(t.kind) != entry.name) continue;
        ++entry.instances;
        try {
          auto [lhs, rhs] = rep.diagram(e);
          if (!(lhs == rhs)) fail(entry, t.name, lhs.mat(), rhs.mat());
        } catch (const NoSolution& err) {
          fail(entry, t.name + ": " + err.what(), Mat(), Mat());
        }
      }
      out.entries.push_back(entry);
    }

    RepCheckEntry rel{"relations", 0, std::nullopt};
    for (const auto& r : q.relation_instances(max_depth)) {
      if (dropped_instance(q, r)) continue;
      ++rel.instances;
      std::string where = r.clause ? "clause " + std::to_string(r.clause) + " at " + r.label : "relation " + trim(r.label);
      try {
        ModHom lhs = rep.lincomb(r.lhs), rhs = rep.lincomb(r.rhs);
        if (!(lhs == rhs)) fail(rel, where, lhs.mat(), rhs.mat());
      } catch (const NoSolution& err) {
        fail(rel, where + ": " + err.what(), Mat(), Mat());
      }
    }
    out.entries.push_back(rel);
  }

  for (const auto& entry : out.entries)
    if (entry.failure && !out.first_failure) out.first_failure = entry.failure;
  out.ok = !out.first_failure;
  return out;
}

AddMorphism compose(const TensorQuiver& q, const AddMorphism& later, const AddMorphism& first) {
  if (first.dst != later.src) throw ShapeError("morphisms are not composable");
  AddMorphism out{first.src, later.dst, {}};
  for (std::size_t i = 0; i < first.src.size(); ++i) {
    std::vector<LinComb> row;
    for (std::size_t k = 0; k < later.dst.size(); ++k) {
      LinComb c = q.zero(first.src[i], later.dst[k]);
      for (std::size_t j = 0; j < first.dst.size(); ++j)
        c = q.add(c, q.compose(later.entries[j][k], first.entries[i][j]));
      row.push_back(q.normal_form(c));
    }
    out.entries.push_back(std::move(row));
  }
  return out;
}

InducedFunctor::InducedFunctor(const TensorQuiver& q, const RepSpec& spec) {
  RepReport r = check_representation(q, spec);
  if (!r.ok) throw IllFormedFunctor("representation fails " + r.first_failure->check + " at " + r.first_failure->where);
  rep_ = std::make_shared<Representation>(q, spec);
}

FPMod InducedFunctor::object(const std::vector<VertexId>& vs) const {
  std::vector<FPMod> parts;
  for (VertexId v : vs) parts.push_back(rep_->object(v));
  return direct_sum(parts).module;
}

ModHom InducedFunctor::morphism(const AddMorphism& m) const {
  const CoeffRing& R = rep_->ring();
  FPMod src = object(m.src), dst = object(m.dst);
  Mat a(R, src.gens(), dst.gens());
  std::size_t r0 = 0;
  for (std::size_t i = 0; i < m.src.size(); ++i) {
    std::size_t c0 = 0;
    for (std::size_t j = 0; j < m.dst.size(); ++j) {
      Mat block = rep_->lincomb(m.entries.at(i).at(j)).mat();
      for (std::size_t r = 0; r < block.rows(); ++r)
        for (std::size_t c = 0; c < block.cols(); ++c) a.set(r0 + r, c0 + c, block(r, c));
      c0 += rep_->object(m.dst[j]).gens();
    }
    r0 += rep_->object(m.src[i]).gens();
  }
  return ModHom(src, dst, a);
}

ModHom InducedFunctor::tensor(const LinComb& a, const LinComb& b) const {
  return compose(rep_->kappa(a.dst, b.dst),
                 compose(tensor_hom(rep_->lincomb(a), rep_->lincomb(b)), rep_->kappa_inv(a.src, b.src)));
}

std::vector<std::string> InducedFunctor::factorization_failures(int max_depth) const {
  const TensorQuiver& q = rep_->quiver();
  std::vector<std::string> out;
  for (VertexId v = 0; v < static_cast<VertexId>(q.vertex_count()); ++v)
    if (!(object({v}) == rep_->object(v))) out.push_back(q.vertex_name(v));
  for (EdgeId e : q.edges_up_to(max_depth)) {
    LinComb cls = q.normal_form(q.single(q.path({e})));
    if (!(rep_->lincomb(cls) == rep_->edge(e))) out.push_back(q.edge(e).name);
  }
  return out;
}

namespace {

class Sampler {
 public:
  Sampler(const TensorQuiver& q, std::uint64_t seed, std::size_t cap) : q_(q), rng_(seed), cap_(cap) {}

  VertexId vertex() { return static_cast<VertexId>(rng_() % q_.vertex_count()); }
  std::vector<VertexId> object() {
    std::vector<VertexId> out{vertex()};
    if (rng_() % 2) out.push_back(vertex());
    return out;
  }
  LinComb lincomb(VertexId v, VertexId w) {
    const auto& basis = basis_of(v, w);
    LinComb c = q_.zero(v, w);
    if (basis.empty()) return c;
    // sparse: at most two basis paths
    static const Scalar coeffs[] = {-1, 1, 2};
    for (std::uint64_t t = rng_() % 3; t > 0; --t) c = q_.add(c, q_.single(basis[rng_() % basis.size()], coeffs[rng_() % 3]));
    return c;
  }
  AddMorphism morphism(const std::vector<VertexId>& x, const std::vector<VertexId>& y) {
    AddMorphism m{x, y, {}};
    for (VertexId v : x) {
      std::vector<LinComb> row;
      for (VertexId w : y) row.push_back(lincomb(v, w));
      m.entries.push_back(std::move(row));
    }
    return m;
  }

 private:
  const std::vector<Path>& basis_of(VertexId v, VertexId w) {
    auto it = bases_.find({v, w});
    if (it == bases_.end()) it = bases_.emplace(std::make_pair(v, w), hom_basis(q_, v, w, cap_, q_.signs())).first;
    return it->second;
  }

  const TensorQuiver& q_;
  std::mt19937_64 rng_;
  std::size_t cap_;
  std::map<std::pair<VertexId, VertexId>, std::vector<Path>> bases_;
};

std::string describe(const TensorQuiver& q, const AddMorphism& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.entries.size(); ++i) {
    s += i ? "; " : "";
    for (std::size_t j = 0; j < m.entries[i].size(); ++j) s += (j ? ", " : "") + q.to_string(m.entries[i][j]);
  }
  return s + "]";
}

// 0 -> K(Z) -> (B, Z) -> (A, Z) -> C(Z) -> 0 at every test module, for the
// kernel and cokernel of (h, -) with h: A -> B.
std::optional<std::string> exactness_failure(const ModHom& h) {
  FunHom alpha = yoneda_map(h);
  FunctorKernel k = kernel_f(alpha);
  FunctorCokernel c = cokernel_f(alpha);
  for (const FPMod& z : test_modules(h.src().ring())) {
    ModHom a = evaluate_hom(alpha, z);
    ModHom inc = evaluate_hom(k.inclusion, z);
    ModHom proj = evaluate_hom(c.projection, z);
    std::string at = " at " + z.to_string();
    if (!kernel(inc).module.is_zero()) return "kernel inclusion not injective" + at;
    if (!compose(a, inc).is_zero()) return "kernel does not compose to zero" + at;
    if (inc.src().cardinality() != kernel(a).module.cardinality()) return "kernel has the wrong size" + at;
    if (!cokernel(proj).module.is_zero()) return "cokernel projection not surjective" + at;
    if (!compose(proj, a).is_zero()) return "cokernel does not compose to zero" + at;
    if (proj.dst().cardinality() != cokernel(a).module.cardinality()) return "cokernel has the wrong size" + at;
  }
  return std::nullopt;
}

}  // namespace

UniversalReport universal_property_check(const TensorQuiver& q, const RepSpec& spec, std::size_t samples,
                                         std::uint64_t seed, std::size_t cap) {
  InducedFunctor m(q, spec);
  const TensorQuiver& tq = m.rep().quiver();
  Sampler draw(tq, seed, cap);
  UniversalReport out;
  for (std::size_t s = 0; s < samples; ++s) {
    std::string tag = "sample " + std::to_string(s);
    auto x = draw.object(), y = draw.object(), z = draw.object();
    AddMorphism phi = draw.morphism(x, y), psi = draw.morphism(y, z);
    ModHom mphi = m.morphism(phi);

    ++out.functoriality;
    AddMorphism both = compose(tq, psi, phi);
    if (!(m.morphism(both) == compose(m.morphism(psi), mphi)))
      out.failures.push_back({"functoriality", tag, describe(tq, psi) + " . " + describe(tq, phi)});
    for (const auto& row : phi.entries)
      for (const auto& c : row)
        if (!(m.lincomb(tq.normal_form(c)) == m.lincomb(c)))
          out.failures.push_back({"normal form", tag, tq.to_string(c)});

    ++out.exactness;
    if (auto why = exactness_failure(mphi)) out.failures.push_back({"exactness", tag, describe(tq, phi) + ": " + *why});

    ++out.tensor;
    VertexId v = draw.vertex(), v2 = draw.vertex(), w = draw.vertex(), w2 = draw.vertex();
    LinComb a = draw.lincomb(v, v2), b = draw.lincomb(w, w2);
    LinComb ab = tq.normal_form(tq.tensor_lincombs(a, b, tq.signs()));
    if (!(m.lincomb(ab) == m.tensor(a, b)))
      out.failures.push_back({"tensor", tag, tq.to_string(a) + " (x) " + tq.to_string(b)});
    FPFunctor lhs = tensor_general(yoneda(m.rep().object(v)), yoneda(m.rep().object(w)));
    if (!isomorphic(lhs, yoneda(m.rep().object(tq.tensor(v, w)))))
      out.failures.push_back({"tensor on representables", tag, tq.vertex_name(v) + " (x) " + tq.vertex_name(w)});
  }
  return out;
}

QuotientLift quotient_lift_check(const TensorQuiver& d, const std::string& lhs, const std::string& rhs,
                                 std::size_t cap) {
  TensorQuiver d1 = d.with_relation(lhs, rhs);
  QuotientLift out;
  const VertexId n = static_cast<VertexId>(d.vertex_count());
  for (VertexId v = 0; v < n; ++v)
    for (VertexId w = 0; w < n; ++w)
      for (const Path& p : hom_basis(d1, v, w, cap, d1.signs())) {
        ++out.classes;
        LinComb lifted = d.normal_form(p);
        if (!(d1.normal_form(lifted) == d1.single(p))) out.failures.push_back(d1.to_string(p));
      }
  return out;
}

}  // namespace freyd
