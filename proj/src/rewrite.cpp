#include <algorithm>
#include <functional>

#include "freyd/errors.hpp"
#include "freyd/quiver.hpp"

namespace freyd {

namespace {

// Shapes of the edges that appear around a structural edge in its
// naturality relation; gamma is the moving edge.
enum class Shape { Self, L, R, LL, RL, LR, RR };

struct Slot {
  VertexId vertex;
  Shape pre, post;
  VertexId p, q;  // parameters of the shapes
  VertexId pp, pq;
};

Scalar sign_of(int parity) { return parity % 2 ? -1 : 1; }

}  // namespace

namespace {

struct Shapes {
  const TensorQuiver& q;

  EdgeId build(Shape s, EdgeId g, VertexId a, VertexId b) const {
    switch (s) {
      case Shape::Self: return g;
      case Shape::L: return q.left(g, a);
      case Shape::R: return q.right(a, g);
      case Shape::LL: return q.left(q.left(g, a), b);
      case Shape::RL: return q.right(a, q.left(g, b));
      case Shape::LR: return q.left(q.right(a, g), b);
      case Shape::RR: return q.right(a, q.right(b, g));
    }
    return -1;
  }

  // gamma with build(s, gamma, a, b) == x, if any
  EdgeId match(Shape s, EdgeId x, VertexId a, VertexId b) const {
    const EdgeTerm& t = q.edge(x);
    auto is = [&](const EdgeTerm& e, EdgeKind k, VertexId v) { return e.kind == k && e.a == v; };
    switch (s) {
      case Shape::Self: return x;
      case Shape::L: return is(t, EdgeKind::Left, a) ? t.inner : -1;
      case Shape::R: return is(t, EdgeKind::Right, a) ? t.inner : -1;
      case Shape::LL:
        if (!is(t, EdgeKind::Left, b)) return -1;
        return is(q.edge(t.inner), EdgeKind::Left, a) ? q.edge(t.inner).inner : -1;
      case Shape::RL:
        if (!is(t, EdgeKind::Right, a)) return -1;
        return is(q.edge(t.inner), EdgeKind::Left, b) ? q.edge(t.inner).inner : -1;
      case Shape::LR:
        if (!is(t, EdgeKind::Left, b)) return -1;
        return is(q.edge(t.inner), EdgeKind::Right, a) ? q.edge(t.inner).inner : -1;
      case Shape::RR:
        if (!is(t, EdgeKind::Right, a)) return -1;
        return is(q.edge(t.inner), EdgeKind::Right, b) ? q.edge(t.inner).inner : -1;
    }
    return -1;
  }

  // Slots of a structural edge: S(.., dst g, ..) . pre(g) = post(g) . S(.., src g, ..)
  std::vector<Slot> slots(const EdgeTerm& t) const {
    VertexId u = t.a, v = t.b, w = t.c;
    switch (t.kind) {
      case EdgeKind::Alpha:
        return {{u, Shape::L, Shape::R, v, -1, v, -1}, {v, Shape::R, Shape::L, u, -1, u, -1}};
      case EdgeKind::Beta:
        return {{u, Shape::L, Shape::LL, q.tensor(v, w), -1, v, w},
                {v, Shape::RL, Shape::LR, u, w, u, w},
                {w, Shape::RR, Shape::R, u, v, q.tensor(u, v), -1}};
      case EdgeKind::BetaInv:
        return {{u, Shape::LL, Shape::L, v, w, q.tensor(v, w), -1},
                {v, Shape::LR, Shape::RL, u, w, u, w},
                {w, Shape::R, Shape::RR, q.tensor(u, v), -1, u, v}};
      case EdgeKind::Unit: return {{u, Shape::Self, Shape::R, -1, -1, q.unit(), -1}};
      case EdgeKind::UnitInv: return {{u, Shape::R, Shape::Self, q.unit(), -1, -1, -1}};
      default: return {};
    }
  }

  EdgeId with_slot(const EdgeTerm& t, std::size_t k, VertexId x) const {
    VertexId vs[3] = {t.a, t.b, t.c};
    vs[k] = x;
    switch (t.kind) {
      case EdgeKind::Alpha: return q.alpha(vs[0], vs[1]);
      case EdgeKind::Beta: return q.beta(vs[0], vs[1], vs[2]);
      case EdgeKind::BetaInv: return q.beta_inv(vs[0], vs[1], vs[2]);
      case EdgeKind::Unit: return q.unit_edge(vs[0]);
      case EdgeKind::UnitInv: return q.unit_inv_edge(vs[0]);
      default: return -1;
    }
  }
};

}  // namespace

std::vector<std::pair<Path, Scalar>> TensorQuiver::schema_partners(const std::vector<EdgeId>& win) const {
  std::vector<std::pair<Path, Scalar>> out;
  Shapes sh{*this};
  auto emit = [&](std::vector<EdgeId> written, Scalar k) { out.push_back({path(written), k}); };
  auto emit_empty = [&](VertexId v) { out.push_back({empty_path(v), 1}); };

  if (win.size() == 1) {
    // id_1 (x) u_v = u_{1 (x) v} and id_1 (x) u'_v = u'_{1 (x) v}, from (10) and (11)
    const EdgeTerm& A = edge(win[0]);
    if (A.kind == EdgeKind::Right && A.a == unit()) {
      const EdgeTerm& i = edge(A.inner);
      if (i.kind == EdgeKind::Unit) emit({unit_edge(tensor(unit(), i.a))}, 1);
      if (i.kind == EdgeKind::UnitInv) emit({unit_inv_edge(tensor(unit(), i.a))}, 1);
    }
  } else if (win.size() == 2) {
    const EdgeTerm& A = edge(win[0]);
    const EdgeTerm& B = edge(win[1]);
    // (4)
    if (A.kind == EdgeKind::Alpha && B.kind == EdgeKind::Alpha && A.a == B.b && A.b == B.a &&
        !dropped(4, {A.a, A.b}))
      emit_empty(B.src);
    // (6)
    if (((A.kind == EdgeKind::Beta && B.kind == EdgeKind::BetaInv) ||
         (A.kind == EdgeKind::BetaInv && B.kind == EdgeKind::Beta)) &&
        A.a == B.a && A.b == B.b && A.c == B.c && !dropped(6, {A.a, A.b, A.c}))
      emit_empty(B.src);
    // (10)
    if (((A.kind == EdgeKind::Unit && B.kind == EdgeKind::UnitInv) ||
         (A.kind == EdgeKind::UnitInv && B.kind == EdgeKind::Unit)) &&
        A.a == B.a && !dropped(10, {A.a}))
      emit_empty(B.src);
    // (3) / (3'): (e (x) id) . (id (x) e') = s (id (x) e') . (e (x) id)
    if (A.kind == EdgeKind::Left && B.kind == EdgeKind::Right) {
      EdgeId e = A.inner, f = B.inner;
      if (B.a == edge(e).src && A.a == edge(f).dst) {
        Scalar s = signs_ ? sign_of(edge_grade(e) * edge_grade(f)) : 1;
        emit({right(edge(e).dst, f), left(e, edge(f).src)}, s);
      }
    }
    if (A.kind == EdgeKind::Right && B.kind == EdgeKind::Left) {
      EdgeId f = A.inner, e = B.inner;
      if (A.a == edge(e).dst && B.a == edge(f).src) {
        Scalar s = signs_ ? sign_of(edge_grade(e) * edge_grade(f)) : 1;
        emit({left(e, edge(f).dst), right(edge(e).src, f)}, s);
      }
    }
    // (5), (7), (11) and their consequences for beta' and u'
    auto slots_a = sh.slots(A);
    for (std::size_t k = 0; k < slots_a.size(); ++k) {
      const Slot& s = slots_a[k];
      EdgeId g = sh.match(s.pre, win[1], s.p, s.q);
      if (g < 0 || edge(g).kind == EdgeKind::Id || edge(g).dst != s.vertex) continue;
      emit({sh.build(s.post, g, s.pp, s.pq), sh.with_slot(A, k, edge(g).src)}, 1);
    }
    auto slots_b = sh.slots(B);
    for (std::size_t k = 0; k < slots_b.size(); ++k) {
      const Slot& s = slots_b[k];
      EdgeId g = sh.match(s.post, win[0], s.pp, s.pq);
      if (g < 0 || edge(g).kind == EdgeKind::Id || edge(g).src != s.vertex) continue;
      emit({sh.with_slot(B, k, edge(g).dst), sh.build(s.pre, g, s.p, s.q)}, 1);
    }
  } else if (win.size() == 3) {
    const EdgeTerm& A = edge(win[0]);
    const EdgeTerm& B = edge(win[1]);
    const EdgeTerm& C = edge(win[2]);
    // (8) pentagon: (beta (x) id) . beta . (id (x) beta) = beta . beta
    if (A.kind == EdgeKind::Left && B.kind == EdgeKind::Beta && C.kind == EdgeKind::Right) {
      const EdgeTerm& ib = edge(A.inner);
      const EdgeTerm& ic = edge(C.inner);
      if (ib.kind == EdgeKind::Beta && ic.kind == EdgeKind::Beta) {
        VertexId x = ib.a, y = ib.b, z = ib.c, t = A.a;
        if (B.a == x && B.b == tensor(y, z) && B.c == t && C.a == x && ic.a == y && ic.b == z && ic.c == t &&
            !dropped(8, {x, y, z, t}))
          emit({beta(tensor(x, y), z, t), beta(x, y, tensor(z, t))}, 1);
      }
    }
    // u_w . g . u'_v = id_1 (x) g by (10) and (11)
    if (A.kind == EdgeKind::Unit && C.kind == EdgeKind::UnitInv && B.kind != EdgeKind::Id && B.dst == A.a &&
        B.src == C.a)
      emit({right(unit(), win[1])}, 1);
    // X . u_w . g = X . (id_1 (x) g) . u_v by (11); if X . (id_1 (x) g) rewrites
    // to Y . X', then X . u_w . g = Y . X' . u_v
    if (B.kind == EdgeKind::Unit && C.kind != EdgeKind::Id && C.dst == B.a) {
      std::vector<EdgeId> inner{win[0], right(unit(), win[2])};
      for (auto& [other, k] : schema_partners(inner))
        if (other.edges.size() == 2 && cmp_paths(inner, other.edges) > 0)
          emit({other.edges[0], other.edges[1], unit_edge(C.src)}, k);
    }
    // (9) hexagon, both directions
    if (A.kind == EdgeKind::Left && B.kind == EdgeKind::Beta && C.kind == EdgeKind::Right) {
      const EdgeTerm& ia = edge(A.inner);
      const EdgeTerm& ic = edge(C.inner);
      if (ia.kind == EdgeKind::Alpha && ic.kind == EdgeKind::Alpha) {
        VertexId x = ia.a, z = ia.b, y = A.a;
        if (B.a == x && B.b == z && B.c == y && C.a == x && ic.a == y && ic.b == z && !dropped(9, {x, y, z}))
          emit({beta(z, x, y), alpha(tensor(x, y), z), beta(x, y, z)}, 1);
      }
    }
    if (A.kind == EdgeKind::Beta && B.kind == EdgeKind::Alpha && C.kind == EdgeKind::Beta) {
      VertexId x = C.a, y = C.b, z = C.c;
      if (A.a == z && A.b == x && A.c == y && B.a == tensor(x, y) && B.b == z && !dropped(9, {x, y, z}))
        emit({left(alpha(x, z), y), beta(x, z, y), right(x, alpha(y, z))}, 1);
    }
  }
  return out;
}

std::vector<LinComb> TensorQuiver::successors(const Path& p) const {
  std::vector<LinComb> out;
  const auto& e = p.edges;
  auto splice = [&](std::size_t at, std::size_t len, const LinComb& mid) {
    std::vector<std::pair<Path, Scalar>> terms;
    for (const auto& [m, k] : mid.terms) {
      Path r{p.src, p.dst, {}};
      r.edges.assign(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(at));
      r.edges.insert(r.edges.end(), m.edges.begin(), m.edges.end());
      r.edges.insert(r.edges.end(), e.begin() + static_cast<std::ptrdiff_t>(at + len), e.end());
      terms.push_back({std::move(r), k});
    }
    return normalize_terms(p.src, p.dst, std::move(terms));
  };
  // schema windows, also under any common stack of wrappers
  for (std::size_t len = 1; len <= 3; ++len)
    for (std::size_t at = 0; at + len <= e.size(); ++at) {
      std::vector<EdgeId> win(e.begin() + static_cast<std::ptrdiff_t>(at),
                              e.begin() + static_cast<std::ptrdiff_t>(at + len));
      std::vector<std::pair<EdgeKind, VertexId>> wraps;
      for (;;) {
        for (auto& [other, k] : schema_partners(win)) {
          std::vector<EdgeId> w = other.edges;
          for (EdgeId& x : w)
            for (std::size_t i = wraps.size(); i-- > 0;)
              x = wraps[i].first == EdgeKind::Left ? left(x, wraps[i].second) : right(wraps[i].second, x);
          if (cmp_paths(std::vector<EdgeId>(e.begin() + static_cast<std::ptrdiff_t>(at),
                                            e.begin() + static_cast<std::ptrdiff_t>(at + len)),
                        w) > 0)
            out.push_back(splice(at, len, LinComb{-1, -1, {{Path{-1, -1, w}, k}}}));
        }
        const EdgeTerm& t0 = edge(win[0]);
        if (t0.kind != EdgeKind::Left && t0.kind != EdgeKind::Right) break;
        bool common = std::all_of(win.begin(), win.end(), [&](EdgeId x) {
          return edge(x).kind == t0.kind && edge(x).a == t0.a;
        });
        if (!common) break;
        wraps.push_back({t0.kind, t0.a});
        for (EdgeId& x : win) x = edge(x).inner;
      }
    }
  // declared rules, also under any common stack of (x) id_w and id_w (x) wrappers
  const auto& rules = rules_->rules;
  for (std::size_t at = 0; at < e.size() && !rules.empty(); ++at) {
    std::vector<std::pair<EdgeKind, VertexId>> wraps;
    for (EdgeId x = e[at];;) {
      const EdgeTerm& t = edge(x);
      if (t.kind != EdgeKind::Left && t.kind != EdgeKind::Right) break;
      wraps.push_back({t.kind, t.a});
      x = t.inner;
    }
    for (std::size_t d = 0; d <= wraps.size(); ++d) {
      auto strip = [&](EdgeId x) -> EdgeId {
        for (std::size_t i = 0; i < d; ++i) {
          const EdgeTerm& t = edge(x);
          if (t.kind != wraps[i].first || t.a != wraps[i].second) return -1;
          x = t.inner;
        }
        return x;
      };
      auto wrap = [&](EdgeId x) {
        for (std::size_t i = d; i-- > 0;) x = wraps[i].first == EdgeKind::Left ? left(x, wraps[i].second) : right(wraps[i].second, x);
        return x;
      };
      EdgeId head = strip(e[at]);
      auto bucket = rules_->by_first.find(head);
      if (head < 0 || bucket == rules_->by_first.end()) continue;
      for (std::size_t ri : bucket->second) {
        const Rule& rule = rules[ri];
        const auto& l = rule.lhs.edges;
        if (at + l.size() > e.size()) continue;
        bool hit = true;
        for (std::size_t i = 1; i < l.size() && hit; ++i) hit = strip(e[at + i]) == l[i];
        if (!hit) continue;
        std::vector<std::pair<Path, Scalar>> mid;
        for (const auto& [m, k] : rule.rhs.terms) {
          std::vector<EdgeId> w;
          for (EdgeId x : m.edges) w.push_back(wrap(x));
          mid.push_back({Path{-1, -1, w}, k});
        }
        out.push_back(splice(at, l.size(), LinComb{-1, -1, mid}));
      }
    }
  }
  return out;
}

namespace {

struct Diverged {
  LinComb a, b;
};

}  // namespace

LinComb TensorQuiver::normal_form_impl(const Path& p, std::map<std::vector<EdgeId>, LinComb>& memo,
                                       std::size_t& states, const NormalFormCaps& caps) const {
  if (p.edges.empty()) return single(p);
  if (auto it = memo.find(p.edges); it != memo.end()) return it->second;
  if (++states > caps.max_states) throw CapExceeded("rewriting exceeded " + std::to_string(caps.max_states) + " states");
  auto succ = successors(p);
  LinComb result = single(p);
  for (std::size_t i = 0; i < succ.size(); ++i) {
    LinComb r = zero(p.src, p.dst);
    for (const auto& [q, k] : succ[i].terms) r = add(r, scale(k, normal_form_impl(q, memo, states, caps)));
    if (i == 0)
      result = r;
    else if (!(r == result)) {
      if (!caps.complete) throw NonConfluent("rewrites of " + to_string(p) + " end in " + to_string(result) + " and " + to_string(r));
      throw Diverged{result, r};
    }
  }
  memo.emplace(p.edges, result);
  return result;
}

LinComb TensorQuiver::normal_form(const Path& p, const NormalFormCaps& caps) const {
  return normal_form(single(p), caps);
}

LinComb TensorQuiver::normal_form(const LinComb& c, const NormalFormCaps& caps) const {
  for (;;) {
    try {
      std::map<std::vector<EdgeId>, LinComb> memo;
      std::size_t states = 0;
      LinComb out = zero(c.src, c.dst);
      for (const auto& [p, k] : c.terms) out = add(out, scale(k, normal_form_impl(p, memo, states, caps)));
      return out;
    } catch (const Diverged& d) {
      if (rules_->rules.size() >= caps.max_rules)
        throw CapExceeded("completion exceeded " + std::to_string(caps.max_rules) + " rules");
      if (add_rule(add(d.a, scale(-1, d.b))))
        ++rules_->learned;
      else
        throw NonConfluent("rewrites end in " + to_string(d.a) + " and " + to_string(d.b) +
                           ", and their difference has no unit leading coefficient");
    }
  }
}

bool TensorQuiver::add_rule(const LinComb& diff) const {
  const auto& [lead, c] = diff.terms.back();
  if ((c != 1 && c != -1) || lead.edges.empty()) return false;
  LinComb rest = zero(diff.src, diff.dst);
  for (std::size_t i = 0; i + 1 < diff.terms.size(); ++i)
    rest = add(rest, single(diff.terms[i].first, -c * diff.terms[i].second));
  rules_->by_first[lead.edges.front()].push_back(rules_->rules.size());
  rules_->rules.push_back({lead, rest});
  return true;
}

bool TensorQuiver::equal(const LinComb& a, const LinComb& b, const NormalFormCaps& caps) const {
  return normal_form(add(a, scale(-1, b)), caps).is_zero();
}

void TensorQuiver::add_declared_relation(const LinComb& lhs, const LinComb& rhs, const std::string& label) {
  LinComb l = lhs, r = rhs;
  if (l.src == -1) l = zero(r.src, r.dst);
  if (r.src == -1) r = zero(l.src, l.dst);
  if (l.src == -1) throw ShapeError("relation between two zero combinations");
  if (l.src != r.src || l.dst != r.dst) throw ShapeError("relation sides are not parallel");
  declared_relations_.push_back({0, label, l, r});
  LinComb diff = normal_form(add(l, scale(-1, r)));
  if (diff.is_zero()) return;
  if (!add_rule(diff)) throw ShapeError("leading coefficient of a relation must be 1 or -1");
}

// ---------------------------------------------------------------------------

LinComb TensorQuiver::tensor_paths(const Path& g, const Path& d, bool signed_tensor) const {
  std::vector<EdgeId> written;
  for (EdgeId e : g.edges) written.push_back(left(e, d.dst));
  for (EdgeId e : d.edges) written.push_back(right(g.src, e));
  Path p = written.empty() ? empty_path(tensor(g.src, d.src)) : path(written);
  if (p.edges.empty()) p = empty_path(tensor(g.src, d.src));
  Scalar s = signed_tensor ? sign_of(path_grade(g) * grades_.at(d.dst)) : 1;
  return single(p, s);
}

LinComb TensorQuiver::tensor_lincombs(const LinComb& a, const LinComb& b, bool signed_tensor) const {
  LinComb out = zero(tensor(a.src, b.src), tensor(a.dst, b.dst));
  for (const auto& [p, x] : a.terms)
    for (const auto& [r, y] : b.terms) out = add(out, scale(x * y, tensor_paths(p, r, signed_tensor)));
  return out;
}

LinComb TensorQuiver::alpha_signed(VertexId v, VertexId w, bool signed_tensor) const {
  Scalar s = signed_tensor ? sign_of(grades_.at(v) * grades_.at(w)) : 1;
  return single(path({alpha(v, w)}), s);
}

std::vector<RelationInstance> TensorQuiver::relation_instances(int max_depth) const {
  std::vector<RelationInstance> out;
  const auto edges = edges_up_to(max_depth);
  const VertexId n = static_cast<VertexId>(vertex_count());
  auto P = [&](std::vector<EdgeId> w) { return single(path(w)); };
  auto E = [&](VertexId v) { return single(empty_path(v)); };
  auto name = [&](std::initializer_list<VertexId> vs) {
    std::string s;
    for (VertexId v : vs) s += (s.empty() ? "" : ",") + vertex_name(v);
    return s;
  };
  Shapes sh{*this};

  for (EdgeId e : edges)
    for (EdgeId f : edges) {
      Scalar s = signs_ ? sign_of(edge_grade(e) * edge_grade(f)) : 1;
      out.push_back({3, edge(e).name + " | " + edge(f).name,
                     P({left(e, edge(f).dst), right(edge(e).src, f)}),
                     scale(s, P({right(edge(e).dst, f), left(e, edge(f).src)}))});
    }
  for (VertexId v = 0; v < n; ++v)
    for (VertexId w = 0; w < n; ++w)
      out.push_back({4, name({v, w}), P({alpha(v, w), alpha(w, v)}), E(tensor(w, v))});
  // (5), (7), (11): every slot of every structural edge against every edge
  std::vector<EdgeId> structural;
  for (const auto& [k, e] : alpha_) structural.push_back(e);
  for (const auto& [k, e] : beta_) structural.push_back(e);
  for (const auto& [k, e] : beta_inv_) structural.push_back(e);
  for (const auto& [k, e] : unit_edge_) structural.push_back(e);
  for (const auto& [k, e] : unit_inv_) structural.push_back(e);
  for (EdgeId st : structural) {
    const EdgeTerm& t = edge(st);
    auto slots = sh.slots(t);
    int clause = t.kind == EdgeKind::Alpha ? 5 : (t.kind == EdgeKind::Unit || t.kind == EdgeKind::UnitInv) ? 11 : 7;
    for (std::size_t k = 0; k < slots.size(); ++k)
      for (EdgeId g : edges) {
        if (edge(g).src != slots[k].vertex) continue;
        EdgeId after = sh.with_slot(t, k, edge(g).dst);
        out.push_back({clause, t.name + " ~ " + edge(g).name,
                       P({after, sh.build(slots[k].pre, g, slots[k].p, slots[k].q)}),
                       P({sh.build(slots[k].post, g, slots[k].pp, slots[k].pq), st})});
      }
  }
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v)
      for (VertexId w = 0; w < n; ++w) {
        {
          out.push_back({6, name({u, v, w}), P({beta(u, v, w), beta_inv(u, v, w)}), E(edge(beta_inv(u, v, w)).src)});
          out.push_back({6, name({u, v, w}), P({beta_inv(u, v, w), beta(u, v, w)}), E(edge(beta(u, v, w)).src)});
        }
        {
          VertexId x = u, y = v, z = w;
          out.push_back({9, name({x, y, z}), P({beta(z, x, y), alpha(tensor(x, y), z), beta(x, y, z)}),
                         P({left(alpha(x, z), y), beta(x, z, y), right(x, alpha(y, z))})});
        }
        for (VertexId t = 0; t < n; ++t)
            out.push_back({8, name({u, v, w, t}),
                           P({left(beta(u, v, w), t), beta(u, tensor(v, w), t), right(u, beta(v, w, t))}),
                           P({beta(tensor(u, v), w, t), beta(u, v, tensor(w, t))})});
      }
  for (VertexId v = 0; v < n; ++v)
    {
      out.push_back({10, name({v}), P({unit_edge(v), unit_inv_edge(v)}), E(tensor(unit(), v))});
      out.push_back({10, name({v}), P({unit_inv_edge(v), unit_edge(v)}), E(v)});
    }
  for (const auto& r : declared_relations_) out.push_back(r);
  return out;
}

std::vector<Path> hom_basis(const TensorQuiver& quiver, VertexId v, VertexId w, std::size_t cap, bool signed_tensor,
                            std::size_t max_paths) {
  TensorQuiver q = quiver.with_signs(signed_tensor && quiver.graded());
  const auto edges = q.edges_up_to(1);
  std::vector<Path> candidates;
  std::size_t enumerated = 0;
  // extend in application order: the newest edge goes in front
  std::function<void(const Path&)> walk = [&](const Path& p) {
    if (++enumerated > max_paths) throw CapExceeded("hom_basis enumerated more than " + std::to_string(max_paths));
    if (p.dst == w) candidates.push_back(p);
    if (p.edges.size() >= cap) return;
    for (EdgeId e : edges) {
      if (q.edge(e).src != p.dst) continue;
      Path next{p.src, q.edge(e).dst, {e}};
      next.edges.insert(next.edges.end(), p.edges.begin(), p.edges.end());
      walk(next);
    }
  };
  walk(q.empty_path(v));
  // completion may learn rules on the way; repeat until nothing new is learned
  std::vector<Path> found;
  for (;;) {
    std::size_t learned = q.learned_rule_count();
    found.clear();
    for (const auto& p : candidates)
      for (const auto& [r, k] : q.normal_form(p).terms) found.push_back(r);
    if (q.learned_rule_count() == learned) break;
  }
  std::sort(found.begin(), found.end(), [&](const Path& a, const Path& b) { return q.path_less(a, b); });
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

}  // namespace freyd
