#include <set>

#include "freyd/errors.hpp"
#include "freyd/quiver.hpp"

namespace freyd {

namespace {

bool well_typed(const TensorQuiver& q, const LinComb& c) {
  for (const auto& [p, k] : c.terms) {
    if (p.src != c.src || p.dst != c.dst) return false;
    VertexId at = p.src;
    for (std::size_t i = p.edges.size(); i-- > 0;) {
      if (q.edge(p.edges[i]).src != at) return false;
      at = q.edge(p.edges[i]).dst;
    }
    if (at != p.dst) return false;
  }
  return true;
}

}  // namespace

TensorValidation validate_tensor(const TensorQuiver& q, int max_depth) {
  TensorValidation out;
  auto bad = [&](int clause, std::string where, std::string message) {
    out.violations.push_back({clause, std::move(where), std::move(message)});
  };
  const VertexId n = static_cast<VertexId>(q.vertex_count());

  if (q.graded()) {
    if (q.grade(q.unit()) != 0) bad(0, q.vertex_name(q.unit()), "the unit has odd degree");
    for (VertexId v = 0; v < n; ++v)
      for (VertexId w = 0; w < n; ++w)
        if (q.grade(q.tensor(v, w)) != (q.grade(v) + q.grade(w)) % 2)
          bad(0, q.vertex_name(v) + " (x) " + q.vertex_name(w), "degree is not additive");
  }

  for (const auto& [clause, vs] : q.drops()) {
    std::string where;
    for (VertexId v : vs) where += (where.empty() ? "" : ",") + q.vertex_name(v);
    bad(clause, where, "instance removed");
  }

  const std::set<int> structural{4, 6, 8, 9, 10};
  for (const auto& r : q.relation_instances(max_depth)) {
    ++out.instances[r.clause];
    LinComb lhs = r.lhs, rhs = r.rhs;
    if (lhs.src != rhs.src || lhs.dst != rhs.dst || !well_typed(q, lhs) || !well_typed(q, rhs)) {
      bad(r.clause, r.label, "sides are not parallel paths");
      continue;
    }
    if (r.clause == 3 && lhs.terms.size() == 1 && rhs.terms.size() == 1) {
      const auto& l = lhs.terms[0].first.edges;
      if (l.size() == 2) {
        int e = q.edge_grade(q.edge(l[0]).inner), f = q.edge_grade(q.edge(l[1]).inner);
        Scalar want = q.signs() && e * f % 2 ? -1 : 1;
        if (rhs.terms[0].second * lhs.terms[0].second != want) bad(3, r.label, "wrong interchange sign");
      }
    }
    if (!structural.count(r.clause)) continue;
    try {
      if (!q.equal(lhs, rhs)) bad(r.clause, r.label, "does not hold in the path category");
    } catch (const Error& e) {
      bad(r.clause, r.label, e.what());
    }
  }
  out.ok = out.violations.empty();
  return out;
}

}  // namespace freyd
