#include <doctest.h>

#include <fstream>
#include <sstream>

#include "freyd/errors.hpp"
#include "freyd/representation.hpp"

using namespace freyd;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(FREYD_DATA_DIR) + "/" + name);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string replace(std::string text, const std::string& from, const std::string& to) {
  auto at = text.find(from);
  REQUIRE(at != std::string::npos);
  return text.replace(at, from.size(), to);
}

// One-dimensional representations with every kappa = 1: each edge acts by a
// scalar read off its term.
struct ScalarOracle {
  const TensorQuiver& q;
  std::map<std::string, Scalar> base;
  Scalar n;
  Scalar unit = 1;

  Scalar red(Scalar x) const { return ((x % n) + n) % n; }
  Scalar edge(EdgeId e) const {
    const EdgeTerm& t = q.edge(e);
    bool sg = q.signs();
    switch (t.kind) {
      case EdgeKind::Base:
        return red(base.at(t.name));
      case EdgeKind::Alpha:
        return sg && q.grade(t.a) * q.grade(t.b) % 2 ? red(-1) : 1;
      case EdgeKind::Left:
        return red((sg && q.edge_grade(t.inner) * q.grade(t.a) % 2 ? -1 : 1) * edge(t.inner));
      case EdgeKind::Right:
        return edge(t.inner);
      case EdgeKind::Unit:
        return red(unit);
      case EdgeKind::UnitInv:
        for (Scalar k = 1; k < n; ++k)
          if (red(k * unit) == 1) return k;
        return 0;
      default:
        return 1;
    }
  }
  Scalar path(const Path& p) const {
    Scalar out = 1;
    for (EdgeId e : p.edges) out = red(out * edge(e));
    return out;
  }
  Scalar lincomb(const LinComb& c) const {
    Scalar out = 0;
    for (const auto& [p, k] : c.terms) out = red(out + red(k) * path(p));
    return out;
  }
};

Scalar entry(const ModHom& h) {
  REQUIRE(h.mat().rows() == 1);
  REQUIRE(h.mat().cols() == 1);
  return h.mat()(0, 0);
}

const RepCheckEntry& find_entry(const RepReport& r, const std::string& name) {
  for (const auto& e : r.entries)
    if (e.name == name) return e;
  FAIL("no entry " << name);
  return r.entries.front();
}

}  // namespace

TEST_CASE("representation files parse") {
  RepSpec r = RepSpec::parse(slurp("demo_f2.rep"));
  CHECK(r.ring == CoeffRing::mod(2));
  CHECK(r.vertices.size() == 2);
  CHECK(r.edges.size() == 2);
  CHECK(r.kappa.size() == 4);
  CHECK(r.kappa0.has_value());
  RepSpec g = RepSpec::parse(slurp("demo_graded_f3.rep"));
  CHECK(g.edges.count("<g,x>") == 1);
}

TEST_CASE("representation parse errors carry positions") {
  try {
    RepSpec::parse("ring Z/2\nkappa x = Z/2 [[1]]\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 1);
  }
  try {
    RepSpec::parse("ring Z/2\nrep edge f = Z/2 [[1,]]\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 22);
  }
  CHECK_THROWS_AS(RepSpec::parse("rep vertex x = free(Z/2,1)\n"), ParseError);
  CHECK_THROWS_AS(RepSpec::parse("ring Z/2\nrep vertex x = free(Z/3,1)\n"), ParseError);
  CHECK_THROWS_AS(RepSpec::parse("ring Z\n"), ParseError);
  CHECK_THROWS_AS(RepSpec::parse("ring Z/2\nkappa0 = Z/2 [[1]]\nkappa0 = Z/2 [[1]]\n"), ParseError);
}

TEST_CASE("shape errors are thrown, not reported") {
  TensorQuiver q = TensorQuiver::parse(slurp("demo.tq"));
  std::string text = slurp("demo_f2.rep");
  CHECK_THROWS_AS(check_representation(q, RepSpec::parse(replace(text, "kappa x x = Z/2 [[1]]\n", ""))), ShapeError);
  CHECK_THROWS_AS(check_representation(q, RepSpec::parse(replace(text, "rep edge g = Z/2 [[1]]\n", ""))), ShapeError);
  CHECK_THROWS_AS(check_representation(q, RepSpec::parse(replace(text, "rep edge f = Z/2 [[1]]", "rep edge f = Z/2 [[1,0]]"))),
                  ShapeError);
  CHECK_THROWS_AS(check_representation(q, RepSpec::parse(replace(text, "kappa0 = Z/2 [[1]]\n", ""))), ShapeError);
  CHECK_THROWS_AS(check_representation(q, RepSpec::parse(text + "rep edge h = Z/2 [[1]]\n")), ShapeError);
  CHECK_THROWS(check_representation(q, RepSpec::parse(text + "rep vertex y = free(Z/2,1)\n")));
  // Z/4 -> Z/2 by 1 is a module map, Z/2 -> Z/4 by 1 is not
  std::string z4 =
      "ring Z/4\nrep vertex 1 = free(Z/4,1)\nrep vertex x = cyc(Z/4,2)\nrep edge f = Z/4 [[1]]\n"
      "rep edge g = Z/4 [[1]]\nkappa 1 1 = Z/4 [[1]]\nkappa 1 x = Z/4 [[1]]\nkappa x 1 = Z/4 [[1]]\n"
      "kappa x x = Z/4 [[1]]\nkappa0 = Z/4 [[1]]\n";
  CHECK_THROWS_AS(check_representation(q, RepSpec::parse(z4)), ShapeError);
}

TEST_CASE("the F_2 demo representation passes and matches the scalar oracle") {
  TensorQuiver q = TensorQuiver::parse(slurp("demo.tq"));
  RepSpec spec = RepSpec::parse(slurp("demo_f2.rep"));
  RepReport r = check_representation(q, spec);
  CHECK(r.ok);
  CHECK(!r.first_failure);
  REQUIRE(r.entries.size() == 7);
  CHECK(find_entry(r, "kappa invertible").instances == 4);
  CHECK(find_entry(r, "square (1): alpha").instances == 4);
  CHECK(find_entry(r, "associativity").instances == 16);
  CHECK(find_entry(r, "unit").instances == 4);
  CHECK(find_entry(r, "relations").instances > 1000);

  Representation rep(q, spec);
  ScalarOracle o{q, {{"f", 1}, {"g", 1}}, 2};
  for (EdgeId e : q.edges_up_to(1)) CHECK(entry(rep.edge(e)) == o.edge(e));
  for (const auto& inst : q.relation_instances(1)) {
    CHECK(o.lincomb(inst.lhs) == o.lincomb(inst.rhs));
    CHECK(entry(rep.lincomb(inst.lhs)) == o.lincomb(inst.lhs));
  }
}

TEST_CASE("the graded F_3 demo passes with signs and matches the scalar oracle") {
  TensorQuiver q = TensorQuiver::parse(slurp("demo_graded.tq"));
  RepSpec spec = RepSpec::parse(slurp("demo_graded_f3.rep"));
  RepReport r = check_representation(q, spec);
  CHECK(r.ok);
  Representation rep(q, spec);
  ScalarOracle o{q, {{"f", 2}, {"g", 1}}, 3};
  EdgeId sxx = q.edge_by_name("s_xx");
  CHECK(entry(rep.edge(sxx)) == 2);
  for (EdgeId e : q.edges_up_to(1)) CHECK(entry(rep.edge(e)) == o.edge(e));
  std::size_t checked = 0;
  for (const auto& inst : q.relation_instances(1)) {
    if (inst.clause == 3 || inst.clause == 0) {
      CHECK(o.lincomb(inst.lhs) == o.lincomb(inst.rhs));
      CHECK(entry(rep.lincomb(inst.rhs)) == o.lincomb(inst.rhs));
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("a flipped sign in an odd-odd square fails at square (2)") {
  TensorQuiver q = TensorQuiver::parse(slurp("demo_graded.tq"));
  std::string text = replace(slurp("demo_graded_f3.rep"), "rep edge <g,x> = Z/3 [[2]]", "rep edge <g,x> = Z/3 [[1]]");
  RepReport r = check_representation(q, RepSpec::parse(text));
  CHECK(!r.ok);
  REQUIRE(r.first_failure);
  CHECK(r.first_failure->check == "square (2): gamma (x) id");
  CHECK(r.first_failure->where == "<g,x>");
  CHECK(linalg::to_string(r.first_failure->lhs) == "Z/3 [[1]]");
  CHECK(linalg::to_string(r.first_failure->rhs) == "Z/3 [[2]]");
  CHECK(!find_entry(r, "square (3): id (x) gamma").failure);

  // without signs the unflipped value is the wrong one
  RepReport plain = check_representation(q.with_signs(false), RepSpec::parse(slurp("demo_graded_f3.rep")));
  REQUIRE(plain.first_failure);
  CHECK(plain.first_failure->check == "square (2): gamma (x) id");
  CHECK(check_representation(q.with_signs(false), RepSpec::parse(text)).ok);
}

TEST_CASE("an explicit structural edge is checked against its square") {
  TensorQuiver q = TensorQuiver::parse(slurp("demo_graded.tq"));
  std::string text = slurp("demo_graded_f3.rep");
  CHECK(check_representation(q, RepSpec::parse(text + "rep edge s_xx = Z/3 [[2]]\n")).ok);
  RepReport r = check_representation(q, RepSpec::parse(text + "rep edge s_xx = Z/3 [[1]]\n"));
  REQUIRE(r.first_failure);
  CHECK(r.first_failure->check == "square (1): alpha");
  RepReport u = check_representation(q, RepSpec::parse(text + "rep edge U_x = Z/3 [[2]]\n"));
  REQUIRE(u.first_failure);
  CHECK(u.first_failure->check == "unit");
}

TEST_CASE("a relation sent to unequal matrices fails at that relation") {
  TensorQuiver q = TensorQuiver::parse(slurp("demo.tq"));
  std::string text = replace(slurp("demo_f2.rep"), "rep edge f = Z/2 [[1]]", "rep edge f = Z/2 [[0]]");
  RepReport r = check_representation(q, RepSpec::parse(text));
  CHECK(!r.ok);
  REQUIRE(r.first_failure);
  CHECK(r.first_failure->check == "relations");
  CHECK(r.first_failure->where == "relation f.f = id_x");
  CHECK(linalg::to_string(r.first_failure->lhs) == "Z/2 [[0]]");
  CHECK(linalg::to_string(r.first_failure->rhs) == "Z/2 [[1]]");
  for (const auto& e : r.entries)
    if (e.name != "relations") CHECK(!e.failure);
  CHECK_THROWS_AS(InducedFunctor(q, RepSpec::parse(text)), IllFormedFunctor);
}

TEST_CASE("a non-invertible kappa stops the check") {
  TensorQuiver q = TensorQuiver::parse(slurp("demo.tq"));
  std::string text = replace(slurp("demo_f2.rep"), "kappa x x = Z/2 [[1]]", "kappa x x = Z/2 [[0]]");
  RepReport r = check_representation(q, RepSpec::parse(text));
  REQUIRE(r.first_failure);
  CHECK(r.first_failure->check == "kappa invertible");
  CHECK(r.first_failure->where == "kappa x x");
  CHECK(r.entries.size() == 1);

  // over Z/4, Z/2 (x) Z/2 -> Z/4 can only be 2
  std::string z4 =
      "ring Z/4\nrep vertex 1 = free(Z/4,1)\nrep vertex x = cyc(Z/4,2)\nrep edge f = Z/4 [[1]]\n"
      "rep edge g = Z/4 [[1]]\nkappa 1 1 = Z/4 [[1]]\nkappa 1 x = Z/4 [[1]]\nkappa x 1 = Z/4 [[1]]\n"
      "kappa x x = Z/4 [[2]]\nkappa0 = Z/4 [[1]]\n";
  RepReport n = check_representation(q, RepSpec::parse(z4));
  REQUIRE(n.first_failure);
  CHECK(n.first_failure->where == "kappa x x");
}

TEST_CASE("invert finds two-sided inverses only") {
  CoeffRing R = CoeffRing::mod(4);
  FPMod z2 = FPMod::cyclic(R, 2), z4 = FPMod::free(R, 1);
  auto three = invert(ModHom(z4, z4, Mat::from_rows(R, {{3}})));
  REQUIRE(three);
  CHECK(three->mat()(0, 0) == 3);
  CHECK(!invert(ModHom(z4, z4, Mat::from_rows(R, {{2}}))));
  CHECK(!invert(ModHom(z4, z2, Mat::from_rows(R, {{1}}))));
  CHECK(!invert(ModHom(z2, z4, Mat::from_rows(R, {{2}}))));
  FPMod two = FPMod::free(R, 2);
  auto sw = invert(Representation::swap(two, two));
  REQUIRE(sw);
  CHECK(!sw->is_identity());
  CHECK(*sw == Representation::swap(two, two));
  CHECK(Representation::swap(z4, two).is_identity());
}

TEST_CASE("the induced functor factors the representation") {
  TensorQuiver q = TensorQuiver::parse(slurp("demo.tq"));
  InducedFunctor m(q, RepSpec::parse(slurp("demo_f2.rep")));
  CHECK(m.factorization_failures().empty());
  const TensorQuiver& tq = m.rep().quiver();
  VertexId one = tq.vertex("1"), x = tq.vertex("x");
  // [[f, 0], [g.U... ]] style block matrix: rows are sources
  LinComb f = tq.parse_lincomb("f"), g = tq.parse_lincomb("g");
  AddMorphism a{{x, one}, {x, x}, {{f, tq.zero(x, x)}, {g, tq.add(g, g)}}};
  ModHom h = m.morphism(a);
  CHECK(linalg::to_string(h.mat()) == "Z/2 [[1,0],[1,0]]");
  AddMorphism b{{x, x}, {x}, {{f}, {tq.parse_lincomb("f.f")}}};
  CHECK(m.morphism(compose(tq, b, a)) == compose(m.morphism(b), h));
}

TEST_CASE("the relation-free one-vertex quiver gets the free extension") {
  TensorQuiver q = TensorQuiver::parse(
      "vertex 1\nunit = 1\ntensor 1 1 = 1\nalpha 1 1 = a\nbeta 1 1 1 = b\nbetainv 1 1 1 = bp\nunitor 1 = U up\n");
  RepSpec spec = RepSpec::parse(
      "ring Z/5\nrep vertex 1 = free(Z/5,1)\nkappa 1 1 = Z/5 [[1]]\nkappa0 = Z/5 [[3]]\n");
  RepReport r = check_representation(q, spec);
  CHECK(r.ok);
  InducedFunctor m(q, spec);
  CHECK(m.factorization_failures().empty());
  ScalarOracle o{m.rep().quiver(), {}, 5, 3};
  auto basis = hom_basis(m.rep().quiver(), 0, 0, 2, false);
  CHECK(!basis.empty());
  for (const Path& p : basis) CHECK(entry(m.rep().path(p)) == o.path(p));
}

TEST_CASE("signed tensor of odd paths is the negative of the plain one") {
  TensorQuiver q = TensorQuiver::parse(slurp("demo_graded.tq"));
  InducedFunctor m(q, RepSpec::parse(slurp("demo_graded_f3.rep")));
  const TensorQuiver& tq = m.rep().quiver();
  Path g = tq.parse_path("g"), f = tq.parse_path("f");
  ModHom plain = m.lincomb(tq.tensor_paths(g, f, false));
  ModHom sgn = m.lincomb(tq.tensor_paths(g, f, true));
  CHECK(sgn == scale(-1, plain));
  CHECK(!(sgn == plain));
  CHECK(sgn == m.tensor(tq.single(g), tq.single(f)));
}

TEST_CASE("universal property smoke test on both demos") {
  TensorQuiver q = TensorQuiver::parse(slurp("demo.tq"));
  UniversalReport u = universal_property_check(q, RepSpec::parse(slurp("demo_f2.rep")), 20, 0);
  CHECK(u.ok());
  CHECK(u.exactness == 20);
  CHECK(u.tensor == 20);
  TensorQuiver gq = TensorQuiver::parse(slurp("demo_graded.tq"));
  UniversalReport v = universal_property_check(gq, RepSpec::parse(slurp("demo_graded_f3.rep")), 20, 7);
  CHECK(v.ok());
  CHECK(v.functoriality == 20);
}

TEST_CASE("adding a relation: classes lift and verdicts agree") {
  TensorQuiver d = TensorQuiver::parse(slurp("demo_graded.tq"));
  QuotientLift lift = quotient_lift_check(d, "f", "id_x", 2);
  CHECK(lift.classes > 100);
  CHECK(lift.failures.empty());

  TensorQuiver d1 = TensorQuiver::parse(slurp("demo_graded_d1.tq"));
  std::string base = slurp("demo_graded_f3.rep");
  for (const std::string& fval : {"0", "1", "2"}) {
    RepSpec spec = RepSpec::parse(replace(base, "rep edge f = Z/3 [[2]]", "rep edge f = Z/3 [[" + fval + "]]"));
    bool on_d = check_representation(d, spec).ok, on_d1 = check_representation(d1, spec).ok;
    INFO("f = " << fval);
    if (on_d1) CHECK(on_d);
    CHECK(on_d == (fval != "0"));
    CHECK(on_d1 == (fval == "1"));
  }
}
