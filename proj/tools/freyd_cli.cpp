#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "freyd/errors.hpp"
#include "freyd/example112.hpp"
#include "freyd/literal.hpp"
#include "freyd/quiver.hpp"
#include "freyd/report.hpp"
#include "freyd/representation.hpp"
#include "freyd/serre.hpp"
#include "freyd/structure.hpp"

using namespace freyd;

namespace {

struct Usage : Error {
  using Error::Error;
};

struct Globals {
  std::string json;
  std::size_t cap = 2;
  std::uint64_t seed = 0;
  std::size_t samples = 20;
  std::string fault;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Usage("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Check pass(std::string summary, Json witness = Json::object()) {
  return Check{"", Status::Pass, std::move(summary), std::move(witness)};
}

Report cmd_validate(const std::string& path) {
  TensorQuiver q = TensorQuiver::parse(slurp(path));
  TensorValidation v = validate_tensor(q);
  Report r("validate " + path);
  std::map<int, std::vector<const TensorViolation*>> by_clause;
  for (const auto& x : v.violations) by_clause[x.clause].push_back(&x);
  std::set<int> clauses{0};
  for (const auto& [c, n] : v.instances) clauses.insert(c);
  for (const auto& [c, xs] : by_clause) clauses.insert(c);
  for (int c : clauses) {
    Check ch;
    ch.name = c ? "clause " + std::to_string(c) : "grading";
    auto it = v.instances.find(c);
    std::size_t n = it == v.instances.end() ? 0 : it->second;
    auto bad = by_clause.find(c);
    if (bad == by_clause.end()) {
      ch.status = Status::Pass;
      ch.summary = c ? std::to_string(n) + " instances hold" : "grades are additive and |1| = 0";
    } else {
      ch.status = Status::Fail;
      ch.summary = std::to_string(bad->second.size()) + " violations";
      Json w = Json::array();
      for (const auto* x : bad->second) w.push_back(Json{{"where", x->where}, {"message", x->message}});
      ch.witness = Json{{"violations", w}};
    }
    r.add(ch);
  }
  return r;
}

Report cmd_freecat(const std::string& path, const std::string& v, const std::string& w, bool signed_tensor,
                   const Globals& g) {
  TensorQuiver q = TensorQuiver::parse(slurp(path));
  VertexId a = q.vertex(v), b = q.vertex(w);
  Report r("freecat " + path + " " + v + " " + w + (signed_tensor ? " --signed" : ""));
  r.add(guarded("hom basis", [&] {
    auto basis = hom_basis(q, a, b, g.cap, signed_tensor);
    Json paths = Json::array();
    for (const Path& p : basis) paths.push_back(q.to_string(p));
    return pass(std::to_string(basis.size()) + " normal forms of length <= " + std::to_string(g.cap),
                Json{{"rank", basis.size()}, {"paths", paths}});
  }));
  return r;
}

Report cmd_repcheck(const std::string& qpath, const std::string& rpath, const Globals& g) {
  TensorQuiver q = TensorQuiver::parse(slurp(qpath));
  RepSpec spec = RepSpec::parse(slurp(rpath));
  Report r("repcheck " + qpath + " " + rpath);
  RepReport rep = check_representation(q, spec);
  for (const auto& e : rep.entries) {
    Check c{e.name, Status::Pass, std::to_string(e.instances) + " instances commute", Json::object()};
    if (e.failure) {
      c.status = Status::Fail;
      c.summary = "fails at " + e.failure->where;
      c.witness = Json{{"where", e.failure->where}, {"lhs", to_json(e.failure->lhs)}, {"rhs", to_json(e.failure->rhs)}};
    }
    r.add(c);
  }
  if (!rep.ok) return r;
  r.add(guarded("factorization", [&] {
    InducedFunctor m(q, spec);
    auto bad = m.factorization_failures();
    if (bad.empty()) return pass("M agrees with T on every vertex and edge of depth <= 1");
    return Check{"", Status::Fail, "M differs from T", Json{{"at", bad}}};
  }));
  if (g.samples > 0)
    r.add(guarded("universal property", [&] {
      UniversalReport u = universal_property_check(q, spec, g.samples, g.seed, g.cap);
      Json w{{"exactness", u.exactness}, {"functoriality", u.functoriality}, {"tensor", u.tensor}};
      if (u.ok()) return pass("exact, functorial and tensor compatible on every sample", w);
      Json f = Json::array();
      for (const auto& x : u.failures) f.push_back(Json{{"check", x.check}, {"where", x.where}, {"detail", x.detail}});
      w["failures"] = f;
      return Check{"", Status::Fail, std::to_string(u.failures.size()) + " sample failures", w};
    }));
  return r;
}

void need(const std::vector<std::string>& args, std::size_t n, const std::string& usage) {
  if (args.size() != n) throw Usage("usage: " + usage);
}

Report cmd_ab(const std::string& ring_text, const std::vector<std::string>& args, const Globals& g) {
  CoeffRing R = parse_ring(ring_text);
  if (args.empty()) throw Usage("ab needs a subcommand");
  std::string cmdline = "ab " + ring_text;
  for (const auto& a : args) cmdline += " " + a;
  Report r(cmdline);
  EngineOptions eo{g.fault};
  const std::string op = args[0];
  auto objects = [&](const std::string& name, const std::vector<FPFunctor>& fs) {
    Json w = Json::array();
    for (const auto& f : fs) w.push_back(to_json(f));
    Check c = pass(std::to_string(fs.size()) + " " + name, Json{{"objects", w}});
    c.name = op;
    r.add(c);
  };
  if (op == "indec") {
    need(args, 1, "ab <ring> indec");
    objects("indecomposables", list_indec(R));
  } else if (op == "simples") {
    need(args, 1, "ab <ring> simples");
    objects("simples", simples(R));
  } else if (op == "tensor") {
    need(args, 3, "ab <ring> tensor <f> <g>");
    FPFunctor f = parse_functor(args[1]), h = parse_functor(args[2]);
    objects("tensor product", {tensor_general(f, h, eo)});
  } else if (op == "radical") {
    need(args, 2, "ab <ring> radical <module>");
    objects("radical", {radical_rep(parse_module(args[1])).object});
  } else if (op == "eval") {
    need(args, 3, "ab <ring> eval <f> <module>");
    FPMod v = evaluate(parse_functor(args[1]), parse_module(args[2]));
    r.add(Check{op, Status::Pass, "value " + v.to_string(), Json{{"value", to_json(v)}, {"size", v.cardinality()}}});
  } else if (op == "ker" || op == "coker") {
    need(args, 2, "ab <ring> " + op + " <morphism>");
    FunHom h = parse_funhom(args[1]);
    objects(op == "ker" ? "kernel" : "cokernel", {op == "ker" ? kernel_f(h).object : cokernel_f(h).object});
  } else {
    throw Usage("unknown ab subcommand '" + op + "'");
  }
  return r;
}

Report cmd_serre(const std::string& ring_text, const std::string& mspec_text, const std::vector<std::string>& args,
                 const Globals& g) {
  CoeffRing R = parse_ring(ring_text);
  KernelSpec k(MSpec{R, parse_module(mspec_text), mspec_text});
  if (args.empty()) throw Usage("serre needs a subcommand");
  std::string cmdline = "serre " + ring_text + " " + mspec_text;
  for (const auto& a : args) cmdline += " " + a;
  Report r(cmdline);
  const std::string& op = args[0];
  if (op == "member") {
    need(args, 2, "serre <ring> <mspec> member <f>");
    FPFunctor f = parse_functor(args[1]);
    bool in = k.contains(f);
    r.add(Check{"member", Status::Pass, in ? "in the kernel" : "not in the kernel",
                Json{{"member", in}, {"image", to_json(induced_functor(k.mspec(), f))}}});
  } else if (op == "ideal-check") {
    need(args, 1, "serre <ring> <mspec> ideal-check");
    IdealReport rep = tensor_ideal_check(k, list_indec(R), g.samples, g.seed);
    Json w{{"pairs", rep.pairs}};
    Json fails = Json::array();
    for (const auto& f : rep.failures)
      fails.push_back(Json{{"f", to_json(f.f)}, {"g", to_json(f.g)}, {"image", to_json(f.image)}});
    w["failures"] = fails;
    r.add(Check{"tensor ideal", rep.ideal ? Status::Pass : Status::Fail,
                rep.ideal ? "closed under tensoring on " + std::to_string(rep.pairs) + " pairs"
                          : std::to_string(rep.failures.size()) + " pairs leave the kernel",
                w});
  } else if (op == "qhom") {
    need(args, 3, "serre <ring> <mspec> qhom <f> <g>");
    QuotientHom qh = quotient_hom(parse_functor(args[1]), parse_functor(args[2]), k);
    Check c = pass("Hom in the quotient has " + std::to_string(qh.elements.size()) + " elements",
               Json{{"group", to_json(qh.group)},
                    {"source_lattice", qh.source_lattice},
                    {"target_lattice", qh.target_lattice},
                    {"faithful", qh.faithful},
                    {"image_size", qh.image_size}});
    c.name = "qhom";
    r.add(c);
  } else {
    throw Usage("unknown serre subcommand '" + op + "'");
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Freyd envelopes, tensor quivers and their representations"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--json", g.json, "also write the report to this file");
  app.add_option("--cap", g.cap, "path length cap for hom bases and sampling");
  app.add_option("--seed", g.seed, "seed of the mt19937_64 sampler");
  app.add_option("--samples", g.samples, "number of sampled cases");

  std::string path, path2, v, w, ring, mspec;
  std::vector<std::string> rest;
  bool signed_tensor = false;
  auto* validate = app.add_subcommand("validate", "check a tensor quiver file");
  validate->add_option("quiver", path)->required();
  auto* freecat = app.add_subcommand("freecat", "hom basis of the free additive tensor category");
  freecat->add_option("quiver", path)->required();
  freecat->add_option("v", v)->required();
  freecat->add_option("w", w)->required();
  freecat->add_flag("--signed", signed_tensor, "use the signed tensor product");
  auto* repcheck = app.add_subcommand("repcheck", "check a tensor representation");
  repcheck->add_option("quiver", path)->required();
  repcheck->add_option("rep", path2)->required();
  auto* ab = app.add_subcommand("ab", "computations in Ab(mod-Lambda)");
  ab->add_option("ring", ring)->required();
  ab->add_option("args", rest)->required();
  auto* serre = app.add_subcommand("serre", "the kernel of an induced functor");
  serre->add_option("ring", ring)->required();
  serre->add_option("mspec", mspec)->required();
  serre->add_option("args", rest)->required();
  auto* example = app.add_subcommand("example112", "the Z/4 example, one check per claim");
  for (auto* sub : {ab, example}) sub->add_option("--fault", g.fault, "test hook: tensor-flat");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Report report("");
    if (*validate) {
      report = cmd_validate(path);
    } else if (*freecat) {
      report = cmd_freecat(path, v, w, signed_tensor, g);
    } else if (*repcheck) {
      report = cmd_repcheck(path, path2, g);
    } else if (*ab) {
      report = cmd_ab(ring, rest, g);
    } else if (*serre) {
      report = cmd_serre(ring, mspec, rest, g);
    } else {
      if (!g.fault.empty() && g.fault != "tensor-flat") throw Usage("unknown fault '" + g.fault + "'");
      Example112Options opts;
      opts.engine.fault = g.fault;
      opts.samples = g.samples;
      opts.seed = g.seed;
      report = run_example112(opts);
    }
    std::string text = report.dump();
    std::cout << text;
    if (!g.json.empty()) {
      std::ofstream out(g.json);
      if (!out) throw Usage("cannot write '" + g.json + "'");
      out << text;
    }
    return report.exit_code();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
