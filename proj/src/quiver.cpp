#include "freyd/quiver.hpp"

#include <algorithm>
#include <sstream>

#include "freyd/errors.hpp"

namespace freyd {

namespace {

struct Token {
  std::string text;
  int column;
};

struct Line {
  int number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      line.tokens.push_back({raw.substr(i, j - i), static_cast<int>(i) + 1});
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(const Line& l, std::size_t tok, const std::string& msg) {
  int col = tok < l.tokens.size() ? l.tokens[tok].column : (l.tokens.empty() ? 1 : l.tokens.back().column);
  throw ParseError(msg, l.number, col);
}

void expect(const Line& l, std::size_t tok, const std::string& word) {
  if (tok >= l.tokens.size() || l.tokens[tok].text != word) fail(l, tok, "expected '" + word + "'");
}

void expect_size(const Line& l, std::size_t n) {
  if (l.tokens.size() != n) fail(l, std::min(n, l.tokens.size()), "wrong number of fields");
}

bool reserved_name(const std::string& s) {
  return s.empty() || s[0] == '<' || s[0] == '[' || s.find('.') != std::string::npos || s == "+" || s == "-" ||
         s == "=" || s == "0" || s.rfind("id_", 0) == 0;
}

std::string join_vertices(const TensorQuiver& q, const std::vector<VertexId>& vs) {
  std::string out;
  for (VertexId v : vs) out += (out.empty() ? "" : ",") + q.vertex_name(v);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Parsing

TensorQuiver TensorQuiver::parse(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError("empty quiver description", 1, 1);

  TensorQuiver q;
  auto vertex_at = [&](const Line& l, std::size_t tok) {
    if (tok >= l.tokens.size()) fail(l, tok, "missing vertex");
    for (std::size_t v = 0; v < q.vertex_names_.size(); ++v)
      if (q.vertex_names_[v] == l.tokens[tok].text) return static_cast<VertexId>(v);
    fail(l, tok, "unknown vertex '" + l.tokens[tok].text + "'");
  };

  // vertices first, so later lines may refer to any of them
  for (const auto& l : lines) {
    if (l.tokens[0].text != "vertex") continue;
    if (l.tokens.size() != 2 && l.tokens.size() != 4) fail(l, 1, "expected 'vertex <name> [grade 0|1]'");
    const std::string& name = l.tokens[1].text;
    if (reserved_name(name)) fail(l, 1, "invalid vertex name");
    if (std::find(q.vertex_names_.begin(), q.vertex_names_.end(), name) != q.vertex_names_.end())
      fail(l, 1, "duplicate vertex '" + name + "'");
    int g = 0;
    if (l.tokens.size() == 4) {
      expect(l, 2, "grade");
      const std::string& gs = l.tokens[3].text;
      if (gs != "0" && gs != "1") fail(l, 3, "grade must be 0 or 1");
      g = gs == "1";
      q.graded_ = true;
    }
    q.vertex_names_.push_back(name);
    q.grades_.push_back(g);
  }
  if (q.vertex_names_.empty()) throw ParseError("no vertices declared", lines[0].number, 1);
  q.signs_ = q.graded_;
  const std::size_t nv = q.vertex_names_.size();
  q.tensor_.assign(nv, std::vector<VertexId>(nv, -1));

  for (const auto& l : lines) {
    const std::string& kw = l.tokens[0].text;
    if (kw == "tensor") {
      expect_size(l, 5);
      expect(l, 3, "=");
      VertexId v = vertex_at(l, 1), w = vertex_at(l, 2), t = vertex_at(l, 4);
      if (q.tensor_[v][w] != -1 && q.tensor_[v][w] != t) fail(l, 4, "conflicting tensor product");
      q.tensor_[v][w] = t;
    } else if (kw == "unit") {
      expect_size(l, 3);
      expect(l, 1, "=");
      q.unit_ = vertex_at(l, 2);
    }
  }
  for (std::size_t v = 0; v < nv; ++v)
    for (std::size_t w = 0; w < nv; ++w)
      if (q.tensor_[v][w] == -1)
        throw MissingData(2, "tensor product " + q.vertex_names_[v] + " (x) " + q.vertex_names_[w]);
  if (q.unit_ == -1) throw MissingData(6, "unit vertex");

  for (std::size_t v = 0; v < nv; ++v) {
    EdgeTerm t;
    t.kind = EdgeKind::Id;
    t.a = static_cast<VertexId>(v);
    t.src = t.dst = static_cast<VertexId>(v);
    t.name = "id_" + q.vertex_names_[v];
    t.clause = 1;
    q.intern(t);
  }

  auto new_edge = [&](const Line& l, std::size_t tok, EdgeTerm t) {
    const std::string& name = l.tokens[tok].text;
    if (reserved_name(name)) fail(l, tok, "invalid edge name '" + name + "'");
    if (q.by_name_->count(name)) fail(l, tok, "duplicate edge '" + name + "'");
    t.name = name;
    return q.intern(t);
  };

  for (const auto& l : lines) {
    const std::string& kw = l.tokens[0].text;
    if (kw == "edge") {
      expect_size(l, 6);
      expect(l, 2, ":");
      expect(l, 4, "->");
      EdgeTerm t;
      t.kind = EdgeKind::Base;
      t.src = vertex_at(l, 3);
      t.dst = vertex_at(l, 5);
      q.declared_.push_back(new_edge(l, 1, t));
    } else if (kw == "alpha") {
      expect_size(l, 5);
      expect(l, 3, "=");
      VertexId v = vertex_at(l, 1), w = vertex_at(l, 2);
      if (q.alpha_.count({v, w})) fail(l, 1, "alpha declared twice");
      EdgeTerm t{EdgeKind::Alpha, v, w, -1, -1, q.tensor(v, w), q.tensor(w, v), "", 0, 4};
      q.alpha_[{v, w}] = new_edge(l, 4, t);
    } else if (kw == "beta" || kw == "betainv") {
      expect_size(l, 6);
      expect(l, 4, "=");
      VertexId u = vertex_at(l, 1), v = vertex_at(l, 2), w = vertex_at(l, 3);
      VertexId left = q.tensor(u, q.tensor(v, w)), right = q.tensor(q.tensor(u, v), w);
      bool inv = kw == "betainv";
      auto& table = inv ? q.beta_inv_ : q.beta_;
      if (table.count({u, v, w})) fail(l, 1, kw + " declared twice");
      EdgeTerm t{inv ? EdgeKind::BetaInv : EdgeKind::Beta, u, v, w, -1, inv ? right : left, inv ? left : right,
                 "", 0, 5};
      table[{u, v, w}] = new_edge(l, 5, t);
    } else if (kw == "unitor") {
      expect_size(l, 5);
      expect(l, 2, "=");
      VertexId v = vertex_at(l, 1);
      if (q.unit_edge_.count(v)) fail(l, 1, "unitor declared twice");
      VertexId one_v = q.tensor(q.unit_, v);
      q.unit_edge_[v] = new_edge(l, 3, EdgeTerm{EdgeKind::Unit, v, -1, -1, -1, v, one_v, "", 0, 7});
      q.unit_inv_[v] = new_edge(l, 4, EdgeTerm{EdgeKind::UnitInv, v, -1, -1, -1, one_v, v, "", 0, 7});
    } else if (kw != "vertex" && kw != "tensor" && kw != "unit" && kw != "tid" && kw != "idt" &&
               kw != "relation" && kw != "drop") {
      fail(l, 0, "unknown keyword '" + kw + "'");
    }
  }

  for (std::size_t v = 0; v < nv; ++v)
    for (std::size_t w = 0; w < nv; ++w)
      if (!q.alpha_.count({v, w}))
        throw MissingData(4, "alpha for " + q.vertex_names_[v] + ", " + q.vertex_names_[w]);
  for (std::size_t u = 0; u < nv; ++u)
    for (std::size_t v = 0; v < nv; ++v)
      for (std::size_t w = 0; w < nv; ++w) {
        std::string triple = q.vertex_names_[u] + ", " + q.vertex_names_[v] + ", " + q.vertex_names_[w];
        VertexId a = u, b = v, c = w;
        if (!q.beta_.count({a, b, c})) throw MissingData(5, "beta for " + triple);
        if (!q.beta_inv_.count({a, b, c})) throw MissingData(5, "beta' for " + triple);
      }
  for (std::size_t v = 0; v < nv; ++v)
    if (!q.unit_edge_.count(static_cast<VertexId>(v)))
      throw MissingData(7, "u and u' for " + q.vertex_names_[v]);

  for (const auto& l : lines) {
    const std::string& kw = l.tokens[0].text;
    if (kw != "tid" && kw != "idt") continue;
    expect_size(l, 5);
    expect(l, 3, "=");
    const std::string& name = l.tokens[4].text;
    if (reserved_name(name) || q.by_name_->count(name)) fail(l, 4, "invalid or duplicate edge name '" + name + "'");
    EdgeId e;
    VertexId w;
    try {
      e = q.edge_by_name(l.tokens[kw == "tid" ? 1 : 2].text);
    } catch (const Error&) {
      fail(l, kw == "tid" ? 1 : 2, "unknown edge");
    }
    w = vertex_at(l, kw == "tid" ? 2 : 1);
    if (q.edge(e).kind == EdgeKind::Id) fail(l, 1, "identity edges have no separate tensor edges");
    if (kw == "tid") {
      if (q.left_names_.count({e, w})) fail(l, 1, "tid declared twice");
      q.left_names_[{e, w}] = name;
      q.left(e, w);
    } else {
      if (q.right_names_.count({w, e})) fail(l, 1, "idt declared twice");
      q.right_names_[{w, e}] = name;
      q.right(w, e);
    }
  }

  for (const auto& l : lines) {
    if (l.tokens[0].text != "drop") continue;
    if (l.tokens.size() < 3) fail(l, 1, "expected 'drop <clause> <vertices>'");
    int clause = 0;
    try {
      clause = std::stoi(l.tokens[1].text);
    } catch (const std::exception&) {
      fail(l, 1, "clause must be a number");
    }
    std::size_t arity = clause == 4 ? 2 : clause == 6 || clause == 9 ? 3 : clause == 8 ? 4 : clause == 10 ? 1 : 0;
    if (arity == 0) fail(l, 1, "only clauses 4, 6, 8, 9, 10 can be dropped");
    expect_size(l, 2 + arity);
    std::vector<VertexId> vs;
    for (std::size_t i = 0; i < arity; ++i) vs.push_back(vertex_at(l, 2 + i));
    q.dropped_.insert({clause, vs});
  }

  for (const auto& l : lines) {
    if (l.tokens[0].text != "relation") continue;
    std::size_t eq = 0;
    for (std::size_t i = 1; i < l.tokens.size(); ++i)
      if (l.tokens[i].text == "=") eq = i;
    if (eq == 0 || eq == 1 || eq + 1 == l.tokens.size()) fail(l, 1, "expected 'relation <lincomb> = <lincomb>'");
    auto text_of = [&](std::size_t a, std::size_t b) {
      std::string s;
      for (std::size_t i = a; i < b; ++i) s += l.tokens[i].text + " ";
      return s;
    };
    std::string lhs_text = text_of(1, eq), rhs_text = text_of(eq + 1, l.tokens.size());
    LinComb lhs, rhs;
    try {
      lhs = q.parse_lincomb(lhs_text);
      rhs = q.parse_lincomb(rhs_text);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(l, 1, e.what());
    }
    try {
      q.add_declared_relation(lhs, rhs, lhs_text + "= " + rhs_text);
    } catch (const ShapeError& e) {
      fail(l, 1, e.what());
    }
  }
  return q;
}

TensorQuiver TensorQuiver::with_signs(bool on) const {
  TensorQuiver q = *this;
  if (on == signs_) return q;
  q.signs_ = on;
  // rules depend on the signs, so orient the declared relations again
  q.rules_ = std::make_shared<RuleSet>();
  auto declared = std::move(q.declared_relations_);
  q.declared_relations_.clear();
  for (const auto& r : declared) q.add_declared_relation(r.lhs, r.rhs, r.label);
  return q;
}

TensorQuiver TensorQuiver::with_relation(const std::string& lhs, const std::string& rhs) const {
  TensorQuiver q = *this;
  q.rules_ = std::make_shared<RuleSet>(*rules_);
  q.add_declared_relation(q.parse_lincomb(lhs), q.parse_lincomb(rhs), lhs + " = " + rhs);
  return q;
}

// ---------------------------------------------------------------------------
// Edges

VertexId TensorQuiver::vertex(const std::string& name) const {
  for (std::size_t v = 0; v < vertex_names_.size(); ++v)
    if (vertex_names_[v] == name) return static_cast<VertexId>(v);
  throw Error("unknown vertex '" + name + "'");
}

EdgeId TensorQuiver::edge_by_name(const std::string& name) const {
  auto it = by_name_->find(name);
  if (it == by_name_->end()) throw Error("unknown edge '" + name + "'");
  return it->second;
}

EdgeId TensorQuiver::intern(EdgeTerm t) const {
  TermKey key{static_cast<int>(t.kind), t.a, t.b, t.c, t.inner};
  if (t.kind != EdgeKind::Base) {
    auto it = by_term_->find(key);
    if (it != by_term_->end()) return it->second;
  }
  if (by_name_->count(t.name)) throw InternalError("edge name clash: " + t.name);
  EdgeId id = static_cast<EdgeId>(edges_->size());
  edges_->push_back(t);
  (*by_name_)[t.name] = id;
  if (t.kind != EdgeKind::Base) (*by_term_)[key] = id;
  return id;
}

EdgeId TensorQuiver::id_edge(VertexId v) const {
  return by_term_->at(TermKey{static_cast<int>(EdgeKind::Id), v, -1, -1, -1});
}

int TensorQuiver::edge_grade(EdgeId e) const {
  const EdgeTerm& t = edge(e);
  return (grades_.at(t.dst) + grades_.at(t.src)) % 2;
}

EdgeId TensorQuiver::left(EdgeId e, VertexId w) const {
  const EdgeTerm& t = edge(e);
  if (t.kind == EdgeKind::Id) return id_edge(tensor(t.src, w));
  auto key = TermKey{static_cast<int>(EdgeKind::Left), w, -1, -1, e};
  if (auto it = by_term_->find(key); it != by_term_->end()) return it->second;
  EdgeTerm d{EdgeKind::Left, w, -1, -1, e, tensor(t.src, w), tensor(t.dst, w), "", t.depth + 1, 3};
  auto named = left_names_.find({e, w});
  d.name = named != left_names_.end() ? named->second : "<" + t.name + "," + vertex_names_.at(w) + ">";
  return intern(d);
}

EdgeId TensorQuiver::right(VertexId w, EdgeId e) const {
  const EdgeTerm& t = edge(e);
  if (t.kind == EdgeKind::Id) return id_edge(tensor(w, t.src));
  auto key = TermKey{static_cast<int>(EdgeKind::Right), w, -1, -1, e};
  if (auto it = by_term_->find(key); it != by_term_->end()) return it->second;
  EdgeTerm d{EdgeKind::Right, w, -1, -1, e, tensor(w, t.src), tensor(w, t.dst), "", t.depth + 1, 3};
  auto named = right_names_.find({w, e});
  d.name = named != right_names_.end() ? named->second : "[" + vertex_names_.at(w) + "," + t.name + "]";
  return intern(d);
}

std::vector<EdgeId> TensorQuiver::edges_up_to(int max_depth) const {
  std::vector<EdgeId> level = declared_;
  for (const auto& [k, e] : alpha_) level.push_back(e);
  for (const auto& [k, e] : beta_) level.push_back(e);
  for (const auto& [k, e] : beta_inv_) level.push_back(e);
  for (const auto& [k, e] : unit_edge_) level.push_back(e);
  for (const auto& [k, e] : unit_inv_) level.push_back(e);
  std::vector<EdgeId> all = level;
  for (int d = 1; d <= max_depth; ++d) {
    std::vector<EdgeId> next;
    for (EdgeId e : level)
      for (std::size_t w = 0; w < vertex_count(); ++w) {
        next.push_back(left(e, static_cast<VertexId>(w)));
        next.push_back(right(static_cast<VertexId>(w), e));
      }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

std::vector<std::string> TensorQuiver::auto_items() const {
  std::vector<std::string> out;
  for (std::size_t v = 0; v < vertex_count(); ++v)
    out.push_back("clause 1: " + edge(id_edge(static_cast<VertexId>(v))).name);
  for (const auto& t : *edges_)
    if (t.kind == EdgeKind::Left || t.kind == EdgeKind::Right)
      if (t.depth == 1) out.push_back("clause 3: " + t.name);
  const std::size_t n = vertex_count();
  out.push_back("relation clauses 1-3, 5, 7, 11: instantiated for every edge on demand");
  out.push_back("relation clause 4: " + std::to_string(n * n - std::count_if(dropped_.begin(), dropped_.end(),
                                                                               [](const auto& d) { return d.first == 4; })) +
                " pairs");
  out.push_back("relation clause 6: " + std::to_string(n * n * n) + " triples");
  out.push_back("relation clause 8: " + std::to_string(n * n * n * n) + " quadruples");
  out.push_back("relation clause 9: " + std::to_string(n * n * n) + " triples");
  out.push_back("relation clause 10: " + std::to_string(n) + " vertices");
  for (const auto& [clause, vs] : dropped_)
    out.push_back("dropped: clause " + std::to_string(clause) + " at (" + join_vertices(*this, vs) + ")");
  return out;
}

// ---------------------------------------------------------------------------
// Paths

Path TensorQuiver::path(const std::vector<EdgeId>& written) const {
  if (written.empty()) throw ShapeError("a path needs an edge or a vertex");
  for (std::size_t i = 0; i + 1 < written.size(); ++i)
    if (edge(written[i + 1]).dst != edge(written[i]).src)
      throw ShapeError("edges " + edge(written[i]).name + " and " + edge(written[i + 1]).name + " do not compose");
  Path p{edge(written.back()).src, edge(written.front()).dst, {}};
  for (EdgeId e : written)
    if (edge(e).kind != EdgeKind::Id) p.edges.push_back(e);
  return p;
}

Path TensorQuiver::parse_path(const std::string& text) const {
  std::vector<EdgeId> written;
  std::size_t start = 0;
  while (true) {
    std::size_t dot = text.find('.', start);
    std::string name = text.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    if (name.empty()) throw ShapeError("empty edge name in path '" + text + "'");
    written.push_back(edge_by_name(name));
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  return path(written);
}

LinComb TensorQuiver::parse_lincomb(const std::string& text) const {
  std::istringstream in(text);
  std::vector<std::string> toks;
  for (std::string t; in >> t;) toks.push_back(t);
  if (toks.empty()) throw ShapeError("empty linear combination");
  if (toks.size() == 1 && toks[0] == "0") return LinComb{};
  std::vector<std::pair<Path, Scalar>> terms;
  std::size_t i = 0;
  bool first = true;
  while (i < toks.size()) {
    Scalar sign = 1;
    if (toks[i] == "+" || toks[i] == "-") {
      sign = toks[i] == "-" ? -1 : 1;
      ++i;
    } else if (!first) {
      throw ShapeError("expected '+' or '-' before '" + toks[i] + "'");
    }
    if (i >= toks.size()) throw ShapeError("dangling sign");
    Scalar k = 1;
    bool numeric = !toks[i].empty() && std::all_of(toks[i].begin(), toks[i].end(), [](char c) {
      return std::isdigit(static_cast<unsigned char>(c)) || c == '-';
    });
    if (numeric) {
      k = std::stoll(toks[i]);
      ++i;
      if (i >= toks.size()) throw ShapeError("coefficient without path");
    }
    terms.push_back({parse_path(toks[i]), sign * k});
    ++i;
    first = false;
  }
  VertexId s = terms[0].first.src, d = terms[0].first.dst;
  for (const auto& [p, k] : terms)
    if (p.src != s || p.dst != d) throw ShapeError("terms of '" + text + "' are not parallel");
  return normalize_terms(s, d, std::move(terms));
}

// Length, then total depth of derived edges, then shortlex on names. The
// depth step keeps the order well founded although derived names nest.
int TensorQuiver::cmp_paths(const std::vector<EdgeId>& a, const std::vector<EdgeId>& b) const {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  int da = 0, db = 0;
  for (EdgeId e : a) da += edge(e).depth;
  for (EdgeId e : b) db += edge(e).depth;
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    int c = edge(a[i]).name.compare(edge(b[i]).name);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

bool TensorQuiver::path_less(const Path& a, const Path& b) const {
  int c = cmp_paths(a.edges, b.edges);
  if (c != 0) return c < 0;
  return std::pair(a.src, a.dst) < std::pair(b.src, b.dst);
}

LinComb TensorQuiver::normalize_terms(VertexId src, VertexId dst, std::vector<std::pair<Path, Scalar>> terms) const {
  std::sort(terms.begin(), terms.end(), [&](const auto& x, const auto& y) { return path_less(x.first, y.first); });
  LinComb out{src, dst, {}};
  for (auto& [p, k] : terms) {
    if (!out.terms.empty() && out.terms.back().first == p)
      out.terms.back().second += k;
    else
      out.terms.push_back({std::move(p), k});
    if (out.terms.back().second == 0) out.terms.pop_back();
  }
  return out;
}

LinComb TensorQuiver::single(const Path& p, Scalar k) const { return normalize_terms(p.src, p.dst, {{p, k}}); }

Path TensorQuiver::compose(const Path& later, const Path& first) const {
  if (first.dst != later.src) throw ShapeError("paths do not compose");
  Path p{first.src, later.dst, later.edges};
  p.edges.insert(p.edges.end(), first.edges.begin(), first.edges.end());
  return p;
}

LinComb TensorQuiver::compose(const LinComb& later, const LinComb& first) const {
  if (first.dst != later.src && !first.is_zero() && !later.is_zero()) throw ShapeError("combinations do not compose");
  std::vector<std::pair<Path, Scalar>> terms;
  for (const auto& [p, a] : later.terms)
    for (const auto& [r, b] : first.terms) terms.push_back({compose(p, r), a * b});
  return normalize_terms(first.src, later.dst, std::move(terms));
}

LinComb TensorQuiver::add(const LinComb& a, const LinComb& b) const {
  if (a.is_zero() && a.src == -1) return b;
  if (b.is_zero() && b.src == -1) return a;
  if (a.src != b.src || a.dst != b.dst) throw ShapeError("adding combinations that are not parallel");
  auto terms = a.terms;
  terms.insert(terms.end(), b.terms.begin(), b.terms.end());
  return normalize_terms(a.src, a.dst, std::move(terms));
}

LinComb TensorQuiver::scale(Scalar k, const LinComb& a) const {
  auto terms = a.terms;
  for (auto& t : terms) t.second *= k;
  return normalize_terms(a.src, a.dst, std::move(terms));
}

int TensorQuiver::path_grade(const Path& p) const { return (grades_.at(p.src) + grades_.at(p.dst)) % 2; }

std::string TensorQuiver::to_string(const Path& p) const {
  if (p.edges.empty()) return "id_" + vertex_names_.at(p.src);
  std::string s;
  for (EdgeId e : p.edges) s += (s.empty() ? "" : ".") + edge(e).name;
  return s;
}

std::string TensorQuiver::to_string(const LinComb& c) const {
  if (c.is_zero()) return "0";
  std::string s;
  for (const auto& [p, k] : c.terms) {
    Scalar a = k < 0 ? -k : k;
    if (s.empty())
      s += k < 0 ? "- " : "";
    else
      s += k < 0 ? " - " : " + ";
    if (a != 1) s += std::to_string(a) + " ";
    s += to_string(p);
  }
  return s;
}

}  // namespace freyd
