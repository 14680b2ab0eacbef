#pragma once

// Tensor quivers (optionally Z/2-graded), their path categories modulo the
// mandatory relations, and normal forms by oriented rewriting.
//
// Edges are terms: declared edges, the structural edges id, alpha, beta,
// beta', u, u', and the derived edges e (x) id_w and id_w (x) e, which are
// created on demand. A path is stored in written order: [e3, e2, e1] is
// e3 . e2 . e1, so e1 is applied first.

#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "freyd/linalg.hpp"

namespace freyd {

using linalg::Scalar;

using VertexId = int;
using EdgeId = int;

enum class EdgeKind { Base, Id, Alpha, Beta, BetaInv, Unit, UnitInv, Left, Right };

struct EdgeTerm {
  EdgeKind kind = EdgeKind::Base;
  // Alpha: (a, b) = (v, w). Beta, BetaInv: (a, b, c) = (u, v, w).
  // Unit, UnitInv, Id: a = v. Left: inner (x) id_a. Right: id_a (x) inner.
  VertexId a = -1, b = -1, c = -1;
  EdgeId inner = -1;
  VertexId src = -1, dst = -1;
  std::string name;
  int depth = 0;
  // Clause of the quiver data that produced it, 0 for declared edges.
  int clause = 0;
};

struct Path {
  VertexId src = -1;
  VertexId dst = -1;
  std::vector<EdgeId> edges;  // written order

  bool empty() const { return edges.empty(); }
  friend bool operator==(const Path&, const Path&) = default;
};

// Integer combination of parallel paths, sorted by the quiver path order,
// without zero coefficients.
struct LinComb {
  VertexId src = -1;
  VertexId dst = -1;
  std::vector<std::pair<Path, Scalar>> terms;

  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const LinComb&, const LinComb&) = default;
};

struct RelationInstance {
  int clause = 0;  // relation clause 1..11, or 0 for a declared relation
  std::string label;
  LinComb lhs;
  LinComb rhs;
};

struct NormalFormCaps {
  std::size_t max_states = 200000;
  // When two rewrites of one input disagree, keep their difference as a new
  // rule (if its leading coefficient is a unit) instead of throwing.
  bool complete = true;
  std::size_t max_rules = 20000;
};

class TensorQuiver {
 public:
  // Parses the quiver text format; throws ParseError or MissingData.
  static TensorQuiver parse(const std::string& text);

  bool graded() const { return graded_; }
  // Whether relation (3) carries the sign (-1)^{|e||e'|}. Parsed graded
  // quivers start signed.
  bool signs() const { return signs_; }
  TensorQuiver with_signs(bool on) const;
  std::size_t vertex_count() const { return vertex_names_.size(); }
  const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }
  VertexId vertex(const std::string& name) const;
  int grade(VertexId v) const { return grades_.at(v); }
  VertexId tensor(VertexId v, VertexId w) const { return tensor_.at(v).at(w); }
  VertexId unit() const { return unit_; }

  const EdgeTerm& edge(EdgeId e) const { return (*edges_).at(e); }
  EdgeId edge_by_name(const std::string& name) const;
  std::size_t edge_count() const { return edges_->size(); }
  const std::vector<EdgeId>& declared_edges() const { return declared_; }
  int edge_grade(EdgeId e) const;

  // Structural and derived edges; created on first use.
  EdgeId id_edge(VertexId v) const;
  EdgeId alpha(VertexId v, VertexId w) const { return alpha_.at({v, w}); }
  EdgeId beta(VertexId u, VertexId v, VertexId w) const { return beta_.at({u, v, w}); }
  EdgeId beta_inv(VertexId u, VertexId v, VertexId w) const { return beta_inv_.at({u, v, w}); }
  EdgeId unit_edge(VertexId v) const { return unit_edge_.at(v); }      // u_v: v -> 1 (x) v
  EdgeId unit_inv_edge(VertexId v) const { return unit_inv_.at(v); }   // u'_v: 1 (x) v -> v
  EdgeId left(EdgeId e, VertexId w) const;   // e (x) id_w
  EdgeId right(VertexId w, EdgeId e) const;  // id_w (x) e

  // Edges of depth <= max_depth built from declared and structural edges,
  // identities excluded.
  std::vector<EdgeId> edges_up_to(int max_depth) const;

  // Paths and combinations.
  Path empty_path(VertexId v) const { return Path{v, v, {}}; }
  Path path(const std::vector<EdgeId>& written) const;
  Path parse_path(const std::string& text) const;
  LinComb parse_lincomb(const std::string& text) const;
  LinComb single(const Path& p, Scalar k = 1) const;
  Path compose(const Path& later, const Path& first) const;
  LinComb compose(const LinComb& later, const LinComb& first) const;
  LinComb add(const LinComb& a, const LinComb& b) const;
  LinComb scale(Scalar k, const LinComb& a) const;
  LinComb zero(VertexId src, VertexId dst) const { return LinComb{src, dst, {}}; }
  bool path_less(const Path& a, const Path& b) const;
  std::string to_string(const Path& p) const;
  std::string to_string(const LinComb& c) const;
  int path_grade(const Path& p) const;

  // Rewrites to the fixpoint, exploring every rewrite. Disagreeing rewrites
  // are completed into new rules (see NormalFormCaps); throws NonConfluent
  // when that is off or impossible and CapExceeded past the caps.
  LinComb normal_form(const LinComb& c, const NormalFormCaps& caps = {}) const;
  LinComb normal_form(const Path& p, const NormalFormCaps& caps = {}) const;
  bool equal(const LinComb& a, const LinComb& b, const NormalFormCaps& caps = {}) const;

  // Gamma (x) Delta = (g1 (x) id)...(gn (x) id)(id (x) d1)...(id (x) dm);
  // signed multiplies by (-1)^{|Gamma| |target of Delta|}.
  LinComb tensor_paths(const Path& g, const Path& d, bool signed_tensor) const;
  LinComb tensor_lincombs(const LinComb& a, const LinComb& b, bool signed_tensor) const;
  // alpha^sgn_{v,w} = (-1)^{|v||w|} alpha_{v,w} when signed.
  LinComb alpha_signed(VertexId v, VertexId w, bool signed_tensor) const;

  // Instances of the mandatory relations whose edges have depth <= max_depth,
  // dropped ones included,
  // plus the declared relations.
  std::vector<RelationInstance> relation_instances(int max_depth) const;
  const std::vector<RelationInstance>& declared_relations() const { return declared_relations_; }
  // Items created by the parser rather than declared, with their clause.
  std::vector<std::string> auto_items() const;
  bool dropped(int clause, const std::vector<VertexId>& vs) const { return dropped_.count({clause, vs}) > 0; }
  // Lines of the source of the form "drop <clause> <vertices>".
  const std::set<std::pair<int, std::vector<VertexId>>>& drops() const { return dropped_; }

  // A copy with one more declared relation.
  TensorQuiver with_relation(const std::string& lhs, const std::string& rhs) const;

  // Oriented rules: declared relations plus those learned by completion.
  std::size_t rule_count() const { return rules_->rules.size(); }
  std::size_t learned_rule_count() const { return rules_->learned; }

 private:
  struct Rule {
    Path lhs;
    LinComb rhs;
  };
  struct RuleSet {
    std::vector<Rule> rules;
    std::map<EdgeId, std::vector<std::size_t>> by_first;
    std::size_t learned = 0;
  };

  EdgeId intern(EdgeTerm t) const;
  void add_declared_relation(const LinComb& lhs, const LinComb& rhs, const std::string& label);
  // Orients lhs - rhs = 0 by its leading term; false if that is not a unit.
  bool add_rule(const LinComb& diff) const;
  std::vector<LinComb> successors(const Path& p) const;
  std::vector<std::pair<Path, Scalar>> schema_partners(const std::vector<EdgeId>& window) const;
  LinComb normal_form_impl(const Path& p, std::map<std::vector<EdgeId>, LinComb>& memo, std::size_t& states,
                           const NormalFormCaps& caps) const;
  int cmp_paths(const std::vector<EdgeId>& a, const std::vector<EdgeId>& b) const;
  LinComb normalize_terms(VertexId src, VertexId dst, std::vector<std::pair<Path, Scalar>> terms) const;

  bool graded_ = false;
  bool signs_ = false;
  std::vector<std::string> vertex_names_;
  std::vector<int> grades_;
  std::vector<std::vector<VertexId>> tensor_;
  VertexId unit_ = -1;

  // a deque, so references to edges survive the creation of new ones
  std::shared_ptr<std::deque<EdgeTerm>> edges_ = std::make_shared<std::deque<EdgeTerm>>();
  std::shared_ptr<std::map<std::string, EdgeId>> by_name_ = std::make_shared<std::map<std::string, EdgeId>>();
  using TermKey = std::tuple<int, int, int, int, int>;
  std::shared_ptr<std::map<TermKey, EdgeId>> by_term_ = std::make_shared<std::map<TermKey, EdgeId>>();
  std::map<std::pair<EdgeId, VertexId>, std::string> left_names_;
  std::map<std::pair<VertexId, EdgeId>, std::string> right_names_;

  std::vector<EdgeId> declared_;
  std::map<std::pair<VertexId, VertexId>, EdgeId> alpha_;
  std::map<std::tuple<VertexId, VertexId, VertexId>, EdgeId> beta_;
  std::map<std::tuple<VertexId, VertexId, VertexId>, EdgeId> beta_inv_;
  std::map<VertexId, EdgeId> unit_edge_;
  std::map<VertexId, EdgeId> unit_inv_;
  std::set<std::pair<int, std::vector<VertexId>>> dropped_;

  std::vector<RelationInstance> declared_relations_;
  std::shared_ptr<RuleSet> rules_ = std::make_shared<RuleSet>();
};

// Normal-form paths from v to w of length <= cap over edges of depth <= 1,
// deduplicated and sorted; the hom group of ZD^{(x),+} (signed or not) is free
// on the normal forms that occur. Throws CapExceeded if more than
// max_paths paths would be enumerated.
std::vector<Path> hom_basis(const TensorQuiver& q, VertexId v, VertexId w, std::size_t cap, bool signed_tensor,
                            std::size_t max_paths = 200000);

struct TensorViolation {
  int clause = 0;  // relation clause, or 0 for the grading conditions
  std::string where;
  std::string message;
};

struct TensorValidation {
  bool ok = true;
  std::map<int, std::size_t> instances;  // clause -> instances checked
  std::vector<TensorViolation> violations;
};

// Checks the grading conditions (|v (x) w| = |v| + |w|, |1| = 0), that every
// relation instance with edges of depth <= max_depth is present and well
// typed, the (3') signs, and that the instances of clauses 4, 6, 8, 9 and 10
// hold as normal-form identities.
TensorValidation validate_tensor(const TensorQuiver& q, int max_depth = 1);

}  // namespace freyd
