#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cartanfree/hfree.hpp"
#include "cartanfree/rat_matrix.hpp"

namespace cartanfree {

// A weight, written in coordinates lambda(h_i).
using WeightPoint = std::vector<Rational>;

WeightPoint lambda0(int n);  // -1/2 sum e_i
WeightPoint weight_add_root(const WeightPoint& w, const Root& alpha);
std::string weight_str(const WeightPoint& w);

// Coefficient of x_alpha from W(M)_lambda to W(M)_{lambda+alpha}:
// A_alpha evaluated entrywise at lambda + alpha.
RatMatrix weight_coeff(const HFreeModule& m, const Root& alpha, const WeightPoint& lambda);

// The image of a module under the weighting functor, held intensionally as a
// coefficient function. Semisimplification only reroutes the evaluation (the
// degree-1 zero-override rule); nothing infinite is ever materialized.
class CoherentAction {
 public:
  explicit CoherentAction(HFreeModule m) : module_(std::move(m)) {}

  const HFreeModule& module() const { return module_; }
  int degree() const { return module_.d; }
  bool semisimplified() const { return semisimplified_; }

  RatMatrix coefficient(const Root& alpha, const WeightPoint& lambda) const;

  friend CoherentAction semisimplify(const CoherentAction& a);

 private:
  HFreeModule module_;
  bool semisimplified_ = false;
};

// Degree-1 semisimplification: whenever x_alpha vanished into a weight space,
// x_{-alpha} out of it is overridden to zero. Idempotent. d > 1 is unsupported.
CoherentAction semisimplify(const CoherentAction& a);

// Axis-aligned rational box in weight space.
struct Box {
  std::vector<Rational> lo, hi;
  static Box centered(const WeightPoint& mu, const Rational& radius);
  bool contains(const WeightPoint& w) const;
  int dims() const { return static_cast<int>(lo.size()); }
};

constexpr std::size_t kDefaultNodeCap = 100000;

// Finite window onto W(M)[mu]: the points of (mu + Q) inside the box, with a
// root-labeled edge wherever the evaluated coefficient is nonzero.
struct SupportGraph {
  Box box;
  WeightPoint mu;
  std::vector<WeightPoint> nodes;  // lexicographic order
  struct Edge {
    int from = 0, to = 0;
    Root root;
    RatMatrix coeff;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<int>> out;   // node -> outgoing edge indices
  // Interior nodes have every root-translate inside the box; submodule
  // statements are only trusted there.
  std::vector<bool> interior;

  int node_index(const WeightPoint& w) const;  // -1 if absent
};

SupportGraph support_graph(const CoherentAction& action, const WeightPoint& mu,
                           const Box& box, std::size_t node_cap = kDefaultNodeCap);

struct ClosureResult {
  std::set<int> nodes;
  bool touches_boundary = false;  // truncation caveat
};

// Smallest superset of the seeds closed under outgoing (nonzero) edges.
ClosureResult submodule_closure(const SupportGraph& g, const std::set<int>& seeds);

// Strongly connected components of the edge relation plus the quotient DAG.
struct ComponentDag {
  std::vector<int> component_of;       // node -> component id, -1 when excluded
  int count = 0;
  std::vector<std::set<int>> succ;     // component -> successor components
  bool interior_only = false;

  bool is_sink(int comp) const { return succ[comp].empty(); }
  std::vector<int> sinks() const;
  std::vector<std::vector<int>> members() const;  // component -> node ids
};

ComponentDag composition_components(const SupportGraph& g, bool interior_only = false);

// Trace of a zero-shift word as an element of U(h); evaluating at lambda gives
// the trace on the lambda weight space. Nonzero shifts are an input error.
MultiPoly trace_polynomial(const HFreeModule& m, const std::vector<WordTerm>& word);
MultiPoly trace_polynomial(const OpSum& action);

// mu(h_i) in 1/2 + Z, the coset condition that creates half-space submodules.
bool coset_test(const WeightPoint& mu, int i);  // 0-based i

// Symbolic equality of the weighting coefficients of M0 with the published
// closed forms, for all roots (and the Cartan convention row).
bool verify_weighting_table(int n);
bool verify_weighting_table_for(const HFreeModule& m);

}  // namespace cartanfree
