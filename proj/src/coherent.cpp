#include "cartanfree/coherent.hpp"

#include <algorithm>
#include <map>

#include "cartanfree/errors.hpp"

namespace cartanfree {

WeightPoint lambda0(int n) { return WeightPoint(n, rat(-1, 2)); }

WeightPoint weight_add_root(const WeightPoint& w, const Root& alpha) {
  if (w.size() != alpha.coords.size()) throw InputError("weight/root length mismatch");
  WeightPoint out = w;
  for (std::size_t i = 0; i < w.size(); ++i) {
    out[i] += alpha.coords[i];
    out[i].canonicalize();
  }
  return out;
}

std::string weight_str(const WeightPoint& w) { return rational_vec_str(w); }

RatMatrix weight_coeff(const HFreeModule& m, const Root& alpha, const WeightPoint& lambda) {
  if (static_cast<int>(lambda.size()) != m.n()) throw InputError("weight length mismatch");
  const PolyMatrix& a = m.action(alpha);
  const WeightPoint at = weight_add_root(lambda, alpha);
  RatMatrix out(m.d, m.d);
  for (int r = 0; r < m.d; ++r) {
    for (int c = 0; c < m.d; ++c) out.at(r, c) = a.at(r, c).eval(at);
  }
  return out;
}

RatMatrix CoherentAction::coefficient(const Root& alpha, const WeightPoint& lambda) const {
  RatMatrix base = weight_coeff(module_, alpha, lambda);
  if (semisimplified_ && module_.d == 1) {
    // x_{-alpha} died coming into lambda, so x_alpha out of lambda is zeroed.
    const Root neg = -alpha;
    if (sgn(module_.action(neg).at(0, 0).eval(lambda)) == 0) {
      return RatMatrix(module_.d, module_.d);
    }
  }
  return base;
}

CoherentAction semisimplify(const CoherentAction& a) {
  if (a.degree() != 1) {
    throw InputError("semisimplification is implemented for degree 1 families only");
  }
  CoherentAction out = a;
  out.semisimplified_ = true;
  return out;
}

Box Box::centered(const WeightPoint& mu, const Rational& radius) {
  Box b;
  b.lo.reserve(mu.size());
  b.hi.reserve(mu.size());
  for (const auto& x : mu) {
    b.lo.push_back(x - radius);
    b.hi.push_back(x + radius);
  }
  return b;
}

bool Box::contains(const WeightPoint& w) const {
  if (w.size() != lo.size()) throw InputError("weight/box dimension mismatch");
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < lo[i] || w[i] > hi[i]) return false;
  }
  return true;
}

int SupportGraph::node_index(const WeightPoint& w) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), w);
  if (it == nodes.end() || *it != w) return -1;
  return static_cast<int>(it - nodes.begin());
}

SupportGraph support_graph(const CoherentAction& action, const WeightPoint& mu,
                           const Box& box, std::size_t node_cap) {
  const HFreeModule& m = action.module();
  const int n = m.n();
  if (box.dims() != n || static_cast<int>(mu.size()) != n) {
    throw InputError("box/weight dimension mismatch");
  }
  if (!box.contains(mu)) throw InputError("box must contain the base weight");

  std::vector<long> qlo(n), qhi(n);
  std::size_t bound = 1;
  for (int i = 0; i < n; ++i) {
    qlo[i] = ceil_long(box.lo[i] - mu[i]);
    qhi[i] = floor_long(box.hi[i] - mu[i]);
    if (qhi[i] < qlo[i]) throw InternalError("empty coordinate range despite contained center");
    const std::size_t width = static_cast<std::size_t>(qhi[i] - qlo[i] + 1);
    if (bound > (2 * node_cap + 2) / width) {
      throw ResourceError("support box exceeds the node cap");
    }
    bound *= width;
  }

  SupportGraph g;
  g.box = box;
  g.mu = mu;

  std::vector<long> q = qlo;
  while (true) {
    std::vector<Rational> v(n);
    for (int i = 0; i < n; ++i) v[i] = Rational(q[i]);
    if (m.basis->root_lattice_contains(v)) {
      WeightPoint node = mu;
      for (int i = 0; i < n; ++i) {
        node[i] += q[i];
        node[i].canonicalize();
      }
      g.nodes.push_back(std::move(node));
      if (g.nodes.size() > node_cap) throw ResourceError("support graph exceeds the node cap");
    }
    int pos = n - 1;
    while (pos >= 0 && q[pos] == qhi[pos]) {
      q[pos] = qlo[pos];
      --pos;
    }
    if (pos < 0) break;
    ++q[pos];
  }
  std::sort(g.nodes.begin(), g.nodes.end());

  g.out.assign(g.nodes.size(), {});
  g.interior.assign(g.nodes.size(), true);
  for (std::size_t u = 0; u < g.nodes.size(); ++u) {
    for (const auto& alpha : m.basis->roots()) {
      const WeightPoint target = weight_add_root(g.nodes[u], alpha);
      if (!box.contains(target)) {
        g.interior[u] = false;
        continue;
      }
      const int v = g.node_index(target);
      if (v < 0) throw InternalError("root translate escaped the node set");
      RatMatrix coeff = action.coefficient(alpha, g.nodes[u]);
      if (coeff.is_zero()) continue;
      g.out[u].push_back(static_cast<int>(g.edges.size()));
      g.edges.push_back({static_cast<int>(u), v, alpha, std::move(coeff)});
    }
  }
  return g;
}

ClosureResult submodule_closure(const SupportGraph& g, const std::set<int>& seeds) {
  ClosureResult out;
  std::vector<int> stack;
  for (int s : seeds) {
    if (s < 0 || s >= static_cast<int>(g.nodes.size())) throw InputError("seed out of range");
    if (out.nodes.insert(s).second) stack.push_back(s);
  }
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int e : g.out[u]) {
      const int v = g.edges[e].to;
      if (out.nodes.insert(v).second) stack.push_back(v);
    }
  }
  for (int v : out.nodes) {
    if (!g.interior[v]) out.touches_boundary = true;
  }
  return out;
}

std::vector<int> ComponentDag::sinks() const {
  std::vector<int> out;
  for (int c = 0; c < count; ++c) {
    if (succ[c].empty()) out.push_back(c);
  }
  return out;
}

std::vector<std::vector<int>> ComponentDag::members() const {
  std::vector<std::vector<int>> out(count);
  for (std::size_t v = 0; v < component_of.size(); ++v) {
    if (component_of[v] >= 0) out[component_of[v]].push_back(static_cast<int>(v));
  }
  return out;
}

ComponentDag composition_components(const SupportGraph& g, bool interior_only) {
  const int n_nodes = static_cast<int>(g.nodes.size());
  std::vector<bool> included(n_nodes, true);
  if (interior_only) {
    for (int v = 0; v < n_nodes; ++v) included[v] = g.interior[v];
  }

  // Iterative Tarjan over the induced subgraph.
  ComponentDag dag;
  dag.interior_only = interior_only;
  dag.component_of.assign(n_nodes, -1);
  std::vector<int> index(n_nodes, -1), low(n_nodes, 0);
  std::vector<bool> on_stack(n_nodes, false);
  std::vector<int> scc_stack;
  int next_index = 0, next_comp = 0;

  struct Frame {
    int v;
    std::size_t edge_pos;
  };

  for (int root = 0; root < n_nodes; ++root) {
    if (!included[root] || index[root] != -1) continue;
    std::vector<Frame> call;
    call.push_back({root, 0});
    index[root] = low[root] = next_index++;
    scc_stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      bool descended = false;
      while (f.edge_pos < g.out[f.v].size()) {
        const int e = g.out[f.v][f.edge_pos];
        ++f.edge_pos;
        const int w = g.edges[e].to;
        if (!included[w]) continue;
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          scc_stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) low[f.v] = std::min(low[f.v], index[w]);
      }
      if (descended) continue;
      const int v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        while (true) {
          const int w = scc_stack.back();
          scc_stack.pop_back();
          on_stack[w] = false;
          dag.component_of[w] = next_comp;
          if (w == v) break;
        }
        ++next_comp;
      }
    }
  }
  dag.count = next_comp;

  // renumber components by smallest member for deterministic output
  std::vector<int> min_node(dag.count, n_nodes);
  for (int v = 0; v < n_nodes; ++v) {
    if (dag.component_of[v] >= 0) {
      min_node[dag.component_of[v]] = std::min(min_node[dag.component_of[v]], v);
    }
  }
  std::vector<int> order(dag.count);
  for (int c = 0; c < dag.count; ++c) order[c] = c;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return min_node[a] < min_node[b]; });
  std::vector<int> renumber(dag.count);
  for (int pos = 0; pos < dag.count; ++pos) renumber[order[pos]] = pos;
  for (int v = 0; v < n_nodes; ++v) {
    if (dag.component_of[v] >= 0) dag.component_of[v] = renumber[dag.component_of[v]];
  }

  dag.succ.assign(dag.count, {});
  for (const auto& e : g.edges) {
    const int cu = dag.component_of[e.from];
    const int cv = dag.component_of[e.to];
    if (cu < 0 || cv < 0 || cu == cv) continue;
    dag.succ[cu].insert(cv);
  }
  return dag;
}

MultiPoly trace_polynomial(const OpSum& action) {
  for (const auto& [shift, mat] : action.parts()) {
    if (!shift_is_zero(shift)) {
      throw InputError("word is not in U(g)_0: summand with shift " + shift_str(shift));
    }
  }
  return action.zero_shift_part().trace();
}

MultiPoly trace_polynomial(const HFreeModule& m, const std::vector<WordTerm>& word) {
  return trace_polynomial(word_action(m, word));
}

bool coset_test(const WeightPoint& mu, int i) {
  if (i < 0 || i >= static_cast<int>(mu.size())) throw InputError("coset index out of range");
  return is_half_integer(mu[i]);
}

bool verify_weighting_table_for(const HFreeModule& m) {
  if (m.d != 1 || m.basis->kind() != AlgebraKind::SpTypeC) {
    throw InputError("weighting table check applies to rank-1 sp(2n) tables");
  }
  const int n = m.n();
  const Rational half = rat(1, 2), three_half = rat(3, 2);
  for (const auto& alpha : m.basis->roots()) {
    int pos2 = -1, neg2 = -1;
    std::vector<int> plus, minus;
    for (int i = 0; i < n; ++i) {
      switch (alpha.coords[i]) {
        case 2: pos2 = i; break;
        case -2: neg2 = i; break;
        case 1: plus.push_back(i); break;
        case -1: minus.push_back(i); break;
        default: break;
      }
    }
    MultiPoly expected(n);
    if (pos2 >= 0) {
      expected = linear_factor(n, pos2, three_half) * linear_factor(n, pos2, half);
    } else if (neg2 >= 0 || minus.size() == 2) {
      expected = MultiPoly::constant(n, rat(1));
    } else if (plus.size() == 2) {
      expected = linear_factor(n, plus[0], half) * linear_factor(n, plus[1], half);
    } else if (plus.size() == 1 && minus.size() == 1) {
      expected = linear_factor(n, plus[0], half);
    } else {
      throw InternalError("unexpected root shape " + alpha.label());
    }
    // X_alpha carries W(M)_lambda to W(M)_{lambda+alpha} with coefficient
    // A_alpha(lambda + alpha); as a polynomial in lambda that is
    // sigma_{-alpha}(A_alpha).
    const MultiPoly actual = m.action(alpha).at(0, 0).shifted(shift_neg(alpha.coords));
    if (actual != expected) return false;
  }
  // The Cartan row lambda(h_i) v_lambda is the stored convention itself:
  // h_i acts by multiplication with h_i, so its weight coefficient is forced.
  for (int i = 0; i < n; ++i) {
    const PolyShiftOp op = m.element_op(m.basis->cartan_index(i));
    if (!shift_is_zero(op.shift) ||
        op.coeff != PolyMatrix::scalar(1, MultiPoly::variable(n, i))) {
      return false;
    }
  }
  return true;
}

bool verify_weighting_table(int n) {
  if (n < 2) throw InputError("weighting table check needs n >= 2");
  return verify_weighting_table_for(make_M0(n));
}

}  // namespace cartanfree
