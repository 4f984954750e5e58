#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "cartanfree/coherent.hpp"
#include "cartanfree/errors.hpp"
#include "test_util.hpp"

using namespace cartanfree;
using testutil::rand_weight;
using testutil::word_weight_matrix;

namespace {

Root root_of(int n, std::initializer_list<std::pair<int, int>> entries) {
  std::vector<int> c(n, 0);
  for (auto [i, v] : entries) c[i] += v;
  return Root{c};
}

void set_entry(HFreeModule& m, const Root& alpha, const MultiPoly& p) {
  PolyMatrix a(1, 1, m.n());
  a.at(0, 0) = p;
  m.actions[alpha] = a;
}

// quadrant sign pattern of an interior component; requires all members agree
std::vector<int> component_signs(const SupportGraph& g, const std::vector<int>& members) {
  const int n = static_cast<int>(g.nodes.front().size());
  std::vector<int> signs(n, 0);
  for (int v : members) {
    for (int i = 0; i < n; ++i) {
      const int s = sign_of(g.nodes[v][i]);
      REQUIRE(s != 0);
      if (signs[i] == 0) signs[i] = s;
      REQUIRE(signs[i] == s);
    }
  }
  return signs;
}

}  // namespace

TEST_CASE("weight_coeff on M0 matches the published values") {
  const HFreeModule m = make_M0(2);
  // at lambda0 the long raising coefficient is (-1/2+3/2)(-1/2+1/2) = 0
  CHECK(weight_coeff(m, root_of(2, {{0, 2}}), lambda0(2)).at(0, 0) == rat(0));
  std::mt19937 gen(3);
  for (int rep = 0; rep < 10; ++rep) {
    const WeightPoint lam = rand_weight(gen, 2);
    CHECK(weight_coeff(m, root_of(2, {{0, -2}}), lam).at(0, 0) == rat(1));
    // generic symbolic row: (lambda_1 + 3/2)(lambda_1 + 1/2)
    CHECK(weight_coeff(m, root_of(2, {{0, 2}}), lam).at(0, 0) ==
          (lam[0] + rat(3, 2)) * (lam[0] + rat(1, 2)));
  }
}

TEST_CASE("verify_weighting_table holds for n = 2, 3 and spots a wrong row") {
  CHECK(verify_weighting_table(2));
  CHECK(verify_weighting_table(3));
  HFreeModule wrong = make_M0(2);
  // makes the weight coefficient (lambda_1 + 1/2)^2 instead of the table row
  set_entry(wrong, root_of(2, {{0, 2}}),
            linear_factor(2, 0, rat(-3, 2)) * linear_factor(2, 0, rat(-3, 2)));
  CHECK(!verify_weighting_table_for(wrong));
}

TEST_CASE("support_graph: node count equals an independent lattice enumeration") {
  const HFreeModule m = make_M0(2);
  const WeightPoint l0 = lambda0(2);
  const Box box = Box::centered(l0, rat(9, 2));
  const SupportGraph g = support_graph(CoherentAction(m), l0, box);
  // count points of lambda0 + Q in the box by brute force
  int count = 0;
  for (int q1 = -20; q1 <= 20; ++q1) {
    for (int q2 = -20; q2 <= 20; ++q2) {
      if (((q1 + q2) % 2 + 2) % 2 != 0) continue;
      const WeightPoint w = {l0[0] + q1, l0[1] + q2};
      if (box.contains(w)) ++count;
    }
  }
  CHECK(static_cast<int>(g.nodes.size()) == count);
  CHECK(count == 41);
}

TEST_CASE("support_graph: degenerate box holds only mu") {
  const HFreeModule m = make_M0(2);
  const WeightPoint l0 = lambda0(2);
  const SupportGraph g = support_graph(CoherentAction(m), l0, Box::centered(l0, rat(0)));
  CHECK(g.nodes.size() == 1);
  CHECK(g.edges.empty());
}

TEST_CASE("support_graph: no outgoing 2e1 edge from the wall lambda_1 = -3/2") {
  const HFreeModule m = make_M0(2);
  const WeightPoint l0 = lambda0(2);
  const SupportGraph g = support_graph(CoherentAction(m), l0, Box::centered(l0, rat(9, 2)));
  const Root long1 = root_of(2, {{0, 2}});
  for (const auto& e : g.edges) {
    if (e.root == long1) CHECK(g.nodes[e.from][0] != rat(-3, 2));
  }
}

TEST_CASE("support_graph honors the node cap") {
  const HFreeModule m = make_M0(2);
  const WeightPoint l0 = lambda0(2);
  CHECK_THROWS_AS(support_graph(CoherentAction(m), l0, Box::centered(l0, rat(9, 2)), 10),
                  ResourceError);
}

TEST_CASE("submodule_closure: empty seeds, quadrant confinement, escape upward") {
  const HFreeModule m = make_M0(2);
  const WeightPoint l0 = lambda0(2);
  const SupportGraph g = support_graph(CoherentAction(m), l0, Box::centered(l0, rat(9, 2)));
  CHECK(submodule_closure(g, {}).nodes.empty());

  // a seed deep in the lower-left quadrant stays in the quadrant
  const int deep = g.node_index({rat(-5, 2), rat(-5, 2)});
  REQUIRE(deep >= 0);
  const ClosureResult cl = submodule_closure(g, {deep});
  CHECK(!cl.nodes.empty());
  for (int v : cl.nodes) {
    CHECK(sgn(g.nodes[v][0]) < 0);
    CHECK(sgn(g.nodes[v][1]) < 0);
  }

  // a seed past both walls reaches all four quadrants
  const int high = g.node_index({rat(1, 2), rat(1, 2)});
  REQUIRE(high >= 0);
  const ClosureResult cl2 = submodule_closure(g, {high});
  std::set<std::pair<int, int>> quadrants;
  for (int v : cl2.nodes) {
    quadrants.insert({sign_of(g.nodes[v][0]), sign_of(g.nodes[v][1])});
  }
  CHECK(quadrants.size() == 4);
}

TEST_CASE("composition_components: four quadrant components at lambda0, n = 2") {
  const HFreeModule m = make_M0(2);
  const WeightPoint l0 = lambda0(2);
  const SupportGraph g = support_graph(CoherentAction(m), l0, Box::centered(l0, rat(9, 2)));
  const ComponentDag dag = composition_components(g, /*interior_only=*/true);
  CHECK(dag.count == 4);
  const auto members = dag.members();
  // each component sits in one quadrant; the unique sink is the (-,-) one
  const auto sinks = dag.sinks();
  REQUIRE(sinks.size() == 1);
  const auto sink_signs = component_signs(g, members[sinks[0]]);
  CHECK(sink_signs == std::vector<int>{-1, -1});
}

TEST_CASE("composition_components: 8 components at lambda0 for n = 3") {
  const HFreeModule m = make_M0(3);
  const WeightPoint l0 = lambda0(3);
  const SupportGraph g = support_graph(CoherentAction(m), l0, Box::centered(l0, rat(9, 2)));
  const ComponentDag dag = composition_components(g, true);
  CHECK(dag.count == 8);
}

TEST_CASE("composition_components: generic coset is strongly connected") {
  const HFreeModule m = make_M0(2);
  const WeightPoint mu = {rat(1, 3), rat(0)};
  const SupportGraph g = support_graph(CoherentAction(m), mu, Box::centered(mu, rat(9, 2)));
  const ComponentDag dag = composition_components(g, true);
  CHECK(dag.count == 1);
}

TEST_CASE("half-space law: S_{-e_i} nodes are closed when mu(h_i) is in 1/2+Z") {
  const HFreeModule m = make_M0(2);
  const WeightPoint mu = {rat(-1, 2), rat(1, 3)};
  CHECK(coset_test(mu, 0));
  CHECK(!coset_test(mu, 1));
  const SupportGraph g = support_graph(CoherentAction(m), mu, Box::centered(mu, rat(9, 2)));
  std::set<int> seeds;
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    if (sgn(g.nodes[v][0]) < 0) seeds.insert(static_cast<int>(v));
  }
  const ClosureResult cl = submodule_closure(g, seeds);
  for (int v : cl.nodes) CHECK(seeds.count(v) == 1);
}

TEST_CASE("semisimplify: idempotent, unchanged without zeros, degree-1 only") {
  const HFreeModule m = make_M0(2);
  const CoherentAction a(m);
  const CoherentAction ss = semisimplify(a);
  const CoherentAction ss2 = semisimplify(ss);
  std::mt19937 gen(9);
  for (int rep = 0; rep < 20; ++rep) {
    const WeightPoint lam = rand_weight(gen, 2);
    for (const auto& alpha : m.basis->roots()) {
      CHECK(ss.coefficient(alpha, lam) == ss2.coefficient(alpha, lam));
    }
  }
  // an action with no vanishing coefficients is untouched: lowering operators
  // of M0 have constant coefficient 1
  const WeightPoint generic = {rat(1, 3), rat(1, 7)};
  for (const auto& alpha : m.basis->roots()) {
    CHECK(ss.coefficient(alpha, generic) == a.coefficient(alpha, generic));
  }
  CHECK_THROWS_AS(semisimplify(CoherentAction(tensor_natural(m))), InputError);
}

TEST_CASE("semisimplify: the quadrants become mutually unreachable at lambda0") {
  const HFreeModule m = make_M0(2);
  const WeightPoint l0 = lambda0(2);
  const CoherentAction ss = semisimplify(CoherentAction(m));
  const SupportGraph g = support_graph(ss, l0, Box::centered(l0, rat(9, 2)));
  const ComponentDag dag = composition_components(g, true);
  CHECK(dag.count == 4);
  for (const auto& succ : dag.succ) CHECK(succ.empty());
}

TEST_CASE("semisimplify: the sl2 fixture splits into 3 summands at integer mu") {
  const HFreeModule m = make_sl2_example();
  const WeightPoint mu = {rat(0)};
  const CoherentAction ss = semisimplify(CoherentAction(m));
  const SupportGraph g = support_graph(ss, mu, Box::centered(mu, rat(9, 2)));
  const ComponentDag dag = composition_components(g, true);
  CHECK(dag.count == 3);
  for (const auto& succ : dag.succ) CHECK(succ.empty());
  // pre-semisimplification the window has 3 components as well (length 3),
  // but with DAG edges out of the middle one
  const SupportGraph g0 =
      support_graph(CoherentAction(m), mu, Box::centered(mu, rat(9, 2)));
  const ComponentDag dag0 = composition_components(g0, true);
  CHECK(dag0.count == 3);
  std::size_t edges = 0;
  for (const auto& succ : dag0.succ) edges += succ.size();
  CHECK(edges == 2);
}

TEST_CASE("trace_polynomial: published long-root trace and identity word") {
  const HFreeModule m = make_M0(3);
  for (int i = 0; i < 3; ++i) {
    const Root alpha = root_of(3, {{i, 2}});
    const std::vector<WordTerm> word = {
        {rat(1), {m.basis->index_of_root(alpha), m.basis->index_of_root(-alpha)}}};
    CHECK(trace_polynomial(m, word) ==
          linear_factor(3, i, rat(-1, 2)) * linear_factor(3, i, rat(-3, 2)));
  }
  CHECK(trace_polynomial(m, {{rat(1), {}}}) == MultiPoly::constant(3, rat(1)));
  const HFreeModule t = tensor_natural(make_M0(2));
  CHECK(trace_polynomial(t, {{rat(1), {}}}) == MultiPoly::constant(2, rat(4)));
}

TEST_CASE("trace_polynomial rejects words outside U(g)_0") {
  const HFreeModule m = make_M0(2);
  const std::vector<WordTerm> word = {{rat(1), {m.basis->index_of_root(root_of(2, {{0, 2}}))}}};
  CHECK_THROWS_AS(trace_polynomial(m, word), InputError);
}

TEST_CASE("trace_polynomial on the tensor module matches brute-force traces") {
  const HFreeModule t = tensor_natural(make_M0(2));
  const Root alpha = root_of(2, {{0, 2}});
  const std::vector<WordTerm> word = {
      {rat(1), {t.basis->index_of_root(alpha), t.basis->index_of_root(-alpha)}}};
  const MultiPoly tr = trace_polynomial(t, word);
  CHECK(tr.total_degree() <= 2);
  std::mt19937 gen(21);
  for (int rep = 0; rep < 5; ++rep) {
    const WeightPoint lam = rand_weight(gen, 2);
    CHECK(word_weight_matrix(t, word, lam).trace() == tr.eval(lam));
  }
}

TEST_CASE("coset_test examples") {
  CHECK(coset_test(lambda0(2), 0));
  CHECK(coset_test(lambda0(2), 1));
  CHECK(!coset_test(WeightPoint{rat(0), rat(0)}, 0));
  const WeightPoint mu = {rat(3, 2), rat(0)};
  CHECK(coset_test(mu, 0));
  CHECK(!coset_test(mu, 1));
}

TEST_CASE("central character transport: the Casimir acts by one constant") {
  for (int n = 1; n <= 2; ++n) {
    const HFreeModule m = make_M0(n);
    const CasimirElement cas = casimir(*m.basis);
    const OpSum act = word_action(m, cas);
    CHECK(act.pure_zero_shift());
    const MultiPoly zpart = act.zero_shift_part().at(0, 0);
    CHECK(zpart.is_constant());
    const Rational c = zpart.constant_value();
    if (n == 1) CHECK(c == rat(-3, 8));  // hand value for sp(2): -1/4(X+X- + X-X+) + 1/2 h^2
    std::mt19937 gen(31);
    for (int rep = 0; rep < 10; ++rep) {
      const WeightPoint lam = rand_weight(gen, n);
      // weight-route evaluation of the Casimir agrees with the constant
      const RatMatrix w = word_weight_matrix(m, cas, lam);
      CHECK(w.at(0, 0) == c);
    }
    // centrality: the Casimir action commutes with every basis action
    for (int k = 0; k < m.basis->dim(); ++k) {
      const OpSum x = OpSum::single(m.element_op(k));
      CHECK(x.composed_with(act) == act.composed_with(x));
    }
  }
}

TEST_CASE("weight spaces of the tensor module have dimension d at every node") {
  const HFreeModule t = tensor_natural(make_M0(2));
  const WeightPoint l0 = lambda0(2);
  const SupportGraph g = support_graph(CoherentAction(t), l0, Box::centered(l0, rat(3, 2)));
  for (const auto& e : g.edges) {
    CHECK(e.coeff.rows() == t.d);
    CHECK(e.coeff.cols() == t.d);
  }
}
