// Acceptance suite: one pass/fail line per criterion, exact tolerances,
// runtime ceilings enforced where stated. Exits nonzero when anything fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cartanfree/classify.hpp"
#include "cartanfree/coherent.hpp"
#include "cartanfree/errors.hpp"
#include "cartanfree/hfree.hpp"
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

struct Criterion {
  int id;
  std::string title;
  std::function<bool(std::string&)> run;
};

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool tables_equal(const HFreeModule& a, const HFreeModule& b) {
  if (a.n() != b.n() || a.d != b.d) return false;
  for (const auto& alpha : a.basis->roots()) {
    if (!(a.action(alpha) == b.action(alpha))) return false;
  }
  return true;
}

// ---- criterion 1: exhaustive relation verification + injected perturbation

bool criterion_relations(std::string& note) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int n = 2; n <= 4; ++n) {
    const VerificationReport report = verify_relations(make_M0(n));
    if (!report.ok()) {
      note = "M0 relations failed at n=" + std::to_string(n);
      return false;
    }
  }
  const double elapsed = seconds_since(t0);
  if (elapsed >= 60.0) {
    note = "runtime " + std::to_string(elapsed) + "s breaches the 60s ceiling";
    return false;
  }
  HFreeModule broken = make_M0(3);
  const Root long2 = root_of(3, {{1, 2}});
  broken.actions[long2] = broken.action(long2).scaled(rat(2));
  if (verify_relations(broken).ok()) {
    note = "perturbed long-root table was not rejected";
    return false;
  }
  note = "n=2..4 pass in " + std::to_string(elapsed) + "s; x2 perturbation on a long root fails";
  return true;
}

// ---- criterion 2: W(M0) coefficient table, exact symbolic equality

bool criterion_weighting_table(std::string& note) {
  if (!verify_weighting_table(2) || !verify_weighting_table(3)) {
    note = "symbolic table mismatch";
    return false;
  }
  note = "all rows match symbolically for n=2,3";
  return true;
}

// ---- criterion 3: length four at lambda0, n = 2, 2x2 grid order

bool criterion_length_four(std::string& note) {
  const auto t0 = std::chrono::steady_clock::now();
  const HFreeModule m = make_M0(2);
  const WeightPoint l0 = lambda0(2);
  const SupportGraph g = support_graph(CoherentAction(m), l0, Box::centered(l0, rat(9, 2)));
  const ComponentDag dag = composition_components(g, /*interior_only=*/true);
  if (dag.count != 4) {
    note = "expected 4 interior components, got " + std::to_string(dag.count);
    return false;
  }
  // quadrant signature per component
  const auto members = dag.members();
  std::vector<std::pair<int, int>> quadrant(4);
  for (int c = 0; c < 4; ++c) {
    std::set<std::pair<int, int>> seen;
    for (int v : members[c]) {
      seen.insert({sign_of(g.nodes[v][0]), sign_of(g.nodes[v][1])});
    }
    if (seen.size() != 1) {
      note = "a component straddles quadrants";
      return false;
    }
    quadrant[c] = *seen.begin();
  }
  // reachability must be the product order on {+,-}^2
  std::vector<std::vector<bool>> reach(4, std::vector<bool>(4, false));
  for (int c = 0; c < 4; ++c) {
    std::vector<int> stack = {c};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      if (reach[c][x]) continue;
      reach[c][x] = true;
      for (int s : dag.succ[x]) stack.push_back(s);
    }
  }
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const bool expect = quadrant[a].first >= quadrant[b].first &&
                          quadrant[a].second >= quadrant[b].second;
      if (reach[a][b] != expect) {
        note = "component order differs from the 2x2 grid";
        return false;
      }
    }
  }
  int minimal = -1;
  for (int c = 0; c < 4; ++c) {
    if (dag.succ[c].empty()) {
      if (minimal != -1) {
        note = "minimal component not unique";
        return false;
      }
      minimal = c;
    }
  }
  if (minimal < 0 || quadrant[minimal] != std::pair<int, int>{-1, -1}) {
    note = "minimal component is not the (-,-) quadrant";
    return false;
  }
  const double elapsed = seconds_since(t0);
  if (elapsed >= 5.0) {
    note = "runtime " + std::to_string(elapsed) + "s breaches the 5s ceiling";
    return false;
  }
  note = "4 components in 2x2 grid order, minimal at (-,-), " + std::to_string(elapsed) + "s";
  return true;
}

// ---- criterion 4: 2^n summands after semisimplification

bool criterion_semisimplification(std::string& note) {
  for (int n = 2; n <= 3; ++n) {
    const HFreeModule m = make_M0(n);
    const WeightPoint l0 = lambda0(n);
    const CoherentAction ss = semisimplify(CoherentAction(m));
    const SupportGraph g = support_graph(ss, l0, Box::centered(l0, rat(9, 2)));
    const ComponentDag dag = composition_components(g, true);
    const int expect = 1 << n;
    if (dag.count != expect) {
      note = "n=" + std::to_string(n) + ": expected " + std::to_string(expect) +
             " components, got " + std::to_string(dag.count);
      return false;
    }
    for (const auto& succ : dag.succ) {
      if (!succ.empty()) {
        note = "n=" + std::to_string(n) + ": semisimplified DAG still has edges";
        return false;
      }
    }
  }
  note = "4 summands at n=2, 8 at n=3, no DAG edges";
  return true;
}

// ---- criterion 5: the product identities, exact polynomial equality

bool criterion_product_identities(std::string& note) {
  for (int n = 2; n <= 4; ++n) {
    const HFreeModule m = make_M0(n);
    for (int i = 0; i < n; ++i) {
      const Root long_i = root_of(n, {{i, 2}});
      if (!(m.action(long_i).at(0, 0) *
                shift_apply(long_i.coords, m.action(-long_i).at(0, 0)) ==
            linear_factor(n, i, rat(-1, 2)) * linear_factor(n, i, rat(-3, 2)))) {
        note = "long-root identity failed at i=" + std::to_string(i + 1);
        return false;
      }
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const Root sum = root_of(n, {{i, 1}, {j, 1}});
        if (!(m.action(sum).at(0, 0) * shift_apply(sum.coords, m.action(-sum).at(0, 0)) ==
              linear_factor(n, i, rat(-1, 2)) * linear_factor(n, j, rat(-1, 2)))) {
          note = "sum-root identity failed";
          return false;
        }
        // composing the actual table: sigma_{e_i - e_j} shifts the second
        // factor, so the exact product is (h_i - 1/2)(h_j + 1/2)
        const Root diff = root_of(n, {{i, 1}, {j, -1}});
        if (!(m.action(diff).at(0, 0) * shift_apply(diff.coords, m.action(-diff).at(0, 0)) ==
              linear_factor(n, i, rat(-1, 2)) * linear_factor(n, j, rat(1, 2)))) {
          note = "difference-root identity failed";
          return false;
        }
      }
    }
  }
  note = "all (i,j) identities exact for n=2..4";
  return true;
}

// ---- criterion 6: twist laws

bool criterion_twist_laws(std::string& note) {
  const Box box = Box::centered(lambda0(2), rat(9, 2));
  const HFreeModule m = make_M0(2);
  for (int k = 1; k <= 2; ++k) {
    const AutomorphismTable phi = weyl_twist_auto(m.basis, k);
    if (!phi.preserves_brackets() || !phi.h_stable()) {
      note = "weyl twist not a bracket-preserving h-stable automorphism";
      return false;
    }
    const RatMatrix w = phi.cartan_matrix();
    for (int i = 0; i < 2; ++i) {
      const Rational expect = (i == k - 1) ? rat(-1) : rat(1);
      if (w.at(i, i) != expect) {
        note = "weyl twist does not negate h_k";
        return false;
      }
    }
    const HFreeModule t = twist(m, phi);
    if (!verify_relations(t).ok()) {
      note = "twisted table failed verification";
      return false;
    }
    const auto signs = min_submodule_support_signs(t, box);
    for (int i = 0; i < 2; ++i) {
      const HalfSpaceSign expect = (i == k - 1) ? HalfSpaceSign::Plus : HalfSpaceSign::Minus;
      if (signs[i] != expect) {
        note = "support signs are not w_k of the original";
        return false;
      }
    }
  }
  const HFreeModule d = twist(m, AutomorphismTable::diagonal(m.basis, {rat(2), rat(-1, 3)}));
  const auto dsigns = min_submodule_support_signs(d, box);
  if (dsigns != std::vector<HalfSpaceSign>{HalfSpaceSign::Minus, HalfSpaceSign::Minus}) {
    note = "diagonal twist moved the support signs";
    return false;
  }
  note = "weyl twists reflect, diagonal twists fix the minimal support";
  return true;
}

// ---- criterion 7: classification round trip, 25 seeded random twists

bool criterion_round_trip(std::string& note) {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937 gen(424242);
  std::uniform_int_distribution<int> n_ops(1, 4);
  std::uniform_int_distribution<int> kind(0, 1);
  std::uniform_int_distribution<int> weyl_k(1, 2);
  const std::vector<Rational> pool = {rat(1),  rat(-1),   rat(2),    rat(-2),
                                      rat(3),  rat(-3),   rat(1, 2), rat(-1, 2)};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  const HFreeModule m0 = make_M0(2);
  for (int run = 0; run < 25; ++run) {
    HFreeModule m = m0;
    const int ops = n_ops(gen);
    for (int o = 0; o < ops; ++o) {
      if (kind(gen) == 0) {
        m = twist(m, weyl_twist_auto(m.basis, weyl_k(gen)));
      } else {
        std::vector<Rational> c(2);
        for (int i = 0; i < 2; ++i) c[i] = pool[pick(gen)];
        m = twist(m, AutomorphismTable::diagonal(m.basis, c));
      }
    }
    const CanonicalizationResult r = canonicalize(m);
    if (!r.verdict) {
      note = "run " + std::to_string(run + 1) + ": verdict false";
      return false;
    }
    if (!tables_equal(replay(m, r), m0)) {
      note = "run " + std::to_string(run + 1) + ": replay did not reproduce the base table";
      return false;
    }
  }
  const double elapsed = seconds_since(t0);
  if (elapsed >= 30.0) {
    note = "runtime " + std::to_string(elapsed) + "s breaches the 30s ceiling";
    return false;
  }
  note = "25/25 round trips exact in " + std::to_string(elapsed) + "s";
  return true;
}

// ---- criterion 8: central character transport through the Casimir

bool criterion_casimir(std::string& note) {
  const HFreeModule m = make_M0(2);
  const CasimirElement cas = casimir(*m.basis);
  const OpSum act = word_action(m, cas);
  if (!act.pure_zero_shift()) {
    note = "Casimir action has a nonzero shift";
    return false;
  }
  const MultiPoly p = act.zero_shift_part().at(0, 0);
  if (!p.is_constant()) {
    note = "Casimir action is not a constant";
    return false;
  }
  const Rational c = p.constant_value();  // derived, never asserted a priori
  const MultiPoly trace_poly = [&] {
    std::vector<WordTerm> word;
    for (const auto& t : cas.terms) word.push_back({t.coeff, {t.first, t.second}});
    return trace_polynomial(m, word);
  }();
  if (!trace_poly.is_constant() || trace_poly.constant_value() != c) {
    note = "trace polynomial disagrees with the operator constant";
    return false;
  }
  std::mt19937 gen(808);
  for (int rep = 0; rep < 10; ++rep) {
    const WeightPoint lam = rand_weight(gen, 2);
    if (trace_poly.eval(lam) != c) {
      note = "trace evaluation differs at a sample weight";
      return false;
    }
    if (word_weight_matrix(m, cas, lam).at(0, 0) != c) {
      note = "weight-route Casimir coefficient differs at a sample weight";
      return false;
    }
  }
  note = "Casimir acts by the constant " + rational_str(c) + " along both routes";
  return true;
}

// ---- criterion 9: the rank-d pipeline through the tensor module

bool criterion_tensor(std::string& note) {
  const auto t0 = std::chrono::steady_clock::now();
  const HFreeModule t = tensor_natural(make_M0(2));
  if (t.d != 4) {
    note = "tensor rank is " + std::to_string(t.d) + ", expected 4";
    return false;
  }
  if (!verify_relations(t).ok()) {
    note = "tensor table failed verification";
    return false;
  }
  const Root alpha = root_of(2, {{0, 2}});
  const std::vector<WordTerm> word = {
      {rat(1), {t.basis->index_of_root(alpha), t.basis->index_of_root(-alpha)}}};
  const MultiPoly tr = trace_polynomial(t, word);
  std::mt19937 gen(909);
  for (int rep = 0; rep < 5; ++rep) {
    const WeightPoint lam = rand_weight(gen, 2);
    if (word_weight_matrix(t, word, lam).trace() != tr.eval(lam)) {
      note = "symbolic trace does not match the brute-force matrix trace";
      return false;
    }
  }
  const double elapsed = seconds_since(t0);
  if (elapsed >= 30.0) {
    note = "runtime " + std::to_string(elapsed) + "s breaches the 30s ceiling";
    return false;
  }
  note = "rank 4, relations pass, traces agree at 5 sample weights, " +
         std::to_string(elapsed) + "s";
  return true;
}

// ---- criterion 10: the sl2 fixture end to end

bool criterion_sl2(std::string& note) {
  const HFreeModule m = make_sl2_example();
  if (!verify_relations(m).ok()) {
    note = "fixture table failed verification";
    return false;
  }
  // the raising coefficient (lambda+1) vanishes exactly at lambda = -1
  if (weight_coeff(m, Root{{1}}, {rat(-1)}).at(0, 0) != rat(0)) {
    note = "raising coefficient does not vanish at lambda = -1";
    return false;
  }
  for (int lam = -4; lam <= 4; ++lam) {
    if (lam == -1) continue;
    if (weight_coeff(m, Root{{1}}, {rat(lam)}).at(0, 0) == rat(0)) {
      note = "raising coefficient vanishes away from lambda = -1";
      return false;
    }
  }
  const WeightPoint mu = {rat(0)};
  const CoherentAction ss = semisimplify(CoherentAction(m));
  const SupportGraph g = support_graph(ss, mu, Box::centered(mu, rat(9, 2)));
  const ComponentDag dag = composition_components(g, true);
  if (dag.count != 3) {
    note = "expected 3 summands at integer mu, got " + std::to_string(dag.count);
    return false;
  }
  note = "fixture verifies, zero at lambda=-1 only, 3 summands at mu=0";
  return true;
}

// ---- criterion 11: the Whittaker check

bool criterion_whittaker(std::string& note) {
  if (!whittaker_locally_finite(make_M0(2)) || !whittaker_locally_finite(make_M0(3))) {
    note = "M0 is not detected as locally finite";
    return false;
  }
  for (int n = 2; n <= 4; ++n) {
    const HFreeModule m = make_M0(n);
    int count = 0;
    for (const auto& alpha : m.basis->roots()) {
      bool lowering = true;
      for (int v : alpha.coords) {
        if (v > 0) lowering = false;
      }
      if (lowering) ++count;
    }
    if (count != n * (n + 1) / 2) {
      note = "lowering set has " + std::to_string(count) + " roots at n=" + std::to_string(n);
      return false;
    }
  }
  note = "M0 locally finite; lowering set has n(n+1)/2 roots for n=2..4";
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "relation verification for M0, n=2..4, with injected perturbation", criterion_relations},
      {2, "exact W(M0) coefficient table, n=2 and 3", criterion_weighting_table},
      {3, "length four at lambda0, n=2, ordered as a 2x2 grid", criterion_length_four},
      {4, "2^n summands after semisimplification, n=2 and 3", criterion_semisimplification},
      {5, "exact product identities on M0", criterion_product_identities},
      {6, "twist laws: Weyl reflections and diagonal rescalings", criterion_twist_laws},
      {7, "classification round trip over 25 seeded random twists", criterion_round_trip},
      {8, "central character transport through the Casimir", criterion_casimir},
      {9, "rank-d pipeline: tensor with the natural representation", criterion_tensor},
      {10, "sl2 fixture: verification, vanishing locus, 3 summands", criterion_sl2},
      {11, "Whittaker local finiteness and the lowering-set dimension", criterion_whittaker},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    std::string note;
    bool ok = false;
    try {
      ok = c.run(note);
    } catch (const std::exception& e) {
      ok = false;
      note = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::printf("[%s] criterion %2d: %s  --  %s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(),
                note.c_str());
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
