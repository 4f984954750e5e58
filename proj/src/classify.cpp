#include "cartanfree/classify.hpp"

#include <algorithm>

#include "cartanfree/errors.hpp"

namespace cartanfree {

namespace {

// Simple system of the root system: e_i - e_{i+1} (i < n) and 2e_n for type C,
// the single positive root for the fixture.
std::vector<Root> simple_system(const SpBasis& basis) {
  const int n = basis.n();
  if (basis.kind() == AlgebraKind::Sl2Fixture) return {Root{{1}}};
  std::vector<Root> out;
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<int> c(n, 0);
    c[i] = 1;
    c[i + 1] = -1;
    out.push_back(Root{c});
  }
  std::vector<int> c(n, 0);
  c[n - 1] = 2;
  out.push_back(Root{c});
  return out;
}

}  // namespace

std::optional<ScalingCertificate> scaling_equivalent(const HFreeModule& m,
                                                     const HFreeModule& m_prime) {
  if (m.d != 1 || m_prime.d != 1) throw InputError("scaling equivalence is for rank-1 tables");
  if (m.n() != m_prime.n() || m.basis->kind() != m_prime.basis->kind()) {
    throw InputError("tables live over different algebras");
  }
  if (!m.covers_all_roots() || !m_prime.covers_all_roots()) {
    throw InputError("action tables must cover the whole root system");
  }
  const SpBasis& basis = *m.basis;
  const int n = basis.n();

  // ratio per root where determined
  std::map<Root, std::optional<Rational>> ratios;
  for (const auto& alpha : basis.roots()) {
    const MultiPoly& p = m.action(alpha).at(0, 0);
    const MultiPoly& q = m_prime.action(alpha).at(0, 0);
    if (p.is_zero() && q.is_zero()) {
      ratios[alpha] = std::nullopt;
      continue;
    }
    if (p.is_zero() || q.is_zero()) return std::nullopt;
    const Rational c = q.terms().begin()->second / p.terms().begin()->second;
    if (q != p.scaled(c)) return std::nullopt;
    ratios[alpha] = c;
  }

  // anchor on the simple system, extend multiplicatively, check everywhere
  const auto simples = simple_system(basis);
  std::vector<Rational> anchor;
  for (const auto& gamma : simples) {
    const auto& r = ratios.at(gamma);
    if (!r) return std::nullopt;  // nothing to anchor the certificate on
    anchor.push_back(*r);
  }
  RatMatrix gmat(n, n);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) gmat.at(i, k) = simples[k].coords[i];
  }
  const auto gmat_inv = gmat.inverse();
  if (!gmat_inv) throw InternalError("simple system is degenerate");

  ScalingCertificate cert;
  for (const auto& alpha : basis.roots()) {
    // integer coordinates of alpha in the simple system
    std::vector<long> coords(n);
    for (int k = 0; k < n; ++k) {
      Rational acc(0);
      for (int i = 0; i < n; ++i) acc += gmat_inv->at(k, i) * alpha.coords[i];
      acc.canonicalize();
      if (!is_integer(acc)) throw InternalError("root outside the root lattice");
      coords[k] = to_long(acc);
    }
    Rational expected(1);
    for (int k = 0; k < n; ++k) {
      if (coords[k] != 0) expected *= pow_int(anchor[k], coords[k]);
    }
    expected.canonicalize();
    const auto& r = ratios.at(alpha);
    if (r && cmp(*r, expected) != 0) return std::nullopt;
    cert.c.emplace(alpha, expected);
  }

  // rational witness c_i with c_alpha = prod c_i^{alpha_i}, when it exists
  auto try_witness = [&](const Rational& c1) -> std::optional<std::vector<Rational>> {
    std::vector<Rational> w(n);
    w[0] = c1;
    for (int j = 1; j < n; ++j) {
      std::vector<int> c(n, 0);
      c[0] = 1;
      c[j] = -1;
      w[j] = c1 / cert.c.at(Root{c});
      w[j].canonicalize();
    }
    for (const auto& alpha : basis.roots()) {
      Rational prod(1);
      for (int i = 0; i < n; ++i) {
        if (alpha.coords[i] != 0) prod *= pow_int(w[i], alpha.coords[i]);
      }
      if (cmp(prod, cert.c.at(alpha)) != 0) return std::nullopt;
    }
    return w;
  };
  if (basis.kind() == AlgebraKind::Sl2Fixture) {
    cert.witness = try_witness(cert.c.at(Root{{1}}));
  } else {
    std::vector<int> long1(n, 0);
    long1[0] = 2;
    const auto r = exact_sqrt(cert.c.at(Root{long1}));
    if (r) {
      cert.witness = try_witness(*r);
      if (!cert.witness) cert.witness = try_witness(-*r);
    }
  }
  return cert;
}

std::vector<HalfSpaceSign> min_submodule_support_signs(const HFreeModule& m, const Box& box) {
  if (m.d != 1) throw InputError("minimal-support analysis is for rank-1 tables");
  if (m.basis->kind() != AlgebraKind::SpTypeC) {
    throw InputError("minimal-support analysis needs the sp(2n) basis");
  }
  const int n = m.n();
  const WeightPoint l0 = lambda0(n);
  for (int i = 0; i < n; ++i) {
    if (l0[i] - box.lo[i] < 3 || box.hi[i] - l0[i] < 3) {
      throw ResourceError("box too small: need at least 3 lattice steps around lambda0");
    }
  }
  const SupportGraph g = support_graph(CoherentAction(m), l0, box);
  const ComponentDag dag = composition_components(g, /*interior_only=*/true);
  if (dag.count == 0) throw ResourceError("no interior nodes; enlarge the box");
  const auto sinks = dag.sinks();
  if (sinks.size() != 1) {
    throw ResourceError("minimal submodule not unique on this box (" +
                        std::to_string(sinks.size()) + " sinks); enlarge the box");
  }
  const auto membership = dag.members();
  const auto& sink_nodes = membership[sinks[0]];
  std::vector<HalfSpaceSign> signs(n);
  for (int i = 0; i < n; ++i) {
    bool any_pos = false, any_neg = false;
    for (int v : sink_nodes) {
      const int s = sign_of(g.nodes[v][i]);
      if (s > 0) any_pos = true;
      if (s < 0) any_neg = true;
      if (s == 0) throw ResourceError("support touches a wall; cannot assign half-space");
    }
    if (any_pos && any_neg) {
      throw ResourceError("minimal support straddles coordinate " + std::to_string(i + 1) +
                          "; enlarge the box");
    }
    signs[i] = any_pos ? HalfSpaceSign::Plus : HalfSpaceSign::Minus;
  }
  return signs;
}

CanonicalizationResult canonicalize(const HFreeModule& m) {
  if (m.d != 1) throw InputError("canonicalization is for rank-1 tables");
  if (m.basis->kind() != AlgebraKind::SpTypeC) {
    throw InputError("canonicalization needs the sp(2n) basis");
  }
  if (!verify_relations(m).ok()) {
    throw InputError("table does not define a module; run verify first");
  }
  const int n = m.n();
  const Box box = Box::centered(lambda0(n), rat(9, 2));
  const auto signs = min_submodule_support_signs(m, box);

  CanonicalizationResult result;
  HFreeModule cur = m;
  for (int i = 0; i < n; ++i) {
    if (signs[i] != HalfSpaceSign::Plus) continue;
    result.omega.push_back(i + 1);
    const AutomorphismTable phi = weyl_twist_auto(m.basis, i + 1);
    TwistStep step;
    step.k = i + 1;
    for (const auto& alpha : m.basis->roots()) {
      const auto img = phi.root_image(alpha);
      if (!img) throw InternalError("Weyl twist does not permute root spaces");
      step.root_signs.emplace(alpha, img->second);
    }
    result.twists.push_back(std::move(step));
    cur = twist(cur, phi);
  }

  auto cert = scaling_equivalent(make_M0(n), cur);
  if (cert) {
    result.scaling = std::move(*cert);
    result.verdict = true;
  } else {
    result.verdict = false;
    result.message =
        "normalized table is not a rescaling of the canonical rank-1 table: "
        "this contradicts the classification; either the input does not define "
        "a module or this is a counterexample worth reporting";
  }
  return result;
}

HFreeModule replay(const HFreeModule& m, const CanonicalizationResult& result) {
  HFreeModule cur = m;
  for (const auto& step : result.twists) {
    cur = twist(cur, weyl_twist_auto(cur.basis, step.k));
  }
  std::map<Root, Rational> inverse;
  for (const auto& [alpha, c] : result.scaling.c) {
    inverse.emplace(alpha, Rational(1) / c);
  }
  return scale_actions(cur, inverse);
}

}  // namespace cartanfree
