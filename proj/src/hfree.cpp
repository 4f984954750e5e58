#include "cartanfree/hfree.hpp"

#include <algorithm>
#include <set>

#include "cartanfree/errors.hpp"

namespace cartanfree {

const PolyMatrix& HFreeModule::action(const Root& alpha) const {
  auto it = actions.find(alpha);
  if (it == actions.end()) throw InputError("no action stored for root " + alpha.label());
  return it->second;
}

PolyShiftOp HFreeModule::root_op(const Root& alpha) const {
  return {action(alpha), alpha.coords};
}

PolyShiftOp HFreeModule::element_op(int basis_index) const {
  const BasisElement& el = basis->element(basis_index);
  if (el.root) return root_op(*el.root);
  // Cartan: find its index i and act by multiplication with h_i.
  for (int i = 0; i < basis->n(); ++i) {
    if (basis->cartan_index(i) == basis_index) {
      return {PolyMatrix::scalar(d, MultiPoly::variable(n(), i)), ShiftVector(n(), 0)};
    }
  }
  throw InternalError("basis element is neither root vector nor Cartan");
}

bool HFreeModule::covers_all_roots() const {
  if (actions.size() != basis->roots().size()) return false;
  for (const auto& alpha : basis->roots()) {
    if (!actions.count(alpha)) return false;
  }
  return true;
}

HFreeModule make_M0(int n) {
  if (n < 1) throw InputError("M0 requires n >= 1");
  HFreeModule m;
  m.basis = std::make_shared<SpBasis>(SpBasis::sp2n(n));
  m.d = 1;
  auto poly1x1 = [&](const MultiPoly& p) {
    PolyMatrix a(1, 1, n);
    a.at(0, 0) = p;
    return a;
  };
  const Rational half = rat(1, 2), three_half = rat(3, 2);
  for (const auto& alpha : m.basis->roots()) {
    // classify the root by its coordinate pattern
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
    MultiPoly p(n);
    if (pos2 >= 0) {
      p = linear_factor(n, pos2, -half) * linear_factor(n, pos2, -three_half);
    } else if (neg2 >= 0) {
      p = MultiPoly::constant(n, rat(1));
    } else if (plus.size() == 2) {
      p = linear_factor(n, plus[0], -half) * linear_factor(n, plus[1], -half);
    } else if (minus.size() == 2) {
      p = MultiPoly::constant(n, rat(1));
    } else if (plus.size() == 1 && minus.size() == 1) {
      p = linear_factor(n, plus[0], -half);
    } else {
      throw InternalError("unexpected root shape " + alpha.label());
    }
    m.actions.emplace(alpha, poly1x1(p));
  }
  return m;
}

HFreeModule make_sl2_example() {
  HFreeModule m;
  m.basis = std::make_shared<SpBasis>(SpBasis::sl2_fixture());
  m.d = 1;
  PolyMatrix e(1, 1, 1), f(1, 1, 1);
  e.at(0, 0) = MultiPoly::variable(1, 0);
  f.at(0, 0) = -MultiPoly::variable(1, 0);
  m.actions.emplace(Root{{1}}, e);
  m.actions.emplace(Root{{-1}}, f);
  return m;
}

bool VerificationReport::ok() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

std::vector<const PairCheck*> VerificationReport::failures() const {
  std::vector<const PairCheck*> out;
  for (const auto& c : checks) {
    if (!c.pass) out.push_back(&c);
  }
  return out;
}

VerificationReport verify_relations(const HFreeModule& m) {
  if (!m.covers_all_roots()) {
    throw InputError("action table must cover the whole root system");
  }
  const SpBasis& basis = *m.basis;
  const int dim = basis.dim();
  VerificationReport report;
  for (int a = 0; a < dim; ++a) {
    const OpSum op_a = OpSum::single(m.element_op(a));
    for (int b = a + 1; b < dim; ++b) {
      const OpSum op_b = OpSum::single(m.element_op(b));
      OpSum lhs = op_a.composed_with(op_b);
      lhs -= op_b.composed_with(op_a);
      const auto coords = basis.bracket_expand(a, b);
      OpSum rhs(m.d, m.n());
      for (int k = 0; k < dim; ++k) {
        if (sgn(coords[k]) == 0) continue;
        PolyShiftOp term = m.element_op(k);
        term.coeff = term.coeff.scaled(coords[k]);
        rhs.accumulate(term);
      }
      PairCheck check{a, b, true, lhs - rhs};
      check.pass = check.residual.is_zero();
      report.checks.push_back(std::move(check));
    }
  }
  return report;
}

OpSum word_action(const HFreeModule& m, const std::vector<WordTerm>& word) {
  OpSum acc(m.d, m.n());
  for (const auto& term : word) {
    PolyShiftOp op = PolyShiftOp::identity(m.d, m.n());
    for (int factor : term.factors) {
      if (factor < 0 || factor >= m.basis->dim()) throw InputError("word factor out of range");
      op = op.compose(m.element_op(factor));
    }
    op.coeff = op.coeff.scaled(term.coeff);
    acc.accumulate(op);
  }
  return acc;
}

OpSum word_action(const HFreeModule& m, const CasimirElement& cas) {
  std::vector<WordTerm> word;
  word.reserve(cas.terms.size());
  for (const auto& t : cas.terms) word.push_back({t.coeff, {t.first, t.second}});
  return word_action(m, word);
}

HFreeModule twist(const HFreeModule& m, const AutomorphismTable& tau) {
  if (!tau.h_stable()) throw InputError("twist requires an h-stable automorphism");
  if (tau.basis().kind() != m.basis->kind() || tau.basis().n() != m.n()) {
    throw InputError("automorphism belongs to a different algebra");
  }
  const int n = m.n();
  const RatMatrix w = tau.cartan_matrix();
  const auto w_inv = w.inverse();
  if (!w_inv) throw InternalError("Cartan restriction of an automorphism is singular");

  // Psi(h_i) = tau(h_i); the table below is conjugated by Psi so the
  // convention "h_i acts by multiplication with h_i" survives the twist.
  std::vector<MultiPoly> psi_inv(n, MultiPoly(n));
  for (int i = 0; i < n; ++i) {
    MultiPoly img(n);
    for (int j = 0; j < n; ++j) {
      if (sgn(w_inv->at(j, i)) != 0) {
        img += MultiPoly::variable(n, j).scaled(w_inv->at(j, i));
      }
    }
    psi_inv[i] = img;
  }

  HFreeModule out;
  out.basis = m.basis;
  out.d = m.d;
  std::set<std::vector<int>> seen_sources;
  for (const auto& alpha : m.basis->roots()) {
    auto img = tau.root_image(alpha);
    if (!img) throw InputError("automorphism does not permute root spaces");
    const auto& [beta, c] = *img;
    // alpha = w^T beta must hold for the renormalized shift to be sigma_alpha
    for (int i = 0; i < n; ++i) {
      Rational acc(0);
      for (int j = 0; j < n; ++j) acc += w.at(j, i) * beta.coords[j];
      if (cmp(acc, Rational(alpha.coords[i])) != 0) {
        throw InternalError("twist shift renormalization mismatch at " + alpha.label());
      }
    }
    if (!seen_sources.insert(beta.coords).second) {
      throw InternalError("automorphism root map is not injective");
    }
    out.actions.emplace(alpha, m.action(beta).substitute(psi_inv).scaled(c));
  }
  return out;
}

HFreeModule scale_actions(const HFreeModule& m, const std::map<Root, Rational>& c) {
  HFreeModule out;
  out.basis = m.basis;
  out.d = m.d;
  for (const auto& [alpha, a] : m.actions) {
    auto it = c.find(alpha);
    if (it == c.end()) throw InputError("missing scalar for root " + alpha.label());
    if (sgn(it->second) == 0) throw InputError("zero scalar for root " + alpha.label());
    out.actions.emplace(alpha, a.scaled(it->second));
  }
  return out;
}

bool whittaker_locally_finite(const HFreeModule& m) {
  if (m.d != 1) throw InputError("Whittaker check is defined for rank 1 tables");
  for (const auto& [alpha, a] : m.actions) {
    bool lowering = true;
    for (int v : alpha.coords) {
      if (v > 0) lowering = false;
    }
    if (!lowering) continue;
    if (a.at(0, 0).total_degree() > 0) return false;
  }
  return true;
}

bool simplicity_probe(const HFreeModule& m, const MultiPoly& f, int max_steps) {
  if (m.d != 1) throw InputError("simplicity probe is defined for rank 1 tables");
  if (m.basis->kind() != AlgebraKind::SpTypeC) {
    throw InputError("simplicity probe uses the sp(2n) lowering operators");
  }
  if (f.is_zero()) throw InputError("simplicity probe needs a nonzero polynomial");
  if (f.nvars() != m.n()) throw InputError("polynomial variable count mismatch");
  const int n = m.n();
  MultiPoly cur = f;
  for (int step = 0; step <= max_steps; ++step) {
    if (cur.is_zero()) return false;
    if (cur.is_constant()) return true;
    int var = 0;
    for (int i = 1; i < n; ++i) {
      if (cur.degree_in(i) > cur.degree_in(var)) var = i;
    }
    std::vector<int> alpha_coords(n, 0);
    alpha_coords[var] = -2;
    const PolyShiftOp lower = m.root_op(Root{alpha_coords});
    // (1 - X_{-2e_v}) applied to cur
    cur = cur - lower.coeff.at(0, 0) * cur.shifted(lower.shift);
  }
  return false;
}

HFreeModule tensor_natural(const HFreeModule& m) {
  if (m.basis->kind() != AlgebraKind::SpTypeC) {
    throw InputError("tensor with the natural representation needs the sp(2n) basis");
  }
  const int n = m.n();
  const int two_n = 2 * n;
  const int big_d = m.d * two_n;

  auto weight_of = [&](int j) {
    std::vector<int> mu(n, 0);
    if (j < n) {
      mu[j] = 1;
    } else {
      mu[j - n] = -1;
    }
    return mu;
  };

  HFreeModule out;
  out.basis = m.basis;
  out.d = big_d;
  for (const auto& alpha : m.basis->roots()) {
    const RatMatrix& nat = m.basis->element(m.basis->index_of_root(alpha)).matrix;
    const PolyMatrix& a = m.action(alpha);
    PolyMatrix big(big_d, big_d, n);
    for (int jp = 0; jp < two_n; ++jp) {
      const auto mu_jp = weight_of(jp);
      // diagonal block: the module action, shifted into component jp's frame
      const PolyMatrix shifted_a = a.shifted(mu_jp);
      for (int ap = 0; ap < m.d; ++ap) {
        for (int aa = 0; aa < m.d; ++aa) {
          big.at(jp * m.d + ap, jp * m.d + aa) += shifted_a.at(ap, aa);
        }
      }
      // off-diagonal: the natural representation moving basis vectors
      for (int j = 0; j < two_n; ++j) {
        const Rational& entry = nat.at(jp, j);
        if (sgn(entry) == 0) continue;
        const auto mu_j = weight_of(j);
        for (int i = 0; i < n; ++i) {
          if (mu_jp[i] - mu_j[i] != alpha.coords[i]) {
            throw InternalError("natural representation weight mismatch");
          }
        }
        const MultiPoly cpoly = MultiPoly::constant(n, entry);
        for (int aa = 0; aa < m.d; ++aa) {
          big.at(jp * m.d + aa, j * m.d + aa) += cpoly;
        }
      }
    }
    out.actions.emplace(alpha, std::move(big));
  }
  return out;
}

}  // namespace cartanfree
