#include "cartanfree/json_io.hpp"

#include <fstream>

#include "cartanfree/errors.hpp"

namespace cartanfree {

Json poly_to_json(const MultiPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) {
    out.push_back({{"exponents", e}, {"coeff", rational_str(c)}});
  }
  return out;
}

MultiPoly poly_from_json(const Json& j, int nvars) {
  if (!j.is_array()) throw InputError("polynomial must be a JSON array of terms");
  MultiPoly p(nvars);
  for (const auto& term : j) {
    if (!term.contains("exponents") || !term.contains("coeff")) {
      throw InputError("polynomial term needs 'exponents' and 'coeff'");
    }
    Exponents e = term.at("exponents").get<std::vector<int>>();
    if (static_cast<int>(e.size()) != nvars) throw InputError("exponent vector length mismatch");
    for (int v : e) {
      if (v < 0) throw InputError("negative exponent in polynomial");
    }
    Rational c;
    const auto& cj = term.at("coeff");
    if (cj.is_string()) {
      c = parse_rational(cj.get<std::string>());
    } else if (cj.is_number_integer()) {
      c = rat(cj.get<long>());
    } else {
      throw InputError("polynomial coefficient must be a string \"p/q\" or an integer");
    }
    p.add_term(e, c);
  }
  return p;
}

Json module_to_json(const HFreeModule& m) {
  Json actions = Json::array();
  for (const auto& alpha : m.basis->roots()) {
    Json rows = Json::array();
    const PolyMatrix& a = m.action(alpha);
    for (int r = 0; r < a.rows(); ++r) {
      Json row = Json::array();
      for (int c = 0; c < a.cols(); ++c) row.push_back(poly_to_json(a.at(r, c)));
      rows.push_back(std::move(row));
    }
    actions.push_back({{"root", alpha.coords}, {"matrix", std::move(rows)}});
  }
  return {{"algebra", m.basis->kind() == AlgebraKind::Sl2Fixture ? "sl2" : "sp"},
          {"n", m.n()},
          {"d", m.d},
          {"actions", std::move(actions)}};
}

HFreeModule module_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("module file must be a JSON object");
  if (!j.contains("n") || !j.contains("d") || !j.contains("actions")) {
    throw InputError("module needs 'n', 'd' and 'actions'");
  }
  const int n = j.at("n").get<int>();
  const int d = j.at("d").get<int>();
  if (n < 1 || d < 1) throw InputError("module needs n >= 1 and d >= 1");
  std::string algebra = j.value("algebra", "sp");
  HFreeModule m;
  if (algebra == "sp") {
    m.basis = std::make_shared<SpBasis>(SpBasis::sp2n(n));
  } else if (algebra == "sl2") {
    if (n != 1) throw InputError("the sl2 fixture has n = 1");
    m.basis = std::make_shared<SpBasis>(SpBasis::sl2_fixture());
  } else {
    throw InputError("unknown algebra '" + algebra + "' (use \"sp\" or \"sl2\")");
  }
  m.d = d;
  for (const auto& entry : j.at("actions")) {
    if (!entry.contains("root") || !entry.contains("matrix")) {
      throw InputError("action entry needs 'root' and 'matrix'");
    }
    Root alpha{entry.at("root").get<std::vector<int>>()};
    if (static_cast<int>(alpha.coords.size()) != n) throw InputError("root length mismatch");
    if (!m.basis->is_root(alpha)) throw InputError("not a root: " + alpha.label());
    const auto& rows = entry.at("matrix");
    if (!rows.is_array() || static_cast<int>(rows.size()) != d) {
      throw InputError("action matrix must be d x d");
    }
    PolyMatrix a(d, d, n);
    for (int r = 0; r < d; ++r) {
      const auto& row = rows.at(r);
      if (!row.is_array() || static_cast<int>(row.size()) != d) {
        throw InputError("action matrix must be d x d");
      }
      for (int c = 0; c < d; ++c) a.at(r, c) = poly_from_json(row.at(c), n);
    }
    if (!m.actions.emplace(alpha, std::move(a)).second) {
      throw InputError("duplicate action for root " + alpha.label());
    }
  }
  if (!m.covers_all_roots()) throw InputError("action table must cover the whole root system");
  return m;
}

HFreeModule load_module_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open module file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw InputError("JSON parse error in " + path + ": " + e.what());
  }
  return module_from_json(j);
}

Json basis_to_json(const SpBasis& basis) {
  Json elements = Json::array();
  for (const auto& el : basis.elements()) {
    Json mat = Json::array();
    for (int r = 0; r < el.matrix.rows(); ++r) {
      Json row = Json::array();
      for (int c = 0; c < el.matrix.cols(); ++c) row.push_back(rational_str(el.matrix.at(r, c)));
      mat.push_back(std::move(row));
    }
    Json entry = {{"label", el.label}, {"matrix", std::move(mat)}};
    if (el.root) {
      entry["root"] = el.root->coords;
    } else {
      entry["root"] = nullptr;
    }
    elements.push_back(std::move(entry));
  }
  Json brackets = Json::array();
  for (int a = 0; a < basis.dim(); ++a) {
    for (int b = a + 1; b < basis.dim(); ++b) {
      const auto coords = basis.bracket_expand(a, b);
      Json comb = Json::array();
      for (int k = 0; k < basis.dim(); ++k) {
        if (sgn(coords[k]) != 0) {
          comb.push_back({{"element", basis.element(k).label},
                          {"coeff", rational_str(coords[k])}});
        }
      }
      if (!comb.empty()) {
        brackets.push_back({{"a", basis.element(a).label},
                            {"b", basis.element(b).label},
                            {"bracket", std::move(comb)}});
      }
    }
  }
  return {{"type", basis.kind() == AlgebraKind::Sl2Fixture ? "sl2" : "sp"},
          {"n", basis.n()},
          {"dim", basis.dim()},
          {"elements", std::move(elements)},
          {"structure_constants", std::move(brackets)}};
}

Json report_to_json(const VerificationReport& report, const SpBasis& basis) {
  Json failures = Json::array();
  for (const auto* f : report.failures()) {
    failures.push_back({{"a", basis.element(f->a).label},
                        {"b", basis.element(f->b).label},
                        {"residual", f->residual.str()}});
  }
  return {{"pairs_checked", report.checks.size()},
          {"ok", report.ok()},
          {"failures", std::move(failures)}};
}

std::string report_to_text(const VerificationReport& report, const SpBasis& basis) {
  std::string out;
  out += "checked " + std::to_string(report.checks.size()) + " basis pairs\n";
  for (const auto* f : report.failures()) {
    out += "FAIL [" + basis.element(f->a).label + ", " + basis.element(f->b).label +
           "]  residual: " + f->residual.str() + "\n";
  }
  out += report.ok() ? "all relations hold\n"
                     : std::to_string(report.failures().size()) + " pair(s) failed\n";
  return out;
}

namespace {

Json rat_matrix_to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(rational_str(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json weight_to_json(const WeightPoint& w) {
  Json out = Json::array();
  for (const auto& x : w) out.push_back(rational_str(x));
  return out;
}

Json dag_to_json(const ComponentDag& dag) {
  Json edges = Json::array();
  for (int c = 0; c < dag.count; ++c) {
    for (int s : dag.succ[c]) edges.push_back({c, s});
  }
  return {{"count", dag.count},
          {"component_of", dag.component_of},
          {"dag_edges", std::move(edges)},
          {"interior_only", dag.interior_only}};
}

}  // namespace

Json support_graph_to_json(const SupportGraph& g, const ComponentDag& full,
                           const ComponentDag& interior) {
  Json nodes = Json::array();
  for (const auto& w : g.nodes) nodes.push_back(weight_to_json(w));
  Json edges = Json::array();
  for (const auto& e : g.edges) {
    edges.push_back({{"from", e.from},
                     {"to", e.to},
                     {"root", e.root.coords},
                     {"coeff", rat_matrix_to_json(e.coeff)}});
  }
  return {{"mu", weight_to_json(g.mu)},
          {"box_lo", weight_to_json(g.box.lo)},
          {"box_hi", weight_to_json(g.box.hi)},
          {"nodes", std::move(nodes)},
          {"interior", g.interior},
          {"edges", std::move(edges)},
          {"components", dag_to_json(full)},
          {"interior_components", dag_to_json(interior)}};
}

std::string support_graph_to_dot(const SupportGraph& g,
                                 const CoherentAction* zero_edge_source) {
  std::string out = "digraph support {\n";
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    out += "  \"" + weight_str(g.nodes[v]) + "\"";
    if (!g.interior[v]) out += " [color=gray, fontcolor=gray]";
    out += ";\n";
  }
  for (const auto& e : g.edges) {
    out += "  \"" + weight_str(g.nodes[e.from]) + "\" -> \"" + weight_str(g.nodes[e.to]) +
           "\" [label=\"" + e.root.label() + "\"];\n";
  }
  if (zero_edge_source) {
    const auto& m = zero_edge_source->module();
    for (std::size_t u = 0; u < g.nodes.size(); ++u) {
      for (const auto& alpha : m.basis->roots()) {
        const WeightPoint target = weight_add_root(g.nodes[u], alpha);
        if (!g.box.contains(target) || g.node_index(target) < 0) continue;
        if (zero_edge_source->coefficient(alpha, g.nodes[u]).is_zero()) {
          out += "  \"" + weight_str(g.nodes[u]) + "\" -> \"" + weight_str(target) +
                 "\" [label=\"" + alpha.label() + ":0\", style=dashed, color=gray];\n";
        }
      }
    }
  }
  out += "}\n";
  return out;
}

Json certificate_to_json(const ScalingCertificate& cert) {
  Json scalars = Json::array();
  for (const auto& [alpha, c] : cert.c) {
    scalars.push_back({{"root", alpha.coords}, {"value", rational_str(c)}});
  }
  Json out = {{"c", std::move(scalars)}};
  if (cert.witness) {
    Json w = Json::array();
    for (const auto& x : *cert.witness) w.push_back(rational_str(x));
    out["witness"] = std::move(w);
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json canonicalization_to_json(const CanonicalizationResult& result) {
  Json twists = Json::array();
  for (const auto& step : result.twists) {
    Json signs = Json::array();
    for (const auto& [alpha, s] : step.root_signs) {
      signs.push_back({{"root", alpha.coords}, {"sign", rational_str(s)}});
    }
    twists.push_back({{"weyl", step.k}, {"signs", std::move(signs)}});
  }
  Json out = {{"omega", result.omega},
              {"twists", std::move(twists)},
              {"scaling", certificate_to_json(result.scaling)},
              {"verdict", result.verdict}};
  if (!result.message.empty()) out["message"] = result.message;
  return out;
}

}  // namespace cartanfree
