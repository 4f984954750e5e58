// Command-line surface for building, verifying, analyzing and classifying
// rank-d action tables and their weight-space images.
//
// Exit codes: 0 success / all checks pass; 1 mathematical failure (a relation
// or classification check failed); 2 input error; 3 resource limit.

#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cartanfree/classify.hpp"
#include "cartanfree/coherent.hpp"
#include "cartanfree/errors.hpp"
#include "cartanfree/hfree.hpp"
#include "cartanfree/json_io.hpp"

using namespace cartanfree;

namespace {

struct SourceOpts {
  std::string builtin = "m0";
  std::string table;
  int n = 2;
  std::vector<std::string> twists;
};

void add_source_opts(CLI::App* cmd, SourceOpts& opts) {
  cmd->add_option("--builtin", opts.builtin, "builtin table: m0 | sl2")
      ->check(CLI::IsMember({"m0", "sl2"}));
  cmd->add_option("--table", opts.table, "path to a module JSON file");
  cmd->add_option("--n", opts.n, "rank of sp(2n) for --builtin m0");
  cmd->add_option("--twist", opts.twists,
                  "apply a twist first: weyl:K or diag:c1,c2,... (repeatable)");
}

HFreeModule apply_twist_spec(HFreeModule m, const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw InputError("twist spec needs 'weyl:K' or 'diag:...'");
  const std::string kind = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  if (kind == "weyl") {
    int k = 0;
    try {
      k = std::stoi(arg);
    } catch (const std::exception&) {
      throw InputError("bad Weyl twist index: " + arg);
    }
    return twist(m, weyl_twist_auto(m.basis, k));
  }
  if (kind == "diag") {
    return twist(m, AutomorphismTable::diagonal(m.basis, parse_rational_csv(arg)));
  }
  throw InputError("unknown twist kind: " + kind);
}

HFreeModule load_source(const SourceOpts& opts) {
  HFreeModule m;
  if (!opts.table.empty()) {
    m = load_module_file(opts.table);
  } else if (opts.builtin == "m0") {
    m = make_M0(opts.n);
  } else {
    m = make_sl2_example();
  }
  for (const auto& spec : opts.twists) m = apply_twist_spec(std::move(m), spec);
  return m;
}

std::size_t node_cap_from_env(std::size_t cli_value, bool cli_given) {
  if (cli_given) return cli_value;
  if (const char* env = std::getenv("CARTANFREE_NODE_CAP")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw InputError("CARTANFREE_NODE_CAP is not a positive integer");
    }
    throw InputError("CARTANFREE_NODE_CAP is not a positive integer");
  }
  return kDefaultNodeCap;
}

// Empty text is the identity word. Factors are comma-separated basis labels.
std::vector<WordTerm> parse_word(const std::string& text, const SpBasis& basis) {
  std::vector<int> factors;
  std::string token;
  std::stringstream ss(text);
  while (std::getline(ss, token, ',')) {
    std::string trimmed;
    for (char c : token) {
      if (c != ' ') trimmed.push_back(c);
    }
    if (trimmed.empty()) throw InputError("empty word factor");
    const int idx = basis.index_of_label(trimmed);
    if (idx < 0) throw InputError("unknown basis element: " + trimmed);
    factors.push_back(idx);
  }
  return {WordTerm{rat(1), factors}};
}

int run_verify(const SourceOpts& src, const std::string& format) {
  const HFreeModule m = load_source(src);
  const VerificationReport report = verify_relations(m);
  if (format == "json") {
    std::cout << report_to_json(report, *m.basis).dump(2) << "\n";
  } else {
    std::cout << report_to_text(report, *m.basis);
  }
  return report.ok() ? 0 : 1;
}

struct SupportOpts {
  std::string mu_csv;
  std::string radius = "9/2";
  bool semisimplified = false;
  bool show_zeros = false;
  std::string format = "text";
  std::size_t node_cap = kDefaultNodeCap;
  bool node_cap_given = false;
};

int run_support(const SourceOpts& src, const SupportOpts& so) {
  const HFreeModule m = load_source(src);
  const int n = m.n();
  const WeightPoint mu = so.mu_csv.empty() ? lambda0(n) : parse_rational_csv(so.mu_csv);
  if (static_cast<int>(mu.size()) != n) throw InputError("--mu needs " + std::to_string(n) + " coordinates");
  CoherentAction action(m);
  if (so.semisimplified) action = semisimplify(action);
  const Box box = Box::centered(mu, parse_rational(so.radius));
  const std::size_t cap = node_cap_from_env(so.node_cap, so.node_cap_given);
  const SupportGraph g = support_graph(action, mu, box, cap);
  const ComponentDag full = composition_components(g, false);
  const ComponentDag interior = composition_components(g, true);

  if (so.format == "dot") {
    std::cout << support_graph_to_dot(g, so.show_zeros ? &action : nullptr);
    return 0;
  }
  if (so.format == "json") {
    Json j = support_graph_to_json(g, full, interior);
    // half-space report: for each coordinate in the half-integer coset,
    // whether the box nodes of S_{-e_i} are closed under the module action
    Json half = Json::array();
    for (int i = 0; i < n; ++i) {
      if (!coset_test(mu, i)) continue;
      std::set<int> seeds;
      for (std::size_t v = 0; v < g.nodes.size(); ++v) {
        if (sgn(g.nodes[v][i]) < 0) seeds.insert(static_cast<int>(v));
      }
      const ClosureResult closure = submodule_closure(g, seeds);
      bool closed = true;
      for (int v : closure.nodes) {
        if (!seeds.count(v)) closed = false;
      }
      half.push_back({{"i", i + 1},
                      {"closed_negative_halfspace", closed},
                      {"closure_touches_boundary", closure.touches_boundary}});
    }
    j["halfspace_submodules"] = std::move(half);
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::size_t boundary = 0;
  for (bool b : g.interior) {
    if (!b) ++boundary;
  }
  std::cout << "support graph at mu = " << weight_str(mu) << (so.semisimplified ? " (semisimplified)" : "")
            << "\n";
  std::cout << "nodes: " << g.nodes.size() << " (" << boundary
            << " on the boundary), edges: " << g.edges.size() << "\n";
  std::cout << "components: " << full.count << ", interior components: " << interior.count << "\n";
  std::size_t dag_edges = 0;
  for (const auto& s : interior.succ) dag_edges += s.size();
  std::cout << "interior component DAG edges: " << dag_edges << "\n";
  for (int i = 0; i < n; ++i) {
    if (coset_test(mu, i)) {
      std::cout << "coordinate " << i + 1 << ": mu(h_i) in 1/2+Z (half-space submodule expected)\n";
    }
  }
  if (boundary > 0) {
    std::cout << "caveat: statements are trusted on interior nodes only; boundary "
                 "effects are truncation artifacts\n";
  }
  return 0;
}

int run_classify(const SourceOpts& src, int selftest, unsigned seed) {
  if (selftest > 0) {
    std::mt19937 gen(seed);
    std::uniform_int_distribution<int> n_ops(1, 4);
    std::uniform_int_distribution<int> op_kind(0, 1);
    const HFreeModule m0 = load_source(SourceOpts{src.builtin, src.table, src.n, {}});
    std::uniform_int_distribution<int> weyl_k(1, m0.n());
    const std::vector<Rational> pool = {rat(1),  rat(-1), rat(2),     rat(-2),
                                        rat(3),  rat(-3), rat(1, 2),  rat(-1, 2)};
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    int failures = 0;
    for (int run = 0; run < selftest; ++run) {
      HFreeModule m = m0;
      const int ops = n_ops(gen);
      for (int o = 0; o < ops; ++o) {
        if (op_kind(gen) == 0) {
          m = twist(m, weyl_twist_auto(m.basis, weyl_k(gen)));
        } else {
          std::vector<Rational> c(m.n());
          for (int i = 0; i < m.n(); ++i) c[i] = pool[pick(gen)];
          m = twist(m, AutomorphismTable::diagonal(m.basis, c));
        }
      }
      const CanonicalizationResult result = canonicalize(m);
      const bool round_trip = result.verdict && module_to_json(replay(m, result)) ==
                                                    module_to_json(make_M0(m.n()));
      std::cout << "run " << run + 1 << ": verdict=" << (result.verdict ? "true" : "false")
                << " round_trip=" << (round_trip ? "ok" : "FAILED") << "\n";
      if (!round_trip) ++failures;
    }
    std::cout << (failures == 0 ? "selftest passed\n" : "selftest FAILED\n");
    return failures == 0 ? 0 : 1;
  }
  const HFreeModule m = load_source(src);
  const CanonicalizationResult result = canonicalize(m);
  std::cout << canonicalization_to_json(result).dump(2) << "\n";
  return result.verdict ? 0 : 1;
}

int run_trace(const SourceOpts& src, const std::string& word_text, bool word_given,
              bool use_casimir, const std::string& format) {
  const HFreeModule m = load_source(src);
  MultiPoly tr(m.n());
  if (use_casimir) {
    tr = trace_polynomial(word_action(m, casimir(*m.basis)));
  } else {
    if (!word_given) throw InputError("trace needs --word or --casimir");
    tr = trace_polynomial(m, parse_word(word_text, *m.basis));
  }
  if (format == "json") {
    std::cout << Json{{"trace", tr.str()}, {"terms", poly_to_json(tr)}}.dump(2) << "\n";
  } else {
    std::cout << tr.str() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with U(h)-free sp(2n)-modules and their coherent images"};
  app.require_subcommand(1);

  SourceOpts verify_src;
  std::string verify_format = "text";
  CLI::App* cmd_verify = app.add_subcommand("verify", "check the defining relations of a table");
  add_source_opts(cmd_verify, verify_src);
  cmd_verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));

  SourceOpts support_src;
  SupportOpts support_opts;
  CLI::App* cmd_support =
      app.add_subcommand("support", "support graph and submodule components of W(M)[mu]");
  add_source_opts(cmd_support, support_src);
  cmd_support->add_option("--mu", support_opts.mu_csv, "base weight, comma-separated rationals");
  cmd_support->add_option("--radius", support_opts.radius, "box radius around mu (default 9/2)");
  cmd_support->add_flag("--semisimplify", support_opts.semisimplified,
                        "apply the degree-1 semisimplification first");
  cmd_support->add_flag("--show-zeros", support_opts.show_zeros,
                        "draw vanished coefficients dashed (dot format)");
  cmd_support->add_option("--format", support_opts.format)
      ->check(CLI::IsMember({"text", "json", "dot"}));
  auto* cap_opt = cmd_support->add_option("--node-cap", support_opts.node_cap);

  SourceOpts classify_src;
  int selftest = 0;
  unsigned seed = 0;
  CLI::App* cmd_classify =
      app.add_subcommand("classify", "canonicalize a rank-1 table against the standard one");
  add_source_opts(cmd_classify, classify_src);
  cmd_classify->add_option("--selftest", selftest,
                           "classify N random twists of the base table instead");
  cmd_classify->add_option("--seed", seed, "seed for --selftest");

  SourceOpts trace_src;
  std::string word_text;
  bool use_casimir = false;
  std::string trace_format = "text";
  CLI::App* cmd_trace = app.add_subcommand("trace", "trace polynomial of a zero-shift word");
  add_source_opts(cmd_trace, trace_src);
  auto* word_opt = cmd_trace->add_option(
      "--word", word_text, "comma-separated basis labels, e.g. X(2e1),X(-2e1); empty = identity");
  cmd_trace->add_flag("--casimir", use_casimir, "use the Casimir element as the word");
  cmd_trace->add_option("--format", trace_format)->check(CLI::IsMember({"text", "json"}));

  SourceOpts twist_src;
  CLI::App* cmd_twist = app.add_subcommand("twist", "emit the twisted table as JSON");
  add_source_opts(cmd_twist, twist_src);

  SourceOpts tensor_src;
  CLI::App* cmd_tensor =
      app.add_subcommand("tensor", "tensor with the natural representation, emit JSON");
  add_source_opts(cmd_tensor, tensor_src);

  int dump_n = 2;
  std::string dump_builtin = "m0";
  CLI::App* cmd_dump = app.add_subcommand("dump", "emit the algebra basis as JSON");
  cmd_dump->add_option("--n", dump_n, "rank of sp(2n)");
  cmd_dump->add_option("--builtin", dump_builtin, "m0 (sp basis) | sl2 (fixture)")
      ->check(CLI::IsMember({"m0", "sl2"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_verify->parsed()) return run_verify(verify_src, verify_format);
    if (cmd_support->parsed()) {
      support_opts.node_cap_given = cap_opt->count() > 0;
      return run_support(support_src, support_opts);
    }
    if (cmd_classify->parsed()) return run_classify(classify_src, selftest, seed);
    if (cmd_trace->parsed()) {
      return run_trace(trace_src, word_text, word_opt->count() > 0, use_casimir, trace_format);
    }
    if (cmd_twist->parsed()) {
      std::cout << module_to_json(load_source(twist_src)).dump(2) << "\n";
      return 0;
    }
    if (cmd_tensor->parsed()) {
      std::cout << module_to_json(tensor_natural(load_source(tensor_src))).dump(2) << "\n";
      return 0;
    }
    if (cmd_dump->parsed()) {
      const SpBasis basis =
          dump_builtin == "sl2" ? SpBasis::sl2_fixture() : SpBasis::sp2n(dump_n);
      std::cout << basis_to_json(basis).dump(2) << "\n";
      return 0;
    }
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
