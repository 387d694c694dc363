#include "gqt/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"

#include "gqt/io.hpp"
#include "gqt/selftest.hpp"

namespace gqt {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr const char* kFieldGrammar = "quadext:p:e | prime:p | galois:p:n | gaussian | JSON field object";
constexpr const char* kDocumentGrammar = "a path to a JSON file or an inline JSON object";

Field field_flag(const std::string& flag, const std::string& text) {
  try {
    return parse_field_descriptor(text);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ParseError) throw;
    throw UsageError(flag + ": cannot read field '" + text + "'; expected " + kFieldGrammar);
  }
}

Json document_flag(const std::string& flag, const std::string& arg) {
  const auto start = arg.find_first_not_of(" \t\n");
  if (start != std::string::npos && arg[start] == '{') return parse_json(arg);
  std::ifstream in(arg);
  if (!in) throw UsageError(flag + ": cannot open '" + arg + "'; expected " + kDocumentGrammar);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

struct Options {
  std::string field, x, y, matrix, obs, state, unitary, a, b, from, sentence, primes, f, g, map, seed;
  std::size_t dim = 0;
  unsigned m = 0, levels = 4, expand = 2, max_ext = 1;
  std::uint64_t p = 0;
  bool allow_form_incompatible = false;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact linear algebra and quantum-theory toolkit over fields with involution", "gqt"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--seed", o.seed, "Reserved and rejected: no computation uses randomness");

  // Each subcommand registers its action here.
  std::vector<std::pair<CLI::App*, std::function<Json()>>> actions;
  auto add = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* sub = parent->add_subcommand(name, help);
    return sub;
  };

  auto* field = add(&app, "field", "Field descriptors");
  field->require_subcommand(1);
  auto* info = add(field, "info", "Describe a field");
  info->add_option("--field", o.field, kFieldGrammar)->required();
  actions.emplace_back(info, [&] {
    const Field f = field_flag("--field", o.field);
    return Json{{"field", field_to_json(f)},
                {"name", f.name()},
                {"finite", f.is_finite()},
                {"order", f.is_finite() ? Json(f.order()) : Json(nullptr)},
                {"characteristic", f.characteristic()},
                {"degree", f.degree()},
                {"fixed_order", f.is_finite() ? Json(f.fixed_order()) : Json(nullptr)},
                {"involution_order", f.involution_order()},
                {"generator", f.generator().to_string()}};
  });

  auto* form = add(&app, "form", "Hermitian form <x, y>");
  form->add_option("--x", o.x, kDocumentGrammar)->required();
  form->add_option("--y", o.y, kDocumentGrammar)->required();
  actions.emplace_back(form, [&] {
    const StateVector x = vector_from_json(document_flag("--x", o.x));
    const StateVector y = vector_from_json(document_flag("--y", o.y));
    return Json{{"value", herm_form(x, y).to_string()}};
  });

  auto* ucheck = add(&app, "unitary-check", "Test U* U = I");
  ucheck->add_option("--matrix", o.matrix, kDocumentGrammar)->required();
  actions.emplace_back(ucheck, [&] { return Json{{"unitary", is_unitary(matrix_from_json(document_flag("--matrix", o.matrix)))}}; });

  auto* hcheck = add(&app, "hermitian-check", "Test A* = A and report the characteristic polynomial");
  hcheck->add_option("--matrix", o.matrix, kDocumentGrammar)->required();
  actions.emplace_back(hcheck, [&] {
    const Matrix a = matrix_from_json(document_flag("--matrix", o.matrix));
    Json j{{"hermitian", is_hermitian(a)}};
    if (a.is_square()) {
      const Polynomial p = char_poly(a);
      j["char_poly"] = polynomial_to_json(p);
      j["char_poly_fixed"] = std::all_of(p.coefficients().begin(), p.coefficients().end(),
                                         [](const Element& c) { return is_fixed(c); });
    }
    return j;
  });

  auto* eigen = add(&app, "eigen", "Eigenspaces with eigenvalues in the owner field");
  eigen->add_option("--matrix", o.matrix, kDocumentGrammar)->required();
  actions.emplace_back(eigen, [&] {
    const Matrix a = matrix_from_json(document_flag("--matrix", o.matrix));
    Json j = eigen_to_json(eigen_decompose(a));
    j["char_poly"] = polynomial_to_json(char_poly(a));
    return j;
  });

  auto* meas = add(&app, "measure", "Measure a state against an observable");
  meas->add_option("--obs", o.obs, kDocumentGrammar)->required();
  meas->add_option("--state", o.state, kDocumentGrammar)->required();
  actions.emplace_back(meas, [&] {
    const Observable obs(matrix_from_json(document_flag("--obs", o.obs)));
    return measurement_to_json(measure(obs, vector_from_json(document_flag("--state", o.state))));
  });

  auto* evo = add(&app, "evolve", "Apply a unitary to a state");
  evo->add_option("--unitary", o.unitary, kDocumentGrammar)->required();
  evo->add_option("--state", o.state, kDocumentGrammar)->required();
  actions.emplace_back(evo, [&] {
    const Matrix u = matrix_from_json(document_flag("--unitary", o.unitary));
    const StateVector psi = vector_from_json(document_flag("--state", o.state));
    const StateVector out_state = evolve(u, psi);
    return Json{{"state", vector_to_json(out_state)},
                {"form_before", herm_form(psi, psi).to_string()},
                {"form_after", herm_form(out_state, out_state).to_string()}};
  });

  auto* tensor = add(&app, "tensor", "Kronecker product of two states or two operators");
  tensor->add_option("--a", o.a, kDocumentGrammar)->required();
  tensor->add_option("--b", o.b, kDocumentGrammar)->required();
  actions.emplace_back(tensor, [&] {
    const Matrix a = matrix_from_json(document_flag("--a", o.a));
    const Matrix b = matrix_from_json(document_flag("--b", o.b));
    if (a.cols() == 1 && b.cols() == 1) {
      return bipartite_to_json(tensor_state(StateVector(a.field(), a.entries()), StateVector(b.field(), b.entries())));
    }
    return matrix_to_json(tensor_op(a, b));
  });

  auto* schmidt = add(&app, "schmidt", "Product-state test for a bipartite state");
  schmidt->add_option("--state", o.state, kDocumentGrammar)->required();
  actions.emplace_back(schmidt, [&] { return product_to_json(is_product(bipartite_from_json(document_flag("--state", o.state)))); });

  auto* noclone = add(&app, "noclone", "Rank-mismatch witness against a linear cloner");
  noclone->add_option("--field", o.field, kFieldGrammar)->required();
  noclone->add_option("--dim", o.dim, "Local dimension, at least 2")->required();
  actions.emplace_back(noclone, [&] { return no_cloning_to_json(no_cloning_witness(field_flag("--field", o.field), o.dim)); });

  auto* embed = add(&app, "embed", "Involution-compatible embedding into the degree-m extension");
  embed->add_option("--from", o.from, kFieldGrammar)->required();
  embed->add_option("--m", o.m, "Odd extension degree")->required();
  actions.emplace_back(embed, [&] { return embedding_to_json(build_embedding(field_flag("--from", o.from), o.m)); });

  auto* lef = add(&app, "lefschetz", "Ring-language sentences over algebraic closures of F_p");
  lef->require_subcommand(1);
  auto* lef_eval = add(lef, "eval", "Tower evaluation at one prime");
  lef_eval->add_option("--sentence", o.sentence, "e.g. \"E x . x*x + 1 = 0\"")->required();
  lef_eval->add_option("--p", o.p, "Prime")->required();
  lef_eval->add_option("--levels", o.levels, "Total degree bound B")->capture_default_str();
  lef_eval->add_option("--expand", o.expand, "Per-quantifier expansion bound K")->capture_default_str();
  actions.emplace_back(lef_eval, [&] {
    const Sentence s = parse_sentence(o.sentence);
    Json j = verdict_to_json(eval_closure(s, o.p, o.levels, o.expand));
    j["sentence"] = s.to_string();
    j["p"] = o.p;
    return j;
  });
  auto* lef_sample = add(lef, "sample", "Tower evaluation over a list of primes");
  lef_sample->add_option("--sentence", o.sentence, "e.g. \"E x . x*x + 1 = 0\"")->required();
  lef_sample->add_option("--primes", o.primes, "a..b or a,b,c")->required();
  lef_sample->add_option("--levels", o.levels, "Total degree bound B")->capture_default_str();
  lef_sample->add_option("--expand", o.expand, "Per-quantifier expansion bound K")->capture_default_str();
  actions.emplace_back(lef_sample, [&] {
    const Sentence s = parse_sentence(o.sentence);
    Json j = sample_to_json(lefschetz_sample(s, parse_prime_list(o.primes), o.levels, o.expand));
    j["sentence"] = s.to_string();
    return j;
  });

  auto* curves = add(&app, "curves-meet", "Common projective zero of two ternary forms");
  curves->add_option("--f", o.f, "Homogeneous polynomial in X, Y, Z")->required();
  curves->add_option("--g", o.g, "Homogeneous polynomial in X, Y, Z")->required();
  curves->add_option("--p", o.p, "Prime")->required();
  auto* curve_levels = curves->add_option("--levels", o.levels, "Largest extension degree; default deg f * deg g");
  actions.emplace_back(curves, [&] {
    unsigned levels = o.levels;
    if (curve_levels->count() == 0) {
      levels = TernaryForm(o.f, o.p).degree() * TernaryForm(o.g, o.p).degree();
    }
    Json j = curves_to_json(curves_meet(o.f, o.g, o.p, levels));
    j["levels"] = levels;
    return j;
  });

  auto* fix = add(&app, "fixpoints", "Projective fixed points of a semilinear map");
  fix->add_option("--map", o.map, kDocumentGrammar)->required();
  fix->add_option("--max-ext", o.max_ext, "Largest extension degree searched")->capture_default_str();
  fix->add_flag("--allow-form-incompatible", o.allow_form_incompatible, "Search even degrees by plain extension");
  actions.emplace_back(fix, [&] {
    const SemilinearMap phi = semilinear_from_json(document_flag("--map", o.map));
    return fixed_points_to_json(fixed_points(phi, o.max_ext, o.allow_form_incompatible));
  });

  auto* self = add(&app, "selftest", "Run the invariant suite");
  bool selftest_failed = false;
  actions.emplace_back(self, [&] {
    Json j = selftest_report();
    selftest_failed = !j["ok"].get<bool>();
    return j;
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }
  if (!o.seed.empty() || app.count("--seed") > 0) {
    err << "--seed: reserved and rejected; every computation is deterministic\n";
    return 2;
  }

  try {
    for (const auto& [sub, action] : actions) {
      if (!sub->parsed()) continue;
      out << dump(action());
      return selftest_failed ? 1 : 0;
    }
    throw UsageError("no subcommand given");
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    out << dump(error_to_json(e));
    return 1;
  } catch (const std::exception& e) {
    out << dump(error_to_json(Error(ErrorCode::Internal, e.what())));
    return 1;
  }
}

}  // namespace gqt
