#include "gqt/io.hpp"

#include <algorithm>

namespace gqt {

namespace {

[[noreturn]] void bad_document(const std::string& why) { throw Error(ErrorCode::ParseError, why); }

// Converts nlohmann access errors into ParseError.
template <typename F>
auto guarded(const char* what, F body) -> decltype(body()) {
  try {
    return body();
  } catch (const Json::exception& e) {
    bad_document(std::string("malformed ") + what + " document: " + e.what());
  }
}

Json elements_to_json(const std::vector<Element>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

std::vector<Element> elements_from_json(Field f, const Json& j) {
  if (!j.is_array()) bad_document("entries must be an array of strings");
  std::vector<Element> out;
  for (const auto& e : j) {
    if (!e.is_string()) bad_document("entries must be strings in the field's element syntax");
    out.push_back(f.parse(e.get<std::string>()));
  }
  return out;
}

std::uint64_t parse_number(const std::string& text, const std::string& descriptor) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      text.size() > 18) {
    bad_document("bad number '" + text + "' in field descriptor '" + descriptor + "'");
  }
  return std::stoull(text);
}

Json vectors_to_json(const std::vector<StateVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(vector_to_json(v));
  return out;
}

Json point_to_json(const std::array<Element, 3>& p) {
  return Json::array({p[0].to_string(), p[1].to_string(), p[2].to_string()});
}

}  // namespace

Json field_to_json(Field f) {
  Json j;
  switch (f.kind()) {
    case FieldKind::Prime:
      j = {{"kind", "prime"}, {"p", f.characteristic()}};
      break;
    case FieldKind::QuadExt:
      j = {{"kind", "quadext"}, {"p", f.characteristic()}, {"e", f.quad_exponent()}, {"modulus", f.modulus()}};
      break;
    case FieldKind::Galois:
      j = {{"kind", "galois"}, {"p", f.characteristic()}, {"n", f.degree()}, {"modulus", f.modulus()}};
      break;
    case FieldKind::Gaussian:
      j = {{"kind", "gaussian"}};
      break;
  }
  return j;
}

Field field_from_json(const Json& j) {
  return guarded("field", [&] {
    if (!j.is_object()) bad_document("field descriptor must be an object");
    const std::string kind = j.at("kind").get<std::string>();
    std::optional<std::vector<std::uint64_t>> modulus;
    if (j.contains("modulus")) modulus = j.at("modulus").get<std::vector<std::uint64_t>>();
    if (kind == "gaussian") return Field::gaussian();
    const auto p = j.at("p").get<std::uint64_t>();
    if (kind == "prime") return Field::prime(p);
    if (kind == "quadext") return Field::quad_ext(p, j.value("e", 1u), modulus);
    if (kind == "galois") return Field::galois(p, j.at("n").get<unsigned>(), modulus);
    bad_document("unknown field kind '" + kind + "'");
  });
}

Field parse_field_descriptor(const std::string& text) {
  const auto start = text.find_first_not_of(" \t\n");
  if (start != std::string::npos && text[start] == '{') return field_from_json(parse_json(text));
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    const auto next = text.find(':', pos);
    parts.push_back(text.substr(pos, next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  const std::string& kind = parts[0];
  if (kind == "gaussian" && parts.size() == 1) return Field::gaussian();
  if (kind == "prime" && parts.size() == 2) return Field::prime(parse_number(parts[1], text));
  if (kind == "quadext" && parts.size() == 3) {
    return Field::quad_ext(parse_number(parts[1], text), static_cast<unsigned>(parse_number(parts[2], text)));
  }
  if (kind == "galois" && parts.size() == 3) {
    return Field::galois(parse_number(parts[1], text), static_cast<unsigned>(parse_number(parts[2], text)));
  }
  bad_document("bad field descriptor '" + text + "'; expected quadext:p:e, prime:p, galois:p:n, gaussian or a JSON object");
}

Json vector_to_json(const StateVector& v) {
  return {{"field", field_to_json(v.field())}, {"rows", v.size()}, {"cols", 1}, {"entries", elements_to_json(v.entries())}};
}

Json matrix_to_json(const Matrix& m) {
  return {{"field", field_to_json(m.field())}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", elements_to_json(m.entries())}};
}

Matrix matrix_from_json(const Json& j) {
  return guarded("matrix", [&] {
    if (!j.is_object()) bad_document("matrix document must be an object");
    const Field f = field_from_json(j.at("field"));
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    auto entries = elements_from_json(f, j.at("entries"));
    if (entries.size() != rows * cols) {
      throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(rows * cols) + " entries, got " +
                                                    std::to_string(entries.size()));
    }
    return Matrix(f, rows, cols, std::move(entries));
  });
}

StateVector vector_from_json(const Json& j) {
  const Matrix m = matrix_from_json(j);
  if (m.cols() != 1 && m.rows() != 1) throw Error(ErrorCode::DimensionMismatch, "vector document must have one row or one column");
  return StateVector(m.field(), m.entries());
}

Json bipartite_to_json(const BipartiteState& s) {
  Json j = vector_to_json(s.vector);
  j["dims"] = {s.d1, s.d2};
  return j;
}

BipartiteState bipartite_from_json(const Json& j) {
  return guarded("bipartite state", [&] {
    const auto dims = j.at("dims").get<std::vector<std::size_t>>();
    if (dims.size() != 2) bad_document("dims must have two entries");
    return BipartiteState(dims[0], dims[1], vector_from_json(j));
  });
}

Json semilinear_to_json(const SemilinearMap& phi) {
  Json j = matrix_to_json(phi.matrix());
  j["aut_exponent"] = phi.aut_exponent();
  return j;
}

SemilinearMap semilinear_from_json(const Json& j) {
  return guarded("map", [&] { return SemilinearMap(matrix_from_json(j), j.value("aut_exponent", 0u)); });
}

Json polynomial_to_json(const Polynomial& p) { return elements_to_json(p.coefficients()); }

Json eigen_to_json(const EigenDecomposition& d) {
  Json spaces = Json::array();
  for (const auto& s : d.spaces) {
    spaces.push_back({{"eigenvalue", s.eigenvalue.to_string()}, {"basis", vectors_to_json(s.basis)}});
  }
  return {{"spaces", spaces}, {"complete", d.complete}, {"exhaustive", d.exhaustive}};
}

Json measurement_to_json(const MeasurementReport& r) {
  std::vector<const Outcome*> order;
  for (const auto& o : r.outcomes) order.push_back(&o);
  std::sort(order.begin(), order.end(),
            [](const Outcome* a, const Outcome* b) { return a->eigenvalue.to_string() < b->eigenvalue.to_string(); });
  Json outcomes = Json::array();
  for (const auto* o : order) {
    outcomes.push_back({{"eigenvalue", o->eigenvalue.to_string()},
                        {"projected_state", vector_to_json(o->projected_state)},
                        {"modal_possible", o->modal_possible},
                        {"born_weight", o->born_weight ? Json(o->born_weight->to_string()) : Json(nullptr)}});
  }
  return {{"outcomes", outcomes}, {"total_form_value", r.total_form_value.to_string()}};
}

Json product_to_json(const ProductDecomposition& d) {
  Json j = {{"is_product", d.is_product}, {"rank", d.rank}, {"factors", nullptr}};
  if (d.factors) j["factors"] = {vector_to_json(d.factors->first), vector_to_json(d.factors->second)};
  return j;
}

Json no_cloning_to_json(const NoCloningWitness& w) {
  return {{"dim", w.dim},
          {"cloner", matrix_to_json(w.cloner)},
          {"superposition", vector_to_json(w.superposition)},
          {"linear_image", vector_to_json(w.linear_image)},
          {"required_clone", vector_to_json(w.required_clone)},
          {"linear_image_rank", w.linear_image_rank},
          {"clone_rank", w.clone_rank},
          {"clones_basis_states", w.clones_basis_states}};
}

Json embedding_to_json(const FieldEmbedding& e) {
  const auto& c = e.check();
  return {{"source", field_to_json(e.source())},
          {"target", field_to_json(e.target())},
          {"generator_image", e.image_of_generator().to_string()},
          {"verification",
           {{"homomorphism_pairs", c.homomorphism_pairs},
            {"homomorphism_exhaustive", c.homomorphism_exhaustive},
            {"involution_elements", c.involution_elements},
            {"involution_exhaustive", c.involution_exhaustive},
            {"involution_compatible", c.involution_compatible}}}};
}

Json verdict_to_json(const TowerVerdict& v) {
  Json witness = Json::array();
  for (const auto& w : v.witness) witness.push_back({{"var", w.var}, {"level", w.level}, {"value", w.value}});
  return {{"verdict", truth_name(v.value)},
          {"certified", v.certified},
          {"fragment", fragment_name(v.fragment)},
          {"tower_value", v.tower_value},
          {"witness", witness},
          {"levels", v.max_level}};
}

Json sample_to_json(const SampleReport& r) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < r.primes.size(); ++i) {
    Json row = verdict_to_json(r.verdicts[i]);
    row["p"] = r.primes[i];
    rows.push_back(row);
  }
  return {{"primes", rows},
          {"certified_true", r.certified_true},
          {"certified_false", r.certified_false},
          {"uncertified", r.uncertified},
          {"conjecture", r.conjecture ? Json(*r.conjecture) : Json(nullptr)},
          {"summary", r.summary}};
}

Json curves_to_json(const CurveIntersection& c) {
  Json points = Json::array();
  for (const auto& p : c.points) points.push_back(point_to_json(p));
  return {{"found", c.found},
          {"verdict", truth_name(c.found ? Truth::True : Truth::Unknown)},
          {"level", c.found ? Json(c.level) : Json(nullptr)},
          {"bezout_bound", c.bezout_bound},
          {"points", points},
          {"point_field", c.points.empty() ? Json(nullptr) : field_to_json(c.points[0][0].field())},
          {"points_at_level", c.points_at_level}};
}

Json fixed_points_to_json(const FixedPointReport& r) {
  Json points = Json::array();
  for (const auto& p : r.points) {
    points.push_back({{"level", p.level},
                      {"representative", elements_to_json(p.representative.entries())},
                      {"field", field_to_json(p.representative.field())},
                      {"scalar", p.scalar.to_string()},
                      {"form_compatible", p.form_compatible}});
  }
  return {{"status", status_name(r.status)},
          {"points", points},
          {"levels_searched", r.levels_searched},
          {"levels_skipped", r.levels_skipped},
          {"truncated", r.truncated},
          {"note", r.note}};
}

Json error_to_json(const Error& e) {
  Json j = {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}};
  if (const auto* s = dynamic_cast<const SyntaxError*>(&e)) j["column"] = s->column();
  return {{"error", j}};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad_document(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace gqt
