#ifndef GQT_IO_HPP_
#define GQT_IO_HPP_

#include <string>

#include "json.hpp"

#include "gqt/autocode.hpp"
#include "gqt/compose.hpp"
#include "gqt/embed.hpp"
#include "gqt/lefschetz.hpp"
#include "gqt/qcore.hpp"

namespace gqt {

using Json = nlohmann::json;

// {"kind":"quadext","p":3,"e":1,"modulus":[1,0,1]}, {"kind":"prime","p":5},
// {"kind":"galois","p":3,"n":4,"modulus":[...]}, {"kind":"gaussian"}.
Json field_to_json(Field f);
// Throws ParseError for malformed documents plus the Field construction errors.
Field field_from_json(const Json& j);
// Shorthand "quadext:p:e", "prime:p", "galois:p:n", "gaussian", or a JSON object.
Field parse_field_descriptor(const std::string& text);

// {"field", "rows", "cols", "entries"}; vectors are columns (cols = 1).
Json vector_to_json(const StateVector& v);
Json matrix_to_json(const Matrix& m);
// A vector document may be a single row or a single column.
StateVector vector_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);

// Vector document plus "dims": [d1, d2].
Json bipartite_to_json(const BipartiteState& s);
BipartiteState bipartite_from_json(const Json& j);

// Matrix document plus "aut_exponent".
Json semilinear_to_json(const SemilinearMap& phi);
SemilinearMap semilinear_from_json(const Json& j);

Json polynomial_to_json(const Polynomial& p);
Json eigen_to_json(const EigenDecomposition& d);
// Outcomes ordered by the eigenvalue string.
Json measurement_to_json(const MeasurementReport& r);
Json product_to_json(const ProductDecomposition& d);
Json no_cloning_to_json(const NoCloningWitness& w);
Json embedding_to_json(const FieldEmbedding& e);
Json verdict_to_json(const TowerVerdict& v);
Json sample_to_json(const SampleReport& r);
Json curves_to_json(const CurveIntersection& c);
Json fixed_points_to_json(const FixedPointReport& r);
Json error_to_json(const Error& e);

// Parses text as JSON. Throws ParseError.
Json parse_json(const std::string& text);
// Two-space indented, trailing newline.
std::string dump(const Json& j);

}  // namespace gqt

#endif  // GQT_IO_HPP_
