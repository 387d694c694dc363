#ifndef GQT_EMBED_HPP_
#define GQT_EMBED_HPP_

#include <cstdint>
#include <vector>

#include "gqt/forms.hpp"

namespace gqt {

struct EmbeddingCheck {
  std::uint64_t homomorphism_pairs = 0;
  bool homomorphism_exhaustive = false;
  std::uint64_t involution_elements = 0;
  bool involution_exhaustive = false;
  bool involution_compatible = false;
};

// A field homomorphism between finite fields of the same characteristic,
// determined by the image of the source generator.
class FieldEmbedding {
 public:
  FieldEmbedding(Field source, Field target, Element image_of_generator);

  Field source() const { return source_; }
  Field target() const { return target_; }
  const Element& image_of_generator() const { return image_; }
  const EmbeddingCheck& check() const { return check_; }

  // Throws FieldMismatch if x is not a source element.
  Element operator()(const Element& x) const;

  // this, then next.
  FieldEmbedding then(const FieldEmbedding& next) const;

 private:
  friend FieldEmbedding embed_into(Field, Field);
  friend FieldEmbedding build_embedding(Field, unsigned);

  Field source_;
  Field target_;
  Element image_;
  std::vector<Element> powers_;      // image^k for k < source degree
  std::vector<std::uint64_t> table_;  // full code table for small sources
  EmbeddingCheck check_;
};

// Smallest root (in code order) of the source modulus in the target, found
// by scan. Verifies the homomorphism and records whether the involutions agree.
// Throws FieldNotFinite, FieldMismatch (characteristic or degree does not
// divide), FieldTooLarge, NoRootFound.
FieldEmbedding embed_into(Field source, Field target);

// QuadExt(p, e) into QuadExt(p, e*m) for odd m, involution compatibility
// required. Throws EvenExtensionDegree, WrongField.
FieldEmbedding build_embedding(Field source, unsigned m);

StateVector extend_state(const FieldEmbedding& e, const StateVector& v);
Matrix extend_matrix(const FieldEmbedding& e, const Matrix& m);

}  // namespace gqt

#endif  // GQT_EMBED_HPP_
