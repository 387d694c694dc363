#include "gqt/embed.hpp"

#include <optional>
#include <random>

namespace gqt {

namespace {

constexpr std::uint64_t kScanLimit = std::uint64_t{1} << 24;
constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 16;
constexpr std::uint64_t kExhaustivePairs = std::uint64_t{1} << 16;
constexpr int kSampledPairs = 2000;

void verify(const FieldEmbedding& e, EmbeddingCheck& check) {
  const Field src = e.source();
  const std::uint64_t n = src.order();
  auto hom_ok = [&](const Element& x, const Element& y) {
    return e(x + y) == e(x) + e(y) && e(x * y) == e(x) * e(y);
  };
  if (!e(src.zero()).is_zero() || !e(src.one()).is_one()) {
    throw Error(ErrorCode::Internal, "embedding does not preserve 0 and 1");
  }
  if (n * n <= kExhaustivePairs) {
    for (std::uint64_t a = 0; a < n; ++a) {
      for (std::uint64_t b = a; b < n; ++b) {
        if (!hom_ok(Element(src, a), Element(src, b))) throw Error(ErrorCode::Internal, "embedding is not a homomorphism");
        ++check.homomorphism_pairs;
      }
    }
    check.homomorphism_exhaustive = true;
  } else {
    std::mt19937_64 rng(n);
    for (int k = 0; k < kSampledPairs; ++k) {
      const Element x(src, rng() % n), y(src, rng() % n);
      if (!hom_ok(x, y)) throw Error(ErrorCode::Internal, "embedding is not a homomorphism");
      ++check.homomorphism_pairs;
    }
  }
  check.involution_compatible = true;
  const bool all = n <= kTableLimit;
  std::mt19937_64 rng(n + 1);
  const std::uint64_t count = all ? n : static_cast<std::uint64_t>(kSampledPairs);
  for (std::uint64_t k = 0; k < count && check.involution_compatible; ++k) {
    const Element x(src, all ? k : rng() % n);
    check.involution_compatible = e(involute(x)) == involute(e(x));
    ++check.involution_elements;
  }
  check.involution_exhaustive = all && check.involution_compatible;
}

}  // namespace

FieldEmbedding::FieldEmbedding(Field source, Field target, Element image_of_generator)
    : source_(source), target_(target), image_(std::move(image_of_generator)) {
  if (!source.is_finite() || !target.is_finite()) throw Error(ErrorCode::FieldNotFinite, "embeddings need finite fields");
  if (image_.field() != target) throw Error(ErrorCode::FieldMismatch, "generator image is not a target element");
  Element power = target.one();
  for (unsigned k = 0; k < source.degree(); ++k) {
    powers_.push_back(power);
    power *= image_;
  }
  if (source.order() <= kTableLimit) {
    std::vector<std::uint64_t> table;
    table.reserve(source.order());
    for (std::uint64_t c = 0; c < source.order(); ++c) table.push_back((*this)(Element(source, c)).code());
    table_ = std::move(table);
  }
}

Element FieldEmbedding::operator()(const Element& x) const {
  if (x.field() != source_) throw Error(ErrorCode::FieldMismatch, "element is not in the embedding source");
  if (!table_.empty()) return Element(target_, table_[x.code()]);
  Element out = target_.zero();
  const auto coeffs = x.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] != 0) out += target_.from_int(static_cast<std::int64_t>(coeffs[k])) * powers_[k];
  }
  return out;
}

FieldEmbedding FieldEmbedding::then(const FieldEmbedding& next) const {
  if (next.source_ != target_) throw Error(ErrorCode::FieldMismatch, "embeddings do not compose");
  FieldEmbedding out(source_, next.target_, next(image_));
  verify(out, out.check_);
  return out;
}

FieldEmbedding embed_into(Field source, Field target) {
  if (!source.is_finite() || !target.is_finite()) throw Error(ErrorCode::FieldNotFinite, "embeddings need finite fields");
  if (source.characteristic() != target.characteristic() || target.degree() % source.degree() != 0) {
    throw Error(ErrorCode::FieldMismatch, source.name() + " does not embed in " + target.name());
  }
  if (source == target) {
    FieldEmbedding e(source, target, target.generator());
    verify(e, e.check_);
    return e;
  }
  std::optional<Element> root;
  if (source.degree() == 1) {
    root = target.one();
  } else {
    if (target.order() > kScanLimit) throw Error(ErrorCode::FieldTooLarge, target.name() + " is too large to scan");
    const auto& mod = source.modulus();
    std::vector<Element> lifted;
    for (const auto c : mod) lifted.push_back(target.from_int(static_cast<std::int64_t>(c)));
    for (std::uint64_t c = 0; c < target.order() && !root; ++c) {
      const Element x(target, c);
      Element acc = target.zero();
      for (std::size_t k = lifted.size(); k-- > 0;) acc = acc * x + lifted[k];
      if (acc.is_zero()) root = x;
    }
  }
  if (!root) throw Error(ErrorCode::NoRootFound, "source modulus has no root in " + target.name());
  FieldEmbedding e(source, target, *root);
  verify(e, e.check_);
  return e;
}

FieldEmbedding build_embedding(Field source, unsigned m) {
  if (source.kind() != FieldKind::QuadExt) throw Error(ErrorCode::WrongField, "embedding source must be a quadratic extension");
  if (m == 0 || m % 2 == 0) {
    throw Error(ErrorCode::EvenExtensionDegree,
                "extension degree " + std::to_string(m) + " is not odd; the involution would not restrict");
  }
  const Field target = Field::quad_ext(source.characteristic(), source.quad_exponent() * m);
  FieldEmbedding e = embed_into(source, target);
  if (!e.check().involution_compatible) throw Error(ErrorCode::Internal, "odd-degree embedding broke the involution");
  return e;
}

StateVector extend_state(const FieldEmbedding& e, const StateVector& v) {
  std::vector<Element> out;
  for (const auto& x : v.entries()) out.push_back(e(x));
  return StateVector(e.target(), std::move(out));
}

Matrix extend_matrix(const FieldEmbedding& e, const Matrix& m) {
  std::vector<Element> out;
  for (const auto& x : m.entries()) out.push_back(e(x));
  return Matrix(e.target(), m.rows(), m.cols(), std::move(out));
}

}  // namespace gqt
