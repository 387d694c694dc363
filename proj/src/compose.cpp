#include "gqt/compose.hpp"

namespace gqt {

BipartiteState::BipartiteState(std::size_t d1_, std::size_t d2_, StateVector vector_)
    : d1(d1_), d2(d2_), vector(std::move(vector_)) {
  if (d1 == 0 || d2 == 0 || vector.size() != d1 * d2) {
    throw Error(ErrorCode::DimensionMismatch, "bipartite dims " + std::to_string(d1) + "x" +
                                                  std::to_string(d2) + " do not match vector length " +
                                                  std::to_string(vector.size()));
  }
  if (vector.is_zero()) throw Error(ErrorCode::ZeroState, "bipartite state is zero");
}

BipartiteState tensor_state(const StateVector& a, const StateVector& b) {
  if (a.field() != b.field()) throw Error(ErrorCode::FieldMismatch, "tensor factors over different fields");
  std::vector<Element> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a.entries()) {
    for (const auto& y : b.entries()) out.push_back(x * y);
  }
  return BipartiteState(a.size(), b.size(), StateVector(a.field(), std::move(out)));
}

Matrix tensor_op(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw Error(ErrorCode::FieldMismatch, "tensor factors over different fields");
  const std::size_t rows = a.rows() * b.rows(), cols = a.cols() * b.cols();
  Matrix out = Matrix::zero(a.field(), rows, cols);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
      }
    }
  }
  return out;
}

Matrix reshape(const BipartiteState& psi) {
  return Matrix(psi.vector.field(), psi.d1, psi.d2, psi.vector.entries());
}

ProductDecomposition is_product(const BipartiteState& psi) {
  const Matrix m = reshape(psi);
  const std::size_t r = rank(m);
  if (r != 1) return {false, r, std::nullopt};
  std::size_t i0 = 0, j0 = 0;
  while (true) {
    for (j0 = 0; j0 < m.cols() && m(i0, j0).is_zero(); ++j0) {
    }
    if (j0 < m.cols()) break;
    ++i0;
  }
  const Element pivot_inv = inverse(m(i0, j0));
  std::vector<Element> left;
  for (std::size_t i = 0; i < m.rows(); ++i) left.push_back(m(i, j0) * pivot_inv);
  return {true, 1, std::make_pair(StateVector(m.field(), std::move(left)), m.row(i0))};
}

NoCloningWitness no_cloning_witness(Field field, std::size_t d) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "no-cloning witness needs dimension at least 2");
  const std::size_t n = d * d;
  Matrix cloner = Matrix::zero(field, n, n);
  for (std::size_t k = 0; k < d; ++k) cloner(k * d + k, k * d) = field.one();

  const StateVector e1 = StateVector::basis(field, d, 0);
  const StateVector e2 = StateVector::basis(field, d, 1);
  bool clones = true;
  for (const auto& e : {e1, e2}) {
    clones = clones && cloner * tensor_state(e, e1).vector == tensor_state(e, e).vector;
  }
  const StateVector s = e1 + e2;
  const BipartiteState image(d, d, cloner * tensor_state(s, e1).vector);
  const BipartiteState clone = tensor_state(s, s);
  return NoCloningWitness{d,
                          cloner,
                          s,
                          image.vector,
                          clone.vector,
                          rank(reshape(image)),
                          rank(reshape(clone)),
                          clones};
}

}  // namespace gqt
