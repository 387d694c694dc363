#include "gqt/qcore.hpp"

namespace gqt {

namespace {

void require_same_space(const Matrix& m, const StateVector& v) {
  if (m.field() != v.field()) throw Error(ErrorCode::FieldMismatch, "state and operator over different fields");
  if (m.cols() != v.size()) throw Error(ErrorCode::DimensionMismatch, "state dimension does not match operator");
}

// Coordinates of psi in the concatenated eigenbasis, split per eigenspace.
std::vector<StateVector> eigen_components(const Observable& obs, const StateVector& psi) {
  if (!obs.complete()) {
    throw Error(ErrorCode::IncompleteSpectrum, "observable has no complete eigenbasis in " + obs.matrix().field().name());
  }
  require_same_space(obs.matrix(), psi);
  std::vector<StateVector> columns;
  for (const auto& space : obs.spectrum().spaces) {
    columns.insert(columns.end(), space.basis.begin(), space.basis.end());
  }
  const StateVector coords = solve(Matrix::from_columns(columns), psi);
  std::vector<StateVector> parts;
  std::size_t k = 0;
  for (const auto& space : obs.spectrum().spaces) {
    StateVector part = StateVector::zero(psi.field(), psi.size());
    for (const auto& b : space.basis) part += coords[k++] * b;
    parts.push_back(std::move(part));
  }
  return parts;
}

}  // namespace

Observable::Observable(Matrix matrix) : matrix_(std::move(matrix)), spectrum_() {
  if (!is_hermitian(matrix_)) throw Error(ErrorCode::NotHermitian, "observable matrix is not Hermitian");
  spectrum_ = eigen_decompose(matrix_);
  for (const auto& space : spectrum_.spaces) {
    for (const auto& v : space.basis) {
      if (matrix_ * v != space.eigenvalue * v) throw Error(ErrorCode::Internal, "eigenpair failed verification");
    }
  }
}

std::optional<std::vector<StateVector>> orthogonalize(const std::vector<StateVector>& basis) {
  std::vector<StateVector> out;
  std::vector<Element> lengths;
  for (const auto& b : basis) {
    StateVector w = b;
    for (std::size_t j = 0; j < out.size(); ++j) {
      w -= (herm_form(out[j], b) / lengths[j]) * out[j];
    }
    const Element len = herm_form(w, w);
    if (len.is_zero()) return std::nullopt;
    out.push_back(std::move(w));
    lengths.push_back(len);
  }
  return out;
}

MeasurementReport measure(const Observable& obs, const StateVector& psi) {
  if (psi.is_zero()) throw Error(ErrorCode::ZeroState, "cannot measure the zero vector");
  const auto parts = eigen_components(obs, psi);
  MeasurementReport report{{}, herm_form(psi, psi)};
  const auto& spaces = obs.spectrum().spaces;
  for (std::size_t k = 0; k < spaces.size(); ++k) {
    std::optional<Element> weight;
    if (const auto ortho = orthogonalize(spaces[k].basis)) {
      Element sum = psi.field().zero();
      for (const auto& u : *ortho) sum += norm(herm_form(u, psi)) / herm_form(u, u);
      weight = sum;
    }
    report.outcomes.push_back(Outcome{spaces[k].eigenvalue, parts[k], !parts[k].is_zero(), weight});
  }
  return report;
}

StateVector collapse(const Observable& obs, const StateVector& psi, const Element& lambda) {
  const auto parts = eigen_components(obs, psi);
  const auto& spaces = obs.spectrum().spaces;
  for (std::size_t k = 0; k < spaces.size(); ++k) {
    if (spaces[k].eigenvalue != lambda) continue;
    if (parts[k].is_zero()) {
      throw Error(ErrorCode::ImpossibleOutcome, "state has no component on eigenvalue " + lambda.to_string());
    }
    return parts[k];
  }
  throw Error(ErrorCode::ImpossibleOutcome, lambda.to_string() + " is not an eigenvalue");
}

StateVector evolve(const Matrix& u, const StateVector& psi) {
  require_same_space(u, psi);
  if (!is_unitary(u)) throw Error(ErrorCode::NotUnitary, "evolution operator is not unitary");
  return u * psi;
}

Projector projector_onto(const std::vector<StateVector>& vectors) {
  if (vectors.empty()) throw Error(ErrorCode::InvalidArgument, "projector needs at least one vector");
  const Field field = vectors.front().field();
  const std::size_t dim = vectors.front().size();
  Matrix p = Matrix::zero(field, dim, dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const Element len = herm_form(vectors[i], vectors[i]);
    if (len.is_zero()) throw Error(ErrorCode::IsotropicVector, "vector " + std::to_string(i) + " is isotropic");
    for (std::size_t j = 0; j < i; ++j) {
      if (!herm_form(vectors[j], vectors[i]).is_zero()) {
        throw Error(ErrorCode::NotOrthogonal,
                    "vectors " + std::to_string(j) + " and " + std::to_string(i) + " are not orthogonal");
      }
    }
    p += inverse(len) * outer(vectors[i], vectors[i]);
  }
  return Projector{p};
}

std::vector<Element> probability_profile(const StateVector& psi) {
  if (psi.field().is_finite()) throw Error(ErrorCode::WrongField, "probability profile needs Q(i)");
  std::vector<Element> out;
  for (const auto& c : psi.entries()) out.push_back(norm(c));
  return out;
}

bool same_ray(const StateVector& a, const StateVector& b) {
  if (a.field() != b.field() || a.size() != b.size() || a.is_zero() || b.is_zero()) return false;
  std::size_t k = 0;
  while (a[k].is_zero()) ++k;
  if (b[k].is_zero()) return false;
  return (b[k] / a[k]) * a == b;
}

}  // namespace gqt
