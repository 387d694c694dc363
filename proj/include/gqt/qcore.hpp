#ifndef GQT_QCORE_HPP_
#define GQT_QCORE_HPP_

#include <optional>
#include <vector>

#include "gqt/forms.hpp"

namespace gqt {

// A Hermitian matrix together with its verified owner-field spectrum.
class Observable {
 public:
  // Throws NotHermitian.
  explicit Observable(Matrix matrix);

  const Matrix& matrix() const { return matrix_; }
  const EigenDecomposition& spectrum() const { return spectrum_; }
  bool complete() const { return spectrum_.complete; }
  std::size_t dim() const { return matrix_.rows(); }

 private:
  Matrix matrix_;
  EigenDecomposition spectrum_;
};

inline Observable make_observable(const Matrix& a) { return Observable(a); }

struct Outcome {
  Element eigenvalue;
  StateVector projected_state;
  bool modal_possible;
  // Empty when the eigenspace has no non-isotropic orthogonal basis.
  std::optional<Element> born_weight;
};

struct MeasurementReport {
  std::vector<Outcome> outcomes;  // canonical eigenvalue order
  Element total_form_value;
};

// Throws IncompleteSpectrum, ZeroState, DimensionMismatch.
MeasurementReport measure(const Observable& obs, const StateVector& psi);

// Unnormalized projection onto the eigenspace of lambda.
// Throws ImpossibleOutcome if lambda is not an eigenvalue or the projection is zero.
StateVector collapse(const Observable& obs, const StateVector& psi, const Element& lambda);

// Throws NotUnitary, DimensionMismatch.
StateVector evolve(const Matrix& u, const StateVector& psi);

struct Projector {
  Matrix matrix;
};

// Sum of v v* / <v,v>. Throws IsotropicVector, NotOrthogonal.
Projector projector_onto(const std::vector<StateVector>& vectors);

// Greedy Gram-Schmidt; nullopt on an isotropic pivot.
std::optional<std::vector<StateVector>> orthogonalize(const std::vector<StateVector>& basis);

// (a_k^2 + b_k^2)_k for psi over Q(i). Throws WrongField.
std::vector<Element> probability_profile(const StateVector& psi);

// a = c b for some nonzero c.
bool same_ray(const StateVector& a, const StateVector& b);

}  // namespace gqt

#endif  // GQT_QCORE_HPP_
