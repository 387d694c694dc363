#ifndef GQT_COMPOSE_HPP_
#define GQT_COMPOSE_HPP_

#include <optional>
#include <utility>

#include "gqt/forms.hpp"

namespace gqt {

// A vector in H1 (x) H2, stored in row-major Kronecker order: the entry for
// e_i (x) e_j sits at index i * d2 + j.
struct BipartiteState {
  // Throws DimensionMismatch if vector.size() != d1 * d2, ZeroState if zero.
  BipartiteState(std::size_t d1, std::size_t d2, StateVector vector);

  std::size_t d1;
  std::size_t d2;
  StateVector vector;
};

BipartiteState tensor_state(const StateVector& a, const StateVector& b);
Matrix tensor_op(const Matrix& a, const Matrix& b);

// d1 x d2 coefficient matrix.
Matrix reshape(const BipartiteState& psi);

struct ProductDecomposition {
  bool is_product;
  std::size_t rank;
  // When a product: psi = left (x) right, with the first nonzero entry of left equal to 1.
  std::optional<std::pair<StateVector, StateVector>> factors;
};

ProductDecomposition is_product(const BipartiteState& psi);

// The superposition argument against cloning, carried out on e1, e2 and
// s = e1 + e2 inside H (x) H with dim H = d.
struct NoCloningWitness {
  std::size_t dim;
  // Linear map on H (x) H with L(e_k (x) e1) = e_k (x) e_k, zero on the rest.
  Matrix cloner;
  StateVector superposition;      // s
  StateVector linear_image;       // L(s (x) e1)
  StateVector required_clone;     // s (x) s
  std::size_t linear_image_rank;  // 2
  std::size_t clone_rank;         // 1
  bool clones_basis_states;
};

// Throws InvalidArgument for d < 2.
NoCloningWitness no_cloning_witness(Field field, std::size_t d);

}  // namespace gqt

#endif  // GQT_COMPOSE_HPP_
