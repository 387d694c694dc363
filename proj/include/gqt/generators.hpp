#ifndef GQT_GENERATORS_HPP_
#define GQT_GENERATORS_HPP_

// Deterministic pseudo-random generators for the property suites. Everything
// is driven by a fixed-seed mt19937_64 and reduces raw engine output with '%',
// so sequences are identical on every platform and standard library.

#include <cstdint>
#include <random>

#include "gqt/forms.hpp"

namespace gqt {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform-ish in [0, n).
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  // In [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 engine_;
};

// Q(i) elements use small numerators and denominators so that products of a
// few dozen of them stay cheap.
Element random_element(Rng& rng, Field field);
Element random_nonzero(Rng& rng, Field field);
// Uniform over the fixed field (finite) or a small rational (Q(i)).
Element random_fixed(Rng& rng, Field field);
// An element u with involute(u) * u = 1.
Element random_norm_one(Rng& rng, Field field);

StateVector random_vector(Rng& rng, Field field, std::size_t dim);
StateVector random_nonzero_vector(Rng& rng, Field field, std::size_t dim);
Matrix random_matrix(Rng& rng, Field field, std::size_t rows, std::size_t cols);

// Product of `generators` elementary unitaries: diagonal phases, permutations
// and reflections I - tau v v* through non-isotropic v.
Matrix random_unitary(Rng& rng, Field field, std::size_t n, int generators = 3);
// B + B* plus a fixed diagonal.
Matrix random_hermitian(Rng& rng, Field field, std::size_t n);
// U D U* with U random unitary and D a fixed-field diagonal: Hermitian with a
// complete eigenbasis of unit vectors.
Matrix random_diagonalizable_hermitian(Rng& rng, Field field, std::size_t n);

}  // namespace gqt

#endif  // GQT_GENERATORS_HPP_
