#include "gqt/generators.hpp"

#include <numeric>
#include <optional>
#include <vector>

namespace gqt {

namespace {

Rational small_rational(Rng& rng) {
  Rational r(static_cast<long>(rng.range(-4, 4)), static_cast<long>(rng.range(1, 3)));
  r.canonicalize();
  return r;
}

// tau with involute(tau) * tau * n = tau + involute(tau), tau != 0, making
// I - tau v v* unitary whenever <v, v> = n.
std::optional<Element> reflection_scale(Field field, const Element& n) {
  if (field.characteristic() != 2) return field.from_int(2) / n;
  for (std::uint64_t c = 1; c < field.order(); ++c) {
    const Element tau(field, c);
    if (norm(tau) * n == tau + involute(tau)) return tau;
  }
  return std::nullopt;
}

Matrix elementary_unitary(Rng& rng, Field field, std::size_t n) {
  switch (rng.below(3)) {
    case 0: {
      std::vector<Element> diag;
      for (std::size_t i = 0; i < n; ++i) diag.push_back(random_norm_one(rng, field));
      return Matrix::diagonal(field, diag);
    }
    case 1: {
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
      Matrix m = Matrix::zero(field, n, n);
      for (std::size_t i = 0; i < n; ++i) m(perm[i], i) = field.one();
      return m;
    }
    default: {
      for (int attempt = 0; attempt < 32; ++attempt) {
        const StateVector v = random_nonzero_vector(rng, field, n);
        const Element len = herm_form(v, v);
        if (len.is_zero()) continue;
        const auto tau = reflection_scale(field, len);
        if (!tau) break;
        return Matrix::identity(field, n) - *tau * outer(v, v);
      }
      return Matrix::identity(field, n);
    }
  }
}

}  // namespace

Element random_element(Rng& rng, Field field) {
  if (field.is_finite()) return Element(field, rng.below(field.order()));
  return field.gaussian(small_rational(rng), small_rational(rng));
}

Element random_nonzero(Rng& rng, Field field) {
  while (true) {
    Element x = random_element(rng, field);
    if (!x.is_zero()) return x;
  }
}

Element random_fixed(Rng& rng, Field field) {
  if (!field.is_finite()) return field.gaussian(small_rational(rng), Rational(0));
  while (true) {
    Element x = random_element(rng, field);
    if (is_fixed(x)) return x;
  }
}

Element random_norm_one(Rng& rng, Field field) {
  if (!field.is_finite()) {
    // (a + bi) / (a - bi) has norm one.
    while (true) {
      const Element z = field.gaussian(Rational(static_cast<long>(rng.range(-3, 3))),
                                       Rational(static_cast<long>(rng.range(-3, 3))));
      if (!z.is_zero()) return z / involute(z);
    }
  }
  while (true) {
    Element x = random_nonzero(rng, field);
    if (norm(x).is_one()) return x;
  }
}

StateVector random_vector(Rng& rng, Field field, std::size_t dim) {
  std::vector<Element> entries;
  entries.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) entries.push_back(random_element(rng, field));
  return StateVector(field, std::move(entries));
}

StateVector random_nonzero_vector(Rng& rng, Field field, std::size_t dim) {
  while (true) {
    StateVector v = random_vector(rng, field, dim);
    if (!v.is_zero()) return v;
  }
}

Matrix random_matrix(Rng& rng, Field field, std::size_t rows, std::size_t cols) {
  std::vector<Element> entries;
  entries.reserve(rows * cols);
  for (std::size_t k = 0; k < rows * cols; ++k) entries.push_back(random_element(rng, field));
  return Matrix(field, rows, cols, std::move(entries));
}

Matrix random_unitary(Rng& rng, Field field, std::size_t n, int generators) {
  Matrix u = Matrix::identity(field, n);
  for (int k = 0; k < generators; ++k) u = elementary_unitary(rng, field, n) * u;
  return u;
}

Matrix random_hermitian(Rng& rng, Field field, std::size_t n) {
  const Matrix b = random_matrix(rng, field, n, n);
  std::vector<Element> diag;
  for (std::size_t i = 0; i < n; ++i) diag.push_back(random_fixed(rng, field));
  return b + conj_transpose(b) + Matrix::diagonal(field, diag);
}

Matrix random_diagonalizable_hermitian(Rng& rng, Field field, std::size_t n) {
  const Matrix u = random_unitary(rng, field, n);
  std::vector<Element> diag;
  for (std::size_t i = 0; i < n; ++i) {
    diag.push_back(field.is_finite() ? random_fixed(rng, field)
                                     : field.from_int(rng.range(-3, 3)));
  }
  return u * Matrix::diagonal(field, diag) * conj_transpose(u);
}

}  // namespace gqt
