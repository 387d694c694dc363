#include "gqt/compose.hpp"

#include <gtest/gtest.h>

#include <set>

#include "gqt/generators.hpp"

namespace gqt {
namespace {

const Field f4 = Field::quad_ext(2, 1);
const Field f9 = Field::quad_ext(3, 1);
const Field qi = Field::gaussian();

std::vector<Field> backends() { return {Field::prime(5), f4, f9, Field::quad_ext(5, 1), qi}; }

TEST(Tensor, Examples) {
  const auto e1 = StateVector::basis(f9, 2, 0), e2 = StateVector::basis(f9, 2, 1);
  EXPECT_EQ(tensor_state(e1, e2).vector, StateVector::basis(f9, 4, 1));
  EXPECT_EQ(tensor_state(StateVector::parse(f9, {"1", "1"}), StateVector::parse(f9, {"1", "2"})).vector,
            StateVector::parse(f9, {"1", "2", "1", "2"}));
  EXPECT_EQ(tensor_op(Matrix::identity(f9, 2), Matrix::identity(f9, 2)), Matrix::identity(f9, 4));
  EXPECT_THROW(tensor_state(e1, StateVector::basis(qi, 2, 0)), Error);
}

TEST(Tensor, OperatorActsFactorwise) {
  Rng rng(41);
  for (const Field f : backends()) {
    for (int k = 0; k < 20; ++k) {
      const auto a = random_matrix(rng, f, 2, 3);
      const auto b = random_matrix(rng, f, 3, 2);
      const auto x = random_nonzero_vector(rng, f, 3);
      const auto y = random_nonzero_vector(rng, f, 2);
      const auto ax = a * x, by = b * y;
      if (ax.is_zero() || by.is_zero()) continue;
      EXPECT_EQ(tensor_op(a, b) * tensor_state(x, y).vector, tensor_state(ax, by).vector);
    }
  }
}

TEST(Tensor, FormIsMultiplicative) {
  Rng rng(42);
  for (const Field f : backends()) {
    for (int k = 0; k < 50; ++k) {
      const std::size_t d1 = 1 + rng.below(3), d2 = 1 + rng.below(3);
      const auto p1 = random_nonzero_vector(rng, f, d1), q1 = random_nonzero_vector(rng, f, d1);
      const auto p2 = random_nonzero_vector(rng, f, d2), q2 = random_nonzero_vector(rng, f, d2);
      EXPECT_EQ(herm_form(tensor_state(p1, p2).vector, tensor_state(q1, q2).vector),
                herm_form(p1, q1) * herm_form(p2, q2));
    }
  }
}

TEST(Tensor, UnitaryTimesUnitaryIsUnitary) {
  Rng rng(43);
  for (const Field f : backends()) {
    for (int k = 0; k < 10; ++k) {
      const auto u1 = random_unitary(rng, f, 2), u2 = random_unitary(rng, f, 1 + rng.below(3));
      ASSERT_TRUE(is_unitary(u1) && is_unitary(u2));
      EXPECT_TRUE(is_unitary(tensor_op(u1, u2)));
    }
  }
}

TEST(Product, Examples) {
  const auto r1 = is_product(BipartiteState(2, 2, StateVector::parse(f9, {"1", "0", "0", "0"})));
  ASSERT_TRUE(r1.is_product);
  EXPECT_EQ(r1.factors->first, StateVector::basis(f9, 2, 0));
  EXPECT_EQ(r1.factors->second, StateVector::basis(f9, 2, 0));

  for (const Field f : backends()) {
    const auto r2 = is_product(BipartiteState(2, 2, StateVector(f, {f.one(), f.zero(), f.zero(), f.one()})));
    EXPECT_FALSE(r2.is_product);
    EXPECT_EQ(r2.rank, 2u);
  }

  // (1, 2i) (x) (1, i) = (1, i, 2i, 2i*i).
  const StateVector a = StateVector::parse(f9, {"1", "2t"});
  const StateVector b = StateVector::parse(f9, {"1", "t"});
  const StateVector psi = StateVector::parse(f9, {"1", "t", "2t", "1"});
  ASSERT_EQ(tensor_state(a, b).vector, psi);
  const auto r3 = is_product(BipartiteState(2, 2, psi));
  ASSERT_TRUE(r3.is_product);
  EXPECT_EQ(r3.factors->first, a);
  EXPECT_EQ(r3.factors->second, b);

  EXPECT_THROW(BipartiteState(2, 2, StateVector::zero(f9, 4)), Error);
  EXPECT_THROW(BipartiteState(2, 3, StateVector::basis(f9, 4, 0)), Error);
}

TEST(Product, ExhaustiveAgainstFactorPairsOverF4) {
  std::set<std::vector<std::uint64_t>> products;
  const auto elems = all_elements(f4);
  for (std::uint64_t a = 1; a < 16; ++a) {
    for (std::uint64_t b = 1; b < 16; ++b) {
      std::vector<std::uint64_t> codes;
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          codes.push_back((elems[(a >> (2 * i)) & 3] * elems[(b >> (2 * j)) & 3]).code());
        }
      }
      products.insert(codes);
    }
  }
  std::size_t count = 0;
  for (std::uint64_t v = 1; v < 256; ++v) {
    std::vector<Element> entries;
    std::vector<std::uint64_t> codes;
    for (int k = 0; k < 4; ++k) {
      entries.push_back(elems[(v >> (2 * k)) & 3]);
      codes.push_back(entries.back().code());
    }
    const BipartiteState psi(2, 2, StateVector(f4, entries));
    const auto r = is_product(psi);
    EXPECT_EQ(r.is_product, products.count(codes) == 1);
    if (r.is_product) {
      ++count;
      EXPECT_EQ(tensor_state(r.factors->first, r.factors->second).vector, psi.vector);
    }
  }
  // 15 * 15 factor pairs, each product reached by 3 rescalings.
  EXPECT_EQ(count, 75u);
}

TEST(Product, RandomProductsFactor) {
  Rng rng(44);
  for (const Field f : backends()) {
    for (int k = 0; k < 40; ++k) {
      const auto a = random_nonzero_vector(rng, f, 1 + rng.below(3));
      const auto b = random_nonzero_vector(rng, f, 1 + rng.below(3));
      const auto r = is_product(tensor_state(a, b));
      ASSERT_TRUE(r.is_product);
      EXPECT_EQ(tensor_state(r.factors->first, r.factors->second).vector, tensor_state(a, b).vector);
      std::size_t i = 0;
      while (r.factors->first[i].is_zero()) ++i;
      EXPECT_TRUE(r.factors->first[i].is_one());
    }
  }
}

TEST(NoCloning, WitnessForEveryBackendAndDimension) {
  for (const Field f : backends()) {
    for (std::size_t d = 2; d <= 4; ++d) {
      const auto w = no_cloning_witness(f, d);
      EXPECT_TRUE(w.clones_basis_states);
      EXPECT_EQ(w.linear_image_rank, 2u);
      EXPECT_EQ(w.clone_rank, 1u);
      EXPECT_NE(w.linear_image, w.required_clone);
      EXPECT_EQ(w.linear_image, w.cloner * tensor_state(w.superposition, StateVector::basis(f, d, 0)).vector);
    }
  }
  EXPECT_THROW(no_cloning_witness(f9, 1), Error);
}

}  // namespace
}  // namespace gqt
