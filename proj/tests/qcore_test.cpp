#include "gqt/qcore.hpp"

#include <gtest/gtest.h>

#include <functional>

#include "gqt/generators.hpp"

namespace gqt {
namespace {

const Field f9 = Field::quad_ext(3, 1);
const Field f25 = Field::quad_ext(5, 1);
const Field qi = Field::gaussian();

Matrix offdiag() { return Matrix::parse(f9, 2, 2, {"0", "t", "2t", "0"}); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

TEST(Observable, Examples) {
  const Observable a(Matrix::diagonal(f9, {f9.zero(), f9.one()}));
  EXPECT_TRUE(a.complete());
  ASSERT_EQ(a.spectrum().spaces.size(), 2u);
  EXPECT_EQ(a.spectrum().spaces[0].eigenvalue, f9.zero());
  EXPECT_EQ(a.spectrum().spaces[1].eigenvalue, f9.one());

  const Observable b(offdiag());
  EXPECT_TRUE(b.complete());
  EXPECT_EQ(b.spectrum().spaces[0].eigenvalue, f9.parse("1"));
  EXPECT_EQ(b.spectrum().spaces[1].eigenvalue, f9.parse("2"));

  const Observable c(Matrix::parse(qi, 2, 2, {"0", "i", "-i", "0"}));
  EXPECT_TRUE(c.complete());
  EXPECT_EQ(c.spectrum().spaces[0].eigenvalue, qi.parse("-1"));
  EXPECT_EQ(c.spectrum().spaces[1].eigenvalue, qi.parse("1"));

  EXPECT_EQ(code_of([] { Observable(Matrix::parse(qi, 2, 2, {"0", "i", "i", "0"})); }),
            ErrorCode::NotHermitian);
}

TEST(Evolve, Examples) {
  const StateVector psi = StateVector::parse(f9, {"1", "1"});
  EXPECT_EQ(evolve(Matrix::identity(f9, 2), psi), psi);
  const StateVector out = evolve(Matrix::parse(f9, 2, 2, {"t", "0", "0", "2t"}), psi);
  EXPECT_EQ(out, StateVector::parse(f9, {"t", "2t"}));
  EXPECT_EQ(herm_form(out, out), herm_form(psi, psi));
  const Matrix swap = Matrix::parse(f9, 2, 2, {"0", "1", "1", "0"});
  EXPECT_EQ(evolve(swap, StateVector::basis(f9, 2, 0)), StateVector::basis(f9, 2, 1));

  EXPECT_EQ(code_of([&] { evolve(Matrix::parse(f9, 2, 2, {"1", "1", "0", "1"}), psi); }),
            ErrorCode::NotUnitary);
  EXPECT_EQ(code_of([&] { evolve(Matrix::identity(f9, 3), psi); }), ErrorCode::DimensionMismatch);
}

TEST(Evolve, PreservesTheForm) {
  Rng rng(31);
  for (const Field f : {Field::quad_ext(2, 1), f9, f25, qi}) {
    for (int k = 0; k < 40; ++k) {
      const std::size_t n = 2 + rng.below(3);
      const Matrix u = random_unitary(rng, f, n, 4);
      const auto x = random_vector(rng, f, n);
      const auto y = random_vector(rng, f, n);
      EXPECT_EQ(herm_form(evolve(u, x), evolve(u, y)), herm_form(x, y));
    }
  }
}

TEST(Measure, DiagonalExample) {
  const Observable obs(Matrix::diagonal(f9, {f9.zero(), f9.one()}));
  const auto r = measure(obs, StateVector::basis(f9, 2, 0));
  ASSERT_EQ(r.outcomes.size(), 2u);
  EXPECT_TRUE(r.outcomes[0].modal_possible);
  EXPECT_EQ(r.outcomes[0].born_weight, f9.one());
  EXPECT_FALSE(r.outcomes[1].modal_possible);
  EXPECT_EQ(r.outcomes[1].born_weight, f9.zero());
  EXPECT_EQ(r.total_form_value, f9.one());
}

TEST(Measure, OffDiagonalOverF9) {
  // Eigenvectors (i,1) and (2i,1) have <v,v> = 2; <v,e1> has norm 1, so
  // each weight is 1/2 = 2 in F_3 and the sum 4 = 1 = <e1,e1>.
  const Observable obs(offdiag());
  const auto r = measure(obs, StateVector::basis(f9, 2, 0));
  ASSERT_EQ(r.outcomes.size(), 2u);
  EXPECT_EQ(r.outcomes[0].eigenvalue, f9.parse("1"));
  EXPECT_EQ(r.outcomes[0].born_weight, f9.parse("2"));
  EXPECT_EQ(r.outcomes[1].eigenvalue, f9.parse("2"));
  EXPECT_EQ(r.outcomes[1].born_weight, f9.parse("2"));
  EXPECT_EQ(*r.outcomes[0].born_weight + *r.outcomes[1].born_weight, r.total_form_value);
}

TEST(Measure, GaussianExample) {
  const Observable obs(Matrix::diagonal(qi, {qi.parse("1"), qi.parse("2")}));
  const auto r = measure(obs, StateVector::parse(qi, {"3", "4i"}));
  EXPECT_EQ(r.outcomes[0].born_weight, qi.parse("9"));
  EXPECT_EQ(r.outcomes[1].born_weight, qi.parse("16"));
  EXPECT_EQ(r.total_form_value, qi.parse("25"));
}

TEST(Measure, Errors) {
  const StateVector v = StateVector::parse(f9, {"1", "1+t"});
  const Observable nilpotent(outer(v, v));
  EXPECT_FALSE(nilpotent.complete());
  EXPECT_EQ(code_of([&] { measure(nilpotent, StateVector::basis(f9, 2, 0)); }),
            ErrorCode::IncompleteSpectrum);
  EXPECT_EQ(code_of([&] { measure(Observable(offdiag()), StateVector::zero(f9, 2)); }),
            ErrorCode::ZeroState);
}

TEST(Measure, IsotropicEigenspaceHasNoWeight) {
  // The identity has one eigenspace; greedy orthogonalization of a basis
  // starting with an isotropic vector fails, so build that basis directly.
  const StateVector iso = StateVector::parse(f9, {"1", "1+t"});
  EXPECT_FALSE(orthogonalize({iso, StateVector::basis(f9, 2, 0)}).has_value());
  // The standard basis of the identity orthogonalizes fine.
  const auto r = measure(Observable(Matrix::identity(f9, 2)), iso);
  ASSERT_EQ(r.outcomes.size(), 1u);
  EXPECT_TRUE(r.outcomes[0].modal_possible);
  EXPECT_EQ(r.outcomes[0].born_weight, f9.zero());
  EXPECT_EQ(r.total_form_value, f9.zero());
}

TEST(Measure, WeightSumConservation) {
  Rng rng(32);
  for (const Field f : {f9, f25, qi}) {
    int checked = 0;
    for (int k = 0; k < 80; ++k) {
      const std::size_t n = 2 + rng.below(3);
      const Observable obs(random_diagonalizable_hermitian(rng, f, n));
      ASSERT_TRUE(obs.complete());
      const StateVector psi = random_nonzero_vector(rng, f, n);
      const auto r = measure(obs, psi);
      Element sum = f.zero();
      bool defined = true;
      StateVector recombined = StateVector::zero(f, n);
      for (const auto& o : r.outcomes) {
        recombined += o.projected_state;
        EXPECT_EQ(o.modal_possible, !o.projected_state.is_zero());
        if (o.born_weight) {
          EXPECT_TRUE(is_fixed(*o.born_weight));
          sum += *o.born_weight;
        } else {
          defined = false;
        }
      }
      EXPECT_EQ(recombined, psi);
      if (!defined) continue;
      ++checked;
      EXPECT_EQ(sum, r.total_form_value) << f.name();
    }
    EXPECT_GT(checked, 40) << f.name();
  }
}

TEST(Collapse, Examples) {
  const Observable diag(Matrix::diagonal(f9, {f9.zero(), f9.one()}));
  const StateVector c = collapse(diag, StateVector::parse(f9, {"1", "1"}), f9.zero());
  EXPECT_EQ(c, StateVector::basis(f9, 2, 0));
  EXPECT_EQ(collapse(diag, c, f9.zero()), c);
  EXPECT_EQ(code_of([&] { collapse(diag, c, f9.one()); }), ErrorCode::ImpossibleOutcome);
  EXPECT_EQ(code_of([&] { collapse(diag, c, f9.parse("t")); }), ErrorCode::ImpossibleOutcome);

  const StateVector d = collapse(Observable(offdiag()), StateVector::basis(f9, 2, 0), f9.one());
  EXPECT_TRUE(same_ray(d, StateVector::parse(f9, {"t", "1"})));
}

TEST(Collapse, Idempotent) {
  Rng rng(33);
  for (const Field f : {f9, f25, qi}) {
    for (int k = 0; k < 40; ++k) {
      const std::size_t n = 2 + rng.below(3);
      const Observable obs(random_diagonalizable_hermitian(rng, f, n));
      const StateVector psi = random_nonzero_vector(rng, f, n);
      for (const auto& o : measure(obs, psi).outcomes) {
        if (!o.modal_possible) continue;
        const StateVector once = collapse(obs, psi, o.eigenvalue);
        EXPECT_TRUE(same_ray(collapse(obs, once, o.eigenvalue), once));
        EXPECT_EQ(obs.matrix() * once, o.eigenvalue * once);
      }
    }
  }
}

TEST(Projector, Examples) {
  EXPECT_EQ(projector_onto({StateVector::basis(f9, 2, 0)}).matrix,
            Matrix::diagonal(f9, {f9.one(), f9.zero()}));
  const StateVector v = StateVector::parse(f9, {"t", "1"});
  const Matrix p = projector_onto({v}).matrix;
  EXPECT_EQ(p, f9.parse("2") * outer(v, v));
  EXPECT_EQ(p * p, p);
  EXPECT_EQ(projector_onto({v, StateVector::parse(f9, {"2t", "1"})}).matrix, Matrix::identity(f9, 2));
  EXPECT_EQ(code_of([] { projector_onto({StateVector::parse(f9, {"1", "1+t"})}); }),
            ErrorCode::IsotropicVector);
  EXPECT_EQ(code_of([] { projector_onto({StateVector::parse(f9, {"1", "0"}), StateVector::parse(f9, {"1", "1"})}); }),
            ErrorCode::NotOrthogonal);
}

TEST(Projector, Laws) {
  Rng rng(34);
  for (const Field f : {Field::quad_ext(2, 1), f9, f25, qi}) {
    for (int k = 0; k < 40; ++k) {
      const std::size_t n = 2 + rng.below(3);
      // Columns of a unitary are orthonormal.
      const Matrix u = random_unitary(rng, f, n, 4);
      const std::size_t keep = 1 + rng.below(n);
      std::vector<StateVector> range, complement;
      for (std::size_t j = 0; j < n; ++j) {
        const StateVector col = random_nonzero(rng, f) * u.column(j);
        (j < keep ? range : complement).push_back(col);
      }
      const Matrix p = projector_onto(range).matrix;
      EXPECT_EQ(p * p, p);
      EXPECT_EQ(conj_transpose(p), p);
      for (const auto& v : range) EXPECT_EQ(p * v, v);
      for (const auto& w : complement) EXPECT_TRUE((p * w).is_zero());
    }
  }
}

TEST(ProbabilityProfile, Examples) {
  auto profile = [](std::initializer_list<const char*> e) { return probability_profile(StateVector::parse(qi, e)); };
  EXPECT_EQ(profile({"1", "0"}), (std::vector<Element>{qi.one(), qi.zero()}));
  EXPECT_EQ(profile({"3+4i", "0"}), (std::vector<Element>{qi.parse("25"), qi.zero()}));
  EXPECT_EQ(profile({"1+i", "1-i"}), (std::vector<Element>{qi.parse("2"), qi.parse("2")}));
  EXPECT_EQ(code_of([] { probability_profile(StateVector::basis(f9, 2, 0)); }), ErrorCode::WrongField);
}

TEST(ProbabilityProfile, InvariantUnderUnitPhases) {
  Rng rng(35);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 1 + rng.below(4);
    const StateVector psi = random_vector(rng, qi, n);
    std::vector<Element> rotated;
    for (const auto& c : psi.entries()) rotated.push_back(random_norm_one(rng, qi) * c);
    const auto profile = probability_profile(psi);
    EXPECT_EQ(probability_profile(StateVector(qi, rotated)), profile);
    Element total = qi.zero();
    for (const auto& r : profile) total += r;
    EXPECT_EQ(total, herm_form(psi, psi));
  }
}

}  // namespace
}  // namespace gqt
