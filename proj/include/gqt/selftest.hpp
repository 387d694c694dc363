#ifndef GQT_SELFTEST_HPP_
#define GQT_SELFTEST_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "gqt/io.hpp"

namespace gqt {

struct CheckResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0 && cases > 0; }
};

Json check_to_json(const CheckResult& c);

// Invariant checks. Randomised ones use a fixed seed, so results are reproducible.
// Exhaustive over F_4 dimension 2, plus random cases over F_9, F_25, Q(i) in dims 2..4.
CheckResult check_sesquilinear(std::size_t random_cases);
// Random unitaries per backend (F_4, F_9, F_25, Q(i)) preserve the form.
CheckResult check_unitary_forms(std::size_t per_backend);
// Random Hermitian matrices have char-poly coefficients in the fixed field.
CheckResult check_hermitian_char_poly(std::size_t per_backend);
// eigen_decompose against a determinant/rank oracle over F_4, F_9, F_25, dims <= 4.
CheckResult check_eigen_oracle(std::size_t matrices);
// Born weights sum to the form value for observables with a non-isotropic
// orthogonal eigenbasis; counts only such cases. Includes two fixed examples.
CheckResult check_born_conservation(std::size_t per_backend);
// All orthogonal non-isotropic one- and two-element families of F_9^2.
CheckResult check_projector_laws();
// Every backend, dims 2..4, re-verified with an independent rank.
CheckResult check_no_cloning();
// F_9 into F_729 exhaustively, form preservation on random pairs, m = 2 rejected.
CheckResult check_embedding(std::size_t form_pairs);
// E x . x*x + 1 = 0 for every prime below the bound.
CheckResult check_lefschetz_squares(std::uint64_t prime_bound);
// Random conic pairs over F_3 and F_5 meet within the given level.
CheckResult check_conic_pairs(std::size_t pairs_per_prime, unsigned levels);
// Random semilinear maps over F_9, N <= 3: certificate and level-1 fixed points.
CheckResult check_autocode(std::size_t maps);

// Runs every check at a small volume. {"checks": [...], "ok": bool}
Json selftest_report();

}  // namespace gqt

#endif  // GQT_SELFTEST_HPP_
