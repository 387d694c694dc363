#ifndef GQT_AUTOCODE_HPP_
#define GQT_AUTOCODE_HPP_

#include <string>
#include <vector>

#include "gqt/forms.hpp"

namespace gqt {

// psi -> M * involute^e(psi), with e in {0, 1}.
class SemilinearMap {
 public:
  // Throws NonSquare, Singular, InvalidArgument (e > 1).
  SemilinearMap(Matrix matrix, unsigned aut_exponent);

  const Matrix& matrix() const { return matrix_; }
  unsigned aut_exponent() const { return e_; }
  std::size_t dim() const { return matrix_.rows(); }

 private:
  Matrix matrix_;
  unsigned e_;
};

// Throws DimensionMismatch, FieldMismatch.
StateVector apply(const SemilinearMap& phi, const StateVector& psi);

// first after second: (M1 * involute^e1(M2), e1 + e2 mod 2).
SemilinearMap compose(const SemilinearMap& first, const SemilinearMap& second);

struct LinearCertificate {
  bool squared;   // false: phi itself is linear
  Matrix linear;  // the linear matrix of phi or phi^2
  bool verified;  // agreement with applying phi (twice) on e_i and g e_i
};

LinearCertificate square_is_linear(const SemilinearMap& phi);

// Semilinear fixed-point scans stop at this many projective points per level.
constexpr std::uint64_t kSemilinearScanCap = std::uint64_t{1} << 22;
constexpr std::size_t kSemilinearMaxDim = 3;
// Enumeration of fixed points inside large eigenspaces stops here.
constexpr std::size_t kMaxFixedPoints = 100000;

struct FixedPoint {
  unsigned level;            // extension degree m over the source field
  StateVector representative;  // first nonzero coordinate 1
  Element scalar;            // M psi^(gamma^e) = scalar * psi
  bool form_compatible;      // false at even levels reached by plain extension
};

enum class FixedPointStatus { Ok, BoundTooSmall, NoFixedPoints };
std::string status_name(FixedPointStatus s);

struct FixedPointReport {
  FixedPointStatus status;
  std::vector<FixedPoint> points;  // ordered by level, then representative
  std::vector<unsigned> levels_searched;
  std::vector<unsigned> levels_skipped;  // even levels without a compatible involution, or over the scan cap
  bool truncated = false;
  std::string note;
};

// Searches levels m = 1..max_ext. For e = 0, odd levels come from the
// involution-compatible embedding and even levels are skipped unless
// allow_form_incompatible is set. For e = 1, each searched level is an
// exhaustive projective scan. Throws WrongField (source not a quadratic
// extension), DimensionCap (e = 1 with dim > 3), InvalidArgument.
FixedPointReport fixed_points(const SemilinearMap& phi, unsigned max_ext, bool allow_form_incompatible = false);

}  // namespace gqt

#endif  // GQT_AUTOCODE_HPP_
