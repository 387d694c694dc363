#include "gqt/autocode.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "gqt/embed.hpp"

namespace gqt {

namespace {

Matrix involute_power(const Matrix& m, unsigned e) { return e ? involute(m) : m; }
StateVector involute_power(const StateVector& v, unsigned e) { return e ? involute(v) : v; }

std::optional<StateVector> normalized(const StateVector& v) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_zero()) return inverse(v[k]) * v;
  }
  return std::nullopt;
}

std::vector<std::uint64_t> codes(const StateVector& v) {
  std::vector<std::uint64_t> out;
  for (const auto& x : v.entries()) out.push_back(x.code());
  return out;
}

// Canonical points of PG(k-1, F): coefficient vectors whose first nonzero entry is 1.
template <typename Visit>
bool for_each_projective_point(Field field, std::size_t k, std::uint64_t cap, Visit visit) {
  std::uint64_t visited = 0;
  const std::uint64_t n = field.order();
  for (std::size_t lead = 0; lead < k; ++lead) {
    const std::size_t free = k - lead - 1;
    std::vector<std::uint64_t> digits(free, 0);
    while (true) {
      if (visited++ >= cap) return false;
      std::vector<Element> coords(k, field.zero());
      coords[lead] = field.one();
      for (std::size_t i = 0; i < free; ++i) coords[lead + 1 + i] = Element(field, digits[i]);
      visit(StateVector(field, std::move(coords)));
      std::size_t i = free;
      while (i > 0 && ++digits[i - 1] == n) digits[--i] = 0;
      if (i == 0) break;
    }
  }
  return true;
}

struct Level {
  unsigned m;
  Field field;
  std::optional<FieldEmbedding> embedding;  // from the source field
  bool form_compatible;
};

}  // namespace

SemilinearMap::SemilinearMap(Matrix matrix, unsigned aut_exponent) : matrix_(std::move(matrix)), e_(aut_exponent) {
  if (e_ > 1) throw Error(ErrorCode::InvalidArgument, "aut_exponent must be 0 or 1");
  if (!matrix_.is_square()) throw Error(ErrorCode::NonSquare, "semilinear map needs a square matrix");
  if (determinant(matrix_).is_zero()) throw Error(ErrorCode::Singular, "semilinear map needs a nonsingular matrix");
}

StateVector apply(const SemilinearMap& phi, const StateVector& psi) {
  if (psi.field() != phi.matrix().field()) throw Error(ErrorCode::FieldMismatch, "state and map over different fields");
  if (psi.size() != phi.dim()) throw Error(ErrorCode::DimensionMismatch, "state dimension does not match the map");
  return phi.matrix() * involute_power(psi, phi.aut_exponent());
}

SemilinearMap compose(const SemilinearMap& first, const SemilinearMap& second) {
  return SemilinearMap(first.matrix() * involute_power(second.matrix(), first.aut_exponent()),
                       (first.aut_exponent() + second.aut_exponent()) % 2);
}

LinearCertificate square_is_linear(const SemilinearMap& phi) {
  const bool squared = phi.aut_exponent() == 1;
  const SemilinearMap lin = squared ? compose(phi, phi) : phi;
  const Field field = phi.matrix().field();
  bool ok = lin.aut_exponent() == 0;
  for (std::size_t i = 0; i < phi.dim() && ok; ++i) {
    for (const Element& c : {field.one(), field.generator()}) {
      const StateVector v = c * StateVector::basis(field, phi.dim(), i);
      const StateVector image = squared ? apply(phi, apply(phi, v)) : apply(phi, v);
      ok = ok && image == lin.matrix() * v;
    }
  }
  return LinearCertificate{squared, lin.matrix(), ok};
}

std::string status_name(FixedPointStatus s) {
  switch (s) {
    case FixedPointStatus::Ok: return "ok";
    case FixedPointStatus::BoundTooSmall: return "bound_too_small";
    case FixedPointStatus::NoFixedPoints: return "no_fixed_points";
  }
  return "";
}

FixedPointReport fixed_points(const SemilinearMap& phi, unsigned max_ext, bool allow_form_incompatible) {
  const Field source = phi.matrix().field();
  if (source.kind() != FieldKind::QuadExt) throw Error(ErrorCode::WrongField, "fixed points need a quadratic extension field");
  if (max_ext == 0) throw Error(ErrorCode::InvalidArgument, "max_ext must be at least 1");
  const unsigned e = phi.aut_exponent();
  const std::size_t n = phi.dim();
  if (e == 1 && n > kSemilinearMaxDim) {
    throw Error(ErrorCode::DimensionCap, "semilinear fixed points are scanned only up to dimension " +
                                             std::to_string(kSemilinearMaxDim));
  }

  FixedPointReport report{FixedPointStatus::Ok, {}, {}, {}, false, ""};
  std::vector<Level> levels;
  for (unsigned m = 1; m <= max_ext; ++m) {
    const bool odd = m % 2 == 1;
    if (!odd && (e == 1 || !allow_form_incompatible)) {
      report.levels_skipped.push_back(m);
      continue;
    }
    const std::uint64_t p = source.characteristic();
    const unsigned degree = source.degree() * m;
    std::uint64_t order = 1;
    bool too_big = false;
    for (unsigned i = 0; i < degree && !too_big; ++i) {
      too_big = order > (std::uint64_t{1} << 24) / p;
      order *= p;
    }
    std::uint64_t points = 1;
    for (std::size_t i = 1; i < n && !too_big; ++i) {
      too_big = points > kSemilinearScanCap / order;
      points *= order;
    }
    if (too_big || (e == 1 && points > kSemilinearScanCap)) {
      report.levels_skipped.push_back(m);
      continue;
    }
    if (m == 1) {
      levels.push_back({1, source, std::nullopt, true});
    } else if (odd) {
      FieldEmbedding emb = build_embedding(source, m);
      levels.push_back({m, emb.target(), emb, true});
    } else {
      const Field target = Field::galois(p, degree);
      levels.push_back({m, target, embed_into(source, target), false});
    }
  }

  // Images of earlier searched fields, to keep only points first appearing at a level.
  auto subfield_images = [&](const Level& lvl) {
    std::vector<std::set<std::uint64_t>> out;
    for (const auto& lower : levels) {
      if (lower.m >= lvl.m || lvl.m % lower.m != 0) continue;
      const FieldEmbedding down = embed_into(lower.field, lvl.field);
      std::set<std::uint64_t> image;
      for (std::uint64_t c = 0; c < lower.field.order(); ++c) image.insert(down(Element(lower.field, c)).code());
      out.push_back(std::move(image));
    }
    return out;
  };

  for (const auto& lvl : levels) {
    report.levels_searched.push_back(lvl.m);
    const Matrix m = lvl.embedding ? extend_matrix(*lvl.embedding, phi.matrix()) : phi.matrix();
    const auto lower = subfield_images(lvl);
    auto is_new = [&](const StateVector& v) {
      for (const auto& image : lower) {
        bool inside = true;
        for (const auto& x : v.entries()) inside = inside && image.count(x.code());
        if (inside) return false;
      }
      return true;
    };
    std::vector<FixedPoint> found;
    auto add = [&](const StateVector& v, const Element& c) {
      if (!is_new(v)) return;
      if (m * involute_power(v, e) != c * v) throw Error(ErrorCode::Internal, "fixed point failed verification");
      found.push_back({lvl.m, v, c, lvl.form_compatible});
    };
    if (e == 0) {
      for (const auto& space : eigen_decompose(m).spaces) {
        const std::size_t budget = kMaxFixedPoints - std::min(kMaxFixedPoints, report.points.size() + found.size());
        const bool complete = for_each_projective_point(lvl.field, space.basis.size(), budget, [&](const StateVector& coeffs) {
          StateVector v = StateVector::zero(lvl.field, n);
          for (std::size_t i = 0; i < coeffs.size(); ++i) v += coeffs[i] * space.basis[i];
          add(*normalized(v), space.eigenvalue);
        });
        report.truncated = report.truncated || !complete;
      }
    } else {
      for_each_projective_point(lvl.field, n, kSemilinearScanCap, [&](const StateVector& v) {
        const StateVector w = m * involute(v);
        std::size_t k = 0;
        while (v[k].is_zero()) ++k;
        if (w == w[k] * v) add(v, w[k]);
      });
    }
    std::sort(found.begin(), found.end(),
              [](const FixedPoint& a, const FixedPoint& b) { return codes(a.representative) < codes(b.representative); });
    report.points.insert(report.points.end(), found.begin(), found.end());
  }

  if (report.points.empty()) {
    report.status = e == 0 ? FixedPointStatus::BoundTooSmall : FixedPointStatus::NoFixedPoints;
  }
  if (e == 0 && report.points.empty()) {
    report.note = "no eigenvector up to the searched levels; eigenvalues of a " + std::to_string(n) +
                  "-dimensional map lie in an extension of degree at most " + std::to_string(n);
    bool skipped_even = false;
    for (const auto m : report.levels_skipped) skipped_even = skipped_even || m % 2 == 0;
    if (skipped_even) {
      report.note += ", and even extension degrees carry no involution restricting to the source one";
    }
  }
  return report;
}

}  // namespace gqt
