#include "gqt/forms.hpp"

#include <set>
#include <sstream>

namespace gqt {

namespace {

void require_same(Field a, Field b) {
  if (a != b) {
    throw Error(ErrorCode::FieldMismatch, "objects over " + a.name() + " and " + b.name());
  }
}

void require_square(const Matrix& m) {
  if (!m.is_square()) {
    throw Error(ErrorCode::NonSquare, "expected a square matrix, got " +
                                          std::to_string(m.rows()) + "x" +
                                          std::to_string(m.cols()));
  }
}

// Finite fields larger than this are not scanned for eigenvalues.
constexpr std::uint64_t kMaxScanOrder = std::uint64_t{1} << 24;
// Gaussian integers whose norm exceeds this are not factored.
const mpz_class kMaxFactorNorm("1000000000000");

struct GaussInt {
  mpz_class re;
  mpz_class im;
};

GaussInt gmul(const GaussInt& a, const GaussInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

std::uint64_t isqrt(std::uint64_t n) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), mpz_class(static_cast<unsigned long>(n)).get_mpz_t());
  return r.get_ui();
}

mpz_class gnorm(const GaussInt& a) { return a.re * a.re + a.im * a.im; }

// Exact quotient a / d when d divides a.
bool gdivides(const GaussInt& d, const GaussInt& a, GaussInt* quotient) {
  const mpz_class n = gnorm(d);
  const mpz_class re = a.re * d.re + a.im * d.im;
  const mpz_class im = a.im * d.re - a.re * d.im;
  if (!mpz_divisible_p(re.get_mpz_t(), n.get_mpz_t()) ||
      !mpz_divisible_p(im.get_mpz_t(), n.get_mpz_t())) {
    return false;
  }
  if (quotient) *quotient = {re / n, im / n};
  return true;
}

// All divisors of a nonzero Gaussian integer up to units, or false when its
// norm is too large to factor by trial division.
bool gaussian_divisors(const GaussInt& w, std::vector<GaussInt>* out) {
  mpz_class n = gnorm(w);
  if (n > kMaxFactorNorm) return false;
  std::uint64_t rest = n.get_ui();
  std::vector<std::pair<GaussInt, unsigned>> factors;
  GaussInt remaining = w;
  auto take = [&](const GaussInt& pi) {
    unsigned mult = 0;
    GaussInt q;
    while (gdivides(pi, remaining, &q)) {
      remaining = q;
      ++mult;
    }
    if (mult) factors.emplace_back(pi, mult);
  };
  for (std::uint64_t p = 2; p * p <= rest || rest > 1; ++p) {
    if (p * p > rest) p = rest;
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    const auto pz = mpz_class(static_cast<unsigned long>(p));
    if (p == 2) {
      take({1, 1});
    } else if (p % 4 == 3) {
      take({pz, 0});
    } else {
      // p = a^2 + b^2 splits as (a + bi)(a - bi).
      for (std::uint64_t a = 1;; ++a) {
        const std::uint64_t b = isqrt(p - a * a);
        if (a * a + b * b == p) {
          const mpz_class az(static_cast<unsigned long>(a));
          const mpz_class bz(static_cast<unsigned long>(b));
          take({az, bz});
          take({az, -bz});
          break;
        }
      }
    }
  }
  std::vector<GaussInt> divs{{1, 0}};
  for (const auto& [pi, mult] : factors) {
    const std::size_t base = divs.size();
    GaussInt power{1, 0};
    for (unsigned k = 1; k <= mult; ++k) {
      power = gmul(power, pi);
      for (std::size_t j = 0; j < base; ++j) divs.push_back(gmul(divs[j], power));
    }
  }
  *out = std::move(divs);
  return true;
}

RootSearch gaussian_roots(const Polynomial& f) {
  const Field field = f.field();
  RootSearch result;
  std::set<Element> roots;
  std::vector<Element> coeffs = f.coefficients();
  std::size_t shift = 0;
  while (shift < coeffs.size() && coeffs[shift].is_zero()) ++shift;
  if (shift > 0) roots.insert(field.zero());
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(shift));
  if (coeffs.size() > 1) {
    mpz_class lcm = 1;
    for (const auto& c : coeffs) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.gaussian().re.get_den_mpz_t());
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.gaussian().im.get_den_mpz_t());
    }
    auto integral = [&](const Element& c) {
      Rational re = c.gaussian().re * lcm;
      Rational im = c.gaussian().im * lcm;
      return GaussInt{re.get_num(), im.get_num()};
    };
    std::vector<GaussInt> num_divs, den_divs;
    if (!gaussian_divisors(integral(coeffs.front()), &num_divs) ||
        !gaussian_divisors(integral(coeffs.back()), &den_divs)) {
      result.exhaustive = false;
    } else {
      const Polynomial reduced(field, coeffs);
      const GaussInt units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      for (const auto& u0 : num_divs) {
        for (const auto& unit : units) {
          const GaussInt u = gmul(u0, unit);
          for (const auto& v : den_divs) {
            const mpz_class n = gnorm(v);
            const Rational re(u.re * v.re + u.im * v.im, n);
            const Rational im(u.im * v.re - u.re * v.im, n);
            const Element z(field, re, im);
            if (roots.count(z)) continue;
            if (reduced(z).is_zero()) roots.insert(z);
          }
        }
      }
    }
  }
  result.roots.assign(roots.begin(), roots.end());
  return result;
}

}  // namespace

// --- StateVector ---

StateVector::StateVector(Field field, std::vector<Element> entries)
    : field_(field), entries_(std::move(entries)) {
  for (const auto& e : entries_) require_same(field_, e.field());
}

StateVector StateVector::zero(Field field, std::size_t dim) {
  return StateVector(field, std::vector<Element>(dim, field.zero()));
}

StateVector StateVector::basis(Field field, std::size_t dim, std::size_t k) {
  StateVector v = zero(field, dim);
  v.entries_.at(k) = field.one();
  return v;
}

StateVector StateVector::parse(Field field, std::initializer_list<const char*> entries) {
  std::vector<Element> out;
  for (const char* e : entries) out.push_back(field.parse(e));
  return StateVector(field, std::move(out));
}

bool StateVector::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

StateVector& StateVector::operator+=(const StateVector& other) {
  require_same(field_, other.field_);
  if (size() != other.size()) throw Error(ErrorCode::DimensionMismatch, "vector sizes differ");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

StateVector& StateVector::operator-=(const StateVector& other) {
  require_same(field_, other.field_);
  if (size() != other.size()) throw Error(ErrorCode::DimensionMismatch, "vector sizes differ");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

StateVector operator*(const Element& c, const StateVector& v) {
  require_same(c.field(), v.field_);
  std::vector<Element> out = v.entries_;
  for (auto& e : out) e = c * e;
  return StateVector(v.field_, std::move(out));
}

std::string StateVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out += ", ";
    out += entries_[i].to_string();
  }
  return out + ")";
}

// --- Matrix ---

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Element> entries)
    : field_(field), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix entry count does not match its shape");
  }
  for (const auto& e : data_) require_same(field_, e.field());
}

Matrix Matrix::zero(Field field, std::size_t rows, std::size_t cols) {
  return Matrix(field, rows, cols, std::vector<Element>(rows * cols, field.zero()));
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m = zero(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::diagonal(Field field, const std::vector<Element>& diag) {
  Matrix m = zero(field, diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) {
    require_same(field, diag[i].field());
    m(i, i) = diag[i];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<StateVector>& columns) {
  if (columns.empty()) throw Error(ErrorCode::DimensionMismatch, "no columns");
  const Field field = columns.front().field();
  const std::size_t n = columns.front().size();
  Matrix m = zero(field, n, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    require_same(field, columns[j].field());
    if (columns[j].size() != n) throw Error(ErrorCode::DimensionMismatch, "column sizes differ");
    for (std::size_t i = 0; i < n; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Matrix Matrix::parse(Field field, std::size_t rows, std::size_t cols,
                     std::initializer_list<const char*> entries) {
  std::vector<Element> out;
  for (const char* e : entries) out.push_back(field.parse(e));
  return Matrix(field, rows, cols, std::move(out));
}

StateVector Matrix::row(std::size_t i) const {
  return StateVector(field_, std::vector<Element>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)));
}

StateVector Matrix::column(std::size_t j) const {
  std::vector<Element> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return StateVector(field_, std::move(out));
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same(field_, other.field_);
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix shapes differ");
  }
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same(field_, other.field_);
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix shapes differ");
  }
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same(a.field_, b.field_);
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "inner dimensions differ");
  Matrix out = Matrix::zero(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Element& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

StateVector operator*(const Matrix& a, const StateVector& v) {
  require_same(a.field_, v.field());
  if (a.cols_ != v.size()) throw Error(ErrorCode::DimensionMismatch, "matrix and vector sizes differ");
  StateVector out = StateVector::zero(a.field_, a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
  }
  return out;
}

Matrix operator*(const Element& c, const Matrix& a) {
  require_same(c.field(), a.field_);
  Matrix out = a;
  for (auto& e : out.data_) e = c * e;
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << (*this)(i, j).to_string();
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

// --- forms ---

Element herm_form(const StateVector& x, const StateVector& y) {
  require_same(x.field(), y.field());
  if (x.size() != y.size()) {
    throw Error(ErrorCode::DimensionMismatch, "form arguments have different dimensions");
  }
  Element acc = x.field().zero();
  for (std::size_t i = 0; i < x.size(); ++i) acc += involute(x[i]) * y[i];
  return acc;
}

StateVector involute(const StateVector& v) {
  std::vector<Element> out;
  out.reserve(v.size());
  for (const auto& e : v.entries()) out.push_back(involute(e));
  return StateVector(v.field(), std::move(out));
}

Matrix involute(const Matrix& m) {
  std::vector<Element> out;
  out.reserve(m.entries().size());
  for (const auto& e : m.entries()) out.push_back(involute(e));
  return Matrix(m.field(), m.rows(), m.cols(), std::move(out));
}

Matrix transpose(const Matrix& m) {
  Matrix out = Matrix::zero(m.field(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  }
  return out;
}

Matrix conj_transpose(const Matrix& m) {
  Matrix out = Matrix::zero(m.field(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = involute(m(i, j));
  }
  return out;
}

Matrix outer(const StateVector& v, const StateVector& w) {
  require_same(v.field(), w.field());
  Matrix out = Matrix::zero(v.field(), v.size(), w.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) out(i, j) = v[i] * involute(w[j]);
  }
  return out;
}

bool is_unitary(const Matrix& u) {
  require_square(u);
  return conj_transpose(u) * u == Matrix::identity(u.field(), u.rows());
}

bool is_hermitian(const Matrix& a) {
  require_square(a);
  return conj_transpose(a) == a;
}

Polynomial char_poly(const Matrix& a) {
  require_square(a);
  const Field field = a.field();
  const std::size_t n = a.rows();
  if (n == 0) return Polynomial::constant(field.one());
  // m = xI - A
  std::vector<Polynomial> m;
  m.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Element> c{-a(i, j)};
      if (i == j) c.push_back(field.one());
      m.emplace_back(field, std::move(c));
    }
  }
  auto at = [&](std::size_t i, std::size_t j) -> Polynomial& { return m[i * n + j]; };
  Polynomial prev = Polynomial::constant(field.one());
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = at(k, k) * at(i, j) - at(i, k) * at(k, j);
        auto [q, r] = divmod(num, prev);
        if (!r.is_zero()) throw Error(ErrorCode::Internal, "inexact Bareiss division");
        at(i, j) = std::move(q);
      }
    }
    prev = at(k, k);
  }
  return at(n - 1, n - 1);
}

RowEchelon row_reduce(const Matrix& input) {
  Matrix m = input;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    }
    const Element scale = inverse(m(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= scale;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const Element factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivot_columns.size(); }

std::vector<StateVector> null_space(const Matrix& m) {
  const RowEchelon ech = row_reduce(m);
  const Field field = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivot_columns) is_pivot[c] = true;
  std::vector<StateVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    StateVector v = StateVector::zero(field, m.cols());
    v[free] = field.one();
    for (std::size_t r = 0; r < ech.pivot_columns.size(); ++r) {
      v[ech.pivot_columns[r]] = -ech.reduced(r, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

StateVector solve(const Matrix& m, const StateVector& b) {
  require_same(m.field(), b.field());
  if (b.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side size differs");
  Matrix aug = Matrix::zero(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const RowEchelon ech = row_reduce(aug);
  StateVector x = StateVector::zero(m.field(), m.cols());
  for (std::size_t r = 0; r < ech.pivot_columns.size(); ++r) {
    const std::size_t c = ech.pivot_columns[r];
    if (c == m.cols()) throw Error(ErrorCode::Inconsistent, "linear system has no solution");
    x[c] = ech.reduced(r, m.cols());
  }
  return x;
}

Element determinant(const Matrix& input) {
  require_square(input);
  Matrix m = input;
  const std::size_t n = m.rows();
  Element det = m.field().one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return m.field().zero();
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    const Element inv = inverse(m(col, col));
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col).is_zero()) continue;
      const Element factor = m(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) m(i, j) -= factor * m(col, j);
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  require_square(m);
  const std::size_t n = m.rows();
  Matrix aug = Matrix::zero(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.field().one();
  }
  const RowEchelon ech = row_reduce(aug);
  if (ech.pivot_columns.size() < n || ech.pivot_columns[n - 1] != n - 1) {
    throw Error(ErrorCode::Singular, "matrix is singular");
  }
  Matrix out = Matrix::zero(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = ech.reduced(i, n + j);
  }
  return out;
}

RootSearch find_roots(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "the zero polynomial has every root");
  const Field field = f.field();
  if (!field.is_finite()) return gaussian_roots(f);
  RootSearch result;
  if (field.order() > kMaxScanOrder) {
    result.exhaustive = false;
    return result;
  }
  for (std::uint64_t c = 0; c < field.order(); ++c) {
    Element x(field, c);
    if (f(x).is_zero()) result.roots.push_back(std::move(x));
  }
  return result;
}

EigenDecomposition eigen_decompose(const Matrix& a) {
  require_square(a);
  const Field field = a.field();
  const std::size_t n = a.rows();
  const RootSearch search = find_roots(char_poly(a));
  EigenDecomposition out;
  out.exhaustive = search.exhaustive;
  std::size_t total = 0;
  for (const auto& lambda : search.roots) {
    Matrix shifted = a - lambda * Matrix::identity(field, n);
    Eigenspace space{lambda, null_space(shifted)};
    total += space.basis.size();
    out.spaces.push_back(std::move(space));
  }
  out.complete = total == n;
  return out;
}

}  // namespace gqt
