#include "gqt/polynomial.hpp"

namespace gqt {

Polynomial::Polynomial(Field field, std::vector<Element> coefficients)
    : field_(field), coeffs_(std::move(coefficients)) {
  for (const auto& c : coeffs_) {
    if (c.field() != field_) {
      throw Error(ErrorCode::FieldMismatch, "polynomial coefficient from another field");
    }
  }
  trim();
}

Polynomial Polynomial::constant(const Element& c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::monomial(const Element& c, std::size_t degree) {
  std::vector<Element> coeffs(degree + 1, c.field().zero());
  coeffs[degree] = c;
  return Polynomial(c.field(), std::move(coeffs));
}

Polynomial Polynomial::linear(const Element& root) {
  return Polynomial(root.field(), {-root, root.field().one()});
}

Element Polynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : field_.zero();
}

Element Polynomial::leading() const {
  return coeffs_.empty() ? field_.zero() : coeffs_.back();
}

Element Polynomial::operator()(const Element& x) const {
  if (x.field() != field_) {
    throw Error(ErrorCode::FieldMismatch, "evaluation point from another field");
  }
  Element acc = field_.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.field_ != field_) throw Error(ErrorCode::FieldMismatch, "polynomial fields differ");
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), field_.zero());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.field_ != field_) throw Error(ErrorCode::FieldMismatch, "polynomial fields differ");
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), field_.zero());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.field_ != b.field_) throw Error(ErrorCode::FieldMismatch, "polynomial fields differ");
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
  std::vector<Element> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial(a.field_, std::move(out));
}

Polynomial operator*(const Element& c, const Polynomial& a) {
  std::vector<Element> out = a.coeffs_;
  for (auto& x : out) x = c * x;
  return Polynomial(a.field_, std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Element& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    const bool compound = cs.find_first_of("+-", 1) != std::string::npos;
    if (!out.empty()) out += "+";
    if (k == 0) {
      out += compound ? "(" + cs + ")" : cs;
      continue;
    }
    if (!c.is_one()) out += compound ? "(" + cs + ")" : cs;
    out += "x";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.field() != b.field()) throw Error(ErrorCode::FieldMismatch, "polynomial fields differ");
  const Field field = a.field();
  std::vector<Element> rem = a.coefficients();
  const std::size_t db = b.coefficients().size() - 1;
  if (rem.size() <= db) return {Polynomial(field), a};
  std::vector<Element> quot(rem.size() - db, field.zero());
  const Element lead_inv = inverse(b.leading());
  for (std::size_t k = rem.size(); k-- > db;) {
    const Element c = rem[k] * lead_inv;
    if (c.is_zero()) continue;
    quot[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= c * b.coefficients()[j];
  }
  rem.resize(db, field.zero());
  return {Polynomial(field, std::move(quot)), Polynomial(field, std::move(rem))};
}

}  // namespace gqt
