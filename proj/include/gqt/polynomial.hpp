#ifndef GQT_POLYNOMIAL_HPP_
#define GQT_POLYNOMIAL_HPP_

#include <string>
#include <utility>
#include <vector>

#include "gqt/starfield.hpp"

namespace gqt {

// Univariate polynomial over a field, coefficients low-to-high with trailing
// zeros stripped. The zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  explicit Polynomial(Field field) : field_(field) {}
  Polynomial(Field field, std::vector<Element> coefficients);

  static Polynomial constant(const Element& c);
  // c * x^degree
  static Polynomial monomial(const Element& c, std::size_t degree);
  // x - root
  static Polynomial linear(const Element& root);

  Field field() const { return field_; }
  const std::vector<Element>& coefficients() const { return coeffs_; }
  Element coefficient(std::size_t k) const;
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }
  Element leading() const;

  // Horner evaluation.
  Element operator()(const Element& x) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Element& c, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Written in the variable x, highest degree first: "x^2+2x+1".
  std::string to_string() const;

 private:
  void trim();

  Field field_;
  std::vector<Element> coeffs_;
};

// Quotient and remainder; throws DivisionByZero for a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

}  // namespace gqt

#endif  // GQT_POLYNOMIAL_HPP_
