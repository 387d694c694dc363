#ifndef GQT_STARFIELD_HPP_
#define GQT_STARFIELD_HPP_

// Fields with involution.
//
// Four kinds of field are supported:
//
//   Prime     F_p with the identity involution (an "improper" involution).
//   QuadExt   F_{q^2}, q = p^e, presented as F_p[t]/(m(t)) with deg m = 2e,
//             carrying the Frobenius involution x -> x^q. Its fixed field is
//             F_q, which plays the role of the reals inside the complexes.
//   Galois    F_{p^n} = F_p[t]/(m(t)) with the identity involution. Used for
//             extension towers that do not need a compatible involution
//             (sentence evaluation, curve intersection, plain extension levels).
//   Gaussian  Q(i) with complex conjugation a+bi -> a-bi.
//
// A Field is an interned, immutable handle: two handles compare equal exactly
// when they denote the same presentation. Handles stay valid for the lifetime
// of the program, so Elements can hold them by value without ownership games.
//
// Finite field elements are stored as a packed code: the coefficient vector
// (c_0, ..., c_{n-1}) of the polynomial representative read as the base-p
// integer c_0 + c_1 p + ... + c_{n-1} p^{n-1}. The canonical element order is
// the numeric order of codes; polynomials (moduli) are ordered the same way.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "gqt/error.hpp"

namespace gqt {

using Rational = mpq_class;

enum class FieldKind { Prime, QuadExt, Galois, Gaussian };

namespace detail {
struct FieldData;
}

class Element;

class Field {
 public:
  static Field prime(std::uint64_t p);
  // F_{q^2} with q = p^e. Without an explicit modulus the canonical one (the
  // smallest monic irreducible of degree 2e in code order) is used.
  static Field quad_ext(std::uint64_t p, unsigned e,
                        std::optional<std::vector<std::uint64_t>> modulus = {});
  // F_{p^n} with the identity involution; galois(p, 1) is prime(p).
  static Field galois(std::uint64_t p, unsigned n,
                      std::optional<std::vector<std::uint64_t>> modulus = {});
  static Field gaussian();

  FieldKind kind() const;
  // 0 for Q(i).
  std::uint64_t characteristic() const;
  // Degree over the prime field; Q(i) reports 2, its degree over Q.
  unsigned degree() const;
  // e for QuadExt, 0 otherwise.
  unsigned quad_exponent() const;
  // Number of elements, 0 for Q(i).
  std::uint64_t order() const;
  // Size of the fixed field of the involution, 0 when infinite.
  std::uint64_t fixed_order() const;
  unsigned involution_order() const;
  bool is_finite() const;
  // Monic modulus, coefficients low-to-high; empty for Prime and Gaussian.
  const std::vector<std::uint64_t>& modulus() const;

  Element zero() const;
  Element one() const;
  Element from_int(std::int64_t value) const;
  Element from_code(std::uint64_t code) const;
  // t for polynomial presentations, i for Q(i), 1 for prime fields.
  Element generator() const;
  Element gaussian(const Rational& re, const Rational& im) const;

  // Textual element syntax: "3" (prime), "1+2t" (QuadExt/Galois),
  // "3/2+4i" (Gaussian).
  Element parse(const std::string& text) const;

  // Short description such as "F_9" or "Q(i)".
  std::string name() const;

  friend bool operator==(Field a, Field b) { return a.data_ == b.data_; }
  friend bool operator!=(Field a, Field b) { return a.data_ != b.data_; }

  const detail::FieldData* data() const { return data_; }

 private:
  explicit Field(const detail::FieldData* data) : data_(data) {}
  const detail::FieldData* data_;

  friend class Element;
};

struct GaussianValue {
  Rational re;
  Rational im;
};

class Element {
 public:
  Element(Field field, std::uint64_t code);
  Element(Field field, Rational re, Rational im);

  Field field() const { return Field(field_); }
  // Packed coefficient code (finite fields only).
  std::uint64_t code() const;
  const GaussianValue& gaussian() const;
  // Polynomial coefficients over F_p, low-to-high, length = field degree.
  std::vector<std::uint64_t> coefficients() const;

  bool is_zero() const;
  bool is_one() const;

  Element operator-() const;
  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Element& other);
  Element& operator/=(const Element& other);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Element& b) { return a *= b; }
  friend Element operator/(Element a, const Element& b) { return a /= b; }

  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
  // Canonical order; only meaningful within one field.
  friend bool operator<(const Element& a, const Element& b);

  std::string to_string() const;

 private:
  const detail::FieldData* field_;
  std::variant<std::uint64_t, GaussianValue> value_;

  friend Element inverse(const Element& x);
  friend Element pow(const Element& x, std::uint64_t exponent);
};

Element inverse(const Element& x);
Element pow(const Element& x, std::uint64_t exponent);

// The field's involution: x^q on F_{q^2}, complex conjugation on Q(i), the
// identity otherwise.
Element involute(const Element& x);
bool is_fixed(const Element& x);
// involute(x) * x, always in the fixed field.
Element norm(const Element& x);
// Unique (a, b) with a, b fixed and x = a + kappa * b, where kappa is the
// field generator (t or i). Throws ImproperField for identity involutions.
std::pair<Element, Element> fixed_field_coordinates(const Element& x);

// Every element of a finite field in canonical order.
std::vector<Element> all_elements(Field field);

bool is_prime(std::uint64_t n);

}  // namespace gqt

#endif  // GQT_STARFIELD_HPP_
