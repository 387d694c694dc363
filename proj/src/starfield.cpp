#include "gqt/starfield.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace gqt {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ImproperField: return "ImproperField";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::IncompleteSpectrum: return "IncompleteSpectrum";
    case ErrorCode::ZeroState: return "ZeroState";
    case ErrorCode::ImpossibleOutcome: return "ImpossibleOutcome";
    case ErrorCode::IsotropicVector: return "IsotropicVector";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::WrongField: return "WrongField";
    case ErrorCode::EvenExtensionDegree: return "EvenExtensionDegree";
    case ErrorCode::NoRootFound: return "NoRootFound";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::FieldNotFinite: return "FieldNotFinite";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::DimensionCap: return "DimensionCap";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

namespace detail {

constexpr unsigned kMaxDegree = 64;
constexpr std::uint64_t kMaxCharacteristic = std::uint64_t{1} << 31;
constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 62;

struct FieldData {
  FieldKind kind = FieldKind::Prime;
  std::uint64_t p = 0;
  unsigned e = 0;
  unsigned degree = 1;
  std::vector<std::uint64_t> modulus;
  std::vector<std::uint64_t> pow_p;
  std::uint64_t order = 0;
  // Involution is x -> x^q; q == 1 means identity.
  std::uint64_t q = 1;
};

using Coeffs = std::array<std::uint64_t, kMaxDegree>;

}  // namespace detail

namespace {

using detail::Coeffs;
using detail::FieldData;

// --- small dense polynomials over F_p, used only for modulus validation ---

using PolyFp = std::vector<std::uint64_t>;

void trim(PolyFp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint64_t exp = p - 2;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

PolyFp poly_mod(PolyFp a, const PolyFp& f, std::uint64_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t lead_inv = mod_inverse(f.back(), p);
  while (a.size() > df) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t j = 0; j <= df; ++j) {
      a[shift + j] = (a[shift + j] + (p - c) * f[j]) % p;
    }
    trim(a);
  }
  return a;
}

PolyFp poly_mulmod(const PolyFp& a, const PolyFp& b, const PolyFp& f,
                   std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PolyFp r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
  }
  return poly_mod(std::move(r), f, p);
}

PolyFp poly_gcd(PolyFp a, PolyFp b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PolyFp r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Ben-Or: f of degree n is irreducible iff gcd(f, x^{p^i} - x) = 1 for
// i = 1..n/2.
bool is_irreducible(const PolyFp& f, std::uint64_t p) {
  const std::size_t n = f.size() - 1;
  if (n == 0) return false;
  if (n == 1) return true;
  if (f[0] == 0) return false;
  PolyFp x{0, 1};
  PolyFp h = x;
  for (std::size_t i = 1; i <= n / 2; ++i) {
    // h <- h^p mod f
    PolyFp acc{1};
    PolyFp base = h;
    std::uint64_t exp = p;
    while (exp) {
      if (exp & 1) acc = poly_mulmod(acc, base, f, p);
      exp >>= 1;
      if (exp) base = poly_mulmod(base, base, f, p);
    }
    h = acc;
    PolyFp diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    PolyFp g = poly_gcd(f, diff, p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<std::uint64_t> canonical_modulus(std::uint64_t p, unsigned n) {
  // Monic polynomials of degree n enumerated by the code of their lower
  // coefficients, smallest first.
  std::vector<std::uint64_t> f(n + 1, 0);
  f[n] = 1;
  while (true) {
    if (is_irreducible(f, p)) return f;
    unsigned j = 0;
    while (j < n) {
      if (++f[j] < p) break;
      f[j] = 0;
      ++j;
    }
    if (j == n) break;
  }
  throw Error(ErrorCode::Internal, "no irreducible polynomial found");
}

// --- registry of interned fields ---

using FieldKey =
    std::tuple<int, std::uint64_t, unsigned, std::vector<std::uint64_t>>;

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<FieldKey, std::unique_ptr<FieldData>>& registry() {
  static std::map<FieldKey, std::unique_ptr<FieldData>> r;
  return r;
}

const FieldData* intern(FieldData data) {
  FieldKey key{static_cast<int>(data.kind), data.p, data.degree, data.modulus};
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto& reg = registry();
  auto it = reg.find(key);
  if (it != reg.end()) return it->second.get();
  auto owned = std::make_unique<FieldData>(std::move(data));
  const FieldData* ptr = owned.get();
  reg.emplace(std::move(key), std::move(owned));
  return ptr;
}

void check_characteristic(std::uint64_t p) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::NonPrimeCharacteristic,
                std::to_string(p) + " is not prime");
  }
  if (p >= detail::kMaxCharacteristic) {
    throw Error(ErrorCode::FieldTooLarge, "characteristic too large");
  }
}

std::uint64_t checked_order(std::uint64_t p, unsigned n,
                            std::vector<std::uint64_t>* powers) {
  std::uint64_t order = 1;
  for (unsigned j = 0; j < n; ++j) {
    if (powers) powers->push_back(order);
    if (order > detail::kMaxOrder / p) {
      throw Error(ErrorCode::FieldTooLarge,
                  "field of order " + std::to_string(p) + "^" +
                      std::to_string(n) + " is too large");
    }
    order *= p;
  }
  return order;
}

FieldData make_poly_field(FieldKind kind, std::uint64_t p, unsigned n,
                                 std::optional<std::vector<std::uint64_t>> modulus) {
  check_characteristic(p);
  if (n > detail::kMaxDegree - 1) {
    throw Error(ErrorCode::FieldTooLarge, "extension degree too large");
  }
  FieldData data;
  data.kind = kind;
  data.p = p;
  data.degree = n;
  data.order = checked_order(p, n, &data.pow_p);
  if (modulus) {
    std::vector<std::uint64_t> m = *modulus;
    if (m.size() != n + 1) {
      throw Error(ErrorCode::InvalidModulus,
                  "modulus must have degree " + std::to_string(n));
    }
    for (auto c : m) {
      if (c >= p) {
        throw Error(ErrorCode::InvalidModulus,
                    "modulus coefficients must lie in [0, p)");
      }
    }
    if (m.back() != 1) {
      throw Error(ErrorCode::InvalidModulus, "modulus must be monic");
    }
    if (!is_irreducible(m, p)) {
      throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over F_" +
                                                   std::to_string(p));
    }
    data.modulus = std::move(m);
  } else {
    data.modulus = canonical_modulus(p, n);
  }
  return data;
}

// --- finite field kernels on packed codes ---

void unpack(const FieldData& f, std::uint64_t code, Coeffs& c) {
  for (unsigned j = 0; j < f.degree; ++j) {
    c[j] = code % f.p;
    code /= f.p;
  }
}

std::uint64_t pack(const FieldData& f, const std::uint64_t* c) {
  std::uint64_t code = 0;
  for (unsigned j = f.degree; j-- > 0;) code = code * f.p + c[j];
  return code;
}

std::uint64_t ff_add(const FieldData& f, std::uint64_t a, std::uint64_t b) {
  if (f.p == 2) return a ^ b;
  if (f.degree == 1) return (a + b) % f.p;
  Coeffs ca, cb;
  unpack(f, a, ca);
  unpack(f, b, cb);
  for (unsigned j = 0; j < f.degree; ++j) ca[j] = (ca[j] + cb[j]) % f.p;
  return pack(f, ca.data());
}

std::uint64_t ff_neg(const FieldData& f, std::uint64_t a) {
  if (f.p == 2) return a;
  if (f.degree == 1) return (f.p - a) % f.p;
  Coeffs ca;
  unpack(f, a, ca);
  for (unsigned j = 0; j < f.degree; ++j) ca[j] = (f.p - ca[j]) % f.p;
  return pack(f, ca.data());
}

std::uint64_t ff_mul(const FieldData& f, std::uint64_t a, std::uint64_t b) {
  if (f.degree == 1) return a * b % f.p;
  if (a == 0 || b == 0) return 0;
  const unsigned n = f.degree;
  Coeffs ca, cb;
  unpack(f, a, ca);
  unpack(f, b, cb);
  std::array<std::uint64_t, 2 * detail::kMaxDegree> r{};
  for (unsigned i = 0; i < n; ++i) {
    if (ca[i] == 0) continue;
    for (unsigned j = 0; j < n; ++j) {
      r[i + j] = (r[i + j] + ca[i] * cb[j]) % f.p;
    }
  }
  for (unsigned k = 2 * n - 2; k >= n; --k) {
    const std::uint64_t c = r[k];
    if (c == 0) continue;
    r[k] = 0;
    const std::uint64_t neg_c = f.p - c;
    for (unsigned j = 0; j < n; ++j) {
      r[k - n + j] = (r[k - n + j] + neg_c * f.modulus[j]) % f.p;
    }
  }
  return pack(f, r.data());
}

std::uint64_t ff_pow(const FieldData& f, std::uint64_t a, std::uint64_t exp) {
  std::uint64_t result = 1;
  while (exp) {
    if (exp & 1) result = ff_mul(f, result, a);
    exp >>= 1;
    if (exp) a = ff_mul(f, a, a);
  }
  return result;
}

const FieldData& same_field(const Element& a, const Element& b) {
  if (a.field() != b.field()) {
    throw Error(ErrorCode::FieldMismatch, "operands belong to " +
                                              a.field().name() + " and " +
                                              b.field().name());
  }
  return *a.field().data();
}

void skip_spaces(const std::string& s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

std::string read_digits(const std::string& s, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  return s.substr(start, pos - start);
}

[[noreturn]] void bad_element(const std::string& text, const std::string& why) {
  throw Error(ErrorCode::ParseError, "cannot parse element '" + text + "': " + why);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// --- Field ---

Field Field::prime(std::uint64_t p) {
  check_characteristic(p);
  FieldData data;
  data.kind = FieldKind::Prime;
  data.p = p;
  data.degree = 1;
  data.order = p;
  data.pow_p = {1};
  return Field(intern(std::move(data)));
}

Field Field::quad_ext(std::uint64_t p, unsigned e,
                      std::optional<std::vector<std::uint64_t>> modulus) {
  if (e == 0) throw Error(ErrorCode::InvalidArgument, "e must be at least 1");
  check_characteristic(p);
  // Validate size before searching for a modulus.
  checked_order(p, 2 * e, nullptr);
  FieldData data = make_poly_field(FieldKind::QuadExt, p, 2 * e, std::move(modulus));
  data.e = e;
  data.q = checked_order(p, e, nullptr);
  return Field(intern(std::move(data)));
}

Field Field::galois(std::uint64_t p, unsigned n,
                    std::optional<std::vector<std::uint64_t>> modulus) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  if (n == 1) {
    if (modulus) {
      throw Error(ErrorCode::InvalidModulus, "prime fields take no modulus");
    }
    return prime(p);
  }
  checked_order(p, n, nullptr);
  return Field(intern(make_poly_field(FieldKind::Galois, p, n, std::move(modulus))));
}

Field Field::gaussian() {
  FieldData data;
  data.kind = FieldKind::Gaussian;
  data.p = 0;
  data.degree = 2;
  data.order = 0;
  return Field(intern(std::move(data)));
}

FieldKind Field::kind() const { return data_->kind; }
std::uint64_t Field::characteristic() const { return data_->p; }
unsigned Field::degree() const { return data_->degree; }
unsigned Field::quad_exponent() const { return data_->e; }
std::uint64_t Field::order() const { return data_->order; }

std::uint64_t Field::fixed_order() const {
  switch (data_->kind) {
    case FieldKind::QuadExt: return data_->q;
    case FieldKind::Gaussian: return 0;
    default: return data_->order;
  }
}

unsigned Field::involution_order() const {
  return (data_->kind == FieldKind::QuadExt || data_->kind == FieldKind::Gaussian) ? 2 : 1;
}

bool Field::is_finite() const { return data_->kind != FieldKind::Gaussian; }

const std::vector<std::uint64_t>& Field::modulus() const { return data_->modulus; }

Element Field::zero() const {
  if (data_->kind == FieldKind::Gaussian) return Element(*this, Rational(0), Rational(0));
  return Element(*this, std::uint64_t{0});
}

Element Field::one() const {
  if (data_->kind == FieldKind::Gaussian) return Element(*this, Rational(1), Rational(0));
  return Element(*this, std::uint64_t{1});
}

Element Field::from_int(std::int64_t value) const {
  if (data_->kind == FieldKind::Gaussian) {
    return Element(*this, Rational(static_cast<long>(value)), Rational(0));
  }
  const auto p = static_cast<std::int64_t>(data_->p);
  std::int64_t r = value % p;
  if (r < 0) r += p;
  return Element(*this, static_cast<std::uint64_t>(r));
}

Element Field::from_code(std::uint64_t code) const {
  if (!is_finite()) throw Error(ErrorCode::FieldNotFinite, "Q(i) has no element codes");
  if (code >= data_->order) throw Error(ErrorCode::InvalidArgument, "code out of range");
  return Element(*this, code);
}

Element Field::generator() const {
  switch (data_->kind) {
    case FieldKind::Gaussian: return Element(*this, Rational(0), Rational(1));
    case FieldKind::Prime: return one();
    default: return Element(*this, data_->p);  // the code of t
  }
}

Element Field::gaussian(const Rational& re, const Rational& im) const {
  return Element(*this, re, im);
}

std::string Field::name() const {
  switch (data_->kind) {
    case FieldKind::Gaussian: return "Q(i)";
    default: return "F_" + std::to_string(data_->order);
  }
}

Element Field::parse(const std::string& text) const {
  std::size_t pos = 0;
  skip_spaces(text, pos);
  if (pos == text.size()) bad_element(text, "empty");

  if (data_->kind == FieldKind::Gaussian) {
    Rational re(0), im(0);
    bool first = true;
    while (true) {
      skip_spaces(text, pos);
      if (pos == text.size()) break;
      int sign = 1;
      if (text[pos] == '+' || text[pos] == '-') {
        sign = text[pos] == '-' ? -1 : 1;
        ++pos;
        skip_spaces(text, pos);
      } else if (!first) {
        bad_element(text, "expected '+' or '-'");
      }
      first = false;
      Rational coeff(1);
      bool has_number = false;
      std::string num = read_digits(text, pos);
      if (!num.empty()) {
        has_number = true;
        mpz_class n(num);
        mpz_class d(1);
        skip_spaces(text, pos);
        if (pos < text.size() && text[pos] == '/') {
          ++pos;
          skip_spaces(text, pos);
          std::string den = read_digits(text, pos);
          if (den.empty()) bad_element(text, "missing denominator");
          d = mpz_class(den);
          if (d == 0) bad_element(text, "zero denominator");
        }
        coeff = Rational(n, d);
        coeff.canonicalize();
        skip_spaces(text, pos);
        if (pos < text.size() && text[pos] == '*') {
          ++pos;
          skip_spaces(text, pos);
          if (pos == text.size() || text[pos] != 'i') bad_element(text, "expected 'i' after '*'");
        }
      }
      bool imaginary = false;
      if (pos < text.size() && text[pos] == 'i') {
        imaginary = true;
        ++pos;
      }
      if (!has_number && !imaginary) bad_element(text, "expected a term");
      if (sign < 0) coeff = -coeff;
      (imaginary ? im : re) += coeff;
    }
    return Element(*this, re, im);
  }

  const std::uint64_t p = data_->p;
  const bool polynomial = data_->kind != FieldKind::Prime;
  std::vector<std::uint64_t> coeffs(data_->degree, 0);
  bool first = true;
  while (true) {
    skip_spaces(text, pos);
    if (pos == text.size()) break;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
      skip_spaces(text, pos);
    } else if (!first) {
      bad_element(text, "expected '+' or '-'");
    }
    first = false;
    std::uint64_t coeff = 1;
    std::string num = read_digits(text, pos);
    if (!num.empty()) {
      coeff = 0;
      for (char ch : num) coeff = (coeff * 10 + static_cast<std::uint64_t>(ch - '0')) % p;
      skip_spaces(text, pos);
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_spaces(text, pos);
        if (pos == text.size() || text[pos] != 't') bad_element(text, "expected 't' after '*'");
      }
    }
    unsigned power = 0;
    if (pos < text.size() && text[pos] == 't') {
      if (!polynomial) bad_element(text, "prime field elements are integers");
      ++pos;
      power = 1;
      skip_spaces(text, pos);
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_spaces(text, pos);
        std::string ex = read_digits(text, pos);
        if (ex.empty() || ex.size() > 6) bad_element(text, "bad exponent");
        power = static_cast<unsigned>(std::stoul(ex));
      }
    } else if (num.empty()) {
      bad_element(text, "expected a term");
    }
    if (negative) coeff = (p - coeff) % p;
    // Reduce t^power modulo the defining polynomial.
    Element term = pow(generator(), power);
    std::uint64_t code = ff_mul(*data_, term.code(), coeff);
    Coeffs c;
    unpack(*data_, code, c);
    for (unsigned j = 0; j < data_->degree; ++j) coeffs[j] = (coeffs[j] + c[j]) % p;
  }
  return Element(*this, pack(*data_, coeffs.data()));
}

// --- Element ---

Element::Element(Field field, std::uint64_t code) : field_(field.data_), value_(code) {
  if (field_->kind == FieldKind::Gaussian) {
    throw Error(ErrorCode::WrongField, "Q(i) elements need a rational pair");
  }
  if (code >= field_->order) throw Error(ErrorCode::InvalidArgument, "code out of range");
}

Element::Element(Field field, Rational re, Rational im)
    : field_(field.data_), value_(GaussianValue{std::move(re), std::move(im)}) {
  if (field_->kind != FieldKind::Gaussian) {
    throw Error(ErrorCode::WrongField, "rational pairs only denote Q(i) elements");
  }
  auto& g = std::get<GaussianValue>(value_);
  g.re.canonicalize();
  g.im.canonicalize();
}

std::uint64_t Element::code() const {
  if (field_->kind == FieldKind::Gaussian) {
    throw Error(ErrorCode::FieldNotFinite, "Q(i) elements have no code");
  }
  return std::get<std::uint64_t>(value_);
}

const GaussianValue& Element::gaussian() const {
  if (field_->kind != FieldKind::Gaussian) {
    throw Error(ErrorCode::WrongField, "not a Q(i) element");
  }
  return std::get<GaussianValue>(value_);
}

std::vector<std::uint64_t> Element::coefficients() const {
  Coeffs c;
  unpack(*field_, code(), c);
  return {c.begin(), c.begin() + field_->degree};
}

bool Element::is_zero() const {
  if (field_->kind == FieldKind::Gaussian) {
    const auto& g = std::get<GaussianValue>(value_);
    return g.re == 0 && g.im == 0;
  }
  return std::get<std::uint64_t>(value_) == 0;
}

bool Element::is_one() const {
  if (field_->kind == FieldKind::Gaussian) {
    const auto& g = std::get<GaussianValue>(value_);
    return g.re == 1 && g.im == 0;
  }
  return std::get<std::uint64_t>(value_) == 1;
}

Element Element::operator-() const {
  if (field_->kind == FieldKind::Gaussian) {
    const auto& g = std::get<GaussianValue>(value_);
    return Element(field(), -g.re, -g.im);
  }
  return Element(field(), ff_neg(*field_, std::get<std::uint64_t>(value_)));
}

Element& Element::operator+=(const Element& other) {
  const FieldData& f = same_field(*this, other);
  if (f.kind == FieldKind::Gaussian) {
    auto& g = std::get<GaussianValue>(value_);
    const auto& h = std::get<GaussianValue>(other.value_);
    g.re += h.re;
    g.im += h.im;
  } else {
    value_ = ff_add(f, std::get<std::uint64_t>(value_), std::get<std::uint64_t>(other.value_));
  }
  return *this;
}

Element& Element::operator-=(const Element& other) {
  const FieldData& f = same_field(*this, other);
  if (f.kind == FieldKind::Gaussian) {
    auto& g = std::get<GaussianValue>(value_);
    const auto& h = std::get<GaussianValue>(other.value_);
    g.re -= h.re;
    g.im -= h.im;
  } else {
    value_ = ff_add(f, std::get<std::uint64_t>(value_),
                    ff_neg(f, std::get<std::uint64_t>(other.value_)));
  }
  return *this;
}

Element& Element::operator*=(const Element& other) {
  const FieldData& f = same_field(*this, other);
  if (f.kind == FieldKind::Gaussian) {
    auto& g = std::get<GaussianValue>(value_);
    const auto& h = std::get<GaussianValue>(other.value_);
    Rational re = g.re * h.re - g.im * h.im;
    Rational im = g.re * h.im + g.im * h.re;
    g.re = std::move(re);
    g.im = std::move(im);
  } else {
    value_ = ff_mul(f, std::get<std::uint64_t>(value_), std::get<std::uint64_t>(other.value_));
  }
  return *this;
}

Element& Element::operator/=(const Element& other) {
  same_field(*this, other);
  return *this *= inverse(other);
}

bool operator==(const Element& a, const Element& b) {
  if (a.field_ != b.field_) return false;
  if (a.field_->kind == FieldKind::Gaussian) {
    const auto& g = std::get<GaussianValue>(a.value_);
    const auto& h = std::get<GaussianValue>(b.value_);
    return g.re == h.re && g.im == h.im;
  }
  return std::get<std::uint64_t>(a.value_) == std::get<std::uint64_t>(b.value_);
}

bool operator<(const Element& a, const Element& b) {
  if (a.field_ != b.field_) return a.field_ < b.field_;
  if (a.field_->kind == FieldKind::Gaussian) {
    const auto& g = std::get<GaussianValue>(a.value_);
    const auto& h = std::get<GaussianValue>(b.value_);
    if (g.re != h.re) return g.re < h.re;
    return g.im < h.im;
  }
  return std::get<std::uint64_t>(a.value_) < std::get<std::uint64_t>(b.value_);
}

std::string Element::to_string() const {
  if (field_->kind == FieldKind::Gaussian) {
    const auto& g = std::get<GaussianValue>(value_);
    if (g.im == 0) return g.re.get_str();
    std::string out;
    if (g.re != 0) out = g.re.get_str();
    if (g.im < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    Rational mag = abs(g.im);
    if (mag != 1) out += mag.get_str();
    out += "i";
    return out;
  }
  const std::uint64_t code = std::get<std::uint64_t>(value_);
  if (field_->kind == FieldKind::Prime) return std::to_string(code);
  if (code == 0) return "0";
  Coeffs c;
  unpack(*field_, code, c);
  std::string out;
  for (unsigned j = 0; j < field_->degree; ++j) {
    if (c[j] == 0) continue;
    if (!out.empty()) out += "+";
    if (j == 0) {
      out += std::to_string(c[j]);
      continue;
    }
    if (c[j] != 1) out += std::to_string(c[j]);
    out += "t";
    if (j > 1) out += "^" + std::to_string(j);
  }
  return out;
}

Element inverse(const Element& x) {
  if (x.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  const FieldData& f = *x.field_;
  if (f.kind == FieldKind::Gaussian) {
    const auto& g = std::get<GaussianValue>(x.value_);
    Rational n = g.re * g.re + g.im * g.im;
    return Element(x.field(), g.re / n, -g.im / n);
  }
  return Element(x.field(), ff_pow(f, std::get<std::uint64_t>(x.value_), f.order - 2));
}

Element pow(const Element& x, std::uint64_t exponent) {
  const FieldData& f = *x.field_;
  if (f.kind != FieldKind::Gaussian) {
    return Element(x.field(), ff_pow(f, std::get<std::uint64_t>(x.value_), exponent));
  }
  Element result = x.field().one();
  Element base = x;
  while (exponent) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

Element involute(const Element& x) {
  const Field field = x.field();
  switch (field.kind()) {
    case FieldKind::Gaussian: {
      const auto& g = x.gaussian();
      return Element(field, g.re, -g.im);
    }
    case FieldKind::QuadExt:
      return pow(x, field.fixed_order());
    default:
      return x;
  }
}

bool is_fixed(const Element& x) { return involute(x) == x; }

Element norm(const Element& x) { return involute(x) * x; }

std::pair<Element, Element> fixed_field_coordinates(const Element& x) {
  const Field field = x.field();
  if (field.involution_order() != 2) {
    throw Error(ErrorCode::ImproperField,
                field.name() + " carries the identity involution");
  }
  if (field.kind() == FieldKind::Gaussian) {
    const auto& g = x.gaussian();
    return {Element(field, g.re, Rational(0)), Element(field, g.im, Rational(0))};
  }
  // x = a + t b with a, b fixed: x - involute(x) = (t - involute(t)) b.
  const Element t = field.generator();
  const Element b = (x - involute(x)) / (t - involute(t));
  return {x - t * b, b};
}

std::vector<Element> all_elements(Field field) {
  if (!field.is_finite()) throw Error(ErrorCode::FieldNotFinite, "Q(i) is infinite");
  std::vector<Element> out;
  out.reserve(field.order());
  for (std::uint64_t c = 0; c < field.order(); ++c) out.emplace_back(field, c);
  return out;
}

}  // namespace gqt
