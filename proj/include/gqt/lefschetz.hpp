#ifndef GQT_LEFSCHETZ_HPP_
#define GQT_LEFSCHETZ_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gqt/starfield.hpp"

namespace gqt {

// Terms of the ring language {0, 1, +, -, *}. An integer literal n is a
// single node meaning 1 + ... + 1 (n times).
struct Term {
  enum class Kind { Literal, Var, Add, Sub, Mul };
  Kind kind;
  std::uint64_t literal = 0;
  std::string name;
  int slot = -1;  // binder index, set for variables of a sentence
  std::size_t column = 0;
  std::shared_ptr<const Term> lhs, rhs;
};

struct Formula {
  enum class Kind { Eq, Not, And, Or, Exists, Forall };
  Kind kind;
  std::shared_ptr<const Term> left, right;  // Eq
  std::shared_ptr<const Formula> a, b;      // Not uses a; quantifiers use a as body
  std::string var;
  int slot = -1;
};

using TermPtr = std::shared_ptr<const Term>;
using FormulaPtr = std::shared_ptr<const Formula>;

// A closed formula. Binders carry distinct names and slots 0..binders-1.
class Sentence {
 public:
  Sentence(FormulaPtr root, std::size_t binders) : root_(std::move(root)), binders_(binders) {}
  const Formula& root() const { return *root_; }
  std::size_t binders() const { return binders_; }
  std::string to_string() const;

 private:
  FormulaPtr root_;
  std::size_t binders_;
};

// Grammar, loosest first:
//   formula := ('E' | 'A') ident '.' formula | disj
//   disj    := conj ('|' conj)*
//   conj    := unary ('&' unary)*
//   unary   := '!' unary | quantifier | term '=' term | '(' formula ')'
//   term    := prod (('+' | '-') prod)*
//   prod    := factor ('*' factor)*
//   factor  := '-' factor | base ('^' digits)?
//   base    := digits | ident | '(' term ')'
// Quantifiers extend as far right as possible. Repeated binder names are
// renamed to name_1, name_2, ... Throws SyntaxError (0-based column), also
// for free variables.
Sentence parse_sentence(const std::string& text);

// Parses a term whose variables must come from `allowed`.
TermPtr parse_term(const std::string& text, const std::vector<std::string>& allowed);
std::string term_to_string(const Term& t);

// Brute force over a finite field. Throws FieldNotFinite.
bool eval_finite(const Sentence& s, Field field);

enum class Fragment { Ground, Existential, Universal, Mixed };
// Quantifier polarity after pushing negations inward, ignoring vacuous binders.
Fragment classify(const Sentence& s);
std::string fragment_name(Fragment f);

enum class Truth { True, False, Unknown };
std::string truth_name(Truth t);

struct WitnessEntry {
  std::string var;
  unsigned level;  // the value lies in F_{p^level}
  std::string value;
};

struct TowerVerdict {
  Truth value;
  bool certified;
  Fragment fragment;
  bool tower_value;  // raw truth value under the bounded tower semantics
  std::vector<WitnessEntry> witness;  // leading existential block, when true
  unsigned max_level;  // largest level visited
};

// Fields whose order exceeds this are skipped by the tower evaluator.
constexpr std::uint64_t kTowerFieldCap = std::uint64_t{1} << 24;

// Quantifiers at level L range over F_{p^(L k)} for k = 1..expand with
// L k <= levels; evaluation starts at F_p.
TowerVerdict eval_closure(const Sentence& s, std::uint64_t p, unsigned levels, unsigned expand);

struct SampleReport {
  std::vector<std::uint64_t> primes;
  std::vector<TowerVerdict> verdicts;
  std::size_t certified_true = 0;
  std::size_t certified_false = 0;
  std::size_t uncertified = 0;
  std::optional<bool> conjecture;  // set when all certified verdicts agree
  std::string summary;
};

SampleReport lefschetz_sample(const Sentence& s, const std::vector<std::uint64_t>& primes, unsigned levels,
                              unsigned expand);

// "2..100" (primes in the inclusive range) or "2,3,5". Throws InvalidArgument.
std::vector<std::uint64_t> parse_prime_list(const std::string& text);

// Homogeneous polynomial in X, Y, Z with coefficients mod p.
class TernaryForm {
 public:
  // Throws SyntaxError, NotHomogeneous, InvalidArgument (zero or constant).
  TernaryForm(const std::string& text, std::uint64_t p);
  unsigned degree() const { return degree_; }
  Element operator()(const std::array<Element, 3>& point) const;
  // Coefficients in Z, lowest first, after substituting X = x, Y = y.
  std::vector<Element> in_z(const Element& x, const Element& y) const;
  std::string to_string() const;

 private:
  std::uint64_t p_;
  unsigned degree_ = 0;
  std::map<std::array<unsigned, 3>, std::uint64_t> terms_;
};

struct CurveIntersection {
  bool found = false;
  unsigned level = 0;
  unsigned bezout_bound = 0;
  std::vector<std::array<Element, 3>> points;  // first zero level, capped
  std::uint64_t points_at_level = 0;
};

constexpr std::size_t kMaxReportedPoints = 64;

// Scans PG(2, p^m) for m = 1..levels. Throws NonPrimeCharacteristic plus the
// TernaryForm errors.
CurveIntersection curves_meet(const std::string& f, const std::string& g, std::uint64_t p, unsigned levels);

}  // namespace gqt

#endif  // GQT_LEFSCHETZ_HPP_
