#include "gqt/lefschetz.hpp"

#include <gtest/gtest.h>

#include "gqt/forms.hpp"
#include "gqt/generators.hpp"

namespace gqt {
namespace {

std::size_t syntax_column(const std::string& text) {
  try {
    parse_sentence(text);
  } catch (const SyntaxError& e) {
    return e.column();
  }
  return std::string::npos;
}

TEST(Parse, Examples) {
  EXPECT_EQ(parse_sentence("E x . x*x + 1 = 0").to_string(), "E x . x*x + 1 = 0");
  EXPECT_EQ(parse_sentence("A x . E y . y*y = x").to_string(), "A x . E y . y*y = x");
  EXPECT_EQ(syntax_column("E x . x = "), 10u);
  const Sentence s = parse_sentence("E x . x*x + 1 = 0");
  const Formula& root = s.root();
  ASSERT_EQ(root.kind, Formula::Kind::Exists);
  EXPECT_EQ(root.a->kind, Formula::Kind::Eq);
  EXPECT_EQ(root.a->left->kind, Term::Kind::Add);
  EXPECT_EQ(root.a->left->lhs->kind, Term::Kind::Mul);
}

TEST(Parse, PrecedenceAndSugar) {
  EXPECT_EQ(parse_sentence("E x . x = 0 | x = 1 & x = 2").to_string(), "E x . x = 0 | x = 1 & x = 2");
  EXPECT_EQ(parse_sentence("E x . (x = 0 | x = 1) & x = 2").to_string(), "E x . (x = 0 | x = 1) & x = 2");
  EXPECT_EQ(parse_sentence("E x . !x = 0").to_string(), "E x . !(x = 0)");
  EXPECT_EQ(parse_sentence("E x.-x = x^3").to_string(), "E x . 0 - x = x*x*x");
  EXPECT_EQ(parse_sentence("E x . (x + 1)*(x - 1) = 0").to_string(), "E x . (x + 1)*(x - 1) = 0");
  EXPECT_EQ(parse_sentence("E x . x = 0 & E y . y = x").to_string(), "E x . x = 0 & (E y . y = x)");
  EXPECT_EQ(parse_sentence("1 + 1 = 0").to_string(), "1 + 1 = 0");
}

TEST(Parse, RenamesRepeatedBinders) {
  const Sentence s = parse_sentence("E x . E x . x = 0");
  EXPECT_EQ(s.to_string(), "E x . E x_1 . x_1 = 0");
  EXPECT_EQ(s.binders(), 2u);
  EXPECT_EQ(parse_sentence("(E x . x = 0) & (A x . x = x)").to_string(), "(E x . x = 0) & (A x_1 . x_1 = x_1)");
}

TEST(Parse, Errors) {
  EXPECT_EQ(syntax_column("E x . x = y"), 10u);
  EXPECT_EQ(syntax_column("x = 0"), 0u);
  EXPECT_EQ(syntax_column("E x . x = 0 )"), 12u);
  EXPECT_EQ(syntax_column("E . x = 0"), 2u);
  EXPECT_EQ(syntax_column("E x . x # 0"), 8u);
  EXPECT_EQ(syntax_column("E x . (x = 0"), 12u);
  EXPECT_EQ(syntax_column(""), 0u);
}

// Random sentence text drawn from the grammar.
std::string random_term(Rng& rng, const std::vector<std::string>& vars, int depth) {
  if (depth == 0 || rng.below(3) == 0) {
    if (!vars.empty() && rng.below(3)) return vars[rng.below(vars.size())];
    return std::to_string(rng.below(4));
  }
  static const char* ops[] = {" + ", " - ", "*"};
  return "(" + random_term(rng, vars, depth - 1) + ops[rng.below(3)] + random_term(rng, vars, depth - 1) + ")";
}

std::string random_formula(Rng& rng, std::vector<std::string>& vars, int depth, bool existential_only) {
  const auto pick = rng.below(existential_only ? 4 : 6);
  if (depth == 0 || pick == 0) return random_term(rng, vars, 2) + " = " + random_term(rng, vars, 2);
  if (pick == 1) {
    const std::string v = "v" + std::to_string(vars.size());
    vars.push_back(v);
    const std::string body = random_formula(rng, vars, depth - 1, existential_only);
    vars.pop_back();
    return "(E " + v + " . " + body + ")";
  }
  if (pick == 2) return "(" + random_formula(rng, vars, depth - 1, existential_only) + " & " + random_formula(rng, vars, depth - 1, existential_only) + ")";
  if (pick == 3) return "(" + random_formula(rng, vars, depth - 1, existential_only) + " | " + random_formula(rng, vars, depth - 1, existential_only) + ")";
  if (pick == 4) return "!" + random_formula(rng, vars, depth - 1, existential_only);
  const std::string v = "v" + std::to_string(vars.size());
  vars.push_back(v);
  const std::string body = random_formula(rng, vars, depth - 1, existential_only);
  vars.pop_back();
  return "(A " + v + " . " + body + ")";
}

TEST(Parse, PrettyPrintRoundTrip) {
  Rng rng(61);
  for (int k = 0; k < 300; ++k) {
    std::vector<std::string> vars;
    const std::string text = random_formula(rng, vars, 4, false);
    const std::string canonical = parse_sentence(text).to_string();
    EXPECT_EQ(parse_sentence(canonical).to_string(), canonical) << text;
  }
}

TEST(EvalFinite, Examples) {
  const Sentence s = parse_sentence("E x . x*x + 1 = 0");
  EXPECT_TRUE(eval_finite(s, Field::prime(5)));
  EXPECT_FALSE(eval_finite(s, Field::prime(3)));
  EXPECT_TRUE(eval_finite(s, Field::quad_ext(3, 1)));
  for (const Field f : {Field::prime(2), Field::prime(7), Field::quad_ext(5, 1)}) {
    EXPECT_TRUE(eval_finite(parse_sentence("A x . x = x"), f));
  }
  EXPECT_THROW(eval_finite(s, Field::gaussian()), Error);
}

TEST(EvalFinite, ExistentialMonotoneAlongInclusions) {
  Rng rng(62);
  const std::pair<unsigned, unsigned> inclusions[] = {{1, 2}, {1, 3}, {2, 4}};
  for (const std::uint64_t p : {2u, 3u}) {
    for (const auto& [a, b] : inclusions) {
      const Field small = Field::galois(p, a), big = Field::galois(p, b);
      for (int k = 0; k < 40; ++k) {
        std::vector<std::string> vars{"x"};
        const Sentence s = parse_sentence("E x . " + random_formula(rng, vars, 2, true));
        if (eval_finite(s, small)) EXPECT_TRUE(eval_finite(s, big)) << s.to_string();
      }
    }
  }
}

TEST(Classify, Fragments) {
  EXPECT_EQ(classify(parse_sentence("1 + 1 = 0")), Fragment::Ground);
  EXPECT_EQ(classify(parse_sentence("E x . 1 = 0")), Fragment::Ground);
  EXPECT_EQ(classify(parse_sentence("E x . x*x + 1 = 0")), Fragment::Existential);
  EXPECT_EQ(classify(parse_sentence("!(A x . x = 0)")), Fragment::Existential);
  EXPECT_EQ(classify(parse_sentence("A x . x*x = x")), Fragment::Universal);
  EXPECT_EQ(classify(parse_sentence("!(E x . x*x = 1 + 1)")), Fragment::Universal);
  EXPECT_EQ(classify(parse_sentence("A x . E y . y*y = x")), Fragment::Mixed);
}

TEST(EvalClosure, Examples) {
  const Sentence s = parse_sentence("E x . x*x + 1 = 0");
  const auto v3 = eval_closure(s, 3, 2, 2);
  EXPECT_EQ(v3.value, Truth::True);
  EXPECT_TRUE(v3.certified);
  ASSERT_EQ(v3.witness.size(), 1u);
  EXPECT_EQ(v3.witness[0].level, 2u);

  const auto v5 = eval_closure(s, 5, 2, 2);
  EXPECT_EQ(v5.value, Truth::True);
  EXPECT_TRUE(v5.certified);
  EXPECT_EQ(v5.witness[0].level, 1u);
  EXPECT_EQ(v5.witness[0].value, "2");

  const auto mixed = eval_closure(parse_sentence("A x . E y . y*y = x"), 3, 4, 2);
  EXPECT_EQ(mixed.value, Truth::True);
  EXPECT_FALSE(mixed.certified);
  EXPECT_EQ(mixed.max_level, 4u);

  const auto none = eval_closure(s, 3, 1, 2);
  EXPECT_EQ(none.value, Truth::Unknown);
  EXPECT_FALSE(none.certified);

  const auto counter = eval_closure(parse_sentence("A x . x*x = x"), 3, 2, 2);
  EXPECT_EQ(counter.value, Truth::False);
  EXPECT_TRUE(counter.certified);

  const auto ground = eval_closure(parse_sentence("E x . 1 = 0"), 7, 2, 2);
  EXPECT_EQ(ground.value, Truth::False);
  EXPECT_TRUE(ground.certified);
  EXPECT_THROW(eval_closure(s, 4, 2, 2), Error);
}

TEST(EvalClosure, TwoIsNotANonzeroSquareInCharacteristicTwo) {
  const Sentence s = parse_sentence("E x . x*x = 1+1 & !(x = 0)");
  EXPECT_EQ(eval_closure(s, 2, 4, 4).value, Truth::Unknown);
  for (const std::uint64_t p : {3u, 5u, 7u}) {
    const auto v = eval_closure(s, p, 2, 2);
    EXPECT_EQ(v.value, Truth::True);
    EXPECT_TRUE(v.certified);
    EXPECT_LE(v.witness[0].level, 2u);
  }
}

TEST(EvalClosure, CertifiedVerdictsStableInBounds) {
  Rng rng(63);
  for (int k = 0; k < 60; ++k) {
    std::vector<std::string> vars;
    const Sentence s = parse_sentence(random_formula(rng, vars, 3, false));
    const std::uint64_t p = k % 2 ? 2 : 3;
    const auto small = eval_closure(s, p, 2, 1);
    if (!small.certified) continue;
    for (const auto& [levels, expand] : {std::pair<unsigned, unsigned>{2, 2}, {3, 3}, {4, 2}}) {
      const auto big = eval_closure(s, p, levels, expand);
      EXPECT_TRUE(big.certified) << s.to_string();
      EXPECT_EQ(big.value, small.value) << s.to_string();
    }
  }
}

TEST(EvalClosure, ExistentialRootMatchesRootScan) {
  Rng rng(64);
  for (const std::uint64_t p : {2u, 3u, 5u}) {
    for (int k = 0; k < 25; ++k) {
      const unsigned degree = 2 + static_cast<unsigned>(rng.below(3));
      std::vector<std::uint64_t> coeffs;
      std::string text;
      for (unsigned d = 0; d <= degree; ++d) {
        coeffs.push_back(d == degree ? 1 : rng.below(p));
        text += (d ? " + " : "") + std::to_string(coeffs.back()) + (d ? "*x^" + std::to_string(d) : "");
      }
      const Sentence s = parse_sentence("E x . " + text + " = 0");
      const unsigned bound = 3;
      bool has_root = false;
      for (unsigned m = 1; m <= bound; ++m) {
        const Field f = Field::galois(p, m);
        std::vector<Element> c;
        for (const auto x : coeffs) c.push_back(f.from_int(static_cast<std::int64_t>(x)));
        has_root = has_root || !find_roots(Polynomial(f, c)).roots.empty();
      }
      const auto v = eval_closure(s, p, bound, bound);
      EXPECT_EQ(v.certified && v.value == Truth::True, has_root) << s.to_string() << " p=" << p;
    }
  }
}

TEST(Sample, SumOfSquaresEverywhere) {
  const auto r = lefschetz_sample(parse_sentence("E x . x*x + 1 = 0"), parse_prime_list("2..29"), 2, 2);
  EXPECT_EQ(r.primes.size(), 10u);
  EXPECT_EQ(r.certified_true, 10u);
  for (const auto& v : r.verdicts) EXPECT_LE(v.witness[0].level, 2u);
  ASSERT_TRUE(r.conjecture.has_value());
  EXPECT_TRUE(*r.conjecture);
  EXPECT_NE(r.summary.find("conjecture"), std::string::npos);

  const auto f = lefschetz_sample(parse_sentence("E x . 1 = 0"), parse_prime_list("2,3,5,7"), 2, 2);
  EXPECT_EQ(f.certified_false, 4u);
  EXPECT_FALSE(*f.conjecture);
}

TEST(Sample, DeterministicReport) {
  const Sentence s = parse_sentence("E x . x*x*x = 1 + 1");
  const auto a = lefschetz_sample(s, parse_prime_list("2..40"), 3, 3);
  const auto b = lefschetz_sample(s, parse_prime_list("2..40"), 3, 3);
  EXPECT_EQ(a.summary, b.summary);
  for (std::size_t i = 0; i < a.verdicts.size(); ++i) {
    EXPECT_EQ(a.verdicts[i].witness.size(), b.verdicts[i].witness.size());
    if (!a.verdicts[i].witness.empty()) EXPECT_EQ(a.verdicts[i].witness[0].value, b.verdicts[i].witness[0].value);
  }
}

TEST(Sample, PrimeLists) {
  EXPECT_EQ(parse_prime_list("2..11"), (std::vector<std::uint64_t>{2, 3, 5, 7, 11}));
  EXPECT_EQ(parse_prime_list("5,3"), (std::vector<std::uint64_t>{5, 3}));
  EXPECT_THROW(parse_prime_list("4,5"), Error);
  EXPECT_THROW(parse_prime_list("24..28"), Error);
  EXPECT_THROW(parse_prime_list("a..b"), Error);
}

using Point = std::array<Element, 3>;

TEST(CurvesMeet, Examples) {
  const auto r = curves_meet("X", "Y", 7, 1);
  ASSERT_TRUE(r.found);
  EXPECT_EQ(r.level, 1u);
  ASSERT_EQ(r.points.size(), 1u);
  const Field f7 = Field::prime(7);
  EXPECT_EQ(r.points[0], (Point{f7.zero(), f7.zero(), f7.one()}));

  const auto r2 = curves_meet("X^2 + Y^2 + Z^2", "X*Y", 3, 4);
  ASSERT_TRUE(r2.found);
  EXPECT_LE(r2.level, 2u);

  const auto r3 = curves_meet("X^2 - Y*Z", "Y^2 - X*Z", 5, 4);
  ASSERT_TRUE(r3.found);
  const Field f5 = Field::prime(5);
  bool has_111 = false;
  for (const auto& pt : r3.points) has_111 |= pt == Point{f5.one(), f5.one(), f5.one()};
  EXPECT_TRUE(has_111);
}

TEST(CurvesMeet, Errors) {
  auto code = [](const char* f, const char* g, std::uint64_t p) {
    try {
      curves_meet(f, g, p, 2);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  };
  EXPECT_EQ(code("X^2 + Y", "X", 3), ErrorCode::NotHomogeneous);
  EXPECT_EQ(code("3*X", "Y", 3), ErrorCode::InvalidArgument);
  EXPECT_EQ(code("X + W", "Y", 3), ErrorCode::SyntaxError);
  EXPECT_EQ(code("X", "Y", 6), ErrorCode::NonPrimeCharacteristic);
}

TEST(CurvesMeet, ConicPairsMeetWithinBezoutBound) {
  Rng rng(65);
  static const char* monomials[] = {"X^2", "Y^2", "Z^2", "X*Y", "X*Z", "Y*Z"};
  for (const std::uint64_t p : {2u, 3u, 5u, 7u}) {
    for (int k = 0; k < 15; ++k) {
      std::string conic[2];
      std::vector<std::uint64_t> coeffs[2];
      for (int c = 0; c < 2; ++c) {
        do {
          coeffs[c].clear();
          conic[c].clear();
          for (const char* m : monomials) {
            coeffs[c].push_back(rng.below(p));
            conic[c] += (conic[c].empty() ? "" : " + ") + std::to_string(coeffs[c].back()) + "*" + m;
          }
        } while (std::all_of(coeffs[c].begin(), coeffs[c].end(), [](std::uint64_t x) { return x == 0; }));
      }
      const auto r = curves_meet(conic[0], conic[1], p, 4);
      EXPECT_TRUE(r.found) << conic[0] << " ; " << conic[1];
      // Level-1 oracle: integer scan of PG(2, p).
      auto value = [&](const std::vector<std::uint64_t>& c, std::uint64_t x, std::uint64_t y, std::uint64_t z) {
        return (c[0] * x * x + c[1] * y * y + c[2] * z * z + c[3] * x * y + c[4] * x * z + c[5] * y * z) % p;
      };
      std::uint64_t level_one = 0;
      for (std::uint64_t x = 0; x <= 1; ++x) {
        for (std::uint64_t y = 0; y < p; ++y) {
          for (std::uint64_t z = 0; z < p; ++z) {
            const bool canonical = x == 1 || (y == 1) || (y == 0 && z == 1);
            if (!canonical || (x == 0 && y > 1)) continue;
            if (value(coeffs[0], x, y, z) == 0 && value(coeffs[1], x, y, z) == 0) ++level_one;
          }
        }
      }
      EXPECT_EQ(r.level == 1, level_one > 0);
      if (r.level == 1) EXPECT_EQ(r.points_at_level, level_one);
    }
  }
}

}  // namespace
}  // namespace gqt
