#include "gqt/lefschetz.hpp"

#include <future>
#include <sstream>

#include "gqt/embed.hpp"

namespace gqt {

namespace {

using Env = std::vector<std::optional<Element>>;

Element eval_term(const Term& t, Field field, const Env& env) {
  switch (t.kind) {
    case Term::Kind::Literal: return field.from_int(static_cast<std::int64_t>(t.literal));
    case Term::Kind::Var: return *env[static_cast<std::size_t>(t.slot)];
    case Term::Kind::Add: return eval_term(*t.lhs, field, env) + eval_term(*t.rhs, field, env);
    case Term::Kind::Sub: return eval_term(*t.lhs, field, env) - eval_term(*t.rhs, field, env);
    case Term::Kind::Mul: return eval_term(*t.lhs, field, env) * eval_term(*t.rhs, field, env);
  }
  throw Error(ErrorCode::Internal, "bad term");
}

bool term_uses(const Term& t, int slot) {
  if (t.kind == Term::Kind::Var) return t.slot == slot;
  if (t.kind == Term::Kind::Literal) return false;
  return term_uses(*t.lhs, slot) || term_uses(*t.rhs, slot);
}

bool formula_uses(const Formula& f, int slot) {
  switch (f.kind) {
    case Formula::Kind::Eq: return term_uses(*f.left, slot) || term_uses(*f.right, slot);
    case Formula::Kind::And:
    case Formula::Kind::Or: return formula_uses(*f.a, slot) || formula_uses(*f.b, slot);
    default: return formula_uses(*f.a, slot);
  }
}

void polarity(const Formula& f, bool negated, bool& existential, bool& universal) {
  switch (f.kind) {
    case Formula::Kind::Eq: return;
    case Formula::Kind::Not: return polarity(*f.a, !negated, existential, universal);
    case Formula::Kind::And:
    case Formula::Kind::Or:
      polarity(*f.a, negated, existential, universal);
      return polarity(*f.b, negated, existential, universal);
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      if (formula_uses(*f.a, f.slot)) {
        ((f.kind == Formula::Kind::Exists) != negated ? existential : universal) = true;
      }
      return polarity(*f.a, negated, existential, universal);
  }
}

bool eval_in(const Formula& f, Field field, const std::vector<Element>& elems, Env& env) {
  switch (f.kind) {
    case Formula::Kind::Eq: return eval_term(*f.left, field, env) == eval_term(*f.right, field, env);
    case Formula::Kind::Not: return !eval_in(*f.a, field, elems, env);
    case Formula::Kind::And: return eval_in(*f.a, field, elems, env) && eval_in(*f.b, field, elems, env);
    case Formula::Kind::Or: return eval_in(*f.a, field, elems, env) || eval_in(*f.b, field, elems, env);
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      const bool exists = f.kind == Formula::Kind::Exists;
      auto& slot = env[static_cast<std::size_t>(f.slot)];
      bool result = !exists;
      for (const auto& x : elems) {
        slot = x;
        if (eval_in(*f.a, field, elems, env) == exists) {
          result = exists;
          break;
        }
      }
      slot.reset();
      return result;
    }
  }
  return false;
}

class Tower {
 public:
  Tower(std::uint64_t p, unsigned levels, unsigned expand) : p_(p), levels_(levels), expand_(expand) {}

  unsigned max_level() const { return max_level_; }

  bool eval(const Formula& f, unsigned level, const Env& env, std::vector<WitnessEntry>* witness) {
    switch (f.kind) {
      case Formula::Kind::Eq: {
        const Field field = field_at(level);
        return eval_term(*f.left, field, env) == eval_term(*f.right, field, env);
      }
      case Formula::Kind::Not: return !eval(*f.a, level, env, nullptr);
      case Formula::Kind::And: return eval(*f.a, level, env, nullptr) && eval(*f.b, level, env, nullptr);
      case Formula::Kind::Or: return eval(*f.a, level, env, nullptr) || eval(*f.b, level, env, nullptr);
      case Formula::Kind::Exists:
      case Formula::Kind::Forall: return quantify(f, level, env, witness);
    }
    return false;
  }

 private:
  bool quantify(const Formula& f, unsigned level, const Env& env, std::vector<WitnessEntry>* witness) {
    const bool exists = f.kind == Formula::Kind::Exists;
    for (unsigned k = 1; k <= expand_; ++k) {
      const unsigned target = level * k;
      if (target > levels_ || !fits(target)) break;
      max_level_ = std::max(max_level_, target);
      Env lifted = lift(env, level, target);
      const Field field = field_at(target);
      auto& slot = lifted[static_cast<std::size_t>(f.slot)];
      for (std::uint64_t c = 0; c < field.order(); ++c) {
        slot = Element(field, c);
        std::vector<WitnessEntry> inner;
        const bool body = eval(*f.a, target, lifted, exists && witness ? &inner : nullptr);
        if (body == exists) {
          if (exists && witness) {
            witness->push_back({f.var, target, slot->to_string()});
            witness->insert(witness->end(), inner.begin(), inner.end());
          }
          return exists;
        }
      }
    }
    return !exists;
  }

  bool fits(unsigned level) const {
    std::uint64_t order = 1;
    for (unsigned i = 0; i < level; ++i) {
      if (order > kTowerFieldCap / p_) return false;
      order *= p_;
    }
    return true;
  }

  Field field_at(unsigned level) {
    auto it = fields_.find(level);
    if (it == fields_.end()) it = fields_.emplace(level, Field::galois(p_, level)).first;
    return it->second;
  }

  Env lift(const Env& env, unsigned from, unsigned to) {
    if (from == to) return env;
    auto key = std::make_pair(from, to);
    auto it = embeddings_.find(key);
    if (it == embeddings_.end()) it = embeddings_.emplace(key, embed_into(field_at(from), field_at(to))).first;
    Env out(env.size());
    for (std::size_t i = 0; i < env.size(); ++i) {
      if (env[i]) out[i] = it->second(*env[i]);
    }
    return out;
  }

  std::uint64_t p_;
  unsigned levels_;
  unsigned expand_;
  unsigned max_level_ = 1;
  std::map<unsigned, Field> fields_;
  std::map<std::pair<unsigned, unsigned>, FieldEmbedding> embeddings_;
};

Element horner(const std::vector<Element>& coeffs, const Element& z) {
  Element acc = coeffs.back();
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) acc = acc * z + coeffs[k];
  return acc;
}

using Poly = std::map<std::array<unsigned, 3>, std::uint64_t>;

Poly expand(const Term& t, std::uint64_t p) {
  auto add_into = [p](Poly& out, const Poly& in, bool subtract) {
    for (const auto& [mono, c] : in) {
      auto& slot = out[mono];
      slot = (slot + (subtract ? p - c : c)) % p;
      if (slot == 0) out.erase(mono);
    }
  };
  switch (t.kind) {
    case Term::Kind::Literal: {
      Poly out;
      if (t.literal % p) out[{0, 0, 0}] = t.literal % p;
      return out;
    }
    case Term::Kind::Var: {
      std::array<unsigned, 3> mono{0, 0, 0};
      mono[static_cast<std::size_t>(t.name[0] - 'X')] = 1;
      return Poly{{mono, 1 % p}};
    }
    case Term::Kind::Add:
    case Term::Kind::Sub: {
      Poly out = expand(*t.lhs, p);
      add_into(out, expand(*t.rhs, p), t.kind == Term::Kind::Sub);
      return out;
    }
    case Term::Kind::Mul: {
      const Poly a = expand(*t.lhs, p), b = expand(*t.rhs, p);
      Poly out;
      for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
          const std::array<unsigned, 3> m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]};
          add_into(out, Poly{{m, static_cast<std::uint64_t>((static_cast<unsigned __int128>(ca) * cb) % p)}}, false);
        }
      }
      return out;
    }
  }
  return {};
}

}  // namespace

bool eval_finite(const Sentence& s, Field field) {
  if (!field.is_finite()) throw Error(ErrorCode::FieldNotFinite, "eval_finite needs a finite field");
  if (field.order() > kTowerFieldCap) throw Error(ErrorCode::FieldTooLarge, field.name() + " is too large to scan");
  const auto elems = all_elements(field);
  Env env(s.binders());
  return eval_in(s.root(), field, elems, env);
}

Fragment classify(const Sentence& s) {
  bool existential = false, universal = false;
  polarity(s.root(), false, existential, universal);
  if (existential && universal) return Fragment::Mixed;
  if (existential) return Fragment::Existential;
  if (universal) return Fragment::Universal;
  return Fragment::Ground;
}

std::string fragment_name(Fragment f) {
  switch (f) {
    case Fragment::Ground: return "ground";
    case Fragment::Existential: return "existential";
    case Fragment::Universal: return "universal";
    case Fragment::Mixed: return "mixed";
  }
  return "";
}

std::string truth_name(Truth t) {
  switch (t) {
    case Truth::True: return "true";
    case Truth::False: return "false";
    case Truth::Unknown: return "unknown";
  }
  return "";
}

TowerVerdict eval_closure(const Sentence& s, std::uint64_t p, unsigned levels, unsigned expand) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  if (levels == 0 || expand == 0) throw Error(ErrorCode::InvalidArgument, "level and expansion bounds must be at least 1");
  Tower tower(p, levels, expand);
  std::vector<WitnessEntry> witness;
  const bool value = tower.eval(s.root(), 1, Env(s.binders()), &witness);
  const Fragment fragment = classify(s);
  TowerVerdict v{value ? Truth::True : Truth::False, false, fragment, value, {}, tower.max_level()};
  switch (fragment) {
    case Fragment::Ground: v.certified = true; break;
    case Fragment::Existential:
      v.certified = value;
      if (!value) v.value = Truth::Unknown;
      break;
    case Fragment::Universal:
      v.certified = !value;
      if (value) v.value = Truth::Unknown;
      break;
    case Fragment::Mixed: break;
  }
  if (value) v.witness = std::move(witness);
  return v;
}

SampleReport lefschetz_sample(const Sentence& s, const std::vector<std::uint64_t>& primes, unsigned levels,
                              unsigned expand) {
  if (primes.empty()) throw Error(ErrorCode::InvalidArgument, "no primes to sample");
  std::vector<std::future<TowerVerdict>> jobs;
  for (const auto p : primes) {
    jobs.push_back(std::async(std::launch::async, [&s, p, levels, expand] { return eval_closure(s, p, levels, expand); }));
  }
  SampleReport report;
  report.primes = primes;
  for (auto& job : jobs) report.verdicts.push_back(job.get());
  for (const auto& v : report.verdicts) {
    if (!v.certified) {
      ++report.uncertified;
    } else if (v.value == Truth::True) {
      ++report.certified_true;
    } else {
      ++report.certified_false;
    }
  }
  std::ostringstream out;
  out << "certified true for " << report.certified_true << "/" << primes.size() << " primes, certified false for "
      << report.certified_false << "/" << primes.size() << ", uncertified " << report.uncertified << "/"
      << primes.size();
  if (report.certified_true > 0 && report.certified_false == 0) {
    report.conjecture = true;
  } else if (report.certified_false > 0 && report.certified_true == 0) {
    report.conjecture = false;
  }
  if (report.conjecture) {
    out << "; conjecture (not proved): the sentence is " << (*report.conjecture ? "true" : "false")
        << " in algebraically closed fields of characteristic 0";
  } else {
    out << "; no conjecture";
  }
  report.summary = out.str();
  return report;
}

std::vector<std::uint64_t> parse_prime_list(const std::string& text) {
  auto to_number = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 18) {
      throw Error(ErrorCode::InvalidArgument, "bad prime list '" + text + "': expected a..b or p1,p2,...");
    }
    return static_cast<std::uint64_t>(std::stoull(s));
  };
  std::vector<std::uint64_t> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const std::uint64_t lo = to_number(text.substr(0, dots)), hi = to_number(text.substr(dots + 2));
    if (hi - lo > 1000000 || hi < lo) throw Error(ErrorCode::InvalidArgument, "prime range '" + text + "' is empty or too wide");
    for (std::uint64_t n = lo; n <= hi; ++n) {
      if (is_prime(n)) out.push_back(n);
    }
  } else {
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      const std::uint64_t n = to_number(item);
      if (!is_prime(n)) throw Error(ErrorCode::InvalidArgument, item + " is not prime");
      out.push_back(n);
    }
  }
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, "prime list '" + text + "' contains no primes");
  return out;
}

TernaryForm::TernaryForm(const std::string& text, std::uint64_t p) : p_(p) {
  Field::prime(p);
  terms_ = expand(*parse_term(text, {"X", "Y", "Z"}), p);
  if (terms_.empty()) throw Error(ErrorCode::InvalidArgument, "polynomial '" + text + "' is zero mod " + std::to_string(p));
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    const unsigned d = mono[0] + mono[1] + mono[2];
    if (first) degree_ = d;
    if (d != degree_) throw Error(ErrorCode::NotHomogeneous, "polynomial '" + text + "' is not homogeneous");
    first = false;
  }
  if (degree_ == 0) throw Error(ErrorCode::InvalidArgument, "polynomial '" + text + "' is a nonzero constant");
}

Element TernaryForm::operator()(const std::array<Element, 3>& point) const {
  const Field field = point[0].field();
  Element sum = field.zero();
  for (const auto& [mono, c] : terms_) {
    Element term = field.from_int(static_cast<std::int64_t>(c));
    for (std::size_t i = 0; i < 3; ++i) {
      if (mono[i]) term *= pow(point[i], mono[i]);
    }
    sum += term;
  }
  return sum;
}

std::vector<Element> TernaryForm::in_z(const Element& x, const Element& y) const {
  const Field field = x.field();
  std::vector<Element> out(degree_ + 1, field.zero());
  for (const auto& [mono, c] : terms_) {
    out[mono[2]] += field.from_int(static_cast<std::int64_t>(c)) * pow(x, mono[0]) * pow(y, mono[1]);
  }
  return out;
}

std::string TernaryForm::to_string() const {
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string mono;
    for (std::size_t i = 0; i < 3; ++i) {
      if (it->first[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += static_cast<char>('X' + i);
      if (it->first[i] > 1) mono += "^" + std::to_string(it->first[i]);
    }
    if (!out.empty()) out += " + ";
    out += it->second == 1 ? mono : std::to_string(it->second) + "*" + mono;
  }
  return out;
}

CurveIntersection curves_meet(const std::string& f_text, const std::string& g_text, std::uint64_t p, unsigned levels) {
  const TernaryForm f(f_text, p), g(g_text, p);
  CurveIntersection result;
  result.bezout_bound = f.degree() * g.degree();
  for (unsigned m = 1; m <= levels && !result.found; ++m) {
    const Field field = Field::galois(p, m);
    const std::uint64_t n = field.order();
    if (n > (std::uint64_t{1} << 12)) {
      throw Error(ErrorCode::FieldTooLarge, "PG(2, " + std::to_string(n) + ") is too large to scan");
    }
    auto record = [&](const Element& x, const Element& y, const Element& z) {
      ++result.points_at_level;
      if (result.points.size() < kMaxReportedPoints) result.points.push_back({x, y, z});
    };
    // Points (x : y : z) for fixed x, y, as a polynomial in z.
    auto scan_line = [&](const Element& x, const Element& y) {
      const auto fz = f.in_z(x, y), gz = g.in_z(x, y);
      for (std::uint64_t c = 0; c < n; ++c) {
        const Element z(field, c);
        if (horner(fz, z).is_zero() && horner(gz, z).is_zero()) record(x, y, z);
      }
    };
    if (f({field.zero(), field.zero(), field.one()}).is_zero() && g({field.zero(), field.zero(), field.one()}).is_zero()) {
      record(field.zero(), field.zero(), field.one());
    }
    scan_line(field.zero(), field.one());
    for (std::uint64_t y = 0; y < n; ++y) scan_line(field.one(), Element(field, y));
    if (result.points_at_level > 0) {
      result.found = true;
      result.level = m;
    }
  }
  return result;
}

}  // namespace gqt
