#include "gqt/selftest.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "gqt/generators.hpp"

namespace gqt {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string name) { r_.name = std::move(name); }
  void expect(bool ok, const std::string& what) {
    ++r_.cases;
    if (!ok) {
      if (r_.failures++ == 0) r_.first_failure = what;
    }
  }
  // Exceptions inside a case count as a failure of that case.
  void run(const std::string& what, const std::function<bool()>& body) {
    bool ok = false;
    try {
      ok = body();
    } catch (const std::exception& e) {
      expect(false, what + ": " + e.what());
      return;
    }
    expect(ok, what);
  }
  CheckResult result() const { return r_; }

 private:
  CheckResult r_;
};

Field f4() { return Field::quad_ext(2, 1); }
Field f9() { return Field::quad_ext(3, 1); }
Field f25() { return Field::quad_ext(5, 1); }

std::vector<Field> form_backends() { return {f4(), f9(), f25(), Field::gaussian()}; }

// Plain elimination, written separately from forms.cpp.
std::size_t oracle_rank(std::vector<std::vector<Element>> rows) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const Element inv = inverse(rows[rank][c]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      const Element factor = rows[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Element>> rows_of(const Matrix& m) {
  std::vector<std::vector<Element>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(m(i, j));
  }
  return out;
}

// Sum over permutations.
Element leibniz(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Element total = m.field().zero();
  do {
    Element term = m.field().one();
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Element form(const StateVector& x, const StateVector& y) {
  Element s = x.field().zero();
  for (std::size_t i = 0; i < x.size(); ++i) s += involute(x[i]) * y[i];
  return s;
}

std::vector<StateVector> all_vectors(Field f, std::size_t n) {
  const auto elems = all_elements(f);
  std::vector<StateVector> out;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<Element> coords;
    for (const auto i : idx) coords.push_back(elems[i]);
    out.emplace_back(f, coords);
    std::size_t k = n;
    while (k > 0 && ++idx[k - 1] == elems.size()) idx[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

Matrix random_nonsingular(Rng& rng, Field f, std::size_t n) {
  while (true) {
    Matrix m = random_matrix(rng, f, n, n);
    if (!leibniz(m).is_zero()) return m;
  }
}

std::string describe(const Matrix& m) { return m.field().name() + " " + m.to_string(); }

}  // namespace

Json check_to_json(const CheckResult& c) {
  return {{"name", c.name},
          {"cases", c.cases},
          {"failures", c.failures},
          {"first_failure", c.first_failure.empty() ? Json(nullptr) : Json(c.first_failure)},
          {"ok", c.ok()}};
}

CheckResult check_sesquilinear(std::size_t random_cases) {
  Recorder rec("sesquilinear identities");
  auto identities = [](const StateVector& x, const StateVector& y, const Element& a, const Element& b) {
    const Element xy = herm_form(x, y);
    return herm_form(a * x, b * y) == involute(a) * xy * b && involute(xy) == herm_form(y, x) && xy == form(x, y);
  };
  const auto vecs = all_vectors(f4(), 2);
  const auto scalars = all_elements(f4());
  for (const auto& x : vecs) {
    for (const auto& y : vecs) {
      for (const auto& a : scalars) {
        for (const auto& b : scalars) {
          if (!identities(x, y, a, b)) rec.expect(false, "F_4 " + x.to_string() + " " + y.to_string());
        }
      }
      rec.expect(true, "");
    }
  }
  Rng rng(1001);
  const Field fields[] = {f9(), f25(), Field::gaussian()};
  for (std::size_t k = 0; k < random_cases; ++k) {
    const Field f = fields[k % 3];
    const std::size_t n = 2 + rng.below(3);
    const StateVector x = random_vector(rng, f, n), y = random_vector(rng, f, n);
    const Element a = random_element(rng, f), b = random_element(rng, f);
    rec.run(f.name() + " " + x.to_string() + " " + y.to_string(), [&] { return identities(x, y, a, b); });
  }
  return rec.result();
}

CheckResult check_unitary_forms(std::size_t per_backend) {
  Recorder rec("unitary form preservation");
  Rng rng(1002);
  for (const Field f : form_backends()) {
    for (std::size_t k = 0; k < per_backend; ++k) {
      const std::size_t n = 2 + rng.below(3);
      const Matrix u = random_unitary(rng, f, n);
      const StateVector x = random_vector(rng, f, n), y = random_vector(rng, f, n);
      rec.run(describe(u), [&] {
        return is_unitary(u) && conj_transpose(u) * u == Matrix::identity(f, n) && form(u * x, u * y) == form(x, y);
      });
    }
  }
  return rec.result();
}

CheckResult check_hermitian_char_poly(std::size_t per_backend) {
  Recorder rec("hermitian char-poly coefficients fixed");
  Rng rng(1003);
  for (const Field f : form_backends()) {
    for (std::size_t k = 0; k < per_backend; ++k) {
      const std::size_t n = 2 + rng.below(3);
      const Matrix a = random_hermitian(rng, f, n);
      rec.run(describe(a), [&] {
        if (!is_hermitian(a) || conj_transpose(a) != a) return false;
        const Polynomial p = char_poly(a);
        bool fixed = true;
        for (const auto& c : p.coefficients()) fixed = fixed && involute(c) == c;
        // Constant term is (-1)^n det A.
        const Element det = leibniz(a);
        return fixed && p.degree() == static_cast<int>(n) && p.coefficient(0) == (n % 2 ? -det : det);
      });
    }
  }
  return rec.result();
}

CheckResult check_eigen_oracle(std::size_t matrices) {
  Recorder rec("eigen decomposition against oracle");
  Rng rng(1004);
  const Field fields[] = {f4(), f9(), f25()};
  for (std::size_t k = 0; k < matrices; ++k) {
    const Field f = fields[k % 3];
    const std::size_t n = 1 + rng.below(4);
    // Mix generic matrices with ones carrying repeated eigenvalues.
    Matrix a = random_matrix(rng, f, n, n);
    if (k % 4 == 1) {
      const Matrix s = random_nonsingular(rng, f, n);
      std::vector<Element> diag;
      for (std::size_t i = 0; i < n; ++i) diag.push_back(Element(f, rng.below(2)));
      a = s * Matrix::diagonal(f, diag) * inverse(s);
    }
    rec.run(describe(a), [&] {
      const auto d = eigen_decompose(a);
      std::map<std::uint64_t, std::size_t> expected;
      for (const auto& lambda : all_elements(f)) {
        Matrix shifted = a;
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= lambda;
        if (!leibniz(shifted).is_zero()) continue;
        expected[lambda.code()] = n - oracle_rank(rows_of(shifted));
      }
      std::map<std::uint64_t, std::size_t> got;
      std::size_t total = 0;
      for (const auto& s : d.spaces) {
        got[s.eigenvalue.code()] = s.basis.size();
        total += s.basis.size();
        std::vector<std::vector<Element>> basis_rows;
        for (const auto& v : s.basis) {
          if (a * v != s.eigenvalue * v) return false;
          basis_rows.push_back(v.entries());
        }
        if (oracle_rank(basis_rows) != s.basis.size()) return false;
      }
      return got == expected && d.complete == (total == n) && d.exhaustive;
    });
  }
  return rec.result();
}

CheckResult check_born_conservation(std::size_t per_backend) {
  Recorder rec("born weight-sum conservation");
  {
    const Field f = f9();
    const Observable obs(Matrix::parse(f, 2, 2, {"0", "t", "2t", "0"}));
    rec.run("F_9 example", [&] {
      const auto r = measure(obs, StateVector::basis(f, 2, 0));
      return r.outcomes.size() == 2 && r.outcomes[0].born_weight == f.from_int(2) &&
             r.outcomes[1].born_weight == f.from_int(2) && r.total_form_value == f.one();
    });
    const Field q = Field::gaussian();
    const Observable z(Matrix::diagonal(q, {q.one(), q.from_int(2)}));
    rec.run("Q(i) example", [&] {
      const auto r = measure(z, StateVector::parse(q, {"3", "4i"}));
      return r.outcomes.size() == 2 && r.outcomes[0].born_weight == q.from_int(9) &&
             r.outcomes[1].born_weight == q.from_int(16) && r.total_form_value == q.from_int(25);
    });
  }
  Rng rng(1005);
  for (const Field f : {f9(), f25(), Field::gaussian()}) {
    std::size_t counted = 0;
    for (std::size_t attempt = 0; counted < per_backend && attempt < 20 * per_backend + 100; ++attempt) {
      const std::size_t n = 2 + rng.below(3);
      const Observable obs(random_diagonalizable_hermitian(rng, f, n));
      const StateVector psi = random_nonzero_vector(rng, f, n);
      const auto r = measure(obs, psi);
      if (!std::all_of(r.outcomes.begin(), r.outcomes.end(), [](const Outcome& o) { return o.born_weight.has_value(); })) {
        continue;
      }
      ++counted;
      rec.run(describe(obs.matrix()), [&] {
        Element sum = f.zero();
        StateVector recombined = StateVector::zero(f, n);
        for (const auto& o : r.outcomes) {
          sum += *o.born_weight;
          recombined += o.projected_state;
          if (involute(*o.born_weight) != *o.born_weight) return false;
        }
        return sum == form(psi, psi) && sum == r.total_form_value && recombined == psi;
      });
    }
    rec.expect(counted == per_backend, f.name() + ": only " + std::to_string(counted) + " qualifying observables");
  }
  return rec.result();
}

CheckResult check_projector_laws() {
  Recorder rec("projector laws");
  const Field f = f9();
  std::vector<StateVector> good;
  for (const auto& v : all_vectors(f, 2)) {
    if (!form(v, v).is_zero()) good.push_back(v);
  }
  auto laws = [&](const std::vector<StateVector>& family) {
    const Matrix p = projector_onto(family).matrix;
    if (p * p != p || conj_transpose(p) != p) return false;
    for (const auto& v : family) {
      if (p * v != v) return false;
    }
    return true;
  };
  for (const auto& v : good) rec.run("{" + v.to_string() + "}", [&] { return laws({v}); });
  for (const auto& v : good) {
    for (const auto& w : good) {
      if (!form(v, w).is_zero()) continue;
      rec.run("{" + v.to_string() + ", " + w.to_string() + "}",
              [&] { return laws({v, w}) && projector_onto({v, w}).matrix == Matrix::identity(f, 2); });
    }
  }
  return rec.result();
}

CheckResult check_no_cloning() {
  Recorder rec("no-cloning witness");
  for (const Field f : {Field::prime(2), Field::prime(5), f4(), f9(), f25(), Field::gaussian()}) {
    for (std::size_t d = 2; d <= 4; ++d) {
      rec.run(f.name() + " d=" + std::to_string(d), [&] {
        const auto w = no_cloning_witness(f, d);
        auto reshape_rank = [&](const StateVector& v) {
          std::vector<std::vector<Element>> rows(d);
          for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) rows[i].push_back(v[i * d + j]);
          }
          return oracle_rank(rows);
        };
        bool clones = true;
        for (std::size_t i = 0; i < d; ++i) {
          const StateVector ei = StateVector::basis(f, d, i);
          clones = clones && w.cloner * tensor_state(ei, StateVector::basis(f, d, 0)).vector == tensor_state(ei, ei).vector;
        }
        const StateVector image = w.cloner * tensor_state(w.superposition, StateVector::basis(f, d, 0)).vector;
        return clones && image == w.linear_image && tensor_state(w.superposition, w.superposition).vector == w.required_clone &&
               reshape_rank(w.linear_image) == 2 && reshape_rank(w.required_clone) == 1 && w.linear_image_rank == 2 &&
               w.clone_rank == 1;
      });
    }
  }
  return rec.result();
}

CheckResult check_embedding(std::size_t form_pairs) {
  Recorder rec("embedding compatibility");
  const Field src = f9();
  const auto e = build_embedding(src, 3);
  const Field dst = e.target();
  rec.expect(dst.order() == 729 && e.check().homomorphism_exhaustive && e.check().involution_exhaustive &&
                 e.check().involution_compatible,
             "F_9 -> F_729 verification transcript");
  const auto elems = all_elements(src);
  bool hom = true;
  std::set<std::uint64_t> image;
  for (const auto& a : elems) {
    image.insert(e(a).code());
    for (const auto& b : elems) hom = hom && e(a + b) == e(a) + e(b) && e(a * b) == e(a) * e(b);
  }
  rec.expect(hom && image.size() == 9, "homomorphism over all 81 pairs");
  bool inv = true;
  for (const auto& a : elems) inv = inv && e(involute(a)) == involute(e(a)) && e(involute(a)) == pow(e(a), 27);
  rec.expect(inv, "involution compatibility on all 9 elements");
  Rng rng(1006);
  for (std::size_t k = 0; k < form_pairs; ++k) {
    const std::size_t n = 2 + rng.below(3);
    const StateVector x = random_vector(rng, src, n), y = random_vector(rng, src, n);
    rec.run(x.to_string() + " " + y.to_string(),
            [&] { return form(extend_state(e, x), extend_state(e, y)) == e(form(x, y)); });
  }
  rec.run("m = 2 rejected", [&] {
    try {
      build_embedding(src, 2);
    } catch (const Error& err) {
      return err.code() == ErrorCode::EvenExtensionDegree;
    }
    return false;
  });
  return rec.result();
}

CheckResult check_lefschetz_squares(std::uint64_t prime_bound) {
  Recorder rec("lefschetz: -1 is a square over the closure");
  const Sentence s = parse_sentence("E x . x*x + 1 = 0");
  for (std::uint64_t p = 2; p < prime_bound; ++p) {
    if (!is_prime(p)) continue;
    rec.run("p=" + std::to_string(p), [&] {
      const auto v = eval_closure(s, p, 2, 2);
      bool levels_ok = !v.witness.empty();
      for (const auto& w : v.witness) levels_ok = levels_ok && w.level <= 2;
      bool scan = false;
      for (std::uint64_t x = 0; x < p; ++x) scan = scan || (x * x + 1) % p == 0;
      const bool finite = eval_finite(s, Field::prime(p));
      return v.value == Truth::True && v.certified && levels_ok && finite == scan && finite == (p == 2 || p % 4 == 1);
    });
  }
  return rec.result();
}

CheckResult check_conic_pairs(std::size_t pairs_per_prime, unsigned levels) {
  Recorder rec("conic pairs meet");
  Rng rng(1007);
  static const char* monomials[] = {"X^2", "Y^2", "Z^2", "X*Y", "X*Z", "Y*Z"};
  static const unsigned exps[6][3] = {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
  for (const std::uint64_t p : {3u, 5u}) {
    for (std::size_t k = 0; k < pairs_per_prime; ++k) {
      std::string text[2];
      std::vector<std::uint64_t> coeffs[2];
      for (int c = 0; c < 2; ++c) {
        do {
          coeffs[c].clear();
          text[c].clear();
          for (const char* m : monomials) {
            coeffs[c].push_back(rng.below(p));
            text[c] += (text[c].empty() ? "" : " + ") + std::to_string(coeffs[c].back()) + "*" + m;
          }
        } while (std::all_of(coeffs[c].begin(), coeffs[c].end(), [](std::uint64_t x) { return x == 0; }));
      }
      rec.run("p=" + std::to_string(p) + " " + text[0] + " ; " + text[1], [&] {
        const auto r = curves_meet(text[0], text[1], p, levels);
        if (!r.found || r.level > levels || r.points.empty()) return false;
        for (const auto& pt : r.points) {
          for (int c = 0; c < 2; ++c) {
            const Field f = pt[0].field();
            Element value = f.zero();
            for (int i = 0; i < 6; ++i) {
              value += f.from_int(static_cast<std::int64_t>(coeffs[c][i])) * pow(pt[0], exps[i][0]) *
                       pow(pt[1], exps[i][1]) * pow(pt[2], exps[i][2]);
            }
            if (!value.is_zero()) return false;
          }
          if (pt[0].is_zero() && pt[1].is_zero() && pt[2].is_zero()) return false;
        }
        return true;
      });
    }
  }
  return rec.result();
}

CheckResult check_autocode(std::size_t maps) {
  Recorder rec("autocode dichotomy and fixed points");
  Rng rng(1008);
  const Field f = f9();
  for (std::size_t k = 0; k < maps; ++k) {
    const std::size_t n = 1 + rng.below(3);
    const unsigned e = static_cast<unsigned>(rng.below(2));
    const Matrix m = random_nonsingular(rng, f, n);
    rec.run(describe(m) + " e=" + std::to_string(e), [&] {
      const SemilinearMap phi(m, e);
      const auto cert = square_is_linear(phi);
      if (!cert.verified || cert.squared != (e == 1)) return false;
      // The certified matrix acts like phi (e = 0) or phi twice (e = 1) on every basis vector and a random vector.
      std::vector<StateVector> probes;
      for (std::size_t i = 0; i < n; ++i) probes.push_back(StateVector::basis(f, n, i));
      probes.push_back(random_vector(rng, f, n));
      for (const auto& v : probes) {
        StateVector w = m * (e ? involute(v) : v);
        if (e) w = m * involute(w);
        if (cert.linear * v != w) return false;
      }
      if (e == 1) return true;
      // Level-1 fixed points against the eigenvector classes.
      std::set<std::vector<std::uint64_t>> expected;
      for (const auto& v : all_vectors(f, n)) {
        std::size_t lead = 0;
        while (lead < n && v[lead].is_zero()) ++lead;
        if (lead == n || !v[lead].is_one()) continue;
        const StateVector w = m * v;
        if (w == w[lead] * v) {
          std::vector<std::uint64_t> key;
          for (const auto& x : v.entries()) key.push_back(x.code());
          expected.insert(key);
        }
      }
      const auto report = fixed_points(phi, 1);
      std::set<std::vector<std::uint64_t>> got;
      for (const auto& fp : report.points) {
        std::vector<std::uint64_t> key;
        for (const auto& x : fp.representative.entries()) key.push_back(x.code());
        got.insert(key);
      }
      return got == expected && got.size() == report.points.size();
    });
  }
  return rec.result();
}

Json selftest_report() {
  const std::vector<CheckResult> checks = {
      check_sesquilinear(500),      check_unitary_forms(25),  check_hermitian_char_poly(25),
      check_eigen_oracle(60),       check_born_conservation(25), check_projector_laws(),
      check_no_cloning(),           check_embedding(100),     check_lefschetz_squares(30),
      check_conic_pairs(5, 4),      check_autocode(60),
  };
  Json list = Json::array();
  bool ok = true;
  for (const auto& c : checks) {
    list.push_back(check_to_json(c));
    ok = ok && c.ok();
  }
  return {{"checks", list}, {"ok", ok}};
}

}  // namespace gqt
