#ifndef GQT_FORMS_HPP_
#define GQT_FORMS_HPP_

// Exact dense linear algebra over a field with involution: kets, matrices, the
// standard Hermitian form, and spectral data found by exhaustive root search.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "gqt/polynomial.hpp"
#include "gqt/starfield.hpp"

namespace gqt {

class StateVector {
 public:
  StateVector(Field field, std::vector<Element> entries);

  static StateVector zero(Field field, std::size_t dim);
  // k-th standard basis vector (0-based).
  static StateVector basis(Field field, std::size_t dim, std::size_t k);
  // Entries parsed with the field's element syntax.
  static StateVector parse(Field field, std::initializer_list<const char*> entries);

  Field field() const { return field_; }
  std::size_t size() const { return entries_.size(); }
  const Element& operator[](std::size_t i) const { return entries_[i]; }
  Element& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<Element>& entries() const { return entries_; }
  bool is_zero() const;

  StateVector& operator+=(const StateVector& other);
  StateVector& operator-=(const StateVector& other);
  friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
  friend StateVector operator-(StateVector a, const StateVector& b) { return a -= b; }
  friend StateVector operator*(const Element& c, const StateVector& v);
  friend bool operator==(const StateVector& a, const StateVector& b) {
    return a.field_ == b.field_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const StateVector& a, const StateVector& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Field field_;
  std::vector<Element> entries_;
};

class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Element> entries);

  static Matrix zero(Field field, std::size_t rows, std::size_t cols);
  static Matrix identity(Field field, std::size_t n);
  static Matrix diagonal(Field field, const std::vector<Element>& diag);
  static Matrix from_columns(const std::vector<StateVector>& columns);
  // Row-major entries in the field's element syntax.
  static Matrix parse(Field field, std::size_t rows, std::size_t cols,
                      std::initializer_list<const char*> entries);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<Element>& entries() const { return data_; }

  const Element& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  StateVector row(std::size_t i) const;
  StateVector column(std::size_t j) const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend StateVector operator*(const Matrix& a, const StateVector& v);
  friend Matrix operator*(const Element& c, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

// <x, y> = sum involute(x_i) y_i
Element herm_form(const StateVector& x, const StateVector& y);

StateVector involute(const StateVector& v);
Matrix involute(const Matrix& m);
Matrix transpose(const Matrix& m);
// (M*)_{ij} = involute(M_{ji})
Matrix conj_transpose(const Matrix& m);
// v w*
Matrix outer(const StateVector& v, const StateVector& w);

bool is_unitary(const Matrix& u);
bool is_hermitian(const Matrix& a);

// det(xI - A), computed by Bareiss elimination over F[x]. Each pivot is a
// leading principal minor of xI - A, a monic polynomial, so no pivoting is
// ever needed and every division is exact.
Polynomial char_poly(const Matrix& a);

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
};

// Reduced row echelon form. Pivots are chosen column by column as the first
// nonzero entry at or below the current row, which makes the output
// reproducible across implementations.
RowEchelon row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);
// One basis vector per free column: 1 at the free column, minus the reduced
// entries at the pivot columns.
std::vector<StateVector> null_space(const Matrix& m);
// A particular solution of m x = b (free variables set to zero).
StateVector solve(const Matrix& m, const StateVector& b);
Element determinant(const Matrix& m);
Matrix inverse(const Matrix& m);

struct RootSearch {
  std::vector<Element> roots;  // distinct, canonical order
  // True when every root in the field is guaranteed to be listed.
  bool exhaustive = true;
};

// Finite fields: every element is tried. Q(i): candidates u/v with u | a_0 and
// v | a_n over the Gaussian integers after clearing denominators; the search
// gives up (exhaustive = false) when the norms are too large to factor.
RootSearch find_roots(const Polynomial& f);

struct Eigenspace {
  Element eigenvalue;
  std::vector<StateVector> basis;
};

struct EigenDecomposition {
  std::vector<Eigenspace> spaces;  // ordered by eigenvalue
  // Eigenspace dimensions sum to the matrix size.
  bool complete = false;
  // Every eigenvalue lying in the owner field has been found.
  bool exhaustive = true;
};

EigenDecomposition eigen_decompose(const Matrix& a);

}  // namespace gqt

#endif  // GQT_FORMS_HPP_
