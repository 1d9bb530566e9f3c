#pragma once
// Finite-dimensional algebras given by structure constants.
//
// Elements are 1 x dim row vectors. right_mult(j) is the matrix of
// x -> x * basis[j], so x * y = sum_j y_j * (x right_mult(j)).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtilt/matrix.hpp"
#include "qtilt/path_algebra.hpp"

namespace qtilt {

class NonSplitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BasedAlgebra {
 public:
  /// `representation`, when given, holds one matrix per basis element of a
  /// faithful right representation (x -> rep(x), rep(xy) = rep(x) rep(y)).
  /// Otherwise the regular representation is used.
  BasedAlgebra(Field f, std::vector<std::string> labels, std::vector<Matrix> right_mult, Matrix unit,
               std::vector<Matrix> idempotents, std::vector<Matrix> representation = {});

  static BasedAlgebra from_quotient_algebra(const QuotientAlgebra& alg);

  const Field& field() const { return field_; }
  std::size_t dimension() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Matrix& right_mult(std::size_t j) const { return right_mult_[j]; }
  const Matrix& unit() const { return unit_; }
  const std::vector<Matrix>& idempotents() const { return idempotents_; }

  Matrix multiply(const Matrix& x, const Matrix& y) const;
  /// Matrix of y -> x * y.
  Matrix left_mult(const Matrix& x) const;
  /// Matrix of y -> y * x.
  Matrix right_mult_by(const Matrix& x) const;

  std::size_t rep_dimension() const;
  Matrix represent(const Matrix& x) const;

  /// Checks unit, idempotent relations and the homomorphism property of the
  /// representation on all basis pairs (which implies associativity when the
  /// representation is faithful). Returns a description of the first failure.
  std::optional<std::string> check() const;

  /// Same space, product reversed. Keeps the distinguished idempotents; the
  /// representation becomes the transposed (dual) one.
  BasedAlgebra opposite() const;

 private:
  Field field_;
  std::vector<std::string> labels_;
  std::vector<Matrix> right_mult_;
  Matrix unit_;
  std::vector<Matrix> idempotents_;
  std::vector<Matrix> rep_;  // empty: regular representation
};

/// Jacobson radical as rref rows, by the characteristic-p trace-form chain.
Matrix radical_basis(const BasedAlgebra& alg);

/// Span of all products x*y with x, y in the row spaces of a and b (rref rows).
Matrix product_space(const BasedAlgebra& alg, const Matrix& a, const Matrix& b);

/// Complete set of orthogonal primitive idempotents refining the distinguished
/// ones. Throws NonSplitError if some simple quotient is not a matrix algebra
/// over the prime field.
std::vector<Matrix> primitive_idempotents(const BasedAlgebra& alg, uint64_t seed = 1);

/// alg / rad(alg) is one-dimensional.
bool is_local(const BasedAlgebra& alg);
/// e * alg * e / e * rad * e is one-dimensional.
bool is_local_corner(const BasedAlgebra& alg, const Matrix& e, const Matrix& radical);

}  // namespace qtilt
