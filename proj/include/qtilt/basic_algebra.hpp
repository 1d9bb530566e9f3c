#pragma once
// Basic split algebras presented by a quiver and a basis of paths.
//
// Every basis element is a word in the arrows; right(a) and left(a) are the
// matrices of x -> x*a and x -> a*x in that basis. Modules over such an
// algebra are quiver representations, so arrow matrices are all they need.
//
// The handle is cheap to copy. opposite() shares the data and flips a flag:
// arrows reverse, words read backwards, and left/right multiplication swap.

#include <memory>
#include <string>
#include <vector>

#include "qtilt/based_algebra.hpp"
#include "qtilt/matrix.hpp"
#include "qtilt/path_algebra.hpp"
#include "qtilt/qspec.hpp"

namespace qtilt {

class BasicAlgebra {
 public:
  /// Uses the normal words as basis. Requires an admissible presentation:
  /// every arrow is a normal word and every Groebner leading word has length >= 2.
  static BasicAlgebra from_quotient(const QuotientAlgebra& alg, std::string name = "A");

  /// Presents a basic split algebra through its primitive idempotents:
  /// arrows lift a basis of e_i (J/J^2) e_j, basis words are found by
  /// breadth-first search. Throws if alg/J has dimension != idempotents.size().
  static BasicAlgebra from_based(const BasedAlgebra& alg, const std::vector<Matrix>& idempotents,
                                 std::vector<std::string> vertex_labels, std::string name = "B");

  const Field& field() const;
  const std::string& name() const;
  uint32_t vertices() const;
  const std::vector<std::string>& vertex_labels() const;
  std::size_t arrow_count() const;
  /// Arrow in the current orientation.
  Arrow arrow(std::size_t a) const;
  Quiver quiver() const;

  std::size_t dimension() const;
  /// Basis word i in the current orientation.
  Path word(std::size_t i) const;
  std::string word_label(std::size_t i) const;
  /// Indices of basis words from s to t, in basis order.
  const std::vector<std::size_t>& words_between(uint32_t s, uint32_t t) const;
  /// Number of words starting at s (dimension of the projective e_s * alg).
  std::size_t words_from(uint32_t s) const;

  /// x -> x * arrow(a), in the word basis.
  const Matrix& right(std::size_t a) const;
  /// x -> arrow(a) * x, in the word basis.
  const Matrix& left(std::size_t a) const;

  /// For algebras built by from_based: rows are the basis words as elements of
  /// the original BasedAlgebra (empty otherwise).
  const Matrix& word_vectors() const;

  bool is_opposite() const { return op_; }
  BasicAlgebra opposite() const;

  friend bool operator==(const BasicAlgebra& a, const BasicAlgebra& b) { return a.d_ == b.d_ && a.op_ == b.op_; }

  struct Data;

 private:
  BasicAlgebra(std::shared_ptr<const Data> d, bool op) : d_(std::move(d)), op_(op) {}
  std::shared_ptr<const Data> d_;
  bool op_ = false;
};

}  // namespace qtilt
