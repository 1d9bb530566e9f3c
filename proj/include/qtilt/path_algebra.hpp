#pragma once
// Finite-dimensional quotients KQ/I of path algebras.
//
// The relation ideal is completed to a reduced noncommutative Groebner basis
// for the length-lexicographic order (ties broken by arrow declaration order).
// Paths avoiding every leading word of the basis ("normal words") form a basis
// of the quotient.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtilt/matrix.hpp"
#include "qtilt/qspec.hpp"

namespace qtilt {

struct GroebnerOptions {
  std::size_t initial_degree_bound = 8;
  std::size_t hard_cap = 64;
};

/// Completion could not certify a finite normal-word basis below the cap.
class NotFiniteDimensional : public std::runtime_error {
 public:
  NotFiniteDimensional(std::size_t bound, std::vector<std::string> frontier);
  std::size_t bound() const { return bound_; }
  const std::vector<std::string>& frontier() const { return frontier_; }

 private:
  std::size_t bound_;
  std::vector<std::string> frontier_;
};

struct CompletionStats {
  std::size_t degree_bound = 0;      // bound at which the basis was certified
  std::size_t obstructions = 0;      // overlap obstructions reduced
  std::size_t rounds = 0;            // bound doublings + 1
};

class QuotientAlgebra {
 public:
  /// Completes the ideal generated by `relations` (each homogeneous in its endpoints).
  static QuotientAlgebra complete(const Quiver& q, const Field& f, const std::vector<PathExpr>& relations,
                                  const GroebnerOptions& opts = {});
  static QuotientAlgebra complete(const Presentation& p, const GroebnerOptions& opts = {}) {
    return complete(p.quiver, p.field, p.relations, opts);
  }

  const Quiver& quiver() const { return quiver_; }
  const Field& field() const { return field_; }
  const std::vector<PathExpr>& groebner_basis() const { return gb_; }
  const CompletionStats& stats() const { return stats_; }

  /// Normal words in length-lexicographic order; vertex idempotents first.
  const std::vector<Path>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }
  std::optional<std::size_t> index_of(const Path& p) const;
  std::vector<std::string> basis_labels() const;

  /// Rewrites modulo the ideal; the result has only normal words.
  PathExpr reduce(const PathExpr& e) const;
  /// Coordinate row vector (1 x dimension) of the class of e.
  Matrix normal_form(const PathExpr& e) const;
  Matrix normal_form(const Path& p) const;
  PathExpr to_expr(const Matrix& v) const;

  Matrix multiply(const Matrix& a, const Matrix& b) const;
  /// Matrix of x -> x * basis[j]; row i is basis[i] * basis[j].
  const Matrix& right_mult(std::size_t j) const { return right_mult_[j]; }
  Matrix one() const;

  /// Arrows and relator words reversed, completed again.
  QuotientAlgebra opposite(const GroebnerOptions& opts = {}) const;

 private:
  QuotientAlgebra() = default;

  Quiver quiver_;
  Field field_{2};
  std::vector<PathExpr> relations_;
  std::vector<PathExpr> gb_;
  std::vector<Path> basis_;
  std::map<Path, std::size_t, DegLex> index_;
  std::vector<Matrix> right_mult_;
  CompletionStats stats_;
};

}  // namespace qtilt
