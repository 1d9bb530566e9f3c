#pragma once
// Right modules over a BasicAlgebra, stored as quiver representations.
//
// A module X has a space X_v for each vertex and, for each arrow a: s -> t, a
// dims[s] x dims[t] matrix acting on row vectors (x -> x X_a). The action of a
// basis word is the product of its arrow matrices and is cached on first use.
// Module maps are likewise one matrix per vertex, composed left to right.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "qtilt/based_algebra.hpp"
#include "qtilt/basic_algebra.hpp"
#include "qtilt/matrix.hpp"

namespace qtilt {

class RightModule {
 public:
  RightModule(BasicAlgebra alg, std::vector<std::size_t> dims, std::vector<Matrix> arrows);
  static RightModule zero(const BasicAlgebra& alg);

  const BasicAlgebra& algebra() const { return alg_; }
  const Field& field() const { return alg_.field(); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(uint32_t v) const { return dims_[v]; }
  std::size_t total_dimension() const;
  bool is_zero() const { return total_dimension() == 0; }
  /// Offset of vertex v in the concatenated total space.
  std::size_t offset(uint32_t v) const;

  const Matrix& arrow(std::size_t a) const { return arrows_[a]; }
  const std::vector<Matrix>& arrows() const { return arrows_; }
  /// Action of basis word i: dims[source] x dims[target].
  const Matrix& word_action(std::size_t i) const;

  /// Verifies x * word * arrow = sum of structure constants * x * word' for
  /// all basis words and arrows, i.e. the module respects the relations.
  bool satisfies_relations() const;

 private:
  struct Cache;
  BasicAlgebra alg_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> arrows_;
  std::shared_ptr<Cache> cache_;
};

/// One matrix per vertex (source dims x target dims).
struct ModuleMap {
  std::vector<Matrix> blocks;

  static ModuleMap identity(const RightModule& x);
  static ModuleMap zero(const RightModule& x, const RightModule& y);
  /// This map followed by g.
  ModuleMap then(const ModuleMap& g) const;
  ModuleMap operator+(const ModuleMap& g) const;
  ModuleMap scaled(uint32_t c) const;
  bool is_zero() const;
  bool is_invertible() const;
  std::optional<ModuleMap> inverse() const;
  std::size_t rank() const;
  /// Block diagonal matrix on the total spaces.
  Matrix total(const RightModule& x, const RightModule& y) const;

  friend bool operator==(const ModuleMap&, const ModuleMap&) = default;
};

bool is_homomorphism(const RightModule& x, const RightModule& y, const ModuleMap& f);

RightModule projective_module(const BasicAlgebra& alg, uint32_t v);
RightModule simple_module(const BasicAlgebra& alg, uint32_t v);

/// e_v A / x A for an element x of e_v A (word coordinates).
RightModule cyclic_quotient(const BasicAlgebra& alg, uint32_t v, const Matrix& x);

struct Submodule {
  RightModule module;
  std::vector<Matrix> basis;  // per vertex, rref rows in the ambient coordinates
};

struct QuotientModule {
  RightModule module;
  ModuleMap projection;
};

/// Smallest submodule containing the given rows (per vertex).
Submodule generated_submodule(const RightModule& x, const std::vector<Matrix>& generators);
/// The given per-vertex spans, which must already be closed under the arrows.
Submodule submodule(const RightModule& x, const std::vector<Matrix>& spans);
QuotientModule quotient(const RightModule& x, const std::vector<Matrix>& spans);

struct DirectSum {
  RightModule module;
  std::vector<ModuleMap> injections;
  std::vector<ModuleMap> projections;
};

DirectSum direct_sum(const BasicAlgebra& alg, const std::vector<RightModule>& parts);

/// D(X) = Hom_K(X, K) as a right module over the opposite algebra.
RightModule dual_module(const RightModule& x);
/// D(f): D(Y) -> D(X).
ModuleMap dual_map(const ModuleMap& f);

/// Basis of Hom(X, Y) from the intertwining equations. Coordinates of a map
/// are its entries at the free columns of the system, in flattened order
/// (vertex-major, then row-major within each block).
struct HomSpace {
  std::vector<ModuleMap> basis;
  std::vector<std::size_t> free_columns;
  std::size_t dimension() const { return basis.size(); }
  Matrix coordinates(const ModuleMap& f) const;
  ModuleMap combination(const Matrix& coeffs) const;
};

HomSpace hom_space(const RightModule& x, const RightModule& y);
inline std::vector<ModuleMap> hom_basis(const RightModule& x, const RightModule& y) {
  return hom_space(x, y).basis;
}

/// End(X) with product f*g = "f then g", represented faithfully on X.
BasedAlgebra endomorphism_algebra(const RightModule& x);
bool has_local_endomorphisms(const RightModule& x);

struct IsoResult {
  std::optional<ModuleMap> map;  // an isomorphism X -> Y when found
  bool certain = true;           // false: the search declined without a proof
};

/// Decision procedure: dimension vectors, then invertible elements of
/// Hom(X, Y). When End(X) is local this is exact on a basis; otherwise seeded
/// random combinations are tried and the space is enumerated if small.
IsoResult is_isomorphic(const RightModule& x, const RightModule& y, uint64_t seed = 1);

/// For f in a local split endomorphism algebra: the scalar lambda with
/// f - lambda * id nilpotent.
uint32_t scalar_part(const Matrix& f);

/// Multiplicity of an indecomposable L (local split End) as a summand of X.
std::size_t multiplicity(const RightModule& l, const RightModule& x);

}  // namespace qtilt
