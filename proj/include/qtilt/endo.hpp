#pragma once
// Krull-Schmidt decompositions, endomorphism algebras and Ext-quivers.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtilt/based_algebra.hpp"
#include "qtilt/basic_algebra.hpp"
#include "qtilt/rmod.hpp"

namespace qtilt {

class HintMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SummandClass {
  std::string label;
  RightModule module;                  // indecomposable representative
  std::vector<ModuleMap> injections;   // one per copy: module -> whole
  std::vector<ModuleMap> projections;  // one per copy: whole -> module
  std::size_t multiplicity() const { return injections.size(); }
};

struct SummandDecomposition {
  RightModule whole;
  std::vector<SummandClass> classes;

  /// projection_k o injection_l = delta_kl and the idempotents sum to the identity.
  bool verify() const;
};

/// Checks that each hint is indecomposable, that hints are pairwise
/// non-isomorphic, and that they reassemble m; throws HintMismatch otherwise.
SummandDecomposition decompose(const RightModule& m, const std::vector<RightModule>& hints,
                               const std::vector<std::string>& labels = {});
/// Splits primitive idempotents of End(m) and groups the images by isomorphism.
SummandDecomposition decompose(const RightModule& m, uint64_t seed = 1);

/// End of the basic module formed by one representative per class, with
/// product f*g = "f then g". Basis: blocks Hom(L_a, L_b) in row-major order.
struct EndAlgebra {
  BasedAlgebra algebra;
  std::vector<std::string> vertex_labels;
  std::vector<std::vector<std::size_t>> block_offset;  // [a][b]
  std::vector<std::vector<HomSpace>> blocks;           // [a][b] = Hom(L_a, L_b)
  std::vector<Matrix> vertex_idempotents;              // identity of L_a
};

EndAlgebra endomorphism_algebra(const SummandDecomposition& dec);

/// Arrow counts between vertices, [i][j] = number of arrows i -> j.
struct ExtQuiver {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> arrows;

  std::size_t vertices() const { return labels.size(); }
  std::size_t arrow_total() const;
  ExtQuiver opposite() const;
  bool connected() const;
  /// "i->j" pairs (1-based), sorted, with repetition for multiple arrows.
  std::vector<std::pair<std::size_t, std::size_t>> arrow_list() const;
};

/// dim e_i J e_j - dim e_i J^2 e_j for the given complete set of primitive idempotents.
ExtQuiver ext_quiver(const BasedAlgebra& alg, const std::vector<Matrix>& idempotents,
                     std::vector<std::string> labels = {});
ExtQuiver ext_quiver(const BasicAlgebra& alg);

/// A vertex bijection p with a.arrows[i][j] == b.arrows[p[i]][p[j]], by exhaustive search.
std::optional<std::vector<std::size_t>> quiver_isomorphism(const ExtQuiver& a, const ExtQuiver& b);

}  // namespace qtilt
