#pragma once
// Projective covers, minimal resolutions, Ext dimensions and the homological
// dimensions of basic algebras.
//
// A finite sum of indecomposable projectives is recorded by its list of
// generator vertices; the module itself is the direct sum of e_v A in that
// order. Elements of such a sum are rows in the concatenated word coordinates.

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "qtilt/rmod.hpp"

namespace qtilt {

/// A dimension that is either exact or known to be at least `value`.
struct DimBound {
  std::size_t value = 0;
  bool exact = true;

  std::string to_string() const { return exact ? std::to_string(value) : ">= " + std::to_string(value); }
  friend bool operator==(const DimBound&, const DimBound&) = default;
};

struct TopRadical {
  RightModule top;
  Submodule radical;
  ModuleMap quotient_map;
};

TopRadical top_and_radical(const RightModule& x);

/// Direct sum of e_v A over the listed vertices.
RightModule projective_sum(const BasicAlgebra& alg, const std::vector<uint32_t>& generators);

struct Cover {
  RightModule projective;
  std::vector<uint32_t> generators;      // vertex of each summand e_v A
  std::vector<Matrix> generator_images;  // image of e_v in X_v, 1 x dim X_v
  ModuleMap epi;
};

Cover projective_cover(const RightModule& x);
/// Kernel of the cover, as a submodule of the cover's projective.
Submodule cover_kernel(const Cover& c);
RightModule syzygy(const RightModule& x, std::size_t k = 1);

struct Resolution {
  std::vector<std::vector<uint32_t>> terms;        // generator vertices of P_0, P_1, ...
  std::vector<Matrix> augmentation;                // generator images of P_0 in X
  std::vector<std::vector<Matrix>> differentials;  // [k][g]: image in P_{k-1} of generator g of P_k (k >= 1)
  std::vector<RightModule> syzygies;               // syzygies[k] = Omega^k X, including Omega^{terms.size()}
  bool terminated = false;                         // last syzygy is zero

  std::size_t length() const { return terms.size(); }
};

/// Minimal projective resolution P_0, ..., P_{max_terms-1}, stopping early
/// once a syzygy vanishes or its total dimension exceeds max_dimension.
Resolution resolve(const RightModule& x, std::size_t max_terms,
                   std::size_t max_dimension = std::numeric_limits<std::size_t>::max());

/// Matrix of Hom(P_{k-1}, Y) -> Hom(P_k, Y) induced by the k-th differential,
/// in the coordinates Hom(P, Y) = sum over generators of Y_v.
Matrix induced_hom_map(const Resolution& res, std::size_t k, const RightModule& y);

/// dim Ext^i(X, Y) for i = 0..max_degree from a resolution with at least
/// max_degree + 2 terms (or a terminated one).
std::vector<std::size_t> ext_dims(const Resolution& res, const RightModule& y, std::size_t max_degree);
std::size_t ext_dim(const RightModule& x, const RightModule& y, std::size_t degree);

/// Table [a][b][i - 1] = dim Ext^i(xs[a], ys[b]) for i = 1..max_degree.
std::vector<std::vector<std::vector<std::size_t>>> ext_table(const std::vector<RightModule>& xs,
                                                             const std::vector<RightModule>& ys,
                                                             std::size_t max_degree);

bool is_projective(const RightModule& x);
bool is_injective(const RightModule& x);

struct Envelope {
  RightModule injective;
  ModuleMap mono;
};

/// D(projective cover of D X), transported back.
Envelope injective_envelope(const RightModule& x);

/// Syzygies larger than this are not resolved further by the dimension
/// searches below: max(4096, 64 * dim A). Resolutions over algebras of
/// infinite global dimension can grow exponentially.
std::size_t syzygy_size_limit(const BasicAlgebra& alg);

/// Smallest k with Omega^{k+1} X = 0, or ">= k" when Omega^k X != 0 and the
/// search stopped there (k = bound, or earlier at the syzygy size limit).
DimBound projective_dimension(const RightModule& x, std::size_t bound);
DimBound global_dimension(const BasicAlgebra& alg, std::size_t bound);

/// Index of the first non-projective term of the minimal injective
/// coresolution of the regular module, or ">= k" when the first k terms are
/// projective and the search stopped (at the bound or the size limit).
DimBound dominant_dimension(const BasicAlgebra& alg, std::size_t bound);

/// Least d in 1..bound with Omega^d X isomorphic to X.
std::optional<std::size_t> omega_period(const RightModule& x, std::size_t bound);

}  // namespace qtilt
