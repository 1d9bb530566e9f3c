#pragma once
// n-cluster tilting certificates via the higher Auslander criterion:
// a generator-cogenerator M over a connected non-semisimple algebra is
// n-cluster tilting iff End(M) has global and dominant dimension n + 1.
// The Ext-rigidity table is attached as corroborating evidence.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "qtilt/endo.hpp"
#include "qtilt/homalg.hpp"
#include "qtilt/path_algebra.hpp"

namespace qtilt {

class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GeneratorCheck {
  bool generator = false;
  bool cogenerator = false;
  std::vector<std::optional<std::size_t>> projective_match;  // vertex -> summand class
  std::vector<std::optional<std::size_t>> injective_match;   // vertex -> summand class
};

GeneratorCheck generator_cogenerator_check(const SummandDecomposition& dec, uint64_t seed = 1);

struct RigidityTable {
  std::size_t max_degree = 0;
  std::vector<std::vector<std::vector<std::size_t>>> ext;  // [a][b][i - 1] = dim Ext^i(M_a, M_b)
  bool rigid() const { return !witness().has_value(); }
  /// First (a, b, degree) with nonzero Ext, in table order.
  std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> witness() const;
};

RigidityTable rigidity_table(const SummandDecomposition& dec, std::size_t n);

enum class Verdict { Pass, Fail, Inconclusive };
const char* verdict_name(Verdict v);

/// Everything needed to rebuild the certificate from scratch.
struct CertificateInputs {
  std::string spec_text;
  std::vector<std::string> modules;  // "P<i>" for projectives, otherwise declared module names
  std::size_t n = 3;
  std::size_t bound = 33;
  uint64_t seed = 1;
};

struct SummandInfo {
  std::string label;
  std::vector<std::size_t> dims;
  std::size_t multiplicity = 1;
  bool local_endomorphisms = false;
  bool simple_top = false;
};

struct StageTiming {
  std::string stage;
  double seconds = 0;
};

struct Certificate {
  CertificateInputs inputs;
  std::string spec_fingerprint;
  uint32_t characteristic = 2;
  std::size_t algebra_dimension = 0;
  std::vector<std::vector<std::size_t>> projective_dims;
  bool algebra_connected = false;
  bool algebra_selfinjective = false;
  std::vector<SummandInfo> summands;
  std::vector<std::size_t> module_dims;
  GeneratorCheck generators;
  RigidityTable rigidity;
  std::size_t end_dimension = 0;
  std::size_t end_vertices = 0;
  ExtQuiver end_quiver;           // quiver of End(M) with f*g = "f then g"
  ExtQuiver end_quiver_opposite;  // its opposite
  bool end_quiver_connected = false;
  DimBound gldim;
  DimBound domdim;
  Verdict verdict = Verdict::Fail;
  std::string reason;
  std::vector<StageTiming> timings;
};

/// Runs every check. Throws PreconditionError for a disconnected or
/// semisimple algebra, ParseError / std::invalid_argument for bad input.
Certificate certify(const CertificateInputs& in);

/// Lower-level entry: certify a decomposition over a given algebra.
Certificate certify(const BasicAlgebra& alg, const SummandDecomposition& dec, std::size_t n, std::size_t bound,
                    uint64_t seed = 1);

/// Builds the named modules over the algebra of a presentation.
std::vector<RightModule> build_modules(const BasicAlgebra& alg, const QuotientAlgebra& q, const Presentation& p,
                                       const std::vector<std::string>& names);

/// Default module list: all projectives followed by every declared module.
std::vector<std::string> default_module_names(const Presentation& p);

}  // namespace qtilt
