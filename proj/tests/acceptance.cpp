// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>

#include "golden/end_dimension.hpp"
#include "oracle/builtin_modules.hpp"
#include "qtilt/cluster.hpp"
#include "qtilt/builtin_spec.hpp"

using namespace qtilt;

namespace {

using Dims = std::vector<std::size_t>;

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.ok) ++failures;
  std::printf("[%s] %2d %-44s %s (%.3f s)\n", o.ok ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str(), secs);
  std::fflush(stdout);
}

std::string dims_string(const Dims& d) {
  std::ostringstream s;
  s << "[";
  for (std::size_t i = 0; i < d.size(); ++i) s << (i ? "," : "") << d[i];
  s << "]";
  return s.str();
}

ExtQuiver reference_quiver() {
  const std::vector<std::pair<std::size_t, std::size_t>> arrows = {
      {1, 3}, {1, 6}, {2, 1}, {2, 3}, {3, 2}, {3, 4}, {3, 7}, {4, 2}, {5, 6}, {6, 1}, {6, 5}, {6, 7}, {7, 2}, {7, 6}};
  ExtQuiver q;
  for (std::size_t i = 1; i <= 7; ++i) q.labels.push_back(std::to_string(i));
  q.arrows.assign(7, std::vector<std::size_t>(7, 0));
  for (auto [s, t] : arrows) ++q.arrows[s - 1][t - 1];
  return q;
}

SummandDecomposition builtin_decomposition() {
  auto parts = fixture::summands();
  return decompose(direct_sum(fixture::algebra(), parts).module, parts,
                   {"P1", "P2", "P3", "M1", "M2", "M3", "M4"});
}

CertificateInputs builtin_inputs() {
  CertificateInputs in;
  in.spec_text = std::string(kBuiltinSpecText);
  return in;
}

}  // namespace

int main() {
  criterion(1, "dim A = 36 from Groebner completion", [] {
    const auto t0 = std::chrono::steady_clock::now();
    QuotientAlgebra q = QuotientAlgebra::complete(parse_algebra_spec(kBuiltinSpecText));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return Outcome{q.dimension() == 36 && secs < 1.0,
                   "dim " + std::to_string(q.dimension()) + ", completion " + std::to_string(secs) + " s"};
  });

  criterion(2, "dimension vectors of P_i and M_i", [] {
    const std::vector<Dims> want = {{4, 4, 2}, {4, 8, 4}, {2, 4, 4}, {0, 0, 1}, {1, 3, 3}, {0, 1, 2}, {1, 4, 2}};
    auto parts = fixture::summands();
    bool ok = parts.size() == want.size();
    std::string detail;
    for (std::size_t i = 0; ok && i < parts.size(); ++i) {
      ok = ok && parts[i].dims() == want[i];
      detail += dims_string(parts[i].dims());
    }
    return Outcome{ok, detail};
  });

  criterion(3, "7 summands indecomposable with simple top", [] {
    std::size_t local = 0, simple_top = 0;
    for (const RightModule& m : fixture::summands()) {
      local += has_local_endomorphisms(m);
      simple_top += top_and_radical(m).top.total_dimension() == 1;
    }
    return Outcome{local == 7 && simple_top == 7,
                   std::to_string(local) + "/7 local End, " + std::to_string(simple_top) + "/7 simple top"};
  });

  criterion(4, "M generator-cogenerator, A selfinjective", [] {
    GeneratorCheck g = generator_cogenerator_check(builtin_decomposition());
    std::size_t injective = 0;
    for (uint32_t v = 0; v < 3; ++v) injective += is_injective(fixture::projective(v));
    return Outcome{g.generator && g.cogenerator && injective == 3,
                   std::string("generator ") + (g.generator ? "yes" : "no") + ", cogenerator " +
                       (g.cogenerator ? "yes" : "no") + ", " + std::to_string(injective) + "/3 P_i injective"};
  });

  criterion(5, "Ext^1 = Ext^2 = 0 on all 49 pairs", [] {
    auto parts = fixture::summands();
    auto t = ext_table(parts, parts, 2);
    std::size_t pairs = 0, zero = 0;
    for (const auto& row : t) {
      for (const auto& cell : row) {
        ++pairs;
        zero += cell.size() == 2 && cell[0] == 0 && cell[1] == 0;
      }
    }
    return Outcome{pairs == 49 && zero == 49, std::to_string(zero) + "/" + std::to_string(pairs) + " pairs vanish"};
  });

  criterion(6, "End(M): 7 idempotent classes, quiver matches", [] {
    EndAlgebra end = endomorphism_algebra(builtin_decomposition());
    const std::size_t split = primitive_idempotents(end.algebra).size();
    SummandDecomposition found = decompose(builtin_decomposition().whole, 1);
    ExtQuiver q = ext_quiver(end.algebra, end.vertex_idempotents, end.vertex_labels);
    const bool iso = quiver_isomorphism(q, reference_quiver()).has_value();
    const bool iso_op = quiver_isomorphism(q.opposite(), reference_quiver()).has_value();
    return Outcome{split == 7 && found.classes.size() == 7 && q.arrow_total() == 14 && iso && iso_op,
                   std::to_string(split) + " primitive idempotents, " + std::to_string(found.classes.size()) +
                       " classes, " + std::to_string(q.arrow_total()) + " arrows, isomorphic: B " +
                       (iso ? "yes" : "no") + ", B^op " + (iso_op ? "yes" : "no")};
  });

  criterion(7, "gldim = domdim = 4 at bound 33", [] {
    Certificate c = certify(builtin_inputs());
    const bool ok = c.gldim == DimBound{4, true} && c.domdim == DimBound{4, true} && c.inputs.bound == 33;
    return Outcome{ok, "gldim " + c.gldim.to_string() + ", domdim " + c.domdim.to_string()};
  });

  criterion(8, "verdict: M is 3-cluster tilting", [] {
    Certificate c = certify(builtin_inputs());
    return Outcome{c.verdict == Verdict::Pass && c.inputs.n == 3,
                   std::string(verdict_name(c.verdict)) + ": " + c.reason};
  });

  criterion(9, "Omega^4(S_i) isomorphic to S_i", [] {
    std::size_t ok = 0;
    for (uint32_t v = 0; v < 3; ++v) {
      RightModule s = fixture::simple(v);
      ok += is_isomorphic(syzygy(s, 4), s).map.has_value();
    }
    return Outcome{ok == 3, std::to_string(ok) + "/3 simples"};
  });

  criterion(10, "gldim, domdim agree for B and B^op", [] {
    EndAlgebra end = endomorphism_algebra(builtin_decomposition());
    BasicAlgebra b = BasicAlgebra::from_based(end.algebra, end.vertex_idempotents, end.vertex_labels);
    BasicAlgebra bop = b.opposite();
    const DimBound g = global_dimension(b, 33), gop = global_dimension(bop, 33);
    const DimBound d = dominant_dimension(b, 33), dop = dominant_dimension(bop, 33);
    return Outcome{g == gop && d == dop && g.exact && d.exact,
                   "B: " + g.to_string() + "/" + d.to_string() + ", B^op: " + gop.to_string() + "/" + dop.to_string()};
  });

  criterion(11, "negative control: M = A fails", [] {
    CertificateInputs in = builtin_inputs();
    in.modules = {"P1", "P2", "P3"};
    Certificate c = certify(in);
    const bool ok = c.verdict == Verdict::Fail && c.gldim == DimBound{33, false};
    return Outcome{ok, std::string(verdict_name(c.verdict)) + ", gldim End(A) " + c.gldim.to_string()};
  });

  criterion(12, "full built-in pipeline under 10 minutes", [] {
    const auto t0 = std::chrono::steady_clock::now();
    Certificate c = certify(builtin_inputs());
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return Outcome{secs < 600.0 && c.verdict == Verdict::Pass, "pipeline " + std::to_string(secs) + " s"};
  });

  criterion(13, "dim End(M) equals the oracle golden value", [] {
    const std::size_t lib = endomorphism_algebra(builtin_decomposition()).algebra.dimension();
    const std::size_t live = oracle::endomorphism_dimension(oracle::direct_sum(oracle::builtin_summands()));
    return Outcome{lib == golden::kEndDimension && live == golden::kEndDimension,
                   "library " + std::to_string(lib) + ", oracle " + std::to_string(live) + ", golden " +
                       std::to_string(golden::kEndDimension)};
  });

  std::printf("%d of 13 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
