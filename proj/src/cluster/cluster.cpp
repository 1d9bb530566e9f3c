#include "qtilt/cluster.hpp"

#include <algorithm>
#include <chrono>

#include "qtilt/parallel.hpp"

namespace qtilt {

GeneratorCheck generator_cogenerator_check(const SummandDecomposition& dec, uint64_t seed) {
  const BasicAlgebra& alg = dec.whole.algebra();
  const uint32_t n = alg.vertices();
  GeneratorCheck out;
  out.projective_match.resize(n);
  out.injective_match.resize(n);
  parallel_for(2 * n, [&](std::size_t idx) {
    const uint32_t v = static_cast<uint32_t>(idx % n);
    const bool injective = idx >= n;
    RightModule target = injective ? injective_envelope(simple_module(alg, v)).injective : projective_module(alg, v);
    for (std::size_t c = 0; c < dec.classes.size(); ++c) {
      if (is_isomorphic(dec.classes[c].module, target, seed).map) {
        (injective ? out.injective_match : out.projective_match)[v] = c;
        break;
      }
    }
  });
  out.generator = std::all_of(out.projective_match.begin(), out.projective_match.end(),
                              [](const auto& m) { return m.has_value(); });
  out.cogenerator = std::all_of(out.injective_match.begin(), out.injective_match.end(),
                                [](const auto& m) { return m.has_value(); });
  return out;
}

std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> RigidityTable::witness() const {
  for (std::size_t a = 0; a < ext.size(); ++a) {
    for (std::size_t b = 0; b < ext[a].size(); ++b) {
      for (std::size_t i = 0; i < ext[a][b].size(); ++i) {
        if (ext[a][b][i] != 0) return std::make_tuple(a, b, i + 1);
      }
    }
  }
  return std::nullopt;
}

RigidityTable rigidity_table(const SummandDecomposition& dec, std::size_t n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  std::vector<RightModule> reps;
  for (const SummandClass& c : dec.classes) reps.push_back(c.module);
  RigidityTable t;
  t.max_degree = n - 1;
  if (n >= 2) {
    t.ext = ext_table(reps, reps, n - 1);
  } else {
    t.ext.assign(reps.size(), std::vector<std::vector<std::size_t>>(reps.size()));
  }
  return t;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {

class Stopwatch {
 public:
  explicit Stopwatch(std::vector<StageTiming>& out) : out_(out), start_(std::chrono::steady_clock::now()) {}
  void lap(const std::string& stage) {
    const auto now = std::chrono::steady_clock::now();
    out_.push_back({stage, std::chrono::duration<double>(now - start_).count()});
    start_ = now;
  }

 private:
  std::vector<StageTiming>& out_;
  std::chrono::steady_clock::time_point start_;
};

enum class Check { Ok, Fail, Unknown };

// An inexact ">= v" rules out `want` only when v > want.
Check dimension_check(const DimBound& d, std::size_t want) {
  if (d.exact) return d.value == want ? Check::Ok : Check::Fail;
  return d.value <= want ? Check::Unknown : Check::Fail;
}

}  // namespace

Certificate certify(const BasicAlgebra& alg, const SummandDecomposition& dec, std::size_t n, std::size_t bound,
                    uint64_t seed) {
  const Quiver q = alg.quiver();
  if (!q.connected()) throw PreconditionError("algebra is not connected");
  if (alg.arrow_count() == 0) throw PreconditionError("algebra is semisimple");
  if (n < 1) throw std::invalid_argument("n must be at least 1");

  Certificate cert;
  Stopwatch clock(cert.timings);
  cert.characteristic = alg.field().characteristic();
  cert.algebra_dimension = alg.dimension();
  cert.algebra_connected = true;
  bool selfinjective = true;
  for (uint32_t v = 0; v < alg.vertices(); ++v) {
    RightModule p = projective_module(alg, v);
    cert.projective_dims.push_back(p.dims());
    selfinjective = selfinjective && is_injective(p);
  }
  cert.algebra_selfinjective = selfinjective;
  cert.module_dims = dec.whole.dims();
  cert.summands.resize(dec.classes.size());
  parallel_for(dec.classes.size(), [&](std::size_t c) {
    const SummandClass& s = dec.classes[c];
    cert.summands[c] = {s.label, s.module.dims(), s.multiplicity(), has_local_endomorphisms(s.module),
                        top_and_radical(s.module).top.total_dimension() == 1};
  });
  clock.lap("summands");

  cert.generators = generator_cogenerator_check(dec, seed);
  clock.lap("generator_cogenerator");

  cert.rigidity = rigidity_table(dec, n);
  clock.lap("rigidity");

  EndAlgebra end = endomorphism_algebra(dec);
  cert.end_dimension = end.algebra.dimension();
  cert.end_vertices = end.vertex_idempotents.size();
  clock.lap("endomorphism_algebra");

  BasicAlgebra b = BasicAlgebra::from_based(end.algebra, end.vertex_idempotents, end.vertex_labels, "End");
  cert.end_quiver = ext_quiver(end.algebra, end.vertex_idempotents, end.vertex_labels);
  cert.end_quiver_opposite = cert.end_quiver.opposite();
  cert.end_quiver_connected = cert.end_quiver.connected();
  clock.lap("end_quiver");

  cert.gldim = global_dimension(b, bound);
  clock.lap("global_dimension");
  cert.domdim = dominant_dimension(b, bound);
  clock.lap("dominant_dimension");

  std::vector<std::string> failures, unknowns;
  if (!cert.generators.generator) failures.push_back("not a generator");
  if (!cert.generators.cogenerator) failures.push_back("not a cogenerator");
  const std::size_t want = n + 1;
  auto judge = [&](const char* name, const DimBound& d) {
    switch (dimension_check(d, want)) {
      case Check::Ok:
        break;
      case Check::Fail:
        failures.push_back(std::string(name) + " of End(M) is " + d.to_string() + ", not " + std::to_string(want));
        break;
      case Check::Unknown:
        unknowns.push_back(std::string(name) + " of End(M) is " + d.to_string() +
                           (d.value < bound ? "; the search stopped at the syzygy size limit"
                                            : "; raise the bound above " + std::to_string(want)));
        break;
    }
  };
  judge("global dimension", cert.gldim);
  judge("dominant dimension", cert.domdim);

  auto join = [](const std::vector<std::string>& xs) {
    std::string out;
    for (const std::string& x : xs) out += (out.empty() ? "" : "; ") + x;
    return out;
  };
  if (!failures.empty()) {
    cert.verdict = Verdict::Fail;
    cert.reason = join(failures);
  } else if (!unknowns.empty()) {
    cert.verdict = Verdict::Inconclusive;
    cert.reason = join(unknowns);
  } else {
    cert.verdict = Verdict::Pass;
    cert.reason = "End(M) has global and dominant dimension " + std::to_string(want);
    if (!cert.rigidity.rigid()) {
      throw std::logic_error("internal error: certificate passed but Ext-rigidity fails");
    }
  }
  return cert;
}

std::vector<std::string> default_module_names(const Presentation& p) {
  std::vector<std::string> out;
  for (uint32_t v = 0; v < p.quiver.vertices; ++v) out.push_back("P" + std::to_string(v + 1));
  for (const ModuleDecl& m : p.modules) out.push_back(m.name);
  return out;
}

std::vector<RightModule> build_modules(const BasicAlgebra& alg, const QuotientAlgebra& q, const Presentation& p,
                                       const std::vector<std::string>& names) {
  std::vector<RightModule> out;
  for (const std::string& name : names) {
    auto declared = std::find_if(p.modules.begin(), p.modules.end(), [&](const ModuleDecl& m) { return m.name == name; });
    if (declared != p.modules.end()) {
      out.push_back(cyclic_quotient(alg, declared->vertex, q.normal_form(declared->generator)));
      continue;
    }
    if (name.size() >= 2 && (name[0] == 'P' || name[0] == 'S' || name[0] == 'I') &&
        name.find_first_not_of("0123456789", 1) == std::string::npos) {
      const unsigned long v = std::stoul(name.substr(1));
      if (v < 1 || v > alg.vertices()) throw std::invalid_argument("module " + name + ": vertex out of range");
      const uint32_t vertex = static_cast<uint32_t>(v - 1);
      if (name[0] == 'P') out.push_back(projective_module(alg, vertex));
      if (name[0] == 'S') out.push_back(simple_module(alg, vertex));
      if (name[0] == 'I') out.push_back(injective_envelope(simple_module(alg, vertex)).injective);
      continue;
    }
    throw std::invalid_argument("unknown module " + name);
  }
  return out;
}

Certificate certify(const CertificateInputs& in) {
  std::vector<StageTiming> early;
  Stopwatch clock(early);
  Presentation p = parse_algebra_spec(in.spec_text);
  QuotientAlgebra q = QuotientAlgebra::complete(p);
  BasicAlgebra alg = BasicAlgebra::from_quotient(q);
  clock.lap("groebner");
  std::vector<std::string> names = in.modules.empty() ? default_module_names(p) : in.modules;
  std::vector<RightModule> mods = build_modules(alg, q, p, names);
  if (!alg.quiver().connected()) throw PreconditionError("algebra is not connected");
  if (alg.arrow_count() == 0) throw PreconditionError("algebra is semisimple");
  RightModule whole = direct_sum(alg, mods).module;
  SummandDecomposition dec = decompose(whole, mods, names);
  clock.lap("decomposition");
  Certificate cert = certify(alg, dec, in.n, in.bound, in.seed);
  cert.inputs = in;
  cert.inputs.modules = names;
  cert.spec_fingerprint = fingerprint(in.spec_text);
  cert.timings.insert(cert.timings.begin(), early.begin(), early.end());
  return cert;
}

}  // namespace qtilt
