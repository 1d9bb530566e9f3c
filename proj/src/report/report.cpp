#include "qtilt/report.hpp"

#include <fstream>
#include <sstream>

#include "qtilt/parallel.hpp"
#include "qtilt/simd.hpp"

namespace qtilt {

namespace {

using json = nlohmann::ordered_json;

json dim_json(const DimBound& d) {
  json j;
  j["value"] = d.value;
  j["exact"] = d.exact;
  return j;
}

json quiver_json(const ExtQuiver& q) {
  json arrows = json::array();
  for (auto [i, j] : q.arrow_list()) arrows.push_back(json::array({i, j}));
  return arrows;
}

json match_json(const std::vector<std::optional<std::size_t>>& m, const std::vector<SummandInfo>& summands) {
  json out = json::array();
  for (const auto& v : m) out.push_back(v ? json(summands[*v].label) : json(nullptr));
  return out;
}

std::string cpu_model() {
  std::ifstream in("/proc/cpuinfo");
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("model name", 0) == 0) {
      auto pos = line.find(':');
      if (pos != std::string::npos) return line.substr(pos + 2);
    }
  }
  return "unknown";
}

}  // namespace

nlohmann::ordered_json certificate_report(const Certificate& cert, const ReportOptions& opts) {
  json r;
  r["schema"] = kReportSchema;
  r["tool"] = {{"name", "qtilt"}, {"version", kToolVersion}};

  json in;
  in["spec_fingerprint"] = cert.spec_fingerprint;
  in["modules"] = cert.inputs.modules;
  in["n"] = cert.inputs.n;
  in["bound"] = cert.inputs.bound;
  in["seed"] = cert.inputs.seed;
  r["inputs"] = in;

  json alg;
  alg["characteristic"] = cert.characteristic;
  alg["dimension"] = cert.algebra_dimension;
  alg["projective_dimension_vectors"] = cert.projective_dims;
  alg["connected"] = cert.algebra_connected;
  alg["selfinjective"] = cert.algebra_selfinjective;
  r["algebra"] = alg;

  json mod;
  mod["dimension_vector"] = cert.module_dims;
  json summands = json::array();
  for (const SummandInfo& s : cert.summands) {
    json j;
    j["label"] = s.label;
    j["dimension_vector"] = s.dims;
    j["multiplicity"] = s.multiplicity;
    j["local_endomorphisms"] = s.local_endomorphisms;
    j["simple_top"] = s.simple_top;
    summands.push_back(j);
  }
  mod["summands"] = summands;
  r["module"] = mod;

  json gen;
  gen["generator"] = cert.generators.generator;
  gen["cogenerator"] = cert.generators.cogenerator;
  gen["projective_match"] = match_json(cert.generators.projective_match, cert.summands);
  gen["injective_match"] = match_json(cert.generators.injective_match, cert.summands);
  r["generator_cogenerator"] = gen;

  json rig;
  json degrees = json::array();
  for (std::size_t i = 1; i <= cert.rigidity.max_degree; ++i) degrees.push_back(i);
  rig["degrees"] = degrees;
  rig["table"] = cert.rigidity.ext;
  rig["rigid"] = cert.rigidity.rigid();
  if (auto w = cert.rigidity.witness()) {
    auto [a, b, i] = *w;
    rig["witness"] = {{"from", cert.summands[a].label}, {"to", cert.summands[b].label}, {"degree", i}};
  } else {
    rig["witness"] = nullptr;
  }
  r["rigidity"] = rig;

  json end;
  end["dimension"] = cert.end_dimension;
  end["vertices"] = cert.end_vertices;
  end["vertex_labels"] = cert.end_quiver.labels;
  end["quiver"] = quiver_json(cert.end_quiver);
  end["opposite_quiver"] = quiver_json(cert.end_quiver_opposite);
  end["quiver_connected"] = cert.end_quiver_connected;
  end["global_dimension"] = dim_json(cert.gldim);
  end["dominant_dimension"] = dim_json(cert.domdim);
  r["endomorphism_algebra"] = end;

  json verdict;
  verdict["n"] = cert.inputs.n;
  verdict["result"] = verdict_name(cert.verdict);
  verdict["reason"] = cert.reason;
  r["verdict"] = verdict;

  if (opts.timings) {
    json t;
    double total = 0;
    for (const StageTiming& s : cert.timings) {
      t[s.stage] = s.seconds;
      total += s.seconds;
    }
    t["total"] = total;
    r["timings"] = t;
    json env;
    env["threads"] = opts.threads ? opts.threads : thread_count();
    env["simd"] = simd::isa_name(simd::active().isa);
    env["cpu"] = cpu_model();
    r["environment"] = env;
  }
  return r;
}

nlohmann::ordered_json strip_volatile(nlohmann::ordered_json report) {
  report.erase("timings");
  report.erase("environment");
  return report;
}

std::string certificate_summary(const Certificate& cert) {
  std::ostringstream out;
  out << "algebra: dim " << cert.algebra_dimension << " over GF(" << cert.characteristic << "), "
      << (cert.algebra_selfinjective ? "selfinjective" : "not selfinjective") << "\n";
  out << "module: " << cert.summands.size() << " summand classes, dimension vector [";
  for (std::size_t i = 0; i < cert.module_dims.size(); ++i) out << (i ? "," : "") << cert.module_dims[i];
  out << "]\n";
  out << "generator: " << (cert.generators.generator ? "yes" : "no")
      << ", cogenerator: " << (cert.generators.cogenerator ? "yes" : "no") << "\n";
  if (cert.rigidity.max_degree == 0) {
    out << "Ext-rigid: nothing to check for n = 1\n";
  } else {
    out << "Ext-rigid in degrees 1.." << cert.rigidity.max_degree << ": " << (cert.rigidity.rigid() ? "yes" : "no")
        << "\n";
  }
  out << "End(M): dim " << cert.end_dimension << ", " << cert.end_vertices << " vertices, "
      << cert.end_quiver.arrow_total() << " arrows, gldim " << cert.gldim.to_string() << ", domdim "
      << cert.domdim.to_string() << "\n";
  out << "verdict: " << verdict_name(cert.verdict) << " (" << cert.reason << ")\n";
  return out.str();
}

}  // namespace qtilt
