// qtilt: command-line front end for the cluster tilting pipeline.
//
// Exit codes: 0 pass / success, 1 fail, 2 inconclusive, 3 input error.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "qtilt/cluster.hpp"
#include "qtilt/builtin_spec.hpp"
#include "qtilt/parallel.hpp"
#include "qtilt/report.hpp"
#include "qtilt/simd.hpp"

namespace {

using namespace qtilt;
using json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitInput = 3;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string algebra_path;  // empty: the shipped presentation
  unsigned threads = 0;
  uint64_t seed = 1;
  std::size_t bound = 33;
  bool json_out = false;
};

std::string read_spec(const std::string& path) {
  if (path.empty()) return std::string(kBuiltinSpecText);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string source_name(const std::string& path) { return path.empty() ? "<shipped>" : path; }

// "M_2" and "M2" name the same module.
std::string module_name(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), '_'), s.end());
  return s;
}

std::vector<std::string> module_names(const std::vector<std::string>& xs) {
  std::vector<std::string> out;
  for (const std::string& x : xs) out.push_back(module_name(x));
  return out;
}

struct Loaded {
  std::string text;
  Presentation presentation;
  QuotientAlgebra quotient;
  BasicAlgebra algebra;
};

Loaded load(const Common& c) {
  std::string text = read_spec(c.algebra_path);
  Presentation p = parse_algebra_spec(text);
  QuotientAlgebra q = QuotientAlgebra::complete(p);
  BasicAlgebra alg = BasicAlgebra::from_quotient(q);
  return {std::move(text), std::move(p), std::move(q), std::move(alg)};
}

RightModule one_module(const Loaded& l, const std::string& name) {
  return build_modules(l.algebra, l.quotient, l.presentation, {module_name(name)}).front();
}

std::string vec_string(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---- subcommands ----------------------------------------------------------

int cmd_parse(const Common& c) {
  const std::string text = read_spec(c.algebra_path);
  Presentation p = parse_algebra_spec(text);
  const std::string canonical = print_presentation(p);
  if (c.json_out) {
    json j;
    j["source"] = source_name(c.algebra_path);
    j["fingerprint"] = fingerprint(text);
    j["characteristic"] = p.field.characteristic();
    j["vertices"] = p.quiver.vertices;
    j["arrows"] = p.quiver.arrows.size();
    j["relations"] = p.relations.size();
    j["modules"] = p.modules.size();
    j["canonical"] = canonical;
    emit(j);
  } else {
    std::cout << canonical;
    std::cout << "# fingerprint " << fingerprint(text) << "\n";
  }
  return kExitPass;
}

int cmd_info(const Common& c) {
  Loaded l = load(c);
  std::vector<std::vector<std::size_t>> projectives;
  bool selfinjective = true;
  for (uint32_t v = 0; v < l.algebra.vertices(); ++v) {
    RightModule p = projective_module(l.algebra, v);
    projectives.push_back(p.dims());
    selfinjective = selfinjective && is_injective(p);
  }
  std::vector<std::pair<std::string, std::vector<std::size_t>>> modules;
  for (const ModuleDecl& m : l.presentation.modules) modules.emplace_back(m.name, one_module(l, m.name).dims());

  if (c.json_out) {
    json j;
    j["fingerprint"] = fingerprint(l.text);
    j["characteristic"] = l.algebra.field().characteristic();
    j["dimension"] = l.quotient.dimension();
    j["groebner_basis_size"] = l.quotient.groebner_basis().size();
    j["degree_bound"] = l.quotient.stats().degree_bound;
    j["projective_dimension_vectors"] = projectives;
    j["selfinjective"] = selfinjective;
    json mods = json::object();
    for (const auto& [name, dims] : modules) mods[name] = dims;
    j["modules"] = mods;
    emit(j);
    return kExitPass;
  }
  std::cout << "dimension: " << l.quotient.dimension() << "\n";
  std::cout << "groebner basis: " << l.quotient.groebner_basis().size() << " elements, certified at degree "
            << l.quotient.stats().degree_bound << "\n";
  for (std::size_t v = 0; v < projectives.size(); ++v) {
    std::cout << "P" << v + 1 << ": " << vec_string(projectives[v]) << "\n";
  }
  std::cout << "selfinjective: " << (selfinjective ? "yes" : "no") << "\n";
  for (const auto& [name, dims] : modules) std::cout << name << ": " << vec_string(dims) << "\n";
  return kExitPass;
}

int cmd_resolve(const Common& c, const std::string& module, std::size_t terms) {
  Loaded l = load(c);
  RightModule x = one_module(l, module);
  Resolution r = resolve(x, terms);
  if (c.json_out) {
    json j;
    j["module"] = module_name(module);
    j["dimension_vector"] = x.dims();
    json ts = json::array();
    for (std::size_t k = 0; k < r.length(); ++k) {
      json t;
      std::vector<std::size_t> gens;
      for (uint32_t v : r.terms[k]) gens.push_back(v + 1);
      t["generators"] = gens;
      t["syzygy_dimension_vector"] = r.syzygies[k + 1].dims();
      ts.push_back(t);
    }
    j["terms"] = ts;
    j["terminated"] = r.terminated;
    emit(j);
    return kExitPass;
  }
  std::cout << "resolution of " << module_name(module) << " " << vec_string(x.dims()) << "\n";
  for (std::size_t k = 0; k < r.length(); ++k) {
    std::cout << "P_" << k << " =";
    if (r.terms[k].empty()) std::cout << " 0";
    for (std::size_t g = 0; g < r.terms[k].size(); ++g) std::cout << (g ? " + P" : " P") << r.terms[k][g] + 1;
    std::cout << "    Omega^" << k + 1 << " " << vec_string(r.syzygies[k + 1].dims()) << "\n";
  }
  std::cout << (r.terminated ? "terminated" : "not terminated within " + std::to_string(terms) + " terms") << "\n";
  return kExitPass;
}

int cmd_ext(const Common& c, const std::string& from, const std::string& to, const std::vector<std::size_t>& degrees) {
  Loaded l = load(c);
  RightModule x = one_module(l, from);
  RightModule y = one_module(l, to);
  const std::size_t top = degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end());
  std::vector<std::size_t> dims = ext_dims(resolve(x, top + 2), y, top);
  if (c.json_out) {
    json j;
    j["from"] = module_name(from);
    j["to"] = module_name(to);
    json d = json::object();
    for (std::size_t i : degrees) d[std::to_string(i)] = dims[i];
    j["ext"] = d;
    emit(j);
    return kExitPass;
  }
  for (std::size_t i : degrees) {
    std::cout << "Ext^" << i << "(" << module_name(from) << "," << module_name(to) << ") = " << dims[i] << "\n";
  }
  return kExitPass;
}

json quiver_json(const ExtQuiver& q) {
  json arrows = json::array();
  for (auto [i, j] : q.arrow_list()) arrows.push_back({q.labels[i - 1], q.labels[j - 1]});
  return arrows;
}

void print_quiver(const std::string& title, const ExtQuiver& q) {
  std::cout << title << " (" << q.arrow_total() << " arrows):";
  for (auto [i, j] : q.arrow_list()) std::cout << " " << q.labels[i - 1] << "->" << q.labels[j - 1];
  std::cout << "\n";
}

int cmd_endo(const Common& c, const std::vector<std::string>& modules, bool cartan) {
  Loaded l = load(c);
  std::vector<std::string> names = modules.empty() ? default_module_names(l.presentation) : module_names(modules);
  std::vector<RightModule> mods = build_modules(l.algebra, l.quotient, l.presentation, names);
  RightModule whole = direct_sum(l.algebra, mods).module;
  SummandDecomposition dec = decompose(whole, mods, names);
  EndAlgebra end = endomorphism_algebra(dec);
  ExtQuiver q = ext_quiver(end.algebra, end.vertex_idempotents, end.vertex_labels);
  ExtQuiver qop = q.opposite();

  const std::size_t k = end.vertex_labels.size();
  std::vector<std::vector<std::size_t>> cartan_matrix(k, std::vector<std::size_t>(k));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) cartan_matrix[a][b] = end.blocks[a][b].basis.size();
  }

  if (c.json_out) {
    json j;
    j["dimension"] = end.algebra.dimension();
    j["idempotents"] = end.vertex_idempotents.size();
    json vertices = json::array();
    for (std::size_t a = 0; a < k; ++a) {
      vertices.push_back({{"vertex", a + 1},
                          {"summand", end.vertex_labels[a]},
                          {"dimension_vector", dec.classes[a].module.dims()},
                          {"multiplicity", dec.classes[a].multiplicity()}});
    }
    j["vertices"] = vertices;
    j["quiver"] = quiver_json(q);
    j["opposite_quiver"] = quiver_json(qop);
    if (cartan) j["hom_dimensions"] = cartan_matrix;
    emit(j);
    return kExitPass;
  }
  std::cout << "dim End(M): " << end.algebra.dimension() << "\n";
  std::cout << "primitive idempotent classes: " << end.vertex_idempotents.size() << "\n";
  for (std::size_t a = 0; a < k; ++a) {
    std::cout << "vertex " << a + 1 << ": " << end.vertex_labels[a] << " " << vec_string(dec.classes[a].module.dims())
              << " x" << dec.classes[a].multiplicity() << "\n";
  }
  print_quiver("quiver of End(M)", q);
  print_quiver("quiver of End(M)^op", qop);
  if (cartan) {
    std::cout << "dim Hom(row, column):\n";
    for (std::size_t a = 0; a < k; ++a) {
      std::cout << "  " << end.vertex_labels[a] << ":";
      for (std::size_t b = 0; b < k; ++b) std::cout << " " << cartan_matrix[a][b];
      std::cout << "\n";
    }
  }
  return kExitPass;
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return kExitPass;
    case Verdict::Fail:
      return kExitFail;
    case Verdict::Inconclusive:
      return kExitInconclusive;
  }
  return kExitFail;
}

struct CertifyOptions {
  std::vector<std::string> modules;
  std::size_t n = 3;
  std::string report_path;
  bool no_timings = false;
};

int run_certify(const Common& c, const CertifyOptions& o) {
  CertificateInputs in;
  in.spec_text = read_spec(c.algebra_path);
  in.modules = module_names(o.modules);
  in.n = o.n;
  in.bound = c.bound;
  in.seed = c.seed;
  Certificate cert = certify(in);
  ReportOptions ro;
  ro.timings = !o.no_timings;
  ro.threads = thread_count();
  json report = certificate_report(cert, ro);
  if (!o.report_path.empty()) {
    std::ofstream out(o.report_path);
    if (!out) throw InputError("cannot write " + o.report_path);
    out << report.dump(2) << "\n";
  }
  if (c.json_out) {
    emit(report);
  } else {
    std::cout << certificate_summary(cert);
  }
  return verdict_exit(cert.verdict);
}

int cmd_bench(const Common& c, std::size_t repeat) {
  if (repeat == 0) throw InputError("--repeat must be positive");
  CertificateInputs in;
  in.spec_text = read_spec(c.algebra_path);
  in.bound = c.bound;
  in.seed = c.seed;
  std::vector<std::string> order;
  std::map<std::string, std::vector<double>> samples;
  std::vector<double> totals;
  json first;
  bool stable = true;
  for (std::size_t r = 0; r < repeat; ++r) {
    Certificate cert = certify(in);
    double total = 0;
    for (const StageTiming& s : cert.timings) {
      if (!samples.count(s.stage)) order.push_back(s.stage);
      samples[s.stage].push_back(s.seconds);
      total += s.seconds;
    }
    totals.push_back(total);
    json stripped = certificate_report(cert, {false, 0});
    if (r == 0) first = stripped;
    stable = stable && stripped == first;
  }
  auto median = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
  };
  auto minimum = [](const std::vector<double>& v) { return *std::min_element(v.begin(), v.end()); };

  json j;
  j["scenario"] = c.algebra_path.empty() ? "paper" : c.algebra_path;
  j["repeat"] = repeat;
  json stages = json::array();
  for (const std::string& s : order) {
    stages.push_back({{"stage", s}, {"min_seconds", minimum(samples[s])}, {"median_seconds", median(samples[s])}});
  }
  j["stages"] = stages;
  j["total"] = {{"min_seconds", minimum(totals)}, {"median_seconds", median(totals)}};
  j["outputs_identical"] = stable;
  j["verdict"] = first["verdict"]["result"];
  json env = certificate_report(Certificate{}, {true, thread_count()})["environment"];
  j["environment"] = env;
  if (c.json_out) {
    emit(j);
  } else {
    std::cout << "scenario " << j["scenario"].get<std::string>() << ", " << repeat << " run(s), "
              << env["threads"].get<unsigned>() << " thread(s), simd " << env["simd"].get<std::string>() << "\n";
    std::cout << "cpu: " << env["cpu"].get<std::string>() << "\n";
    for (const std::string& s : order) {
      std::printf("  %-22s min %9.4f s  median %9.4f s\n", s.c_str(), minimum(samples[s]), median(samples[s]));
    }
    std::printf("  %-22s min %9.4f s  median %9.4f s\n", "total", minimum(totals), median(totals));
    std::cout << "outputs identical across runs: " << (stable ? "yes" : "no") << "\n";
  }
  return stable ? kExitPass : kExitFail;
}

std::vector<std::size_t> parse_degrees(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw InputError("bad degree list: " + s);
    }
    out.push_back(std::stoul(item));
  }
  if (out.empty()) throw InputError("empty degree list");
  return out;
}

void add_common(CLI::App* sub, Common& c, bool algebra, bool bound) {
  if (algebra) sub->add_option("--algebra", c.algebra_path, "presentation file (default: the shipped Q(3A) algebra)");
  if (bound) sub->add_option("--bound", c.bound, "search bound for global and dominant dimension")->capture_default_str();
  sub->add_option("--threads", c.threads, "worker threads (0 = all cores)")->capture_default_str();
  sub->add_option("--seed", c.seed, "seed for the randomized isomorphism search")->capture_default_str();
  sub->add_flag("--json", c.json_out, "print JSON instead of text");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qtilt: certify n-cluster tilting modules over quiver algebras in positive characteristic"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  Common common;
  CertifyOptions cert_opts;
  std::string module, from, to, degrees = "1,2";
  std::size_t terms = 6, repeat = 3;
  std::vector<std::string> endo_modules;
  bool cartan = false;

  auto* parse = app.add_subcommand("parse", "parse a presentation and print it in canonical form");
  add_common(parse, common, true, false);

  auto* info = app.add_subcommand("info", "dimension, projective and module dimension vectors");
  add_common(info, common, true, false);

  auto* res = app.add_subcommand("resolve", "minimal projective resolution of a module");
  add_common(res, common, true, false);
  res->add_option("--module", module, "module name (P<i>, S<i>, I<i> or a declared module)")->required();
  res->add_option("--terms", terms, "number of terms")->capture_default_str();

  auto* ext = app.add_subcommand("ext", "dimensions of Ext groups between two modules");
  add_common(ext, common, true, false);
  ext->add_option("--from", from, "first argument")->required();
  ext->add_option("--to", to, "second argument")->required();
  ext->add_option("--degrees", degrees, "comma-separated degrees")->capture_default_str();

  auto* endo = app.add_subcommand("endo", "endomorphism algebra of a direct sum and its quiver");
  add_common(endo, common, true, false);
  endo->add_option("--modules", endo_modules, "summands (default: projectives then declared modules)")->delimiter(',');
  endo->add_flag("--cartan", cartan, "also print dim Hom between summands");

  auto add_certify = [&](CLI::App* sub, bool algebra) {
    add_common(sub, common, algebra, true);
    sub->add_option("--modules", cert_opts.modules, "summands (default: projectives then declared modules)")
        ->delimiter(',');
    sub->add_option("--n", cert_opts.n, "cluster tilting degree")->capture_default_str();
    sub->add_option("--report", cert_opts.report_path, "write the JSON report to this file");
    sub->add_flag("--no-timings", cert_opts.no_timings, "omit timings and environment from the report");
  };
  auto* certify_cmd = app.add_subcommand("certify", "certify a module given by a presentation file");
  add_certify(certify_cmd, true);
  certify_cmd->get_option("--algebra")->required();

  auto* builtin = app.add_subcommand("paper", "certify the built-in 3-cluster tilting module over Q(3A)_2^2");
  add_certify(builtin, false);

  auto* bench = app.add_subcommand("bench", "time the certification pipeline");
  add_common(bench, common, true, true);
  bench->add_option("--repeat", repeat, "number of runs")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  set_thread_count(common.threads);
  try {
    if (*parse) return cmd_parse(common);
    if (*info) return cmd_info(common);
    if (*res) return cmd_resolve(common, module, terms);
    if (*ext) return cmd_ext(common, from, to, parse_degrees(degrees));
    if (*endo) return cmd_endo(common, endo_modules, cartan);
    if (*certify_cmd || *builtin) return run_certify(common, cert_opts);
    if (*bench) return cmd_bench(common, repeat);
  } catch (const ParseError& e) {
    std::cerr << source_name(common.algebra_path) << ":" << e.line() << ":" << e.column() << ": " << e.message()
              << "\n";
    return kExitInput;
  } catch (const NotFiniteDimensional& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const std::string& w : e.frontier()) std::cerr << "  frontier word: " << w << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const HintMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
