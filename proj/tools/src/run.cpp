#include "run.hpp"

#include <ostream>
#include <sstream>

#include <json.hpp>

#include "htoric/chow.hpp"
#include "htoric/inertia.hpp"
#include "htoric/orbifold.hpp"
#include "htoric/verifiers.hpp"
#include "model_io.hpp"

namespace htoric::cli {

using ojson = nlohmann::ordered_json;

std::optional<Command> parse_command(const std::string& name) {
  if (name == "analyze") return Command::Analyze;
  if (name == "inertia") return Command::Inertia;
  if (name == "chowring") return Command::ChowRing;
  if (name == "orbifold-table") return Command::OrbifoldTable;
  if (name == "verify") return Command::Verify;
  if (name == "chart-check") return Command::ChartCheck;
  if (name == "sre-check") return Command::SreCheck;
  return std::nullopt;
}

std::string to_string(Command c) {
  switch (c) {
    case Command::Analyze: return "analyze";
    case Command::Inertia: return "inertia";
    case Command::ChowRing: return "chowring";
    case Command::OrbifoldTable: return "orbifold-table";
    case Command::Verify: return "verify";
    case Command::ChartCheck: return "chart-check";
    case Command::SreCheck: return "sre-check";
  }
  return "?";
}

void write_error(std::ostream& out, Format format, const std::string& kind, const std::string& message) {
  if (format == Format::Json) {
    ojson j;
    j["error"]["kind"] = kind;
    j["error"]["message"] = message;
    out << j.dump(2) << '\n';
  } else {
    out << "error (" << kind << "): " << message << '\n';
  }
}

namespace {

using htoric::to_string;

ojson element_json(const TorsionElement& g) { return g.to_strings(); }

ojson int_vector_json(const IntVector& v) {
  ojson a = ojson::array();
  for (const auto& z : v) a.push_back(integer_to_json(z));
  return a;
}

ojson index_set_json(const IndexSet& s) {
  ojson a = ojson::array();
  for (auto i : s) a.push_back(i + 1);
  return a;
}

std::vector<std::string> coord_labels(const StackModel& m, const CoordSet& s) {
  std::vector<std::string> out;
  for (auto c : s) out.push_back(m.arrangement.ambient_coords[c].label);
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

ojson component_json(const InertiaComponent& c) {
  ojson j;
  j["v"] = element_json(c.g);
  j["order"] = integer_to_json(c.g.order());
  j["fixed"] = index_set_json(c.fixed_columns);
  j["age"] = to_string(c.age);
  return j;
}

ojson graded_json(const GradedRingPresentation& pres, unsigned degree) {
  ojson g = ojson::object();
  for (unsigned k = 0; k <= degree; ++k) g[std::to_string(k)] = pres.piece(k).invariants().to_string();
  return g;
}

struct Outcome {
  ojson report;
  std::string text;
  int code = kSuccess;
};

Outcome analyze(const StackModel& m) {
  Outcome o;
  ojson& j = o.report;
  j["kind"] = to_string(m.kind);
  j["d"] = m.d();
  j["n"] = m.n();
  ojson rows = ojson::array();
  for (std::size_t i = 0; i < m.d(); ++i) rows.push_back(int_vector_json(m.base.matrix().row(i)));
  j["A"] = rows;
  if (m.theta) j["theta"] = int_vector_json(*m.theta);
  ojson coords = ojson::array();
  for (const auto& c : m.arrangement.ambient_coords) coords.push_back({{"label", c.label}, {"character", int_vector_json(c.character)}});
  j["coordinates"] = coords;
  ojson sig = ojson::array();
  for (const auto& s : m.arrangement.sigma_sets)
    sig.push_back({{"basis", index_set_json(s.basis)}, {"sigma", format_sigma(s)}});
  j["sigma_sets"] = sig;
  ojson uns = ojson::array();
  for (const auto& s : m.arrangement.unstable_minimal) uns.push_back(coord_labels(m, s));
  j["unstable"] = uns;
  j["tangent_class"] = m.tangent_class.to_string();
  j["moment_rank"] = m.moment_rank;
  j["dimension"] = static_cast<long long>(m.num_coords()) - static_cast<long long>(m.d()) - static_cast<long long>(m.moment_rank);

  std::ostringstream t;
  t << to_string(m.kind) << " model, d = " << m.d() << ", n = " << m.n() << ", dimension " << j["dimension"].dump() << '\n';
  for (const auto& s : m.arrangement.sigma_sets) t << "  sigma " << format_index_set(s.basis) << ": " << format_sigma(s) << '\n';
  for (const auto& s : m.arrangement.unstable_minimal) t << "  unstable {" << join(coord_labels(m, s), ",") << "}\n";
  t << "  tangent class " << m.tangent_class.to_string() << '\n';
  o.text = t.str();
  return o;
}

Outcome inertia(const StackModel& m) {
  Outcome o;
  o.report = ojson::array();
  std::ostringstream t;
  for (const auto& c : inertia_components(m)) {
    o.report.push_back(component_json(c));
    t << describe_element(c.g) << "  order " << to_string(c.g.order()) << "  fixed " << format_index_set(c.fixed_columns)
      << "  age " << to_string(c.age) << '\n';
  }
  o.text = t.str();
  return o;
}

Outcome chowring(const StackModel& m, unsigned degree) {
  Outcome o;
  GradedRingPresentation pres = presentation(m, degree);
  o.report["relations"] = pres.relation_strings();
  o.report["graded"] = graded_json(pres, degree);
  std::ostringstream t;
  t << "Z[" << (m.d() == 1 ? std::string("t1") : "t1..t" + std::to_string(m.d())) << "] / (" << join(pres.relation_strings(), ", ")
    << ")\n";
  for (unsigned k = 0; k <= degree; ++k) t << "  CH^" << k << " = " << pres.piece(k).invariants().to_string() << '\n';
  o.text = t.str();
  return o;
}

Outcome orbifold(const StackModel& m, unsigned degree) {
  Outcome o;
  OrbifoldTable table = orbifold_table(m, degree);
  ojson comps = ojson::array();
  for (std::size_t i = 0; i < table.components.size(); ++i) {
    ojson c = component_json(table.components[i]);
    c["relations"] = table.rings[i].relation_strings();
    comps.push_back(c);
  }
  o.report["components"] = comps;
  ojson prods = ojson::array();
  std::ostringstream t;
  for (const auto& [key, p] : table.products) {
    const auto& g1 = table.components[p.left].g;
    const auto& g2 = table.components[p.right].g;
    const auto& g = table.components[p.target].g;
    ojson e;
    e["g1"] = element_json(g1);
    e["g2"] = element_json(g2);
    e["target"] = element_json(g);
    e["obstruction"] = p.obstruction.to_string();
    e["normal"] = p.normal.to_string();
    e["poly"] = p.structure.to_string();
    e["degree"] = p.degree;
    e["coordinates"] = int_vector_json(p.coordinates);
    prods.push_back(e);
    t << "l" << describe_element(g1) << " * l" << describe_element(g2) << " = " << p.structure.to_string() << " l"
      << describe_element(g) << "   [R = " << p.obstruction.to_string() << "]\n";
  }
  o.report["products"] = prods;
  o.report["truncation"] = table.truncation;
  o.text = t.str();
  return o;
}

Outcome verify(const StackModel& m, unsigned degree) {
  Outcome o;
  ojson checks = ojson::object();
  ojson failures = ojson::array();
  std::vector<std::string> summary;
  auto record = [&](const std::string& name, bool pass, const std::vector<std::string>& why) {
    checks[name] = pass ? "pass" : "fail";
    summary.push_back(name + ": " + (pass ? "pass" : "fail"));
    for (const auto& f : why) failures.push_back(name + ": " + f);
    if (!pass) o.code = kVerificationFailure;
  };

  if (m.doubled()) {
    const IntMatrix& a = m.base.matrix();
    PullbackReport pb = verify_obstruction_pullback(a, *m.theta);
    record("obstruction-pullback", pb.pass, pb.failures);
    OrbifoldIsoReport iso = verify_orbifold_iso(a, *m.theta, degree);
    record("orbifold-iso", iso.pass, iso.failures);
  }
  LawsReport laws = check_star_laws(orbifold_table(m, degree));
  record("star-laws", laws.ok(), laws.failures);

  o.report["checks"] = checks;
  o.report["pass"] = o.code == kSuccess;
  o.report["failures"] = failures;
  o.text = join(summary, "; ") + '\n';
  for (const auto& f : failures) o.text += "  " + f.get<std::string>() + '\n';
  return o;
}

Outcome chart_check(const StackModel& m, std::size_t samples, std::uint64_t seed) {
  if (!m.doubled()) throw InvalidInput("chart-check: needs a hypertoric or lawrence model with theta");
  Outcome o;
  ChartsReport r = verify_charts(m.base.matrix(), *m.theta, samples, seed);
  ojson charts = ojson::array();
  std::ostringstream t;
  for (const auto& c : r.charts) {
    ojson e;
    e["sigma"] = c.sigma;
    e["pivot_order"] = index_set_json(c.pivot_order);
    e["samples"] = c.samples;
    e["roundtrips"] = c.roundtrips;
    e["base_on_zero_fiber"] = c.base_on_zero_fiber;
    e["pass"] = c.pass;
    e["failures"] = c.failures;
    charts.push_back(e);
    t << "chart " << c.sigma << ": " << c.roundtrips << "/" << c.samples << " roundtrips, " << (c.pass ? "pass" : "fail") << '\n';
  }
  o.report["seed"] = seed;
  o.report["charts"] = charts;
  o.report["pass"] = r.pass;
  o.code = r.pass ? kSuccess : kVerificationFailure;
  o.text = t.str();
  return o;
}

ojson local_model_json(const LocalModelSRE& lm, bool ok) {
  ojson e;
  ojson gens = ojson::array();
  for (const auto& g : lm.generators) gens.push_back(element_json(g));
  e["generators"] = gens;
  ojson ws = ojson::array();
  for (const auto& w : lm.normal_weights) ws.push_back(int_vector_json(w));
  e["normal_weights"] = ws;
  e["condition_iii"] = ok;
  return e;
}

Outcome sre_check(const nlohmann::json& input) {
  Outcome o;
  std::vector<LocalModelSRE> models;
  if (is_local_model(input)) {
    models.push_back(parse_local_model(input));
  } else {
    ModelSpec spec = parse_model_spec(input);
    build_model(spec);  // validates
    if (spec.kind == ModelKind::DirectToric) throw InvalidInput("sre-check: needs a hypertoric or lawrence model or a local model");
    models = hypertoric_normal_models(spec.a, *spec.theta);
  }
  ojson arr = ojson::array();
  bool all = true;
  std::ostringstream t;
  for (const auto& lm : models) {
    bool ok = sre_condition_iii(lm);
    all = all && ok;
    arr.push_back(local_model_json(lm, ok));
    std::vector<std::string> gens;
    for (const auto& g : lm.generators) gens.push_back(describe_element(g));
    t << "stabilizer <" << join(gens, ",") << ">: " << (ok ? "trivial on normal fiber" : "acts nontrivially on normal fiber")
      << '\n';
  }
  o.report["models"] = arr;
  o.report["pass"] = all;
  o.code = all ? kSuccess : kVerificationFailure;
  o.text = t.str() + (all ? "strong regular embedding criterion: pass\n" : "strong regular embedding criterion: fail\n");
  return o;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ostream& err_stream = config.format == Format::Json ? out : err;
  try {
    if (config.degree < 1) throw InvalidInput("--degree must be at least 1");
    if (config.samples < 1) throw InvalidInput("--samples must be at least 1");
    nlohmann::json input = read_json_file(config.input);
    Outcome o;
    if (config.command == Command::SreCheck) {
      o = sre_check(input);
    } else {
      StackModel m = parse_model(input);
      switch (config.command) {
        case Command::Analyze: o = analyze(m); break;
        case Command::Inertia: o = inertia(m); break;
        case Command::ChowRing: o = chowring(m, config.degree); break;
        case Command::OrbifoldTable: o = orbifold(m, config.degree); break;
        case Command::Verify: o = verify(m, config.degree); break;
        case Command::ChartCheck: o = chart_check(m, config.samples, config.seed); break;
        case Command::SreCheck: break;
      }
    }
    if (config.format == Format::Json) out << o.report.dump(2) << '\n';
    else out << o.text;
    return o.code;
  } catch (const Error& e) {
    write_error(err_stream, config.format, e.kind(), e.what());
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    write_error(err_stream, config.format, "invalid-input", e.what());
    return kInputError;
  }
}

}  // namespace htoric::cli
