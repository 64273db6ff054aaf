#include "model_io.hpp"

#include <fstream>
#include <limits>

namespace htoric::cli {

using nlohmann::json;

Integer integer_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const InvalidInput&) {
    }
  }
  throw InvalidInput(where + ": expected an integer, got " + j.dump());
}

Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(integer_from_json(j, where));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InvalidInput&) {
    }
  }
  throw InvalidInput(where + ": expected a rational \"p/q\", got " + j.dump());
}

nlohmann::ordered_json integer_to_json(const Integer& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(z);
  return to_string(z);
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open input file '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput("malformed JSON in '" + path.string() + "': " + e.what());
  }
}

namespace {

IntVector integer_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw InvalidInput(where + ": expected an array");
  IntVector out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(integer_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

ModelKind parse_kind(const json& j) {
  if (!j.is_string()) throw InvalidInput("kind: expected a string");
  const auto s = j.get<std::string>();
  if (s == "lawrence") return ModelKind::Lawrence;
  if (s == "hypertoric") return ModelKind::Hypertoric;
  if (s == "direct") return ModelKind::DirectToric;
  throw InvalidInput("kind: unknown model kind '" + s + "' (expected lawrence, hypertoric or direct)");
}

}  // namespace

ModelSpec parse_model_spec(const json& j) {
  if (!j.is_object()) throw InvalidInput("model: expected a JSON object");
  ModelSpec spec;
  if (j.contains("kind")) spec.kind = parse_kind(j["kind"]);

  if (!j.contains("A")) throw InvalidInput("model: missing weight matrix \"A\"");
  const json& rows = j["A"];
  if (!rows.is_array() || rows.empty()) throw InvalidInput("A: expected a nonempty array of rows");
  std::vector<IntVector> parsed;
  for (std::size_t i = 0; i < rows.size(); ++i) parsed.push_back(integer_list(rows[i], "A[" + std::to_string(i) + "]"));
  const std::size_t n = parsed[0].size();
  if (n == 0) throw InvalidInput("A: rows must be nonempty");
  for (const auto& r : parsed)
    if (r.size() != n) throw DimensionMismatch("A: rows have different lengths");
  spec.a = IntMatrix::from_rows(parsed);

  if (j.contains("theta")) {
    spec.theta = integer_list(j["theta"], "theta");
    if (spec.theta->size() != spec.a.rows())
      throw DimensionMismatch("theta: length " + std::to_string(spec.theta->size()) + " does not match d = " +
                              std::to_string(spec.a.rows()));
  }

  if (j.contains("unstable")) {
    if (spec.kind != ModelKind::DirectToric) throw InvalidInput("unstable: only allowed for kind \"direct\"");
    const json& sets = j["unstable"];
    if (!sets.is_array()) throw InvalidInput("unstable: expected an array of coordinate lists");
    for (std::size_t s = 0; s < sets.size(); ++s) {
      const std::string where = "unstable[" + std::to_string(s) + "]";
      CoordSet c;
      for (const auto& z : integer_list(sets[s], where)) {
        if (z < 1 || z > n) throw InvalidInput(where + ": coordinate " + to_string(z) + " out of range 1.." + std::to_string(n));
        c.push_back(static_cast<std::size_t>(z) - 1);
      }
      if (c.empty()) throw InvalidInput(where + ": empty unstable set");
      spec.unstable.push_back(std::move(c));
    }
  }
  return spec;
}

StackModel build_model(const ModelSpec& spec) {
  const std::size_t rank = spec.a.rank();
  if (rank < spec.a.rows())
    throw RankDeficient("rank deficient: A has rank " + std::to_string(rank) + " < d = " + std::to_string(spec.a.rows()));
  if (spec.kind == ModelKind::DirectToric) {
    if (spec.theta) throw InvalidInput("theta: direct models take \"unstable\", not theta");
    return make_direct_model(spec.a, spec.unstable);
  }
  if (!spec.theta) throw InvalidInput("model: missing character \"theta\" for kind " + to_string(spec.kind));
  GenericReport g = check_generic(WeightMatrix(spec.a), *spec.theta);
  if (!g.generic) throw NonGeneric(g.describe());
  return make_git_model(spec.kind, spec.a, *spec.theta);
}

StackModel parse_model(const json& j) { return build_model(parse_model_spec(j)); }

StackModel parse_model_file(const std::filesystem::path& path) { return parse_model(read_json_file(path)); }

bool is_local_model(const json& j) { return j.is_object() && j.contains("normal_weights"); }

LocalModelSRE parse_local_model(const json& j) {
  if (!is_local_model(j)) throw InvalidInput("local model: missing \"normal_weights\"");
  const json& nw = j["normal_weights"];
  if (!nw.is_array()) throw InvalidInput("normal_weights: expected an array");
  if (j.contains("group_order")) {
    Integer r = integer_from_json(j["group_order"], "group_order");
    Integer k = j.contains("generator") ? integer_from_json(j["generator"], "generator") : Integer(1);
    IntVector weights;
    for (std::size_t i = 0; i < nw.size(); ++i) {
      // scalar weights for cyclic groups; accept [w] too
      const json& w = nw[i].is_array() && nw[i].size() == 1 ? nw[i][0] : nw[i];
      weights.push_back(integer_from_json(w, "normal_weights[" + std::to_string(i) + "]"));
    }
    return LocalModelSRE::cyclic(r, std::move(weights), k);
  }
  if (!j.contains("generators") || !j["generators"].is_array())
    throw InvalidInput("local model: need \"group_order\" or \"generators\"");
  LocalModelSRE m;
  std::size_t rank = 0;
  for (std::size_t g = 0; g < j["generators"].size(); ++g) {
    const json& gen = j["generators"][g];
    const std::string where = "generators[" + std::to_string(g) + "]";
    if (!gen.is_array()) throw InvalidInput(where + ": expected an array of rationals");
    RationalVector v;
    for (std::size_t i = 0; i < gen.size(); ++i) v.push_back(rational_from_json(gen[i], where + "[" + std::to_string(i) + "]"));
    if (g == 0) rank = v.size();
    if (v.size() != rank) throw DimensionMismatch(where + ": generator ranks differ");
    m.generators.emplace_back(v);
  }
  for (std::size_t i = 0; i < nw.size(); ++i) {
    IntVector w = nw[i].is_array() ? integer_list(nw[i], "normal_weights[" + std::to_string(i) + "]")
                                   : IntVector{integer_from_json(nw[i], "normal_weights[" + std::to_string(i) + "]")};
    if (!m.generators.empty() && w.size() != rank)
      throw DimensionMismatch("normal_weights[" + std::to_string(i) + "]: rank does not match the generators");
    m.normal_weights.push_back(std::move(w));
  }
  return m;
}

}  // namespace htoric::cli
