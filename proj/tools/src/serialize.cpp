#include "tautkit_cli/serialize.hpp"

#include <fstream>
#include <sstream>

namespace tautkit::cli {

json to_json(const Integer& v) { return tautkit::to_string(v); }
json to_json(const Rational& v) { return tautkit::to_string(v); }

json to_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const RatVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

json to_json(const RatPolytope& p) {
  json vertices = json::array();
  for (const auto& v : p.vertices()) vertices.push_back(to_json(v));
  json facets = json::array();
  for (const auto& f : p.facets()) facets.push_back({{"normal", to_json(f.normal)}, {"offset", to_json(f.offset)}});
  return {{"vertices", vertices}, {"halfspaces", facets}};
}

json to_json(const NormSpec& s) {
  return {{"x_f", to_json(s.x_f)},
          {"x_s", to_json(s.x_s)},
          {"x_s_plus_f", to_json(s.x_s_plus_f)},
          {"x_s_minus_f", to_json(s.x_s_minus_f)},
          {"chi_f", s.chi_f},
          {"chi_s", s.chi_s}};
}

json to_json(const CandidatePoint& p) {
  json coords = json::array();
  for (const auto& c : p.coords) coords.push_back(c.convert_to<long long>());
  return {{"coords", coords},
          {"location", to_string(p.location)},
          {"parity_ok", p.parity_ok},
          {"realizability", to_string(p.realizability)},
          {"paper_counterexample", p.paper_counterexample}};
}

json to_json(const PennerReport& r) {
  return {{"word_valid", r.word_valid},
          {"all_curves_used", r.all_curves_used},
          {"sign_discipline", r.sign_discipline},
          {"filling_status", to_string(r.filling_status)},
          {"messages", r.messages}};
}

json to_json(const NovikovWitness& w) {
  json steps = json::array();
  for (const auto& s : w.steps) {
    steps.push_back({{"op", to_string(s.op)},
                     {"exponent_added", to_json(s.exponent_added)},
                     {"running_total", to_json(s.running_total)}});
  }
  return {{"k", w.k}, {"m", w.m}, {"normalized_k", w.normalized_k}, {"steps", steps},
          {"final_exponent", to_json(w.final_exponent())}};
}

json to_json(const PLHomeo& f) {
  return {{"breakpoints", to_json(f.breakpoints())}, {"values", to_json(f.values())}};
}

json to_json(const ConjugacyWitness& w) {
  json samples = json::array();
  for (const auto& s : w.samples) {
    samples.push_back({{"point", to_json(s.point)},
                       {"lhs", to_json(s.lhs)},
                       {"rhs", to_json(s.rhs)},
                       {"pass", s.ok}});
  }
  return {{"case", to_string(w.relation)},
          {"relation", relation_of(w.relation)},
          {"conjugator", {{"kind", "tile-shift"},
                          {"shift_negative", w.conjugator.shifts_negative()},
                          {"shift_positive", w.conjugator.shifts_positive()}}},
          {"tiles_per_side", w.tiles_per_side},
          {"samples", samples},
          {"pass", w.passed()}};
}

json to_json(const CurveSystem& sys, const TwistWord& word) {
  json gens = json::array();
  for (const auto& c : sys.curves()) {
    gens.push_back({{"label", c.label()}, {"coords", to_json(c.cls().coords)}, {"family", to_string(c.family())}});
  }
  json lower = json::array();
  for (std::size_t i = 1; i < sys.geo_int().size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < i; ++j) row.push_back(sys.geo_int()[i][j]);
    lower.push_back(row);
  }
  json letters = json::array();
  for (const auto& l : word.letters()) letters.push_back({{"label", l.label}, {"exp", l.exponent}});
  json out = {{"genus", sys.genus()}, {"generators", gens}, {"geo_int", lower}, {"word", letters}};
  if (sys.regions()) {
    json regions = json::array();
    for (const auto& r : *sys.regions())
      regions.push_back({{"genus", r.genus}, {"boundary_components", r.boundary_components}, {"sides", r.sides}});
    out["regions"] = regions;
  }
  return out;
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InputError(path + ": " + what);
}

const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(path, "missing field \"" + key + "\"");
  return *it;
}

const json& array_at(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::string index_path(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

Integer integer_value(const json& j, const std::string& path) {
  try {
    if (j.is_number_integer()) return Integer(j.get<long long>());
    if (j.is_string()) return parse_integer(j.get<std::string>());
  } catch (const InputError& e) {
    fail(path, e.what());
  }
  fail(path, "expected an integer or decimal string");
}

Rational rational_value(const json& j, const std::string& path) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const InputError& e) {
    fail(path, e.what());
  }
  fail(path, "expected an integer or a \"p/q\" string");
}

long long small_int(const json& j, const std::string& path) {
  const Integer v = integer_value(j, path);
  if (v > Integer(1LL << 40) || v < -Integer(1LL << 40)) fail(path, "value out of range");
  return v.convert_to<long long>();
}

std::string string_value(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

RatVector rational_array(const json& j, const std::string& path) {
  RatVector out;
  const auto& arr = array_at(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(rational_value(arr[i], index_path(path, i)));
  return out;
}

template <typename F>
auto rethrow_at(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError& e) {
    const std::string msg = e.what();
    if (msg.rfind("$", 0) == 0) throw;
    fail(path, msg);
  }
}

}  // namespace

IntMatrix int_matrix_from_json(const json& j, const std::string& path) {
  const auto& rows = array_at(j, path);
  std::vector<IntVector> out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string rp = index_path(path, r);
    const auto& row = array_at(rows[r], rp);
    if (r > 0 && row.size() != out.front().size())
      fail(rp, "expected " + std::to_string(out.front().size()) + " entries like the first row");
    IntVector v;
    for (std::size_t c = 0; c < row.size(); ++c) v.push_back(integer_value(row[c], index_path(rp, c)));
    out.push_back(std::move(v));
  }
  return rethrow_at(path, [&] { return IntMatrix::from_rows(out); });
}

NormSpec norm_spec_from_json(const json& j, const std::string& path) {
  NormSpec s;
  s.x_f = rational_value(field(j, "x_f", path), path + ".x_f");
  s.x_s = rational_value(field(j, "x_s", path), path + ".x_s");
  s.x_s_plus_f = rational_value(field(j, "x_s_plus_f", path), path + ".x_s_plus_f");
  s.x_s_minus_f = rational_value(field(j, "x_s_minus_f", path), path + ".x_s_minus_f");
  s.chi_f = small_int(field(j, "chi_f", path), path + ".chi_f");
  s.chi_s = small_int(field(j, "chi_s", path), path + ".chi_s");
  return s;
}

TangencyList tangencies_from_json(const json& j, const std::string& path) {
  TangencyList out;
  const auto& arr = array_at(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = index_path(path, i);
    const std::string kind = string_value(field(arr[i], "kind", p), p + ".kind");
    const long long sign = small_int(field(arr[i], "sign", p), p + ".sign");
    if (sign != 1 && sign != -1) fail(p + ".sign", "must be 1 or -1");
    out.push_back(Tangency{rethrow_at(p + ".kind", [&] { return parse_tangency_kind(kind); }),
                           static_cast<int>(sign)});
  }
  return out;
}

PLHomeo pl_homeo_from_json(const json& j, const std::string& path) {
  RatVector xs = rational_array(field(j, "breakpoints", path), path + ".breakpoints");
  RatVector ys = rational_array(field(j, "values", path), path + ".values");
  return rethrow_at(path, [&] { return PLHomeo(std::move(xs), std::move(ys)); });
}

std::pair<CurveSystem, TwistWord> penner_input_from_json(const json& j, const std::string& path) {
  const long long genus = small_int(field(j, "genus", path), path + ".genus");
  if (genus < 1) fail(path + ".genus", "must be positive");

  std::vector<TwistGenerator> curves;
  const std::string gp = path + ".generators";
  const auto& gens = array_at(field(j, "generators", path), gp);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string p = index_path(gp, i);
    const std::string label = string_value(field(gens[i], "label", p), p + ".label");
    const auto& coords_json = array_at(field(gens[i], "coords", p), p + ".coords");
    IntVector coords;
    for (std::size_t k = 0; k < coords_json.size(); ++k)
      coords.push_back(integer_value(coords_json[k], index_path(p + ".coords", k)));
    const std::string family = string_value(field(gens[i], "family", p), p + ".family");
    curves.push_back(rethrow_at(p, [&] {
      return TwistGenerator(label, HomologyClass(std::move(coords)), parse_family(family));
    }));
  }

  // Lower triangle, row i holding geo_int[i][0..i-1]; a leading empty row is allowed.
  const std::size_t n = curves.size();
  const std::string ip = path + ".geo_int";
  const auto& lower = array_at(field(j, "geo_int", path), ip);
  const std::size_t skip = (!lower.empty() && lower.front().is_array() && lower.front().empty()) ? 1 : 0;
  if (n > 0 && lower.size() - skip != n - 1)
    fail(ip, "expected " + std::to_string(n - 1) + " rows of the lower triangle");
  std::vector<std::vector<int>> gi(n, std::vector<int>(n, 0));
  for (std::size_t i = 1; i < n; ++i) {
    const std::string rp = index_path(ip, i - 1 + skip);
    const auto& row = array_at(lower[i - 1 + skip], rp);
    if (row.size() != i) fail(rp, "expected " + std::to_string(i) + " entries");
    for (std::size_t k = 0; k < i; ++k)
      gi[i][k] = gi[k][i] = static_cast<int>(small_int(row[k], index_path(rp, k)));
  }

  std::optional<std::vector<RegionData>> regions;
  if (j.contains("regions")) {
    const std::string rp = path + ".regions";
    const auto& arr = array_at(j["regions"], rp);
    regions.emplace();
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string p = index_path(rp, i);
      RegionData r;
      r.genus = static_cast<int>(small_int(field(arr[i], "genus", p), p + ".genus"));
      r.boundary_components =
          static_cast<int>(small_int(field(arr[i], "boundary_components", p), p + ".boundary_components"));
      r.sides = static_cast<int>(small_int(field(arr[i], "sides", p), p + ".sides"));
      regions->push_back(r);
    }
  }

  std::vector<TwistLetter> letters;
  const std::string wp = path + ".word";
  const auto& word = array_at(field(j, "word", path), wp);
  for (std::size_t i = 0; i < word.size(); ++i) {
    const std::string p = index_path(wp, i);
    const std::string label = string_value(field(word[i], "label", p), p + ".label");
    const long long exp = small_int(field(word[i], "exp", p), p + ".exp");
    if (exp == 0) fail(p + ".exp", "exponent must be nonzero");
    letters.push_back({label, static_cast<int>(exp)});
  }

  CurveSystem sys = rethrow_at(path, [&] {
    return CurveSystem(static_cast<int>(genus), std::move(curves), std::move(gi), std::move(regions));
  });
  const auto table = sys.table();
  for (std::size_t i = 0; i < letters.size(); ++i)
    if (!table.count(letters[i].label))
      fail(index_path(wp, i) + ".label", "unknown generator \"" + letters[i].label + "\"");
  return {std::move(sys), TwistWord(std::move(letters))};
}

json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(source + ": " + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

}  // namespace tautkit::cli
