#include "tautkit_cli/commands.hpp"

#include <cstdlib>
#include <sstream>

namespace tautkit::cli {

OutputFormat parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::text;
  if (s == "json") return OutputFormat::json;
  throw InputError("output format must be text or json, got \"" + s + "\"");
}

OutputFormat default_format() {
  const char* env = std::getenv("TAUTKIT_FORMAT");
  return env && *env ? parse_format(env) : OutputFormat::text;
}

bool CommandResult::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string CommandResult::render(OutputFormat format) const {
  if (format == OutputFormat::json) {
    json out = payload;
    out["command"] = command;
    json checks_json = json::array();
    for (const auto& c : checks) checks_json.push_back({{"name", c.name}, {"pass", c.pass}});
    out["checks"] = checks_json;
    out["pass"] = pass();
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto& line : text_lines) os << line << '\n';
  for (const auto& c : checks) os << (c.pass ? "PASS  " : "FAIL  ") << c.name << '\n';
  return os.str();
}

namespace {

std::vector<std::string> matrix_lines(const IntMatrix& m, const std::string& indent = "  ") {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      cells.push_back(tautkit::to_string(m(r, c)));
      width = std::max(width, cells.back().size());
    }
  std::vector<std::string> lines;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::string line = indent;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const std::string& cell = cells[r * m.cols() + c];
      line += std::string(width + 1 - cell.size(), ' ') + cell;
    }
    lines.push_back(line);
  }
  return lines;
}

void append(std::vector<std::string>& out, const std::vector<std::string>& more) {
  out.insert(out.end(), more.begin(), more.end());
}

std::string point_text(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + tautkit::to_string(v[i]);
  return s + ")";
}

std::string rat_point_text(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + tautkit::to_string(v[i]);
  return s + ")";
}

}  // namespace

CommandResult cmd_vmatrix(int genus) {
  if (genus < 6) throw InputError("vmatrix requires --genus >= 6");
  const IntMatrix v = build_V(genus);
  const IntMatrix vm = v - IntMatrix::identity(v.rows());
  const Integer det = det_exact(vm);
  const Integer det_abs = abs(det);
  const Integer expected = genus + 1;

  CommandResult r;
  r.command = "vmatrix";
  r.payload = {{"genus", genus},
               {"V", to_json(v)},
               {"V_minus_id", to_json(vm)},
               {"det", to_json(det)},
               {"det_abs", to_json(det_abs)},
               {"expected_det_abs", to_json(expected)},
               {"fixed_homology_trivial", det != 0},
               {"mapping_torus_b2", mapping_torus_b2(v)}};
  r.text_lines.push_back("V (genus " + std::to_string(genus) + ", rows are images of r_1, s_1, ..., r_g, s_g):");
  append(r.text_lines, matrix_lines(v));
  r.text_lines.push_back("det(V - Id) = " + tautkit::to_string(det));
  r.text_lines.push_back("|det(V - Id)| = " + tautkit::to_string(det_abs) + " (expected g+1 = " +
                         tautkit::to_string(expected) + ")");
  r.checks.push_back({"|det(V - Id)| = g + 1", det_abs == expected});
  return r;
}

CommandResult cmd_wmatrix() {
  const IntMatrix w = build_W();
  const Integer det_w = det_exact(w);
  const Integer det_wm = det_exact(w - IntMatrix::identity(6));
  const auto [sys, f] = genus3_penner_system();
  const IntMatrix f_star = word_action(sys.space(), f, sys.table());
  const Integer det_fm = det_exact(f_star - IntMatrix::identity(6));

  CommandResult r;
  r.command = "wmatrix";
  r.payload = {{"W", to_json(w)},
               {"det_W", to_json(det_w)},
               {"det_W_minus_id", to_json(det_wm)},
               {"mapping_torus_b2", mapping_torus_b2(w)},
               {"word_action", to_json(f_star)},
               {"det_word_action_minus_id", to_json(det_fm)}};
  r.text_lines.push_back("W (genus 3, as printed):");
  append(r.text_lines, matrix_lines(w));
  r.text_lines.push_back("det(W) = " + tautkit::to_string(det_w) + ", det(W - Id) = " + tautkit::to_string(det_wm));
  r.text_lines.push_back("word action of f on the chain classes (columns are images):");
  append(r.text_lines, matrix_lines(f_star));
  r.text_lines.push_back("det(f_* - Id) = " + tautkit::to_string(det_fm));
  r.checks.push_back({"det(W) = 1", det_w == 1});
  r.checks.push_back({"det(W - Id) != 0", det_wm != 0});
  r.checks.push_back({"det(f_* - Id) != 0", det_fm != 0});
  return r;
}

CommandResult cmd_candidates(int genus, const std::optional<NormSpec>& spec_in) {
  if (genus < 3) throw InputError("candidates requires --genus >= 3");
  const NormSpec spec = spec_in ? *spec_in : NormSpec::fibered_family(genus);
  const CandidateReport rep = candidate_pipeline(spec, genus);

  json candidates = json::array();
  bool counterexample_found = false;
  for (const auto& p : rep.candidates) {
    candidates.push_back(to_json(p));
    counterexample_found = counterexample_found ||
                           (p.paper_counterexample && p.coords == IntVector{0, Integer(2 - 2 * genus)});
  }
  bool vertices_realizable = true;
  for (const auto& v : rep.dual_ball.vertices()) {
    bool found = false;
    for (const auto& p : rep.candidates)
      if (to_rational(p.coords) == v) found = p.realizability == Realizability::realizable_vertex;
    vertices_realizable = vertices_realizable && found;
  }

  CommandResult r;
  r.command = "candidates";
  r.payload = {{"genus", genus},
               {"spec", to_json(spec)},
               {"ball", to_json(rep.ball)},
               {"dual_ball", to_json(rep.dual_ball)},
               {"boundary_point_count", rep.boundary.size()},
               {"excluded_count", rep.boundary.size() - rep.candidates.size()},
               {"candidates", candidates}};

  std::string line = "unit ball vertices:";
  for (const auto& v : rep.ball.vertices()) line += " " + rat_point_text(v);
  r.text_lines.push_back(line);
  line = "dual ball vertices:";
  for (const auto& v : rep.dual_ball.vertices()) line += " " + rat_point_text(v);
  r.text_lines.push_back(line);
  r.text_lines.push_back(std::to_string(rep.boundary.size()) + " integral points on the dual sphere, " +
                         std::to_string(rep.candidates.size()) + " pass the parity condition:");
  for (const auto& p : rep.candidates) {
    r.text_lines.push_back("  " + point_text(p.coords) + "  " + to_string(p.location) + "  " +
                           to_string(p.realizability) + (p.paper_counterexample ? "  [counterexample]" : ""));
  }
  r.checks.push_back({"(0, 2-2g) is a flagged parity-passing non-vertex candidate", counterexample_found});
  r.checks.push_back({"every dual-ball vertex is realizable-vertex", vertices_realizable});
  return r;
}

CommandResult cmd_penner(const CurveSystem& sys, const TwistWord& word) {
  const PennerReport report = validate_penner_word(word, sys);
  const IntMatrix f_star = word_action(sys.space(), word, sys.table());
  const int b2 = mapping_torus_b2(f_star);
  const bool trivial = fixed_homology_trivial(f_star);

  CommandResult r;
  r.command = "penner";
  r.payload = {{"genus", sys.genus()},
               {"report", to_json(report)},
               {"f_star", to_json(f_star)},
               {"mapping_torus_b2", b2},
               {"fixed_homology_trivial", trivial}};
  r.text_lines.push_back("genus " + std::to_string(sys.genus()) + ", " + std::to_string(sys.curves().size()) +
                         " curves, word of length " + std::to_string(word.letters().size()));
  r.text_lines.push_back(std::string("word valid: ") + (report.word_valid ? "yes" : "no") +
                         " (all curves used: " + (report.all_curves_used ? "yes" : "no") +
                         ", sign discipline: " + (report.sign_discipline ? "yes" : "no") + ")");
  r.text_lines.push_back("filling: " + to_string(report.filling_status));
  for (const auto& m : report.messages) r.text_lines.push_back("  note: " + m);
  r.text_lines.push_back("f_* (columns are images):");
  append(r.text_lines, matrix_lines(f_star));
  r.text_lines.push_back("rank H_2(M_f) = " + std::to_string(b2));
  r.checks.push_back({"Penner word valid", report.word_valid});
  r.checks.push_back({"filling conditions hold", report.filling_status != FillingStatus::failed});
  r.checks.push_back({"ker(f_* - Id) = 0", trivial});
  return r;
}

CommandResult cmd_sutured_chi(const CorneredSurface& s) {
  const Rational chi = sutured_chi(s);
  CommandResult r;
  r.command = "sutured chi";
  r.payload = {{"surface", {{"base_chi", s.base_chi}, {"convex", s.convex}, {"concave", s.concave}}},
               {"chi", to_json(chi)}};
  r.text_lines.push_back("chi = " + tautkit::to_string(chi));
  return r;
}

CommandResult cmd_sutured_core_disk(const SuturedSolidTorus& t) {
  const CorneredSurface d = core_disk(t);
  const Rational chi = sutured_chi(d);
  CommandResult r;
  r.command = "sutured core-disk";
  r.payload = {{"torus", {{"suture_count", t.suture_count}, {"longitude_wraps", t.longitude_wraps},
                          {"meridian_wraps", t.meridian_wraps}}},
               {"core_disk", {{"base_chi", d.base_chi}, {"convex", d.convex}, {"concave", d.concave}}},
               {"chi", to_json(chi)}};
  r.text_lines.push_back("core disk: " + std::to_string(d.convex) + " convex corners, chi = " + tautkit::to_string(chi));
  return r;
}

CommandResult cmd_sutured_pairing(const TangencyList& t) {
  const long long e = euler_pairing(t);
  const long long chi = poincare_hopf_chi(t);
  bool saddles_only = true;
  for (const auto& p : t) saddles_only = saddles_only && p.kind == TangencyKind::saddle;

  CommandResult r;
  r.command = "sutured pairing";
  r.payload = {{"tangency_count", t.size()}, {"euler_pairing", e}, {"chi", chi}};
  r.text_lines.push_back("<e(F), [S]> = " + std::to_string(e) + ", chi(S) = " + std::to_string(chi));
  if (saddles_only) {
    const bool fm = fully_marked_check(t);
    r.payload["fully_marked"] = fm;
    r.text_lines.push_back(std::string("fully marked: ") + (fm ? "yes" : "no"));
  } else {
    r.payload["fully_marked"] = nullptr;
    r.text_lines.push_back("fully marked: n/a (center tangencies present)");
  }
  r.checks.push_back({"parity of <e(F), [S]> equals parity of chi(S)", (chi - e) % 2 == 0});
  return r;
}

CommandResult cmd_sutured_witness(long long k, long long m) {
  const NovikovWitness w = novikov_witness(k, m);
  CommandResult r;
  r.command = "sutured witness";
  r.payload = {{"witness", to_json(w)}};
  for (const auto& s : w.steps) {
    r.text_lines.push_back(to_string(s.op) + ": add " + tautkit::to_string(s.exponent_added) + " -> " +
                           tautkit::to_string(s.running_total));
  }
  r.checks.push_back({"witness ends at exponent 0", w.final_exponent() == 0});
  return r;
}

PLHomeo bundled_u() { return PLHomeo({-1, 0, 1}, {-1, Rational(1, 3), 1}); }
PLHomeo bundled_v() { return PLHomeo({-1, Rational(1, 2), 1}, {-1, Rational(-1, 5), 1}); }

CommandResult cmd_holonomy_tau(const PLHomeo& u, const PLHomeo& v, ConcatCase which, int samples) {
  const TauConstruction built = build_tau(u, v, which, samples);
  const auto& w = built.witness;
  std::size_t failures = 0;
  for (const auto& s : w.samples) failures += !s.ok;

  CommandResult r;
  r.command = "holonomy tau";
  r.payload = {{"u", to_json(u)}, {"v", to_json(v)}, {"tau_is_identity", built.tau.is_identity()},
               {"witness", to_json(w)}};
  r.text_lines.push_back("case (" + to_string(which) + "): tau conjugate to " + relation_of(which));
  r.text_lines.push_back("checked h(tau(q)) = R(h(q)) at " + std::to_string(w.samples.size()) + " points over " +
                         std::to_string(w.tiles_per_side) + " tiles per side, " + std::to_string(failures) +
                         " mismatches");
  r.checks.push_back({"conjugacy relation holds at every sample", w.passed()});
  return r;
}

CommandResult cmd_holonomy_shift(const PLHomeo& f) {
  const bool shift = is_shift(f);
  CommandResult r;
  r.command = "holonomy shift";
  r.payload = {{"map", to_json(f)}, {"is_shift", shift}};
  r.text_lines.push_back(std::string("shift (no interior fixed points): ") + (shift ? "yes" : "no"));
  return r;
}

}  // namespace tautkit::cli
