#include "tautkit/penner.hpp"

#include <map>
#include <numeric>
#include <set>

namespace tautkit {

CurveSystem::CurveSystem(int genus, std::vector<TwistGenerator> curves,
                         std::vector<std::vector<int>> geo_int,
                         std::optional<std::vector<RegionData>> regions)
    : genus_(genus),
      curves_(std::move(curves)),
      geo_int_(std::move(geo_int)),
      regions_(std::move(regions)) {
  if (genus_ < 1) throw InputError("curve system: genus must be positive");
  const std::size_t n = curves_.size();
  if (geo_int_.size() != n) throw InputError("curve system: geo_int has wrong number of rows");
  for (const auto& c : curves_) {
    if (c.cls().coords.size() != static_cast<std::size_t>(2 * genus_))
      throw InputError("curve " + c.label() + ": class length does not match genus");
  }
  (void)make_generator_table(curves_);  // duplicate labels
  for (std::size_t i = 0; i < n; ++i) {
    if (geo_int_[i].size() != n) throw InputError("curve system: geo_int is not square");
    if (geo_int_[i][i] != 0) throw InputError("curve system: geo_int diagonal must be zero");
    for (std::size_t j = 0; j < n; ++j) {
      if (geo_int_[i][j] < 0) throw InputError("curve system: negative intersection count");
      if (geo_int_[i][j] != geo_int_[j][i]) throw InputError("curve system: geo_int not symmetric");
      if (i != j && curves_[i].family() == curves_[j].family() && geo_int_[i][j] != 0)
        throw InputError("curve system: " + curves_[i].label() + " and " + curves_[j].label() +
                         " are in the same family but intersect");
    }
  }
  if (regions_) {
    for (const auto& r : *regions_) {
      if (r.genus < 0 || r.boundary_components < 1 || r.sides < 0)
        throw InputError("curve system: malformed region record");
    }
  }
}

long long CurveSystem::total_intersections() const {
  long long total = 0;
  for (std::size_t i = 0; i < geo_int_.size(); ++i)
    for (std::size_t j = i + 1; j < geo_int_.size(); ++j) total += geo_int_[i][j];
  return total;
}

std::string to_string(FillingStatus s) {
  switch (s) {
    case FillingStatus::verified: return "verified";
    case FillingStatus::necessary_conditions_only: return "necessary-conditions-only";
    case FillingStatus::failed: return "failed";
  }
  return "failed";
}

PennerReport filling_necessary_check(const CurveSystem& sys) {
  PennerReport report;
  const auto& curves = sys.curves();
  const auto& gi = sys.geo_int();
  const std::size_t n = curves.size();
  bool ok = n > 0;
  if (n == 0) report.messages.push_back("empty curve system");

  for (std::size_t i = 0; i < n; ++i) {
    bool meets_other = false;
    for (std::size_t j = 0; j < n; ++j)
      if (curves[j].family() != curves[i].family() && gi[i][j] > 0) meets_other = true;
    if (!meets_other) {
      ok = false;
      report.messages.push_back("curve " + curves[i].label() + " meets no curve of the other family");
    }
  }

  // Intersection graph connectivity by union-find.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (gi[i][j] > 0) parent[find(i)] = find(j);
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < n; ++i) roots.insert(find(i));
  if (roots.size() > 1) {
    ok = false;
    report.messages.push_back("intersection graph has " + std::to_string(roots.size()) +
                              " components");
  }

  if (!ok) {
    report.filling_status = FillingStatus::failed;
    return report;
  }
  report.filling_status = FillingStatus::necessary_conditions_only;

  if (const auto& regions = sys.regions()) {
    const long long crossings = sys.total_intersections();
    const long long chi = 2 - 2LL * sys.genus();
    bool cert_ok = true;
    long long sides = 0;
    for (std::size_t k = 0; k < regions->size(); ++k) {
      const auto& r = (*regions)[k];
      sides += r.sides;
      if (!r.is_disk()) {
        cert_ok = false;
        report.messages.push_back("region " + std::to_string(k) + " is not a disk");
      }
    }
    // V = I crossings, E = 2I arcs, so F = chi - V + E = chi + I.
    if (static_cast<long long>(regions->size()) != chi + crossings) {
      cert_ok = false;
      report.messages.push_back("region count " + std::to_string(regions->size()) +
                                " differs from chi + I = " + std::to_string(chi + crossings));
    }
    if (sides != 4 * crossings) {
      cert_ok = false;
      report.messages.push_back("region sides sum to " + std::to_string(sides) + ", expected 4I = " +
                                std::to_string(4 * crossings));
    }
    report.filling_status = cert_ok ? FillingStatus::verified : FillingStatus::failed;
  }
  return report;
}

PennerReport validate_penner_word(const TwistWord& word, const CurveSystem& sys) {
  const GeneratorTable table = sys.table();
  std::map<CurveFamily, std::set<int>> signs;
  std::set<std::string> used;
  for (const auto& letter : word.letters()) {
    const auto it = table.find(letter.label);
    if (it == table.end()) throw InputError("unknown twist label " + letter.label);
    signs[it->second.family()].insert(letter.exponent > 0 ? 1 : -1);
    used.insert(letter.label);
  }

  PennerReport report = filling_necessary_check(sys);

  report.all_curves_used = true;
  for (const auto& c : sys.curves()) {
    if (!used.count(c.label())) {
      report.all_curves_used = false;
      report.messages.push_back("curve " + c.label() + " is never twisted");
    }
  }

  const auto& a = signs[CurveFamily::A];
  const auto& b = signs[CurveFamily::B];
  report.sign_discipline = a.size() == 1 && b.size() == 1 && *a.begin() == -*b.begin();
  if (!report.sign_discipline) {
    report.messages.push_back(
        "twists must be positive along one family and negative along the other");
  }
  report.word_valid = report.all_curves_used && report.sign_discipline;
  return report;
}

namespace {

// Chain c_1, ..., c_{2g+1} with |<c_k, c_{k+1}>| = 1 and all other pairs
// disjoint: a_1 = r_1, a_i = r_i - r_{i-1} (2 <= i <= g), a_{g+1} = r_g, b_i = s_i.
CurveSystem chain_system(int genus) {
  const SymplecticSpace space(genus);
  std::vector<TwistGenerator> curves;
  for (int i = 1; i <= genus + 1; ++i) {
    HomologyClass cls;
    if (i == 1) {
      cls = HomologyClass(space.r(1));
    } else if (i == genus + 1) {
      cls = HomologyClass(space.r(genus));
    } else {
      cls = HomologyClass(space.r(i)) - HomologyClass(space.r(i - 1));
    }
    curves.emplace_back("a" + std::to_string(i), cls, CurveFamily::A);
  }
  for (int i = 1; i <= genus; ++i)
    curves.emplace_back("b" + std::to_string(i), HomologyClass(space.s(i)), CurveFamily::B);

  // a_i meets b_{i-1} and b_i once.
  const auto n = curves.size();
  const auto a_index = [](int i) { return static_cast<std::size_t>(i - 1); };
  const auto b_index = [genus](int i) { return static_cast<std::size_t>(genus + i); };
  std::vector<std::vector<int>> gi(n, std::vector<int>(n, 0));
  for (int i = 1; i <= genus + 1; ++i) {
    for (int j : {i - 1, i}) {
      if (j < 1 || j > genus) continue;
      gi[a_index(i)][b_index(j)] = gi[b_index(j)][a_index(i)] = 1;
    }
  }
  return CurveSystem(genus, std::move(curves), std::move(gi));
}

TwistLetter letter(const std::string& fam, int i, int exp) {
  return TwistLetter{fam + std::to_string(i), exp};
}

}  // namespace

std::pair<CurveSystem, TwistWord> genus3_penner_system() {
  TwistWord f({letter("b", 2, 1), letter("a", 2, -1), letter("a", 3, -1), letter("b", 1, 1),
               letter("b", 3, 1), letter("a", 1, -1), letter("a", 4, -1)});
  return {chain_system(3), std::move(f)};
}

std::pair<CurveSystem, TwistWord> extend_to_genus(int genus) {
  if (genus < 6) throw InputError("extend_to_genus requires genus >= 6");
  // Written right to left: the first phase is applied first, so it is written last.
  std::vector<TwistLetter> letters{letter("b", 2, 1), letter("a", 2, -1), letter("a", 3, -1)};
  for (int i = 1; i <= genus; ++i)
    if (i != 2) letters.push_back(letter("b", i, 1));
  for (int i = 1; i <= genus + 1; ++i)
    if (i != 2 && i != 3) letters.push_back(letter("a", i, -1));
  return {chain_system(genus), TwistWord(std::move(letters))};
}

AlphaBetaGamma genus3_alpha_beta_gamma() {
  const SymplecticSpace space(3);
  HomologyClass alpha(space.r(2));
  HomologyClass gamma = -HomologyClass(space.s(2));
  return {alpha, alpha - gamma, gamma};
}

}  // namespace tautkit
