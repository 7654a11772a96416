#pragma once

// Penner-word bookkeeping: two multicurves A and B, a word that twists
// positively along one family and negatively along the other, and the
// combinatorial conditions that can be checked without a surface embedding.

#include "tautkit/symplectic.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tautkit {

/// One complementary region of the union of curves, as a certificate.
struct RegionData {
  int genus = 0;
  int boundary_components = 1;
  int sides = 0;  // number of curve arcs along its boundary

  bool is_disk() const { return genus == 0 && boundary_components == 1; }
};

class CurveSystem {
 public:
  /// Throws InputError if geo_int is not a symmetric nonnegative matrix with
  /// zero diagonal, or if two curves of the same family intersect.
  CurveSystem(int genus, std::vector<TwistGenerator> curves,
              std::vector<std::vector<int>> geo_int,
              std::optional<std::vector<RegionData>> regions = std::nullopt);

  int genus() const { return genus_; }
  const std::vector<TwistGenerator>& curves() const { return curves_; }
  const std::vector<std::vector<int>>& geo_int() const { return geo_int_; }
  const std::optional<std::vector<RegionData>>& regions() const { return regions_; }

  SymplecticSpace space() const { return SymplecticSpace(genus_); }
  GeneratorTable table() const { return make_generator_table(curves_); }
  /// Sum of geo_int over unordered pairs.
  long long total_intersections() const;

 private:
  int genus_;
  std::vector<TwistGenerator> curves_;
  std::vector<std::vector<int>> geo_int_;
  std::optional<std::vector<RegionData>> regions_;
};

enum class FillingStatus { verified, necessary_conditions_only, failed };

std::string to_string(FillingStatus s);

struct PennerReport {
  bool word_valid = false;
  bool all_curves_used = false;
  bool sign_discipline = false;
  FillingStatus filling_status = FillingStatus::failed;
  std::vector<std::string> messages;
};

/// Word checks plus the filling status of `sys`. Throws InputError on an
/// unknown label.
PennerReport validate_penner_word(const TwistWord& word, const CurveSystem& sys);

/// Connectivity of the intersection graph and that each curve meets the
/// other family. A region certificate, when present, upgrades the result to
/// `verified` (all disks, count = chi(S) + I, sides = 4I) or `failed`.
PennerReport filling_necessary_check(const CurveSystem& sys);

/// The seven-curve genus-3 chain a_1 b_1 a_2 b_2 a_3 b_3 a_4 together with
/// f = t_b2 t_a2^-1 t_a3^-1 t_b1 t_b3 t_a1^-1 t_a4^-1.
std::pair<CurveSystem, TwistWord> genus3_penner_system();

/// The (2g+1)-curve chain a_1..a_{g+1}, b_1..b_g with the three-phase word:
/// first a's other than a_2, a_3 (negative), then b's other than b_2
/// (positive), then a_3, a_2 and b_2. Throws InputError for g < 6.
std::pair<CurveSystem, TwistWord> extend_to_genus(int genus);

/// The curves alpha, beta = alpha - gamma and gamma of the genus-3 picture.
struct AlphaBetaGamma {
  HomologyClass alpha;
  HomologyClass beta;
  HomologyClass gamma;
};

AlphaBetaGamma genus3_alpha_beta_gamma();

}  // namespace tautkit
