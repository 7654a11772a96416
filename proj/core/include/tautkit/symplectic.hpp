#pragma once

// Homology of a closed oriented genus-g surface with its intersection form,
// and the action of Dehn twists on it.
//
// Basis order is r_1, s_1, ..., r_g, s_g with <r_i, s_i> = 1. Matrices that
// represent maps act on column vectors: column k is the image of basis vector k.
// A positive (right-handed) twist along c acts by x -> x + <x, c> c.

#include "tautkit/int_matrix.hpp"
#include "tautkit/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace tautkit {

class SymplecticSpace {
 public:
  explicit SymplecticSpace(int genus);

  int genus() const { return genus_; }
  std::size_t dimension() const { return static_cast<std::size_t>(2 * genus_); }

  /// Block-diagonal form with blocks [[0,1],[-1,0]].
  IntMatrix intersection_form() const;

  /// Coordinates of r_i / s_i, 1-based as in the usual labelling.
  IntVector r(int i) const;
  IntVector s(int i) const;

  friend bool operator==(const SymplecticSpace&, const SymplecticSpace&) = default;

 private:
  int genus_;
};

/// Integer coordinates in the r/s basis.
struct HomologyClass {
  IntVector coords;

  HomologyClass() = default;
  explicit HomologyClass(IntVector c) : coords(std::move(c)) {}

  bool is_zero() const;
  /// gcd of the coordinates is 1.
  bool is_primitive() const;

  friend HomologyClass operator+(const HomologyClass& a, const HomologyClass& b);
  friend HomologyClass operator-(const HomologyClass& a, const HomologyClass& b);
  friend HomologyClass operator-(const HomologyClass& a);
  friend HomologyClass operator*(const Integer& k, const HomologyClass& a);
  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;
};

/// <x, y> = x^T J y. Throws InputError when the lengths differ or are odd.
Integer algebraic_intersection(const HomologyClass& x, const HomologyClass& y);

enum class CurveFamily { A, B };

std::string to_string(CurveFamily f);
CurveFamily parse_family(const std::string& s);

/// A simple closed curve known through its homology class. Zero classes
/// (separating curves) are accepted and flagged; non-primitive nonzero
/// classes cannot come from a simple closed curve and are rejected.
class TwistGenerator {
 public:
  TwistGenerator(std::string label, HomologyClass cls, CurveFamily family);

  const std::string& label() const { return label_; }
  const HomologyClass& cls() const { return cls_; }
  CurveFamily family() const { return family_; }
  bool null_homologous() const { return cls_.is_zero(); }

 private:
  std::string label_;
  HomologyClass cls_;
  CurveFamily family_;
};

struct TwistLetter {
  std::string label;
  int exponent;

  friend bool operator==(const TwistLetter&, const TwistLetter&) = default;
};

/// Letters in written order; the rightmost letter is applied first.
class TwistWord {
 public:
  TwistWord() = default;
  explicit TwistWord(std::vector<TwistLetter> letters);

  const std::vector<TwistLetter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  /// Written concatenation: (*this) after `rhs`.
  TwistWord then_after(const TwistWord& rhs) const;

 private:
  std::vector<TwistLetter> letters_;
};

using GeneratorTable = std::map<std::string, TwistGenerator>;

GeneratorTable make_generator_table(const std::vector<TwistGenerator>& gens);

/// Matrix of x -> x + sign * <x, c> c. Any nonzero integer power is accepted,
/// since the k-th power of a transvection is x -> x + k <x, c> c.
IntMatrix transvection_matrix(const SymplecticSpace& space, const TwistGenerator& c, int sign);

/// Product of the letters' transvections in composition order.
/// Throws InputError on an unknown label.
IntMatrix word_action(const SymplecticSpace& space, const TwistWord& word,
                      const GeneratorTable& gens);

/// The genus-3 homology action printed for the word f, row for row.
/// In the printed layout row k lists the image of basis vector k.
IntMatrix build_W();

/// The genus-g (g >= 6) action for the extended word, in the printed layout
/// (rows are images). Throws InputError for g < 6.
IntMatrix build_V(int genus);

/// 1 + dim ker(f_* - Id), the second Betti number of the mapping torus.
int mapping_torus_b2(const IntMatrix& f_star);

/// det(f_* - Id) != 0.
bool fixed_homology_trivial(const IntMatrix& f_star);

struct ImageCheck {
  bool maps_alpha_to_beta;  // f_* alpha == beta
  bool not_homologous;      // alpha - beta != 0
};

ImageCheck homological_image_check(const IntMatrix& f_star, const HomologyClass& alpha,
                                   const HomologyClass& beta);

}  // namespace tautkit
