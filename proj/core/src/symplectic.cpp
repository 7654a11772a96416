#include "tautkit/symplectic.hpp"

#include <boost/multiprecision/integer.hpp>

namespace tautkit {

SymplecticSpace::SymplecticSpace(int genus) : genus_(genus) {
  if (genus < 1) throw InputError("SymplecticSpace: genus must be positive");
}

IntMatrix SymplecticSpace::intersection_form() const {
  IntMatrix j(dimension(), dimension());
  for (std::size_t b = 0; b < dimension(); b += 2) {
    j(b, b + 1) = 1;
    j(b + 1, b) = -1;
  }
  return j;
}

IntVector SymplecticSpace::r(int i) const {
  if (i < 1 || i > genus_) throw InputError("r_i: index out of range");
  IntVector v(dimension(), Integer(0));
  v[static_cast<std::size_t>(2 * i - 2)] = 1;
  return v;
}

IntVector SymplecticSpace::s(int i) const {
  if (i < 1 || i > genus_) throw InputError("s_i: index out of range");
  IntVector v(dimension(), Integer(0));
  v[static_cast<std::size_t>(2 * i - 1)] = 1;
  return v;
}

bool HomologyClass::is_zero() const {
  for (const auto& x : coords)
    if (x != 0) return false;
  return true;
}

bool HomologyClass::is_primitive() const {
  Integer g = 0;
  for (const auto& x : coords) g = boost::multiprecision::gcd(g, x);
  return g == 1;
}

namespace {

void require_same_length(const HomologyClass& a, const HomologyClass& b) {
  if (a.coords.size() != b.coords.size())
    throw InputError("homology classes live in different spaces");
}

}  // namespace

HomologyClass operator+(const HomologyClass& a, const HomologyClass& b) {
  require_same_length(a, b);
  HomologyClass out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

HomologyClass operator-(const HomologyClass& a, const HomologyClass& b) {
  require_same_length(a, b);
  HomologyClass out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] -= b.coords[i];
  return out;
}

HomologyClass operator-(const HomologyClass& a) {
  HomologyClass out = a;
  for (auto& x : out.coords) x = -x;
  return out;
}

HomologyClass operator*(const Integer& k, const HomologyClass& a) {
  HomologyClass out = a;
  for (auto& x : out.coords) x *= k;
  return out;
}

Integer algebraic_intersection(const HomologyClass& x, const HomologyClass& y) {
  require_same_length(x, y);
  if (x.coords.size() % 2 != 0) throw InputError("homology class of odd length");
  Integer acc = 0;
  for (std::size_t b = 0; b < x.coords.size(); b += 2) {
    acc += x.coords[b] * y.coords[b + 1] - x.coords[b + 1] * y.coords[b];
  }
  return acc;
}

std::string to_string(CurveFamily f) { return f == CurveFamily::A ? "A" : "B"; }

CurveFamily parse_family(const std::string& s) {
  if (s == "A" || s == "a") return CurveFamily::A;
  if (s == "B" || s == "b") return CurveFamily::B;
  throw InputError("curve family must be \"A\" or \"B\", got \"" + s + "\"");
}

TwistGenerator::TwistGenerator(std::string label, HomologyClass cls, CurveFamily family)
    : label_(std::move(label)), cls_(std::move(cls)), family_(family) {
  if (label_.empty()) throw InputError("twist generator needs a label");
  if (cls_.coords.empty() || cls_.coords.size() % 2 != 0)
    throw InputError("generator " + label_ + ": class must have even positive length");
  if (!cls_.is_zero() && !cls_.is_primitive())
    throw InputError("generator " + label_ + ": class is not primitive");
}

TwistWord::TwistWord(std::vector<TwistLetter> letters) : letters_(std::move(letters)) {
  for (const auto& l : letters_)
    if (l.exponent == 0) throw InputError("twist word: zero exponent on " + l.label);
}

TwistWord TwistWord::then_after(const TwistWord& rhs) const {
  std::vector<TwistLetter> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return TwistWord(std::move(out));
}

GeneratorTable make_generator_table(const std::vector<TwistGenerator>& gens) {
  GeneratorTable table;
  for (const auto& g : gens) {
    if (!table.emplace(g.label(), g).second)
      throw InputError("duplicate generator label " + g.label());
  }
  return table;
}

IntMatrix transvection_matrix(const SymplecticSpace& space, const TwistGenerator& c, int sign) {
  const std::size_t n = space.dimension();
  const IntVector& v = c.cls().coords;
  if (v.size() != n) throw InputError("generator " + c.label() + " has wrong dimension");
  if (sign == 0) throw InputError("transvection exponent must be nonzero");
  // Column k is e_k + sign * <e_k, c> c, and <e_k, c> = (J c)_k.
  const IntVector jc = space.intersection_form().apply(v);
  IntMatrix t = IntMatrix::identity(n);
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t col = 0; col < n; ++col) t(row, col) += sign * jc[col] * v[row];
  return t;
}

IntMatrix word_action(const SymplecticSpace& space, const TwistWord& word,
                      const GeneratorTable& gens) {
  IntMatrix acc = IntMatrix::identity(space.dimension());
  for (const auto& letter : word.letters()) {
    const auto it = gens.find(letter.label);
    if (it == gens.end()) throw InputError("unknown twist label " + letter.label);
    acc = acc * transvection_matrix(space, it->second, letter.exponent);
  }
  return acc;
}

IntMatrix build_W() {
  return IntMatrix{
      {0, 1, 2, -1, -2, 1},   {-1, 2, 1, 0, 0, 0},   {-2, 4, 4, -2, -2, 1},
      {1, -2, -2, 2, 2, -2},  {0, 0, 0, 1, 2, -3},   {0, 0, 0, 0, -1, 2},
  };
}

IntMatrix build_V(int genus) {
  if (genus < 6) throw InputError("build_V requires genus >= 6");
  const auto g = static_cast<std::size_t>(genus);
  const std::size_t n = 2 * g;
  IntMatrix v(n, n);

  // Rows r_1 .. s_4 are printed explicitly in the first eight columns.
  const IntMatrix lead{
      {0, 1, 2, -1, -2, 2, 1, -1},  {-1, 2, 1, 0, 0, 0, 0, 0},  {-2, 4, 4, -2, -2, 2, 1, -1},
      {1, -2, -2, 2, 2, -2, -1, 1}, {0, 0, 0, 1, 2, -2, -1, 1}, {0, 0, 0, 0, -1, 2, 1, -1},
      {0, 0, 0, 0, 0, 1, 1, -1},    {0, 0, 0, 0, 0, -1, -1, 3},
  };
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) v(i, j) = lead(i, j);

  // 0-based positions of r_i and s_i.
  const auto r = [](std::size_t i) { return 2 * i - 2; };
  const auto s = [](std::size_t i) { return 2 * i - 1; };

  // Every r_i row with i < g carries -s_g in the last column.
  for (std::size_t i = 1; i <= 4; ++i) v(r(i), s(g)) += -1;
  // s_4 continues into the first repeating block.
  v(s(4), r(5)) += 1;
  v(s(4), s(5)) += -1;

  // Repeating band, 5 <= i <= g-1:
  //   r_i -> s_{i-1} + r_i - s_i - s_g
  //   s_i -> -s_{i-1} - r_i + 3 s_i + r_{i+1} - s_{i+1}
  for (std::size_t i = 5; i + 1 <= g; ++i) {
    v(r(i), s(i - 1)) += 1;
    v(r(i), r(i)) += 1;
    v(r(i), s(i)) += -1;
    v(r(i), s(g)) += -1;
    v(s(i), s(i - 1)) += -1;
    v(s(i), r(i)) += -1;
    v(s(i), s(i)) += 3;
    v(s(i), r(i + 1)) += 1;
    v(s(i), s(i + 1)) += -1;
  }

  // Last handle.
  v(r(g), s(g - 1)) += 1;
  v(r(g), r(g)) += 1;
  v(r(g), s(g)) += -2;
  v(s(g), s(g - 1)) += -1;
  v(s(g), r(g)) += -1;
  v(s(g), s(g)) += 3;
  return v;
}

namespace {

IntMatrix minus_identity(const IntMatrix& m) {
  if (!m.is_square()) throw InputError("expected a square matrix");
  return m - IntMatrix::identity(m.rows());
}

}  // namespace

int mapping_torus_b2(const IntMatrix& f_star) {
  return 1 + static_cast<int>(nullity_exact(minus_identity(f_star)));
}

bool fixed_homology_trivial(const IntMatrix& f_star) {
  return det_exact(minus_identity(f_star)) != 0;
}

ImageCheck homological_image_check(const IntMatrix& f_star, const HomologyClass& alpha,
                                   const HomologyClass& beta) {
  if (alpha.coords.size() != beta.coords.size() || f_star.cols() != alpha.coords.size() ||
      f_star.rows() != beta.coords.size())
    throw InputError("homological_image_check: dimension mismatch");
  const HomologyClass image(f_star.apply(alpha.coords));
  return ImageCheck{image == beta, !(alpha - beta).is_zero()};
}

}  // namespace tautkit
