#include "osd/rule.hpp"

#include "osd/error.hpp"
#include "osd/spectral.hpp"

#include <deque>
#include <stdexcept>

namespace osd {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw InvalidRule("alphabet is empty");
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (!index_.emplace(names_[i], static_cast<Letter>(i)).second)
      throw InvalidRule("duplicate letter '" + names_[i] + "'");
}

std::optional<Letter> Alphabet::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Alphabet::single_char() const {
  for (const auto& n : names_)
    if (n.size() != 1) return false;
  return true;
}

SubstitutionRule::SubstitutionRule(Alphabet alphabet, std::vector<Word> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  if (images_.size() != alphabet_.size()) throw InvalidRule("every letter needs exactly one image");
  for (std::size_t j = 0; j < images_.size(); ++j) {
    if (images_[j].empty()) throw InvalidRule("image of '" + alphabet_.name(static_cast<Letter>(j)) + "' is empty");
    for (Letter l : images_[j])
      if (l >= alphabet_.size()) throw InvalidRule("image letter outside the alphabet");
  }
}

Word SubstitutionRule::apply(const Word& w) const {
  Word out;
  for (Letter l : w) out.insert(out.end(), images_[l].begin(), images_[l].end());
  return out;
}

std::optional<std::size_t> SubstitutionRule::constant_length() const {
  const std::size_t len = images_.front().size();
  for (const auto& img : images_)
    if (img.size() != len) return std::nullopt;
  return len;
}

std::string SubstitutionRule::format_word(const Word& w) const {
  std::string s;
  const bool contiguous = alphabet_.single_char();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!contiguous && i > 0) s += ' ';
    s += alphabet_.name(w[i]);
  }
  return s;
}

IntMatrix inflation_matrix(const SubstitutionRule& rule) {
  const std::size_t n = rule.size();
  IntMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (Letter i : rule.image(static_cast<Letter>(j))) m(i, j) += 1;
  return m;
}

namespace {

using BoolMatrix = std::vector<std::vector<bool>>;

BoolMatrix bool_mul(const BoolMatrix& a, const BoolMatrix& b) {
  const std::size_t n = a.size();
  BoolMatrix p(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (b[k][j]) p[i][j] = true;
  return p;
}

}  // namespace

bool is_primitive(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("is_primitive: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return false;
  BoolMatrix b(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) < 0) throw std::invalid_argument("is_primitive: negative entry");
      b[i][j] = m(i, j) > 0;
    }
  // A primitive matrix has M^k > 0 for every k >= n(n-1)+1, so it suffices
  // to test one power of two beyond that bound.
  const std::size_t bound = n * (n - 1) + 1;
  std::size_t k = 1;
  while (k < bound) {
    b = bool_mul(b, b);
    k *= 2;
  }
  for (const auto& row : b)
    for (bool x : row)
      if (!x) return false;
  return true;
}

FieldElement word_length(const Word& w, const std::vector<FieldElement>& lengths) {
  FieldElement total = FieldElement::constant(lengths.front().context(), Rational(0));
  for (Letter l : w) total += lengths[l];
  return total;
}

InflationData pf_data(const SubstitutionRule& rule, unsigned precision_bits) {
  IntMatrix m = inflation_matrix(rule);
  if (!is_primitive(m)) throw NotPrimitive("substitution is not primitive");
  const std::size_t n = rule.size();
  IntPolynomial cp = char_poly(m);
  AlgebraicReal lambda = isolate_largest_real_root(cp);
  IntPolynomial minp = min_poly_of(lambda, precision_bits);
  auto ctx = std::make_shared<FieldContext>(cp, lambda);
  ctx->set_min_poly(minp);
  FieldContextPtr field = ctx;

  // Solve (M^T - lambda I) L = 0 by Gauss-Jordan elimination over
  // Q[x]/(cp), deciding pivots exactly at lambda.
  const FieldElement x = FieldElement::generator(field);
  std::vector<std::vector<FieldElement>> a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      FieldElement e = FieldElement::constant(field, Rational(m(j, i)));
      if (i == j) e -= x;
      a[i].push_back(e);
    }
  std::vector<std::size_t> pivot_col;
  std::vector<std::size_t> free_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = row;
    while (piv < n && field_is_zero(a[piv][col])) ++piv;
    if (piv == n) {
      free_cols.push_back(col);
      continue;
    }
    std::swap(a[piv], a[row]);
    const FieldElement inv = a[row][col].inverse_at_root();
    for (auto& e : a[row]) e = e * inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || field_is_zero(a[r][col])) continue;
      const FieldElement f = a[r][col];
      for (std::size_t c = 0; c < n; ++c) a[r][c] -= f * a[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (free_cols.size() != 1) throw DegeneratePivot("PF eigenspace is not one-dimensional");
  const std::size_t fc = free_cols.front();
  std::vector<FieldElement> lengths(n, FieldElement::constant(field, Rational(0)));
  lengths[fc] = FieldElement::constant(field, Rational(1));
  for (std::size_t r = 0; r < pivot_col.size(); ++r) lengths[pivot_col[r]] = -a[r][fc];
  const FieldElement norm = lengths[0].inverse_at_root();
  for (auto& l : lengths) l = l * norm;
  // Reduce representatives modulo the minimal polynomial for compact output.
  for (auto& l : lengths) l = FieldElement(field, l.canonical_key());
  for (const auto& l : lengths)
    if (field_sign(l) != 1) throw DegeneratePivot("PF eigenvector is not positive");

  InflationData data{m, cp, lambda, minp, field, lengths};
  try {
    PisotUnitInfo info = pisot_unit_check(minp, precision_bits);
    data.pisot = info.is_pisot;
    data.unit = info.is_unit;
    data.conjugate_moduli = info.conjugate_moduli;
    data.complex_conjugates = info.complex_conjugates;
  } catch (const BoundaryCase&) {
    data.pisot = false;
    data.pisot_undecided = true;
    data.unit = abs(minp.coeff(0)) == 1;
  }
  return data;
}

std::set<Word> language_factors(const SubstitutionRule& rule, std::size_t maxlen) {
  if (maxlen == 0) throw std::invalid_argument("language_factors: maxlen must be >= 1");
  std::set<Word> found;
  std::deque<Word> work;
  for (Letter l = 0; l < rule.size(); ++l) {
    Word w{l};
    found.insert(w);
    work.push_back(w);
  }
  while (!work.empty()) {
    Word w = std::move(work.front());
    work.pop_front();
    const Word img = rule.apply(w);
    for (std::size_t i = 0; i < img.size(); ++i)
      for (std::size_t len = 1; len <= maxlen && i + len <= img.size(); ++len) {
        Word f(img.begin() + static_cast<std::ptrdiff_t>(i), img.begin() + static_cast<std::ptrdiff_t>(i + len));
        if (found.insert(f).second) work.push_back(std::move(f));
      }
  }
  return found;
}

}  // namespace osd
