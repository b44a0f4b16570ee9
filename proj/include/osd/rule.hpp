#ifndef OSD_RULE_HPP
#define OSD_RULE_HPP

#include "osd/algebraic.hpp"
#include "osd/field.hpp"
#include "osd/matrix.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace osd {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;

/// Ordered set of distinct letter names; the order fixes matrix indexing.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Letter l) const { return names_.at(l); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Letter> find(const std::string& name) const;
  /// True when every name is a single character, so words print contiguously.
  bool single_char() const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, Letter> index_;
};

/// Substitution (inflation) rule on a finite alphabet.
class SubstitutionRule {
 public:
  /// Throws InvalidRule if an image is empty, refers to a letter outside
  /// the alphabet, or the image count does not match the alphabet.
  SubstitutionRule(Alphabet alphabet, std::vector<Word> images);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t size() const { return alphabet_.size(); }
  const Word& image(Letter l) const { return images_.at(l); }
  const std::vector<Word>& images() const { return images_; }
  Word apply(const Word& w) const;
  /// Common image length when all images have the same length.
  std::optional<std::size_t> constant_length() const;

  std::string format_word(const Word& w) const;

  friend bool operator==(const SubstitutionRule& a, const SubstitutionRule& b) {
    return a.alphabet_ == b.alphabet_ && a.images_ == b.images_;
  }

 private:
  Alphabet alphabet_;
  std::vector<Word> images_;
};

/// M(i, j) = number of occurrences of letter i in the image of letter j.
IntMatrix inflation_matrix(const SubstitutionRule& rule);

/// Some power M^k with k <= n(n-1)+1 is entrywise positive.
bool is_primitive(const IntMatrix& m);

/// Perron-Frobenius data of a primitive rule. Tile lengths are the left PF
/// eigenvector in Q[x]/(char_poly) evaluated at lambda, normalised so the
/// first letter has length 1.
struct InflationData {
  IntMatrix matrix;
  IntPolynomial char_poly;
  AlgebraicReal lambda;
  IntPolynomial min_poly_lambda;
  FieldContextPtr field;
  std::vector<FieldElement> lengths;
  bool primitive = true;
  bool pisot = false;
  bool unit = false;
  /// Set when a conjugate modulus could not be separated from 1.
  bool pisot_undecided = false;
  std::vector<ConjugateModulus> conjugate_moduli;
  int complex_conjugates = 0;
};

/// Throws NotPrimitive or DegeneratePivot.
InflationData pf_data(const SubstitutionRule& rule, unsigned precision_bits = kDefaultPrecisionBits);

/// All legal words of length <= maxlen: the closure of the letters under
/// "take factors of the image".
std::set<Word> language_factors(const SubstitutionRule& rule, std::size_t maxlen);

/// Exact length of a word as a field element.
FieldElement word_length(const Word& w, const std::vector<FieldElement>& lengths);

}  // namespace osd

#endif  // OSD_RULE_HPP
