#ifndef OSD_DSL_HPP
#define OSD_DSL_HPP

#include "osd/rule.hpp"

#include <string>
#include <string_view>

namespace osd {

/// Parses rules of the form `a -> ab; b -> a`. Statements are separated by
/// newlines or ';', '#' starts a comment. Letters match
/// [A-Za-z][A-Za-z0-9_]*. When every letter is a single character images
/// may be written contiguously, otherwise image letters are separated by
/// whitespace. The alphabet is the list of left-hand sides in order.
///
/// Throws ParseError, UndefinedLetter or DuplicateRule.
SubstitutionRule parse_rule(std::string_view text);

/// One `letter -> image` line per letter; parse_rule(print_rule(r)) == r.
std::string print_rule(const SubstitutionRule& rule);

/// Single-line form with `; ` separators.
std::string print_rule_inline(const SubstitutionRule& rule);

}  // namespace osd

#endif  // OSD_DSL_HPP
