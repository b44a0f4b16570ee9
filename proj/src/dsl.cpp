#include "osd/dsl.hpp"

#include "osd/error.hpp"

#include <cctype>
#include <vector>

namespace osd {

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

struct Statement {
  Token lhs;
  std::vector<Token> image;  // whitespace-separated chunks, not yet split into letters
  std::size_t line;
  std::size_t arrow_column;
};

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

void check_name(const Token& t) {
  if (!name_start(t.text[0])) throw ParseError(t.line, t.column, "letter must start with A-Z or a-z");
  for (std::size_t k = 1; k < t.text.size(); ++k)
    if (!name_char(t.text[k])) throw ParseError(t.line, t.column + k, "invalid character in letter name");
}

// Splits the text into statements, tracking source positions.
std::vector<Statement> scan(std::string_view text) {
  std::vector<Statement> out;
  std::size_t line = 1, col = 1, i = 0;
  while (i <= text.size()) {
    // One statement: up to ';', newline, '#' or end.
    std::vector<Token> toks;
    std::size_t arrow_col = 0, arrow_pos = 0;
    bool has_arrow = false;
    const std::size_t stmt_line = line;
    while (i < text.size() && text[i] != ';' && text[i] != '\n' && text[i] != '#') {
      const char c = text[i];
      if (c == ' ' || c == '\t' || c == '\r') {
        ++i;
        ++col;
        continue;
      }
      if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
        if (has_arrow) throw ParseError(line, col, "second '->' in one rule");
        has_arrow = true;
        arrow_col = col;
        arrow_pos = toks.size();
        i += 2;
        col += 2;
        continue;
      }
      Token t{"", line, col};
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != ';' &&
             text[i] != '#' && !(text[i] == '-' && i + 1 < text.size() && text[i + 1] == '>')) {
        if (!name_char(text[i])) throw ParseError(line, col, std::string("unexpected character '") + text[i] + "'");
        t.text += text[i];
        ++i;
        ++col;
      }
      toks.push_back(std::move(t));
    }
    if (!toks.empty() || has_arrow) {
      if (!has_arrow) throw ParseError(toks.front().line, toks.front().column, "expected '->'");
      if (arrow_pos != 1)
        throw ParseError(stmt_line, arrow_pos == 0 ? arrow_col : toks[1].column,
                         "expected exactly one letter before '->'");
      if (toks.size() < 2) throw ParseError(stmt_line, arrow_col + 2, "empty image");
      Statement s{toks[0], std::vector<Token>(toks.begin() + 1, toks.end()), stmt_line, arrow_col};
      out.push_back(std::move(s));
    }
    if (i < text.size() && text[i] == '#')
      while (i < text.size() && text[i] != '\n') {
        ++i;
        ++col;
      }
    if (i >= text.size()) break;
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  }
  return out;
}

}  // namespace

SubstitutionRule parse_rule(std::string_view text) {
  const std::vector<Statement> stmts = scan(text);
  if (stmts.empty()) throw ParseError(1, 1, "no rules");
  std::vector<std::string> names;
  for (const auto& s : stmts) {
    check_name(s.lhs);
    for (const auto& n : names)
      if (n == s.lhs.text) throw DuplicateRule(s.lhs.line, s.lhs.column, s.lhs.text);
    names.push_back(s.lhs.text);
  }
  Alphabet alphabet(names);
  const bool contiguous = alphabet.single_char();
  std::vector<Word> images;
  for (const auto& s : stmts) {
    Word w;
    for (const auto& chunk : s.image) {
      if (contiguous) {
        for (std::size_t k = 0; k < chunk.text.size(); ++k) {
          const std::string one(1, chunk.text[k]);
          auto l = alphabet.find(one);
          if (!l) throw UndefinedLetter(chunk.line, chunk.column + k, one);
          w.push_back(*l);
        }
      } else {
        check_name(chunk);
        auto l = alphabet.find(chunk.text);
        if (!l) throw UndefinedLetter(chunk.line, chunk.column, chunk.text);
        w.push_back(*l);
      }
    }
    images.push_back(std::move(w));
  }
  return SubstitutionRule(std::move(alphabet), std::move(images));
}

std::string print_rule(const SubstitutionRule& rule) {
  std::string out;
  for (Letter l = 0; l < rule.size(); ++l)
    out += rule.alphabet().name(l) + " -> " + rule.format_word(rule.image(l)) + "\n";
  return out;
}

std::string print_rule_inline(const SubstitutionRule& rule) {
  std::string out;
  for (Letter l = 0; l < rule.size(); ++l) {
    if (l > 0) out += "; ";
    out += rule.alphabet().name(l) + " -> " + rule.format_word(rule.image(l));
  }
  return out;
}

}  // namespace osd
