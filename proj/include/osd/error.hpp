#ifndef OSD_ERROR_HPP
#define OSD_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace osd {

/// Base class of every error raised by the library. `kind()` is a stable
/// identifier used in JSON error objects.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define OSD_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                    \
   public:                                                       \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  };

// algebraic core
OSD_DEFINE_ERROR(EndpointIsRoot)
OSD_DEFINE_ERROR(NoRealRoot)
OSD_DEFINE_ERROR(PrecisionExhausted)
OSD_DEFINE_ERROR(BoundaryCase)
// rule model
OSD_DEFINE_ERROR(NotPrimitive)
OSD_DEFINE_ERROR(DegeneratePivot)
OSD_DEFINE_ERROR(InvalidRule)
// balanced pairs
OSD_DEFINE_ERROR(UnbalancedInput)
// osd
OSD_DEFINE_ERROR(NonExactFactor)
OSD_DEFINE_ERROR(InvalidSpectrum)
// oracle
OSD_DEFINE_ERROR(InsufficientData)

#undef OSD_DEFINE_ERROR

/// Closure (or trajectory) growth exceeded the configured node cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::size_t count, const std::string& message)
      : Error("CapExceeded", message), count_(count) {}
  std::size_t count() const noexcept { return count_; }

 private:
  std::size_t count_;
};

/// Rule DSL error with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message,
             std::string kind = "ParseError")
      : Error(std::move(kind), "line " + std::to_string(line) + ", column " +
                                   std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class UndefinedLetter : public ParseError {
 public:
  UndefinedLetter(std::size_t line, std::size_t column, const std::string& letter)
      : ParseError(line, column, "undefined letter '" + letter + "'", "UndefinedLetter") {}
};

class DuplicateRule : public ParseError {
 public:
  DuplicateRule(std::size_t line, std::size_t column, const std::string& letter)
      : ParseError(line, column, "duplicate rule for '" + letter + "'", "DuplicateRule") {}
};

}  // namespace osd

#endif  // OSD_ERROR_HPP
