#pragma once

#include <stdexcept>
#include <string>

namespace ydh {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define YDH_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                    \
   public:                                                       \
    explicit Name(const std::string& what)                       \
        : Error(std::string(#Name) + ": " + what) {}             \
  }

YDH_DEFINE_ERROR(DivisionByZero);
YDH_DEFINE_ERROR(NonSplitField);
YDH_DEFINE_ERROR(NonDivisibleOrders);
YDH_DEFINE_ERROR(PreconditionViolated);
YDH_DEFINE_ERROR(DimensionMismatch);
YDH_DEFINE_ERROR(GroupMismatch);
YDH_DEFINE_ERROR(MalformedStructure);
YDH_DEFINE_ERROR(NoAntipode);
YDH_DEFINE_ERROR(NotColinear);
YDH_DEFINE_ERROR(NotSemisimple);
YDH_DEFINE_ERROR(NotUnique);
YDH_DEFINE_ERROR(NotCommutative);
YDH_DEFINE_ERROR(NotSubcoalgebra);
YDH_DEFINE_ERROR(NotUnitalSubalgebra);
YDH_DEFINE_ERROR(NonIntegralRank);
YDH_DEFINE_ERROR(FormulaMismatch);
YDH_DEFINE_ERROR(DecompositionFailure);
YDH_DEFINE_ERROR(ClosureFailure);
YDH_DEFINE_ERROR(TheoremViolation);
YDH_DEFINE_ERROR(NotInSpan);
YDH_DEFINE_ERROR(EquivalenceViolation);
YDH_DEFINE_ERROR(BudgetExhausted);

#undef YDH_DEFINE_ERROR

// Carries a 1-based line and column; column 0 means "whole line".
class ParseError : public Error {
 public:
  ParseError(int line, int col, const std::string& expected)
      : Error("ParseError: line " + std::to_string(line) + ", column " +
              std::to_string(col) + ": expected " + expected),
        line_(line), col_(col), expected_(expected) {}
  int line() const { return line_; }
  int column() const { return col_; }
  const std::string& expected() const { return expected_; }

 private:
  int line_;
  int col_;
  std::string expected_;
};

}  // namespace ydh
