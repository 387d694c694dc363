#ifndef GQT_ERROR_HPP_
#define GQT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace gqt {

// Every domain failure in the library is reported through Error with one of
// these codes. The CLI prints the code name in its machine-readable error JSON.
enum class ErrorCode {
  NonPrimeCharacteristic,
  ReducibleModulus,
  InvalidModulus,
  FieldTooLarge,
  FieldMismatch,
  DivisionByZero,
  ImproperField,
  ParseError,
  DimensionMismatch,
  NonSquare,
  Inconsistent,
  NotHermitian,
  NotUnitary,
  IncompleteSpectrum,
  ZeroState,
  ImpossibleOutcome,
  IsotropicVector,
  NotOrthogonal,
  WrongField,
  EvenExtensionDegree,
  NoRootFound,
  SyntaxError,
  FieldNotFinite,
  NotHomogeneous,
  DimensionCap,
  Singular,
  InvalidArgument,
  Internal,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failure with a 0-based character offset into the input text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t column, const std::string& message)
      : Error(ErrorCode::SyntaxError,
              "column " + std::to_string(column) + ": " + message),
        column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

}  // namespace gqt

#endif  // GQT_ERROR_HPP_
