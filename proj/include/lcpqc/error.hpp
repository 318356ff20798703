#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lcpqc {

enum class ErrorKind {
    NonPrimeCharacteristic,
    ReducibleModulus,
    DegreeMismatch,
    FieldTooLarge,
    FieldMismatch,
    DivisionByZero,
    SyntaxError,
    NonPrimitiveGeneratorForPowerForm,
    ValueOutOfField,
    DivisionByZeroPoly,
    NonCoprimeParameters,
    ZeroLambda,
    InvalidStandardForm,
    NotDivisor,
    RankDeficient,
    ZeroCode,
    BudgetExceeded,
    MismatchedAmbient,
    DegreeTooLarge,
    ShapeMismatch,
    ParseError,
    EngineDisagreement,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it onto an exit code and a stable error name.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace lcpqc
