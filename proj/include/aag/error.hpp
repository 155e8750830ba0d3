#pragma once

#include <stdexcept>
#include <string>

namespace aag {

enum class ErrorCode {
    NonsenseInput,
    NonPositiveGenerator,
    GcdViolation,
    NotMinimal,
    NotCoprime,
    ModulusTooLarge,
    Overflow,
    HypothesisViolated,
    NoPivot,
    NotStandardForm,
    InternalDispatchGap,
    DuplicatePfValue,
    MalformedPf,
    FamilyConstraintViolated,
    UnknownFamily,
};

const char* to_string(ErrorCode c) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace aag
