#pragma once

#include <stdexcept>
#include <string>

namespace kq {

// Base class for all recoverable errors raised by the library. Every error
// carries a stable machine-readable code (used by the CLI) next to the
// human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define KQ_DEFINE_ERROR(NAME)                                        \
    class NAME : public Error {                                      \
    public:                                                          \
        explicit NAME(const std::string& msg) : Error(#NAME, msg) {} \
    }

KQ_DEFINE_ERROR(ParseError);
KQ_DEFINE_ERROR(ValidationError);
KQ_DEFINE_ERROR(SurgeryError);
KQ_DEFINE_ERROR(WrongKind);
KQ_DEFINE_ERROR(NotAKnot);
KQ_DEFINE_ERROR(NotPrimary);
KQ_DEFINE_ERROR(NotSolidTorusPresentation);
KQ_DEFINE_ERROR(NotColorable);
KQ_DEFINE_ERROR(NotAUnit);
KQ_DEFINE_ERROR(BadMinorSize);
KQ_DEFINE_ERROR(ZeroEvaluationPoint);
KQ_DEFINE_ERROR(NotIdempotent);
KQ_DEFINE_ERROR(NotBijective);
KQ_DEFINE_ERROR(NotDistributive);
KQ_DEFINE_ERROR(GroupTooLarge);
KQ_DEFINE_ERROR(NotNormal);
KQ_DEFINE_ERROR(NotWellDefined);
KQ_DEFINE_ERROR(NotConnected);

#undef KQ_DEFINE_ERROR

} // namespace kq
