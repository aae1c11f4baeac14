#pragma once

#include <stdexcept>
#include <string>

namespace bsmg {

// Base for every library error. `code()` is the stable machine-readable
// identifier used in CLI output; `what()` carries the human message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define BSMG_DEFINE_ERROR(Name)                                        \
    class Name : public Error {                                        \
    public:                                                            \
        explicit Name(const std::string& msg) : Error(#Name, msg) {}   \
    }

BSMG_DEFINE_ERROR(DivisionByZero);
BSMG_DEFINE_ERROR(FieldMismatch);
BSMG_DEFINE_ERROR(NotDivisible);
BSMG_DEFINE_ERROR(NotHomogeneous);
BSMG_DEFINE_ERROR(ZeroPolynomial);
BSMG_DEFINE_ERROR(UnsupportedType);
BSMG_DEFINE_ERROR(ZeroLabel);
BSMG_DEFINE_ERROR(IncompleteInterval);
BSMG_DEFINE_ERROR(NotReduced);
BSMG_DEFINE_ERROR(NonGKMInput);
BSMG_DEFINE_ERROR(NotApplicable);
BSMG_DEFINE_ERROR(InternalInvariant);
BSMG_DEFINE_ERROR(CacheError);
BSMG_DEFINE_ERROR(UsageError);

#undef BSMG_DEFINE_ERROR

} // namespace bsmg
