#pragma once

#include <stdexcept>
#include <string>

namespace cyclotile {

enum class Errc {
    NonPrime,
    NotDistinct,
    ModulusTooLarge,
    EmptySet,
    PreconditionViolated,
    BadIndexResidues,
    WrongCardinality,
    NotSumsetForm,
    NotDisjoint,
    NotInvariant,
    ZeroInH,
    DivOneViolation,
    FormMismatch,
    ParseError,
    ModulusMismatch,
    GenerationFailed,
    InternalContradiction,
};

const char* errc_name(Errc e);

/// Library error carrying a machine-readable kind plus a human message.
class Error : public std::runtime_error {
public:
    Error(Errc kind, const std::string& msg)
        : std::runtime_error(std::string(errc_name(kind)) + ": " + msg), kind_(kind) {}

    Errc kind() const noexcept { return kind_; }

private:
    Errc kind_;
};

[[noreturn]] inline void fail(Errc kind, const std::string& msg) { throw Error(kind, msg); }

} // namespace cyclotile
