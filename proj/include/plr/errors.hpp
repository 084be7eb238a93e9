#pragma once

#include <stdexcept>
#include <string>

namespace plr {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrime : Error {
    using Error::Error;
};

struct ZeroInversion : Error {
    ZeroInversion() : Error("zero has no multiplicative inverse") {}
};

struct LengthMismatch : Error {
    using Error::Error;
};

struct PrecisionMismatch : Error {
    using Error::Error;
};

struct ModulusMismatch : Error {
    using Error::Error;
};

struct NotDivisible : Error {
    NotDivisible() : Error("value is not divisible by p") {}
};

struct EmptyForm : Error {
    EmptyForm() : Error("echelon form has no rows") {}
};

struct RankDeficient : Error {
    RankDeficient() : Error("echelon form does not determine a unique coefficient vector") {}
};

}  // namespace plr
