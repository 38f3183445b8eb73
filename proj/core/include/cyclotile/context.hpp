#pragma once

#include <cstdint>
#include <string>

#include "cyclotile/errors.hpp"

namespace cyclotile {

using Residue = std::uint64_t;

/// One of the three prime axes of Z_{(pqr)^2}.
enum class Axis { P, Q, R };

const char* axis_name(Axis a);

/// The prime triple p < q < r together with M = (pqr)^2 and every derived
/// constant the structure theory needs. Immutable after construction.
struct ModulusContext {
    Residue p, q, r;
    Residue pqr;
    Residue M; // (pqr)^2

    Residue p2, q2, r2;
    Residue pq, qr, rp;
    Residue p2q2, q2r2, r2p2; // M/r^2, M/p^2, M/q^2
    Residue p2qr, p2q2r, p2qr2;
    Residue pq2r2, qr2p2, rp2q2; // M/p, M/q, M/r

    /// The prime along an axis.
    Residue prime(Axis a) const;
    /// Shift unit of condition (IV): M/a^2 (q^2r^2 for axis P, ...).
    Residue axis_shift(Axis a) const;
    /// Period of condition (III): M/a (p*q^2r^2 for axis P, ...).
    Residue axis_period(Axis a) const;
};

/// Builds the context from three distinct primes (< 2^16, any order).
/// Throws NonPrime / NotDistinct / ModulusTooLarge.
ModulusContext make_modulus(Residue a, Residue b, Residue c);

bool is_prime_u64(Residue n);

Residue gcd_u64(Residue a, Residue b);

/// x^{-1} mod m for gcd(x, m) = 1; throws InternalContradiction otherwise.
Residue mod_inverse(Residue x, Residue m);

} // namespace cyclotile
