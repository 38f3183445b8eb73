#include "cyclotile/context.hpp"

#include <algorithm>
#include <numeric>

namespace cyclotile {

const char* errc_name(Errc e) {
    switch (e) {
        case Errc::NonPrime: return "NonPrime";
        case Errc::NotDistinct: return "NotDistinct";
        case Errc::ModulusTooLarge: return "ModulusTooLarge";
        case Errc::EmptySet: return "EmptySet";
        case Errc::PreconditionViolated: return "PreconditionViolated";
        case Errc::BadIndexResidues: return "BadIndexResidues";
        case Errc::WrongCardinality: return "WrongCardinality";
        case Errc::NotSumsetForm: return "NotSumsetForm";
        case Errc::NotDisjoint: return "NotDisjoint";
        case Errc::NotInvariant: return "NotInvariant";
        case Errc::ZeroInH: return "ZeroInH";
        case Errc::DivOneViolation: return "DivOneViolation";
        case Errc::FormMismatch: return "FormMismatch";
        case Errc::ParseError: return "ParseError";
        case Errc::ModulusMismatch: return "ModulusMismatch";
        case Errc::GenerationFailed: return "GenerationFailed";
        case Errc::InternalContradiction: return "InternalContradiction";
    }
    return "UnknownError";
}

const char* axis_name(Axis a) {
    switch (a) {
        case Axis::P: return "p";
        case Axis::Q: return "q";
        case Axis::R: return "r";
    }
    return "?";
}

bool is_prime_u64(Residue n) {
    if (n < 2) return false;
    for (Residue d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Residue gcd_u64(Residue a, Residue b) { return std::gcd(a, b); }

Residue mod_inverse(Residue x, Residue m) {
    // extended Euclid on (x mod m, m)
    std::int64_t a = static_cast<std::int64_t>(x % m), b = static_cast<std::int64_t>(m);
    std::int64_t s0 = 1, s1 = 0;
    while (b != 0) {
        std::int64_t t = a / b;
        a -= t * b;
        std::swap(a, b);
        s0 -= t * s1;
        std::swap(s0, s1);
    }
    if (a != 1) fail(Errc::InternalContradiction, "mod_inverse of non-unit");
    s0 %= static_cast<std::int64_t>(m);
    if (s0 < 0) s0 += static_cast<std::int64_t>(m);
    return static_cast<Residue>(s0);
}

Residue ModulusContext::prime(Axis a) const {
    switch (a) {
        case Axis::P: return p;
        case Axis::Q: return q;
        case Axis::R: return r;
    }
    return 0;
}

Residue ModulusContext::axis_shift(Axis a) const {
    switch (a) {
        case Axis::P: return q2r2;
        case Axis::Q: return r2p2;
        case Axis::R: return p2q2;
    }
    return 0;
}

Residue ModulusContext::axis_period(Axis a) const {
    switch (a) {
        case Axis::P: return pq2r2;
        case Axis::Q: return qr2p2;
        case Axis::R: return rp2q2;
    }
    return 0;
}

ModulusContext make_modulus(Residue a, Residue b, Residue c) {
    Residue v[3] = {a, b, c};
    std::sort(v, v + 3);
    for (Residue x : v) {
        if (x >= (1u << 16)) fail(Errc::ModulusTooLarge, "prime " + std::to_string(x) + " exceeds 2^16");
        if (!is_prime_u64(x)) fail(Errc::NonPrime, std::to_string(x) + " is not prime");
    }
    if (v[0] == v[1] || v[1] == v[2]) fail(Errc::NotDistinct, "primes must be pairwise distinct");

    ModulusContext ctx{};
    ctx.p = v[0];
    ctx.q = v[1];
    ctx.r = v[2];
    ctx.pqr = ctx.p * ctx.q * ctx.r;
    if (ctx.pqr > 0xFFFFFFFFull) fail(Errc::ModulusTooLarge, "(pqr)^2 does not fit 64 bits");
    ctx.M = ctx.pqr * ctx.pqr;
    ctx.p2 = ctx.p * ctx.p;
    ctx.q2 = ctx.q * ctx.q;
    ctx.r2 = ctx.r * ctx.r;
    ctx.pq = ctx.p * ctx.q;
    ctx.qr = ctx.q * ctx.r;
    ctx.rp = ctx.r * ctx.p;
    ctx.p2q2 = ctx.p2 * ctx.q2;
    ctx.q2r2 = ctx.q2 * ctx.r2;
    ctx.r2p2 = ctx.r2 * ctx.p2;
    ctx.p2qr = ctx.p2 * ctx.q * ctx.r;
    ctx.p2q2r = ctx.p2 * ctx.q2 * ctx.r;
    ctx.p2qr2 = ctx.p2 * ctx.q * ctx.r2;
    ctx.pq2r2 = ctx.p * ctx.q2r2;
    ctx.qr2p2 = ctx.q * ctx.r2p2;
    ctx.rp2q2 = ctx.r * ctx.p2q2;
    return ctx;
}

} // namespace cyclotile
