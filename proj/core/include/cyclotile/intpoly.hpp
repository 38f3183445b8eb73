#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>
#include <vector>

#include "cyclotile/context.hpp"
#include "cyclotile/zmset.hpp"

namespace cyclotile {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer polynomial, index = exponent, trailing zeros trimmed.
/// The zero polynomial is the empty coefficient list.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);

    static IntPoly constant(long c);
    /// x^d
    static IntPoly monomial(std::size_t d);
    /// x^s - 1
    static IntPoly x_pow_minus_one(std::size_t s);

    bool is_zero() const { return c_.empty(); }
    /// Degree of the zero polynomial is -1.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const BigInt& coeff(std::size_t i) const;
    const std::vector<BigInt>& coeffs() const { return c_; }

    BigInt eval_at_one() const;
    /// P(x^k)
    IntPoly compose_x_pow(std::size_t k) const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    /// Exact quotient and remainder by a monic divisor.
    /// Throws PreconditionViolated when the divisor is not monic.
    std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& divisor) const;

private:
    void trim();
    std::vector<BigInt> c_;
};

/// Phi_s, the s-th cyclotomic polynomial, by iterated exact division of
/// x^s - 1 by Phi_d over the proper divisors d of s. Memoized; safe for
/// concurrent callers. Requires s >= 1.
const IntPoly& cyclotomic_poly(std::size_t s);

/// Mask (characteristic) polynomial of a set: sum of x^e over elements.
IntPoly mask_poly(const ZmSet& e);

/// True iff Phi_s divides the mask polynomial of E over the integers.
/// Exponents are first folded mod s (x^s = 1 modulo Phi_s), then the folded
/// polynomial is reduced by the monic Phi_s exactly.
bool phi_divides(std::size_t s, const ZmSet& e);

/// Same test for an arbitrary polynomial.
bool phi_divides(std::size_t s, const IntPoly& poly);

/// Verifies Phi_n(x^p) = Phi_n(x) * Phi_np(x) for p not dividing n, and
/// Phi_n(x^p) = Phi_np(x) for p | n, by exact polynomial arithmetic.
bool phi_power_identity_check(std::size_t n, std::size_t p);

struct AverageReport {
    bool applicable = false;      // Phi_l | A(x)
    bool biconditional_ok = false; // Phi_l | A  <=>  Phi_{l^2} | B
    bool class_counts_ok = true;   // |C^l_j(A)| = pqr/l for all j
    bool refined_counts_ok = true; // |C^l_{j,k}(B)| = |C^l_j(B)| / l
    std::vector<Residue> failing_a_classes;
    std::vector<std::pair<Residue, Residue>> failing_b_classes;

    bool pass() const { return biconditional_ok && class_counts_ok && refined_counts_ok; }
};

/// Equidistribution facts tied to Phi_l | A for a factorization with
/// |A| = |B| = pqr. Throws PreconditionViolated when the inputs are not a
/// factorization of Z_{ctx.M} with the right cardinalities.
AverageReport average_property_check(const ZmSet& a, const ZmSet& b, Axis axis, const ModulusContext& ctx);

} // namespace cyclotile
