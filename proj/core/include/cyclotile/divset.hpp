#pragma once

#include <vector>

#include "cyclotile/context.hpp"
#include "cyclotile/zmset.hpp"

namespace cyclotile {

/// The set of gcd(a - a', M) over pairs; always a sorted set of divisors of
/// the modulus, containing M whenever the source set was nonempty.
struct DivSet {
    Residue modulus = 0;
    std::vector<Residue> divisors; // sorted, unique

    bool contains(Residue d) const;
    friend bool operator==(const DivSet&, const DivSet&) = default;
};

/// Div(x, y) = gcd(x - y mod M, M); gcd(0, M) = M.
Residue div_pair(Residue x, Residue y, Residue m);

/// Div(E) over all pairs of E. Throws EmptySet.
DivSet div_set(const ZmSet& e);

/// Div(D, E) over D x E. Throws EmptySet.
DivSet div_between(const ZmSet& d, const ZmSet& e);

/// Ground-truth factorization test: the multiset {a + b mod M} covers every
/// residue exactly once. Works for any modulus. Throws ModulusMismatch.
bool is_factorization_brute(const ZmSet& a, const ZmSet& b);

/// Sands' criterion: |A|*|B| = M and Div(A) n Div(B) = {M}. Total: empty
/// inputs give false. Throws ModulusMismatch.
bool is_factorization_sands(const ZmSet& a, const ZmSet& b);

/// Dilation property: k*A (elementwise) still has |A| elements and tiles
/// with B. Requires gcd(k, |A|) = 1 and A (+) B = Z_M; throws
/// PreconditionViolated otherwise.
bool dilate_check(const ZmSet& a, const ZmSet& b, Residue k);

struct Lemma24Report {
    bool hypothesis = false; // E = E (mod p^2qr) and |E| > max{q, r}
    bool conclusion = false; // {p^2qr, p^2q^2r, p^2qr^2} subset of Div(E)
    std::vector<Residue> missing; // members of the triple absent from Div(E)

    bool violated() const { return hypothesis && !conclusion; }
};

/// Evaluates the divisor-forcing statement on a concrete set.
Lemma24Report lemma24_check(const ZmSet& e, const ModulusContext& ctx);

} // namespace cyclotile
