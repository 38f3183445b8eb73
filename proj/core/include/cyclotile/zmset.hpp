#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclotile/context.hpp"
#include "cyclotile/errors.hpp"

namespace cyclotile {

/// A finite subset of Z_M in canonical form: a strictly increasing list of
/// residues in [0, M). Immutable after construction.
class ZmSet {
public:
    ZmSet() = default;

    /// Canonicalizes (sorts, removes duplicates). Throws ParseError if an
    /// element is >= modulus or modulus is zero.
    ZmSet(Residue modulus, std::vector<Residue> elements);

    /// Same, but first reduces every element mod modulus.
    static ZmSet reduced(Residue modulus, std::vector<Residue> elements);

    Residue modulus() const { return modulus_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    const std::vector<Residue>& elements() const { return elements_; }
    bool contains(Residue x) const;

    friend bool operator==(const ZmSet&, const ZmSet&) = default;

private:
    Residue modulus_ = 0;
    std::vector<Residue> elements_;
};

/// E - x0 (mod M), elementwise.
ZmSet translate(const ZmSet& e, Residue x0);

/// C^l_j(E) = { x in E : x = j (mod l) }.
ZmSet residue_class(const ZmSet& e, Residue ell, Residue j);

/// C^l_{j,k}(E) = { x in E : x = j + k*l (mod l^2) }.
ZmSet residue_class2(const ZmSet& e, Residue ell, Residue j, Residue k);

/// True iff E + t = E (mod M).
bool is_periodic(const ZmSet& e, Residue t);

/// gcd of all elements with M; engaged with that gcd g when g > 1 (E is then
/// a subset of the proper subgroup gZ), disengaged when g = 1.
/// Throws EmptySet on an empty input.
std::optional<Residue> subgroup_containment(const ZmSet& e);

/// Exponent triple (i,j,k) with 0 <= i,j,k <= 2 addressing p^i q^j r^k.
struct PpartLabel {
    unsigned i = 0, j = 0, k = 0;
    friend bool operator==(const PartLabel&, const PartLabel&) = default;
};

/// ASCII name: "star" for (0,0,0), otherwise e.g. "p2qr" for p^2*q*r.
std::string part_label_name(const PartLabel& l);

/// The partition of E by the exact prime content of gcd(x, M): the part for
/// p^i q^j r^k holds the x whose gcd with M is exactly that divisor
/// (gcd(0, M) = M puts 0 in the p^2q^2r^2 part; content-free x form the
/// "star" part).
class Stratification {
public:
    const ZmSet& part(const PartLabel& l) const { return parts_[index(l)]; }
    const ZmSet& part(unsigned i, unsigned j, unsigned k) const { return part(PartLabel{i, j, k}); }
    const ZmSet& star() const { return part(0, 0, 0); }

    /// Labels of nonempty parts, in lexicographic (i,j,k) order.
    std::vector<PartLabel> nonempty_labels() const;

private:
    friend Stratification stratify(const ZmSet&, const ModulusContext&);
    static std::size_t index(const PartLabel& l) { return l.i * 9 + l.j * 3 + l.k; }
    std::array<ZmSet, 27> parts_;
};

Stratification stratify(const ZmSet& e, const ModulusContext& ctx);

/// The cumulative part E_{p^i q^j r^k}: x divisible by the primes with a
/// positive exponent (at least that power) and coprime to the primes with a
/// zero exponent. (0,0,0) gives E* = E \ (pZ u qZ u rZ).
ZmSet divisible_part(const ZmSet& e, const ModulusContext& ctx, unsigned i, unsigned j, unsigned k);

} // namespace cyclotile
