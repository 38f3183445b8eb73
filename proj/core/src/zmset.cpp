#include "cyclotile/zmset.hpp"

#include <algorithm>

namespace cyclotile {

ZmSet::ZmSet(Residue modulus, std::vector<Residue> elements) : modulus_(modulus), elements_(std::move(elements)) {
    if (modulus_ == 0) fail(Errc::ParseError, "modulus must be positive");
    for (Residue x : elements_)
        if (x >= modulus_)
            fail(Errc::ParseError, "element " + std::to_string(x) + " out of range [0, " + std::to_string(modulus_) + ")");
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

ZmSet ZmSet::reduced(Residue modulus, std::vector<Residue> elements) {
    if (modulus == 0) fail(Errc::ParseError, "modulus must be positive");
    for (Residue& x : elements) x %= modulus;
    return ZmSet(modulus, std::move(elements));
}

bool ZmSet::contains(Residue x) const {
    return std::binary_search(elements_.begin(), elements_.end(), x);
}

ZmSet translate(const ZmSet& e, Residue x0) {
    const Residue m = e.modulus();
    x0 %= m;
    std::vector<Residue> out;
    out.reserve(e.size());
    for (Residue x : e.elements()) out.push_back((x + m - x0) % m);
    return ZmSet(m, std::move(out));
}

ZmSet residue_class(const ZmSet& e, Residue ell, Residue j) {
    std::vector<Residue> out;
    for (Residue x : e.elements())
        if (x % ell == j) out.push_back(x);
    return ZmSet(e.modulus(), std::move(out));
}

ZmSet residue_class2(const ZmSet& e, Residue ell, Residue j, Residue k) {
    const Residue ell2 = ell * ell;
    const Residue target = (j + k * ell) % ell2;
    std::vector<Residue> out;
    for (Residue x : e.elements())
        if (x % ell2 == target) out.push_back(x);
    return ZmSet(e.modulus(), std::move(out));
}

bool is_periodic(const ZmSet& e, Residue t) {
    const Residue m = e.modulus();
    t %= m;
    if (t == 0 || e.empty()) return true;
    for (Residue x : e.elements())
        if (!e.contains((x + t) % m)) return false;
    return true;
}

std::optional<Residue> subgroup_containment(const ZmSet& e) {
    if (e.empty()) fail(Errc::EmptySet, "subgroup containment of the empty set");
    Residue g = e.modulus();
    for (Residue x : e.elements()) g = gcd_u64(g, x);
    if (g > 1) return g;
    return std::nullopt;
}

std::string part_label_name(const PartLabel& l) {
    if (l.i == 0 && l.j == 0 && l.k == 0) return "star";
    std::string s;
    auto app = [&s](char c, unsigned e) {
        if (e == 0) return;
        s += c;
        if (e > 1) s += static_cast<char>('0' + e);
    };
    app('p', l.i);
    app('q', l.j);
    app('r', l.k);
    return s;
}

namespace {

unsigned exponent_in(Residue x, Residue prime, unsigned cap) {
    unsigned e = 0;
    while (e < cap && x % prime == 0) {
        x /= prime;
        ++e;
    }
    return e;
}

} // namespace

Stratification stratify(const ZmSet& e, const ModulusContext& ctx) {
    if (e.modulus() != ctx.M) fail(Errc::ModulusMismatch, "set modulus differs from context M");
    std::array<std::vector<Residue>, 27> buckets;
    for (Residue x : e.elements()) {
        const Residue g = gcd_u64(x, ctx.M); // gcd(0, M) = M
        const PartLabel l{exponent_in(g, ctx.p, 2), exponent_in(g, ctx.q, 2), exponent_in(g, ctx.r, 2)};
        buckets[l.i * 9 + l.j * 3 + l.k].push_back(x);
    }
    Stratification s;
    for (std::size_t t = 0; t < 27; ++t) s.parts_[t] = ZmSet(ctx.M, std::move(buckets[t]));
    return s;
}

std::vector<PartLabel> Stratification::nonempty_labels() const {
    std::vector<PartLabel> out;
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j)
            for (unsigned k = 0; k < 3; ++k)
                if (!part(i, j, k).empty()) out.push_back(PartLabel{i, j, k});
    return out;
}

ZmSet divisible_part(const ZmSet& e, const ModulusContext& ctx, unsigned i, unsigned j, unsigned k) {
    if (e.modulus() != ctx.M) fail(Errc::ModulusMismatch, "set modulus differs from context M");
    const Residue primes[3] = {ctx.p, ctx.q, ctx.r};
    const unsigned exps[3] = {i, j, k};
    std::vector<Residue> out;
    for (Residue x : e.elements()) {
        const Residue g = gcd_u64(x, ctx.M);
        bool ok = true;
        for (int t = 0; t < 3 && ok; ++t) {
            const unsigned have = exponent_in(g, primes[t], 2);
            ok = exps[t] == 0 ? (have == 0) : (have >= exps[t]);
        }
        if (ok) out.push_back(x);
    }
    return ZmSet(ctx.M, std::move(out));
}

} // namespace cyclotile
