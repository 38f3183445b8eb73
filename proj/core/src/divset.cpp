#include "cyclotile/divset.hpp"

#include <algorithm>
#include <set>

namespace cyclotile {

bool DivSet::contains(Residue d) const {
    return std::binary_search(divisors.begin(), divisors.end(), d);
}

Residue div_pair(Residue x, Residue y, Residue m) {
    const Residue d = (x + m - y % m) % m;
    return d == 0 ? m : gcd_u64(d, m);
}

DivSet div_set(const ZmSet& e) {
    if (e.empty()) fail(Errc::EmptySet, "Div of the empty set");
    return div_between(e, e);
}

DivSet div_between(const ZmSet& d, const ZmSet& e) {
    if (d.empty() || e.empty()) fail(Errc::EmptySet, "Div between empty sets");
    if (d.modulus() != e.modulus()) fail(Errc::ModulusMismatch, "Div between sets over different moduli");
    const Residue m = d.modulus();
    std::set<Residue> out;
    for (Residue x : d.elements())
        for (Residue y : e.elements()) out.insert(div_pair(x, y, m));
    return DivSet{m, std::vector<Residue>(out.begin(), out.end())};
}

bool is_factorization_brute(const ZmSet& a, const ZmSet& b) {
    if (a.modulus() != b.modulus()) fail(Errc::ModulusMismatch, "factorization test over different moduli");
    const Residue m = a.modulus();
    if (static_cast<Residue>(a.size()) * static_cast<Residue>(b.size()) != m) return false;
    std::vector<std::uint8_t> seen(m, 0);
    for (Residue x : a.elements())
        for (Residue y : b.elements()) {
            Residue s = x + y;
            if (s >= m) s -= m;
            if (seen[s]) return false;
            seen[s] = 1;
        }
    return true; // |A|*|B| = M and no residue hit twice => all hit once
}

bool is_factorization_sands(const ZmSet& a, const ZmSet& b) {
    if (a.modulus() != b.modulus()) fail(Errc::ModulusMismatch, "factorization test over different moduli");
    const Residue m = a.modulus();
    if (a.empty() || b.empty()) return false;
    if (static_cast<Residue>(a.size()) * static_cast<Residue>(b.size()) != m) return false;
    const DivSet da = div_set(a), db = div_set(b);
    std::vector<Residue> common;
    std::set_intersection(da.divisors.begin(), da.divisors.end(), db.divisors.begin(), db.divisors.end(),
                          std::back_inserter(common));
    return common.size() == 1 && common.front() == m;
}

bool dilate_check(const ZmSet& a, const ZmSet& b, Residue k) {
    if (gcd_u64(k, static_cast<Residue>(a.size())) != 1)
        fail(Errc::PreconditionViolated, "dilation factor shares a divisor with |A|");
    if (!is_factorization_brute(a, b)) fail(Errc::PreconditionViolated, "inputs do not factor Z_M");
    const Residue m = a.modulus();
    std::vector<Residue> dil;
    dil.reserve(a.size());
    for (Residue x : a.elements()) dil.push_back((x * (k % m)) % m);
    const ZmSet ka(m, std::move(dil));
    return ka.size() == a.size() && is_factorization_brute(ka, b);
}

Lemma24Report lemma24_check(const ZmSet& e, const ModulusContext& ctx) {
    if (e.modulus() != ctx.M) fail(Errc::ModulusMismatch, "set modulus differs from context M");
    Lemma24Report rep;
    const Residue triple[3] = {ctx.p2qr, ctx.p2q2r, ctx.p2qr2};
    if (e.empty()) return rep;

    bool congruent = true;
    const Residue base = e.elements().front() % ctx.p2qr;
    for (Residue x : e.elements())
        if (x % ctx.p2qr != base) {
            congruent = false;
            break;
        }
    rep.hypothesis = congruent && e.size() > std::max(ctx.q, ctx.r);

    const DivSet dv = div_set(e);
    rep.conclusion = true;
    for (Residue t : triple)
        if (!dv.contains(t)) {
            rep.conclusion = false;
            rep.missing.push_back(t);
        }
    return rep;
}

} // namespace cyclotile
