#include "cyclotile/intpoly.hpp"

#include <map>
#include <mutex>

#include "cyclotile/divset.hpp"

namespace cyclotile {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(long c) {
    if (c == 0) return IntPoly();
    return IntPoly({BigInt(c)});
}

IntPoly IntPoly::monomial(std::size_t d) {
    std::vector<BigInt> c(d + 1);
    c[d] = 1;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::x_pow_minus_one(std::size_t s) {
    std::vector<BigInt> c(s + 1);
    c[s] = 1;
    c[0] = -1;
    return IntPoly(std::move(c));
}

const BigInt& IntPoly::coeff(std::size_t i) const {
    static const BigInt zero = 0;
    return i < c_.size() ? c_[i] : zero;
}

BigInt IntPoly::eval_at_one() const {
    BigInt s = 0;
    for (const BigInt& c : c_) s += c;
    return s;
}

IntPoly IntPoly::compose_x_pow(std::size_t k) const {
    if (is_zero() || k == 0) return k == 0 ? IntPoly(std::vector<BigInt>{eval_at_one()}) : IntPoly();
    std::vector<BigInt> out((c_.size() - 1) * k + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) out[i * k] = c_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<BigInt> out(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + o.coeff(i);
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<BigInt> out(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - o.coeff(i);
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<BigInt> out(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            out[i + j] += c_[i] * o.c_[j];
        }
    }
    return IntPoly(std::move(out));
}

std::pair<IntPoly, IntPoly> IntPoly::divmod_monic(const IntPoly& divisor) const {
    if (divisor.is_zero() || divisor.c_.back() != 1)
        fail(Errc::PreconditionViolated, "divisor must be monic");
    std::vector<BigInt> rem = c_;
    const std::size_t dd = divisor.c_.size() - 1;
    if (rem.size() <= dd) return {IntPoly(), IntPoly(std::move(rem))};
    std::vector<BigInt> quot(rem.size() - dd);
    for (std::size_t i = rem.size(); i-- > dd;) {
        BigInt f = rem[i];
        if (f == 0) continue;
        quot[i - dd] = f;
        rem[i] = 0;
        for (std::size_t t = 0; t < dd; ++t) rem[i - dd + t] -= f * divisor.c_[t];
    }
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

const IntPoly& cyclotomic_poly(std::size_t s) {
    if (s == 0) fail(Errc::PreconditionViolated, "cyclotomic index must be >= 1");
    static std::map<std::size_t, IntPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(s);
    if (it != cache.end()) return it->second;

    // Phi_s = (x^s - 1) / prod_{d | s, d < s} Phi_d, computed bottom-up so
    // the recursion never re-enters the lock.
    std::vector<std::size_t> pending{s};
    while (!pending.empty()) {
        const std::size_t n = pending.back();
        if (cache.count(n)) {
            pending.pop_back();
            continue;
        }
        bool ready = true;
        for (std::size_t d = 1; d < n; ++d)
            if (n % d == 0 && !cache.count(d)) {
                pending.push_back(d);
                ready = false;
            }
        if (!ready) continue;
        pending.pop_back();
        IntPoly acc = IntPoly::x_pow_minus_one(n);
        for (std::size_t d = 1; d < n; ++d) {
            if (n % d != 0) continue;
            auto [quot, rem] = acc.divmod_monic(cache.at(d));
            if (!rem.is_zero()) fail(Errc::InternalContradiction, "cyclotomic division not exact");
            acc = std::move(quot);
        }
        cache.emplace(n, std::move(acc));
    }
    return cache.at(s);
}

IntPoly mask_poly(const ZmSet& e) {
    if (e.empty()) return IntPoly();
    std::vector<BigInt> c(e.elements().back() + 1);
    for (Residue x : e.elements()) c[x] = 1;
    return IntPoly(std::move(c));
}

bool phi_divides(std::size_t s, const IntPoly& poly) {
    if (s == 0) fail(Errc::PreconditionViolated, "cyclotomic index must be >= 1");
    // fold exponents mod s: valid since x^s = 1 modulo Phi_s
    std::vector<BigInt> folded(s);
    const auto& c = poly.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) folded[i % s] += c[i];
    auto [quot, rem] = IntPoly(std::move(folded)).divmod_monic(cyclotomic_poly(s));
    (void)quot;
    return rem.is_zero();
}

bool phi_divides(std::size_t s, const ZmSet& e) { return phi_divides(s, mask_poly(e)); }

bool phi_power_identity_check(std::size_t n, std::size_t p) {
    if (n == 0 || p == 0) fail(Errc::PreconditionViolated, "indices must be >= 1");
    const IntPoly lhs = cyclotomic_poly(n).compose_x_pow(p);
    if (n % p == 0) return lhs == cyclotomic_poly(n * p);
    return lhs == cyclotomic_poly(n) * cyclotomic_poly(n * p);
}

AverageReport average_property_check(const ZmSet& a, const ZmSet& b, Axis axis, const ModulusContext& ctx) {
    if (a.modulus() != ctx.M || b.modulus() != ctx.M)
        fail(Errc::PreconditionViolated, "sets do not live over the context modulus");
    if (a.size() != ctx.pqr || b.size() != ctx.pqr)
        fail(Errc::PreconditionViolated, "|A| and |B| must equal pqr");
    if (!is_factorization_brute(a, b)) fail(Errc::PreconditionViolated, "A and B do not factor Z_M");

    const Residue ell = ctx.prime(axis);
    AverageReport rep;
    rep.applicable = phi_divides(ell, a);
    rep.biconditional_ok = rep.applicable == phi_divides(ell * ell, b);
    if (!rep.applicable) return rep;

    const Residue expect_a = ctx.pqr / ell;
    for (Residue j = 0; j < ell; ++j) {
        if (residue_class(a, ell, j).size() != expect_a) {
            rep.class_counts_ok = false;
            rep.failing_a_classes.push_back(j);
        }
    }
    for (Residue j = 0; j < ell; ++j) {
        const std::size_t cj = residue_class(b, ell, j).size();
        for (Residue k = 0; k < ell; ++k) {
            if (residue_class2(b, ell, j, k).size() * ell != cj) {
                rep.refined_counts_ok = false;
                rep.failing_b_classes.emplace_back(j, k);
            }
        }
    }
    return rep;
}

} // namespace cyclotile
