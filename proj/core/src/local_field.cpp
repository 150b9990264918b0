#include "asw/local_field.hpp"

#include <vector>

namespace asw {

LocalElem::LocalElem(RatFunc f) : v(std::move(f)) {
    for (Var bad : {Var::y, Var::w, Var::wp, Var::x1, Var::x2})
        if (v.uses(bad))
            throw std::invalid_argument("LocalElem: variable outside {pi, x}");
}

std::optional<long long> ord(const LocalElem& a) { return a.v.ord_at(Var::pi); }

namespace {

// Coefficients of f as a polynomial in pi, as rational functions in x.
std::map<int, RatFunc> pi_coeffs(const MultiPoly& f) {
    std::map<int, RatFunc> out;
    int p = f.characteristic();
    std::map<int, MultiPoly> grouped;
    for (const auto& [m, c] : f.terms()) {
        Mono rest = m;
        int e = rest[static_cast<int>(Var::pi)];
        rest[static_cast<int>(Var::pi)] = 0;
        auto [it, fresh] = grouped.try_emplace(e, p);
        it->second.set_coeff(rest, it->second.coeff(rest).v + c);
    }
    for (auto& [e, poly] : grouped) out.emplace(e, RatFunc::from(std::move(poly)));
    return out;
}

}  // namespace

LaurentTail tail(const LocalElem& a, long long lo, long long hi) {
    if (lo > hi) throw std::invalid_argument("tail: lo > hi");
    LaurentTail t;
    t.lo = lo;
    t.hi = hi;
    if (a.v.is_zero() || lo == hi) return t;

    const int p = a.characteristic();
    auto o = ord(a);
    if (*o >= hi) return t;

    // a = pi^v * N0/D0 with N0, D0 regular with nonzero value at pi = 0;
    // invert D0 as a power series up to the window.
    int nmin = *a.v.num().min_exponent(Var::pi);
    int dmin = *a.v.den().min_exponent(Var::pi);
    auto N = pi_coeffs(a.v.num().shift_exponent(Var::pi, -nmin));
    auto D = pi_coeffs(a.v.den().shift_exponent(Var::pi, -dmin));

    long long need = hi - *o;  // series coefficients c_0 .. c_{need-1}
    RatFunc d0 = D.at(0);
    std::vector<RatFunc> c;
    c.reserve(static_cast<size_t>(need));
    for (long long j = 0; j < need; ++j) {
        RatFunc s = RatFunc::zero(p);
        auto nj = N.find(static_cast<int>(j));
        if (nj != N.end()) s = nj->second;
        for (long long k = 1; k <= j; ++k) {
            auto dk = D.find(static_cast<int>(k));
            if (dk == D.end()) continue;
            s -= dk->second * c[static_cast<size_t>(j - k)];
        }
        c.push_back(s / d0);
    }
    for (long long e = std::max(lo, *o); e < hi; ++e) {
        const RatFunc& ce = c[static_cast<size_t>(e - *o)];
        if (!ce.is_zero()) t.coeff.emplace(e, ce);
    }
    return t;
}

RatFunc tail_coeff(const LocalElem& a, long long e) {
    LaurentTail t = tail(a, e, e + 1);
    auto it = t.coeff.find(e);
    return it == t.coeff.end() ? RatFunc::zero(a.characteristic()) : it->second;
}

std::pair<LocalElem, LocalElem> d_form(const LocalElem& a) {
    return {LocalElem(a.v.derivative(Var::pi)), LocalElem(a.v.derivative(Var::x))};
}

}  // namespace asw
