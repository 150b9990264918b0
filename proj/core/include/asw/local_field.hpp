#pragma once

#include <map>

#include "asw/ratfunc.hpp"

namespace asw {

// Element of K = F_p(x)((pi)) restricted to the computable subfield
// F_p(x)(pi). The model is exact and closed under every operation the
// reduction algorithms perform, so no precision management exists anywhere.
struct LocalElem {
    RatFunc v;

    explicit LocalElem(int p) : v(RatFunc::zero(p)) {}
    explicit LocalElem(RatFunc f);

    int characteristic() const { return v.characteristic(); }
    friend bool operator==(const LocalElem& a, const LocalElem& b) { return a.v == b.v; }
    friend bool operator!=(const LocalElem& a, const LocalElem& b) { return !(a == b); }
};

// pi-adic valuation; nullopt encodes +infinity (the zero element).
std::optional<long long> ord(const LocalElem& a);

// Exact pi-adic expansion of a restricted to [lo, hi); zero coefficients
// are not stored.
struct LaurentTail {
    long long lo = 0, hi = 0;
    std::map<long long, RatFunc> coeff;  // rational functions in x
};

LaurentTail tail(const LocalElem& a, long long lo, long long hi);

// Single expansion coefficient of pi^e.
RatFunc tail_coeff(const LocalElem& a, long long e);

// da = (da/dpi) dpi + (da/dx) dx over the p-basis {pi, x}.
std::pair<LocalElem, LocalElem> d_form(const LocalElem& a);

}  // namespace asw
