#pragma once

#include <string>
#include <vector>

#include "asw/conductors.hpp"

namespace asw {

// Element of the dilatation-ring model L^(r): the fraction field completed
// along u(pi), with residue ring F_p(x, w, w'). The two embeddings of K are
//   u : identity on (pi, x)
//   v : pi -> pi (1 + pi^{r-1} w),  x -> x + pi^r w'.
struct DilatElem {
    RatFunc v;
    int r = 1;

    DilatElem(RatFunc f, int radius) : v(std::move(f)), r(radius) {
        if (radius < 1) throw std::invalid_argument("DilatElem: radius must be >= 1");
    }
    int characteristic() const { return v.characteristic(); }
    friend bool operator==(const DilatElem& a, const DilatElem& b) {
        return a.r == b.r && a.v == b.v;
    }
};

DilatElem embed_u(const LocalElem& a, int r);
DilatElem embed_v(const LocalElem& a, int r);

std::optional<long long> ord_pi(const DilatElem& a);

// Symbolic verification of the valuation bounds on Q_d(u(a), b) with
// b_i = v(a_i)/u(a_i) - 1. Report-only; failures carry the offending
// valuation.
struct ValuationReport {
    bool ok = true;
    std::vector<std::string> failures;
    int checks = 0;
};
ValuationReport check_valuation_lemmas(const WittVec& a, int r, long long m);

// Canonical Artin-Schreier class of the boundary fiber: linear form
// c_w * w + c_wp * w' over F_p(x, w, w') with no p-th-power monomials left.
struct ASLinearForm {
    RadicialElem c_w;
    RatFunc c_wp;
};

// Reduces R = sum_j u(a_j)^{p^j - 1} (v(a_j) - u(a_j)) mod u(pi) and
// canonicalizes the resulting Artin-Schreier class. Requires a in fil'_m
// with nonzero graded form (m = dt of the character).
ASLinearForm as_reduction(const WittVec& a, long long m);

// The independent characteristic-form oracle: runs total_dimension, then
// derives the form from the Artin-Schreier equation of the boundary fiber,
// mapping w -> dpi/pi^m and w' -> dx/pi^m with the global sign convention
// pinned by the p = 3 case delta_1(x/t^3).
std::optional<GradedNonLogForm> geometric_cform(const Character& chi);

}  // namespace asw
