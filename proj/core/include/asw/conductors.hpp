#pragma once

#include <optional>

#include "asw/errors.hpp"
#include "asw/local_field.hpp"
#include "asw/witt.hpp"

namespace asw {

// A character chi = delta_s(a) of H^1(K, Q/Z), carried by an explicit Witt
// representative over K = F_p(x)(pi). Representatives differing by
// (F-1)(b) define the same character; every exported invariant is
// well-defined on such pairs.
struct Character {
    int p = 2;
    int s = 0;
    WittVec rep;

    Character(int prime, WittVec r) : p(prime), s(r.length()), rep(std::move(r)) {
        require_witt_size(prime, s);
        if (rep.p != prime) throw std::invalid_argument("mixed characteristics");
    }
};

// Class of (alpha dpi/pi + beta dx)/pi^n in gr_n of the logarithmic
// filtration; alpha, beta live in the residue field F_p(x).
struct GradedLogForm {
    long long level = 1;
    RatFunc alpha, beta;

    GradedLogForm(long long n, RatFunc a, RatFunc b)
        : level(n), alpha(std::move(a)), beta(std::move(b)) {}
    bool is_zero() const { return alpha.is_zero() && beta.is_zero(); }
    friend bool operator==(const GradedLogForm& a, const GradedLogForm& b) {
        return a.level == b.level && a.alpha == b.alpha && a.beta == b.beta;
    }
    friend bool operator!=(const GradedLogForm& a, const GradedLogForm& b) { return !(a == b); }
};

// Class of (c_pi dpi + c_x dx)/pi^m in gr'_m; c_pi may lie in the radicial
// extension F_p(y), but only when (p, m) = (2, 2).
struct GradedNonLogForm {
    long long level = 2;
    RadicialElem c_pi;
    RatFunc c_x;

    GradedNonLogForm(long long m, RadicialElem cpi, RatFunc cx)
        : level(m), c_pi(std::move(cpi)), c_x(std::move(cx)) {}
    bool is_zero() const { return c_pi.is_zero() && c_x.is_zero(); }
    // whether c_pi genuinely needs the radicial extension
    bool radicial() const { return !radicial_to_base(c_pi).has_value(); }
    friend bool operator==(const GradedNonLogForm& a, const GradedNonLogForm& b) {
        return a.level == b.level && a.c_pi == b.c_pi && a.c_x == b.c_x;
    }
    friend bool operator!=(const GradedNonLogForm& a, const GradedNonLogForm& b) {
        return !(a == b);
    }
};

// Class of -sum a_i^{p^i - 1} d a_i in gr_n (log filtration). Requires
// a in fil_n.
GradedLogForm log_graded_form(const WittVec& a, long long n);

// Class of the same form in gr'_m, including the exceptional (p, m) = (2, 2)
// square-root term. Requires a in fil'_m.
GradedNonLogForm nonlog_graded_form(const WittVec& a, long long m);

// The twist b in fil''_m of one non-logarithmic reduction step at level m
// (including the exceptional (p, m) = (2, 2) square-root step); requires
// that the graded form of a at level m vanishes. Also used by the
// divisor-level machinery.
WittVec nonlog_step_twist(const WittVec& a, long long m);

struct SwanResult {
    long long sw = 0;
    WittVec reduced;  // lies in fil_sw; algorithm-dependent representative
};
SwanResult swan_conductor(const Character& chi);

std::optional<GradedLogForm> rsw(const Character& chi);

struct TotalDimensionResult {
    long long dt = 1;
    WittVec reduced;  // lies in fil'_dt
};
TotalDimensionResult total_dimension(const Character& chi);

std::optional<GradedNonLogForm> cform(const Character& chi);

}  // namespace asw
