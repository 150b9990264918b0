#include "asw/conductors.hpp"

namespace asw {

namespace {

// omega(a) = -sum a_i^{p^i - 1} da_i as a pair (dpi-coefficient,
// dx-coefficient) of exact rational functions.
std::pair<RatFunc, RatFunc> minus_fsd(const WittVec& a) {
    const int p = a.p;
    RatFunc A = RatFunc::zero(p), B = RatFunc::zero(p);
    long long w = 1;
    for (int i = 0; i < a.length(); ++i) {
        const RatFunc& ai = a.comp[i];
        if (!ai.is_zero()) {
            RatFunc f = ai.pow(w - 1);
            A += f * ai.derivative(Var::pi);
            B += f * ai.derivative(Var::x);
        }
        w *= p;
    }
    return {-A, -B};
}

RatFunc coeff_at(const RatFunc& f, long long e) {
    return tail_coeff(LocalElem(f), e);
}

void check_ord_at_least(const RatFunc& f, long long bound, const char* what) {
    auto o = f.ord_at(Var::pi);
    if (o && *o < bound) throw std::logic_error(std::string("graded form out of range: ") + what);
}

}  // namespace

GradedLogForm log_graded_form(const WittVec& a, long long n) {
    if (n < 1) throw std::invalid_argument("log_graded_form: level must be >= 1");
    if (!in_fil(a, n)) throw std::invalid_argument("log_graded_form: a not in fil_n");
    auto [A, B] = minus_fsd(a);
    check_ord_at_least(A, -(n + 1), "dpi/pi part");
    check_ord_at_least(B, -n, "dx part");
    return GradedLogForm(n, coeff_at(A, -(n + 1)), coeff_at(B, -n));
}

GradedNonLogForm nonlog_graded_form(const WittVec& a, long long m) {
    if (m < 2) throw std::invalid_argument("nonlog_graded_form: level must be >= 2");
    if (!in_fil_prime(a, m)) throw std::invalid_argument("nonlog_graded_form: a not in fil'_m");
    const int p = a.p;
    auto [A, B] = minus_fsd(a);
    check_ord_at_least(A, -m, "dpi part");
    check_ord_at_least(B, -m, "dx part");
    RadicialElem cpi = radicial_embed(coeff_at(A, -m));
    RatFunc cx = coeff_at(B, -m);
    if (p == 2 && m == 2) {
        // phi'~(2): add sqrt(residue of pi^2 a_0) dpi/pi^2. The class is
        // carried entirely by a_0; the other components are integral here.
        RatFunc c0 = a.length() > 0 ? coeff_at(a.comp[0], -2) : RatFunc::zero(p);
        cpi = cpi + radicial_root(c0);
    }
    return GradedNonLogForm(m, std::move(cpi), std::move(cx));
}

namespace {

// The graded quotients are not slotwise: Witt carries from twists at a
// higher component can land exactly on a lower component's window. So a
// reduction twist is extracted top component first, recomputing
// a - (F-1)(b) after every absorbed monomial; only what survives the
// carries must be a p-th power on a p-divisible exponent, and anything
// else falsifies the exact sequence.
struct TwistResult {
    WittVec b;
    WittVec remainder;  // a - (F-1)(b)
};

TwistResult extract_fbar_preimage(const WittVec& a,
                                  const std::vector<std::vector<long long>>& slots,
                                  const char* what) {
    const int p = a.p;
    const int s = a.length();
    TwistResult out{WittVec(p, s), a};
    for (int i = s - 1; i >= 0; --i) {
        for (long long e : slots[i]) {
            RatFunc c = coeff_at(out.remainder.comp[i], e);
            if (c.is_zero()) continue;
            if (e % p != 0)
                raise_exactness_violation(std::string(what) +
                                          " class survives on an exponent prime to p at component " +
                                          std::to_string(i));
            if (!is_pth_power(c))
                raise_exactness_violation(std::string(what) +
                                          " class coefficient is not a p-th power");
            out.b.comp[i] += pth_root(c) * RatFunc::variable(p, Var::pi, 1).pow(e / p);
            out.remainder = witt_sub(a, witt_sub(frobenius(out.b), out.b));
        }
    }
    return out;
}

// One logarithmic step at level n: the class lives on the single exponents
// -n/p^i of the components with p^i | n.
TwistResult log_reduction_twist(const WittVec& a, long long n) {
    std::vector<std::vector<long long>> slots(a.length());
    long long w = 1;
    for (int i = 0; i < a.length(); ++i) {
        if (n % w == 0) slots[i].push_back(-(n / w));
        w *= a.p;
    }
    return extract_fbar_preimage(a, slots, "log");
}

}  // namespace

SwanResult swan_conductor(const Character& chi) {
    WittVec a = chi.rep;
    while (true) {
        auto o = ord_W(a);
        long long n = (!o || *o >= 0) ? 0 : -*o;
        if (n == 0) return {0, a};
        GradedLogForm form = log_graded_form(a, n);
        if (!form.is_zero()) return {n, a};
        a = log_reduction_twist(a, n).remainder;
        auto o2 = ord_W(a);
        if (o2 && -*o2 >= n)
            throw std::logic_error("swan reduction did not make progress");
    }
}

std::optional<GradedLogForm> rsw(const Character& chi) {
    SwanResult r = swan_conductor(chi);
    if (r.sw == 0) return std::nullopt;
    GradedLogForm form = log_graded_form(r.reduced, r.sw);
    if (form.is_zero()) throw std::logic_error("rsw: zero form at sw level");
    return form;
}

WittVec nonlog_step_twist(const WittVec& a, long long m) {
    const int p = a.p;
    const int s = a.length();
    if (p == 2 && m == 2) {
        // a = (F-1)(c/pi) + rest with c lifting the square root of the
        // residue of pi^2 a_0 (the constructive step of the exceptional
        // proposition).
        RatFunc c0 = coeff_at(a.comp[0], -2);
        if (!is_pth_power(c0))
            raise_exactness_violation("exceptional class residue is not a square");
        WittVec b(p, s);
        b.comp[0] = pth_root(c0) / RatFunc::variable(p, Var::pi);
        return b;
    }
    std::vector<std::vector<long long>> slots(s);
    for (int i = 0; i < s; ++i) slots[i] = nonlog_class_window(p, s, m, i);
    WittVec b = extract_fbar_preimage(a, slots, "nonlog").b;
    if (!in_fil_dprime(b, m)) throw std::logic_error("extracted twist is not in fil''_m");
    return b;
}

TotalDimensionResult total_dimension(const Character& chi) {
    WittVec a = chi.rep;
    long long dt = 1;
    while (true) {
        long long m = least_fil_prime_level(a);
        if (m == 1) {
            dt = 1;
            break;
        }
        GradedNonLogForm form = nonlog_graded_form(a, m);
        if (!form.is_zero()) {
            dt = m;
            break;
        }
        WittVec b = nonlog_step_twist(a, m);
        a = witt_sub(a, witt_sub(frobenius(b), b));
        if (least_fil_prime_level(a) >= m)
            throw std::logic_error("dt reduction did not make progress");
    }
    // Cross-check dt in {sw, sw+1} (fil_{m-1} < fil'_m < fil_m).
    SwanResult sw = swan_conductor(chi);
    if (dt != sw.sw && dt != sw.sw + 1)
        throw std::logic_error("dt/sw relation violated: dt=" + std::to_string(dt) +
                               " sw=" + std::to_string(sw.sw));
    if ((dt == 1) != (sw.sw == 0))
        throw std::logic_error("dt=1 and sw=0 must coincide");
    return {dt, a};
}

std::optional<GradedNonLogForm> cform(const Character& chi) {
    TotalDimensionResult r = total_dimension(chi);
    if (r.dt == 1) return std::nullopt;
    GradedNonLogForm form = nonlog_graded_form(r.reduced, r.dt);
    if (form.is_zero()) throw std::logic_error("cform: zero form at dt level");
    return form;
}

}  // namespace asw
