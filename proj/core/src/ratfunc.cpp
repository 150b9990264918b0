#include "asw/ratfunc.hpp"

#include <sstream>

namespace asw {

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.characteristic() != den_.characteristic())
        throw std::invalid_argument("mixed characteristics");
    normalize();
}

RatFunc RatFunc::from(MultiPoly n) {
    int p = n.characteristic();
    return RatFunc(std::move(n), MultiPoly::constant(p, 1));
}

RatFunc RatFunc::variable(int p, Var v, int exponent) {
    return from(MultiPoly::variable(p, v, exponent));
}

void RatFunc::normalize() {
    if (den_.is_zero()) throw std::domain_error("division by zero");
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(characteristic(), 1);
        return;
    }
    MultiPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
    }
    Fp lc = den_.leading_coeff();
    if (lc.v != 1) {
        MultiPoly inv = MultiPoly::constant(characteristic(), fp_inv(lc).v);
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFunc ratfunc_normalize(const MultiPoly& num, const MultiPoly& den) {
    return RatFunc(num, den);
}

RatFunc ratfunc_from_factored(MultiPoly num,
                              std::vector<std::pair<MultiPoly, int>> den_factors) {
    const int p = num.characteristic();
    MultiPoly den = MultiPoly::constant(p, 1);
    if (num.is_zero()) return RatFunc::zero(p);
    // Process a worklist: every factor is cancelled against num as far as
    // it goes; a partial common divisor splits the factor.
    while (!den_factors.empty()) {
        auto [f, k] = std::move(den_factors.back());
        den_factors.pop_back();
        if (k <= 0) continue;
        if (f.is_zero()) throw std::domain_error("division by zero");
        if (f.is_constant()) continue;  // absorbed by the final monic scaling
        while (k > 0) {
            auto q = try_divide(num, f);
            if (!q) break;
            num = std::move(*q);
            --k;
        }
        if (k == 0) continue;
        MultiPoly g = poly_gcd(f, num);
        if (g.is_constant()) {
            den = den * f.pow(k);
        } else {
            den_factors.emplace_back(g, k);
            den_factors.emplace_back(divide_exact(f, g), k);
        }
    }
    // num and den are now coprime; only the monic scaling remains.
    Fp lc = den.leading_coeff();
    RatFunc r(p);
    if (lc.v != 1) {
        MultiPoly inv = MultiPoly::constant(p, fp_inv(lc).v);
        num = num * inv;
        den = den * inv;
    }
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return ratfunc_from_factored(a.num_ * b.den_ + b.num_ * a.den_,
                                 {{a.den_, 1}, {b.den_, 1}});
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return ratfunc_from_factored(a.num_ * b.den_ - b.num_ * a.den_,
                                 {{a.den_, 1}, {b.den_, 1}});
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return ratfunc_from_factored(a.num_ * b.num_, {{a.den_, 1}, {b.den_, 1}});
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return ratfunc_from_factored(a.num_ * b.den_, {{a.den_, 1}, {b.num_, 1}});
}

RatFunc RatFunc::pow(long long e) const {
    // canonical parts stay coprime under powers, so no gcd is needed
    RatFunc r(characteristic());
    if (e < 0) {
        if (is_zero()) throw std::domain_error("division by zero");
        r.num_ = den_.pow(-e);
        r.den_ = num_.pow(-e);
        Fp lc = r.den_.leading_coeff();
        if (lc.v != 1) {
            MultiPoly inv = MultiPoly::constant(characteristic(), fp_inv(lc).v);
            r.num_ = r.num_ * inv;
            r.den_ = r.den_ * inv;
        }
        return r;
    }
    r.num_ = num_.pow(e);
    r.den_ = den_.pow(e);
    return r;
}

RatFunc RatFunc::derivative(Var v) const {
    // quotient rule; denominator square is reduced away by normalization
    return RatFunc(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

std::optional<long long> RatFunc::ord_at(Var v) const {
    if (is_zero()) return std::nullopt;
    auto n = num_.min_exponent(v), d = den_.min_exponent(v);
    return static_cast<long long>(*n) - static_cast<long long>(*d);
}

RatFunc RatFunc::substitute(Var v, const MultiPoly& value) const {
    return RatFunc(num_.substitute(v, value), den_.substitute(v, value));
}

RatFunc RatFunc::rename(Var from, Var to) const {
    RatFunc r = *this;
    r.num_ = r.num_.rename(from, to);
    r.den_ = r.den_.rename(from, to);
    return r;
}

RatFunc RatFunc::at_zero(Var v) const {
    if (is_zero()) return *this;
    auto o = ord_at(v);
    if (*o < 0) throw std::domain_error("at_zero: pole at " + std::string(var_name(v)));
    int k = *den_.min_exponent(v);
    MultiPoly n = num_.shift_exponent(v, -k).substitute_zero(v);
    MultiPoly d = den_.shift_exponent(v, -k).substitute_zero(v);
    return RatFunc(std::move(n), std::move(d));
}

std::string RatFunc::str() const {
    if (is_polynomial()) return num_.str();
    std::ostringstream os;
    bool pn = num_.is_monomial() || num_.is_constant();
    bool pd = den_.is_monomial();
    os << (pn ? "" : "(") << num_.str() << (pn ? "" : ")") << "/" << (pd ? "" : "(")
       << den_.str() << (pd ? "" : ")");
    return os.str();
}

namespace {

// The single non-constant variable of f, if there is at most one.
std::optional<Var> single_var(const RatFunc& f) {
    std::optional<Var> found;
    for (int i = 0; i < kNumVars; ++i) {
        Var v = static_cast<Var>(i);
        if (!f.uses(v)) continue;
        if (found) throw std::invalid_argument("unsupported: more than one variable");
        found = v;
    }
    return found;
}

// In canonical form f' = 0 forces num' = den' = 0 (gcd(num, den) = 1), so
// both are polynomials in v^p and the root is taken componentwise.
MultiPoly poly_pth_root(const MultiPoly& f, int p) {
    MultiPoly r(f.characteristic());
    for (const auto& [m, c] : f.terms()) {
        Mono n = m;
        for (int i = 0; i < kNumVars; ++i) {
            if (n[i] % p != 0) throw std::domain_error("not a p-th power");
            n[i] = static_cast<int16_t>(n[i] / p);
        }
        r.set_coeff(n, fp_pth_root(Fp(c, f.characteristic())).v);
    }
    return r;
}

}  // namespace

bool is_pth_power(const RatFunc& f) {
    auto v = single_var(f);
    if (!v) return true;  // constants over a perfect field
    return f.derivative(*v).is_zero();
}

RatFunc pth_root(const RatFunc& f) {
    if (!is_pth_power(f)) throw std::domain_error("not a p-th power");
    int p = f.characteristic();
    return RatFunc(poly_pth_root(f.num(), p), poly_pth_root(f.den(), p));
}

RadicialElem radicial_embed(const RatFunc& f_in_x) {
    if (f_in_x.uses(Var::y)) throw std::invalid_argument("radicial_embed: input already uses y");
    int p = f_in_x.characteristic();
    RatFunc g = f_in_x.rename(Var::x, Var::y);
    return RadicialElem(RatFunc(g.num().scale_exponents(Var::y, p),
                                g.den().scale_exponents(Var::y, p)));
}

RadicialElem radicial_root(const RatFunc& f_in_x) {
    if (f_in_x.uses(Var::y)) throw std::invalid_argument("radicial_root: input already uses y");
    return RadicialElem(f_in_x.rename(Var::x, Var::y));
}

std::optional<RatFunc> radicial_to_base(const RadicialElem& e) {
    int p = e.val.characteristic();
    for (const auto& part : {e.val.num(), e.val.den()})
        for (const auto& [m, c] : part.terms())
            if (m[static_cast<int>(Var::y)] % p != 0) return std::nullopt;
    RatFunc r(e.val.num().unscale_exponents(Var::y, p),
              e.val.den().unscale_exponents(Var::y, p));
    return r.rename(Var::y, Var::x);
}

}  // namespace asw
