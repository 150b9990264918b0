#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asw/multipoly.hpp"

namespace asw {

// Canonical rational function over F_p: gcd(num, den) = 1 and den is monic
// under graded lex, so value equality is structural equality.
class RatFunc {
public:
    explicit RatFunc(int p) : num_(p), den_(MultiPoly::constant(p, 1)) {}
    RatFunc(MultiPoly num, MultiPoly den);
    static RatFunc from(MultiPoly n);
    static RatFunc zero(int p) { return RatFunc(p); }
    static RatFunc constant(int p, long long c) { return from(MultiPoly::constant(p, c)); }
    static RatFunc variable(int p, Var v, int exponent = 1);

    int characteristic() const { return num_.characteristic(); }
    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc pow(long long e) const;  // negative exponents invert

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc derivative(Var v) const;

    bool uses(Var v) const { return num_.uses(v) || den_.uses(v); }

    // pi-adic style valuation with respect to a single variable:
    // min exponent of v in num minus min exponent in den; nullopt for 0.
    std::optional<long long> ord_at(Var v) const;

    RatFunc substitute(Var v, const MultiPoly& value) const;
    RatFunc rename(Var from, Var to) const;

    // Value at v = 0; requires ord_at(v) >= 0 (pole otherwise).
    RatFunc at_zero(Var v) const;

    std::string str() const;

private:
    MultiPoly num_, den_;
    void normalize();
    friend RatFunc ratfunc_from_factored(MultiPoly num,
                                         std::vector<std::pair<MultiPoly, int>> den_factors);
};

// Normalizing constructor: canonical reduced form of num/den.
RatFunc ratfunc_normalize(const MultiPoly& num, const MultiPoly& den);

// Canonical num / prod factor_i^{mult_i}, cancelling factor by factor; much
// cheaper than one gcd against the multiplied-out denominator.
RatFunc ratfunc_from_factored(MultiPoly num,
                              std::vector<std::pair<MultiPoly, int>> den_factors);

// p-th power test for f in F_p(x_v) (one non-constant variable) or constants.
// Implemented as vanishing derivative, valid over the perfect field F_p.
bool is_pth_power(const RatFunc& f);
RatFunc pth_root(const RatFunc& f);

// Element of the radicial extension F_p(y) of F_p(x), y^p = x.
struct RadicialElem {
    RatFunc val;  // rational function in y

    explicit RadicialElem(int p) : val(RatFunc::zero(p)) {}
    explicit RadicialElem(RatFunc v) : val(std::move(v)) {}

    bool is_zero() const { return val.is_zero(); }
    friend bool operator==(const RadicialElem& a, const RadicialElem& b) { return a.val == b.val; }
    friend bool operator!=(const RadicialElem& a, const RadicialElem& b) { return !(a == b); }
    friend RadicialElem operator+(const RadicialElem& a, const RadicialElem& b) {
        return RadicialElem(a.val + b.val);
    }
    friend RadicialElem operator-(const RadicialElem& a, const RadicialElem& b) {
        return RadicialElem(a.val - b.val);
    }
    RadicialElem operator-() const { return RadicialElem(-val); }
};

// The canonical embedding F_p(x) -> F_p(y), x -> y^p.
RadicialElem radicial_embed(const RatFunc& f_in_x);

// x -> y substitution; the result raised to the p-th power is the embedding
// of f, since f(y)^p = f(y^p).
RadicialElem radicial_root(const RatFunc& f_in_x);

// Inverse of the embedding when the element lies in the image.
std::optional<RatFunc> radicial_to_base(const RadicialElem& e);

}  // namespace asw
