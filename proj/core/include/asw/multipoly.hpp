#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "asw/prime_field.hpp"

namespace asw {

// Fixed variable universe for everything coefficient-side:
//   pi  - uniformizer of the local field
//   x   - imperfection variable of the residue field F_p(x)
//   y   - radicial generator, y^p = x
//   w   - dilatation coordinate (v(pi)-u(pi))/u(pi)^r
//   wp  - dilatation coordinate (v(x)-u(x))/u(pi)^r
//   x1, x2 - coordinates on the affine plane
enum class Var : int { pi = 0, x = 1, y = 2, w = 3, wp = 4, x1 = 5, x2 = 6 };

inline constexpr int kNumVars = 7;

const char* var_name(Var v);

// Exponent vector; entries are >= 0 (Laurent behaviour lives in RatFunc).
using Mono = std::array<int16_t, kNumVars>;

inline Mono mono_one() { return Mono{0, 0, 0, 0, 0, 0, 0}; }

int mono_degree(const Mono& m);

// Graded lexicographic: total degree first, then lex on exponents.
struct MonoGradedLex {
    bool operator()(const Mono& a, const Mono& b) const;
};

// Sparse multivariate polynomial over F_p. No zero coefficients are stored;
// the term map is ordered by graded lex, which fixes the canonical term
// order used for leading terms and denominator normalization.
class MultiPoly {
public:
    using TermMap = std::map<Mono, int, MonoGradedLex>;

    explicit MultiPoly(int p);
    static MultiPoly zero(int p) { return MultiPoly(p); }
    static MultiPoly constant(int p, long long c);
    static MultiPoly variable(int p, Var v, int exponent = 1);
    static MultiPoly monomial(int p, const Mono& m, long long c);

    int characteristic() const { return p_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_one() const;
    const TermMap& terms() const { return terms_; }

    Fp coeff(const Mono& m) const;
    void set_coeff(const Mono& m, long long c);

    int total_degree() const;  // -1 for zero
    bool uses(Var v) const;
    int max_exponent(Var v) const;           // 0 for zero polynomial
    std::optional<int> min_exponent(Var v) const;  // nullopt for zero

    const std::pair<const Mono, int>& leading_term() const;  // graded-lex max

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly pow(long long e) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.p_ == b.p_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly derivative(Var v) const;

    // Substitutes `value` for `v`; value must be polynomial.
    MultiPoly substitute(Var v, const MultiPoly& value) const;
    MultiPoly substitute_zero(Var v) const;
    MultiPoly rename(Var from, Var to) const;        // `to` must not occur
    MultiPoly scale_exponents(Var v, int k) const;   // v^e -> v^{ke}
    // Divides every exponent of v by k; requires k | e for all terms.
    MultiPoly unscale_exponents(Var v, int k) const;

    // Multiplies / divides by v^k (k >= 0); division requires divisibility.
    MultiPoly shift_exponent(Var v, int k) const;

    MultiPoly monic() const;  // leading coefficient scaled to 1
    Fp leading_coeff() const;

    std::string str() const;  // debug form

private:
    int p_;
    TermMap terms_;
};

// Exact division: throws std::domain_error when b is zero, logic_error when
// the division is not exact.
MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b);

// Exact division attempt; nullopt when b does not divide a.
std::optional<MultiPoly> try_divide(const MultiPoly& a, const MultiPoly& b);

// Gcd over F_p[vars], normalized monic. gcd(0,0) = 0.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

}  // namespace asw
