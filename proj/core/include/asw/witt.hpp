#pragma once

#include <array>
#include <map>
#include <vector>

#include "asw/ratfunc.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace asw {

// ---------------------------------------------------------------------------
// Universal integral polynomials.
//
// Witt vectors are written (a_{s-1}, ..., a_0): component a_i
// carries weight p^i, a_0 is rightmost. Storage is comp[i] = a_i. With the
// ghost components
//     G_d(a) = sum_{i=d}^{s-1} p^{s-1-i} a_i^{p^{i-d}},       0 <= d <= s-1,
// addition/negation are solved exactly over the rationals top-down from
// d = s-1 and are integral; the integral tables are then reduced mod p.

// Slots 0..2 hold X_i/T_i, slots 3..5 hold Y_i/S_i (s <= 3).
inline constexpr int kUSlots = 6;
using UMono = std::array<int16_t, kUSlots>;

struct UPolyZ {
    std::map<UMono, boost::multiprecision::cpp_int> terms;  // no zero coefficients

    bool is_zero() const { return terms.empty(); }
    void add(const UMono& m, const boost::multiprecision::cpp_int& c);
    friend bool operator==(const UPolyZ& a, const UPolyZ& b) { return a.terms == b.terms; }
};

bool witt_size_supported(int p, int s);
void require_witt_size(int p, int s);

struct UniversalWittTables {
    int p = 0, s = 0;
    std::vector<UPolyZ> sum;  // sum[d]: components of x + y, in X_i, Y_i
    std::vector<UPolyZ> neg;  // neg[d]: components of -x, in X_i
};

// Cached per (p, s); thread-safe single initialization.
const UniversalWittTables& build_universal_tables(int p, int s);

struct QPolynomials {
    int p = 0, s = 0;
    std::vector<UPolyZ> q;  // q[d] in T_d..T_{s-1}, S_d..S_{s-1}
};

// Q_d(T, S) from the ghost relation
//   sum p^{s-1-i} (T_i(1+S_i))^{p^{i-d}} = sum p^{s-1-i} T_i^{p^{i-d}}
//                                        + sum p^{s-1-i} Q_i^{p^{i-d}},
// so (Q_{s-1}, ..., Q_0) is the Witt vector x' - x for x'_i = x_i(1+y_i).
const QPolynomials& q_polys(int p, int s);

// Evaluates an integral universal polynomial mod p; xs/ys supply the X/T and
// Y/S slots (entries 0..s-1).
RatFunc eval_upoly_mod_p(const UPolyZ& f, int p, const std::vector<RatFunc>& xs,
                         const std::vector<RatFunc>& ys);

// ---------------------------------------------------------------------------
// Witt vectors over an F_p rational function ring.

struct WittVec {
    int p = 2;
    std::vector<RatFunc> comp;  // comp[i] = a_i, weight p^i

    WittVec() = default;
    WittVec(int prime, int length) : p(prime), comp(length, RatFunc::zero(prime)) {
        require_supported_prime(prime);
    }

    int length() const { return static_cast<int>(comp.size()); }
    bool is_zero() const;

    friend bool operator==(const WittVec& a, const WittVec& b) {
        return a.p == b.p && a.comp == b.comp;
    }
    friend bool operator!=(const WittVec& a, const WittVec& b) { return !(a == b); }
};

WittVec witt_add(const WittVec& a, const WittVec& b);
WittVec witt_neg(const WittVec& a);
WittVec witt_sub(const WittVec& a, const WittVec& b);
WittVec frobenius(const WittVec& a);
WittVec verschiebung(const WittVec& a);           // length s+1
WittVec project(const WittVec& a, int t);         // keep the t leftmost components

// min_i p^i ord(a_i) with respect to pi; nullopt is +infinity (a = 0).
std::optional<long long> ord_W(const WittVec& a);

// ---------------------------------------------------------------------------
// Filtrations. All membership predicates are componentwise; the lower bound
// helpers are the single source of window arithmetic (floor lemmas live
// here and nowhere else).

long long floor_div(long long a, long long b);
long long ipow(long long b, int e);

// s' = min(ord_p(m), s)
int fil_prime_split(int p, int s, long long m);

// Minimal allowed ord(a_i) for membership of component i.
long long fil_lower(int p, long long n, int i);                   // fil_n
long long fil_r_lower(int p, long long n, int r, int i);          // fil_n^{(r)}
long long fil_prime_lower(int p, int s, long long m, int i);      // fil'_m
long long fil_dprime_lower(int p, int s, long long m, int i);     // fil''_m

bool in_fil(const WittVec& a, long long n);
bool in_fil_r(const WittVec& a, long long n, int r);
bool in_fil_prime(const WittVec& a, long long m);
bool in_fil_dprime(const WittVec& a, long long m);

// Least m >= 1 with a in fil'_m.
long long least_fil_prime_level(const WittVec& a);

// Exponents e of pi-monomials of component i representing the class of a in
// gr'_m (between the fil'_m and fil'_{m-1} bounds). Empty for most (i, m).
std::vector<long long> nonlog_class_window(int p, int s, long long m, int i);

}  // namespace asw
