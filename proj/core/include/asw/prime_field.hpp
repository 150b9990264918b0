#pragma once

#include <stdexcept>
#include <string>

namespace asw {

inline bool is_supported_prime(int p) { return p == 2 || p == 3 || p == 5 || p == 7; }

inline void require_supported_prime(int p) {
    if (!is_supported_prime(p))
        throw std::invalid_argument("p must be prime in {2,3,5,7}, got " + std::to_string(p));
}

// Element of F_p, canonical representative 0 <= v < p.
struct Fp {
    int v = 0;
    int p = 2;

    Fp() = default;
    Fp(long long value, int prime) : p(prime) {
        require_supported_prime(prime);
        long long r = value % prime;
        if (r < 0) r += prime;
        v = static_cast<int>(r);
    }

    bool is_zero() const { return v == 0; }

    friend bool operator==(const Fp& a, const Fp& b) { return a.p == b.p && a.v == b.v; }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
};

namespace detail {
inline void check_same_p(const Fp& a, const Fp& b) {
    if (a.p != b.p) throw std::invalid_argument("mixed characteristics");
}
}  // namespace detail

inline Fp operator+(const Fp& a, const Fp& b) {
    detail::check_same_p(a, b);
    return Fp(a.v + b.v, a.p);
}
inline Fp operator-(const Fp& a, const Fp& b) {
    detail::check_same_p(a, b);
    return Fp(a.v - b.v, a.p);
}
inline Fp operator-(const Fp& a) { return Fp(-a.v, a.p); }
inline Fp operator*(const Fp& a, const Fp& b) {
    detail::check_same_p(a, b);
    return Fp(a.v * b.v, a.p);
}

inline Fp fp_pow(Fp a, long long e) {
    if (e < 0) throw std::invalid_argument("fp_pow: negative exponent");
    Fp r(1, a.p);
    while (e > 0) {
        if (e & 1) r = r * a;
        a = a * a;
        e >>= 1;
    }
    return r;
}

// p is prime, so a^{p-2} inverts nonzero a.
inline Fp fp_inv(const Fp& a) {
    if (a.is_zero()) throw std::domain_error("division by zero");
    return fp_pow(a, a.p - 2);
}

inline Fp operator/(const Fp& a, const Fp& b) { return a * fp_inv(b); }

// In characteristic p every constant is a p-th power and x -> x^p is the
// identity on F_p, so the p-th root of a constant is itself.
inline Fp fp_pth_root(const Fp& a) { return a; }

}  // namespace asw
