#include "asw/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace asw {

const char* var_name(Var v) {
    switch (v) {
        case Var::pi: return "t";
        case Var::x: return "x";
        case Var::y: return "y";
        case Var::w: return "w";
        case Var::wp: return "w'";
        case Var::x1: return "x1";
        case Var::x2: return "x2";
    }
    return "?";
}

int mono_degree(const Mono& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

bool MonoGradedLex::operator()(const Mono& a, const Mono& b) const {
    int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    return a < b;
}

MultiPoly::MultiPoly(int p) : p_(p) { require_supported_prime(p); }

MultiPoly MultiPoly::constant(int p, long long c) {
    MultiPoly r(p);
    r.set_coeff(mono_one(), c);
    return r;
}

MultiPoly MultiPoly::variable(int p, Var v, int exponent) {
    if (exponent < 0) throw std::invalid_argument("variable: negative exponent");
    Mono m = mono_one();
    m[static_cast<int>(v)] = static_cast<int16_t>(exponent);
    return monomial(p, m, 1);
}

MultiPoly MultiPoly::monomial(int p, const Mono& m, long long c) {
    MultiPoly r(p);
    r.set_coeff(m, c);
    return r;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == mono_one();
}

bool MultiPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == mono_one() &&
           terms_.begin()->second == 1;
}

Fp MultiPoly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return Fp(it == terms_.end() ? 0 : it->second, p_);
}

void MultiPoly::set_coeff(const Mono& m, long long c) {
    long long r = c % p_;
    if (r < 0) r += p_;
    if (r == 0)
        terms_.erase(m);
    else
        terms_[m] = static_cast<int>(r);
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return mono_degree(terms_.rbegin()->first);
}

bool MultiPoly::uses(Var v) const {
    int i = static_cast<int>(v);
    for (const auto& [m, c] : terms_)
        if (m[i] != 0) return true;
    return false;
}

int MultiPoly::max_exponent(Var v) const {
    int i = static_cast<int>(v), best = 0;
    for (const auto& [m, c] : terms_) best = std::max(best, static_cast<int>(m[i]));
    return best;
}

std::optional<int> MultiPoly::min_exponent(Var v) const {
    if (terms_.empty()) return std::nullopt;
    int i = static_cast<int>(v), best = INT16_MAX;
    for (const auto& [m, c] : terms_) best = std::min(best, static_cast<int>(m[i]));
    return best;
}

const std::pair<const Mono, int>& MultiPoly::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading_term of zero polynomial");
    return *terms_.rbegin();
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(p_);
    for (const auto& [m, c] : terms_) r.set_coeff(m, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (p_ != o.p_) throw std::invalid_argument("mixed characteristics");
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        long long s = (it == terms_.end() ? 0 : it->second) + c;
        set_coeff(m, s);
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (p_ != o.p_) throw std::invalid_argument("mixed characteristics");
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        long long s = (it == terms_.end() ? 0 : it->second) - c;
        set_coeff(m, s);
    }
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("mixed characteristics");
    MultiPoly r(a.p_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Mono m;
            for (int i = 0; i < kNumVars; ++i)
                m[i] = static_cast<int16_t>(ma[i] + mb[i]);
            auto it = r.terms_.find(m);
            long long s = (it == r.terms_.end() ? 0 : it->second);
            s += static_cast<long long>(ca) * cb;
            r.set_coeff(m, s);
        }
    }
    return r;
}

MultiPoly MultiPoly::pow(long long e) const {
    if (e < 0) throw std::invalid_argument("pow: negative exponent");
    MultiPoly base = *this, r = MultiPoly::constant(p_, 1);
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

MultiPoly MultiPoly::derivative(Var v) const {
    int i = static_cast<int>(v);
    MultiPoly r(p_);
    for (const auto& [m, c] : terms_) {
        if (m[i] == 0) continue;
        Mono d = m;
        d[i] = static_cast<int16_t>(m[i] - 1);
        auto it = r.terms_.find(d);
        long long s = (it == r.terms_.end() ? 0 : it->second);
        s += static_cast<long long>(c) * m[i];
        r.set_coeff(d, s);
    }
    return r;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& value) const {
    if (value.p_ != p_) throw std::invalid_argument("mixed characteristics");
    int i = static_cast<int>(v);
    // Group by exponent of v and use Horner on the grouped pieces.
    std::map<int, MultiPoly> by_exp;
    for (const auto& [m, c] : terms_) {
        Mono rest = m;
        int e = rest[i];
        rest[i] = 0;
        auto [it, fresh] = by_exp.try_emplace(e, p_);
        it->second.set_coeff(rest, it->second.coeff(rest).v + c);
    }
    MultiPoly acc(p_);
    int prev = -1;
    for (auto it = by_exp.rbegin(); it != by_exp.rend(); ++it) {
        if (prev >= 0) acc = acc * value.pow(prev - it->first);
        acc += it->second;
        prev = it->first;
    }
    if (prev > 0) acc = acc * value.pow(prev);
    return acc;
}

MultiPoly MultiPoly::substitute_zero(Var v) const {
    int i = static_cast<int>(v);
    MultiPoly r(p_);
    for (const auto& [m, c] : terms_)
        if (m[i] == 0) r.set_coeff(m, c);
    return r;
}

MultiPoly MultiPoly::rename(Var from, Var to) const {
    if (uses(to)) throw std::logic_error("rename: target variable already in use");
    int i = static_cast<int>(from), j = static_cast<int>(to);
    MultiPoly r(p_);
    for (const auto& [m, c] : terms_) {
        Mono n = m;
        n[j] = n[i];
        n[i] = 0;
        r.set_coeff(n, c);
    }
    return r;
}

MultiPoly MultiPoly::scale_exponents(Var v, int k) const {
    if (k <= 0) throw std::invalid_argument("scale_exponents: k must be positive");
    int i = static_cast<int>(v);
    MultiPoly r(p_);
    for (const auto& [m, c] : terms_) {
        Mono n = m;
        n[i] = static_cast<int16_t>(n[i] * k);
        r.set_coeff(n, c);
    }
    return r;
}

MultiPoly MultiPoly::unscale_exponents(Var v, int k) const {
    if (k <= 0) throw std::invalid_argument("unscale_exponents: k must be positive");
    int i = static_cast<int>(v);
    MultiPoly r(p_);
    for (const auto& [m, c] : terms_) {
        if (m[i] % k != 0) throw std::logic_error("unscale_exponents: exponent not divisible");
        Mono n = m;
        n[i] = static_cast<int16_t>(n[i] / k);
        r.set_coeff(n, c);
    }
    return r;
}

MultiPoly MultiPoly::shift_exponent(Var v, int k) const {
    int i = static_cast<int>(v);
    MultiPoly r(p_);
    for (const auto& [m, c] : terms_) {
        if (m[i] + k < 0) throw std::logic_error("shift_exponent: negative exponent");
        Mono n = m;
        n[i] = static_cast<int16_t>(n[i] + k);
        r.set_coeff(n, c);
    }
    return r;
}

Fp MultiPoly::leading_coeff() const {
    if (terms_.empty()) return Fp(0, p_);
    return Fp(terms_.rbegin()->second, p_);
}

MultiPoly MultiPoly::monic() const {
    if (terms_.empty()) return *this;
    Fp inv = fp_inv(leading_coeff());
    MultiPoly r(p_);
    for (const auto& [m, c] : terms_) r.set_coeff(m, static_cast<long long>(c) * inv.v);
    return r;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        const Mono& m = it->first;
        bool printed = false;
        if (it->second != 1 || m == mono_one()) {
            os << it->second;
            printed = true;
        }
        for (int i = 0; i < kNumVars; ++i) {
            if (m[i] == 0) continue;
            if (printed) os << "*";
            os << var_name(static_cast<Var>(i));
            if (m[i] > 1) os << "^" << m[i];
            printed = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Exact division and gcd.

namespace {

bool mono_divides(const Mono& a, const Mono& b) {  // a | b
    for (int i = 0; i < kNumVars; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Mono mono_div(const Mono& b, const Mono& a) {
    Mono r;
    for (int i = 0; i < kNumVars; ++i) r[i] = static_cast<int16_t>(b[i] - a[i]);
    return r;
}

// View f as a polynomial in v; returns coefficients by exponent of v.
std::map<int, MultiPoly> coeffs_in(const MultiPoly& f, Var v) {
    int i = static_cast<int>(v);
    std::map<int, MultiPoly> out;
    for (const auto& [m, c] : f.terms()) {
        Mono rest = m;
        int e = rest[i];
        rest[i] = 0;
        auto [it, fresh] = out.try_emplace(e, f.characteristic());
        it->second.set_coeff(rest, it->second.coeff(rest).v + c);
    }
    return out;
}

MultiPoly from_coeffs_in(int p, Var v, const std::map<int, MultiPoly>& cs) {
    MultiPoly r(p);
    for (const auto& [e, c] : cs) r += c * MultiPoly::variable(p, v, e);
    return r;
}

int degree_in(const MultiPoly& f, Var v) { return f.is_zero() ? -1 : f.max_exponent(v); }

MultiPoly leading_coeff_in(const MultiPoly& f, Var v) {
    auto cs = coeffs_in(f, v);
    return cs.rbegin()->second;
}

// Pseudo-remainder of a by b with respect to v.
MultiPoly pseudo_rem(MultiPoly a, const MultiPoly& b, Var v) {
    int db = degree_in(b, v);
    MultiPoly lb = leading_coeff_in(b, v);
    while (!a.is_zero() && degree_in(a, v) >= db) {
        int da = degree_in(a, v);
        MultiPoly la = leading_coeff_in(a, v);
        a = lb * a - la * MultiPoly::variable(a.characteristic(), v, da - db) * b;
    }
    return a;
}

MultiPoly content_in(const MultiPoly& f, Var v) {
    MultiPoly g(f.characteristic());
    for (const auto& [e, c] : coeffs_in(f, v)) {
        g = poly_gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

// Plain Euclid for polynomials in a single variable over F_p.
MultiPoly univariate_gcd(MultiPoly a, MultiPoly b, Var v) {
    while (!b.is_zero()) {
        // remainder of a by b
        int db = degree_in(b, v);
        Fp ilb = fp_inv(leading_coeff_in(b, v).leading_coeff());
        while (!a.is_zero() && degree_in(a, v) >= db) {
            int da = degree_in(a, v);
            MultiPoly la = leading_coeff_in(a, v);
            MultiPoly factor =
                la * MultiPoly::constant(a.characteristic(), ilb.v) *
                MultiPoly::variable(a.characteristic(), v, da - db);
            a -= factor * b;
        }
        std::swap(a, b);
    }
    return a.monic();
}

}  // namespace

MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (b.is_monomial()) {
        const auto& [mb, cb] = b.leading_term();
        Fp inv = fp_inv(Fp(cb, b.characteristic()));
        MultiPoly q(a.characteristic());
        for (const auto& [m, c] : a.terms()) {
            if (!mono_divides(mb, m)) throw std::logic_error("divide_exact: not divisible");
            q.set_coeff(mono_div(m, mb), static_cast<long long>(c) * inv.v);
        }
        return q;
    }
    MultiPoly r = a, q(a.characteristic());
    const auto& ltb = b.leading_term();
    while (!r.is_zero()) {
        const auto& ltr = r.leading_term();
        if (!mono_divides(ltb.first, ltr.first))
            throw std::logic_error("divide_exact: not divisible");
        Fp c = Fp(ltr.second, r.characteristic()) / Fp(ltb.second, r.characteristic());
        MultiPoly t = MultiPoly::monomial(a.characteristic(), mono_div(ltr.first, ltb.first), c.v);
        q += t;
        r -= t * b;
    }
    return q;
}

namespace {

// Per-variable minimum exponent over all terms: the monomial content.
Mono monomial_content(const MultiPoly& f) {
    Mono g = mono_one();
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        if (first) {
            g = m;
            first = false;
        } else {
            for (int i = 0; i < kNumVars; ++i) g[i] = std::min(g[i], m[i]);
        }
    }
    return g;
}

MultiPoly shift_down(const MultiPoly& f, const Mono& g) {
    MultiPoly r(f.characteristic());
    for (const auto& [m, c] : f.terms()) r.set_coeff(mono_div(m, g), c);
    return r;
}

// Gcd after monomial contents have been stripped from both arguments.
MultiPoly stripped_gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_constant() || b.is_constant()) return MultiPoly::constant(a.characteristic(), 1);

    // main variable: used by both, smallest degree bound first
    std::optional<Var> best;
    long long best_cost = 0;
    int nvars = 0;
    for (int i = 0; i < kNumVars; ++i) {
        Var v = static_cast<Var>(i);
        bool ua = a.uses(v), ub = b.uses(v);
        if (ua || ub) ++nvars;
        if (ua && ub) {
            long long da = a.max_exponent(v), db = b.max_exponent(v);
            long long cost = std::min(da, db) * 1000 + std::max(da, db);
            if (!best || cost < best_cost) {
                best = v;
                best_cost = cost;
            }
        }
    }
    // no shared variable: any common divisor is constant
    if (!best) return MultiPoly::constant(a.characteristic(), 1);
    Var v = *best;
    if (nvars == 1) return univariate_gcd(a, b, v);

    MultiPoly ca = content_in(a, v), cb = content_in(b, v);
    MultiPoly pa = divide_exact(a, ca), pb = divide_exact(b, cb);
    MultiPoly cont = poly_gcd(ca, cb);

    // Primitive PRS on the primitive parts.
    MultiPoly f = pa, g = pb;
    if (degree_in(f, v) < degree_in(g, v)) std::swap(f, g);
    while (true) {
        MultiPoly r = pseudo_rem(f, g, v);
        if (r.is_zero()) break;
        r = shift_down(r, monomial_content(r));
        if (degree_in(r, v) > 0) {
            MultiPoly cr = content_in(r, v);
            if (!cr.is_one()) r = divide_exact(r, cr);
        }
        f = g;
        g = r;
        if (degree_in(g, v) == 0) {
            g = MultiPoly::constant(a.characteristic(), 1);
            break;
        }
    }
    return (cont * g).monic();
}

}  // namespace

std::optional<MultiPoly> try_divide(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return a;
    if (b.is_monomial()) {
        const auto& [mb, cb] = b.leading_term();
        Fp inv = fp_inv(Fp(cb, b.characteristic()));
        MultiPoly q(a.characteristic());
        for (const auto& [m, c] : a.terms()) {
            if (!mono_divides(mb, m)) return std::nullopt;
            q.set_coeff(mono_div(m, mb), static_cast<long long>(c) * inv.v);
        }
        return q;
    }
    MultiPoly r = a, q(a.characteristic());
    const auto& ltb = b.leading_term();
    while (!r.is_zero()) {
        const auto& ltr = r.leading_term();
        if (!mono_divides(ltb.first, ltr.first)) return std::nullopt;
        Fp c = Fp(ltr.second, r.characteristic()) / Fp(ltb.second, r.characteristic());
        MultiPoly t = MultiPoly::monomial(a.characteristic(), mono_div(ltr.first, ltb.first), c.v);
        q += t;
        r -= t * b;
    }
    return q;
}

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.characteristic() != b.characteristic())
        throw std::invalid_argument("mixed characteristics");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();

    Mono ma = monomial_content(a), mb = monomial_content(b);
    Mono common;
    for (int i = 0; i < kNumVars; ++i) common[i] = std::min(ma[i], mb[i]);

    // Monomial fast path: gcd with a monomial is the common monomial part.
    if (a.is_monomial() || b.is_monomial())
        return MultiPoly::monomial(a.characteristic(), common, 1);

    MultiPoly g = stripped_gcd(shift_down(a, ma), shift_down(b, mb));
    if (common != mono_one())
        g = g * MultiPoly::monomial(a.characteristic(), common, 1);
    return g.monic();
}

}  // namespace asw
