#include "asw/witt.hpp"

#include <mutex>

#include <boost/multiprecision/cpp_int.hpp>

namespace asw {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

void UPolyZ::add(const UMono& m, const cpp_int& c) {
    if (c == 0) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

bool witt_size_supported(int p, int s) {
    if (!is_supported_prime(p) || s < 0) return false;
    if (p == 2 || p == 3) return s <= 3;
    return s <= 2;
}

void require_witt_size(int p, int s) {
    if (!witt_size_supported(p, s))
        throw std::invalid_argument("unsupported (p, s): p=" + std::to_string(p) +
                                    " s=" + std::to_string(s));
}

namespace {

// Polynomial with exact rational coefficients, used only while solving the
// ghost recursions; results are asserted integral.
struct UPolyQ {
    std::map<UMono, cpp_rational> terms;

    void add(const UMono& m, const cpp_rational& c) {
        if (c == 0) return;
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
    UPolyQ& operator+=(const UPolyQ& o) {
        for (const auto& [m, c] : o.terms) add(m, c);
        return *this;
    }
    UPolyQ& operator-=(const UPolyQ& o) {
        for (const auto& [m, c] : o.terms) add(m, -c);
        return *this;
    }
    friend UPolyQ operator+(UPolyQ a, const UPolyQ& b) { return a += b; }
    friend UPolyQ operator*(const UPolyQ& a, const UPolyQ& b) {
        UPolyQ r;
        for (const auto& [ma, ca] : a.terms)
            for (const auto& [mb, cb] : b.terms) {
                UMono m;
                for (int i = 0; i < kUSlots; ++i) m[i] = static_cast<int16_t>(ma[i] + mb[i]);
                r.add(m, ca * cb);
            }
        return r;
    }
    UPolyQ pow(int e) const {
        UPolyQ r = one();
        for (int i = 0; i < e; ++i) r = r * (*this);
        return r;
    }
    UPolyQ scaled(const cpp_rational& c) const {
        UPolyQ r;
        for (const auto& [m, v] : terms) r.add(m, v * c);
        return r;
    }
    static UPolyQ one() {
        UPolyQ r;
        r.add(UMono{0, 0, 0, 0, 0, 0}, 1);
        return r;
    }
    static UPolyQ slot(int i) {
        UPolyQ r;
        UMono m{0, 0, 0, 0, 0, 0};
        m[i] = 1;
        r.add(m, 1);
        return r;
    }
};

UPolyZ to_integral(const UPolyQ& f) {
    UPolyZ r;
    for (const auto& [m, c] : f.terms) {
        if (denominator(c) != 1)
            throw std::logic_error("universal polynomial is not integral");
        r.add(m, numerator(c));
    }
    return r;
}

UPolyQ from_integral(const UPolyZ& f) {
    UPolyQ r;
    for (const auto& [m, c] : f.terms) r.add(m, cpp_rational(c));
    return r;
}

// Ghost component G_d of the generic vector whose i-th slot is args[i].
UPolyQ ghost(int p, int s, int d, const std::vector<UPolyQ>& args) {
    UPolyQ g;
    for (int i = d; i < s; ++i) {
        cpp_int w = 1;
        for (int k = 0; k < s - 1 - i; ++k) w *= p;
        int e = 1;
        for (int k = 0; k < i - d; ++k) e *= p;
        g += args[i].pow(e).scaled(cpp_rational(w));
    }
    return g;
}

// Solves G_d(result) = target_d for all d, top-down. targets[d] must be the
// desired ghost components of the result.
std::vector<UPolyZ> solve_ghost(int p, int s, const std::vector<UPolyQ>& targets) {
    std::vector<UPolyQ> res(s);
    std::vector<UPolyZ> out(s);
    for (int d = s - 1; d >= 0; --d) {
        // G_d(res) = p^{s-1-d} res_d + (terms in res_{>d})
        UPolyQ rhs = targets[d];
        for (int i = d + 1; i < s; ++i) {
            cpp_int w = 1;
            for (int k = 0; k < s - 1 - i; ++k) w *= p;
            int e = 1;
            for (int k = 0; k < i - d; ++k) e *= p;
            rhs -= res[i].pow(e).scaled(cpp_rational(w));
        }
        cpp_int lead = 1;
        for (int k = 0; k < s - 1 - d; ++k) lead *= p;
        res[d] = rhs.scaled(cpp_rational(1, lead));
        out[d] = to_integral(res[d]);
        res[d] = from_integral(out[d]);
    }
    return out;
}

UniversalWittTables make_tables(int p, int s) {
    UniversalWittTables t;
    t.p = p;
    t.s = s;
    if (s == 0) return t;
    std::vector<UPolyQ> xs(s), ys(s);
    for (int i = 0; i < s; ++i) {
        xs[i] = UPolyQ::slot(i);
        ys[i] = UPolyQ::slot(3 + i);
    }
    std::vector<UPolyQ> sum_target(s), neg_target(s);
    for (int d = 0; d < s; ++d) {
        sum_target[d] = ghost(p, s, d, xs);
        sum_target[d] += ghost(p, s, d, ys);
        neg_target[d] = ghost(p, s, d, xs).scaled(-1);
    }
    t.sum = solve_ghost(p, s, sum_target);
    t.neg = solve_ghost(p, s, neg_target);
    return t;
}

QPolynomials make_q_polys(int p, int s) {
    QPolynomials t;
    t.p = p;
    t.s = s;
    if (s == 0) return t;
    // target_d = ghost_d of x' minus ghost_d of x, with x'_i = T_i(1+S_i).
    std::vector<UPolyQ> xp(s), xs(s);
    for (int i = 0; i < s; ++i) {
        UPolyQ Ti = UPolyQ::slot(i), Si = UPolyQ::slot(3 + i);
        xs[i] = Ti;
        xp[i] = Ti * (UPolyQ::one() + Si);
    }
    std::vector<UPolyQ> target(s);
    for (int d = 0; d < s; ++d) {
        target[d] = ghost(p, s, d, xp);
        target[d] -= ghost(p, s, d, xs);
    }
    t.q = solve_ghost(p, s, target);
    return t;
}

std::mutex g_table_mutex;
std::map<std::pair<int, int>, UniversalWittTables> g_tables;
std::map<std::pair<int, int>, QPolynomials> g_qpolys;

}  // namespace

const UniversalWittTables& build_universal_tables(int p, int s) {
    require_witt_size(p, s);
    std::lock_guard<std::mutex> lock(g_table_mutex);
    auto key = std::make_pair(p, s);
    auto it = g_tables.find(key);
    if (it == g_tables.end()) it = g_tables.emplace(key, make_tables(p, s)).first;
    return it->second;
}

const QPolynomials& q_polys(int p, int s) {
    require_witt_size(p, s);
    std::lock_guard<std::mutex> lock(g_table_mutex);
    auto key = std::make_pair(p, s);
    auto it = g_qpolys.find(key);
    if (it == g_qpolys.end()) it = g_qpolys.emplace(key, make_q_polys(p, s)).first;
    return it->second;
}

RatFunc eval_upoly_mod_p(const UPolyZ& f, int p, const std::vector<RatFunc>& xs,
                         const std::vector<RatFunc>& ys) {
    // Accumulate every term over the common denominator prod den_i^{max_i},
    // so only one normalization runs at the end.
    std::array<int, kUSlots> amax{};
    bool any = false;
    for (const auto& [m, c] : f.terms) {
        cpp_int cm = c % p;
        if (cm == 0) continue;
        any = true;
        for (int i = 0; i < kUSlots; ++i) amax[i] = std::max(amax[i], static_cast<int>(m[i]));
    }
    if (!any) return RatFunc::zero(p);

    auto arg = [&](int slot) -> const RatFunc& { return slot < 3 ? xs[slot] : ys[slot - 3]; };
    std::array<std::vector<MultiPoly>, kUSlots> numpow, denpow;
    for (int i = 0; i < kUSlots; ++i) {
        if (amax[i] == 0) continue;
        numpow[i].push_back(MultiPoly::constant(p, 1));
        denpow[i].push_back(MultiPoly::constant(p, 1));
        for (int e = 1; e <= amax[i]; ++e) {
            numpow[i].push_back(numpow[i].back() * arg(i).num());
            denpow[i].push_back(denpow[i].back() * arg(i).den());
        }
    }

    MultiPoly num_acc(p);
    for (const auto& [m, c] : f.terms) {
        cpp_int cm = c % p;
        if (cm < 0) cm += p;
        int ci = static_cast<int>(cm);
        if (ci == 0) continue;
        MultiPoly term = MultiPoly::constant(p, ci);
        for (int i = 0; i < kUSlots; ++i) {
            if (amax[i] == 0) continue;
            if (m[i] != 0) term = term * numpow[i][m[i]];
            if (m[i] != amax[i]) term = term * denpow[i][amax[i] - m[i]];
        }
        num_acc += term;
    }
    std::vector<std::pair<MultiPoly, int>> dens;
    for (int i = 0; i < kUSlots; ++i)
        if (amax[i] > 0 && !arg(i).den().is_one()) dens.emplace_back(arg(i).den(), amax[i]);
    return ratfunc_from_factored(std::move(num_acc), std::move(dens));
}

// ---------------------------------------------------------------------------

bool WittVec::is_zero() const {
    for (const auto& c : comp)
        if (!c.is_zero()) return false;
    return true;
}

namespace {
void check_compatible(const WittVec& a, const WittVec& b) {
    if (a.p != b.p) throw std::invalid_argument("mixed characteristics");
    if (a.length() != b.length()) throw std::invalid_argument("length mismatch");
}
}  // namespace

WittVec witt_add(const WittVec& a, const WittVec& b) {
    check_compatible(a, b);
    const auto& tables = build_universal_tables(a.p, a.length());
    WittVec r(a.p, a.length());
    for (int d = 0; d < a.length(); ++d)
        r.comp[d] = eval_upoly_mod_p(tables.sum[d], a.p, a.comp, b.comp);
    return r;
}

WittVec witt_neg(const WittVec& a) {
    const auto& tables = build_universal_tables(a.p, a.length());
    WittVec r(a.p, a.length());
    std::vector<RatFunc> none;
    for (int d = 0; d < a.length(); ++d)
        r.comp[d] = eval_upoly_mod_p(tables.neg[d], a.p, a.comp, a.comp);
    return r;
}

WittVec witt_sub(const WittVec& a, const WittVec& b) {
    check_compatible(a, b);
    return witt_add(a, witt_neg(b));
}

WittVec frobenius(const WittVec& a) {
    WittVec r(a.p, a.length());
    for (int i = 0; i < a.length(); ++i) r.comp[i] = a.comp[i].pow(a.p);
    return r;
}

WittVec verschiebung(const WittVec& a) {
    WittVec r(a.p, a.length() + 1);
    for (int i = 0; i < a.length(); ++i) r.comp[i] = a.comp[i];
    return r;
}

WittVec project(const WittVec& a, int t) {
    if (t < 0 || t > a.length()) throw std::invalid_argument("project: bad length");
    WittVec r(a.p, t);
    for (int j = 0; j < t; ++j) r.comp[j] = a.comp[a.length() - t + j];
    return r;
}

std::optional<long long> ord_W(const WittVec& a) {
    std::optional<long long> best;
    long long w = 1;
    for (int i = 0; i < a.length(); ++i) {
        auto o = a.comp[i].ord_at(Var::pi);
        if (o) {
            long long v = *o * w;
            if (!best || v < *best) best = v;
        }
        w *= a.p;
    }
    return best;
}

// ---------------------------------------------------------------------------

long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

long long ipow(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

int fil_prime_split(int p, int s, long long m) {
    if (m < 1) throw std::invalid_argument("fil': level must be >= 1");
    int v = 0;
    while (m % p == 0 && v < s) {
        m /= p;
        ++v;
    }
    return v;
}

long long fil_lower(int p, long long n, int i) { return -floor_div(n, ipow(p, i)); }

long long fil_r_lower(int p, long long n, int r, int i) {
    return fil_lower(p, floor_div(n, ipow(p, r)), i);
}

long long fil_prime_lower(int p, int s, long long m, int i) {
    int sp = fil_prime_split(p, s, m);
    return i < sp ? fil_lower(p, m, i) : fil_lower(p, m - 1, i);
}

long long fil_dprime_lower(int p, int s, long long m, int i) {
    int sp = fil_prime_split(p, s, m);
    return i < sp ? fil_lower(p, floor_div(m, p), i) : fil_lower(p, floor_div(m - 1, p), i);
}

namespace {
template <class LowerFn>
bool componentwise(const WittVec& a, LowerFn lower) {
    for (int i = 0; i < a.length(); ++i) {
        auto o = a.comp[i].ord_at(Var::pi);
        if (o && *o < lower(i)) return false;
    }
    return true;
}
}  // namespace

bool in_fil(const WittVec& a, long long n) {
    return componentwise(a, [&](int i) { return fil_lower(a.p, n, i); });
}

bool in_fil_r(const WittVec& a, long long n, int r) {
    return componentwise(a, [&](int i) { return fil_r_lower(a.p, n, r, i); });
}

bool in_fil_prime(const WittVec& a, long long m) {
    return componentwise(a, [&](int i) { return fil_prime_lower(a.p, a.length(), m, i); });
}

bool in_fil_dprime(const WittVec& a, long long m) {
    return componentwise(a, [&](int i) { return fil_dprime_lower(a.p, a.length(), m, i); });
}

long long least_fil_prime_level(const WittVec& a) {
    auto o = ord_W(a);
    if (!o || *o >= 0) return 1;  // fil_0 = fil'_1
    long long cap = -*o + 1;      // fil_n is contained in fil'_{n+1}
    for (long long m = 1; m <= cap; ++m)
        if (in_fil_prime(a, m)) return m;
    throw std::logic_error("least_fil_prime_level: no level found");
}

std::vector<long long> nonlog_class_window(int p, int s, long long m, int i) {
    if (m < 2) throw std::invalid_argument("nonlog_class_window: level must be >= 2");
    long long lo = fil_prime_lower(p, s, m, i);
    long long hi = fil_prime_lower(p, s, m - 1, i);
    std::vector<long long> es;
    for (long long e = lo; e < hi; ++e) es.push_back(e);
    return es;
}

}  // namespace asw
