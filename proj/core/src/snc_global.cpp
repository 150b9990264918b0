#include "asw/snc_global.hpp"

namespace asw {

namespace {

Var axis(int i) { return i == 1 ? Var::x1 : Var::x2; }
Var coaxis(int i) { return i == 1 ? Var::x2 : Var::x1; }

}  // namespace

GlobalCharacter::GlobalCharacter(int prime, WittVec r) : p(prime), s(r.length()), rep(std::move(r)) {
    require_witt_size(prime, s);
    if (rep.p != prime) throw std::invalid_argument("mixed characteristics");
    for (const auto& c : rep.comp) {
        for (Var v : {Var::pi, Var::x, Var::y, Var::w, Var::wp})
            if (c.uses(v))
                throw std::invalid_argument("GlobalCharacter: variable outside {x1, x2}");
    }
}

namespace {

RatFunc restrict_fn(const RatFunc& f, int i) {
    // exact renaming: x_i -> pi, x_{3-i} -> x
    return f.rename(axis(i), Var::pi).rename(coaxis(i), Var::x);
}

RatFunc lift_fn(const RatFunc& f, int i) {
    return f.rename(Var::pi, axis(i)).rename(Var::x, coaxis(i));
}

WittVec restrict_vec(const WittVec& a, int i) {
    WittVec r(a.p, a.length());
    for (int j = 0; j < a.length(); ++j) r.comp[j] = restrict_fn(a.comp[j], i);
    return r;
}

WittVec lift_vec(const WittVec& b, int i) {
    WittVec r(b.p, b.length());
    for (int j = 0; j < b.length(); ++j) r.comp[j] = lift_fn(b.comp[j], i);
    return r;
}

}  // namespace

Character restrict_to(const GlobalCharacter& a, int i) {
    if (i != 1 && i != 2) throw std::invalid_argument("restrict_to: component must be 1 or 2");
    return Character(a.p, restrict_vec(a.rep, i));
}

ConductorDivisor swan_divisor(const GlobalCharacter& a) {
    ConductorDivisor d;
    d.d1 = swan_conductor(restrict_to(a, 1)).sw;
    d.d2 = swan_conductor(restrict_to(a, 2)).sw;
    return d;
}

ConductorDivisor dt_divisor(const GlobalCharacter& a) {
    ConductorDivisor d;
    d.d1 = total_dimension(restrict_to(a, 1)).dt;
    d.d2 = total_dimension(restrict_to(a, 2)).dt;
    return d;
}

namespace {

// One local reduction step of the global representative at component i:
// extracts the vanishing-class twist of the restriction, lifts it, and
// subtracts (F-1)(lift) globally. Returns false when the restriction is
// already at its minimal level.
bool reduce_once_at(WittVec& glob, int i, long long target_level) {
    WittVec loc = restrict_vec(glob, i);
    long long m = least_fil_prime_level(loc);
    if (m <= target_level) return false;
    GradedNonLogForm form = nonlog_graded_form(loc, m);
    if (!form.is_zero())
        throw std::logic_error("global reduction hit a nonzero form above dt");
    WittVec b = lift_vec(nonlog_step_twist(loc, m), i);
    glob = witt_sub(glob, witt_sub(frobenius(b), b));
    return true;
}

}  // namespace

GlobalCformResult global_cform(const GlobalCharacter& a) {
    GlobalCformResult out(a.p);
    ConductorDivisor dts = dt_divisor(a);
    if (dts.d1 <= 1 && dts.d2 <= 1)
        throw std::invalid_argument("global_cform: R'_chi - D has empty support");

    // independent local pipeline first
    std::map<int, GradedNonLogForm> local;
    for (int i : {1, 2}) {
        long long dt = (i == 1 ? dts.d1 : dts.d2);
        if (dt >= 2) local.emplace(i, *cform(restrict_to(a, i)));
    }

    // one globally reduced representative for both germs
    WittVec glob = a.rep;
    bool changed = true;
    int rounds = 0;
    while (changed) {
        if (++rounds > 200) throw std::logic_error("global reduction did not stabilize");
        changed = false;
        if (reduce_once_at(glob, 1, dts.d1)) changed = true;
        if (reduce_once_at(glob, 2, dts.d2)) changed = true;
    }

    // the global section
    const int p = a.p;
    long long w = 1;
    RatFunc P = RatFunc::zero(p), Q = RatFunc::zero(p);
    for (int j = 0; j < glob.length(); ++j) {
        const RatFunc& c = glob.comp[j];
        if (!c.is_zero()) {
            RatFunc f = c.pow(w - 1);
            P += f * c.derivative(Var::x1);
            Q += f * c.derivative(Var::x2);
        }
        w *= p;
    }
    out.section_dx1 = -P;
    out.section_dx2 = -Q;

    // germ at each supported component, from the common representative
    for (int i : {1, 2}) {
        long long dt = (i == 1 ? dts.d1 : dts.d2);
        if (dt < 2) continue;
        GradedNonLogForm germ = nonlog_graded_form(restrict_vec(glob, i), dt);
        auto it = local.find(i);
        bool same = (germ == it->second);
        if (!same) {
            out.germ_consistent = false;
            out.notes.push_back("germ mismatch at D" + std::to_string(i));
        }
        out.forms.emplace(i, germ);
    }
    return out;
}

}  // namespace asw
