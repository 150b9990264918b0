#pragma once

#include <map>
#include <string>
#include <vector>

#include "asw/conductors.hpp"

namespace asw {

// Character of pi_1^ab(U) at desk scale: X = A^2 with coordinates (x1, x2),
// D = union of the coordinate axes D_1: x1 = 0 and D_2: x2 = 0, U = X - D.
// Components are rational functions in (x1, x2) with poles only along D.
struct GlobalCharacter {
    int p = 2;
    int s = 0;
    WittVec rep;  // components in (x1, x2)

    GlobalCharacter(int prime, WittVec r);
};

// Restriction to the local field at the generic point of D_i: x_i becomes
// the uniformizer, the other coordinate the residue variable.
Character restrict_to(const GlobalCharacter& a, int i);

struct ConductorDivisor {
    long long d1 = 0, d2 = 0;

    friend bool operator==(const ConductorDivisor& a, const ConductorDivisor& b) {
        return a.d1 == b.d1 && a.d2 == b.d2;
    }
};

ConductorDivisor swan_divisor(const GlobalCharacter& a);
ConductorDivisor dt_divisor(const GlobalCharacter& a);

struct GlobalCformResult {
    std::map<int, GradedNonLogForm> forms;  // component -> local characteristic form
    bool germ_consistent = true;
    std::vector<std::string> notes;
    // -sum a*_j^{p^j-1} d a*_j of the common reduced representative,
    // as (dx1, dx2)-coefficients: the single global section both germs
    // restrict from.
    RatFunc section_dx1, section_dx2;

    explicit GlobalCformResult(int p)
        : section_dx1(RatFunc::zero(p)), section_dx2(RatFunc::zero(p)) {}
};

// Per-component characteristic forms glued through one globally reduced
// representative; requires at least one component with dt > 1.
GlobalCformResult global_cform(const GlobalCharacter& a);

}  // namespace asw
