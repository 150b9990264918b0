#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "asw/conductors.hpp"
#include "asw/dilatation.hpp"
#include "asw/snc_global.hpp"

namespace asw {

struct SuiteResult {
    std::string name;
    long cases = 0;
    long failures = 0;
    std::vector<std::string> messages;

    SuiteResult() = default;
    explicit SuiteResult(std::string n) : name(std::move(n)) {}

    bool ok() const { return failures == 0; }
    void fail(const std::string& msg) {
        ++failures;
        if (messages.size() < 8) messages.push_back(msg);
    }
};

// Deterministic RNG wrapper; all randomized suites are reproducible from
// the seed alone.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next();
    long long uniform(long long lo, long long hi);  // inclusive
    bool chance(int percent);
};

RatFunc random_residue_coeff(Rng& rng, int p, int max_xdeg);
RatFunc random_local_elem(Rng& rng, int p, long long min_ord, long long max_ord,
                          bool allow_unit_den = true);
WittVec random_witt(Rng& rng, int p, int s, long long min_ord, long long max_ord,
                    bool allow_unit_den = true);
WittVec random_fil_prime_member(Rng& rng, int p, int s, long long m);

// Q-polynomial suite: integrality, Q_{s-1} = T_{s-1} S_{s-1}, the two ideal
// membership lemmas, homogeneity, and the Witt-difference identity
// x' - x = (Q_{s-1}, ..., Q_0) for x'_i = x_i (1 + y_i).
std::vector<SuiteResult> suite_qpolys(std::uint64_t seed, long cases);

// Filtration lemma suite: floor identities, ord(F a) = p ord(a), the
// (F-1)-preimage equivalences, the pr_t image law, fil_0 = fil'_1, and
// closure of fil'/fil'' under addition.
std::vector<SuiteResult> suite_lemmas(std::uint64_t seed, long cases);

// Conductor sanity: pinned sw/dt values plus sw = 0 on random integral
// representatives.
SuiteResult suite_conductor_sanity(std::uint64_t seed, long cases);

// Well-definedness: sw, dt, rsw, cform invariant under (F-1)-twists.
SuiteResult suite_twist_invariance(std::uint64_t seed, long twists_per_base);

// The cross-oracle corpus: deterministic members (p in {2,3}, s <= 2,
// dt <= 6, at least min_exceptional with (p, dt) = (2, 2)).
std::vector<Character> crosscheck_corpus(std::uint64_t seed, int min_size,
                                         int min_exceptional);

// geometric_cform == cform on the corpus, plus the valuation-lemma bounds
// for every member.
std::vector<SuiteResult> suite_crosscheck(std::uint64_t seed, long cases);

// Divisor-level checks on X = A^2.
SuiteResult suite_divisor();

}  // namespace asw
