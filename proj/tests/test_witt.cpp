#include <doctest.h>

#include "asw/expr.hpp"
#include "asw/suites.hpp"
#include "asw/witt.hpp"

using namespace asw;

namespace {
RatFunc rf(const std::string& e, int p) {
    return parse_expression(e, p, {{"t", Var::pi}, {"x", Var::x}});
}
WittVec wv(int p, std::initializer_list<const char*> comps) {
    // written (a_{s-1}, ..., a_0) as in the paper
    WittVec a(p, static_cast<int>(comps.size()));
    int i = static_cast<int>(comps.size()) - 1;
    for (const char* e : comps) a.comp[i--] = rf(e, p);
    return a;
}
UMono um(std::initializer_list<int> l) {
    UMono m{0, 0, 0, 0, 0, 0};
    int i = 0;
    for (int e : l) m[i++] = static_cast<int16_t>(e);
    return m;
}
}  // namespace

TEST_CASE("universal tables: pinned small cases") {
    const auto& t21 = build_universal_tables(2, 1);
    UPolyZ x0y0;
    x0y0.add(um({1, 0, 0, 0, 0, 0}), 1);
    x0y0.add(um({0, 0, 0, 1, 0, 0}), 1);
    CHECK(t21.sum[0] == x0y0);  // s = 1: plain addition
    // negation at p = 2, s = 1 is the identity mod 2
    UPolyZ negx;
    negx.add(um({1, 0, 0, 0, 0, 0}), -1);
    CHECK(t21.neg[0] == negx);

    // p = 2, s = 2: the weight-1 component carries -X_1 Y_1
    const auto& t22 = build_universal_tables(2, 2);
    UPolyZ s0;
    s0.add(um({1, 0, 0, 0, 0, 0}), 1);   // X_0
    s0.add(um({0, 0, 0, 1, 0, 0}), 1);   // Y_0
    s0.add(um({0, 1, 0, 0, 1, 0}), -1);  // -X_1 Y_1
    CHECK(t22.sum[0] == s0);
    UPolyZ s1;
    s1.add(um({0, 1, 0, 0, 0, 0}), 1);
    s1.add(um({0, 0, 0, 0, 1, 0}), 1);
    CHECK(t22.sum[1] == s1);

    CHECK_THROWS_AS(build_universal_tables(5, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_universal_tables(11, 1), std::invalid_argument);
}

TEST_CASE("witt arithmetic basics") {
    WittVec a = wv(2, {"x", "1/t"});
    CHECK(witt_add(a, WittVec(2, 2)) == a);
    CHECK(witt_add(a, witt_neg(a)).is_zero());

    // doubling moves the square of the weight-p component into the V-slot
    WittVec b = wv(2, {"1/t", "0"});
    CHECK(witt_add(b, b) == wv(2, {"0", "1/t^2"}));
    // V is additive: doubling a V-image of a single component vanishes
    CHECK(witt_add(wv(2, {"0", "1/t"}), wv(2, {"0", "1/t"})).is_zero());

    CHECK_THROWS_WITH_AS(witt_add(a, WittVec(2, 1)), "length mismatch",
                         std::invalid_argument);
}

TEST_CASE("frobenius, verschiebung, projection") {
    WittVec a = wv(2, {"x", "1/t"});
    CHECK(frobenius(a) == wv(2, {"x^2", "1/t^2"}));
    CHECK(frobenius(WittVec(2, 2)).is_zero());

    WittVec v0 = verschiebung(WittVec(2, 0));
    CHECK(v0.length() == 1);
    CHECK(v0.is_zero());
    CHECK(verschiebung(wv(2, {"1/t"})) == wv(2, {"0", "1/t"}));
    CHECK(*ord_W(verschiebung(wv(2, {"1/t"}))) == -1);

    WittVec b = wv(2, {"t", "1/t"});
    CHECK(project(b, 0).length() == 0);
    CHECK(project(b, 2) == b);
    CHECK(project(b, 1) == wv(2, {"t"}));
}

TEST_CASE("ord_W") {
    CHECK(*ord_W(wv(2, {"1/t", "1/t^3"})) == -3);
    CHECK(*ord_W(wv(2, {"1/t", "0"})) == -2);
    CHECK(*ord_W(wv(2, {"x", "x/t"})) == -1);
    CHECK_FALSE(ord_W(WittVec(3, 2)).has_value());
    CHECK(*ord_W(frobenius(wv(2, {"1/t", "1/t^3"}))) == -6);
}

TEST_CASE("filtration predicates") {
    WittVec a = wv(2, {"1/t^3"});
    CHECK(in_fil(a, 3));
    CHECK_FALSE(in_fil(a, 2));
    CHECK(in_fil(WittVec(2, 1), 0));

    // fil^{(1)}_4 = fil_2
    WittVec b = wv(2, {"1/t", "0"});
    CHECK(in_fil_r(b, 4, 1));
    CHECK_FALSE(in_fil_r(b, 3, 1));

    // fil'_2 W_1 = fil_2 at p = 2
    CHECK(in_fil_prime(wv(2, {"x/t^2"}), 2));
    // s' = 0 when gcd(n, p) = 1: fil'_n = fil_{n-1}
    CHECK_FALSE(in_fil_prime(wv(2, {"1/t^3"}), 3));
    CHECK(in_fil_prime(wv(2, {"1/t^3"}), 4));
    CHECK(least_fil_prime_level(wv(2, {"1/t^3"})) == 4);
    CHECK(least_fil_prime_level(WittVec(2, 2)) == 1);
}

TEST_CASE("q polynomial pinned values") {
    const auto& q22 = q_polys(2, 2);
    // Q_{s-1} = T_{s-1} S_{s-1}
    UPolyZ top;
    top.add(um({0, 1, 0, 0, 1, 0}), 1);
    CHECK(q22.q[1] == top);
    // Q_0 = T_0 S_0 + T_1^2 S_1 at p = 2, s = 2
    UPolyZ q0;
    q0.add(um({1, 0, 0, 1, 0, 0}), 1);
    q0.add(um({0, 2, 0, 0, 1, 0}), 1);
    CHECK(q22.q[0] == q0);
}

TEST_CASE("property suites pass") {
    for (const auto& r : suite_qpolys(42, 40)) {
        INFO(r.name, ": ", (r.failures ? r.messages.front() : std::string()));
        CHECK(r.failures == 0);
    }
    for (const auto& r : suite_lemmas(42, 120)) {
        INFO(r.name, ": ", (r.failures ? r.messages.front() : std::string()));
        CHECK(r.failures == 0);
    }
}

TEST_CASE("nonlog class windows") {
    // p = 2, m even: component 0 carries two exponents
    auto w0 = nonlog_class_window(2, 2, 4, 0);
    CHECK(w0 == std::vector<long long>{-4, -3});
    auto w1 = nonlog_class_window(2, 2, 4, 1);
    CHECK(w1 == std::vector<long long>{-2});
    // s = 1 and p | m-1: gr'_m vanishes, the window is empty
    CHECK(nonlog_class_window(2, 1, 3, 0).empty());
    CHECK(nonlog_class_window(3, 1, 4, 0).empty());
    // p to m: single slot at -(m-1)/p^i when p^i | m-1
    CHECK(nonlog_class_window(3, 1, 5, 0) == std::vector<long long>{-4});
    CHECK(nonlog_class_window(2, 2, 3, 1) == std::vector<long long>{-1});
    CHECK(nonlog_class_window(2, 2, 3, 0).empty());
}
