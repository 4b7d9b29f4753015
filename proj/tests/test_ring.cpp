#include "doctest.h"

#include <cstdint>

#include "lgould/laurent.hpp"
#include "lgould/poly_io.hpp"

using namespace lgould;

namespace {

// Small deterministic generator for property tests.
struct Rng {
    uint64_t state = 0x9e3779b97f4a7c15ull;
    uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    int range(int lo, int hi) { return lo + static_cast<int>(next() % (hi - lo + 1)); }
};

RatQ random_ratq(Rng& rng, bool allow_den = true) {
    SPoly num;
    int terms = rng.range(1, 3);
    for (int i = 0; i < terms; ++i)
        num += SPoly(mpz_class(rng.range(-4, 4)), rng.range(-3, 3));
    SPoly den(1);
    if (allow_den && rng.range(0, 2) == 0) {
        den = SPoly(mpz_class(rng.range(1, 3)), 0) + SPoly(mpz_class(rng.range(1, 4)), rng.range(1, 2));
    }
    if (num.is_zero()) num = SPoly(1);
    return RatQ(num, den);
}

LaurentBi random_laurent(Rng& rng) {
    LaurentBi x;
    int terms = rng.range(0, 3);
    for (int i = 0; i < terms; ++i)
        x += LaurentBi::monomial(random_ratq(rng), rng.range(-4, 4));
    return x;
}

LaurentBi random_nonzero_laurent(Rng& rng) {
    for (;;) {
        LaurentBi x = random_laurent(rng);
        if (!x.is_zero()) return x;
    }
}

FracBi random_frac(Rng& rng) {
    return FracBi(random_laurent(rng), random_nonzero_laurent(rng));
}

// The value of LG on the Kinoshita-Terasaka and Conway knots, as a string in
// the (q, q^alpha) display style.  Used here to pin down span and the
// specialization identities of the ring operations on a realistic value.
const char* kKtPolyText =
    "qa^-6*(-q^-8 - q^-6 + 2*q^-4 + q^-2 - 1)"
    " + qa^-4*(q^-8 + 6*q^-6 - 3*q^-4 - 9*q^-2 + 2 + 3*q^2)"
    " + qa^-2*(-7*q^-6 - 7*q^-4 + 18*q^-2 + 9 - 11*q^2 - 2*q^4)"
    " + (2*q^-6 + 14*q^-4 - 8*q^-2 - 23 + 6*q^2 + 10*q^4)"
    " + qa^2*(-7*q^-4 - 7*q^-2 + 18 + 9*q^2 - 11*q^4 - 2*q^6)"
    " + qa^4*(q^-4 + 6*q^-2 - 3 - 9*q^2 + 2*q^4 + 3*q^6)"
    " + qa^6*(-q^-2 - 1 + 2*q^2 + q^4 - q^6)";

LaurentBi kt_poly() { return parse_poly(kKtPolyText).as_laurent(); }

}  // namespace

TEST_CASE("qbracket basics") {
    // [1]_q = 1
    CHECK(qbracket_int(1) == FracBi::one());
    // [2]_q = q + q^-1, expanded by hand from (q^2 - q^-2)/(q - q^-1)
    FracBi expect = FracBi(LaurentBi(RatQ::q_pow(1) + RatQ::q_pow(-1)));
    CHECK(qbracket_int(2) == expect);
    // [alpha+1]_q q^alpha - [alpha]_q q^(alpha+1) = 1
    FracBi qa = FracBi(LaurentBi::qalpha_pow(1));
    FracBi qa1 = FracBi(LaurentBi::monomial(RatQ::q_pow(1), 2));
    CHECK(qbracket_alpha(1) * qa - qbracket_alpha(0) * qa1 == FracBi::one());
}

TEST_CASE("degree functions on the printed examples") {
    FracBi qa = FracBi(LaurentBi::qalpha_pow(1));
    FracBi qa_inv = FracBi(LaurentBi::qalpha_pow(-1));
    CHECK(deg_z(qa) == mpq_class(1));
    CHECK(deg_z(FracBi::one()) == mpq_class(0));
    CHECK(deg_z(qbracket_alpha(0).inverse()) == mpq_class(-1));
    CHECK(deg_z(qbracket_alpha(0)) == mpq_class(1));
    CHECK(deg_z(qbracket_alpha(1)) == mpq_class(1));
    CHECK(deg_t(qa_inv) == mpq_class(1));
    CHECK(deg_t(qbracket_alpha(1)) == mpq_class(1));
    CHECK(deg_t(qbracket_alpha(0).inverse()) == mpq_class(-1));
    CHECK(deg_t(qa) == mpq_class(-1));
}

TEST_CASE("degree additivity under multiplication") {
    Rng rng;
    for (int it = 0; it < 300; ++it) {
        FracBi p = random_frac(rng), q = random_frac(rng);
        if (p.is_zero() || q.is_zero()) continue;
        FracBi pq = p * q;
        REQUIRE(!pq.is_zero());
        CHECK(deg_z(pq) == deg_z(p) + deg_z(q));
        CHECK(deg_t(pq) == deg_t(p) + deg_t(q));
    }
}

TEST_CASE("ring and field axioms on random inputs") {
    Rng rng;
    for (int it = 0; it < 1000; ++it) {
        LaurentBi a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
    for (int it = 0; it < 200; ++it) {
        FracBi x = random_frac(rng), y = random_frac(rng);
        CHECK(x * y == y * x);
        if (!y.is_zero()) {
            CHECK((x / y) * y == x);
            CHECK(y * y.inverse() == FracBi::one());
        }
        // a/b = c/d iff ad = cb
        CHECK(x.num() * y.den() * y.num() * x.den() ==
              y.num() * x.den() * x.num() * y.den());
    }
}

TEST_CASE("span of printed examples") {
    CHECK(span_q2alpha(LaurentBi::one()) == mpq_class(0));
    // (t0 t1 - 1)(t0 + t1) has span 2
    FracBi p = parse_poly("(t0*t1 - 1)*(t0 + t1)");
    CHECK(span_q2alpha(p.as_laurent()) == mpq_class(2));
    // the KT/Conway value has span 6
    CHECK(span_q2alpha(kt_poly()) == mpq_class(6));
}

TEST_CASE("span is invariant under monomial shifts") {
    Rng rng;
    for (int it = 0; it < 200; ++it) {
        LaurentBi x = random_nonzero_laurent(rng);
        LaurentBi m = LaurentBi::monomial(RatQ::s_pow(rng.range(-3, 3)), rng.range(-5, 5));
        CHECK(span_q2alpha(x) == span_q2alpha(x * m));
    }
}

TEST_CASE("t0t1 lattice decode") {
    // u^0 s^0 -> 1
    T0T1Poly one = to_t0t1(LaurentBi::one());
    CHECK(one.coeff(0, 0) == mpq_class(1));
    // s^4 u^4 -> t1, exponent pair (0, 1)
    LaurentBi m = LaurentBi::monomial(RatQ::s_pow(4), 4);
    T0T1Poly t1 = to_t0t1(m);
    CHECK(t1.coeff(0, 1) == mpq_class(1));
    CHECK(t1.terms().size() == 1);
    // off-lattice input reports the offending exponents
    CHECK_THROWS_AS(to_t0t1(LaurentBi::u_pow(2)), std::domain_error);
    CHECK_THROWS_AS(to_t0t1(LaurentBi(RatQ::s_pow(2))), std::domain_error);
    CHECK_THROWS_AS(to_t0t1(LaurentBi(qbracket_alpha(0).num().coeff(2))), std::domain_error);
}

TEST_CASE("embed then decode is the identity on the lattice") {
    Rng rng;
    for (int it = 0; it < 300; ++it) {
        T0T1Poly p;
        int terms = rng.range(0, 4);
        for (int i = 0; i < terms; ++i)
            p.add(rng.range(-3, 3), rng.range(-3, 3), mpq_class(rng.range(-5, 5)));
        LaurentBi embedded = p.embed();
        CHECK(to_t0t1(embedded) == p);
    }
}

TEST_CASE("specializations of printed examples") {
    // (t0 t1 - 1)(t0 + t1) vanishes under t1 := t0^-1
    T0T1Poly p = to_t0t1(parse_poly("(t0*t1 - 1)*(t0 + t1)").as_laurent());
    CHECK(p.specialize_t1(+1).empty());
    // 1 stays 1 under either rule
    T0T1Poly one = to_t0t1(LaurentBi::one());
    auto spos = one.specialize_t1(+1);
    auto sneg = one.specialize_t1(-1);
    REQUIRE(spos.size() == 1);
    CHECK(spos.begin()->first == 0);
    CHECK(spos.begin()->second == 1);
    REQUIRE(sneg.size() == 1);
    CHECK(sneg.begin()->second == 1);
}

TEST_CASE("KT value is on the lattice and specializes to Alexander 1") {
    LaurentBi kt = kt_poly();
    T0T1Poly p = to_t0t1(kt);
    CHECK(p.span() == mpq_class(6));
    // Both specializations must be a unit (+- t0^k), since Delta(KT) = 1.
    for (int sign : {+1, -1}) {
        auto s = p.specialize_t1(sign);
        REQUIRE(s.size() == 1);
        mpq_class c = s.begin()->second;
        CHECK((c == 1 || c == -1));
    }
}

TEST_CASE("text round trip through the three styles") {
    LaurentBi kt = kt_poly();
    for (PolyStyle st : {PolyStyle::QQA, PolyStyle::SU, PolyStyle::T0T1}) {
        std::string text = render(kt, st);
        FracBi back = parse_poly(text);
        CHECK(back.as_laurent() == kt);
    }
    Rng rng;
    for (int it = 0; it < 100; ++it) {
        LaurentBi x = random_laurent(rng);
        CHECK(parse_poly(render(x, PolyStyle::SU)).as_laurent() == x);
        CHECK(parse_poly(render(x, PolyStyle::QQA)).as_laurent() == x);
    }
}
