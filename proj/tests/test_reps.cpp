#include "doctest.h"

#include "lgould/fixtures.hpp"
#include "lgould/reps.hpp"
#include "lgould/verify.hpp"

using namespace lgould;

TEST_CASE("printed matrices are reproduced entrywise by the construction") {
    VerifyReport rep = verify_matrices();
    for (const auto& c : rep.checks) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.pass);
    }
}

TEST_CASE("spot checks named in the construction") {
    const Rep& v = v_alpha();
    // matrix(E23)[2,1] = [alpha]_q
    CHECK(v.ladder(Ladder::E23)(1, 0) == qbracket_alpha(0));
    // matrix(qE33) = diag(q^a, q^(a+1), q^(a+1), q^(a+2))
    Mat<FracBi> c3 = v.cartan_matrix(cartan_generator(3));
    CHECK(c3(0, 0) == FracBi(LaurentBi::qalpha_pow(1)));
    CHECK(c3(3, 3) == FracBi(LaurentBi::monomial(RatQ::q_pow(2), 2)));
    // E31 matrix equals the defining product.
    Mat<FracBi> prod = v.ladder(Ladder::E21) * v.ladder(Ladder::E32) -
                       (v.ladder(Ladder::E32) * v.ladder(Ladder::E21))
                           .scaled(FracBi(LaurentBi(RatQ::q_pow(-1))));
    CHECK(prod == v.ladder(Ladder::E31));

    // dual spot checks
    Rep vd = dual(v);
    CHECK(vd.ladder(Ladder::E32)(1, 0) == -FracBi::one());
    CHECK(vd.ladder(Ladder::E32)(3, 2) == FracBi::one());
    CHECK(vd.cartan_matrix(cartan_generator(3))(0, 0) == FracBi(LaurentBi::qalpha_pow(-1)));
}

TEST_CASE("relations pass on all constructed modules") {
    VerifyReport rep = verify_relations();
    for (const auto& c : rep.checks) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.pass);
    }
}

TEST_CASE("tensor with the trivial module is the identity functor") {
    const Rep& v = v_alpha();
    Rep t = tensor(counit_rep(), v);
    for (int g = 0; g < kLadderCount; ++g)
        CHECK(t.ladder(static_cast<Ladder>(g)) == v.ladder(static_cast<Ladder>(g)));
    CHECK(t.sigma_matrix() == v.sigma_matrix());
    Rep t2 = tensor(v, counit_rep());
    for (int g = 0; g < kLadderCount; ++g)
        CHECK(t2.ladder(static_cast<Ladder>(g)) == v.ladder(static_cast<Ladder>(g)));
}

TEST_CASE("caps and cups") {
    const CapsCups& cc = caps_cups();
    // Omega^- equals pi_alpha(K) entrywise.
    Mat<FracBi> k = pivot_k_matrix();
    for (int i = 0; i < 4; ++i) CHECK(cc.omega_minus[i] == k(i, i));
    CHECK(cc.omega_minus[0] == FracBi(LaurentBi::qalpha_pow(-2)));
    // Quantum dimension vanishes: omega^- paired with the identity cup.
    FracBi qdim;
    for (int i = 0; i < 4; ++i) qdim += cc.omega_minus[i] * cc.mho_plus[i];
    CHECK(qdim.is_zero());
    // Zig-zag weights: cap and cup weights are inverse to each other.
    for (int i = 0; i < 4; ++i) {
        CHECK(cc.omega_minus[i] * cc.mho_minus[i] == FracBi::one());
        CHECK(cc.omega_plus[i] * cc.mho_plus[i] == FracBi::one());
    }
}

TEST_CASE("counit axiom evaluated in Pi_alpha") {
    const Rep& v = v_alpha();
    const Rep vd = dual(v);
    for (int gi = 0; gi < kLadderCount; ++gi) {
        Atom g = Atom::make_ladder(static_cast<Ladder>(gi));
        TensorWord d = coproduct_sigma(g);
        // (eps (x) id) Delta(g) evaluated in the dual leg.
        Mat<FracBi> lhs(vd.dim(), vd.dim());
        for (const auto& t : d.terms) {
            FracBi c = counit(t.left) * t.scalar;
            if (!c.is_zero()) lhs = lhs + vd.eval(t.right).scaled(c);
        }
        CHECK(lhs == vd.eval(g));
        Mat<FracBi> rhs(v.dim(), v.dim());
        for (const auto& t : d.terms) {
            FracBi c = counit(t.right) * t.scalar;
            if (!c.is_zero()) rhs = rhs + v.eval(t.left).scaled(c);
        }
        CHECK(rhs == v.eval(g));
    }
}
