#include "lgould/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace lgould {

int parity(Ladder g) {
    switch (g) {
        case Ladder::E21:
        case Ladder::E12: return 0;
        case Ladder::E32:
        case Ladder::E23:
        case Ladder::E31:
        case Ladder::E13: return 1;
    }
    return 0;
}

const char* name(Ladder g) {
    switch (g) {
        case Ladder::E21: return "E21";
        case Ladder::E12: return "E12";
        case Ladder::E32: return "E32";
        case Ladder::E23: return "E23";
        case Ladder::E31: return "E31";
        case Ladder::E13: return "E13";
    }
    return "?";
}

CartanMono cartan_generator(int i) {
    switch (i) {
        case 1: return {2, 0, 0};
        case 2: return {0, 2, 0};
        case 3: return {0, 0, 2};
    }
    throw std::invalid_argument("cartan_generator: i must be 1..3");
}

bool Atom::operator==(const Atom& o) const {
    if (kind != o.kind) return false;
    if (kind == CARTAN) return cartan == o.cartan;
    if (kind == LADDER) return ladder == o.ladder;
    return true;
}

int parity(const Word& w) {
    int p = 0;
    for (const auto& a : w) p ^= a.parity_of();
    return p;
}

WordSum WordSum::operator+(const WordSum& o) const {
    WordSum r(*this);
    r.terms.insert(r.terms.end(), o.terms.begin(), o.terms.end());
    return r;
}

WordSum WordSum::operator-(const WordSum& o) const {
    WordSum r(*this);
    for (const auto& [c, w] : o.terms) r.terms.push_back({-c, w});
    return r;
}

WordSum WordSum::scaled(const FracBi& c) const {
    WordSum r;
    for (const auto& [c0, w] : terms) r.terms.push_back({c0 * c, w});
    return r;
}

TensorWord TensorWord::operator*(const TensorWord& o) const {
    TensorWord r;
    for (const auto& t1 : terms) {
        for (const auto& t2 : o.terms) {
            Term t;
            t.scalar = t1.scalar * t2.scalar;
            t.left = t1.left;
            t.left.insert(t.left.end(), t2.left.begin(), t2.left.end());
            t.right = t1.right;
            t.right.insert(t.right.end(), t2.right.begin(), t2.right.end());
            r.terms.push_back(std::move(t));
        }
    }
    return r;
}

TensorWord TensorWord::operator+(const TensorWord& o) const {
    TensorWord r(*this);
    r.terms.insert(r.terms.end(), o.terms.begin(), o.terms.end());
    return r;
}

TensorWord TensorWord::scaled(const FracBi& c) const {
    TensorWord r(*this);
    for (auto& t : r.terms) t.scalar = t.scalar * c;
    return r;
}

void TensorWord::normalize() {
    std::vector<Term> out;
    for (auto& t : terms) {
        bool merged = false;
        for (auto& u : out) {
            if (u.left == t.left && u.right == t.right) {
                u.scalar += t.scalar;
                merged = true;
                break;
            }
        }
        if (!merged) out.push_back(std::move(t));
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const Term& t) { return t.scalar.is_zero(); }),
              out.end());
    terms = std::move(out);
}

namespace {

Atom C(int a2, int b2, int c2) { return Atom::make_cartan({a2, b2, c2}); }
Atom L(Ladder g) { return Atom::make_ladder(g); }
Atom Sg() { return Atom::make_sigma(); }

FracBi q_pow(int n) { return FracBi(LaurentBi(RatQ::q_pow(n))); }
FracBi q_minus_qinv() { return q_pow(1) - q_pow(-1); }

TensorWord two_sided(Ladder g, const CartanMono& cart) {
    // Delta(g) = g (x) K^-1 + K (x) g with K the given Cartan monomial;
    // the sigma insertion lands on the second term when g is odd.
    TensorWord r;
    r.terms.push_back({FracBi::one(), {L(g)}, {Atom::make_cartan(cart.inverse())}});
    Word left = {Atom::make_cartan(cart)};
    if (parity(g)) left.push_back(Sg());
    r.terms.push_back({FracBi::one(), left, {L(g)}});
    return r;
}

}  // namespace

TensorWord coproduct_sigma(const Atom& g) {
    TensorWord r;
    switch (g.kind) {
        case Atom::CARTAN:
            r.terms.push_back({FracBi::one(), {g}, {g}});
            return r;
        case Atom::SIGMA:
            r.terms.push_back({FracBi::one(), {Sg()}, {Sg()}});
            return r;
        case Atom::LADDER: break;
    }
    switch (g.ladder) {
        case Ladder::E21: return two_sided(Ladder::E21, {1, -1, 0});
        case Ladder::E12: return two_sided(Ladder::E12, {1, -1, 0});
        case Ladder::E32: return two_sided(Ladder::E32, {0, 1, 1});
        case Ladder::E23: return two_sided(Ladder::E23, {0, 1, 1});
        case Ladder::E13: {
            TensorWord r13 = two_sided(Ladder::E13, {1, 0, 1});
            // - (q - q^-1) q^(1/2)(E11-E22) E23 (x) E12 q^-(1/2)(E22+E33);
            // the right factor is even, so no sigma is inserted.
            r13.terms.push_back({-q_minus_qinv(),
                                 {C(1, -1, 0), L(Ladder::E23)},
                                 {L(Ladder::E12), C(0, -1, -1)}});
            return r13;
        }
        case Ladder::E31: {
            TensorWord r31 = two_sided(Ladder::E31, {1, 0, 1});
            // + (q - q^-1) q^(1/2)(E22+E33) E21 (x) E32 q^-(1/2)(E11-E22);
            // the right factor is odd, so sigma is appended on the left.
            r31.terms.push_back({q_minus_qinv(),
                                 {C(0, 1, 1), L(Ladder::E21), Sg()},
                                 {L(Ladder::E32), C(-1, 1, 0)}});
            return r31;
        }
    }
    throw std::logic_error("coproduct_sigma: unreachable");
}

TensorWord coproduct_sigma_from_product(Ladder g) {
    const TensorWord d21 = coproduct_sigma(L(Ladder::E21));
    const TensorWord d12 = coproduct_sigma(L(Ladder::E12));
    const TensorWord d32 = coproduct_sigma(L(Ladder::E32));
    const TensorWord d23 = coproduct_sigma(L(Ladder::E23));
    if (g == Ladder::E31) {
        // E31 = E21 E32 - q^-1 E32 E21
        TensorWord r = d21 * d32 + (d32 * d21).scaled(-q_pow(-1));
        r.normalize();
        return r;
    }
    if (g == Ladder::E13) {
        // E13 = E23 E12 - q E12 E23
        TensorWord r = d23 * d12 + (d12 * d23).scaled(-q_pow(1));
        r.normalize();
        return r;
    }
    throw std::invalid_argument("coproduct_sigma_from_product: only derived elements");
}

WordSum antipode_sigma(const Atom& g) {
    switch (g.kind) {
        case Atom::CARTAN:
            return WordSum::of(FracBi::one(), {Atom::make_cartan(g.cartan.inverse())});
        case Atom::SIGMA:
            return WordSum::of(FracBi::one(), {Sg()});
        case Atom::LADDER: break;
    }
    switch (g.ladder) {
        case Ladder::E21: return WordSum::of(-q_pow(-1), {L(Ladder::E21)});
        case Ladder::E12: return WordSum::of(-q_pow(1), {L(Ladder::E12)});
        case Ladder::E32: return WordSum::of(-FracBi::one(), {Sg(), L(Ladder::E32)});
        case Ladder::E23: return WordSum::of(-FracBi::one(), {Sg(), L(Ladder::E23)});
        case Ladder::E31: {
            // S(E31) = q^-1 E32 E21 - q^-2 E21 E32, with a sigma prefix.
            WordSum r;
            r.terms.push_back({q_pow(-1), {Sg(), L(Ladder::E32), L(Ladder::E21)}});
            r.terms.push_back({-q_pow(-2), {Sg(), L(Ladder::E21), L(Ladder::E32)}});
            return r;
        }
        case Ladder::E13: {
            // S(E13) = q E12 E23 - q^2 E23 E12, with a sigma prefix.
            WordSum r;
            r.terms.push_back({q_pow(1), {Sg(), L(Ladder::E12), L(Ladder::E23)}});
            r.terms.push_back({-q_pow(2), {Sg(), L(Ladder::E23), L(Ladder::E12)}});
            return r;
        }
    }
    throw std::logic_error("antipode_sigma: unreachable");
}

FracBi counit(const Atom& g) {
    return g.kind == Atom::LADDER ? FracBi::zero() : FracBi::one();
}

FracBi counit(const Word& w) {
    FracBi r = FracBi::one();
    for (const auto& a : w) {
        r *= counit(a);
        if (r.is_zero()) break;
    }
    return r;
}

std::vector<Relation> relation_set() {
    std::vector<Relation> rels;
    auto add = [&](std::string label, WordSum ws) {
        rels.push_back({std::move(label), std::move(ws)});
    };
    const FracBi qinv = q_pow(-1);
    const FracBi q1 = q_pow(1);
    const FracBi r = q_minus_qinv().inverse();

    // Cartan commutativity.
    for (int i = 1; i <= 3; ++i) {
        for (int j = i + 1; j <= 3; ++j) {
            Atom ci = Atom::make_cartan(cartan_generator(i));
            Atom cj = Atom::make_cartan(cartan_generator(j));
            WordSum ws;
            ws.terms.push_back({FracBi::one(), {ci, cj}});
            ws.terms.push_back({-FracBi::one(), {cj, ci}});
            add("cartan-commute-" + std::to_string(i) + std::to_string(j), std::move(ws));
        }
    }
    // Half-power squares (the fixed square-root choice).
    for (int i = 1; i <= 3; ++i) {
        CartanMono full = cartan_generator(i);
        CartanMono half{full.a2 / 2, full.b2 / 2, full.c2 / 2};
        WordSum ws;
        ws.terms.push_back({FracBi::one(), {Atom::make_cartan(half), Atom::make_cartan(half)}});
        ws.terms.push_back({-FracBi::one(), {Atom::make_cartan(full)}});
        add("half-square-" + std::to_string(i), std::move(ws));
    }
    // Cartan-ladder commutations:
    // q^((-1)^|a| Eaa) L q^(-(-1)^|a| Eaa) = q^((-1)^|a| (d_a,sup - d_a,sub)) L.
    struct LadderIdx { Ladder g; int sup, sub; };
    const LadderIdx ladders[] = {
        {Ladder::E21, 1, 2}, {Ladder::E12, 2, 1}, {Ladder::E32, 2, 3}, {Ladder::E23, 3, 2}};
    for (int a = 1; a <= 3; ++a) {
        int eps = (a == 3) ? -1 : 1;
        CartanMono ca = cartan_generator(a);
        if (eps < 0) ca = ca.inverse();
        for (const auto& li : ladders) {
            int pow = eps * ((a == li.sup ? 1 : 0) - (a == li.sub ? 1 : 0));
            WordSum ws;
            ws.terms.push_back({FracBi::one(), {Atom::make_cartan(ca), L(li.g)}});
            ws.terms.push_back({-q_pow(pow), {L(li.g), Atom::make_cartan(ca)}});
            add(std::string("cartan-ladder-") + std::to_string(a) + "-" + name(li.g),
                std::move(ws));
        }
    }
    // Odd squares vanish.
    for (Ladder g : {Ladder::E23, Ladder::E32}) {
        WordSum ws;
        ws.terms.push_back({FracBi::one(), {L(g), L(g)}});
        add(std::string("square-") + name(g), std::move(ws));
    }
    // E21 commutes with E23; E12 commutes with E32.
    {
        WordSum ws;
        ws.terms.push_back({FracBi::one(), {L(Ladder::E21), L(Ladder::E23)}});
        ws.terms.push_back({-FracBi::one(), {L(Ladder::E23), L(Ladder::E21)}});
        add("commute-E21-E23", std::move(ws));
    }
    {
        WordSum ws;
        ws.terms.push_back({FracBi::one(), {L(Ladder::E12), L(Ladder::E32)}});
        ws.terms.push_back({-FracBi::one(), {L(Ladder::E32), L(Ladder::E12)}});
        add("commute-E12-E32", std::move(ws));
    }
    // Interchange rules.
    {
        // E21 E12 - E12 E21 = [E11 - E22]_q
        WordSum ws;
        ws.terms.push_back({FracBi::one(), {L(Ladder::E21), L(Ladder::E12)}});
        ws.terms.push_back({-FracBi::one(), {L(Ladder::E12), L(Ladder::E21)}});
        ws.terms.push_back({-r, {C(2, -2, 0)}});
        ws.terms.push_back({r, {C(-2, 2, 0)}});
        add("interchange-E21-E12", std::move(ws));
    }
    {
        // E32 E23 + E23 E32 = [E22 + E33]_q
        WordSum ws;
        ws.terms.push_back({FracBi::one(), {L(Ladder::E32), L(Ladder::E23)}});
        ws.terms.push_back({FracBi::one(), {L(Ladder::E23), L(Ladder::E32)}});
        ws.terms.push_back({-r, {C(0, 2, 2)}});
        ws.terms.push_back({r, {C(0, -2, -2)}});
        add("interchange-E32-E23", std::move(ws));
    }
    // Serre relations.
    {
        WordSum ws;
        ws.terms.push_back({FracBi::one(), {L(Ladder::E21), L(Ladder::E31)}});
        ws.terms.push_back({-q1, {L(Ladder::E31), L(Ladder::E21)}});
        add("serre-E21-E31", std::move(ws));
    }
    {
        WordSum ws;
        ws.terms.push_back({FracBi::one(), {L(Ladder::E13), L(Ladder::E12)}});
        ws.terms.push_back({-qinv, {L(Ladder::E12), L(Ladder::E13)}});
        add("serre-E13-E12", std::move(ws));
    }
    // Derived element definitions.
    {
        WordSum ws;
        ws.terms.push_back({FracBi::one(), {L(Ladder::E31)}});
        ws.terms.push_back({-FracBi::one(), {L(Ladder::E21), L(Ladder::E32)}});
        ws.terms.push_back({qinv, {L(Ladder::E32), L(Ladder::E21)}});
        add("derived-E31", std::move(ws));
    }
    {
        WordSum ws;
        ws.terms.push_back({FracBi::one(), {L(Ladder::E13)}});
        ws.terms.push_back({-FracBi::one(), {L(Ladder::E23), L(Ladder::E12)}});
        ws.terms.push_back({q1, {L(Ladder::E12), L(Ladder::E23)}});
        add("derived-E13", std::move(ws));
    }
    // Sigma commutations and sigma^2 = 1.
    for (int gi = 0; gi < kLadderCount; ++gi) {
        Ladder g = static_cast<Ladder>(gi);
        int sign = parity(g) ? -1 : 1;
        WordSum ws;
        ws.terms.push_back({FracBi::one(), {Sg(), L(g)}});
        ws.terms.push_back({FracBi(-sign), {L(g), Sg()}});
        add(std::string("sigma-commute-") + name(g), std::move(ws));
    }
    for (int i = 1; i <= 3; ++i) {
        WordSum ws;
        ws.terms.push_back({FracBi::one(), {Sg(), Atom::make_cartan(cartan_generator(i))}});
        ws.terms.push_back({-FracBi::one(), {Atom::make_cartan(cartan_generator(i)), Sg()}});
        add("sigma-commute-cartan-" + std::to_string(i), std::move(ws));
    }
    {
        WordSum ws;
        ws.terms.push_back({FracBi::one(), {Sg(), Sg()}});
        ws.terms.push_back({-FracBi::one(), {}});
        add("sigma-square", std::move(ws));
    }
    return rels;
}

}  // namespace lgould
