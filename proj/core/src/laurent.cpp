#include "lgould/laurent.hpp"

#include <sstream>

namespace lgould {

LaurentBi LaurentBi::monomial(const RatQ& c, int ue) {
    LaurentBi r;
    r.set(ue, c);
    return r;
}

bool LaurentBi::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one();
}

int LaurentBi::lo() const {
    if (terms_.empty()) throw std::domain_error("LaurentBi: lo() of zero");
    return terms_.begin()->first;
}

int LaurentBi::hi() const {
    if (terms_.empty()) throw std::domain_error("LaurentBi: hi() of zero");
    return terms_.rbegin()->first;
}

RatQ LaurentBi::coeff(int ue) const {
    auto it = terms_.find(ue);
    return it == terms_.end() ? RatQ() : it->second;
}

void LaurentBi::set(int ue, const RatQ& c) {
    if (c.is_zero()) terms_.erase(ue);
    else terms_[ue] = c;
}

RatQ LaurentBi::as_scalar() const {
    if (terms_.empty()) return RatQ();
    if (terms_.size() == 1 && terms_.begin()->first == 0) return terms_.begin()->second;
    throw std::domain_error("LaurentBi: not u-free");
}

LaurentBi LaurentBi::operator-() const {
    LaurentBi r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentBi& LaurentBi::operator+=(const LaurentBi& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

LaurentBi& LaurentBi::operator-=(const LaurentBi& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

LaurentBi LaurentBi::operator+(const LaurentBi& o) const {
    LaurentBi r(*this);
    r += o;
    return r;
}

LaurentBi LaurentBi::operator-(const LaurentBi& o) const {
    LaurentBi r(*this);
    r -= o;
    return r;
}

LaurentBi LaurentBi::operator*(const LaurentBi& o) const {
    LaurentBi r;
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            RatQ p = c1 * c2;
            if (p.is_zero()) continue;
            auto it = r.terms_.find(e1 + e2);
            if (it == r.terms_.end()) r.terms_.emplace(e1 + e2, std::move(p));
            else {
                it->second += p;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

LaurentBi LaurentBi::shifted_u(int e) const {
    LaurentBi r;
    for (const auto& [ue, c] : terms_) r.terms_.emplace(ue + e, c);
    return r;
}

LaurentBi LaurentBi::pow(unsigned n) const {
    LaurentBi r = one();
    LaurentBi b = *this;
    while (n) {
        if (n & 1u) r *= b;
        b *= b;
        n >>= 1u;
    }
    return r;
}

mpq_class LaurentBi::eval(const mpq_class& s, const mpq_class& u) const {
    mpq_class acc(0);
    for (const auto& [e, c] : terms_) {
        mpq_class up;
        mpz_class n_pow, d_pow;
        unsigned ae = static_cast<unsigned>(e < 0 ? -e : e);
        mpz_pow_ui(n_pow.get_mpz_t(), u.get_num().get_mpz_t(), ae);
        mpz_pow_ui(d_pow.get_mpz_t(), u.get_den().get_mpz_t(), ae);
        if (e >= 0) up = mpq_class(n_pow) / mpq_class(d_pow);
        else up = mpq_class(d_pow) / mpq_class(n_pow);
        acc += c.eval(s) * up;
    }
    return acc;
}

namespace {
uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    while (e) {
        if (e & 1u) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1u;
    }
    return r;
}
uint64_t upow_mod(uint64_t u, int e, uint64_t p) {
    if (e >= 0) return powmod(u, static_cast<uint64_t>(e), p);
    return powmod(powmod(u, p - 2, p), static_cast<uint64_t>(-static_cast<int64_t>(e)), p);
}
}  // namespace

std::optional<uint64_t> LaurentBi::eval_mod(uint64_t s, uint64_t u, uint64_t p) const {
    uint64_t acc = 0;
    for (const auto& [e, c] : terms_) {
        auto cv = c.eval_mod(s, p);
        if (!cv) return std::nullopt;
        acc = (acc + mulmod(*cv, upow_mod(u, e, p), p)) % p;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// FracBi

namespace {

// u-polynomial with Z[s] coefficients, used for gcd computations where
// fraction-field Euclid would blow up the coefficient degrees.
struct UZPoly {
    std::vector<SPoly> c;  // coefficient of u^i at index i

    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    const SPoly& lead() const { return c.back(); }
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    SPoly content() const {
        SPoly g;
        for (const auto& x : c) {
            if (x.is_zero()) continue;
            g = SPoly::gcd(g, x);
        }
        return g;
    }
    void make_primitive() {
        SPoly g = content();
        if (g.is_zero() || g.is_one()) return;
        for (auto& x : c)
            if (!x.is_zero()) x = x.divided_exact(g);
    }
};

// Clears RatQ denominators; the u-shift and scalar factors are irrelevant
// for gcd purposes.
UZPoly clear_denominators(const LaurentBi& x) {
    UZPoly r;
    if (x.is_zero()) return r;
    SPoly lcm = SPoly::one();
    for (const auto& [e, c] : x.terms()) {
        SPoly g = SPoly::gcd(lcm, c.den());
        lcm = lcm.divided_exact(g) * c.den();
    }
    int lo = x.lo();
    r.c.assign(x.hi() - lo + 1, SPoly());
    for (const auto& [e, c] : x.terms())
        r.c[e - lo] = c.num() * lcm.divided_exact(c.den());
    r.trim();
    r.make_primitive();
    return r;
}

// Primitive pseudo-remainder sequence in u over Z[s].
UZPoly uz_gcd(UZPoly f, UZPoly g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (f.deg() < g.deg()) std::swap(f, g);
    while (!g.is_zero()) {
        // prem(f, g)
        UZPoly r = f;
        int dg = g.deg();
        while (!r.is_zero() && r.deg() >= dg) {
            SPoly rl = r.lead();
            int sh = r.deg() - dg;
            UZPoly nr;
            nr.c.assign(std::max(r.deg(), dg + sh) + 1, SPoly());
            for (int i = 0; i < static_cast<int>(r.c.size()); ++i)
                nr.c[i] = r.c[i] * g.lead();
            for (int i = 0; i <= dg; ++i)
                nr.c[i + sh] -= rl * g.c[i];
            nr.trim();
            r = std::move(nr);
        }
        f = std::move(g);
        r.make_primitive();
        g = std::move(r);
    }
    f.make_primitive();
    return f;
}

// Monic gcd of u-polynomials over Q(s), computed through Z[s][u].
LaurentBi upoly_gcd(const LaurentBi& a, const LaurentBi& b) {
    if (a.is_zero() || b.is_zero()) {
        const LaurentBi& x = a.is_zero() ? b : a;
        if (x.is_zero()) return x;
        LaurentBi r;
        RatQ lead = x.coeff(x.hi());
        for (const auto& [e, c] : x.terms()) r.set(e - x.lo(), c / lead);
        return r;
    }
    UZPoly g = uz_gcd(clear_denominators(a), clear_denominators(b));
    LaurentBi r;
    RatQ lead(g.lead());
    for (int i = 0; i < static_cast<int>(g.c.size()); ++i)
        if (!g.c[i].is_zero()) r.set(i, RatQ(g.c[i]) / lead);
    return r;
}

// Exact division by a u-polynomial over Q(s); the divisor must divide.
LaurentBi upoly_divexact(const LaurentBi& x, const LaurentBi& g) {
    if (x.is_zero()) return x;
    LaurentBi rem = x;
    LaurentBi quot;
    // The quotient exponents of an exact division never drop below
    // x.lo() - g.lo(); use that as the termination guard.
    const int floor_exp = x.lo() - g.lo();
    while (!rem.is_zero()) {
        RatQ f = rem.coeff(rem.hi()) / g.coeff(g.hi());
        int sh = rem.hi() - g.hi();
        if (sh < floor_exp) throw std::domain_error("upoly_divexact: inexact");
        quot.set(sh, f);
        LaurentBi sub;
        for (const auto& [e, c] : g.terms()) sub.set(e + sh, c * f);
        rem -= sub;
    }
    return quot;
}

}  // namespace

FracBi::FracBi(LaurentBi n, LaurentBi d) : num_(std::move(n)), den_(std::move(d)) {
    reduce();
}

void FracBi::reduce() {
    if (den_.is_zero()) throw std::domain_error("FracBi: zero denominator");
    if (num_.is_zero()) {
        den_ = LaurentBi::one();
        return;
    }
    if (den_.is_monomial()) {
        // Dividing by c*u^e needs no gcd.
        RatQ c = den_.coeff(den_.hi());
        int e = den_.hi();
        LaurentBi n;
        for (const auto& [ue, cc] : num_.terms()) n.set(ue - e, cc / c);
        num_ = std::move(n);
        den_ = LaurentBi::one();
        return;
    }
    LaurentBi g = upoly_gcd(num_, den_);
    if (!(g.is_one() || (g.term_count() == 1 && g.lo() == 0))) {
        num_ = upoly_divexact(num_, g);
        den_ = upoly_divexact(den_, g);
    }
    normalize_monic();
}

void FracBi::normalize_monic() {
    // den monic with lowest exponent 0.
    int dlo = den_.lo();
    RatQ lead = den_.coeff(den_.hi());
    if (dlo == 0 && lead.is_one()) return;
    LaurentBi nd, nn;
    for (const auto& [e, c] : den_.terms()) nd.set(e - dlo, c / lead);
    for (const auto& [e, c] : num_.terms()) nn.set(e - dlo, c / lead);
    den_ = std::move(nd);
    num_ = std::move(nn);
}

FracBi FracBi::from_coprime(LaurentBi n, LaurentBi d) {
    FracBi r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    if (r.den_.is_zero()) throw std::domain_error("FracBi: zero denominator");
    if (r.num_.is_zero()) {
        r.den_ = LaurentBi::one();
        return r;
    }
    if (r.den_.is_monomial()) {
        RatQ c = r.den_.coeff(r.den_.hi());
        int e = r.den_.hi();
        LaurentBi nn;
        for (const auto& [ue, cc] : r.num_.terms()) nn.set(ue - e, cc / c);
        r.num_ = std::move(nn);
        r.den_ = LaurentBi::one();
        return r;
    }
    r.normalize_monic();
    return r;
}

const LaurentBi& FracBi::as_laurent() const {
    if (!den_.is_one()) throw std::domain_error("FracBi: has a nontrivial denominator");
    return num_;
}

FracBi FracBi::operator-() const {
    FracBi r(*this);
    r.num_ = -r.num_;
    return r;
}

FracBi FracBi::operator+(const FracBi& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_.is_one() && o.den_.is_one()) {
        FracBi r;
        r.num_ = num_ + o.num_;
        return r;
    }
    if (den_ == o.den_) return FracBi(num_ + o.num_, den_);
    LaurentBi g = upoly_gcd(den_, o.den_);
    if (g.is_one() || (g.term_count() == 1 && g.lo() == 0)) {
        LaurentBi n = num_ * o.den_ + o.num_ * den_;
        LaurentBi d = den_ * o.den_;
        // Denominators are coprime, so only a unit can cancel.
        return from_coprime(std::move(n), std::move(d));
    }
    LaurentBi b1 = upoly_divexact(den_, g);
    LaurentBi d1 = upoly_divexact(o.den_, g);
    LaurentBi n = num_ * d1 + o.num_ * b1;
    if (n.is_zero()) return FracBi();
    LaurentBi h = upoly_gcd(n, g);
    if (!(h.is_one() || (h.term_count() == 1 && h.lo() == 0))) {
        n = upoly_divexact(n, h);
        g = upoly_divexact(g, h);
    }
    return from_coprime(std::move(n), g * b1 * d1);
}

FracBi FracBi::operator-(const FracBi& o) const { return *this + (-o); }

FracBi FracBi::operator*(const FracBi& o) const {
    if (is_zero() || o.is_zero()) return FracBi();
    if (den_.is_one() && o.den_.is_one()) {
        FracBi r;
        r.num_ = num_ * o.num_;
        return r;
    }
    // Cross-cancel: both inputs are reduced, so only the cross gcds matter.
    LaurentBi g1 = upoly_gcd(num_, o.den_);
    LaurentBi g2 = upoly_gcd(o.num_, den_);
    LaurentBi n1 = g1.is_one() ? num_ : upoly_divexact(num_, g1);
    LaurentBi d2 = g1.is_one() ? o.den_ : upoly_divexact(o.den_, g1);
    LaurentBi n2 = g2.is_one() ? o.num_ : upoly_divexact(o.num_, g2);
    LaurentBi d1 = g2.is_one() ? den_ : upoly_divexact(den_, g2);
    return from_coprime(n1 * n2, d1 * d2);
}

FracBi FracBi::operator/(const FracBi& o) const {
    if (o.is_zero()) throw std::domain_error("FracBi: division by zero");
    if (is_zero()) return FracBi();
    return *this * o.inverse();
}

FracBi FracBi::inverse() const {
    if (is_zero()) throw std::domain_error("FracBi: inverse of zero");
    return from_coprime(den_, num_);
}

FracBi FracBi::pow(int n) const {
    if (n == 0) return one();
    FracBi base = n > 0 ? *this : inverse();
    unsigned e = static_cast<unsigned>(n > 0 ? n : -n);
    FracBi r = one();
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

mpq_class FracBi::eval(const mpq_class& s, const mpq_class& u) const {
    mpq_class d = den_.eval(s, u);
    if (d == 0) throw std::domain_error("FracBi: evaluation at a pole");
    return num_.eval(s, u) / d;
}

std::optional<uint64_t> FracBi::eval_mod(uint64_t s, uint64_t u, uint64_t p) const {
    auto d = den_.eval_mod(s, u, p);
    if (!d || *d == 0) return std::nullopt;
    auto n = num_.eval_mod(s, u, p);
    if (!n) return std::nullopt;
    return mulmod(*n, powmod(*d, p - 2, p), p);
}

// ---------------------------------------------------------------------------
// T0T1Poly

mpq_class T0T1Poly::coeff(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void T0T1Poly::add(int a, int b, const mpq_class& c) {
    if (c == 0) return;
    auto key = std::make_pair(a, b);
    auto it = terms_.find(key);
    if (it == terms_.end()) terms_.emplace(key, c);
    else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentBi T0T1Poly::embed() const {
    LaurentBi r;
    for (const auto& [ab, c] : terms_) {
        auto [a, b] = ab;
        r += LaurentBi::monomial(RatQ::monomial(c, 4 * b), 4 * (b - a));
    }
    return r;
}

mpq_class T0T1Poly::span() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no span");
    bool first = true;
    long mx = 0, mn = 0;
    for (const auto& [ab, c] : terms_) {
        long d = ab.first - ab.second;
        if (first) { mx = mn = d; first = false; }
        else { mx = std::max(mx, d); mn = std::min(mn, d); }
    }
    return mpq_class(mx - mn);
}

std::map<int, mpq_class> T0T1Poly::specialize_t1(int sign) const {
    std::map<int, mpq_class> r;
    for (const auto& [ab, c] : terms_) {
        auto [a, b] = ab;
        mpq_class v = c;
        if (sign < 0 && (b % 2 != 0)) v = -v;
        int e = a - b;
        auto it = r.find(e);
        if (it == r.end()) r.emplace(e, v);
        else {
            it->second += v;
            if (it->second == 0) r.erase(it);
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Ring operations from the construction

FracBi qbracket_int(int n) {
    // (q^n - q^-n) / (q - q^-1), trivial u-part.
    RatQ num = RatQ::q_pow(n) - RatQ::q_pow(-n);
    RatQ den = RatQ::q_pow(1) - RatQ::q_pow(-1);
    return FracBi(LaurentBi(num / den));
}

FracBi qbracket_alpha(int n) {
    // (q^(alpha+n) - q^-(alpha+n)) / (q - q^-1)
    RatQ inv_den = (RatQ::q_pow(1) - RatQ::q_pow(-1)).inverse();
    LaurentBi num;
    num.set(2, RatQ::q_pow(n) * inv_den);
    num.set(-2, -(RatQ::q_pow(-n) * inv_den));
    return FracBi(num);
}

mpq_class deg_z(const FracBi& x) {
    if (x.is_zero()) throw std::domain_error("deg_z of zero");
    mpq_class r(x.num().hi());
    r -= x.den().hi();
    r /= 2;
    return r;
}

mpq_class deg_t(const FracBi& x) {
    if (x.is_zero()) throw std::domain_error("deg_t of zero");
    mpq_class r(x.den().lo());
    r -= x.num().lo();
    r /= 2;
    return r;
}

mpq_class span_q2alpha(const LaurentBi& x) {
    if (x.is_zero()) throw std::domain_error("zero polynomial has no span");
    mpq_class r(x.hi() - x.lo());
    r /= 4;
    return r;
}

T0T1Poly to_t0t1(const LaurentBi& x) {
    // Each expanded term must be (rational) * s^r * u^p with p = r = 0 mod 4;
    // a coefficient with several s-terms contributes several lattice points.
    T0T1Poly r;
    for (const auto& [ue, c] : x.terms()) {
        if (c.den().hi() != 0) {
            std::ostringstream os;
            os << "non-rational residual coefficient at u^" << ue << ": " << c.str();
            throw std::domain_error(os.str());
        }
        mpq_class denom(c.den().trail());
        c.num().for_each([&](int se, const mpz_class& cc) {
            if (ue % 4 != 0 || se % 4 != 0) {
                std::ostringstream os;
                os << "off-lattice monomial (u-exponent " << ue << ", s-exponent " << se << ")";
                throw std::domain_error(os.str());
            }
            int b = se / 4;
            int a = b - ue / 4;
            r.add(a, b, mpq_class(cc) / denom);
        });
    }
    return r;
}

}  // namespace lgould
