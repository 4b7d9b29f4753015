#include "lgould/spoly.hpp"

#include <cassert>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace lgould {

SPoly::SPoly(long c) {
    if (c != 0) coeff_.push_back(mpz_class(c));
}

SPoly::SPoly(const mpz_class& c) {
    if (c != 0) coeff_.push_back(c);
}

SPoly::SPoly(const mpz_class& c, int e) : lo_(e) {
    if (c != 0) coeff_.push_back(c); else lo_ = 0;
}

bool SPoly::is_one() const {
    return coeff_.size() == 1 && lo_ == 0 && coeff_[0] == 1;
}

const mpz_class& SPoly::coeff(int e) const {
    static const mpz_class kZero(0);
    if (coeff_.empty() || e < lo_ || e > hi()) return kZero;
    return coeff_[e - lo_];
}

size_t SPoly::term_count() const {
    size_t n = 0;
    for (const auto& c : coeff_) if (c != 0) ++n;
    return n;
}

void SPoly::trim() {
    size_t front = 0;
    while (front < coeff_.size() && coeff_[front] == 0) ++front;
    if (front == coeff_.size()) {
        coeff_.clear();
        lo_ = 0;
        return;
    }
    size_t back = coeff_.size();
    while (back > front && coeff_[back - 1] == 0) --back;
    if (front > 0 || back < coeff_.size()) {
        coeff_ = std::vector<mpz_class>(coeff_.begin() + front, coeff_.begin() + back);
        lo_ += static_cast<int>(front);
    }
}

SPoly SPoly::operator-() const {
    SPoly r(*this);
    for (auto& c : r.coeff_) c = -c;
    return r;
}

SPoly SPoly::operator+(const SPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    int nlo = std::min(lo_, o.lo_);
    int nhi = std::max(hi(), o.hi());
    SPoly r;
    r.lo_ = nlo;
    r.coeff_.assign(nhi - nlo + 1, mpz_class(0));
    for (size_t i = 0; i < coeff_.size(); ++i) r.coeff_[lo_ - nlo + i] += coeff_[i];
    for (size_t i = 0; i < o.coeff_.size(); ++i) r.coeff_[o.lo_ - nlo + i] += o.coeff_[i];
    r.trim();
    return r;
}

SPoly SPoly::operator-(const SPoly& o) const { return *this + (-o); }

SPoly SPoly::operator*(const SPoly& o) const {
    if (is_zero() || o.is_zero()) return SPoly();
    SPoly r;
    r.lo_ = lo_ + o.lo_;
    r.coeff_.assign(coeff_.size() + o.coeff_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i] == 0) continue;
        for (size_t j = 0; j < o.coeff_.size(); ++j) {
            if (o.coeff_[j] == 0) continue;
            r.coeff_[i + j] += coeff_[i] * o.coeff_[j];
        }
    }
    r.trim();
    return r;
}

SPoly SPoly::shifted(int e) const {
    SPoly r(*this);
    if (!r.is_zero()) r.lo_ += e;
    return r;
}

SPoly SPoly::pow(unsigned n) const {
    SPoly r = one();
    SPoly b = *this;
    while (n > 0) {
        if (n & 1u) r *= b;
        b *= b;
        n >>= 1u;
    }
    return r;
}

mpz_class SPoly::content() const {
    mpz_class g(0);
    for (const auto& c : coeff_) {
        if (c == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

SPoly SPoly::primitive_part() const {
    if (is_zero()) return SPoly();
    mpz_class g = content();
    if (lead() < 0) g = -g;
    SPoly r(*this);
    r.lo_ = 0;
    for (auto& c : r.coeff_) c /= g;
    return r;
}

SPoly SPoly::divided_exact(const SPoly& d) const {
    if (is_zero()) return SPoly();
    if (d.is_zero()) throw std::domain_error("SPoly: division by zero");
    // Long division from the top; must terminate with zero remainder.
    SPoly rem(*this);
    SPoly quot;
    while (!rem.is_zero() && rem.hi() - rem.lo() >= d.hi() - d.lo()) {
        mpz_class q = rem.lead() / d.lead();
        if (q * d.lead() != rem.lead())
            throw std::domain_error("SPoly: inexact division");
        int e = rem.hi() - d.hi();
        SPoly t(q, e);
        quot += t;
        rem -= t * d;
        if (!rem.is_zero() && rem.hi() >= e + d.hi())
            throw std::domain_error("SPoly: inexact division");
    }
    if (!rem.is_zero()) throw std::domain_error("SPoly: inexact division");
    return quot;
}

SPoly SPoly::gcd(const SPoly& a, const SPoly& b) {
    SPoly f = a.primitive_part();
    SPoly g = b.primitive_part();
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (f.hi() < g.hi()) std::swap(f, g);
    // Primitive pseudo-remainder sequence.
    while (!g.is_zero()) {
        // prem(f, g): lead(g)^(deg f - deg g + 1) * f mod g
        int df = f.hi(), dg = g.hi();
        if (df < dg) { std::swap(f, g); continue; }
        SPoly rem = f;
        const mpz_class& gl = g.lead();
        while (!rem.is_zero() && rem.hi() >= dg) {
            SPoly scaled;
            {
                SPoly t(rem.lead(), rem.hi() - dg);
                scaled = t * g;
            }
            rem = rem * SPoly(gl) - scaled;
        }
        f = g;
        g = rem.is_zero() ? SPoly() : rem.primitive_part();
    }
    return f.primitive_part();
}

mpq_class SPoly::eval(const mpq_class& s) const {
    if (is_zero()) return mpq_class(0);
    mpq_class acc(0);
    // Horner over the dense range, then multiply the Laurent shift.
    for (size_t i = coeff_.size(); i-- > 0;) {
        acc = acc * s + mpq_class(coeff_[i]);
    }
    if (lo_ != 0) {
        mpq_class sh(1);
        mpz_class num = s.get_num(), den = s.get_den();
        unsigned e = static_cast<unsigned>(std::abs(lo_));
        mpq_class sp;
        mpz_class n_pow, d_pow;
        mpz_pow_ui(n_pow.get_mpz_t(), num.get_mpz_t(), e);
        mpz_pow_ui(d_pow.get_mpz_t(), den.get_mpz_t(), e);
        if (lo_ > 0) sp = mpq_class(n_pow) / mpq_class(d_pow);
        else sp = mpq_class(d_pow) / mpq_class(n_pow);
        acc *= sp;
        (void)sh;
    }
    return acc;
}

namespace {
uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    while (e) {
        if (e & 1u) r = mulmod_u64(r, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1u;
    }
    return r;
}
uint64_t invmod_u64(uint64_t a, uint64_t p) { return powmod_u64(a % p, p - 2, p); }
uint64_t mpz_mod_u64(const mpz_class& z, uint64_t p) {
    mpz_class m = z % mpz_class(std::to_string(p));
    if (m < 0) m += mpz_class(std::to_string(p));
    return m.get_ui();
}
}  // namespace

uint64_t SPoly::eval_mod(uint64_t s, uint64_t p) const {
    if (is_zero()) return 0;
    uint64_t acc = 0;
    for (size_t i = coeff_.size(); i-- > 0;) {
        acc = mulmod_u64(acc, s, p);
        acc = (acc + mpz_mod_u64(coeff_[i], p)) % p;
    }
    uint64_t sh;
    if (lo_ >= 0) sh = powmod_u64(s, static_cast<uint64_t>(lo_), p);
    else sh = powmod_u64(invmod_u64(s, p), static_cast<uint64_t>(-static_cast<int64_t>(lo_)), p);
    return mulmod_u64(acc, sh, p);
}

std::string SPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeff_.size(); i-- > 0;) {
        const mpz_class& c = coeff_[i];
        if (c == 0) continue;
        int e = lo_ + static_cast<int>(i);
        mpz_class a = c < 0 ? mpz_class(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || e == 0) os << a.get_str();
        if (e != 0) {
            if (a != 1) os << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace lgould
