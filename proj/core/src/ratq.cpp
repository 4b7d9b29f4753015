#include "lgould/ratq.hpp"

#include <sstream>
#include <stdexcept>

namespace lgould {

RatQ::RatQ(const mpq_class& c) {
    num_ = SPoly(c.get_num());
    den_ = SPoly(c.get_den());
    reduce();
}

RatQ::RatQ(SPoly num, SPoly den) : num_(std::move(num)), den_(std::move(den)) {
    reduce();
}

RatQ RatQ::monomial(const mpq_class& c, int e) {
    return RatQ(SPoly(c.get_num(), e), SPoly(c.get_den()));
}

void RatQ::reduce() {
    if (den_.is_zero()) throw std::domain_error("RatQ: zero denominator");
    if (num_.is_zero()) {
        den_ = SPoly::one();
        return;
    }
    // Move the denominator's s-unit into the numerator.
    if (den_.lo() != 0) {
        num_ = num_.shifted(-den_.lo());
        den_ = den_.shifted(-den_.lo());
    }
    // Cancel the primitive polynomial part.
    SPoly g = SPoly::gcd(num_, den_);
    if (!g.is_one()) {
        int nlo = num_.lo(), dlo = den_.lo();
        num_ = num_.shifted(-nlo).divided_exact(g).shifted(nlo);
        den_ = den_.shifted(-dlo).divided_exact(g).shifted(dlo);
    }
    // Cancel integer content.
    mpz_class cn = num_.content(), cd = den_.content();
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (den_.lead() < 0) c = -c;
    if (c != 1) {
        num_ = num_.divided_exact(SPoly(c));
        den_ = den_.divided_exact(SPoly(c));
    } else if (den_.lead() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

std::optional<mpq_class> RatQ::as_rational() const {
    if (is_zero()) return mpq_class(0);
    if (num_.lo() != 0 || num_.hi() != 0 || den_.hi() != 0) return std::nullopt;
    mpq_class r(num_.trail());
    r /= mpq_class(den_.trail());
    return r;
}

RatQ RatQ::operator-() const {
    RatQ r(*this);
    r.num_ = -r.num_;
    return r;
}

RatQ RatQ::operator+(const RatQ& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    return RatQ(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatQ RatQ::operator-(const RatQ& o) const { return *this + (-o); }

RatQ RatQ::operator*(const RatQ& o) const {
    if (is_zero() || o.is_zero()) return RatQ();
    if (den_.is_one() && o.den_.is_one()) {
        RatQ r;
        r.num_ = num_ * o.num_;
        return r;
    }
    return RatQ(num_ * o.num_, den_ * o.den_);
}

RatQ RatQ::operator/(const RatQ& o) const {
    if (o.is_zero()) throw std::domain_error("RatQ: division by zero");
    if (is_zero()) return RatQ();
    return RatQ(num_ * o.den_, den_ * o.num_);
}

RatQ RatQ::inverse() const {
    if (is_zero()) throw std::domain_error("RatQ: inverse of zero");
    return RatQ(den_, num_);
}

RatQ RatQ::pow(int n) const {
    if (n == 0) return one();
    RatQ base = n > 0 ? *this : inverse();
    unsigned e = static_cast<unsigned>(n > 0 ? n : -n);
    RatQ r = one();
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

mpq_class RatQ::eval(const mpq_class& s) const {
    mpq_class d = den_.eval(s);
    if (d == 0) throw std::domain_error("RatQ: evaluation at a pole");
    return num_.eval(s) / d;
}

std::optional<uint64_t> RatQ::eval_mod(uint64_t s, uint64_t p) const {
    uint64_t d = den_.eval_mod(s, p);
    if (d == 0) return std::nullopt;
    uint64_t n = num_.eval_mod(s, p);
    // p is prime, so Fermat inversion is fine here.
    uint64_t dinv = 1, base = d, e = p - 2;
    while (e) {
        if (e & 1u) dinv = static_cast<uint64_t>((static_cast<unsigned __int128>(dinv) * base) % p);
        base = static_cast<uint64_t>((static_cast<unsigned __int128>(base) * base) % p);
        e >>= 1u;
    }
    return static_cast<uint64_t>((static_cast<unsigned __int128>(n) * dinv) % p);
}

std::string RatQ::str(const std::string& var) const {
    if (den_.is_one()) return num_.str(var);
    std::ostringstream os;
    bool wrap_num = num_.term_count() > 1;
    if (wrap_num) os << "(" << num_.str(var) << ")";
    else os << num_.str(var);
    os << "/";
    if (den_.term_count() > 1) os << "(" << den_.str(var) << ")";
    else os << den_.str(var);
    return os.str();
}

}  // namespace lgould
