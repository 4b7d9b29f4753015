#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "lgould/ratq.hpp"

namespace lgould {

/// Exponent conventions used throughout:
///   s = q^(1/2)   (so q = s^2; integer s-exponents hold all half powers of q)
///   u = q^(alpha/2)  (so q^alpha = u^2, and t0 = u^-4, t1 = u^4 s^4)
/// deg_z / deg_t count steps of z = q^alpha = u^2, hence the halving below.

class T0T1Poly;

/// Laurent polynomial in u with coefficients in Q(s).  The universal scalar
/// of the whole computation: every matrix entry the construction produces
/// lives here or in the fraction field FracBi over it.
class LaurentBi {
public:
    LaurentBi() = default;
    LaurentBi(long c) { set(0, RatQ(c)); }
    LaurentBi(const RatQ& c) { set(0, c); }

    static LaurentBi zero() { return LaurentBi(); }
    static LaurentBi one() { return LaurentBi(1); }
    /// c * u^e
    static LaurentBi monomial(const RatQ& c, int ue);
    /// u^e
    static LaurentBi u_pow(int e) { return monomial(RatQ::one(), e); }
    /// q^(alpha*n) = u^(2n)
    static LaurentBi qalpha_pow(int n) { return u_pow(2 * n); }
    /// s^e scalar
    static LaurentBi s_pow(int e) { return LaurentBi(RatQ::s_pow(e)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /// u-free, i.e. lies in Q(s).
    bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
    bool is_monomial() const { return terms_.size() == 1; }

    int lo() const;
    int hi() const;
    size_t term_count() const { return terms_.size(); }
    RatQ coeff(int ue) const;
    void set(int ue, const RatQ& c);
    const std::map<int, RatQ>& terms() const { return terms_; }

    /// The coefficient field element when is_scalar(); throws otherwise.
    RatQ as_scalar() const;

    LaurentBi operator-() const;
    LaurentBi operator+(const LaurentBi& o) const;
    LaurentBi operator-(const LaurentBi& o) const;
    LaurentBi operator*(const LaurentBi& o) const;
    LaurentBi& operator+=(const LaurentBi& o);
    LaurentBi& operator-=(const LaurentBi& o);
    LaurentBi& operator*=(const LaurentBi& o) { *this = *this * o; return *this; }
    bool operator==(const LaurentBi& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentBi& o) const { return !(*this == o); }

    LaurentBi shifted_u(int e) const;
    LaurentBi pow(unsigned n) const;

    mpq_class eval(const mpq_class& s, const mpq_class& u) const;
    std::optional<uint64_t> eval_mod(uint64_t s, uint64_t u, uint64_t p) const;

private:
    std::map<int, RatQ> terms_;  // u-exponent -> nonzero coefficient
};

/// Fraction of LaurentBi, reduced by the univariate gcd in u over Q(s).
/// Canonical form: denominator has lowest u-exponent 0 and leading
/// coefficient 1 (it is a monic polynomial in u).
class FracBi {
public:
    FracBi() = default;
    FracBi(long c) : num_(c) {}
    FracBi(const RatQ& c) : num_(c) {}
    FracBi(const LaurentBi& n) : num_(n) {}
    FracBi(LaurentBi n, LaurentBi d);

    static FracBi zero() { return FracBi(); }
    static FracBi one() { return FracBi(1L); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    const LaurentBi& num() const { return num_; }
    const LaurentBi& den() const { return den_; }
    /// Numerator as LaurentBi when the denominator is 1; throws otherwise.
    const LaurentBi& as_laurent() const;

    FracBi operator-() const;
    FracBi operator+(const FracBi& o) const;
    FracBi operator-(const FracBi& o) const;
    FracBi operator*(const FracBi& o) const;
    FracBi operator/(const FracBi& o) const;
    FracBi& operator+=(const FracBi& o) { *this = *this + o; return *this; }
    FracBi& operator-=(const FracBi& o) { *this = *this - o; return *this; }
    FracBi& operator*=(const FracBi& o) { *this = *this * o; return *this; }
    FracBi& operator/=(const FracBi& o) { *this = *this / o; return *this; }
    bool operator==(const FracBi& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const FracBi& o) const { return !(*this == o); }

    FracBi inverse() const;
    FracBi pow(int n) const;

    mpq_class eval(const mpq_class& s, const mpq_class& u) const;
    std::optional<uint64_t> eval_mod(uint64_t s, uint64_t u, uint64_t p) const;

private:
    void reduce();
    void normalize_monic();
    /// Skip the gcd when numerator and denominator are already coprime.
    static FracBi from_coprime(LaurentBi n, LaurentBi d);
    LaurentBi num_;
    LaurentBi den_ = LaurentBi::one();
};

/// Integer-coefficient Laurent polynomial in t0, t1 (rational coefficients
/// are tolerated so intermediate specializations stay exact).
class T0T1Poly {
public:
    T0T1Poly() = default;

    bool is_zero() const { return terms_.empty(); }
    mpq_class coeff(int a, int b) const;
    void add(int a, int b, const mpq_class& c);
    const std::map<std::pair<int, int>, mpq_class>& terms() const { return terms_; }

    bool operator==(const T0T1Poly& o) const { return terms_ == o.terms_; }

    /// Embedding t0^a t1^b -> u^(4(b-a)) s^(4b).
    LaurentBi embed() const;

    /// span = max(a-b) - min(a-b) over the support; throws on zero.
    mpq_class span() const;

    /// Substitute t1 := t0^-1 (sign = +1) or t1 := -t0^-1 (sign = -1);
    /// returns the univariate Laurent polynomial in t0 as (exponent -> coeff).
    std::map<int, mpq_class> specialize_t1(int sign) const;

private:
    std::map<std::pair<int, int>, mpq_class> terms_;
};

/// q-bracket [x]_q = (q^x - q^-x) / (q - q^-1) for x = n or x = alpha + n.
FracBi qbracket_int(int n);
FracBi qbracket_alpha(int n);

/// Leading z-degree (z = q^alpha) of a Laurent expansion; half-integers are
/// returned as exact rationals; throws on zero input.
mpq_class deg_z(const FracBi& x);
mpq_class deg_t(const FracBi& x);

/// (t0,t1)-span of a nonzero LaurentBi: (max - min u-exponent) / 4.
mpq_class span_q2alpha(const LaurentBi& x);

struct LatticeError {
    int u_exp;
    int s_exp;
};

/// Decode a LaurentBi on the (4Z, 4Z) lattice into a T0T1Poly.  The inverse
/// of T0T1Poly::embed.  Throws std::domain_error (with the offending
/// exponents in the message) when a monomial is off-lattice or a
/// coefficient is not a rational number.
T0T1Poly to_t0t1(const LaurentBi& x);

}  // namespace lgould
