#pragma once

#include <optional>
#include <string>

#include "lgould/spoly.hpp"

namespace lgould {

/// Element of Q(s), the field of rational functions over the rationals in
/// the square-root variable s (q = s^2).  Stored in a canonical reduced
/// form: the denominator is an ordinary polynomial with nonzero constant
/// term and positive leading coefficient, the primitive parts of numerator
/// and denominator are coprime, and so are their integer contents.
class RatQ {
public:
    RatQ() = default;
    RatQ(long c) : num_(c) {}
    RatQ(const mpz_class& c) : num_(c) {}
    RatQ(const mpq_class& c);
    RatQ(SPoly num, SPoly den = SPoly::one());

    static RatQ zero() { return RatQ(); }
    static RatQ one() { return RatQ(1); }
    /// c * s^e
    static RatQ monomial(const mpq_class& c, int e);
    /// s^e
    static RatQ s_pow(int e) { return RatQ(SPoly(1, e)); }
    /// q^e with q = s^2
    static RatQ q_pow(int e) { return RatQ(SPoly(1, 2 * e)); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    /// True when num and den are single terms (so the value is c * s^e).
    bool is_monomial() const { return num_.is_monomial() && den_.is_monomial(); }

    const SPoly& num() const { return num_; }
    const SPoly& den() const { return den_; }

    /// As an exact rational number if the value is constant in s.
    std::optional<mpq_class> as_rational() const;

    RatQ operator-() const;
    RatQ operator+(const RatQ& o) const;
    RatQ operator-(const RatQ& o) const;
    RatQ operator*(const RatQ& o) const;
    RatQ operator/(const RatQ& o) const;
    RatQ& operator+=(const RatQ& o) { *this = *this + o; return *this; }
    RatQ& operator-=(const RatQ& o) { *this = *this - o; return *this; }
    RatQ& operator*=(const RatQ& o) { *this = *this * o; return *this; }
    RatQ& operator/=(const RatQ& o) { *this = *this / o; return *this; }
    bool operator==(const RatQ& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatQ& o) const { return !(*this == o); }

    RatQ inverse() const;
    RatQ pow(int n) const;

    mpq_class eval(const mpq_class& s) const;
    /// Evaluation mod p; fails (returns nullopt) if the denominator vanishes.
    std::optional<uint64_t> eval_mod(uint64_t s, uint64_t p) const;

    std::string str(const std::string& var = "s") const;

private:
    void reduce();
    SPoly num_;
    SPoly den_ = SPoly::one();
};

}  // namespace lgould
