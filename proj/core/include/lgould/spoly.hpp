#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lgould {

/// Integer Laurent polynomial in the square-root variable s (s^2 = q).
/// Dense coefficient storage with an explicit lowest exponent; the
/// invariant is that the first and last stored coefficients are nonzero.
class SPoly {
public:
    SPoly() = default;
    SPoly(long c);
    SPoly(const mpz_class& c);
    /// Monomial c * s^e.
    SPoly(const mpz_class& c, int e);

    static SPoly zero() { return SPoly(); }
    static SPoly one() { return SPoly(1); }
    /// s^e
    static SPoly monomial(int e) { return SPoly(1, e); }

    bool is_zero() const { return coeff_.empty(); }
    bool is_one() const;
    /// True when the polynomial is c * s^e for a single term.
    bool is_monomial() const { return coeff_.size() == 1; }

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(coeff_.size()) - 1; }
    const mpz_class& coeff(int e) const;
    const mpz_class& lead() const { return coeff_.back(); }
    const mpz_class& trail() const { return coeff_.front(); }
    size_t term_count() const;

    SPoly operator-() const;
    SPoly operator+(const SPoly& o) const;
    SPoly operator-(const SPoly& o) const;
    SPoly operator*(const SPoly& o) const;
    SPoly& operator+=(const SPoly& o) { *this = *this + o; return *this; }
    SPoly& operator-=(const SPoly& o) { *this = *this - o; return *this; }
    SPoly& operator*=(const SPoly& o) { *this = *this * o; return *this; }
    bool operator==(const SPoly& o) const { return lo_ == o.lo_ && coeff_ == o.coeff_; }
    bool operator!=(const SPoly& o) const { return !(*this == o); }

    SPoly shifted(int e) const;
    SPoly pow(unsigned n) const;

    /// gcd of all coefficients, zero for the zero polynomial.
    mpz_class content() const;
    /// Content-free part with positive leading coefficient, shifted to lo = 0.
    SPoly primitive_part() const;

    /// Exact division; aborts if the division is not exact.
    SPoly divided_exact(const SPoly& d) const;
    /// Primitive gcd (lo = 0, positive leading coefficient).
    static SPoly gcd(const SPoly& a, const SPoly& b);

    mpq_class eval(const mpq_class& s) const;
    uint64_t eval_mod(uint64_t s, uint64_t p) const;

    std::string str(const std::string& var = "s") const;

    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < coeff_.size(); ++i)
            if (coeff_[i] != 0) f(lo_ + static_cast<int>(i), coeff_[i]);
    }

private:
    void trim();
    int lo_ = 0;
    std::vector<mpz_class> coeff_;
};

}  // namespace lgould
