#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "wn/errors.hpp"

namespace wn {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.  Every computation in the library is exact.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}          // NOLINT: implicit by design
    Rational(int n) : v_(n) {}           // NOLINT
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw InvalidInput("Rational: zero denominator");
        v_.canonicalize();
    }

    /// Parses "n" or "n/d" in base 10.
    static Rational from_string(const std::string& s) {
        Rational r;
        if (mpq_set_str(r.v_.get_mpq_t(), s.c_str(), 10) != 0)
            throw InvalidInput("Rational: cannot parse '" + s + "'");
        if (mpz_sgn(mpq_denref(r.v_.get_mpq_t())) == 0)
            throw InvalidInput("Rational: zero denominator in '" + s + "'");
        r.v_.canonicalize();
        return r;
    }

    std::string to_string() const { return v_.get_str(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return mpz_cmp_ui(v_.get_den_mpz_t(), 1) == 0; }
    int sign() const { return sgn(v_); }

    /// Integer value; throws unless the denominator is 1 and it fits a long.
    long to_long() const {
        if (!is_integer() || !v_.get_num().fits_slong_p())
            throw InvalidInput("Rational: " + to_string() + " is not a small integer");
        return v_.get_num().get_si();
    }

    /// Rough magnitude in limbs, used as a pivot-selection heuristic.
    std::size_t size_hint() const {
        return mpz_size(v_.get_num_mpz_t()) + mpz_size(v_.get_den_mpz_t());
    }

    Rational operator-() const { Rational r; r.v_ = -v_; return r; }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw InvalidInput("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_.get_str();
}

} // namespace wn
