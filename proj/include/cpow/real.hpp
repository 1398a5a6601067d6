#ifndef CPOW_REAL_HPP
#define CPOW_REAL_HPP

#include <mpfr.h>

#include <string>

#include "cpow/errors.hpp"

namespace cpw {

constexpr unsigned kMinDigits = 15;
constexpr unsigned kDefaultDigits = 50;

// Working precision is expressed in decimal digits; the mantissa gets a
// fixed guard margin on top of the exact bit equivalent.
inline mpfr_prec_t bits_for_digits(unsigned digits) {
    return static_cast<mpfr_prec_t>(digits * 3.3219280948873623 + 1) + 16;
}

// Extended-precision real number. Every value carries its own precision;
// binary operations require both operands to agree.
class Real {
  public:
    explicit Real(unsigned digits);
    Real(double x, unsigned digits);
    Real(long x, unsigned digits);
    Real(const std::string& s, unsigned digits);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    unsigned digits() const { return digits_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_negative() const { return mpfr_sgn(v_) < 0; }
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    // Scientific notation with digits()-many significant digits.
    std::string str() const;

    // Same value re-rounded to a different working precision.
    Real to_digits(unsigned digits) const;

    static Real pow10(long k, unsigned digits);

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);
    Real& operator*=(long k);
    Real& operator/=(long k);

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    friend Real operator+(const Real& a, long b);
    friend Real operator-(const Real& a, long b);
    friend Real operator*(const Real& a, long b);
    friend Real operator/(const Real& a, long b);
    friend Real operator-(const Real& a);

    friend bool operator<(const Real& a, const Real& b);
    friend bool operator<=(const Real& a, const Real& b);
    friend bool operator>(const Real& a, const Real& b);
    friend bool operator>=(const Real& a, const Real& b);
    friend bool operator==(const Real& a, const Real& b);
    friend bool operator!=(const Real& a, const Real& b);
    friend bool operator<(const Real& a, long b);
    friend bool operator<=(const Real& a, long b);
    friend bool operator>(const Real& a, long b);
    friend bool operator>=(const Real& a, long b);
    friend bool operator==(const Real& a, long b);

    friend Real abs(const Real& a);
    friend Real sqrt(const Real& a);
    friend Real exp(const Real& a);
    friend Real log(const Real& a);
    friend Real cos(const Real& a);
    friend Real sin(const Real& a);
    friend Real atan2(const Real& y, const Real& x);
    friend Real hypot(const Real& a, const Real& b);
    friend Real floor(const Real& a);
    // Exact scaling by 2^k.
    friend Real ldexp2(const Real& a, long k);

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

  private:
    mpfr_t v_;
    unsigned digits_;
};

inline void require_same_digits(const Real& a, const Real& b) {
    if (a.digits() != b.digits()) throw PrecisionMismatch(a.digits(), b.digits());
}

} // namespace cpw

#endif
