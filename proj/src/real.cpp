#include "cpow/real.hpp"

#include <vector>

namespace cpw {

Real::Real(unsigned digits) : digits_(digits) {
    mpfr_init2(v_, bits_for_digits(digits));
    mpfr_set_zero(v_, 1);
}

Real::Real(double x, unsigned digits) : digits_(digits) {
    mpfr_init2(v_, bits_for_digits(digits));
    mpfr_set_d(v_, x, MPFR_RNDN);
}

Real::Real(long x, unsigned digits) : digits_(digits) {
    mpfr_init2(v_, bits_for_digits(digits));
    mpfr_set_si(v_, x, MPFR_RNDN);
}

Real::Real(const std::string& s, unsigned digits) : digits_(digits) {
    mpfr_init2(v_, bits_for_digits(digits));
    if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw DomainError("unparseable number: " + s);
}

Real::Real(const Real& o) : digits_(o.digits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept : digits_(o.digits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
        digits_ = o.digits_;
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    if (this != &o) {
        mpfr_swap(v_, o.v_);
        digits_ = o.digits_;
    }
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

std::string Real::str() const {
    std::vector<char> buf(digits_ + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", static_cast<int>(digits_) - 1, v_);
    return std::string(buf.data());
}

Real Real::to_digits(unsigned digits) const {
    Real r(digits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

Real Real::pow10(long k, unsigned digits) {
    Real r(digits);
    mpfr_ui_pow_ui(r.v_, 10u, static_cast<unsigned long>(k < 0 ? -k : k), MPFR_RNDN);
    if (k < 0) mpfr_si_div(r.v_, 1, r.v_, MPFR_RNDN);
    return r;
}

Real& Real::operator+=(const Real& o) {
    require_same_digits(*this, o);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(const Real& o) {
    require_same_digits(*this, o);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(const Real& o) {
    require_same_digits(*this, o);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(const Real& o) {
    require_same_digits(*this, o);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(long k) {
    mpfr_mul_si(v_, v_, k, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(long k) {
    mpfr_div_si(v_, v_, k, MPFR_RNDN);
    return *this;
}

Real operator+(const Real& a, const Real& b) {
    require_same_digits(a, b);
    Real r(a.digits_);
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b) {
    require_same_digits(a, b);
    Real r(a.digits_);
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b) {
    require_same_digits(a, b);
    Real r(a.digits_);
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b) {
    require_same_digits(a, b);
    Real r(a.digits_);
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator+(const Real& a, long b) {
    Real r(a.digits_);
    mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, long b) {
    Real r(a.digits_);
    mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, long b) {
    Real r(a.digits_);
    mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, long b) {
    Real r(a.digits_);
    mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a) {
    Real r(a.digits_);
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
}

bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
bool operator!=(const Real& a, const Real& b) { return !(a == b); }
bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }
bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

Real abs(const Real& a) {
    Real r(a.digits_);
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Real sqrt(const Real& a) {
    Real r(a.digits_);
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Real exp(const Real& a) {
    Real r(a.digits_);
    mpfr_exp(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Real log(const Real& a) {
    Real r(a.digits_);
    mpfr_log(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Real cos(const Real& a) {
    Real r(a.digits_);
    mpfr_cos(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Real sin(const Real& a) {
    Real r(a.digits_);
    mpfr_sin(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Real atan2(const Real& y, const Real& x) {
    require_same_digits(y, x);
    Real r(y.digits_);
    mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
    return r;
}

Real hypot(const Real& a, const Real& b) {
    require_same_digits(a, b);
    Real r(a.digits_);
    mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real floor(const Real& a) {
    Real r(a.digits_);
    mpfr_floor(r.v_, a.v_);
    return r;
}

Real ldexp2(const Real& a, long k) {
    Real r(a.digits_);
    mpfr_mul_2si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
}

} // namespace cpw
