#ifndef CPOW_SCALAR_HPP
#define CPOW_SCALAR_HPP

#include <utility>

#include "cpow/real.hpp"

namespace cpw {

// Complex number in configurable-precision floating point. Both parts share
// one precision; arithmetic between Scalars of different precision throws.
class Scalar {
  public:
    explicit Scalar(unsigned digits) : re_(digits), im_(digits) {}
    Scalar(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {
        require_same_digits(re_, im_);
    }
    explicit Scalar(Real re) : re_(std::move(re)), im_(re_.digits()) {}
    Scalar(double re, double im, unsigned digits) : re_(re, digits), im_(im, digits) {}
    Scalar(long re, unsigned digits) : re_(re, digits), im_(digits) {}

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }
    unsigned digits() const { return re_.digits(); }

    Scalar to_digits(unsigned digits) const {
        return Scalar(re_.to_digits(digits), im_.to_digits(digits));
    }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator*=(const Real& x);

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Real& x);
    friend Scalar operator-(const Scalar& a);
    friend bool operator==(const Scalar& a, const Scalar& b);

    friend Real abs(const Scalar& z);           // modulus
    friend Real arg(const Scalar& z);           // in (-pi, pi]
    friend Scalar log_principal(const Scalar& z);
    friend Scalar exp_c(const Scalar& z);
    friend Scalar ldexp2(const Scalar& z, long k);

  private:
    Real re_, im_;
};

inline Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

inline Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

inline Scalar& Scalar::operator*=(const Scalar& o) {
    Real r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
}

inline Scalar& Scalar::operator*=(const Real& x) {
    re_ *= x;
    im_ *= x;
    return *this;
}

inline Scalar operator+(const Scalar& a, const Scalar& b) {
    return Scalar(a.re_ + b.re_, a.im_ + b.im_);
}

inline Scalar operator-(const Scalar& a, const Scalar& b) {
    return Scalar(a.re_ - b.re_, a.im_ - b.im_);
}

inline Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

inline Scalar operator/(const Scalar& a, const Scalar& b) {
    Real n = b.re_ * b.re_ + b.im_ * b.im_;
    return Scalar((a.re_ * b.re_ + a.im_ * b.im_) / n, (a.im_ * b.re_ - a.re_ * b.im_) / n);
}

inline Scalar operator*(const Scalar& a, const Real& x) {
    return Scalar(a.re_ * x, a.im_ * x);
}

inline Scalar operator-(const Scalar& a) { return Scalar(-a.re_, -a.im_); }

inline bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
}

inline Real abs(const Scalar& z) { return hypot(z.re_, z.im_); }

inline Real arg(const Scalar& z) { return atan2(z.im_, z.re_); }

inline Scalar log_principal(const Scalar& z) {
    return Scalar(log(abs(z)), arg(z));
}

inline Scalar exp_c(const Scalar& z) {
    Real m = exp(z.re_);
    return Scalar(m * cos(z.im_), m * sin(z.im_));
}

inline Scalar ldexp2(const Scalar& z, long k) {
    return Scalar(ldexp2(z.re_, k), ldexp2(z.im_, k));
}

} // namespace cpw

#endif
