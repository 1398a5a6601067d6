#include "cpow/numeric.hpp"

namespace cpw {

Exponent::Exponent(Real value) : value_(std::move(value)), terminating_(false), int_value_(0) {
    if (!value_.is_finite()) throw DomainError("exponent must be finite");
    if (value_.is_integer() && !value_.is_negative()) {
        terminating_ = true;
        int_value_ = value_.to_long();
    }
}

Real gen_binomial_real(const Exponent& A, long n) {
    const unsigned d = A.digits();
    Real c(1L, d);
    if (A.terminating() && n > A.int_value()) return Real(d);
    for (long k = 0; k < n; ++k) {
        c *= (A.value() - k);
        c /= (k + 1);
    }
    return c;
}

Scalar gen_binomial(const Exponent& A, long n) {
    return Scalar(gen_binomial_real(A, n));
}

std::vector<Scalar> gen_binomial_seq(const Exponent& A, long N) {
    const unsigned d = A.digits();
    std::vector<Scalar> out;
    out.reserve(static_cast<size_t>(N) + 1);
    Real c(1L, d);
    for (long k = 0; k <= N; ++k) {
        out.emplace_back(c);
        c *= (A.value() - k);
        c /= (k + 1);
    }
    return out;
}

Scalar principal_power(const Scalar& base, const Exponent& A) {
    require_same_digits(base.re(), A.value());
    if (base.is_zero()) {
        if (A.value() > 0) return Scalar(base.digits());
        throw ZeroBase();
    }
    return exp_c(log_principal(base) * A.value());
}

} // namespace cpw
