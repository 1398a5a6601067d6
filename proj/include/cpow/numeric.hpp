#ifndef CPOW_NUMERIC_HPP
#define CPOW_NUMERIC_HPP

#include <vector>

#include "cpow/scalar.hpp"

namespace cpw {

// Real exponent A. `terminating` is true iff A is a nonnegative integer,
// detected by exact comparison, never by tolerance: termination of the
// binomial series is structural.
class Exponent {
  public:
    explicit Exponent(Real value);
    Exponent(double value, unsigned digits) : Exponent(Real(value, digits)) {}
    Exponent(long value, unsigned digits) : Exponent(Real(value, digits)) {}

    const Real& value() const { return value_; }
    unsigned digits() const { return value_.digits(); }
    bool terminating() const { return terminating_; }
    // Valid only when terminating().
    long int_value() const { return int_value_; }

  private:
    Real value_;
    bool terminating_;
    long int_value_;
};

// Generalized binomial coefficient C(A,n) = A(A-1)...(A-n+1)/n!, via the
// multiplicative recurrence c0 = 1, c_{k+1} = c_k (A-k)/(k+1). For integer
// A >= 0 and n > A the recurrence hits the factor (A-A) and the result is
// exactly zero.
Real gen_binomial_real(const Exponent& A, long n);
Scalar gen_binomial(const Exponent& A, long n);

// [C(A,0), ..., C(A,N)]; element k is bit-for-bit gen_binomial(A,k).
std::vector<Scalar> gen_binomial_seq(const Exponent& A, long N);

// exp(A log base) with the principal branch of the logarithm.
Scalar principal_power(const Scalar& base, const Exponent& A);

} // namespace cpw

#endif
