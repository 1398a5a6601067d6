#ifndef CPOW_SERIES_HPP
#define CPOW_SERIES_HPP

#include "cpow/cascade.hpp"

namespace cpw {

// Finite coefficient sequence in z with declared order.
struct TruncatedPowerSeries {
    std::vector<Scalar> coeffs; // indexed 0..order

    long order() const { return static_cast<long>(coeffs.size()) - 1; }

    Scalar eval(const Scalar& z) const {
        Scalar acc(z.digits());
        for (size_t k = coeffs.size(); k-- > 0;) acc = acc * z + coeffs[k];
        return acc;
    }
};

struct BCoeffKey {
    long j; // power index >= 0
    int r;  // shift index >= 1
    long m; // reciprocal power >= 0
};

// Taylor coefficient of (z+2^r)^{-m} about z = 0:
// b(0,r,m) = 2^{-rm}, b(j,r,m) = C(m+j-1,j) (-1)^j 2^{-r(m+j)}.
Scalar b_coeff(const BCoeffKey& key, unsigned digits);

// Coefficients b(j,r,m) for j = 0..J; the constant series [1,0,...] for m=0.
TruncatedPowerSeries shifted_reciprocal_series(int r, long m, long J, unsigned digits);

// Cauchy product truncated at `order`.
TruncatedPowerSeries ps_mul(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b,
                            long order);

// The bracket [sum_m C(A,m) z^m sum_j b(j,r,m) z^j] as iterated sums: the
// inner j-sum is driven to tolerance per m, then the m-sum to tolerance.
SeriesResult shifted_factor_sum(const Scalar& z, int r, const Exponent& A, const Real& tol,
                                long max_terms);

// Product form for 1 < |z| < 2: base series in z/2 times the r=1 bracket.
EvalReport eval_eq8(const Scalar& z, const Exponent& A, const EvalOptions& opts);

// (z+2^r)^{-m} = 2^{-rm} (1 + z/2^r)^{-m}, the second factor evaluated by
// the series pipeline under z -> z/2^r, A -> -m; bottoms out at m0 <= 1.
Scalar recursive_reciprocal_pow(const Scalar& z, int r, long m, const Real& tol, int depth,
                                long max_terms = 10000);

// Product form for |z| > 2: base series in z/2^m0, the r=m0 bracket, and the
// r = 1..m0-1 groups with reciprocal powers from recursive_reciprocal_pow.
// depth < 0 selects the default m0+2.
EvalReport eval_eq9(const Scalar& z, const Exponent& A, const EvalOptions& opts, int depth = -1);

} // namespace cpw

#endif
