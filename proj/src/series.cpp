#include "cpow/series.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

namespace cpw {

namespace {

// Write-once row cache for b(.,r,m); rows only ever grow. Hot loops use
// incremental term recurrences instead and never touch this.
std::map<std::tuple<int, long, unsigned>, std::vector<Real>> b_rows;
std::mutex b_rows_mutex;

const std::vector<Real>& b_row_locked(int r, long m, long J, unsigned digits) {
    auto& row = b_rows[{r, m, digits}];
    if (static_cast<long>(row.size()) <= J) {
        if (row.empty()) row.push_back(ldexp2(Real(1L, digits), -r * m));
        while (static_cast<long>(row.size()) <= J) {
            const long j = static_cast<long>(row.size()) - 1;
            // b(j+1)/b(j) = -(m+j) / ((j+1) 2^r)
            Real next = row.back() * (m + j) / (j + 1);
            row.push_back(ldexp2(-next, -r));
        }
    }
    return row;
}

} // namespace

Scalar b_coeff(const BCoeffKey& key, unsigned digits) {
    if (key.j < 0 || key.r < 1 || key.m < 0) throw DomainError("invalid b-coefficient key");
    if (key.m == 0) return Scalar(key.j == 0 ? 1L : 0L, digits);
    std::lock_guard<std::mutex> lock(b_rows_mutex);
    return Scalar(b_row_locked(key.r, key.m, key.j, digits)[key.j]);
}

TruncatedPowerSeries shifted_reciprocal_series(int r, long m, long J, unsigned digits) {
    if (r < 1 || m < 0 || J < 0) throw DomainError("invalid series request");
    TruncatedPowerSeries s;
    s.coeffs.reserve(static_cast<size_t>(J) + 1);
    if (m == 0) {
        for (long j = 0; j <= J; ++j) s.coeffs.emplace_back(j == 0 ? 1L : 0L, digits);
        return s;
    }
    std::lock_guard<std::mutex> lock(b_rows_mutex);
    const auto& row = b_row_locked(r, m, J, digits);
    for (long j = 0; j <= J; ++j) s.coeffs.emplace_back(row[j]);
    return s;
}

TruncatedPowerSeries ps_mul(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b,
                            long order) {
    if (a.coeffs.empty() || b.coeffs.empty()) throw DomainError("empty series");
    if (order > a.order() + b.order()) throw DomainError("order exceeds product order");
    const unsigned d = a.coeffs[0].digits();
    TruncatedPowerSeries out;
    out.coeffs.reserve(static_cast<size_t>(order) + 1);
    for (long k = 0; k <= order; ++k) {
        Scalar c(d);
        const long lo = std::max<long>(0, k - b.order());
        const long hi = std::min<long>(k, a.order());
        for (long i = lo; i <= hi; ++i) c += a.coeffs[i] * b.coeffs[k - i];
        out.coeffs.push_back(std::move(c));
    }
    return out;
}

namespace {

// The inner Taylor terms b(j,r,m) z^j alternate and, for large m, grow to a
// peak near j = qm/(1-q) before decaying; the sum itself is |z+2^r|^{-m}.
// The cancellation between peak and sum is what the working precision must
// absorb, so the inner sum runs with that many extra digits.
unsigned inner_guard_digits(double q, double shifted_abs, int r, long m) {
    if (m < 2 || q <= 0.0) return 0;
    const double jstar = std::max(0.0, q * static_cast<double>(m) / (1.0 - q));
    const double ln_peak = std::lgamma(m + jstar) - std::lgamma(jstar + 1.0) -
                           std::lgamma(static_cast<double>(m)) + jstar * std::log(q) -
                           static_cast<double>(r) * m * std::log(2.0);
    const double ln_sum = -static_cast<double>(m) * std::log(shifted_abs);
    const double ln_ratio = ln_peak - ln_sum;
    if (ln_ratio <= 0.0) return 0;
    return static_cast<unsigned>(ln_ratio / std::log(10.0)) + 6;
}

// sum_j b(j,r,m) z^j to inner_tol (relative), m >= 1; returns the rounded
// sum and the certified absolute tail bound, both at the precision of z.
struct InnerSum {
    Scalar value;
    Real bound_abs;
    long terms;
};

InnerSum inner_taylor_sum(const Scalar& z, int r, long m, const Real& inner_tol,
                          long max_terms, double q_d, double shifted_abs_d) {
    const unsigned d = z.digits();
    const unsigned dh = d + inner_guard_digits(q_d, shifted_abs_d, r, m);
    const Scalar zh = z.to_digits(dh);
    const Real zabs_h = abs(zh);
    const Real tol_h = inner_tol.to_digits(dh);
    const Real one(1L, dh);

    Scalar t(ldexp2(Real(1L, dh), -static_cast<long>(r) * m));
    Scalar S = t;
    for (long j = 0;; ++j) {
        if (j >= max_terms) throw NoConvergence("inner sum certificate not met");
        // t becomes t_{j+1}
        t *= zh;
        t *= ldexp2(Real(-(m + j), dh) / (j + 1), -r);
        const Real rho = ldexp2(Real(m + j + 1, dh) / (j + 2), -r) * zabs_h;
        if (rho < 1) {
            const Real bound = abs(t) / (one - rho);
            if (bound <= tol_h * abs(S))
                return InnerSum{S.to_digits(d), bound.to_digits(d), j + 1};
        }
        S += t;
    }
}

} // namespace

SeriesResult shifted_factor_sum(const Scalar& z, int r, const Exponent& A, const Real& tol,
                                long max_terms) {
    const unsigned d = z.digits();
    const Real one(1L, d);
    const Real zabs = abs(z);
    const Real q = ldexp2(zabs, -r); // inner j-term ratio scale |z|/2^r
    if (!(q < 2)) throw DomainError("inner Taylor series requires |z| < 2^{r+1}");
    const Scalar shifted = z + Scalar(ldexp2(Real(1L, d), r));
    if (shifted.is_zero()) throw SingularShift(r);
    const Real shifted_abs = abs(shifted);
    const Real u_abs = zabs / shifted_abs;
    if (!(u_abs < 1)) throw OutOfRegion({r});

    long m_cap;
    if (A.terminating()) {
        m_cap = A.int_value();
    } else {
        const double u = u_abs.to_double();
        const double t = tol.to_double();
        m_cap = static_cast<long>(std::ceil(std::log(t * (1.0 - u)) / std::log(u)));
        m_cap = std::clamp<long>(m_cap, 8, max_terms);
    }
    const Real inner_tol = tol / (4L * (m_cap + 1));

    Scalar bracket(d);
    Scalar zpow(1L, d);       // z^m
    Real cAm(1L, d);          // C(A,m)
    Real chat(1L, d);         // |C(A,m)| u^m, drives the outer certificate
    Real zabs_pow(1L, d);     // |z|^m
    Real inner_err_abs(d);
    const Real Aabs = abs(A.value());

    long m = 0;
    Real outer_tail(d);
    for (;; ++m) {
        if (m >= max_terms) throw NoConvergence("outer sum certificate not met");

        // inner j-sum: sum_j b(j,r,m) z^j to inner_tol
        Scalar S(1L, d);
        if (m > 0) {
            InnerSum inner = inner_taylor_sum(z, r, m, inner_tol, max_terms,
                                              q.to_double(), shifted_abs.to_double());
            S = std::move(inner.value);
            inner_err_abs += inner.bound_abs * abs(cAm) * zabs_pow;
        }

        bracket += (zpow * S) * cAm;

        if (A.terminating() && m == A.int_value()) {
            ++m;
            break;
        }

        // outer certificate on |C(A,m+1)| u^{m+1}
        const Real step = abs(A.value() - m) / (m + 1);
        chat *= u_abs * step;
        if (!A.terminating() && Aabs <= m) {
            const Real rho_out = u_abs * (one + (Aabs + 1) / (m + 1));
            if (rho_out < 1) {
                const Real bound = chat / (one - rho_out);
                if (bound <= tol * abs(bracket)) {
                    outer_tail = bound;
                    ++m;
                    break;
                }
            }
        }
        cAm *= (A.value() - m) / (m + 1);
        zpow *= z;
        zabs_pow *= zabs;
    }

    const Real scale = abs(bracket);
    return SeriesResult{std::move(bracket), m, (outer_tail + inner_err_abs) / scale};
}

namespace {

EvalReport eq8_impl(const Scalar& z, const Exponent& A, const EvalOptions& opts) {
    const unsigned d = z.digits();
    const Real tol_g = opts.tol / 4L;
    SeriesResult base = eval_binomial_series(ldexp2(z, -1), A, tol_g, opts.max_terms);
    SeriesResult bracket = shifted_factor_sum(z, 1, A, tol_g, opts.max_terms);
    EvalReport rep{base.sum * bracket.sum, {base.terms, bracket.terms},
                   base.tail_rel + bracket.tail_rel, std::nullopt, "eq8"};
    return rep;
}

EvalReport eq9_impl(const Scalar& z, const Exponent& A, const EvalOptions& opts, int depth);

// (1+w)^A dispatched on m0 of w; the bottom of the rescaling recursion.
Scalar pow_one_plus(const Scalar& w, const Exponent& A, const EvalOptions& opts, int depth) {
    const int m0 = compute_m0(w);
    if (m0 == 0) return eval_binomial_series(w, A, opts.tol, opts.max_terms).sum;
    if (m0 == 1) return eq8_impl(w, A, opts).value;
    if (depth < 0) throw RecursionLimit();
    return eq9_impl(w, A, opts, depth - 1).value;
}

EvalReport eq9_impl(const Scalar& z, const Exponent& A, const EvalOptions& opts, int depth) {
    const unsigned d = z.digits();
    const int m0 = compute_m0(z);
    if (m0 <= 1) throw DomainError("eq9 requires m0 > 1");
    if (int r = singular_shift_of(z, m0); r != 0) throw SingularShift(r);
    RegionVerdict rv = classify_point(z);
    if (!rv.convergent) throw OutOfRegion(rv.failing_shifts);

    const Real tol_g = opts.tol / (2L * (m0 + 1));
    SeriesResult base = eval_binomial_series(ldexp2(z, -m0), A, tol_g, opts.max_terms);
    SeriesResult top = shifted_factor_sum(z, m0, A, tol_g, opts.max_terms);

    EvalReport rep{base.sum * top.sum, {base.terms, top.terms},
                   base.tail_rel + top.tail_rel, std::nullopt, "eq9"};

    const Real one(1L, d);
    for (int r = 1; r < m0; ++r) {
        const Real tol_p = tol_g / 64L;
        const Scalar p = recursive_reciprocal_pow(z, r, 1, tol_p, depth, opts.max_terms);
        const Scalar u = z * p;
        SeriesResult g = eval_binomial_series(u, A, tol_g, opts.max_terms);
        rep.value *= g.sum;
        rep.per_factor_terms.push_back(g.terms);
        // the reciprocal's own error enters amplified by |A| |u|/(1-|u|)
        const Real u_abs = abs(u);
        rep.est_rel_error += g.tail_rel + tol_p * abs(A.value()) * u_abs / (one - u_abs);
    }
    return rep;
}

} // namespace

EvalReport eval_eq8(const Scalar& z, const Exponent& A, const EvalOptions& opts) {
    const Real zabs = abs(z);
    if (!(zabs > 1) || !(zabs < 2)) throw DomainError("eq8 requires 1 < |z| < 2");
    return eq8_impl(z, A, opts);
}

Scalar recursive_reciprocal_pow(const Scalar& z, int r, long m, const Real& tol, int depth,
                                long max_terms) {
    const unsigned d = z.digits();
    if (m == 0) return Scalar(1L, d);
    if (m < 0) throw DomainError("m must be >= 0");
    if (z.im().is_zero() && z.re() == -ldexp2(Real(1L, d), r)) throw SingularShift(r);
    if (depth < 0) throw RecursionLimit();
    const Scalar w = ldexp2(z, -r);
    const Exponent minus_m(-m, d);
    EvalOptions opts(tol, max_terms);
    const Scalar v = pow_one_plus(w, minus_m, opts, depth);
    return ldexp2(v, -static_cast<long>(r) * m);
}

EvalReport eval_eq9(const Scalar& z, const Exponent& A, const EvalOptions& opts, int depth) {
    if (depth < 0) depth = compute_m0(z) + 2;
    return eq9_impl(z, A, opts, depth);
}

} // namespace cpw
