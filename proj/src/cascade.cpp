#include "cpow/cascade.hpp"

namespace cpw {

namespace {

Scalar pow2_scalar(int r, unsigned digits) {
    return Scalar(ldexp2(Real(1L, digits), r));
}

bool equals_neg_pow2(const Scalar& z, int r) {
    if (!z.im().is_zero()) return false;
    return z.re() == -ldexp2(Real(1L, z.digits()), r);
}

} // namespace

int compute_m0(const Scalar& z) {
    if (!z.re().is_finite() || !z.im().is_finite()) throw DomainError("z must be finite");
    const Real a = abs(z);
    int m = 0;
    while (!(ldexp2(a, -m) < 1)) ++m;
    return m;
}

int singular_shift_of(const Scalar& z, int m0) {
    for (int r = 1; r <= m0; ++r)
        if (equals_neg_pow2(z, r)) return r;
    return 0;
}

CascadePlan build_plan(const Scalar& z, const Exponent& A) {
    require_same_digits(z.re(), A.value());
    const int m0 = compute_m0(z);
    if (int r = singular_shift_of(z, m0); r != 0) throw SingularShift(r);
    std::vector<CascadeFactor> factors;
    factors.reserve(static_cast<size_t>(m0) + 1);
    factors.push_back({FactorKind::base, 0, ldexp2(z, -m0)});
    for (int r = 1; r <= m0; ++r)
        factors.push_back({FactorKind::shifted, r, z / (z + pow2_scalar(r, z.digits()))});
    return CascadePlan{z, A, m0, std::move(factors)};
}

RegionVerdict check_region(const CascadePlan& plan) {
    RegionVerdict v;
    for (const auto& f : plan.factors)
        if (f.kind == FactorKind::shifted && !(abs(f.argument) < 1))
            v.failing_shifts.push_back(f.r);
    v.convergent = v.failing_shifts.empty();
    return v;
}

RegionVerdict classify_point(const Scalar& z) {
    RegionVerdict v;
    const int m0 = compute_m0(z);
    if (int r = singular_shift_of(z, m0); r != 0) {
        v.singular_shift = r;
        return v;
    }
    for (int r = 1; r <= m0; ++r)
        if (!(abs(z / (z + pow2_scalar(r, z.digits()))) < 1)) v.failing_shifts.push_back(r);
    v.convergent = v.failing_shifts.empty();
    return v;
}

SeriesResult eval_binomial_series(const Scalar& w, const Exponent& A, const Real& tol,
                                  long max_terms, bool exact_term_count) {
    require_same_digits(w.re(), A.value());
    const unsigned d = w.digits();
    if (max_terms < 1) throw DomainError("max_terms must be >= 1");
    const Real wabs = abs(w);
    if (!(wabs < 1)) throw DomainError("series argument modulus must be < 1");

    Scalar sum(1L, d);
    Scalar term(1L, d);

    if (exact_term_count) {
        for (long n = 0; n + 1 < max_terms; ++n) {
            term *= w;
            term *= (A.value() - n) / (n + 1);
            sum += term;
        }
        return SeriesResult{std::move(sum), max_terms, Real(d)};
    }

    if (A.terminating()) {
        const long last = A.int_value();
        for (long n = 0; n < last; ++n) {
            term *= w;
            term *= (A.value() - n) / (n + 1);
            sum += term;
        }
        return SeriesResult{std::move(sum), last + 1, Real(d)};
    }

    const Real Aabs = abs(A.value());
    const Real one(1L, d);
    for (long n = 0; n + 1 < max_terms; ++n) {
        // term becomes t_{n+1}
        term *= w;
        term *= (A.value() - n) / (n + 1);
        if (Aabs <= n) {
            const Real rho = wabs * (one + (Aabs + 1) / (n + 1));
            if (rho < 1) {
                const Real bound = abs(term) / (one - rho);
                const Real scale = abs(sum);
                if (bound <= tol * scale) {
                    return SeriesResult{std::move(sum), n + 1, bound / scale};
                }
            }
        }
        sum += term;
    }
    throw NoConvergence("tail certificate not met within max_terms");
}

EvalReport eval_cascade(const Scalar& z, const Exponent& A, const EvalOptions& opts) {
    const unsigned d = z.digits();
    CascadePlan plan = build_plan(z, A);
    RegionVerdict rv = check_region(plan);
    if (!rv.convergent) throw OutOfRegion(rv.failing_shifts);

    const Real tol_factor = opts.tol / (2L * (plan.m0 + 1));
    EvalReport rep{Scalar(1L, d), {}, Real(d), std::nullopt, "cascade"};
    for (const auto& f : plan.factors) {
        SeriesResult r = eval_binomial_series(f.argument, A, tol_factor, opts.max_terms,
                                              opts.exact_term_count);
        rep.value *= r.sum;
        rep.est_rel_error += r.tail_rel;
        rep.per_factor_terms.push_back(r.terms);
    }

    if (opts.check_oracle) {
        const Scalar ref = principal_power(z + Scalar(1L, d), A);
        const Scalar ratio = rep.value / ref;
        rep.oracle_ratio = ratio;
        const Real ten_tol = opts.tol * 10L;
        const Real phase_err = abs(ratio - Scalar(1L, d));
        const Real mod_err = abs(abs(ratio) - Real(1L, d));
        if (phase_err > ten_tol && mod_err <= ten_tol) throw BranchMismatch();
    }
    return rep;
}

Scalar telescope_residual(const Scalar& z, int r) {
    const unsigned d = z.digits();
    if (equals_neg_pow2(z, r)) throw SingularShift(r);
    const Scalar one(1L, d);
    const Scalar lhs = one + ldexp2(z, -(r - 1));
    const Scalar rhs = (one + ldexp2(z, -r)) * (one + z / (z + pow2_scalar(r, d)));
    return lhs - rhs;
}

EvalReport eval_xy(const Scalar& x, const Scalar& y, const Exponent& A, const EvalOptions& opts) {
    if (y.is_zero()) throw ZeroDenominator();
    EvalReport rep = eval_cascade(x / y, A, opts);
    rep.value = principal_power(y, A) * rep.value;
    rep.method_tag = "xy";
    return rep;
}

} // namespace cpw
