#ifndef CPOW_CASCADE_HPP
#define CPOW_CASCADE_HPP

#include <optional>
#include <string>
#include <vector>

#include "cpow/numeric.hpp"

namespace cpw {

enum class FactorKind { base, shifted };

// One factor of the product (1+z)^A = (1+z/2^m0)^A prod_r (1+z/(z+2^r))^A.
struct CascadeFactor {
    FactorKind kind;
    int r;           // shift index, 1..m0; 0 for the base factor
    Scalar argument; // z/2^m0 for base, z/(z+2^r) for shifted
};

struct CascadePlan {
    Scalar z;
    Exponent A;
    int m0;
    std::vector<CascadeFactor> factors; // base first, then r = 1..m0
};

// Per-factor convergence classification of a point z.
struct RegionVerdict {
    bool convergent = false;
    std::vector<int> failing_shifts;      // r with |z/(z+2^r)| >= 1
    std::optional<int> singular_shift;    // r with z = -2^r exactly
};

struct EvalReport {
    Scalar value;
    std::vector<long> per_factor_terms;
    Real est_rel_error;                   // sum of certified per-factor tail bounds
    std::optional<Scalar> oracle_ratio;
    std::string method_tag;

    long terms_total() const {
        long t = 0;
        for (long x : per_factor_terms) t += x;
        return t;
    }
};

struct EvalOptions {
    Real tol;
    long max_terms = 10000;
    bool check_oracle = false;
    // Sum exactly max_terms terms per factor, with no early stop.
    bool exact_term_count = false;

    explicit EvalOptions(Real tol_) : tol(std::move(tol_)) {}
    EvalOptions(Real tol_, long max_terms_) : tol(std::move(tol_)), max_terms(max_terms_) {}
};

// Smallest m >= 0 with |z|/2^m < 1 (strict).
int compute_m0(const Scalar& z);

// r in 1..m0 with z = -2^r exactly, or 0 if none.
int singular_shift_of(const Scalar& z, int m0);

// Throws SingularShift when z = -2^r for some r <= m0.
CascadePlan build_plan(const Scalar& z, const Exponent& A);

RegionVerdict check_region(const CascadePlan& plan);

// Planning plus region check without throwing; used by the scanner.
RegionVerdict classify_point(const Scalar& z);

struct SeriesResult {
    Scalar sum;
    long terms;
    Real tail_rel; // certified relative tail bound at the stopping index
};

// Sum_{n<=M} C(A,n) w^n, stopping once the tail certificate is <= tol times
// the partial sum (or at the exact terminating sum for integer A >= 0).
// The certificate: for M >= |A| the term ratios are bounded by
// rho = |w| (1 + (|A|+1)/(M+1)); once rho < 1 the tail is <= |t_{M+1}|/(1-rho).
SeriesResult eval_binomial_series(const Scalar& w, const Exponent& A, const Real& tol,
                                  long max_terms, bool exact_term_count = false);

// The primary path: product of per-factor binomial series over the plan,
// each factor run at tolerance tol/(2 (m0+1)).
EvalReport eval_cascade(const Scalar& z, const Exponent& A, const EvalOptions& opts);

// (1 + z/2^{r-1}) - (1 + z/2^r)(1 + z/(z+2^r)); exactly zero in exact
// arithmetic.
Scalar telescope_residual(const Scalar& z, int r);

// (x+y)^A = y^A (1 + x/y)^A with the cascade supplying the second factor.
EvalReport eval_xy(const Scalar& x, const Scalar& y, const Exponent& A, const EvalOptions& opts);

} // namespace cpw

#endif
