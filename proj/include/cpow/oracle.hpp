#ifndef CPOW_ORACLE_HPP
#define CPOW_ORACLE_HPP

#include <cstdint>
#include <utility>

#include "cpow/series.hpp"

namespace cpw {

constexpr int kGuardDigits = 10;

struct ErrorRecord {
    Scalar z;
    Exponent A;
    std::string method_tag;
    Scalar value;
    Scalar reference;
    Real rel_err;
    Real est_rel_error; // the method's own certificate
    bool absolute_only; // |reference| too small for a relative metric
    long terms_total;
    std::int64_t wall_ns;
    Verdict verdict;
    int m0;
};

struct GridSpec {
    double re_min, re_max;
    int re_count;
    double im_min, im_max;
    int im_count;
    std::vector<double> A_values;
    double tol;
    unsigned digits = kDefaultDigits;
};

void validate(const GridSpec& spec);

// principal_power(1+z, A): the reference every method is measured against.
Scalar direct_pow(const Scalar& z, const Exponent& A);

// Runs the named method {cascade, eq8, eq9} against direct_pow computed with
// kGuardDigits extra digits. Failures are recorded in the verdict, never
// thrown.
ErrorRecord compare(const Scalar& z, const Exponent& A, const std::string& method_tag,
                    const Real& tol);

// Cascade error at fixed per-factor term counts (no early stop).
std::vector<std::pair<long, Real>> profile_convergence(const Scalar& z, const Exponent& A,
                                                       const std::vector<long>& caps);

// One record per (A, re, im) grid point, in that order. scan_grid evaluates
// points in parallel when OpenMP is enabled; scan_grid_serial is the
// reference implementation, identical record-for-record apart from timings.
std::vector<ErrorRecord> scan_grid(const GridSpec& spec, const std::string& method_tag);
std::vector<ErrorRecord> scan_grid_serial(const GridSpec& spec, const std::string& method_tag);

} // namespace cpw

#endif
