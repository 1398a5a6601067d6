#include "cpow/oracle.hpp"

#include <chrono>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cpw {

namespace {

EvalReport run_method(const std::string& tag, const Scalar& z, const Exponent& A,
                      const EvalOptions& opts) {
    if (tag == "cascade") return eval_cascade(z, A, opts);
    if (tag == "eq8") return eval_eq8(z, A, opts);
    if (tag == "eq9") return eval_eq9(z, A, opts);
    throw DomainError("unknown method: " + tag);
}

double axis_value(double lo, double hi, int count, int i) {
    if (count == 1) return lo;
    return lo + (hi - lo) * i / (count - 1);
}

} // namespace

void validate(const GridSpec& spec) {
    if (spec.re_count < 1 || spec.im_count < 1) throw DomainError("grid counts must be >= 1");
    if (spec.re_min > spec.re_max || spec.im_min > spec.im_max)
        throw DomainError("grid range min must be <= max");
    if (!(spec.tol > 0)) throw DomainError("tol must be positive");
    if (spec.A_values.empty()) throw DomainError("at least one exponent required");
    if (spec.digits < kMinDigits) throw DomainError("precision must be >= 15 digits");
}

Scalar direct_pow(const Scalar& z, const Exponent& A) {
    const Scalar base = z + Scalar(1L, z.digits());
    if (base.is_zero() && !(A.value() > 0)) throw ZeroBase();
    return principal_power(base, A);
}

ErrorRecord compare(const Scalar& z, const Exponent& A, const std::string& method_tag,
                    const Real& tol) {
    const unsigned d = z.digits();
    const unsigned dg = d + kGuardDigits;
    ErrorRecord rec{z,     A, method_tag, Scalar(d),   Scalar(d),    Real(d), Real(d),
                    false, 0, 0,          Verdict::ok, compute_m0(z)};

    const Scalar zg = z.to_digits(dg);
    const Exponent Ag(A.value().to_digits(dg));
    if ((zg + Scalar(1L, dg)).is_zero()) {
        rec.verdict = Verdict::singular;
        return rec;
    }
    const Scalar refg = direct_pow(zg, Ag);
    rec.reference = refg.to_digits(d);

    const auto t0 = std::chrono::steady_clock::now();
    try {
        EvalOptions opts(tol);
        EvalReport rep = run_method(method_tag, z, A, opts);
        rec.value = rep.value;
        rec.est_rel_error = rep.est_rel_error;
        rec.terms_total = rep.terms_total();
    } catch (const SingularShift&) {
        rec.verdict = Verdict::singular;
    } catch (const ZeroBase&) {
        rec.verdict = Verdict::singular;
    } catch (const OutOfRegion&) {
        rec.verdict = Verdict::out_of_region;
    } catch (const BranchMismatch&) {
        rec.verdict = Verdict::branch_mismatch;
    } catch (const NoConvergence&) {
        rec.verdict = Verdict::no_convergence;
    } catch (const RecursionLimit&) {
        rec.verdict = Verdict::no_convergence;
    } catch (const DomainError&) {
        rec.verdict = Verdict::out_of_region;
    }
    rec.wall_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    if (rec.verdict != Verdict::ok) return rec;

    const Real err = abs(rec.value.to_digits(dg) - refg);
    const Real refmag = abs(refg);
    Real rel(dg);
    if (refmag < Real::pow10(-static_cast<long>(d), dg)) {
        rec.absolute_only = true;
        rel = err;
    } else {
        rel = err / refmag;
    }
    // error below the guard-digit floor is not meaningful
    const Real floor_rel = Real::pow10(-static_cast<long>(d) - 5, dg);
    if (rel < floor_rel) rel = floor_rel;
    rec.rel_err = rel.to_digits(d);
    return rec;
}

std::vector<std::pair<long, Real>> profile_convergence(const Scalar& z, const Exponent& A,
                                                       const std::vector<long>& caps) {
    const unsigned d = z.digits();
    const unsigned dg = d + kGuardDigits;
    const Scalar refg = direct_pow(z.to_digits(dg), Exponent(A.value().to_digits(dg)));
    const Real refmag = abs(refg);
    const Real floor_rel = Real::pow10(-static_cast<long>(d) - 5, dg);

    std::vector<std::pair<long, Real>> out;
    out.reserve(caps.size());
    for (long cap : caps) {
        EvalOptions opts(Real(1L, d), cap);
        opts.exact_term_count = true;
        EvalReport rep = eval_cascade(z, A, opts);
        Real rel = abs(rep.value.to_digits(dg) - refg) / refmag;
        if (rel < floor_rel) rel = floor_rel;
        out.emplace_back(cap, rel.to_digits(d));
    }
    return out;
}

namespace {

ErrorRecord scan_point(const GridSpec& spec, const std::string& method_tag, int ai, int i,
                       int j) {
    const unsigned d = spec.digits;
    const Scalar z(axis_value(spec.re_min, spec.re_max, spec.re_count, i),
                   axis_value(spec.im_min, spec.im_max, spec.im_count, j), d);
    const Exponent A(spec.A_values[static_cast<size_t>(ai)], d);
    return compare(z, A, method_tag, Real(spec.tol, d));
}

} // namespace

std::vector<ErrorRecord> scan_grid_serial(const GridSpec& spec, const std::string& method_tag) {
    validate(spec);
    std::vector<ErrorRecord> out;
    out.reserve(static_cast<size_t>(spec.A_values.size()) * spec.re_count * spec.im_count);
    for (size_t ai = 0; ai < spec.A_values.size(); ++ai)
        for (int i = 0; i < spec.re_count; ++i)
            for (int j = 0; j < spec.im_count; ++j)
                out.push_back(scan_point(spec, method_tag, static_cast<int>(ai), i, j));
    return out;
}

std::vector<ErrorRecord> scan_grid(const GridSpec& spec, const std::string& method_tag) {
#ifdef _OPENMP
    validate(spec);
    const long na = static_cast<long>(spec.A_values.size());
    const long total = na * spec.re_count * spec.im_count;
    std::vector<std::optional<ErrorRecord>> buf(static_cast<size_t>(total));
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < total; ++k) {
        const int ai = static_cast<int>(k / (spec.re_count * static_cast<long>(spec.im_count)));
        const long rem = k % (spec.re_count * static_cast<long>(spec.im_count));
        const int i = static_cast<int>(rem / spec.im_count);
        const int j = static_cast<int>(rem % spec.im_count);
        buf[static_cast<size_t>(k)] = scan_point(spec, method_tag, ai, i, j);
    }
    std::vector<ErrorRecord> out;
    out.reserve(static_cast<size_t>(total));
    for (auto& r : buf) out.push_back(std::move(*r));
    return out;
#else
    return scan_grid_serial(spec, method_tag);
#endif
}

} // namespace cpw
