#ifndef CPOW_ERRORS_HPP
#define CPOW_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace cpw {

// Failure classification shared by the evaluators, the oracle and the CLI.
enum class Verdict { ok, out_of_region, no_convergence, branch_mismatch, singular };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::ok: return "ok";
        case Verdict::out_of_region: return "out_of_region";
        case Verdict::no_convergence: return "no_convergence";
        case Verdict::branch_mismatch: return "branch_mismatch";
        case Verdict::singular: return "singular";
    }
    return "unknown";
}

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two operands carry different working precisions. Mixed precision is an
// error, never a silent promotion.
struct PrecisionMismatch : Error {
    PrecisionMismatch(unsigned a, unsigned b)
        : Error("precision mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

struct DomainError : Error {
    using Error::Error;
};

// z coincides with -2^r for some shift r, so the factor argument is singular.
struct SingularShift : Error {
    explicit SingularShift(int r_)
        : Error("singular shift: z = -2^" + std::to_string(r_)), r(r_) {}
    int r;
};

struct OutOfRegion : Error {
    explicit OutOfRegion(std::vector<int> failing)
        : Error("factor argument modulus >= 1 at shift(s)"), failing_shifts(std::move(failing)) {}
    std::vector<int> failing_shifts;
};

struct NoConvergence : Error {
    using Error::Error;
};

struct ZeroBase : Error {
    ZeroBase() : Error("zero base with nonpositive exponent") {}
};

struct ZeroDenominator : Error {
    ZeroDenominator() : Error("y must be nonzero") {}
};

struct RecursionLimit : Error {
    RecursionLimit() : Error("recursion depth exhausted") {}
};

struct BranchMismatch : Error {
    BranchMismatch() : Error("product differs from principal branch by a pure phase") {}
};

} // namespace cpw

#endif
