#ifndef CPOW_TEST_SUPPORT_HPP
#define CPOW_TEST_SUPPORT_HPP

#include <random>
#include <string>

#include "cpow/oracle.hpp"
#include "cpow/series.hpp"

namespace ts {

using namespace cpw;

constexpr unsigned D = kDefaultDigits; // 50

inline Real R(const std::string& s, unsigned d = D) { return Real(s, d); }
inline Scalar S(double re, double im = 0.0, unsigned d = D) { return Scalar(re, im, d); }

// Relative distance |a-b|/|b|; absolute when b = 0.
inline Real rel_err(const Scalar& a, const Scalar& b) {
    const Real num = abs(a - b);
    if (b.is_zero()) return num;
    return num / abs(b);
}

inline bool close_rel(const Scalar& a, const Scalar& b, long tol_exp) {
    return rel_err(a, b) < Real::pow10(tol_exp, a.digits());
}

// Deterministic sampling; every suite seeds its own engine.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(eng);
    }
    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(eng);
    }
    // Modulus log-uniform in [mod_lo, mod_hi), full angle range.
    Scalar annulus(double mod_lo, double mod_hi, unsigned d = D) {
        const double m = std::exp(uniform(std::log(mod_lo), std::log(mod_hi)));
        const double th = uniform(-3.14159265358979, 3.14159265358979);
        return Scalar(m * std::cos(th), m * std::sin(th), d);
    }
};

// Frozen reference values, 60 significant digits, computed with an
// independent arbitrary-precision evaluator and pinned here.
inline const char* kSqrt1_6 =
    "1.264911064067351732799557417773087413487822055730086730743";
inline const char* kSqrt7 =
    "2.64575131106459059050161575363926042571025918308245018036833";
inline const char* kSqrt2_5 =
    "1.58113883008418966599944677221635926685977756966260841342875";
inline const char* kInvSqrt5_5 =
    "0.426401432711220868596875464867678752780748032128339741236882";
inline const char* kInvSq3_5 = // 3.5^-2
    "0.0816326530612244897959183673469387755102040816326530612244898";
// (2.2 + 0.8i)^(-1/2)
inline const char* kPow22_08_re =
    "0.643676426037562377100923487062498570718672366383468157780278";
inline const char* kPow22_08_im =
    "-0.113399679990249395519034089556365464694633424739575131831083";
// (3 + 2i)^(1/2)
inline const char* kSqrt3p2i_re =
    "1.81735402102397062007519448603582192646940364312713611206331";
inline const char* kSqrt3p2i_im =
    "0.55025052270033751105568056539125143707558755966700696583417";

// (1+z)^A for nonnegative integer A by repeated multiplication: an oracle
// independent of every series path.
inline Scalar int_pow_1pz(const Scalar& z, long a) {
    const Scalar base = z + Scalar(1L, z.digits());
    Scalar acc(1L, z.digits());
    for (long k = 0; k < a; ++k) acc *= base;
    return acc;
}

} // namespace ts

#endif
