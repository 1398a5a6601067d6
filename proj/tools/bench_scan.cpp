// Benchmark: OpenMP grid scan against the serial reference. Verifies the two
// produce identical records (timings aside) and reports wall times.

#include <chrono>
#include <iostream>

#include "CLI11.hpp"

#include "cpow/oracle.hpp"

using namespace cpw;

namespace {

bool records_match(const std::vector<ErrorRecord>& a, const std::vector<ErrorRecord>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        const auto& x = a[i];
        const auto& y = b[i];
        if (!(x.z == y.z) || x.verdict != y.verdict || x.m0 != y.m0 ||
            x.terms_total != y.terms_total || !(x.value == y.value) ||
            !(x.reference == y.reference) || x.rel_err != y.rel_err)
            return false;
    }
    return true;
}

double seconds(std::chrono::steady_clock::duration d) {
    return std::chrono::duration<double>(d).count();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"compare serial and parallel grid scans"};
    int n = 17;
    unsigned digits = kDefaultDigits;
    double tol = 1e-12;
    int repeats = 1;
    app.add_option("--n", n, "points per axis");
    app.add_option("--precision", digits, "decimal digits");
    app.add_option("--tol", tol, "tolerance");
    app.add_option("--repeats", repeats, "timing repeats");
    CLI11_PARSE(app, argc, argv);

    GridSpec spec{-4.0, 4.0, n, -4.0, 4.0, n, {0.5, -0.5, 1.7}, tol, digits};

    auto t0 = std::chrono::steady_clock::now();
    std::vector<ErrorRecord> serial;
    for (int i = 0; i < repeats; ++i) serial = scan_grid_serial(spec, "cascade");
    auto t1 = std::chrono::steady_clock::now();
    std::vector<ErrorRecord> parallel;
    for (int i = 0; i < repeats; ++i) parallel = scan_grid(spec, "cascade");
    auto t2 = std::chrono::steady_clock::now();

    const double ts = seconds(t1 - t0) / repeats;
    const double tp = seconds(t2 - t1) / repeats;
    std::cout << "points:   " << n * n * 3 << "\n";
    std::cout << "serial:   " << ts << " s\n";
    std::cout << "parallel: " << tp << " s\n";
    std::cout << "speedup:  " << ts / tp << "x\n";
    if (!records_match(serial, parallel)) {
        std::cout << "MISMATCH between serial and parallel records\n";
        return 1;
    }
    std::cout << "records identical\n";
    return 0;
}
