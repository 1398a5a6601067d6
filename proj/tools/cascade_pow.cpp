// Command-line front end: evaluation, coefficient dumps, grid scans and
// convergence profiles. Machine-readable output only (JSON for eval, CSV
// elsewhere).

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cpow/oracle.hpp"

using nlohmann::json;
using namespace cpw;

namespace {

struct Config {
    unsigned precision = kDefaultDigits;
    std::string tol = "1e-30";
    long max_terms = 10000;
    int recursion_depth = -1; // -1: m0+2
    std::string output_format = "json";
};

void merge_config_file(Config& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
    json j = json::parse(in);
    if (j.contains("precision")) cfg.precision = j["precision"].get<unsigned>();
    if (j.contains("tol")) {
        if (j["tol"].is_string())
            cfg.tol = j["tol"].get<std::string>();
        else
            cfg.tol = j["tol"].dump();
    }
    if (j.contains("max_terms")) cfg.max_terms = j["max_terms"].get<long>();
    if (j.contains("recursion_depth")) cfg.recursion_depth = j["recursion_depth"].get<int>();
    if (j.contains("output_format")) cfg.output_format = j["output_format"].get<std::string>();
}

void validate_config(const Config& cfg) {
    if (cfg.precision < kMinDigits)
        throw CLI::ValidationError("config", "precision must be >= 15");
    if (cfg.max_terms < 1) throw CLI::ValidationError("config", "max_terms must be >= 1");
    const Real tol(cfg.tol, cfg.precision);
    if (!(tol > Real::pow10(5 - static_cast<long>(cfg.precision), cfg.precision)))
        throw CLI::ValidationError("config", "tol must exceed 10^(5-precision)");
    if (cfg.output_format != "json" && cfg.output_format != "csv")
        throw CLI::ValidationError("config", "output_format must be json or csv");
}

// Complex literal "re[,im]".
Scalar parse_complex(const std::string& s, unsigned digits) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) return Scalar(Real(s, digits), Real(digits));
    return Scalar(Real(s.substr(0, comma), digits), Real(s.substr(comma + 1), digits));
}

struct AxisSpec {
    double lo = 0, hi = 0;
    int count = 0;
};

AxisSpec parse_axis(const std::string& s) {
    AxisSpec a;
    char c1, c2;
    std::istringstream in(s);
    if (!(in >> a.lo >> c1 >> a.hi >> c2 >> a.count) || c1 != ':' || c2 != ':' || a.count < 1)
        throw CLI::ValidationError("axis", "expected min:max:count with count >= 1");
    return a;
}

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(std::stod(tok));
    if (out.empty()) throw CLI::ValidationError("list", "empty list");
    return out;
}

std::vector<long> parse_long_list(const std::string& s) {
    std::vector<long> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(std::stol(tok));
    if (out.empty()) throw CLI::ValidationError("list", "empty list");
    return out;
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const OutOfRegion*>(&e)) return 2;
    if (dynamic_cast<const DomainError*>(&e)) return 2;
    if (dynamic_cast<const NoConvergence*>(&e)) return 3;
    if (dynamic_cast<const RecursionLimit*>(&e)) return 3;
    if (dynamic_cast<const BranchMismatch*>(&e)) return 3;
    if (dynamic_cast<const SingularShift*>(&e)) return 4;
    if (dynamic_cast<const ZeroBase*>(&e)) return 4;
    return 1;
}

int cmd_eval(const Config& cfg, const std::string& z_str, const std::string& x_str,
             const std::string& y_str, const std::string& A_str, const std::string& method,
             bool check) {
    const unsigned d = cfg.precision;
    const Exponent A(Real(A_str, d));
    const Real tol(cfg.tol, d);

    Scalar z(d);
    EvalOptions opts(tol, cfg.max_terms);
    EvalReport rep{Scalar(d), {}, Real(d), std::nullopt, method};
    try {
        if (method == "xy") {
            if (x_str.empty() || y_str.empty())
                throw CLI::ValidationError("--x/--y", "required for method xy");
            const Scalar x = parse_complex(x_str, d);
            const Scalar y = parse_complex(y_str, d);
            if (y.is_zero()) throw ZeroDenominator();
            z = x / y;
            rep = eval_xy(x, y, A, opts);
        } else {
            if (z_str.empty()) throw CLI::ValidationError("--z", "required");
            z = parse_complex(z_str, d);
            if (method == "cascade") {
                opts.check_oracle = check;
                rep = eval_cascade(z, A, opts);
            } else if (method == "eq8") {
                rep = eval_eq8(z, A, opts);
            } else if (method == "eq9") {
                rep = eval_eq9(z, A, opts, cfg.recursion_depth);
            } else if (method == "direct") {
                rep.value = direct_pow(z, A);
            } else {
                throw CLI::ValidationError("--method", "unknown method " + method);
            }
        }
    } catch (const ZeroDenominator& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }

    json out;
    out["value_re"] = rep.value.re().str();
    out["value_im"] = rep.value.im().str();
    out["method"] = rep.method_tag;
    out["m0"] = compute_m0(z);
    out["per_factor_terms"] = rep.per_factor_terms;
    out["est_rel_error"] = rep.est_rel_error.str();
    if (check && method != "direct") {
        const unsigned dg = d + kGuardDigits;
        Scalar refg(dg);
        if (method == "xy") {
            const Scalar x = parse_complex(x_str, dg);
            const Scalar y = parse_complex(y_str, dg);
            refg = principal_power(x + y, Exponent(Real(A_str, dg)));
        } else {
            refg = direct_pow(z.to_digits(dg), Exponent(Real(A_str, dg)));
        }
        const Real rel = abs(rep.value.to_digits(dg) - refg) / abs(refg);
        out["oracle_rel_err"] = rel.to_digits(d).str();
    }
    if (cfg.output_format == "csv") {
        std::cout << "field,value\n";
        for (auto& [k, v] : out.items())
            std::cout << k << "," << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    } else {
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

int cmd_coeffs(const Config& cfg, int r, long m, long max_j) {
    std::cout << "j,b_re,b_im\n";
    for (long j = 0; j <= max_j; ++j) {
        const Scalar b = b_coeff({j, r, m}, cfg.precision);
        std::cout << j << "," << b.re().str() << "," << b.im().str() << "\n";
    }
    return 0;
}

int cmd_scan(const Config& cfg, const std::string& re_s, const std::string& im_s,
             const std::string& A_s, const std::string& method, const std::string& out_path) {
    const AxisSpec re = parse_axis(re_s);
    const AxisSpec im = parse_axis(im_s);
    GridSpec spec{re.lo, re.hi,  re.count,
                  im.lo, im.hi,  im.count,
                  parse_double_list(A_s), Real(cfg.tol, cfg.precision).to_double(),
                  cfg.precision};
    validate(spec);
    const std::vector<ErrorRecord> records = scan_grid(spec, method);

    const std::string tmp = out_path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) {
            std::cerr << "error: cannot open " << tmp << "\n";
            return 5;
        }
        out << "re_z,im_z,A,m0,method,value_re,value_im,ref_re,ref_im,rel_err,terms_total,"
               "wall_ns,verdict\n";
        for (const auto& rec : records) {
            out << rec.z.re().str() << "," << rec.z.im().str() << "," << rec.A.value().str()
                << "," << rec.m0 << "," << rec.method_tag << "," << rec.value.re().str() << ","
                << rec.value.im().str() << "," << rec.reference.re().str() << ","
                << rec.reference.im().str() << "," << rec.rel_err.str() << ","
                << rec.terms_total << "," << rec.wall_ns << "," << to_string(rec.verdict)
                << "\n";
        }
        if (!out.good()) {
            std::cerr << "error: write failed\n";
            return 5;
        }
    }
    if (std::rename(tmp.c_str(), out_path.c_str()) != 0) {
        std::cerr << "error: cannot rename " << tmp << " to " << out_path << "\n";
        return 5;
    }
    return 0;
}

int cmd_profile(const Config& cfg, const std::string& z_s, const std::string& A_s,
                const std::string& caps_s) {
    const unsigned d = cfg.precision;
    try {
        const Scalar z = parse_complex(z_s, d);
        const Exponent A(Real(A_s, d));
        const auto rows = profile_convergence(z, A, parse_long_list(caps_s));
        std::cout << "cap,rel_err\n";
        for (const auto& [cap, rel] : rows) std::cout << cap << "," << rel.str() << "\n";
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cascade factorization evaluator for (1+z)^A and (x+y)^A"};
    app.require_subcommand(1);

    Config cfg;
    std::string config_path;
    unsigned flag_precision = 0;
    std::string flag_tol, flag_format;
    long flag_max_terms = -1;
    int flag_depth = -2;
    app.add_option("--config", config_path, "JSON config file");
    app.add_option("--precision", flag_precision, "working precision in decimal digits");
    app.add_option("--tol", flag_tol, "relative tolerance");
    app.add_option("--max-terms", flag_max_terms, "per-factor term cap");
    app.add_option("--depth", flag_depth, "recursion depth for eq9 (-1: m0+2)");
    app.add_option("--format", flag_format, "output format for eval: json|csv");

    std::string z_s, x_s, y_s, A_s, method = "cascade";
    bool check = false;
    auto* eval = app.add_subcommand("eval", "evaluate (1+z)^A or (x+y)^A");
    eval->add_option("--z", z_s, "z as re[,im]");
    eval->add_option("--x", x_s, "x as re[,im] (method xy)");
    eval->add_option("--y", y_s, "y as re[,im] (method xy)");
    eval->add_option("--A", A_s, "real exponent")->required();
    eval->add_option("--method", method, "cascade|eq8|eq9|direct|xy");
    eval->add_flag("--check", check, "compare against the direct oracle");

    int co_r = 1;
    long co_m = 1, co_maxj = 0;
    auto* coeffs = app.add_subcommand("coeffs", "dump b(j,r,m) coefficients as CSV");
    coeffs->add_option("--r", co_r, "shift index >= 1")->required();
    coeffs->add_option("--m", co_m, "reciprocal power >= 0")->required();
    coeffs->add_option("--max-j", co_maxj, "highest power index")->required();

    std::string sc_re, sc_im, sc_A, sc_method = "cascade", sc_out;
    auto* scan = app.add_subcommand("scan", "scan a complex grid, write CSV");
    scan->add_option("--re", sc_re, "min:max:count")->required();
    scan->add_option("--im", sc_im, "min:max:count")->required();
    scan->add_option("--A", sc_A, "comma list of exponents")->required();
    scan->add_option("--method", sc_method, "cascade|eq8|eq9");
    scan->add_option("--out", sc_out, "output CSV path")->required();

    std::string pr_z, pr_A, pr_caps;
    auto* profile = app.add_subcommand("profile", "cascade error at fixed term caps");
    profile->add_option("--z", pr_z, "z as re[,im]")->required();
    profile->add_option("--A", pr_A, "real exponent")->required();
    profile->add_option("--caps", pr_caps, "comma list of term caps")->required();

    // global options may follow the subcommand
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);

        if (config_path.empty())
            if (const char* env = std::getenv("CASCADE_POW_CONFIG")) config_path = env;
        if (!config_path.empty()) merge_config_file(cfg, config_path);
        if (flag_precision != 0) cfg.precision = flag_precision;
        if (!flag_tol.empty()) cfg.tol = flag_tol;
        if (flag_max_terms >= 0) cfg.max_terms = flag_max_terms;
        if (flag_depth != -2) cfg.recursion_depth = flag_depth;
        if (!flag_format.empty()) cfg.output_format = flag_format;
        validate_config(cfg);

        if (*eval) return cmd_eval(cfg, z_s, x_s, y_s, A_s, method, check);
        if (*coeffs) return cmd_coeffs(cfg, co_r, co_m, co_maxj);
        if (*scan) return cmd_scan(cfg, sc_re, sc_im, sc_A, sc_method, sc_out);
        if (*profile) return cmd_profile(cfg, pr_z, pr_A, pr_caps);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
