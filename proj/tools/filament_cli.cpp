// Command-line front end: point generation, Theorem verification sweeps,
// Gauss-sum inspection, and the statistics harness. All runs are
// deterministic functions of their flags.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "filament/eicg.hpp"
#include "filament/gauss.hpp"
#include "filament/geom.hpp"
#include "filament/stats.hpp"
#include "filament/theta.hpp"
#include "filament/zgen.hpp"

using json = nlohmann::ordered_json;
using namespace filament;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open output file: " + path);
    return file;
}

// ---------------------------------------------------------------- gen --

struct GenOptions {
    std::string family = "planar-hyperbolic";
    std::string generator = "filament";
    int64_t q = 0;
    int64_t m = -1;  // -1 = auto (0 or 1 by parity class)
    double theta0 = 0.0;
    double rho = 0.5;
    int64_t a = 4, b = 0, seed = 0, count = -1;
    std::vector<int64_t> moduli;
    std::string format = "csv";
    std::string output;
};

int run_gen(const GenOptions& opt) {
    if (opt.generator == "filament") {
        const auto fam = family_from_string(opt.family);
        if (!fam) throw std::invalid_argument("unknown family: " + opt.family);
        FamilyConfig cfg{*fam, opt.q, opt.m >= 0 ? opt.m : default_m(opt.q), opt.theta0, opt.rho};
        const PointSet set = generate(cfg, /*with_u=*/true);

        std::ofstream file;
        std::ostream& os = open_output(file, opt.output);
        if (opt.format == "csv") {
            os << "p,u,re_z,im_z\n";
            for (const auto& pt : set.points) {
                os << pt.p << ',' << fmt17(pt.u->u()) << ',' << fmt17(pt.z.real()) << ','
                   << fmt17(pt.z.imag()) << '\n';
            }
        } else {
            json out;
            out["header"] = {{"family", to_string(cfg.family)},
                             {"q", cfg.q},
                             {"m", cfg.m},
                             {"theta0", cfg.theta0},
                             {"rho", cfg.rho},
                             {"center", {set.circle.center.real(), set.circle.center.imag()}},
                             {"radius", set.circle.radius}};
            out["points"] = json::array();
            for (const auto& pt : set.points) {
                out["points"].push_back(
                    {{"p", pt.p}, {"u", pt.u->u()}, {"z", {pt.z.real(), pt.z.imag()}}});
            }
            os << out.dump(2) << '\n';
        }
        return kExitPass;
    }

    // classical reference generators: schema n,x,u
    std::vector<int64_t> xs;
    std::vector<double> us;
    int64_t den = opt.q;
    if (opt.generator == "lcg") {
        const int64_t n = opt.count >= 0 ? opt.count : opt.q;
        xs = lcg_seq(opt.q, opt.a, opt.b, opt.seed, n);
    } else if (opt.generator == "eicg") {
        const int64_t n = opt.count >= 0 ? opt.count : opt.q;
        xs = eicg_seq(opt.q, opt.a, opt.b, opt.seed, n);
    } else if (opt.generator == "icg") {
        const int64_t n = opt.count >= 0 ? opt.count : opt.q;
        xs = icg_seq(opt.q, opt.a, opt.b, opt.seed, n);
    } else if (opt.generator == "compound") {
        if (opt.moduli.empty()) throw std::invalid_argument("compound needs --moduli");
        den = 1;
        for (int64_t qi : opt.moduli) den *= qi;
        const int64_t n = opt.count >= 0 ? std::min<int64_t>(opt.count, den) : den;
        for (int64_t p = 1; xs.size() < static_cast<std::size_t>(n) && p < den; ++p) {
            bool admissible = true;
            for (int64_t qi : opt.moduli) admissible = admissible && p % qi != 0;
            if (!admissible) continue;
            const double u = compound_u(opt.moduli, p);
            xs.push_back(std::llround(u * static_cast<double>(den)));
            us.push_back(u);
        }
    } else {
        throw std::invalid_argument("unknown generator: " + opt.generator);
    }
    if (us.empty()) {
        us.reserve(xs.size());
        for (int64_t x : xs) us.push_back(static_cast<double>(x) / static_cast<double>(den));
    }

    std::ofstream file;
    std::ostream& os = open_output(file, opt.output);
    if (opt.format == "csv") {
        os << "n,x,u\n";
        for (std::size_t i = 0; i < xs.size(); ++i) {
            os << i << ',' << xs[i] << ',' << fmt17(us[i]) << '\n';
        }
    } else {
        json out;
        out["header"] = {{"generator", opt.generator}, {"q", den}, {"a", opt.a}, {"b", opt.b}};
        out["points"] = json::array();
        for (std::size_t i = 0; i < xs.size(); ++i) {
            out["points"].push_back({{"n", i}, {"x", xs[i]}, {"u", us[i]}});
        }
        os << out.dump(2) << '\n';
    }
    return kExitPass;
}

// ------------------------------------------------------------- verify --

struct VerifyOptions {
    int64_t q_max = 200;
    double tol = 1e-10;
    bool skip_gauss = false;
    std::string output;
};

int run_verify(const VerifyOptions& opt) {
    if (opt.q_max < 3) throw std::invalid_argument("--q-max must be >= 3 for a nonempty sweep");
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const Family families[] = {Family::PlanarHyperbolic, Family::HyperbolicHelical,
                               Family::CircularHelical, Family::EuclideanHelical};
    const double rhos[] = {0.3, 0.5};
    const double theta0s[] = {0.0, 0.7};

    json report = json::array();
    bool all_pass = true;

    for (Family fam : families) {
        for (int64_t q = 3; q <= opt.q_max; ++q) {
            const int64_t m = default_m(q);
            double worst = 0.0;
            int64_t count = 0;
            for (double rho : rhos) {
                for (double theta0 : theta0s) {
                    if (fam == Family::PlanarHyperbolic && theta0 != 0.0) continue;
                    FamilyConfig cfg{fam, q, m, theta0, rho};
                    for (int64_t p : units(q)) {
                        const auto rep = cross_check(cfg, p, opt.tol);
                        worst = std::max(worst, rep.max_abs_err);
                        ++count;
                        if (!rep.pass) {
                            std::cerr << "verify: mismatch at family=" << to_string(fam)
                                      << " q=" << q << " p=" << p << " m=" << m
                                      << " theta0=" << theta0 << " rho=" << rho
                                      << " err=" << rep.max_abs_err << '\n';
                        }
                    }
                }
            }
            const bool pass = worst <= opt.tol;
            all_pass = all_pass && pass;
            report.push_back({{"family", to_string(fam)},
                              {"q", q},
                              {"class", to_string(parity_class(q))},
                              {"count", count},
                              {"max_abs_err", worst},
                              {"pass", pass}});
        }
    }

    if (!opt.skip_gauss) {
        // Gauss-sum law and phase-increment agreement, all m.
        for (int64_t q = 3; q <= opt.q_max; ++q) {
            double mag_err = 0.0, phase_err = 0.0;
            const auto pc = parity_class(q);
            for (int64_t p : units(q)) {
                const auto row = gauss_sum_all_m(p, q);
                for (int64_t m = 0; m < q; ++m) {
                    const double mag = std::abs(row[m]);
                    const double want = magnitude_of(magnitude_class(p, m, q), q);
                    mag_err = std::max(mag_err, std::abs(mag - want));
                    auto [base, succ] = increment_indices(pc, m);
                    base = ((base % q) + q) % q;
                    succ = ((succ % q) + q) % q;
                    double inc = std::arg(row[succ] * std::conj(row[base]));
                    if (inc < 0) inc += two_pi;
                    const double want_inc = std::fmod(vartheta({q, m, 0.0}, p), two_pi);
                    double d = std::abs(inc - want_inc);
                    d = std::min(d, two_pi - d);
                    phase_err = std::max(phase_err, d);
                }
            }
            const bool pass =
                mag_err <= 1e-9 * std::sqrt(static_cast<double>(q)) && phase_err <= 1e-8;
            all_pass = all_pass && pass;
            if (!pass) {
                std::cerr << "verify: gauss law violated at q=" << q << " mag_err=" << mag_err
                          << " phase_err=" << phase_err << '\n';
            }
            report.push_back({{"check", "gauss-law"},
                              {"q", q},
                              {"class", to_string(parity_class(q))},
                              {"max_mag_err", mag_err},
                              {"max_phase_err", phase_err},
                              {"pass", pass}});
        }
    }

    std::ofstream file;
    std::ostream& os = open_output(file, opt.output);
    os << report.dump(2) << '\n';
    return all_pass ? kExitPass : kExitFail;
}

// -------------------------------------------------------------- gauss --

int run_gauss(int64_t q, int64_t p, int64_t m) {
    const auto value = gauss_sum(p, m, q);
    const auto mc = magnitude_class(p, m, q);
    json out{{"q", q}, {"p", p}, {"m", m},
             {"value", {value.real(), value.imag()}},
             {"magnitude_class", to_string(mc)}};
    if (mc == MagnitudeClass::Zero) {
        out["phase"] = nullptr;
    } else {
        out["phase"] = phase(p, m, q);
    }
    out["phase_increment"] = phase_increment(p, m, q);
    std::cout << out.dump(2) << '\n';
    return kExitPass;
}

// -------------------------------------------------------------- stats --

struct StatsOptions {
    std::string input;
    std::string tests = "discrepancy,chi2,serial";
    int bins = 50;
    double disc_threshold = 0.05;
    double chi2_low = 0.001, chi2_high = 0.999;
    double serial_threshold = 0.1;
    int64_t serial_limit = 0;  // 0 = all points
    double circle_tol = 1e-9;
    std::string family = "planar-hyperbolic";
    double rho = 0.5;
    int64_t q = 0;
    std::string output;
};

struct CsvData {
    std::vector<double> u;
    std::vector<CirclePoint> points;  // filled only for the zgen schema
};

CsvData read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty CSV: " + path);
    const bool zgen_schema = line == "p,u,re_z,im_z";
    if (!zgen_schema && line != "n,x,u") {
        throw std::invalid_argument("unrecognized CSV header: " + line);
    }
    CsvData data;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        const std::size_t want = zgen_schema ? 4 : 3;
        try {
            if (cells.size() != want) throw std::invalid_argument("wrong column count");
            if (zgen_schema) {
                CirclePoint pt;
                pt.p = std::stoll(cells[0]);
                data.u.push_back(std::stod(cells[1]));
                pt.z = {std::stod(cells[2]), std::stod(cells[3])};
                data.points.push_back(pt);
            } else {
                data.u.push_back(std::stod(cells[2]));
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed CSV at line " + std::to_string(lineno));
        }
    }
    if (data.u.empty()) throw std::invalid_argument("CSV has no data rows");
    return data;
}

int run_stats(const StatsOptions& opt) {
    const CsvData data = read_csv(opt.input);
    std::vector<TestReport> reports;

    std::stringstream ts(opt.tests);
    std::string test;
    while (std::getline(ts, test, ',')) {
        TestReport rep;
        rep.sample_size = data.u.size();
        if (test == "discrepancy") {
            rep.name = "star-discrepancy";
            rep.statistic = star_discrepancy(data.u);
            rep.threshold = opt.disc_threshold;
            rep.pass = rep.statistic <= rep.threshold;
        } else if (test == "chi2") {
            rep.name = "chi-square";
            const auto res = chi_square_uniform(data.u, opt.bins);
            rep.statistic = res.p_value;
            rep.threshold = opt.chi2_low;
            rep.pass = res.p_value > opt.chi2_low && res.p_value < opt.chi2_high;
            rep.detail = "statistic=" + fmt17(res.statistic) + " band=(" + fmt17(opt.chi2_low) +
                         "," + fmt17(opt.chi2_high) + ")";
        } else if (test == "serial") {
            rep.name = "serial-pairs";
            std::span<const double> pts(data.u);
            if (opt.serial_limit > 0 && pts.size() > static_cast<std::size_t>(opt.serial_limit)) {
                pts = pts.subspan(0, opt.serial_limit);
            }
            if (pts.size() > kSerialPairCap) {
                throw std::invalid_argument(
                    "serial test capped at N = " + std::to_string(kSerialPairCap) +
                    " points; pass --serial-limit to truncate");
            }
            rep.sample_size = pts.size();
            rep.statistic = serial_pairs_discrepancy(pts);
            rep.threshold = opt.serial_threshold;
            rep.pass = rep.statistic <= rep.threshold;
        } else if (test == "permutation") {
            if (opt.q < 3) throw std::invalid_argument("permutation test needs --q");
            rep.name = "permutation";
            rep.pass = permutation_check(opt.q);
            rep.statistic = rep.pass ? 1.0 : 0.0;
        } else if (test == "circle") {
            if (data.points.empty()) {
                throw std::invalid_argument("circle test needs the p,u,re_z,im_z schema");
            }
            const auto fam = family_from_string(opt.family);
            if (!fam) throw std::invalid_argument("unknown family: " + opt.family);
            FamilyConfig cfg{*fam, std::max<int64_t>(opt.q, 3), 0, 0.0, opt.rho};
            const auto res = circle_test(data.points, circle_params(cfg), opt.circle_tol);
            rep.name = "circle-membership";
            rep.statistic = res.max_radial_err;
            rep.threshold = opt.circle_tol;
            rep.pass = res.pass;
            rep.detail = "angle_discrepancy=" + fmt17(res.angle_discrepancy);
        } else {
            throw std::invalid_argument("unknown test: " + test);
        }
        reports.push_back(rep);
    }

    json out = json::array();
    bool all_pass = true;
    for (const auto& rep : reports) {
        all_pass = all_pass && rep.pass;
        json j{{"test", rep.name},
               {"sample_size", rep.sample_size},
               {"statistic", rep.statistic},
               {"threshold", rep.threshold},
               {"pass", rep.pass}};
        if (!rep.detail.empty()) j["detail"] = rep.detail;
        out.push_back(j);
    }
    std::ofstream file;
    std::ostream& os = open_output(file, opt.output);
    os << out.dump(2) << '\n';
    return all_pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pseudorandom numbers from polygonal filament evolution"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* cmd_gen = app.add_subcommand("gen", "generate a point stream");
    cmd_gen->add_option("--family", gen.family, "polygon family");
    cmd_gen->add_option("--generator", gen.generator, "filament|eicg|lcg|icg|compound");
    cmd_gen->add_option("--q", gen.q, "modulus");
    cmd_gen->add_option("--m", gen.m, "vertex index (-1 = auto)");
    cmd_gen->add_option("--theta0", gen.theta0, "torsion angle");
    cmd_gen->add_option("--rho", gen.rho, "corner angle parameter");
    cmd_gen->add_option("--a", gen.a, "multiplier (classical generators)");
    cmd_gen->add_option("--b", gen.b, "increment (classical generators)");
    cmd_gen->add_option("--seed", gen.seed, "x0 or n0 (classical generators)");
    cmd_gen->add_option("--count", gen.count, "number of outputs (classical generators)");
    cmd_gen->add_option("--moduli", gen.moduli, "compound moduli")->delimiter(',');
    cmd_gen->add_option("--format", gen.format, "csv|json");
    cmd_gen->add_option("--output,-o", gen.output, "output path (default stdout)");

    VerifyOptions ver;
    auto* cmd_verify = app.add_subcommand("verify", "closed form vs geometric oracle sweep");
    cmd_verify->add_option("--q-max", ver.q_max, "largest modulus in the sweep");
    cmd_verify->add_option("--tol", ver.tol, "comparison tolerance");
    cmd_verify->add_flag("--skip-gauss", ver.skip_gauss, "skip the Gauss-sum law sweep");
    cmd_verify->add_option("--output,-o", ver.output, "JSON report path");

    int64_t gq = 0, gp = 1, gm = 0;
    auto* cmd_gauss = app.add_subcommand("gauss", "inspect one Gauss sum");
    cmd_gauss->add_option("--q", gq, "modulus")->required();
    cmd_gauss->add_option("--p", gp, "numerator");
    cmd_gauss->add_option("--m", gm, "shift index");

    StatsOptions st;
    auto* cmd_stats = app.add_subcommand("stats", "statistical tests over a CSV stream");
    cmd_stats->add_option("--input,-i", st.input, "CSV input")->required();
    cmd_stats->add_option("--tests", st.tests, "comma list: discrepancy,chi2,serial,permutation,circle");
    cmd_stats->add_option("--bins", st.bins, "chi-square bins");
    cmd_stats->add_option("--disc-threshold", st.disc_threshold, "star discrepancy bound");
    cmd_stats->add_option("--chi2-low", st.chi2_low, "chi-square p-value lower bound");
    cmd_stats->add_option("--chi2-high", st.chi2_high, "chi-square p-value upper bound");
    cmd_stats->add_option("--serial-threshold", st.serial_threshold, "serial discrepancy bound");
    cmd_stats->add_option("--serial-limit", st.serial_limit, "truncate serial test input");
    cmd_stats->add_option("--circle-tol", st.circle_tol, "relative circle tolerance");
    cmd_stats->add_option("--family", st.family, "family for the circle test");
    cmd_stats->add_option("--rho", st.rho, "rho for the circle test");
    cmd_stats->add_option("--q", st.q, "modulus for the permutation test");
    cmd_stats->add_option("--output,-o", st.output, "JSON report path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (cmd_gen->parsed()) return run_gen(gen);
        if (cmd_verify->parsed()) return run_verify(ver);
        if (cmd_gauss->parsed()) return run_gauss(gq, gp, gm);
        if (cmd_stats->parsed()) return run_stats(st);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
