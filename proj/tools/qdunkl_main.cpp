// Command-line interface for the fractional quaternionic Dunkl transform
// library: kernel evaluation, 1-D and 2-D transforms, the fractional Hankel
// transform, the theorem-verification suites, and uncertainty-moment batches.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qdunkl/basis.hpp"
#include "qdunkl/errors.hpp"
#include "qdunkl/frqdt2d.hpp"
#include "qdunkl/io.hpp"
#include "qdunkl/random_field.hpp"
#include "qdunkl/suites.hpp"
#include "qdunkl/threading.hpp"
#include "qdunkl/transform1d.hpp"
#include "qdunkl/uncertainty.hpp"

namespace {

using namespace qdunkl;

constexpr double pi = std::numbers::pi;

UnitAxis parse_axis(const std::string& text) {
    if (text == "i") return UnitAxis::i();
    if (text == "j") return UnitAxis::j();
    if (text == "k") return UnitAxis::k();
    double x, y, z;
    char c1, c2;
    std::istringstream ss(text);
    if (ss >> x >> c1 >> y >> c2 >> z && c1 == ',' && c2 == ',') return UnitAxis(x, y, z);
    throw InvalidParam("axis must be i, j, k, or a comma-separated component triple");
}

json quaternion_json(const Quaternion& q) { return json{q.w, q.x, q.y, q.z}; }

struct SpecOptions {
    double chi1 = 0.5;
    double chi2 = 1.0;
    double theta1 = pi / 3.0;
    double theta2 = 2.0 * pi / 5.0;
    std::string axis_a = "i";
    std::string axis_b = "j";

    void attach(CLI::App* app) {
        app->add_option("--chi1", chi1, "Dunkl parameter for x1 (>= 0)");
        app->add_option("--chi2", chi2, "Dunkl parameter for x2 (>= 0)");
        app->add_option("--theta1", theta1, "fractional angle for x1");
        app->add_option("--theta2", theta2, "fractional angle for x2");
        app->add_option("--axis-a", axis_a, "left axis: i, j, k, or x,y,z triple");
        app->add_option("--axis-b", axis_b, "right axis: i, j, k, or x,y,z triple");
    }

    TransformSpec spec() const {
        TransformSpec s;
        s.chi1 = chi1;
        s.chi2 = chi2;
        s.theta1 = theta1;
        s.theta2 = theta2;
        s.a = parse_axis(axis_a);
        s.b = parse_axis(axis_b);
        return s;
    }
};

void emit(const json& j, const std::string& output) {
    if (output.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream os(output);
        if (!os) throw InvalidParam("cannot open output file: " + output);
        os << j.dump(2) << "\n";
    }
}

// Built-in field generators: gaussian:alpha | hermite:n,m | example_eigen:t1,r1,t2,r2.
SampledField generate_field(const std::string& gen, const TransformSpec& spec, GridPtr grid) {
    const auto colon = gen.find(':');
    const std::string kind = gen.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : gen.substr(colon + 1);
    const Grid2D& g = *grid;
    if (kind == "gaussian") {
        const double alpha = args.empty() ? 0.5 : std::stod(args);
        SampledField f(grid);
        for (int i = 0; i < g.n1(); ++i)
            for (int j = 0; j < g.n2(); ++j) {
                const double r2 = g.rule1.nodes[i] * g.rule1.nodes[i] +
                                  g.rule2.nodes[j] * g.rule2.nodes[j];
                f.at(i, j) = Quaternion::real(std::exp(-alpha * r2));
            }
        return f;
    }
    if (kind == "hermite") {
        int n = 0, m = 0;
        if (std::sscanf(args.c_str(), "%d,%d", &n, &m) != 2)
            throw InvalidParam("hermite generator expects hermite:n,m");
        return hermite2d(n, m, grid);
    }
    if (kind == "example_eigen") {
        double t1 = 1, r1 = 0, t2 = 1, r2 = 0;
        if (std::sscanf(args.c_str(), "%lf,%lf,%lf,%lf", &t1, &r1, &t2, &r2) != 4)
            throw InvalidParam("example_eigen generator expects example_eigen:t1,r1,t2,r2");
        const Quaternion QL = Quaternion::real(t1) + spec.a.q() * r1;
        const Quaternion QR = Quaternion::real(t2) + spec.b.q() * r2;
        SampledField f(grid);
        for (int i = 0; i < g.n1(); ++i)
            for (int j = 0; j < g.n2(); ++j) {
                const double x1 = g.rule1.nodes[i];
                const double x2 = g.rule2.nodes[j];
                const double radial = std::pow(std::abs(x1), spec.chi1) *
                                      std::exp(-0.5 * x1 * x1) *
                                      std::pow(std::abs(x2), spec.chi2) *
                                      std::exp(-0.5 * x2 * x2);
                f.at(i, j) = QL * radial * QR;
            }
        return f;
    }
    throw InvalidParam("unknown generator: " + gen);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fractional quaternionic Dunkl transform toolkit"};
    app.require_subcommand(1);

    int threads = 0;
    app.add_option("--threads", threads, "worker threads (default: QDUNKL_THREADS or auto)");

    // ---- kernel ----
    auto* cmd_kernel = app.add_subcommand("kernel", "evaluate the fractional Dunkl kernel");
    SpecOptions kernel_spec;
    kernel_spec.attach(cmd_kernel);
    double kx = 1.0, ky = 1.0;
    std::string kernel_out;
    cmd_kernel->add_option("--x", kx, "first kernel argument");
    cmd_kernel->add_option("--y", ky, "second kernel argument");
    cmd_kernel->add_option("--output", kernel_out, "output file (default stdout)");

    // ---- transform1d ----
    auto* cmd_t1 = app.add_subcommand("transform1d", "1-D fractional Dunkl transform");
    SpecOptions t1_spec;
    t1_spec.attach(cmd_t1);
    int t1_N = 48;
    int t1_nmax = 16;
    std::string t1_gen = "hermite:2,0";
    std::string t1_path = "quadrature";
    std::string t1_out;
    bool t1_compare = false;
    cmd_t1->add_option("--N", t1_N, "quadrature size");
    cmd_t1->add_option("--nmax", t1_nmax, "spectral truncation");
    cmd_t1->add_option("--gen", t1_gen, "input: hermite:n,m (n used) or gaussian:alpha");
    cmd_t1->add_option("--path", t1_path, "algorithm: quadrature | spectral");
    cmd_t1->add_flag("--compare", t1_compare, "emit the residual between both paths");
    cmd_t1->add_option("--output", t1_out, "output file (default stdout)");

    // ---- transform2d ----
    auto* cmd_t2 = app.add_subcommand("transform2d", "two-sided 2-D transform");
    SpecOptions t2_spec;
    t2_spec.attach(cmd_t2);
    int t2_N = 48;
    int t2_nmax = 16;
    std::string t2_gen = "gaussian:0.5";
    std::string t2_input, t2_out;
    std::string t2_path = "quadrature";
    bool t2_compare = false;
    std::string t2_format = "csv";
    cmd_t2->add_option("--N", t2_N, "quadrature size per axis");
    cmd_t2->add_option("--nmax", t2_nmax, "spectral truncation for the spectral path");
    cmd_t2->add_option("--gen", t2_gen, "built-in input generator");
    cmd_t2->add_option("--input", t2_input, "input field CSV (overrides --gen)");
    cmd_t2->add_option("--path", t2_path, "algorithm: quadrature | spectral");
    cmd_t2->add_flag("--compare", t2_compare, "emit the residual between both paths");
    cmd_t2->add_option("--format", t2_format, "output format: csv | json");
    cmd_t2->add_option("--output", t2_out, "output file (default stdout)");

    // ---- hankel ----
    auto* cmd_hankel = app.add_subcommand("hankel", "fractional Hankel transform of a Gaussian");
    double h_nu = 0.5, h_theta = pi / 3.0, h_alpha = 0.7;
    int h_N = 96;
    std::string h_axis = "i", h_out;
    cmd_hankel->add_option("--nu", h_nu, "order (> -1)");
    cmd_hankel->add_option("--theta", h_theta, "fractional angle in (0, pi)");
    cmd_hankel->add_option("--alpha", h_alpha, "Gaussian exponent (> 0)");
    cmd_hankel->add_option("--N", h_N, "half-line rule size");
    cmd_hankel->add_option("--axis", h_axis, "axis: i, j, k, or triple");
    cmd_hankel->add_option("--output", h_out, "output file (default stdout)");

    // ---- verify ----
    auto* cmd_verify = app.add_subcommand("verify", "run theorem-verification suites");
    SpecOptions v_spec;
    v_spec.attach(cmd_verify);
    std::vector<std::string> v_suites;
    int v_N = 96;
    int v_nmax = 6;
    int v_nrandom = 20;
    std::uint64_t v_seed = 20240817;
    double v_tol = 0.0;
    std::string v_out;
    cmd_verify->add_option("--suite", v_suites,
                           "suite names (repeatable; default: all)");
    cmd_verify->add_option("--N", v_N, "quadrature size per axis");
    cmd_verify->add_option("--nmax", v_nmax, "band limit for random/eigen checks");
    cmd_verify->add_option("--n-random", v_nrandom, "number of random fields");
    cmd_verify->add_option("--seed", v_seed, "seed for the randomized suites");
    cmd_verify->add_option("--tol", v_tol, "override every suite tolerance");
    cmd_verify->add_option("--output", v_out, "report file (default stdout)");
    double v_alpha = 0.5;
    cmd_verify->add_option("--alpha", v_alpha, "Gaussian exponent (accepted for convenience)");

    // ---- moments ----
    auto* cmd_moments = app.add_subcommand("moments", "uncertainty-moment batch (CSV)");
    SpecOptions m_spec;
    m_spec.attach(cmd_moments);
    std::vector<double> m_p{1.0, 1.5, 2.0};
    int m_N = 96;
    int m_nmax = 6;
    int m_nrandom = 5;
    std::uint64_t m_seed = 20240817;
    std::string m_out;
    cmd_moments->add_option("--p", m_p, "moment orders (repeatable)");
    cmd_moments->add_option("--N", m_N, "quadrature size per axis");
    cmd_moments->add_option("--nmax", m_nmax, "band limit for random fields");
    cmd_moments->add_option("--n-random", m_nrandom, "random fields per p");
    cmd_moments->add_option("--seed", m_seed, "seed");
    cmd_moments->add_option("--output", m_out, "CSV file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (cmd_kernel->parsed()) {
            const TransformSpec spec = kernel_spec.spec();
            json j;
            j["check"] = "kernel_value";
            j["params"] = {{"chi", spec.chi1}, {"theta", spec.theta1}, {"x", kx}, {"y", ky}};
            j["value"] = quaternion_json(frac_kernel(spec.chi1, spec.theta1, kx, ky, spec.a));
            emit(j, kernel_out);
            return 0;
        }

        if (cmd_t1->parsed()) {
            const TransformSpec spec2d = t1_spec.spec();
            AxisTransformSpec spec{spec2d.chi1, spec2d.theta1, spec2d.a, KernelSide::Left};
            const QuadratureRule1D rule = build_rule(spec.chi, t1_N);
            std::vector<Quaternion> f(rule.size());
            if (t1_gen.rfind("hermite:", 0) == 0) {
                int n = 0, m = 0;
                std::sscanf(t1_gen.c_str() + 8, "%d,%d", &n, &m);
                for (int i = 0; i < rule.size(); ++i)
                    f[i] = Quaternion::real(hermite_h(n, spec.chi, rule.nodes[i]));
            } else if (t1_gen.rfind("gaussian:", 0) == 0) {
                const double alpha = std::stod(t1_gen.substr(9));
                for (int i = 0; i < rule.size(); ++i)
                    f[i] = Quaternion::real(std::exp(-alpha * rule.nodes[i] * rule.nodes[i]));
            } else {
                throw InvalidParam("transform1d --gen must be hermite:n,m or gaussian:alpha");
            }
            const std::vector<Quaternion> viaQ =
                frac_dunkl_quadrature(f, spec, rule, rule.nodes);
            const std::vector<Quaternion> viaS =
                frac_dunkl_spectral(f, spec, rule, t1_nmax, rule.nodes);
            const std::vector<Quaternion>& result = (t1_path == "spectral") ? viaS : viaQ;
            json j;
            j["params"] = {{"chi", spec.chi},
                           {"theta", spec.theta},
                           {"N", t1_N},
                           {"gen", t1_gen},
                           {"path", t1_path}};
            json values = json::array();
            for (int i = 0; i < rule.size(); ++i)
                values.push_back({rule.nodes[i], result[i].w, result[i].x, result[i].y,
                                  result[i].z});
            j["values"] = std::move(values);
            if (t1_compare) {
                double resid = 0.0;
                for (int i = 0; i < rule.size(); ++i)
                    resid = std::max(resid, (viaQ[i] - viaS[i]).norm());
                j["path_residual"] = resid;
            }
            emit(j, t1_out);
            return 0;
        }

        if (cmd_t2->parsed()) {
            const TransformSpec spec = t2_spec.spec();
            GridPtr grid = make_grid(spec.chi1, spec.chi2, t2_N);
            SampledField f;
            if (!t2_input.empty()) {
                std::ifstream is(t2_input);
                if (!is) throw InvalidParam("cannot open input file: " + t2_input);
                f = read_csv(grid, is);
            } else {
                f = generate_field(t2_gen, spec, grid);
            }
            const SampledField viaQ = frqdt_quadrature(f, spec, threads);
            SampledField result = (t2_path == "spectral")
                                      ? frqdt_via_spectral(f, spec, t2_nmax, t2_nmax)
                                      : viaQ;
            if (t2_compare) {
                const SampledField viaS = frqdt_via_spectral(f, spec, t2_nmax, t2_nmax);
                double resid = 0.0;
                for (std::size_t k = 0; k < viaQ.values.size(); ++k)
                    resid = std::max(resid, (viaQ.values[k] - viaS.values[k]).norm());
                json j;
                j["check"] = "path_comparison";
                j["params"] = {{"N", t2_N}, {"nmax", t2_nmax}};
                j["residual"] = resid;
                emit(j, t2_out);
                return 0;
            }
            if (t2_format == "json") {
                emit(field_to_json(result), t2_out);
            } else if (t2_out.empty()) {
                write_csv(result, std::cout);
            } else {
                std::ofstream os(t2_out);
                if (!os) throw InvalidParam("cannot open output file: " + t2_out);
                write_csv(result, os);
            }
            return 0;
        }

        if (cmd_hankel->parsed()) {
            const UnitAxis axis = parse_axis(h_axis);
            const HankelRule rule = make_hankel_rule(h_nu, h_N);
            std::vector<Quaternion> psi(rule.nodes.size());
            for (std::size_t i = 0; i < rule.nodes.size(); ++i)
                psi[i] = Quaternion::real(std::exp(-h_alpha * rule.nodes[i] * rule.nodes[i]));
            const std::vector<double> targets{0.0, 0.5, 1.0, 1.5, 2.0, 3.0};
            const std::vector<Quaternion> viaQ =
                frac_hankel(psi, h_nu, h_theta, axis, rule, targets);
            double resid = 0.0;
            json rows = json::array();
            for (std::size_t k = 0; k < targets.size(); ++k) {
                const Quaternion closed =
                    hankel_gaussian(h_alpha, h_nu, h_theta, axis, targets[k]);
                resid = std::max(resid, (viaQ[k] - closed).norm());
                rows.push_back({targets[k], quaternion_json(viaQ[k]), quaternion_json(closed)});
            }
            json j;
            j["check"] = "hankel_gaussian_closed_form";
            j["params"] = {{"nu", h_nu}, {"theta", h_theta}, {"alpha", h_alpha}, {"N", h_N}};
            j["rows"] = std::move(rows);
            j["residual"] = resid;
            j["tolerance"] = 1e-8;
            j["pass"] = resid <= 1e-8;
            emit(j, h_out);
            return j["pass"].get<bool>() ? 0 : 1;
        }

        if (cmd_verify->parsed()) {
            SuiteConfig cfg = SuiteConfig::make_default();
            cfg.spec = v_spec.spec();
            cfg.N = v_N;
            cfg.nmax = cfg.mmax = v_nmax;
            cfg.n_random = v_nrandom;
            cfg.seed = v_seed;
            cfg.threads = threads;
            if (v_tol > 0.0) {
                cfg.tol_eigen = cfg.tol_plancherel = cfg.tol_inversion = cfg.tol_composition =
                    cfg.tol_gaussian = cfg.tol_bochner = cfg.tol_heisenberg = cfg.tol_hankel =
                        v_tol;
            }
            std::vector<std::string> selected = v_suites.empty() ? suite_names() : v_suites;
            json reports = json::array();
            bool all_pass = true;
            for (const std::string& name : selected) {
                for (const CheckReport& r : run_suite(name, cfg)) {
                    all_pass = all_pass && r.pass;
                    reports.push_back(r.to_json());
                }
            }
            emit(reports, v_out);
            if (!all_pass) {
                std::cerr << "one or more checks failed\n";
                return 1;
            }
            return 0;
        }

        if (cmd_moments->parsed()) {
            const TransformSpec spec = m_spec.spec();
            GridPtr grid = make_grid(spec.chi1, spec.chi2, m_N);
            HeisenbergOptions opts;
            opts.threads = threads;
            std::ostringstream csv;
            csv << "p,chi1,chi2,theta1,theta2,ratio,pass\n";
            csv.precision(12);
            bool all_pass = true;
            for (double p : m_p) {
                // ground-state Gaussian first, then the random suite
                SampledField f0(grid);
                const Grid2D& g = *grid;
                for (int i = 0; i < g.n1(); ++i)
                    for (int j = 0; j < g.n2(); ++j) {
                        const double r2 = g.rule1.nodes[i] * g.rule1.nodes[i] +
                                          g.rule2.nodes[j] * g.rule2.nodes[j];
                        f0.at(i, j) = Quaternion::real(std::exp(-0.5 * r2));
                    }
                std::vector<SampledField> fields{f0};
                for (int k = 0; k < m_nrandom; ++k)
                    fields.push_back(random_band_limited(grid, m_nmax, m_nmax, m_seed + k));
                for (const SampledField& f : fields) {
                    const MomentReport rep = heisenberg_check(f, spec, p, opts);
                    all_pass = all_pass && rep.pass;
                    csv << p << ',' << spec.chi1 << ',' << spec.chi2 << ',' << spec.theta1 << ','
                        << spec.theta2 << ',' << rep.ratio << ',' << (rep.pass ? "true" : "false")
                        << '\n';
                }
            }
            if (m_out.empty()) {
                std::cout << csv.str();
            } else {
                std::ofstream os(m_out);
                if (!os) throw InvalidParam("cannot open output file: " + m_out);
                os << csv.str();
            }
            return all_pass ? 0 : 1;
        }
    } catch (const InvalidParam& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const GridMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
