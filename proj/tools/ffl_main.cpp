// ffl: exact quadratic Dirichlet L-functions over F_q[x], their negative
// moments over H_{2g+1}, Euler-product constants, and the interval-sieve
// diagnostics. Subcommands: enumerate, symbol, lpoly, rhcheck, moment, scan,
// aconst, sieve, identity.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "ffl/characters.hpp"
#include "ffl/euler.hpp"
#include "ffl/factor_sieve.hpp"
#include "ffl/families.hpp"
#include "ffl/guards.hpp"
#include "ffl/report.hpp"
#include "ffl/lfunction.hpp"
#include "ffl/moments.hpp"
#include "ffl/sieve.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kFormatVersion = 1;

struct RunConfig {
    std::int64_t q = 3;
    int g = 1;
    double k = 1.0;
    double beta = 0.5;
    double t = 0.0;
    double eps = 0.1;
    int threads = 1;
    std::string cache_dir;
    std::string out;
    std::string format = "json";
    std::int64_t resource_cap = ffl::kDefaultFamilyCap;
};

json config_json(const RunConfig& c) {
    json j;
    j["q"] = c.q;
    j["g"] = c.g;
    j["k"] = c.k;
    j["beta"] = c.beta;
    j["t"] = c.t;
    j["eps"] = c.eps;
    j["threads"] = c.threads;
    j["cache_dir"] = c.cache_dir;
    j["out"] = c.out;
    j["format"] = c.format;
    j["resource_cap"] = c.resource_cap;
    return j;
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::trunc | std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + cfg.out);
    f << text;
}

void emit_json(const RunConfig& cfg, json result) {
    json j;
    j["format_version"] = kFormatVersion;
    j["config"] = config_json(cfg);
    j["result"] = std::move(result);
    emit(cfg, j.dump(2) + "\n");
}

std::vector<double> parse_grid(const std::string& spec) {
    // "a:b:step"
    auto c1 = spec.find(':');
    auto c2 = spec.find(':', c1 == std::string::npos ? 0 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::invalid_argument("grid must be a:b:step");
    const double a = std::stod(spec.substr(0, c1));
    const double b = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
    const double step = std::stod(spec.substr(c2 + 1));
    if (!(step > 0) || b < a) throw std::invalid_argument("grid must satisfy a <= b, step > 0");
    std::vector<double> grid;
    const int count = static_cast<int>(std::floor((b - a) / step + 1e-9)) + 1;
    for (int i = 0; i < count; ++i) grid.push_back(a + i * step);
    return grid;
}

std::optional<std::string> cache_path(const RunConfig& cfg) {
    if (cfg.cache_dir.empty()) return std::nullopt;
    return cfg.cache_dir + "/" + ffl::LCache::file_name(cfg.q, cfg.g);
}

json scan_row_json(const ffl::MomentResult& r) {
    json j;
    j["q"] = r.q;
    j["g"] = r.g;
    j["k"] = r.shift.k;
    j["beta"] = r.shift.beta;
    j["t"] = r.shift.t;
    j["family_size"] = r.family_size.str();
    j["moment"] = r.moment;
    j["rhs"] = r.rhs_prediction;
    j["rel_error"] = r.rel_error;
    j["regime"] = ffl::to_string(r.regime);
    return j;
}

int run_cli(int argc, char** argv) {
    CLI::App app{"quadratic Dirichlet L-functions over F_q[x] and their negative moments"};
    app.require_subcommand(1);
    app.set_config("--config");

    RunConfig cfg;
    if (const char* env = std::getenv("FFL_CACHE_DIR")) cfg.cache_dir = env;

    app.add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1, 1024));
    app.add_option("--cache-dir", cfg.cache_dir, "L-polynomial cache directory");
    app.add_option("--out", cfg.out, "output file (default stdout)");
    app.add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--resource-cap", cfg.resource_cap, "max family size for exhaustive sweeps");

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "list a polynomial family");
    std::string kind_str = "monic";
    int deg_n = 1;
    bool count_only = false;
    cmd_enum->add_option("--q", cfg.q)->required();
    cmd_enum->add_option("--n", deg_n)->required();
    cmd_enum->add_option("--kind", kind_str)->check(CLI::IsMember({"monic", "squarefree", "irreducible"}));
    cmd_enum->add_flag("--count-only", count_only);

    // symbol
    auto* cmd_sym = app.add_subcommand("symbol", "Jacobi symbol (f/m)");
    std::string f_enc, m_enc;
    cmd_sym->add_option("--q", cfg.q)->required();
    cmd_sym->add_option("--f", f_enc, "numerator, canonical encoding")->required();
    cmd_sym->add_option("--m", m_enc, "monic modulus, canonical encoding")->required();

    // lpoly
    auto* cmd_lpoly = app.add_subcommand("lpoly", "L-polynomial of chi_D");
    std::string d_enc;
    bool validate = false;
    cmd_lpoly->add_option("--q", cfg.q)->required();
    cmd_lpoly->add_option("--D", d_enc, "square-free monic of odd degree")->required();
    cmd_lpoly->add_flag("--validate", validate, "recompute every coefficient by direct character sums");

    // rhcheck
    auto* cmd_rh = app.add_subcommand("rhcheck", "root-circle check over the whole family");
    double tol = 1e-8;
    cmd_rh->add_option("--q", cfg.q)->required();
    cmd_rh->add_option("--g", cfg.g)->required();
    cmd_rh->add_option("--tol", tol);

    // moment
    auto* cmd_moment = app.add_subcommand("moment", "exhaustive shifted negative moment");
    cmd_moment->add_option("--q", cfg.q)->required();
    cmd_moment->add_option("--g", cfg.g)->required();
    cmd_moment->add_option("--k", cfg.k)->required();
    cmd_moment->add_option("--beta", cfg.beta)->required();
    cmd_moment->add_option("--t", cfg.t);

    // scan
    auto* cmd_scan = app.add_subcommand("scan", "moment vs prediction over a beta grid");
    std::string grid_spec;
    cmd_scan->add_option("--q", cfg.q)->required();
    cmd_scan->add_option("--g", cfg.g)->required();
    cmd_scan->add_option("--k", cfg.k)->required();
    cmd_scan->add_option("--beta-grid", grid_spec, "a:b:step")->required();
    cmd_scan->add_option("--t", cfg.t);

    // aconst
    auto* cmd_aconst = app.add_subcommand("aconst", "Euler-product constant of the asymptotic");
    int cutoff = 40;
    int k_int = 1;
    cmd_aconst->add_option("--q", cfg.q)->required();
    cmd_aconst->add_option("--k", k_int)->required();
    cmd_aconst->add_option("--beta", cfg.beta)->required();
    cmd_aconst->add_option("--cutoff", cutoff);

    // sieve
    auto* cmd_sieve = app.add_subcommand("sieve", "interval schedule and T-set diagnostics");
    bool measure_exceptional = false;
    cmd_sieve->add_option("--q", cfg.q)->required();
    cmd_sieve->add_option("--g", cfg.g)->required();
    cmd_sieve->add_option("--k", cfg.k)->required();
    cmd_sieve->add_option("--beta", cfg.beta)->required();
    cmd_sieve->add_option("--eps", cfg.eps)->required();
    cmd_sieve->add_flag("--measure-exceptional", measure_exceptional);

    // identity
    auto* cmd_id = app.add_subcommand("identity", "divisor series and power-identity checks");
    int maxdeg = 8;
    cmd_id->add_option("--q", cfg.q)->required();
    cmd_id->add_option("--beta", cfg.beta);
    cmd_id->add_option("--maxdeg", maxdeg)->check(CLI::Range(1, 14));

    CLI11_PARSE(app, argc, argv);

    const ffl::Fq field(cfg.q);

    if (*cmd_enum) {
        ffl::FamilySpec spec{field, deg_n, ffl::family_kind_from_string(kind_str)};
        if (count_only) {
            emit(cfg, ffl::family_count(spec).str() + "\n");
        } else {
            std::string out;
            ffl::family_for_each(spec, 0, ffl::monic_space_size(field, deg_n),
                                 [&](const ffl::Poly& f) { out += f.encode() + "\n"; });
            emit(cfg, out);
        }
        return 0;
    }

    if (*cmd_sym) {
        ffl::Poly f = ffl::Poly::decode(field, f_enc);
        ffl::Poly m = ffl::Poly::decode(field, m_enc);
        emit(cfg, std::to_string(ffl::jacobi_symbol(f, m)) + "\n");
        return 0;
    }

    if (*cmd_lpoly) {
        ffl::Poly D = ffl::Poly::decode(field, d_enc);
        const int g = (D.deg() - 1) / 2;
        ffl::LPolynomial L;
        std::optional<std::string> cpath = cache_path(cfg);
        ffl::LCache cache(cfg.q, g);
        if (cpath) cache.load(*cpath);
        if (validate) {
            L = ffl::lpolynomial_direct(D);
        } else if (const auto* half = cpath ? cache.find(D) : nullptr) {
            ffl::LContext ctx(field, g);
            L = ctx.lpolynomial_from_half(*half);
        } else {
            ffl::LContext ctx(field, g);
            L = ctx.lpolynomial(D);
        }
        if (cpath) {
            std::vector<ffl::Int> half(L.coeffs.begin(), L.coeffs.begin() + g + 1);
            cache.put(D, half);
            std::filesystem::create_directories(cfg.cache_dir);
            cache.save(*cpath);
        }
        json r;
        r["D"] = D.encode();
        r["g"] = g;
        json coeffs = json::array();
        for (const auto& c : L.coeffs) coeffs.push_back(c.str());
        r["coeffs"] = coeffs;
        r["functional_equation"] = ffl::check_functional_equation(L);
        emit_json(cfg, r);
        return 0;
    }

    if (*cmd_rh) {
        ffl::check_family_cap(field, cfg.g, cfg.resource_cap);
        ffl::LContext ctx(field, cfg.g);
        const int n = 2 * cfg.g + 1;
        std::int64_t family = 0, failures = 0, solver_failures = 0;
        double worst = 0.0;
        ffl::FamilySpec spec{field, n, ffl::FamilyKind::squarefree};
        ffl::family_for_each(spec, 0, ffl::monic_space_size(field, n), [&](const ffl::Poly& D) {
            ++family;
            auto rep = ffl::check_rh(ctx.lpolynomial(D));
            if (!rep.solver_ok) {
                ++solver_failures;
                return;
            }
            worst = std::max(worst, rep.max_deviation);
            if (rep.max_deviation > tol) ++failures;
        });
        json r;
        r["family_size"] = family;
        r["tol"] = tol;
        r["max_deviation"] = worst;
        r["failures"] = failures;
        r["solver_failures"] = solver_failures;
        r["all_pass"] = (failures == 0 && solver_failures == 0);
        emit_json(cfg, r);
        return 0;
    }

    if (*cmd_moment || *cmd_scan) {
        ffl::MomentOptions opt;
        opt.threads = cfg.threads;
        opt.family_cap = cfg.resource_cap;
        ffl::LCache cache(cfg.q, cfg.g);
        std::optional<std::string> cpath = cache_path(cfg);
        if (cpath) {
            cache.load(*cpath);
            opt.cache = &cache;
            opt.update_cache = true;
        }
        std::vector<double> grid =
            *cmd_scan ? parse_grid(grid_spec) : std::vector<double>{cfg.beta};
        auto rows = ffl::compare_scan(field, cfg.g, cfg.k, grid, cfg.t, opt);
        if (cpath) {
            std::filesystem::create_directories(cfg.cache_dir);
            cache.save(*cpath);
        }
        if (*cmd_moment) {
            emit_json(cfg, scan_row_json(rows[0]));
        } else if (cfg.format == "csv") {
            emit(cfg, ffl::scan_csv(rows));
        } else {
            json arr = json::array();
            for (const auto& r : rows) arr.push_back(scan_row_json(r));
            emit_json(cfg, arr);
        }
        return 0;
    }

    if (*cmd_aconst) {
        auto v = ffl::moment_euler_constant(field, k_int, cfg.beta, cutoff);
        json r;
        r["value"] = v.value;
        r["tail_bound"] = v.tail_bound;
        r["cutoff_degree"] = v.cutoff_degree;
        emit_json(cfg, r);
        return 0;
    }

    if (*cmd_sieve) {
        auto sched = ffl::build_schedule(field, cfg.g, cfg.k, cfg.beta, cfg.eps);
        json r;
        r["branch"] = ffl::to_string(sched.branch);
        r["a"] = sched.a;
        r["d"] = sched.d;
        r["r"] = sched.r;
        r["c"] = sched.c;
        r["alpha"] = sched.alpha;
        r["K"] = sched.K;
        r["N"] = sched.N;
        r["s"] = sched.s;
        r["ell"] = sched.ell;
        r["budget_used"] = sched.budget_used();
        r["budget"] = 2 * static_cast<std::int64_t>(cfg.g);
        r["c_condition_holds"] = sched.c_condition_holds;
        if (measure_exceptional)
            r["exceptional_fraction"] =
                ffl::exceptional_fraction(field, cfg.g, sched, cfg.resource_cap, cfg.threads);
        emit_json(cfg, r);
        return 0;
    }

    if (*cmd_id) {
        ffl::FactorSieve sieve(field, maxdeg);
        auto tau = ffl::tau_series_check(sieve, cfg.beta, maxdeg);
        json r;
        r["tau_series"] = json{{"pass", tau.pass},
                               {"maxdeg", tau.maxdeg},
                               {"max_abs_err", tau.max_abs_err},
                               {"mode", cfg.beta == 0.0 ? "exact" : "float"}};
        emit_json(cfg, r);
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const ffl::resource_cap_error& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
