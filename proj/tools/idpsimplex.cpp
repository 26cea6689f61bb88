// Command line front end. Exit codes: 0 pass, 1 usage/parameter error, 2 verification failure,
// 3 enumeration budget exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "idp/idp.hpp"

namespace {

struct Range {
    std::int64_t lo = 0, hi = -1;
};

Range parse_range(const std::string& s) {
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            const auto v = std::stoll(s);
            return {v, v};
        }
        return {std::stoll(s.substr(0, dots)), std::stoll(s.substr(dots + 2))};
    } catch (const std::exception&) {
        throw idp::ParameterOutOfRange("bad range '" + s + "', expected A..B");
    }
}

int emit(const idp::json& j, const std::string& path) {
    if (path.empty()) {
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "cannot write " << path << '\n';
        return idp::exit_code::usage;
    }
    out << j.dump(2) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lattice points, h*-vectors, Groebner bases and unimodular triangulations of the simplices "
                 "Delta(1,q), q = (r1^x1, (1+r1*x1)^(r1-1))"};
    app.require_subcommand(1);

    std::int64_t r1 = 0, x1 = 0;
    std::string json_path;
    bool verify = false;

    auto add_params = [&](CLI::App* sub) {
        sub->add_option("r1", r1, "smaller support value, >= 2")->required();
        sub->add_option("x1", x1, "multiplicity of r1, >= 1")->required();
        sub->add_option("--json", json_path, "write JSON to this file instead of stdout");
    };

    auto* points = app.add_subcommand("points", "lattice points of the simplex");
    add_params(points);
    points->add_flag("--verify", verify, "compare against the halfspace enumeration");

    auto* hs = app.add_subcommand("hstar", "Ehrhart h*-vector");
    add_params(hs);
    hs->add_flag("--verify", verify, "check sum, h*_0, h*_1 and dilation counts t <= 2");

    auto* gb = app.add_subcommand("gb", "the binomial Groebner basis family");
    gb->require_subcommand(1);
    auto* gb_dump = gb->add_subcommand("dump", "print the generators");
    add_params(gb_dump);
    auto* gb_verify = gb->add_subcommand("verify", "pi-balance audit, Buchberger, squarefreeness, injectivity");
    add_params(gb_verify);
    std::size_t max_degree = 3;
    bool literal_b = false, skip_coprime = false;
    unsigned threads = 1;
    std::optional<std::size_t> mutate_tail;
    gb_verify->add_option("--max-degree", max_degree, "injectivity check up to this degree")->capture_default_str();
    gb_verify->add_flag("--literal-b", literal_b, "keep the pair (r1, r1+2) in B");
    gb_verify->add_option("--mutate-tail", mutate_tail, "sabotage: perturb the tail of generator K");
    gb_verify->add_flag("--skip-coprime", skip_coprime, "skip S-pairs with coprime leads");
    gb_verify->add_option("--threads", threads, "S-pair reduction threads")->capture_default_str();

    auto* tri = app.add_subcommand("triangulate", "regular unimodular triangulation from the initial ideal");
    add_params(tri);
    std::string format = "json";
    std::optional<std::size_t> drop_facet;
    tri->add_option("--format", format, "json or off")->check(CLI::IsMember({"json", "off"}))->capture_default_str();
    tri->add_option("--drop-facet", drop_facet, "sabotage: remove facet K before verification");

    auto* sweep = app.add_subcommand("sweep", "full pipeline over a parameter grid");
    std::string r1_range = "2..6", x1_range = "1..5";
    bool fail_fast = false, no_timings = false;
    unsigned jobs = 1;
    std::size_t sweep_degree = 3;
    sweep->add_option("--r1", r1_range, "range A..B")->capture_default_str();
    sweep->add_option("--x1", x1_range, "range A..B")->capture_default_str();
    sweep->add_option("--max-degree", sweep_degree, "injectivity degree bound")->capture_default_str();
    sweep->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    sweep->add_flag("--fail-fast", fail_fast, "stop at the first failing point");
    sweep->add_flag("--no-timings", no_timings, "omit timings (fully deterministic output)");
    sweep->add_option("--json", json_path, "write JSON to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return idp::exit_code::usage;
    }

    const auto budget = idp::EnumerationBudget::from_env();

    try {
        if (*points) {
            const auto rep = idp::run_points(idp::build_q(r1, x1), verify, budget);
            if (int rc = emit(idp::to_json(rep), json_path)) return rc;
            return rep.exit_code();
        }
        if (*hs) {
            const auto rep = idp::run_hstar(idp::build_q(r1, x1), verify, 2, budget);
            if (int rc = emit(idp::to_json(rep), json_path)) return rc;
            return rep.exit_code();
        }
        if (*gb_dump) {
            return emit(idp::to_json(idp::groebner_family(idp::build_q(r1, x1))), json_path);
        }
        if (*gb_verify) {
            idp::GbRunOptions opts;
            opts.family.b_rule = literal_b ? idp::BRule::Literal : idp::BRule::Corrected;
            opts.verify.max_degree = max_degree;
            opts.verify.buchberger.skip_coprime = skip_coprime;
            opts.verify.buchberger.threads = threads;
            opts.verify.budget.max_nodes = budget.max_candidates;
            opts.mutate_tail = mutate_tail;
            const auto rep = idp::run_gb_verify(idp::build_q(r1, x1), opts);
            if (int rc = emit(idp::to_json(rep), json_path)) return rc;
            return rep.exit_code();
        }
        if (*tri) {
            const auto G = idp::groebner_family(idp::build_q(r1, x1));
            const auto rep = idp::run_triangulate(G, {drop_facet});
            if (format == "off") {
                std::cout << idp::to_off(rep);
                if (!rep.pass()) std::cerr << rep.failure_stage << ": " << rep.failure_detail << '\n';
            } else if (int rc = emit(idp::to_json(rep), json_path)) {
                return rc;
            }
            return rep.exit_code();
        }
        if (*sweep) {
            const Range a = parse_range(r1_range), b = parse_range(x1_range);
            if (a.lo > a.hi || b.lo > b.hi) {
                std::cerr << "empty parameter range\n";
                return idp::exit_code::usage;
            }
            // Validate every grid point up front so parameter errors exit with 1.
            for (const auto& [p, x] : idp::make_grid(a.lo, a.hi, b.lo, b.hi)) idp::build_q(p, x);
            idp::SweepOptions opts;
            opts.max_degree = sweep_degree;
            opts.jobs = jobs;
            opts.fail_fast = fail_fast;
            opts.budget = budget;
            opts.monomial_budget.max_nodes = budget.max_candidates;
            const auto rep = idp::run_sweep(idp::make_grid(a.lo, a.hi, b.lo, b.hi), opts);
            if (int rc = emit(idp::to_json(rep, !no_timings), json_path)) return rc;
            return rep.exit_code();
        }
    } catch (const idp::ParameterOutOfRange& e) {
        std::cerr << "error: " << e.what() << '\n';
        return idp::exit_code::usage;
    } catch (const idp::OverflowError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return idp::exit_code::usage;
    } catch (const idp::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return idp::exit_code::budget;
    } catch (const idp::Error& e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return idp::exit_code::verification;
    }
    return idp::exit_code::usage;
}
