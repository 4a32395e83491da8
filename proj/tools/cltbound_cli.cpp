// Command-line front end: eval, table, verify, ci.
//
// Exit codes: 0 success, 1 infeasible candidate or bound violation,
// 2 usage error.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cltbound/bound.hpp"
#include "cltbound/constants.hpp"
#include "cltbound/distribution.hpp"
#include "cltbound/optimizer.hpp"
#include "cltbound/output.hpp"
#include "cltbound/verifier.hpp"

namespace {

using namespace cltbound;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kInfeasible = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require_coordinate(double t, const char* what = "t") {
    if (!std::isfinite(t) || t < kMinCoordinate) {
        throw UsageError(std::string(what) + " must be ≥ 3.18, got " + fixed(t, 6));
    }
}

void print(const json& record) { std::cout << record.dump(2) << '\n'; }

// Parses "(-1,0.5),(1,0.5)".
std::vector<Atom> parse_atoms(const std::string& spec) {
    static const std::regex pair(R"(\(\s*([^,()\s]+)\s*,\s*([^,()\s]+)\s*\))");
    std::vector<Atom> atoms;
    std::string rest;
    std::size_t last = 0;
    for (auto it = std::sregex_iterator(spec.begin(), spec.end(), pair); it != std::sregex_iterator(); ++it) {
        rest += spec.substr(last, it->position() - last);
        last = it->position() + it->length();
        try {
            atoms.push_back({std::stod((*it)[1]), std::stod((*it)[2])});
        } catch (const std::exception&) {
            throw UsageError("cannot parse atom " + it->str());
        }
    }
    rest += spec.substr(last);
    for (char ch : rest) {
        if (ch != ',' && !std::isspace(static_cast<unsigned char>(ch))) {
            throw UsageError("malformed atom list '" + spec + "'; expected (value,probability),...");
        }
    }
    if (atoms.empty()) throw UsageError("atom list is empty");
    return atoms;
}

struct EvalArgs {
    double t = 0, tau = 0, b = 0;
    bool explain = false;
    bool force = false;
};

int run_eval(const EvalArgs& a) {
    require_coordinate(a.t);
    std::optional<BoundParams> params;
    try {
        params.emplace(a.t, a.tau, a.b);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const Evaluation ev = evaluate(*params);
    json record = {{"command", "eval"}, {"inputs", {{"t", a.t}, {"tau", a.tau}, {"b", a.b}, {"c", kTailExponent}}}};
    record["feasible"] = ev.feasibility.feasible();
    if (ev.result) record["result"] = to_json(*ev.result);
    if (!ev.result || a.explain) record["feasibility"] = to_json(ev.feasibility);
    if (a.explain) record["center_quantities"] = to_json(ev.quantities);
    if (!ev.result && a.force) record["unchecked_result"] = to_json(ev.formulas);
    print(record);
    if (!ev.result) {
        std::cerr << "infeasible (t, tau, b):";
        for (const auto& [name, cond] : ev.feasibility.entries()) {
            if (!cond->satisfied) std::cerr << ' ' << name << " violated (margin " << cond->margin << ")";
        }
        std::cerr << '\n';
        return kInfeasible;
    }
    return kOk;
}

struct TableArgs {
    std::vector<double> t_list;
    std::optional<double> t_min, t_max, t_step;
    GridSteps steps;
    std::string format = "csv";
    std::string out;
    bool strict = false;
};

int run_table(const TableArgs& a) {
    std::vector<double> ts = a.t_list;
    if (a.t_min || a.t_max || a.t_step) {
        if (!(a.t_min && a.t_max && a.t_step)) throw UsageError("--t-min, --t-max and --t-step go together");
        const auto grid = coordinate_grid(*a.t_min, *a.t_max, *a.t_step);
        ts.insert(ts.end(), grid.begin(), grid.end());
    }
    if (ts.empty()) throw UsageError("no t values: pass --t or --t-min/--t-max/--t-step");
    for (double t : ts) require_coordinate(t);
    std::sort(ts.begin(), ts.end());
    const TableFormat format = parse_table_format(a.format);

    const auto rows = make_table(ts, a.steps);
    if (a.out.empty()) {
        write_table(std::cout, rows, format);
    } else {
        std::ofstream file(a.out);
        if (!file) throw UsageError("cannot open " + a.out + " for writing");
        write_table(file, rows, format);
    }
    const bool any_infeasible = std::any_of(rows.begin(), rows.end(), [](const TableRow& r) { return !r.result.feasible(); });
    return a.strict && any_infeasible ? kInfeasible : kOk;
}

struct VerifyArgs {
    std::string dist = "rademacher";
    std::string atoms;
    std::optional<double> rho, p, p0;
    int n = 16;
    double t_min = 3.3, t_max = 6.0, t_step = 0.1;
    std::string tail = "upper";
    GridSteps steps;
};

DiscreteDistribution build_distribution(const VerifyArgs& a) {
    try {
        if (!a.atoms.empty()) return DiscreteDistribution::from_atoms(parse_atoms(a.atoms));
        if (a.dist == "rademacher") return DiscreteDistribution::rademacher();
        if (a.dist == "two-point") {
            if (a.rho) return DiscreteDistribution::two_point_with_rho(*a.rho);
            if (a.p) return DiscreteDistribution::two_point(*a.p);
            throw UsageError("two-point needs --rho or --p");
        }
        if (a.dist == "three-point") return DiscreteDistribution::symmetric_three_point(a.p0.value_or(0.5));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("invalid distribution: ") + e.what());
    }
    throw UsageError("unknown distribution '" + a.dist + "' (rademacher, two-point, three-point)");
}

int run_verify(const VerifyArgs& a) {
    const DiscreteDistribution dist = build_distribution(a);
    if (a.n < 1) throw UsageError("--n must be >= 1");
    if (a.tail != "upper" && a.tail != "lower") throw UsageError("--tail must be upper or lower");
    require_coordinate(a.t_min, "t-min");
    if (a.t_max < a.t_min) throw UsageError("--t-max must be ≥ --t-min");
    const auto grid = coordinate_grid(a.t_min, a.t_max, a.t_step);

    OptimizedBound bound(a.steps);
    VerificationReport report;
    try {
        report = verify_bound(dist, a.n, grid, bound.provider(), a.tail == "upper" ? Tail::upper : Tail::lower);
    } catch (const InfeasibleCoordinate& e) {
        std::cerr << e.what() << '\n';
        return kInfeasible;
    }
    json record = {{"command", "verify"},
                   {"inputs",
                    {{"distribution", dist.id()},
                     {"rho", dist.rho()},
                     {"n", a.n},
                     {"t_min", a.t_min},
                     {"t_max", a.t_max},
                     {"t_step", a.t_step}}},
                   {"result", to_json(report)}};
    print(record);
    return report.violations.empty() ? kOk : kInfeasible;
}

struct CiArgs {
    long long n = 0;
    double eps = 0, rho = 1.0;
    GridSteps steps;
};

int run_ci(const CiArgs& a) {
    if (a.n < 1) throw UsageError("--n must be >= 1");
    if (!(a.eps > 0)) throw UsageError("--eps must be > 0");
    if (!(a.rho >= 1.0)) throw UsageError("--rho must be ≥ 1");
    const double t = std::sqrt(static_cast<double>(a.n)) * a.eps;
    if (t < kMinCoordinate) {
        throw UsageError("sqrt(n)*eps = " + fixed(t, 6) + " < 3.18; the bound needs sqrt(n) eps ≥ 1 and C(t) needs t ≥ 3.18");
    }
    OptimizedBound bound(a.steps);
    CiBound r;
    try {
        r = ci_bound(a.n, a.eps, a.rho, bound.provider());
    } catch (const InfeasibleCoordinate& e) {
        std::cerr << e.what() << '\n';
        return kInfeasible;
    }
    print({{"command", "ci"}, {"inputs", {{"n", a.n}, {"eps", a.eps}, {"rho", a.rho}}}, {"result", to_json(r)}});
    return kOk;
}

void add_steps(CLI::App* cmd, GridSteps& steps) {
    cmd->add_option("--tau-step", steps.tau, "tau grid step")->capture_default_str()->check(CLI::PositiveNumber);
    cmd->add_option("--b-step", steps.b, "b grid step")->capture_default_str()->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nonuniform Berry-Esseen bound C(t): evaluation, optimization, tables and verification"};
    app.require_subcommand(1);

    EvalArgs eval_args;
    auto* eval = app.add_subcommand("eval", "evaluate B_T, B_C and C at a fixed (t, tau, b)");
    eval->add_option("--t", eval_args.t, "coordinate t (>= 3.18)")->required();
    eval->add_option("--tau", eval_args.tau, "truncation fraction tau")->required();
    eval->add_option("--b", eval_args.b, "tail shape parameter b")->required();
    eval->add_flag("--explain", eval_args.explain, "dump intermediate quantities and condition margins");
    eval->add_flag("--force", eval_args.force, "also print formula values for infeasible candidates");

    TableArgs table_args;
    auto* table = app.add_subcommand("table", "optimize C(t) over a list or range of t");
    table->add_option("--t", table_args.t_list, "coordinate (repeatable)");
    table->add_option("--t-min", table_args.t_min, "range start");
    table->add_option("--t-max", table_args.t_max, "range end (inclusive)");
    table->add_option("--t-step", table_args.t_step, "range step")->check(CLI::PositiveNumber);
    add_steps(table, table_args.steps);
    table->add_option("--format", table_args.format, "csv, tsv or json")
        ->capture_default_str()
        ->check(CLI::IsMember({"csv", "tsv", "json"}));
    table->add_option("--out", table_args.out, "write to this file instead of stdout");
    table->add_flag("--strict", table_args.strict, "exit 1 if any t is infeasible");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "check the bound against an exact convolution");
    verify->add_option("--dist", verify_args.dist, "rademacher, two-point or three-point")->capture_default_str();
    verify->add_option("--atoms", verify_args.atoms, "explicit law, e.g. \"(-1,0.5),(1,0.5)\"");
    verify->add_option("--rho", verify_args.rho, "two-point: target third absolute moment");
    verify->add_option("--p", verify_args.p, "two-point: mass of the negative atom");
    verify->add_option("--p0", verify_args.p0, "three-point: mass at zero");
    verify->add_option("--n", verify_args.n, "sample size")->capture_default_str();
    verify->add_option("--t-min", verify_args.t_min)->capture_default_str();
    verify->add_option("--t-max", verify_args.t_max)->capture_default_str();
    verify->add_option("--t-step", verify_args.t_step)->capture_default_str()->check(CLI::PositiveNumber);
    verify->add_option("--tail", verify_args.tail, "upper or lower")->capture_default_str();
    add_steps(verify, verify_args.steps);

    CiArgs ci_args;
    auto* ci = app.add_subcommand("ci", "bound on P(|sample mean - theta| > eps)");
    ci->add_option("--n", ci_args.n, "sample size")->required();
    ci->add_option("--eps", ci_args.eps, "half-width")->required();
    ci->add_option("--rho", ci_args.rho, "third absolute moment (>= 1)")->capture_default_str();
    add_steps(ci, ci_args.steps);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*eval) return run_eval(eval_args);
        if (*table) return run_table(table_args);
        if (*verify) return run_verify(verify_args);
        if (*ci) return run_ci(ci_args);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInfeasible;
    }
    return kUsage;
}
