#include "cltbound/output.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace cltbound {

using nlohmann::json;

TableFormat parse_table_format(const std::string& name) {
    if (name == "csv") return TableFormat::csv;
    if (name == "tsv") return TableFormat::tsv;
    if (name == "json") return TableFormat::json;
    throw std::invalid_argument("unknown table format '" + name + "' (expected csv, tsv or json)");
}

std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

json to_json(const BoundResult& r) {
    return {{"b_tail", r.b_tail},
            {"b_center", r.b_center},
            {"c_value", r.c_value},
            {"nonuniform_at_t", r.nonuniform_at_t},
            {"nagaev_at_t", r.nagaev_at_t},
            {"uniform_ref", r.uniform_ref}};
}

json to_json(const CenterQuantities& q) {
    return {{"gamma", q.gamma},       {"beta_hi", q.beta_hi},     {"mu_hi", q.mu_hi},
            {"m2_lo", q.m2_lo},       {"m2_hi", q.m2_hi},         {"delta2_lo", q.delta2_lo},
            {"alpha", q.alpha},       {"big_delta", q.big_delta}, {"eta", q.eta}};
}

json to_json(const FeasibilityReport& r) {
    json out = json::object();
    for (const auto& [name, cond] : r.entries()) {
        out[std::string(name)] = {{"satisfied", cond->satisfied}, {"margin", cond->margin}};
    }
    out["feasible"] = r.feasible();
    return out;
}

json to_json(const OptimizationResult& r) {
    json out = {{"t", r.t}, {"evaluations", r.evaluations}, {"feasible_count", r.feasible_count}};
    out["feasible"] = r.feasible();
    if (r.optimum) {
        out["best_tau"] = r.optimum->tau;
        out["best_b"] = r.optimum->b;
        out["c_value"] = r.optimum->bound.c_value;
        out["bound"] = to_json(r.optimum->bound);
    }
    return out;
}

json to_json(const VerificationReport& r) {
    return {{"distribution", r.distribution_id},
            {"n", r.n},
            {"tail", r.tail == Tail::upper ? "upper" : "lower"},
            {"t_grid", r.t_grid},
            {"ratios", r.ratios},
            {"max_ratio", r.max_ratio},
            {"violations", r.violations}};
}

json to_json(const CiBound& r) {
    return {{"t", r.t},
            {"c_value", r.c_value},
            {"normal_term", r.normal_term},
            {"nonuniform_term", r.nonuniform_term},
            {"bound", r.bound}};
}

void write_table(std::ostream& os, std::span<const TableRow> rows, TableFormat format) {
    if (format == TableFormat::json) {
        json arr = json::array();
        for (const TableRow& row : rows) arr.push_back(to_json(row.result));
        os << arr.dump(2) << '\n';
        return;
    }
    const char sep = format == TableFormat::csv ? ',' : '\t';
    os << "t" << sep << "tau" << sep << "b" << sep << "C" << sep << "C_over_t3" << sep << "nagaev" << '\n';
    for (const TableRow& row : rows) {
        os << fixed(row.t, 4) << sep;
        if (const auto& opt = row.result.optimum) {
            os << fixed(opt->tau, 4) << sep << fixed(opt->b, 4) << sep << fixed(opt->bound.c_value, 4) << sep
               << fixed(opt->bound.nonuniform_at_t, 8) << sep << fixed(opt->bound.nagaev_at_t, 8) << '\n';
        } else {
            os << "NA" << sep << "NA" << sep << "infeasible" << sep << "NA" << sep << "NA" << '\n';
        }
    }
}

}  // namespace cltbound
