#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include <json.hpp>

#include "cltbound/bound.hpp"
#include "cltbound/optimizer.hpp"
#include "cltbound/verifier.hpp"

namespace cltbound {

enum class TableFormat { csv, tsv, json };

// Throws std::invalid_argument for anything but csv, tsv or json.
TableFormat parse_table_format(const std::string& name);

nlohmann::json to_json(const BoundResult& r);
nlohmann::json to_json(const CenterQuantities& q);
nlohmann::json to_json(const FeasibilityReport& r);
nlohmann::json to_json(const OptimizationResult& r);
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const CiBound& r);

/// Writes header `t,tau,b,C,C_over_t3,nagaev` and one row per entry:
/// t, tau, b and C at 4 decimals, the two bound columns at 8. Infeasible rows
/// carry `infeasible` in the C column and `NA` elsewhere.
void write_table(std::ostream& os, std::span<const TableRow> rows, TableFormat format);

// printf-style fixed formatting without locale grouping.
std::string fixed(double v, int decimals);

}  // namespace cltbound
