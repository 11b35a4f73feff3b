#pragma once

// Built-in verification suites behind `coxtile verify`.

#include "coxtile/check.hpp"
#include "coxtile/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace coxtile {

// Reference rhombus rows: angle pairs as multiples of pi, keyed by n.
struct RhombusTableRow {
    int n;
    std::vector<std::array<Rational, 2>> angle_pairs;
};
struct TriangleTableRow {
    int n;
    std::vector<std::array<int, 3>> triples;
};

const std::vector<RhombusTableRow>& reference_rhombus_table();
const std::vector<TriangleTableRow>& reference_triangle_table();

std::vector<CheckResult> tables_suite();
std::vector<CheckResult> descent_suite();
std::vector<CheckResult> eigen_suite();

// "tables", "descent", "eigen" or "all"; throws std::invalid_argument otherwise.
std::vector<CheckResult> run_suite(const std::string& name);

std::string report_text(const std::vector<CheckResult>& checks);
// {name: {pass, details}, ...}
std::string report_json(const std::vector<CheckResult>& checks);

}  // namespace coxtile
