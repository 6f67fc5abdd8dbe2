#pragma once

#include <optional>
#include <string>
#include <vector>

namespace atdm {

/// One exact/approximate/absolute-error entry. `reference` carries a
/// published comparison value when the table has one (LRPSM columns).
struct PointRow {
    char variable = 'u';
    double x = 0, t = 0, beta = 1;
    double exact = 0, approx = 0;
    double abs_error = 0;
    std::optional<double> reference;
};

/// One successive-increment entry, stored in log10 because the deep
/// increments lie far below double range. `log10_value` is the tabulated
/// quantity (the square root of the grid L2 norm), `log10_norm` the norm.
struct L2Row {
    double t = 0;
    int j = 0;
    double log10_norm = 0;
    double log10_value = 0;
};

struct TableMeta {
    std::string benchmark;
    std::string table_id;
    int n_components = 0;
    double x = 0;
    std::string grid;
    std::string spec_hash;
};

struct ErrorTable {
    TableMeta meta;
    std::vector<PointRow> rows;
    std::vector<L2Row> l2_rows;

    /// Wide CSV: point rows grouped per (variable, x, t) with one AE column
    /// per beta; L2 rows grouped per t with one column per j. Deterministic,
    /// fixed 10-decimal formatting.
    std::string to_csv() const;
    /// Long-form JSON with full metadata and full-precision values.
    std::string to_json() const;

    static ErrorTable from_csv(const std::string& text);
};

/// Fixed formatting helpers shared by tables and the CLI.
std::string format_fixed(double v, int decimals = 10);
/// Scientific form from a log10 magnitude, e.g. "6.525e-23"; handles
/// exponents far outside double range.
std::string format_log10(double log10_value, int mantissa_decimals = 3);

}  // namespace atdm
