#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "relalg/algebra.hpp"

namespace relalg {

/// A published operation table, transcribed by element name.  Unary tables
/// have no columns and one entry per row.  An empty cell means "undefined"
/// (partial operations only).
struct GoldenTable {
    int number;
    std::string part;   // distinguishes several tables sharing one number
    std::string model;  // catalog id, or "mckinsey" for the partial groupoid
    TableKind table;
    std::vector<std::string> rows;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> cells;

    std::string label() const;
};

const std::vector<GoldenTable>& golden_tables();

struct GoldenMismatch {
    std::string row;
    std::string column;
    std::string expected;
    std::string actual;
};

/// Looks up a cell by row and column name (column empty for unary tables);
/// nullopt marks an undefined entry.
using CellLookup = std::function<std::optional<std::string>(const std::string& row, const std::string& column)>;

std::vector<GoldenMismatch> compare_golden(const GoldenTable& golden, const CellLookup& lookup);
std::vector<GoldenMismatch> compare_golden(const GoldenTable& golden, const FiniteAlgebra& a);

/// Compares against the catalog construction named by golden.model.
std::vector<GoldenMismatch> compare_golden(const GoldenTable& golden);

}  // namespace relalg
