#pragma once

#include "coxnorm/normalizer.hpp"
#include "coxnorm/table.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace coxnorm {

struct FixtureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A reference table as transcribed: indices are the table's own numbering, P is our catalog label.
struct FixtureRow {
    int line = 0;
    bool star = false;
    int index = 0;
    std::string P, Q, D, closure, A, B, C, x_perp, x_cap_y, y_perp;
};

struct TableFixture {
    std::string group;
    std::string source; // file name or "<string>"
    std::vector<std::string> comments;
    std::vector<FixtureRow> rows;
};

std::string fixture_dir();
// Parses fixture text; `m` replaces the letter m inside "I2(m)" for the dihedral templates.
TableFixture parse_fixture(const std::string& text, const std::string& group, const std::string& source = "<string>",
                           int m = 0);
// Finds the file for a group label (I2(m) uses the odd/even template).  Throws FixtureError.
TableFixture load_fixture(const std::string& group);
bool has_fixture(const std::string& group);

struct CellMismatch {
    int row = 0; // table index
    std::string P, column, expected, actual;
    std::string str() const;
};

struct FixtureReport {
    std::string group;
    int rows = 0;
    std::vector<std::string> structural; // missing shapes, duplicate indices, unknown labels
    std::vector<CellMismatch> mismatches;
    bool ok() const { return structural.empty() && mismatches.empty(); }
    std::string str() const;
};

// Canonical forms used in comparisons (exposed for tests).
std::string normalize_type_cell(const std::string& cell);
std::string normalize_action_cell(const std::string& cell);

FixtureReport diff(const TableFixture& fx, const ShapeCatalog& cat, const std::vector<TableRow>& rows);
FixtureReport diff(const TableFixture& fx, const ShapeCatalog& cat, const std::vector<Decomposition>& decs);

} // namespace coxnorm
