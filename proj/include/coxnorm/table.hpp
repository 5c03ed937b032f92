#pragma once

#include "coxnorm/normalizer.hpp"

#include <string>
#include <vector>

namespace coxnorm {

// One printed row of a decomposition table.
struct TableRow {
    bool star = false; // P is the centralizer of an involution
    int index = 0;
    std::string P, Q, D, closure, A, B, C;
    std::string x_perp, x_cap_y, y_perp;

    std::vector<std::string> cells() const; // in the order of the header below
};

const std::vector<std::string>& table_header();

TableRow table_row(const Decomposition& d);

// Decomposes every shape of the catalog, fanning out over `jobs` threads.  Rows come back in
// catalog order regardless of the thread count.
std::vector<Decomposition> decompose_all(const ShapeCatalog& cat, int jobs = 1, bool describe = true);

std::string render_table(const std::vector<TableRow>& rows, const std::string& format, const std::string& group);

} // namespace coxnorm
