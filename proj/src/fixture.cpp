#include "coxnorm/fixture.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#ifndef COXNORM_FIXTURE_DIR
#define COXNORM_FIXTURE_DIR "tests/fixtures"
#endif

namespace coxnorm {

namespace fs = std::filesystem;

std::string fixture_dir() {
    if (const char* e = std::getenv("COXNORM_FIXTURES")) return e;
    return COXNORM_FIXTURE_DIR;
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_cells(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == '|') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

std::string canon_type(const std::string& t) {
    try {
        return parse_diagram(t).str();
    } catch (const std::invalid_argument&) {
        return t; // abstract names such as G12
    }
}

bool is_marker(const std::string& s) {
    return s == "HEART" || s == "DIAMOND" || s == "CLUB" || s == "SPADE";
}

std::string fixture_file(const std::string& group, int& m) {
    m = 0;
    CoxeterLabel L = CoxeterLabel::parse(group);
    std::string name = L.str();
    if (L.family == 'I') {
        m = L.m;
        name = m % 2 ? "I2_odd" : "I2_even";
    }
    return (fs::path(fixture_dir()) / (name + ".txt")).string();
}

} // namespace

std::string normalize_type_cell(const std::string& cell) {
    std::string c = trim(cell);
    if (c.empty() || c == "1" || c == "∅") return "";
    std::string marker;
    auto sp = c.find_last_of(' ');
    if (sp != std::string::npos && is_marker(c.substr(sp + 1))) {
        marker = c.substr(sp + 1);
        c = trim(c.substr(0, sp));
    }
    c = canon_type(c);
    return marker.empty() ? c : c + " " + marker;
}

std::string normalize_action_cell(const std::string& cell) {
    std::string c = trim(cell);
    int white = 0;
    auto br = c.rfind('{');
    if (br != std::string::npos && c.back() == '}') {
        white = std::stoi(c.substr(br + 1, c.size() - br - 2));
        c = c.substr(0, br);
    }
    std::string body;
    if (c.empty() || c == "-1") {
        body = c;
    } else if (c[0] == '^') {
        auto open = c.find('(');
        if (open == std::string::npos) throw FixtureError("bad action cell '" + cell + "'");
        // "^2(A4)B2": components outside the parentheses join the reflection part
        auto close = c.find(')', open);
        if (close == std::string::npos) throw FixtureError("bad action cell '" + cell + "'");
        std::string inner = c.substr(open + 1, close - open - 1) + c.substr(close + 1);
        body = c.substr(0, open) + "(" + canon_type(inner) + ")";
    } else {
        body = canon_type(c);
    }
    return body + "{" + std::to_string(white) + "}";
}

TableFixture parse_fixture(const std::string& text, const std::string& group, const std::string& source, int m) {
    TableFixture fx;
    fx.group = group;
    fx.source = source;
    std::istringstream is(text);
    std::string line;
    std::set<int> seen;
    int no = 0;
    auto fail = [&](const std::string& what) {
        return FixtureError(source + ":" + std::to_string(no) + ": " + what);
    };
    while (std::getline(is, line)) {
        ++no;
        std::string t = trim(line);
        if (t.empty()) continue;
        if (t[0] == '#') {
            fx.comments.push_back(t);
            continue;
        }
        if (m) t = std::regex_replace(t, std::regex("I2\\(m\\)"), "I2(" + std::to_string(m) + ")");
        auto c = split_cells(t);
        if (c.size() != 11) throw fail("expected 11 cells, found " + std::to_string(c.size()));
        FixtureRow r;
        r.line = no;
        std::string idx = c[0];
        if (!idx.empty() && idx[0] == '*') {
            r.star = true;
            idx = idx.substr(1);
        }
        try {
            std::size_t used = 0;
            r.index = std::stoi(idx, &used);
            if (used != idx.size() || r.index <= 0) throw std::invalid_argument(idx);
        } catch (const std::exception&) {
            throw fail("bad row index '" + c[0] + "'");
        }
        if (!seen.insert(r.index).second) throw fail("duplicate row index " + std::to_string(r.index));
        r.P = c[1];
        r.Q = c[2];
        r.D = c[3];
        r.closure = c[4];
        r.A = c[5];
        r.B = c[6];
        r.C = c[7];
        r.x_perp = c[8];
        r.x_cap_y = c[9];
        r.y_perp = c[10];
        if (r.P.empty()) throw fail("empty P cell");
        if (!std::regex_match(r.D, std::regex("[0-9]+"))) throw fail("bad |D| cell '" + r.D + "'");
        if (!std::regex_match(r.Q, std::regex("|∅|[0-9]+"))) throw fail("bad Q cell '" + r.Q + "'");
        if (!std::regex_match(r.closure, std::regex("|\\(?[0-9]+\\)?"))) throw fail("bad closure cell '" + r.closure + "'");
        for (auto* a : {&r.x_perp, &r.x_cap_y, &r.y_perp}) {
            try {
                normalize_action_cell(*a);
            } catch (const std::exception& e) {
                throw fail("bad action cell '" + *a + "'");
            }
        }
        fx.rows.push_back(r);
    }
    if (fx.rows.empty()) throw FixtureError(source + ": no rows");
    return fx;
}

bool has_fixture(const std::string& group) {
    try {
        int m;
        return fs::exists(fixture_file(group, m));
    } catch (const std::exception&) {
        return false;
    }
}

TableFixture load_fixture(const std::string& group) {
    int m;
    std::string path = fixture_file(group, m);
    std::ifstream in(path);
    if (!in) throw FixtureError("no fixture for " + group + " (looked for " + path + ")");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_fixture(ss.str(), CoxeterLabel::parse(group).str(), path, m);
}

std::string CellMismatch::str() const {
    return "row " + std::to_string(row) + " (" + P + ") " + column + ": expected '" + expected + "', got '" + actual + "'";
}

std::string FixtureReport::str() const {
    std::ostringstream os;
    os << group << ": " << rows << " rows, " << mismatches.size() << " mismatched cells";
    for (auto& s : structural) os << "\n  " << s;
    for (auto& m : mismatches) os << "\n  " << m.str();
    return os.str();
}

FixtureReport diff(const TableFixture& fx, const ShapeCatalog& cat, const std::vector<Decomposition>& decs) {
    std::vector<TableRow> rows;
    for (auto& d : decs) rows.push_back(table_row(d));
    return diff(fx, cat, rows);
}

FixtureReport diff(const TableFixture& fx, const ShapeCatalog& cat, const std::vector<TableRow>& rows) {
    FixtureReport rep;
    rep.group = fx.group;
    rep.rows = (int)fx.rows.size();
    std::map<int, int> ours; // table index -> catalog index
    std::set<int> covered;
    for (auto& r : fx.rows) {
        int k = cat.find(r.P);
        if (k <= 0) {
            // dihedral labels such as I2(6) are printed as G2 in the catalog
            DiagramType want = parse_diagram(r.P);
            for (auto& s : cat.shapes())
                if (s.diagram == want) k = k == 0 ? s.index : -1;
        }
        if (k <= 0) {
            rep.structural.push_back("line " + std::to_string(r.line) + ": label '" + r.P + "' does not name a unique shape");
            continue;
        }
        if (!covered.insert(k).second) rep.structural.push_back("shape " + cat.at(k).label + " listed twice");
        ours[r.index] = k;
    }
    for (auto& s : cat.shapes())
        if (!covered.count(s.index)) rep.structural.push_back("shape " + s.label + " missing from the fixture");
    if (!rep.structural.empty()) return rep;

    int W = cat.whole_group();
    auto map_index = [&](const std::string& cell, bool& ok) -> std::string {
        ok = true;
        std::smatch mm;
        if (!std::regex_match(cell, mm, std::regex("(\\(?)([0-9]+)(\\)?)"))) return cell;
        auto it = ours.find(std::stoi(mm[2]));
        if (it == ours.end()) {
            ok = false;
            return cell;
        }
        return mm[1].str() + std::to_string(it->second) + mm[3].str();
    };
    auto closure_norm = [&](std::string c) { return c == "(" + std::to_string(W) + ")" ? std::string() : c; };
    auto q_norm = [](const std::string& c) { return c.empty() ? std::string("∅") : c; };

    for (auto& r : fx.rows) {
        const TableRow& got = rows.at(ours[r.index] - 1);
        auto check = [&](const std::string& col, const std::string& e, const std::string& a, const std::string& shown_e,
                         const std::string& shown_a) {
            if (e != a) rep.mismatches.push_back({r.index, r.P, col, shown_e, shown_a});
        };
        bool ok;
        check("star", r.star ? "*" : "", got.star ? "*" : "", r.star ? "*" : "", got.star ? "*" : "");
        std::string q = q_norm(map_index(r.Q, ok));
        if (!ok) rep.structural.push_back("line " + std::to_string(r.line) + ": Q refers to unknown row " + r.Q);
        check("Q", q, q_norm(got.Q), r.Q, got.Q);
        check("D", r.D, got.D, r.D, got.D);
        std::string cl = closure_norm(map_index(r.closure, ok));
        if (!ok) rep.structural.push_back("line " + std::to_string(r.line) + ": closure refers to unknown row " + r.closure);
        check("closure", cl, closure_norm(got.closure), r.closure, got.closure);
        check("A", normalize_type_cell(r.A), normalize_type_cell(got.A), r.A, got.A);
        check("B", normalize_type_cell(r.B), normalize_type_cell(got.B), r.B, got.B);
        check("C", normalize_type_cell(r.C), normalize_type_cell(got.C), r.C, got.C);
        // "^A(...)" names the column A as the group acting by diagram automorphisms
        auto column_quotient = [&](std::string cell) {
            for (auto [letter, col] : {std::pair{"A", &r.A}, {"B", &r.B}, {"C", &r.C}})
                if (cell.rfind(std::string("^") + letter + "(", 0) == 0) {
                    std::string t = normalize_type_cell(*col);
                    auto sp = t.find(' ');
                    cell = "^" + (sp == std::string::npos ? t : t.substr(0, sp)) + cell.substr(2);
                }
            return cell;
        };
        check("x_perp", normalize_action_cell(column_quotient(r.x_perp)), normalize_action_cell(got.x_perp), r.x_perp, got.x_perp);
        check("x_cap_y", normalize_action_cell(column_quotient(r.x_cap_y)), normalize_action_cell(got.x_cap_y), r.x_cap_y, got.x_cap_y);
        check("y_perp", normalize_action_cell(column_quotient(r.y_perp)), normalize_action_cell(got.y_perp), r.y_perp, got.y_perp);
    }
    return rep;
}

} // namespace coxnorm
