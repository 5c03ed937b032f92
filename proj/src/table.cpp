#include "coxnorm/table.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace coxnorm {

const std::vector<std::string>& table_header() {
    static const std::vector<std::string> h = {"star", "index", "P", "Q", "D", "closure", "A",
                                               "B", "C", "x_perp", "x_cap_y", "y_perp"};
    return h;
}

std::vector<std::string> TableRow::cells() const {
    return {star ? "*" : "", std::to_string(index), P, Q, D, closure, A, B, C, x_perp, x_cap_y, y_perp};
}

TableRow table_row(const Decomposition& d) {
    TableRow r;
    r.star = d.involution_centralizer;
    r.index = d.shape_index;
    r.P = d.P_label;
    r.Q = d.q_cell();
    r.D = std::to_string(d.D.size());
    r.closure = d.closure_cell();
    r.A = d.A_name.cell();
    r.B = d.B_name.cell();
    r.C = d.C_name.cell();
    r.x_perp = d.actions[0].cell();
    r.x_cap_y = d.actions[1].cell();
    r.y_perp = d.actions[2].cell();
    return r;
}

std::vector<Decomposition> decompose_all(const ShapeCatalog& cat, int jobs, bool describe) {
    int n = cat.size();
    std::vector<Decomposition> out(n);
    jobs = std::clamp(jobs, 1, n);
    if (jobs == 1) {
        for (int i = 1; i <= n; ++i) out[i - 1] = decompose(cat, i, describe);
        return out;
    }
    std::atomic<int> next{1};
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&, t] {
            try {
                for (int i; (i = next++) <= n;) out[i - 1] = decompose(cat, i, describe);
            } catch (...) {
                errors[t] = std::current_exception();
                next = n + 1;
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string o = "\"";
    for (char c : s) {
        if (c == '"') o += '"';
        o += c;
    }
    return o + "\"";
}

} // namespace

std::string render_table(const std::vector<TableRow>& rows, const std::string& format, const std::string& group) {
    std::ostringstream os;
    const auto& head = table_header();
    if (format == "json") {
        nlohmann::ordered_json j;
        j["group"] = group;
        j["rows"] = nlohmann::ordered_json::array();
        for (auto& r : rows) {
            nlohmann::ordered_json o;
            auto c = r.cells();
            o["index"] = r.index;
            o["star"] = r.star;
            for (std::size_t k = 2; k < head.size(); ++k) o[head[k]] = c[k];
            j["rows"].push_back(o);
        }
        os << j.dump(2) << "\n";
    } else if (format == "csv") {
        for (std::size_t k = 0; k < head.size(); ++k) os << (k ? "," : "") << head[k];
        os << "\n";
        for (auto& r : rows) {
            auto c = r.cells();
            for (std::size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << csv_escape(c[k]);
            os << "\n";
        }
    } else if (format == "text") {
        // same layout as the fixture files
        os << "# " << group << "\n# idx|P|Q|D|closure|A|B|C|x_perp|x_cap_y|y_perp\n";
        for (auto& r : rows) {
            auto c = r.cells();
            os << c[0] << c[1];
            for (std::size_t k = 2; k < c.size(); ++k) os << "|" << c[k];
            os << "\n";
        }
    } else {
        throw std::invalid_argument("unknown table format '" + format + "' (text, csv, json)");
    }
    return os.str();
}

} // namespace coxnorm
