#include "coxnorm/galois.hpp"
#include "coxnorm/involution.hpp"
#include "coxnorm/table.hpp"
#include "coxnorm/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <memory>
#include <mutex>

namespace py = pybind11;
using namespace coxnorm;

namespace {

struct Loaded {
    std::unique_ptr<RootSystem> rs;
    std::unique_ptr<ShapeCatalog> cat;
};

// catalogs are cheap but not free; keep one per group for the lifetime of the module
const Loaded& load(const std::string& label) {
    static std::map<std::string, Loaded> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    std::string key = CoxeterLabel::parse(label).str();
    auto& l = cache[key];
    if (!l.rs) {
        l.rs = std::make_unique<RootSystem>(CoxeterLabel::parse(key));
        l.cat = std::make_unique<ShapeCatalog>(*l.rs);
    }
    return l;
}

int resolve(const ShapeCatalog& cat, const std::string& selector) {
    int idx = cat.find(selector);
    if (idx == 0) throw py::key_error("unknown parabolic '" + selector + "'");
    if (idx < 0) throw py::key_error("ambiguous parabolic '" + selector + "'");
    return idx;
}

py::list shapes(const std::string& group) {
    py::list out;
    for (auto& s : load(group).cat->shapes()) {
        py::dict d;
        d["index"] = s.index;
        d["label"] = s.label;
        d["type"] = s.type;
        d["rank"] = s.rank;
        d["order"] = s.order;
        d["rep"] = s.rep;
        d["members"] = s.members.size();
        out.append(d);
    }
    return out;
}

std::string decompose_json(const std::string& group, const std::string& selector) {
    const Loaded& l = load(group);
    Decomposition d;
    {
        py::gil_scoped_release nogil;
        d = decompose(*l.cat, resolve(*l.cat, selector));
    }
    return decomposition_json(d);
}

std::string table(const std::string& group, const std::string& format, int jobs) {
    const Loaded& l = load(group);
    std::vector<TableRow> rows;
    {
        py::gil_scoped_release nogil;
        for (auto& d : decompose_all(*l.cat, jobs)) rows.push_back(table_row(d));
    }
    return render_table(rows, format, l.rs->label().str());
}

py::list concepts(const std::string& group) {
    const ShapeCatalog& cat = *load(group).cat;
    py::list out;
    for (auto& c : parabolic_concepts(cat)) out.append(py::make_tuple(cat.at(c.left).label, cat.at(c.right).label));
    return out;
}

std::string graph(const std::string& group, const std::string& format) {
    const ShapeCatalog& cat = *load(group).cat;
    ClosureGraph g = shape_closure_graph(cat);
    if (format == "dot") return graph_dot(cat, g);
    if (format == "json") return graph_json(cat, g);
    throw py::value_error("graph format must be 'dot' or 'json'");
}

py::list involutions(const std::string& group) {
    const ShapeCatalog& cat = *load(group).cat;
    py::list out;
    for (auto& r : involution_classes(cat)) {
        py::dict d;
        d["shape"] = r.shape;
        d["label"] = cat.at(r.shape).label;
        d["degree"] = r.degree;
        out.append(d);
    }
    return out;
}

py::dict verify(const std::string& group, std::vector<std::string> suites, int jobs) {
    const Loaded& l = load(group);
    if (suites.empty())
        for (auto& s : suite_names())
            if (s != "fixtures" || has_fixture(l.rs->label().str())) suites.push_back(s);
    for (auto& s : suites)
        if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
            throw py::value_error("unknown suite '" + s + "'");
    std::vector<CheckReport> reports;
    {
        py::gil_scoped_release nogil;
        std::vector<Decomposition> decs;
        std::vector<TableRow> rows;
        for (auto& s : suites)
            if (suite_needs_table(s) && decs.empty()) {
                decs = decompose_all(*l.cat, jobs);
                for (auto& d : decs) rows.push_back(table_row(d));
            }
        for (auto& s : suites) {
            if (s == "galois") reports.push_back(suite_galois(*l.cat));
            else if (s == "howlett") reports.push_back(suite_howlett(*l.cat));
            else if (s == "goursat") reports.push_back(suite_goursat(*l.cat, decs));
            else if (s == "section8") reports.push_back(suite_observations(*l.cat, decs));
            else reports.push_back(suite_fixtures(*l.cat, rows));
        }
    }
    py::dict out;
    for (size_t i = 0; i < suites.size(); ++i) {
        py::dict r;
        r["ok"] = reports[i].ok;
        r["checks"] = reports[i].checked;
        r["failures"] = reports[i].failures;
        r["skipped"] = reports[i].skipped;
        out[py::str(suites[i])] = r;
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_coxnorm, m) {
    m.doc() = "Normalizers of parabolic subgroups in finite Coxeter groups";
    py::register_exception<FixtureError>(m, "FixtureError", PyExc_LookupError);
    m.def("group_order", [](const std::string& g) { return group_order(CoxeterLabel::parse(g)); });
    m.def("shapes", &shapes);
    m.def("decompose_json", &decompose_json);
    m.def("table", &table, py::arg("group"), py::arg("format") = "json", py::arg("jobs") = 1);
    m.def("concepts", &concepts);
    m.def("graph", &graph, py::arg("group"), py::arg("format") = "dot");
    m.def("involutions", &involutions);
    m.def("verify", &verify, py::arg("group"), py::arg("suites") = std::vector<std::string>{}, py::arg("jobs") = 1);
}
