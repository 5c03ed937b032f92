// Acceptance run: one PASS/FAIL line per criterion, details indented below it.
#include "coxnorm/classical.hpp"
#include "coxnorm/fixture.hpp"
#include "coxnorm/galois.hpp"
#include "coxnorm/involution.hpp"
#include "coxnorm/table.hpp"
#include "coxnorm/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

using namespace coxnorm;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Group {
    std::unique_ptr<RootSystem> rs;
    std::unique_ptr<ShapeCatalog> cat;
    std::vector<Decomposition> decs;
    std::vector<TableRow> rows;
};

std::map<std::string, Group> cache;

Group& group(const std::string& label, bool with_table = false) {
    Group& g = cache[label];
    if (!g.rs) {
        g.rs = std::make_unique<RootSystem>(CoxeterLabel::parse(label));
        g.cat = std::make_unique<ShapeCatalog>(*g.rs);
    }
    if (with_table && g.decs.empty()) {
        g.decs = decompose_all(*g.cat);
        for (auto& d : g.decs) g.rows.push_back(table_row(d));
    }
    return g;
}

struct Result {
    bool pass = true;
    std::vector<std::string> notes;
    void fail(const std::string& why) {
        pass = false;
        notes.push_back(why);
    }
    void note(const std::string& s) { notes.push_back(s); }
};

int failures = 0;

void report(int n, const std::string& title, const Result& r, double secs) {
    std::cout << "criterion " << n << ": " << (r.pass ? "PASS" : "FAIL") << "  " << title << "  (" << std::fixed
              << std::setprecision(1) << secs << " s)\n";
    for (auto& s : r.notes) std::cout << "    " << s << "\n";
    std::cout.flush();
    if (!r.pass) ++failures;
}

std::string canon(const std::string& type) {
    std::string s = parse_diagram(type).str();
    return s.empty() ? "∅" : s;
}

std::string rep(const char* fam, int m) {
    if (m <= 0) return "";
    return std::string(fam) + std::to_string(m);
}

std::string a1k(int k) { return k == 0 ? "" : k == 1 ? "A1" : "A1^" + std::to_string(k); }

// A concept up to type: the two sides' types (sorted) and whether both sides are the same shape.
using TypedConcept = std::tuple<std::string, std::string, bool>;

TypedConcept typed(const std::string& a, const std::string& b, bool same) {
    std::string x = canon(a), y = canon(b);
    if (y < x) std::swap(x, y);
    return {x, y, same};
}

std::vector<TypedConcept> computed_concepts(const ShapeCatalog& cat) {
    std::vector<TypedConcept> out;
    for (auto& c : parabolic_concepts(cat)) out.push_back(typed(cat.at(c.left).type, cat.at(c.right).type, c.left == c.right));
    std::sort(out.begin(), out.end());
    return out;
}

std::string show(const std::vector<TypedConcept>& v) {
    std::string s;
    for (auto& [a, b, same] : v) s += "<" + a + (same ? "|=" : "|") + b + "> ";
    return s;
}

std::string d_type(int m, int k) {
    std::string s = m == 2 ? "A1^2" : m == 3 ? "A3" : rep("D", m);
    return s + a1k(k);
}

std::vector<TypedConcept> expected_concepts(const CoxeterLabel& L) {
    std::vector<TypedConcept> out;
    int n = L.rank;
    switch (L.family) {
    case 'A':
        out.push_back(typed(rep("A", n), "", false));
        for (int m = 1; m <= n; ++m) {
            int l = n - m - 1;
            if (l >= m) out.push_back(typed(rep("A", m), rep("A", l), m == l));
        }
        break;
    case 'B':
        for (int k = 0; 2 * k <= n; ++k)
            for (int m = 0; m <= n - 2 * k; ++m) {
                int l = n - 2 * k - m;
                if (l < m) continue;
                auto b = [&](int r) { return (r == 1 ? std::string("A1") : rep("B", r)) + a1k(k); };
                out.push_back(typed(b(m), b(l), m == l));
            }
        break;
    case 'D':
        for (int k = 0; 2 * k <= n; ++k)
            for (int m = 0; m <= n - 2 * k; ++m) {
                int l = n - 2 * k - m;
                if (l < m || m == 1 || l == 1 || (m == 0 && l == 0)) continue;
                out.push_back(typed(d_type(m, k), d_type(l, k), m == l));
            }
        if (n % 2 == 1) {
            out.push_back(typed(a1k(n / 2), a1k(n / 2), true));
        } else if ((n / 2) % 2 == 0) {
            out.push_back(typed(a1k(n / 2), a1k(n / 2), true));
            out.push_back(typed(a1k(n / 2), a1k(n / 2), true));
        } else {
            out.push_back(typed(a1k(n / 2), a1k(n / 2), false));
        }
        break;
    case 'I':
        out.push_back(typed("I2(" + std::to_string(L.m) + ")", "", false));
        if (L.m % 2 == 0) {
            out.push_back(typed("A1", "A1", true));
            out.push_back(typed("A1", "A1", true));
        }
        break;
    case 'E':
        if (n == 6)
            out = {typed("E6", "", false), typed("A5", "A1", false), typed("A2^2", "A2", false),
                   typed("A3", "A1^2", false)};
        else if (n == 7)
            out = {typed("E7", "", false),      typed("D6", "A1", false),   typed("A5", "A2", false),
                   typed("D4A1", "A1^2", false), typed("A3A1", "A3", false), typed("D4", "A1^3", false),
                   typed("A1^4", "A1^3", false)};
        else
            out = {typed("E8", "", false),        typed("E7", "A1", false),     typed("E6", "A2", false),
                   typed("D6", "A1^2", false),    typed("D5", "A3", false),     typed("A5", "A2A1", false),
                   typed("D4A1", "A1^3", false),  typed("D4", "D4", true),      typed("A4", "A4", true),
                   typed("A3A1", "A3A1", true),   typed("A2^2", "A2^2", true),  typed("A1^4", "A1^4", true)};
        break;
    case 'F':
        out = {typed("F4", "", false),   typed("B3", "A1", false),   typed("B3", "A1", false),
               typed("A2", "A2", false), typed("A1^2", "A1^2", true), typed("B2", "B2", true)};
        break;
    case 'H':
        if (n == 3)
            out = {typed("H3", "", false), typed("A1^2", "A1", false)};
        else
            out = {typed("H4", "", false), typed("H3", "A1", false), typed("A1^2", "A1^2", true),
                   typed("A2", "A2", true), typed("I2(5)", "I2(5)", true)};
        break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

int partitions(int n) {
    std::vector<int> p(n + 1, 0);
    p[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int i = k; i <= n; ++i) p[i] += p[i - k];
    return p[n];
}

std::vector<std::string> dihedral() {
    std::vector<std::string> v;
    for (int m = 5; m <= 12; ++m) v.push_back("I2(" + std::to_string(m) + ")");
    return v;
}

Result fixture_diff(const std::vector<std::string>& groups) {
    Result r;
    for (auto& g : groups) {
        Group& G = group(g, true);
        FixtureReport rep = diff(load_fixture(g), *G.cat, G.rows);
        if (!rep.ok()) {
            r.fail(g + ": " + std::to_string(rep.mismatches.size()) + " mismatched cells");
            for (auto& s : rep.structural) r.note("  " + s);
            for (auto& m : rep.mismatches) r.note("  " + m.str());
        }
    }
    return r;
}

void criterion1() {
    auto t = Clock::now();
    std::vector<std::string> groups = {"A7", "B5", "B6", "D5", "D6", "E6", "F4", "H3", "H4"};
    for (auto& d : dihedral()) groups.push_back(d);
    Result r = fixture_diff(groups);
    double s = seconds_since(t);
    if (s > 60) r.fail("runtime " + std::to_string(s) + " s exceeds 60 s");
    report(1, "reference tables A7 B5 B6 D5 D6 E6 F4 H3 H4 I2(5..12)", r, s);
}

void criterion2() {
    auto t = Clock::now();
    Result r = fixture_diff({"E7"});
    double s = seconds_since(t);
    if (s > 600) r.fail("runtime " + std::to_string(s) + " s exceeds 600 s");
    report(2, "reference table E7", r, s);
}

void criterion3(bool allow_long) {
    auto t = Clock::now();
    Result r;
    Group& G = group("E8");
    if (G.cat->size() != 41) r.fail("E8 has " + std::to_string(G.cat->size()) + " shapes, expected 41");
    int idx = G.cat->find("A4A1");
    if (idx <= 0) {
        r.fail("no unique A4A1 shape in E8");
    } else {
        Decomposition d = decompose(*G.cat, idx);
        r.note("A4A1 is shape " + std::to_string(idx) + ": |D| = " + std::to_string(d.D.size()) +
               ", |C| = " + std::to_string(d.C.size()) + ", closure " + d.closure_cell());
        if (d.D.size() != 2 || d.C.size() != 2) r.fail("expected |D| = |C| = 2");
        CheckReport c = verify_decomposition(*G.rs, d);
        if (!c.ok) r.fail("decomposition check: " + c.failures[0]);
    }
    if (allow_long) {
        Result full = fixture_diff({"E8"});
        r.note(std::string("optional full E8 table: ") + (full.pass ? "reproduced" : "differs"));
        for (auto& n : full.notes) r.note("  " + n);
    } else {
        r.note("optional full E8 table skipped (run with --allow-long)");
    }
    report(3, "E8 catalog and the A4A1 row", r, seconds_since(t));
}

void criterion4() {
    auto t = Clock::now();
    Result r;
    std::vector<std::string> groups;
    for (int n = 1; n <= 7; ++n) groups.push_back("A" + std::to_string(n));
    for (int n = 2; n <= 6; ++n) groups.push_back("B" + std::to_string(n));
    for (int n = 4; n <= 6; ++n) groups.push_back("D" + std::to_string(n));
    for (auto& d : dihedral()) groups.push_back(d);
    for (auto g : {"E6", "E7", "E8", "F4", "H3", "H4"}) groups.push_back(g);
    for (auto& g : groups) {
        Group& G = group(g);
        auto got = computed_concepts(*G.cat), want = expected_concepts(G.rs->label());
        if (got != want) r.fail(g + ": got " + show(got) + " expected " + show(want));
    }
    r.note(std::to_string(groups.size()) + " groups compared");
    report(4, "parabolic concepts", r, seconds_since(t));
}

void criterion5() {
    auto t = Clock::now();
    Result r;
    auto expect = [&](const std::string& g, int n) {
        int got = group(g).cat->size();
        if (got != n) r.fail(g + ": " + std::to_string(got) + " shapes, expected " + std::to_string(n));
    };
    for (int n = 2; n <= 8; ++n) expect("A" + std::to_string(n - 1), partitions(n));
    for (int n = 2; n <= 6; ++n) {
        int s = 0;
        for (int m = 0; m <= n; ++m) s += partitions(m);
        expect("B" + std::to_string(n), s);
    }
    expect("D5", 14);
    expect("D6", 26);
    report(5, "shape counts", r, seconds_since(t));
}

void absorb(Result& r, const CheckReport& c) {
    if (!c.ok)
        for (auto& f : c.failures) r.fail(c.name + ": " + f);
}

void criterion6() {
    auto t = Clock::now();
    Result r;
    std::vector<std::string> small;
    for (int n = 1; n <= 5; ++n) small.push_back("A" + std::to_string(n));
    for (int n = 2; n <= 5; ++n) small.push_back("B" + std::to_string(n));
    for (int n = 4; n <= 5; ++n) small.push_back("D" + std::to_string(n));
    for (auto& d : dihedral()) small.push_back(d);
    std::vector<std::string> with_exc = small;
    for (auto g : {"F4", "H3", "H4"}) with_exc.push_back(g);

    int checks = 0;
    for (auto& g : with_exc) {
        Group& G = group(g, true);
        for (auto c : {suite_galois(*G.cat), suite_howlett(*G.cat)}) {
            absorb(r, c);
            checks += c.checked;
        }
    }
    for (auto& g : small) {
        Group& G = group(g, true);
        CheckReport c = suite_goursat(*G.cat, G.decs);
        absorb(r, c);
        checks += c.checked;
    }
    // order product, normality and the closure observations up to rank 6 plus the exceptional groups
    std::vector<std::string> wide = with_exc;
    for (auto g : {"A6", "B6", "D6", "E6", "E7"}) wide.push_back(g);
    for (auto& g : wide) {
        Group& G = group(g, true);
        for (auto& d : G.decs) {
            CheckReport c = verify_decomposition(*G.rs, d);
            c.name = g + " shape " + std::to_string(d.shape_index);
            absorb(r, c);
            checks += c.checked;
        }
        CheckReport c = suite_observations(*G.cat, G.decs);
        absorb(r, c);
        checks += c.checked;
    }
    r.note(std::to_string(checks) + " checks");
    report(6, "property suites", r, seconds_since(t));
}

void criterion7() {
    auto t = Clock::now();
    Result r;
    std::vector<std::string> groups;
    for (int n = 1; n <= 7; ++n) groups.push_back("A" + std::to_string(n));
    for (int n = 2; n <= 6; ++n) groups.push_back("B" + std::to_string(n));
    for (int n = 4; n <= 6; ++n) groups.push_back("D" + std::to_string(n));
    int labels = 0;
    for (auto& g : groups) {
        Group& G = group(g);
        for (auto& [lambda, sign] : classical_labels(G.rs->label())) {
            ++labels;
            auto gens = classical_complement_generators(*G.rs, lambda, sign);
            CheckReport c = check_classical(*G.cat, gens);
            std::ostringstream tag;
            tag << g << " [";
            for (size_t i = 0; i < lambda.size(); ++i) tag << (i ? " " : "") << lambda[i];
            tag << "]" << (sign > 0 ? "+" : sign < 0 ? "-" : "");
            c.name = tag.str();
            absorb(r, c);
        }
    }
    r.note(std::to_string(labels) + " labels checked");
    report(7, "classical generators", r, seconds_since(t));
}

} // namespace

int main(int argc, char** argv) {
    bool allow_long = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--allow-long") == 0) allow_long = true;
    criterion1();
    criterion2();
    criterion3(allow_long);
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all criteria passed")) << "\n";
    return failures ? 1 : 0;
}
