#include "coxnorm/fixture.hpp"
#include "coxnorm/galois.hpp"
#include "coxnorm/involution.hpp"
#include "coxnorm/normalizer.hpp"
#include "coxnorm/table.hpp"
#include "coxnorm/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace coxnorm;
namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0, kVerifyFailed = 1, kUserError = 2, kRefused = 3;
constexpr int kCacheVersion = 1;

struct UserError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Refused : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "text";
    bool allow_long = false;
    std::string cache_dir;
    int jobs = 0;
};

CoxeterLabel parse_group(const std::string& s) {
    try {
        return CoxeterLabel::parse(s);
    } catch (const std::exception& e) {
        throw UserError(e.what());
    }
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
    for (auto f : allowed)
        if (o.format == f) return;
    std::string list;
    for (auto f : allowed) list += std::string(list.empty() ? "" : ", ") + f;
    throw UserError("format '" + o.format + "' not supported here (use " + list + ")");
}

void refuse_long(const RootSystem& rs, const Options& o, const std::string& what) {
    if (rs.label().family == 'E' && rs.label().rank == 8 && !o.allow_long)
        throw Refused(what + " for E8 takes several minutes; pass --allow-long to run it");
}

int jobs_of(const Options& o) {
    if (o.jobs > 0) return o.jobs;
    unsigned h = std::thread::hardware_concurrency();
    return h ? (int)h : 1;
}

std::string catalog_listing(const ShapeCatalog& cat) {
    std::ostringstream out;
    for (auto& s : cat.shapes())
        out << s.index << "\t" << s.label << "\t" << format_subset(s.rep) << "\n";
    return out.str();
}

// ---------------------------------------------------------------- cache

std::string cache_dir(const Options& o) {
    if (!o.cache_dir.empty()) return o.cache_dir;
    const char* env = std::getenv("COXNORM_CACHE");
    return env ? env : "";
}

fs::path cache_file(const std::string& dir, const CoxeterLabel& g) {
    return fs::path(dir) / ("table-" + g.str() + ".json");
}

std::optional<std::vector<TableRow>> cache_load(const std::string& dir, const CoxeterLabel& g) {
    if (dir.empty()) return std::nullopt;
    std::ifstream in(cache_file(dir, g));
    if (!in) return std::nullopt;
    try {
        auto j = nlohmann::json::parse(in);
        if (j.at("version") != kCacheVersion || j.at("group") != g.str()) return std::nullopt;
        std::vector<TableRow> rows;
        for (auto& r : j.at("rows")) {
            TableRow t;
            t.star = r.at(0).get<bool>();
            t.index = r.at(1).get<int>();
            std::string* cells[] = {&t.P, &t.Q, &t.D, &t.closure, &t.A, &t.B, &t.C, &t.x_perp, &t.x_cap_y, &t.y_perp};
            for (int k = 0; k < 10; ++k) *cells[k] = r.at(k + 2).get<std::string>();
            rows.push_back(t);
        }
        return rows;
    } catch (const std::exception&) {
        return std::nullopt; // stale or damaged: rebuild
    }
}

void cache_store(const std::string& dir, const CoxeterLabel& g, const std::vector<TableRow>& rows) {
    if (dir.empty()) return;
    std::error_code ec;
    fs::create_directories(dir, ec);
    nlohmann::json j;
    j["version"] = kCacheVersion;
    j["group"] = g.str();
    j["rows"] = nlohmann::json::array();
    for (auto& t : rows)
        j["rows"].push_back({t.star, t.index, t.P, t.Q, t.D, t.closure, t.A, t.B, t.C, t.x_perp, t.x_cap_y, t.y_perp});
    fs::path target = cache_file(dir, g), tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return; // an unwritable cache is not an error
        out << j.dump();
    }
    fs::rename(tmp, target, ec);
}

std::vector<TableRow> table_rows(const ShapeCatalog& cat, const Options& o) {
    const CoxeterLabel g = cat.root_system().label();
    std::string dir = cache_dir(o);
    if (auto hit = cache_load(dir, g); hit && (int)hit->size() == cat.size()) return *hit;
    refuse_long(cat.root_system(), o, "the full table");
    std::vector<TableRow> rows;
    for (auto& d : decompose_all(cat, jobs_of(o))) rows.push_back(table_row(d));
    cache_store(dir, g, rows);
    return rows;
}

// ---------------------------------------------------------------- commands

int cmd_decompose(const Options& o, const std::string& group, const std::string& selector) {
    require_format(o, {"text", "json"});
    RootSystem rs(parse_group(group));
    ShapeCatalog cat(rs);
    int idx = cat.find(selector);
    if (idx <= 0) {
        std::cerr << (idx < 0 ? "ambiguous" : "unknown") << " parabolic '" << selector << "' in " << rs.label().str()
                  << "; shapes:\n"
                  << catalog_listing(cat);
        return kUserError;
    }
    // an explicit simple subset is decomposed as given, everything else through the representative
    std::vector<int> J = cat.at(idx).rep;
    if (!selector.empty() && (selector[0] == 's' || selector[0] == 'S')) {
        J.clear();
        std::stringstream ss(selector);
        std::string tok;
        while (std::getline(ss, tok, ',')) J.push_back(std::stoi(tok.substr(1)) - 1);
        std::sort(J.begin(), J.end());
        J.erase(std::unique(J.begin(), J.end()), J.end());
    }
    Decomposition d = decompose(cat, J);
    if (o.format == "json") {
        std::cout << decomposition_json(d) << "\n";
        return kOk;
    }
    TableRow r = table_row(d);
    std::cout << rs.label().str() << " shape " << d.shape_index << (r.star ? " *" : "") << "\n"
              << "  P        " << d.P_label << "  (" << format_subset(J) << ", order " << d.P_order << ")\n"
              << "  Q        " << d.Q_label << "  (shape " << r.Q << ", order " << d.Q_order << ")\n"
              << "  |N|      " << d.N_order << "\n"
              << "  |D|      " << d.D.size() << "\n"
              << "  closure  " << (r.closure.empty() ? "W" : r.closure) << "\n"
              << "  A        " << (r.A.empty() ? "1" : r.A) << "  (order " << d.A.size() << ")\n"
              << "  B        " << (r.B.empty() ? "1" : r.B) << "  (order " << d.B.size() << ")\n"
              << "  C        " << (r.C.empty() ? "1" : r.C) << "  (order " << d.C.size() << ")\n"
              << "  X-perp   " << r.x_perp << "\n"
              << "  X cap Y  " << r.x_cap_y << "\n"
              << "  Y-perp   " << r.y_perp << "\n";
    return kOk;
}

int cmd_table(const Options& o, const std::string& group) {
    require_format(o, {"text", "json", "csv"});
    RootSystem rs(parse_group(group));
    ShapeCatalog cat(rs);
    std::cout << render_table(table_rows(cat, o), o.format, rs.label().str());
    return kOk;
}

int cmd_concepts(const Options& o, const std::string& group) {
    require_format(o, {"text", "json"});
    RootSystem rs(parse_group(group));
    ShapeCatalog cat(rs);
    auto concepts = parabolic_concepts(cat);
    if (o.format == "json") {
        nlohmann::ordered_json j;
        j["group"] = rs.label().str();
        j["concepts"] = nlohmann::ordered_json::array();
        for (auto& c : concepts)
            j["concepts"].push_back(nlohmann::ordered_json{{"left", c.left},
                                                           {"left_label", cat.at(c.left).label},
                                                           {"right", c.right},
                                                           {"right_label", cat.at(c.right).label}});
        std::cout << j.dump(2) << "\n";
    } else {
        for (auto& c : concepts) std::cout << "<" << cat.at(c.left).label << " | " << cat.at(c.right).label << ">\n";
    }
    return kOk;
}

int cmd_shapes(const Options& o, const std::string& group) {
    require_format(o, {"text", "json", "csv"});
    RootSystem rs(parse_group(group));
    ShapeCatalog cat(rs);
    if (o.format == "json") {
        nlohmann::ordered_json j;
        j["group"] = rs.label().str();
        j["shapes"] = nlohmann::ordered_json::array();
        for (auto& s : cat.shapes())
            j["shapes"].push_back(nlohmann::ordered_json{{"index", s.index},
                                                         {"label", s.label},
                                                         {"type", s.type},
                                                         {"rank", s.rank},
                                                         {"order", s.order},
                                                         {"rep", format_subset(s.rep)},
                                                         {"members", s.members.size()}});
        std::cout << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        std::cout << "index,label,type,rank,order,rep,members\n";
        for (auto& s : cat.shapes())
            std::cout << s.index << ",\"" << s.label << "\"," << s.type << "," << s.rank << "," << s.order << ",\""
                      << format_subset(s.rep) << "\"," << s.members.size() << "\n";
    } else {
        for (auto& s : cat.shapes())
            std::cout << s.index << "\t" << s.label << "\t" << s.order << "\t" << format_subset(s.rep) << "\t"
                      << s.members.size() << "\n";
    }
    return kOk;
}

int cmd_graph(const Options& o, const std::string& group) {
    std::string fmt = o.format == "text" ? "dot" : o.format;
    if (fmt != "dot" && fmt != "json") throw UserError("graph supports --format dot or json");
    RootSystem rs(parse_group(group));
    ShapeCatalog cat(rs);
    ClosureGraph g = shape_closure_graph(cat);
    std::cout << (fmt == "dot" ? graph_dot(cat, g) : graph_json(cat, g) + "\n");
    return kOk;
}

int cmd_involutions(const Options& o, const std::string& group) {
    require_format(o, {"text", "json"});
    RootSystem rs(parse_group(group));
    ShapeCatalog cat(rs);
    auto inv = involution_classes(cat);
    if (o.format == "json") {
        nlohmann::ordered_json j;
        j["group"] = rs.label().str();
        j["involutions"] = nlohmann::ordered_json::array();
        for (auto& r : inv)
            j["involutions"].push_back(nlohmann::ordered_json{
                {"shape", r.shape}, {"label", cat.at(r.shape).label}, {"degree", r.degree}});
        std::cout << j.dump(2) << "\n";
    } else {
        for (auto& r : inv) std::cout << r.shape << "\t" << cat.at(r.shape).label << "\tdegree " << r.degree << "\n";
    }
    return kOk;
}

int cmd_verify(const Options& o, const std::string& group, std::vector<std::string> suites) {
    require_format(o, {"text", "json"});
    RootSystem rs(parse_group(group));
    ShapeCatalog cat(rs);
    if (suites.empty())
        for (auto& s : suite_names())
            if (s != "fixtures" || has_fixture(rs.label().str())) suites.push_back(s);
    bool table = false, decs_needed = false;
    for (auto& s : suites) {
        if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
            throw UserError("unknown suite '" + s + "'");
        if (s == "fixtures") {
            table = true;
            if (!has_fixture(rs.label().str())) throw UserError("no reference table for " + rs.label().str());
        } else if (suite_needs_table(s)) {
            decs_needed = true;
        }
    }
    if (table || decs_needed) refuse_long(rs, o, "verification");

    std::vector<Decomposition> decs;
    std::vector<TableRow> rows;
    if (decs_needed) {
        decs = decompose_all(cat, jobs_of(o));
        for (auto& d : decs) rows.push_back(table_row(d));
    } else if (table) {
        rows = table_rows(cat, o);
    }

    std::vector<CheckReport> reports;
    for (auto& s : suites) {
        if (s == "galois") reports.push_back(suite_galois(cat));
        else if (s == "howlett") reports.push_back(suite_howlett(cat));
        else if (s == "goursat") reports.push_back(suite_goursat(cat, decs));
        else if (s == "section8") reports.push_back(suite_observations(cat, decs));
        else reports.push_back(suite_fixtures(cat, rows));
    }
    bool ok = true;
    if (o.format == "json") {
        nlohmann::ordered_json j;
        j["group"] = rs.label().str();
        j["suites"] = nlohmann::ordered_json::array();
        for (size_t i = 0; i < reports.size(); ++i) {
            auto& r = reports[i];
            ok = ok && r.ok;
            j["suites"].push_back(nlohmann::ordered_json{{"suite", suites[i]},
                                                         {"ok", r.ok},
                                                         {"checks", r.checked},
                                                         {"failures", r.failures},
                                                         {"skipped", r.skipped}});
        }
        j["ok"] = ok;
        std::cout << j.dump(2) << "\n";
    } else {
        for (size_t i = 0; i < reports.size(); ++i) {
            auto& r = reports[i];
            ok = ok && r.ok;
            std::cout << rs.label().str() << " " << suites[i] << ": " << (r.ok ? "ok" : "FAILED") << " (" << r.checked
                      << " checks";
            if (!r.skipped.empty()) std::cout << ", " << r.skipped.size() << " skipped";
            std::cout << ")\n";
            for (auto& f : r.failures) std::cout << "  fail: " << f << "\n";
            for (auto& f : r.skipped) std::cout << "  skip: " << f << "\n";
        }
    }
    return ok ? kOk : kVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Normalizers of parabolic subgroups in finite Coxeter groups"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "text, json, csv or dot")
        ->check(CLI::IsMember({"text", "json", "csv", "dot"}))
        ->capture_default_str();
    app.add_flag("--allow-long", o.allow_long, "allow jobs that take minutes (full E8 tables)");
    app.add_option("--cache-dir", o.cache_dir, "cache directory for tables (overrides COXNORM_CACHE)");
    app.add_option("--jobs,-j", o.jobs, "worker threads for table work (default: all cores)")->check(CLI::NonNegativeNumber);
    app.fallthrough();

    std::string group, selector;
    std::vector<std::string> suites;
    std::function<int()> run;

    auto* dec = app.add_subcommand("decompose", "decomposition of the normalizer of one parabolic");
    dec->add_option("group", group, "e.g. E6, B5, I2(8)")->required();
    dec->add_option("parabolic", selector, "shape index, label, partition like [2 2 1] or subset like s1,s3")
        ->required();
    dec->callback([&] { run = [&] { return cmd_decompose(o, group, selector); }; });

    auto simple = [&](const char* name, const char* help, int (*fn)(const Options&, const std::string&)) {
        auto* sc = app.add_subcommand(name, help);
        sc->add_option("group", group)->required();
        sc->callback([&, fn] { run = [&, fn] { return fn(o, group); }; });
    };
    simple("table", "decomposition table of every shape", cmd_table);
    simple("concepts", "pairs of mutually orthogonal closed shapes", cmd_concepts);
    simple("shapes", "conjugacy classes of parabolic subgroups", cmd_shapes);
    simple("graph", "inclusion graph of shapes with orthogonal closure edges", cmd_graph);
    simple("involutions", "involution classes via their centralizer shapes", cmd_involutions);

    auto* ver = app.add_subcommand("verify", "run property suites");
    ver->add_option("group", group)->required();
    ver->add_option("--suite,-s", suites, "galois, howlett, goursat, section8, fixtures (default: all)");
    ver->callback([&] { run = [&] { return cmd_verify(o, group, suites); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUserError;
    }
    try {
        return run();
    } catch (const UserError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUserError;
    } catch (const Refused& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kRefused;
    } catch (const FixtureError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUserError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUserError;
    }
}
