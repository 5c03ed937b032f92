#include "coxnorm/normalizer.hpp"

#include "coxnorm/involution.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace coxnorm {

Stabilizer normalizer(const RootSystem& rs, const Subsystem& P) {
    return set_stabilizer(rs, rs.simple_reflections(), rs.order(), P.roots);
}

GroupSet normalizer_elements(const RootSystem& rs, const Subsystem& P, std::size_t limit) {
    Stabilizer N = normalizer(rs, P);
    if (N.order > limit) throw SizeLimitExceeded("normalizer too large to enumerate");
    return generate(N.gens, rs.identity(), limit);
}

GroupSet howlett_complement(const RootSystem& rs, const Subsystem& R, const GroupSet& ambient) {
    for (const Perm& g : ambient.gens.empty() ? ambient.elements : ambient.gens)
        if (!normalizes(g, R)) {
            std::string w;
            for (int x : encode(rs, g)) w += (w.empty() ? "" : ",") + std::to_string(x);
            throw std::invalid_argument("reflection subgroup is not normal; witness [" + w + "]");
        }
    GroupSet H;
    for (const Perm& a : ambient.elements)
        if (relative_length(rs, a, R.positive) == 0) H.elements.push_back(a);
    H.gens = H.elements;
    return H;
}

// ------------------------------------------------------------------ Goursat

namespace {

std::vector<Perm> sorted_unique(std::vector<Perm> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// labels the right cosets K g of K inside `whole` (both sorted); every element is visited once
std::map<Perm, int> coset_labels(const std::vector<Perm>& K, const std::vector<Perm>& whole) {
    std::map<Perm, int> label;
    int next = 0;
    for (const Perm& g : whole) {
        if (label.count(g)) continue;
        for (const Perm& x : K) label.emplace(compose(x, g), next);
        ++next;
    }
    return label;
}

bool complement_ok(const std::vector<Perm>& whole, const std::vector<Perm>& kernel, const std::vector<Perm>& comp,
                   const Perm& id) {
    if (comp.size() * kernel.size() != whole.size()) return false;
    for (const Perm& c : comp) {
        if (!std::binary_search(whole.begin(), whole.end(), c)) return false;
        if (c != id && std::binary_search(kernel.begin(), kernel.end(), c)) return false;
    }
    return true;
}

} // namespace

GoursatSections goursat_sections(const std::vector<std::pair<Perm, Perm>>& L, const Perm& idG, const Perm& idH,
                                 const std::vector<std::pair<Perm, Perm>>& complement) {
    GoursatSections s;
    std::vector<Perm> g1, h1, g2, h2;
    for (auto& [g, h] : L) {
        g1.push_back(g);
        h1.push_back(h);
        if (h == idH) g2.push_back(g);
        if (g == idG) h2.push_back(h);
    }
    s.G1 = sorted_unique(g1);
    s.H1 = sorted_unique(h1);
    s.G2 = sorted_unique(g2);
    s.H2 = sorted_unique(h2);

    std::map<int, int> theta, back;
    std::map<Perm, int> gl = coset_labels(s.G2, s.G1), hl = coset_labels(s.H2, s.H1);
    bool ok = gl.size() == s.G1.size() && hl.size() == s.H1.size();
    for (auto& [g, h] : L) {
        int cg = gl.at(g), ch = hl.at(h);
        auto [it, fresh] = theta.emplace(cg, ch);
        if (!fresh && it->second != ch) ok = false;
        auto [jt, fresh2] = back.emplace(ch, cg);
        if (!fresh2 && jt->second != cg) ok = false;
    }
    s.theta_well_defined = ok;
    std::size_t n = sorted_unique([&] {
                        std::vector<Perm> v;
                        for (auto& [g, h] : L) v.push_back(g + h);
                        return v;
                    }()).size();
    s.is_graph = ok && n == s.G1.size() * s.H2.size() && n == s.H1.size() * s.G2.size();

    if (!complement.empty()) {
        std::vector<Perm> g0, h0;
        for (auto& [g, h] : complement) {
            g0.push_back(g);
            h0.push_back(h);
        }
        s.G0 = sorted_unique(g0);
        s.H0 = sorted_unique(h0);
        s.complements_ok = complement_ok(s.G1, s.G2, s.G0, idG) && complement_ok(s.H1, s.H2, s.H0, idH);
        std::map<Perm, Perm> t0;
        bool iso = s.G0.size() == complement.size() && s.H0.size() == complement.size();
        for (auto& [g, h] : complement) {
            t0[g] = h;
            s.theta0.push_back({g, h});
        }
        for (auto& [a, b] : complement)
            for (auto& [c, d] : complement) {
                auto it = t0.find(compose(a, c));
                if (it == t0.end() || it->second != compose(b, d)) iso = false;
            }
        s.theta0_isomorphism = iso;
    }
    return s;
}

GoursatSections goursat_sections(const RootSystem& rs, const GroupSet& L, const Subspace& first,
                                 const Subspace& second, const std::vector<Perm>& complement) {
    Restriction R1(rs, first), R2(rs, second);
    std::vector<std::pair<Perm, Perm>> pairs, comp;
    for (const Perm& w : L.elements) {
        if (!R1.leaves_invariant(w) || !R2.leaves_invariant(w))
            throw std::invalid_argument("split is not invariant under the group");
        pairs.push_back({R1.restrict(w), R2.restrict(w)});
    }
    for (const Perm& w : complement) comp.push_back({R1.restrict(w), R2.restrict(w)});
    return goursat_sections(pairs, R1.identity(), R2.identity(), comp);
}

// ------------------------------------------------------------------ decomposition

std::string Decomposition::closure_cell() const {
    if (pq_closure_is_W) return "";
    std::string k = std::to_string(pq_closure_shape);
    return pq_is_parabolic ? "(" + k + ")" : k;
}

std::string Decomposition::q_cell() const { return Q.roots.empty() ? "∅" : std::to_string(q_shape); }

Decomposition decompose(const ShapeCatalog& cat, int idx, bool describe) {
    return decompose(cat, cat.at(idx).rep, describe);
}

Decomposition decompose(const ShapeCatalog& cat, const std::vector<int>& J, bool describe) {
    const RootSystem& rs = cat.root_system();
    int idx = cat.shape_of_subset(J);
    Decomposition d;
    d.group = rs.label();
    d.shape_index = idx;
    d.P_label = cat.at(idx).label;
    d.P = standard_subsystem(rs, J);
    d.Q = orthogonal_complement(rs, d.P);
    d.PQ = subsystem_of(rs, d.P.roots | d.Q.roots);
    d.P_order = subsystem_type(rs, d.P).order();
    d.Q_order = subsystem_type(rs, d.Q).order();
    d.q_shape = cat.shape_of(d.Q);
    d.Q_label = cat.at(d.q_shape).label;

    Stabilizer N = normalizer(rs, d.P);
    d.N_gens = N.gens;
    d.N_order = N.order;
    const Perm id = rs.identity();
    std::vector<Perm> dgens;
    for (const Perm& g : N.gens) {
        Perm r = reduce_modulo(rs, g, d.PQ);
        if (!is_identity(r)) dgens.push_back(r);
    }
    dgens = sorted_unique(dgens);
    d.D = generate(dgens, id);
    if (d.N_order != d.P_order * d.Q_order * d.D.size())
        throw std::logic_error("normalizer order does not factor as |P||Q||D| for shape " + std::to_string(idx));

    d.closure = orthogonal_closure(rs, d.P);
    d.closure_shape = cat.shape_of(d.closure);
    d.pq_closure = parabolic_closure(rs, d.PQ);
    d.pq_closure_shape = cat.shape_of(d.pq_closure);
    d.pq_is_parabolic = d.pq_closure.roots == d.PQ.roots;
    d.pq_closure_is_W = d.pq_closure.roots == rs.all_roots();

    for (const Perm& x : d.D.elements) {
        if (in_subgroup(rs, x, d.closure)) d.A.elements.push_back(x);
        if (in_subgroup(rs, x, d.pq_closure)) d.B.elements.push_back(x);
    }
    d.A.gens = d.A.elements;
    d.B.gens = d.B.elements;
    std::vector<Perm> abg = d.A.elements;
    abg.insert(abg.end(), d.B.elements.begin(), d.B.elements.end());
    d.AB = generate(abg, id);
    if (d.AB.size() != d.A.size() * d.B.size()) throw std::logic_error("A and B do not form a direct product");

    if (d.AB.size() == d.D.size()) {
        d.C.elements = {id};
    } else if (d.AB.size() * 2 == d.D.size()) {
        Perm best;
        for (const Perm& x : d.D.elements) {
            if (d.AB.contains(x) || !is_identity(compose(x, x))) continue;
            bool normal = true;
            for (const Perm& y : abg)
                if (!d.AB.contains(compose(compose(x, y), x))) {
                    normal = false;
                    break;
                }
            if (normal && (best.empty() || encoding_less(rs, x, best))) best = x;
        }
        if (best.empty()) throw std::logic_error("no involution complement to AB in D");
        d.C.elements = sorted_unique({id, best});
        d.C.gens = {best};
    } else {
        throw std::logic_error("AB has index greater than 2 in D");
    }

    d.involution_centralizer = is_involution_shape(cat, idx);

    if (describe) {
        d.described = true;
        d.split = invariant_split(rs, d.P, d.Q);
        d.actions[0] = describe_action(rs, Role::X_PERP, d.split.x_perp, &d.P, dgens);
        d.actions[1] = describe_action(rs, Role::X_CAP_Y, d.split.x_cap_y, nullptr, dgens);
        d.actions[2] = describe_action(rs, Role::Y_PERP, d.split.y_perp, &d.Q, dgens);
        if (d.D.size() > 1) {
            d.A_name = name_subgroup(rs, d.split, d.A.elements, &d.AB.elements);
            d.B_name = name_subgroup(rs, d.split, d.B.elements, &d.AB.elements);
            d.C_name = name_subgroup(rs, d.split, d.C.elements);
        }
    }
    return d;
}

CheckReport verify_decomposition(const RootSystem& rs, const Decomposition& d) {
    CheckReport r;
    r.name = d.group.str() + " shape " + std::to_string(d.shape_index);
    std::uint64_t prod = d.P_order * d.Q_order * d.A.size() * d.B.size() * d.C.size();
    r.require(prod == d.N_order, "|N| != |P||Q||A||B||C|");
    r.require(d.C.size() <= 2, "|C| > 2");
    // P and Q commute elementwise: their reflections commute
    bool commute = true;
    d.P.positive.for_each([&](int a) {
        d.Q.positive.for_each([&](int b) {
            const Perm& s = rs.reflection(a);
            const Perm& t = rs.reflection(b);
            if (compose(s, t) != compose(t, s)) commute = false;
        });
    });
    r.require(commute, "P and Q do not commute");
    // PQAB normal in N: conjugates of the generators of PQAB by generators of N stay inside
    auto in_PQAB = [&](const Perm& x) {
        if (!normalizes(x, d.PQ)) return false;
        return d.AB.contains(reduce_modulo(rs, x, d.PQ));
    };
    bool normal = true;
    std::vector<Perm> inner = simple_reflections_of(rs, d.PQ);
    inner.insert(inner.end(), d.AB.elements.begin(), d.AB.elements.end());
    for (const Perm& n : d.N_gens) {
        Perm ni = inverse(n);
        for (const Perm& x : inner)
            if (!in_PQAB(compose(compose(ni, x), n))) normal = false;
    }
    r.require(normal, "PQAB is not normal in N");
    std::uint64_t index = d.N_order / (d.P_order * d.Q_order * d.AB.size());
    r.require(index == d.C.size(), "index of PQAB differs from |C|");
    // C normalizes A x B, and A, B commute
    for (const Perm& c : d.C.elements)
        for (const Perm& x : d.AB.elements) r.require(d.AB.contains(compose(compose(c, x), c)), "C does not normalize AB");
    for (const Perm& a : d.A.elements)
        for (const Perm& b : d.B.elements) r.require(compose(a, b) == compose(b, a), "A and B do not commute");
    return r;
}

// ------------------------------------------------------------------ JSON

namespace {

nlohmann::ordered_json action_json(const ActionRecord& a) {
    nlohmann::ordered_json j;
    j["role"] = role_name(a.role);
    j["subgroup"] = a.subgroup;
    j["classification"] = a.classification;
    if (a.classification == "reflection") {
        auto arr = nlohmann::ordered_json::array();
        for (auto& c : a.diagram.parts) arr.push_back(DiagramType{{c}}.str());
        j["diagram"] = arr;
    }
    j["marker"] = a.marker;
    j["cell"] = a.cell(false);
    return j;
}

} // namespace

std::string decomposition_json(const Decomposition& d, int indent) {
    nlohmann::ordered_json j;
    j["group"] = d.group.str();
    j["shape_index"] = d.shape_index;
    j["P"] = d.P_label;
    j["P_order"] = d.P_order;
    j["Q_shape"] = d.q_shape;
    j["Q"] = d.Q_label;
    j["Q_order"] = d.Q_order;
    j["N_order"] = d.N_order;
    j["D_order"] = d.D.size();
    j["closure"] = d.closure_cell();
    j["A_type"] = d.A_name.cell();
    j["A_order"] = d.A.size();
    j["B_type"] = d.B_name.cell();
    j["B_order"] = d.B.size();
    j["C_type"] = d.C_name.cell();
    j["C_order"] = d.C.size();
    j["closure_shape"] = d.closure_shape;
    j["pq_closure_shape"] = d.pq_closure_shape;
    nlohmann::ordered_json acts;
    acts["x_perp"] = action_json(d.actions[0]);
    acts["x_cap_y"] = action_json(d.actions[1]);
    acts["y_perp"] = action_json(d.actions[2]);
    j["actions"] = acts;
    j["involution_centralizer"] = d.involution_centralizer;
    return j.dump(indent);
}

} // namespace coxnorm
