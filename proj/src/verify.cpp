#include "coxnorm/verify.hpp"

#include "coxnorm/galois.hpp"
#include "coxnorm/involution.hpp"
#include "coxnorm/oracle.hpp"

#include <algorithm>
#include <set>

namespace coxnorm {

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> n = {"galois", "howlett", "goursat", "section8", "fixtures"};
    return n;
}

bool suite_needs_table(const std::string& suite) { return suite == "goursat" || suite == "section8" || suite == "fixtures"; }

namespace {

std::vector<std::vector<int>> all_subsets(int r) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        std::vector<int> J;
        for (int i = 0; i < r; ++i)
            if (mask >> i & 1) J.push_back(i);
        out.push_back(J);
    }
    return out;
}

std::string subset_tag(const std::vector<int>& J) { return "J={" + format_subset(J) + "}"; }

std::vector<Perm> elements_of(const RootSystem& rs, const Subsystem& R) {
    return generate(reflections_of(rs, R), rs.identity()).elements;
}

} // namespace

CheckReport suite_galois(const ShapeCatalog& cat) {
    const RootSystem& rs = cat.root_system();
    CheckReport r;
    r.name = rs.label().str() + " galois";
    int n = rs.rank();
    auto subsets = all_subsets(n);
    std::vector<Subsystem> U, perp1, clos;
    for (auto& J : subsets) {
        U.push_back(standard_subsystem(rs, J));
        perp1.push_back(orthogonal_complement(rs, U.back()));
        clos.push_back(orthogonal_closure(rs, U.back()));
    }
    bool oracle = rs.order() <= kOracleLimit;
    if (!oracle) r.skipped.push_back("commutation oracle (|W| too large)");
    for (std::size_t a = 0; a < subsets.size(); ++a) {
        std::string tag = subset_tag(subsets[a]) + ": ";
        r.require(U[a].roots.subset_of(clos[a].roots), tag + "not extensive");
        r.require(orthogonal_complement(rs, clos[a]) == perp1[a], tag + "perp differs from perp perp perp");
        r.require(orthogonal_closure(rs, clos[a]) == clos[a], tag + "closure not idempotent");
        if (oracle) r.require(brute_orthogonal_complement(rs, U[a]) == perp1[a], tag + "oracle disagrees on the complement");
        // any inclusion of parabolics is conjugate to an inclusion of standard ones
        for (std::size_t b = 0; b < subsets.size(); ++b)
            if ((a & b) == a && a != b) {
                r.require(perp1[b].roots.subset_of(perp1[a].roots), tag + "not antitone against " + subset_tag(subsets[b]));
                r.require(clos[a].roots.subset_of(clos[b].roots), tag + "closure not monotone against " + subset_tag(subsets[b]));
            }
    }
    for (auto& c : parabolic_concepts(cat)) {
        std::string tag = "concept <" + cat.at(c.left).label + "|" + cat.at(c.right).label + ">: ";
        r.require(complement_shape(cat, c.left) == c.right && complement_shape(cat, c.right) == c.left, tag + "not mutual complements");
        r.require(closure_shape(cat, c.left) == c.left && closure_shape(cat, c.right) == c.right, tag + "not closed");
    }
    return r;
}

CheckReport suite_howlett(const ShapeCatalog& cat) {
    const RootSystem& rs = cat.root_system();
    CheckReport r;
    r.name = rs.label().str() + " howlett";
    const Perm id = rs.identity();
    GroupSet W;
    bool oracle = rs.order() <= kOracleLimit;
    if (oracle)
        W = brute_group(rs);
    else
        r.skipped.push_back("brute-force normalizer (|W| too large)");
    for (auto& J : all_subsets(rs.rank())) {
        std::string tag = subset_tag(J) + ": ";
        Subsystem P = standard_subsystem(rs, J);
        Stabilizer st = normalizer(rs, P);
        if (oracle) {
            GroupSet bn = brute_normalizer(rs, W, P);
            r.require(bn.size() == st.order, tag + "stabilizer order differs from the oracle");
            bool all = true;
            for (auto& g : st.gens) all = all && bn.contains(g);
            r.require(all, tag + "a stabilizer generator is not in the oracle normalizer");
        }
        if (st.order > kEnumerationLimit) {
            r.skipped.push_back(tag + "normalizer of order " + std::to_string(st.order) + " not enumerated");
            continue;
        }
        GroupSet N = generate(st.gens, id, kEnumerationLimit);
        GroupSet H = howlett_complement(rs, P, N);
        std::vector<Perm> Pel = elements_of(rs, P);
        r.require(N.size() == Pel.size() * H.size(), tag + "|N| != |P||H|");
        int meet = 0;
        for (auto& h : H.elements) meet += in_subgroup(rs, h, P);
        r.require(meet == 1, tag + "P and H meet nontrivially");
        bool keeps = true, lengths = true;
        // conjugation by h permutes the simple roots of P, so checking the simple reflections suffices
        // for length preservation once |P||H| gets large
        std::vector<Perm> ws = Pel.size() * H.size() <= 200'000 ? Pel : simple_reflections_of(rs, P);
        for (auto& h : H.elements) {
            keeps = keeps && apply_set(h, P.positive) == P.positive;
            Perm hi = inverse(h);
            for (auto& w : ws)
                lengths = lengths && relative_length(rs, compose(compose(hi, w), h), P.positive) ==
                                         relative_length(rs, w, P.positive);
        }
        r.require(keeps, tag + "H does not preserve the positive roots of P");
        r.require(lengths, tag + "H does not preserve relative length");
    }
    return r;
}

CheckReport suite_goursat(const ShapeCatalog& cat, const std::vector<Decomposition>& decs) {
    const RootSystem& rs = cat.root_system();
    CheckReport r;
    r.name = rs.label().str() + " goursat";
    const Perm id = rs.identity();
    for (const Decomposition& d : decs) {
        std::string tag = "shape " + std::to_string(d.shape_index) + " (" + d.P_label + "): ";
        CheckReport t = verify_decomposition(rs, d);
        for (auto& f : t.failures) r.require(false, tag + f);
        r.checked += t.checked;
        if (rs.combinatorial()) continue; // dihedral groups carry no coordinates
        if (d.N_order > kEnumerationLimit / 4) {
            r.skipped.push_back(tag + "sections of a normalizer of order " + std::to_string(d.N_order));
            continue;
        }
        GroupSet N = generate(d.N_gens, id, kEnumerationLimit);
        const Mat& G = rs.gram();
        Subspace X = fixed_space(rs, d.P), Y = fixed_space(rs, d.Q);
        Subspace Xp = perp(X, G);
        GoursatSections s = goursat_sections(rs, N, Xp, X, d.D.elements);
        Restriction R1(rs, Xp), R2(rs, X);
        std::vector<Perm> p2, q2;
        for (auto& w : elements_of(rs, d.P)) p2.push_back(R1.restrict(w));
        for (auto& w : elements_of(rs, d.Q)) q2.push_back(R2.restrict(w));
        std::sort(p2.begin(), p2.end());
        std::sort(q2.begin(), q2.end());
        r.require(s.G2 == p2, tag + "G2 != P");
        r.require(s.H2 == q2, tag + "H2 != Q");
        r.require(s.theta_well_defined && s.is_graph, tag + "N is not the graph of a section isomorphism");
        r.require(s.complements_ok && s.theta0_isomorphism, tag + "D does not give the isomorphism theta0");
        // A and B as the kernels of the actions of D on Y-perp and on X cap Y
        Restriction Ry(rs, d.split.y_perp), Rc(rs, d.split.x_cap_y);
        std::vector<Perm> A, B;
        for (auto& x : d.D.elements) {
            if (Ry.restrict(x) == Ry.identity()) A.push_back(x);
            if (Rc.restrict(x) == Rc.identity()) B.push_back(x);
        }
        r.require(A == d.A.elements, tag + "A != Z_D(Y-perp)");
        r.require(B == d.B.elements, tag + "B != Z_D(X cap Y)");
        // D = P0 cap Q0 with P0, Q0 the Howlett complements of Q and P in N
        GroupSet P0 = howlett_complement(rs, d.Q, N), Q0 = howlett_complement(rs, d.P, N);
        std::vector<Perm> meet;
        std::set_intersection(P0.elements.begin(), P0.elements.end(), Q0.elements.begin(), Q0.elements.end(),
                              std::back_inserter(meet));
        r.require(meet == d.D.elements, tag + "D != P0 cap Q0");
        (void)Y;
    }
    return r;
}

CheckReport suite_observations(const ShapeCatalog& cat, const std::vector<Decomposition>& decs) {
    const RootSystem& rs = cat.root_system();
    CheckReport r = closure_involution_checks(cat, decs);
    r.name = rs.label().str() + " section8";
    Perm w0 = longest_element(rs, cat.at(cat.size()).rep);
    bool minus_one = true;
    for (int i = 0; i < rs.num_roots(); ++i) minus_one = minus_one && img(w0, i) == rs.neg(i);
    bool small = rs.order() <= kOracleLimit;
    GroupSet W;
    if (small)
        W = brute_group(rs);
    else
        r.skipped.push_back("centralizer orders (|W| too large)");
    for (auto& inv : involution_classes(cat)) {
        std::string tag = "involution of shape " + std::to_string(inv.shape) + ": ";
        Subsystem F = fixed_parabolic(rs, inv.u);
        if (!rs.combinatorial()) {
            int fix = fixed_space(rs, F).dim();
            r.require(inv.degree + fix == rs.rank(), tag + "degree + dim Fix != rank");
        }
        if (minus_one) {
            Perm mu = compose(inv.u, w0);
            r.require(fixed_parabolic(rs, mu) == orthogonal_complement(rs, F), tag + "Fix(-u) does not give the complement");
        }
        if (small) {
            CheckReport c = centralizer_equals_normalizer(rs, inv.u, W);
            for (auto& f : c.failures) r.require(false, tag + f);
            r.checked += c.checked;
        }
    }
    return r;
}

CheckReport suite_fixtures(const ShapeCatalog& cat, const std::vector<TableRow>& rows) {
    CheckReport r;
    const RootSystem& rs = cat.root_system();
    r.name = rs.label().str() + " fixtures";
    TableFixture fx = load_fixture(rs.label().str());
    FixtureReport rep = diff(fx, cat, rows);
    for (auto& s : rep.structural) r.require(false, s);
    for (auto& m : rep.mismatches) r.require(false, m.str());
    r.checked += rep.rows;
    return r;
}

} // namespace coxnorm
