#include "coxnorm/repr.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace coxnorm {

std::string role_name(Role r) {
    switch (r) {
    case Role::X_PERP: return "x_perp";
    case Role::X_CAP_Y: return "x_cap_y";
    case Role::Y_PERP: return "y_perp";
    }
    return "";
}

InvariantSplit invariant_split(const RootSystem& rs, const Subsystem& P, const Subsystem& Q) {
    InvariantSplit s;
    s.x_perp = root_span(rs, P.roots);
    s.y_perp = root_span(rs, Q.roots);
    Subspace both = root_span(rs, P.roots | Q.roots);
    s.x_cap_y = rs.combinatorial() ? perp(both, {}) : perp(both, rs.gram());
    return s;
}

// ------------------------------------------------------------------ Restriction

Restriction::Restriction(const RootSystem& rs, const Subspace& S) : rs_(rs), S_(S) {
    if (S.symbolic) {
        if (S.dim() != 0) throw std::logic_error("restriction needs coordinates; dihedral groups have none");
        psi_of_root_.assign(rs.num_roots(), -1);
        return;
    }
    dim_ = S.dim();
    psi_of_root_.assign(rs.num_roots(), -1);
    if (dim_ == 0) return;
    const Mat& G = rs.gram();
    Mat BG = mat_mul(S.basis, G);
    form_ = mat_mul(BG, transpose(S.basis));
    Mat K = mat_mul(invert(form_), BG);
    std::unordered_map<std::string, int> index;
    for (int r = 0; r < rs.num_roots(); ++r) {
        Vec c = mat_vec(K, rs.root(r));
        bool zero = std::all_of(c.begin(), c.end(), [](const Scalar& x) { return x.is_zero(); });
        if (zero) continue;
        auto [it, fresh] = index.emplace(key(c), (int)psi_.size());
        if (fresh) {
            psi_.push_back(c);
            rep_root_.push_back(r);
            std::vector<double> a;
            for (auto& x : c) a.push_back(x.to_double());
            approx_.push_back(std::move(a));
        }
        psi_of_root_[r] = it->second;
    }
    if (psi_.size() > 255) throw std::logic_error("too many root projections");
}

Scalar Restriction::inner(const Vec& a, const Vec& b) const {
    Scalar s(0);
    for (int i = 0; i < dim_; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < dim_; ++j)
            if (!b[j].is_zero() && !form_[i][j].is_zero()) s += a[i] * form_[i][j] * b[j];
    }
    return s;
}

bool Restriction::leaves_invariant(const Perm& w) const {
    if (dim_ == 0) return true;
    for (int k = 0; k < size(); ++k)
        if (psi_of_root_[img(w, rep_root_[k])] < 0) return false;
    for (auto& b : S_.basis)
        if (!S_.contains(rs_.apply(b, w))) return false;
    return true;
}

Perm Restriction::restrict(const Perm& w) const {
    Perm out(psi_.size(), '\0');
    for (int k = 0; k < size(); ++k) {
        int t = psi_of_root_[img(w, rep_root_[k])];
        if (t < 0) throw std::invalid_argument("subspace is not invariant under the element");
        out[k] = static_cast<char>(t);
    }
    return out;
}

Perm Restriction::identity() const {
    Perm p(psi_.size(), '\0');
    for (int k = 0; k < size(); ++k) p[k] = static_cast<char>(k);
    return p;
}

Perm Restriction::minus_one() const {
    Perm p(psi_.size(), '\0');
    for (int k = 0; k < size(); ++k) p[k] = static_cast<char>(psi_of_root_[rs_.neg(rep_root_[k])]);
    return p;
}

Vec Restriction::reflection_root(const Perm& g) const {
    int first = -1;
    for (int k = 0; k < size() && first < 0; ++k)
        if (img(g, k) != k) first = k;
    if (first < 0 || img(g, img(g, first)) != first) return {};
    // cheap floating-point screen: all displacements must be parallel
    std::vector<double> d0(dim_);
    double scale = 0;
    for (int i = 0; i < dim_; ++i) {
        d0[i] = approx_[first][i] - approx_[img(g, first)][i];
        scale = std::max(scale, std::abs(d0[i]));
    }
    for (int k = 0; k < size(); ++k) {
        int t = img(g, k);
        if (t == k) continue;
        if (img(g, t) != k) return {};
        std::vector<double> d(dim_);
        for (int i = 0; i < dim_; ++i) d[i] = approx_[k][i] - approx_[t][i];
        for (int i = 0; i < dim_; ++i)
            for (int j = i + 1; j < dim_; ++j)
                if (std::abs(d[i] * d0[j] - d[j] * d0[i]) > 1e-7 * (1 + scale * scale)) return {};
    }
    Vec beta(dim_);
    for (int i = 0; i < dim_; ++i) beta[i] = psi_[first][i] - psi_[img(g, first)][i];
    Scalar bb = inner(beta, beta);
    for (int k = 0; k < size(); ++k) {
        Scalar f = Scalar(2) * inner(psi_[k], beta) / bb;
        const Vec& target = psi_[img(g, k)];
        for (int i = 0; i < dim_; ++i)
            if (psi_[k][i] - f * beta[i] != target[i]) return {};
    }
    return beta;
}

Mat Restriction::matrix(const Perm& g) const {
    // pick independent projections, then solve for the matrix in the basis of S
    std::vector<int> pick;
    Mat rows;
    for (int k = 0; k < size() && (int)pick.size() < dim_; ++k) {
        Mat trial = rows;
        trial.push_back(psi_[k]);
        if ((int)rref(trial, dim_).size() > (int)rows.size()) {
            rows.push_back(psi_[k]);
            pick.push_back(k);
        }
    }
    Mat Bcols(dim_, Vec(dim_)), Icols(dim_, Vec(dim_));
    for (int c = 0; c < dim_; ++c)
        for (int i = 0; i < dim_; ++i) {
            Bcols[i][c] = psi_[pick[c]][i];
            Icols[i][c] = psi_[img(g, pick[c])][i];
        }
    return mat_mul(Icols, invert(Bcols));
}

// ------------------------------------------------------------------ image groups

namespace {

Scalar functional(const std::vector<long>& w, const Vec& v) {
    Scalar s(0);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) s += Scalar(w[i]) * v[i];
    return s;
}

std::vector<long> generic_weights(const std::vector<Vec>& roots, int dim) {
    std::mt19937 rng(271828);
    std::vector<long> w(dim);
    for (int i = 0; i < dim; ++i) w[i] = 1 + 13 * i + 7 * i * i;
    for (int attempt = 0; attempt < 200; ++attempt) {
        bool ok = true;
        for (auto& r : roots)
            if (functional(w, r).is_zero()) {
                ok = false;
                break;
            }
        if (ok) return w;
        for (auto& x : w) x = (long)(rng() % 2001) - 1000;
    }
    throw std::logic_error("no generic functional found");
}

Scalar form_inner(const Mat& M, const Vec& a, const Vec& b) {
    Scalar s(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero() && !M[i][j].is_zero()) s += a[i] * M[i][j] * b[j];
    }
    return s;
}

// simple roots among reflections whose roots are all made positive by w
std::vector<int> simple_indices(const std::vector<Vec>& roots, const Mat& form, const std::vector<long>& w) {
    int k = (int)roots.size();
    std::vector<Scalar> f(k), norm(k);
    for (int i = 0; i < k; ++i) {
        f[i] = functional(w, roots[i]);
        norm[i] = form_inner(form, roots[i], roots[i]);
    }
    std::vector<int> simple;
    for (int g = 0; g < k; ++g) {
        int flips = 0;
        for (int b = 0; b < k && flips < 2; ++b) {
            Scalar img = f[b] - Scalar(2) * form_inner(form, roots[b], roots[g]) / norm[g] * f[g];
            if (img.sign() < 0) ++flips;
        }
        if (flips == 1) simple.push_back(g);
    }
    return simple;
}

Vec reflect_in(const Mat& form, const Vec& v, const Vec& beta) {
    Scalar f = Scalar(2) * form_inner(form, v, beta) / form_inner(form, beta, beta);
    Vec out = v;
    for (std::size_t i = 0; i < v.size(); ++i) out[i] -= f * beta[i];
    return out;
}

} // namespace

DiagramType recognize_diagram(const std::vector<Vec>& given, const Mat& form) {
    if (given.empty()) return {};
    int dim = (int)given[0].size();
    // close the roots under their reflections (lines only; rescale to a canonical representative)
    auto canon = [&](Vec v) {
        int p = 0;
        while (v[p].is_zero()) ++p;
        Scalar inv = v[p].inverse();
        for (auto& x : v) x *= inv;
        return v;
    };
    std::vector<Vec> roots;
    std::set<std::string> seen;
    auto add = [&](const Vec& v) {
        Vec c = canon(v);
        if (seen.insert(key(c)).second) roots.push_back(c);
    };
    for (auto& r : given) add(r);
    for (std::size_t a = 0; a < roots.size(); ++a)
        for (std::size_t b = 0; b < roots.size(); ++b) {
            add(reflect_in(form, roots[b], roots[a]));
            if (roots.size() > 2000) throw std::invalid_argument("reflections generate an infinite group");
        }
    auto w = generic_weights(roots, dim);
    for (auto& r : roots)
        if (functional(w, r).sign() < 0)
            for (auto& x : r) x = -x;
    auto simple = simple_indices(roots, form, w);
    int k = (int)simple.size();
    std::vector<std::vector<int>> M(k, std::vector<int>(k, 1));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const Vec& a = roots[simple[i]];
            const Vec& b = roots[simple[j]];
            // cos^2 of the angle pi/m
            Scalar c2 = form_inner(form, a, b) * form_inner(form, a, b) /
                        (form_inner(form, a, a) * form_inner(form, b, b));
            double c = std::sqrt(c2.to_double());
            int m = (int)std::lround(M_PI / std::acos(std::min(1.0, c)));
            M[i][j] = M[j][i] = m;
        }
    return classify_coxeter_matrix(M);
}

ImageGroup image_group(const Restriction& S, const std::vector<Perm>& gens) {
    ImageGroup out;
    Perm id = S.identity();
    GroupSet G = generate(gens, id);
    out.elements = G.elements;
    for (const Perm& e : out.elements) {
        if (e == id || compose(e, e) != id) continue;
        Vec beta = S.reflection_root(e);
        if (beta.empty()) continue;
        out.reflections.push_back(e);
        out.roots.push_back(beta);
    }
    if (!out.reflections.empty()) {
        auto w = generic_weights(out.roots, S.dim());
        for (auto& r : out.roots)
            if (functional(w, r).sign() < 0)
                for (auto& x : r) x = -x;
        out.simple = simple_indices(out.roots, S.form(), w);
        int k = (int)out.simple.size();
        std::vector<std::vector<int>> M(k, std::vector<int>(k, 1));
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                M[i][j] = M[j][i] =
                    element_order(compose(out.reflections[out.simple[i]], out.reflections[out.simple[j]]));
        out.type = classify_coxeter_matrix(M);
    }
    out.reflection_order = out.type.order();
    out.minus_one = out.elements.size() == 2 && S.dim() >= 2 && G.contains(S.minus_one());
    if (out.reflection_order == out.order()) return out;

    std::vector<Perm> rgens;
    for (int s : out.simple) rgens.push_back(out.reflections[s]);
    GroupSet R = generate(rgens, id);
    if (R.size() != out.reflection_order) throw std::logic_error("reflection subgroup has unexpected order");
    std::uint64_t k = out.order() / R.size();
    bool elementary = true;
    for (auto& g : gens) {
        if (!R.contains(compose(g, g))) elementary = false;
        for (auto& h : gens)
            if (!R.contains(compose(compose(g, h), inverse(compose(h, g))))) elementary = false;
    }
    if (elementary) {
        int e = 0;
        while ((std::uint64_t(1) << e) < k) ++e;
        out.quotient = e == 1 ? "2" : e == 2 ? "2*2" : "2^" + std::to_string(e);
        return out;
    }
    std::uint64_t best = 1;
    for (const Perm& g : out.elements) {
        Perm x = g;
        std::uint64_t j = 1;
        while (!R.contains(x)) {
            x = compose(x, g);
            ++j;
        }
        best = std::max(best, j);
    }
    if (best == k) {
        out.quotient = std::to_string(k);
    } else if (k % 2 == 0 && best == k / 2) {
        // dihedral quotient
        out.quotient = DiagramType{{make_component('I', 2, (int)(k / 2))}}.str();
    } else {
        out.quotient = "G" + std::to_string(k);
    }
    return out;
}

// ------------------------------------------------------------------ action records

std::string ActionRecord::cell(bool with_nodes) const {
    std::string s;
    if (classification == "trivial")
        s = "";
    else if (classification == "minus-identity")
        s = "-1";
    else if (classification == "reflection")
        s = diagram.str();
    else
        s = "^" + quotient + "(" + diagram.str() + ")";
    if (with_nodes) s += "{" + std::to_string(white) + "}";
    return s;
}

ActionRecord describe_action(const RootSystem& rs, Role role, const Subspace& S, const Subsystem* base,
                             const std::vector<Perm>& extra) {
    ActionRecord rec;
    rec.role = role;
    rec.subgroup = role == Role::X_PERP ? "PD" : role == Role::Y_PERP ? "QD" : "D";
    rec.dim = S.dim();
    rec.classification = "trivial";
    if (rec.dim == 0) return rec;
    std::vector<Perm> ext;
    for (auto& e : extra)
        if (!is_identity(e)) ext.push_back(e);
    bool has_base = base && !base->simple.empty();
    if (ext.empty()) {
        if (has_base) {
            rec.classification = "reflection";
            rec.diagram = subsystem_type(rs, *base);
        }
        return rec;
    }
    Restriction R(rs, S);
    std::vector<Perm> gens;
    std::set<Perm> base_refl;
    if (has_base) {
        for (auto& s : simple_reflections_of(rs, *base)) gens.push_back(R.restrict(s));
        for (auto& s : reflections_of(rs, *base)) base_refl.insert(R.restrict(s));
    }
    for (auto& e : ext) gens.push_back(R.restrict(e));
    ImageGroup G = image_group(R, gens);
    if (G.order() == 1) return rec;
    rec.diagram = G.type;
    for (int s : G.simple) rec.white += !base_refl.count(G.reflections[s]);
    rec.quotient = G.quotient;
    if (G.minus_one) {
        rec.classification = "minus-identity";
        rec.marker = "HEART";
        rec.white = 0;
    } else if (G.is_reflection_group()) {
        rec.classification = "reflection";
    } else if (rec.white == 0) {
        rec.classification = "diagram-automorphism";
    } else {
        rec.classification = "mixed";
    }
    return rec;
}

// ------------------------------------------------------------------ subgroup names

namespace {

std::string abstract_name(const std::vector<Perm>& H) {
    std::size_t n = H.size();
    int involutions = 0, max_order = 1;
    for (auto& h : H) {
        int o = element_order(h);
        involutions += o == 2;
        max_order = std::max(max_order, o);
    }
    if (max_order <= 2) {
        int k = 0;
        while ((std::size_t(1) << k) < n) ++k;
        return DiagramType{std::vector<Component>(k, Component{'A', 1, 0})}.str();
    }
    if ((std::size_t)max_order * 2 == n && (std::size_t)involutions >= n / 2)
        return DiagramType{{make_component('I', 2, max_order)}}.str();
    if (n == 24 && max_order == 4 && involutions == 9) return "A3";
    return "G" + std::to_string(n);
}

struct SpaceView {
    bool faithful = false;
    bool reflection = false;
    std::string type;
    std::set<int> reflecting; // members of H acting as reflections
    bool any_reflection = false;
    bool minus_one = false;
    bool automorphisms_only = false; // faithful and no element acts as a reflection
};

SpaceView view(const RootSystem& rs, const Subspace& S, const std::vector<Perm>& H) {
    SpaceView v;
    if (S.dim() == 0) return v;
    Restriction R(rs, S);
    std::vector<Perm> imgs;
    for (auto& h : H) imgs.push_back(R.restrict(h));
    std::set<Perm> distinct(imgs.begin(), imgs.end());
    v.faithful = distinct.size() == H.size();
    for (std::size_t k = 0; k < H.size(); ++k)
        if (!R.reflection_root(imgs[k]).empty()) {
            v.reflecting.insert((int)k);
            v.any_reflection = true;
        }
    v.minus_one = H.size() == 2 && S.dim() >= 2 && distinct.count(R.minus_one());
    v.automorphisms_only = v.faithful && !v.any_reflection;
    if (!v.faithful) return v;
    ImageGroup G = image_group(R, imgs);
    v.reflection = G.is_reflection_group();
    v.type = G.type.str();
    return v;
}

} // namespace

static bool is_abelian(const std::vector<Perm>& H) {
    for (auto& a : H)
        for (auto& b : H)
            if (compose(a, b) != compose(b, a)) return false;
    return true;
}

SubgroupName name_subgroup(const RootSystem& rs, const InvariantSplit& split, const std::vector<Perm>& H,
                           const std::vector<Perm>* AB) {
    SubgroupName out;
    if (H.size() <= 1) return out;
    if (rs.combinatorial()) throw std::logic_error("dihedral complements are trivial");
    const Subspace* spaces[3] = {&split.x_cap_y, &split.x_perp, &split.y_perp};
    SpaceView views[3];
    std::vector<int> refl;
    for (int s = 0; s < 3; ++s) {
        views[s] = view(rs, *spaces[s], H);
        if (views[s].reflection) refl.push_back(s);
    }
    if (!refl.empty()) {
        out.type = views[refl[0]].type;
        for (std::size_t k = 1; k < refl.size(); ++k) {
            if (views[refl[k]].type != out.type)
                out.marker = "SPADE";
            else if (views[refl[k]].reflecting != views[refl[0]].reflecting && out.marker.empty())
                out.marker = "CLUB";
        }
        // an involution that reflects elsewhere but needs the rest of AB to act as a reflection group on X-perp
        if (out.marker.empty() && H.size() == 2 && AB && AB->size() > H.size() && views[1].faithful &&
            !views[1].reflection && view(rs, *spaces[1], *AB).reflection)
            out.marker = "DIAMOND";
        // graph automorphisms of X-perp only count when H is not abelian (the E8 case)
        if (out.marker.empty() && H.size() > 2 && views[1].automorphisms_only && !is_abelian(H)) out.marker = "HEART";
        return out;
    }
    out.type = abstract_name(H);
    if (H.size() == 2) {
        out.marker = "HEART";
        if (AB && AB->size() > H.size())
            for (int s = 0; s < 3; ++s)
                if (view(rs, *spaces[s], *AB).reflection) out.marker = "DIAMOND";
        return out;
    }
    bool any = false;
    for (auto& v : views) any = any || v.any_reflection;
    out.marker = any ? "SPADE" : "HEART";
    return out;
}

} // namespace coxnorm
