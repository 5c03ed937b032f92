#include "coxnorm/involution.hpp"

#include "coxnorm/galois.hpp"
#include "coxnorm/normalizer.hpp"

#include <map>
#include <stdexcept>

namespace coxnorm {

Subsystem fixed_parabolic(const RootSystem& rs, const Perm& u) {
    if (!is_identity(compose(u, u))) throw std::invalid_argument("fixed_parabolic: element is not an involution");
    RootSet s;
    for (int i = 0; i < rs.num_roots(); ++i)
        if (img(u, i) == rs.neg(i)) s.set(i);
    return subsystem_of(rs, s);
}

int involution_degree(const RootSystem& rs, const Perm& u) {
    return root_span(rs, fixed_parabolic(rs, u).roots).dim();
}

bool is_involution_shape(const ShapeCatalog& cat, int index) {
    const RootSystem& rs = cat.root_system();
    const auto& J = cat.at(index).rep;
    Perm w0 = longest_element(rs, J);
    Subsystem P = cat.standard(index);
    bool ok = true;
    for (int g : P.simple) ok = ok && img(w0, g) == rs.neg(g);
    return ok;
}

std::vector<int> mark_involution_shapes(const ShapeCatalog& cat) {
    std::vector<int> out;
    for (int i = 1; i <= cat.size(); ++i)
        if (is_involution_shape(cat, i)) out.push_back(i);
    return out;
}

std::vector<InvolutionRecord> involution_classes(const ShapeCatalog& cat) {
    const RootSystem& rs = cat.root_system();
    std::vector<InvolutionRecord> out;
    for (int i : mark_involution_shapes(cat)) {
        InvolutionRecord r;
        r.u = longest_element(rs, cat.at(i).rep);
        r.degree = cat.at(i).rank;
        r.shape = i;
        r.centralizer_order = normalizer(rs, cat.standard(i)).order;
        out.push_back(r);
    }
    return out;
}

CheckReport centralizer_equals_normalizer(const RootSystem& rs, const Perm& u, const GroupSet& W) {
    CheckReport r;
    r.name = "involution";
    Subsystem P = fixed_parabolic(rs, u);
    std::size_t cnt = 0;
    for (const Perm& w : W.elements) {
        bool centralizes = compose(w, u) == compose(u, w);
        bool normalizes_P = normalizes(w, P);
        if (centralizes != normalizes_P) {
            r.require(false, centralizes ? "centralizing element outside N(P)" : "element of N(P) not centralizing");
            break;
        }
        cnt += centralizes;
    }
    r.require(cnt == normalizer(rs, P).order, "centralizer order differs from the stabilizer computation");
    return r;
}

CheckReport closure_involution_checks(const ShapeCatalog& cat, const std::vector<Decomposition>& decs) {
    const RootSystem& rs = cat.root_system();
    CheckReport r;
    r.name = rs.label().str() + " observations";
    Perm w0 = longest_element(rs, cat.at(cat.size()).rep);
    bool minus_one = true;
    for (int i = 0; i < rs.num_roots(); ++i) minus_one = minus_one && img(w0, i) == rs.neg(i);
    std::map<int, int> per_closure;
    for (const Decomposition& d : decs) {
        std::string tag = "shape " + std::to_string(d.shape_index) + ": ";
        bool closed = d.closure_shape == d.shape_index;
        r.require(orthogonal_closure(rs, d.pq_closure).roots == rs.all_roots(),
                  tag + "orthogonal closure of the parabolic closure of PQ is not W");
        if (closed) {
            r.require(d.A.size() == 1, tag + "closed but A is nontrivial");
            r.require(d.C.size() == 1 && d.D.size() == d.B.size(), tag + "closed but D != B");
            if (minus_one) r.require(d.pq_closure_is_W, tag + "w0 central and closed, but PQ has smaller rank");
        }
        if (d.involution_centralizer) {
            ++per_closure[d.closure_shape];
            if (minus_one) {
                r.require(closed, tag + "involution centralizer that is not orthogonally closed");
                r.require(is_involution_shape(cat, d.q_shape), tag + "complement is not an involution centralizer");
            }
            Perm wc = longest_element(rs, cat.at(d.closure_shape).rep);
            r.require(cat.shape_of(fixed_parabolic(rs, wc)) == d.shape_index,
                      tag + "longest element not conjugate to that of the orthogonal closure");
        }
        if (rs.label().family == 'B')
            r.require(d.involution_centralizer == closed, tag + "type B: involution centralizer iff closed fails");
    }
    for (auto [c, k] : per_closure)
        r.require(k <= 1, "closure group " + std::to_string(c) + " has " + std::to_string(k) + " involution centralizers");
    return r;
}

} // namespace coxnorm
