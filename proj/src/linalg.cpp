#include "coxnorm/linalg.hpp"

#include <stdexcept>

namespace coxnorm {

std::vector<int> rref(Mat& rows, int ncols) {
    std::vector<int> pivots;
    std::size_t r = 0;
    for (int c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        Scalar inv = rows[r][c].inverse();
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            Scalar f = rows[i][c];
            for (std::size_t k = c; k < rows[r].size(); ++k)
                if (!rows[r][k].is_zero()) rows[i][k] -= f * rows[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

Mat nullspace(const Mat& A, int ncols) {
    Mat R = A;
    auto piv = rref(R, ncols);
    std::vector<int> is_pivot(ncols, -1);
    for (std::size_t i = 0; i < piv.size(); ++i) is_pivot[piv[i]] = (int)i;
    Mat out;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[f] >= 0) continue;
        Vec x(ncols, Scalar(0));
        x[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = -R[i][f];
        out.push_back(std::move(x));
    }
    return out;
}

bool Subspace::contains(const Vec& v) const {
    if (symbolic) throw std::logic_error("dihedral subspaces carry no coordinates");
    // with an echelon basis the coordinates are the pivot entries
    Vec r = v;
    for (auto& b : basis) {
        int p = 0;
        while (b[p].is_zero()) ++p;
        if (r[p].is_zero()) continue;
        Scalar f = r[p];
        for (int k = 0; k < ambient; ++k)
            if (!b[k].is_zero()) r[k] -= f * b[k];
    }
    for (auto& x : r)
        if (!x.is_zero()) return false;
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    if (symbolic || o.symbolic) return symbolic == o.symbolic && dim() == o.dim() && ambient == o.ambient;
    return ambient == o.ambient && basis == o.basis;
}

Subspace Subspace::span(const std::vector<Vec>& vectors, int ambient) {
    Subspace s;
    s.ambient = ambient;
    s.basis = vectors;
    rref(s.basis, ambient);
    return s;
}

Subspace Subspace::full(int ambient) {
    std::vector<Vec> e;
    for (int i = 0; i < ambient; ++i) {
        Vec v(ambient, Scalar(0));
        v[i] = 1;
        e.push_back(v);
    }
    return span(e, ambient);
}

Subspace Subspace::zero(int ambient) {
    Subspace s;
    s.ambient = ambient;
    return s;
}

Subspace perp(const Subspace& S, const Mat& gram) {
    if (S.symbolic) {
        Subspace t = S;
        t.symbolic_dim = S.ambient - S.symbolic_dim;
        return t;
    }
    Mat A;
    for (auto& b : S.basis) A.push_back(mat_vec(gram, b)); // gram symmetric: row b^T G
    return Subspace::span(nullspace(A, S.ambient), S.ambient);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    std::vector<Vec> v = a.basis;
    v.insert(v.end(), b.basis.begin(), b.basis.end());
    return Subspace::span(v, a.ambient);
}

Subspace intersect(const Subspace& a, const Subspace& b, const Mat& gram) {
    return perp(sum(perp(a, gram), perp(b, gram)), gram);
}

Vec mat_vec(const Mat& A, const Vec& v) {
    Vec out(A.size(), Scalar(0));
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!A[i][j].is_zero() && !v[j].is_zero()) out[i] += A[i][j] * v[j];
    return out;
}

Mat mat_mul(const Mat& A, const Mat& B) {
    if (A.empty()) return {};
    std::size_t n = A.size(), k = B.size(), m = B.empty() ? 0 : B[0].size();
    Mat C(n, Vec(m, Scalar(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (A[i][t].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (!B[t][j].is_zero()) C[i][j] += A[i][t] * B[t][j];
        }
    return C;
}

Mat transpose(const Mat& A) {
    if (A.empty()) return {};
    Mat T(A[0].size(), Vec(A.size()));
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < A[0].size(); ++j) T[j][i] = A[i][j];
    return T;
}

Vec solve(Mat A, Vec b) {
    int n = (int)A.size();
    for (int i = 0; i < n; ++i) A[i].push_back(b[i]);
    auto piv = rref(A, n);
    if ((int)piv.size() != n) throw std::domain_error("solve: singular matrix");
    Vec x(n);
    for (int i = 0; i < n; ++i) x[i] = A[i][n];
    return x;
}

Mat invert(const Mat& A) {
    int n = (int)A.size();
    Mat M = A;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M[i].push_back(i == j ? Scalar(1) : Scalar(0));
    auto piv = rref(M, n);
    if ((int)piv.size() != n) throw std::domain_error("invert: singular matrix");
    Mat out(n, Vec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i][j] = M[i][n + j];
    return out;
}

} // namespace coxnorm
