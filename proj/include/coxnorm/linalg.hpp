#pragma once

#include "coxnorm/scalar.hpp"

#include <vector>

namespace coxnorm {

// Row-reduces in place; returns pivot columns.  Zero rows are removed.
std::vector<int> rref(Mat& rows, int ncols);

// Basis of {x : A x = 0}.
Mat nullspace(const Mat& A, int ncols);

// A subspace of the ambient space in simple-root coordinates.  The basis is kept in reduced echelon
// form, so equal subspaces have identical bases.  Dihedral groups carry only the dimension.
struct Subspace {
    int ambient = 0;
    Mat basis;
    bool symbolic = false;
    int symbolic_dim = 0;

    int dim() const { return symbolic ? symbolic_dim : (int)basis.size(); }
    bool contains(const Vec& v) const;
    bool operator==(const Subspace& o) const;

    static Subspace span(const std::vector<Vec>& vectors, int ambient);
    static Subspace full(int ambient);
    static Subspace zero(int ambient);
};

// Orthogonal complement with respect to the Gram form.
Subspace perp(const Subspace& S, const Mat& gram);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b, const Mat& gram);

Vec mat_vec(const Mat& A, const Vec& v);
Mat mat_mul(const Mat& A, const Mat& B);
Mat transpose(const Mat& A);
// Solves A x = b for square invertible A.
Vec solve(Mat A, Vec b);
Mat invert(const Mat& A);

} // namespace coxnorm
