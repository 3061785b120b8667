#pragma once

#include <optional>
#include <vector>

#include "cobalg/field.hpp"

namespace cobalg {

using Vector = std::vector<Scalar>;
using Matrix = std::vector<Vector>;  // row major

Vector zero_vector(const FieldPtr& f, size_t n);
Matrix identity_matrix(const FieldPtr& f, size_t n);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Vector mat_vec(const Matrix& a, const Vector& x);
Matrix transpose(const Matrix& a);
Scalar trace(const Matrix& a);

// In-place Gauss-Jordan; returns pivot columns. Deterministic (first nonzero
// pivot in column order).
std::vector<size_t> row_reduce(Matrix& m);

size_t rank(Matrix m);

// Basis of the right null space {x : m x = 0}.
std::vector<Vector> kernel_basis(Matrix m);

// One solution of m x = b, if any.
std::optional<Vector> solve(Matrix m, Vector b);

// Inverse of a square matrix, if invertible.
std::optional<Matrix> inverse(Matrix m);

// Reduce v against a row-reduced basis (rows with pivots); returns the
// residue. Used for membership tests in subspaces.
Vector reduce_against(const Matrix& reduced_rows, const std::vector<size_t>& pivots,
                      Vector v);

// Row space basis in reduced echelon form together with pivot columns.
struct Echelon {
    Matrix rows;
    std::vector<size_t> pivots;
};
Echelon echelon_form(Matrix m);

bool in_row_space(const Echelon& e, const Vector& v);

}  // namespace cobalg
