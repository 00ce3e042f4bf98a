#pragma once

#include "widthlab/matrix.hpp"

#include <utility>

namespace widthlab::linalg {

/// Thin SVD, A = U * diag(s) * V^T, with s nonincreasing.
///
/// Computed by row sorting, Householder QR with column pivoting and
/// one-sided (Hestenes) Jacobi on R^T. For matrices of the form D*B with D
/// diagonal and B well conditioned (diagonal ellipsoid generators and their
/// sections) this resolves singular values to high *relative* accuracy, far
/// below eps * s_1. Equal singular values keep the order in which the Jacobi
/// sweep produced them (stable sort).
struct Svd {
  Matrix U;  // rows x p, orthonormal columns
  Vector s;  // p = min(rows, cols)
  Matrix V;  // cols x p, orthonormal columns
};

Svd svd(const Matrix& a);

/// Number of entries of the nonincreasing `s` strictly above rel_cutoff * s(0).
/// rel_cutoff = 0 counts every strictly positive value.
Eigen::Index numerical_rank(const Vector& s, double rel_cutoff);

/// Orthonormal basis of the orthogonal complement of span(basis) in R^dim.
/// `basis` must have orthonormal columns.
Matrix orthonormal_complement(const Matrix& basis, Eigen::Index dim);

/// Orthonormal basis of ker(m); singular values <= abs_cutoff count as zero.
Matrix null_space(const Matrix& m, double abs_cutoff);

/// Orthonormal basis of the column space of `m` (rank by relative cutoff).
Matrix range_basis(const Matrix& m, double rel_cutoff);

double operator_norm(const Matrix& m);

/// (smallest, largest) eigenvalue of a symmetric matrix; (0, 0) when empty.
std::pair<double, double> extreme_eigenvalues(const Matrix& symmetric);

}  // namespace widthlab::linalg
