#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Matrix = Eigen::MatrixXd;

/// Real orthogonal matrix with eigenvalues exp(2 pi i r / modulus) for the
/// listed residues; non-real residues must come in conjugate pairs and are
/// realised as 2x2 rotation blocks.
Matrix rotation_blocks(int modulus, const std::vector<std::pair<int, int>>& residue_mults);

/// Sym^d of the rotation by pi/n, an element of SL2(R) of order 2n.
Matrix sym_power_of_rotation(int d, int n);

/// Matrix of g on the standard module of the symmetric group: g acts on
/// R^m by permuting coordinates, restricted to the sum-zero hyperplane in
/// an orthonormal basis.
Matrix standard_module(const std::vector<int>& images);

/// Induced action of g on the exterior square, basis e_i ^ e_j with i < j.
Matrix wedge_square(const Matrix& g);

/// Induced action on the symmetric square, basis e_i e_j with i <= j.
Matrix sym_square(const Matrix& g);

/// Induced action X -> g X g^{-1} on all matrices, basis E_ij.
Matrix conjugation(const Matrix& g);

Matrix block_diagonal(const Matrix& x, const Matrix& y);

/// dim ker(g - I), with singular values below tol treated as zero.
int fixed_dim(const Matrix& g, double tol = 1e-7);

/// Fixed dimensions on the adjoint representation of a classical group for
/// a principal element of order n, built from explicit Sym powers:
/// A_r on sl(Sym^r), B_r on so(Sym^{2r}), C_r on sp(Sym^{2r-1}) = Sym^2,
/// D_r on so(Sym^{2r-2} + 1).
int principal_fixed_dim(char family, int rank, int n);

}  // namespace oracle
