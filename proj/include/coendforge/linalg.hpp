#pragma once

// Exact dense linear algebra: echelon forms, kernels, cokernels with canonical
// sections, Kronecker products, duals and exact factorization.

#include "coendforge/matrix.hpp"

#include <optional>
#include <vector>

namespace coendforge {

class NoSolution : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EchelonForm {
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    Matrix reduced;
};

/// Reduced row echelon form. The first nonzero entry of each pivot row is 1.
EchelonForm echelon(const Matrix& m);
EchelonForm echelon(const LinearMap& m);

std::size_t rank(const Matrix& m);

/// Columns form a basis of {v : m v = 0}, one per free column of the RREF.
Matrix kernel(const Matrix& m);
LinearMap kernel(const LinearMap& m);

/// Quotient of the codomain by the image.
///
/// The basis of Q is indexed by the non-pivot coordinates of the reduced
/// echelon basis of im(m); `section` includes those coordinates and
/// `projection` subtracts pivot components. Both depend only on im(m).
struct Cokernel {
    Matrix projection;  // codomain -> Q
    Matrix section;     // Q -> codomain
    std::vector<std::size_t> kept;  // coordinates of the codomain that index Q
};

Cokernel cokernel(const Matrix& m);

struct CokernelMaps {
    LinearMap projection;
    LinearMap section;
};
CokernelMaps cokernel(const LinearMap& m);

/// Kronecker product, X-major: row (i, k) = i * b.rows() + k.
Matrix kron(const Matrix& a, const Matrix& b);
LinearMap tensor(const LinearMap& a, const LinearMap& b);
/// kron(a, b) * m without forming the Kronecker product.
Matrix kron_apply(const Matrix& a, const Matrix& b, const Matrix& m);

/// Transpose, acting between dual spaces.
LinearMap dual(const LinearMap& m);

/// psi with psi ∘ through = target, free coordinates fixed to zero.
/// Unique whenever `through` is surjective.
std::optional<Matrix> try_solve_factor(const Matrix& target, const Matrix& through);
/// As try_solve_factor but throws NoSolution.
Matrix solve_factor(const Matrix& target, const Matrix& through);
LinearMap solve_factor(const LinearMap& target, const LinearMap& through);

/// Solves a x = b for x (columnwise), free variables zero.
std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b);

Matrix inverse(const Matrix& m);
bool is_invertible(const Matrix& m);
bool is_injective(const Matrix& m);
bool is_surjective(const Matrix& m);

/// Swap of tensor factors V ⊗ W -> W ⊗ V.
Matrix swap_matrix(Field f, std::size_t dim_v, std::size_t dim_w);

/// The basis of a subspace spanned by columns, in reduced echelon form (as columns).
Matrix column_space_basis(const Matrix& m);

}  // namespace coendforge
