#include "coendforge/linalg.hpp"

namespace coendforge {

namespace {

// In-place Gauss-Jordan on the first `pivot_cols` columns; the remaining
// columns ride along (augmented part).
EchelonForm rref_in_place(Matrix m, std::size_t pivot_cols) {
    const Field f = m.field();
    EchelonForm out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && sgn(m(sel, col)) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.ref(sel, j), m.ref(row, j));
        }
        mpq_class inv = f.inv(m(row, col));
        for (std::size_t j = col; j < m.cols(); ++j) {
            if (sgn(m(row, j)) != 0) m.ref(row, j) = f.mul(m(row, j), inv);
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || sgn(m(i, col)) == 0) continue;
            mpq_class c = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) {
                if (sgn(m(row, j)) != 0) f.sub_mul(m.ref(i, j), c, m(row, j));
            }
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.rank = row;
    out.reduced = std::move(m);
    return out;
}

}  // namespace

EchelonForm echelon(const Matrix& m) { return rref_in_place(m, m.cols()); }

EchelonForm echelon(const LinearMap& m) { return echelon(m.matrix()); }

std::size_t rank(const Matrix& m) { return echelon(m).rank; }

Matrix kernel(const Matrix& m) {
    EchelonForm e = echelon(m);
    const Field f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!is_pivot[j]) free.push_back(j);
    Matrix k(f, m.cols(), free.size());
    for (std::size_t c = 0; c < free.size(); ++c) {
        std::size_t fj = free[c];
        k.ref(fj, c) = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
            const mpq_class& v = e.reduced(r, fj);
            if (sgn(v) != 0) k.ref(e.pivots[r], c) = f.neg(v);
        }
    }
    return k;
}

LinearMap kernel(const LinearMap& m) {
    Matrix k = kernel(m.matrix());
    return LinearMap(SpaceObject::standard(k.cols(), "k"), m.domain(), std::move(k));
}

Cokernel cokernel(const Matrix& m) {
    const Field f = m.field();
    const std::size_t n = m.rows();
    // Rows of the RREF of m^T span im(m) and are canonical for that subspace.
    EchelonForm e = echelon(m.transpose());
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    Cokernel out;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) out.kept.push_back(j);
    const std::size_t q = out.kept.size();
    std::vector<std::size_t> position(n, 0);
    for (std::size_t c = 0; c < q; ++c) position[out.kept[c]] = c;

    out.section = Matrix(f, n, q);
    out.projection = Matrix(f, q, n);
    for (std::size_t c = 0; c < q; ++c) {
        out.section.ref(out.kept[c], c) = 1;
        out.projection.ref(c, out.kept[c]) = 1;
    }
    for (std::size_t r = 0; r < e.rank; ++r) {
        const std::size_t pc = e.pivots[r];
        for (std::size_t j = pc + 1; j < n; ++j) {
            const mpq_class& v = e.reduced(r, j);
            if (sgn(v) != 0 && !is_pivot[j]) out.projection.ref(position[j], pc) = f.neg(v);
        }
    }
    return out;
}

CokernelMaps cokernel(const LinearMap& m) {
    Cokernel c = cokernel(m.matrix());
    SpaceObject q = SpaceObject::standard(c.kept.size(), "q");
    return CokernelMaps{LinearMap(m.codomain(), q, std::move(c.projection)),
                        LinearMap(q, m.codomain(), std::move(c.section))};
}

Matrix kron(const Matrix& a, const Matrix& b) {
    require_same_field(a.field(), b.field(), "tensor");
    const Field f = a.field();
    Matrix r(f, a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const mpq_class& x = a(i, j);
            if (sgn(x) == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    const mpq_class& y = b(k, l);
                    if (sgn(y) == 0) continue;
                    r.ref(i * b.rows() + k, j * b.cols() + l) = f.mul(x, y);
                }
        }
    return r;
}

Matrix kron_apply(const Matrix& a, const Matrix& b, const Matrix& m) {
    require_same_field(a.field(), b.field(), "tensor");
    require_same_field(a.field(), m.field(), "tensor");
    if (m.rows() != a.cols() * b.cols()) throw ShapeError("kron_apply: shape mismatch");
    const Field f = a.field();
    const std::size_t br = b.rows(), bc = b.cols(), k = m.cols();
    // u[(i', r), c] = sum_j b[r, j] m[(i', j), c]
    Matrix u(f, a.cols() * br, k);
    for (std::size_t i2 = 0; i2 < a.cols(); ++i2)
        for (std::size_t j = 0; j < bc; ++j)
            for (std::size_t c = 0; c < k; ++c) {
                const mpq_class& v = m(i2 * bc + j, c);
                if (sgn(v) == 0) continue;
                for (std::size_t r = 0; r < br; ++r) {
                    const mpq_class& w = b(r, j);
                    if (sgn(w) != 0) u.ref(i2 * br + r, c) = f.add(u(i2 * br + r, c), f.mul(w, v));
                }
            }
    Matrix out(f, a.rows() * br, k);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t i2 = 0; i2 < a.cols(); ++i2) {
            const mpq_class& w = a(i, i2);
            if (sgn(w) == 0) continue;
            for (std::size_t r = 0; r < br; ++r)
                for (std::size_t c = 0; c < k; ++c) {
                    const mpq_class& v = u(i2 * br + r, c);
                    if (sgn(v) != 0) out.ref(i * br + r, c) = f.add(out(i * br + r, c), f.mul(w, v));
                }
        }
    return out;
}

LinearMap tensor(const LinearMap& a, const LinearMap& b) {
    return LinearMap(tensor(a.domain(), b.domain()), tensor(a.codomain(), b.codomain()),
                     kron(a.matrix(), b.matrix()));
}

LinearMap dual(const LinearMap& m) {
    return LinearMap(dual(m.codomain()), dual(m.domain()), m.matrix().transpose());
}

std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b) {
    require_same_field(a.field(), b.field(), "solve");
    if (a.rows() != b.rows()) throw ShapeError("solve: row mismatch");
    const Field f = a.field();
    EchelonForm e = rref_in_place(hconcat({a, b}, f, a.rows()), a.cols());
    for (std::size_t r = e.rank; r < a.rows(); ++r)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (sgn(e.reduced(r, a.cols() + j)) != 0) return std::nullopt;
    Matrix x(f, a.cols(), b.cols());
    for (std::size_t r = 0; r < e.rank; ++r)
        for (std::size_t j = 0; j < b.cols(); ++j) x.ref(e.pivots[r], j) = e.reduced(r, a.cols() + j);
    return x;
}

std::optional<Matrix> try_solve_factor(const Matrix& target, const Matrix& through) {
    if (target.cols() != through.cols()) throw ShapeError("solve_factor: target and through need a shared domain");
    auto t = solve_right(through.transpose(), target.transpose());
    if (!t) return std::nullopt;
    return t->transpose();
}

Matrix solve_factor(const Matrix& target, const Matrix& through) {
    auto r = try_solve_factor(target, through);
    if (!r) throw NoSolution("target does not factor: ker(through) is not contained in ker(target)");
    return std::move(*r);
}

LinearMap solve_factor(const LinearMap& target, const LinearMap& through) {
    return LinearMap(through.codomain(), target.codomain(), solve_factor(target.matrix(), through.matrix()));
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw ShapeError("inverse of a non-square matrix");
    auto x = solve_right(m, Matrix::identity(m.field(), m.rows()));
    if (!x || rank(m) != m.rows()) throw NoSolution("matrix is singular");
    return std::move(*x);
}

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }
bool is_injective(const Matrix& m) { return rank(m) == m.cols(); }
bool is_surjective(const Matrix& m) { return rank(m) == m.rows(); }

Matrix swap_matrix(Field f, std::size_t dim_v, std::size_t dim_w) {
    Matrix s(f, dim_v * dim_w, dim_v * dim_w);
    for (std::size_t i = 0; i < dim_v; ++i)
        for (std::size_t j = 0; j < dim_w; ++j) s.ref(j * dim_v + i, i * dim_w + j) = 1;
    return s;
}

Matrix column_space_basis(const Matrix& m) {
    EchelonForm e = echelon(m.transpose());
    return e.reduced.block(0, 0, e.rank, m.rows()).transpose();
}

}  // namespace coendforge
