#pragma once

#include "coendforge/reconstruct.hpp"

#include <algorithm>
#include <array>
#include <random>

namespace coendforge::testing {

inline Matrix random_matrix(std::mt19937_64& rng, Field f, std::size_t rows, std::size_t cols, long lo = -3,
                            long hi = 3) {
    std::uniform_int_distribution<long> d(lo, hi);
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, mpq_class(d(rng)));
    return m;
}

/// Matrix of the given rank: product of random factors, re-drawn until exact.
inline Matrix random_rank_matrix(std::mt19937_64& rng, Field f, std::size_t rows, std::size_t cols,
                                 std::size_t r) {
    for (;;) {
        Matrix m = random_matrix(rng, f, rows, r) * random_matrix(rng, f, r, cols);
        if (rank(m) == r) return m;
    }
}

inline Matrix random_invertible(std::mt19937_64& rng, Field f, std::size_t n) {
    for (;;) {
        Matrix m = random_matrix(rng, f, n, n);
        if (is_invertible(m)) return m;
    }
}

/// Laplace-expansion determinant, independent of the elimination code.
inline mpq_class laplace_det(const std::vector<std::vector<mpq_class>>& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    mpq_class total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<mpq_class>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<mpq_class> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(a[r][k]);
            minor.push_back(row);
        }
        mpq_class term = a[0][c] * laplace_det(minor);
        total += (c % 2 == 0) ? term : mpq_class(-term);
    }
    return total;
}

/// Rank over Q as the size of the largest nonzero minor.
inline std::size_t minor_rank(const Matrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t best = 0;
    for (std::size_t rmask = 1; rmask < (std::size_t{1} << rows); ++rmask)
        for (std::size_t cmask = 1; cmask < (std::size_t{1} << cols); ++cmask) {
            const int k = __builtin_popcountll(rmask);
            if (k != __builtin_popcountll(cmask) || static_cast<std::size_t>(k) <= best) continue;
            std::vector<std::vector<mpq_class>> sub;
            for (std::size_t i = 0; i < rows; ++i) {
                if (!(rmask >> i & 1)) continue;
                std::vector<mpq_class> row;
                for (std::size_t j = 0; j < cols; ++j)
                    if (cmask >> j & 1) row.push_back(m(i, j));
                sub.push_back(row);
            }
            if (sgn(laplace_det(sub)) != 0) best = static_cast<std::size_t>(k);
        }
    return best;
}

inline FinCategory discrete_category(std::size_t n) {
    std::vector<std::string> objs;
    for (std::size_t i = 0; i < n; ++i) objs.push_back("p" + std::to_string(i));
    return FinCategory(objs, {}, {});
}

/// a -f-> b -g-> c with g∘f = gf.
inline FinCategory chain_category() {
    return FinCategory({"a", "b", "c"}, {{"f", 0, 1}, {"g", 1, 2}, {"gf", 0, 2}}, {{"g", "f", "gf"}});
}

inline DiagramFunctor chain_functor(Field f, std::size_t da, std::size_t db, std::size_t dc, const Matrix& ff,
                                    const Matrix& gg) {
    return DiagramFunctor("chain", chain_category(), f,
                          {SpaceObject::standard(da, "a"), SpaceObject::standard(db, "b"), SpaceObject::standard(dc, "c")},
                          {{"f", ff}, {"g", gg}, {"gf", gg * ff}});
}

/// Z/n grading: objects g0..g(n-1), tensor by addition, F(g_i) = K, xi = id.
inline DiagramFunctor cyclic_grading(Field f, std::size_t n) {
    std::vector<std::string> objs;
    for (std::size_t i = 0; i < n; ++i) objs.push_back("g" + std::to_string(i));
    FinCategory c(objs, {}, {});
    CategoryMonoidalData mon;
    mon.unit = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mon.object_tensor[{i, j}] = (i + j) % n;
    c.set_monoidal(mon);
    for (std::size_t i = 0; i < n; ++i) c.set_dual(i, (n - i) % n);
    std::vector<SpaceObject> spaces(n, SpaceObject::standard(1, "v"));
    DiagramFunctor fun("grading", c, f, spaces, {});
    FunctorMonoidalData fm;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) fm.xi[{i, j}] = Matrix::identity(f, 1);
    fm.xi_unit = Matrix::identity(f, 1);
    fun.set_monoidal(fm);
    for (std::size_t i = 0; i < n; ++i) fun.set_dual_pairing(i, Matrix::identity(f, 1));
    return fun;
}

/// Group algebra K[G] from a multiplication table, with Δ(g) = g⊗g.
inline HopfAlgebra group_algebra(Field f, const std::vector<std::vector<std::size_t>>& mult) {
    const std::size_t n = mult.size();
    std::vector<std::string> labels;
    for (std::size_t g = 0; g < n; ++g) labels.push_back("g" + std::to_string(g));
    Matrix delta(f, n * n, n), eps(f, 1, n), m(f, n, n * n), u(f, n, 1), s(f, n, n);
    std::size_t unit = 0;
    for (std::size_t g = 0; g < n; ++g) {
        bool is_unit = true;
        for (std::size_t h = 0; h < n; ++h) is_unit = is_unit && mult[g][h] == h;
        if (is_unit) unit = g;
    }
    for (std::size_t g = 0; g < n; ++g) {
        delta.ref(g * n + g, g) = 1;
        eps.ref(0, g) = 1;
        for (std::size_t h = 0; h < n; ++h) {
            m.ref(mult[g][h], g * n + h) = 1;
            if (mult[g][h] == unit) s.ref(h, g) = 1;
        }
    }
    u.ref(unit, 0) = 1;
    return HopfAlgebra{Bialgebra{Coalgebra{SpaceObject(labels), delta, eps}, m, u}, s};
}

inline std::vector<std::vector<std::size_t>> cyclic_table(std::size_t n) {
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

/// S_3 as permutations of {0,1,2} in lexicographic order; (g h)(x) = g(h(x)).
inline std::vector<std::vector<std::size_t>> symmetric3_table() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
    for (std::size_t g = 0; g < 6; ++g)
        for (std::size_t h = 0; h < 6; ++h) {
            std::array<int, 3> c{perms[g][perms[h][0]], perms[g][perms[h][1]], perms[g][perms[h][2]]};
            t[g][h] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    return t;
}

/// Comodule over a group algebra given by the degree of each basis vector.
inline Comodule graded_comodule(Field f, std::size_t group_order, const std::vector<std::size_t>& degrees) {
    const std::size_t d = degrees.size();
    Matrix rho(f, d * group_order, d);
    for (std::size_t i = 0; i < d; ++i) rho.ref(i * group_order + degrees[i], i) = 1;
    return Comodule{SpaceObject::standard(d, "x"), rho};
}

/// Functions on a group: Δ(δ_g) = Σ_{ab=g} δ_a⊗δ_b, pointwise product, S(δ_g) = δ_{g⁻¹}.
inline HopfAlgebra function_algebra(Field f, const std::vector<std::vector<std::size_t>>& mult) {
    const std::size_t n = mult.size();
    std::vector<std::string> labels;
    for (std::size_t g = 0; g < n; ++g) labels.push_back("d" + std::to_string(g));
    Matrix delta(f, n * n, n), eps(f, 1, n), m(f, n, n * n), u(f, n, 1), s(f, n, n);
    std::size_t unit = 0;
    for (std::size_t g = 0; g < n; ++g) {
        bool is_unit = true;
        for (std::size_t h = 0; h < n; ++h) is_unit = is_unit && mult[g][h] == h;
        if (is_unit) unit = g;
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            delta.ref(a * n + b, mult[a][b]) = 1;
            if (mult[a][b] == unit) s.ref(b, a) = 1;
        }
    for (std::size_t g = 0; g < n; ++g) {
        m.ref(g, g * n + g) = 1;
        u.ref(g, 0) = 1;
    }
    eps.ref(0, unit) = 1;
    return HopfAlgebra{Bialgebra{Coalgebra{SpaceObject(labels), delta, eps}, m, u}, s};
}

/// One-dimensional comodule over functions on a group, x |-> x ⊗ Σ_g chi(g) δ_g.
inline Comodule character_comodule(Field f, const std::vector<long>& chi) {
    Matrix rho(f, chi.size(), 1);
    for (std::size_t g = 0; g < chi.size(); ++g) rho.ref(g, 0) = f.from_rational(mpq_class(chi[g]));
    return Comodule{SpaceObject::standard(1, "x"), rho};
}

/// Comatrix coalgebra on K^d and its standard comodule x_i |-> Σ_j x_j ⊗ e_(j,i).
inline Coalgebra comatrix(Field f, std::size_t d) {
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i) labels.push_back("e" + std::to_string(j) + std::to_string(i));
    return Coalgebra{SpaceObject(labels), comatrix_comultiplication(f, d), comatrix_counit(f, d)};
}

inline Comodule standard_comodule(Field f, std::size_t d) {
    Matrix rho(f, d * d * d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) rho.ref(j * d * d + j * d + i, i) = 1;
    return Comodule{SpaceObject::standard(d, "x"), rho};
}

/// Upper triangular 2x2 coalgebra on c00, c01, c11 with Δ(c_ij) = Σ_{i≤k≤j} c_ik⊗c_kj.
inline Coalgebra triangular_coalgebra(Field f) {
    Matrix delta(f, 9, 3), eps(f, 1, 3);
    delta.ref(0 * 3 + 0, 0) = 1;
    delta.ref(0 * 3 + 1, 1) = 1;
    delta.ref(1 * 3 + 2, 1) = 1;
    delta.ref(2 * 3 + 2, 2) = 1;
    eps.ref(0, 0) = 1;
    eps.ref(0, 2) = 1;
    return Coalgebra{SpaceObject({"c00", "c01", "c11"}), delta, eps};
}

/// Its two-dimensional comodule v0 |-> v0⊗c00, v1 |-> v0⊗c01 + v1⊗c11, and the simple lines.
inline Comodule triangular_standard(Field f) {
    Matrix rho(f, 6, 2);
    rho.ref(0 * 3 + 0, 0) = 1;
    rho.ref(0 * 3 + 1, 1) = 1;
    rho.ref(1 * 3 + 2, 1) = 1;
    return Comodule{SpaceObject::standard(2, "v"), rho};
}

inline Comodule triangular_line(Field f, std::size_t which) {
    Matrix rho(f, 3, 1);
    rho.ref(which == 0 ? 0 : 2, 0) = 1;
    return Comodule{SpaceObject::standard(1, "s"), rho};
}

}  // namespace coendforge::testing
