#include "coendforge/cohom.hpp"

namespace coendforge {

namespace {

// (m⊗m)∘(id⊗τ⊗id)∘(Δ⊗Δ), one column of H⊗H at a time.
Matrix multiplicativity_rhs(const Matrix& delta, const Matrix& m, std::size_t n) {
    const Field f = m.field();
    Matrix out(f, n * n, n * n);
    const std::size_t n2 = n * n;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            // Δ(e_a) = sum x_{pq} e_p⊗e_q, Δ(e_b) = sum y_{rs} e_r⊗e_s; shuffled to (p,r)⊗(q,s).
            Matrix shuffled(f, n2 * n2, 1);
            for (std::size_t pq = 0; pq < n2; ++pq) {
                const mpq_class& x = delta(pq, a);
                if (sgn(x) == 0) continue;
                const std::size_t p = pq / n, qi = pq % n;
                for (std::size_t rs = 0; rs < n2; ++rs) {
                    const mpq_class& y = delta(rs, b);
                    if (sgn(y) == 0) continue;
                    const std::size_t r = rs / n, s = rs % n;
                    shuffled.ref((p * n + r) * n2 + (qi * n + s), 0) = f.mul(x, y);
                }
            }
            out.set_block(0, a * n + b, kron_apply(m, m, shuffled));
        }
    return out;
}

}  // namespace

void AxiomReport::merge(const AxiomReport& other, const std::string& prefix) {
    for (const auto& f : other.failures) failures.push_back(prefix + f);
}

Matrix coevaluation(Field f, std::size_t dim_x, std::size_t dim_y) {
    const std::size_t n = dim_y * dim_x;
    Matrix c(f, dim_y * n, dim_x);
    for (std::size_t i = 0; i < dim_x; ++i)
        for (std::size_t j = 0; j < dim_y; ++j) c.ref(j * n + j * dim_x + i, i) = 1;
    return c;
}

CohomObject cohom(Field f, const SpaceObject& x, const SpaceObject& y) {
    return CohomObject{x, y, tensor(dual(y), x), coevaluation(f, x.dim(), y.dim())};
}

Matrix coact(const Matrix& phi, std::size_t dim_x, std::size_t dim_y, std::size_t dim_z) {
    if (phi.cols() != dim_x || phi.rows() != dim_y * dim_z) {
        throw ShapeError("coact: map of shape " + std::to_string(phi.rows()) + "x" + std::to_string(phi.cols()) +
                         " is not X -> Y ⊗ Z for dims (" + std::to_string(dim_x) + ", " + std::to_string(dim_y) +
                         ", " + std::to_string(dim_z) + ")");
    }
    Matrix c(phi.field(), dim_z, dim_y * dim_x);
    for (std::size_t j = 0; j < dim_y; ++j)
        for (std::size_t z = 0; z < dim_z; ++z)
            for (std::size_t i = 0; i < dim_x; ++i) c.ref(z, j * dim_x + i) = phi(j * dim_z + z, i);
    return c;
}

LinearMap coact(const LinearMap& phi, const SpaceObject& y, const SpaceObject& z) {
    if (phi.codomain().dim() != y.dim() * z.dim()) {
        throw ShapeError("coact: codomain of dimension " + std::to_string(phi.codomain().dim()) +
                         " does not factor as " + std::to_string(y.dim()) + " x " + std::to_string(z.dim()));
    }
    Matrix c = coact(phi.matrix(), phi.domain().dim(), y.dim(), z.dim());
    return LinearMap(tensor(dual(y), phi.domain()), z, std::move(c));
}

Matrix uncoact(const Matrix& c, std::size_t dim_x, std::size_t dim_y) {
    if (c.cols() != dim_x * dim_y) throw ShapeError("uncoact: domain is not cohom(X, Y)");
    return kron_apply(Matrix::identity(c.field(), dim_y), c, coevaluation(c.field(), dim_x, dim_y));
}

Matrix cocompose(Field f, std::size_t dim_x, std::size_t dim_y, std::size_t dim_z) {
    // coact((coev_{Z,Y} ⊗ id_{cohom(X,Z)}) ∘ coev_{X,Z})
    Matrix phi = kron_apply(coevaluation(f, dim_z, dim_y), Matrix::identity(f, dim_z * dim_x), coevaluation(f, dim_x, dim_z));
    return coact(phi, dim_x, dim_y, (dim_y * dim_z) * (dim_z * dim_x));
}

Matrix cohom_covariant(const Matrix& f, std::size_t dim_y) { return kron(Matrix::identity(f.field(), dim_y), f); }

Matrix cohom_contravariant(const Matrix& g, std::size_t dim_x) {
    return kron(g.transpose(), Matrix::identity(g.field(), dim_x));
}

Matrix cohom_adjunction_iso(Field f, std::size_t dim_x, std::size_t dim_y, std::size_t dim_z) {
    const std::size_t target = dim_y * dim_z * dim_x;  // dim cohom(X, Y ⊗ Z)
    Matrix coev_yz = coevaluation(f, dim_x, dim_y * dim_z);
    Matrix inner = coact(coev_yz, dim_x, dim_y, dim_z * target);
    return coact(inner, dim_y * dim_x, dim_z, target);
}

Matrix evaluation(Field f, std::size_t dim_x) {
    Matrix ev(f, 1, dim_x * dim_x);
    for (std::size_t i = 0; i < dim_x; ++i) ev.ref(0, i * dim_x + i) = 1;
    return ev;
}

Matrix dual_basis_coevaluation(Field f, std::size_t dim_x) { return evaluation(f, dim_x).transpose(); }

AxiomReport check_coalgebra(const Coalgebra& c) {
    AxiomReport r;
    const std::size_t n = c.dim();
    const Field f = c.comultiplication.field();
    if (c.comultiplication.rows() != n * n || c.comultiplication.cols() != n) {
        r.failures.push_back("comultiplication has wrong shape");
        return r;
    }
    if (c.counit.rows() != 1 || c.counit.cols() != n) {
        r.failures.push_back("counit has wrong shape");
        return r;
    }
    const Matrix id = Matrix::identity(f, n);
    const Matrix& d = c.comultiplication;
    r.require(kron_apply(d, id, d) == kron_apply(id, d, d), "coassociativity (Δ⊗id)∘Δ = (id⊗Δ)∘Δ");
    r.require(kron_apply(c.counit, id, d) == id, "left counit (ε⊗id)∘Δ = id");
    r.require(kron_apply(id, c.counit, d) == id, "right counit (id⊗ε)∘Δ = id");
    return r;
}

AxiomReport check_comodule(const Comodule& m, const Coalgebra& c) {
    AxiomReport r;
    const std::size_t v = m.dim();
    const std::size_t n = c.dim();
    const Field f = c.field();
    if (m.coaction.rows() != v * n || m.coaction.cols() != v) {
        r.failures.push_back("coaction has wrong shape");
        return r;
    }
    const Matrix& rho = m.coaction;
    r.require(kron_apply(rho, Matrix::identity(f, n), rho) == kron_apply(Matrix::identity(f, v), c.comultiplication, rho),
              "coassociativity (ρ⊗id)∘ρ = (id⊗Δ)∘ρ");
    r.require(kron_apply(Matrix::identity(f, v), c.counit, rho) == Matrix::identity(f, v), "counit (id⊗ε)∘ρ = id");
    return r;
}

AxiomReport check_bialgebra(const Bialgebra& b) {
    AxiomReport r = check_coalgebra(b.coalgebra);
    if (!r.ok()) return r;
    const Coalgebra& c = b.coalgebra;
    const std::size_t n = c.dim();
    const Field f = c.field();
    const Matrix& m = b.multiplication;
    const Matrix& u = b.unit;
    if (m.rows() != n || m.cols() != n * n || u.rows() != n || u.cols() != 1) {
        r.failures.push_back("multiplication or unit has wrong shape");
        return r;
    }
    const Matrix id = Matrix::identity(f, n);
    r.require(m * kron(m, id) == m * kron(id, m), "associativity m∘(m⊗id) = m∘(id⊗m)");
    r.require(m * kron(u, id) == id, "left unit m∘(u⊗id) = id");
    r.require(m * kron(id, u) == id, "right unit m∘(id⊗u) = id");
    r.require(c.comultiplication * m == multiplicativity_rhs(c.comultiplication, m, n),
              "Δ∘m = (m⊗m)∘(id⊗τ⊗id)∘(Δ⊗Δ)");
    r.require(c.counit * m == kron(c.counit, c.counit), "ε∘m = ε⊗ε");
    r.require(c.comultiplication * u == kron(u, u), "Δ∘u = u⊗u");
    r.require(c.counit * u == Matrix::identity(f, 1), "ε∘u = 1");
    return r;
}

AxiomReport check_hopf(const HopfAlgebra& h) {
    AxiomReport r = check_bialgebra(h.bialgebra);
    if (!r.ok()) return r;
    const Coalgebra& c = h.coalgebra();
    const std::size_t n = c.dim();
    const Field f = c.field();
    if (h.antipode.rows() != n || h.antipode.cols() != n) {
        r.failures.push_back("antipode has wrong shape");
        return r;
    }
    const Matrix id = Matrix::identity(f, n);
    const Matrix& m = h.bialgebra.multiplication;
    const Matrix ue = h.bialgebra.unit * c.counit;
    r.require(m * kron(h.antipode, id) * c.comultiplication == ue, "m∘(S⊗id)∘Δ = u∘ε");
    r.require(m * kron(id, h.antipode) * c.comultiplication == ue, "m∘(id⊗S)∘Δ = u∘ε");
    return r;
}

bool is_comodule_morphism(const Matrix& g, const Comodule& v, const Comodule& w, std::size_t dim_c) {
    return kron_apply(g, Matrix::identity(g.field(), dim_c), v.coaction) == w.coaction * g;
}

bool is_coalgebra_morphism(const Matrix& h, const Coalgebra& from, const Coalgebra& to) {
    return to.comultiplication * h == kron_apply(h, h, from.comultiplication) && to.counit * h == from.counit;
}

Comodule tensor_comodule(const Comodule& v, const Comodule& w, const Bialgebra& b) {
    const Field f = b.multiplication.field();
    const std::size_t n = b.coalgebra.dim();
    const std::size_t dv = v.dim();
    const std::size_t dw = w.dim();
    Matrix shuffle = kron(Matrix::identity(f, dv), kron(swap_matrix(f, n, dw), Matrix::identity(f, n)));
    Matrix rho = kron(Matrix::identity(f, dv * dw), b.multiplication) * shuffle * kron(v.coaction, w.coaction);
    return Comodule{tensor(v.carrier, w.carrier), std::move(rho)};
}

Comodule trivial_comodule(const Bialgebra& b) { return Comodule{SpaceObject::unit(), b.unit}; }

CoendomorphismObject coend_object(Field f, const SpaceObject& x) {
    const std::size_t n = x.dim();
    CohomObject c = cohom(f, x, x);
    const std::size_t e = n * n;
    Matrix phi = kron_apply(c.coev, Matrix::identity(f, e), c.coev);
    Matrix delta = coact(phi, n, n, e * e);
    Matrix eps = coact(Matrix::identity(f, n), n, n, 1);
    Coalgebra coalg{c.carrier, std::move(delta), std::move(eps)};
    Comodule comod{x, c.coev};
    return CoendomorphismObject{std::move(c), std::move(coalg), std::move(comod)};
}

InducedCoaction induce_coaction(const Comodule& x, const Coalgebra& c) {
    AxiomReport rep = check_comodule(x, c);
    if (!rep.ok()) throw AxiomFailure("induce_coaction: input is not a comodule: " + rep.failures.front());
    const Field f = c.field();
    const std::size_t n = x.dim();
    const std::size_t e = n * n;
    Matrix coev = coevaluation(f, n, n);
    Matrix rho_phi = coact(kron(coev, Matrix::identity(f, c.dim())) * x.coaction, n, n, e * c.dim());
    Matrix z = coact(x.coaction, n, n, c.dim());
    return InducedCoaction{std::move(rho_phi), std::move(z)};
}

CohomCoactions cohom_coactions(const Comodule& x, const Comodule& y, const HopfAlgebra& h) {
    AxiomReport rep = check_hopf(h);
    rep.merge(check_comodule(x, h.coalgebra()), "X: ");
    rep.merge(check_comodule(y, h.coalgebra()), "Y: ");
    if (!rep.ok()) throw AxiomFailure("cohom_coactions: " + rep.failures.front());
    const Field f = h.antipode.field();
    const std::size_t dx = x.dim();
    const std::size_t dy = y.dim();
    const std::size_t dh = h.coalgebra().dim();
    const std::size_t dc = dx * dy;
    const Matrix coev = coevaluation(f, dx, dy);
    const Matrix id_c = Matrix::identity(f, dc);
    const Matrix id_h = Matrix::identity(f, dh);

    CohomCoactions out;
    out.right = coact(kron(coev, id_h) * x.coaction, dx, dy, dc * dh);
    out.left_raw = coact(kron(y.coaction, id_c) * coev, dx, dy, dh * dc);
    out.left = kron(id_c, h.antipode) * swap_matrix(f, dh, dc) * out.left_raw;
    out.combined = kron(id_c, h.bialgebra.multiplication) * kron(out.left, id_h) * out.right;
    return out;
}

}  // namespace coendforge
