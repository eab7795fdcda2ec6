#include "coendforge/coend.hpp"

namespace coendforge {

namespace {

Matrix induce(const Matrix& target, const Matrix& through, const Matrix& section, const std::string& what) {
    Matrix psi = target * section;
    if (!(psi * through == target))
        throw WellDefinednessFailure(what + " does not descend to the quotient: it is nonzero on a relation");
    return psi;
}

std::size_t block_dim(const Representation& rep, std::size_t x) {
    const std::size_t d = rep.spaces[x].dim();
    return d * d;
}

// Relation column blocks: one per arrow, then one per control action.
struct RelationBlock {
    std::size_t dom_object;  // summand hit by p
    std::size_t cod_object;  // summand hit by q
    Matrix p;
    Matrix q;
};

std::vector<RelationBlock> arrow_relations(const Representation& rep) {
    std::vector<RelationBlock> out;
    for (const auto& a : rep.arrows) {
        const std::size_t dc = rep.spaces[a.dom].dim();
        const std::size_t dc2 = rep.spaces[a.cod].dim();
        if (a.value.rows() != dc2 || a.value.cols() != dc)
            throw ShapeError("arrow '" + a.name + "' has a matrix of the wrong shape");
        out.push_back(RelationBlock{a.dom, a.cod, cohom_contravariant(a.value, dc), cohom_covariant(a.value, dc2)});
    }
    return out;
}

std::vector<RelationBlock> control_relations(const Representation& rep, const ControlObject& ctl) {
    const Field f = rep.field;
    const std::size_t dc = ctl.space.dim();
    std::vector<RelationBlock> out;
    for (const auto& act : ctl.actions) {
        if (act.object >= rep.spaces.size() || act.result >= rep.spaces.size())
            throw MissingActionData("control '" + ctl.name + "' acts on an object outside the diagram");
        const std::size_t dx = rep.spaces[act.object].dim();
        const std::size_t dcx = rep.spaces[act.result].dim();
        if (act.xi.rows() != dc * dx || act.xi.cols() != dcx)
            throw MissingActionData("control '" + ctl.name + "' on '" + rep.object_names[act.object] +
                                    "': xi must be a " + std::to_string(dc * dx) + "x" + std::to_string(dcx) +
                                    " matrix F(C⊗X) -> C⊗F(X)");
        // p = cohom(id, xi^op), q = λ_{C,X} = coact((id_C ⊗ coev_{F(X)}) ∘ xi).
        Matrix p = cohom_contravariant(act.xi, dcx);
        Matrix phi = kron(Matrix::identity(f, dc), coevaluation(f, dx, dx)) * act.xi;
        Matrix lambda = coact(phi, dcx, dc * dx, dx * dx);
        out.push_back(RelationBlock{act.result, act.object, std::move(p), std::move(lambda)});
    }
    return out;
}

CoendResult assemble(const Representation& rep, const std::vector<RelationBlock>& blocks,
                     std::vector<std::string> controls) {
    const Field f = rep.field;
    CoendResult r;
    r.source = rep;
    r.controls = std::move(controls);
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < rep.spaces.size(); ++x) {
        r.block_offset.push_back(r.dim_n);
        r.dim_n += block_dim(rep, x);
        const SpaceObject c = tensor(dual(rep.spaces[x]), rep.spaces[x]);
        for (const auto& l : c.labels()) labels.push_back(rep.object_names[x] + ":" + l);
    }
    std::size_t dim_m = 0;
    for (const auto& b : blocks) dim_m += b.p.cols();
    r.relations = Matrix(f, r.dim_n, dim_m);
    std::size_t col = 0;
    for (const auto& b : blocks) {
        r.relations.add_block(r.block_offset[b.dom_object], col, b.p);
        r.relations.add_block(r.block_offset[b.cod_object], col, b.q.scaled(-1));
        col += b.p.cols();
    }
    Cokernel ck = cokernel(r.relations);
    std::vector<std::string> qlabels;
    for (auto k : ck.kept) qlabels.push_back("[" + labels[k] + "]");
    r.carrier = SpaceObject(std::move(qlabels));
    r.projection = std::move(ck.projection);
    r.section = std::move(ck.section);
    for (std::size_t x = 0; x < rep.spaces.size(); ++x)
        r.injections.push_back(r.projection.block(0, r.block_offset[x], r.dim(), block_dim(rep, x)));
    r.coalgebra = coalgebra_on_coend(r);
    return r;
}

}  // namespace

Matrix comatrix_comultiplication(Field f, std::size_t d) {
    const std::size_t e = d * d;
    Matrix delta(f, e * e, e);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t k = 0; k < d; ++k) delta.ref((j * d + k) * e + (k * d + i), j * d + i) = 1;
    return delta;
}

Matrix comatrix_counit(Field f, std::size_t d) {
    Matrix eps(f, 1, d * d);
    for (std::size_t i = 0; i < d; ++i) eps.ref(0, i * d + i) = 1;
    return eps;
}

CoendResult coend_of_representation(const Representation& rep) { return assemble(rep, arrow_relations(rep), {}); }

CoendResult coend_of_functor(const DiagramFunctor& f) { return coend_of_representation(f.representation()); }

CoendResult c_coend(const Representation& rep, const std::vector<ControlObject>& controls) {
    std::vector<RelationBlock> blocks = arrow_relations(rep);
    std::vector<std::string> names;
    for (const auto& c : controls) {
        auto extra = control_relations(rep, c);
        blocks.insert(blocks.end(), std::make_move_iterator(extra.begin()), std::make_move_iterator(extra.end()));
        names.push_back(c.name);
    }
    return assemble(rep, blocks, std::move(names));
}

CoendResult c_coend(const DiagramFunctor& f, const std::vector<ControlObject>& controls) {
    return c_coend(f.representation(), controls);
}

Coalgebra coalgebra_on_coend(const CoendResult& r) {
    const Field f = r.field();
    const std::size_t q = r.dim();
    std::vector<Matrix> delta_parts;
    std::vector<Matrix> eps_parts;
    for (std::size_t x = 0; x < r.source.spaces.size(); ++x) {
        const std::size_t d = r.source.spaces[x].dim();
        const Matrix& i = r.injections[x];
        delta_parts.push_back(kron(i, i) * comatrix_comultiplication(f, d));
        eps_parts.push_back(comatrix_counit(f, d));
    }
    Matrix delta_target = hconcat(delta_parts, f, q * q);
    Matrix eps_target = hconcat(eps_parts, f, 1);
    Coalgebra c{r.carrier, induce(delta_target, r.projection, r.section, "comultiplication"),
                induce(eps_target, r.projection, r.section, "counit")};
    AxiomReport rep = check_coalgebra(c);
    if (!rep.ok()) throw AxiomFailure("coend coalgebra: " + rep.failures.front());
    return c;
}

Comodule comodule_on(const CoendResult& r, std::size_t object) {
    const std::size_t d = r.source.spaces.at(object).dim();
    return Comodule{r.source.spaces[object], uncoact(r.injections[object], d, d)};
}

Transformation delta_transformation(const CoendResult& r) {
    Transformation t;
    for (std::size_t x = 0; x < r.source.spaces.size(); ++x) t.components.push_back(comodule_on(r, x).coaction);
    return t;
}

Representation tensor_with(const Representation& rep, std::size_t dim_m) {
    Representation out = rep;
    const SpaceObject m = SpaceObject::standard(dim_m, "m");
    const Matrix id = Matrix::identity(rep.field, dim_m);
    for (auto& s : out.spaces) s = tensor(s, m);
    for (auto& a : out.arrows) a.value = kron(a.value, id);
    return out;
}

std::vector<Matrix> nat_to_cowedge(const Transformation& t, const Representation& rep, std::size_t dim_m) {
    if (!check_natural(t, rep, tensor_with(rep, dim_m)))
        throw NaturalityFailure("transformation F -> F⊗M is not natural");
    std::vector<Matrix> w;
    for (std::size_t x = 0; x < rep.spaces.size(); ++x) {
        const std::size_t d = rep.spaces[x].dim();
        w.push_back(coact(t.components[x], d, d, dim_m));
    }
    return w;
}

Transformation cowedge_to_nat(const std::vector<Matrix>& w, const Representation& rep) {
    if (!check_dinatural(w, rep)) throw NaturalityFailure("components do not form a dinatural cowedge");
    Transformation t;
    for (std::size_t x = 0; x < rep.spaces.size(); ++x) {
        const std::size_t d = rep.spaces[x].dim();
        t.components.push_back(uncoact(w[x], d, d));
    }
    return t;
}

Matrix factor_through_coend(const CoendResult& r, const Transformation& t, std::size_t dim_m) {
    const auto& rep = r.source;
    if (t.components.size() != rep.spaces.size())
        throw ShapeError("transformation has " + std::to_string(t.components.size()) + " components for " +
                         std::to_string(rep.spaces.size()) + " objects");
    std::vector<Matrix> parts;
    for (std::size_t x = 0; x < rep.spaces.size(); ++x) {
        const std::size_t d = rep.spaces[x].dim();
        parts.push_back(coact(t.components[x], d, d, dim_m));
    }
    return solve_factor(hconcat(parts, r.field(), dim_m), r.projection);
}

Matrix epi_to_c_coend(const CoendResult& from, const CoendResult& to) {
    if (from.dim_n != to.dim_n || from.source.spaces != to.source.spaces)
        throw ShapeError("epi_to_c_coend: coends of different diagrams");
    auto h = try_solve_factor(to.projection, from.projection);
    if (!h) throw WellDefinednessFailure("target coend does not contain the relations of the source coend");
    for (std::size_t x = 0; x < from.injections.size(); ++x) {
        if (!(*h * from.injections[x] == to.injections[x]))
            throw WellDefinednessFailure("h ∘ i_X != i'_X for object " + from.source.object_names[x]);
    }
    if (!is_surjective(*h)) throw WellDefinednessFailure("comparison map is not surjective");
    if (!is_coalgebra_morphism(*h, from.coalgebra, to.coalgebra))
        throw AxiomFailure("comparison map is not a coalgebra morphism");
    return std::move(*h);
}

Bialgebra bialgebra_on_coend(const CoendResult& r, const TensorStructure& t) {
    const Field f = r.field();
    const auto& rep = r.source;
    const std::size_t n_obj = rep.spaces.size();
    const std::size_t q = r.dim();
    const std::size_t n = r.dim_n;
    Matrix target(f, q, n * n);
    for (std::size_t x = 0; x < n_obj; ++x)
        for (std::size_t y = 0; y < n_obj; ++y) {
            auto ot = t.object_tensor.find({x, y});
            auto xi_it = t.xi.find({x, y});
            if (ot == t.object_tensor.end() || xi_it == t.xi.end())
                throw MissingStructure("no tensor data for (" + rep.object_names[x] + ", " + rep.object_names[y] +
                                       ")");
            const std::size_t xy = ot->second;
            const Matrix& xi = xi_it->second;
            const std::size_t dx = rep.spaces[x].dim();
            const std::size_t dy = rep.spaces[y].dim();
            const std::size_t dxy = dx * dy;
            // cohom(F(X)⊗F(Y)) -> cohom(F(X⊗Y)) -> Q
            Matrix conj = r.injections[xy] * kron(inverse(xi).transpose(), xi);
            for (std::size_t j = 0; j < dx; ++j)
                for (std::size_t i = 0; i < dx; ++i)
                    for (std::size_t l = 0; l < dy; ++l)
                        for (std::size_t k = 0; k < dy; ++k) {
                            const std::size_t src = (j * dy + l) * dxy + (i * dy + k);
                            const std::size_t col =
                                (r.block_offset[x] + j * dx + i) * n + (r.block_offset[y] + l * dy + k);
                            for (std::size_t row = 0; row < q; ++row) target.ref(row, col) = conj(row, src);
                        }
        }
    Bialgebra b;
    b.coalgebra = r.coalgebra;
    b.multiplication = induce(target, kron(r.projection, r.projection), kron(r.section, r.section), "multiplication");
    b.unit = r.injections.at(t.unit) * kron(inverse(t.xi_unit).transpose(), t.xi_unit);
    AxiomReport rep_ax = check_bialgebra(b);
    if (!rep_ax.ok()) throw AxiomFailure("coend bialgebra: " + rep_ax.failures.front());
    return b;
}

Bialgebra bialgebra_on_coend(const DiagramFunctor& f, const CoendResult& r) {
    ValidationReport mon = check_monoidal(f);
    if (!mon.ok()) throw AxiomFailure("functor is not monoidal: " + mon.violations.front());
    return bialgebra_on_coend(r, f.tensor_structure());
}

HopfAlgebra antipode_on_coend(const CoendResult& r, const Bialgebra& b, const DualStructure& d) {
    const Field f = r.field();
    const auto& rep = r.source;
    std::vector<Matrix> parts;
    for (std::size_t x = 0; x < rep.spaces.size(); ++x) {
        auto dual_it = d.dual_of.find(x);
        auto pair_it = d.pairing.find(x);
        if (dual_it == d.dual_of.end() || pair_it == d.pairing.end())
            throw MissingDual("object '" + rep.object_names[x] + "' has no declared dual");
        const std::size_t xd = dual_it->second;
        const Matrix& pairing = pair_it->second;  // F(X*) -> F(X)*
        const std::size_t dx = rep.spaces[x].dim();
        if (pairing.rows() != dx || pairing.cols() != rep.spaces[xd].dim() || !is_invertible(pairing))
            throw MissingDual("dual pairing of '" + rep.object_names[x] + "' is not an isomorphism F(X*) -> F(X)*");
        // e_(j,i) |-> sum_{a,b} d[i,b] d^{-1}[a,j] e_(b,a) in cohom(F(X*), F(X*)).
        Matrix sigma = kron(pairing.transpose(), inverse(pairing)) * swap_matrix(f, dx, dx);
        parts.push_back(r.injections[xd] * sigma);
    }
    HopfAlgebra h{b, induce(hconcat(parts, f, r.dim()), r.projection, r.section, "antipode")};
    AxiomReport rep_ax = check_hopf(h);
    if (!rep_ax.ok()) throw AxiomFailure("coend antipode: " + rep_ax.failures.front());
    return h;
}

HopfAlgebra antipode_on_coend(const DiagramFunctor& f, const CoendResult& r, const Bialgebra& b) {
    DualStructure d;
    try {
        d = f.dual_structure();
    } catch (const MissingStructure& e) {
        throw MissingDual(e.what());
    }
    return antipode_on_coend(r, b, d);
}

}  // namespace coendforge
