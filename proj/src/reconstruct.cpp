#include "coendforge/reconstruct.hpp"

#include <random>

namespace coendforge {

namespace {

Matrix flatten(const Matrix& g) {
    Matrix v(g.field(), g.rows() * g.cols(), 1);
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t c = 0; c < g.cols(); ++c) v.ref(r * g.cols() + c, 0) = g(r, c);
    return v;
}

// Stacks every basis morphism M -> seed_s; the target is ⊕ seed_s^{k_s}.
struct Embedding {
    Matrix map;
    std::vector<std::size_t> copies_of;  // seed index of each summand
};

Embedding embed_into_seeds(const Comodule& m, const std::vector<Comodule>& seeds, std::size_t n, Field f) {
    Embedding e;
    std::vector<Matrix> rows;
    for (std::size_t s = 0; s < seeds.size(); ++s)
        for (auto& g : comodule_morphisms(m, seeds[s], n)) {
            rows.push_back(std::move(g));
            e.copies_of.push_back(s);
        }
    e.map = vconcat(rows, f, m.dim());
    return e;
}

// Stacks every basis morphism seed_s -> M side by side; the source is ⊕ seed_s^{k_s}.
Embedding cover_by_seeds(const Comodule& m, const std::vector<Comodule>& seeds, std::size_t n, Field f) {
    Embedding e;
    std::vector<Matrix> cols;
    for (std::size_t s = 0; s < seeds.size(); ++s)
        for (auto& g : comodule_morphisms(seeds[s], m, n)) {
            cols.push_back(std::move(g));
            e.copies_of.push_back(s);
        }
    e.map = hconcat(cols, f, m.dim());
    return e;
}

// Coaction on the subspace spanned by the columns of `basis`, which must be a subcomodule.
std::optional<Comodule> restrict_to(const Comodule& t, const Matrix& basis, std::size_t n) {
    const Field f = t.coaction.field();
    auto rho = solve_right(kron(basis, Matrix::identity(f, n)), t.coaction * basis);
    if (!rho) return std::nullopt;
    return Comodule{SpaceObject::standard(basis.cols(), "k"), std::move(*rho)};
}

// Coaction on the quotient by the columns of `basis`, which must span a subcomodule.
std::optional<Comodule> quotient_by(const Comodule& t, const Matrix& basis, std::size_t n) {
    const Field f = t.coaction.field();
    Cokernel ck = cokernel(basis);
    const Matrix pn = kron(ck.projection, Matrix::identity(f, n));
    Matrix rho = pn * t.coaction * ck.section;
    if (!(pn * t.coaction == rho * ck.projection)) return std::nullopt;
    return Comodule{SpaceObject::standard(ck.kept.size(), "t"), std::move(rho)};
}

bool blocks_in_hom_spans(const Matrix& d, const std::vector<std::size_t>& rows_of, const std::vector<std::size_t>& cols_of,
                         const ComoduleCategory& cat) {
    const Field f = d.field();
    std::size_t row = 0;
    for (auto tgt : rows_of) {
        std::size_t col = 0;
        for (auto src : cols_of) {
            const Matrix blk = d.block(row, col, cat.objects[tgt].dim(), cat.objects[src].dim());
            if (!blk.is_zero()) {
                std::vector<Matrix> span;
                for (const auto& g : cat.hom.at({src, tgt})) span.push_back(flatten(g));
                if (span.empty() || !solve_right(hconcat(span, f, blk.rows() * blk.cols()), flatten(blk))) return false;
            }
            col += cat.objects[src].dim();
        }
        row += cat.objects[tgt].dim();
    }
    return true;
}

Comodule seed_sum(const std::vector<std::size_t>& copies_of, const std::vector<Comodule>& seeds, std::size_t n) {
    std::vector<Comodule> parts;
    for (auto s : copies_of) parts.push_back(seeds[s]);
    return direct_sum_comodule(parts, n);
}

}  // namespace

std::vector<Matrix> comodule_morphisms(const Comodule& v, const Comodule& w, std::size_t n) {
    const Field f = v.coaction.field();
    const std::size_t dv = v.dim(), dw = w.dim();
    if (v.coaction.rows() != dv * n || w.coaction.rows() != dw * n)
        throw ShapeError("comodule_morphisms: coactions do not match the coalgebra dimension");
    Matrix eq(f, dw * n * dv, dw * dv);
    for (std::size_t r = 0; r < dw; ++r)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t c = 0; c < dv; ++c) {
                const std::size_t row = (r * n + k) * dv + c;
                for (std::size_t c2 = 0; c2 < dv; ++c2) {
                    const mpq_class& x = v.coaction(c2 * n + k, c);
                    if (sgn(x) != 0) eq.ref(row, r * dv + c2) = f.add(eq(row, r * dv + c2), x);
                }
                for (std::size_t r2 = 0; r2 < dw; ++r2) {
                    const mpq_class& x = w.coaction(r * n + k, r2);
                    if (sgn(x) != 0) eq.ref(row, r2 * dv + c) = f.sub(eq(row, r2 * dv + c), x);
                }
            }
    Matrix k = kernel(eq);
    std::vector<Matrix> out;
    for (std::size_t b = 0; b < k.cols(); ++b) {
        Matrix g(f, dw, dv);
        for (std::size_t r = 0; r < dw; ++r)
            for (std::size_t c = 0; c < dv; ++c) g.ref(r, c) = k(r * dv + c, b);
        out.push_back(std::move(g));
    }
    return out;
}

Comodule dual_comodule(const Comodule& v, const HopfAlgebra& h) {
    const Field f = h.antipode.field();
    const std::size_t d = v.dim(), n = h.coalgebra().dim();
    Matrix rho(f, d * n, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t t = 0; t < n; ++t) {
                mpq_class acc = 0;
                for (std::size_t u = 0; u < n; ++u) acc = f.add(acc, f.mul(h.antipode(t, u), v.coaction(i * n + u, j)));
                rho.ref(j * n + t, i) = acc;
            }
    return Comodule{dual(v.carrier), std::move(rho)};
}

std::optional<Matrix> find_invertible(const std::vector<Matrix>& basis) {
    if (basis.empty() || basis.front().rows() != basis.front().cols()) return std::nullopt;
    const Field f = basis.front().field();
    for (const auto& b : basis)
        if (is_invertible(b)) return b;
    const std::size_t k = basis.size();
    auto combine = [&](const std::vector<long>& coeffs) {
        Matrix m(f, basis.front().rows(), basis.front().cols());
        for (std::size_t i = 0; i < k; ++i)
            if (coeffs[i] != 0) m = m + basis[i].scaled(coeffs[i]);
        return m;
    };
    if (f.is_prime_field()) {
        const std::size_t p = f.characteristic_prime();
        std::size_t total = 1;
        for (std::size_t i = 0; i < k && total <= 4096; ++i) total *= p;
        if (total <= 4096) {
            std::vector<long> coeffs(k, 0);
            for (std::size_t code = 1; code < total; ++code) {
                std::size_t c = code;
                for (std::size_t i = 0; i < k; ++i, c /= p) coeffs[i] = static_cast<long>(c % p);
                Matrix m = combine(coeffs);
                if (is_invertible(m)) return m;
            }
            return std::nullopt;
        }
    }
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<long> dist(-7, 7);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<long> coeffs(k);
        for (auto& c : coeffs) c = dist(rng);
        Matrix m = combine(coeffs);
        if (is_invertible(m)) return m;
    }
    return std::nullopt;
}

Comodule regular_comodule(const Coalgebra& c) { return Comodule{c.carrier, c.comultiplication}; }

Comodule direct_sum_comodule(const std::vector<Comodule>& parts, std::size_t n) {
    std::size_t total = 0;
    Field f = Field::rational();
    std::vector<SpaceObject> spaces;
    for (const auto& p : parts) {
        total += p.dim();
        f = p.coaction.field();
        spaces.push_back(p.carrier);
    }
    Matrix rho(f, total * n, total);
    std::size_t off = 0;
    for (const auto& p : parts) {
        rho.set_block(off * n, off, p.coaction);
        off += p.dim();
    }
    return Comodule{direct_sum(spaces), std::move(rho)};
}

ComoduleCategory comodule_category_of(const Coalgebra& c, const std::vector<Comodule>& seeds,
                                      const std::vector<std::string>& names) {
    ComoduleCategory cat;
    cat.base = c;
    for (std::size_t s = 0; s < seeds.size(); ++s) {
        AxiomReport r = check_comodule(seeds[s], c);
        const std::string name = s < names.size() ? names[s] : "V" + std::to_string(s);
        if (!r.ok()) throw AxiomFailure("seed '" + name + "' is not a comodule: " + r.failures.front());
        cat.names.push_back(name);
        cat.objects.push_back(seeds[s]);
    }
    for (std::size_t v = 0; v < seeds.size(); ++v)
        for (std::size_t w = 0; w < seeds.size(); ++w) cat.hom[{v, w}] = comodule_morphisms(seeds[v], seeds[w], c.dim());
    return cat;
}

std::vector<mpq_class> ComoduleCategory::compose(std::size_t u, std::size_t v, std::size_t w, std::size_t a,
                                                 std::size_t b) const {
    const Matrix g = hom.at({v, w}).at(b) * hom.at({u, v}).at(a);
    const auto& target = hom.at({u, w});
    std::vector<Matrix> cols;
    for (const auto& t : target) cols.push_back(flatten(t));
    const Field f = g.field();
    Matrix span = hconcat(cols, f, g.rows() * g.cols());
    auto x = solve_right(span, flatten(g));
    if (!x) throw AxiomFailure("composite of comodule morphisms is outside the hom space");
    std::vector<mpq_class> out;
    for (std::size_t i = 0; i < x->rows(); ++i) out.push_back((*x)(i, 0));
    return out;
}

Representation ComoduleCategory::representation() const {
    Representation r;
    r.field = base.field();
    r.object_names = names;
    for (const auto& o : objects) r.spaces.push_back(o.carrier);
    for (const auto& [key, basis] : hom) {
        for (std::size_t k = 0; k < basis.size(); ++k)
            r.arrows.push_back(Representation::Arrow{names[key.first] + "->" + names[key.second] + "#" + std::to_string(k),
                                                     key.first, key.second, basis[k]});
    }
    return r;
}

AxiomReport check_comodule_category(const ComoduleCategory& cat) {
    AxiomReport r;
    const std::size_t n = cat.base.dim();
    for (const auto& [key, basis] : cat.hom)
        for (const auto& g : basis)
            r.require(is_comodule_morphism(g, cat.objects[key.first], cat.objects[key.second], n),
                      "listed morphism " + cat.names[key.first] + " -> " + cat.names[key.second] + " does not intertwine");
    const std::size_t m = cat.objects.size();
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v)
            for (std::size_t w = 0; w < m; ++w)
                for (std::size_t a = 0; a < cat.hom.at({u, v}).size(); ++a)
                    for (std::size_t b = 0; b < cat.hom.at({v, w}).size(); ++b) {
                        try {
                            (void)cat.compose(u, v, w, a, b);
                        } catch (const AxiomFailure&) {
                            r.failures.push_back("composition leaves Hom(" + cat.names[u] + ", " + cat.names[w] + ")");
                        }
                    }
    return r;
}

void attach_monoidal_structure(ComoduleCategory& cat, const Bialgebra& b) {
    const std::size_t n = cat.base.dim();
    const std::size_t m = cat.objects.size();
    TensorStructure t;
    auto locate = [&](const Comodule& target, const std::string& what) -> std::pair<std::size_t, Matrix> {
        for (std::size_t c = 0; c < m; ++c) {
            if (cat.objects[c].dim() != target.dim()) continue;
            if (auto iso = find_invertible(comodule_morphisms(target, cat.objects[c], n))) return {c, std::move(*iso)};
        }
        throw MissingStructure(what + " is not isomorphic to any seed");
    };
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) {
            auto [c, iso] = locate(tensor_comodule(cat.objects[x], cat.objects[y], b),
                                   cat.names[x] + " ⊗ " + cat.names[y]);
            t.object_tensor[{x, y}] = c;
            t.xi[{x, y}] = std::move(iso);
        }
    auto [u, iso] = locate(trivial_comodule(b), "the trivial comodule");
    t.unit = u;
    t.xi_unit = std::move(iso);
    cat.tensor = std::move(t);
}

void attach_dual_structure(ComoduleCategory& cat, const HopfAlgebra& h) {
    const std::size_t n = cat.base.dim();
    DualStructure d;
    for (std::size_t x = 0; x < cat.objects.size(); ++x) {
        const Comodule dx = dual_comodule(cat.objects[x], h);
        bool found = false;
        for (std::size_t y = 0; y < cat.objects.size() && !found; ++y) {
            if (cat.objects[y].dim() != dx.dim()) continue;
            if (auto iso = find_invertible(comodule_morphisms(cat.objects[y], dx, n))) {
                d.dual_of[x] = y;
                d.pairing[x] = std::move(*iso);
                found = true;
            }
        }
        if (!found) throw MissingDual("the dual of seed '" + cat.names[x] + "' is not isomorphic to any seed");
    }
    cat.duals = std::move(d);
}

std::string to_string(ReconstructionVerdict v) {
    switch (v) {
        case ReconstructionVerdict::Generated: return "generated";
        case ReconstructionVerdict::NotGenerated: return "not_generated";
        case ReconstructionVerdict::NotIsomorphic: return "not_isomorphic";
    }
    return "not_generated";
}

Reconstruction reconstruct_coalgebra(const Coalgebra& c, const std::vector<Comodule>& seeds,
                                     const std::vector<std::string>& names) {
    AxiomReport base = check_coalgebra(c);
    if (!base.ok()) throw AxiomFailure("input is not a coalgebra: " + base.failures.front());
    Reconstruction rec;
    rec.category = comodule_category_of(c, seeds, names);
    rec.coend = coend_of_representation(rec.category.representation());
    Transformation t;
    for (const auto& s : rec.category.objects) t.components.push_back(s.coaction);
    rec.h = factor_through_coend(rec.coend, t, c.dim());
    rec.injective = is_injective(rec.h);
    rec.surjective = is_surjective(rec.h);
    rec.coalgebra_morphism = is_coalgebra_morphism(rec.h, rec.coend.coalgebra, c);
    if (!rec.surjective)
        rec.verdict = ReconstructionVerdict::NotGenerated;
    else if (rec.injective && rec.coalgebra_morphism)
        rec.verdict = ReconstructionVerdict::Generated;
    else
        rec.verdict = ReconstructionVerdict::NotIsomorphic;
    return rec;
}

Reconstruction reconstruct_bialgebra(const Bialgebra& b, const std::vector<Comodule>& seeds,
                                     const std::vector<std::string>& names) {
    AxiomReport base = check_bialgebra(b);
    if (!base.ok()) throw AxiomFailure("input is not a bialgebra: " + base.failures.front());
    Reconstruction rec = reconstruct_coalgebra(b.coalgebra, seeds, names);
    attach_monoidal_structure(rec.category, b);
    rec.bialgebra = bialgebra_on_coend(rec.coend, *rec.category.tensor);
    rec.multiplication_transported = rec.h * rec.bialgebra->multiplication == b.multiplication * kron(rec.h, rec.h) &&
                                     rec.h * rec.bialgebra->unit == b.unit;
    return rec;
}

Reconstruction reconstruct_hopf(const HopfAlgebra& h, const std::vector<Comodule>& seeds,
                                const std::vector<std::string>& names) {
    AxiomReport base = check_hopf(h);
    if (!base.ok()) throw AxiomFailure("input is not a Hopf algebra: " + base.failures.front());
    Reconstruction rec = reconstruct_bialgebra(h.bialgebra, seeds, names);
    attach_dual_structure(rec.category, h);
    rec.hopf = antipode_on_coend(rec.coend, *rec.bialgebra, *rec.category.duals);
    rec.antipode_transported = rec.h * rec.hopf->antipode == h.antipode * rec.h;
    return rec;
}

Recognition recognition_factorization(const Representation& rep) {
    Recognition out;
    out.coend = coend_of_representation(rep);
    for (std::size_t x = 0; x < rep.spaces.size(); ++x) out.objects.push_back(comodule_on(out.coend, x));
    for (const auto& a : rep.arrows) {
        if (!is_comodule_morphism(a.value, out.objects[a.dom], out.objects[a.cod], out.coend.dim()))
            out.failures.push_back(a.name);
    }
    return out;
}

Recognition recognition_factorization(const DiagramFunctor& f) { return recognition_factorization(f.representation()); }

bool EquivalenceVerdict::ok() const {
    if (!reconstruction_iso || !full) return false;
    for (const auto& p : probes)
        if (!p.ok()) return false;
    return true;
}

EquivalenceVerdict equivalence_check(const Reconstruction& rec, const std::vector<Comodule>& probes,
                                     const std::vector<std::string>& probe_names) {
    EquivalenceVerdict out;
    const ComoduleCategory& cat = rec.category;
    const Coalgebra& c = cat.base;
    const std::size_t n = c.dim();
    const Field f = c.field();
    const auto& seeds = cat.objects;
    out.reconstruction_iso = rec.verdict == ReconstructionVerdict::Generated;

    std::vector<Comodule> seeds_q;
    for (std::size_t s = 0; s < seeds.size(); ++s) seeds_q.push_back(comodule_on(rec.coend, s));
    const std::size_t q = rec.coend.dim();
    std::optional<Matrix> hinv;
    if (out.reconstruction_iso) hinv = inverse(rec.h);

    std::vector<Comodule> objects_c = seeds;
    std::vector<Comodule> objects_q = seeds_q;
    out.objects = cat.names;

    for (std::size_t k = 0; k < probes.size(); ++k) {
        const Comodule& m = probes[k];
        ProbeVerdict v;
        v.name = k < probe_names.size() ? probe_names[k] : "P" + std::to_string(k);
        AxiomReport ax = check_comodule(m, c);
        if (!ax.ok()) {
            v.reason = "not a comodule: " + ax.failures.front();
            out.probes.push_back(std::move(v));
            continue;
        }
        v.valid = true;
        if (!hinv) {
            v.reason = "reconstruction is not an isomorphism";
            out.probes.push_back(std::move(v));
            continue;
        }
        const std::size_t dm = m.dim();
        const Matrix pair =
            kron(m.coaction, Matrix::identity(f, n)) - kron(Matrix::identity(f, dm), c.comultiplication);
        const Matrix eq = kernel(pair);
        v.equalizer_ok = eq.cols() == dm && rank(hconcat({eq, m.coaction}, f, dm * n)) == dm;

        const Matrix rho_q = kron(Matrix::identity(f, dm), *hinv) * m.coaction;
        const Matrix id_q = Matrix::identity(f, q);

        // Kernel route: M -> T injective, T/M -> T' injective.
        Embedding j = embed_into_seeds(m, seeds, n, f);
        if (is_injective(j.map)) {
            const Comodule t = seed_sum(j.copies_of, seeds, n);
            auto quotient = quotient_by(t, j.map, n);
            bool lifted = quotient.has_value();
            if (lifted && quotient->dim() > 0) {
                Embedding k2 = embed_into_seeds(*quotient, seeds, n, f);
                const Matrix d = k2.map * cokernel(j.map).projection;
                lifted = is_injective(k2.map) && blocks_in_hom_spans(d, k2.copies_of, j.copies_of, cat);
            }
            if (lifted) {
                const Comodule t_q = seed_sum(j.copies_of, seeds_q, q);
                v.lift = "kernel";
                v.coaction_matches = kron(j.map, id_q) * rho_q == t_q.coaction * j.map;
            }
        }
        // Cokernel route: T -> M surjective, T' -> ker surjective.
        if (v.lift.empty()) {
            Embedding p = cover_by_seeds(m, seeds, n, f);
            if (p.map.cols() > 0 && is_surjective(p.map)) {
                const Comodule t = seed_sum(p.copies_of, seeds, n);
                const Matrix kb = kernel(p.map);
                auto sub = restrict_to(t, kb, n);
                bool lifted = sub.has_value();
                if (lifted && sub->dim() > 0) {
                    Embedding p2 = cover_by_seeds(*sub, seeds, n, f);
                    const Matrix d = kb * p2.map;
                    lifted = p2.map.cols() > 0 && is_surjective(p2.map) &&
                             blocks_in_hom_spans(d, p.copies_of, p2.copies_of, cat);
                }
                if (lifted) {
                    const Comodule t_q = seed_sum(p.copies_of, seeds_q, q);
                    v.lift = "cokernel";
                    v.coaction_matches = rho_q * p.map == kron(p.map, id_q) * t_q.coaction;
                }
            }
        }
        if (v.lift.empty())
            v.reason = "not a kernel or cokernel of a map between sums of seeds";
        else if (!v.equalizer_ok)
            v.reason = "equalizer does not reproduce the probe";
        else if (!v.coaction_matches)
            v.reason = "pulled-back coaction differs from the lifted one";
        if (!v.lift.empty()) {
            objects_c.push_back(m);
            objects_q.push_back(Comodule{m.carrier, rho_q});
            out.objects.push_back(v.name);
        }
        out.probes.push_back(std::move(v));
    }

    const std::size_t total = objects_c.size();
    out.hom_dims_c.assign(total, std::vector<std::size_t>(total, 0));
    out.hom_dims_q.assign(total, std::vector<std::size_t>(total, 0));
    for (std::size_t a = 0; a < total; ++a)
        for (std::size_t b = 0; b < total; ++b) {
            out.hom_dims_c[a][b] = comodule_morphisms(objects_c[a], objects_c[b], n).size();
            if (out.reconstruction_iso) out.hom_dims_q[a][b] = comodule_morphisms(objects_q[a], objects_q[b], q).size();
        }
    out.full = out.reconstruction_iso && out.hom_dims_c == out.hom_dims_q;
    return out;
}

}  // namespace coendforge
