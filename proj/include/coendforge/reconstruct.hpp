#pragma once

// Finite comodule categories, reconstruction of a coalgebra (or bialgebra)
// as the coend of the forgetful functor, and the finite-stage equivalence
// check between C-comodules and coend-comodules.

#include "coendforge/coend.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace coendforge {

/// A basis of Hom_C(V, W), from the linear system (g ⊗ id) ∘ rho_V = rho_W ∘ g.
std::vector<Matrix> comodule_morphisms(const Comodule& v, const Comodule& w, std::size_t dim_c);

/// V* with v^i |-> sum_j v^j ⊗ S(c_ij), where rho(v_i) = sum_j v_j ⊗ c_ji.
Comodule dual_comodule(const Comodule& v, const HopfAlgebra& h);

/// An invertible element of span(basis), if one is found by a deterministic search.
std::optional<Matrix> find_invertible(const std::vector<Matrix>& basis);

struct ComoduleCategory {
    Coalgebra base;
    std::vector<std::string> names;
    std::vector<Comodule> objects;
    /// hom[{v, w}] is a basis of Hom_C(objects[v], objects[w]).
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Matrix>> hom;
    /// Present when the seeds are closed under tensor products up to isomorphism.
    std::optional<TensorStructure> tensor;
    /// Present when every seed has its dual among the seeds.
    std::optional<DualStructure> duals;

    /// Coefficients of hom(v,w)[b] ∘ hom(u,v)[a] in the basis of hom(u,w).
    std::vector<mpq_class> compose(std::size_t u, std::size_t v, std::size_t w, std::size_t a, std::size_t b) const;
    /// The forgetful functor: every basis morphism as an arrow.
    Representation representation() const;
};

/// Throws AxiomFailure if a seed is not a C-comodule.
ComoduleCategory comodule_category_of(const Coalgebra& c, const std::vector<Comodule>& seeds,
                                      const std::vector<std::string>& names = {});

/// Adds tensor (and, for Hopf algebras, dual) structure by locating each
/// V_a ⊗ V_b among the seeds up to comodule isomorphism. Throws
/// MissingStructure when the seeds are not closed.
void attach_monoidal_structure(ComoduleCategory& cat, const Bialgebra& b);
void attach_dual_structure(ComoduleCategory& cat, const HopfAlgebra& h);

/// Every listed morphism intertwines and every composite lies in the hom span.
AxiomReport check_comodule_category(const ComoduleCategory& cat);

enum class ReconstructionVerdict { Generated, NotGenerated, NotIsomorphic };
std::string to_string(ReconstructionVerdict v);

struct Reconstruction {
    ComoduleCategory category;
    CoendResult coend;
    Matrix h;  // Q -> C, h ∘ i_X = coact(rho_X)
    bool injective = false;
    bool surjective = false;
    bool coalgebra_morphism = false;
    ReconstructionVerdict verdict = ReconstructionVerdict::NotGenerated;
    std::optional<Bialgebra> bialgebra;      // on Q
    std::optional<HopfAlgebra> hopf;         // on Q
    std::optional<bool> multiplication_transported;  // h ∘ m_Q = m_C ∘ (h ⊗ h), h ∘ u_Q = u_C
    std::optional<bool> antipode_transported;        // h ∘ S_Q = S_C ∘ h
};

Reconstruction reconstruct_coalgebra(const Coalgebra& c, const std::vector<Comodule>& seeds,
                                     const std::vector<std::string>& names = {});
/// Additionally reconstructs m and u (and S for Hopf input) and compares them
/// with the given structure along h.
Reconstruction reconstruct_bialgebra(const Bialgebra& b, const std::vector<Comodule>& seeds,
                                     const std::vector<std::string>& names = {});
Reconstruction reconstruct_hopf(const HopfAlgebra& h, const std::vector<Comodule>& seeds,
                                const std::vector<std::string>& names = {});

struct Recognition {
    CoendResult coend;
    std::vector<Comodule> objects;           // (F(X), δ_F(X))
    std::vector<std::string> failures;       // morphisms that are not comodule maps
    bool ok() const { return failures.empty(); }
};

/// Lifts F to coend(F)-comodules and verifies every F(f) is a comodule map.
Recognition recognition_factorization(const DiagramFunctor& f);
Recognition recognition_factorization(const Representation& rep);

struct ProbeVerdict {
    std::string name;
    bool valid = false;             // comodule axioms over C
    bool equalizer_ok = false;      // ker(rho ⊗ id - id ⊗ Δ) = rho(M)
    /// "kernel": M = ker(⊕ seeds -> ⊕ seeds); "cokernel": M = coker(⊕ seeds -> ⊕ seeds).
    std::string lift;
    bool coaction_matches = false;  // the pulled-back coaction agrees with δ_F on the lift
    std::string reason;
    bool ok() const { return valid && equalizer_ok && !lift.empty() && coaction_matches; }
};

struct EquivalenceVerdict {
    std::vector<ProbeVerdict> probes;
    std::vector<std::string> objects;         // seeds then valid probes
    std::vector<std::vector<std::size_t>> hom_dims_c;  // over C
    std::vector<std::vector<std::size_t>> hom_dims_q;  // over Q
    bool reconstruction_iso = false;
    bool full = false;
    bool ok() const;
};

EquivalenceVerdict equivalence_check(const Reconstruction& rec, const std::vector<Comodule>& probes,
                                     const std::vector<std::string>& probe_names = {});

/// C as a comodule over itself.
Comodule regular_comodule(const Coalgebra& c);
/// Direct sum with the block-diagonal coaction.
Comodule direct_sum_comodule(const std::vector<Comodule>& parts, std::size_t dim_c);

}  // namespace coendforge
