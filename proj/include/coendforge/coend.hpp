#pragma once

// The coend of a functor into based vector spaces, computed as the cokernel
//     Q = coker(p - q : M -> N),  N = ⊕_c cohom(F(c), F(c)),
// with one relation block cohom(F(dom f), F(cod f)) per listed arrow f and
// per control action. Induced structure maps are obtained by solving
// psi ∘ π = target and verifying the solution exactly.

#include "coendforge/fincat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coendforge {

/// An induced map would not be well defined on the quotient.
class WellDefinednessFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NaturalityFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MissingDual : public MissingStructure {
public:
    using MissingStructure::MissingStructure;
};

class MissingActionData : public MissingStructure {
public:
    using MissingStructure::MissingStructure;
};

struct CoendResult {
    Representation source;
    std::vector<std::string> controls;     // names of the control objects applied
    std::vector<std::size_t> block_offset;  // start of the c-th summand in N
    std::size_t dim_n = 0;
    Matrix relations;   // p - q : M -> N
    SpaceObject carrier;
    Matrix projection;  // π : N -> Q
    Matrix section;     // s : Q -> N, π ∘ s = id
    std::vector<Matrix> injections;  // i_X = π restricted to the X-summand
    Coalgebra coalgebra;

    const Field& field() const { return source.field; }
    std::size_t dim() const { return carrier.dim(); }
};

/// Comatrix structure maps of cohom(V, V) for dim V = d, built directly:
/// Δ(e_(j,i)) = sum_k e_(j,k) ⊗ e_(k,i), ε(e_(j,i)) = δ_ji.
Matrix comatrix_comultiplication(Field f, std::size_t d);
Matrix comatrix_counit(Field f, std::size_t d);

CoendResult coend_of_representation(const Representation& rep);
CoendResult coend_of_functor(const DiagramFunctor& f);

/// Coend with the additional relations contributed by each control action.
/// Throws MissingActionData when an action refers to an unknown object or
/// has a map of the wrong shape.
CoendResult c_coend(const Representation& rep, const std::vector<ControlObject>& controls);
CoendResult c_coend(const DiagramFunctor& f, const std::vector<ControlObject>& controls);

/// Δ_Q ∘ π = (π ⊗ π) ∘ Δ_N and ε_Q ∘ π = ε_N. Throws WellDefinednessFailure
/// if no such maps exist, AxiomFailure if the result is not a coalgebra.
Coalgebra coalgebra_on_coend(const CoendResult& r);

/// ρ_X = (id ⊗ i_X) ∘ coev_{F(X)}.
Comodule comodule_on(const CoendResult& r, std::size_t object);
/// The family δ_F as a transformation F -> F ⊗ Q.
Transformation delta_transformation(const CoendResult& r);

/// The arrows of F ⊗ M.
Representation tensor_with(const Representation& rep, std::size_t dim_m);

/// w_X = coact(t_X). Throws NaturalityFailure unless t : F -> F ⊗ M is natural.
std::vector<Matrix> nat_to_cowedge(const Transformation& t, const Representation& rep, std::size_t dim_m);
/// t_X = (id ⊗ w_X) ∘ coev. Throws NaturalityFailure unless w is dinatural.
Transformation cowedge_to_nat(const std::vector<Matrix>& w, const Representation& rep);

/// The unique psi : Q -> M with (id ⊗ psi) ∘ δ_F(X) = t_X. Throws NoSolution
/// when t is not natural.
Matrix factor_through_coend(const CoendResult& r, const Transformation& t, std::size_t dim_m);

/// h : Q -> Q' with h ∘ i_X = i'_X, where `to` has a superset of the relations
/// of `from`. Verified surjective and a coalgebra morphism.
Matrix epi_to_c_coend(const CoendResult& from, const CoendResult& to);

/// m_Q, u_Q induced by the monoidal structure; bialgebra axioms verified.
Bialgebra bialgebra_on_coend(const CoendResult& r, const TensorStructure& t);
Bialgebra bialgebra_on_coend(const DiagramFunctor& f, const CoendResult& r);

/// S_Q induced by the duality; antipode axioms verified.
HopfAlgebra antipode_on_coend(const CoendResult& r, const Bialgebra& b, const DualStructure& d);
HopfAlgebra antipode_on_coend(const DiagramFunctor& f, const CoendResult& r, const Bialgebra& b);

}  // namespace coendforge
