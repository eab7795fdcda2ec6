#pragma once

// Cohomomorphism objects in finite-dimensional vector spaces.
//
// cohom(X, Y) is realized as Y* ⊗ X. The basis vector e_(j,i) = y'_j ⊗ x_i
// sits at index j * dim(X) + i, and the universal coevaluation is
//     coev(x_i) = sum_j y_j ⊗ e_(j,i).
// Every structure map below is a finite matrix in these bases.

#include "coendforge/linalg.hpp"

#include <string>
#include <vector>

namespace coendforge {

class AxiomFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Result of an exact axiom check. `failures` names every violated identity.
struct AxiomReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
    void require(bool cond, std::string what) {
        if (!cond) failures.push_back(std::move(what));
    }
    void merge(const AxiomReport& other, const std::string& prefix = "");
};

struct CohomObject {
    SpaceObject source;  // X
    SpaceObject target;  // Y
    SpaceObject carrier;  // Y* ⊗ X
    Matrix coev;          // X -> Y ⊗ carrier
};

CohomObject cohom(Field f, const SpaceObject& x, const SpaceObject& y);

/// coev_{X,Y} as a bare matrix.
Matrix coevaluation(Field f, std::size_t dim_x, std::size_t dim_y);

/// The unique c : cohom(X, Y) -> Z with (id_Y ⊗ c) ∘ coev = phi, where
/// phi : X -> Y ⊗ Z.
Matrix coact(const Matrix& phi, std::size_t dim_x, std::size_t dim_y, std::size_t dim_z);
/// Checked variant: the codomain of phi must factor as Y ⊗ Z.
LinearMap coact(const LinearMap& phi, const SpaceObject& y, const SpaceObject& z);

/// Inverse of coact: c |-> (id_Y ⊗ c) ∘ coev_{X,Y}.
Matrix uncoact(const Matrix& c, std::size_t dim_x, std::size_t dim_y);

/// Cocomposition cohom(X,Y) -> cohom(Z,Y) ⊗ cohom(X,Z).
Matrix cocompose(Field f, std::size_t dim_x, std::size_t dim_y, std::size_t dim_z);

/// cohom(f, id_Y) : cohom(X,Y) -> cohom(X',Y) for f : X -> X'.
Matrix cohom_covariant(const Matrix& f, std::size_t dim_y);
/// cohom(id_X, g^op) : cohom(X,Y') -> cohom(X,Y) for g : Y -> Y'.
Matrix cohom_contravariant(const Matrix& g, std::size_t dim_x);

/// The carrier isomorphism cohom(cohom(X,Y), Z) -> cohom(X, Y ⊗ Z) realizing
/// the adjunction bijection Hom(cohom(cohom(X,Y),Z), T) = Hom(cohom(X,Y⊗Z), T).
Matrix cohom_adjunction_iso(Field f, std::size_t dim_x, std::size_t dim_y, std::size_t dim_z);

/// ev : X* ⊗ X -> K and db : K -> X ⊗ X* for the dual basis.
Matrix evaluation(Field f, std::size_t dim_x);
Matrix dual_basis_coevaluation(Field f, std::size_t dim_x);

struct Coalgebra {
    SpaceObject carrier;
    Matrix comultiplication;  // C -> C ⊗ C
    Matrix counit;            // C -> K

    std::size_t dim() const { return carrier.dim(); }
    const Field& field() const { return comultiplication.field(); }
};

struct Comodule {
    SpaceObject carrier;
    Matrix coaction;  // V -> V ⊗ C

    std::size_t dim() const { return carrier.dim(); }
};

struct Bialgebra {
    Coalgebra coalgebra;
    Matrix multiplication;  // H ⊗ H -> H
    Matrix unit;            // K -> H
};

struct HopfAlgebra {
    Bialgebra bialgebra;
    Matrix antipode;  // H -> H

    const Coalgebra& coalgebra() const { return bialgebra.coalgebra; }
};

AxiomReport check_coalgebra(const Coalgebra& c);
AxiomReport check_comodule(const Comodule& m, const Coalgebra& c);
AxiomReport check_bialgebra(const Bialgebra& b);
AxiomReport check_hopf(const HopfAlgebra& h);
/// (g ⊗ id) ∘ rho_V = rho_W ∘ g
bool is_comodule_morphism(const Matrix& g, const Comodule& v, const Comodule& w, std::size_t dim_c);
/// Delta_D ∘ h = (h ⊗ h) ∘ Delta_C and eps_D ∘ h = eps_C.
bool is_coalgebra_morphism(const Matrix& h, const Coalgebra& from, const Coalgebra& to);

/// Tensor product of comodules over a bialgebra: v ⊗ w |-> v0 ⊗ w0 ⊗ v1 w1.
Comodule tensor_comodule(const Comodule& v, const Comodule& w, const Bialgebra& b);
/// K with coaction 1 |-> 1 ⊗ u(1).
Comodule trivial_comodule(const Bialgebra& b);

/// coend(X) = cohom(X, X) with its coalgebra structure; X is its comodule via coev.
struct CoendomorphismObject {
    CohomObject cohom;
    Coalgebra coalgebra;
    Comodule comodule;
};

CoendomorphismObject coend_object(Field f, const SpaceObject& x);

/// For a C-comodule (X, phi): rho_phi = coact((coev_X ⊗ id_C) ∘ phi) and the
/// coalgebra morphism z = coact(phi) : coend(X) -> C.
struct InducedCoaction {
    Matrix rho_phi;  // coend(X) -> coend(X) ⊗ C
    Matrix z;        // coend(X) -> C
};

/// Throws AxiomFailure when (X, phi) is not a C-comodule.
InducedCoaction induce_coaction(const Comodule& x, const Coalgebra& c);

/// Right H-coactions on cohom(X, Y) for H-comodules X, Y.
struct CohomCoactions {
    Matrix right;     // rho^r, from rho_X
    Matrix left_raw;  // cohom -> H ⊗ cohom, from rho_Y
    Matrix left;      // (id ⊗ S) ∘ swap ∘ left_raw
    Matrix combined;  // (id ⊗ m) ∘ (left ⊗ id) ∘ right
};

/// Throws AxiomFailure when H or the comodules fail their axioms.
CohomCoactions cohom_coactions(const Comodule& x, const Comodule& y, const HopfAlgebra& h);

}  // namespace coendforge
