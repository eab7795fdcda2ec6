#pragma once

// Nonarchimedean normed linear algebra with norms in p^Z: weighted sup
// norms, operator and quotient norms, Banach sums and colimits of finite
// diagrams, bounded transformations and the bounded coend.

#include "coendforge/coend.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace coendforge {

class PrimeMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Either 0 or p^exp.
class NormValue {
public:
    NormValue() = default;
    static NormValue zero() { return NormValue{}; }
    static NormValue power(long exp) { return NormValue{exp}; }

    bool is_zero() const { return !exp_; }
    long exp() const { return exp_.value(); }
    const std::optional<long>& exponent() const { return exp_; }

    /// Adds exponents; zero absorbs.
    NormValue operator*(const NormValue& o) const;
    NormValue operator/(const NormValue& o) const;  // o must be nonzero
    std::strong_ordering operator<=>(const NormValue& o) const;
    bool operator==(const NormValue& o) const = default;

    /// "0" or "p^e".
    std::string to_string() const;

private:
    explicit NormValue(long e) : exp_(e) {}
    std::optional<long> exp_;
};

NormValue max(const NormValue& a, const NormValue& b);

/// |x|_p.
NormValue padic_abs(const mpq_class& x, std::uint32_t p);

/// A space with ‖e_i‖ = p^{-w_i} and the sup norm over coordinates.
struct NormedSpace {
    SpaceObject space;
    std::uint32_t p = 2;
    std::vector<long> weights;

    NormedSpace() = default;
    NormedSpace(SpaceObject s, std::uint32_t prime);

    std::size_t dim() const { return weights.size(); }
    NormValue basis_norm(std::size_t i) const { return NormValue::power(-weights[i]); }
};

/// ‖v‖ = max_i |v_i|_p p^{-w_i} for a column vector v.
NormValue vector_norm(const NormedSpace& s, const Matrix& v);

/// max_{i,j} |m_ji|_p p^{-u_j + w_i} for m: from -> to. Throws PrimeMismatch.
NormValue operator_norm(const Matrix& m, const NormedSpace& from, const NormedSpace& to);

/// Banach direct sum (max norm, concatenated weights). For finite lists it is
/// also the Banach product.
NormedSpace banach_sum(const std::vector<NormedSpace>& parts, std::uint32_t p);
NormedSpace banach_product(const std::vector<NormedSpace>& parts, std::uint32_t p);

/// Tensor product of orthogonal bases: weights add.
NormedSpace normed_tensor(const NormedSpace& x, const NormedSpace& y);

struct QuotientNorm {
    NormValue value;
    Matrix witness;          // w in W with ‖v - w‖ = value
    bool certified = false;  // the brute-force search ran and agreed
};

/// inf_{w in span(w_basis)} ‖v - w‖ by norm-adapted Gauss-Jordan reduction.
/// With `certify`, the result is compared against brute_force_quotient_norm
/// when its search is small enough; disagreement throws std::logic_error.
QuotientNorm quotient_norm(const NormedSpace& s, const Matrix& w_basis, const Matrix& v, bool certify = true);

/// Exhaustive minimization over truncated p-adic expansions of the
/// coefficients in a standard echelon basis of W. The window is bounded below
/// by ‖v - w‖ <= ‖v‖ and above by a dual-functional lower bound on the
/// distance. nullopt when more than max_candidates points would be visited.
std::optional<NormValue> brute_force_quotient_norm(const NormedSpace& s, const Matrix& w_basis, const Matrix& v,
                                                   std::size_t max_candidates = 1u << 16);

/// V / span(relations) with the quotient norm. The classes of the
/// coordinates that are not pivots of the norm-adapted relation basis form an
/// orthogonal basis; `orthogonal` is that space and `to_orthogonal` converts
/// coordinates in the canonical cokernel basis into it.
struct NormedQuotient {
    NormedSpace ambient;
    Matrix relations;
    Cokernel cokernel;
    NormedSpace orthogonal;
    Matrix to_orthogonal;
    Matrix from_orthogonal;

    std::size_t dim() const { return cokernel.kept.size(); }
    /// Quotient norm of a vector given in the cokernel basis.
    NormValue norm(const Matrix& q) const;
};

NormedQuotient normed_quotient(const NormedSpace& ambient, const Matrix& relations);

/// Norms of maps into and out of a normed quotient, in its cokernel basis.
NormValue operator_norm_into(const Matrix& m, const NormedSpace& from, const NormedQuotient& to);
NormValue operator_norm_out_of(const Matrix& m, const NormedQuotient& from, const NormedSpace& to);

struct BanachColimit {
    NormedQuotient quotient;                   // (⊕ F) / I
    std::vector<std::size_t> block_offset;
    std::vector<Matrix> cocone;                // F(x) -> Q
    std::vector<NormValue> cocone_norms;
    std::vector<NormValue> basis_norms;        // quotient norm of each basis class of Q
    std::string closure = "identity: the relation span is finite-dimensional, hence closed";
};

/// Colimit of F with every F(x) normed by its weights.
BanachColimit banach_colimit(const DiagramFunctor& f, std::uint32_t p);
BanachColimit banach_colimit(const Representation& rep, std::uint32_t p);

struct BoundedTransformation {
    Transformation transformation;
    std::vector<NormValue> component_norms;
    NormValue bound;
};

BoundedTransformation check_bounded(const Transformation& t, const std::vector<NormedSpace>& sources,
                                    const std::vector<NormedSpace>& targets);

struct BoundedCoend {
    CoendResult coend;  // identical to the algebraic coend
    NormedQuotient quotient;
    std::vector<NormValue> basis_norms;
    NormValue projection_norm;
    std::vector<NormValue> injection_norms;
    NormValue comultiplication_norm;
    NormValue counit_norm;
    BoundedTransformation delta;
    std::string closure = "identity: the relation span is finite-dimensional, hence closed";
};

/// The prime is taken from a padic:p field when not given.
BoundedCoend bounded_coend(const DiagramFunctor& f, std::optional<std::uint32_t> p = std::nullopt);
BoundedCoend bounded_coend(const Representation& rep, std::uint32_t p);

}  // namespace coendforge
