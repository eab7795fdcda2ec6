#pragma once

// Finitely presented categories given by total composition tables, and
// functors from them into based vector spaces.

#include "coendforge/cohom.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace coendforge {

/// Requested monoidal, dual or control data is absent.
class MissingStructure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct MorphismRecord {
    std::string name;
    std::size_t dom = 0;
    std::size_t cod = 0;
};

/// A report listing every violated law; empty means valid.
struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
    void add(std::string v) { violations.push_back(std::move(v)); }
};

/// Strict monoidal structure on a finite category, as tables.
struct CategoryMonoidalData {
    std::size_t unit = 0;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> object_tensor;
    /// (f, g) |-> f ⊗ g for pairs with at least one non-identity morphism.
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> morphism_tensor;
};

/// Objects, morphisms and a composition table. Identity morphisms occupy
/// indices [0, object_count) and are named "id_<object>".
class FinCategory {
public:
    FinCategory() = default;

    struct CompositionEntry {
        std::string after;   // g
        std::string before;  // f
        std::string result;  // g ∘ f
    };

    /// Synthesizes identities; throws std::invalid_argument on unknown names.
    /// Law violations are left for validate_category to report.
    FinCategory(std::vector<std::string> objects, const std::vector<MorphismRecord>& morphisms,
                const std::vector<CompositionEntry>& composition);

    std::size_t object_count() const { return objects_.size(); }
    std::size_t morphism_count() const { return morphisms_.size(); }
    const std::vector<std::string>& objects() const { return objects_; }
    const std::vector<MorphismRecord>& morphisms() const { return morphisms_; }
    const MorphismRecord& morphism(std::size_t m) const { return morphisms_.at(m); }

    std::size_t object_index(const std::string& name) const;
    std::size_t morphism_index(const std::string& name) const;
    bool is_identity(std::size_t m) const { return m < objects_.size(); }
    std::size_t identity(std::size_t object) const { return object; }

    /// g ∘ f when the table (or an identity law) defines it.
    std::optional<std::size_t> compose(std::size_t g, std::size_t f) const;
    const std::map<std::pair<std::size_t, std::size_t>, std::size_t>& table() const { return table_; }

    const std::optional<CategoryMonoidalData>& monoidal() const { return monoidal_; }
    void set_monoidal(CategoryMonoidalData m) { monoidal_ = std::move(m); }

    /// Declared duals: object |-> dual object.
    const std::map<std::size_t, std::size_t>& duals() const { return duals_; }
    void set_dual(std::size_t object, std::size_t dual_object) { duals_[object] = dual_object; }

private:
    std::vector<std::string> objects_;
    std::vector<MorphismRecord> morphisms_;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> table_;
    std::optional<CategoryMonoidalData> monoidal_;
    std::map<std::size_t, std::size_t> duals_;
};

ValidationReport validate_category(const FinCategory& c);

/// Monoidal structure maps of a functor: xi_{X,Y} : F(X) ⊗ F(Y) -> F(X ⊗ Y)
/// and xi_I : K -> F(I).
struct FunctorMonoidalData {
    std::map<std::pair<std::size_t, std::size_t>, Matrix> xi;
    Matrix xi_unit;
};

/// A control object C acting on source objects: C ⊗ object = result, with
/// xi : F(result) -> C ⊗ F(object).
struct ControlAction {
    std::size_t object = 0;
    std::size_t result = 0;
    Matrix xi;
};

struct ControlObject {
    std::string name;
    SpaceObject space;
    std::vector<ControlAction> actions;
};

/// The unit control K acting trivially on every object.
ControlObject unit_control(Field f, const std::vector<SpaceObject>& spaces);

/// Objects with spaces and a list of arrows with matrices: the data the
/// coequalizer needs. Composites and identities need not be listed, since
/// their relations follow from those of the listed arrows.
struct Representation {
    struct Arrow {
        std::string name;
        std::size_t dom = 0;
        std::size_t cod = 0;
        Matrix value;
    };
    Field field = Field::rational();
    std::vector<std::string> object_names;
    std::vector<SpaceObject> spaces;
    std::vector<Arrow> arrows;
};

/// Everything the monoidal coend constructions need, independent of where
/// the tensor table came from.
struct TensorStructure {
    std::size_t unit = 0;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> object_tensor;
    std::map<std::pair<std::size_t, std::size_t>, Matrix> xi;
    Matrix xi_unit;
};

/// dual_of[X] = X*, pairing[X] : F(X*) -> F(X)* (an isomorphism).
struct DualStructure {
    std::map<std::size_t, std::size_t> dual_of;
    std::map<std::size_t, Matrix> pairing;
};

class DiagramFunctor {
public:
    DiagramFunctor() = default;
    /// `morphism_values` covers non-identity morphisms by name; identities
    /// are synthesized.
    DiagramFunctor(std::string name, FinCategory source, Field field, std::vector<SpaceObject> object_spaces,
                   const std::map<std::string, Matrix>& morphism_values);

    const std::string& name() const { return name_; }
    const FinCategory& source() const { return source_; }
    const Field& field() const { return field_; }
    const SpaceObject& space(std::size_t object) const { return spaces_.at(object); }
    const std::vector<SpaceObject>& spaces() const { return spaces_; }
    const Matrix& value(std::size_t morphism) const { return values_.at(morphism); }

    const std::optional<FunctorMonoidalData>& monoidal() const { return monoidal_; }
    void set_monoidal(FunctorMonoidalData m) { monoidal_ = std::move(m); }

    const std::map<std::size_t, Matrix>& dual_pairings() const { return dual_pairings_; }
    void set_dual_pairing(std::size_t object, Matrix pairing) { dual_pairings_[object] = std::move(pairing); }

    const std::vector<ControlObject>& controls() const { return controls_; }
    void add_control(ControlObject c) { controls_.push_back(std::move(c)); }

    /// Non-identity morphisms as arrows.
    Representation representation() const;
    /// Requires monoidal data on source and functor.
    TensorStructure tensor_structure() const;
    DualStructure dual_structure() const;

private:
    std::string name_;
    FinCategory source_;
    Field field_ = Field::rational();
    std::vector<SpaceObject> spaces_;
    std::vector<Matrix> values_;
    std::optional<FunctorMonoidalData> monoidal_;
    std::map<std::size_t, Matrix> dual_pairings_;
    std::vector<ControlObject> controls_;
};

/// F ⊗ M: objects X |-> F(X) ⊗ M, morphisms f |-> F(f) ⊗ id_M.
DiagramFunctor tensor_with(const DiagramFunctor& f, const SpaceObject& m);

ValidationReport validate_functor(const DiagramFunctor& f);

/// Componentwise transformation; components[X] : F(X) -> G(X).
struct Transformation {
    std::vector<Matrix> components;
};

/// G(f) ∘ t_X = t_Y ∘ F(f) for every morphism f : X -> Y.
bool check_natural(const Transformation& t, const DiagramFunctor& from, const DiagramFunctor& to);
bool check_natural(const Transformation& t, const Representation& from, const Representation& to);

/// Components w_c : cohom(F(c), F(c)) -> M. True iff for every f : c -> c'
/// w_c ∘ cohom(id, F(f)^op) = w_c' ∘ cohom(F(f), id) on cohom(F(c), F(c')).
bool check_dinatural(const std::vector<Matrix>& components, const Representation& f);
bool check_dinatural(const std::vector<Matrix>& components, const DiagramFunctor& f);

/// Validates the strict monoidal tables and the compatibility of xi.
ValidationReport check_monoidal(const DiagramFunctor& f);

}  // namespace coendforge
