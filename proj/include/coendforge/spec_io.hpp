#pragma once

// JSON spec files: categories, functors, coalgebras, comodules and
// transformations, plus the JSON encodings used for results.

#include "coendforge/padic.hpp"
#include "coendforge/reconstruct.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace coendforge {

using json = nlohmann::json;

/// Malformed input. `where` is "line L, column C" for syntax errors and a
/// JSON pointer for structural ones.
class SpecError : public std::runtime_error {
public:
    SpecError(std::string where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

struct CoalgebraEntry {
    Coalgebra coalgebra;
    std::optional<Matrix> multiplication;
    std::optional<Matrix> unit;
    std::optional<Matrix> antipode;

    std::optional<Bialgebra> bialgebra() const;
    std::optional<HopfAlgebra> hopf() const;
};

struct ComoduleEntry {
    std::string coalgebra;
    Comodule comodule;
};

struct TransformationEntry {
    std::string functor;
    std::size_t target_dim = 0;
    Transformation transformation;
};

struct SpecFile {
    Field field = Field::rational();
    std::map<std::string, FinCategory> categories;
    std::map<std::string, DiagramFunctor> functors;
    std::map<std::string, CoalgebraEntry> coalgebras;
    std::map<std::string, ComoduleEntry> comodules;
    std::map<std::string, TransformationEntry> transformations;

    const DiagramFunctor& functor(const std::string& name) const;
    const CoalgebraEntry& coalgebra(const std::string& name) const;
    const ComoduleEntry& comodule(const std::string& name) const;
    const TransformationEntry& transformation(const std::string& name) const;
};

/// Parses and resolves names; throws SpecError. Laws are not checked here.
SpecFile parse_spec(const std::string& text, std::optional<Field> field_override = std::nullopt);
SpecFile load_spec(const std::string& path, std::optional<Field> field_override = std::nullopt);

/// Every law the file asserts: category tables, functoriality, monoidal and
/// dual data, coalgebra and comodule axioms.
ValidationReport validate_spec(const SpecFile& spec);

/// Row-major array of strings such as "3/4".
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, Field f, std::size_t rows, std::size_t cols, const std::string& where);
json norm_to_json(const NormValue& n);

}  // namespace coendforge
