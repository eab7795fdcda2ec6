#include "coendforge/spec_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace coendforge {

namespace {

std::string child(const std::string& where, const std::string& key) { return where + "/" + key; }

const json& require(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) throw SpecError(where, "missing \"" + key + "\"");
    return obj.at(key);
}

std::string as_string(const json& j, const std::string& where) {
    if (!j.is_string()) throw SpecError(where, "expected a string");
    return j.get<std::string>();
}

std::size_t as_size(const json& j, const std::string& where) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long>() >= 0))
        throw SpecError(where, "expected a non-negative integer");
    return j.get<std::size_t>();
}

std::vector<std::string> string_list(const json& j, const std::string& where) {
    if (!j.is_array()) throw SpecError(where, "expected an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_string(j[i], child(where, std::to_string(i))));
    return out;
}

mpq_class scalar_from_json(const json& j, const std::string& where) {
    try {
        if (j.is_string()) return parse_rational(j.get<std::string>());
        if (j.is_number_integer()) return mpq_class(j.get<long>());
    } catch (const std::exception& e) {
        throw SpecError(where, e.what());
    }
    throw SpecError(where, "expected an exact scalar such as \"3/4\" or an integer");
}

// Shape from content; an empty array means a matrix with a zero dimension.
Matrix matrix_any(const json& j, Field f, const std::string& where, std::size_t rows_if_empty = 0,
                  std::size_t cols_if_empty = 0) {
    if (!j.is_array()) throw SpecError(where, "expected a matrix (array of rows)");
    if (j.empty()) return Matrix(f, rows_if_empty, cols_if_empty);
    const std::size_t rows = j.size();
    if (!j[0].is_array()) throw SpecError(child(where, "0"), "expected a row array");
    const std::size_t cols = j[0].size();
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::string rw = child(where, std::to_string(r));
        if (!j[r].is_array() || j[r].size() != cols)
            throw SpecError(rw, "row has " + std::to_string(j[r].is_array() ? j[r].size() : 0) + " entries, expected " +
                                    std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c)
            m.ref(r, c) = f.from_rational(scalar_from_json(j[r][c], child(rw, std::to_string(c))));
    }
    return m;
}

std::string line_column(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

FinCategory parse_category(const json& j, const std::string& where) {
    std::vector<std::string> objects = string_list(require(j, "objects", where), child(where, "objects"));
    std::vector<MorphismRecord> morphisms;
    std::vector<FinCategory::CompositionEntry> composition;
    auto index_of = [&](const std::string& name, const std::string& at) {
        for (std::size_t i = 0; i < objects.size(); ++i)
            if (objects[i] == name) return i;
        throw SpecError(at, "unknown object '" + name + "'");
    };
    if (j.contains("morphisms")) {
        const json& ms = j.at("morphisms");
        const std::string mw = child(where, "morphisms");
        if (!ms.is_array()) throw SpecError(mw, "expected an array");
        for (std::size_t i = 0; i < ms.size(); ++i) {
            const std::string at = child(mw, std::to_string(i));
            MorphismRecord rec;
            rec.name = as_string(require(ms[i], "name", at), child(at, "name"));
            rec.dom = index_of(as_string(require(ms[i], "dom", at), child(at, "dom")), child(at, "dom"));
            rec.cod = index_of(as_string(require(ms[i], "cod", at), child(at, "cod")), child(at, "cod"));
            morphisms.push_back(std::move(rec));
        }
    }
    if (j.contains("composition")) {
        const json& cs = j.at("composition");
        const std::string cw = child(where, "composition");
        if (!cs.is_array()) throw SpecError(cw, "expected an array");
        for (std::size_t i = 0; i < cs.size(); ++i) {
            const std::string at = child(cw, std::to_string(i));
            composition.push_back({as_string(require(cs[i], "g", at), child(at, "g")),
                                   as_string(require(cs[i], "f", at), child(at, "f")),
                                   as_string(require(cs[i], "result", at), child(at, "result"))});
        }
    }
    FinCategory c = [&] {
        try {
            return FinCategory(objects, morphisms, composition);
        } catch (const std::invalid_argument& e) {
            throw SpecError(where, e.what());
        }
    }();
    auto object = [&](const json& n, const std::string& at) {
        try {
            return c.object_index(as_string(n, at));
        } catch (const SpecError&) {
            throw;
        } catch (const std::exception&) {
            throw SpecError(at, "unknown object '" + n.get<std::string>() + "'");
        }
    };
    auto morphism = [&](const json& n, const std::string& at) {
        try {
            return c.morphism_index(as_string(n, at));
        } catch (const SpecError&) {
            throw;
        } catch (const std::exception&) {
            throw SpecError(at, "unknown morphism '" + n.get<std::string>() + "'");
        }
    };
    if (j.contains("monoidal")) {
        const json& mj = j.at("monoidal");
        const std::string mw = child(where, "monoidal");
        CategoryMonoidalData mon;
        mon.unit = object(require(mj, "unit", mw), child(mw, "unit"));
        if (mj.contains("objects")) {
            const json& t = mj.at("objects");
            for (std::size_t i = 0; i < t.size(); ++i) {
                const std::string at = child(child(mw, "objects"), std::to_string(i));
                if (!t[i].is_array() || t[i].size() != 3) throw SpecError(at, "expected [x, y, x⊗y]");
                mon.object_tensor[{object(t[i][0], at), object(t[i][1], at)}] = object(t[i][2], at);
            }
        }
        if (mj.contains("morphisms")) {
            const json& t = mj.at("morphisms");
            for (std::size_t i = 0; i < t.size(); ++i) {
                const std::string at = child(child(mw, "morphisms"), std::to_string(i));
                if (!t[i].is_array() || t[i].size() != 3) throw SpecError(at, "expected [f, g, f⊗g]");
                mon.morphism_tensor[{morphism(t[i][0], at), morphism(t[i][1], at)}] = morphism(t[i][2], at);
            }
        }
        c.set_monoidal(std::move(mon));
    }
    if (j.contains("duals")) {
        const std::string dw = child(where, "duals");
        for (const auto& [x, xd] : j.at("duals").items())
            c.set_dual(object(json(x), dw), object(xd, child(dw, x)));
    }
    return c;
}

SpaceObject parse_space(const json& j, const std::string& name, const std::string& where) {
    if (j.is_number()) return SpaceObject::standard(as_size(j, where), name);
    const std::size_t dim = as_size(require(j, "dim", where), child(where, "dim"));
    std::vector<std::string> labels = SpaceObject::standard(dim, name).labels();
    if (j.contains("labels")) {
        labels = string_list(j.at("labels"), child(where, "labels"));
        if (labels.size() != dim) throw SpecError(child(where, "labels"), "label count differs from dim");
    }
    std::optional<std::vector<long>> weights;
    if (j.contains("weights")) {
        const json& w = j.at("weights");
        if (!w.is_array() || w.size() != dim) throw SpecError(child(where, "weights"), "expected one integer per basis vector");
        weights.emplace();
        for (std::size_t i = 0; i < dim; ++i) {
            if (!w[i].is_number_integer()) throw SpecError(child(child(where, "weights"), std::to_string(i)), "expected an integer");
            weights->push_back(w[i].get<long>());
        }
    }
    try {
        return SpaceObject(std::move(labels), std::move(weights));
    } catch (const std::exception& e) {
        throw SpecError(where, e.what());
    }
}

DiagramFunctor parse_functor(const std::string& name, const json& j, const SpecFile& spec, const std::string& where) {
    const std::string cat_name = as_string(require(j, "category", where), child(where, "category"));
    auto cit = spec.categories.find(cat_name);
    if (cit == spec.categories.end()) throw SpecError(child(where, "category"), "unknown category '" + cat_name + "'");
    const FinCategory& c = cit->second;
    const Field f = spec.field;
    const json& objs = require(j, "objects", where);
    const std::string ow = child(where, "objects");
    std::vector<SpaceObject> spaces;
    for (const auto& o : c.objects()) {
        if (!objs.contains(o)) throw SpecError(ow, "no space for object '" + o + "'");
        spaces.push_back(parse_space(objs.at(o), o, child(ow, o)));
    }
    for (const auto& [o, _] : objs.items())
        if (std::find(c.objects().begin(), c.objects().end(), o) == c.objects().end())
            throw SpecError(child(ow, o), "unknown object '" + o + "'");
    std::map<std::string, Matrix> values;
    if (j.contains("morphisms")) {
        const std::string mw = child(where, "morphisms");
        for (const auto& [m, v] : j.at("morphisms").items()) {
            std::size_t idx;
            try {
                idx = c.morphism_index(m);
            } catch (const std::exception&) {
                throw SpecError(child(mw, m), "unknown morphism '" + m + "'");
            }
            const auto& rec = c.morphism(idx);
            values.emplace(m, matrix_any(v, f, child(mw, m), spaces[rec.cod].dim(), spaces[rec.dom].dim()));
        }
    }
    DiagramFunctor fun = [&] {
        try {
            return DiagramFunctor(name, c, f, spaces, values);
        } catch (const std::invalid_argument& e) {
            throw SpecError(where, e.what());
        }
    }();
    auto object = [&](const json& n, const std::string& at) {
        const std::string s = as_string(n, at);
        for (std::size_t i = 0; i < c.object_count(); ++i)
            if (c.objects()[i] == s) return i;
        throw SpecError(at, "unknown object '" + s + "'");
    };
    if (j.contains("monoidal")) {
        const json& mj = j.at("monoidal");
        const std::string mw = child(where, "monoidal");
        FunctorMonoidalData fm;
        if (mj.contains("xi")) {
            const json& xs = mj.at("xi");
            for (std::size_t i = 0; i < xs.size(); ++i) {
                const std::string at = child(child(mw, "xi"), std::to_string(i));
                const std::size_t x = object(require(xs[i], "x", at), child(at, "x"));
                const std::size_t y = object(require(xs[i], "y", at), child(at, "y"));
                fm.xi[{x, y}] = matrix_any(require(xs[i], "matrix", at), f, child(at, "matrix"));
            }
        }
        fm.xi_unit = mj.contains("xi_unit") ? matrix_any(mj.at("xi_unit"), f, child(mw, "xi_unit"))
                                            : Matrix::identity(f, 1);
        fun.set_monoidal(std::move(fm));
    }
    if (j.contains("duals")) {
        const std::string dw = child(where, "duals");
        for (const auto& [x, m] : j.at("duals").items())
            fun.set_dual_pairing(object(json(x), dw), matrix_any(m, f, child(dw, x)));
    }
    if (j.contains("controls")) {
        const json& cs = j.at("controls");
        const std::string cw = child(where, "controls");
        for (std::size_t i = 0; i < cs.size(); ++i) {
            const std::string at = child(cw, std::to_string(i));
            ControlObject ctl;
            ctl.name = as_string(require(cs[i], "name", at), child(at, "name"));
            ctl.space = parse_space(cs[i], ctl.name, at);
            if (cs[i].contains("actions")) {
                const json& as = cs[i].at("actions");
                for (std::size_t k = 0; k < as.size(); ++k) {
                    const std::string ak = child(child(at, "actions"), std::to_string(k));
                    ControlAction a;
                    a.object = object(require(as[k], "object", ak), child(ak, "object"));
                    a.result = object(require(as[k], "result", ak), child(ak, "result"));
                    a.xi = matrix_any(require(as[k], "xi", ak), f, child(ak, "xi"));
                    ctl.actions.push_back(std::move(a));
                }
            }
            fun.add_control(std::move(ctl));
        }
    }
    return fun;
}

CoalgebraEntry parse_coalgebra(const std::string& name, const json& j, Field f, const std::string& where) {
    const SpaceObject carrier = parse_space(j, name, where);
    const std::size_t n = carrier.dim();
    CoalgebraEntry e;
    e.coalgebra = Coalgebra{carrier, matrix_any(require(j, "delta", where), f, child(where, "delta"), n * n, n),
                            matrix_any(require(j, "epsilon", where), f, child(where, "epsilon"), 1, n)};
    if (j.contains("m")) e.multiplication = matrix_any(j.at("m"), f, child(where, "m"), n, n * n);
    if (j.contains("u")) e.unit = matrix_any(j.at("u"), f, child(where, "u"), n, 1);
    if (j.contains("S")) e.antipode = matrix_any(j.at("S"), f, child(where, "S"), n, n);
    return e;
}

template <class Map>
const typename Map::mapped_type& lookup(const Map& m, const std::string& name, const char* kind) {
    auto it = m.find(name);
    if (it == m.end()) throw SpecError(std::string("/") + kind, "unknown name '" + name + "'");
    return it->second;
}

}  // namespace

std::optional<Bialgebra> CoalgebraEntry::bialgebra() const {
    if (!multiplication || !unit) return std::nullopt;
    return Bialgebra{coalgebra, *multiplication, *unit};
}

std::optional<HopfAlgebra> CoalgebraEntry::hopf() const {
    auto b = bialgebra();
    if (!b || !antipode) return std::nullopt;
    return HopfAlgebra{*b, *antipode};
}

const DiagramFunctor& SpecFile::functor(const std::string& name) const { return lookup(functors, name, "functors"); }
const CoalgebraEntry& SpecFile::coalgebra(const std::string& name) const { return lookup(coalgebras, name, "coalgebras"); }
const ComoduleEntry& SpecFile::comodule(const std::string& name) const { return lookup(comodules, name, "comodules"); }
const TransformationEntry& SpecFile::transformation(const std::string& name) const {
    return lookup(transformations, name, "transformations");
}

SpecFile parse_spec(const std::string& text, std::optional<Field> field_override) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        std::string msg = e.what();
        const auto cut = msg.find("; ");
        if (cut != std::string::npos) msg = msg.substr(cut + 2);
        throw SpecError(line_column(text, e.byte > 0 ? e.byte - 1 : 0), "syntax error: " + msg);
    }
    if (!root.is_object()) throw SpecError("/", "expected a JSON object");
    SpecFile spec;
    if (field_override) {
        spec.field = *field_override;
    } else if (root.contains("field")) {
        try {
            spec.field = Field::parse(as_string(root.at("field"), "/field"));
        } catch (const SpecError&) {
            throw;
        } catch (const std::exception& e) {
            throw SpecError("/field", e.what());
        }
    }
    if (root.contains("categories"))
        for (const auto& [name, c] : root.at("categories").items())
            spec.categories.emplace(name, parse_category(c, "/categories/" + name));
    if (root.contains("functors"))
        for (const auto& [name, fj] : root.at("functors").items())
            spec.functors.emplace(name, parse_functor(name, fj, spec, "/functors/" + name));
    if (root.contains("coalgebras"))
        for (const auto& [name, cj] : root.at("coalgebras").items())
            spec.coalgebras.emplace(name, parse_coalgebra(name, cj, spec.field, "/coalgebras/" + name));
    if (root.contains("comodules"))
        for (const auto& [name, mj] : root.at("comodules").items()) {
            const std::string where = "/comodules/" + name;
            const std::string cname = as_string(require(mj, "coalgebra", where), where + "/coalgebra");
            auto it = spec.coalgebras.find(cname);
            if (it == spec.coalgebras.end()) throw SpecError(where + "/coalgebra", "unknown coalgebra '" + cname + "'");
            const SpaceObject carrier = parse_space(mj, name, where);
            const std::size_t n = it->second.coalgebra.dim();
            Matrix rho = matrix_any(require(mj, "rho", where), spec.field, where + "/rho", carrier.dim() * n, carrier.dim());
            spec.comodules.emplace(name, ComoduleEntry{cname, Comodule{carrier, std::move(rho)}});
        }
    if (root.contains("transformations"))
        for (const auto& [name, tj] : root.at("transformations").items()) {
            const std::string where = "/transformations/" + name;
            TransformationEntry t;
            t.functor = as_string(require(tj, "functor", where), where + "/functor");
            auto fit = spec.functors.find(t.functor);
            if (fit == spec.functors.end()) throw SpecError(where + "/functor", "unknown functor '" + t.functor + "'");
            t.target_dim = as_size(require(tj, "target_dim", where), where + "/target_dim");
            const json& comps = require(tj, "components", where);
            const FinCategory& c = fit->second.source();
            for (std::size_t x = 0; x < c.object_count(); ++x) {
                const std::string& o = c.objects()[x];
                if (!comps.contains(o)) throw SpecError(where + "/components", "no component for object '" + o + "'");
                const std::size_t d = fit->second.space(x).dim();
                t.transformation.components.push_back(
                    matrix_any(comps.at(o), spec.field, where + "/components/" + o, d * t.target_dim, d));
            }
            spec.transformations.emplace(name, std::move(t));
        }
    return spec;
}

SpecFile load_spec(const std::string& path, std::optional<Field> field_override) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SpecError(path, "cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_spec(ss.str(), field_override);
}

ValidationReport validate_spec(const SpecFile& spec) {
    ValidationReport out;
    auto merge = [&](const std::string& prefix, const std::vector<std::string>& items) {
        for (const auto& v : items) out.add(prefix + ": " + v);
    };
    auto guarded = [&](const std::string& prefix, auto&& check) {
        try {
            check();
        } catch (const std::exception& e) {
            out.add(prefix + ": " + e.what());
        }
    };
    for (const auto& [name, c] : spec.categories) merge("category " + name, validate_category(c).violations);
    for (const auto& [name, f] : spec.functors) {
        const std::string prefix = "functor " + name;
        guarded(prefix, [&] {
            ValidationReport r = validate_functor(f);
            merge(prefix, r.violations);
            if (f.monoidal() && !f.source().monoidal())
                out.add(prefix + ": monoidal data given but the category has no monoidal table");
            else if (r.ok() && f.monoidal())
                merge(prefix, check_monoidal(f).violations);
        });
    }
    for (const auto& [name, e] : spec.coalgebras) {
        const std::string prefix = "coalgebra " + name;
        guarded(prefix, [&] {
            AxiomReport r = check_coalgebra(e.coalgebra);
            if (r.ok()) {
                if (auto h = e.hopf())
                    r = check_hopf(*h);
                else if (auto b = e.bialgebra())
                    r = check_bialgebra(*b);
                else if (e.multiplication || e.unit || e.antipode)
                    r.failures.push_back("algebra structure needs both m and u (and S for an antipode)");
            }
            merge(prefix, r.failures);
        });
    }
    for (const auto& [name, m] : spec.comodules) {
        const std::string prefix = "comodule " + name;
        guarded(prefix, [&] { merge(prefix, check_comodule(m.comodule, spec.coalgebra(m.coalgebra).coalgebra).failures); });
    }
    for (const auto& [name, t] : spec.transformations)
        for (std::size_t x = 0; x < t.transformation.components.size(); ++x) {
            const Matrix& c = t.transformation.components[x];
            const DiagramFunctor& f = spec.functor(t.functor);
            const std::size_t d = f.space(x).dim();
            if (c.rows() != d * t.target_dim || c.cols() != d)
                out.add("transformation " + name + ": component at '" + f.source().objects()[x] + "' is " +
                        std::to_string(c.rows()) + "x" + std::to_string(c.cols()) + ", expected " +
                        std::to_string(d * t.target_dim) + "x" + std::to_string(d));
        }
    return out;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_to_string(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& j, Field f, std::size_t rows, std::size_t cols, const std::string& where) {
    Matrix m = matrix_any(j, f, where, rows, cols);
    if (m.rows() != rows || m.cols() != cols)
        throw SpecError(where, "expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
    return m;
}

json norm_to_json(const NormValue& n) {
    if (n.is_zero()) return json{{"zero", true}};
    return json{{"exp", n.exp()}};
}

}  // namespace coendforge
