#include "coendforge/fincat.hpp"

#include <set>
#include <stdexcept>

namespace coendforge {

namespace {

std::string shape_of(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

FinCategory::FinCategory(std::vector<std::string> objects, const std::vector<MorphismRecord>& morphisms,
                         const std::vector<CompositionEntry>& composition)
    : objects_(std::move(objects)) {
    std::set<std::string> seen;
    for (std::size_t i = 0; i < objects_.size(); ++i) {
        if (!seen.insert(objects_[i]).second) throw std::invalid_argument("duplicate object '" + objects_[i] + "'");
    }
    std::set<std::string> names;
    for (std::size_t i = 0; i < objects_.size(); ++i) {
        morphisms_.push_back(MorphismRecord{"id_" + objects_[i], i, i});
        names.insert(morphisms_.back().name);
    }
    for (const auto& m : morphisms) {
        if (m.dom >= objects_.size() || m.cod >= objects_.size())
            throw std::invalid_argument("morphism '" + m.name + "' has an unknown endpoint");
        if (!names.insert(m.name).second) throw std::invalid_argument("duplicate morphism '" + m.name + "'");
        morphisms_.push_back(m);
    }
    for (const auto& e : composition) {
        const std::size_t g = morphism_index(e.after);
        const std::size_t f = morphism_index(e.before);
        const std::size_t h = morphism_index(e.result);
        if (!table_.emplace(std::make_pair(g, f), h).second)
            throw std::invalid_argument("composite " + e.after + " ∘ " + e.before + " is listed twice");
    }
}

std::size_t FinCategory::object_index(const std::string& name) const {
    for (std::size_t i = 0; i < objects_.size(); ++i)
        if (objects_[i] == name) return i;
    throw std::invalid_argument("unknown object '" + name + "'");
}

std::size_t FinCategory::morphism_index(const std::string& name) const {
    for (std::size_t i = 0; i < morphisms_.size(); ++i)
        if (morphisms_[i].name == name) return i;
    throw std::invalid_argument("unknown morphism '" + name + "'");
}

std::optional<std::size_t> FinCategory::compose(std::size_t g, std::size_t f) const {
    if (morphisms_.at(f).cod != morphisms_.at(g).dom) return std::nullopt;
    if (is_identity(f)) return g;
    if (is_identity(g)) return f;
    auto it = table_.find({g, f});
    if (it == table_.end()) return std::nullopt;
    return it->second;
}

ValidationReport validate_category(const FinCategory& c) {
    ValidationReport r;
    const auto& ms = c.morphisms();
    auto name = [&](std::size_t m) { return ms[m].name; };

    for (const auto& [key, h] : c.table()) {
        const auto [g, f] = key;
        const std::string what = name(g) + " ∘ " + name(f);
        if (ms[f].cod != ms[g].dom) {
            r.add("composite " + what + " is listed but the pair is not composable");
            continue;
        }
        if (c.is_identity(f) && h != g) r.add("identity law: " + what + " = " + name(h) + ", expected " + name(g));
        if (c.is_identity(g) && h != f) r.add("identity law: " + what + " = " + name(h) + ", expected " + name(f));
        if (ms[h].dom != ms[f].dom || ms[h].cod != ms[g].cod)
            r.add("composite " + what + " = " + name(h) + " has the wrong domain or codomain");
    }
    for (std::size_t g = 0; g < ms.size(); ++g)
        for (std::size_t f = 0; f < ms.size(); ++f) {
            if (ms[f].cod != ms[g].dom || c.is_identity(f) || c.is_identity(g)) continue;
            if (!c.table().count({g, f})) r.add("composition table has no entry for " + name(g) + " ∘ " + name(f));
        }
    for (std::size_t h = 0; h < ms.size(); ++h)
        for (std::size_t g = 0; g < ms.size(); ++g) {
            if (ms[g].cod != ms[h].dom) continue;
            for (std::size_t f = 0; f < ms.size(); ++f) {
                if (ms[f].cod != ms[g].dom) continue;
                auto gf = c.compose(g, f);
                auto hg = c.compose(h, g);
                if (!gf || !hg) continue;
                auto left = c.compose(h, *gf);
                auto right = c.compose(*hg, f);
                if (!left || !right || *left != *right) {
                    r.add("associativity fails on (" + name(h) + ", " + name(g) + ", " + name(f) + "): " +
                          name(h) + " ∘ (" + name(g) + " ∘ " + name(f) + ") = " + (left ? name(*left) : "undefined") +
                          " but (" + name(h) + " ∘ " + name(g) + ") ∘ " + name(f) + " = " +
                          (right ? name(*right) : "undefined"));
                }
            }
        }

    for (const auto& [x, xd] : c.duals()) {
        if (x >= c.object_count() || xd >= c.object_count()) r.add("dual declared for an unknown object");
    }

    if (const auto& mon = c.monoidal()) {
        const std::size_t n = c.object_count();
        auto tensor_of = [&](std::size_t x, std::size_t y) -> std::optional<std::size_t> {
            auto it = mon->object_tensor.find({x, y});
            if (it == mon->object_tensor.end()) return std::nullopt;
            return it->second;
        };
        const auto& obj = c.objects();
        if (mon->unit >= n) r.add("monoidal unit is not an object");
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (!tensor_of(x, y)) r.add("object tensor table has no entry for " + obj[x] + " ⊗ " + obj[y]);
        if (!r.ok()) return r;
        for (std::size_t x = 0; x < n; ++x) {
            if (*tensor_of(mon->unit, x) != x || *tensor_of(x, mon->unit) != x)
                r.add("unit law fails for object " + obj[x]);
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z) {
                    if (*tensor_of(*tensor_of(x, y), z) != *tensor_of(x, *tensor_of(y, z)))
                        r.add("object tensor is not associative on (" + obj[x] + ", " + obj[y] + ", " + obj[z] + ")");
                }
        }
        auto mtensor = [&](std::size_t f, std::size_t g) -> std::optional<std::size_t> {
            if (c.is_identity(f) && c.is_identity(g)) return c.identity(*tensor_of(ms[f].dom, ms[g].dom));
            auto it = mon->morphism_tensor.find({f, g});
            if (it == mon->morphism_tensor.end()) return std::nullopt;
            return it->second;
        };
        for (std::size_t f = 0; f < ms.size(); ++f)
            for (std::size_t g = 0; g < ms.size(); ++g) {
                auto h = mtensor(f, g);
                if (!h) {
                    r.add("morphism tensor table has no entry for " + name(f) + " ⊗ " + name(g));
                    continue;
                }
                if (ms[*h].dom != *tensor_of(ms[f].dom, ms[g].dom) || ms[*h].cod != *tensor_of(ms[f].cod, ms[g].cod))
                    r.add("morphism tensor " + name(f) + " ⊗ " + name(g) + " = " + name(*h) +
                          " has the wrong domain or codomain");
            }
        if (!r.ok()) return r;
        // Interchange: (g' ∘ g) ⊗ (f' ∘ f) = (g' ⊗ f') ∘ (g ⊗ f).
        for (std::size_t g = 0; g < ms.size(); ++g)
            for (std::size_t g2 = 0; g2 < ms.size(); ++g2) {
                auto gg = c.compose(g2, g);
                if (!gg) continue;
                for (std::size_t f = 0; f < ms.size(); ++f)
                    for (std::size_t f2 = 0; f2 < ms.size(); ++f2) {
                        auto ff = c.compose(f2, f);
                        if (!ff) continue;
                        auto lhs = mtensor(*gg, *ff);
                        auto rhs = c.compose(*mtensor(g2, f2), *mtensor(g, f));
                        if (!lhs || !rhs || *lhs != *rhs)
                            r.add("tensor does not respect composition for (" + name(g2) + " ∘ " + name(g) + ") ⊗ (" +
                                  name(f2) + " ∘ " + name(f) + ")");
                    }
            }
    }
    return r;
}

ControlObject unit_control(Field f, const std::vector<SpaceObject>& spaces) {
    ControlObject c{"K", SpaceObject::unit(), {}};
    for (std::size_t x = 0; x < spaces.size(); ++x)
        c.actions.push_back(ControlAction{x, x, Matrix::identity(f, spaces[x].dim())});
    return c;
}

DiagramFunctor::DiagramFunctor(std::string name, FinCategory source, Field field, std::vector<SpaceObject> object_spaces,
                               const std::map<std::string, Matrix>& morphism_values)
    : name_(std::move(name)), source_(std::move(source)), field_(field), spaces_(std::move(object_spaces)) {
    if (spaces_.size() != source_.object_count())
        throw std::invalid_argument("functor '" + name_ + "' assigns " + std::to_string(spaces_.size()) +
                                    " spaces to " + std::to_string(source_.object_count()) + " objects");
    for (const auto& [m, _] : morphism_values) (void)source_.morphism_index(m);
    for (std::size_t m = 0; m < source_.morphism_count(); ++m) {
        const auto& rec = source_.morphism(m);
        if (source_.is_identity(m)) {
            auto it = morphism_values.find(rec.name);
            values_.push_back(it != morphism_values.end() ? it->second
                                                          : Matrix::identity(field_, spaces_[rec.dom].dim()));
            continue;
        }
        auto it = morphism_values.find(rec.name);
        if (it == morphism_values.end())
            throw std::invalid_argument("functor '" + name_ + "' gives no matrix for morphism '" + rec.name + "'");
        values_.push_back(it->second);
    }
}

Representation DiagramFunctor::representation() const {
    Representation r;
    r.field = field_;
    r.object_names = source_.objects();
    r.spaces = spaces_;
    for (std::size_t m = source_.object_count(); m < source_.morphism_count(); ++m) {
        const auto& rec = source_.morphism(m);
        r.arrows.push_back(Representation::Arrow{rec.name, rec.dom, rec.cod, values_[m]});
    }
    return r;
}

TensorStructure DiagramFunctor::tensor_structure() const {
    if (!source_.monoidal() || !monoidal_)
        throw MissingStructure("functor '" + name_ + "' has no monoidal data");
    TensorStructure t;
    t.unit = source_.monoidal()->unit;
    t.object_tensor = source_.monoidal()->object_tensor;
    t.xi = monoidal_->xi;
    t.xi_unit = monoidal_->xi_unit;
    return t;
}

DualStructure DiagramFunctor::dual_structure() const {
    DualStructure d;
    if (source_.duals().empty()) throw MissingStructure("category of functor '" + name_ + "' declares no duals");
    for (const auto& [x, xd] : source_.duals()) {
        auto it = dual_pairings_.find(x);
        if (it == dual_pairings_.end())
            throw MissingStructure("functor '" + name_ + "' has no dual pairing for object '" + source_.objects()[x] +
                                   "'");
        d.dual_of[x] = xd;
        d.pairing[x] = it->second;
    }
    return d;
}

DiagramFunctor tensor_with(const DiagramFunctor& f, const SpaceObject& m) {
    const FinCategory& c = f.source();
    std::vector<SpaceObject> spaces;
    for (const auto& s : f.spaces()) spaces.push_back(tensor(s, m));
    std::map<std::string, Matrix> values;
    const Matrix id = Matrix::identity(f.field(), m.dim());
    for (std::size_t k = c.object_count(); k < c.morphism_count(); ++k)
        values[c.morphism(k).name] = kron(f.value(k), id);
    return DiagramFunctor(f.name() + "⊗M", c, f.field(), std::move(spaces), values);
}

ValidationReport validate_functor(const DiagramFunctor& f) {
    ValidationReport r;
    const FinCategory& c = f.source();
    auto dim = [&](std::size_t x) { return f.space(x).dim(); };
    bool shapes_ok = true;
    for (std::size_t m = 0; m < c.morphism_count(); ++m) {
        const auto& rec = c.morphism(m);
        const Matrix& v = f.value(m);
        if (!(v.field() == f.field())) {
            r.add("F(" + rec.name + ") is over " + v.field().to_string() + ", expected " + f.field().to_string());
            shapes_ok = false;
            continue;
        }
        if (v.rows() != dim(rec.cod) || v.cols() != dim(rec.dom)) {
            r.add("dimension mismatch: F(" + rec.name + ") is " + shape_of(v) + ", expected " +
                  std::to_string(dim(rec.cod)) + "x" + std::to_string(dim(rec.dom)));
            shapes_ok = false;
        }
        if (c.is_identity(m) && v.rows() == v.cols() && !v.is_identity()) r.add("F(" + rec.name + ") is not the identity");
    }
    if (shapes_ok) {
        for (const auto& [key, h] : c.table()) {
            const auto [g, k] = key;
            if (c.morphism(k).cod != c.morphism(g).dom) continue;
            if (!(f.value(h) == f.value(g) * f.value(k)))
                r.add("F(" + c.morphism(g).name + " ∘ " + c.morphism(k).name + ") != F(" + c.morphism(g).name +
                      ") F(" + c.morphism(k).name + ")");
        }
    }
    for (const auto& [x, p] : f.dual_pairings()) {
        auto it = c.duals().find(x);
        if (it == c.duals().end()) {
            r.add("dual pairing given for object '" + c.objects()[x] + "' which has no declared dual");
            continue;
        }
        if (p.rows() != dim(x) || p.cols() != dim(it->second) || !is_invertible(p))
            r.add("dual pairing for '" + c.objects()[x] + "' is not an invertible " + std::to_string(dim(x)) + "x" +
                  std::to_string(dim(it->second)) + " matrix");
    }
    for (const auto& ctl : f.controls()) {
        for (const auto& a : ctl.actions) {
            if (a.object >= c.object_count() || a.result >= c.object_count()) {
                r.add("control '" + ctl.name + "' acts on an unknown object");
                continue;
            }
            if (a.xi.rows() != ctl.space.dim() * dim(a.object) || a.xi.cols() != dim(a.result))
                r.add("control '" + ctl.name + "' action on '" + c.objects()[a.object] + "' has shape " +
                      shape_of(a.xi) + ", expected " + std::to_string(ctl.space.dim() * dim(a.object)) + "x" +
                      std::to_string(dim(a.result)));
        }
    }
    return r;
}

bool check_natural(const Transformation& t, const Representation& from, const Representation& to) {
    const std::size_t n = from.spaces.size();
    if (t.components.size() != n || to.spaces.size() != n || from.arrows.size() != to.arrows.size()) return false;
    for (std::size_t x = 0; x < n; ++x) {
        const Matrix& c = t.components[x];
        if (c.rows() != to.spaces[x].dim() || c.cols() != from.spaces[x].dim()) return false;
    }
    for (std::size_t a = 0; a < from.arrows.size(); ++a) {
        const auto& f = from.arrows[a];
        if (!(to.arrows[a].value * t.components[f.dom] == t.components[f.cod] * f.value)) return false;
    }
    return true;
}

bool check_natural(const Transformation& t, const DiagramFunctor& from, const DiagramFunctor& to) {
    return check_natural(t, from.representation(), to.representation());
}

bool check_dinatural(const std::vector<Matrix>& components, const Representation& f) {
    const std::size_t n = f.spaces.size();
    if (components.size() != n) return false;
    for (std::size_t x = 0; x < n; ++x) {
        const std::size_t d = f.spaces[x].dim();
        if (components[x].cols() != d * d || components[x].rows() != components.front().rows()) return false;
    }
    for (const auto& a : f.arrows) {
        const std::size_t dc = f.spaces[a.dom].dim();
        const std::size_t dc2 = f.spaces[a.cod].dim();
        Matrix lhs = components[a.dom] * cohom_contravariant(a.value, dc);
        Matrix rhs = components[a.cod] * cohom_covariant(a.value, dc2);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

bool check_dinatural(const std::vector<Matrix>& components, const DiagramFunctor& f) {
    return check_dinatural(components, f.representation());
}

ValidationReport check_monoidal(const DiagramFunctor& f) {
    ValidationReport r;
    const FinCategory& c = f.source();
    if (!c.monoidal() || !f.monoidal()) {
        r.add("monoidal data missing on " + std::string(!c.monoidal() ? "source category" : "functor"));
        return r;
    }
    ValidationReport cat = validate_category(c);
    for (auto& v : cat.violations) r.add(v);
    if (!r.ok()) return r;

    const auto& mon = *c.monoidal();
    const auto& fm = *f.monoidal();
    const Field fld = f.field();
    const auto& obj = c.objects();
    const std::size_t n = c.object_count();
    auto dim = [&](std::size_t x) { return f.space(x).dim(); };
    auto ot = [&](std::size_t x, std::size_t y) { return mon.object_tensor.at({x, y}); };
    auto pair_name = [&](std::size_t x, std::size_t y) { return "(" + obj[x] + ", " + obj[y] + ")"; };

    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            auto it = fm.xi.find({x, y});
            if (it == fm.xi.end()) {
                r.add("xi missing for " + pair_name(x, y));
                continue;
            }
            const Matrix& xi = it->second;
            if (xi.rows() != dim(ot(x, y)) || xi.cols() != dim(x) * dim(y))
                r.add("xi" + pair_name(x, y) + " has shape " + shape_of(xi) + ", expected " +
                      std::to_string(dim(ot(x, y))) + "x" + std::to_string(dim(x) * dim(y)));
            else if (!is_invertible(xi))
                r.add("xi" + pair_name(x, y) + " is not invertible");
        }
    if (fm.xi_unit.rows() != dim(mon.unit) || fm.xi_unit.cols() != 1 || !is_invertible(fm.xi_unit))
        r.add("xi_unit is not an invertible map K -> F(" + obj[mon.unit] + ")");
    if (!r.ok()) return r;

    auto xi = [&](std::size_t x, std::size_t y) -> const Matrix& { return fm.xi.at({x, y}); };
    auto id = [&](std::size_t x) { return Matrix::identity(fld, dim(x)); };

    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                Matrix lhs = xi(ot(x, y), z) * kron(xi(x, y), id(z));
                Matrix rhs = xi(x, ot(y, z)) * kron(id(x), xi(y, z));
                if (!(lhs == rhs))
                    r.add("xi associativity fails on (" + obj[x] + ", " + obj[y] + ", " + obj[z] + ")");
            }
    for (std::size_t x = 0; x < n; ++x) {
        if (!(xi(mon.unit, x) * kron(fm.xi_unit, id(x))).is_identity())
            r.add("left unit compatibility fails for " + obj[x]);
        if (!(xi(x, mon.unit) * kron(id(x), fm.xi_unit)).is_identity())
            r.add("right unit compatibility fails for " + obj[x]);
    }
    for (std::size_t a = 0; a < c.morphism_count(); ++a)
        for (std::size_t b = 0; b < c.morphism_count(); ++b) {
            if (c.is_identity(a) && c.is_identity(b)) continue;
            const std::size_t h = mon.morphism_tensor.at({a, b});
            const auto& ra = c.morphism(a);
            const auto& rb = c.morphism(b);
            if (!(f.value(h) * xi(ra.dom, rb.dom) == xi(ra.cod, rb.cod) * kron(f.value(a), f.value(b))))
                r.add("xi is not natural at " + ra.name + " ⊗ " + rb.name);
        }
    return r;
}

}  // namespace coendforge
