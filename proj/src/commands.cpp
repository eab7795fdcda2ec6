#include "coendforge/commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace coendforge {

namespace {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

const std::string& need(const std::optional<std::string>& v, const char* flag) {
    if (!v) throw UsageError(std::string("missing --") + flag);
    return *v;
}

std::size_t object_of(const DiagramFunctor& f, const std::string& name) {
    const auto& objs = f.source().objects();
    for (std::size_t i = 0; i < objs.size(); ++i)
        if (objs[i] == name) return i;
    throw SpecError("/functors/" + f.name() + "/objects", "unknown object '" + name + "'");
}

json labels_json(const SpaceObject& s) { return json(s.labels()); }

json coend_json(const CoendResult& r) {
    json j;
    j["carrier_dim"] = r.dim();
    j["carrier_labels"] = labels_json(r.carrier);
    j["sum_dim"] = r.dim_n;
    j["relations_rank"] = rank(r.relations);
    j["projection"] = matrix_to_json(r.projection);
    j["section"] = matrix_to_json(r.section);
    json inj = json::object();
    for (std::size_t x = 0; x < r.injections.size(); ++x) inj[r.source.object_names[x]] = matrix_to_json(r.injections[x]);
    j["injections"] = std::move(inj);
    j["comultiplication"] = matrix_to_json(r.coalgebra.comultiplication);
    j["counit"] = matrix_to_json(r.coalgebra.counit);
    return j;
}

struct Context {
    const SpecFile& spec;
    const CommandOptions& opt;
    CommandResult& out;

    void check(bool ok, const std::string& what) {
        out.report.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
        out.output["checks"][what] = ok;
        if (!ok && out.exit_code == Ok) out.exit_code = VerdictFailed;
    }
};

// The coalgebra axioms on Q and the naturality of δ, checked before emission.
void verify_coend(Context& c, const CoendResult& r) {
    c.check(check_coalgebra(r.coalgebra).ok(), "coalgebra axioms on Q");
    bool comodules = true;
    for (std::size_t x = 0; x < r.source.spaces.size(); ++x)
        comodules = comodules && check_comodule(comodule_on(r, x), r.coalgebra).ok();
    c.check(comodules, "every F(X) is a Q-comodule");
}

void cmd_validate(Context& c) {
    json summary;
    summary["categories"] = c.spec.categories.size();
    summary["functors"] = c.spec.functors.size();
    summary["coalgebras"] = c.spec.coalgebras.size();
    summary["comodules"] = c.spec.comodules.size();
    summary["transformations"] = c.spec.transformations.size();
    summary["field"] = c.spec.field.to_string();
    c.out.output["summary"] = std::move(summary);
}

void cmd_cohom(Context& c) {
    const DiagramFunctor& f = c.spec.functor(need(c.opt.functor, "functor"));
    const std::string& xn = need(c.opt.x, "x");
    const std::string& yn = need(c.opt.y, "y");
    const SpaceObject& x = f.space(object_of(f, xn));
    const SpaceObject& y = f.space(object_of(f, yn));
    CohomObject h = cohom(f.field(), x, y);
    json& o = c.out.output;
    o["x"] = xn;
    o["y"] = yn;
    o["carrier_dim"] = h.carrier.dim();
    o["carrier_labels"] = labels_json(h.carrier);
    o["coevaluation"] = matrix_to_json(h.coev);
    c.check(coact(h.coev, x.dim(), y.dim(), h.carrier.dim()).is_identity(), "coev corresponds to the identity of cohom");
}

void cmd_coend(Context& c) {
    const DiagramFunctor& f = c.spec.functor(need(c.opt.functor, "functor"));
    CoendResult r = coend_of_functor(f);
    c.out.output["functor"] = f.name();
    c.out.output["coend"] = coend_json(r);
    c.out.output["carrier_dim"] = r.dim();
    verify_coend(c, r);
}

std::vector<ControlObject> selected_controls(const DiagramFunctor& f, const std::vector<std::string>& names) {
    if (names.empty()) return f.controls();
    std::vector<ControlObject> out;
    for (const auto& n : names) {
        auto it = std::find_if(f.controls().begin(), f.controls().end(), [&](const ControlObject& o) { return o.name == n; });
        if (it == f.controls().end()) throw MissingActionData("functor '" + f.name() + "' has no control '" + n + "'");
        out.push_back(*it);
    }
    return out;
}

void cmd_ccoend(Context& c) {
    const DiagramFunctor& f = c.spec.functor(need(c.opt.functor, "functor"));
    const std::vector<ControlObject> ctl = selected_controls(f, c.opt.controls);
    CoendResult plain = coend_of_functor(f);
    CoendResult r = c_coend(f, ctl);
    json names = json::array();
    for (const auto& o : ctl) names.push_back(o.name);
    c.out.output["functor"] = f.name();
    c.out.output["controls"] = std::move(names);
    c.out.output["coend"] = coend_json(r);
    c.out.output["carrier_dim"] = r.dim();
    c.out.output["coend_dim"] = plain.dim();
    verify_coend(c, r);
    const Matrix epi = epi_to_c_coend(plain, r);
    c.out.output["epi_from_coend"] = matrix_to_json(epi);
    c.check(is_surjective(epi) && is_coalgebra_morphism(epi, plain.coalgebra, r.coalgebra),
            "coend -> C-coend is a surjective coalgebra map");
}

void cmd_bialgebra(Context& c, bool hopf) {
    const DiagramFunctor& f = c.spec.functor(need(c.opt.functor, "functor"));
    CoendResult r = coend_of_functor(f);
    c.out.output["functor"] = f.name();
    c.out.output["coend"] = coend_json(r);
    c.out.output["carrier_dim"] = r.dim();
    verify_coend(c, r);
    Bialgebra b = bialgebra_on_coend(f, r);
    c.out.output["multiplication"] = matrix_to_json(b.multiplication);
    c.out.output["unit"] = matrix_to_json(b.unit);
    c.check(check_bialgebra(b).ok(), "bialgebra axioms on Q");
    if (hopf) {
        HopfAlgebra h = antipode_on_coend(f, r, b);
        c.out.output["antipode"] = matrix_to_json(h.antipode);
        c.check(check_hopf(h).ok(), "antipode axioms on Q");
    }
}

std::vector<std::string> seed_names(const Context& c, const std::string& coalgebra, const std::vector<std::string>& given) {
    if (!given.empty()) {
        for (const auto& s : given)
            if (c.spec.comodule(s).coalgebra != coalgebra)
                throw SpecError("/comodules/" + s, "comodule is over '" + c.spec.comodule(s).coalgebra + "', not '" +
                                                       coalgebra + "'");
        return given;
    }
    std::vector<std::string> out;
    for (const auto& [name, m] : c.spec.comodules)
        if (m.coalgebra == coalgebra) out.push_back(name);
    return out;
}

Reconstruction reconstruct_with(Context& c, const CoalgebraEntry& entry, const std::vector<Comodule>& seeds,
                                const std::vector<std::string>& names) {
    json& o = c.out.output;
    if (entry.bialgebra()) {
        try {
            if (auto h = entry.hopf()) return reconstruct_hopf(*h, seeds, names);
            return reconstruct_bialgebra(*entry.bialgebra(), seeds, names);
        } catch (const MissingStructure& e) {
            o["monoidal_skipped"] = e.what();
        }
    }
    return reconstruct_coalgebra(entry.coalgebra, seeds, names);
}

json hom_table(const std::vector<std::string>& names, const std::vector<std::vector<std::size_t>>& dims) {
    json t = json::object();
    for (std::size_t a = 0; a < names.size(); ++a)
        for (std::size_t b = 0; b < names.size(); ++b) t[names[a] + " -> " + names[b]] = dims[a][b];
    return t;
}

void cmd_reconstruct(Context& c, bool equivalence) {
    const std::string& hname = need(c.opt.coalgebra, "coalgebra");
    const CoalgebraEntry& entry = c.spec.coalgebra(hname);
    const std::vector<std::string> names = seed_names(c, hname, c.opt.seeds);
    std::vector<Comodule> seeds;
    for (const auto& n : names) seeds.push_back(c.spec.comodule(n).comodule);
    Reconstruction rec = reconstruct_with(c, entry, seeds, names);
    json& o = c.out.output;
    o["coalgebra"] = hname;
    o["seeds"] = names;
    o["carrier_dim"] = rec.coend.dim();
    o["h"] = matrix_to_json(rec.h);
    o["injective"] = rec.injective;
    o["surjective"] = rec.surjective;
    o["coalgebra_morphism"] = rec.coalgebra_morphism;
    o["verdict"] = to_string(rec.verdict);
    o["iso"] = rec.verdict == ReconstructionVerdict::Generated;
    std::vector<std::vector<std::size_t>> dims(names.size(), std::vector<std::size_t>(names.size()));
    for (std::size_t a = 0; a < names.size(); ++a)
        for (std::size_t b = 0; b < names.size(); ++b) dims[a][b] = rec.category.hom.at({a, b}).size();
    o["hom_dims"] = hom_table(names, dims);
    c.check(check_coalgebra(rec.coend.coalgebra).ok(), "coalgebra axioms on Q");
    if (rec.bialgebra) c.check(check_bialgebra(*rec.bialgebra).ok(), "bialgebra axioms on Q");
    if (rec.hopf) c.check(check_hopf(*rec.hopf).ok(), "antipode axioms on Q");
    if (rec.multiplication_transported) {
        o["multiplication"] = matrix_to_json(rec.bialgebra->multiplication);
        c.check(*rec.multiplication_transported, "h carries m_Q, u_Q to m, u");
    }
    if (rec.antipode_transported) {
        o["antipode"] = matrix_to_json(rec.hopf->antipode);
        c.check(*rec.antipode_transported, "h carries S_Q to S");
    }
    c.check(rec.verdict == ReconstructionVerdict::Generated, "h is a coalgebra isomorphism");
    if (!equivalence) return;

    std::vector<Comodule> probes;
    for (const auto& p : c.opt.probes) {
        const ComoduleEntry& e = c.spec.comodule(p);
        if (e.coalgebra != hname) throw SpecError("/comodules/" + p, "probe is over '" + e.coalgebra + "'");
        probes.push_back(e.comodule);
    }
    EquivalenceVerdict v = equivalence_check(rec, probes, c.opt.probes);
    json pj = json::array();
    for (const auto& p : v.probes) {
        json one;
        one["name"] = p.name;
        one["valid"] = p.valid;
        one["equalizer_ok"] = p.equalizer_ok;
        one["lift"] = p.lift;
        one["coaction_matches"] = p.coaction_matches;
        one["ok"] = p.ok();
        if (!p.reason.empty()) one["reason"] = p.reason;
        pj.push_back(std::move(one));
        c.out.report.push_back(std::string(p.ok() ? "ok   " : "FAIL ") + "probe " + p.name +
                               (p.reason.empty() ? "" : ": " + p.reason));
    }
    o["probes"] = std::move(pj);
    o["hom_dims_c"] = hom_table(v.objects, v.hom_dims_c);
    if (v.reconstruction_iso) o["hom_dims_q"] = hom_table(v.objects, v.hom_dims_q);
    o["full"] = v.full;
    o["equivalence"] = v.ok();
    c.check(v.ok(), "comodule categories agree on every probe");
}

void cmd_bcoend(Context& c) {
    const DiagramFunctor& f = c.spec.functor(need(c.opt.functor, "functor"));
    if (!f.field().is_padic()) throw UsageError("bcoend needs a padic:<p> field (set it in the file or with --field)");
    BoundedCoend b = bounded_coend(f);
    json& o = c.out.output;
    o["functor"] = f.name();
    o["prime"] = f.field().characteristic_prime();
    o["coend"] = coend_json(b.coend);
    o["carrier_dim"] = b.coend.dim();
    json norms = json::array();
    for (const auto& n : b.basis_norms) norms.push_back(norm_to_json(n));
    o["basis_norms"] = std::move(norms);
    o["projection_norm"] = norm_to_json(b.projection_norm);
    json inj = json::object();
    for (std::size_t x = 0; x < b.injection_norms.size(); ++x)
        inj[b.coend.source.object_names[x]] = norm_to_json(b.injection_norms[x]);
    o["injection_norms"] = std::move(inj);
    o["comultiplication_norm"] = norm_to_json(b.comultiplication_norm);
    o["counit_norm"] = norm_to_json(b.counit_norm);
    o["delta_bound"] = norm_to_json(b.delta.bound);
    o["closure"] = b.closure;
    o["truncation_stage"] = f.source().object_count();
    verify_coend(c, b.coend);
    c.check(b.coend.projection == coend_of_functor(f).projection, "carrier equals the algebraic coend");
    c.check(b.projection_norm <= NormValue::power(0), "projection has norm at most 1");
}

void cmd_factor(Context& c) {
    const std::string& tname = need(c.opt.transformation, "transformation");
    const TransformationEntry& t = c.spec.transformation(tname);
    const std::string fname = c.opt.functor.value_or(t.functor);
    if (fname != t.functor) throw SpecError("/transformations/" + tname, "transformation is on '" + t.functor + "'");
    const DiagramFunctor& f = c.spec.functor(fname);
    CoendResult r = coend_of_functor(f);
    json& o = c.out.output;
    o["functor"] = fname;
    o["transformation"] = tname;
    o["carrier_dim"] = r.dim();
    try {
        const Matrix psi = factor_through_coend(r, t.transformation, t.target_dim);
        o["psi"] = matrix_to_json(psi);
        o["natural"] = true;
        const Transformation delta = delta_transformation(r);
        bool reproduces = true;
        for (std::size_t x = 0; x < delta.components.size(); ++x) {
            const Matrix id = Matrix::identity(f.field(), f.space(x).dim());
            reproduces = reproduces && kron(id, psi) * delta.components[x] == t.transformation.components[x];
        }
        c.check(reproduces, "(id ⊗ psi) ∘ δ reproduces every component");
    } catch (const NoSolution&) {
        o["natural"] = false;
        c.check(false, "transformation factors through the coend");
    }
}

const std::map<std::string, std::function<void(Context&)>>& dispatch() {
    static const std::map<std::string, std::function<void(Context&)>> table{
        {"validate", cmd_validate},
        {"cohom", cmd_cohom},
        {"coend", cmd_coend},
        {"ccoend", cmd_ccoend},
        {"bialgebra", [](Context& c) { cmd_bialgebra(c, false); }},
        {"hopf", [](Context& c) { cmd_bialgebra(c, true); }},
        {"reconstruct", [](Context& c) { cmd_reconstruct(c, false); }},
        {"equiv", [](Context& c) { cmd_reconstruct(c, true); }},
        {"bcoend", cmd_bcoend},
        {"factor", cmd_factor},
    };
    return table;
}

CommandResult failure(int code, const std::string& kind, const std::string& message) {
    CommandResult r;
    r.exit_code = code;
    r.output["error"] = {{"kind", kind}, {"message", message}};
    r.report.push_back("FAIL " + kind + ": " + message);
    return r;
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [k, _] : dispatch()) n.push_back(k);
        return n;
    }();
    return names;
}

CommandResult run_command_text(const CommandOptions& options, const std::string& spec_text) {
    auto it = dispatch().find(options.command);
    if (it == dispatch().end()) return failure(ValidationFailed, "usage", "unknown command '" + options.command + "'");
    try {
        std::optional<Field> field;
        if (options.field) field = Field::parse(*options.field);
        const SpecFile spec = parse_spec(spec_text, field);
        CommandResult out;
        out.output["command"] = options.command;
        const ValidationReport report = validate_spec(spec);
        out.output["valid"] = report.ok();
        if (!report.ok()) {
            out.exit_code = ValidationFailed;
            out.output["violations"] = report.violations;
            for (const auto& v : report.violations) out.report.push_back("FAIL " + v);
            return out;
        }
        Context ctx{spec, options, out};
        it->second(ctx);
        return out;
    } catch (const SpecError& e) {
        CommandResult r = failure(ValidationFailed, "spec", e.what());
        r.output["error"]["where"] = e.where();
        return r;
    } catch (const MissingStructure& e) {
        return failure(ValidationFailed, "missing_structure", e.what());
    } catch (const WellDefinednessFailure& e) {
        return failure(VerdictFailed, "well_definedness", e.what());
    } catch (const NaturalityFailure& e) {
        return failure(VerdictFailed, "naturality", e.what());
    } catch (const AxiomFailure& e) {
        return failure(ValidationFailed, "axioms", e.what());
    } catch (const std::invalid_argument& e) {
        return failure(ValidationFailed, "usage", e.what());
    } catch (const std::exception& e) {
        return failure(1, "internal", e.what());
    }
}

CommandResult run_command(const CommandOptions& options) {
    std::ifstream in(options.spec_path, std::ios::binary);
    if (!in) return failure(ValidationFailed, "spec", options.spec_path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return run_command_text(options, ss.str());
}

}  // namespace coendforge
