#include "dynalg/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "dynalg/errors.hpp"

namespace dynalg {

namespace {

[[noreturn]] void schema_error(const std::string& what) {
    throw ConfigError("schema violation: " + what);
}

double require_number(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number()) schema_error(std::string(key) + " must be a number");
    return j[key].get<double>();
}

} // namespace

json to_json(const PiecewisePoly& p) {
    json out = json::array();
    for (const auto& piece : p.pieces()) {
        json jp;
        jp["t_lo"] = piece.lo;
        jp["t_hi"] = piece.hi;
        jp["coeffs"] = PiecewisePoly::global_coeffs(piece);
        out.push_back(std::move(jp));
    }
    return out;
}

PiecewisePoly piecewise_from_json(const json& j) {
    if (!j.is_array()) schema_error("piecewise polynomial must be an array of pieces");
    PiecewisePoly out;
    for (const auto& jp : j) {
        const double lo = require_number(jp, "t_lo");
        const double hi = require_number(jp, "t_hi");
        if (!jp.contains("coeffs") || !jp["coeffs"].is_array())
            schema_error("piece needs a coeffs array");
        detail::Coeffs c;
        for (const auto& v : jp["coeffs"]) {
            if (!v.is_number()) schema_error("coefficients must be numbers");
            c.push_back(v.get<double>());
        }
        out = add(out, PiecewisePoly::from_global(lo, hi, c));
    }
    return out;
}

namespace {

json shape_to_json(const PotentialShape& s) {
    json out;
    if (const auto* p = std::get_if<PolynomialShape>(&s)) {
        out["shape"] = "polynomial";
        out["params"] = {{"coeffs", p->coeffs}};
    } else {
        const auto& g = std::get<GaussianShape>(s);
        out["shape"] = "gaussian";
        out["params"] = {{"amplitude", g.amplitude}, {"center", g.center}, {"width", g.width}};
    }
    return out;
}

PotentialShape shape_from_json(const json& j) {
    if (!j.contains("shape") || !j["shape"].is_string()) schema_error("missing shape name");
    const std::string name = j["shape"].get<std::string>();
    const json params = j.value("params", json::object());
    if (name == "polynomial") {
        PolynomialShape p;
        if (!params.contains("coeffs") || !params["coeffs"].is_array())
            schema_error("polynomial shape needs params.coeffs");
        for (const auto& v : params["coeffs"]) p.coeffs.push_back(v.get<double>());
        if (p.coeffs.size() > 5) schema_error("polynomial shape degree > 4");
        return p;
    }
    if (name == "gaussian") {
        GaussianShape g;
        g.amplitude = require_number(params, "amplitude");
        g.center = require_number(params, "center");
        g.width = require_number(params, "width");
        if (!(g.width > 0.0)) schema_error("gaussian width must be positive");
        return g;
    }
    schema_error("unknown shape '" + name + "'");
}

} // namespace

json to_json(const Functional& f) {
    json out;
    out["dim"] = f.dim;
    json dens = json::array();
    for (const auto& d : f.density) dens.push_back(to_json(d));
    out["density"] = std::move(dens);
    out["constant"] = {{"mode", f.constant_mode == ConstantMode::AutoH ? "auto_h" : "explicit"},
                       {"value", f.constant}};
    json pots = json::array();
    for (const auto& t : f.potentials) {
        json jt = shape_to_json(t.shape);
        json entry;
        entry["window"] = to_json(t.window);
        entry["shape"] = jt["shape"];
        entry["params"] = jt["params"];
        entry["shift"] = t.shift ? to_json(*t.shift) : json(nullptr);
        pots.push_back(std::move(entry));
    }
    out["potentials"] = std::move(pots);
    return out;
}

Functional functional_from_json(const json& j, HConvention conv) {
    Functional f;
    if (!j.is_object()) schema_error("functional must be an object");
    f.dim = j.contains("dim") ? j["dim"].get<int>() : 1;
    if (f.dim < 1) schema_error("dim must be >= 1");
    if (j.contains("density")) {
        if (!j["density"].is_array()) schema_error("density must be an array");
        for (const auto& d : j["density"]) f.density.push_back(piecewise_from_json(d));
    }
    while (static_cast<int>(f.density.size()) < f.dim) f.density.push_back({});
    if (static_cast<int>(f.density.size()) != f.dim)
        schema_error("density component count exceeds dim");

    if (j.contains("potentials")) {
        if (!j["potentials"].is_array()) schema_error("potentials must be an array");
        for (const auto& jt : j["potentials"]) {
            PotentialTerm t;
            if (!jt.contains("window")) schema_error("potential term needs a window");
            t.window = piecewise_from_json(jt["window"]);
            t.shape = shape_from_json(jt);
            if (jt.contains("shift") && !jt["shift"].is_null()) t.shift = loop_from_json(jt["shift"]);
            f.potentials.push_back(std::move(t));
        }
    }

    std::string mode = "explicit";
    double value = 0.0;
    if (j.contains("constant")) {
        const json& c = j["constant"];
        if (c.is_number()) {
            value = c.get<double>();
        } else if (c.is_object()) {
            mode = c.value("mode", "explicit");
            value = c.value("value", 0.0);
        } else {
            schema_error("constant must be a number or {mode, value}");
        }
    }
    if (mode == "auto_h") {
        if (!f.potentials.empty()) schema_error("auto_h requires a potential-free functional");
        f.constant = h_constant(f.density, conv);
        f.constant_mode = ConstantMode::AutoH;
    } else if (mode == "explicit") {
        f.constant = value;
        f.constant_mode = ConstantMode::Explicit;
    } else {
        schema_error("constant mode must be auto_h or explicit");
    }
    validate_functional(f);
    return f;
}

json to_json(const LoopPath& l) {
    json out;
    out["dim"] = l.dim();
    json comps = json::array();
    for (const auto& c : l.components()) comps.push_back(to_json(c));
    out["components"] = std::move(comps);
    return out;
}

LoopPath loop_from_json(const json& j) {
    if (!j.is_object() || !j.contains("components") || !j["components"].is_array())
        schema_error("loop must be {dim, components}");
    std::vector<PiecewisePoly> comps;
    for (const auto& c : j["components"]) comps.push_back(piecewise_from_json(c));
    return LoopPath(std::move(comps));
}

json to_json(const SampledPath& p) {
    json out;
    out["dim"] = p.dim();
    out["t_lo"] = p.t_lo;
    out["t_hi"] = p.t_hi;
    json comps = json::array();
    for (const auto& c : p.components) comps.push_back(to_json(c));
    out["components"] = std::move(comps);
    return out;
}

SampledPath path_from_json(const json& j) {
    SampledPath p;
    p.t_lo = require_number(j, "t_lo");
    p.t_hi = require_number(j, "t_hi");
    if (!j.contains("components") || !j["components"].is_array())
        schema_error("path must carry a components array");
    for (const auto& c : j["components"]) p.components.push_back(piecewise_from_json(c));
    return p;
}

json to_json(const WeylElement& w) {
    return json{{"theta", w.theta}, {"a", w.a}, {"b", w.b}};
}

json to_json(const GroupWord& w) {
    json out;
    out["prefactor"] = w.prefactor;
    json factors = json::array();
    for (const auto& f : w.factors)
        factors.push_back(json{{"functional", to_json(f.functional)}, {"exp", f.exponent}});
    out["factors"] = std::move(factors);
    return out;
}

GroupWord word_from_json(const json& j, HConvention conv) {
    GroupWord w;
    if (!j.is_object()) schema_error("word must be an object");
    w.prefactor = j.value("prefactor", 0.0);
    if (j.contains("factors")) {
        if (!j["factors"].is_array()) schema_error("factors must be an array");
        for (const auto& jf : j["factors"]) {
            GroupWord::Factor f;
            if (!jf.contains("functional")) schema_error("factor needs a functional");
            f.functional = functional_from_json(jf["functional"], conv);
            f.exponent = jf.value("exp", 1);
            if (f.exponent != 1 && f.exponent != -1) schema_error("factor exp must be +-1");
            w.factors.push_back(std::move(f));
        }
    }
    return w;
}

json to_json(const InteractionSpec& s) {
    json out = shape_to_json(s.shape);
    double ramp = 0.0;
    if (const auto sup = s.chi.support()) ramp = s.core_lo - sup->first;
    out["chi"] = {{"core", {s.core_lo, s.core_hi}}, {"ramp", ramp}};
    return out;
}

InteractionSpec interaction_from_json(const json& j) {
    const PotentialShape shape = shape_from_json(j);
    if (!j.contains("chi") || !j["chi"].is_object()) schema_error("interaction needs chi");
    const json& jc = j["chi"];
    if (!jc.contains("core") || !jc["core"].is_array() || jc["core"].size() != 2)
        schema_error("chi.core must be [t0, t1]");
    const double lo = jc["core"][0].get<double>();
    const double hi = jc["core"][1].get<double>();
    return make_interaction(shape, lo, hi, jc.value("ramp", 0.0));
}

std::string to_string(SuiteKind k) {
    switch (k) {
        case SuiteKind::Weyl: return "weyl";
        case SuiteKind::Loop: return "loop";
        case SuiteKind::Causal: return "causal";
        case SuiteKind::Moment: return "moment";
        case SuiteKind::EulerLagrange: return "euler_lagrange";
        case SuiteKind::Interaction: return "interaction";
        case SuiteKind::Convergence: return "convergence";
    }
    return "moment";
}

SuiteKind suite_from_string(const std::string& s) {
    if (s == "weyl") return SuiteKind::Weyl;
    if (s == "loop") return SuiteKind::Loop;
    if (s == "causal") return SuiteKind::Causal;
    if (s == "moment") return SuiteKind::Moment;
    if (s == "euler_lagrange") return SuiteKind::EulerLagrange;
    if (s == "interaction") return SuiteKind::Interaction;
    if (s == "convergence") return SuiteKind::Convergence;
    throw ConfigError("unknown suite '" + s + "'");
}

json to_json(const Scenario& s) {
    json out;
    out["suite"] = to_string(s.suite);
    out["seed"] = s.seed;
    out["grid"] = {{"n", s.n}, {"x_min", s.x_min}, {"length", s.length}};
    out["dt"] = s.dt;
    out["scheme"] = s.scheme == Scheme::Strang ? "strang" : "trotter1";
    out["h_convention"] = s.h_convention == HConvention::Consistent ? "consistent" : "printed";
    out["sign_convention"] = s.sign_convention == SignConvention::S4 ? "s4" : "s2";
    out["tolerances"] = s.tolerance_overrides;
    out["tol"] = s.tol_floor ? json(*s.tol_floor) : json(nullptr);
    out["quick"] = s.quick;
    return out;
}

Scenario scenario_from_json(const json& j) {
    Scenario s;
    if (!j.is_object()) schema_error("scenario must be an object");
    if (j.contains("suite")) s.suite = suite_from_string(j["suite"].get<std::string>());
    if (j.contains("seed")) s.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("grid")) {
        const json& g = j["grid"];
        s.n = g.value("n", s.n);
        s.x_min = g.value("x_min", s.x_min);
        s.length = g.value("length", s.length);
    }
    s.dt = j.value("dt", s.dt);
    if (!(s.dt > 0.0)) schema_error("dt must be positive");
    if (s.n < 2 || (s.n & (s.n - 1)) != 0) schema_error("grid.n must be a power of two >= 2");
    if (j.contains("scheme")) {
        const std::string sch = j["scheme"].get<std::string>();
        if (sch == "strang") s.scheme = Scheme::Strang;
        else if (sch == "trotter1") s.scheme = Scheme::Trotter1;
        else schema_error("scheme must be strang or trotter1");
    }
    if (j.contains("h_convention")) {
        const std::string h = j["h_convention"].get<std::string>();
        if (h == "consistent") s.h_convention = HConvention::Consistent;
        else if (h == "printed") s.h_convention = HConvention::Printed;
        else schema_error("h_convention must be consistent or printed");
    }
    if (j.contains("sign_convention")) {
        const std::string sg = j["sign_convention"].get<std::string>();
        if (sg == "s4") s.sign_convention = SignConvention::S4;
        else if (sg == "s2") s.sign_convention = SignConvention::S2;
        else schema_error("sign_convention must be s4 or s2");
    }
    if (j.contains("tolerances")) {
        if (!j["tolerances"].is_object()) schema_error("tolerances must be an object");
        for (const auto& [k, v] : j["tolerances"].items())
            s.tolerance_overrides[k] = v.get<double>();
    }
    if (j.contains("tol") && !j["tol"].is_null()) s.tol_floor = j["tol"].get<double>();
    s.quick = j.value("quick", false);
    return s;
}

json to_json(const Report& r) {
    json out;
    out["tool"] = "dynalg";
    out["version"] = "0.1.0";
    out["scenario"] = to_json(r.scenario);
    json recs = json::array();
    for (const auto& rec : r.records) {
        json jr;
        jr["name"] = rec.name;
        jr["kind"] = rec.kind;
        jr["value"] = rec.value;
        jr["tolerance"] = rec.tolerance;
        if (rec.target) jr["target"] = *rec.target;
        jr["pass"] = rec.pass;
        if (!rec.series.empty()) {
            json ser = json::array();
            for (const auto& [dt, v] : rec.series) ser.push_back(json::array({dt, v}));
            jr["series"] = std::move(ser);
        }
        recs.push_back(std::move(jr));
    }
    out["records"] = std::move(recs);
    out["overall"] = r.overall;
    out["timings"] = {{"total_seconds", r.total_seconds}};
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open '" + path + "'");
    try {
        json j;
        in >> j;
        return j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("invalid JSON in '" + path + "': " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write '" + path + "'");
    out << text;
}

std::string state_to_csv(const WaveState& s) {
    std::ostringstream os;
    os.precision(17);
    os << "x,re_psi,im_psi\n";
    for (std::size_t j = 0; j < s.amp.size(); ++j)
        os << s.grid->xs()[j] << "," << s.amp[j].real() << "," << s.amp[j].imag() << "\n";
    return os.str();
}

} // namespace dynalg
