#include "ellpos/io.hpp"

#include "ellpos/errors.hpp"

#include <regex>
#include <sstream>

namespace ellpos {

std::string to_string(ParseErrorKind k)
{
    switch (k) {
    case ParseErrorKind::Malformed: return "Malformed";
    case ParseErrorKind::MissingField: return "MissingField";
    case ParseErrorKind::UnknownFiberKind: return "UnknownFiberKind";
    case ParseErrorKind::InvalidMultiplicity: return "InvalidMultiplicity";
    case ParseErrorKind::InvalidGenus: return "InvalidGenus";
    case ParseErrorKind::HurwitzInconsistent: return "HurwitzInconsistent";
    case ParseErrorKind::NonIntegralEuler: return "NonIntegralEuler";
    case ParseErrorKind::Inconsistent: return "Inconsistent";
    }
    throw InvariantViolation("unknown parse error kind");
}

ParseError::ParseError(ParseErrorKind kind, std::string path, const std::string& message)
    : Error(to_string(kind) + " at " + (path.empty() ? "/" : path) + ": " + message), kind_(kind), path_(std::move(path))
{
}

namespace {

[[noreturn]] void fail(ParseErrorKind k, const std::string& path, const std::string& msg)
{
    throw ParseError(k, path, msg);
}

const Json& require(const Json& obj, const char* key, const std::string& path)
{
    if (!obj.is_object())
        fail(ParseErrorKind::Malformed, path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end())
        fail(ParseErrorKind::MissingField, path + "." + key, "required field is missing");
    return *it;
}

int as_int(const Json& v, const std::string& path)
{
    if (!v.is_number_integer())
        fail(ParseErrorKind::Malformed, path, "expected an integer");
    return v.get<int>();
}

bool as_bool(const Json& v, const std::string& path)
{
    if (!v.is_boolean())
        fail(ParseErrorKind::Malformed, path, "expected true or false");
    return v.get<bool>();
}

Rational as_rational(const Json& v, const std::string& path)
{
    if (v.is_number_integer())
        return Rational(v.get<long>());
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const std::invalid_argument& e) {
            fail(ParseErrorKind::Malformed, path, e.what());
        }
    }
    fail(ParseErrorKind::Malformed, path, "expected an integer or a \"p/q\" string");
}

StabilizerKind parse_action_kind(const Json& v, const std::string& path)
{
    if (!v.is_string())
        fail(ParseErrorKind::Malformed, path, "expected a string");
    const std::string s = v.get<std::string>();
    if (s == "translation")
        return StabilizerKind::Translation;
    if (s == "involution")
        return StabilizerKind::Involution;
    if (s == "order4")
        return StabilizerKind::Order4;
    if (s == "order6")
        return StabilizerKind::Order6;
    fail(ParseErrorKind::Malformed, path, "unknown stabiliser action '" + s + "'");
}

std::string action_name(StabilizerKind k)
{
    switch (k) {
    case StabilizerKind::Translation: return "translation";
    case StabilizerKind::Involution: return "involution";
    case StabilizerKind::Order4: return "order4";
    case StabilizerKind::Order6: return "order6";
    }
    throw InvariantViolation("unknown stabiliser kind");
}

MinimalModel parse_minimal_model(const Json& v, const std::string& path)
{
    if (!v.is_string())
        fail(ParseErrorKind::Malformed, path, "expected a string");
    const std::string s = v.get<std::string>();
    if (s == "abelian")
        return {MinimalClass::Abelian, 0};
    if (s == "bielliptic")
        return {MinimalClass::Bielliptic, 0};
    if (s == "K3")
        return {MinimalClass::K3, 0};
    if (s == "Enriques")
        return {MinimalClass::Enriques, 0};
    if (s == "rational")
        return {MinimalClass::Ruled, 0};
    static const std::regex ruled(R"(ruled:(\d+))");
    std::smatch m;
    if (std::regex_match(s, m, ruled))
        return {MinimalClass::Ruled, std::stoi(m[1])};
    fail(ParseErrorKind::Malformed, path, "unknown minimal-model class '" + s + "'");
}

std::string minimal_model_name(const MinimalModel& m)
{
    if (m.kind != MinimalClass::Ruled)
        return to_string(m.kind);
    return m.genus == 0 ? "rational" : "ruled:" + std::to_string(m.genus);
}

std::string kind_base(const FiberType& t)
{
    switch (t.kind) {
    case FiberKind::I: return "I";
    case FiberKind::IStar: return "I*";
    case FiberKind::II: return "II";
    case FiberKind::III: return "III";
    case FiberKind::IV: return "IV";
    case FiberKind::IIStar: return "II*";
    case FiberKind::IIIStar: return "III*";
    case FiberKind::IVStar: return "IV*";
    }
    throw InvariantViolation("unknown fibre kind");
}

} // namespace

FiberType parse_fiber_kind(const std::string& kind, const std::string& path)
{
    static const std::regex indexed(R"(I(\d*)(\*?))");
    std::smatch m;
    if (kind == "II")
        return FiberType::of(FiberKind::II);
    if (kind == "III")
        return FiberType::of(FiberKind::III);
    if (kind == "IV")
        return FiberType::of(FiberKind::IV);
    if (kind == "II*")
        return FiberType::of(FiberKind::IIStar);
    if (kind == "III*")
        return FiberType::of(FiberKind::IIIStar);
    if (kind == "IV*")
        return FiberType::of(FiberKind::IVStar);
    if (std::regex_match(kind, m, indexed)) {
        int n = m[1].length() ? std::stoi(m[1]) : 0;
        return m[2].length() ? FiberType::i_star(n) : FiberType::i(n);
    }
    fail(ParseErrorKind::UnknownFiberKind, path, "unknown fibre kind '" + kind + "'");
}

SurfaceDescription parse_surface(const Json& doc)
{
    if (!doc.is_object())
        fail(ParseErrorKind::Malformed, "", "expected an object");
    SurfaceDescription s;
    FiberConfiguration& c = s.config;

    const Json& base = require(doc, "base", "");
    c.base_genus = as_int(require(base, "genus", ".base"), ".base.genus");
    if (c.base_genus < 0)
        fail(ParseErrorKind::InvalidGenus, ".base.genus", "genus must be non-negative");

    const Json& fibers = require(doc, "fibers", "");
    if (!fibers.is_array())
        fail(ParseErrorKind::Malformed, ".fibers", "expected an array");
    for (std::size_t i = 0; i < fibers.size(); ++i) {
        const std::string path = ".fibers[" + std::to_string(i) + "]";
        const Json& f = fibers[i];
        const Json& kv = require(f, "kind", path);
        if (!kv.is_string())
            fail(ParseErrorKind::Malformed, path + ".kind", "expected a string");
        FiberType t = parse_fiber_kind(kv.get<std::string>(), path + ".kind");
        if (f.contains("n")) {
            const int n = as_int(f["n"], path + ".n");
            const bool indexed = t.kind == FiberKind::I || t.kind == FiberKind::IStar;
            const bool inline_index = kv.get<std::string>().find_first_of("0123456789") != std::string::npos;
            if (!indexed || n < 0 || (inline_index && n != t.n))
                fail(ParseErrorKind::UnknownFiberKind, path + ".n", "index does not fit kind " + kv.get<std::string>());
            t.n = n;
        }
        if (f.contains("multiplicity")) {
            const int m = as_int(f["multiplicity"], path + ".multiplicity");
            if (m < 1)
                fail(ParseErrorKind::InvalidMultiplicity, path + ".multiplicity", "multiplicity must be at least 1");
            if (m > 1 && !(t.kind == FiberKind::I && t.n == 0))
                fail(ParseErrorKind::InvalidMultiplicity, path + ".multiplicity",
                     "only smooth fibres (I0) may be multiple");
            t.multiplicity = m;
        }
        int count = 1;
        if (f.contains("count")) {
            count = as_int(f["count"], path + ".count");
            if (count < 1)
                fail(ParseErrorKind::Malformed, path + ".count", "count must be at least 1");
        }
        c.fibers.insert(c.fibers.end(), count, t);
    }

    if (doc.contains("flags")) {
        const Json& fl = doc["flags"];
        if (!fl.is_object())
            fail(ParseErrorKind::Malformed, ".flags", "expected an object");
        if (fl.contains("isotrivial"))
            c.flags.isotrivial = as_bool(fl["isotrivial"], ".flags.isotrivial");
        if (fl.contains("cm"))
            c.flags.cm = as_bool(fl["cm"], ".flags.cm");
        if (fl.contains("standard"))
            c.flags.standard = as_bool(fl["standard"], ".flags.standard");
        if (fl.contains("zeta_pseff"))
            c.flags.zeta_pseff = as_bool(fl["zeta_pseff"], ".flags.zeta_pseff");
        if (fl.contains("zeta_nef_codim_one"))
            c.flags.zeta_nef_codim_one = as_bool(fl["zeta_nef_codim_one"], ".flags.zeta_nef_codim_one");
    }

    try {
        numerical_invariants(c);
    } catch (const NonIntegralEuler& e) {
        fail(ParseErrorKind::NonIntegralEuler, ".fibers", e.what());
    }

    if (doc.contains("action")) {
        const Json& a = doc["action"];
        GroupActionData g;
        g.base_genus = c.base_genus;
        g.group_order = as_int(require(a, "group_order", ".action"), ".action.group_order");
        if (g.group_order < 1)
            fail(ParseErrorKind::HurwitzInconsistent, ".action.group_order", "group order must be positive");
        const Json& br = require(a, "branch", ".action");
        if (!br.is_array())
            fail(ParseErrorKind::Malformed, ".action.branch", "expected an array");
        for (std::size_t i = 0; i < br.size(); ++i) {
            const std::string path = ".action.branch[" + std::to_string(i) + "]";
            BranchPoint p;
            p.stab_order = as_int(require(br[i], "order", path), path + ".order");
            p.action = parse_action_kind(require(br[i], "action", path), path + ".action");
            try {
                validate(p);
            } catch (const Inconsistent& e) {
                fail(ParseErrorKind::HurwitzInconsistent, path, e.what());
            }
            g.branch.push_back(p);
        }
        try {
            hurwitz_genus(g);
        } catch (const Inconsistent& e) {
            fail(ParseErrorKind::HurwitzInconsistent, ".action", e.what());
        }
        s.action = std::move(g);
    }

    if (doc.contains("minimal_model_class"))
        s.minimal_model = parse_minimal_model(doc["minimal_model_class"], ".minimal_model_class");

    try {
        validate(s);
    } catch (const InvalidFiber& e) {
        fail(ParseErrorKind::UnknownFiberKind, ".fibers", e.what());
    } catch (const InvalidGenus& e) {
        fail(ParseErrorKind::InvalidGenus, "", e.what());
    } catch (const Inconsistent& e) {
        fail(ParseErrorKind::Inconsistent, s.action ? ".action" : "", e.what());
    }
    return s;
}

SurfaceDescription parse_surface_text(const std::string& text)
{
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        fail(ParseErrorKind::Malformed, "", e.what());
    }
    return parse_surface(doc);
}

Json emit_surface(const SurfaceDescription& s)
{
    Json doc;
    doc["base"] = {{"genus", s.config.base_genus}};
    Json fibers = Json::array();
    for (const auto& f : s.config.fibers) {
        Json e;
        e["kind"] = kind_base(f);
        if (f.kind == FiberKind::I || f.kind == FiberKind::IStar)
            e["n"] = f.n;
        if (f.multiplicity > 1)
            e["multiplicity"] = f.multiplicity;
        fibers.push_back(std::move(e));
    }
    doc["fibers"] = std::move(fibers);
    Json flags;
    flags["isotrivial"] = s.config.flags.isotrivial;
    if (s.config.flags.cm)
        flags["cm"] = *s.config.flags.cm;
    if (s.config.flags.standard)
        flags["standard"] = *s.config.flags.standard;
    flags["zeta_pseff"] = s.config.flags.zeta_pseff;
    flags["zeta_nef_codim_one"] = s.config.flags.zeta_nef_codim_one;
    doc["flags"] = std::move(flags);
    if (s.action) {
        Json br = Json::array();
        for (const auto& p : s.action->branch)
            br.push_back({{"order", p.stab_order}, {"action", action_name(p.action)}});
        doc["action"] = {{"group_order", s.action->group_order}, {"branch", std::move(br)}};
    }
    if (s.minimal_model)
        doc["minimal_model_class"] = minimal_model_name(*s.minimal_model);
    return doc;
}

CurveConfigPtr parse_curve_config(const Json& doc)
{
    if (!doc.is_object())
        fail(ParseErrorKind::Malformed, "", "expected an object");
    if (doc.contains("fiber")) {
        const Json& k = doc["fiber"];
        if (!k.is_string())
            fail(ParseErrorKind::Malformed, ".fiber", "expected a string");
        FiberType t = parse_fiber_kind(k.get<std::string>(), ".fiber");
        try {
            return fiber_model(t).components;
        } catch (const Error& e) {
            fail(ParseErrorKind::UnknownFiberKind, ".fiber", e.what());
        }
    }
    const Json& labels = require(doc, "labels", "");
    const Json& gram = require(doc, "gram", "");
    if (!labels.is_array() || !gram.is_array())
        fail(ParseErrorKind::Malformed, "", "labels and gram must be arrays");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!labels[i].is_string())
            fail(ParseErrorKind::Malformed, ".labels[" + std::to_string(i) + "]", "expected a string");
        names.push_back(labels[i].get<std::string>());
    }
    Matrix m(gram.size(), names.size());
    for (std::size_t r = 0; r < gram.size(); ++r) {
        const std::string path = ".gram[" + std::to_string(r) + "]";
        if (!gram[r].is_array() || gram[r].size() != names.size())
            fail(ParseErrorKind::Malformed, path, "row length differs from the number of labels");
        for (std::size_t c = 0; c < names.size(); ++c)
            m(r, c) = as_rational(gram[r][c], path + "[" + std::to_string(c) + "]");
    }
    try {
        return make_config(std::move(names), std::move(m));
    } catch (const Error& e) {
        fail(ParseErrorKind::Malformed, ".gram", e.what());
    }
}

QDivisor parse_divisor(const CurveConfigPtr& config, const std::string& text)
{
    RationalVector coeffs;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            coeffs.push_back(parse_rational(item));
        } catch (const std::invalid_argument& e) {
            fail(ParseErrorKind::Malformed, "--divisor", e.what());
        }
    }
    if (coeffs.size() != config->size())
        fail(ParseErrorKind::Malformed, "--divisor",
             "expected " + std::to_string(config->size()) + " coefficients, got " + std::to_string(coeffs.size()));
    return QDivisor(config, std::move(coeffs));
}

Json to_json(const NumericalInvariants& inv)
{
    Json j;
    j["e"] = inv.e;
    j["chi"] = inv.chi;
    j["lambda"] = to_string(inv.lambda);
    j["delta"] = to_string(inv.delta);
    j["kappa"] = to_string(inv.kappa);
    return j;
}

Json to_json(const VerdictReport& r)
{
    Json j;
    j["invariants"] = to_json(r.invariants);
    j["lambda"] = to_string(r.lambda);
    j["base_twist_pseff"] = r.base_twist_pseff;
    j["omega_pseff"] = to_string(r.omega_pseff);
    j["qtilde_positive"] = to_string(r.qtilde_positive);
    j["nonvanishing"] = to_string(r.nonvanishing);
    j["pi1_finite"] = to_string(r.pi1_finite);
    j["zeta_notes"] = r.zeta_notes;
    j["case_trace"] = r.case_trace;
    return j;
}

namespace {

Json divisor_json(const QDivisor& d)
{
    Json j = Json::object();
    const auto& labels = d.config()->labels();
    for (std::size_t i = 0; i < labels.size(); ++i)
        j[labels[i]] = to_string(d[i]);
    return j;
}

std::string divisor_human(const QDivisor& d)
{
    std::string out;
    const auto& labels = d.config()->labels();
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (d[i] == 0)
            continue;
        if (!out.empty())
            out += " + ";
        out += (d[i] == 1 ? std::string() : to_string(d[i]) + " ") + labels[i];
    }
    return out.empty() ? "0" : out;
}

} // namespace

Json to_json(const ZariskiPair& z)
{
    return {{"positive", divisor_json(z.positive)}, {"negative", divisor_json(z.negative)}};
}

Json to_json(const FeasibilityVerdict& v)
{
    Json j;
    j["k"] = v.k;
    j["status"] = to_string(v.status);
    j["numerical_only"] = v.numerical_only;
    if (v.witness) {
        Json comps = Json::array();
        for (const auto& c : v.witness->component_coeffs) {
            Json row = Json::array();
            for (const auto& x : c)
                row.push_back(to_string(x));
            comps.push_back(std::move(row));
        }
        j["witness"] = {{"components", std::move(comps)}, {"general_fibers", to_string(v.witness->general_fibers)}};
    }
    return j;
}

std::string to_human(const NumericalInvariants& inv)
{
    std::ostringstream o;
    o << "e      = " << inv.e << '\n'
      << "chi    = " << inv.chi << '\n'
      << "lambda = " << to_string(inv.lambda) << '\n'
      << "delta  = " << to_string(inv.delta) << '\n'
      << "kappa  = " << to_string(inv.kappa) << '\n';
    return o.str();
}

std::string to_human(const VerdictReport& r)
{
    std::ostringstream o;
    o << to_human(r.invariants) << "base twist pseudoeffective: " << (r.base_twist_pseff ? "yes" : "no") << '\n'
      << "Omega_X pseudoeffective:    " << to_string(r.omega_pseff) << '\n'
      << "augmented irregularity > 0: " << to_string(r.qtilde_positive) << '\n'
      << "nonvanishing:               " << to_string(r.nonvanishing) << '\n'
      << "pi_1 finite:                " << to_string(r.pi1_finite) << '\n';
    for (const auto& n : r.zeta_notes)
        o << "note: " << n << '\n';
    for (const auto& c : r.case_trace)
        o << "by " << c << '\n';
    return o.str();
}

std::string to_human(const ZariskiPair& z)
{
    return "P = " + divisor_human(z.positive) + "\nN = " + divisor_human(z.negative) + "\n";
}

} // namespace ellpos
