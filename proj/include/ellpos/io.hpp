#pragma once

// JSON surface documents and report emission.
//
// Surface document:
//   {
//     "base": {"genus": 0},
//     "fibers": [{"kind": "I0*", "count": 4}, {"kind": "I", "n": 3},
//                {"kind": "I0", "multiplicity": 2}],
//     "flags": {"isotrivial": true, "cm": false, "standard": true,
//               "zeta_pseff": false, "zeta_nef_codim_one": false},
//     "action": {"group_order": 2,
//                "branch": [{"order": 2, "action": "involution"}]},
//     "minimal_model_class": "K3"
//   }
// kind is one of I, I*, II, III, IV, II*, III*, IV*, optionally with the
// index written inline ("I3", "I0*"). minimal_model_class is one of
// abelian, bielliptic, K3, Enriques, rational, ruled:<genus>.
// Rationals are written as "p/q" strings.

#include "ellpos/errors.hpp"
#include "ellpos/feasibility.hpp"
#include "ellpos/lattice.hpp"
#include "ellpos/verdict.hpp"

#include <json.hpp>

#include <string>

namespace ellpos {

using Json = nlohmann::ordered_json;

enum class ParseErrorKind {
    Malformed,
    MissingField,
    UnknownFiberKind,
    InvalidMultiplicity,
    InvalidGenus,
    HurwitzInconsistent,
    NonIntegralEuler,
    Inconsistent,
};

std::string to_string(ParseErrorKind k);

class ParseError : public Error {
public:
    ParseError(ParseErrorKind kind, std::string path, const std::string& message);

    ParseErrorKind kind() const { return kind_; }
    const std::string& path() const { return path_; }

private:
    ParseErrorKind kind_;
    std::string path_;
};

// kind name to fibre type; n and multiplicity default when absent
FiberType parse_fiber_kind(const std::string& kind, const std::string& path);

SurfaceDescription parse_surface(const Json& doc);
SurfaceDescription parse_surface_text(const std::string& text);
Json emit_surface(const SurfaceDescription& s);

// {"labels": [...], "gram": [[...]]} or {"fiber": "<kind>"}
CurveConfigPtr parse_curve_config(const Json& doc);
// comma-separated rationals, one per curve
QDivisor parse_divisor(const CurveConfigPtr& config, const std::string& text);

Json to_json(const NumericalInvariants& inv);
Json to_json(const VerdictReport& r);
Json to_json(const ZariskiPair& z);
Json to_json(const FeasibilityVerdict& v);

std::string to_human(const NumericalInvariants& inv);
std::string to_human(const VerdictReport& r);
std::string to_human(const ZariskiPair& z);

} // namespace ellpos
