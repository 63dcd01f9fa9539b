#include "ellpos/errors.hpp"
#include "ellpos/io.hpp"
#include "ellpos/isotrivial.hpp"
#include "test_support.hpp"

using namespace ellpos;

namespace {

const char* kKummer = R"({
  "base": {"genus": 0},
  "fibers": [{"kind": "I0*", "count": 4}],
  "flags": {"isotrivial": true, "standard": true},
  "action": {"group_order": 2, "branch": [
    {"order": 2, "action": "involution"}, {"order": 2, "action": "involution"},
    {"order": 2, "action": "involution"}, {"order": 2, "action": "involution"}]},
  "minimal_model_class": "K3"
})";

ParseError parse_error(const std::string& text)
{
    try {
        parse_surface_text(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("no ParseError");
    return ParseError(ParseErrorKind::Malformed, "", "unreachable");
}

} // namespace

TEST_CASE("parse the Kummer document")
{
    auto s = parse_surface_text(kKummer);
    CHECK(s.config.fibers == std::vector<FiberType>(4, FiberType::i_star(0)));
    CHECK(s.config.base_genus == 0);
    REQUIRE(s.action);
    CHECK(s.action->group_order == 2);
    CHECK(s.action->branch.size() == 4);
    CHECK(s.minimal_model == MinimalModel{MinimalClass::K3, 0});
    CHECK(evaluate(s).omega_pseff == Status::No);
}

TEST_CASE("fibre kind spellings")
{
    CHECK(parse_fiber_kind("I3", "") == FiberType::i(3));
    CHECK(parse_fiber_kind("I", "") == FiberType::i(0));
    CHECK(parse_fiber_kind("I0*", "") == FiberType::i_star(0));
    CHECK(parse_fiber_kind("I2*", "") == FiberType::i_star(2));
    CHECK(parse_fiber_kind("IV*", "") == FiberType::of(FiberKind::IVStar));
    CHECK(parse_fiber_kind("II", "") == FiberType::of(FiberKind::II));
    auto s = parse_surface_text(R"({"base": {"genus": 1}, "fibers": [{"kind": "I", "n": 3, "count": 4}]})");
    CHECK(s.config.fibers == std::vector<FiberType>(4, FiberType::i(3)));
    s = parse_surface_text(R"({"base": {"genus": 1}, "fibers": [{"kind": "I*", "n": 0, "count": 2}]})");
    CHECK(s.config.fibers == std::vector<FiberType>(2, FiberType::i_star(0)));
}

TEST_CASE("located parse errors")
{
    auto e = parse_error(R"({"base": {"genus": 0}, "fibers": [{"kind": "V"}]})");
    CHECK(e.kind() == ParseErrorKind::UnknownFiberKind);
    CHECK(e.path() == ".fibers[0].kind");

    e = parse_error(R"({"base": {"genus": 0}, "fibers": [{"kind": "I1", "count": 12}, {"kind": "I0", "multiplicity": 0}]})");
    CHECK(e.kind() == ParseErrorKind::InvalidMultiplicity);
    CHECK(e.path() == ".fibers[1].multiplicity");

    e = parse_error(R"({"base": {"genus": 0}, "fibers": [{"kind": "I2", "multiplicity": 2}]})");
    CHECK(e.kind() == ParseErrorKind::InvalidMultiplicity);

    e = parse_error(R"({"base": {"genus": 0}, "fibers": [{"kind": "I0*", "count": 6}], "flags": {"isotrivial": true},
        "action": {"group_order": 2, "branch": [{"order": 2, "action": "involution"},
        {"order": 2, "action": "involution"}, {"order": 2, "action": "involution"},
        {"order": 2, "action": "involution"}, {"order": 2, "action": "involution"}]}})");
    CHECK(e.kind() == ParseErrorKind::HurwitzInconsistent);
    CHECK(e.path() == ".action");

    e = parse_error(R"({"base": {"genus": 0}, "fibers": [{"kind": "I1"}]})");
    CHECK(e.kind() == ParseErrorKind::NonIntegralEuler);
    CHECK(e.path() == ".fibers");

    e = parse_error(R"({"fibers": []})");
    CHECK(e.kind() == ParseErrorKind::MissingField);
    CHECK(e.path() == ".base");

    e = parse_error(R"({"base": {"genus": -1}, "fibers": []})");
    CHECK(e.kind() == ParseErrorKind::InvalidGenus);

    e = parse_error(R"({"base": {"genus": "zero"}, "fibers": []})");
    CHECK(e.kind() == ParseErrorKind::Malformed);
    CHECK(e.path() == ".base.genus");

    e = parse_error(R"({"base": {"genus": 0}, "fibers": [{"kind": "I3", "n": 2}]})");
    CHECK(e.kind() == ParseErrorKind::UnknownFiberKind);
    CHECK(e.path() == ".fibers[0].n");

    e = parse_error(R"({"base": {"genus": 0}, "fibers": [], "action": {"group_order": 2, "branch": [{"order": 3, "action": "involution"}]}})");
    CHECK(e.kind() == ParseErrorKind::HurwitzInconsistent);
    CHECK(e.path() == ".action.branch[0]");

    e = parse_error("{not json");
    CHECK(e.kind() == ParseErrorKind::Malformed);

    e = parse_error(R"({"base": {"genus": 0}, "fibers": [], "minimal_model_class": "hyperbolic"})");
    CHECK(e.kind() == ParseErrorKind::Malformed);
    CHECK(e.path() == ".minimal_model_class");

    CHECK(std::string(e.what()).find(".minimal_model_class") != std::string::npos);
}

TEST_CASE("parse, emit and parse again round-trips")
{
    std::vector<SurfaceDescription> samples;
    samples.push_back(parse_surface_text(kKummer));
    auto pq = build_product_quotient(3);
    samples.push_back({pq.config, pq.action, std::nullopt});
    SurfaceDescription mixed;
    mixed.config.base_genus = 1;
    mixed.config.fibers = {FiberType::i(5), FiberType::i_star(2), FiberType::of(FiberKind::II),
                           FiberType::of(FiberKind::IIStar), FiberType::smooth(3), FiberType::i(11)};
    mixed.config.flags.cm = true;
    mixed.config.flags.zeta_pseff = true;
    mixed.minimal_model = MinimalModel{MinimalClass::Ruled, 2};
    samples.push_back(mixed);
    SurfaceDescription iso;
    iso.config.base_genus = 0;
    iso.config.fibers = std::vector<FiberType>(4, FiberType::of(FiberKind::IIIStar));
    iso.config.flags.isotrivial = true;
    iso.config.flags.zeta_nef_codim_one = true;
    iso.action = GroupActionData{4, 0, std::vector<BranchPoint>(4, BranchPoint{4, StabilizerKind::Order4})};
    samples.push_back(iso);

    for (const auto& s : samples) {
        Json doc = emit_surface(s);
        auto back = parse_surface(doc);
        CHECK(back == s);
        CHECK(emit_surface(back) == doc);
        CHECK(parse_surface_text(doc.dump()) == s);
    }
}

TEST_CASE("reports serialise rationals as strings")
{
    SurfaceDescription s;
    s.config.fibers = std::vector<FiberType>(36, FiberType::i(1));
    s.config.fibers.push_back(FiberType::smooth(3));
    s.config.fibers.push_back(FiberType::smooth(2));
    auto j = to_json(evaluate(s));
    CHECK(j["lambda"] == "7/6");
    CHECK(j["invariants"]["delta"] == "13/6");
    CHECK(j["invariants"]["kappa"] == "1");
    CHECK(j["omega_pseff"] == "no");
    CHECK(j["pi1_finite"] == "yes");
    CHECK(j["case_trace"].is_array());
    auto human = to_human(evaluate(s));
    CHECK(human.find("lambda = 7/6") != std::string::npos);
}

TEST_CASE("curve configurations and divisors from text")
{
    auto c = parse_curve_config(Json::parse(R"({"labels": ["A", "B"], "gram": [[-2, 1], [1, "-5/2"]]})"));
    CHECK(c->intersection(1, 1) == ratio(-5, 2));
    auto d = parse_divisor(c, "1, 1/2");
    CHECK(d[1] == ratio(1, 2));
    CHECK_THROWS_AS(parse_divisor(c, "1"), ParseError);
    CHECK_THROWS_AS(parse_divisor(c, "1,x"), ParseError);

    auto f = parse_curve_config(Json::parse(R"({"fiber": "I0*"})"));
    CHECK(f->size() == 5);
    auto z = zariski_decompose(parse_divisor(f, "1,0,0,0,0"));
    auto j = to_json(z);
    CHECK(j["negative"]["C0"] == "1");
    CHECK(to_human(z) == "P = 0\nN = C0\n");

    CHECK_THROWS_AS(parse_curve_config(Json::parse(R"({"labels": ["A"], "gram": [[1, 2]]})")), ParseError);
    CHECK_THROWS_AS(parse_curve_config(Json::parse(R"({"labels": ["A", "B"], "gram": [[1, 2], [3, 1]]})")),
                    ParseError);
    CHECK_THROWS_AS(parse_curve_config(Json::parse(R"({"fiber": "VI"})")), ParseError);
}

TEST_CASE("feasibility verdicts serialise their witness")
{
    auto p = VerticalSectionProblem::with_budget({FiberType::of(FiberKind::II)}, 6, ratio(1, 2));
    auto j = to_json(vertical_feasibility(p));
    CHECK(j["status"] == "feasible");
    CHECK(j["numerical_only"] == true);
    CHECK(j["witness"]["components"][0][0] == "3");
    CHECK(j["witness"]["general_fibers"] == "0");
}
