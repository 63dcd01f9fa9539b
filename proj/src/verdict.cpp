#include "ellpos/verdict.hpp"

#include "ellpos/errors.hpp"
#include "ellpos/isotrivial.hpp"

#include <algorithm>

namespace ellpos {

std::string to_string(MinimalClass c)
{
    switch (c) {
    case MinimalClass::Abelian: return "abelian";
    case MinimalClass::Bielliptic: return "bielliptic";
    case MinimalClass::K3: return "K3";
    case MinimalClass::Enriques: return "Enriques";
    case MinimalClass::Ruled: return "ruled";
    }
    throw InvariantViolation("unknown minimal class");
}

std::string to_string(Status s)
{
    switch (s) {
    case Status::Yes: return "yes";
    case Status::No: return "no";
    case Status::Unknown: return "unknown";
    }
    throw InvariantViolation("unknown status");
}

namespace {

void check_minimal_model(const MinimalModel& m, const NumericalInvariants& inv)
{
    if (m.genus < 0)
        throw InvalidGenus("ruled surface over a curve of genus " + std::to_string(m.genus));
    Kappa kappa = Kappa::Zero;
    int64_t chi = 0;
    switch (m.kind) {
    case MinimalClass::Abelian:
    case MinimalClass::Bielliptic: chi = 0; break;
    case MinimalClass::K3: chi = 2; break;
    case MinimalClass::Enriques: chi = 1; break;
    case MinimalClass::Ruled:
        kappa = Kappa::NegativeInfinity;
        chi = 1 - m.genus;
        break;
    }
    if (inv.kappa != kappa)
        throw Inconsistent("minimal model " + to_string(m.kind) + " needs kappa " + to_string(kappa) + ", fibres give " +
                           to_string(inv.kappa));
    if (inv.chi != chi)
        throw Inconsistent("minimal model " + to_string(m.kind) + " needs chi " + std::to_string(chi) +
                           ", fibres give " + std::to_string(inv.chi));
}

void set_all(VerdictReport& r, Status s)
{
    r.omega_pseff = r.qtilde_positive = r.nonvanishing = s;
}

bool standard_isotrivial(const SurfaceDescription& s)
{
    const ConfigFlags& f = s.config.flags;
    if (f.standard)
        return *f.standard;
    if (f.cm && !*f.cm)
        return true;
    if (s.action)
        return classify_action(*s.action).standard;
    return false;
}

} // namespace

void validate(const SurfaceDescription& s)
{
    validate(s.config);
    numerical_invariants(s.config);
    if (!s.action)
        return;
    const GroupActionData& a = *s.action;
    if (a.base_genus != s.config.base_genus)
        throw Inconsistent("action base genus " + std::to_string(a.base_genus) + " differs from fibration base genus " +
                           std::to_string(s.config.base_genus));
    hurwitz_genus(a);
    if (!s.config.flags.isotrivial)
        throw Inconsistent("a group action is given but the fibration is not flagged isotrivial");
    ActionClassification cls = classify_action(a);
    if (!cls.standard)
        return;
    auto expected = cls.fibers;
    auto given = s.config.fibers;
    auto less = [](const FiberType& x, const FiberType& y) { return x.name() < y.name(); };
    std::sort(expected.begin(), expected.end(), less);
    std::sort(given.begin(), given.end(), less);
    if (expected != given)
        throw Inconsistent("fibres produced by the standard action do not match the listed fibres");
}

VerdictReport evaluate(const SurfaceDescription& s)
{
    validate(s);
    VerdictReport r;
    r.invariants = numerical_invariants(s.config);
    BaseTwist bt = lambda_and_base_twist(s.config);
    r.lambda = bt.lambda;
    r.base_twist_pseff = bt.pseff;
    const int g = s.config.base_genus;
    const bool criterion = g >= 1 || r.lambda >= 2;

    if (r.invariants.kappa != Kappa::One) {
        if (!s.minimal_model)
            throw PreconditionFailed("kappa " + to_string(r.invariants.kappa) +
                                     " needs the minimal-model class (abelian, bielliptic, K3, Enriques, ruled)");
        const MinimalModel& m = *s.minimal_model;
        check_minimal_model(m, r.invariants);
        switch (m.kind) {
        case MinimalClass::Abelian:
        case MinimalClass::Bielliptic:
            set_all(r, Status::Yes);
            r.case_trace.push_back("rule:kappa-nonpositive-classification:" + to_string(m.kind) + "-positive-irregularity");
            break;
        case MinimalClass::K3:
        case MinimalClass::Enriques:
            set_all(r, Status::No);
            r.case_trace.push_back("rule:kappa-nonpositive-classification:" + to_string(m.kind) + "-no-irregular-quasi-etale-cover");
            break;
        case MinimalClass::Ruled:
            set_all(r, m.genus >= 1 ? Status::Yes : Status::No);
            r.case_trace.push_back(m.genus >= 1 ? "rule:kappa-nonpositive-classification:ruled-irrational"
                                                : "rule:kappa-nonpositive-classification:rational");
            break;
        }
    } else if (r.invariants.e == 0) {
        set_all(r, Status::Yes);
        r.case_trace.push_back("rule:almost-smooth:chi-zero-forces-irregularity");
    } else if (!s.config.flags.isotrivial) {
        set_all(r, criterion ? Status::Yes : Status::No);
        r.case_trace.push_back("rule:non-isotrivial-equivalence");
        r.case_trace.push_back(criterion ? "rule:orbifold-base-cover-gives-irregularity"
                                         : "rule:rational-base-few-multiple-fibres-not-pseff");
    } else if (standard_isotrivial(s)) {
        set_all(r, criterion ? Status::Yes : Status::No);
        r.case_trace.push_back("rule:standard-isotrivial-equivalence");
        r.case_trace.push_back(criterion ? "rule:orbifold-base-cover-gives-irregularity"
                                         : "rule:standard-isotrivial-not-pseff");
    } else {
        const ConfigFlags& f = s.config.flags;
        if (f.zeta_pseff && f.zeta_nef_codim_one) {
            set_all(r, Status::Yes);
            r.case_trace.push_back("rule:non-standard-isotrivial:zeta-nef-in-codimension-one");
            r.zeta_notes.push_back("zeta declared pseudoeffective and nef in codimension one");
        } else if (qtilde_criterion(s.config) == QTilde::Yes) {
            set_all(r, Status::Yes);
            r.case_trace.push_back("rule:non-standard-isotrivial:orbifold-base-cover-gives-irregularity");
        } else {
            set_all(r, Status::Unknown);
            r.case_trace.push_back("rule:non-standard-isotrivial:open");
        }
        r.zeta_notes.push_back("whether zeta - cY is pseudoeffective for some c >= 1 is not decided");
    }

    if (r.invariants.kappa == Kappa::One && r.invariants.e != 0)
        r.zeta_notes.push_back(r.omega_pseff == Status::Yes
                                   ? "zeta pseudoeffective"
                                   : r.omega_pseff == Status::No ? "zeta not pseudoeffective; Y lies in its negative part"
                                                                 : "zeta status undecided");

    if (r.omega_pseff == Status::No) {
        r.pi1_finite = Status::Yes;
        r.case_trace.push_back("rule:cotangent-not-pseff-implies-finite-fundamental-group");
    }
    return r;
}

} // namespace ellpos
