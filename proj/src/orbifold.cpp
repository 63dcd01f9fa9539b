#include "ellpos/orbifold.hpp"

#include "ellpos/errors.hpp"

#include <algorithm>

namespace ellpos {

std::string to_string(StabilizerKind k)
{
    switch (k) {
    case StabilizerKind::Translation:
        return "translation";
    case StabilizerKind::Involution:
        return "involution";
    case StabilizerKind::Order4:
        return "order4";
    case StabilizerKind::Order6:
        return "order6";
    }
    return "?";
}

std::string to_string(QTilde q)
{
    return q == QTilde::Yes ? "yes" : "unknown";
}

void validate(const BranchPoint& p)
{
    if (p.stab_order < 2)
        throw Inconsistent("stabiliser order must be at least 2, got " + std::to_string(p.stab_order));
    switch (p.action) {
    case StabilizerKind::Translation:
        break;
    case StabilizerKind::Involution:
        if (p.stab_order != 2)
            throw Inconsistent("an involution stabiliser has order 2, got " + std::to_string(p.stab_order));
        break;
    case StabilizerKind::Order4:
        if (p.stab_order != 4)
            throw Inconsistent("an order-4 stabiliser has order 4, got " + std::to_string(p.stab_order));
        break;
    case StabilizerKind::Order6:
        if (p.stab_order != 3 && p.stab_order != 6)
            throw Inconsistent("an order-6 (zeta) stabiliser has order 3 or 6, got " + std::to_string(p.stab_order));
        break;
    }
}

OrbifoldData orbifold_data(const FiberConfiguration& c)
{
    OrbifoldData o;
    o.base_genus = c.base_genus;
    for (const auto& f : c.fibers)
        if (f.is_multiple())
            o.multiplicities.push_back(f.multiplicity);
    o.lambda = orbifold_lambda(c);
    return o;
}

BaseTwist lambda_and_base_twist(const FiberConfiguration& c)
{
    BaseTwist t;
    t.lambda = orbifold_lambda(c);
    t.pseff = Rational(2 * c.base_genus - 2) + t.lambda >= 0;
    return t;
}

QTilde qtilde_criterion(const FiberConfiguration& c)
{
    if (c.base_genus >= 1)
        return QTilde::Yes;
    if (orbifold_lambda(c) >= 2)
        return QTilde::Yes;
    if (numerical_invariants(c).chi <= 0)
        return QTilde::Yes;
    return QTilde::Unknown;
}

HurwitzResult hurwitz_genus(const GroupActionData& a)
{
    if (a.group_order < 1)
        throw Inconsistent("group order must be positive, got " + std::to_string(a.group_order));
    if (a.base_genus < 0)
        throw Inconsistent("base genus must be non-negative");
    const int d = a.group_order;
    Rational rhs = Rational(d * (2 * a.base_genus - 2));
    HurwitzResult out;
    for (const auto& p : a.branch) {
        validate(p);
        if (d % p.stab_order != 0)
            throw Inconsistent("stabiliser order " + std::to_string(p.stab_order) + " does not divide |G| = " +
                               std::to_string(d));
        Rational r = Rational(d) * (1 - ratio(1, p.stab_order));
        rhs += r;
        if (p.action == StabilizerKind::Translation)
            out.deg_rt += r;
    }
    // rhs = 2g(C) - 2
    if (!is_integer(rhs) || to_int64(rhs) % 2 != 0)
        throw Inconsistent("Hurwitz right-hand side " + to_string(rhs) + " is odd");
    const int64_t g = to_int64(rhs) / 2 + 1;
    if (g < 0)
        throw Inconsistent("Hurwitz formula gives negative genus " + std::to_string(g));
    out.curve_genus = static_cast<int>(g);
    return out;
}

InvolutionCount involution_count(int curve_genus, int group_order, const Rational& deg_rt)
{
    Rational z = Rational(2 * curve_genus - 2 + 2 * group_order) - deg_rt;
    if (!is_integer(z))
        throw Inconsistent("translation ramification degree " + to_string(deg_rt) + " is not integral");
    InvolutionCount out;
    out.count = to_int64(z);
    out.meets_lower_bound = out.count >= 2 * curve_genus - 1;
    return out;
}

InvolutionCount involution_count(const GroupActionData& a)
{
    HurwitzResult h = hurwitz_genus(a);
    const bool formula_applies =
        a.base_genus == 0 && std::all_of(a.branch.begin(), a.branch.end(), [](const BranchPoint& p) {
            return p.action == StabilizerKind::Translation || p.action == StabilizerKind::Involution;
        });
    if (formula_applies)
        return involution_count(h.curve_genus, a.group_order, h.deg_rt);
    // otherwise count fixed points directly: each involution branch point
    // has an orbit of d/2 points on C
    InvolutionCount out;
    for (const auto& p : a.branch)
        if (p.action == StabilizerKind::Involution)
            out.count += a.group_order / 2;
    out.meets_lower_bound = out.count >= 2 * h.curve_genus - 1;
    return out;
}

} // namespace ellpos
