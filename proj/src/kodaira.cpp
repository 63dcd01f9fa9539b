#include "ellpos/kodaira.hpp"

#include "ellpos/errors.hpp"

#include <algorithm>
#include <numeric>

namespace ellpos {

std::string FiberType::name() const
{
    std::string prefix = multiplicity > 1 ? std::to_string(multiplicity) : "";
    switch (kind) {
    case FiberKind::I:
        return prefix + "I" + std::to_string(n);
    case FiberKind::IStar:
        return prefix + "I" + std::to_string(n) + "*";
    case FiberKind::II:
        return prefix + "II";
    case FiberKind::III:
        return prefix + "III";
    case FiberKind::IV:
        return prefix + "IV";
    case FiberKind::IIStar:
        return prefix + "II*";
    case FiberKind::IIIStar:
        return prefix + "III*";
    case FiberKind::IVStar:
        return prefix + "IV*";
    }
    return "?";
}

void validate(const FiberType& t)
{
    if (t.multiplicity < 1)
        throw InvalidFiber("multiplicity must be at least 1, got " + std::to_string(t.multiplicity));
    if (t.n < 0)
        throw InvalidFiber("fibre index n must be non-negative, got " + std::to_string(t.n));
    const bool indexed = t.kind == FiberKind::I || t.kind == FiberKind::IStar;
    if (!indexed && t.n != 0)
        throw InvalidFiber("fibre kind " + t.name() + " takes no index");
    if (t.multiplicity > 1 && !(t.kind == FiberKind::I && t.n == 0))
        throw InvalidFiber("multiple fibres are restricted to mI0, got " + t.name());
}

std::string to_string(LocalType t)
{
    switch (t) {
    case LocalType::Node:
        return "node";
    case LocalType::Cusp:
        return "cusp";
    case LocalType::Tangency:
        return "tangency";
    case LocalType::TriplePoint:
        return "triple-point";
    }
    return "?";
}

int FiberModel::z_scheme_length() const
{
    return std::accumulate(znodes.begin(), znodes.end(), 0, [](int s, const ZNode& z) { return s + z.length; });
}

QDivisor FiberModel::full_fiber() const
{
    RationalVector c(multiplicities.begin(), multiplicities.end());
    return QDivisor(components, std::move(c));
}

QDivisor FiberModel::reduced_fiber() const
{
    return QDivisor(components, RationalVector(multiplicities.size(), Rational(1)));
}

namespace {

// Builds a model from a dual graph of (-2)-curves meeting transversally.
struct GraphBuilder {
    std::vector<std::string> labels;
    std::vector<int> mult;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    std::size_t add(std::string label, int m)
    {
        labels.push_back(std::move(label));
        mult.push_back(m);
        return labels.size() - 1;
    }
    void join(std::size_t a, std::size_t b) { edges.emplace_back(a, b); }

    FiberModel build() const
    {
        const std::size_t r = labels.size();
        Matrix g(r, r);
        for (std::size_t i = 0; i < r; ++i)
            g(i, i) = -2;
        FiberModel m;
        for (auto [a, b] : edges) {
            g(a, b) += 1;
            g(b, a) += 1;
            m.znodes.push_back({{a, b}, LocalType::Node, 1});
        }
        m.components = make_config(labels, std::move(g));
        m.multiplicities = mult;
        m.component_genus.assign(r, 0);
        return m;
    }
};

FiberModel irreducible(int self_mult, int genus, std::vector<ZNode> znodes)
{
    Matrix g(1, 1);
    g(0, 0) = 0;
    FiberModel m;
    m.components = make_config({"C0"}, std::move(g));
    m.multiplicities = {self_mult};
    m.component_genus = {genus};
    m.znodes = std::move(znodes);
    return m;
}

FiberModel i_n(int n)
{
    if (n == 1)
        return irreducible(1, 0, {{{0, 0}, LocalType::Node, 1}});
    if (n == 2) {
        Matrix g = Matrix::from_rows({{-2, 2}, {2, -2}});
        FiberModel m;
        m.components = make_config({"C0", "C1"}, std::move(g));
        m.multiplicities = {1, 1};
        m.component_genus = {0, 0};
        m.znodes = {{{0, 1}, LocalType::Node, 1}, {{0, 1}, LocalType::Node, 1}};
        return m;
    }
    GraphBuilder b;
    for (int k = 0; k < n; ++k)
        b.add("C" + std::to_string(k), 1);
    for (int k = 0; k < n; ++k)
        b.join(k, (k + 1) % n);
    return b.build();
}

FiberModel i_n_star(int n)
{
    // chain C0..Cn of multiplicity 2, ends E1,E2 on C0 and E3,E4 on Cn
    GraphBuilder b;
    for (int k = 0; k <= n; ++k)
        b.add("C" + std::to_string(k), 2);
    for (int k = 0; k < n; ++k)
        b.join(k, k + 1);
    for (int e = 1; e <= 4; ++e) {
        auto idx = b.add("E" + std::to_string(e), 1);
        b.join(e <= 2 ? 0 : n, idx);
    }
    return b.build();
}

FiberModel chain_with_branch(const std::vector<int>& chain, std::size_t branch_at, int branch_mult)
{
    GraphBuilder b;
    for (std::size_t k = 0; k < chain.size(); ++k)
        b.add("C" + std::to_string(k), chain[k]);
    for (std::size_t k = 0; k + 1 < chain.size(); ++k)
        b.join(k, k + 1);
    auto br = b.add("B", branch_mult);
    b.join(branch_at, br);
    return b.build();
}

} // namespace

FiberModel fiber_model(const FiberType& t)
{
    validate(t);
    switch (t.kind) {
    case FiberKind::I:
        if (t.n == 0)
            return irreducible(t.multiplicity, 1, {});
        return i_n(t.n);
    case FiberKind::IStar:
        return i_n_star(t.n);
    case FiberKind::II:
        return irreducible(1, 0, {{{0}, LocalType::Cusp, 1}});
    case FiberKind::III: {
        FiberModel m;
        m.components = make_config({"C0", "C1"}, Matrix::from_rows({{-2, 2}, {2, -2}}));
        m.multiplicities = {1, 1};
        m.component_genus = {0, 0};
        m.znodes = {{{0, 1}, LocalType::Tangency, 1}};
        return m;
    }
    case FiberKind::IV: {
        FiberModel m;
        m.components = make_config({"C0", "C1", "C2"}, Matrix::from_rows({{-2, 1, 1}, {1, -2, 1}, {1, 1, -2}}));
        m.multiplicities = {1, 1, 1};
        m.component_genus = {0, 0, 0};
        m.znodes = {{{0, 1, 2}, LocalType::TriplePoint, 1}};
        return m;
    }
    case FiberKind::IVStar: {
        // E6~: centre of multiplicity 3 with three arms 2-1
        GraphBuilder b;
        auto c = b.add("C0", 3);
        for (int arm = 1; arm <= 3; ++arm) {
            auto a = b.add("A" + std::to_string(arm), 2);
            auto e = b.add("E" + std::to_string(arm), 1);
            b.join(c, a);
            b.join(a, e);
        }
        return b.build();
    }
    case FiberKind::IIIStar:
        return chain_with_branch({1, 2, 3, 4, 3, 2, 1}, 3, 2);
    case FiberKind::IIStar:
        return chain_with_branch({1, 2, 3, 4, 5, 6, 4, 2}, 5, 3);
    }
    throw Unsupported("fibre kind " + t.name());
}

int64_t euler_number(const FiberType& t)
{
    validate(t);
    switch (t.kind) {
    case FiberKind::I:
        return t.n;
    case FiberKind::IStar:
        return t.n + 6;
    case FiberKind::II:
        return 2;
    case FiberKind::III:
        return 3;
    case FiberKind::IV:
        return 4;
    case FiberKind::IVStar:
        return 8;
    case FiberKind::IIIStar:
        return 9;
    case FiberKind::IIStar:
        return 10;
    }
    throw Unsupported("fibre kind " + t.name());
}

std::string to_string(Kappa k)
{
    switch (k) {
    case Kappa::NegativeInfinity:
        return "-inf";
    case Kappa::Zero:
        return "0";
    case Kappa::One:
        return "1";
    }
    return "?";
}

void validate(const FiberConfiguration& c)
{
    if (c.base_genus < 0)
        throw InvalidFiber("base genus must be non-negative, got " + std::to_string(c.base_genus));
    for (const auto& f : c.fibers)
        validate(f);
}

Rational orbifold_lambda(const FiberConfiguration& c)
{
    Rational lambda = 0;
    for (const auto& f : c.fibers)
        if (f.multiplicity > 1)
            lambda += 1 - ratio(1, f.multiplicity);
    return lambda;
}

NumericalInvariants numerical_invariants(const FiberConfiguration& c)
{
    validate(c);
    NumericalInvariants inv;
    for (const auto& f : c.fibers)
        inv.e += euler_number(f);
    if (inv.e % 12 != 0)
        throw NonIntegralEuler("e = " + std::to_string(inv.e) + " is not divisible by 12");
    inv.chi = inv.e / 12;
    inv.lambda = orbifold_lambda(c);
    inv.delta = Rational(2 * c.base_genus - 2 + inv.chi) + inv.lambda;
    inv.kappa = inv.delta > 0 ? Kappa::One : inv.delta == 0 ? Kappa::Zero : Kappa::NegativeInfinity;
    return inv;
}

DDivisor d_divisor(const FiberConfiguration& c)
{
    validate(c);
    DDivisor out;
    out.lambda_part = orbifold_lambda(c);
    for (std::size_t b = 0; b < c.fibers.size(); ++b) {
        const auto& f = c.fibers[b];
        FiberModel model = fiber_model(f);
        out.z_total += model.z_scheme_length();
        if (f.is_multiple())
            continue;
        bool reduced = std::all_of(model.multiplicities.begin(), model.multiplicities.end(), [](int m) { return m == 1; });
        if (reduced)
            continue;
        QDivisor d0 = model.full_fiber() - model.reduced_fiber();
        ZariskiPair z = zariski_decompose(d0);
        if (!z.positive.is_zero() || !(z.negative == d0))
            throw InvariantViolation("D0 of fibre " + f.name() + " is not its own negative part");
        out.d0_models.push_back({b, std::move(model), std::move(d0)});
    }
    return out;
}

} // namespace ellpos
