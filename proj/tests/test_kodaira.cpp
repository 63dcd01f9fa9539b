#include "ellpos/errors.hpp"
#include "ellpos/kodaira.hpp"
#include "test_support.hpp"

using namespace ellpos;

namespace {

struct CatalogCase {
    FiberType type;
    oracle::FiberOracle ref;
    int discriminant;  // det of -Gram after removing one multiplicity-one component
};

std::vector<CatalogCase> catalog()
{
    return {
        {FiberType::i(1), {"I1", 1, {2}, {1}, 1}, 1},
        {FiberType::i(2), {"I2", 2, {2, 2}, {1, 1}, 2}, 2},
        {FiberType::i(3), {"I3", 3, {2, 2, 2}, {1, 1, 1}, 3}, 3},
        {FiberType::i(5), {"I5", 5, {2, 2, 2, 2, 2}, {1, 1, 1, 1, 1}, 5}, 5},
        {FiberType::i_star(0), {"I0*", 5, {2, 2, 2, 2}, {1, 1, 1, 1, 2}, 6}, 4},
        {FiberType::i_star(1), {"I1*", 6, {2, 2, 2, 2, 2}, {1, 1, 1, 1, 2, 2}, 7}, 4},
        {FiberType::i_star(3), {"I3*", 8, {2, 2, 2, 2, 2, 2, 2}, {1, 1, 1, 1, 2, 2, 2, 2}, 9}, 4},
        {FiberType::of(FiberKind::II), {"II", 1, {1}, {1}, 2}, 1},
        {FiberType::of(FiberKind::III), {"III", 2, {2}, {1, 1}, 3}, 2},
        {FiberType::of(FiberKind::IV), {"IV", 3, {3}, {1, 1, 1}, 4}, 3},
        {FiberType::of(FiberKind::IVStar), {"IV*", 7, {2, 2, 2, 2, 2, 2}, {1, 1, 1, 2, 2, 2, 3}, 8}, 3},
        {FiberType::of(FiberKind::IIIStar), {"III*", 8, {2, 2, 2, 2, 2, 2, 2}, {1, 1, 2, 2, 2, 3, 3, 4}, 9}, 2},
        {FiberType::of(FiberKind::IIStar), {"II*", 9, {2, 2, 2, 2, 2, 2, 2, 2}, {1, 2, 2, 3, 3, 4, 4, 5, 6}, 10}, 1},
    };
}

oracle::Mat gram_of(const FiberModel& m)
{
    const auto& g = m.components->gram();
    oracle::Mat out(g.rows(), oracle::Vec(g.cols()));
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t c = 0; c < g.cols(); ++c)
            out[r][c] = g(r, c);
    return out;
}

FiberConfiguration config(int g, std::vector<FiberType> fibers)
{
    FiberConfiguration c;
    c.base_genus = g;
    c.fibers = std::move(fibers);
    return c;
}

} // namespace

TEST_CASE("catalog lattices satisfy Zariski's lemma")
{
    for (const auto& c : catalog()) {
        CAPTURE(c.ref.name);
        CHECK(c.type.name() == c.ref.name);
        FiberModel m = fiber_model(c.type);
        REQUIRE(m.components->size() == static_cast<std::size_t>(c.ref.components));
        auto mult = m.multiplicities;
        std::sort(mult.begin(), mult.end());
        CHECK(mult == c.ref.multiplicities);

        oracle::Mat g = gram_of(m);
        CHECK(oracle::rank(g) == g.size() - 1);
        oracle::Vec f(m.multiplicities.begin(), m.multiplicities.end());
        for (std::size_t i = 0; i < g.size(); ++i)
            CHECK(oracle::meet(g, f, i) == 0);

        auto d = definiteness(*m.components, [&] {
            std::vector<std::size_t> all(g.size());
            for (std::size_t i = 0; i < all.size(); ++i)
                all[i] = i;
            return all;
        }());
        REQUIRE(d.kind == DefinitenessKind::NegativeSemidefinite);
        REQUIRE(d.kernel.size() == 1);
        CHECK(d.kernel[0] == RationalVector(m.multiplicities.begin(), m.multiplicities.end()));

        // deleting a reduced component leaves the finite root lattice
        std::size_t drop = std::find(m.multiplicities.begin(), m.multiplicities.end(), 1) - m.multiplicities.begin();
        std::vector<std::size_t> rest;
        for (std::size_t i = 0; i < g.size(); ++i)
            if (i != drop)
                rest.push_back(i);
        oracle::Mat sub = oracle::principal(g, rest);
        CHECK(oracle::negative_definite(sub));
        for (auto& row : sub)
            for (auto& x : row)
                x = -x;
        CHECK(oracle::det(sub) == c.discriminant);

        CHECK(euler_number(c.type) == c.ref.euler);
        CHECK(oracle::euler_by_inclusion_exclusion(c.ref) == c.ref.euler);
        CHECK(m.znodes.size() == c.ref.branches.size());
        CHECK(m.z_scheme_length() == static_cast<int>(c.ref.branches.size()));
        CHECK(m.full_fiber().coeffs() == f);
    }
}

TEST_CASE("euler number matches inclusion-exclusion over the fibre model")
{
    for (const auto& c : catalog()) {
        FiberModel m = fiber_model(c.type);
        int e = 2 * static_cast<int>(m.components->size());
        for (const auto& z : m.znodes) {
            switch (z.type) {
            case LocalType::Node:
            case LocalType::Tangency: e -= 1; break;
            case LocalType::TriplePoint: e -= 2; break;
            case LocalType::Cusp: break;
            }
        }
        CHECK(euler_number(c.type) == e);
    }
}

TEST_CASE("fibre models from the catalogue")
{
    FiberModel s = fiber_model(FiberType::smooth(2));
    CHECK(s.components->size() == 1);
    CHECK(s.znodes.empty());
    CHECK(s.component_genus == std::vector<int>{1});
    CHECK(euler_number(FiberType::smooth(2)) == 0);
    CHECK(euler_number(FiberType::smooth()) == 0);
    CHECK(FiberType::smooth(2).name() == "2I0");

    FiberModel i3 = fiber_model(FiberType::i(3));
    CHECK(i3.znodes.size() == 3);
    for (const auto& z : i3.znodes)
        CHECK(z.type == LocalType::Node);

    FiberModel i1 = fiber_model(FiberType::i(1));
    REQUIRE(i1.znodes.size() == 1);
    CHECK(i1.znodes[0].components == std::vector<std::size_t>{0, 0});

    CHECK(fiber_model(FiberType::of(FiberKind::II)).znodes.at(0).type == LocalType::Cusp);
    CHECK(fiber_model(FiberType::of(FiberKind::III)).znodes.at(0).type == LocalType::Tangency);
    CHECK(fiber_model(FiberType::of(FiberKind::IV)).znodes.at(0).type == LocalType::TriplePoint);
    CHECK(fiber_model(FiberType::of(FiberKind::IV)).znodes.at(0).components.size() == 3);
}

TEST_CASE("invalid fibre types")
{
    CHECK_THROWS_AS(validate(FiberType{FiberKind::I, 2, 3}), InvalidFiber);
    CHECK_THROWS_AS(validate(FiberType{FiberKind::I, -1, 1}), InvalidFiber);
    CHECK_THROWS_AS(validate(FiberType{FiberKind::I, 0, 0}), InvalidFiber);
    CHECK_THROWS_AS(validate(FiberType{FiberKind::II, 2, 1}), InvalidFiber);
    CHECK_NOTHROW(validate(FiberType::smooth(5)));
}

TEST_CASE("numerical invariants")
{
    auto kummer = numerical_invariants(config(0, std::vector<FiberType>(4, FiberType::i_star(0))));
    CHECK(kummer.e == 24);
    CHECK(kummer.chi == 2);
    CHECK(kummer.lambda == 0);
    CHECK(kummer.delta == 0);
    CHECK(kummer.kappa == Kappa::Zero);

    auto six = numerical_invariants(config(0, std::vector<FiberType>(6, FiberType::i_star(0))));
    CHECK(six.e == 36);
    CHECK(six.chi == 3);
    CHECK(six.delta == 1);
    CHECK(six.kappa == Kappa::One);

    CHECK_THROWS_AS(numerical_invariants(config(0, {FiberType::i(1)})), NonIntegralEuler);

    auto rational = numerical_invariants(config(0, std::vector<FiberType>(12, FiberType::i(1))));
    CHECK(rational.kappa == Kappa::NegativeInfinity);
    CHECK(rational.delta == -1);

    auto c = config(0, std::vector<FiberType>(12, FiberType::i(1)));
    c.fibers.push_back(FiberType::smooth(2));
    c.fibers.push_back(FiberType::smooth(3));
    auto inv = numerical_invariants(c);
    CHECK(inv.lambda == ratio(7, 6));
    CHECK(inv.delta == ratio(1, 6));
    CHECK(inv.kappa == Kappa::One);
    CHECK(to_string(Kappa::NegativeInfinity) == "-inf");
}

TEST_CASE("numerical invariants are additive and kappa follows delta")
{
    std::mt19937 rng(5);
    const std::vector<FiberType> pool = {FiberType::i(1), FiberType::i(2), FiberType::i_star(0), FiberType::i_star(2),
                                         FiberType::of(FiberKind::II), FiberType::of(FiberKind::IV),
                                         FiberType::of(FiberKind::IIStar), FiberType::smooth(2), FiberType::smooth(3)};
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    int tested = 0;
    for (int trial = 0; trial < 400; ++trial) {
        std::vector<FiberType> a, b;
        for (int k = 0; k < 6; ++k)
            (k % 2 ? a : b).push_back(pool[pick(rng)]);
        int64_t ea = 0, eb = 0;
        for (const auto& f : a)
            ea += euler_number(f);
        for (const auto& f : b)
            eb += euler_number(f);
        auto all = a;
        all.insert(all.end(), b.begin(), b.end());
        if ((ea + eb) % 12 != 0) {
            CHECK_THROWS_AS(numerical_invariants(config(1, all)), NonIntegralEuler);
            continue;
        }
        auto inv = numerical_invariants(config(trial % 3, all));
        CHECK(inv.e == ea + eb);
        CHECK(inv.e == 12 * inv.chi);
        Rational lam = 0;
        for (const auto& f : all)
            lam += 1 - ratio(1, f.multiplicity);
        CHECK(inv.lambda == lam);
        CHECK(inv.delta == Rational(2 * (trial % 3) - 2 + inv.chi) + lam);
        CHECK(inv.kappa == (inv.delta > 0 ? Kappa::One : inv.delta == 0 ? Kappa::Zero : Kappa::NegativeInfinity));
        ++tested;
    }
    CHECK(tested > 10);
}

TEST_CASE("the divisor D")
{
    auto d = d_divisor(config(1, {FiberType::smooth(2)}));
    CHECK(d.lambda_part == ratio(1, 2));
    CHECK(d.d0_models.empty());
    CHECK(d.z_total == 0);

    d = d_divisor(config(0, {FiberType::i_star(0)}));
    CHECK(d.lambda_part == 0);
    REQUIRE(d.d0_models.size() == 1);
    const auto& e = d.d0_models[0];
    for (std::size_t i = 0; i < e.model.multiplicities.size(); ++i)
        CHECK(e.d0[i] == e.model.multiplicities[i] - 1);
    CHECK(d.z_total == 4);
    auto z = zariski_decompose(e.d0);
    CHECK(z.positive.is_zero());
    CHECK(z.negative == e.d0);

    d = d_divisor(config(0, {FiberType::of(FiberKind::II)}));
    CHECK(d.d0_models.empty());
    CHECK(d.z_total == 1);

    d = d_divisor(config(0, {FiberType::of(FiberKind::IIStar), FiberType::of(FiberKind::IIIStar),
                             FiberType::of(FiberKind::IVStar), FiberType::i_star(4)}));
    CHECK(d.d0_models.size() == 4);
}
