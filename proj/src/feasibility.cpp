#include "ellpos/feasibility.hpp"

#include "ellpos/errors.hpp"
#include "ellpos/lattice.hpp"

#include <algorithm>
#include <map>

namespace ellpos {

int z_ideal_order(LocalType t)
{
    return t == LocalType::TriplePoint ? 2 : 1;
}

Rational local_multiplicity(const ZNode& z, const RationalVector& coeffs)
{
    Rational m = 0;
    for (auto c : z.components)
        m += coeffs.at(c);
    if (z.type == LocalType::Cusp)
        m *= 2;
    return m;
}

std::string to_string(FeasibilityStatus s)
{
    return s == FeasibilityStatus::Feasible ? "feasible" : "infeasible";
}

VerticalSectionProblem VerticalSectionProblem::with_budget(std::vector<FiberType> fibers, int k, Rational a)
{
    if (k < 1)
        throw PreconditionFailed("k must be positive, got " + std::to_string(k));
    VerticalSectionProblem p;
    p.fibers = std::move(fibers);
    for (const auto& f : p.fibers)
        p.models.push_back(fiber_model(f));
    p.k = k;
    p.a = std::move(a);
    return p;
}

VerticalSectionProblem VerticalSectionProblem::from_config(const FiberConfiguration& c, int k)
{
    const NumericalInvariants inv = numerical_invariants(c);
    return with_budget(c.fibers, k, Rational(inv.chi));
}

VerticalSectionProblem VerticalSectionProblem::single_fiber(const FiberType& t, int k)
{
    return with_budget({t}, k, ratio(euler_number(t), 12));
}

namespace {

using Key = RationalVector;

struct KeyLess {
    bool operator()(const Key& x, const Key& y) const
    {
        for (std::size_t i = 0; i < x.size(); ++i) {
            int c = cmp(x[i], y[i]);
            if (c != 0)
                return c < 0;
        }
        return false;
    }
};

// parallel constraints collapse to the tightest; returns false on a
// violated constant constraint
bool normalize_into(std::map<Key, Rational, KeyLess>& out, LinearInequality ineq)
{
    auto lead = std::find_if(ineq.a.begin(), ineq.a.end(), [](const Rational& c) { return c != 0; });
    if (lead == ineq.a.end())
        return ineq.b <= 0;
    Rational scale = abs(*lead);
    for (auto& c : ineq.a)
        c /= scale;
    ineq.b /= scale;
    auto [it, inserted] = out.try_emplace(ineq.a, ineq.b);
    if (!inserted && ineq.b > it->second)
        it->second = ineq.b;
    return true;
}

} // namespace

std::optional<RationalVector> fourier_motzkin(const std::vector<LinearInequality>& system, std::size_t nvars)
{
    std::vector<std::vector<LinearInequality>> stages;
    {
        std::map<Key, Rational, KeyLess> m;
        for (const auto& s : system) {
            if (s.a.size() != nvars)
                throw std::invalid_argument("inequality has the wrong number of variables");
            if (!normalize_into(m, s))
                return std::nullopt;
        }
        std::vector<LinearInequality> v;
        for (auto& [a, b] : m)
            v.push_back({a, b});
        stages.push_back(std::move(v));
    }
    // stages[s] involves variables 0 .. nvars - 1 - s
    for (std::size_t s = 0; s < nvars; ++s) {
        const std::size_t var = nvars - 1 - s;
        const auto& cur = stages.back();
        std::map<Key, Rational, KeyLess> next;
        std::vector<const LinearInequality*> pos, neg;
        for (const auto& in : cur) {
            if (in.a[var] > 0)
                pos.push_back(&in);
            else if (in.a[var] < 0)
                neg.push_back(&in);
            else if (!normalize_into(next, in))
                return std::nullopt;
        }
        for (auto* p : pos) {
            for (auto* q : neg) {
                const Rational wp = -q->a[var];
                const Rational wq = p->a[var];
                LinearInequality c{RationalVector(nvars), wp * p->b + wq * q->b};
                for (std::size_t u = 0; u < nvars; ++u)
                    c.a[u] = wp * p->a[u] + wq * q->a[u];
                c.a[var] = 0;
                if (!normalize_into(next, std::move(c)))
                    return std::nullopt;
            }
        }
        std::vector<LinearInequality> v;
        for (auto& [a, b] : next)
            v.push_back({a, b});
        stages.push_back(std::move(v));
    }

    RationalVector x(nvars);
    for (std::size_t var = 0; var < nvars; ++var) {
        const auto& sys = stages[nvars - 1 - var];
        std::optional<Rational> lo, hi;
        for (const auto& in : sys) {
            if (in.a[var] == 0)
                continue;
            Rational rest = in.b;
            for (std::size_t u = 0; u < var; ++u)
                rest -= in.a[u] * x[u];
            Rational bound = rest / in.a[var];
            if (in.a[var] > 0)
                lo = lo ? std::max(*lo, bound) : bound;
            else
                hi = hi ? std::min(*hi, bound) : bound;
        }
        if (lo && hi && *lo > *hi)
            throw InvariantViolation("Fourier-Motzkin back-substitution found an empty interval");
        x[var] = lo ? *lo : hi ? *hi : Rational(0);
    }
    return x;
}

FeasibilityVerdict vertical_feasibility(const VerticalSectionProblem& p)
{
    const std::size_t nf = p.fibers.size();
    const Rational k = p.k;
    std::vector<LinearInequality> sys;

    for (std::size_t b = 0; b < nf; ++b) {
        const FiberModel& m = p.models[b];
        const bool d0_counts = !p.fibers[b].is_multiple();
        auto d0 = [&](std::size_t i) { return d0_counts ? Rational(m.multiplicities[i] - 1) : Rational(0); };
        // c_i = r m_i - k d_i >= 0
        for (std::size_t i = 0; i < m.multiplicities.size(); ++i) {
            LinearInequality in{RationalVector(nf), k * d0(i)};
            in.a[b] = m.multiplicities[i];
            sys.push_back(std::move(in));
        }
        // sum w_i c_i >= k ord
        for (const auto& z : m.znodes) {
            RationalVector mult(m.multiplicities.begin(), m.multiplicities.end());
            RationalVector d(mult.size());
            for (std::size_t i = 0; i < d.size(); ++i)
                d[i] = d0(i);
            LinearInequality in{RationalVector(nf), k * z_ideal_order(z.type) + k * local_multiplicity(z, d)};
            in.a[b] = local_multiplicity(z, mult);
            sys.push_back(std::move(in));
        }
    }
    // t = k a - sum r_b >= 0
    {
        LinearInequality in{RationalVector(nf, Rational(-1)), -k * p.a};
        sys.push_back(std::move(in));
    }

    FeasibilityVerdict v;
    v.k = p.k;
    auto r = fourier_motzkin(sys, nf);
    if (!r) {
        v.status = FeasibilityStatus::Infeasible;
        return v;
    }
    FeasibilityWitness w;
    w.general_fibers = k * p.a;
    for (std::size_t b = 0; b < nf; ++b) {
        const FiberModel& m = p.models[b];
        RationalVector c(m.multiplicities.size());
        for (std::size_t i = 0; i < c.size(); ++i) {
            Rational d = p.fibers[b].is_multiple() ? Rational(0) : Rational(m.multiplicities[i] - 1);
            c[i] = (*r)[b] * m.multiplicities[i] - k * d;
        }
        w.component_coeffs.push_back(std::move(c));
        w.general_fibers -= (*r)[b];
    }
    if (!check_witness(p, w))
        throw InvariantViolation("feasibility witness fails its own re-check");
    v.status = FeasibilityStatus::Feasible;
    v.witness = std::move(w);
    return v;
}

bool check_witness(const VerticalSectionProblem& p, const FeasibilityWitness& w)
{
    if (w.component_coeffs.size() != p.fibers.size() || w.general_fibers < 0)
        return false;
    const Rational k = p.k;
    Rational degree = w.general_fibers;
    for (std::size_t b = 0; b < p.fibers.size(); ++b) {
        const FiberModel& m = p.models[b];
        const RationalVector& c = w.component_coeffs[b];
        if (c.size() != m.multiplicities.size())
            return false;
        if (std::any_of(c.begin(), c.end(), [](const Rational& x) { return x < 0; }))
            return false;
        // G_b - T_b = c_b + k D0_b must be numerically trivial on the fibre,
        // hence a multiple r_b of the full fibre
        QDivisor diff(m.components, c);
        if (!p.fibers[b].is_multiple())
            diff = diff + (m.full_fiber() - m.reduced_fiber()) * k;
        for (const auto& x : intersection_vector(diff))
            if (x != 0)
                return false;
        auto r = nef_part_fiber_multiple(diff, m.full_fiber());
        if (!r) {
            // negative multiples of the fibre still balance degrees
            auto neg = nef_part_fiber_multiple(diff * Rational(-1), m.full_fiber());
            if (!neg)
                return false;
            r = -*neg;
        }
        degree += *r;
        for (const auto& z : m.znodes)
            if (local_multiplicity(z, c) < k * z_ideal_order(z.type))
                return false;
    }
    return degree == k * p.a;
}

std::vector<FiberCaseRow> fiber_case_table(int kmax)
{
    std::vector<FiberCaseRow> rows;
    const FiberType kinds[] = {FiberType::of(FiberKind::II), FiberType::of(FiberKind::III),
                               FiberType::of(FiberKind::IV), FiberType::i_star(0)};
    for (const auto& t : kinds)
        for (int k = 1; k <= kmax; ++k)
            rows.push_back({t, k, vertical_feasibility(VerticalSectionProblem::single_fiber(t, k))});
    return rows;
}

} // namespace ellpos
