#include "ellpos/symdiff.hpp"

#include "ellpos/errors.hpp"
#include "ellpos/linalg.hpp"

#include <map>
#include <set>
#include <tuple>

namespace ellpos {

namespace {

using Poly = std::vector<Rational>;  // low degree first

void trim(Poly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

Poly poly_derivative(const Poly& p)
{
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i)
        d.push_back(p[i] * static_cast<long>(i));
    trim(d);
    return d;
}

Rational poly_eval(const Poly& p, const Rational& x)
{
    Rational r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        r = r * x + *it;
    return r;
}

Poly poly_rem(Poly a, const Poly& b)
{
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= f * b[i];
        trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// coefficients of h(r + s) in s
Poly taylor_shift(const Poly& h, const Rational& r)
{
    Poly out(h.size());
    Poly cur = h;
    for (std::size_t m = 0; m < h.size(); ++m) {
        out[m] = poly_eval(cur, r);
        cur = poly_derivative(cur);
        for (auto& c : cur)
            c /= static_cast<long>(m + 1);
    }
    return out;
}

// truncated power series in t = z1^2
using Series = std::vector<Rational>;

Series series_mul(const Series& a, const Series& b, std::size_t terms)
{
    Series r(terms);
    for (std::size_t i = 0; i < a.size() && i < terms; ++i)
        for (std::size_t j = 0; j < b.size() && i + j < terms; ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

// local expansions at a Weierstrass point with uniformiser z1 = y:
// x = r + phi(z1^2) and dx/y = 2 phi'(z1^2) dz1
struct RootExpansion {
    std::size_t terms = 0;
    Series x;
    Series dx_over_y;
    std::vector<Series> x_powers;
    std::vector<Series> dx_powers;

    RootExpansion(const Poly& h, const Rational& root, std::size_t terms_) : terms(terms_)
    {
        Poly shifted = taylor_shift(h, root);  // shifted[0] == 0
        const Rational h1 = shifted.size() > 1 ? shifted[1] : Rational(0);
        if (h1 == 0)
            throw InvariantViolation("Weierstrass root is not simple");
        // invert t = H(s) by fixed-point iteration; each round fixes one more
        // coefficient. One extra coefficient feeds the derivative.
        const std::size_t n = terms + 1;
        Series phi(n);
        for (std::size_t round = 0; round < n; ++round) {
            Series next(n);
            if (n > 1)
                next[1] = 1;
            Series power = phi;
            for (std::size_t m = 2; m < shifted.size(); ++m) {
                power = series_mul(power, phi, n);
                for (std::size_t k = 0; k < n; ++k)
                    next[k] -= shifted[m] * power[k];
            }
            for (auto& c : next)
                c /= h1;
            phi = std::move(next);
        }
        x.assign(phi.begin(), phi.begin() + static_cast<std::ptrdiff_t>(terms));
        if (!x.empty())
            x[0] += root;
        dx_over_y.assign(terms, 0);
        for (std::size_t k = 0; k < terms; ++k)
            dx_over_y[k] = 2 * phi[k + 1] * static_cast<long>(k + 1);
        x_powers.push_back(unit());
        dx_powers.push_back(unit());
    }

    Series unit() const
    {
        Series u(terms);
        if (terms > 0)
            u[0] = 1;
        return u;
    }

    const Series& x_pow(int a)
    {
        while (static_cast<int>(x_powers.size()) <= a)
            x_powers.push_back(series_mul(x_powers.back(), x, terms));
        return x_powers[a];
    }

    const Series& dx_pow(int l)
    {
        while (static_cast<int>(dx_powers.size()) <= l)
            dx_powers.push_back(series_mul(dx_powers.back(), dx_over_y, terms));
        return dx_powers[l];
    }
};

std::size_t series_terms_for(int i)
{
    // z1 degree 2m + b < i
    return i <= 0 ? 0 : static_cast<std::size_t>((i - 1) / 2 + 1);
}

LocalDifferential localize_with(RootExpansion& ex, const TwistedBasisElement& e, int k, int i)
{
    LocalDifferential w(i);
    if (ex.terms == 0)
        return w;
    Series f = series_mul(ex.x_pow(e.a), ex.dx_pow(e.l), ex.terms);
    for (std::size_t m = 0; m < f.size(); ++m) {
        const int c = 2 * static_cast<int>(m) + e.b;
        if (c + k >= i)
            break;
        w.add_term({c, k, e.l}, f[m]);
    }
    return w;
}

std::vector<int> section_orders(int j)
{
    return j == 0 ? std::vector<int>{0} : elliptic_orders(j);
}

} // namespace

HyperellipticModel::HyperellipticModel(int genus, std::vector<Rational> roots)
    : genus_(genus), roots_(std::move(roots))
{
    h_ = {Rational(1)};
    for (const auto& r : roots_)
        h_ = poly_mul(h_, {-r, Rational(1)});
    validate();
}

HyperellipticModel::HyperellipticModel(int genus, std::vector<Rational> coefficients, std::vector<Rational> roots)
    : genus_(genus), h_(std::move(coefficients)), roots_(std::move(roots))
{
    trim(h_);
    validate();
}

HyperellipticModel HyperellipticModel::standard(int genus)
{
    std::vector<Rational> roots;
    for (int r = 0; r < 2 * genus + 2; ++r)
        roots.emplace_back(r);
    return HyperellipticModel(genus, std::move(roots));
}

void HyperellipticModel::validate() const
{
    if (genus_ < 2)
        throw InvalidGenus("hyperelliptic model needs g >= 2, got " + std::to_string(genus_));
    const std::size_t deg = h_.empty() ? 0 : h_.size() - 1;
    if (deg != static_cast<std::size_t>(2 * genus_ + 2))
        throw PreconditionFailed("h must have degree 2g + 2 = " + std::to_string(2 * genus_ + 2));
    Poly g = poly_gcd(h_, poly_derivative(h_));
    if (g.size() > 1)
        throw PreconditionFailed("h is not squarefree");
    if (roots_.size() != deg)
        throw PreconditionFailed("all 2g + 2 Weierstrass roots must be marked");
    std::set<std::string> seen;
    for (const auto& r : roots_) {
        if (poly_eval(h_, r) != 0)
            throw PreconditionFailed("marked root " + r.get_str() + " is not a root of h");
        if (!seen.insert(r.get_str()).second)
            throw PreconditionFailed("marked roots must be distinct");
    }
}

std::vector<TwistedBasisElement> curve_basis(int g, int l, int j)
{
    if (g < 2 || l < 0 || j < 0)
        throw std::invalid_argument("curve_basis needs g >= 2, l >= 0, j >= 0");
    std::vector<TwistedBasisElement> out;
    const int bound = l * (g - 1) + j;
    for (int b = 0; b <= 1; ++b)
        for (int a = 0; a + b * (g + 1) <= bound; ++a)
            out.push_back({a, b, l, j});
    return out;
}

std::vector<int> elliptic_orders(int j)
{
    if (j < 1)
        throw PreconditionFailed("elliptic_orders needs j >= 1");
    std::vector<int> out;
    for (int k = 0; k <= j - 2; ++k)
        out.push_back(k);
    out.push_back(j);
    return out;
}

LocalDifferential localize(const HyperellipticModel& model, std::size_t root_index, const TwistedBasisElement& e,
                           int k, int i)
{
    if (root_index >= model.roots().size())
        throw std::out_of_range("root index out of range");
    RootExpansion ex(model.coefficients(), model.roots()[root_index], series_terms_for(i));
    return localize_with(ex, e, k, i);
}

int invariant_dim(const HyperellipticModel& model, int i, int j, int cap)
{
    if (i < 0 || j < 0)
        throw std::invalid_argument("invariant_dim needs i, j >= 0");
    if (i > cap)
        throw DeskScaleExceeded("i = " + std::to_string(i) + " exceeds the desk-scale cap " + std::to_string(cap));
    const int g = model.genus();

    struct Column {
        TwistedBasisElement e;
        int k;
    };
    std::vector<Column> columns;
    for (int l = 0; l <= i; ++l)
        for (const auto& e : curve_basis(g, l, j))
            for (int k : section_orders(j))
                if ((e.b + k + i) % 2 == 0)
                    columns.push_back({e, k});

    // one row per (root, chart, polar monomial)
    using RowKey = std::tuple<std::size_t, int, ChartMonomial>;
    std::map<RowKey, std::map<std::size_t, Rational>> rows;
    for (std::size_t r = 0; r < model.roots().size(); ++r) {
        RootExpansion ex(model.coefficients(), model.roots()[r], series_terms_for(i));
        for (std::size_t c = 0; c < columns.size(); ++c) {
            LocalDifferential w = localize_with(ex, columns[c].e, columns[c].k, i);
            for (Chart chart : {Chart::A, Chart::B})
                for (const auto& [mono, coeff] : chart_image(w, chart))
                    if (mono.p < 0)
                        rows[{r, chart == Chart::A ? 0 : 1, mono}][c] = coeff;
        }
    }
    Matrix m;
    for (const auto& [key, entries] : rows) {
        RationalVector row(columns.size());
        for (const auto& [c, v] : entries)
            row[c] = v;
        m.append_row(row);
    }
    const std::size_t rk = rows.empty() ? 0 : rank(m);
    return static_cast<int>(columns.size() - rk);
}

int sakai_check(int g, int i, int cap)
{
    if (i < 1)
        throw PreconditionFailed("sakai_check needs i >= 1");
    return invariant_dim(HyperellipticModel::standard(g), i, 0, cap);
}

bool guaranteed_vanishing(int g, int zcount, int i, int j)
{
    if (zcount < 2 * g - 1)
        throw PreconditionFailed("need at least 2g - 1 = " + std::to_string(2 * g - 1) + " involution points, got " +
                                 std::to_string(zcount));
    return i >= 2 * j && int64_t(i - 2 * j) * (2 * g - 1) > int64_t(i) * (2 * g - 2);
}

KummerTensorPower kummer_tensor_power(int i)
{
    if (i < 1)
        throw PreconditionFailed("kummer_tensor_power needs i >= 1");
    if (i % 2 == 0)
        return {i / 2, KummerResidual::Trivial};
    return {(i - 1) / 2, KummerResidual::F};
}

std::vector<int> kummer_graded_dims(const KummerTensorPower& tag, int max_degree)
{
    // I^e: even polynomials of degree >= 2e; I^e F: odd ones of degree >= 2e + 1
    const int parity = tag.residual == KummerResidual::F ? 1 : 0;
    const int start = 2 * tag.ideal_exponent + parity;
    std::vector<int> dims(static_cast<std::size_t>(std::max(0, max_degree + 1)), 0);
    for (int d = 0; d <= max_degree; ++d)
        if (d >= start && d % 2 == parity)
            dims[d] = d + 1;
    return dims;
}

} // namespace ellpos
