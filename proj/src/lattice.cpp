#include "ellpos/lattice.hpp"

#include "ellpos/errors.hpp"

#include <algorithm>
#include <set>

namespace ellpos {

CurveConfig::CurveConfig(std::vector<std::string> labels, Matrix gram)
    : labels_(std::move(labels)), gram_(std::move(gram))
{
    const std::size_t r = labels_.size();
    if (gram_.rows() != r || gram_.cols() != r)
        throw PreconditionFailed("gram matrix must be " + std::to_string(r) + "x" + std::to_string(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            if (gram_(i, j) != gram_(j, i))
                throw PreconditionFailed("gram matrix is not symmetric at (" + std::to_string(i) + "," +
                                         std::to_string(j) + ")");
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != r)
        throw PreconditionFailed("curve labels must be distinct");
}

CurveConfigPtr make_config(std::vector<std::string> labels, Matrix gram)
{
    return std::make_shared<const CurveConfig>(std::move(labels), std::move(gram));
}

QDivisor::QDivisor(CurveConfigPtr config, RationalVector coeffs)
    : config_(std::move(config)), coeffs_(std::move(coeffs))
{
    if (!config_)
        throw PreconditionFailed("divisor without a curve configuration");
    if (coeffs_.size() != config_->size())
        throw MismatchedConfig("divisor has " + std::to_string(coeffs_.size()) + " coefficients, configuration has " +
                                    std::to_string(config_->size()) + " curves");
    for (auto& c : coeffs_)
        c.canonicalize();
}

QDivisor QDivisor::zero(CurveConfigPtr config)
{
    const std::size_t r = config->size();
    return QDivisor(std::move(config), RationalVector(r));
}

bool QDivisor::is_effective() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c >= 0; });
}

bool QDivisor::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

std::vector<std::size_t> QDivisor::support() const
{
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            s.push_back(i);
    return s;
}

static void require_same_config(const QDivisor& a, const QDivisor& b)
{
    if (a.config() != b.config() && !(*a.config() == *b.config()))
        throw MismatchedConfig("divisors live on different curve configurations");
}

QDivisor QDivisor::operator+(const QDivisor& o) const
{
    require_same_config(*this, o);
    RationalVector c = coeffs_;
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] += o.coeffs_[i];
    return QDivisor(config_, std::move(c));
}

QDivisor QDivisor::operator-(const QDivisor& o) const
{
    return *this + o * Rational(-1);
}

QDivisor QDivisor::operator*(const Rational& s) const
{
    RationalVector c = coeffs_;
    for (auto& x : c)
        x *= s;
    return QDivisor(config_, std::move(c));
}

bool QDivisor::operator==(const QDivisor& o) const
{
    return (config_ == o.config_ || *config_ == *o.config_) && coeffs_ == o.coeffs_;
}

Rational intersection_number(const QDivisor& d1, const QDivisor& d2)
{
    require_same_config(d1, d2);
    return dot(d1.coeffs(), d1.config()->gram() * d2.coeffs());
}

RationalVector intersection_vector(const QDivisor& d)
{
    return d.config()->gram() * d.coeffs();
}

Definiteness definiteness(const Matrix& g)
{
    // symmetric elimination on -G; PSD iff every pivot is >= 0 and a zero
    // diagonal entry only ever sits on a zero row
    const std::size_t n = g.rows();
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = -g(i, j);

    std::vector<bool> done(n, false);
    std::size_t positive_pivots = 0;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i])
                continue;
            if (a(i, i) < 0)
                return {DefinitenessKind::Other, {}};
            if (a(i, i) > 0 && p == n)
                p = i;
        }
        if (p == n) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (!done[i] && !done[j] && a(i, j) != 0)
                        return {DefinitenessKind::Other, {}};
            break;
        }
        done[p] = true;
        ++positive_pivots;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || a(i, p) == 0)
                continue;
            Rational f = a(i, p) / a(p, p);
            for (std::size_t j = 0; j < n; ++j)
                if (!done[j])
                    a(i, j) -= f * a(p, j);
        }
    }
    if (positive_pivots == n)
        return {DefinitenessKind::NegativeDefinite, {}};
    return {DefinitenessKind::NegativeSemidefinite, nullspace(g)};
}

Definiteness definiteness(const CurveConfig& config, const std::vector<std::size_t>& subset)
{
    for (auto i : subset)
        if (i >= config.size())
            throw PreconditionFailed("curve index " + std::to_string(i) + " out of range");
    return definiteness(config.gram().submatrix(subset, subset));
}

ZariskiPair zariski_decompose(const QDivisor& d)
{
    if (!d.is_effective())
        throw NegativeCoefficient("input divisor is not effective");
    const auto& config = *d.config();
    const std::size_t r = config.size();
    const RationalVector dc = intersection_vector(d);

    std::vector<bool> in_support(r, false);
    for (std::size_t i = 0; i < r; ++i)
        in_support[i] = dc[i] < 0;

    for (std::size_t iter = 0; iter <= r; ++iter) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < r; ++i)
            if (in_support[i])
                s.push_back(i);

        RationalVector n(r);
        if (!s.empty()) {
            Matrix gs = config.gram().submatrix(s, s);
            if (definiteness(gs).kind != DefinitenessKind::NegativeDefinite)
                throw NotNegativeDefinite("candidate negative support is not negative definite");
            RationalVector rhs(s.size());
            for (std::size_t k = 0; k < s.size(); ++k)
                rhs[k] = dc[s[k]];
            auto x = solve(gs, rhs);
            if (!x)
                throw InvariantViolation("negative definite system reported singular");
            for (std::size_t k = 0; k < s.size(); ++k) {
                if ((*x)[k] < 0)
                    throw NegativeCoefficient("solved negative part has a negative coefficient on " +
                                              config.labels()[s[k]]);
                n[s[k]] = (*x)[k];
            }
        }
        QDivisor neg(d.config(), std::move(n));
        QDivisor pos = d - neg;
        const RationalVector pc = intersection_vector(pos);
        bool grew = false;
        for (std::size_t i = 0; i < r; ++i) {
            if (pc[i] < 0) {
                if (in_support[i])
                    throw InvariantViolation("positive part meets its own support negatively");
                in_support[i] = true;
                grew = true;
            }
        }
        if (!grew)
            return {std::move(pos), std::move(neg)};
    }
    throw InvariantViolation("support failed to stabilise");
}

std::optional<Rational> nef_part_fiber_multiple(const QDivisor& p, const QDivisor& fiber)
{
    require_same_config(p, fiber);
    if (fiber.is_zero())
        return p.is_zero() ? std::optional<Rational>(0) : std::nullopt;
    std::optional<Rational> t;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (fiber[i] == 0) {
            if (p[i] != 0)
                return std::nullopt;
            continue;
        }
        Rational ratio = p[i] / fiber[i];
        if (t && *t != ratio)
            return std::nullopt;
        t = ratio;
    }
    if (*t < 0)
        return std::nullopt;
    // proportional coefficients give proportional intersections; check anyway
    const RationalVector pc = intersection_vector(p);
    const RationalVector fc = intersection_vector(fiber);
    for (std::size_t i = 0; i < pc.size(); ++i)
        if (pc[i] != *t * fc[i])
            return std::nullopt;
    return t;
}

} // namespace ellpos
