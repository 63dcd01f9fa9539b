#include "ellpos/local_differential.hpp"

#include "ellpos/errors.hpp"

#include <algorithm>
#include <sstream>

namespace ellpos {

namespace {

Rational binomial(int n, int k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

Rational inverse_power_of_two(int k)
{
    mpz_class d = 1;
    d <<= k;
    return Rational(mpz_class(1), d);
}

} // namespace

LocalDifferential LocalDifferential::monomial(int degree, LocalMonomial m, Rational c)
{
    LocalDifferential w(degree);
    w.add_term(m, c);
    return w;
}

void LocalDifferential::add_term(LocalMonomial m, const Rational& c)
{
    if (m.alpha < 0 || m.beta < 0 || m.l < 0 || m.l > degree_)
        throw std::invalid_argument("monomial out of range for a degree-" + std::to_string(degree_) + " differential");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

LocalDifferential LocalDifferential::operator+(const LocalDifferential& o) const
{
    if (o.degree_ != degree_)
        throw std::invalid_argument("adding differentials of different symmetric degree");
    LocalDifferential r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, c);
    return r;
}

LocalDifferential LocalDifferential::operator-(const LocalDifferential& o) const
{
    return *this + o * Rational(-1);
}

LocalDifferential LocalDifferential::operator*(const Rational& s) const
{
    LocalDifferential r(degree_);
    for (const auto& [m, c] : terms_)
        r.add_term(m, c * s);
    return r;
}

LocalDifferential LocalDifferential::operator*(const LocalDifferential& o) const
{
    LocalDifferential r(degree_ + o.degree_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_)
            r.add_term({m1.alpha + m2.alpha, m1.beta + m2.beta, m1.l + m2.l}, c1 * c2);
    return r;
}

LocalDifferential LocalDifferential::pow(int t) const
{
    LocalDifferential r = monomial(0, {0, 0, 0});
    for (int k = 0; k < t; ++k)
        r = r * *this;
    return r;
}

bool LocalDifferential::is_invariant() const
{
    for (const auto& [m, c] : terms_)
        if ((m.alpha + m.beta + degree_) % 2 != 0)
            return false;
    return true;
}

std::set<int> LocalDifferential::gradings() const
{
    std::set<int> g;
    for (const auto& [m, c] : terms_)
        g.insert(m.alpha + m.beta);
    return g;
}

LocalDifferential LocalDifferential::graded_part(int n) const
{
    LocalDifferential r(degree_);
    for (const auto& [m, c] : terms_)
        if (m.alpha + m.beta == n)
            r.add_term(m, c);
    return r;
}

std::string LocalDifferential::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c.get_str() << ")";
        if (m.alpha)
            os << " z1^" << m.alpha;
        if (m.beta)
            os << " z2^" << m.beta;
        if (m.l)
            os << " dz1^" << m.l;
        if (degree_ - m.l)
            os << " dz2^" << degree_ - m.l;
    }
    return os.str();
}

LocalDifferential m_form()
{
    LocalDifferential m(1);
    m.add_term({1, 0, 0}, 1);
    m.add_term({0, 1, 1}, -1);
    return m;
}

ChartImage chart_image(const LocalDifferential& w, Chart chart)
{
    const int i = w.degree();
    ChartImage out;
    auto add = [&out](ChartMonomial k, const Rational& c) {
        auto [it, inserted] = out.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                out.erase(it);
        }
    };
    for (const auto& [m, c] : w.terms()) {
        if ((m.alpha + m.beta + i) % 2 != 0)
            throw NotInvariant("term " + LocalDifferential::monomial(i, m, c).to_string() + " is anti-invariant");
        // chart A: z2 = z1 q, dz2 = q dz1 + z1 dq, expand the dz2 factor;
        // chart B is the same with the roles of z1, z2 swapped
        const int expanded = chart == Chart::A ? i - m.l : m.l;
        const int q_base = chart == Chart::A ? m.beta : m.alpha;
        for (int s = 0; s <= expanded; ++s) {
            // z^(alpha+beta+s) dz^(i-s) = 2^-(i-s) p^((alpha+beta+2s-i)/2) dp^(i-s)
            ChartMonomial k{(m.alpha + m.beta + 2 * s - i) / 2, q_base + expanded - s, i - s, s};
            add(k, c * binomial(expanded, s) * inverse_power_of_two(i - s));
        }
    }
    return out;
}

bool blowup_holomorphy(const LocalDifferential& w)
{
    for (Chart chart : {Chart::A, Chart::B})
        for (const auto& [k, c] : chart_image(w, chart))
            if (k.p < 0)
                return false;
    return true;
}

namespace {

// lex order on (alpha, beta, l): the leading term of M is z1 dz2
std::optional<LocalDifferential> divide_by_m(const LocalDifferential& w)
{
    if (w.degree() < 1)
        return w.is_zero() ? std::optional<LocalDifferential>(LocalDifferential(0)) : std::nullopt;
    const LocalDifferential m = m_form();
    LocalDifferential rest = w;
    LocalDifferential quotient(w.degree() - 1);
    while (!rest.is_zero()) {
        auto lead = std::prev(rest.terms().end());
        const LocalMonomial lm = lead->first;
        const Rational lc = lead->second;
        const int dz2 = w.degree() - lm.l;
        if (lm.alpha < 1 || dz2 < 1)
            return std::nullopt;
        LocalDifferential q = LocalDifferential::monomial(w.degree() - 1, {lm.alpha - 1, lm.beta, lm.l}, lc);
        quotient = quotient + q;
        rest = rest - q * m;
    }
    return quotient;
}

} // namespace

std::optional<LocalDifferential> m_divide(const LocalDifferential& w, int t)
{
    if (t < 0)
        throw std::invalid_argument("m_divide needs t >= 0");
    std::optional<LocalDifferential> cur = w;
    for (int k = 0; k < t && cur; ++k)
        cur = divide_by_m(*cur);
    return cur;
}

ObstructionProfile obstruction_profile(int i, int j)
{
    if (i < 0 || j < 0)
        throw std::invalid_argument("obstruction_profile needs i, j >= 0");
    int n = std::max(0, i - 2 * j);
    if ((n - i) % 2 != 0)
        ++n;
    return {n, i % 2};
}

} // namespace ellpos
