#include "ellpos/rational.hpp"

#include <stdexcept>

namespace ellpos {

Rational ratio(long num, long den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

Rational parse_rational(std::string_view text)
{
    const auto first = text.find_first_not_of(" \t");
    const auto last = text.find_last_not_of(" \t");
    std::string s(first == std::string_view::npos ? std::string_view{} : text.substr(first, last - first + 1));
    auto is_digits = [](std::string_view v) {
        if (!v.empty() && (v.front() == '-' || v.front() == '+'))
            v.remove_prefix(1);
        if (v.empty())
            return false;
        for (char c : v)
            if (c < '0' || c > '9')
                return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("not a rational number: '" + s + "'");
    if (num.front() == '+')
        num.erase(0, 1);
    mpz_class n(num), d(den);
    if (d == 0)
        throw std::invalid_argument("zero denominator: '" + s + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

bool is_integer(const Rational& q)
{
    return q.get_den() == 1;
}

int64_t to_int64(const Rational& q)
{
    if (!is_integer(q) || !q.get_num().fits_slong_p())
        throw std::out_of_range("rational is not a machine integer: " + q.get_str());
    return q.get_num().get_si();
}

Rational floor(const Rational& q)
{
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(r);
}

Rational ceil(const Rational& q)
{
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(r);
}

} // namespace ellpos
