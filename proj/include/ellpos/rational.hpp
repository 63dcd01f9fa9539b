#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ellpos {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// num/den in lowest terms; den != 0
Rational ratio(long num, long den);

// canonical "p/q" form; integers print without denominator
std::string to_string(const Rational& q);

// accepts "p", "p/q", "-p/q" with surrounding blanks; throws std::invalid_argument
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);
int64_t to_int64(const Rational& q);  // requires is_integer
Rational floor(const Rational& q);
Rational ceil(const Rational& q);

} // namespace ellpos
