#pragma once

// Symmetric differentials near a fixed point of (z1, z2) -> (-z1, -z2) and
// their behaviour on the minimal resolution of the A1 quotient.
//
// A LocalDifferential of degree i is a finite sum of terms
//     c * z1^alpha z2^beta dz1^l dz2^(i-l).
// Its graded part n collects the terms with alpha + beta = n. The
// resolution is covered by two charts:
//     chart A: p = z1^2,  q = z2/z1
//     chart B: p = z2^2,  q = z1/z2
// On invariant differentials every exponent of p is an integer.

#include "ellpos/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>

namespace ellpos {

struct LocalMonomial {
    int alpha = 0;  // z1 exponent
    int beta = 0;   // z2 exponent
    int l = 0;      // dz1 exponent; dz2 carries degree - l

    auto operator<=>(const LocalMonomial&) const = default;
};

class LocalDifferential {
public:
    explicit LocalDifferential(int degree = 0) : degree_(degree) {}

    static LocalDifferential monomial(int degree, LocalMonomial m, Rational c = 1);

    int degree() const { return degree_; }
    const std::map<LocalMonomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(LocalMonomial m, const Rational& c);

    LocalDifferential operator+(const LocalDifferential& o) const;
    LocalDifferential operator-(const LocalDifferential& o) const;
    LocalDifferential operator*(const Rational& s) const;
    LocalDifferential operator*(const LocalDifferential& o) const;  // symmetric product
    LocalDifferential pow(int t) const;

    // alpha + beta + degree even on every term
    bool is_invariant() const;
    std::set<int> gradings() const;
    LocalDifferential graded_part(int n) const;

    bool operator==(const LocalDifferential&) const = default;

    std::string to_string() const;

private:
    int degree_;
    std::map<LocalMonomial, Rational> terms_;
};

// z1 dz2 - z2 dz1
LocalDifferential m_form();

enum class Chart { A, B };

struct ChartMonomial {
    int p = 0;   // may be negative: a pole along the exceptional curve
    int q = 0;
    int dp = 0;
    int dq = 0;

    auto operator<=>(const ChartMonomial&) const = default;
};

using ChartImage = std::map<ChartMonomial, Rational>;

// collected pull-back to the given chart; throws NotInvariant
ChartImage chart_image(const LocalDifferential& w, Chart chart);

// true iff the pull-back is holomorphic on both charts
bool blowup_holomorphy(const LocalDifferential& w);

// exact quotient by M^t, nullopt if M^t does not divide w
std::optional<LocalDifferential> m_divide(const LocalDifferential& w, int t);

struct ObstructionProfile {
    int n_min = 0;
    int parity = 0;
};

// smallest admissible vanishing order of a graded part: n >= i - 2j, n = i mod 2
ObstructionProfile obstruction_profile(int i, int j);

} // namespace ellpos
