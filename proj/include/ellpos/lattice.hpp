#pragma once

// Intersection theory on a finite configuration of curves on a surface,
// and Zariski decomposition of effective divisors supported on it.
//
// "Nef" below always means nef against the listed curves. For vertical
// divisors (supported on fibre components) this agrees with nefness on the
// surface, since any curve outside the configuration meets an effective
// vertical divisor non-negatively.

#include "ellpos/linalg.hpp"
#include "ellpos/rational.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ellpos {

class CurveConfig {
public:
    CurveConfig() = default;
    CurveConfig(std::vector<std::string> labels, Matrix gram);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const Matrix& gram() const { return gram_; }
    const Rational& intersection(std::size_t a, std::size_t b) const { return gram_(a, b); }

    bool operator==(const CurveConfig&) const = default;

private:
    std::vector<std::string> labels_;
    Matrix gram_;
};

using CurveConfigPtr = std::shared_ptr<const CurveConfig>;

CurveConfigPtr make_config(std::vector<std::string> labels, Matrix gram);

class QDivisor {
public:
    QDivisor(CurveConfigPtr config, RationalVector coeffs);
    static QDivisor zero(CurveConfigPtr config);

    const CurveConfigPtr& config() const { return config_; }
    const RationalVector& coeffs() const { return coeffs_; }
    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }

    bool is_effective() const;
    bool is_zero() const;
    std::vector<std::size_t> support() const;

    QDivisor operator+(const QDivisor& o) const;
    QDivisor operator-(const QDivisor& o) const;
    QDivisor operator*(const Rational& s) const;

    // same configuration (by value) and same coefficients
    bool operator==(const QDivisor& o) const;

private:
    CurveConfigPtr config_;
    RationalVector coeffs_;
};

struct ZariskiPair {
    QDivisor positive;
    QDivisor negative;
};

enum class DefinitenessKind { NegativeDefinite, NegativeSemidefinite, Other };

struct Definiteness {
    DefinitenessKind kind;
    // basis of the kernel of the Gram submatrix, in subset coordinates;
    // filled for NegativeSemidefinite only
    std::vector<RationalVector> kernel;
};

Rational intersection_number(const QDivisor& d1, const QDivisor& d2);

// D.C_i for every listed curve C_i
RationalVector intersection_vector(const QDivisor& d);

Definiteness definiteness(const CurveConfig& config, const std::vector<std::size_t>& subset);
Definiteness definiteness(const Matrix& symmetric);

// Fujita-style iteration: start from the curves D meets negatively, solve
// for N on the current support, enlarge the support by every curve the
// candidate P meets negatively, repeat. Throws NotNegativeDefinite or
// NegativeCoefficient when the input is outside the algorithm's validity
// (a non-effective D also raises NegativeCoefficient).
ZariskiPair zariski_decompose(const QDivisor& d);

// t >= 0 with P = t * fiber on the listed curves; nullopt if P is not a
// non-negative multiple of the fibre
std::optional<Rational> nef_part_fiber_multiple(const QDivisor& p, const QDivisor& fiber);

} // namespace ellpos
