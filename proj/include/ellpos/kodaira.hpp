#pragma once

// Kodaira's singular fibres: component lattices, Euler numbers, and the
// numerical invariants of a relatively minimal elliptic fibration computed
// from its list of singular fibres.

#include "ellpos/lattice.hpp"
#include "ellpos/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ellpos {

enum class FiberKind { I, IStar, II, III, IV, IIStar, IIIStar, IVStar };

// I with n = 0 is a smooth elliptic fibre; multiplicity > 1 is only
// accepted for it (mI0). mI_n with n >= 1 is rejected.
struct FiberType {
    FiberKind kind = FiberKind::I;
    int n = 0;
    int multiplicity = 1;

    static FiberType smooth(int m = 1) { return {FiberKind::I, 0, m}; }
    static FiberType i(int n) { return {FiberKind::I, n, 1}; }
    static FiberType i_star(int n) { return {FiberKind::IStar, n, 1}; }
    static FiberType of(FiberKind k) { return {k, 0, 1}; }

    bool is_multiple() const { return multiplicity > 1; }
    // "I0*", "I3", "2I0", "II*", ...
    std::string name() const;

    bool operator==(const FiberType&) const = default;
};

void validate(const FiberType& t);  // throws InvalidFiber

enum class LocalType { Node, Cusp, Tangency, TriplePoint };

std::string to_string(LocalType t);

// a singular point of the reduced fibre; a self-node of an irreducible
// curve lists its component twice
struct ZNode {
    std::vector<std::size_t> components;
    LocalType type = LocalType::Node;
    int length = 1;
};

struct FiberModel {
    CurveConfigPtr components;
    std::vector<int> multiplicities;   // coefficients of f*b
    std::vector<int> component_genus;  // geometric genus of each component
    std::vector<ZNode> znodes;

    int z_scheme_length() const;
    QDivisor full_fiber() const;       // f*b
    QDivisor reduced_fiber() const;    // (f*b)_red
};

FiberModel fiber_model(const FiberType& t);
int64_t euler_number(const FiberType& t);

struct ConfigFlags {
    bool isotrivial = false;
    std::optional<bool> cm;
    std::optional<bool> standard;
    bool zeta_pseff = false;
    bool zeta_nef_codim_one = false;

    bool operator==(const ConfigFlags&) const = default;
};

struct FiberConfiguration {
    int base_genus = 0;
    std::vector<FiberType> fibers;
    ConfigFlags flags;

    bool operator==(const FiberConfiguration&) const = default;
};

void validate(const FiberConfiguration& c);

enum class Kappa { NegativeInfinity, Zero, One };

std::string to_string(Kappa k);

struct NumericalInvariants {
    int64_t e = 0;
    int64_t chi = 0;
    Rational lambda;
    Rational delta;
    Kappa kappa = Kappa::Zero;
};

// e = sum of fibre Euler numbers, chi = e/12 (throws NonIntegralEuler),
// lambda = sum (1 - 1/m_i), delta = 2g(B) - 2 + chi + lambda, kappa by sign
NumericalInvariants numerical_invariants(const FiberConfiguration& c);

Rational orbifold_lambda(const FiberConfiguration& c);

struct D0Entry {
    std::size_t fiber_index;
    FiberModel model;
    QDivisor d0;  // f*b - (f*b)_red on the fibre's components
};

struct DDivisor {
    Rational lambda_part;  // D's nef part is lambda_part * F
    std::vector<D0Entry> d0_models;
    int z_total = 0;
};

DDivisor d_divisor(const FiberConfiguration& c);

} // namespace ellpos
