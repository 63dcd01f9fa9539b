#pragma once

// Orbifold bookkeeping of multiple fibres and of Galois covers C -> C/G.

#include "ellpos/kodaira.hpp"
#include "ellpos/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ellpos {

enum class StabilizerKind { Translation, Involution, Order4, Order6 };

std::string to_string(StabilizerKind k);

struct BranchPoint {
    int stab_order = 2;
    StabilizerKind action = StabilizerKind::Involution;

    bool operator==(const BranchPoint&) const = default;
};

// Galois data of a diagonal action on C x E, listed by branch point of
// C -> B = C/G.
struct GroupActionData {
    int group_order = 1;
    int base_genus = 0;
    std::vector<BranchPoint> branch;

    bool operator==(const GroupActionData&) const = default;
};

void validate(const BranchPoint& p);  // throws Inconsistent

struct OrbifoldData {
    int base_genus = 0;
    std::vector<int> multiplicities;
    Rational lambda;
};

OrbifoldData orbifold_data(const FiberConfiguration& c);

struct BaseTwist {
    Rational lambda;
    // f^*Omega_B(D) pseudoeffective: its nef part (2g(B) - 2 + lambda) F is >= 0
    bool pseff = false;
};

BaseTwist lambda_and_base_twist(const FiberConfiguration& c);

enum class QTilde { Yes, Unknown };

std::string to_string(QTilde q);

// sufficient criterion only: g(B) >= 1, lambda >= 2, or chi <= 0
QTilde qtilde_criterion(const FiberConfiguration& c);

struct HurwitzResult {
    int curve_genus = 0;
    Rational deg_rt;  // ramification over translation branch points
};

// 2g(C) - 2 = d(2g(B) - 2) + sum d(1 - 1/m); throws Inconsistent
HurwitzResult hurwitz_genus(const GroupActionData& a);

struct InvolutionCount {
    int64_t count = 0;
    bool meets_lower_bound = false;  // count >= 2g(C) - 1
};

// #Z = 2g(C) - 2 + 2d - deg R_t
InvolutionCount involution_count(int curve_genus, int group_order, const Rational& deg_rt);
InvolutionCount involution_count(const GroupActionData& a);

} // namespace ellpos
