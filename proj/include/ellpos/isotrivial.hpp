#pragma once

// Diagonal quotients (C x E)/G: which singular fibres the stabilisers
// produce and whether the relatively minimal model is the standard one.

#include "ellpos/kodaira.hpp"
#include "ellpos/orbifold.hpp"

#include <string>
#include <vector>

namespace ellpos {

struct ActionClassification {
    // one fibre per standard branch point; non-standard points contribute
    // notes only, their relatively minimal fibres are not modelled
    std::vector<FiberType> fibers;
    bool standard = true;
    std::vector<std::string> notes;
};

// translation of order m -> mI0, involution -> I0*, Z4 / Z6 -> non-standard;
// checks each branch point, not global Hurwitz consistency
ActionClassification classify_action(const GroupActionData& a);

struct ProductQuotient {
    FiberConfiguration config;
    GroupActionData action;
};

// (C x E)/<i_C x (-1)> with g(C) = g1 over P^1: 2g1 + 2 fibres of type I0*
ProductQuotient build_product_quotient(int g1);

} // namespace ellpos
