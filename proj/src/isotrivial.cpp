#include "ellpos/isotrivial.hpp"

#include "ellpos/errors.hpp"

namespace ellpos {

ActionClassification classify_action(const GroupActionData& a)
{
    ActionClassification out;
    for (const auto& p : a.branch) {
        validate(p);
        switch (p.action) {
        case StabilizerKind::Translation:
            out.fibers.push_back(FiberType::smooth(p.stab_order));
            break;
        case StabilizerKind::Involution:
            out.fibers.push_back(FiberType::i_star(0));
            break;
        case StabilizerKind::Order4:
            out.standard = false;
            out.notes.push_back("Z4 stabiliser (z -> iz): two singularities of type A_{1,4} and one of type A_{1,2}; "
                                "the resolved fibre is a non-minimal log resolution of type III");
            break;
        case StabilizerKind::Order6:
            out.standard = false;
            if (p.stab_order == 3)
                out.notes.push_back("Z3 stabiliser (z -> zeta z): the resolved fibre is a non-minimal log resolution "
                                    "of type IV");
            else
                out.notes.push_back("Z6 stabiliser (z -> -zeta z): the resolved fibre is a non-minimal log "
                                    "resolution of type II");
            break;
        }
    }
    return out;
}

ProductQuotient build_product_quotient(int g1)
{
    if (g1 < 1)
        throw InvalidGenus("product quotient needs g1 >= 1, got " + std::to_string(g1));
    ProductQuotient q;
    q.config.base_genus = 0;
    q.config.fibers.assign(2 * g1 + 2, FiberType::i_star(0));
    q.config.flags.isotrivial = true;
    q.config.flags.standard = true;
    q.action.group_order = 2;
    q.action.base_genus = 0;
    q.action.branch.assign(2 * g1 + 2, BranchPoint{2, StabilizerKind::Involution});
    return q;
}

} // namespace ellpos
