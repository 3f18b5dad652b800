#pragma once

#include <functional>

#include "chered/polyrep.hpp"
#include "chered/report.hpp"

namespace chered {

// An operator identity together with a stable id. Both sides are evaluated
// on every basis monomial U^a T^b with |a| <= degree_bound and texp in the
// subring; the first disagreement is recorded as a counterexample.
struct RelationCheck {
    std::string id;
    std::function<PolyRepElement(const PolyRepElement&)> lhs;
    std::function<PolyRepElement(const PolyRepElement&)> rhs;
};

// Basis monomials of the representation: all U^a with |a| <= degree_bound
// crossed with all subring T-monomials.
std::vector<PolyRepElement> basis_monomials(const Context& ctx, unsigned degree_bound);

// The defining relations of the cylindrical presentation (u/t/swap/sigma/tau).
std::vector<RelationCheck> presentation_relations(const Context& ctx);
// The standard-presentation relations via the x/y word expansions:
// [x,x] = [y,y] = 0, the t_i-conjugation rules, and the two commutation
// relations.
std::vector<RelationCheck> standard_relations(const Context& ctx);
// Group-algebra sanity relations for the Weyl-group part (swap involution,
// braid, swap/t exchange).
std::vector<RelationCheck> group_relations(const Context& ctx);

// Runs one relation on all basis monomials.
CheckResult run_relation(const RelationCheck& rc, const std::vector<PolyRepElement>& basis);

// Runs the full relation suite (presentation + standard + group) at the
// given degree bound, evaluating relation checks in parallel when `threads`
// allows. The report order is independent of scheduling.
Report verify_relations(const Context& ctx, unsigned degree_bound, unsigned threads = 0);

} // namespace chered
