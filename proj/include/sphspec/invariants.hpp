#ifndef SPHSPEC_INVARIANTS_HPP
#define SPHSPEC_INVARIANTS_HPP

#include <set>

#include "sphspec/molien.hpp"
#include "sphspec/ratfunc.hpp"

namespace sphspec {

/// Set of element orders present in the roster.
std::set<unsigned> orders_of(const GroupModel& g);

/// Per-order partial Molien sum F^(k)(z) = sum over elements of order k of
/// 1/det(Id - z*gamma), in canonical rational-function form.
/// Throws OrderAbsent when no element has order k.
CycloRatFunc f_k(const GroupModel& g, unsigned k);

/// Max over elements of order k of the multiplicity of xi_k (exponent-1
/// primitive root) as an eigenvalue. Throws OrderAbsent.
unsigned max_mult(const GroupModel& g, unsigned k);

/// Order profile: the order set with every F^(k) attached.
struct OrderProfile {
    std::set<unsigned> orders;
    std::map<unsigned, CycloRatFunc> per_order;
};
OrderProfile order_profile(const GroupModel& g);

/// phi(q)=6 proof gadget for q in {7,9,14,18}: the polynomial P(z) of the
/// singular part of F^(q), its value at 1, and |P(xi_q)|^2, all exact.
/// Exponents must be in normal form (n1 >= max(n2,n3)).
struct Phi6Data {
    CycloPoly p;           // P(z) itself, for the "P == 3" branch test
    CycloElem p_at_one;    // P(1), real
    CycloElem abs2_at_xi;  // P(xi_q) * conj(P(xi_q)), real
};
Phi6Data phi6_gadget(unsigned q, unsigned n1, unsigned n2, unsigned n3);

} // namespace sphspec

#endif
