#ifndef SPHSPEC_SPACEFORMS_HPP
#define SPHSPEC_SPACEFORMS_HPP

#include <string>
#include <utility>
#include <vector>

#include "sphspec/lens.hpp"
#include "sphspec/molien.hpp"

namespace sphspec {

enum class FpfName { Q8, P12, Q16, P20 };

std::string to_string(FpfName n);
unsigned fpf_order(FpfName n);

/// A (4m-1)-dimensional spherical space form with non-cyclic fundamental
/// group: the quotient by (rho_h + conj(rho_h))(H), where rho_h mixes h
/// copies of one 2-dimensional irreducible block with m-h of the other.
/// Q8 and P12 have a single block type, so h is forced to 0 there.
struct FpfGroupSpec {
    FpfName name = FpfName::Q8;
    unsigned m = 1;
    unsigned h = 0;

    unsigned d() const { return 4 * m - 1; }
};

/// Full eigenvalue roster of (rho_h + conj(rho_h))(H), built by closing the
/// generator blocks under multiplication. Every defining relation of the
/// presentation is re-checked on the images (RelationCheckFailed) and the
/// fixed-point-free property is asserted.
GroupModel roster(const FpfGroupSpec& spec);

struct ErrataReport {
    FpfName name = FpfName::Q8;
    unsigned m = 1;
    // per h: the pole order of the relevant per-order partial sum
    // (F^(8) at xi_8 for Q16, F^(10) at xi_10 for P20; unused for Q8/P12)
    std::vector<std::pair<unsigned, unsigned>> pole_orders; // (h, order)
    bool all_distinct = false;
};

/// For every isometry class h = 0..floor(m/2): fingerprints are pairwise
/// distinct, and for Q16/P20 the pole order at the primitive root equals
/// 2(m-h).
ErrataReport verify_errata_lemma(FpfName name, unsigned m);

/// Exact check that the order-k partial Molien sum of the r-extended lens
/// space equals that of the original divided by Phi_k(z)^(2*q0*r/phi(k)),
/// q0 = phi(q)/2. Throws NonDivisor unless k | q.
bool fk_divisor_identity(const LensParams& l, unsigned r, unsigned k);

} // namespace sphspec

#endif
