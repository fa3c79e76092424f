#ifndef SPHSPEC_MOLIEN_HPP
#define SPHSPEC_MOLIEN_HPP

#include <map>
#include <string>
#include <vector>

#include "sphspec/intpoly.hpp"
#include "sphspec/lens.hpp"
#include "sphspec/rational.hpp"

namespace sphspec {

/// One group element, given purely by spectral data: eigenvalues are roots of
/// unity xi_M^e with multiplicities, M the group conductor.
struct GroupElement {
    unsigned order = 1;
    std::map<unsigned, unsigned> eig; // exponent mod M -> multiplicity
};

/// A finite subgroup of O(d+1) as a roster of eigenvalue multisets.
/// Invariants: every multiset has total multiplicity d+1 and is closed under
/// conjugation (e and M-e have equal multiplicity); element 0 is the identity.
struct GroupModel {
    unsigned conductor = 1; // all eigenvalue exponents are mod this M
    unsigned ambient = 2;   // d+1
    std::vector<GroupElement> elems;

    unsigned d() const { return ambient - 1; }
    unsigned order() const { return static_cast<unsigned>(elems.size()); }
    void check() const; // throws InternalInconsistency on invariant violation
};

/// The cyclic group of L_d(q;s): element k has eigenvalues xi_q^{+-k s_j},
/// plus the fixed eigenvalue 1 when d is even.
GroupModel group_from_lens(const LensParams& l);

/// Exact spectral fingerprint: truncated dimension vector dim H_0..dim H_K
/// together with the integer numerator polynomial of
/// N * F(z) * (1-z^N)^(d+1) / (1-z^2).
struct SpectrumFingerprint {
    unsigned d = 0;
    unsigned group_order = 1;
    unsigned trunc = 0;            // K
    std::vector<BigInt> coeffs;    // length K+1
    std::vector<BigInt> numerator; // ascending degree

    bool operator==(const SpectrumFingerprint& o) const {
        return d == o.d && group_order == o.group_order && trunc == o.trunc &&
               coeffs == o.coeffs && numerator == o.numerator;
    }
    IntPoly numerator_poly() const { return IntPoly(numerator); }
};

/// Sufficient truncation order for fingerprint comparison: K = N(d+1)+2.
unsigned default_trunc(unsigned group_order, unsigned d);

/// Computes the fingerprint along two independent routes (truncated series
/// expansion and exact numerator assembly) and cross-checks them; throws
/// InternalInconsistency on disagreement. trunc = 0 means the default order.
SpectrumFingerprint fingerprint(const GroupModel& g, unsigned trunc = 0);

/// Independent brute-force dimension count for lens orbifolds: lattice-point
/// enumeration of invariant monomials, no cyclotomic arithmetic involved.
std::vector<BigInt> oracle_dims(const LensParams& l, unsigned k_max);

/// Exact isospectrality decision; requires both truncations to be at least
/// the default bound for their parameters (throws IncompatibleTruncation).
bool is_isospectral(const SpectrumFingerprint& a, const SpectrumFingerprint& b);

/// Round trip check: recover (d, |Gamma|) from the rational
/// function itself (pole order and Laurent coefficient at z=1).
std::pair<unsigned, unsigned> recover_dimension_and_order(const SpectrumFingerprint& f);

/// Pole order of F(z) at z = xi_M^j, computed by exact root-multiplicity
/// cancellation against the (1-z^N)^(d+1) denominator.
unsigned pole_order_at(const SpectrumFingerprint& f, unsigned j, unsigned m);

std::string serialize(const SpectrumFingerprint& f);
SpectrumFingerprint deserialize_fingerprint(const std::string& line);

} // namespace sphspec

#endif
