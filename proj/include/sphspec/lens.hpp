#ifndef SPHSPEC_LENS_HPP
#define SPHSPEC_LENS_HPP

#include <string>
#include <vector>

namespace sphspec {

/// Parameters of a lens orbifold L_d(q; s_1,...,s_n), n = floor((d+1)/2).
/// Residues are stored as representatives in {0,...,floor(q/2)}, sorted.
/// Invariant: gcd(q, s_1,...,s_n) = 1, so the generated group has order q.
struct LensParams {
    unsigned d = 1;
    unsigned q = 1;
    std::vector<unsigned> s;
    bool space_form = false; // all s_j coprime to q and d odd

    unsigned n() const { return (d + 1) / 2; }
    bool operator==(const LensParams& o) const { return d == o.d && q == o.q && s == o.s; }
    bool operator<(const LensParams& o) const;
};

/// A LensParams whose parameter multiset is the lexicographically least image
/// under the full normalization group of isometry moves (units mod q,
/// permutations, sign flips). Equal canonical forms <=> isometric quotients.
struct CanonicalLens {
    LensParams params;
    bool operator==(const CanonicalLens& o) const { return params == o.params; }
    bool operator<(const CanonicalLens& o) const { return params < o.params; }
};

/// Folds r into {0,...,floor(q/2)} identifying r with -r mod q.
unsigned residue_rep(long r, unsigned q);

/// Validates (d, q, s): |s| = floor((d+1)/2), gcd(q, s...) = 1.
/// Throws GcdViolation or LengthMismatch.
LensParams validate_lens(unsigned d, unsigned q, const std::vector<long>& s);

CanonicalLens canonicalize(const LensParams& l);

bool is_isometric(const LensParams& a, const LensParams& b);

/// Exponents (n_1,...,n_{q0}) over the base 1 = s_1 < s_2 < ... < s_{q0} < q/2
/// of an isometric representative with n_1 maximal. Space forms only, q >= 3.
std::vector<unsigned> normal_form_exponents(const LensParams& l);

/// Units of q below q/2 (the base list s_1,...,s_{q0}).
std::vector<unsigned> unit_base(unsigned q);

/// Appends r copies of the full unit list to the parameters of a lens space,
/// producing a (2n + r*phi(q) - 1)-dimensional lens space. Requires r >= 1.
LensParams extend_lens(const LensParams& l, unsigned r);

std::string to_string(const LensParams& l);

} // namespace sphspec

#endif
