#ifndef SPHSPEC_RATFUNC_HPP
#define SPHSPEC_RATFUNC_HPP

#include <map>
#include <vector>

#include "sphspec/cyclotomic.hpp"

namespace sphspec {

/// Dense polynomial with cyclotomic coefficients, all at one conductor.
struct CycloPoly {
    unsigned conductor = 1;
    std::vector<CycloElem> c; // ascending degree, trailing coeff nonzero

    static CycloPoly constant(unsigned conductor, CycloElem v);
    /// z - xi_L^e
    static CycloPoly linear_root(unsigned conductor, unsigned e);

    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }
    void trim();

    CycloPoly operator+(const CycloPoly& o) const;
    CycloPoly operator*(const CycloPoly& o) const;
    bool operator==(const CycloPoly& o) const;

    CycloElem eval(const CycloElem& x) const;
    /// Synthetic division by (z - alpha); requires eval(alpha) == 0.
    CycloPoly divide_root(const CycloElem& alpha) const;
    CycloPoly embed(unsigned target_conductor) const;
};

/// Rational function in canonical form: numerator polynomial over a monic
/// product of linear factors prod (z - xi_L^e)^mult. Canonical invariant:
/// the numerator does not vanish at any denominator root, so syntactic
/// equality coincides with functional equality.
struct CycloRatFunc {
    unsigned conductor = 1;
    CycloPoly num;
    std::map<unsigned, unsigned> den; // root exponent e of xi_L -> multiplicity

    /// Cancels common numerator/denominator roots; called by builders.
    void canonicalize();
    bool operator==(const CycloRatFunc& o) const;

    /// Multiplicity of (z - xi_M^j) in the denominator after cancellation.
    unsigned pole_order_at(unsigned j, unsigned m) const;

    /// Leading Laurent coefficient at z = xi_M^j, i.e. the limit of
    /// (z - xi_M^j)^p * f(z) with p the pole order (p = 0 gives the value).
    CycloElem laurent_leading_at(unsigned j, unsigned m) const;

    /// Multiplies by prod over primitive k-th roots (z - zeta)^-mult, i.e.
    /// divides by Phi_k(z)^mult (as extra denominator factors).
    CycloRatFunc divided_by_cyclotomic_power(unsigned k, unsigned mult) const;

    CycloRatFunc embed(unsigned target_conductor) const;
};

/// Builds sum_i scale_i / prod_e (z - xi_L^e)^{mult_{i,e}} in canonical form.
struct RatFuncTerm {
    BigRational scale = 1;
    std::map<unsigned, unsigned> den;
};
CycloRatFunc sum_of_reciprocals(unsigned conductor, const std::vector<RatFuncTerm>& terms);

} // namespace sphspec

#endif
