#ifndef SPHSPEC_CYCLOTOMIC_HPP
#define SPHSPEC_CYCLOTOMIC_HPP

#include <vector>

#include "sphspec/intpoly.hpp"
#include "sphspec/rational.hpp"

namespace sphspec {

unsigned euler_phi(unsigned q);
unsigned gcd_u(unsigned a, unsigned b);
unsigned lcm_u(unsigned a, unsigned b);

/// The q-th cyclotomic polynomial, computed by exact division of x^q - 1 by
/// the product of Phi_e over proper divisors e of q. Results are cached.
const IntPoly& cyclotomic_poly(unsigned q);

/// Element of the cyclotomic field Q(xi_N), stored as a polynomial in xi_N
/// reduced mod Phi_N: coords has length phi(N), index = power of xi_N.
class CycloElem {
  public:
    CycloElem() : n_(1) {} // zero of Q(xi_1) = Q
    explicit CycloElem(unsigned conductor);
    CycloElem(unsigned conductor, BigRational rational_value);

    static CycloElem root(unsigned conductor, long exponent); // xi_N^e
    static CycloElem from_coords(unsigned conductor, std::vector<BigRational> coords);

    unsigned conductor() const { return n_; }
    const std::vector<BigRational>& coords() const { return c_; }

    bool is_zero() const;
    /// true iff the element lies in the rational subfield (all coords of
    /// positive degree vanish)
    bool is_rational() const;
    BigRational rational_value() const; // requires is_rational()

    CycloElem operator+(const CycloElem& o) const;
    CycloElem operator-(const CycloElem& o) const;
    CycloElem operator-() const;
    CycloElem operator*(const CycloElem& o) const;
    CycloElem& operator+=(const CycloElem& o) { return *this = *this + o; }
    CycloElem& operator*=(const CycloElem& o) { return *this = *this * o; }
    bool operator==(const CycloElem& o) const;

    CycloElem inv() const; // throws DivisionByZero on 0
    CycloElem conj() const; // complex conjugation xi -> xi^{-1}
    CycloElem galois(unsigned j) const; // xi -> xi^j, gcd(j,N)=1
    CycloElem pow(unsigned long e) const;

    /// Embed into Q(xi_M); requires conductor() | M. Maps xi_N -> xi_M^{M/N}.
    CycloElem embed(unsigned target_conductor) const;

    /// Field norm N_{Q(xi_N)/Q}: product over all Galois conjugates.
    BigRational norm() const;

    std::string to_string() const;

  private:
    unsigned n_;
    std::vector<BigRational> c_;
    void reduce_from(std::vector<BigRational>& raw) const;
};

/// Lift both operands into the lcm of their conductors.
void common_conductor(CycloElem& a, CycloElem& b);

/// Exact sign (-1, 0, +1) of an element fixed by complex conjugation.
/// Decided by floating evaluation at escalating precision against a rigorous
/// positive lower bound derived from the field norm.
int sign_of_real(const CycloElem& e);

/// Compares two real cyclotomic values exactly: -1, 0, +1.
int compare_real(const CycloElem& a, const CycloElem& b);

} // namespace sphspec

#endif
