#ifndef SPHSPEC_INTPOLY_HPP
#define SPHSPEC_INTPOLY_HPP

#include <string>
#include <vector>

#include "sphspec/rational.hpp"

namespace sphspec {

/// Dense univariate polynomial over the integers, coefficient index = degree.
/// Invariant: the highest-degree coefficient is nonzero unless the polynomial
/// is zero (empty coefficient vector).
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntPoly constant(BigInt v);
    static IntPoly monomial(size_t degree, BigInt v = 1);

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return c_; }
    BigInt coeff(size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }

    BigInt eval(const BigInt& x) const;
    BigRational eval(const BigRational& x) const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    /// Exact division; throws InternalInconsistency if the division leaves a
    /// remainder or the divisor is not monic up to sign.
    IntPoly div_exact(const IntPoly& divisor) const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<BigInt> c_;
};

} // namespace sphspec

#endif
