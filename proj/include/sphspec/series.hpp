#ifndef SPHSPEC_SERIES_HPP
#define SPHSPEC_SERIES_HPP

#include <vector>

#include "sphspec/rational.hpp"

namespace sphspec {

/// Truncated power series over Q. Arithmetic on two series truncates to the
/// minimum of the two orders.
class TruncSeries {
  public:
    TruncSeries() = default;
    TruncSeries(unsigned trunc_order, std::vector<BigRational> coeffs);
    static TruncSeries constant(unsigned trunc_order, BigRational v);

    unsigned trunc_order() const { return k_; }
    const std::vector<BigRational>& coeffs() const { return c_; }
    BigRational coeff(unsigned i) const { return i < c_.size() ? c_[i] : BigRational(0); }

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;
    bool operator==(const TruncSeries& o) const { return k_ == o.k_ && c_ == o.c_; }

    /// Multiplicative inverse up to the truncation order.
    /// Throws ZeroConstantTerm if the constant term vanishes.
    TruncSeries inverse() const;

  private:
    unsigned k_ = 0;
    std::vector<BigRational> c_{BigRational(0)};
};

} // namespace sphspec

#endif
