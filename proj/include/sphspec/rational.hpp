#ifndef SPHSPEC_RATIONAL_HPP
#define SPHSPEC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace sphspec {

// Arbitrary-precision scalars. cpp_rational keeps gcd(num,den)=1 and den>0
// as internal invariants, which is exactly the BigRational contract.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt num(const BigRational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const BigRational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const BigRational& r) { return den(r) == 1; }

} // namespace sphspec

#endif
