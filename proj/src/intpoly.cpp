#include "sphspec/intpoly.hpp"

#include <sstream>

#include "sphspec/errors.hpp"

namespace sphspec {

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(BigInt v) {
    IntPoly p;
    if (v != 0) p.c_ = {std::move(v)};
    return p;
}

IntPoly IntPoly::monomial(size_t degree, BigInt v) {
    IntPoly p;
    if (v != 0) {
        p.c_.assign(degree + 1, BigInt(0));
        p.c_[degree] = std::move(v);
    }
    return p;
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

BigRational IntPoly::eval(const BigRational& x) const {
    BigRational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + BigRational(*it);
    return acc;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<BigInt> r(c_.size() + o.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::div_exact(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero();
    if (is_zero()) return IntPoly();
    const BigInt& lead = divisor.c_.back();
    if (lead != 1 && lead != -1)
        throw InternalInconsistency("div_exact requires a divisor with leading coefficient +-1");
    if (degree() < divisor.degree())
        throw InternalInconsistency("div_exact: degree underflow");
    std::vector<BigInt> rem = c_;
    std::vector<BigInt> quot(static_cast<size_t>(degree() - divisor.degree()) + 1, BigInt(0));
    for (long k = degree() - divisor.degree(); k >= 0; --k) {
        BigInt q = rem[k + divisor.degree()] * lead; // lead is +-1
        if (q == 0) continue;
        quot[k] = q;
        for (size_t j = 0; j < divisor.c_.size(); ++j) rem[k + j] -= q * divisor.c_[j];
    }
    for (const auto& v : rem)
        if (v != 0) throw InternalInconsistency("div_exact: nonzero remainder");
    return IntPoly(std::move(quot));
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
        const BigInt& a = c_[k];
        if (a == 0) continue;
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        BigInt mag = abs(a);
        if (k == 0 || mag != 1) os << mag.str();
        if (k > 0) {
            if (mag != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

} // namespace sphspec
