#include "sphspec/series.hpp"

#include "sphspec/errors.hpp"

namespace sphspec {

TruncSeries::TruncSeries(unsigned trunc_order, std::vector<BigRational> coeffs)
    : k_(trunc_order), c_(std::move(coeffs)) {
    c_.resize(k_ + 1, BigRational(0));
}

TruncSeries TruncSeries::constant(unsigned trunc_order, BigRational v) {
    return TruncSeries(trunc_order, {std::move(v)});
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    unsigned k = std::min(k_, o.k_);
    std::vector<BigRational> r(k + 1);
    for (unsigned i = 0; i <= k; ++i) r[i] = c_[i] + o.c_[i];
    return TruncSeries(k, std::move(r));
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    unsigned k = std::min(k_, o.k_);
    std::vector<BigRational> r(k + 1);
    for (unsigned i = 0; i <= k; ++i) r[i] = c_[i] - o.c_[i];
    return TruncSeries(k, std::move(r));
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    unsigned k = std::min(k_, o.k_);
    std::vector<BigRational> r(k + 1, BigRational(0));
    for (unsigned i = 0; i <= k; ++i) {
        if (c_[i] == 0) continue;
        for (unsigned j = 0; i + j <= k; ++j) {
            if (o.c_[j] == 0) continue;
            r[i + j] += c_[i] * o.c_[j];
        }
    }
    return TruncSeries(k, std::move(r));
}

TruncSeries TruncSeries::inverse() const {
    if (c_[0] == 0) throw ZeroConstantTerm();
    std::vector<BigRational> r(k_ + 1, BigRational(0));
    r[0] = 1 / c_[0];
    for (unsigned t = 1; t <= k_; ++t) {
        BigRational acc(0);
        for (unsigned j = 1; j <= t; ++j) acc += c_[j] * r[t - j];
        r[t] = -acc / c_[0];
    }
    return TruncSeries(k_, std::move(r));
}

} // namespace sphspec
