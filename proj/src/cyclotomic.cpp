#include "sphspec/cyclotomic.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "sphspec/errors.hpp"

namespace sphspec {

unsigned gcd_u(unsigned a, unsigned b) { return std::gcd(a, b); }
unsigned lcm_u(unsigned a, unsigned b) { return a / std::gcd(a, b) * b; }

unsigned euler_phi(unsigned q) {
    unsigned result = q;
    for (unsigned p = 2; p * p <= q; ++p) {
        if (q % p == 0) {
            while (q % p == 0) q /= p;
            result -= result / p;
        }
    }
    if (q > 1) result -= result / q;
    return result;
}

namespace {

std::mutex g_cache_mutex;

std::vector<unsigned> divisors(unsigned q) {
    std::vector<unsigned> d;
    for (unsigned e = 1; e <= q; ++e)
        if (q % e == 0) d.push_back(e);
    return d;
}

IntPoly compute_cyclotomic(unsigned q, const std::map<unsigned, IntPoly>& cache) {
    // x^q - 1 divided by the product of Phi_e over proper divisors e of q
    std::vector<BigInt> xq(q + 1, BigInt(0));
    xq[0] = -1;
    xq[q] = 1;
    IntPoly numer{std::move(xq)};
    IntPoly denom = IntPoly::constant(1);
    for (unsigned e : divisors(q))
        if (e != q) denom = denom * cache.at(e);
    return numer.div_exact(denom);
}

// Per-conductor tables of x^k mod Phi_N, integer coefficients. Covers
// k = 0..max(N, 2*phi-1)-1 so products of two reduced elements (raw degree
// up to 2*phi-2) fold without further reduction.
struct ConductorTables {
    unsigned phi;
    std::vector<std::vector<BigInt>> pow; // each vector length phi
};

const ConductorTables& tables(unsigned n) {
    static std::map<unsigned, ConductorTables> cache;
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    const IntPoly& phi_n = cyclotomic_poly(n);
    ConductorTables t;
    t.phi = euler_phi(n);
    const unsigned rows = std::max(n, 2 * t.phi - 1);
    t.pow.resize(rows);
    for (unsigned k = 0; k < rows; ++k) {
        std::vector<BigInt> row(t.phi, BigInt(0));
        if (k < t.phi) {
            row[k] = 1;
        } else {
            // x * pow[k-1], then fold the overflow at degree phi back
            const auto& prev = t.pow[k - 1];
            for (unsigned j = 0; j + 1 < t.phi; ++j) row[j + 1] = prev[j];
            const BigInt& top = prev[t.phi - 1];
            if (top != 0)
                for (unsigned j = 0; j < t.phi; ++j) row[j] -= top * phi_n.coeff(j);
        }
        t.pow[k] = std::move(row);
    }
    return cache.emplace(n, std::move(t)).first->second;
}

// Minimal rational-coefficient polynomial helpers for the extended gcd used
// by CycloElem::inv.
using RatPoly = std::vector<BigRational>;

void rp_trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly rp_sub(const RatPoly& a, const RatPoly& b) {
    RatPoly r(std::max(a.size(), b.size()), BigRational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    rp_trim(r);
    return r;
}

RatPoly rp_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly r(a.size() + b.size() - 1, BigRational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    rp_trim(r);
    return r;
}

// quotient of a by b (b nonzero); remainder left in a
RatPoly rp_divmod(RatPoly& a, const RatPoly& b) {
    RatPoly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, BigRational(0));
    const BigRational& lead = b.back();
    while (a.size() >= b.size()) {
        BigRational f = a.back() / lead;
        size_t shift = a.size() - b.size();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        rp_trim(a); // leading term cancels, so a strictly shrinks
    }
    return q;
}

} // namespace

const IntPoly& cyclotomic_poly(unsigned q) {
    static std::map<unsigned, IntPoly> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(q);
    if (it != cache.end()) return it->second;
    for (unsigned e : divisors(q))
        if (cache.find(e) == cache.end()) cache.emplace(e, compute_cyclotomic(e, cache));
    return cache.at(q);
}

CycloElem::CycloElem(unsigned conductor) : n_(conductor), c_(euler_phi(conductor), BigRational(0)) {}

CycloElem::CycloElem(unsigned conductor, BigRational v) : CycloElem(conductor) {
    c_[0] = std::move(v);
}

CycloElem CycloElem::root(unsigned conductor, long exponent) {
    long m = exponent % static_cast<long>(conductor);
    if (m < 0) m += conductor;
    const auto& t = tables(conductor);
    CycloElem e(conductor);
    const auto& row = t.pow[static_cast<unsigned>(m)];
    for (unsigned j = 0; j < t.phi; ++j) e.c_[j] = BigRational(row[j]);
    return e;
}

CycloElem CycloElem::from_coords(unsigned conductor, std::vector<BigRational> coords) {
    if (coords.size() != euler_phi(conductor))
        throw InternalInconsistency("CycloElem coords length != phi(N)");
    CycloElem e(conductor);
    e.c_ = std::move(coords);
    return e;
}

bool CycloElem::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

bool CycloElem::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

BigRational CycloElem::rational_value() const {
    if (!is_rational()) throw InternalInconsistency("CycloElem is not rational: " + to_string());
    return c_[0];
}

CycloElem CycloElem::operator+(const CycloElem& o) const {
    CycloElem a = *this, b = o;
    common_conductor(a, b);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

CycloElem CycloElem::operator-(const CycloElem& o) const { return *this + (-o); }

CycloElem CycloElem::operator-() const {
    CycloElem r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

CycloElem CycloElem::operator*(const CycloElem& o) const {
    CycloElem a = *this, b = o;
    common_conductor(a, b);
    const auto& t = tables(a.n_);
    unsigned phi = t.phi;
    std::vector<BigRational> raw(2 * phi - 1, BigRational(0));
    for (unsigned i = 0; i < phi; ++i) {
        if (a.c_[i] == 0) continue;
        for (unsigned j = 0; j < phi; ++j) {
            if (b.c_[j] == 0) continue;
            raw[i + j] += a.c_[i] * b.c_[j];
        }
    }
    CycloElem r(a.n_);
    for (unsigned j = 0; j < phi; ++j) r.c_[j] = raw[j];
    for (unsigned k = phi; k < 2 * phi - 1; ++k) {
        if (raw[k] == 0) continue;
        const auto& row = t.pow[k];
        for (unsigned j = 0; j < phi; ++j)
            if (row[j] != 0) r.c_[j] += raw[k] * BigRational(row[j]);
    }
    return r;
}

bool CycloElem::operator==(const CycloElem& o) const {
    CycloElem a = *this, b = o;
    common_conductor(a, b);
    return a.c_ == b.c_;
}

CycloElem CycloElem::inv() const {
    if (is_zero()) throw DivisionByZero();
    // extended gcd of the representing polynomial with Phi_N over Q
    RatPoly a(c_.begin(), c_.end());
    rp_trim(a);
    const IntPoly& phi_n = cyclotomic_poly(n_);
    RatPoly b;
    for (long k = 0; k <= phi_n.degree(); ++k) b.push_back(BigRational(phi_n.coeff(k)));
    // invariants: u*orig + (...)*Phi = r  for each remainder r in the chain
    RatPoly r0 = b, r1 = a;
    RatPoly u0 = {}, u1 = {BigRational(1)};
    while (!r1.empty()) {
        RatPoly rem = r0;
        RatPoly q = rp_divmod(rem, r1);
        RatPoly u2 = rp_sub(u0, rp_mul(q, u1));
        r0 = std::move(r1);
        u0 = std::move(u1);
        r1 = std::move(rem);
        u1 = std::move(u2);
    }
    if (r0.size() != 1)
        throw InternalInconsistency("cyclo inv: gcd with Phi_N not constant");
    BigRational g = r0[0];
    CycloElem result(n_);
    for (size_t k = 0; k < u0.size(); ++k) {
        if (k >= result.c_.size())
            throw InternalInconsistency("cyclo inv: cofactor degree too large");
        result.c_[k] = u0[k] / g;
    }
    return result;
}

CycloElem CycloElem::galois(unsigned j) const {
    j %= n_;
    if (gcd_u(j, n_) != 1)
        throw InternalInconsistency("galois exponent not coprime to conductor");
    const auto& t = tables(n_);
    CycloElem r(n_);
    for (unsigned i = 0; i < t.phi; ++i) {
        if (c_[i] == 0) continue;
        const auto& row = t.pow[(static_cast<unsigned long>(i) * j) % n_];
        for (unsigned k = 0; k < t.phi; ++k)
            if (row[k] != 0) r.c_[k] += c_[i] * BigRational(row[k]);
    }
    return r;
}

CycloElem CycloElem::conj() const {
    if (n_ <= 2) return *this;
    return galois(n_ - 1);
}

CycloElem CycloElem::pow(unsigned long e) const {
    CycloElem acc(n_, BigRational(1));
    CycloElem base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

CycloElem CycloElem::embed(unsigned m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw InternalInconsistency("embed: conductor does not divide target");
    unsigned step = m / n_;
    const auto& t = tables(m);
    CycloElem r(m);
    for (unsigned i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        const auto& row = t.pow[(static_cast<unsigned long>(i) * step) % m];
        for (unsigned k = 0; k < t.phi; ++k)
            if (row[k] != 0) r.c_[k] += c_[i] * BigRational(row[k]);
    }
    return r;
}

BigRational CycloElem::norm() const {
    CycloElem prod(n_, BigRational(1));
    for (unsigned j = 0; j < n_; ++j) {
        if (gcd_u(j, n_) != 1) continue;
        prod = prod * galois(j);
    }
    return prod.rational_value();
}

void common_conductor(CycloElem& a, CycloElem& b) {
    if (a.conductor() == b.conductor()) return;
    unsigned m = lcm_u(a.conductor(), b.conductor());
    a = a.embed(m);
    b = b.embed(m);
}

std::string CycloElem::to_string() const {
    std::ostringstream os;
    os << "[N=" << n_ << ";";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i];
    }
    os << "]";
    return os.str();
}

namespace {

template <typename Float>
int sign_by_float(const CycloElem& e, const BigRational& lower_bound) {
    const unsigned n = e.conductor();
    const Float two_pi = 2 * acos(Float(-1));
    Float val = 0, magsum = 0;
    for (size_t i = 0; i < e.coords().size(); ++i) {
        const BigRational& c = e.coords()[i];
        if (c == 0) continue;
        Float cf = Float(num(c)) / Float(den(c));
        val += cf * cos(two_pi * Float(i) / Float(n));
        magsum += abs(cf);
    }
    Float err = (magsum + 1) * std::numeric_limits<Float>::epsilon() * 1000;
    Float lb = Float(num(lower_bound)) / Float(den(lower_bound));
    if (val > err && err * 2 < lb) return 1;
    if (val < -err && err * 2 < lb) return -1;
    if (abs(val) <= err && err * 2 < lb) {
        // rigorously closer to zero than any nonzero value can be
        throw InternalInconsistency("sign_of_real: value below its norm bound");
    }
    return 0; // undecided at this precision
}

} // namespace

int sign_of_real(const CycloElem& e) {
    if (e.is_zero()) return 0;
    if (e.is_rational()) {
        BigRational v = e.rational_value();
        return v > 0 ? 1 : -1;
    }
    if (!(e.conj() == e))
        throw InternalInconsistency("sign_of_real on a non-real element");
    // |e| >= |norm(e)| / ub^(phi-1) with ub a bound on every conjugate
    BigRational nrm = e.norm();
    if (nrm == 0) throw InternalInconsistency("nonzero element with zero norm");
    BigRational ub(0);
    for (const auto& c : e.coords()) ub += abs(c);
    if (ub < 1) ub = 1;
    unsigned phi = euler_phi(e.conductor());
    BigRational lb = abs(nrm);
    for (unsigned i = 0; i + 1 < phi; ++i) lb /= ub;
    using F100 = boost::multiprecision::cpp_bin_float_100;
    using F1000 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<1000>>;
    if (int s = sign_by_float<F100>(e, lb)) return s;
    if (int s = sign_by_float<F1000>(e, lb)) return s;
    throw InternalInconsistency("sign_of_real: undecided at maximum precision");
}

int compare_real(const CycloElem& a, const CycloElem& b) { return sign_of_real(a - b); }

} // namespace sphspec
