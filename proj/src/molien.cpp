#include "sphspec/molien.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sphspec/cyclotomic.hpp"
#include "sphspec/errors.hpp"

namespace sphspec {

namespace {

// Hot-path arithmetic lives in the group ring Z[x]/(x^M - 1): an eigenvalue
// xi_M^e acts as a cyclic rotation by e, so multiplying a truncated series by
// the geometric series of (1 - z*xi^e) is a rotate-and-add sweep with no
// cyclotomic reduction. Reduction mod Phi_M happens once at the end, and
// doubles as the Galois-integrality assertion.
using RingVec = std::vector<BigInt>; // length M, index = exponent of x

void add_rotated(RingVec& dst, const RingVec& src, unsigned e, unsigned m) {
    for (unsigned j = 0; j < m; ++j) {
        const BigInt& v = src[j];
        if (v != 0) dst[(j + e) % m] += v;
    }
}

// remainder of the vector mod Phi_M; returns the reduced coords (length phi)
std::vector<BigInt> reduce_mod_phi(RingVec v, unsigned m) {
    const IntPoly& phi_m = cyclotomic_poly(m);
    unsigned phi = static_cast<unsigned>(phi_m.degree());
    for (unsigned k = m; k-- > phi;) {
        if (v[k] == 0) continue;
        BigInt t = std::move(v[k]);
        v[k] = 0;
        for (unsigned j = 0; j < phi; ++j) v[k - phi + j] -= t * phi_m.coeff(j);
    }
    v.resize(phi);
    return v;
}

// reduced vector must be a plain integer (constant polynomial in xi_M)
BigInt rational_constant(RingVec v, unsigned m, const char* what) {
    std::vector<BigInt> red = reduce_mod_phi(std::move(v), m);
    for (size_t j = 1; j < red.size(); ++j)
        if (red[j] != 0)
            throw InternalInconsistency(std::string(what) + ": coefficient not Galois-invariant");
    return red[0];
}

bool is_zero_mod_phi(RingVec v, unsigned m) {
    std::vector<BigInt> red = reduce_mod_phi(std::move(v), m);
    for (const auto& x : red)
        if (x != 0) return false;
    return true;
}

// series of 1/det(Id - z*gamma) up to K, as group-ring coefficients
std::vector<RingVec> element_series(const GroupElement& g, unsigned m, unsigned k_max) {
    std::vector<RingVec> s(k_max + 1, RingVec(m, BigInt(0)));
    s[0][0] = 1;
    for (const auto& [e, mult] : g.eig)
        for (unsigned rep = 0; rep < mult; ++rep)
            for (unsigned t = 1; t <= k_max; ++t) add_rotated(s[t], s[t - 1], e, m);
    return s;
}

// exact (1 - z^N)^(d+1) / det(Id - z*gamma), as group-ring coefficients
std::vector<RingVec> element_numerator(const GroupElement& g, unsigned m, unsigned n,
                                       unsigned ambient) {
    size_t deg = static_cast<size_t>(n) * ambient;
    std::vector<RingVec> p(deg + 1, RingVec(m, BigInt(0)));
    BigInt binom = 1;
    for (unsigned j = 0; j <= ambient; ++j) {
        p[static_cast<size_t>(j) * n][0] = (j % 2 == 0) ? binom : -binom;
        binom = binom * (ambient - j) / (j + 1);
    }
    for (const auto& [e, mult] : g.eig) {
        for (unsigned rep = 0; rep < mult; ++rep) {
            for (size_t t = 1; t <= deg; ++t) add_rotated(p[t], p[t - 1], e, m);
            if (!is_zero_mod_phi(p[deg], m))
                throw InternalInconsistency("numerator path: eigenvalue is not an N-th root of unity");
            p.pop_back();
            --deg;
        }
    }
    return p;
}

unsigned eigen_order(unsigned e, unsigned m) { return m / std::gcd(e, m); }

} // namespace

void GroupModel::check() const {
    if (elems.empty()) throw InternalInconsistency("empty group roster");
    if (ambient < 1) throw InternalInconsistency("ambient dimension must be positive");
    const unsigned n = order();
    for (size_t i = 0; i < elems.size(); ++i) {
        const GroupElement& g = elems[i];
        unsigned long total = 0;
        unsigned ord = 1;
        for (const auto& [e, mult] : g.eig) {
            if (e >= conductor) throw InternalInconsistency("eigenvalue exponent out of range");
            total += mult;
            unsigned inv = (conductor - e) % conductor;
            auto it = g.eig.find(inv);
            if (it == g.eig.end() || it->second != mult)
                throw InternalInconsistency("eigenvalues not closed under conjugation");
            ord = lcm_u(ord, eigen_order(e, conductor));
        }
        if (total != ambient)
            throw InternalInconsistency("eigenvalue multiplicities do not sum to d+1");
        if (ord != g.order) throw InternalInconsistency("stored element order is wrong");
        if (n % ord != 0) throw InternalInconsistency("element order does not divide group order");
        if (i == 0 && ord != 1) throw InternalInconsistency("roster must start with the identity");
    }
}

GroupModel group_from_lens(const LensParams& l) {
    GroupModel g;
    g.conductor = l.q;
    g.ambient = l.d + 1;
    for (unsigned k = 0; k < l.q; ++k) {
        GroupElement e;
        e.order = l.q / std::gcd(k, l.q);
        for (unsigned s : l.s) {
            unsigned exp = (static_cast<unsigned long>(k) * s) % l.q;
            e.eig[exp]++;
            e.eig[(l.q - exp) % l.q]++;
        }
        if (l.d % 2 == 0) e.eig[0]++;
        g.elems.push_back(std::move(e));
    }
    g.check();
    return g;
}

unsigned default_trunc(unsigned group_order, unsigned d) { return group_order * (d + 1) + 2; }

SpectrumFingerprint fingerprint(const GroupModel& g, unsigned trunc) {
    g.check();
    const unsigned m = g.conductor;
    const unsigned n = g.order();
    const unsigned k_max = trunc ? trunc : default_trunc(n, g.d());

    // path (a): truncated series of sum_gamma 1/det(Id - z*gamma)
    std::vector<RingVec> series_sum(k_max + 1, RingVec(m, BigInt(0)));
    for (const GroupElement& e : g.elems) {
        std::vector<RingVec> s = element_series(e, m, k_max);
        for (unsigned t = 0; t <= k_max; ++t)
            for (unsigned j = 0; j < m; ++j) series_sum[t][j] += s[t][j];
    }
    std::vector<BigInt> det_sum(k_max + 1);
    for (unsigned t = 0; t <= k_max; ++t)
        det_sum[t] = rational_constant(std::move(series_sum[t]), m, "series path");

    // path (b): exact numerator sum_gamma (1-z^N)^(d+1)/det(Id - z*gamma)
    std::vector<RingVec> num_sum;
    for (const GroupElement& e : g.elems) {
        std::vector<RingVec> p = element_numerator(e, m, n, g.ambient);
        if (num_sum.size() < p.size()) num_sum.resize(p.size(), RingVec(m, BigInt(0)));
        for (size_t t = 0; t < p.size(); ++t)
            for (unsigned j = 0; j < m; ++j) num_sum[t][j] += p[t][j];
    }
    std::vector<BigInt> numerator(num_sum.size());
    for (size_t t = 0; t < num_sum.size(); ++t)
        numerator[t] = rational_constant(std::move(num_sum[t]), m, "numerator path");
    while (!numerator.empty() && numerator.back() == 0) numerator.pop_back();

    // mandatory agreement: numerator * series(1/(1-z^N)^(d+1)) == series sum
    {
        BigInt binom = 1; // C(j+d, d)
        std::vector<BigInt> check(k_max + 1, BigInt(0));
        for (unsigned j = 0; static_cast<unsigned long>(j) * n <= k_max; ++j) {
            for (size_t i = 0; i < numerator.size(); ++i) {
                size_t t = static_cast<size_t>(j) * n + i;
                if (t > k_max) break;
                check[t] += binom * numerator[i];
            }
            binom = binom * (j + 1 + g.d()) / (j + 1);
        }
        for (unsigned t = 0; t <= k_max; ++t)
            if (check[t] != det_sum[t])
                throw InternalInconsistency("Molien paths disagree at coefficient " +
                                            std::to_string(t));
    }

    SpectrumFingerprint f;
    f.d = g.d();
    f.group_order = n;
    f.trunc = k_max;
    f.numerator = std::move(numerator);
    f.coeffs.resize(k_max + 1);
    for (unsigned t = 0; t <= k_max; ++t) {
        BigInt v = det_sum[t];
        if (t >= 2) v -= det_sum[t - 2];
        if (v % n != 0)
            throw InternalInconsistency("dimension coefficient not divisible by |Gamma|");
        v /= n;
        if (v < 0) throw InternalInconsistency("negative invariant dimension");
        f.coeffs[t] = std::move(v);
    }
    if (f.coeffs[0] != 1) throw InternalInconsistency("dim H_0 must be 1");
    return f;
}

std::vector<BigInt> oracle_dims(const LensParams& l, unsigned k_max) {
    // lattice count: dim P_k = #{exponent vectors of total degree k whose
    // weighted residue sum vanishes mod q}; one variable per monomial slot
    const unsigned q = l.q;
    std::vector<long> weights;
    for (unsigned s : l.s) {
        weights.push_back(s);
        weights.push_back(-static_cast<long>(s));
    }
    if (l.d % 2 == 0) weights.push_back(0);
    std::vector<std::vector<BigInt>> dp(k_max + 1, std::vector<BigInt>(q, BigInt(0)));
    dp[0][0] = 1;
    for (long w : weights) {
        unsigned r = static_cast<unsigned>(((w % static_cast<long>(q)) + q) % q);
        // in-place prefix recurrence: new[t][res] = old[t][res] + new[t-1][res-r]
        for (unsigned t = 1; t <= k_max; ++t)
            for (unsigned res = 0; res < q; ++res) dp[t][res] += dp[t - 1][(res + q - r) % q];
    }
    std::vector<BigInt> dims(k_max + 1);
    for (unsigned k = 0; k <= k_max; ++k) {
        dims[k] = dp[k][0];
        if (k >= 2) dims[k] -= dp[k - 2][0];
    }
    return dims;
}

bool is_isospectral(const SpectrumFingerprint& a, const SpectrumFingerprint& b) {
    if (a.d != b.d || a.group_order != b.group_order) return false;
    unsigned need = default_trunc(a.group_order, a.d);
    if (a.trunc < need || b.trunc < need)
        throw IncompatibleTruncation("fingerprints truncated below the sufficiency bound K=" +
                                     std::to_string(need));
    return a.numerator == b.numerator;
}

std::pair<unsigned, unsigned> recover_dimension_and_order(const SpectrumFingerprint& f) {
    // A(z) = (1-z^2) * numerator; pole order at 1 is (d+1) - ord_1(A)
    IntPoly a = IntPoly({BigInt(1), BigInt(0), BigInt(-1)}) * f.numerator_poly();
    unsigned mult = 0;
    while (!a.is_zero() && a.eval(BigInt(1)) == 0) {
        a = a.div_exact(IntPoly({BigInt(-1), BigInt(1)})); // (z - 1)
        ++mult;
    }
    if (mult > f.d + 1) throw InternalInconsistency("numerator vanishes to excessive order at 1");
    unsigned d_rec = f.d + 1 - mult;
    // Laurent coefficient L = lim (z-1)^d F(z) = (-1)^(d+1) A~(1) / N^(d+2)
    // (sign from writing A = (z-1)^mult * A~ against (1-z^N)^(d+1));
    // N = 2 (-1)^d / L, L the leading Laurent coefficient at z=1
    BigRational lead(a.eval(BigInt(1)));
    BigRational nq = BigRational(f.group_order);
    BigRational l = lead;
    for (unsigned i = 0; i < f.d + 2; ++i) l /= nq;
    if ((f.d + 1) % 2 == 1) l = -l;
    BigRational n_rec = BigRational(2) * ((d_rec % 2 == 0) ? 1 : -1) / l;
    if (!is_integer(n_rec) || n_rec <= 0)
        throw InternalInconsistency("recovered group order is not a positive integer");
    return {d_rec, static_cast<unsigned>(num(n_rec))};
}

unsigned pole_order_at(const SpectrumFingerprint& f, unsigned j, unsigned m) {
    unsigned alpha_order = j == 0 ? 1 : m / std::gcd(j, m);
    if (f.group_order % alpha_order != 0) return 0; // not a root of (1-z^N)
    CycloElem alpha = CycloElem::root(m, j);
    // A(z) = (1-z^2) * numerator
    IntPoly a_int = IntPoly({BigInt(1), BigInt(0), BigInt(-1)}) * f.numerator_poly();
    std::vector<CycloElem> a;
    a.reserve(a_int.coeffs().size());
    unsigned cond = alpha.conductor();
    for (const auto& c : a_int.coeffs()) a.emplace_back(cond, BigRational(c));
    unsigned mult = 0;
    while (!a.empty() && mult <= f.d + 1) {
        // Horner evaluation with quotient capture
        std::vector<CycloElem> quot(a.size() > 1 ? a.size() - 1 : 0, CycloElem(cond));
        CycloElem acc(cond);
        for (size_t i = a.size(); i-- > 0;) {
            acc = acc * alpha;
            acc += a[i];
            if (i > 0) quot[i - 1] = acc;
        }
        if (!acc.is_zero()) break;
        a = std::move(quot);
        ++mult;
    }
    return mult >= f.d + 1 ? 0 : f.d + 1 - mult;
}

std::string serialize(const SpectrumFingerprint& f) {
    std::ostringstream os;
    os << "d=" << f.d << ";N=" << f.group_order << ";K=" << f.trunc << ";coeffs=";
    for (size_t i = 0; i < f.coeffs.size(); ++i) {
        if (i) os << ",";
        os << f.coeffs[i];
    }
    os << ";num=";
    for (size_t i = 0; i < f.numerator.size(); ++i) {
        if (i) os << ",";
        os << f.numerator[i];
    }
    return os.str();
}

namespace {

std::vector<BigInt> parse_int_list(const std::string& s) {
    std::vector<BigInt> r;
    if (s.empty()) return r;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) r.emplace_back(tok);
    return r;
}

std::string field_after(const std::string& line, const std::string& key, size_t& pos) {
    size_t at = line.find(key, pos);
    if (at == std::string::npos) throw ParseError("missing field " + key, pos);
    at += key.size();
    size_t end = line.find(';', at);
    if (end == std::string::npos) end = line.size();
    pos = end;
    return line.substr(at, end - at);
}

} // namespace

SpectrumFingerprint deserialize_fingerprint(const std::string& line) {
    SpectrumFingerprint f;
    size_t pos = 0;
    f.d = static_cast<unsigned>(std::stoul(field_after(line, "d=", pos)));
    f.group_order = static_cast<unsigned>(std::stoul(field_after(line, "N=", pos)));
    f.trunc = static_cast<unsigned>(std::stoul(field_after(line, "K=", pos)));
    f.coeffs = parse_int_list(field_after(line, "coeffs=", pos));
    f.numerator = parse_int_list(field_after(line, "num=", pos));
    if (f.coeffs.size() != f.trunc + 1) throw ParseError("coefficient count mismatch", pos);
    return f;
}

} // namespace sphspec
