#include "sphspec/ratfunc.hpp"

#include "sphspec/errors.hpp"

namespace sphspec {

CycloPoly CycloPoly::constant(unsigned conductor, CycloElem v) {
    CycloPoly p;
    p.conductor = conductor;
    if (!v.is_zero()) p.c = {v.embed(conductor)};
    return p;
}

CycloPoly CycloPoly::linear_root(unsigned conductor, unsigned e) {
    CycloPoly p;
    p.conductor = conductor;
    p.c = {-CycloElem::root(conductor, e), CycloElem(conductor, BigRational(1))};
    return p;
}

void CycloPoly::trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

CycloPoly CycloPoly::operator+(const CycloPoly& o) const {
    if (conductor != o.conductor) {
        unsigned m = lcm_u(conductor, o.conductor);
        return embed(m) + o.embed(m);
    }
    CycloPoly r;
    r.conductor = conductor;
    r.c.resize(std::max(c.size(), o.c.size()), CycloElem(conductor));
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    r.trim();
    return r;
}

CycloPoly CycloPoly::operator*(const CycloPoly& o) const {
    if (conductor != o.conductor) {
        unsigned m = lcm_u(conductor, o.conductor);
        return embed(m) * o.embed(m);
    }
    CycloPoly r;
    r.conductor = conductor;
    if (is_zero() || o.is_zero()) return r;
    r.c.assign(c.size() + o.c.size() - 1, CycloElem(conductor));
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        for (size_t j = 0; j < o.c.size(); ++j) {
            if (o.c[j].is_zero()) continue;
            r.c[i + j] += c[i] * o.c[j];
        }
    }
    r.trim();
    return r;
}

bool CycloPoly::operator==(const CycloPoly& o) const {
    if (conductor != o.conductor) {
        unsigned m = lcm_u(conductor, o.conductor);
        return embed(m) == o.embed(m);
    }
    if (c.size() != o.c.size()) return false;
    for (size_t i = 0; i < c.size(); ++i)
        if (!(c[i] == o.c[i])) return false;
    return true;
}

CycloElem CycloPoly::eval(const CycloElem& x) const {
    CycloElem acc(conductor);
    for (size_t i = c.size(); i-- > 0;) {
        acc = acc * x;
        acc += c[i];
    }
    return acc;
}

CycloPoly CycloPoly::divide_root(const CycloElem& alpha) const {
    CycloPoly q;
    q.conductor = conductor;
    if (c.size() <= 1) throw InternalInconsistency("divide_root on a constant polynomial");
    q.c.assign(c.size() - 1, CycloElem(conductor));
    CycloElem acc(conductor);
    for (size_t i = c.size(); i-- > 0;) {
        acc = acc * alpha;
        acc += c[i];
        if (i > 0) q.c[i - 1] = acc;
    }
    if (!acc.is_zero()) throw InternalInconsistency("divide_root: alpha is not a root");
    q.trim();
    return q;
}

CycloPoly CycloPoly::embed(unsigned m) const {
    if (m == conductor) return *this;
    CycloPoly r;
    r.conductor = m;
    r.c.reserve(c.size());
    for (const auto& v : c) r.c.push_back(v.embed(m));
    return r;
}

void CycloRatFunc::canonicalize() {
    num.trim();
    if (num.is_zero()) {
        den.clear();
        return;
    }
    for (auto it = den.begin(); it != den.end();) {
        CycloElem alpha = CycloElem::root(conductor, it->first);
        while (it->second > 0 && num.degree() >= 1 && num.eval(alpha).is_zero()) {
            num = num.divide_root(alpha);
            --it->second;
        }
        if (it->second == 0) it = den.erase(it);
        else ++it;
    }
}

bool CycloRatFunc::operator==(const CycloRatFunc& o) const {
    unsigned m = lcm_u(conductor, o.conductor);
    CycloRatFunc a = embed(m), b = o.embed(m);
    return a.den == b.den && a.num == b.num;
}

unsigned CycloRatFunc::pole_order_at(unsigned j, unsigned m) const {
    unsigned big = lcm_u(conductor, m);
    CycloRatFunc f = embed(big);
    unsigned e = (static_cast<unsigned long>(j) * (big / m)) % big;
    auto it = f.den.find(e);
    return it == f.den.end() ? 0 : it->second;
}

CycloElem CycloRatFunc::laurent_leading_at(unsigned j, unsigned m) const {
    unsigned big = lcm_u(conductor, m);
    CycloRatFunc f = embed(big);
    unsigned e = (static_cast<unsigned long>(j) * (big / m)) % big;
    CycloElem alpha = CycloElem::root(big, e);
    CycloElem val = f.num.eval(alpha);
    for (const auto& [root, mu] : f.den) {
        if (root == e) continue;
        CycloElem diff = alpha - CycloElem::root(big, root);
        val = val * diff.inv().pow(mu);
    }
    return val;
}

CycloRatFunc CycloRatFunc::divided_by_cyclotomic_power(unsigned k, unsigned mult) const {
    unsigned big = lcm_u(conductor, k);
    CycloRatFunc f = embed(big);
    for (unsigned j = 0; j < k; ++j) {
        if (gcd_u(j, k) != 1) continue;
        f.den[(static_cast<unsigned long>(j) * (big / k)) % big] += mult;
    }
    f.canonicalize();
    return f;
}

CycloRatFunc CycloRatFunc::embed(unsigned m) const {
    if (m == conductor) return *this;
    if (m % conductor != 0) throw InternalInconsistency("ratfunc embed: bad conductor");
    CycloRatFunc r;
    r.conductor = m;
    r.num = num.embed(m);
    unsigned step = m / conductor;
    for (const auto& [e, mu] : den) r.den[(static_cast<unsigned long>(e) * step) % m] = mu;
    return r;
}

CycloRatFunc sum_of_reciprocals(unsigned conductor, const std::vector<RatFuncTerm>& terms) {
    CycloRatFunc f;
    f.conductor = conductor;
    // common denominator: elementwise max multiplicity
    for (const auto& t : terms)
        for (const auto& [e, mu] : t.den) {
            auto& cur = f.den[e];
            cur = std::max(cur, mu);
        }
    CycloPoly total;
    total.conductor = conductor;
    for (const auto& t : terms) {
        CycloPoly prod = CycloPoly::constant(conductor, CycloElem(conductor, t.scale));
        for (const auto& [e, mu] : f.den) {
            unsigned have = 0;
            if (auto it = t.den.find(e); it != t.den.end()) have = it->second;
            for (unsigned i = have; i < mu; ++i) prod = prod * CycloPoly::linear_root(conductor, e);
        }
        total = total + prod;
    }
    f.num = std::move(total);
    f.canonicalize();
    return f;
}

} // namespace sphspec
