#include "sphspec/invariants.hpp"

#include <algorithm>

#include "sphspec/errors.hpp"

namespace sphspec {

std::set<unsigned> orders_of(const GroupModel& g) {
    std::set<unsigned> s;
    for (const auto& e : g.elems) s.insert(e.order);
    return s;
}

CycloRatFunc f_k(const GroupModel& g, unsigned k) {
    // 1/det(Id - z*gamma) = (-1)^(d+1) / prod_e (z - xi^e)^mult: each factor
    // (1 - z*xi^e) = -xi^e (z - xi^{-e}), and the xi^e prefactors multiply to
    // det(gamma^{-1}) = +-1; conjugation closure of the multiset makes the
    // product of the xi^e equal 1, leaving the uniform sign (-1)^(d+1).
    std::vector<RatFuncTerm> terms;
    BigRational sign = (g.ambient % 2 == 0) ? 1 : -1;
    for (const auto& e : g.elems) {
        if (e.order != k) continue;
        RatFuncTerm t;
        t.scale = sign;
        for (const auto& [exp, mult] : e.eig) t.den[(g.conductor - exp) % g.conductor] += mult;
        terms.push_back(std::move(t));
    }
    if (terms.empty()) throw OrderAbsent("no element of order " + std::to_string(k));
    return sum_of_reciprocals(g.conductor, terms);
}

unsigned max_mult(const GroupModel& g, unsigned k) {
    if (g.conductor % k != 0) throw OrderAbsent("order " + std::to_string(k));
    unsigned target = (g.conductor / k) % g.conductor; // xi_k = xi_M^(M/k); k=1 -> exponent 0
    bool seen = false;
    unsigned best = 0;
    for (const auto& e : g.elems) {
        if (e.order != k) continue;
        seen = true;
        auto it = e.eig.find(target);
        if (it != e.eig.end()) best = std::max(best, it->second);
    }
    if (!seen) throw OrderAbsent("no element of order " + std::to_string(k));
    return best;
}

OrderProfile order_profile(const GroupModel& g) {
    OrderProfile p;
    p.orders = orders_of(g);
    for (unsigned k : p.orders) p.per_order.emplace(k, f_k(g, k));
    return p;
}

Phi6Data phi6_gadget(unsigned q, unsigned n1, unsigned n2, unsigned n3) {
    if (euler_phi(q) != 6)
        throw WrongTotient("phi(" + std::to_string(q) + ") != 6");
    if (n1 < n2 || n1 < n3)
        throw WrongTotient("exponents not in normal form: n1 must be maximal");
    std::vector<unsigned> base = unit_base(q); // {1, s2, s3}
    const unsigned s2 = base[1], s3 = base[2];
    auto pair_power = [&](unsigned root, unsigned exp) {
        CycloPoly p = CycloPoly::constant(q, CycloElem(q, BigRational(1)));
        CycloPoly fac = CycloPoly::linear_root(q, root % q) *
                        CycloPoly::linear_root(q, (q - root % q) % q);
        for (unsigned i = 0; i < exp; ++i) p = p * fac;
        return p;
    };
    const unsigned a = n1 - n2, b = n1 - n3;
    CycloPoly p = pair_power(s2, a) * pair_power(s3, b) + pair_power(s3, a) * pair_power(1, b) +
                  pair_power(1, a) * pair_power(s2, b);
    Phi6Data d;
    d.p = p;
    d.p_at_one = p.eval(CycloElem(q, BigRational(1)));
    CycloElem at_xi = p.eval(CycloElem::root(q, 1));
    d.abs2_at_xi = at_xi * at_xi.conj();
    return d;
}

} // namespace sphspec
