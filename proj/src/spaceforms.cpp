#include "sphspec/spaceforms.hpp"

#include <map>
#include <set>
#include <tuple>

#include "sphspec/cyclotomic.hpp"
#include "sphspec/errors.hpp"
#include "sphspec/invariants.hpp"

namespace sphspec {

namespace {

// 2x2 unitary block over Q(xi_M), either diag(xi^e, xi^-e) or the
// antidiagonal [[0, xi^e], [-xi^-e, 0]]; this family is closed under
// multiplication, so a block is just (anti, e)
struct Blk {
    bool anti = false;
    unsigned e = 0;
};

Blk mul(const Blk& x, const Blk& y, unsigned m) {
    if (!x.anti && !y.anti) return {false, (x.e + y.e) % m};
    if (!x.anti && y.anti) return {true, (x.e + y.e) % m};
    if (x.anti && !y.anti) return {true, (x.e + m - y.e) % m};
    return {false, (x.e + m - y.e + m / 2) % m};
}

bool is_id(const Blk& b) { return !b.anti && b.e == 0; }

Blk inv(const Blk& b, unsigned m) {
    if (!b.anti) return {false, (m - b.e) % m};
    // anti(e)^2 = diag(m/2), so the inverse is anti(e)^3
    return mul(b, {false, m / 2}, m);
}

// eigenvalue exponents of a block (with repetition)
std::pair<unsigned, unsigned> eigen_exps(const Blk& b, unsigned m) {
    if (b.anti) return {m / 4, 3 * (m / 4)};
    return {b.e, (m - b.e) % m};
}

// element as its images under the two irreducible blocks
using Pair = std::pair<Blk, Blk>;

Pair pmul(const Pair& x, const Pair& y, unsigned m) {
    return {mul(x.first, y.first, m), mul(x.second, y.second, m)};
}

bool pis_id(const Pair& p) { return is_id(p.first) && is_id(p.second); }

Pair pinv(const Pair& p, unsigned m) { return {inv(p.first, m), inv(p.second, m)}; }

Pair ppow(Pair p, unsigned k, unsigned m) {
    Pair r{{false, 0}, {false, 0}};
    for (unsigned i = 0; i < k; ++i) r = pmul(r, p, m);
    return r;
}

struct Presentation {
    unsigned conductor;
    unsigned order;
    Pair gen1; // A for P12/P20, B for Q8/Q16
    Pair gen2; // B for P12/P20, R for Q8/Q16
};

Presentation presentation(const FpfGroupSpec& s) {
    Presentation p;
    Blk flip{true, 0};
    switch (s.name) {
        case FpfName::Q8:
            p = {4, 8, {{false, 1}, {false, 1}}, {flip, flip}};
            break;
        case FpfName::P12:
            p = {12, 12, {{false, 4}, {false, 4}}, {flip, flip}};
            break;
        case FpfName::Q16:
            p = {8, 16, {{false, 1}, {false, 3}}, {flip, flip}};
            break;
        case FpfName::P20:
            p = {20, 20, {{false, 4}, {false, 8}}, {flip, flip}};
            break;
    }
    return p;
}

void check_relations(const FpfGroupSpec& s, const Presentation& p) {
    const unsigned m = p.conductor;
    auto same = [](const Pair& a, const Pair& b) {
        return a.first.anti == b.first.anti && a.first.e == b.first.e &&
               a.second.anti == b.second.anti && a.second.e == b.second.e;
    };
    bool ok = true;
    if (s.name == FpfName::Q8 || s.name == FpfName::Q16) {
        unsigned n = s.name == FpfName::Q8 ? 4 : 8;
        const Pair& b = p.gen1;
        const Pair& r = p.gen2;
        ok = ok && pis_id(ppow(b, n, m));
        ok = ok && same(ppow(r, 2, m), ppow(b, n / 2, m));
        ok = ok && same(pmul(pmul(r, b, m), pinv(r, m), m), ppow(b, n - 1, m));
    } else {
        unsigned n = s.name == FpfName::P12 ? 3 : 5;
        const Pair& a = p.gen1;
        const Pair& b = p.gen2;
        ok = ok && pis_id(ppow(a, n, m));
        ok = ok && pis_id(ppow(b, 4, m));
        ok = ok && same(pmul(pmul(b, a, m), pinv(b, m), m), ppow(a, n - 1, m));
    }
    if (!ok) throw RelationCheckFailed("presentation relations fail on the generator blocks");
}

unsigned element_order(const Pair& p, unsigned m) {
    Pair cur = p;
    unsigned k = 1;
    while (!pis_id(cur)) {
        cur = pmul(cur, p, m);
        ++k;
    }
    return k;
}

} // namespace

std::string to_string(FpfName n) {
    switch (n) {
        case FpfName::Q8: return "Q8";
        case FpfName::P12: return "P12";
        case FpfName::Q16: return "Q16";
        case FpfName::P20: return "P20";
    }
    return "?";
}

unsigned fpf_order(FpfName n) {
    switch (n) {
        case FpfName::Q8: return 8;
        case FpfName::P12: return 12;
        case FpfName::Q16: return 16;
        case FpfName::P20: return 20;
    }
    return 0;
}

GroupModel roster(const FpfGroupSpec& spec) {
    if (spec.m < 1) throw InternalInconsistency("m must be positive");
    if (spec.h > spec.m / 2) throw InternalInconsistency("h out of range");
    if ((spec.name == FpfName::Q8 || spec.name == FpfName::P12) && spec.h != 0)
        throw InternalInconsistency("single irreducible block: h must be 0");
    Presentation p = presentation(spec);
    check_relations(spec, p);
    const unsigned m = p.conductor;

    // close the generator pair under multiplication
    auto key = [](const Pair& x) {
        return std::tuple(x.first.anti, x.first.e, x.second.anti, x.second.e);
    };
    std::map<decltype(key(Pair{})), Pair> seen;
    Pair id{{false, 0}, {false, 0}};
    seen.emplace(key(id), id);
    std::vector<Pair> frontier{id};
    while (!frontier.empty()) {
        std::vector<Pair> next;
        for (const Pair& x : frontier)
            for (const Pair& g : {p.gen1, p.gen2}) {
                Pair y = pmul(x, g, m);
                if (seen.emplace(key(y), y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    if (seen.size() != p.order)
        throw RelationCheckFailed("closure has wrong size " + std::to_string(seen.size()));

    GroupModel g;
    g.conductor = m;
    g.ambient = 4 * spec.m;
    std::vector<Pair> elems;
    elems.push_back(id);
    for (const auto& [k, x] : seen)
        if (!pis_id(x)) elems.push_back(x);
    for (const Pair& x : elems) {
        GroupElement el;
        el.order = element_order(x, m);
        auto add_block = [&](const Blk& b, unsigned copies) {
            if (copies == 0) return;
            auto [e1, e2] = eigen_exps(b, m);
            el.eig[e1] += 2 * copies;
            el.eig[e2] += 2 * copies;
        };
        add_block(x.first, spec.h);
        add_block(x.second, spec.m - spec.h);
        if (!pis_id(x) && el.eig.count(0))
            throw InternalInconsistency("non-trivial element fixes a vector");
        g.elems.push_back(std::move(el));
    }
    g.check();
    return g;
}

ErrataReport verify_errata_lemma(FpfName name, unsigned m) {
    ErrataReport rep;
    rep.name = name;
    rep.m = m;
    const bool mixed = name == FpfName::Q16 || name == FpfName::P20;
    const unsigned h_max = mixed ? m / 2 : 0;
    const unsigned k = name == FpfName::Q16 ? 8 : 10; // relevant element order
    std::vector<SpectrumFingerprint> fps;
    for (unsigned h = 0; h <= h_max; ++h) {
        GroupModel g = roster({name, m, h});
        fps.push_back(fingerprint(g));
        if (mixed) {
            // F^(k) has a pole of order 2(m-h) at the primitive k-th root
            CycloRatFunc fk = f_k(g, k);
            unsigned ord = fk.pole_order_at(1, k);
            rep.pole_orders.emplace_back(h, ord);
            if (ord != 2 * (m - h))
                throw InternalInconsistency("pole order at primitive root is " +
                                            std::to_string(ord) + ", expected " +
                                            std::to_string(2 * (m - h)));
        }
    }
    rep.all_distinct = true;
    for (size_t i = 0; i < fps.size(); ++i)
        for (size_t j = i + 1; j < fps.size(); ++j)
            if (is_isospectral(fps[i], fps[j])) rep.all_distinct = false;
    return rep;
}

bool fk_divisor_identity(const LensParams& l, unsigned r, unsigned k) {
    if (k == 0 || l.q % k != 0) throw NonDivisor(std::to_string(k) + " does not divide q");
    if (r < 1) throw InternalInconsistency("extension multiplicity must be positive");
    GroupModel base = group_from_lens(l);
    GroupModel ext = group_from_lens(extend_lens(l, r));
    unsigned q0 = euler_phi(l.q) / 2;
    unsigned exponent = 2 * q0 * r / euler_phi(k);
    CycloRatFunc lhs = f_k(ext, k);
    CycloRatFunc rhs = f_k(base, k).divided_by_cyclotomic_power(k, exponent);
    return lhs == rhs;
}

} // namespace sphspec
