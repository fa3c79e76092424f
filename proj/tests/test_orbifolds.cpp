#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "sphspec/cyclotomic.hpp"
#include "sphspec/errors.hpp"
#include "sphspec/invariants.hpp"
#include "sphspec/orbifolds.hpp"

using namespace sphspec;

namespace {

std::vector<SmallGroupClass> of_order(const std::vector<SmallGroupClass>& all, unsigned n,
                                      GroupKind kind) {
    std::vector<SmallGroupClass> out;
    for (const auto& c : all)
        if (c.order == n && c.kind == kind) out.push_back(c);
    return out;
}

// brute-force count of cyclic order-n classes: all multiplicity vectors over
// folded residues, exact order, counted as orbits under the unit action
unsigned brute_cyclic_count(unsigned d, unsigned n) {
    std::set<std::vector<unsigned>> orbit_minima;
    unsigned h = n / 2;
    std::vector<unsigned> m(h + 1, 0);
    auto weight = [&](unsigned e) { return (e == 0 || 2 * e == n) ? 1u : 2u; };
    auto rec = [&](auto&& self, unsigned e, unsigned left) -> void {
        if (e > h) {
            if (left != 0) return;
            unsigned l = 1;
            for (unsigned i = 1; i <= h; ++i)
                if (m[i] > 0) l = lcm_u(l, n / gcd_u(i, n));
            if (l != n) return;
            std::vector<unsigned> best = m;
            for (unsigned u = 1; u < n; ++u) {
                if (gcd_u(u, n) != 1) continue;
                std::vector<unsigned> img(h + 1, 0);
                for (unsigned i = 0; i <= h; ++i) {
                    unsigned t = (u * i) % n;
                    img[std::min(t, n - t)] = m[i];
                }
                best = std::min(best, img);
            }
            orbit_minima.insert(best);
            return;
        }
        for (unsigned v = 0; v * weight(e) <= left; ++v) {
            m[e] = v;
            self(self, e + 1, left - v * weight(e));
        }
        m[e] = 0;
    };
    rec(rec, 0, d + 1);
    return static_cast<unsigned>(orbit_minima.size());
}

} // namespace

TEST_CASE("enumeration basics") {
    CHECK_THROWS_AS(enumerate_classes(5, 8), UnsupportedOrder);

    auto all = enumerate_classes(2, 2);
    CHECK(of_order(all, 1, GroupKind::cyclic).size() == 1);
    // order 2 on S^2: -1 multiplicity 1, 2, or 3
    auto ord2 = of_order(all, 2, GroupKind::cyclic);
    CHECK(ord2.size() == 3);
    for (const auto& c : ord2) CHECK(c.mult[1] >= 1);
}

TEST_CASE("cyclic counts match a from-scratch orbit count") {
    for (unsigned d = 2; d <= 7; ++d)
        for (unsigned n = 1; n <= 7; ++n) {
            auto got = of_order(enumerate_classes(d, 7), n, GroupKind::cyclic);
            CHECK(got.size() == brute_cyclic_count(d, n));
        }
}

TEST_CASE("order-5 classes at d=5 follow the residue pattern") {
    // vectors (m0, m1, m2), m0 + 2m1 + 2m2 = 6, (m1,m2) != (0,0), modulo the
    // unit action swapping m1 and m2; m0 = 6 - 2(m1+m2) is even
    auto got = of_order(enumerate_classes(5, 5), 5, GroupKind::cyclic);
    std::set<std::vector<unsigned>> expect;
    for (unsigned m1 = 0; m1 <= 3; ++m1)
        for (unsigned m2 = 0; m1 + m2 <= 3; ++m2) {
            if (m1 + m2 == 0) continue;
            std::vector<unsigned> v{6 - 2 * (m1 + m2), std::min(m1, m2), std::max(m1, m2)};
            std::vector<unsigned> w{v[0], v[2], v[1]};
            expect.insert(std::min(v, w));
        }
    std::set<std::vector<unsigned>> have;
    for (const auto& c : got) have.insert(c.mult);
    CHECK(have == expect);
}

TEST_CASE("klein four classes at d=5") {
    auto got = of_order(enumerate_classes(5, 4), 4, GroupKind::klein_four);
    // brute force: sorted triples, triangle, even sum, realizable in O(6)
    unsigned count = 0;
    for (unsigned m1 = 1; m1 <= 6; ++m1)
        for (unsigned m2 = 1; m2 <= m1; ++m2)
            for (unsigned m3 = 1; m3 <= m2; ++m3) {
                if ((m1 + m2 + m3) % 2 != 0) continue;
                if (m1 > m2 + m3) continue;
                if ((m1 + m2 + m3) / 2 > 6) continue;
                ++count;
            }
    CHECK(got.size() == count);
    for (const auto& c : got) {
        CHECK(c.mult[0] >= c.mult[1]);
        CHECK(c.mult[1] >= c.mult[2]);
        // pairwise products consistent: realized by explicit sign vectors
        GroupModel g = class_to_group(c);
        CHECK(g.order() == 4);
    }
}

TEST_CASE("sym3 classes") {
    auto got = of_order(enumerate_classes(5, 6), 6, GroupKind::sym3);
    for (const auto& c : got) {
        CHECK(c.mult[1] >= 1);
        CHECK(c.mult[0] + 2 * c.mult[1] <= 6);
        GroupModel g = class_to_group(c);
        CHECK(g.order() == 6);
        CHECK(orders_of(g) == std::set<unsigned>({1, 2, 3}));
    }
    // count: m2 in 1..3, m1 in 0..6-2m2
    CHECK(got.size() == 5 + 3 + 1);
}

TEST_CASE("rosters match the small-group formulas") {
    SmallGroupClass c6{6, GroupKind::cyclic, 1, {0, 1, 0, 0}};
    GroupModel g6 = class_to_group(c6);
    CHECK(g6.elems[1].eig == std::map<unsigned, unsigned>({{1, 1}, {5, 1}}));
    CHECK(g6.elems[1].order == 6);

    SmallGroupClass s3{6, GroupKind::sym3, 2, {0, 1}};
    GroupModel gs = class_to_group(s3);
    CHECK(gs.order() == 6);
    CHECK(gs.elems[1].eig == std::map<unsigned, unsigned>({{2, 1}, {4, 1}, {0, 1}}));
    CHECK(gs.elems[3].eig == std::map<unsigned, unsigned>({{3, 1}, {0, 2}}));

    SmallGroupClass k4{4, GroupKind::klein_four, 3, {2, 1, 1}};
    GroupModel gk = class_to_group(k4);
    CHECK(gk.elems[1].eig.at(1) == 2);
    CHECK(gk.elems[2].eig.at(1) == 1);
}

TEST_CASE("rigidity for small dimensions") {
    for (unsigned d = 2; d <= 5; ++d) {
        RigidityReport rep = verify_rigidity(d, 7);
        CHECK(rep.total > 0);
        CHECK(rep.count_by_order[1] == 1);
    }
}

TEST_CASE("pole dichotomy for orders 4 and 6") {
    for (unsigned d : {3u, 5u}) {
        for (const auto& c : enumerate_classes(d, 6)) {
            if (c.order != 4 && c.order != 6) continue;
            SpectrumFingerprint f = fingerprint(class_to_group(c));
            unsigned m = c.order;
            bool has_pole = pole_order_at(f, 1, m) > 0;
            // the naive order-6 dichotomy presumes a primitive-root
            // eigenvalue; cyclic classes built from -1 and xi_3 alone are the
            // (valid) exception, so test the refined statement
            bool primitive_eig = c.kind == GroupKind::cyclic && c.mult[1] > 0;
            CHECK(has_pole == primitive_eig);
        }
    }
}

TEST_CASE("klein Laurent trichotomy at z = -1") {
    for (unsigned d : {3u, 5u, 6u}) {
        for (const auto& c : enumerate_classes(d, 4)) {
            if (c.kind != GroupKind::klein_four) continue;
            GroupModel g = class_to_group(c);
            // 4/(1-z^2) F(z) - 1/(1-z)^(d+1) = sum over the three involutions
            CycloRatFunc f2 = f_k(g, 2);
            unsigned m1 = c.mult[0], m2 = c.mult[1], m3 = c.mult[2];
            CHECK(f2.pole_order_at(1, 2) == m1);
            CycloElem lead = f2.laurent_leading_at(1, 2);
            BigRational expect;
            BigRational pw = 1;
            for (unsigned i = 0; i < d + 1 - m1; ++i) pw *= 2;
            if (m1 > m2) expect = BigRational(1) / pw;
            else if (m2 > m3) expect = BigRational(2) / pw;
            else expect = BigRational(3) / pw;
            // the sum is over 1/(1+z)^a (1-z)^b terms; account for the sign
            // of rewriting (1-z)^b = (-1)^b (z-1)^b at z=-1 via exact value
            CHECK(lead.is_rational());
            BigRational got = lead.rational_value();
            if (got < 0) got = -got;
            CHECK(got == expect);
        }
    }
}

TEST_CASE("orders 5 and 7 reduce to lens space data") {
    for (unsigned n : {5u, 7u}) {
        for (const auto& c : enumerate_classes(5, n)) {
            if (c.order != n) continue;
            GroupModel g = class_to_group(c);
            // strip the trivial pairs: the class with m0 fixed slots matches
            // the lens space on the remaining 2(m1+...) coordinates
            std::vector<long> s;
            for (unsigned e = 1; e < c.mult.size(); ++e)
                for (unsigned i = 0; i < c.mult[e]; ++i) s.push_back(e);
            if (s.empty()) continue;
            LensParams small = validate_lens(2 * static_cast<unsigned>(s.size()) - 1, n, s);
            SpectrumFingerprint f_small = fingerprint(group_from_lens(small));
            SpectrumFingerprint f_full = fingerprint(g);
            // each fixed coordinate multiplies the numerator by
            // (1-z^n)/(1-z) = 1 + z + ... + z^(n-1)
            IntPoly shift = IntPoly::constant(1);
            IntPoly geom(std::vector<BigInt>(n, 1));
            for (unsigned i = 0; i < c.mult[0]; ++i) shift = shift * geom;
            CHECK(f_full.numerator_poly() == f_small.numerator_poly() * shift);
        }
    }
}
