#include "sphspec/orbifolds.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "sphspec/cyclotomic.hpp"
#include "sphspec/errors.hpp"

namespace sphspec {

namespace {

unsigned rep_mod(unsigned long v, unsigned n) {
    v %= n;
    return static_cast<unsigned>(v > n / 2 ? n - v : v);
}

// weight of residue index e in the d+1 count: paired except 0 and n/2
unsigned residue_weight(unsigned e, unsigned n) {
    return (e == 0 || 2 * e == n) ? 1 : 2;
}

// the generator really has order n: lcm of eigenvalue orders
bool order_exact(const std::vector<unsigned>& m, unsigned n) {
    unsigned l = 1;
    for (unsigned e = 0; e < m.size(); ++e)
        if (m[e] > 0 && e > 0) l = lcm_u(l, n / gcd_u(e, n));
    return l == n;
}

std::vector<unsigned> unit_image(const std::vector<unsigned>& m, unsigned n, unsigned u) {
    std::vector<unsigned> r(m.size(), 0);
    for (unsigned e = 0; e < m.size(); ++e) r[rep_mod(static_cast<unsigned long>(u) * e, n)] = m[e];
    return r;
}

bool is_unit_minimal(const std::vector<unsigned>& m, unsigned n) {
    for (unsigned u = 2; u < n; ++u) {
        if (gcd_u(u, n) != 1) continue;
        if (unit_image(m, n, u) < m) return false;
    }
    return true;
}

void emit_cyclic(unsigned d, unsigned n, std::vector<SmallGroupClass>& out) {
    const unsigned h = n / 2;
    std::vector<unsigned> m(h + 1, 0);
    // recursive fill over residues with the remaining eigenvalue budget
    auto rec = [&](auto&& self, unsigned e, unsigned left) -> void {
        if (e > h) {
            if (left != 0) return;
            if (!order_exact(m, n)) return;
            if (!is_unit_minimal(m, n)) return;
            out.push_back({n, GroupKind::cyclic, d, m});
            return;
        }
        unsigned w = residue_weight(e, n);
        for (unsigned v = 0; v * w <= left; ++v) {
            m[e] = v;
            self(self, e + 1, left - v * w);
        }
        m[e] = 0;
    };
    rec(rec, 0, d + 1);
}

// commuting diagonal sign matrices with -1 counts m1 >= m2 and product count
// m3; existence decides membership in O(d+1)
bool klein_realizable(unsigned d, unsigned m1, unsigned m2, unsigned m3) {
    if ((m1 + m2 + m3) % 2 != 0) return false;
    if (m3 > m1 + m2 || m1 > m2 + m3) return false;
    unsigned t = (m1 + m2 - m3) / 2; // shared -1 positions of the first two
    if (t > m2) return false;
    if (m1 + m2 - t > d + 1) return false;
    std::vector<int> v1(d + 1, 1), v2(d + 1, 1);
    for (unsigned i = 0; i < m1; ++i) v1[i] = -1;
    for (unsigned i = m1 - t; i < m1 - t + m2; ++i) v2[i] = -1;
    unsigned prod = 0;
    for (unsigned i = 0; i <= d; ++i)
        if (v1[i] * v2[i] == -1) ++prod;
    return prod == m3;
}

void emit_klein(unsigned d, std::vector<SmallGroupClass>& out) {
    for (unsigned m1 = 1; m1 <= d + 1; ++m1)
        for (unsigned m2 = 1; m2 <= m1; ++m2)
            for (unsigned m3 = 1; m3 <= m2; ++m3)
                if (klein_realizable(d, m1, m2, m3))
                    out.push_back({4, GroupKind::klein_four, d, {m1, m2, m3}});
}

void emit_sym3(unsigned d, std::vector<SmallGroupClass>& out) {
    for (unsigned m2 = 1; 2 * m2 <= d + 1; ++m2)
        for (unsigned m1 = 0; m1 + 2 * m2 <= d + 1; ++m1)
            out.push_back({6, GroupKind::sym3, d, {m1, m2}});
}

void validate_class(const SmallGroupClass& c) {
    switch (c.kind) {
        case GroupKind::cyclic: {
            const unsigned n = c.order;
            if (n < 1 || n > 7) throw UnsupportedOrder("cyclic order must be 1..7");
            if (c.mult.size() != n / 2 + 1)
                throw InternalInconsistency("expected " + std::to_string(n / 2 + 1) +
                                            " residue multiplicities");
            unsigned long total = 0;
            for (unsigned e = 0; e < c.mult.size(); ++e)
                total += static_cast<unsigned long>(residue_weight(e, n)) * c.mult[e];
            if (total != c.d + 1)
                throw InternalInconsistency("multiplicities do not fill dimension d+1");
            if (!order_exact(c.mult, n))
                throw InternalInconsistency("generator order is smaller than stated");
            break;
        }
        case GroupKind::klein_four:
            if (c.order != 4 || c.mult.size() != 3)
                throw InternalInconsistency("klein four class needs three -1 counts");
            if (c.mult[0] < c.mult[1] || c.mult[1] < c.mult[2] || c.mult[2] < 1 ||
                !klein_realizable(c.d, c.mult[0], c.mult[1], c.mult[2]))
                throw InternalInconsistency("no commuting involution triple realizes these counts");
            break;
        case GroupKind::sym3:
            if (c.order != 6 || c.mult.size() != 2)
                throw InternalInconsistency("sym3 class needs two multiplicities");
            if (c.mult[1] < 1 || c.mult[0] + 2 * c.mult[1] > c.d + 1)
                throw InternalInconsistency("symmetric group representation does not fit");
            break;
    }
}

} // namespace

bool SmallGroupClass::operator<(const SmallGroupClass& o) const {
    return std::tie(order, kind, d, mult) < std::tie(o.order, o.kind, o.d, o.mult);
}

std::string to_string(const SmallGroupClass& c) {
    std::ostringstream os;
    switch (c.kind) {
        case GroupKind::cyclic: os << "cyclic" << c.order; break;
        case GroupKind::klein_four: os << "klein4"; break;
        case GroupKind::sym3: os << "sym3"; break;
    }
    os << ":d=" << c.d << ":";
    for (size_t i = 0; i < c.mult.size(); ++i) {
        if (i) os << ",";
        os << c.mult[i];
    }
    return os.str();
}

std::vector<SmallGroupClass> enumerate_classes(unsigned d, unsigned n_max) {
    if (n_max > 7) throw UnsupportedOrder("group orders above 7 are not enumerable here");
    if (d < 1) throw InternalInconsistency("ambient dimension must be positive");
    std::vector<SmallGroupClass> out;
    for (unsigned n = 1; n <= n_max; ++n) {
        emit_cyclic(d, n, out);
        if (n == 4) emit_klein(d, out);
        if (n == 6) emit_sym3(d, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

GroupModel class_to_group(const SmallGroupClass& c) {
    validate_class(c);
    GroupModel g;
    g.ambient = c.d + 1;
    switch (c.kind) {
        case GroupKind::cyclic: {
            const unsigned n = c.order;
            g.conductor = n;
            for (unsigned k = 0; k < n; ++k) {
                GroupElement el;
                el.order = n / gcd_u(k, n);
                for (unsigned e = 0; e < c.mult.size(); ++e) {
                    if (c.mult[e] == 0) continue;
                    unsigned a = (static_cast<unsigned long>(k) * e) % n;
                    el.eig[a] += c.mult[e];
                    if (residue_weight(e, n) == 2) el.eig[(n - a) % n] += c.mult[e];
                }
                g.elems.push_back(std::move(el));
            }
            break;
        }
        case GroupKind::klein_four: {
            g.conductor = 2;
            GroupElement id;
            id.eig[0] = c.d + 1;
            g.elems.push_back(std::move(id));
            for (unsigned mj : c.mult) {
                GroupElement el;
                el.order = 2;
                el.eig[1] = mj;
                if (mj < c.d + 1) el.eig[0] = c.d + 1 - mj;
                g.elems.push_back(std::move(el));
            }
            break;
        }
        case GroupKind::sym3: {
            g.conductor = 6;
            const unsigned m1 = c.mult[0], m2 = c.mult[1];
            GroupElement id;
            id.eig[0] = c.d + 1;
            g.elems.push_back(std::move(id));
            for (int rep = 0; rep < 2; ++rep) {
                GroupElement rot;
                rot.order = 3;
                rot.eig[2] = m2;
                rot.eig[4] = m2;
                rot.eig[0] = c.d + 1 - 2 * m2;
                g.elems.push_back(std::move(rot));
            }
            for (int rep = 0; rep < 3; ++rep) {
                GroupElement refl;
                refl.order = 2;
                refl.eig[3] = m1 + m2;
                if (m1 + m2 < c.d + 1) refl.eig[0] = c.d + 1 - m1 - m2;
                g.elems.push_back(std::move(refl));
            }
            break;
        }
    }
    g.check();
    return g;
}

RigidityReport verify_rigidity(unsigned d, unsigned n_max) {
    RigidityReport rep;
    rep.d = d;
    rep.n_max = n_max;
    rep.count_by_order.assign(n_max + 1, 0);
    rep.trunc = default_trunc(n_max, d);
    std::vector<SmallGroupClass> classes = enumerate_classes(d, n_max);
    std::vector<SpectrumFingerprint> fps;
    fps.reserve(classes.size());
    for (const auto& c : classes) {
        ++rep.count_by_order[c.order];
        fps.push_back(fingerprint(class_to_group(c), rep.trunc));
    }
    rep.total = static_cast<unsigned>(classes.size());
    for (size_t i = 0; i < fps.size(); ++i)
        for (size_t j = i + 1; j < fps.size(); ++j)
            if (is_isospectral(fps[i], fps[j]))
                throw RigidityViolation("isospectral distinct classes " + to_string(classes[i]) +
                                        " and " + to_string(classes[j]));
    return rep;
}

} // namespace sphspec
