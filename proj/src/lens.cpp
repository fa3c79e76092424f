#include "sphspec/lens.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sphspec/cyclotomic.hpp"
#include "sphspec/errors.hpp"

namespace sphspec {

bool LensParams::operator<(const LensParams& o) const {
    if (d != o.d) return d < o.d;
    if (q != o.q) return q < o.q;
    return s < o.s;
}

unsigned residue_rep(long r, unsigned q) {
    long m = r % static_cast<long>(q);
    if (m < 0) m += q;
    unsigned u = static_cast<unsigned>(m);
    return std::min(u, q - u);
}

LensParams validate_lens(unsigned d, unsigned q, const std::vector<long>& s) {
    if (q == 0) throw GcdViolation("q must be positive");
    unsigned n = (d + 1) / 2;
    if (s.size() != n)
        throw LengthMismatch("expected " + std::to_string(n) + " parameters for d=" +
                             std::to_string(d) + ", got " + std::to_string(s.size()));
    LensParams l;
    l.d = d;
    l.q = q;
    unsigned g = q;
    for (long v : s) {
        unsigned rep = residue_rep(v, q);
        l.s.push_back(rep);
        g = std::gcd(g, rep);
    }
    if (g != 1)
        throw GcdViolation("gcd(q, s_1,...,s_n) = " + std::to_string(g) + ", group order drops");
    std::sort(l.s.begin(), l.s.end());
    l.space_form = (d % 2 == 1);
    for (unsigned rep : l.s)
        if (std::gcd(rep, q) != 1) l.space_form = false;
    return l;
}

CanonicalLens canonicalize(const LensParams& l) {
    // Sign flips are absorbed by the representative range; permutations by
    // sorting. Minimize over unit multiplication only.
    std::vector<unsigned> best;
    for (unsigned u = 1; u < std::max(l.q, 2u); ++u) {
        if (std::gcd(u, l.q) != 1) continue;
        std::vector<unsigned> img;
        img.reserve(l.s.size());
        for (unsigned v : l.s)
            img.push_back(residue_rep(static_cast<long>(v) * u, l.q));
        std::sort(img.begin(), img.end());
        if (best.empty() || img < best) best = std::move(img);
    }
    if (best.empty()) best = l.s; // q = 1
    CanonicalLens c;
    c.params = l;
    c.params.s = std::move(best);
    return c;
}

bool is_isometric(const LensParams& a, const LensParams& b) {
    if (a.d != b.d || a.q != b.q) return false;
    return canonicalize(a) == canonicalize(b);
}

std::vector<unsigned> unit_base(unsigned q) {
    std::vector<unsigned> base;
    for (unsigned v = 1; 2 * v <= q; ++v)
        if (std::gcd(v, q) == 1) base.push_back(v);
    return base;
}

std::vector<unsigned> normal_form_exponents(const LensParams& l) {
    if (!l.space_form || l.q < 3)
        throw NotSpaceForm("normal form requires a lens space with q >= 3");
    std::vector<unsigned> base = unit_base(l.q);
    std::vector<unsigned> best;
    for (unsigned u = 1; u < l.q; ++u) {
        if (std::gcd(u, l.q) != 1) continue;
        std::vector<unsigned> exps(base.size(), 0);
        for (unsigned v : l.s) {
            unsigned rep = residue_rep(static_cast<long>(v) * u, l.q);
            auto it = std::lower_bound(base.begin(), base.end(), rep);
            exps[static_cast<size_t>(it - base.begin())]++;
        }
        bool head_max = true;
        for (size_t j = 1; j < exps.size(); ++j)
            if (exps[j] > exps[0]) head_max = false;
        if (!head_max) continue;
        if (best.empty() || exps < best) best = std::move(exps);
    }
    return best;
}

LensParams extend_lens(const LensParams& l, unsigned r) {
    if (!l.space_form || l.q < 3)
        throw NotSpaceForm("extend_lens requires a lens space with q >= 3");
    if (r < 1) throw NotSpaceForm("extension multiplicity r must be >= 1");
    LensParams e = l;
    std::vector<unsigned> units = unit_base(l.q);
    for (unsigned i = 0; i < r; ++i)
        e.s.insert(e.s.end(), units.begin(), units.end());
    std::sort(e.s.begin(), e.s.end());
    e.d = 2 * static_cast<unsigned>(e.s.size()) - 1;
    return e;
}

std::string to_string(const LensParams& l) {
    std::ostringstream os;
    os << "L";
    if (l.d % 2 == 0) os << "_" << l.d;
    os << "(" << l.q << ";";
    for (size_t i = 0; i < l.s.size(); ++i) {
        if (i) os << ",";
        os << l.s[i];
    }
    os << ")";
    return os.str();
}

} // namespace sphspec
