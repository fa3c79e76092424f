// Acceptance gate: one PASS/FAIL line per claim, nonzero exit on any FAIL.
// A line-delimited cache file in the working directory makes reruns fast.
#include <algorithm>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "sphspec/errors.hpp"
#include "sphspec/invariants.hpp"
#include "sphspec/orbifolds.hpp"
#include "sphspec/search.hpp"
#include "sphspec/spaceforms.hpp"
#include "sphspec/specstring.hpp"

using namespace sphspec;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << "  [" << idx << "] " << name;
    if (!ok && !detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

template <typename F>
void criterion(int idx, const std::string& name, F&& body) {
    try {
        std::string detail;
        bool ok = body(detail);
        report(idx, name, ok, detail);
    } catch (const std::exception& e) {
        report(idx, name, false, e.what());
    }
}

// every fingerprint produced by criteria 1-7, with the true (d, order)
struct Registered {
    SpectrumFingerprint fp;
    unsigned d;
    unsigned n;
};
std::vector<Registered> registry;

void reg(const SpectrumFingerprint& f, unsigned d, unsigned n) {
    registry.push_back({f, d, n});
}

unsigned jobs() {
    unsigned h = std::thread::hardware_concurrency();
    return h == 0 ? 1 : h;
}

} // namespace

int main() {
    FingerprintCache cache("acceptance_cache.tsv");

    criterion(1, "five-dimensional pair with group order 11", [&](std::string& why) {
        LensParams a = validate_lens(5, 11, {1, 2, 3});
        LensParams b = validate_lens(5, 11, {1, 2, 4});
        SpectrumFingerprint fa = fingerprint(group_from_lens(a));
        SpectrumFingerprint fb = fingerprint(group_from_lens(b));
        reg(fa, 5, 11);
        reg(fb, 5, 11);
        if (fa.trunc != 68) { why = "truncation bound is not 68"; return false; }
        if (!is_isospectral(fa, fb)) { why = "fingerprints differ"; return false; }
        if (is_isometric(a, b)) { why = "parameters are unit equivalent"; return false; }
        return true;
    });

    criterion(2, "order-11 pair table across dimensions", [&](std::string& why) {
        const std::vector<unsigned> expect{3, 7, 8, 11, 12, 13};
        for (unsigned n = 3; n <= 14; ++n) {
            PairReport rep = find_isospectral_pairs(11, n, &cache, nullptr, jobs());
            bool want = std::find(expect.begin(), expect.end(), n) != expect.end();
            bool have = !rep.groups.empty();
            if (want != have) {
                why = "n=" + std::to_string(n) + (have ? " has unexpected pairs" : " has no pair");
                return false;
            }
            for (const auto& group : rep.groups)
                for (const std::string& key : group) {
                    auto l = std::get<LensParams>(parse_spec(key));
                    const SpectrumFingerprint* f = cache.lookup(key, default_trunc(11, l.d));
                    if (f) reg(*f, l.d, 11);
                }
        }
        return true;
    });

    criterion(3, "rigidity for group orders up to 10", [&](std::string& why) {
        SweepReport rep = rigidity_sweep(10, 12, &cache, nullptr, jobs());
        if (!rep.cells.empty()) {
            why = "q=" + std::to_string(rep.cells[0].q) + ", n=" + std::to_string(rep.cells[0].n) +
                  " produced a pair";
            return false;
        }
        // sample the small cells into the recovery registry
        for (unsigned q = 2; q <= 10; ++q)
            for (unsigned n = 1; n <= 3; ++n)
                for (const CanonicalLens& c : enumerate_lens_classes(q, n)) {
                    const SpectrumFingerprint* f =
                        cache.lookup(to_string(c.params), default_trunc(q, c.params.d));
                    if (f) reg(*f, c.params.d, q);
                }
        return true;
    });

    // shared by criteria 4 and 5
    std::vector<std::pair<SmallGroupClass, SpectrumFingerprint>> orb;

    criterion(4, "orbifold rigidity for orders up to 7, d = 2..9", [&](std::string& why) {
        for (unsigned d = 2; d <= 9; ++d) {
            std::vector<std::pair<SmallGroupClass, SpectrumFingerprint>> here;
            unsigned trunc = default_trunc(7, d);
            for (const SmallGroupClass& c : enumerate_classes(d, 7)) {
                SpectrumFingerprint f = fingerprint(class_to_group(c), trunc);
                reg(f, d, c.order);
                here.emplace_back(c, f);
            }
            for (size_t i = 0; i < here.size(); ++i)
                for (size_t j = i + 1; j < here.size(); ++j)
                    if (is_isospectral(here[i].second, here[j].second)) {
                        why = to_string(here[i].first) + " and " + to_string(here[j].first) +
                              " collide";
                        return false;
                    }
            orb.insert(orb.end(), here.begin(), here.end());
        }
        return true;
    });

    criterion(5, "pole dichotomies at orders 4 and 6", [&](std::string& why) {
        for (const auto& [c, f] : orb) {
            if (c.order == 4) {
                bool pole = pole_order_at(f, 1, 4) > 0;
                if (pole != (c.kind == GroupKind::cyclic)) {
                    why = to_string(c) + " breaks the order-4 dichotomy";
                    return false;
                }
            } else if (c.order == 6) {
                // cyclic classes without a primitive 6th-root eigenvalue on
                // the generator provably have no pole either; everything
                // cyclic that the dichotomy covers does
                bool pole = pole_order_at(f, 1, 6) > 0;
                bool expect = c.kind == GroupKind::cyclic && c.mult[1] > 0;
                if (pole != expect) {
                    why = to_string(c) + " breaks the order-6 dichotomy";
                    return false;
                }
            }
        }
        return orb.empty() ? (why = "no classes enumerated", false) : true;
    });

    criterion(6, "twisted quotient separation for Q16 and P20", [&](std::string& why) {
        for (FpfName name : {FpfName::Q16, FpfName::P20}) {
            for (unsigned m = 1; m <= 4; ++m) {
                ErrataReport rep = verify_errata_lemma(name, m);
                if (!rep.all_distinct) {
                    why = to_string(name) + " m=" + std::to_string(m) + " classes collide";
                    return false;
                }
                for (const auto& [h, ord] : rep.pole_orders)
                    if (ord != 2 * (m - h)) {
                        why = to_string(name) + " m=" + std::to_string(m) +
                              " h=" + std::to_string(h) + " pole order " + std::to_string(ord);
                        return false;
                    }
                for (unsigned h = 0; h <= m / 2; ++h)
                    reg(fingerprint(roster({name, m, h})), 4 * m - 1, fpf_order(name));
            }
        }
        return true;
    });

    criterion(7, "pair extension to dimensions 15 and 25", [&](std::string& why) {
        LensParams a = validate_lens(5, 11, {1, 2, 3});
        LensParams b = validate_lens(5, 11, {1, 2, 4});
        for (unsigned r : {1u, 2u}) {
            LensParams ea = extend_lens(a, r);
            LensParams eb = extend_lens(b, r);
            unsigned want_d = r == 1 ? 15 : 25;
            if (ea.d != want_d || eb.d != want_d) {
                why = "extension r=" + std::to_string(r) + " has wrong dimension";
                return false;
            }
            SpectrumFingerprint fa = fingerprint(group_from_lens(ea));
            SpectrumFingerprint fb = fingerprint(group_from_lens(eb));
            reg(fa, want_d, 11);
            reg(fb, want_d, 11);
            if (!is_isospectral(fa, fb)) {
                why = "extended pair r=" + std::to_string(r) + " is not isospectral";
                return false;
            }
            if (is_isometric(ea, eb)) {
                why = "extended pair r=" + std::to_string(r) + " is isometric";
                return false;
            }
            for (unsigned k : {1u, 11u})
                if (!fk_divisor_identity(a, r, k) || !fk_divisor_identity(b, r, k)) {
                    why = "divisor identity fails at k=" + std::to_string(k);
                    return false;
                }
        }
        return true;
    });

    criterion(8, "combinatorial oracle equivalence (200 random draws)", [&](std::string& why) {
        std::mt19937 rng(20240811);
        std::uniform_int_distribution<unsigned> pick_q(2, 13);
        std::uniform_int_distribution<unsigned> pick_n(1, 4);
        std::uniform_int_distribution<unsigned> parity(0, 1);
        for (int trial = 0; trial < 200; ++trial) {
            unsigned q = pick_q(rng);
            unsigned n = pick_n(rng);
            std::uniform_int_distribution<long> pick_s(0, static_cast<long>(q));
            std::vector<long> s{1};
            for (unsigned j = 1; j < n; ++j) s.push_back(pick_s(rng));
            unsigned d = 2 * n - 1 + parity(rng);
            LensParams l = validate_lens(d, q, s);
            unsigned k_max = 40;
            // fingerprint() itself cross-checks the series and numerator paths
            SpectrumFingerprint f =
                fingerprint(group_from_lens(l), std::max(k_max, default_trunc(q, d)));
            std::vector<BigInt> dims = oracle_dims(l, k_max);
            for (unsigned k = 0; k <= k_max; ++k)
                if (f.coeffs[k] != dims[k]) {
                    why = "mismatch at " + to_string(l) + ", k=" + std::to_string(k);
                    return false;
                }
        }
        return true;
    });

    criterion(9, "dimension and order recovery", [&](std::string& why) {
        if (registry.empty()) { why = "nothing registered"; return false; }
        for (const Registered& r : registry) {
            auto [d, n] = recover_dimension_and_order(r.fp);
            if (d != r.d || n != r.n) {
                why = "recovered (" + std::to_string(d) + "," + std::to_string(n) +
                      "), expected (" + std::to_string(r.d) + "," + std::to_string(r.n) + ")";
                return false;
            }
        }
        why = std::to_string(registry.size()) + " fingerprints";
        return true;
    });

    criterion(10, "totient-6 separation gadgets", [&](std::string& why) {
        for (unsigned q : {7u, 9u, 14u, 18u}) {
            for (unsigned n = 3; n <= 8; ++n) {
                for (unsigned n1 = (n + 2) / 3; n1 <= n; ++n1) {
                    // the tied branch partner (n1, n1, n - 2n1), when admissible
                    bool have_ii = (n >= 2 * n1) && (n - 2 * n1 < n1);
                    CycloElem p1_ii;
                    if (have_ii) {
                        Phi6Data dat = phi6_gadget(q, n1, n1, n - 2 * n1);
                        p1_ii = dat.p_at_one;
                        if (sign_of_real(p1_ii) != 1) {
                            why = "branch-ii value not positive";
                            return false;
                        }
                    }
                    if (3 * n1 == n) {
                        Phi6Data dat = phi6_gadget(q, n1, n1, n1);
                        if (dat.p.degree() != 0 ||
                            dat.p.c[0].rational_value() != BigRational(3)) {
                            why = "equal-exponent branch is not the constant 3";
                            return false;
                        }
                    }
                    CycloElem prev;
                    bool have_prev = false;
                    for (unsigned n2 = 0; n1 + n2 <= n; ++n2) {
                        unsigned n3 = n - n1 - n2;
                        if (n2 >= n1 || n3 >= n1) continue;
                        Phi6Data dat = phi6_gadget(q, n1, n2, n3);
                        if (have_ii && compare_real(dat.p_at_one, p1_ii) != -1) {
                            why = "branches i and ii not separated at q=" + std::to_string(q);
                            return false;
                        }
                        if (have_prev && compare_real(dat.abs2_at_xi, prev) != 1) {
                            why = "gadget modulus not strictly increasing at q=" +
                                  std::to_string(q);
                            return false;
                        }
                        prev = dat.abs2_at_xi;
                        have_prev = true;
                    }
                }
            }
        }
        return true;
    });

    if (failures) {
        std::cout << failures << " criteria failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
