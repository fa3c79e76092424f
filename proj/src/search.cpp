#include "sphspec/search.hpp"

#include <atomic>
#include <fstream>
#include <iostream>
#include <set>
#include <thread>

#include "sphspec/cyclotomic.hpp"
#include "sphspec/errors.hpp"

namespace sphspec {

void SearchBudget::charge(std::uint64_t coeffs) {
    used += coeffs;
    if (max_coeffs != 0 && used > max_coeffs)
        throw BudgetExceeded("coefficient budget exhausted: " + std::to_string(used) + " > " +
                             std::to_string(max_coeffs));
}

FingerprintCache::FingerprintCache(std::string path) : path_(std::move(path)) {
    if (path_.empty()) return;
    std::ifstream in(path_);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::size_t tab = line.find('\t');
        try {
            if (tab == std::string::npos) throw ParseError("missing separator", 0);
            SpectrumFingerprint f = deserialize_fingerprint(line.substr(tab + 1));
            mem_[line.substr(0, tab) + "|K=" + std::to_string(f.trunc)] = std::move(f);
        } catch (const Error& e) {
            std::cerr << "cache: skipping corrupt line " << lineno << " (" << e.what() << ")\n";
        }
    }
}

const SpectrumFingerprint* FingerprintCache::lookup(const std::string& key, unsigned trunc) const {
    auto it = mem_.find(key + "|K=" + std::to_string(trunc));
    return it == mem_.end() ? nullptr : &it->second;
}

void FingerprintCache::store(const std::string& key, const SpectrumFingerprint& f) {
    mem_[key + "|K=" + std::to_string(f.trunc)] = f;
    if (path_.empty()) return;
    std::ofstream out(path_, std::ios::app);
    out << key << '\t' << serialize(f) << '\n';
}

std::vector<CanonicalLens> enumerate_lens_classes(unsigned q, unsigned n) {
    if (q < 2 || n < 1) throw InternalInconsistency("need q >= 2 and n >= 1");
    std::vector<unsigned> base = unit_base(q);
    std::set<CanonicalLens> classes;
    std::vector<long> s(n);
    // nondecreasing index vectors = n-multisets over the unit base
    auto rec = [&](auto&& self, unsigned pos, unsigned min_idx) -> void {
        if (pos == n) {
            classes.insert(canonicalize(validate_lens(2 * n - 1, q, s)));
            return;
        }
        for (unsigned i = min_idx; i < base.size(); ++i) {
            s[pos] = base[i];
            self(self, pos + 1, i);
        }
    };
    rec(rec, 0, 0);
    return {classes.begin(), classes.end()};
}

PairReport find_isospectral_pairs(unsigned q, unsigned n, FingerprintCache* cache,
                                  SearchBudget* budget, unsigned jobs) {
    PairReport rep;
    rep.q = q;
    rep.n = n;
    const unsigned d = 2 * n - 1;
    const unsigned k_need = default_trunc(q, d);

    std::vector<CanonicalLens> classes = enumerate_lens_classes(q, n);
    rep.classes = static_cast<unsigned>(classes.size());
    std::vector<SearchRecord> recs(classes.size());
    std::vector<std::size_t> to_compute;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        recs[i].lens = classes[i];
        recs[i].canonical_key = to_string(classes[i].params);
        const SpectrumFingerprint* hit =
            cache ? cache->lookup(recs[i].canonical_key, k_need) : nullptr;
        if (hit) {
            recs[i].fp = *hit;
            recs[i].from_cache = true;
        } else {
            if (budget) budget->charge(k_need + 1);
            to_compute.push_back(i);
        }
    }

    if (!to_compute.empty()) {
        cyclotomic_poly(q); // warm the shared table before any worker starts
        auto work = [&](std::size_t i) {
            recs[i].fp = fingerprint(group_from_lens(recs[i].lens.params), k_need);
        };
        if (jobs <= 1 || to_compute.size() < 2) {
            for (std::size_t i : to_compute) work(i);
        } else {
            std::atomic<std::size_t> next{0};
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < jobs; ++t)
                pool.emplace_back([&] {
                    for (std::size_t j; (j = next.fetch_add(1)) < to_compute.size();)
                        work(to_compute[j]);
                });
            for (auto& th : pool) th.join();
        }
        if (cache)
            for (std::size_t i : to_compute) cache->store(recs[i].canonical_key, recs[i].fp);
    }

    // group by exact numerator; records are already in canonical order
    std::map<std::vector<BigInt>, std::vector<std::size_t>> by_num;
    for (std::size_t i = 0; i < recs.size(); ++i) by_num[recs[i].fp.numerator].push_back(i);
    for (const auto& [numerator, members] : by_num) {
        if (members.size() < 2) continue;
        std::vector<std::string> keys;
        for (std::size_t i : members) {
            // independent second pass: combinatorial count of the first
            // coefficients must match the fingerprint
            const SearchRecord& r = recs[i];
            unsigned probe = std::min(40u, r.fp.trunc);
            std::vector<BigInt> dims = oracle_dims(r.lens.params, probe);
            for (unsigned k = 0; k <= probe; ++k)
                if (dims[k] != r.fp.coeffs[k])
                    throw InternalInconsistency("oracle disagrees with fingerprint for " +
                                                r.canonical_key);
            keys.push_back(r.canonical_key);
        }
        rep.groups.push_back(std::move(keys));
    }
    return rep;
}

SweepReport rigidity_sweep(unsigned q_max, unsigned n_max, FingerprintCache* cache,
                           SearchBudget* budget, unsigned jobs) {
    SweepReport rep;
    rep.q_max = q_max;
    rep.n_max = n_max;
    for (unsigned q = 2; q <= q_max; ++q)
        for (unsigned n = 1; n <= n_max; ++n) {
            PairReport cell = find_isospectral_pairs(q, n, cache, budget, jobs);
            if (!cell.groups.empty()) rep.cells.push_back(std::move(cell));
        }
    if (budget) rep.coefficients_computed = budget->used;
    return rep;
}

} // namespace sphspec
