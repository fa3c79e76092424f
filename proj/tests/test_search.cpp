#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>

#include "sphspec/errors.hpp"
#include "sphspec/search.hpp"

using namespace sphspec;

namespace {

// reference count: orbits of n-multisets over the folded units under the
// unit action
unsigned brute_class_count(unsigned q, unsigned n) {
    std::vector<unsigned> base = unit_base(q);
    std::set<std::vector<unsigned>> minima;
    std::vector<long> s(n);
    auto rec = [&](auto&& self, unsigned pos, unsigned min_idx) -> void {
        if (pos == n) {
            minima.insert(canonicalize(validate_lens(2 * n - 1, q, s)).params.s);
            return;
        }
        for (unsigned i = min_idx; i < base.size(); ++i) {
            s[pos] = base[i];
            self(self, pos + 1, i);
        }
    };
    rec(rec, 0, 0);
    return static_cast<unsigned>(minima.size());
}

} // namespace

TEST_CASE("class enumeration") {
    for (unsigned n = 1; n <= 4; ++n) {
        CHECK(enumerate_lens_classes(3, n).size() == 1);
        CHECK(enumerate_lens_classes(2, n).size() == 1);
        CHECK(enumerate_lens_classes(4, n).size() == 1);
    }
    for (unsigned q : {5u, 7u, 11u})
        for (unsigned n = 1; n <= 3; ++n)
            CHECK(enumerate_lens_classes(q, n).size() == brute_class_count(q, n));
    // classes come back sorted and deduplicated
    auto cls = enumerate_lens_classes(11, 3);
    for (size_t i = 1; i < cls.size(); ++i) CHECK(cls[i - 1] < cls[i]);
}

TEST_CASE("the five-dimensional pair with group order 11") {
    PairReport rep = find_isospectral_pairs(11, 3);
    CHECK(rep.q == 11);
    CHECK(rep.n == 3);
    REQUIRE(rep.groups.size() == 1);
    REQUIRE(rep.groups[0].size() == 2);
    std::string a = to_string(canonicalize(validate_lens(5, 11, {1, 2, 3})).params);
    std::string b = to_string(canonicalize(validate_lens(5, 11, {1, 2, 4})).params);
    CHECK(((rep.groups[0][0] == a && rep.groups[0][1] == b) ||
           (rep.groups[0][0] == b && rep.groups[0][1] == a)));
}

TEST_CASE("nearby cells are rigid") {
    CHECK(find_isospectral_pairs(11, 4).groups.empty());
    CHECK(find_isospectral_pairs(7, 5).groups.empty());
    CHECK(find_isospectral_pairs(11, 2).groups.empty());
}

TEST_CASE("sweep over small orders") {
    SweepReport rep = rigidity_sweep(8, 4);
    CHECK(rep.cells.empty());
}

TEST_CASE("parallel run matches sequential") {
    PairReport seq = find_isospectral_pairs(11, 3, nullptr, nullptr, 1);
    PairReport par = find_isospectral_pairs(11, 3, nullptr, nullptr, 4);
    CHECK(seq.groups == par.groups);
    CHECK(seq.classes == par.classes);
}

TEST_CASE("cache round trip and corrupt line handling") {
    const char* path = "sphspec_test_cache.tsv";
    std::remove(path);
    {
        FingerprintCache cache(path);
        CHECK(cache.size() == 0);
        PairReport rep = find_isospectral_pairs(11, 3, &cache);
        CHECK(rep.groups.size() == 1);
        CHECK(cache.size() == rep.classes);
    }
    // append one corrupt record, then reload
    {
        std::ofstream out(path, std::ios::app);
        out << "L(99;1)\tnot a fingerprint\n";
        out << "no separator here\n";
    }
    {
        FingerprintCache cache(path);
        PairReport rep = find_isospectral_pairs(11, 3, &cache);
        CHECK(rep.groups.size() == 1);
        // everything was served from the cache: no budget spent
        SearchBudget tight{1, 0};
        PairReport again = find_isospectral_pairs(11, 3, &cache, &tight);
        CHECK(again.groups == rep.groups);
        CHECK(tight.used == 0);
    }
    std::remove(path);
}

TEST_CASE("budget enforcement") {
    SearchBudget b{10, 0};
    CHECK_THROWS_AS(find_isospectral_pairs(11, 3, nullptr, &b), BudgetExceeded);
    SearchBudget roomy{10'000'000, 0};
    PairReport rep = find_isospectral_pairs(11, 3, nullptr, &roomy);
    CHECK(rep.groups.size() == 1);
    CHECK(roomy.used == static_cast<std::uint64_t>(rep.classes) * (default_trunc(11, 5) + 1));
}

TEST_CASE("determinism") {
    PairReport a = find_isospectral_pairs(11, 3);
    PairReport b = find_isospectral_pairs(11, 3);
    CHECK(a.groups == b.groups);
}
