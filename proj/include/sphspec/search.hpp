#ifndef SPHSPEC_SEARCH_HPP
#define SPHSPEC_SEARCH_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sphspec/lens.hpp"
#include "sphspec/molien.hpp"

namespace sphspec {

/// Budget measured in series coefficients computed (cache hits are free).
/// max_coeffs = 0 disables the cap. charge() throws BudgetExceeded.
struct SearchBudget {
    std::uint64_t max_coeffs = 0;
    std::uint64_t used = 0;
    void charge(std::uint64_t coeffs);
};

/// Line-oriented persistent fingerprint store. Each line holds one record:
///   <canonical spec>\t<serialized fingerprint>
/// The whole file is loaded up front; corrupt lines are skipped with a
/// warning on stderr and recomputed on demand. An empty path disables
/// persistence (pure in-memory memoization).
class FingerprintCache {
  public:
    explicit FingerprintCache(std::string path);

    /// nullptr when absent or stored at a different truncation
    const SpectrumFingerprint* lookup(const std::string& key, unsigned trunc) const;
    void store(const std::string& key, const SpectrumFingerprint& f);

    std::size_t size() const { return mem_.size(); }

  private:
    std::string path_;
    std::map<std::string, SpectrumFingerprint> mem_;
};

struct SearchRecord {
    CanonicalLens lens;
    std::string canonical_key;
    SpectrumFingerprint fp;
    bool from_cache = false;
};

/// Isospectral classes found in one (q, n) cell: each group lists the
/// canonical forms (>= 2 of them) sharing one fingerprint.
struct PairReport {
    unsigned q = 0;
    unsigned n = 0;
    unsigned classes = 0;
    std::vector<std::vector<std::string>> groups;
};

/// One representative per isometry class of (2n-1)-dimensional lens spaces
/// with fundamental group of order q, sorted by canonical form.
std::vector<CanonicalLens> enumerate_lens_classes(unsigned q, unsigned n);

/// Fingerprints every class at the sufficiency bound, groups exactly equal
/// fingerprints, and re-verifies every reported group against the
/// combinatorial oracle on the first 40 coefficients.
PairReport find_isospectral_pairs(unsigned q, unsigned n, FingerprintCache* cache = nullptr,
                                  SearchBudget* budget = nullptr, unsigned jobs = 1);

struct SweepReport {
    unsigned q_max = 0;
    unsigned n_max = 0;
    std::vector<PairReport> cells; // only cells that produced groups
    std::uint64_t coefficients_computed = 0;
};

/// Runs find_isospectral_pairs over all 2 <= q <= q_max, 1 <= n <= n_max.
SweepReport rigidity_sweep(unsigned q_max, unsigned n_max, FingerprintCache* cache = nullptr,
                           SearchBudget* budget = nullptr, unsigned jobs = 1);

} // namespace sphspec

#endif
