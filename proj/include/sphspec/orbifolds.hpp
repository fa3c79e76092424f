#ifndef SPHSPEC_ORBIFOLDS_HPP
#define SPHSPEC_ORBIFOLDS_HPP

#include <string>
#include <vector>

#include "sphspec/molien.hpp"

namespace sphspec {

enum class GroupKind { cyclic, klein_four, sym3 };

/// Conjugacy class of a subgroup of O(d+1) of order at most 7, given by
/// eigenvalue multiplicity data (a complete conjugacy invariant here).
///   cyclic:     mult[e] = multiplicity of the xi_N^{+-e} eigenvalue pair of a
///               fixed generator, e = 0..floor(N/2); canonical means the
///               vector is the lexicographic minimum over the unit action.
///   klein_four: mult = (m1' >= m2' >= m3'), the -1 multiplicities of the
///               three involutions.
///   sym3:       mult = (m1', m2'), sign and standard representation counts.
struct SmallGroupClass {
    unsigned order = 1;
    GroupKind kind = GroupKind::cyclic;
    unsigned d = 1;
    std::vector<unsigned> mult;

    bool operator==(const SmallGroupClass& o) const {
        return order == o.order && kind == o.kind && d == o.d && mult == o.mult;
    }
    bool operator<(const SmallGroupClass& o) const;
};

std::string to_string(const SmallGroupClass& c);

/// All conjugacy classes of subgroups of O(d+1) of order <= n_max, duplicate
/// free and canonical. Throws UnsupportedOrder for n_max > 7.
std::vector<SmallGroupClass> enumerate_classes(unsigned d, unsigned n_max);

/// Explicit eigenvalue roster of the class.
GroupModel class_to_group(const SmallGroupClass& c);

struct RigidityReport {
    unsigned d = 0;
    unsigned n_max = 0;
    std::vector<unsigned> count_by_order; // index 0 unused, 1..n_max
    unsigned total = 0;
    unsigned trunc = 0;
};

/// Fingerprints every class of order <= n_max and checks that no two distinct
/// classes agree; throws RigidityViolation naming the offending pair.
RigidityReport verify_rigidity(unsigned d, unsigned n_max);

} // namespace sphspec

#endif
