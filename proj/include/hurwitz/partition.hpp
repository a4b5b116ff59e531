#pragma once

#include <optional>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Integer partition of n as a multiplicity vector: multiplicities[i-1] = j_i is the
/// number of parts equal to i, so that n = j_1 + 2 j_2 + ... + n j_n.
struct Partition {
    std::vector<unsigned> multiplicities;

    unsigned n() const { return static_cast<unsigned>(multiplicities.size()); }
    /// Number of parts, j_1 + ... + j_n.
    unsigned length() const;

    friend bool operator==(const Partition&, const Partition&) = default;
};

/// Every partition of n >= 1, each once, in increasing lexicographic order of the
/// multiplicity vectors. With `parts`, only those with exactly that many parts.
/// Throws std::domain_error for n == 0 or parts outside [1, n].
std::vector<Partition> enumerate_partitions(unsigned n, std::optional<unsigned> parts = std::nullopt);

/// n! / (j_1! ... j_n! (1!)^{j_1} ... (n!)^{j_n}): the number of set partitions of an
/// n-element set whose block sizes follow the partition. Always a positive integer.
Integer set_partition_count(const Partition& p);

namespace detail {

struct BellTerm {
    Partition partition;
    unsigned length;
    Integer coefficient;
};

// All partitions of n paired with their set_partition_count, same order as
// enumerate_partitions. Cached behind a mutex; the returned reference stays valid.
const std::vector<BellTerm>& bell_terms(unsigned n);

} // namespace detail

} // namespace hurwitz
