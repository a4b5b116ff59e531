#include "hurwitz/partition.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hurwitz {

namespace {

// Fills multiplicities for sizes i..n with `remaining` still to distribute. Trying j_i
// in increasing order yields lexicographic output. A branch is only entered if some
// size > i can absorb the remainder, so every branch reaches a leaf.
void enumerate_from(unsigned i, unsigned remaining, std::vector<unsigned>& current, std::vector<Partition>& out) {
    const auto n = static_cast<unsigned>(current.size());
    if (remaining == 0) {
        out.push_back(Partition{current});
        return;
    }
    if (i > n)
        return;
    for (unsigned j = 0; j * i <= remaining; ++j) {
        const unsigned rest = remaining - j * i;
        if (rest != 0 && rest <= i)
            continue;
        current[i - 1] = j;
        enumerate_from(i + 1, rest, current, out);
    }
    current[i - 1] = 0;
}

std::vector<Partition> all_partitions(unsigned n) {
    std::vector<Partition> out;
    std::vector<unsigned> current(n, 0);
    enumerate_from(1, n, current, out);
    return out;
}

} // namespace

unsigned Partition::length() const { return std::accumulate(multiplicities.begin(), multiplicities.end(), 0U); }

std::vector<Partition> enumerate_partitions(unsigned n, std::optional<unsigned> parts) {
    if (n == 0)
        throw std::domain_error("partitions of 0 are not enumerated; n must be >= 1");
    if (parts && (*parts < 1 || *parts > n))
        throw std::domain_error("parts must lie in [1, " + std::to_string(n) + "]");
    std::vector<Partition> out;
    for (const auto& term : detail::bell_terms(n))
        if (!parts || term.length == *parts)
            out.push_back(term.partition);
    return out;
}

Integer set_partition_count(const Partition& p) {
    Integer denominator = 1;
    for (unsigned i = 1; i <= p.n(); ++i) {
        const unsigned j = p.multiplicities[i - 1];
        if (j == 0)
            continue;
        Integer block;
        mpz_pow_ui(block.get_mpz_t(), factorial(i).get_mpz_t(), j);
        denominator *= factorial(j) * block;
    }
    Integer result;
    mpz_divexact(result.get_mpz_t(), factorial(p.n()).get_mpz_t(), denominator.get_mpz_t());
    return result;
}

namespace detail {

const std::vector<BellTerm>& bell_terms(unsigned n) {
    static std::mutex mutex;
    static std::map<unsigned, std::unique_ptr<const std::vector<BellTerm>>> cache;

    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) {
        auto terms = std::make_unique<std::vector<BellTerm>>();
        for (auto& p : all_partitions(n)) {
            const unsigned length = p.length();
            Integer coefficient = set_partition_count(p);
            terms->push_back(BellTerm{std::move(p), length, std::move(coefficient)});
        }
        slot = std::move(terms);
    }
    return *slot;
}

} // namespace detail

} // namespace hurwitz
