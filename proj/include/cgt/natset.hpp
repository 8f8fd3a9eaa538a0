#ifndef CGT_NATSET_HPP
#define CGT_NATSET_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace cgt {

/// A finite set of non-negative 64-bit integers, stored strictly sorted.
class NatSet {
public:
    NatSet() = default;
    NatSet(std::initializer_list<std::uint64_t> xs);

    /// Builds a set from arbitrary values; sorts and drops duplicates.
    static NatSet from_values(std::vector<std::uint64_t> xs);

    /// {0, 1, ..., n-1}
    static NatSet range(std::uint64_t n);

    bool contains(std::uint64_t x) const;
    bool empty() const { return elems_.empty(); }
    std::size_t size() const { return elems_.size(); }
    const std::vector<std::uint64_t>& values() const { return elems_; }

    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    bool operator==(const NatSet&) const = default;

private:
    std::vector<std::uint64_t> elems_;
};

/// Smallest non-negative integer not in the set.
std::uint64_t mex(const NatSet& a);

/// A : B = A together with the B-indexed elements of A's complement,
/// the complement enumerated in ascending order.
NatSet colon(const NatSet& a, const NatSet& b);

/// {v ^ x | v in a}
NatSet xor_translate(const NatSet& a, std::uint64_t x);

/// {v + x | v in a}; throws std::overflow_error instead of wrapping.
NatSet add_translate(const NatSet& a, std::uint64_t x);

NatSet set_union(const NatSet& a, const NatSet& b);

std::string to_string(const NatSet& a);

}  // namespace cgt

#endif
