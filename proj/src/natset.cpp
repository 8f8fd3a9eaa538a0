#include "cgt/natset.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cgt {

NatSet::NatSet(std::initializer_list<std::uint64_t> xs)
    : elems_(xs) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

NatSet NatSet::from_values(std::vector<std::uint64_t> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    NatSet s;
    s.elems_ = std::move(xs);
    return s;
}

NatSet NatSet::range(std::uint64_t n) {
    NatSet s;
    s.elems_.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) s.elems_.push_back(i);
    return s;
}

bool NatSet::contains(std::uint64_t x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

std::uint64_t mex(const NatSet& a) {
    std::uint64_t m = 0;
    for (std::uint64_t v : a.values()) {
        if (v == m) {
            ++m;
        } else if (v > m) {
            break;
        }
    }
    return m;
}

NatSet colon(const NatSet& a, const NatSet& b) {
    if (b.empty()) return a;
    // Walk the complement of `a` in ascending order, picking out the
    // elements whose index lies in `b`.  Only the first max(b)+1
    // complement elements are ever visited.
    const std::uint64_t max_index = b.values().back();
    std::vector<std::uint64_t> out(a.values());
    std::uint64_t candidate = 0;
    std::uint64_t comp_index = 0;
    std::size_t a_pos = 0;
    const auto& av = a.values();
    while (comp_index <= max_index) {
        if (a_pos < av.size() && av[a_pos] == candidate) {
            ++a_pos;
        } else {
            if (b.contains(comp_index)) out.push_back(candidate);
            ++comp_index;
        }
        ++candidate;
    }
    return NatSet::from_values(std::move(out));
}

NatSet xor_translate(const NatSet& a, std::uint64_t x) {
    std::vector<std::uint64_t> out;
    out.reserve(a.size());
    for (std::uint64_t v : a) out.push_back(v ^ x);
    return NatSet::from_values(std::move(out));
}

NatSet add_translate(const NatSet& a, std::uint64_t x) {
    std::vector<std::uint64_t> out;
    out.reserve(a.size());
    for (std::uint64_t v : a) {
        std::uint64_t s = v + x;
        if (s < v) throw std::overflow_error("add_translate: 64-bit overflow");
        out.push_back(s);
    }
    return NatSet::from_values(std::move(out));
}

NatSet set_union(const NatSet& a, const NatSet& b) {
    std::vector<std::uint64_t> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                   std::back_inserter(out));
    return NatSet::from_values(std::move(out));
}

std::string to_string(const NatSet& a) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (std::uint64_t v : a) {
        if (!first) os << ", ";
        os << v;
        first = false;
    }
    os << '}';
    return os.str();
}

}  // namespace cgt
