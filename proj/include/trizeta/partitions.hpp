#pragma once

#include <cstdint>
#include <vector>

#include "trizeta/errors.hpp"

namespace trizeta {

// Weakly decreasing sequence of nonnegative integers.  The empty partition is
// allowed and represents 0.
struct Partition {
    std::vector<std::int64_t> parts;

    Partition() = default;
    explicit Partition(std::vector<std::int64_t> p) : parts(std::move(p)) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 0) throw DomainError("Partition: negative part");
            if (i && parts[i] > parts[i - 1]) throw DomainError("Partition: parts must weakly decrease");
        }
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
    }

    std::int64_t weight() const {
        std::int64_t s = 0;
        for (auto p : parts) s += p;
        return s;
    }

    std::size_t length() const { return parts.size(); }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
};

namespace detail {

inline void emit_partitions(std::int64_t remaining, std::int64_t max_part, std::size_t slots,
                            std::vector<std::int64_t>& stack, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(Partition{std::vector<std::int64_t>(stack)});
        return;
    }
    if (slots == 0) return;
    for (std::int64_t p = std::min(remaining, max_part); p >= 1; --p) {
        stack.push_back(p);
        emit_partitions(remaining - p, p, slots - 1, stack, out);
        stack.pop_back();
    }
}

}  // namespace detail

// Partitions of exactly n with at most max_length parts, lexicographically
// descending ((3) before (2,1) before (1,1,1)).
inline std::vector<Partition> partitions_of(std::int64_t n, std::size_t max_length) {
    if (n < 0) return {};
    std::vector<Partition> out;
    std::vector<std::int64_t> stack;
    detail::emit_partitions(n, n == 0 ? 1 : n, max_length, stack, out);
    return out;
}

// All partitions with |lambda| <= total and at most max_length parts, each
// exactly once, graded lexicographically: ascending weight, then descending
// lex within a weight.
inline std::vector<Partition> partitions_up_to(std::int64_t total, std::size_t max_length) {
    std::vector<Partition> out;
    for (std::int64_t n = 0; n <= total; ++n) {
        auto grade = partitions_of(n, max_length);
        out.insert(out.end(), grade.begin(), grade.end());
    }
    return out;
}

}  // namespace trizeta
