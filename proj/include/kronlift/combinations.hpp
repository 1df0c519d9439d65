#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace kronlift {

/// Visit the k-subsets of {0..n-1} in lexicographic order until pred
/// returns true; returns the first accepted subset.
template <class Pred>
std::optional<std::vector<std::size_t>> first_combination(std::size_t n, std::size_t k,
                                                          Pred &&pred) {
    if (k > n)
        return std::nullopt;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    for (;;) {
        if (pred(static_cast<const std::vector<std::size_t> &>(idx)))
            return idx;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1))
            --i;
        if (i == 0)
            return std::nullopt;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

inline std::vector<std::size_t> complement_indices(std::size_t n,
                                                   const std::vector<std::size_t> &chosen) {
    std::vector<bool> in(n, false);
    for (auto i : chosen)
        in[i] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (!in[i])
            out.push_back(i);
    return out;
}

} // namespace kronlift
