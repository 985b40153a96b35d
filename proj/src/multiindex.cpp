#include "hombracket/multiindex.hpp"

#include <algorithm>

namespace hombracket {

std::vector<MultiIndex> increasing_tuples(int dim, int k) {
    std::vector<MultiIndex> out;
    if (k < 0 || k > dim)
        return out;
    MultiIndex cur(k);
    for (int i = 0; i < k; ++i)
        cur[i] = i;
    while (true) {
        out.push_back(cur);
        if (k == 0)
            break;
        // advance to the next combination
        int pos = k - 1;
        while (pos >= 0 && cur[pos] == dim - k + pos)
            --pos;
        if (pos < 0)
            break;
        ++cur[pos];
        for (int i = pos + 1; i < k; ++i)
            cur[i] = cur[i - 1] + 1;
    }
    return out;
}

std::optional<std::pair<MultiIndex, int>> sort_with_sign(std::vector<int> word) {
    int sign = 1;
    // insertion sort, counting swaps
    for (size_t i = 1; i < word.size(); ++i) {
        int v = word[i];
        size_t j = i;
        while (j > 0 && word[j - 1] > v) {
            word[j] = word[j - 1];
            sign = -sign;
            --j;
        }
        word[j] = v;
    }
    for (size_t i = 1; i < word.size(); ++i)
        if (word[i] == word[i - 1])
            return std::nullopt;
    return std::make_pair(std::move(word), sign);
}

std::optional<std::pair<MultiIndex, int>> merge_with_sign(const MultiIndex& a,
                                                          const MultiIndex& b) {
    MultiIndex merged;
    merged.reserve(a.size() + b.size());
    int sign = 1;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j])
            return std::nullopt;
        if (a[i] < b[j]) {
            merged.push_back(a[i++]);
        } else {
            // b[j] crosses over the remaining entries of a
            if ((a.size() - i) % 2 != 0)
                sign = -sign;
            merged.push_back(b[j++]);
        }
    }
    while (i < a.size())
        merged.push_back(a[i++]);
    while (j < b.size())
        merged.push_back(b[j++]);
    return std::make_pair(std::move(merged), sign);
}

MultiIndex erase_at(const MultiIndex& t, int pos) {
    MultiIndex out;
    out.reserve(t.size() - 1);
    for (int i = 0; i < static_cast<int>(t.size()); ++i)
        if (i != pos)
            out.push_back(t[i]);
    return out;
}

std::vector<Unshuffle> unshuffles(int first_block, int second_block) {
    const int m = first_block + second_block;
    std::vector<Unshuffle> out;
    if (first_block < 0 || second_block < 0)
        return out;
    for (const MultiIndex& first : increasing_tuples(m, first_block)) {
        Unshuffle u;
        u.perm = first;
        std::vector<bool> used(m, false);
        for (int v : first)
            used[v] = true;
        for (int v = 0; v < m; ++v)
            if (!used[v])
                u.perm.push_back(v);
        // parity: inversions occur only across the two blocks
        int inv = 0;
        for (int x : first)
            for (int v = first_block; v < m; ++v)
                if (x > u.perm[v])
                    ++inv;
        u.sign = (inv % 2 == 0) ? 1 : -1;
        out.push_back(std::move(u));
    }
    return out;
}

} // namespace hombracket
