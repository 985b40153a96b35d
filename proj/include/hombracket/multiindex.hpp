#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace hombracket {

// A strictly increasing tuple of 0-based basis indices. Used both to index
// basis monomials of exterior powers and argument tuples of alternating maps.
// File formats and report witnesses use 1-based indices; the conversion
// happens at those boundaries only.
using MultiIndex = std::vector<int>;

/// All strictly increasing k-tuples with entries in [0, dim), in
/// lexicographic order. k = 0 yields the single empty tuple; k > dim none.
std::vector<MultiIndex> increasing_tuples(int dim, int k);

/// Sorts an arbitrary index word into a strictly increasing tuple together
/// with the sign of the sorting permutation. Empty result when the word has
/// a repeated index.
std::optional<std::pair<MultiIndex, int>> sort_with_sign(std::vector<int> word);

/// Merges two strictly increasing tuples, counting crossings: the sign of
/// the permutation taking the concatenation (a, b) to sorted order, with
/// every entry treated as odd. Empty result on a common index.
std::optional<std::pair<MultiIndex, int>> merge_with_sign(const MultiIndex& a,
                                                          const MultiIndex& b);

/// Copy of `t` with the entry at position `pos` removed.
MultiIndex erase_at(const MultiIndex& t, int pos);

// A permutation of {0, .., m-1} increasing on the first block and on the
// rest, with its parity. These index the summands of insertion products.
struct Unshuffle {
    std::vector<int> perm;
    int sign = 1;
};

/// All (first_block, second_block)-unshuffles, enumerated in lexicographic
/// order of the first block. Exhaustive and duplicate-free.
std::vector<Unshuffle> unshuffles(int first_block, int second_block);

} // namespace hombracket
