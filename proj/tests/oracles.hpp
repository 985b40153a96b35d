#pragma once

// Test-only reference implementations, written independently of the library
// code paths they check: the classical (untwisted) insertion product and the
// classical Chevalley-Eilenberg differential on the adjoint module.

#include "hombracket/cochain.hpp"

#include <vector>

namespace oracle {

using hombracket::Cochain;
using hombracket::MultiIndex;
using hombracket::Vec;

// sign of the permutation (word must be duplicate-free)
inline int perm_sign(const std::vector<int>& word) {
    int inv = 0;
    for (size_t i = 0; i < word.size(); ++i)
        for (size_t j = i + 1; j < word.size(); ++j)
            if (word[i] > word[j])
                ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

// classical insertion product (P o Q)(x_1..x_m): choose which arguments feed
// Q, keep everything else in order, no twisting anywhere
inline Cochain classical_compose(const Cochain& p, const Cochain& q) {
    const int n = p.dim();
    const int m = p.arity() + q.arity() - 1;
    if (p.arity() == 0 || m < 0)
        return Cochain(n, std::max(m, 0));
    Cochain out(n, m);
    for (const MultiIndex& t : hombracket::increasing_tuples(n, m)) {
        Vec acc(n);
        // enumerate subsets of positions of size q.arity() as the Q block
        for (const MultiIndex& block : hombracket::increasing_tuples(m, q.arity())) {
            std::vector<int> q_args, rest, word;
            std::vector<bool> used(static_cast<size_t>(m), false);
            for (int pos : block) {
                q_args.push_back(t[static_cast<size_t>(pos)]);
                used[static_cast<size_t>(pos)] = true;
                word.push_back(pos);
            }
            for (int pos = 0; pos < m; ++pos)
                if (!used[static_cast<size_t>(pos)]) {
                    rest.push_back(t[static_cast<size_t>(pos)]);
                    word.push_back(pos);
                }
            Vec qv = q.eval_basis(q_args);
            std::vector<Vec> p_args;
            p_args.push_back(qv);
            for (int r : rest)
                p_args.push_back(Vec::basis(n, r));
            Vec term = p.eval(p_args);
            if (perm_sign(word) < 0)
                term = -term;
            acc += term;
        }
        if (!acc.is_zero())
            out.set(t, acc);
    }
    return out;
}

// classical Chevalley-Eilenberg differential on the adjoint module:
// (df)(x_0..x_k) = sum_i (-1)^i [x_i, f(.. x_i ..)]
//                + sum_{i<j} (-1)^{i+j} f([x_i,x_j], .. x_i .. x_j ..)
inline Cochain classical_ce(const Cochain& f, const Cochain& mu) {
    const int n = f.dim();
    const int k = f.arity();
    Cochain out(n, k + 1);
    for (const MultiIndex& t : hombracket::increasing_tuples(n, k + 1)) {
        Vec acc(n);
        for (int i = 0; i <= k; ++i) {
            std::vector<int> rest;
            for (int j = 0; j <= k; ++j)
                if (j != i)
                    rest.push_back(t[static_cast<size_t>(j)]);
            Vec inner = f.eval_basis(rest);
            Vec term = mu.eval({Vec::basis(n, t[static_cast<size_t>(i)]), inner});
            if (i % 2 != 0)
                term = -term;
            acc += term;
        }
        for (int i = 0; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j) {
                Vec br = mu.eval_basis({t[static_cast<size_t>(i)], t[static_cast<size_t>(j)]});
                std::vector<Vec> args;
                args.push_back(br);
                for (int s = 0; s <= k; ++s)
                    if (s != i && s != j)
                        args.push_back(Vec::basis(n, t[static_cast<size_t>(s)]));
                Vec term = f.eval(args);
                if ((i + j) % 2 != 0)
                    term = -term;
                acc += term;
            }
        if (!acc.is_zero())
            out.set(t, acc);
    }
    return out;
}

} // namespace oracle
