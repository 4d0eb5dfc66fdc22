#pragma once
// Slow reference computations used to cross-check the library. Each one takes a
// different route from the implementation it is compared against.

#include "fim/category.hpp"
#include "fim/linalg.hpp"
#include "fim/module.hpp"
#include "fim/symmetric.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace fim::oracle {

/// Position of the injection tuple in the list of all injections a -> b.
inline std::size_t position(const std::vector<Morphism>& all, const Morphism& f) {
    for (std::size_t k = 0; k < all.size(); ++k)
        if (all[k].maps == f.maps) return k;
    throw std::logic_error("oracle: morphism not enumerated");
}

/// Matrix of f : t -> t2 on M(n)(t) -> M(n)(t2) for trivial G: beta -> f o beta.
inline Matrix free_action(const ObjectIndex& n, const Morphism& f) {
    const auto src = enumerate_injections(n, f.source);
    const auto dst = enumerate_injections(n, f.target);
    Matrix out(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
        Morphism image = src[c];
        image.target = f.target;
        for (std::size_t i = 0; i < image.maps.size(); ++i)
            for (int& x : image.maps[i]) x = f.maps[i][static_cast<std::size_t>(x)];
        out(position(dst, image), c) = 1;
    }
    return out;
}

/// dim Hom(V, W) on the window: every block entry unknown, one equation per generator.
inline std::size_t brute_hom_dim(const TruncatedModule& v, const TruncatedModule& w) {
    const Window& win = v.window();
    std::vector<std::size_t> offset(win.size() + 1, 0);
    for (std::size_t idx = 0; idx < win.size(); ++idx)
        offset[idx + 1] = offset[idx] + w.dim_at(idx) * v.dim_at(idx);
    const std::size_t unknowns = offset.back();
    std::vector<Vector> rows;
    for (const Generator& g : generators(win, v.group())) {
        const Morphism f = to_morphism(g, v.group());
        const std::size_t s = win.index(f.source), t = win.index(f.target);
        const Matrix a = v.generator_matrix(g);  // V(t) x V(s)
        const Matrix b = w.generator_matrix(g);  // W(t) x W(s)
        const std::size_t vs = v.dim_at(s), vt = v.dim_at(t), ws = w.dim_at(s), wt = w.dim_at(t);
        // (b phi_s - phi_t a)[r][c] = 0 for r < wt, c < vs.
        for (std::size_t r = 0; r < wt; ++r)
            for (std::size_t c = 0; c < vs; ++c) {
                Vector row(unknowns);
                for (std::size_t k = 0; k < ws; ++k) row[offset[s] + k * vs + c] += b(r, k);
                for (std::size_t k = 0; k < vt; ++k) row[offset[t] + r * vt + k] -= a(k, c);
                rows.push_back(std::move(row));
            }
    }
    if (rows.empty()) return unknowns;
    return unknowns - rank(Matrix::from_rows(rows, unknowns));
}

/// Sum over every morphism n -> n2 of positive S-degree and zero degree elsewhere of
/// ker V(f).
inline std::vector<Subspace> brute_torsion(const TruncatedModule& v, const std::vector<int>& coords) {
    const Window& win = v.window();
    std::vector<Subspace> out;
    for (const auto& n : win.objects()) {
        Subspace acc(v.dim(n));
        for (const auto& n2 : win.objects()) {
            if (!leq(n, n2) || n2 == n) continue;
            bool outside = false;
            for (int i = 0; i < v.m(); ++i)
                if (n2[i] != n[i] && std::find(coords.begin(), coords.end(), i) == coords.end()) outside = true;
            if (outside) continue;
            for (const auto& f : enumerate_injections(n, n2)) acc = acc.sum(kernel_basis(v.action(f)));
        }
        out.push_back(acc);
    }
    return out;
}

/// dim V(n) minus the span of images of every morphism into n of positive S-degree.
inline std::vector<std::size_t> brute_h0_dims(const TruncatedModule& v, const std::vector<int>& coords) {
    const Window& win = v.window();
    std::vector<std::size_t> out;
    for (const auto& n : win.objects()) {
        Subspace acc(v.dim(n));
        for (const auto& a : win.objects()) {
            if (!leq(a, n) || a.degree(coords) == n.degree(coords)) continue;
            for (const auto& f : enumerate_injections(a, n)) acc = acc.sum(image_basis(v.action(f)));
        }
        out.push_back(v.dim(n) - acc.dim());
    }
    return out;
}

/// Standard Young tableaux counted by filling the diagram with every permutation.
inline std::size_t count_standard_fillings(const Partition& p) {
    std::vector<int> perm(static_cast<std::size_t>(p.size()));
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t count = 0;
    do {
        std::vector<std::vector<int>> rows;
        std::size_t k = 0;
        for (int len : p.parts()) {
            rows.emplace_back(perm.begin() + static_cast<long>(k), perm.begin() + static_cast<long>(k + static_cast<std::size_t>(len)));
            k += static_cast<std::size_t>(len);
        }
        bool ok = true;
        for (std::size_t r = 0; r < rows.size() && ok; ++r)
            for (std::size_t c = 0; c < rows[r].size() && ok; ++c) {
                if (c + 1 < rows[r].size() && rows[r][c] > rows[r][c + 1]) ok = false;
                if (r + 1 < rows.size() && c < rows[r + 1].size() && rows[r][c] > rows[r + 1][c]) ok = false;
            }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

/// Trace of the Specht representation at a permutation, through a word in adjacent
/// transpositions found by bubble sort.
inline Rational specht_trace(const SpechtRep& rep, Injection perm) {
    Matrix acc = Matrix::identity(rep.dim);
    for (std::size_t pass = 0; pass < perm.size(); ++pass)
        for (std::size_t k = 0; k + 1 < perm.size(); ++k)
            if (perm[k] > perm[k + 1]) {
                std::swap(perm[k], perm[k + 1]);
                acc = acc * rep.generators[k];
            }
    Rational t = 0;
    for (std::size_t r = 0; r < rep.dim; ++r) t += acc(r, r);
    return t;
}

/// A permutation of [n] with the given cycle type.
inline Injection permutation_of_type(const Partition& mu) {
    Injection out(static_cast<std::size_t>(mu.size()));
    int start = 0;
    for (int len : mu.parts()) {
        for (int x = 0; x < len; ++x) out[static_cast<std::size_t>(start + x)] = start + (x + 1) % len;
        start += len;
    }
    return out;
}

inline std::size_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::size_t out = 1;
    for (int j = 1; j <= k; ++j) out = out * static_cast<std::size_t>(n - k + j) / static_cast<std::size_t>(j);
    return out;
}

inline Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int range = 3) {
    std::uniform_int_distribution<int> d(-range, range);
    Matrix out(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) out(r, c) = d(rng);
    return out;
}

}  // namespace fim::oracle
