#include "fimod/t_adjoint.hpp"

#include "fimod/errors.hpp"

#include <algorithm>

namespace fimod {

std::vector<TBlock> t_blocks(long d, long a) {
    std::vector<TBlock> blocks;
    for (long j = 0; j <= std::min(d, a); ++j)
        for (const auto& tset : subsets_of_size(d, j))
            for (const auto& inj : all_injections(j, a))
                blocks.push_back(TBlock{tset, inj.images});
    return blocks;
}

std::size_t t_block_index(const std::vector<TBlock>& blocks, const std::vector<long>& tset,
                          const std::vector<long>& psi) {
    for (std::size_t k = 0; k < blocks.size(); ++k)
        if (blocks[k].tset == tset && blocks[k].psi == psi)
            return k;
    throw InternalError("t-block not found");
}

namespace {

long position_in(const std::vector<long>& sorted_vals, long v) {
    auto it = std::find(sorted_vals.begin(), sorted_vals.end(), v);
    if (it == sorted_vals.end())
        throw InternalError("value not in sorted complement");
    return static_cast<long>(it - sorted_vals.begin()) + 1;
}

std::vector<long> complement_of(const std::vector<long>& tset, long d) {
    std::vector<long> comp;
    std::vector<bool> in(d + 1, false);
    for (long v : tset)
        in[v] = true;
    for (long v = 1; v <= d; ++v)
        if (!in[v])
            comp.push_back(v);
    return comp;
}

// The action of a generator alpha : [d] -> [d'] on the block decomposition:
// each target block (T', psi') pulls its content from the unique source block
// (alpha^{-1}(T'), psi' o alpha) along V(gamma), where gamma is alpha
// restricted to the complements and relabeled.
ModMap t_structure_map(const TruncatedFIModule& v, const std::vector<TBlock>& from_blocks,
                       const SumDecomposition& from_sum, const std::vector<TBlock>& to_blocks,
                       const SumDecomposition& to_sum, const Injection& alpha) {
    ModMap acc = ModMap::zero(from_sum.obj, to_sum.obj);
    const long d_from = alpha.m, d_to = alpha.n;
    for (std::size_t bi = 0; bi < to_blocks.size(); ++bi) {
        const TBlock& target = to_blocks[bi];
        std::vector<long> tset, psi;
        for (long i = 1; i <= d_from; ++i) {
            long ai = alpha(i);
            auto it = std::find(target.tset.begin(), target.tset.end(), ai);
            if (it != target.tset.end()) {
                tset.push_back(i);
                psi.push_back(target.psi[it - target.tset.begin()]);
            }
        }
        std::vector<long> comp_from = complement_of(tset, d_from);
        std::vector<long> comp_to = complement_of(target.tset, d_to);
        Injection gamma{static_cast<long>(comp_from.size()), static_cast<long>(comp_to.size()), {}};
        for (long x : comp_from)
            gamma.images.push_back(position_in(comp_to, alpha(x)));
        std::size_t src = t_block_index(from_blocks, tset, psi);
        acc = add(acc, compose(to_sum.inj[bi],
                               compose(evaluate_injection(v, gamma), from_sum.proj[src])));
    }
    return acc;
}

} // namespace

TAdjointResult t_adjoint(const TruncatedFIModule& v, long a) {
    if (a < 0)
        throw ValidationError("negative adjoint shift");
    TAdjointResult r;
    r.a = a;
    const int N = v.N;
    std::vector<ModObj> levels;
    for (int d = 0; d <= N; ++d) {
        r.blocks.push_back(t_blocks(d, a));
        std::vector<ModObj> contents;
        for (const auto& b : r.blocks[d])
            contents.push_back(v.levels[d - static_cast<long>(b.tset.size())]);
        r.sums.push_back(direct_sum(v.coeff, contents));
        levels.push_back(r.sums[d].obj);
        r.embed.push_back(r.sums[d].inj[0]);   // block (T = empty) comes first
        r.retract.push_back(r.sums[d].proj[0]);
    }
    std::vector<ModMap> incl;
    for (int d = 0; d < N; ++d)
        incl.push_back(t_structure_map(v, r.blocks[d], r.sums[d], r.blocks[d + 1], r.sums[d + 1],
                                       Injection::standard(d, d + 1)));
    std::vector<std::vector<ModMap>> transp(N + 1);
    for (int d = 0; d <= N; ++d)
        for (long i = 1; i <= d - 1; ++i)
            transp[d].push_back(t_structure_map(v, r.blocks[d], r.sums[d], r.blocks[d], r.sums[d],
                                                Injection::adjacent_transposition(d, i)));
    r.obj = make_fi_module(v.coeff, N, std::move(levels), std::move(incl), std::move(transp));
    return r;
}

FIMorphism t_adjoint_morphism(const TAdjointResult& tv, const TAdjointResult& tw,
                              const FIMorphism& f) {
    if (tv.a != tw.a)
        throw ValidationError("t_adjoint_morphism: different shift amounts");
    std::vector<ModMap> maps;
    for (int d = 0; d <= tv.obj.N; ++d) {
        ModMap acc = ModMap::zero(tv.obj.levels[d], tw.obj.levels[d]);
        for (std::size_t b = 0; b < tv.blocks[d].size(); ++b) {
            long e = d - static_cast<long>(tv.blocks[d][b].tset.size());
            acc = add(acc, compose(tw.sums[d].inj[b], compose(f.maps[e], tv.sums[d].proj[b])));
        }
        maps.push_back(std::move(acc));
    }
    return make_fi_morphism(tv.obj, tw.obj, std::move(maps));
}

namespace {

// The free-module generator classified by a block: complement of T goes
// order-preservingly to an initial segment, T goes to the appended points.
Injection block_generator_injection(const TBlock& block, long d, long a) {
    long j = static_cast<long>(block.tset.size());
    long e = d - j;
    Injection phi{d, e + a, std::vector<long>(d)};
    std::vector<long> comp = complement_of(block.tset, d);
    for (std::size_t q = 0; q < comp.size(); ++q)
        phi.images[comp[q] - 1] = static_cast<long>(q) + 1;
    for (std::size_t q = 0; q < block.tset.size(); ++q)
        phi.images[block.tset[q] - 1] = e + block.psi[q];
    return phi;
}

} // namespace

FIMorphism transpose_to_adjoint(const TruncatedFIModule& a_orig, long a, const FIMorphism& f,
                                const TAdjointResult& tw) {
    const int M = tw.obj.N;
    if (a_orig.N < M + a)
        throw TruncationError("transpose needs the domain up to level " + std::to_string(M + a));
    std::vector<ModMap> maps;
    for (int d = 0; d <= M; ++d) {
        ModMap acc = ModMap::zero(a_orig.levels[d], tw.obj.levels[d]);
        for (std::size_t b = 0; b < tw.blocks[d].size(); ++b) {
            const TBlock& block = tw.blocks[d][b];
            long e = d - static_cast<long>(block.tset.size());
            ModMap push = evaluate_injection(a_orig, block_generator_injection(block, d, a));
            acc = add(acc, compose(tw.sums[d].inj[b], compose(f.maps[e], push)));
        }
        maps.push_back(std::move(acc));
    }
    return make_fi_morphism(truncate(a_orig, M), tw.obj, std::move(maps));
}

FIMorphism transpose_from_adjoint(const FIMorphism& g, const TruncatedFIModule& w,
                                  const TAdjointResult& tw) {
    if (g.cod != tw.obj)
        throw ValidationError("transpose_from_adjoint: codomain is not the given adjoint");
    const long a = tw.a;
    const int n_new = g.dom.N - static_cast<int>(a);
    if (n_new < 0)
        throw TruncationError("window too small to untranspose");
    std::vector<ModMap> maps;
    for (int n = 0; n <= n_new; ++n) {
        std::vector<long> t0, psi0;
        for (long k = 1; k <= a; ++k) {
            t0.push_back(n + k);
            psi0.push_back(k);
        }
        std::size_t idx = t_block_index(tw.blocks[n + a], t0, psi0);
        maps.push_back(compose(tw.sums[n + a].proj[idx], g.maps[n + a]));
    }
    return make_fi_morphism(shift(g.dom, a), truncate(w, n_new), std::move(maps));
}

FIMorphism adjunction_unit(const TruncatedFIModule& a_mod, long a, const TAdjointResult& tsa) {
    return transpose_to_adjoint(a_mod, a, identity_fi(shift(a_mod, a)), tsa);
}

FIMorphism adjunction_counit(const TruncatedFIModule& w, const TAdjointResult& tw) {
    return transpose_from_adjoint(identity_fi(tw.obj), w, tw);
}

} // namespace fimod
