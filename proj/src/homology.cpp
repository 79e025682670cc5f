#include "fimod/homology.hpp"

#include "fimod/errors.hpp"
#include "fimod/h0.hpp"

#include <algorithm>

namespace fimod {

namespace {

std::vector<long> complement_in(const std::vector<long>& tset, long n) {
    std::vector<bool> in(n + 1, false);
    for (long v : tset)
        in[v] = true;
    std::vector<long> comp;
    for (long v = 1; v <= n; ++v)
        if (!in[v])
            comp.push_back(v);
    return comp;
}

long position_in(const std::vector<long>& ascending, long v) {
    auto it = std::lower_bound(ascending.begin(), ascending.end(), v);
    if (it == ascending.end() || *it != v)
        throw InternalError("element not found in ascending set");
    return static_cast<long>(it - ascending.begin()) + 1;
}

// Relabel alpha restricted to T as an injection between initial segments.
Injection restricted_relabel(const Injection& alpha, const std::vector<long>& tset,
                             const std::vector<long>& uset) {
    Injection gamma{static_cast<long>(tset.size()), static_cast<long>(uset.size()), {}};
    for (long t : tset)
        gamma.images.push_back(position_in(uset, alpha(t)));
    return gamma;
}

int sort_parity(std::vector<long> seq) {
    int inv = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j])
                ++inv;
    return inv % 2 ? -1 : 1;
}

std::size_t subset_index(const std::vector<std::vector<long>>& subsets,
                         const std::vector<long>& t) {
    for (std::size_t i = 0; i < subsets.size(); ++i)
        if (subsets[i] == t)
            return i;
    throw InternalError("subset not found in basis");
}

// Structure map of the subset functor for one FI generator alpha: [n] -> [n'];
// block T goes to alpha(T) union the new points, with content V(gamma) and,
// in the signed realization, the parity of sorting alpha on the complement.
ModMap subset_structure_map(const TruncatedFIModule& v, const SignedSubsetBasis& basis,
                            long n_from, long n_to, const Injection& alpha, bool with_sign) {
    const auto& from_subsets = basis.subsets[n_from];
    const auto& to_subsets = basis.subsets[n_to];
    const auto& from_sum = basis.sums[n_from];
    const auto& to_sum = basis.sums[n_to];
    ModMap acc = ModMap::zero(from_sum.obj, to_sum.obj);
    for (std::size_t bi = 0; bi < from_subsets.size(); ++bi) {
        const auto& tset = from_subsets[bi];
        std::vector<long> uset;
        for (long t : tset)
            uset.push_back(alpha(t));
        for (long w = 1; w <= alpha.n; ++w) {
            bool hit = false;
            for (long k = 1; k <= alpha.m; ++k)
                if (alpha(k) == w)
                    hit = true;
            if (!hit)
                uset.push_back(w); // points outside the image stay retained
        }
        std::sort(uset.begin(), uset.end());
        Injection gamma = restricted_relabel(alpha, tset, uset);
        ModMap part = compose(to_sum.inj[subset_index(to_subsets, uset)],
                              compose(evaluate_injection(v, gamma), from_sum.proj[bi]));
        if (with_sign) {
            std::vector<long> moved;
            for (long c : complement_in(tset, n_from))
                moved.push_back(alpha(c));
            if (sort_parity(moved) < 0)
                part = negate(part);
        }
        acc = add(acc, part);
    }
    return acc;
}

} // namespace

SubsetTerm subset_term(const TruncatedFIModule& v, long a, bool signed_action) {
    if (a < 0)
        throw ValidationError("negative complex index");
    SubsetTerm term;
    term.basis.a = a;
    std::vector<ModObj> levels;
    for (int n = 0; n <= v.N; ++n) {
        term.basis.subsets.push_back(subsets_of_size(n, n - a));
        std::vector<ModObj> contents;
        for (std::size_t k = 0; k < term.basis.subsets[n].size(); ++k)
            contents.push_back(v.levels[n - a]);
        term.basis.sums.push_back(direct_sum(v.coeff, contents));
        levels.push_back(term.basis.sums[n].obj);
    }
    std::vector<ModMap> incl;
    for (int n = 0; n < v.N; ++n)
        incl.push_back(subset_structure_map(v, term.basis, n, n + 1,
                                            Injection::standard(n, n + 1), signed_action));
    std::vector<std::vector<ModMap>> transp(v.N + 1);
    for (int n = 0; n <= v.N; ++n)
        for (long i = 1; i <= n - 1; ++i)
            transp[n].push_back(subset_structure_map(v, term.basis, n, n,
                                                     Injection::adjacent_transposition(n, i),
                                                     signed_action));
    term.obj = make_fi_module(v.coeff, v.N, std::move(levels), std::move(incl), std::move(transp));
    return term;
}

TruncatedFIModule b_term(const TruncatedFIModule& v, long a) {
    if (a < 0)
        throw ValidationError("negative complex index");
    if (a > v.N)
        throw TruncationError("b_term beyond truncation");
    // Blocks indexed by injections [a] -> [n]; content V of the complement.
    std::vector<std::vector<Injection>> bases;
    std::vector<SumDecomposition> sums;
    std::vector<ModObj> levels;
    for (int n = 0; n <= v.N; ++n) {
        bases.push_back(all_injections(a, n)); // empty when n < a
        std::vector<ModObj> contents(bases[n].size(), v.levels[std::max<long>(n - a, 0)]);
        sums.push_back(direct_sum(v.coeff, contents));
        levels.push_back(sums[n].obj);
    }
    auto structure = [&](int n_from, int n_to, const Injection& alpha) {
        ModMap acc = ModMap::zero(levels[n_from], levels[n_to]);
        for (std::size_t bi = 0; bi < bases[n_from].size(); ++bi) {
            const Injection& phi = bases[n_from][bi];
            Injection img = compose_inj(alpha, phi);
            std::vector<long> tset = complement_in(phi.images, n_from);
            std::vector<long> uset = complement_in(img.images, n_to);
            std::sort(tset.begin(), tset.end());
            Injection gamma = restricted_relabel(alpha, tset, uset);
            acc = add(acc, compose(sums[n_to].inj[injection_index(img)],
                                   compose(evaluate_injection(v, gamma),
                                           sums[n_from].proj[bi])));
        }
        return acc;
    };
    std::vector<ModMap> incl;
    for (int n = 0; n < v.N; ++n)
        incl.push_back(structure(n, n + 1, Injection::standard(n, n + 1)));
    std::vector<std::vector<ModMap>> transp(v.N + 1);
    for (int n = 0; n <= v.N; ++n)
        for (long i = 1; i <= n - 1; ++i)
            transp[n].push_back(structure(n, n, Injection::adjacent_transposition(n, i)));
    return make_fi_module(v.coeff, v.N, std::move(levels), std::move(incl), std::move(transp));
}

namespace {

// d_a : term(a) -> term(a-1): add one complement point x back, with sign the
// position of x in the ascending complement of T.
FIMorphism subset_differential(const TruncatedFIModule& v, const SubsetTerm& from,
                               const SubsetTerm& to) {
    std::vector<ModMap> maps;
    for (int n = 0; n <= v.N; ++n) {
        ModMap acc = ModMap::zero(from.obj.levels[n], to.obj.levels[n]);
        const auto& subs = from.basis.subsets[n];
        for (std::size_t bi = 0; bi < subs.size(); ++bi) {
            const auto& tset = subs[bi];
            std::vector<long> comp = complement_in(tset, n);
            for (std::size_t q = 0; q < comp.size(); ++q) {
                std::vector<long> uset = tset;
                uset.insert(std::lower_bound(uset.begin(), uset.end(), comp[q]), comp[q]);
                long p = position_in(uset, comp[q]);
                Injection gamma{static_cast<long>(tset.size()), static_cast<long>(uset.size()), {}};
                for (long k = 1; k <= gamma.n; ++k)
                    if (k != p)
                        gamma.images.push_back(k);
                ModMap part = compose(to.basis.sums[n].inj[subset_index(to.basis.subsets[n], uset)],
                                      compose(evaluate_injection(v, gamma),
                                              from.basis.sums[n].proj[bi]));
                if ((q + 1) % 2 == 1) // sign (-1)^{q+1}, q+1 = 1-based position
                    part = negate(part);
                acc = add(acc, part);
            }
        }
        maps.push_back(std::move(acc));
    }
    return make_fi_morphism(from.obj, to.obj, std::move(maps));
}

} // namespace

FIChainComplex btilde_complex(const TruncatedFIModule& v, long top) {
    if (top < 0)
        throw ValidationError("negative complex length");
    if (top > v.N)
        throw TruncationError("complex extends beyond the truncation");
    FIChainComplex cx;
    cx.top = top;
    for (long a = 0; a <= top; ++a)
        cx.terms.push_back(subset_term(v, a, true));
    for (long a = 1; a <= top; ++a)
        cx.differentials.push_back(subset_differential(v, cx.terms[a], cx.terms[a - 1]));
    for (long a = 2; a <= top; ++a)
        if (!compose_fi(cx.differentials[a - 2], cx.differentials[a - 1]).is_zero())
            throw InternalError("d o d != 0 in the subset complex");
    return cx;
}

namespace {

struct HomologyParts {
    FIChainComplex cx;
    FISubObject cycles;     // kernel of d_a (whole term for a = 0)
    FIMorphism boundaries;  // d_{a+1} factored through the cycles
    FIQuotient quotient;    // cycles -> H_a
};

HomologyParts homology_parts(const TruncatedFIModule& v, long a) {
    if (a < 0)
        throw ValidationError("negative homology index");
    if (a + 1 > v.N)
        throw TruncationError("homology_" + std::to_string(a) + " needs truncation >= " +
                              std::to_string(a + 1));
    HomologyParts parts{btilde_complex(v, a + 1), {}, {}, {}};
    if (a == 0) {
        const TruncatedFIModule& t0 = parts.cx.terms[0].obj;
        std::vector<SubObject> full;
        for (int n = 0; n <= v.N; ++n)
            full.push_back(full_subobject(t0.levels[n]));
        parts.cycles = fi_sub_from_levels(t0, full);
    } else {
        parts.cycles = kernel_fi(parts.cx.differentials[a - 1]);
    }
    const FIMorphism& d_next = parts.cx.differentials[a];
    std::vector<ModMap> factored;
    for (int n = 0; n <= v.N; ++n) {
        auto m = factor_through_mono(d_next.maps[n], parts.cycles.incl.maps[n]);
        if (!m)
            throw InternalError("boundaries do not land in cycles");
        factored.push_back(std::move(*m));
    }
    parts.boundaries =
        make_fi_morphism(parts.cx.terms[a + 1].obj, parts.cycles.obj, std::move(factored));
    parts.quotient = cokernel_fi(parts.boundaries);
    return parts;
}

} // namespace

TruncatedFIModule homology_a(const TruncatedFIModule& v, long a) {
    return homology_parts(v, a).quotient.obj;
}

ComparisonResult compare_h0_paths(const TruncatedFIModule& v) {
    HomologyParts parts = homology_parts(v, 0);
    FIQuotient h = h0(v);
    // package V into the single-block term 0, then through the cycle quotient
    std::vector<ModMap> into_term;
    for (int n = 0; n <= v.N; ++n)
        into_term.push_back(parts.cx.terms[0].basis.sums[n].inj[0]);
    FIMorphism pack = make_fi_morphism(v, parts.cx.terms[0].obj, std::move(into_term));
    // cycles = whole term at a = 0; its inclusion is an iso
    auto unpack = inverse_fi(parts.cycles.incl);
    if (!unpack)
        throw InternalError("a = 0 cycle inclusion is not invertible");
    FIMorphism q2 = compose_fi(parts.quotient.proj, compose_fi(*unpack, pack)); // V -> H_0
    ComparisonResult result;
    result.lhs = parts.quotient.obj;
    result.rhs = h.obj;
    std::vector<ModMap> iso_maps;
    for (int n = 0; n <= v.N; ++n) {
        auto m = factor_through_epi(h.proj.maps[n], q2.maps[n]);
        if (!m)
            return result;
        iso_maps.push_back(std::move(*m));
    }
    FIMorphism iso = make_fi_morphism(result.lhs, result.rhs, std::move(iso_maps));
    if (is_iso_fi(iso))
        result.iso = std::move(iso);
    return result;
}

namespace {

struct ColimRoute {
    SubsetTerm t1;            // plain subset functor, |T| = n-1
    TruncatedFIModule colim;  // coequalizer of the two restriction maps
    std::vector<ModMap> proj; // T1 level -> colim level
    FIMorphism to_v;          // colim -> V
    FISubObject h1;           // kernel of to_v
};

ColimRoute h1_colim_route(const TruncatedFIModule& v) {
    ColimRoute route{subset_term(v, 1, false), {}, {}, {}, {}};
    SubsetTerm t2 = subset_term(v, 2, false);

    // the two subset-restriction maps, per level, and their difference
    std::vector<QuotientObject> quots;
    for (int n = 0; n <= v.N; ++n) {
        ModMap diff = ModMap::zero(t2.obj.levels[n], route.t1.obj.levels[n]);
        const auto& subs = t2.basis.subsets[n];
        for (std::size_t bi = 0; bi < subs.size(); ++bi) {
            const auto& tset = subs[bi];
            std::vector<long> comp = complement_in(tset, n);
            // comp = {x < y}: A adds x, B adds y
            for (int which = 0; which < 2; ++which) {
                long add_pt = comp[which];
                std::vector<long> uset = tset;
                uset.insert(std::lower_bound(uset.begin(), uset.end(), add_pt), add_pt);
                long p = position_in(uset, add_pt);
                Injection gamma{static_cast<long>(tset.size()), static_cast<long>(uset.size()), {}};
                for (long k = 1; k <= gamma.n; ++k)
                    if (k != p)
                        gamma.images.push_back(k);
                ModMap part = compose(
                    route.t1.basis.sums[n].inj[subset_index(route.t1.basis.subsets[n], uset)],
                    compose(evaluate_injection(v, gamma), t2.basis.sums[n].proj[bi]));
                diff = (which == 0) ? add(diff, part) : sub(diff, part);
            }
        }
        quots.push_back(cokernel(diff));
    }

    // descend the unsigned structure maps to the coequalizer levels
    std::vector<ModObj> levels;
    for (int n = 0; n <= v.N; ++n)
        levels.push_back(quots[n].obj);
    std::vector<ModMap> incl;
    for (int n = 0; n < v.N; ++n) {
        ModMap up = subset_structure_map(v, route.t1.basis, n, n + 1,
                                         Injection::standard(n, n + 1), false);
        auto m = factor_through_epi(compose(quots[n + 1].proj, up), quots[n].proj);
        if (!m)
            throw InternalError("colimit structure map (inclusion) did not descend");
        incl.push_back(std::move(*m));
    }
    std::vector<std::vector<ModMap>> transp(v.N + 1);
    for (int n = 0; n <= v.N; ++n)
        for (long i = 1; i <= n - 1; ++i) {
            ModMap tw = subset_structure_map(v, route.t1.basis, n, n,
                                             Injection::adjacent_transposition(n, i), false);
            auto m = factor_through_epi(compose(quots[n].proj, tw), quots[n].proj);
            if (!m)
                throw InternalError("colimit structure map (transposition) did not descend");
            transp[n].push_back(std::move(*m));
        }
    route.colim = make_fi_module(v.coeff, v.N, std::move(levels), std::move(incl), std::move(transp));
    for (int n = 0; n <= v.N; ++n)
        route.proj.push_back(quots[n].proj);

    // the canonical map colim -> V, blockwise the subset inclusions
    std::vector<ModMap> to_v_maps;
    for (int n = 0; n <= v.N; ++n) {
        ModMap u = ModMap::zero(route.t1.obj.levels[n], v.levels[n]);
        const auto& subs = route.t1.basis.subsets[n];
        for (std::size_t bi = 0; bi < subs.size(); ++bi) {
            Injection phi{static_cast<long>(subs[bi].size()), n, subs[bi]};
            u = add(u, compose(evaluate_injection(v, phi), route.t1.basis.sums[n].proj[bi]));
        }
        auto m = factor_through_epi(u, route.proj[n]);
        if (!m)
            throw InternalError("colimit comparison map did not descend");
        to_v_maps.push_back(std::move(*m));
    }
    route.to_v = make_fi_morphism(route.colim, v, std::move(to_v_maps));
    route.h1 = kernel_fi(route.to_v);
    return route;
}

} // namespace

TruncatedFIModule h1_via_colim(const TruncatedFIModule& v) { return h1_colim_route(v).h1.obj; }

ComparisonResult compare_h1_paths(const TruncatedFIModule& v) {
    HomologyParts parts = homology_parts(v, 1);
    ColimRoute route = h1_colim_route(v);
    ComparisonResult result;
    result.lhs = parts.quotient.obj;
    result.rhs = route.h1.obj;

    // cycles live in term(1) = T1 (same blocks, and at a = 1 no signs); map
    // them into the coequalizer and factor through its kernel, then descend
    // to the homology quotient.
    std::vector<ModMap> iso_maps;
    for (int n = 0; n <= v.N; ++n) {
        ModMap into_colim = compose(route.proj[n], parts.cycles.incl.maps[n]);
        auto into_h1 = factor_through_mono(into_colim, route.h1.incl.maps[n]);
        if (!into_h1)
            return result;
        auto descended = factor_through_epi(*into_h1, parts.quotient.proj.maps[n]);
        if (!descended)
            return result;
        iso_maps.push_back(std::move(*descended));
    }
    FIMorphism iso = make_fi_morphism(result.lhs, result.rhs, std::move(iso_maps));
    if (is_iso_fi(iso))
        result.iso = std::move(iso);
    return result;
}

ShiftZeroVerdict shift_zero_check(const TruncatedFIModule& v, long a) {
    TruncatedFIModule h = homology_a(v, a);
    for (int n = 0; n < h.N; ++n)
        if (!h.incl[n].is_zero())
            return ShiftZeroVerdict{false, n};
    return ShiftZeroVerdict{};
}

BoundedColimit bounded_subset_colimit(const TruncatedFIModule& v, long s, long bound) {
    if (bound < 0)
        throw ValidationError("negative colimit bound");
    BoundedColimit col;
    for (long k = 0; k <= std::min(bound, s); ++k)
        for (auto& t : subsets_of_size(s, k))
            col.subsets.push_back(std::move(t));
    std::vector<ModObj> contents;
    for (const auto& t : col.subsets) {
        if (static_cast<long>(t.size()) > v.N)
            throw TruncationError("colimit bound exceeds the stored window");
        contents.push_back(v.levels[t.size()]);
    }
    col.blocks = direct_sum(v.coeff, contents);

    // relation map over the cover pairs T < T u {x}
    std::vector<ModObj> pair_contents;
    struct Pair {
        std::size_t from, to;
        Injection gamma;
    };
    std::vector<Pair> pairs;
    for (std::size_t bi = 0; bi < col.subsets.size(); ++bi) {
        const auto& tset = col.subsets[bi];
        if (static_cast<long>(tset.size()) >= bound)
            continue;
        for (long x : complement_in(tset, s)) {
            std::vector<long> uset = tset;
            uset.insert(std::lower_bound(uset.begin(), uset.end(), x), x);
            long p = position_in(uset, x);
            Injection gamma{static_cast<long>(tset.size()), static_cast<long>(uset.size()), {}};
            for (long k = 1; k <= gamma.n; ++k)
                if (k != p)
                    gamma.images.push_back(k);
            pairs.push_back(Pair{bi, subset_index(col.subsets, uset), std::move(gamma)});
            pair_contents.push_back(v.levels[tset.size()]);
        }
    }
    SumDecomposition pair_sum = direct_sum(v.coeff, pair_contents);
    ModMap delta = ModMap::zero(pair_sum.obj, col.blocks.obj);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        ModMap up = compose(col.blocks.inj[pairs[k].to],
                            compose(evaluate_injection(v, pairs[k].gamma), pair_sum.proj[k]));
        ModMap down = compose(col.blocks.inj[pairs[k].from], pair_sum.proj[k]);
        delta = add(delta, sub(up, down));
    }
    QuotientObject q = cokernel(delta);
    col.obj = q.obj;
    col.proj = q.proj;
    return col;
}

namespace {

std::optional<ModMap> colimit_to_level(const TruncatedFIModule& v, long s,
                                       const BoundedColimit& col) {
    if (s > v.N)
        return std::nullopt;
    ModMap u = ModMap::zero(col.blocks.obj, v.levels[s]);
    for (std::size_t bi = 0; bi < col.subsets.size(); ++bi) {
        Injection phi{static_cast<long>(col.subsets[bi].size()), s, col.subsets[bi]};
        u = add(u, compose(evaluate_injection(v, phi), col.blocks.proj[bi]));
    }
    return factor_through_epi(u, col.proj);
}

} // namespace

bool colimit_identity_holds(const TruncatedFIModule& v, long s, long bound) {
    BoundedColimit col = bounded_subset_colimit(v, s, bound);
    auto q = colimit_to_level(v, s, col);
    return q && is_iso(*q);
}

StableRangeReport stable_range(const TruncatedFIModule& v) {
    StableRangeReport report;
    if (v.N < 2) {
        report.exceeds_truncation = true;
        return report;
    }
    TruncatedFIModule h0_mod = h0(v).obj;
    TruncatedFIModule h1_mod = homology_a(v, 1);
    long top = -1;
    for (int n = 0; n <= v.N; ++n) {
        report.h0_dims.push_back(h0_mod.levels[n].total_gens());
        report.h1_dims.push_back(h1_mod.levels[n].total_gens());
        if (!h0_mod.levels[n].is_zero() || !h1_mod.levels[n].is_zero())
            top = n;
    }
    if (top == v.N) {
        report.exceeds_truncation = true;
        return report;
    }
    report.n_bound = std::max<long>(1, top + 1);
    report.verified = true;
    for (long s = 0; s <= v.N && report.verified; ++s)
        if (!colimit_identity_holds(v, s, report.n_bound))
            report.verified = false;
    for (long b = 0; b <= report.n_bound; ++b) {
        bool all = true;
        for (long s = 0; s <= v.N && all; ++s)
            if (!colimit_identity_holds(v, s, b))
                all = false;
        if (all) {
            report.n_min = b;
            break;
        }
    }
    return report;
}

TruncatedFIModule extend(const TruncatedFIModule& v, int n_prime, long n_stable) {
    if (n_prime < v.N)
        throw ValidationError("extend target below the stored window");
    if (n_stable > v.N)
        throw TruncationError("stable bound beyond the stored window");
    for (long s = 0; s <= v.N; ++s)
        if (!colimit_identity_holds(v, s, n_stable))
            throw ValidationError("unverified stable range: colimit identity fails at level " +
                                  std::to_string(s));
    if (n_prime == v.N)
        return v;

    std::vector<BoundedColimit> cols(n_prime + 1);
    std::vector<ModObj> levels = v.levels;
    for (long s = v.N; s <= n_prime; ++s) {
        cols[s] = bounded_subset_colimit(v, s, n_stable);
        if (s > v.N)
            levels.push_back(cols[s].obj);
    }

    // block-level map for alpha : [s] -> [s'] between colimit presentations
    auto block_map = [&](long s_from, long s_to, const Injection& alpha) {
        ModMap acc = ModMap::zero(cols[s_from].blocks.obj, cols[s_to].blocks.obj);
        for (std::size_t bi = 0; bi < cols[s_from].subsets.size(); ++bi) {
            const auto& tset = cols[s_from].subsets[bi];
            std::vector<long> uset;
            for (long t : tset)
                uset.push_back(alpha(t));
            std::sort(uset.begin(), uset.end());
            Injection gamma = restricted_relabel(alpha, tset, uset);
            acc = add(acc, compose(cols[s_to].blocks.inj[subset_index(cols[s_to].subsets, uset)],
                                   compose(evaluate_injection(v, gamma),
                                           cols[s_from].blocks.proj[bi])));
        }
        return acc;
    };
    auto descend = [&](long s_from, long s_to, const Injection& alpha) {
        auto m = factor_through_epi(compose(cols[s_to].proj, block_map(s_from, s_to, alpha)),
                                    cols[s_from].proj);
        if (!m)
            throw InternalError("extension structure map did not descend");
        return *m;
    };

    std::vector<ModMap> incl = v.incl;
    for (long s = v.N; s < n_prime; ++s) {
        ModMap step = descend(s, s + 1, Injection::standard(s, s + 1));
        if (s == v.N) {
            // enter through the verified iso colim_s = V(s)
            auto m = colimit_to_level(v, s, cols[s]);
            if (!m || !is_iso(*m))
                throw InternalError("boundary colimit is not the stored level");
            auto minv = inverse_of(*m);
            incl.push_back(compose(step, *minv));
        } else {
            incl.push_back(step);
        }
    }
    std::vector<std::vector<ModMap>> transp = v.transp;
    for (long s = v.N + 1; s <= n_prime; ++s) {
        transp.emplace_back();
        for (long i = 1; i <= s - 1; ++i)
            transp[s].push_back(descend(s, s, Injection::adjacent_transposition(s, i)));
    }
    return make_fi_module(v.coeff, n_prime, std::move(levels), std::move(incl), std::move(transp));
}

} // namespace fimod
