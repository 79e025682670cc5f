#include "fimod/fi_ops.hpp"

#include "fimod/errors.hpp"
#include "fimod/snf.hpp"

namespace fimod {

FISubObject fi_sub_from_levels(const TruncatedFIModule& v, const std::vector<SubObject>& subs) {
    const int N = v.N;
    std::vector<ModObj> levels;
    std::vector<ModMap> incl_maps;
    for (int n = 0; n <= N; ++n)
        levels.push_back(subs[n].obj);
    std::vector<ModMap> incl;
    std::vector<std::vector<ModMap>> transp(N + 1);
    for (int n = 0; n < N; ++n) {
        auto ind = factor_through_mono(compose(v.incl[n], subs[n].incl), subs[n + 1].incl);
        if (!ind)
            throw ValidationError("levelwise subobjects not closed under inclusions at level " +
                                  std::to_string(n));
        incl.push_back(std::move(*ind));
    }
    for (int n = 0; n <= N; ++n)
        for (long i = 1; i <= n - 1; ++i) {
            auto ind = factor_through_mono(compose(v.t(n, i), subs[n].incl), subs[n].incl);
            if (!ind)
                throw ValidationError("levelwise subobjects not closed under t at level " +
                                      std::to_string(n));
            transp[n].push_back(std::move(*ind));
        }
    TruncatedFIModule s =
        make_fi_module(v.coeff, N, std::move(levels), std::move(incl), std::move(transp));
    std::vector<ModMap> incl_level;
    for (int n = 0; n <= N; ++n)
        incl_level.push_back(subs[n].incl);
    return FISubObject{s, make_fi_morphism(s, v, std::move(incl_level))};
}

FIQuotient fi_quot_from_levels(const TruncatedFIModule& v, const std::vector<QuotientObject>& quots) {
    const int N = v.N;
    std::vector<ModObj> levels;
    for (int n = 0; n <= N; ++n)
        levels.push_back(quots[n].obj);
    std::vector<ModMap> incl;
    std::vector<std::vector<ModMap>> transp(N + 1);
    for (int n = 0; n < N; ++n) {
        auto ind = factor_through_epi(compose(quots[n + 1].proj, v.incl[n]), quots[n].proj);
        if (!ind)
            throw ValidationError("inclusion does not descend to quotients at level " +
                                  std::to_string(n));
        incl.push_back(std::move(*ind));
    }
    for (int n = 0; n <= N; ++n)
        for (long i = 1; i <= n - 1; ++i) {
            auto ind = factor_through_epi(compose(quots[n].proj, v.t(n, i)), quots[n].proj);
            if (!ind)
                throw ValidationError("transposition does not descend to quotients at level " +
                                      std::to_string(n));
            transp[n].push_back(std::move(*ind));
        }
    TruncatedFIModule q =
        make_fi_module(v.coeff, N, std::move(levels), std::move(incl), std::move(transp));
    std::vector<ModMap> proj_level;
    for (int n = 0; n <= N; ++n)
        proj_level.push_back(quots[n].proj);
    return FIQuotient{q, make_fi_morphism(v, q, std::move(proj_level))};
}

FISubObject kernel_fi(const FIMorphism& f) {
    std::vector<SubObject> subs;
    for (const auto& m : f.maps)
        subs.push_back(kernel(m));
    return fi_sub_from_levels(f.dom, subs);
}

FIQuotient cokernel_fi(const FIMorphism& f) {
    std::vector<QuotientObject> quots;
    for (const auto& m : f.maps)
        quots.push_back(cokernel(m));
    return fi_quot_from_levels(f.cod, quots);
}

FISubObject image_fi(const FIMorphism& f) {
    std::vector<SubObject> subs;
    for (const auto& m : f.maps)
        subs.push_back(image(m));
    return fi_sub_from_levels(f.cod, subs);
}

FISubObject submodule_generated(const TruncatedFIModule& v, const std::vector<FIElement>& gens) {
    for (const auto& g : gens) {
        if (g.degree < 0 || g.degree > v.N)
            throw ValidationError("generator degree outside the window");
        if (g.object >= v.coeff.n_objects())
            throw ValidationError("generator object out of range");
        if (g.vec.cols() != 1 ||
            g.vec.rows() != static_cast<std::size_t>(v.levels[g.degree].comps[g.object].gens))
            throw ValidationError("generator vector has the wrong shape");
    }
    std::vector<SubObject> subs;
    for (int n = 0; n <= v.N; ++n) {
        std::vector<std::vector<Mat>> cols(v.coeff.n_objects());
        for (const auto& g : gens)
            for (const auto& phi : all_injections(g.degree, n))
                cols[g.object].push_back(evaluate_injection(v, phi).block(g.object) * g.vec);
        std::vector<Mat> gen_mats;
        for (std::size_t o = 0; o < v.coeff.n_objects(); ++o)
            gen_mats.push_back(hstack(cols[o], v.levels[n].comps[o].gens));
        subs.push_back(sub_from_generators(v.levels[n], gen_mats));
    }
    return fi_sub_from_levels(v, subs);
}

std::uint64_t Rng::next() {
    // splitmix64; fixed algorithm so seeded streams are stable everywhere
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

long Rng::range(long lo, long hi) {
    if (hi < lo)
        throw ValidationError("empty random range");
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

TruncatedFIModule random_fg_module(std::uint64_t seed, const CoeffCategory& c, int N,
                                   long max_gen_degree, long max_gens) {
    if (N < 0 || max_gen_degree < 0 || max_gens < 0)
        throw ValidationError("random_fg_module needs non-negative bounds");
    Rng rng(seed);
    long k = rng.range(0, max_gens);
    if (k == 0)
        return zero_fi_module(c, N);
    std::vector<TruncatedFIModule> summands;
    for (long s = 0; s < k; ++s) {
        long d = rng.range(0, max_gen_degree);
        std::size_t obj = static_cast<std::size_t>(rng.range(0, static_cast<long>(c.n_objects()) - 1));
        summands.push_back(free_module(c, d, obj, N));
    }
    FISumDecomposition sum = direct_sum_fi(c, N, summands);
    const TruncatedFIModule& f = sum.obj;

    long relations = rng.range(0, max_gens);
    std::vector<FIElement> elems;
    for (long r = 0; r < relations; ++r) {
        long d = rng.range(0, std::min<long>(N, max_gen_degree + 1));
        // pick an object with generators at this level
        std::vector<std::size_t> candidates;
        for (std::size_t o = 0; o < c.n_objects(); ++o)
            if (f.levels[d].comps[o].gens > 0)
                candidates.push_back(o);
        if (candidates.empty())
            continue;
        std::size_t obj = candidates[rng.range(0, static_cast<long>(candidates.size()) - 1)];
        Mat vec(f.levels[d].comps[obj].gens, 1);
        for (std::size_t i = 0; i < vec.rows(); ++i)
            vec.at(i, 0) = Scalar(rng.range(-2, 2));
        elems.push_back(FIElement{d, obj, std::move(vec)});
    }
    if (elems.empty())
        return f;
    FISubObject rel = submodule_generated(f, elems);
    return cokernel_fi(rel.incl).obj;
}

// --- Hom spaces --------------------------------------------------------------

namespace {

struct UnknownLayout {
    // offset[n][o]: start of the block for f_n at object o
    std::vector<std::vector<std::size_t>> offset;
    std::size_t total = 0;

    UnknownLayout(const TruncatedFIModule& a, const TruncatedFIModule& l) {
        offset.resize(a.N + 1);
        for (int n = 0; n <= a.N; ++n) {
            offset[n].resize(a.coeff.n_objects());
            for (std::size_t o = 0; o < a.coeff.n_objects(); ++o) {
                offset[n][o] = total;
                total += static_cast<std::size_t>(l.levels[n].comps[o].gens) *
                         static_cast<std::size_t>(a.levels[n].comps[o].gens);
            }
        }
    }

    std::size_t at(int n, std::size_t o, long row, long col, long ncols) const {
        return offset[n][o] + static_cast<std::size_t>(row) * ncols + col;
    }
};

Mat flatten(const UnknownLayout& lay, const FIMorphism& f) {
    Mat v(lay.total, 1);
    for (int n = 0; n <= f.dom.N; ++n)
        for (std::size_t o = 0; o < f.dom.coeff.n_objects(); ++o) {
            const Mat& b = f.maps[n].block(o);
            for (std::size_t i = 0; i < b.rows(); ++i)
                for (std::size_t j = 0; j < b.cols(); ++j)
                    v.at(lay.at(n, o, i, j, b.cols()), 0) = b.at(i, j);
        }
    return v;
}

FIMorphism unflatten(const UnknownLayout& lay, const TruncatedFIModule& a,
                     const TruncatedFIModule& l, const Mat& v) {
    std::vector<ModMap> maps;
    for (int n = 0; n <= a.N; ++n) {
        std::vector<Mat> blocks;
        for (std::size_t o = 0; o < a.coeff.n_objects(); ++o) {
            Mat b(l.levels[n].comps[o].gens, a.levels[n].comps[o].gens);
            for (std::size_t i = 0; i < b.rows(); ++i)
                for (std::size_t j = 0; j < b.cols(); ++j)
                    b.at(i, j) = v.at(lay.at(n, o, i, j, b.cols()), 0);
            blocks.push_back(std::move(b));
        }
        maps.push_back(ModMap::make(a.levels[n], l.levels[n], std::move(blocks)));
    }
    return make_fi_morphism(a, l, std::move(maps));
}

struct ConstraintRows {
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows;
    std::vector<Int> moduli; // 0 = exact equation

    void add(std::vector<std::pair<std::size_t, Scalar>> row, Int modulus) {
        rows.push_back(std::move(row));
        moduli.push_back(std::move(modulus));
    }
};

// Equations saying "g o f_n = f_{n'} o h" entrywise, i.e. the naturality
// square for one generator: cod_gen * f_n - f_{n'} * dom_gen = 0 (mod the
// torsion order of the target generator row over Z).
void naturality_rows(ConstraintRows& out, const UnknownLayout& lay, const TruncatedFIModule& a,
                     const TruncatedFIModule& l, int n_from, int n_to, const ModMap& dom_gen,
                     const ModMap& cod_gen) {
    for (std::size_t o = 0; o < a.coeff.n_objects(); ++o) {
        const Mat& ga = dom_gen.block(o); // a_{n_to} x a_{n_from}
        const Mat& gl = cod_gen.block(o); // l_{n_to} x l_{n_from}
        long a_from = a.levels[n_from].comps[o].gens;
        long a_to = a.levels[n_to].comps[o].gens;
        long l_to = l.levels[n_to].comps[o].gens;
        const auto& tor = l.levels[n_to].comps[o].tor;
        for (long r = 0; r < l_to; ++r)
            for (long c = 0; c < a_from; ++c) {
                std::vector<std::pair<std::size_t, Scalar>> row;
                for (long k = 0; k < a_to; ++k)
                    if (ga.at(k, c) != 0)
                        row.emplace_back(lay.at(n_to, o, r, k, a_to), ga.at(k, c));
                for (long k = 0; k < l.levels[n_from].comps[o].gens; ++k)
                    if (gl.at(r, k) != 0)
                        row.emplace_back(lay.at(n_from, o, k, c, a_from), -gl.at(r, k));
                if (row.empty())
                    continue;
                Int mod = (static_cast<std::size_t>(r) < tor.size()) ? tor[r] : Int(0);
                out.add(std::move(row), std::move(mod));
            }
    }
}

} // namespace

FIHomSpace hom_fi(const TruncatedFIModule& a, const TruncatedFIModule& l) {
    if (a.coeff != l.coeff)
        throw ValidationError("hom between different coefficient categories");
    if (a.N != l.N)
        throw ValidationError("hom between different truncations");
    const CoeffCategory& c = a.coeff;
    const bool zcase = !c.is_field_case();
    UnknownLayout lay(a, l);

    ConstraintRows cons;
    for (int n = 0; n < a.N; ++n)
        naturality_rows(cons, lay, a, l, n, n + 1, a.incl[n], l.incl[n]);
    for (int n = 0; n <= a.N; ++n)
        for (long i = 1; i <= n - 1; ++i)
            naturality_rows(cons, lay, a, l, n, n, a.t(n, i), l.t(n, i));
    if (zcase) {
        // well-definedness of each f_n: order(dom col) * entry = 0 in target
        for (int n = 0; n <= a.N; ++n)
            for (std::size_t o = 0; o < c.n_objects(); ++o) {
                const auto& dtor = a.levels[n].comps[o].tor;
                const auto& ctor = l.levels[n].comps[o].tor;
                long lg = l.levels[n].comps[o].gens;
                long ag = a.levels[n].comps[o].gens;
                for (std::size_t j = 0; j < dtor.size(); ++j)
                    for (long r = 0; r < lg; ++r) {
                        Int mod = (static_cast<std::size_t>(r) < ctor.size()) ? ctor[r] : Int(0);
                        cons.add({{lay.at(n, o, r, static_cast<long>(j), ag), Scalar(dtor[j])}},
                                 std::move(mod));
                    }
            }
    }

    std::size_t extra = 0;
    if (zcase)
        for (const auto& m : cons.moduli)
            if (m != 0)
                ++extra;
    Mat cmat(cons.rows.size(), lay.total + extra);
    std::size_t slack = lay.total;
    for (std::size_t r = 0; r < cons.rows.size(); ++r) {
        for (const auto& [idx, val] : cons.rows[r])
            cmat.at(r, idx) += val;
        if (zcase && cons.moduli[r] != 0)
            cmat.at(r, slack++) = Scalar(cons.moduli[r]);
    }

    FIHomSpace hom;
    hom.dom = a;
    hom.cod = l;
    if (!zcase) {
        FieldOps f = c.field();
        hom.sol = kernel_basis(cmat, f);
        hom.zer = Mat(lay.total, 0);
        hom.to_canon = Mat::identity(hom.sol.cols());
        CoeffCategory host = c.p ? CoeffCategory::prime_field(c.p) : CoeffCategory::rationals();
        hom.group = ModObj::field_dims(host, {static_cast<long>(hom.sol.cols())});
        for (std::size_t k = 0; k < hom.sol.cols(); ++k)
            hom.gens.push_back(unflatten(lay, a, l, hom.sol.col(k)));
        return hom;
    }

    Mat big = z_kernel_basis(cmat);
    hom.sol = big.rows_slice(0, lay.total);
    // morphisms that are zero in Hom: entries on torsion rows of the target
    // are free multiples of the order
    std::vector<Mat> zcols;
    for (int n = 0; n <= a.N; ++n)
        for (std::size_t o = 0; o < c.n_objects(); ++o) {
            const auto& ctor = l.levels[n].comps[o].tor;
            long ag = a.levels[n].comps[o].gens;
            for (std::size_t r = 0; r < ctor.size(); ++r)
                for (long j = 0; j < ag; ++j) {
                    Mat col(lay.total, 1);
                    col.at(lay.at(n, o, static_cast<long>(r), j, ag), 0) = Scalar(ctor[r]);
                    zcols.push_back(std::move(col));
                }
        }
    hom.zer = hstack(zcols, lay.total);
    Mat rels = preimage_lattice_z(hom.sol, hom.zer);
    PresentedComp canon = canonicalize_presentation(hom.sol.cols(), rels);
    hom.to_canon = canon.to_canon;
    hom.group = ModObj::z_module(canon.comp.tor, canon.comp.free_rank());
    for (long k = 0; k < canon.comp.gens; ++k)
        hom.gens.push_back(unflatten(lay, a, l, hom.sol * canon.from_canon.col(k)));
    return hom;
}

Mat hom_coordinates(const FIHomSpace& h, const FIMorphism& f) {
    UnknownLayout lay(h.dom, h.cod);
    Mat vec = flatten(lay, f);
    const CoeffCategory& c = h.dom.coeff;
    if (c.is_field_case()) {
        auto x = solve(h.sol, vec, c.field());
        if (!x)
            throw InternalError("morphism outside its own hom space");
        return *x;
    }
    auto x = z_solve(hstack(h.sol, h.zer), vec);
    if (!x)
        throw InternalError("morphism outside its own hom space");
    Mat coords = h.to_canon * x->rows_slice(0, h.sol.cols());
    const auto& tor = h.group.comps[0].tor;
    for (std::size_t i = 0; i < tor.size(); ++i) {
        Int r = coords.at(i, 0).get_num() % tor[i];
        if (r < 0)
            r += tor[i];
        coords.at(i, 0) = Scalar(r);
    }
    return coords;
}

ModMap hom_induced_map(const FIHomSpace& hom_b, const FIHomSpace& hom_a, const FIMorphism& u) {
    std::vector<Mat> cols;
    for (const auto& g : hom_b.gens)
        cols.push_back(hom_coordinates(hom_a, compose_fi(g, u)));
    Mat block = hstack(cols, hom_a.group.comps[0].gens);
    return ModMap::make(hom_b.group, hom_a.group, {block});
}

} // namespace fimod
