#include "fimod/fi_module.hpp"

#include "fimod/errors.hpp"

#include <sstream>

namespace fimod {

bool TruncatedFIModule::is_zero() const {
    for (const auto& l : levels)
        if (!l.is_zero())
            return false;
    return true;
}

std::vector<long> TruncatedFIModule::level_dims(std::size_t object) const {
    std::vector<long> d;
    for (const auto& l : levels)
        d.push_back(l.comps.at(object).gens);
    return d;
}

TruncatedFIModule make_fi_module(CoeffCategory coeff, int N, std::vector<ModObj> levels,
                                 std::vector<ModMap> incl, std::vector<std::vector<ModMap>> transp,
                                 bool check) {
    if (N < 0)
        throw ValidationError("negative truncation level");
    if (levels.size() != static_cast<std::size_t>(N) + 1 ||
        incl.size() != static_cast<std::size_t>(N) || transp.size() != levels.size())
        throw ValidationError("level/generator counts do not match the truncation");
    TruncatedFIModule v;
    v.coeff = std::move(coeff);
    v.N = N;
    v.levels = std::move(levels);
    v.incl = std::move(incl);
    v.transp = std::move(transp);
    for (int n = 0; n <= N; ++n) {
        if (v.levels[n].coeff != v.coeff)
            throw ValidationError("level coefficient mismatch");
        if (v.transp[n].size() != static_cast<std::size_t>(std::max(0, n - 1)))
            throw ValidationError("wrong transposition count at level " + std::to_string(n));
    }
    if (check)
        verify_fi_invariants(v);
    return v;
}

void verify_fi_invariants(const TruncatedFIModule& v) {
    auto fail = [](const std::string& what) { throw ValidationError("FI relation violated: " + what); };
    for (int n = 0; n <= v.N; ++n) {
        const ModObj& vn = v.levels[n];
        for (long i = 1; i <= n - 1; ++i) {
            const ModMap& ti = v.t(n, i);
            if (ti.dom() != vn || ti.cod() != vn)
                fail("t_{" + std::to_string(n) + "," + std::to_string(i) + "} endpoints");
            if (compose(ti, ti) != ModMap::identity(vn))
                fail("t^2 = 1 at level " + std::to_string(n));
            for (long j = i + 2; j <= n - 1; ++j)
                if (compose(ti, v.t(n, j)) != compose(v.t(n, j), ti))
                    fail("far commutation at level " + std::to_string(n));
            if (i + 1 <= n - 1) {
                const ModMap& tj = v.t(n, i + 1);
                if (compose(ti, compose(tj, ti)) != compose(tj, compose(ti, tj)))
                    fail("braid relation at level " + std::to_string(n));
            }
        }
        if (n < v.N) {
            const ModMap& in = v.incl[n];
            if (in.dom() != vn || in.cod() != v.levels[n + 1])
                fail("inclusion endpoints at level " + std::to_string(n));
            for (long i = 1; i <= n - 1; ++i)
                if (compose(in, v.t(n, i)) != compose(v.t(n + 1, i), in))
                    fail("inclusion/transposition compatibility at level " + std::to_string(n));
        }
        if (n + 2 <= v.N) {
            ModMap two = compose(v.incl[n + 1], v.incl[n]);
            if (compose(v.t(n + 2, n + 1), two) != two)
                fail("added-points relation at level " + std::to_string(n));
        }
    }
}

TruncatedFIModule zero_fi_module(const CoeffCategory& c, int N) {
    std::vector<ModObj> levels(N + 1, ModObj::zero(c));
    std::vector<ModMap> incl(N, ModMap::zero(ModObj::zero(c), ModObj::zero(c)));
    std::vector<std::vector<ModMap>> transp(N + 1);
    for (int n = 0; n <= N; ++n)
        transp[n].assign(std::max(0, n - 1), ModMap::zero(ModObj::zero(c), ModObj::zero(c)));
    return make_fi_module(c, N, std::move(levels), std::move(incl), std::move(transp), false);
}

TruncatedFIModule truncate(const TruncatedFIModule& v, int n_new) {
    if (n_new < 0 || n_new > v.N)
        throw TruncationError("truncate to " + std::to_string(n_new) + " outside [0, " +
                              std::to_string(v.N) + "]");
    TruncatedFIModule w;
    w.coeff = v.coeff;
    w.N = n_new;
    w.levels.assign(v.levels.begin(), v.levels.begin() + n_new + 1);
    w.incl.assign(v.incl.begin(), v.incl.begin() + n_new);
    w.transp.assign(v.transp.begin(), v.transp.begin() + n_new + 1);
    return w;
}

FIMorphism truncate_fi_morphism(const FIMorphism& f, int n_new) {
    std::vector<ModMap> maps(f.maps.begin(), f.maps.begin() + n_new + 1);
    return make_fi_morphism(truncate(f.dom, n_new), truncate(f.cod, n_new), std::move(maps), false);
}

namespace {

ModMap evaluate_word(const TruncatedFIModule& v, const Injection& phi,
                     const std::vector<long>& word) {
    const long m = phi.m, n = phi.n;
    ModMap acc = ModMap::identity(v.levels[m]);
    for (long k = m; k < n; ++k)
        acc = compose(v.incl[k], acc);
    // word gives pi = s_{i1} o ... o s_{ik}; V is covariant, so
    // V(pi) = V(s_{i1}) o ... o V(s_{ik}).
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        acc = compose(v.t(n, *it), acc);
    return acc;
}

} // namespace

ModMap evaluate_injection(const TruncatedFIModule& v, const Injection& phi) {
    validate_injection(phi);
    if (phi.n > v.N)
        throw TruncationError("evaluation at level " + std::to_string(phi.n) +
                              " beyond truncation " + std::to_string(v.N));
    return evaluate_word(v, phi, adjacent_word(completion_permutation(phi)));
}

ModMap evaluate_injection_alt(const TruncatedFIModule& v, const Injection& phi) {
    validate_injection(phi);
    if (phi.n > v.N)
        throw TruncationError("evaluation beyond truncation");
    return evaluate_word(v, phi, adjacent_word_alt(completion_permutation(phi)));
}

bool FIMorphism::is_zero() const {
    for (const auto& m : maps)
        if (!m.is_zero())
            return false;
    return true;
}

FIMorphism make_fi_morphism(TruncatedFIModule dom, TruncatedFIModule cod,
                            std::vector<ModMap> maps, bool check) {
    if (dom.coeff != cod.coeff)
        throw ValidationError("morphism between different coefficient categories");
    if (dom.N != cod.N)
        throw ValidationError("morphism between different truncations (" +
                              std::to_string(dom.N) + " vs " + std::to_string(cod.N) + ")");
    if (maps.size() != static_cast<std::size_t>(dom.N) + 1)
        throw ValidationError("one level map per level expected");
    FIMorphism f;
    f.dom = std::move(dom);
    f.cod = std::move(cod);
    f.maps = std::move(maps);
    for (int n = 0; n <= f.dom.N; ++n) {
        if (f.maps[n].dom() != f.dom.levels[n] || f.maps[n].cod() != f.cod.levels[n])
            throw ValidationError("level map endpoints mismatch at level " + std::to_string(n));
    }
    if (check) {
        for (int n = 0; n < f.dom.N; ++n)
            if (compose(f.maps[n + 1], f.dom.incl[n]) != compose(f.cod.incl[n], f.maps[n]))
                throw ValidationError("morphism does not commute with inclusions at level " +
                                      std::to_string(n));
        for (int n = 0; n <= f.dom.N; ++n)
            for (long i = 1; i <= n - 1; ++i)
                if (compose(f.maps[n], f.dom.t(n, i)) != compose(f.cod.t(n, i), f.maps[n]))
                    throw ValidationError("morphism does not commute with t_{" +
                                          std::to_string(n) + "," + std::to_string(i) + "}");
    }
    return f;
}

FIMorphism identity_fi(const TruncatedFIModule& v) {
    std::vector<ModMap> maps;
    for (const auto& l : v.levels)
        maps.push_back(ModMap::identity(l));
    return make_fi_morphism(v, v, std::move(maps), false);
}

FIMorphism zero_fi_morphism(const TruncatedFIModule& dom, const TruncatedFIModule& cod) {
    std::vector<ModMap> maps;
    for (int n = 0; n <= dom.N; ++n)
        maps.push_back(ModMap::zero(dom.levels[n], cod.levels[n]));
    return make_fi_morphism(dom, cod, std::move(maps), false);
}

FIMorphism compose_fi(const FIMorphism& g, const FIMorphism& f) {
    if (f.cod != g.dom)
        throw ValidationError("compose_fi: middle objects differ");
    std::vector<ModMap> maps;
    for (int n = 0; n <= f.dom.N; ++n)
        maps.push_back(compose(g.maps[n], f.maps[n]));
    return make_fi_morphism(f.dom, g.cod, std::move(maps), false);
}

FIMorphism add_fi(const FIMorphism& f, const FIMorphism& g) {
    std::vector<ModMap> maps;
    for (int n = 0; n <= f.dom.N; ++n)
        maps.push_back(add(f.maps[n], g.maps[n]));
    return make_fi_morphism(f.dom, f.cod, std::move(maps), false);
}

FIMorphism sub_fi(const FIMorphism& f, const FIMorphism& g) {
    std::vector<ModMap> maps;
    for (int n = 0; n <= f.dom.N; ++n)
        maps.push_back(sub(f.maps[n], g.maps[n]));
    return make_fi_morphism(f.dom, f.cod, std::move(maps), false);
}

bool is_mono_fi(const FIMorphism& f) {
    for (const auto& m : f.maps)
        if (!is_mono(m))
            return false;
    return true;
}

bool is_epi_fi(const FIMorphism& f) {
    for (const auto& m : f.maps)
        if (!is_epi(m))
            return false;
    return true;
}

bool is_iso_fi(const FIMorphism& f) { return is_mono_fi(f) && is_epi_fi(f); }

std::optional<FIMorphism> inverse_fi(const FIMorphism& f) {
    std::vector<ModMap> maps;
    for (const auto& m : f.maps) {
        auto inv = inverse_of(m);
        if (!inv)
            return std::nullopt;
        maps.push_back(std::move(*inv));
    }
    return make_fi_morphism(f.cod, f.dom, std::move(maps));
}

FISumDecomposition direct_sum_fi(const CoeffCategory& c, int N,
                                 const std::vector<TruncatedFIModule>& parts) {
    for (const auto& p : parts) {
        if (p.coeff != c)
            throw ValidationError("direct_sum_fi over mixed coefficient categories");
        if (p.N != N)
            throw ValidationError("direct_sum_fi over mixed truncations");
    }
    std::vector<SumDecomposition> per_level;
    std::vector<ModObj> levels;
    for (int n = 0; n <= N; ++n) {
        std::vector<ModObj> objs;
        for (const auto& p : parts)
            objs.push_back(p.levels[n]);
        per_level.push_back(direct_sum(c, objs));
        levels.push_back(per_level.back().obj);
    }
    auto assemble = [&](int n_dom, int n_cod, auto&& pick) {
        ModMap acc = ModMap::zero(levels[n_dom], levels[n_cod]);
        for (std::size_t k = 0; k < parts.size(); ++k)
            acc = add(acc, compose(per_level[n_cod].inj[k],
                                   compose(pick(k), per_level[n_dom].proj[k])));
        return acc;
    };
    std::vector<ModMap> incl;
    for (int n = 0; n < N; ++n)
        incl.push_back(assemble(n, n + 1, [&](std::size_t k) { return parts[k].incl[n]; }));
    std::vector<std::vector<ModMap>> transp(N + 1);
    for (int n = 0; n <= N; ++n)
        for (long i = 1; i <= n - 1; ++i)
            transp[n].push_back(assemble(n, n, [&](std::size_t k) { return parts[k].t(n, i); }));

    FISumDecomposition result;
    result.obj = make_fi_module(c, N, std::move(levels), std::move(incl), std::move(transp),
                                !parts.empty());
    for (std::size_t k = 0; k < parts.size(); ++k) {
        std::vector<ModMap> inj_maps, proj_maps;
        for (int n = 0; n <= N; ++n) {
            inj_maps.push_back(per_level[n].inj[k]);
            proj_maps.push_back(per_level[n].proj[k]);
        }
        result.inj.push_back(make_fi_morphism(parts[k], result.obj, std::move(inj_maps), false));
        result.proj.push_back(make_fi_morphism(result.obj, parts[k], std::move(proj_maps), false));
    }
    return result;
}

// --- free modules -----------------------------------------------------------

namespace {

// Matrix of the index-set map phi |-> alpha o phi on basis vectors of H_r
// summands: a permutation-style 0/1 matrix between injection bases.
Mat index_action(const std::vector<Injection>& dom_basis, long dom_count, long cod_count,
                 const Injection& alpha) {
    Mat m(cod_count, dom_count);
    for (long j = 0; j < dom_count; ++j) {
        Injection img = compose_inj(alpha, dom_basis[j]);
        m.at(injection_index(img), j) = 1;
    }
    return m;
}

ModObj free_level(const CoeffCategory& c, long d, std::size_t object, long n) {
    long count = count_injections(d, n);
    if (c.kind == CoeffCategory::Kind::Integers)
        return ModObj::z_module({}, count);
    std::vector<long> dims(c.n_objects(), 0);
    dims[object] = count;
    return ModObj::field_dims(c, dims);
}

ModMap free_map(const CoeffCategory& c, std::size_t object, const ModObj& dom, const ModObj& cod,
                const Mat& action) {
    std::vector<Mat> blocks;
    for (std::size_t o = 0; o < c.n_objects(); ++o) {
        if (o == object)
            blocks.push_back(action);
        else
            blocks.push_back(Mat::zero(cod.comps[o].gens, dom.comps[o].gens));
    }
    return ModMap::make(dom, cod, std::move(blocks));
}

} // namespace

TruncatedFIModule free_module(const CoeffCategory& c, long d, std::size_t object, int N) {
    if (d < 0 || N < 0)
        throw ValidationError("free_module needs d >= 0 and N >= 0");
    if (object >= c.n_objects())
        throw ValidationError("free_module: no such object");
    std::vector<ModObj> levels;
    std::vector<std::vector<Injection>> bases;
    for (long n = 0; n <= N; ++n) {
        levels.push_back(free_level(c, d, object, n));
        bases.push_back(all_injections(d, n));
    }
    std::vector<ModMap> incl;
    for (long n = 0; n < N; ++n)
        incl.push_back(free_map(c, object, levels[n], levels[n + 1],
                                index_action(bases[n], count_injections(d, n),
                                             count_injections(d, n + 1),
                                             Injection::standard(n, n + 1))));
    std::vector<std::vector<ModMap>> transp(N + 1);
    for (long n = 0; n <= N; ++n)
        for (long i = 1; i <= n - 1; ++i)
            transp[n].push_back(free_map(c, object, levels[n], levels[n],
                                         index_action(bases[n], count_injections(d, n),
                                                      count_injections(d, n),
                                                      Injection::adjacent_transposition(n, i))));
    return make_fi_module(c, N, std::move(levels), std::move(incl), std::move(transp));
}

FIMorphism element_to_morphism(const TruncatedFIModule& free, const TruncatedFIModule& v, long d,
                               std::size_t object, const Mat& element) {
    if (v.N != free.N)
        throw ValidationError("element_to_morphism: truncation mismatch");
    if (element.rows() != static_cast<std::size_t>(v.levels.at(d).comps.at(object).gens) ||
        element.cols() != 1)
        throw ValidationError("element has the wrong shape for V(d)(r)");
    std::vector<ModMap> maps;
    for (int n = 0; n <= v.N; ++n) {
        auto basis = all_injections(d, n);
        std::vector<Mat> cols;
        for (const auto& phi : basis)
            cols.push_back(evaluate_injection(v, phi).block(object) * element);
        Mat block = hstack(cols, v.levels[n].comps[object].gens);
        std::vector<Mat> blocks;
        for (std::size_t o = 0; o < v.coeff.n_objects(); ++o) {
            if (o == object)
                blocks.push_back(block);
            else
                blocks.push_back(Mat::zero(v.levels[n].comps[o].gens, free.levels[n].comps[o].gens));
        }
        maps.push_back(ModMap::make(free.levels[n], v.levels[n], std::move(blocks)));
    }
    return make_fi_morphism(free, v, std::move(maps));
}

Mat morphism_to_element(const FIMorphism& f, long d, std::size_t object) {
    std::size_t idx = injection_index(Injection::identity(d));
    return f.maps.at(d).block(object).col(idx);
}

} // namespace fimod
