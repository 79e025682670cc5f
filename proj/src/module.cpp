#include "fimod/module.hpp"

#include "fimod/errors.hpp"
#include "fimod/snf.hpp"

#include <sstream>

namespace fimod {

Mat Comp::relation_matrix() const {
    Mat r(gens, tor.size());
    for (std::size_t i = 0; i < tor.size(); ++i)
        r.at(i, i) = Scalar(tor[i]);
    return r;
}

ModObj ModObj::zero(const CoeffCategory& c) {
    ModObj m;
    m.coeff = c;
    m.comps.resize(c.n_objects());
    return m;
}

ModObj ModObj::field_dims(const CoeffCategory& c, std::vector<long> dims) {
    if (!c.is_field_case())
        throw ValidationError("field_dims on a non-field coefficient category");
    if (dims.size() != c.n_objects())
        throw ValidationError("one dimension per object expected");
    ModObj m;
    m.coeff = c;
    for (long d : dims) {
        if (d < 0)
            throw ValidationError("negative dimension");
        m.comps.push_back(Comp{d, {}});
    }
    return m;
}

ModObj ModObj::z_module(std::vector<Int> tor, long free_rank) {
    for (std::size_t i = 0; i < tor.size(); ++i) {
        if (tor[i] < 2)
            throw ValidationError("invariant factors must be >= 2");
        if (i + 1 < tor.size() && tor[i + 1] % tor[i] != 0)
            throw ValidationError("invariant factors must form a divisibility chain");
    }
    if (free_rank < 0)
        throw ValidationError("negative free rank");
    ModObj m;
    m.coeff = CoeffCategory::integers();
    Comp c;
    c.gens = static_cast<long>(tor.size()) + free_rank;
    c.tor = std::move(tor);
    m.comps.push_back(std::move(c));
    return m;
}

bool ModObj::is_zero() const {
    for (const auto& c : comps)
        if (!c.is_zero())
            return false;
    return true;
}

long ModObj::total_gens() const {
    long t = 0;
    for (const auto& c : comps)
        t += c.gens;
    return t;
}

std::string ModObj::describe() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t o = 0; o < comps.size(); ++o) {
        if (o)
            os << "; ";
        if (coeff.kind == CoeffCategory::Kind::Integers) {
            bool first = true;
            for (const auto& d : comps[o].tor) {
                os << (first ? "" : "+") << "Z/" << d.get_str();
                first = false;
            }
            if (comps[o].free_rank() > 0)
                os << (first ? "" : "+") << "Z^" << comps[o].free_rank();
            if (first && comps[o].free_rank() == 0)
                os << "0";
        } else {
            os << comps[o].gens;
        }
    }
    os << "]";
    return os.str();
}

namespace {

// Reduce one block in place to the canonical representative: entries mod p in
// field-p contexts, torsion rows mod their order over Z.
void normalize_block(const CoeffCategory& coeff, const Comp& cod, Mat& b) {
    if (coeff.is_field_case()) {
        coeff.field().normalize_in_place(b);
        return;
    }
    if (!b.is_integer())
        throw ValidationError("non-integer entry in a map over Z");
    for (std::size_t i = 0; i < cod.tor.size(); ++i) {
        const Int& d = cod.tor[i];
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Int r = b.at(i, j).get_num() % d;
            if (r < 0)
                r += d;
            b.at(i, j) = Scalar(r);
        }
    }
}

// Relations map into relations: every torsion generator of the domain must
// land on an element killed by its order.
void check_well_defined(const Comp& dom, const Comp& cod, const Mat& b) {
    for (std::size_t i = 0; i < dom.tor.size(); ++i) {
        const Int& di = dom.tor[i];
        for (std::size_t j = 0; j < static_cast<std::size_t>(cod.gens); ++j) {
            Int v = b.at(j, i).get_num() * di;
            if (j < cod.tor.size()) {
                if (v % cod.tor[j] != 0)
                    throw ValidationError("map does not respect relations (torsion row)");
            } else if (v != 0) {
                throw ValidationError("map does not respect relations (free row)");
            }
        }
    }
}

} // namespace

ModMap ModMap::make(ModObj dom, ModObj cod, std::vector<Mat> blocks) {
    if (dom.coeff != cod.coeff)
        throw ValidationError("map between different coefficient categories");
    if (blocks.size() != dom.coeff.n_objects())
        throw ValidationError("one block per object expected");
    for (std::size_t o = 0; o < blocks.size(); ++o) {
        if (blocks[o].rows() != static_cast<std::size_t>(cod.comps[o].gens) ||
            blocks[o].cols() != static_cast<std::size_t>(dom.comps[o].gens))
            throw ValidationError("block shape mismatch at object " + dom.coeff.objects[o]);
        normalize_block(dom.coeff, cod.comps[o], blocks[o]);
        if (!dom.coeff.is_field_case())
            check_well_defined(dom.comps[o], cod.comps[o], blocks[o]);
    }
    ModMap m;
    m.dom_ = std::move(dom);
    m.cod_ = std::move(cod);
    m.blocks_ = std::move(blocks);
    return m;
}

ModMap ModMap::identity(const ModObj& a) {
    std::vector<Mat> blocks;
    for (const auto& c : a.comps)
        blocks.push_back(Mat::identity(c.gens));
    return make(a, a, std::move(blocks));
}

ModMap ModMap::zero(const ModObj& dom, const ModObj& cod) {
    std::vector<Mat> blocks;
    for (std::size_t o = 0; o < dom.comps.size(); ++o)
        blocks.push_back(Mat::zero(cod.comps[o].gens, dom.comps[o].gens));
    return make(dom, cod, std::move(blocks));
}

bool ModMap::is_zero() const {
    for (const auto& b : blocks_)
        if (!b.is_zero())
            return false;
    return true;
}

ModMap compose(const ModMap& g, const ModMap& f) {
    if (f.cod() != g.dom())
        throw ValidationError("compose: codomain/domain mismatch");
    std::vector<Mat> blocks;
    for (std::size_t o = 0; o < f.blocks().size(); ++o)
        blocks.push_back(g.block(o) * f.block(o));
    return ModMap::make(f.dom(), g.cod(), std::move(blocks));
}

ModMap add(const ModMap& f, const ModMap& g) {
    if (f.dom() != g.dom() || f.cod() != g.cod())
        throw ValidationError("add: shape mismatch");
    std::vector<Mat> blocks;
    for (std::size_t o = 0; o < f.blocks().size(); ++o)
        blocks.push_back(f.block(o) + g.block(o));
    return ModMap::make(f.dom(), f.cod(), std::move(blocks));
}

ModMap sub(const ModMap& f, const ModMap& g) { return add(f, negate(g)); }

ModMap negate(const ModMap& f) {
    std::vector<Mat> blocks;
    for (std::size_t o = 0; o < f.blocks().size(); ++o)
        blocks.push_back(-f.block(o));
    return ModMap::make(f.dom(), f.cod(), std::move(blocks));
}

// ---------------------------------------------------------------------------
// Per-component machinery. The integer side funnels everything through two
// primitives: preimage lattices (via integer kernels) and canonicalization of
// a presentation (via Smith normal form).

PresentedComp canonicalize_presentation(long gens, const Mat& rels) {
    SmithResult s = smith_normal_form(rels);
    // Module is iso to Z^gens / diag(d_1..d_r) via x -> U x. Generators with
    // d_i = 1 vanish; d_i >= 2 are torsion; rows past the rank are free.
    std::size_t first_kept = 0;
    while (first_kept < s.rank && s.d.at(first_kept, first_kept) == 1)
        ++first_kept;
    PresentedComp p;
    p.comp.gens = gens - static_cast<long>(first_kept);
    for (std::size_t i = first_kept; i < s.rank; ++i)
        p.comp.tor.push_back(s.d.at(i, i).get_num());
    std::optional<Mat> uinv = z_solve(s.u, Mat::identity(gens));
    if (!uinv)
        throw InternalError("unimodular matrix failed to invert");
    p.to_canon = s.u.rows_slice(first_kept, gens);
    p.from_canon = uinv->cols_slice(first_kept, gens);
    return p;
}

Mat preimage_lattice_z(const Mat& m, const Mat& rels) {
    Mat k = z_kernel_basis(hstack(m, rels));
    return k.rows_slice(0, m.cols());
}

namespace {

struct CompSub {
    Comp comp;
    Mat incl;
};

// Subobject of `amb` generated by the element columns of `gens`.
CompSub comp_sub_from_generators(const CoeffCategory& coeff, const Comp& amb, const Mat& gens) {
    if (coeff.is_field_case()) {
        auto piv = independent_columns(gens, coeff.field());
        Mat basis(gens.rows(), piv.size());
        for (std::size_t b = 0; b < piv.size(); ++b)
            for (std::size_t i = 0; i < gens.rows(); ++i)
                basis.at(i, b) = gens.at(i, piv[b]);
        return CompSub{Comp{static_cast<long>(piv.size()), {}}, basis};
    }
    Mat rels = preimage_lattice_z(gens, amb.relation_matrix());
    PresentedComp p = canonicalize_presentation(gens.cols(), rels);
    return CompSub{p.comp, gens * p.from_canon};
}

CompSub comp_kernel(const CoeffCategory& coeff, const Comp& dom, const Comp& cod, const Mat& m) {
    if (coeff.is_field_case()) {
        Mat basis = kernel_basis(m, coeff.field());
        return CompSub{Comp{static_cast<long>(basis.cols()), {}}, basis};
    }
    Mat lat = preimage_lattice_z(m, cod.relation_matrix());
    return comp_sub_from_generators(coeff, dom, lat);
}

struct CompQuot {
    Comp comp;
    Mat proj;
};

CompQuot comp_cokernel(const CoeffCategory& coeff, const Comp& cod, const Mat& m) {
    if (coeff.is_field_case()) {
        const FieldOps f = coeff.field();
        auto piv = independent_columns(m, f);
        Mat im(m.rows(), piv.size());
        for (std::size_t b = 0; b < piv.size(); ++b)
            for (std::size_t i = 0; i < m.rows(); ++i)
                im.at(i, b) = m.at(i, piv[b]);
        // Extend the image basis by standard vectors; quotient coordinates
        // are the complement part of the inverse change of basis.
        Mat full = hstack(im, Mat::identity(m.rows()));
        auto cols = independent_columns(full, f);
        Mat basis(m.rows(), cols.size());
        for (std::size_t b = 0; b < cols.size(); ++b)
            for (std::size_t i = 0; i < m.rows(); ++i)
                basis.at(i, b) = full.at(i, cols[b]);
        Mat binv = inverse(basis, f);
        Mat proj = binv.rows_slice(im.cols(), basis.cols());
        return CompQuot{Comp{static_cast<long>(proj.rows()), {}}, proj};
    }
    PresentedComp p = canonicalize_presentation(cod.gens, hstack(m, cod.relation_matrix()));
    return CompQuot{p.comp, p.to_canon};
}

// h with incl * h = g modulo the ambient relations, or nullopt.
std::optional<Mat> comp_factor_mono(const CoeffCategory& coeff, const Comp& amb, const Mat& incl,
                                    const Mat& g) {
    if (coeff.is_field_case())
        return solve(incl, g, coeff.field());
    auto sol = z_solve(hstack(incl, amb.relation_matrix()), g);
    if (!sol)
        return std::nullopt;
    return sol->rows_slice(0, incl.cols());
}

// Section s with proj * s = id modulo the target relations, or nullopt.
std::optional<Mat> comp_section(const CoeffCategory& coeff, const Comp& target, const Mat& proj) {
    if (coeff.is_field_case())
        return solve(proj, Mat::identity(proj.rows()), coeff.field());
    auto sol = z_solve(hstack(proj, target.relation_matrix()), Mat::identity(proj.rows()));
    if (!sol)
        return std::nullopt;
    return sol->rows_slice(0, proj.cols());
}

} // namespace

SubObject kernel(const ModMap& f) {
    const CoeffCategory& c = f.dom().coeff;
    ModObj k;
    k.coeff = c;
    std::vector<Mat> incl;
    for (std::size_t o = 0; o < c.n_objects(); ++o) {
        CompSub s = comp_kernel(c, f.dom().comps[o], f.cod().comps[o], f.block(o));
        k.comps.push_back(s.comp);
        incl.push_back(std::move(s.incl));
    }
    return SubObject{k, ModMap::make(k, f.dom(), std::move(incl))};
}

QuotientObject cokernel(const ModMap& f) {
    const CoeffCategory& c = f.dom().coeff;
    ModObj q;
    q.coeff = c;
    std::vector<Mat> proj;
    for (std::size_t o = 0; o < c.n_objects(); ++o) {
        CompQuot s = comp_cokernel(c, f.cod().comps[o], f.block(o));
        q.comps.push_back(s.comp);
        proj.push_back(std::move(s.proj));
    }
    return QuotientObject{q, ModMap::make(f.cod(), q, std::move(proj))};
}

SubObject image(const ModMap& f) {
    std::vector<Mat> gens;
    for (std::size_t o = 0; o < f.blocks().size(); ++o)
        gens.push_back(f.block(o));
    return sub_from_generators(f.cod(), gens);
}

bool is_mono(const ModMap& f) { return kernel(f).obj.is_zero(); }

bool is_epi(const ModMap& f) { return cokernel(f).obj.is_zero(); }

bool is_iso(const ModMap& f) { return is_mono(f) && is_epi(f); }

SumDecomposition direct_sum(const CoeffCategory& c, const std::vector<ModObj>& objs) {
    for (const auto& a : objs)
        if (a.coeff != c)
            throw ValidationError("direct sum over mixed coefficient categories");
    SumDecomposition result;
    result.obj.coeff = c;

    // Per object: concatenate generators, then canonicalize over Z (the
    // concatenated invariant factors need not form a divisibility chain).
    std::vector<std::vector<Mat>> inj_blocks(objs.size()), proj_blocks(objs.size());
    for (std::size_t o = 0; o < c.n_objects(); ++o) {
        long total = 0;
        std::vector<Mat> rel_parts;
        for (const auto& a : objs) {
            total += a.comps[o].gens;
            rel_parts.push_back(a.comps[o].relation_matrix());
        }
        Comp sum_comp;
        Mat to = Mat::identity(total), from = Mat::identity(total);
        if (c.is_field_case()) {
            sum_comp = Comp{total, {}};
        } else {
            PresentedComp p = canonicalize_presentation(total, block_diag(rel_parts));
            sum_comp = p.comp;
            to = std::move(p.to_canon);
            from = std::move(p.from_canon);
        }
        result.obj.comps.push_back(sum_comp);
        long off = 0;
        for (std::size_t k = 0; k < objs.size(); ++k) {
            long g = objs[k].comps[o].gens;
            Mat emb(total, g);
            for (long i = 0; i < g; ++i)
                emb.at(off + i, i) = 1;
            inj_blocks[k].push_back(to * emb);
            proj_blocks[k].push_back(emb.transpose() * from);
            off += g;
        }
    }
    for (std::size_t k = 0; k < objs.size(); ++k) {
        result.inj.push_back(ModMap::make(objs[k], result.obj, std::move(inj_blocks[k])));
        result.proj.push_back(ModMap::make(result.obj, objs[k], std::move(proj_blocks[k])));
    }
    return result;
}

PullbackResult pullback(const ModMap& f, const ModMap& g) {
    if (f.cod() != g.cod())
        throw ValidationError("pullback: maps must share a codomain");
    SumDecomposition ab = direct_sum(f.dom().coeff, {f.dom(), g.dom()});
    ModMap h = sub(compose(f, ab.proj[0]), compose(g, ab.proj[1]));
    SubObject k = kernel(h);
    return PullbackResult{k.obj, compose(ab.proj[0], k.incl), compose(ab.proj[1], k.incl)};
}

std::optional<ModMap> factor_through_mono(const ModMap& g, const ModMap& incl) {
    if (g.cod() != incl.cod())
        throw ValidationError("factor_through_mono: codomain mismatch");
    std::vector<Mat> blocks;
    for (std::size_t o = 0; o < g.blocks().size(); ++o) {
        auto h = comp_factor_mono(g.dom().coeff, incl.cod().comps[o], incl.block(o), g.block(o));
        if (!h)
            return std::nullopt;
        blocks.push_back(std::move(*h));
    }
    ModMap h = ModMap::make(g.dom(), incl.dom(), std::move(blocks));
    if (compose(incl, h) != g)
        return std::nullopt;
    return h;
}

std::optional<ModMap> factor_through_epi(const ModMap& g, const ModMap& proj) {
    if (g.dom() != proj.dom())
        throw ValidationError("factor_through_epi: domain mismatch");
    std::vector<Mat> blocks;
    for (std::size_t o = 0; o < g.blocks().size(); ++o) {
        auto s = comp_section(g.dom().coeff, proj.cod().comps[o], proj.block(o));
        if (!s)
            return std::nullopt;
        blocks.push_back(g.block(o) * *s);
    }
    ModMap h = ModMap::make(proj.cod(), g.cod(), std::move(blocks));
    if (compose(h, proj) != g)
        return std::nullopt; // g does not kill ker(proj)
    return h;
}

std::optional<ModMap> inverse_of(const ModMap& f) {
    auto inv = factor_through_mono(ModMap::identity(f.cod()), f);
    if (!inv)
        return std::nullopt;
    if (compose(*inv, f) != ModMap::identity(f.dom()))
        return std::nullopt;
    return inv;
}

SubObject sub_from_generators(const ModObj& amb, const std::vector<Mat>& gens) {
    ModObj s;
    s.coeff = amb.coeff;
    std::vector<Mat> incl;
    for (std::size_t o = 0; o < amb.comps.size(); ++o) {
        if (gens[o].rows() != static_cast<std::size_t>(amb.comps[o].gens))
            throw ValidationError("generator column length mismatch");
        CompSub cs = comp_sub_from_generators(amb.coeff, amb.comps[o], gens[o]);
        s.comps.push_back(cs.comp);
        incl.push_back(std::move(cs.incl));
    }
    return SubObject{s, ModMap::make(s, amb, std::move(incl))};
}

SubObject preimage(const ModMap& f, const SubObject& s) {
    QuotientObject q = cokernel(s.incl);
    return kernel(compose(q.proj, f));
}

SubObject subobject_sum(const ModObj& amb, const std::vector<SubObject>& parts) {
    std::vector<Mat> gens;
    for (std::size_t o = 0; o < amb.comps.size(); ++o) {
        std::vector<Mat> cols;
        for (const auto& p : parts)
            cols.push_back(p.incl.block(o));
        gens.push_back(hstack(cols, amb.comps[o].gens));
    }
    return sub_from_generators(amb, gens);
}

SubObject intersect(const SubObject& s1, const SubObject& s2) {
    SubObject pre = preimage(s1.incl, s2); // subobject of s1.obj
    return SubObject{pre.obj, compose(s1.incl, pre.incl)};
}

bool subobject_leq(const SubObject& s1, const SubObject& s2) {
    return factor_through_mono(s1.incl, s2.incl).has_value();
}

bool subobject_eq(const SubObject& s1, const SubObject& s2) {
    return subobject_leq(s1, s2) && subobject_leq(s2, s1);
}

SubObject full_subobject(const ModObj& a) { return SubObject{a, ModMap::identity(a)}; }

SubObject zero_subobject(const ModObj& a) {
    ModObj z = ModObj::zero(a.coeff);
    return SubObject{z, ModMap::zero(z, a)};
}

} // namespace fimod
