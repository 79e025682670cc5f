#include "fimod/h0.hpp"

#include "fimod/errors.hpp"

namespace fimod {

namespace {

// [n-1] -> [n] order-preserving, image misses k.
Injection face(long n, long k) {
    Injection phi{n - 1, n, {}};
    for (long v = 1; v <= n; ++v)
        if (v != k)
            phi.images.push_back(v);
    return phi;
}

} // namespace

FIQuotient h0(const TruncatedFIModule& v) {
    std::vector<QuotientObject> quots;
    for (int n = 0; n <= v.N; ++n) {
        if (n == 0) {
            quots.push_back(cokernel(ModMap::zero(ModObj::zero(v.coeff), v.levels[0])));
            continue;
        }
        std::vector<ModObj> copies(n, v.levels[n - 1]);
        SumDecomposition sum = direct_sum(v.coeff, copies);
        ModMap combined = ModMap::zero(sum.obj, v.levels[n]);
        for (long k = 1; k <= n; ++k)
            combined = add(combined, compose(evaluate_injection(v, face(n, k)), sum.proj[k - 1]));
        quots.push_back(cokernel(combined));
    }
    return fi_quot_from_levels(v, quots);
}

FIMorphism h0_morphism(const FIQuotient& hv, const FIQuotient& hw, const FIMorphism& f) {
    std::vector<ModMap> maps;
    for (int n = 0; n <= f.dom.N; ++n) {
        auto m = factor_through_epi(compose(hw.proj.maps[n], f.maps[n]), hv.proj.maps[n]);
        if (!m)
            throw InternalError("H0 descent failed");
        maps.push_back(std::move(*m));
    }
    return make_fi_morphism(hv.obj, hw.obj, std::move(maps));
}

std::string GenerationReport::degree_str() const {
    switch (status) {
    case Status::Degree: return std::to_string(gen_degree);
    case Status::None: return "none";
    case Status::ExceedsTruncation: return "exceeds-truncation";
    }
    return "?";
}

GenerationReport generation_degree(const TruncatedFIModule& v) {
    FIQuotient h = h0(v);
    GenerationReport r;
    r.window = v.N;
    long top = -1;
    for (int n = 0; n <= v.N; ++n) {
        std::vector<long> dims;
        for (const auto& c : h.obj.levels[n].comps)
            dims.push_back(c.gens);
        r.h0_level_dims.push_back(std::move(dims));
        if (!h.obj.levels[n].is_zero())
            top = n;
    }
    if (top == -1) {
        r.status = GenerationReport::Status::None;
        r.gr_finitely_generated = true;
    } else if (top == v.N) {
        r.status = GenerationReport::Status::ExceedsTruncation;
        r.gr_finitely_generated = false;
    } else {
        r.status = GenerationReport::Status::Degree;
        r.gen_degree = top;
        r.gr_finitely_generated = true;
    }
    return r;
}

std::pair<bool, bool> epi_iff_h0_epi(const FIMorphism& f) {
    FIQuotient hv = h0(f.dom), hw = h0(f.cod);
    FIMorphism hf = h0_morphism(hv, hw, f);
    return {is_epi_fi(f), is_epi_fi(hf)};
}

} // namespace fimod
