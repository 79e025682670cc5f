#include "fimod/torsion.hpp"

#include "fimod/errors.hpp"
#include "fimod/h0.hpp"
#include "fimod/shift.hpp"

#include <algorithm>
#include <sstream>

namespace fimod {

Envelope TorsionTheory::envelope(const ModObj&) const {
    throw CapabilityError("torsion theory '" + name() + "' provides no envelope");
}

ModMap TorsionTheory::envelope_map(const ModMap&) const {
    throw CapabilityError("torsion theory '" + name() + "' provides no envelope");
}

namespace {

class ZeroTheory final : public TorsionTheory {
public:
    std::string name() const override { return "zero"; }
    bool applies_to(const CoeffCategory&) const override { return true; }
    SubObject radical(const ModObj& a) const override { return zero_subobject(a); }
    bool membership(const ModObj& a) const override { return a.is_zero(); }
    bool has_envelope() const override { return true; }
    Envelope envelope(const ModObj& a) const override { return {a, ModMap::identity(a)}; }
    ModMap envelope_map(const ModMap& f) const override { return f; }
};

class FullTheory final : public TorsionTheory {
public:
    std::string name() const override { return "full"; }
    bool applies_to(const CoeffCategory&) const override { return true; }
    SubObject radical(const ModObj& a) const override { return full_subobject(a); }
    bool membership(const ModObj&) const override { return true; }
    bool has_envelope() const override { return true; }
    Envelope envelope(const ModObj& a) const override {
        ModObj z = ModObj::zero(a.coeff);
        return {z, ModMap::zero(a, z)};
    }
    ModMap envelope_map(const ModMap& f) const override {
        return ModMap::zero(ModObj::zero(f.dom().coeff), ModObj::zero(f.dom().coeff));
    }
};

class ZTorsionTheory final : public TorsionTheory {
public:
    std::string name() const override { return "ztorsion"; }
    bool applies_to(const CoeffCategory& c) const override {
        return c.kind == CoeffCategory::Kind::Integers;
    }
    SubObject radical(const ModObj& a) const override {
        const Comp& comp = a.comps[0];
        ModObj sub = ModObj::z_module(comp.tor, 0);
        Mat incl(comp.gens, comp.tor.size());
        for (std::size_t i = 0; i < comp.tor.size(); ++i)
            incl.at(i, i) = 1;
        return SubObject{sub, ModMap::make(sub, a, {incl})};
    }
    bool membership(const ModObj& a) const override { return a.comps[0].free_rank() == 0; }
};

class PPrimaryTheory final : public TorsionTheory {
public:
    explicit PPrimaryTheory(long p) : p_(p) {
        if (!is_prime(p))
            throw ValidationError("p-primary theory needs a prime");
    }
    std::string name() const override { return "p-primary:" + std::to_string(p_); }
    bool applies_to(const CoeffCategory& c) const override {
        return c.kind == CoeffCategory::Kind::Integers;
    }
    SubObject radical(const ModObj& a) const override {
        const Comp& comp = a.comps[0];
        std::vector<Int> parts;
        std::vector<std::pair<std::size_t, Int>> cols; // (ambient row, cofactor)
        for (std::size_t i = 0; i < comp.tor.size(); ++i) {
            Int q = 1, rest = comp.tor[i];
            while (rest % p_ == 0) {
                q *= p_;
                rest /= p_;
            }
            if (q > 1) {
                parts.push_back(q);
                cols.emplace_back(i, comp.tor[i] / q);
            }
        }
        ModObj sub = ModObj::z_module(parts, 0);
        Mat incl(comp.gens, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            incl.at(cols[j].first, j) = Scalar(cols[j].second);
        return SubObject{sub, ModMap::make(sub, a, {incl})};
    }
    bool membership(const ModObj& a) const override {
        const Comp& comp = a.comps[0];
        if (comp.free_rank() != 0)
            return false;
        for (const Int& d : comp.tor) {
            Int rest = d;
            while (rest % p_ == 0)
                rest /= p_;
            if (rest != 1)
                return false;
        }
        return true;
    }

private:
    long p_;
};

class SupportTheory final : public TorsionTheory {
public:
    SupportTheory(std::vector<std::string> objs) : objs_(std::move(objs)) {}
    std::string name() const override {
        std::ostringstream os;
        os << "support:";
        for (std::size_t i = 0; i < objs_.size(); ++i)
            os << (i ? "," : "") << objs_[i];
        return os.str();
    }
    bool applies_to(const CoeffCategory& c) const override {
        if (c.kind != CoeffCategory::Kind::Discrete)
            return false;
        for (const auto& o : objs_)
            if (std::find(c.objects.begin(), c.objects.end(), o) == c.objects.end())
                return false;
        return true;
    }
    SubObject radical(const ModObj& a) const override {
        ModObj sub;
        sub.coeff = a.coeff;
        std::vector<Mat> incl;
        for (std::size_t o = 0; o < a.comps.size(); ++o) {
            if (supported(a.coeff, o)) {
                sub.comps.push_back(a.comps[o]);
                incl.push_back(Mat::identity(a.comps[o].gens));
            } else {
                sub.comps.push_back(Comp{});
                incl.push_back(Mat::zero(a.comps[o].gens, 0));
            }
        }
        return SubObject{sub, ModMap::make(sub, a, std::move(incl))};
    }
    bool has_envelope() const override { return true; }
    Envelope envelope(const ModObj& a) const override {
        ModObj env;
        env.coeff = a.coeff;
        std::vector<Mat> unit;
        for (std::size_t o = 0; o < a.comps.size(); ++o) {
            if (supported(a.coeff, o)) {
                env.comps.push_back(Comp{});
                unit.push_back(Mat::zero(0, a.comps[o].gens));
            } else {
                env.comps.push_back(a.comps[o]);
                unit.push_back(Mat::identity(a.comps[o].gens));
            }
        }
        return {env, ModMap::make(a, env, std::move(unit))};
    }
    ModMap envelope_map(const ModMap& f) const override {
        ModObj ed = envelope(f.dom()).obj, ec = envelope(f.cod()).obj;
        std::vector<Mat> blocks;
        for (std::size_t o = 0; o < f.blocks().size(); ++o) {
            if (supported(f.dom().coeff, o))
                blocks.push_back(Mat::zero(0, 0));
            else
                blocks.push_back(f.block(o));
        }
        return ModMap::make(ed, ec, std::move(blocks));
    }

private:
    bool supported(const CoeffCategory& c, std::size_t o) const {
        return std::find(objs_.begin(), objs_.end(), c.objects[o]) != objs_.end();
    }
    std::vector<std::string> objs_;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

} // namespace

std::shared_ptr<const TorsionTheory> make_theory(const std::string& spec,
                                                 const CoeffCategory& c) {
    std::shared_ptr<const TorsionTheory> theory;
    if (spec == "zero")
        theory = std::make_shared<ZeroTheory>();
    else if (spec == "full")
        theory = std::make_shared<FullTheory>();
    else if (spec == "ztorsion")
        theory = std::make_shared<ZTorsionTheory>();
    else if (spec.rfind("p-primary:", 0) == 0)
        theory = std::make_shared<PPrimaryTheory>(std::stol(spec.substr(10)));
    else if (spec.rfind("support:", 0) == 0)
        theory = std::make_shared<SupportTheory>(split(spec.substr(8), ','));
    else
        throw ValidationError("unknown torsion theory '" + spec + "'");
    if (!theory->applies_to(c))
        throw ValidationError("theory '" + theory->name() + "' does not apply to " + c.describe());
    return theory;
}

std::vector<std::string> builtin_theory_names() {
    return {"zero", "full", "ztorsion", "p-primary:<p>", "support:<r1,r2,...>"};
}

FISubObject radical_levelwise(const TruncatedFIModule& v, const TorsionTheory& tau) {
    std::vector<SubObject> subs;
    for (const auto& l : v.levels)
        subs.push_back(tau.radical(l));
    try {
        return fi_sub_from_levels(v, subs);
    } catch (const ValidationError& e) {
        throw PluginContractError("radical of '" + tau.name() +
                                  "' is not functorial on this module: " + e.what());
    }
}

namespace {

// Stage a of the colim-lim formula at every computable level: the preimage of
// the radical of the shifted level under the canonical map.
std::vector<SubObject> torsion_stage(const TruncatedFIModule& v, const TorsionTheory& tau,
                                     long a) {
    std::vector<SubObject> stage;
    for (int n = 0; n + a <= v.N; ++n) {
        ModMap to_shifted = evaluate_injection(v, Injection::standard(n, n + a));
        stage.push_back(preimage(to_shifted, tau.radical(v.levels[n + a])));
    }
    return stage;
}

} // namespace

TorsionSubReport torsion_subobject(const TruncatedFIModule& v, const TorsionTheory& tau) {
    TorsionSubReport report;
    std::vector<SubObject> current = torsion_stage(v, tau, 0);
    auto record = [&](const std::vector<SubObject>& stage) {
        std::vector<long> dims;
        for (const auto& s : stage)
            dims.push_back(s.obj.total_gens());
        report.stage_dims.push_back(std::move(dims));
    };
    record(current);
    for (long a = 0; a + 1 <= v.N; ++a) {
        std::vector<SubObject> next = torsion_stage(v, tau, a + 1);
        record(next);
        bool stable = true;
        for (std::size_t n = 0; n < next.size() && stable; ++n)
            if (!subobject_eq(current[n], next[n]))
                stable = false;
        if (stable) {
            report.stabilized = true;
            report.stabilized_at = a;
            TruncatedFIModule window = truncate(v, v.N - static_cast<int>(a));
            report.sub = fi_sub_from_levels(window, current);
            auto gen = generation_degree(report.sub.obj);
            if (gen.status == GenerationReport::Status::Degree)
                report.certificate_level = a + gen.gen_degree;
            else if (gen.status == GenerationReport::Status::None)
                report.certificate_level = a;
            return report;
        }
        current = std::move(next);
    }
    return report; // not stabilized; partial chain in stage_dims
}

bool membership_overline_t(const TruncatedFIModule& v, const TorsionTheory& tau) {
    TorsionSubReport r = torsion_subobject(v, tau);
    if (!r.stabilized)
        throw TruncationError("torsion chain did not stabilize inside the window");
    return is_epi_fi(r.sub.incl);
}

TailReport torsion_tail(const TruncatedFIModule& v, const TorsionTheory& tau) {
    TailReport r;
    long from = v.N + 1;
    for (int n = v.N; n >= 0 && tau.membership(v.levels[n]); --n)
        from = n;
    r.member = from <= v.N;
    if (r.member)
        r.from_level = from;
    return r;
}

FISubObject filtration_f(const TruncatedFIModule& v, const TorsionTheory& tau, long n) {
    if (n < 0)
        throw ValidationError("negative filtration index");
    std::vector<SubObject> subs;
    for (int d = 0; d <= v.N; ++d) {
        SubObject acc = full_subobject(v.levels[d]);
        for (long m = std::max<long>(n, d); m <= v.N; ++m) {
            ModMap push = evaluate_injection(v, Injection::standard(d, m));
            acc = intersect(acc, preimage(push, tau.radical(v.levels[m])));
        }
        subs.push_back(std::move(acc));
    }
    return fi_sub_from_levels(v, subs);
}

EnvelopeResult envelope_fi(const TruncatedFIModule& v, const TorsionTheory& tau) {
    if (!tau.has_envelope())
        throw CapabilityError("torsion theory '" + tau.name() + "' provides no envelope");
    std::vector<ModObj> levels;
    std::vector<ModMap> units;
    for (const auto& l : v.levels) {
        Envelope e = tau.envelope(l);
        levels.push_back(e.obj);
        units.push_back(e.unit);
    }
    std::vector<ModMap> incl;
    for (int n = 0; n < v.N; ++n)
        incl.push_back(tau.envelope_map(v.incl[n]));
    std::vector<std::vector<ModMap>> transp(v.N + 1);
    for (int n = 0; n <= v.N; ++n)
        for (long i = 1; i <= n - 1; ++i)
            transp[n].push_back(tau.envelope_map(v.t(n, i)));
    TruncatedFIModule env =
        make_fi_module(v.coeff, v.N, std::move(levels), std::move(incl), std::move(transp));
    FIMorphism unit = make_fi_morphism(v, env, std::move(units));
    return {std::move(env), std::move(unit)};
}

namespace {

// Sample u = (inclusion into a direct sum with a torsion complement) after
// (quotient by a subfunctor with torsion tail): kernel W in T-hat^a, cokernel
// in T-hat^0.
struct SampledIso {
    TruncatedFIModule a, b;
    FIMorphism u;
};

SampledIso sample_class_iso(const TruncatedFIModule& l, const TorsionTheory& tau, long class_a,
                            std::uint64_t seed) {
    const CoeffCategory& c = l.coeff;
    TruncatedFIModule m = random_fg_module(seed, c, l.N, 2, 2);
    FISubObject w = filtration_f(m, tau, class_a);
    FIQuotient q = cokernel_fi(w.incl);
    TruncatedFIModule t_part = radical_levelwise(random_fg_module(seed + 1, c, l.N, 1, 2), tau).obj;
    FISumDecomposition sum = direct_sum_fi(c, l.N, {q.obj, t_part});
    return SampledIso{m, sum.obj, compose_fi(sum.inj[0], q.proj)};
}

} // namespace

ClosedVerdict is_closed(const TruncatedFIModule& l, const TorsionTheory& tau,
                        const ClosedCheckSpec& spec, std::uint64_t seed, long trials) {
    ClosedVerdict verdict;
    Rng rng(seed);
    for (long trial = 0; trial < trials; ++trial) {
        long class_a = 0;
        switch (spec.kind) {
        case ClosedCheckSpec::Kind::ThatA: class_a = spec.a; break;
        case ClosedCheckSpec::Kind::That:
        case ClosedCheckSpec::Kind::Ttilde: class_a = rng.range(0, l.N); break;
        }
        SampledIso sample = sample_class_iso(l, tau, class_a, rng.next());
        FIHomSpace hom_b = hom_fi(sample.b, l);
        FIHomSpace hom_a = hom_fi(sample.a, l);
        ModMap induced = hom_induced_map(hom_b, hom_a, sample.u);
        ++verdict.trials_run;
        if (!is_iso(induced)) {
            verdict.pass = false;
            verdict.counterexample_trial = trial;
            verdict.note = "Hom(u, L) not bijective on trial " + std::to_string(trial);
            return verdict;
        }
    }
    verdict.note = "no counterexample found (semi-decision)";
    return verdict;
}

namespace {

// Connecting map T^k W -> T^{k+1} (S^1 W): a block (T', psi') pulls from
// (T', psi'-1) along the standard inclusion when the new point is unused, or
// from (T' minus the point mapped to it) along a permutation otherwise.
FIMorphism l_connecting(const TruncatedFIModule& w, const TAdjointResult& tk,
                        const TAdjointResult& tk1) {
    const int n_new = tk1.obj.N; // = w.N - 1
    std::vector<ModMap> maps;
    for (int d = 0; d <= n_new; ++d) {
        ModMap acc = ModMap::zero(tk.obj.levels[d], tk1.obj.levels[d]);
        for (std::size_t bi = 0; bi < tk1.blocks[d].size(); ++bi) {
            const TBlock& target = tk1.blocks[d][bi];
            long e_target = d - static_cast<long>(target.tset.size());
            bool hits_new = false;
            long t0 = -1;
            for (std::size_t q = 0; q < target.psi.size(); ++q)
                if (target.psi[q] == 1) { // the S^1 point is the first appended one
                    hits_new = true;
                    t0 = target.tset[q];
                }
            std::vector<long> tset, psi;
            for (std::size_t q = 0; q < target.tset.size(); ++q) {
                if (target.tset[q] == t0)
                    continue;
                tset.push_back(target.tset[q]);
                psi.push_back(target.psi[q] - 1);
            }
            std::size_t src = t_block_index(tk.blocks[d], tset, psi);
            ModMap content = [&] {
                if (!hits_new)
                    return evaluate_injection(w, Injection::standard(e_target, e_target + 1));
                // gamma permutes [e_target + 1]: the complement of T maps in
                // order, except t0 goes to the last slot.
                std::vector<long> comp_t, comp_t1;
                std::vector<bool> in_t(d + 1, false), in_t1(d + 1, false);
                for (long x : tset)
                    in_t[x] = true;
                for (long x : target.tset)
                    in_t1[x] = true;
                for (long x = 1; x <= d; ++x) {
                    if (!in_t[x])
                        comp_t.push_back(x);
                    if (!in_t1[x])
                        comp_t1.push_back(x);
                }
                Injection gamma{static_cast<long>(comp_t.size()),
                                static_cast<long>(comp_t.size()), {}};
                for (long x : comp_t) {
                    if (x == t0) {
                        gamma.images.push_back(e_target + 1);
                    } else {
                        auto it = std::lower_bound(comp_t1.begin(), comp_t1.end(), x);
                        gamma.images.push_back(static_cast<long>(it - comp_t1.begin()) + 1);
                    }
                }
                return evaluate_injection(w, gamma);
            }();
            acc = add(acc, compose(tk1.sums[d].inj[bi], compose(content, tk.sums[d].proj[src])));
        }
        maps.push_back(std::move(acc));
    }
    return make_fi_morphism(truncate(tk.obj, n_new), tk1.obj, std::move(maps));
}

} // namespace

LStage l_stage(const TruncatedFIModule& v, const TorsionTheory& tau, long k) {
    if (k < 0)
        throw ValidationError("negative localization stage");
    if (k > v.N)
        throw TruncationError("stage " + std::to_string(k) + " beyond the window");
    EnvelopeResult env = envelope_fi(v, tau);
    TruncatedFIModule w = shift(env.obj, k);
    TAdjointResult tw = t_adjoint(w, k);
    LStage stage;
    stage.obj = tw.obj;
    stage.l = transpose_to_adjoint(v, k, shift_morphism(env.unit, k), tw);
    if (k + 1 <= v.N) {
        TAdjointResult tw1 = t_adjoint(shift(env.obj, k + 1), k + 1);
        stage.c = l_connecting(w, tw, tw1);
        stage.has_c = true;
    }
    return stage;
}

LTowerReport l_truncated(const TruncatedFIModule& v, const TorsionTheory& tau, long kmax) {
    if (kmax > v.N)
        throw TruncationError("tower extends beyond the window");
    LTowerReport report;
    report.kmax = kmax;
    std::vector<LStage> stages;
    for (long k = 0; k <= kmax; ++k) {
        stages.push_back(l_stage(v, tau, k));
        std::vector<long> dims;
        for (const auto& lvl : stages.back().obj.levels)
            dims.push_back(lvl.total_gens());
        report.stage_dims.push_back(std::move(dims));
    }
    for (long k = 0; k < kmax; ++k) {
        bool iso = stages[k].has_c && is_iso_fi(stages[k].c);
        report.c_is_iso.push_back(iso);
    }
    for (long k = 0; k < kmax; ++k) {
        bool all = true;
        for (long j = k; j < kmax; ++j)
            if (!report.c_is_iso[j])
                all = false;
        if (all) {
            report.stabilized_from = k;
            break;
        }
    }
    return report;
}

} // namespace fimod
