#pragma once

#include "fimod/fi_ops.hpp"
#include "fimod/t_adjoint.hpp"

#include <memory>
#include <string>

namespace fimod {

struct Envelope {
    ModObj obj;
    ModMap unit; // ambient -> envelope
};

/// A hereditary torsion theory on the coefficient module category. The
/// radical must be functorial and idempotent with hereditary torsion class;
/// the engine asserts those properties where it relies on them and reports a
/// plugin-contract error on violation.
class TorsionTheory {
public:
    virtual ~TorsionTheory() = default;

    virtual std::string name() const = 0;
    virtual bool applies_to(const CoeffCategory& c) const = 0;
    virtual SubObject radical(const ModObj& a) const = 0;
    virtual bool membership(const ModObj& a) const { return is_epi(radical(a).incl); }

    virtual bool has_envelope() const { return false; }
    virtual Envelope envelope(const ModObj& a) const;  // throws CapabilityError
    virtual ModMap envelope_map(const ModMap& f) const; // E on morphisms
};

/// Built-ins: "zero", "full", "ztorsion" (over Z), "p-primary:<p>" (over Z),
/// "support:<r1,r2,...>" (over a discrete category).
std::shared_ptr<const TorsionTheory> make_theory(const std::string& spec,
                                                 const CoeffCategory& c);
std::vector<std::string> builtin_theory_names();

/// Levelwise radical; a subfunctor because the radical is functorial.
FISubObject radical_levelwise(const TruncatedFIModule& v, const TorsionTheory& tau);

/// The torsion subobject by the colim-lim formula: stage a is the pullback of
/// V(S) -> (S^a V)(S) <- T((S^a V)(S)), increasing in a. Stops at the first a
/// where consecutive stages agree at every computable level.
struct TorsionSubReport {
    bool stabilized = false;
    long stabilized_at = -1;
    FISubObject sub; // window N - stabilized_at
    long certificate_level = -1; // levels above this are torsion (a + d bound)
    std::vector<std::vector<long>> stage_dims; // per stage, per level total gens
};

TorsionSubReport torsion_subobject(const TruncatedFIModule& v, const TorsionTheory& tau);

/// True iff the torsion subobject is all of V (throws TruncationError when
/// the chain did not stabilize inside the window).
bool membership_overline_t(const TruncatedFIModule& v, const TorsionTheory& tau);

/// In-window tail membership: all levels from some index on lie in the
/// torsion class. For finitely generated modules this is the same notion the
/// colim-lim formula decides; the two are cross-checked in the test suites.
struct TailReport {
    bool member = false;
    long from_level = -1; // smallest suffix start when member
};

TailReport torsion_tail(const TruncatedFIModule& v, const TorsionTheory& tau);

/// F^n V: the largest subfunctor whose levels >= n lie in the levelwise
/// radical, computed by intersecting pushforward preimages inside the window.
FISubObject filtration_f(const TruncatedFIModule& v, const TorsionTheory& tau, long n);

/// Levelwise torsion envelope with induced structure maps and unit.
struct EnvelopeResult {
    TruncatedFIModule obj;
    FIMorphism unit;
};

EnvelopeResult envelope_fi(const TruncatedFIModule& v, const TorsionTheory& tau);

/// Randomized closedness check: sample C-isomorphisms u : A -> B with kernel
/// and cokernel in the requested class and test Hom(u, L) bijectivity.
struct ClosedCheckSpec {
    enum class Kind { ThatA, That, Ttilde };
    Kind kind = Kind::ThatA;
    long a = 0; // for ThatA
};

struct ClosedVerdict {
    bool pass = true;
    long trials_run = 0;
    long counterexample_trial = -1;
    std::string note; // "no counterexample found (semi-decision)" on pass
};

ClosedVerdict is_closed(const TruncatedFIModule& l, const TorsionTheory& tau,
                        const ClosedCheckSpec& spec, std::uint64_t seed, long trials);

/// One localization stage L^k = T^k S^k E_tau, with the canonical map l_k and
/// the connecting map c_k : L^k -> L^{k+1} (on the shrunk window).
struct LStage {
    TruncatedFIModule obj; // window N - k
    FIMorphism l;          // V|_{N-k} -> L^k
    bool has_c = false;
    FIMorphism c;          // L^k|_{N-k-1} -> L^{k+1}
};

LStage l_stage(const TruncatedFIModule& v, const TorsionTheory& tau, long k);

struct LTowerReport {
    long kmax = 0;
    std::vector<std::vector<long>> stage_dims; // per stage, per level total gens
    std::vector<bool> c_is_iso;                // per k < kmax (on shared windows)
    long stabilized_from = -1; // first k with all later connecting maps isos
};

LTowerReport l_truncated(const TruncatedFIModule& v, const TorsionTheory& tau, long kmax);

} // namespace fimod
