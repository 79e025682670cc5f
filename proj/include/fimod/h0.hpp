#pragma once

#include "fimod/fi_ops.hpp"

#include <string>

namespace fimod {

/// H0(V) with its canonical epimorphism. Level n is the cokernel of the
/// combined map from the n cardinality-(n-1) standard images; every smaller
/// subset factors through one of those, so they suffice.
FIQuotient h0(const TruncatedFIModule& v);

/// H0 on morphisms (descent through the canonical projections).
FIMorphism h0_morphism(const FIQuotient& hv, const FIQuotient& hw, const FIMorphism& f);

struct GenerationReport {
    enum class Status { Degree, None, ExceedsTruncation };
    Status status = Status::None;
    long gen_degree = -1;                        // valid when status == Degree
    std::vector<std::vector<long>> h0_level_dims; // per level, per object
    bool gr_finitely_generated = false;          // within the window
    int window = 0;

    std::string degree_str() const;
};

/// Smallest verified generation degree: the top nonzero H0 level inside the
/// window, flagged "exceeds-truncation" when H0 is still alive at level N.
GenerationReport generation_degree(const TruncatedFIModule& v);

/// (f epi levelwise?, H0(f) epi levelwise?) — the two agree.
std::pair<bool, bool> epi_iff_h0_epi(const FIMorphism& f);

} // namespace fimod
