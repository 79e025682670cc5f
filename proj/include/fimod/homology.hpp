#pragma once

#include "fimod/fi_ops.hpp"

#include <optional>

namespace fimod {

/// Ordered subset bases for one term of the subset complex: at level n the
/// blocks are the subsets T of [n] with |T| = n - a, each carrying V(T)
/// relabeled to an initial segment order-preservingly.
struct SignedSubsetBasis {
    long a = 0;
    std::vector<std::vector<std::vector<long>>> subsets; // per level: list of T (ascending)
    std::vector<SumDecomposition> sums;                  // per level block structure
};

/// One term of the subset complex, with its block bookkeeping. `signed_action`
/// selects the sign-twisted coinvariant realization (the complex) versus the
/// plain subset functor (used by the colimit route to H1).
struct SubsetTerm {
    TruncatedFIModule obj;
    SignedSubsetBasis basis;
};

SubsetTerm subset_term(const TruncatedFIModule& v, long a, bool signed_action);

/// B^{-a}(V): level n is the direct sum over injections [a] -> [n] of the
/// complement values. B^0(V) = V up to block packaging.
TruncatedFIModule b_term(const TruncatedFIModule& v, long a);

/// The complex Btilde^{-*}(V) down to term -top, with differentials
/// d_a : term(a) -> term(a-1); d o d = 0 holds exactly.
struct FIChainComplex {
    long top = 0;
    std::vector<SubsetTerm> terms;          // terms[a], 0 <= a <= top
    std::vector<FIMorphism> differentials;  // differentials[a-1] = d_a, 1 <= a <= top
};

FIChainComplex btilde_complex(const TruncatedFIModule& v, long top);

/// H_a(V) = H^{-a} of the subset complex, with induced FI structure.
TruncatedFIModule homology_a(const TruncatedFIModule& v, long a);

/// H0 via the complex together with a comparison isomorphism onto h0(V).
struct ComparisonResult {
    TruncatedFIModule lhs, rhs;
    std::optional<FIMorphism> iso; // lhs -> rhs when the comparison succeeded
    bool matches() const { return iso.has_value(); }
};

ComparisonResult compare_h0_paths(const TruncatedFIModule& v);

/// H1 as the kernel of colim_{T proper} V(T) -> V(S), the colimit realized as
/// the coequalizer of the two subset-restriction maps.
TruncatedFIModule h1_via_colim(const TruncatedFIModule& v);

/// Comparison isomorphism homology_a(V,1) -> h1_via_colim(V).
ComparisonResult compare_h1_paths(const TruncatedFIModule& v);

/// The canonical map H_a(V) -> S^1 H_a(V) is zero (its components are the
/// inclusion maps of H_a(V)); returns the first offending level on failure.
struct ShiftZeroVerdict {
    bool pass = true;
    int witness_level = -1;
};

ShiftZeroVerdict shift_zero_check(const TruncatedFIModule& v, long a);

/// colim over subsets of [s] of size <= bound, as a presented object with the
/// projection from the block sum.
struct BoundedColimit {
    ModObj obj;
    ModMap proj; // block sum -> obj
    SumDecomposition blocks;
    std::vector<std::vector<long>> subsets;
};

BoundedColimit bounded_subset_colimit(const TruncatedFIModule& v, long s, long bound);

/// Whether the bounded-subset colimit at level s maps isomorphically onto
/// V(s) (requires s <= V.N).
bool colimit_identity_holds(const TruncatedFIModule& v, long s, long bound);

struct StableRangeReport {
    bool exceeds_truncation = false;
    long n_bound = -1; // top nonzero H0/H1 level + 1 (at least 1)
    long n_min = -1;   // smallest bound passing at every level in-window
    bool verified = false;
    std::vector<long> h0_dims, h1_dims;
};

StableRangeReport stable_range(const TruncatedFIModule& v);

/// Rebuild levels above V.N as bounded-subset colimits with the verified
/// stable bound; extending to N' = V.N reproduces V.
TruncatedFIModule extend(const TruncatedFIModule& v, int n_prime, long n_stable);

} // namespace fimod
