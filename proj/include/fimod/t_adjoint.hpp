#pragma once

#include "fimod/fi_module.hpp"
#include "fimod/shift.hpp"

namespace fimod {

/// One summand of the decomposition of shift(free(d), a): the subset T of [d]
/// sent into the appended points (ascending), together with the injection
/// psi : T -> [a] (values aligned with the sorted T). The block carries a copy
/// of V(d - |T|).
struct TBlock {
    std::vector<long> tset;
    std::vector<long> psi;

    bool operator==(const TBlock&) const = default;
};

/// All blocks at degree d for shift amount a, in a fixed deterministic order.
std::vector<TBlock> t_blocks(long d, long a);
std::size_t t_block_index(const std::vector<TBlock>& blocks, const std::vector<long>& tset,
                          const std::vector<long>& psi);

/// The right adjoint of the shift, realized degreewise as the direct sum of
/// V(d - |T|) over the blocks, with structure maps induced by precomposition
/// on free modules. Truncation is preserved. The degreewise split embedding
/// of V(d) (the empty-T block) and its retraction come along.
struct TAdjointResult {
    long a = 0;
    TruncatedFIModule obj;
    std::vector<std::vector<TBlock>> blocks; // per level
    std::vector<SumDecomposition> sums;      // per level block structure
    std::vector<ModMap> embed;               // V_d -> (T^a V)_d
    std::vector<ModMap> retract;             // (T^a V)_d -> V_d
};

TAdjointResult t_adjoint(const TruncatedFIModule& v, long a);

/// T^a applied to a morphism: blockwise f_{d-|T|}.
FIMorphism t_adjoint_morphism(const TAdjointResult& tv, const TAdjointResult& tw,
                              const FIMorphism& f);

/// Adjunction transpose of f : shift(A, a) -> W into A -> T^a W. `a_orig` is
/// the unshifted domain (needed to evaluate its structure maps); `tw` must be
/// t_adjoint(W, a). The result lives on the window of W.
FIMorphism transpose_to_adjoint(const TruncatedFIModule& a_orig, long a, const FIMorphism& f,
                                const TAdjointResult& tw);

/// Inverse transpose of g : A -> T^a W into shift(A, a) -> W (windows shrink
/// by a).
FIMorphism transpose_from_adjoint(const FIMorphism& g, const TruncatedFIModule& w,
                                  const TAdjointResult& tw);

/// Unit A -> T^a shift(A, a) of the adjunction (transpose of the identity).
FIMorphism adjunction_unit(const TruncatedFIModule& a_mod, long a, const TAdjointResult& tsa);

/// Counit shift(T^a W, a) -> W (projection onto the canonical block).
FIMorphism adjunction_counit(const TruncatedFIModule& w, const TAdjointResult& tw);

} // namespace fimod
