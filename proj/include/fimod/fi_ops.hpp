#pragma once

#include "fimod/fi_module.hpp"

#include <cstdint>

namespace fimod {

struct FISubObject {
    TruncatedFIModule obj;
    FIMorphism incl;
};

struct FIQuotient {
    TruncatedFIModule obj;
    FIMorphism proj;
};

/// Induce the FI structure on levelwise subobjects. The per-level subobjects
/// must be closed under the structure maps; throws ValidationError otherwise.
FISubObject fi_sub_from_levels(const TruncatedFIModule& v, const std::vector<SubObject>& subs);

/// Dual: descend the FI structure to levelwise quotients.
FIQuotient fi_quot_from_levels(const TruncatedFIModule& v, const std::vector<QuotientObject>& quots);

FISubObject kernel_fi(const FIMorphism& f);
FIQuotient cokernel_fi(const FIMorphism& f);
FISubObject image_fi(const FIMorphism& f); // subobject of the codomain

/// An element of V(degree)(object), as a coordinate column.
struct FIElement {
    long degree = 0;
    std::size_t object = 0;
    Mat vec;
};

/// Smallest subfunctor containing all pushforwards of the generators.
FISubObject submodule_generated(const TruncatedFIModule& v, const std::vector<FIElement>& gens);

/// Deterministic in the seed: a quotient of a random finite direct sum of
/// free modules by a randomly generated subfunctor.
TruncatedFIModule random_fg_module(std::uint64_t seed, const CoeffCategory& c, int N,
                                   long max_gen_degree, long max_gens);

/// Deterministic integer in [lo, hi] from the engine's seeded generator;
/// avoids std::uniform_int_distribution so streams are portable.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next();
    long range(long lo, long hi); // inclusive
};

/// Hom_{FI}(A, L) on the shared window, computed by solving the intertwining
/// systems. The group lives in a single-object host category: a vector space
/// over the base field, or a finitely generated abelian group over Z.
struct FIHomSpace {
    ModObj group;
    std::vector<FIMorphism> gens; // representative morphism per group generator

    // internals for coordinate computations
    TruncatedFIModule dom, cod;
    Mat sol;      // unknown-vector solution basis / lattice generators (K x m)
    Mat zer;      // lattice of morphisms that vanish mod relations (Z case)
    Mat to_canon; // m -> canonical coordinates (Z case; identity over fields)
};

FIHomSpace hom_fi(const TruncatedFIModule& a, const TruncatedFIModule& l);

/// Coordinates of f in the canonical generators of hom.group.
Mat hom_coordinates(const FIHomSpace& h, const FIMorphism& f);

/// Hom(u, L) : Hom(B, L) -> Hom(A, L) for u : A -> B, as a map of the two
/// host-category groups.
ModMap hom_induced_map(const FIHomSpace& hom_b, const FIHomSpace& hom_a, const FIMorphism& u);

} // namespace fimod
