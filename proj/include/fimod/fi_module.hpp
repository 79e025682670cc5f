#pragma once

#include "fimod/injections.hpp"
#include "fimod/module.hpp"

namespace fimod {

/// A finitely presented FI-module stored on the window [0, N]: one ModObj per
/// level plus the FI generators (one inclusion per level, the adjacent
/// transpositions per level). Construction checks the relation families
///   t^2 = 1, far commutation, braid,
///   incl o t_{n,i} = t_{n+1,i} o incl,
///   t_{n+2,n+1} o incl o incl = incl o incl,
/// which present FI on the window, so evaluation at an arbitrary injection is
/// independent of the chosen factorization into generators.
struct TruncatedFIModule {
    CoeffCategory coeff;
    int N = 0;
    std::vector<ModObj> levels;              // levels[n], 0 <= n <= N
    std::vector<ModMap> incl;                // incl[n]: V_n -> V_{n+1}, 0 <= n < N
    std::vector<std::vector<ModMap>> transp; // transp[n][i-1] = t_{n,i}, 1 <= i <= n-1

    const ModObj& level(int n) const { return levels.at(n); }
    const ModMap& inclusion(int n) const { return incl.at(n); }
    const ModMap& t(int n, long i) const { return transp.at(n).at(i - 1); }

    bool is_zero() const;
    std::vector<long> level_dims(std::size_t object = 0) const;

    bool operator==(const TruncatedFIModule&) const = default;
};

TruncatedFIModule make_fi_module(CoeffCategory coeff, int N, std::vector<ModObj> levels,
                                 std::vector<ModMap> incl, std::vector<std::vector<ModMap>> transp,
                                 bool check = true);

/// Throws ValidationError naming the first violated relation.
void verify_fi_invariants(const TruncatedFIModule& v);

TruncatedFIModule zero_fi_module(const CoeffCategory& c, int N);

/// Forgets levels above n_new (n_new <= N).
TruncatedFIModule truncate(const TruncatedFIModule& v, int n_new);

struct FIMorphism;
FIMorphism truncate_fi_morphism(const FIMorphism& f, int n_new);

/// V(phi): the canonical factorization (sorting permutation after standard
/// inclusions), evaluated as a product of stored generator matrices.
ModMap evaluate_injection(const TruncatedFIModule& v, const Injection& phi);

/// Same value computed along an alternative reduced word; exposed for the
/// factorization-independence checks.
ModMap evaluate_injection_alt(const TruncatedFIModule& v, const Injection& phi);

/// Levelwise maps commuting with the FI generators (checked at construction).
struct FIMorphism {
    TruncatedFIModule dom, cod; // same coeff, same N
    std::vector<ModMap> maps;   // maps[n]: dom V_n -> cod W_n

    const ModMap& at(int n) const { return maps.at(n); }
    bool is_zero() const;
    bool operator==(const FIMorphism&) const = default;
};

FIMorphism make_fi_morphism(TruncatedFIModule dom, TruncatedFIModule cod,
                            std::vector<ModMap> maps, bool check = true);
FIMorphism identity_fi(const TruncatedFIModule& v);
FIMorphism zero_fi_morphism(const TruncatedFIModule& dom, const TruncatedFIModule& cod);
FIMorphism compose_fi(const FIMorphism& g, const FIMorphism& f);
FIMorphism add_fi(const FIMorphism& f, const FIMorphism& g);
FIMorphism sub_fi(const FIMorphism& f, const FIMorphism& g);

bool is_mono_fi(const FIMorphism& f);
bool is_epi_fi(const FIMorphism& f);
bool is_iso_fi(const FIMorphism& f);
std::optional<FIMorphism> inverse_fi(const FIMorphism& f);

struct FISumDecomposition {
    TruncatedFIModule obj;
    std::vector<FIMorphism> inj, proj;
};

FISumDecomposition direct_sum_fi(const CoeffCategory& c, int N,
                                 const std::vector<TruncatedFIModule>& parts);

// --- free modules -----------------------------------------------------------

/// The free FI-module on one generator in degree d at object r: level n is the
/// direct sum of copies of H_r indexed by the injections [d] -> [n], with the
/// FI generators acting by post-composition on the index set.
TruncatedFIModule free_module(const CoeffCategory& c, long d, std::size_t object, int N);

/// The morphism from the degree-d free module classified by an element of
/// V(d)(object): basis vector e_phi goes to V(phi) applied to the element.
FIMorphism element_to_morphism(const TruncatedFIModule& free, const TruncatedFIModule& v, long d,
                               std::size_t object, const Mat& element);

/// Inverse direction: the image of the identity-injection basis vector.
Mat morphism_to_element(const FIMorphism& f, long d, std::size_t object);

} // namespace fimod
