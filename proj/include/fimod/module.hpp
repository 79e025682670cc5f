#pragma once

#include "fimod/coeff.hpp"
#include "fimod/matrix.hpp"

#include <optional>
#include <vector>

namespace fimod {

/// One per-object component of a finitely presented module, in canonical
/// form. Over a field: `gens` is the dimension and `tor` is empty. Over the
/// integers: the first tor.size() generators have orders tor[0] | tor[1] | ...
/// (each >= 2) and the remaining generators are free.
struct Comp {
    long gens = 0;
    std::vector<Int> tor;

    long free_rank() const { return gens - static_cast<long>(tor.size()); }
    bool is_zero() const { return gens == 0; }
    bool operator==(const Comp&) const = default;

    Mat relation_matrix() const; // gens x tor.size(), diag(tor)
};

/// Finitely presented module over the coefficient category, canonical per
/// object. Two ModObjs compare equal exactly when they are isomorphic.
struct ModObj {
    CoeffCategory coeff;
    std::vector<Comp> comps;

    static ModObj zero(const CoeffCategory& c);
    static ModObj field_dims(const CoeffCategory& c, std::vector<long> dims);
    static ModObj z_module(std::vector<Int> tor, long free_rank);

    bool is_zero() const;
    long total_gens() const;
    long dim(std::size_t object) const { return comps.at(object).gens; }

    bool operator==(const ModObj&) const = default;
    std::string describe() const;
};

/// A map between two ModObjs: one matrix per object on chosen generators,
/// stored normalized (entries mod p over F_p; torsion rows reduced mod their
/// order over Z). Construction verifies that relations map into relations, so
/// every held ModMap is a well-defined morphism of the presented quotients.
class ModMap {
public:
    ModMap() = default;
    static ModMap make(ModObj dom, ModObj cod, std::vector<Mat> blocks);
    static ModMap identity(const ModObj& a);
    static ModMap zero(const ModObj& dom, const ModObj& cod);

    const ModObj& dom() const { return dom_; }
    const ModObj& cod() const { return cod_; }
    const Mat& block(std::size_t o) const { return blocks_.at(o); }
    const std::vector<Mat>& blocks() const { return blocks_; }

    bool is_zero() const;
    bool operator==(const ModMap&) const = default;

private:
    ModObj dom_, cod_;
    std::vector<Mat> blocks_;
};

ModMap compose(const ModMap& g, const ModMap& f); // g after f
ModMap add(const ModMap& f, const ModMap& g);
ModMap sub(const ModMap& f, const ModMap& g);
ModMap negate(const ModMap& f);

bool is_mono(const ModMap& f);
bool is_epi(const ModMap& f);
bool is_iso(const ModMap& f);

struct SubObject {
    ModObj obj;
    ModMap incl; // obj -> ambient, a monomorphism
};

struct QuotientObject {
    ModObj obj;
    ModMap proj; // ambient -> obj, an epimorphism
};

struct SumDecomposition {
    ModObj obj;
    std::vector<ModMap> inj;  // summand -> sum
    std::vector<ModMap> proj; // sum -> summand
};

struct PullbackResult {
    ModObj obj;
    ModMap to_a, to_b;
};

SubObject kernel(const ModMap& f);
QuotientObject cokernel(const ModMap& f);
SubObject image(const ModMap& f);
PullbackResult pullback(const ModMap& f, const ModMap& g); // shared codomain
SumDecomposition direct_sum(const CoeffCategory& c, const std::vector<ModObj>& objs);

/// h with incl o h = g, when it exists (incl need not be mono, but must be
/// for the factorization to be unique).
std::optional<ModMap> factor_through_mono(const ModMap& g, const ModMap& incl);

/// h with h o proj = g; requires proj epi and g to kill ker(proj).
std::optional<ModMap> factor_through_epi(const ModMap& g, const ModMap& proj);

/// Two-sided inverse of an isomorphism.
std::optional<ModMap> inverse_of(const ModMap& f);

/// Subobject of `amb` generated by the given element columns (one matrix per
/// object; columns are coordinates on amb's generators).
SubObject sub_from_generators(const ModObj& amb, const std::vector<Mat>& gens);

SubObject preimage(const ModMap& f, const SubObject& s); // f^{-1}(s) <= dom(f)

/// Canonical form of Z^gens / column-span(rels), with the base-change data:
/// to_canon o from_canon = id, from_canon o to_canon = id modulo rels.
struct PresentedComp {
    Comp comp;
    Mat to_canon;   // comp.gens x gens
    Mat from_canon; // gens x comp.gens
};
PresentedComp canonicalize_presentation(long gens, const Mat& rels);

/// Generators of the lattice {v : M v lies in the column span of rels}.
Mat preimage_lattice_z(const Mat& m, const Mat& rels);
SubObject subobject_sum(const ModObj& amb, const std::vector<SubObject>& parts);
SubObject intersect(const SubObject& s1, const SubObject& s2);
bool subobject_leq(const SubObject& s1, const SubObject& s2);
bool subobject_eq(const SubObject& s1, const SubObject& s2);
SubObject full_subobject(const ModObj& a);
SubObject zero_subobject(const ModObj& a);

} // namespace fimod
