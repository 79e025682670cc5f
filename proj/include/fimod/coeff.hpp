#pragma once

#include "fimod/field_linalg.hpp"

#include <string>
#include <vector>

namespace fimod {

/// The coefficient "ring with several objects". Four flavors: a prime field,
/// the rationals, the integers, or a discrete multi-object category over a
/// field (Hom(r,r) = base field, Hom(r,r') = 0 for r != r'). Every module
/// splits per object, so all module arithmetic runs componentwise.
struct CoeffCategory {
    enum class Kind { PrimeField, Rationals, Integers, Discrete };

    Kind kind = Kind::Rationals;
    long p = 0;                       // prime (PrimeField) or base prime (Discrete; 0 = Q base)
    std::vector<std::string> objects; // object names; {"*"} for single-object flavors

    static CoeffCategory prime_field(long p);
    static CoeffCategory rationals();
    static CoeffCategory integers();
    static CoeffCategory discrete(long base_p, std::vector<std::string> objects);

    bool is_field_case() const { return kind != Kind::Integers; }
    FieldOps field() const { return FieldOps{p}; }
    std::size_t n_objects() const { return objects.size(); }
    std::size_t object_index(const std::string& name) const; // throws if unknown

    bool operator==(const CoeffCategory&) const = default;

    std::string describe() const;
};

bool is_prime(long p);

} // namespace fimod
