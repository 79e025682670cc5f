#pragma once

#include "fimod/fi_module.hpp"

namespace fimod {

/// Positive shift: level n of shift(V, a) is level n+a of V, with the extra a
/// points appended after the existing elements. Output truncation is N - a.
TruncatedFIModule shift(const TruncatedFIModule& v, long a);

/// Shift of a morphism (levelwise re-indexing).
FIMorphism shift_morphism(const FIMorphism& f, long a);

/// The canonical map psi_a : V -> shift(V, a) induced by the standard
/// inclusions [n] into [n+a]; both sides truncated at N - a.
FIMorphism psi(const TruncatedFIModule& v, long a);

/// dim of shift(free(d))(n) for a single-object field, by direct enumeration.
long shift_decomposition_dims(long d, long a, long n);

/// The same count through the summand decomposition:
/// sum_j C(d,j) * |Inj([j],[a])| * |Inj([d-j],[n])|.
long shift_decomposition_sum(long d, long a, long n);

} // namespace fimod
