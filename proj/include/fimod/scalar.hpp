#pragma once

#include <gmpxx.h>

#include <string>

namespace fimod {

/// All matrix entries in the engine are exact rationals. Integer and
/// prime-field contexts keep the denominator at 1; the ring semantics live in
/// CoeffCategory / FieldOps, not in the scalar itself.
using Scalar = mpq_class;
using Int = mpz_class;

inline Scalar scalar_of(long n) { return Scalar(n); }

inline bool is_integer(const Scalar& q) { return q.get_den() == 1; }

/// Parses "a", "-a" or "a/b". Throws std::invalid_argument on garbage.
Scalar parse_scalar(const std::string& s);

/// Canonical text form: "a" when the denominator is 1, else "a/b".
std::string format_scalar(const Scalar& q);

/// Least non-negative residue of the numerator mod p (denominator must be 1).
Scalar mod_p(const Scalar& q, long p);

/// Inverse of a mod p; throws ValidationError if gcd(a, p) != 1.
Int inverse_mod(const Int& a, const Int& p);

} // namespace fimod
