#include "fimod/scalar.hpp"

#include "fimod/errors.hpp"

namespace fimod {

Scalar parse_scalar(const std::string& s) {
    if (s.empty())
        throw ValidationError("empty scalar literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw ValidationError("bad scalar literal: '" + s + "'");
    q.canonicalize();
    return q;
}

std::string format_scalar(const Scalar& q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Scalar mod_p(const Scalar& q, long p) {
    if (q.get_den() != 1)
        throw ValidationError("non-integer value in mod-p context: " + format_scalar(q));
    Int r = q.get_num() % p;
    if (r < 0)
        r += p;
    return Scalar(r);
}

Int inverse_mod(const Int& a, const Int& p) {
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
        throw ValidationError("element not invertible mod " + p.get_str());
    return inv;
}

} // namespace fimod
