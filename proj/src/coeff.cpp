#include "fimod/coeff.hpp"

#include "fimod/errors.hpp"

#include <set>
#include <sstream>

namespace fimod {

bool is_prime(long p) {
    if (p < 2)
        return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

CoeffCategory CoeffCategory::prime_field(long p) {
    if (!is_prime(p))
        throw ValidationError("prime field needs a prime, got " + std::to_string(p));
    return CoeffCategory{Kind::PrimeField, p, {"*"}};
}

CoeffCategory CoeffCategory::rationals() { return CoeffCategory{Kind::Rationals, 0, {"*"}}; }

CoeffCategory CoeffCategory::integers() { return CoeffCategory{Kind::Integers, 0, {"*"}}; }

CoeffCategory CoeffCategory::discrete(long base_p, std::vector<std::string> objects) {
    if (base_p != 0 && !is_prime(base_p))
        throw ValidationError("discrete base field needs a prime or 0 (rationals)");
    if (objects.empty())
        throw ValidationError("discrete category needs at least one object");
    std::set<std::string> seen(objects.begin(), objects.end());
    if (seen.size() != objects.size())
        throw ValidationError("discrete category object names must be distinct");
    return CoeffCategory{Kind::Discrete, base_p, std::move(objects)};
}

std::size_t CoeffCategory::object_index(const std::string& name) const {
    for (std::size_t i = 0; i < objects.size(); ++i)
        if (objects[i] == name)
            return i;
    throw ValidationError("'" + name + "' is not an object of " + describe());
}

std::string CoeffCategory::describe() const {
    std::ostringstream os;
    switch (kind) {
    case Kind::PrimeField: os << "F" << p; break;
    case Kind::Rationals: os << "Q"; break;
    case Kind::Integers: os << "Z"; break;
    case Kind::Discrete:
        os << "discrete(" << (p ? "F" + std::to_string(p) : std::string("Q")) << ";";
        for (std::size_t i = 0; i < objects.size(); ++i)
            os << (i ? "," : "") << objects[i];
        os << ")";
        break;
    }
    return os.str();
}

} // namespace fimod
