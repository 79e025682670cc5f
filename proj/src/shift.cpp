#include "fimod/shift.hpp"

#include "fimod/errors.hpp"

namespace fimod {

namespace {

// [n+a] -> [n+1+a]: identity on [n], the appended block moves up one slot.
Injection shift_step(long n, long a) {
    Injection phi{n + a, n + a + 1, {}};
    for (long k = 1; k <= n; ++k)
        phi.images.push_back(k);
    for (long k = 1; k <= a; ++k)
        phi.images.push_back(n + 1 + k);
    return phi;
}

} // namespace

TruncatedFIModule shift(const TruncatedFIModule& v, long a) {
    if (a < 0)
        throw ValidationError("negative shift");
    if (a > v.N)
        throw TruncationError("shift by " + std::to_string(a) + " exceeds truncation " +
                              std::to_string(v.N));
    const int n_new = v.N - static_cast<int>(a);
    std::vector<ModObj> levels;
    for (int n = 0; n <= n_new; ++n)
        levels.push_back(v.levels[n + a]);
    std::vector<ModMap> incl;
    for (int n = 0; n < n_new; ++n)
        incl.push_back(evaluate_injection(v, shift_step(n, a)));
    std::vector<std::vector<ModMap>> transp(n_new + 1);
    for (int n = 0; n <= n_new; ++n)
        for (long i = 1; i <= n - 1; ++i)
            transp[n].push_back(v.t(n + a, i));
    return make_fi_module(v.coeff, n_new, std::move(levels), std::move(incl), std::move(transp));
}

FIMorphism shift_morphism(const FIMorphism& f, long a) {
    TruncatedFIModule sd = shift(f.dom, a), sc = shift(f.cod, a);
    std::vector<ModMap> maps;
    for (int n = 0; n <= sd.N; ++n)
        maps.push_back(f.maps[n + a]);
    return make_fi_morphism(std::move(sd), std::move(sc), std::move(maps));
}

FIMorphism psi(const TruncatedFIModule& v, long a) {
    TruncatedFIModule sv = shift(v, a);
    TruncatedFIModule dom = truncate(v, sv.N);
    std::vector<ModMap> maps;
    for (int n = 0; n <= sv.N; ++n)
        maps.push_back(evaluate_injection(v, Injection::standard(n, n + a)));
    return make_fi_morphism(std::move(dom), std::move(sv), std::move(maps));
}

long shift_decomposition_dims(long d, long a, long n) {
    if (d < 0 || a < 0 || n < 0)
        throw ValidationError("shift_decomposition_dims needs non-negative arguments");
    return static_cast<long>(all_injections(d, n + a).size());
}

long shift_decomposition_sum(long d, long a, long n) {
    long total = 0;
    for (long j = 0; j <= std::min(d, a); ++j)
        total += binomial(d, j) * count_injections(j, a) * count_injections(d - j, n);
    return total;
}

} // namespace fimod
