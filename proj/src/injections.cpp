#include "fimod/injections.hpp"

#include "fimod/errors.hpp"

#include <algorithm>
#include <sstream>

namespace fimod {

Injection Injection::identity(long n) { return standard(n, n); }

Injection Injection::standard(long m, long n) {
    if (m > n || m < 0)
        throw ValidationError("no standard inclusion [" + std::to_string(m) + "] into [" +
                              std::to_string(n) + "]");
    Injection phi{m, n, {}};
    for (long k = 1; k <= m; ++k)
        phi.images.push_back(k);
    return phi;
}

Injection Injection::adjacent_transposition(long n, long i) {
    if (i < 1 || i >= n)
        throw ValidationError("adjacent transposition index out of range");
    Injection phi = identity(n);
    std::swap(phi.images[i - 1], phi.images[i]);
    return phi;
}

std::string Injection::str() const {
    std::ostringstream os;
    os << "[" << m << "->" << n << ":";
    for (long k = 0; k < m; ++k)
        os << (k ? "," : " ") << images[k];
    os << "]";
    return os.str();
}

void validate_injection(const Injection& phi) {
    if (phi.m < 0 || phi.m > phi.n || static_cast<long>(phi.images.size()) != phi.m)
        throw ValidationError("malformed injection " + phi.str());
    std::vector<bool> seen(phi.n + 1, false);
    for (long v : phi.images) {
        if (v < 1 || v > phi.n || seen[v])
            throw ValidationError("images not a valid injection " + phi.str());
        seen[v] = true;
    }
}

Injection compose_inj(const Injection& psi, const Injection& phi) {
    if (phi.n != psi.m)
        throw ValidationError("injections not composable");
    Injection c{phi.m, psi.n, {}};
    for (long k = 1; k <= phi.m; ++k)
        c.images.push_back(psi(phi(k)));
    return c;
}

std::vector<Injection> all_injections(long m, long n) {
    std::vector<Injection> result;
    if (m < 0 || m > n)
        return result;
    Injection cur{m, n, std::vector<long>(m)};
    std::vector<bool> used(n + 1, false);
    // depth-first in lexicographic order of the image tuple
    auto rec = [&](auto&& self, long k) -> void {
        if (k > m) {
            result.push_back(cur);
            return;
        }
        for (long v = 1; v <= n; ++v) {
            if (used[v])
                continue;
            used[v] = true;
            cur.images[k - 1] = v;
            self(self, k + 1);
            used[v] = false;
        }
    };
    rec(rec, 1);
    return result;
}

long count_injections(long m, long n) {
    if (m < 0 || m > n)
        return 0;
    long c = 1;
    for (long k = 0; k < m; ++k)
        c *= n - k;
    return c;
}

std::size_t injection_index(const Injection& phi) {
    // Rank of the image tuple in lexicographic order: position k contributes
    // (rank of phi(k) among unused values) * count_injections(m-k-1, n-k-1).
    std::size_t rank = 0;
    for (long k = 0; k < phi.m; ++k) {
        long smaller = 0;
        for (long j = 0; j < k; ++j)
            if (phi.images[j] < phi.images[k])
                ++smaller;
        long digit = phi.images[k] - 1 - smaller;
        rank += static_cast<std::size_t>(digit) *
                static_cast<std::size_t>(count_injections(phi.m - k - 1, phi.n - k - 1));
    }
    return rank;
}

std::vector<long> adjacent_word(const std::vector<long>& perm) {
    // Bubble sort by adjacent position swaps; swapping positions j, j+1 of the
    // image tuple is right-composition with s_j, so the recorded word reversed
    // gives perm = s_{i1} o ... o s_{ik}.
    std::vector<long> a = perm;
    std::vector<long> word;
    const long n = static_cast<long>(a.size());
    bool moved = true;
    while (moved) {
        moved = false;
        for (long j = 0; j + 1 < n; ++j) {
            if (a[j] > a[j + 1]) {
                std::swap(a[j], a[j + 1]);
                word.push_back(j + 1);
                moved = true;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

std::vector<long> adjacent_word_alt(const std::vector<long>& perm) {
    // Same idea scanning right-to-left; generally yields a different reduced
    // expression of the same permutation.
    std::vector<long> a = perm;
    std::vector<long> word;
    const long n = static_cast<long>(a.size());
    bool moved = true;
    while (moved) {
        moved = false;
        for (long j = n - 2; j >= 0; --j) {
            if (a[j] > a[j + 1]) {
                std::swap(a[j], a[j + 1]);
                word.push_back(j + 1);
                moved = true;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

std::vector<long> completion_permutation(const Injection& phi) {
    std::vector<long> img(phi.images.begin(), phi.images.end());
    std::vector<bool> used(phi.n + 1, false);
    for (long v : phi.images)
        used[v] = true;
    for (long v = 1; v <= phi.n; ++v)
        if (!used[v])
            img.push_back(v);
    return img;
}

long binomial(long n, long k) {
    if (k < 0 || k > n)
        return 0;
    long r = 1;
    for (long i = 0; i < k; ++i)
        r = r * (n - i) / (i + 1);
    return r;
}

std::vector<std::vector<long>> subsets_of_size(long n, long k) {
    std::vector<std::vector<long>> result;
    if (k < 0 || k > n)
        return result;
    std::vector<long> cur;
    auto rec = [&](auto&& self, long next) -> void {
        if (static_cast<long>(cur.size()) == k) {
            result.push_back(cur);
            return;
        }
        for (long v = next; v <= n - (k - 1 - static_cast<long>(cur.size())); ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return result;
}

} // namespace fimod
