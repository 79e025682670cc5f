#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace fimod {

/// An injection [m] -> [n] in the skeleton of FI, stored 1-based as the image
/// tuple (phi(1), ..., phi(m)).
struct Injection {
    long m = 0, n = 0;
    std::vector<long> images;

    static Injection identity(long n);
    static Injection standard(long m, long n); // k -> k
    static Injection adjacent_transposition(long n, long i); // swaps i, i+1

    long operator()(long k) const { return images[k - 1]; } // 1-based
    bool operator==(const Injection&) const = default;
    std::string str() const;
};

/// Throws ValidationError unless images are distinct and within 1..n.
void validate_injection(const Injection& phi);

Injection compose_inj(const Injection& psi, const Injection& phi); // psi o phi

/// All injections [m] -> [n] in lexicographic order of the image tuple;
/// empty when m > n, the single empty injection when m = 0.
std::vector<Injection> all_injections(long m, long n);

long count_injections(long m, long n); // n!/(n-m)! for m <= n, else 0

/// Position of phi in the all_injections(m, n) order.
std::size_t injection_index(const Injection& phi);

/// A word i1, ..., ik of adjacent transpositions with
/// perm = s_{i1} o s_{i2} o ... o s_{ik} (as functions), found by bubble sort.
/// `perm` is the image tuple of a permutation of [n].
std::vector<long> adjacent_word(const std::vector<long>& perm);

/// A different valid word for the same permutation (reverse-direction scan);
/// used to cross-check that evaluation is factorization independent.
std::vector<long> adjacent_word_alt(const std::vector<long>& perm);

/// The sorting permutation and the canonical data of phi: the permutation
/// pi of [n] with pi(k) = phi(k) for k <= m and the complement ascending.
std::vector<long> completion_permutation(const Injection& phi);

long binomial(long n, long k);

/// All size-k subsets of [n], each ascending, in lexicographic order.
std::vector<std::vector<long>> subsets_of_size(long n, long k);

} // namespace fimod
