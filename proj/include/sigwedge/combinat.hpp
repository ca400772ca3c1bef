#pragma once

// k-subsets with lexicographic ranking, and permutations of {0..k-1}.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sigwedge/signed_graph.hpp"

namespace sigwedge {

/// C(n, k); throws std::overflow_error if it does not fit in 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);
std::uint64_t factorial(std::uint64_t k);
/// n^k; throws std::overflow_error on overflow.
std::uint64_t int_power(std::uint64_t n, std::uint64_t k);

/// Strictly increasing, non-empty sequence of vertices; the wedge
/// u_1 ^ ... ^ u_k.
class KSubset {
  public:
    explicit KSubset(std::vector<Vertex> elems);

    std::size_t size() const noexcept { return elems_.size(); }
    Vertex operator[](std::size_t i) const { return elems_[i]; }
    std::span<const Vertex> elems() const noexcept { return elems_; }

    bool contains(Vertex x) const;
    /// 0-based position of x, if present.
    std::optional<std::size_t> position_of(Vertex x) const;
    /// Replaces `out` (a member) by `in` (a non-member), keeping order.
    KSubset exchange(Vertex out, Vertex in) const;

    friend bool operator==(const KSubset&, const KSubset&) = default;
    friend auto operator<=>(const KSubset&, const KSubset&) = default;

  private:
    std::vector<Vertex> elems_;
};

/// Lexicographic rank among the C(n, k) subsets of {0..n-1}.
std::uint64_t rank(const KSubset& u, std::size_t n);
KSubset unrank(std::uint64_t index, std::size_t n, std::size_t k);
/// All k-subsets of {0..n-1} in rank order.
std::vector<KSubset> all_subsets(std::size_t n, std::size_t k);

std::string to_string(const KSubset& u);

/// Bijection on {0..k-1}; position j holds pi(j).
class Permutation {
  public:
    explicit Permutation(std::vector<std::size_t> images);
    static Permutation identity(std::size_t k);
    /// j -> j+1 (mod k).
    static Permutation k_cycle(std::size_t k);
    /// Swaps i and j.
    static Permutation transposition(std::size_t k, std::size_t i, std::size_t j);

    std::size_t size() const noexcept { return images_.size(); }
    std::size_t operator()(std::size_t j) const { return images_.at(j); }
    std::span<const std::size_t> images() const noexcept { return images_; }

    /// Parity of the inversion count.
    Sign sign() const;
    Permutation inverse() const;
    bool is_identity() const;

    /// pi(t) = (t_{pi(0)}, ..., t_{pi(k-1)}).
    template <typename T>
    std::vector<T> apply(std::span<const T> tuple) const {
        std::vector<T> out(size());
        for (std::size_t j = 0; j < size(); ++j) out[j] = tuple[images_[j]];
        return out;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

  private:
    std::vector<std::size_t> images_;
};

/// (p o q)(j) = p(q(j)). Throws std::invalid_argument on size mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

/// All k! permutations in lexicographic order of their image sequences.
std::vector<Permutation> all_permutations(std::size_t k);
/// Index of p within all_permutations(p.size()).
std::uint64_t rank(const Permutation& p);

std::string to_string(const Permutation& p);

}  // namespace sigwedge
