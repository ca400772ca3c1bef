#include "sigwedge/combinat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sigwedge {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // result * (n - k + i) / i is exact at every step.
        std::uint64_t g = std::gcd(result, i);
        std::uint64_t num = (n - k + i) / (i / g);
        std::uint64_t out = 0;
        if (__builtin_mul_overflow(result / g, num, &out)) {
            throw std::overflow_error("binomial coefficient overflows 64 bits");
        }
        result = out;
    }
    return result;
}

std::uint64_t factorial(std::uint64_t k) {
    std::uint64_t result = 1;
    for (std::uint64_t i = 2; i <= k; ++i) {
        if (__builtin_mul_overflow(result, i, &result)) throw std::overflow_error("factorial overflows 64 bits");
    }
    return result;
}

std::uint64_t int_power(std::uint64_t n, std::uint64_t k) {
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        if (__builtin_mul_overflow(result, n, &result)) throw std::overflow_error("power overflows 64 bits");
    }
    return result;
}

KSubset::KSubset(std::vector<Vertex> elems) : elems_(std::move(elems)) {
    if (elems_.empty()) throw std::invalid_argument("k-subset must be non-empty");
    for (std::size_t i = 1; i < elems_.size(); ++i) {
        if (elems_[i - 1] >= elems_[i]) throw std::invalid_argument("k-subset must be strictly increasing");
    }
}

bool KSubset::contains(Vertex x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }

std::optional<std::size_t> KSubset::position_of(Vertex x) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
    if (it == elems_.end() || *it != x) return std::nullopt;
    return static_cast<std::size_t>(it - elems_.begin());
}

KSubset KSubset::exchange(Vertex out, Vertex in) const {
    if (!contains(out) || contains(in)) throw std::invalid_argument("invalid exchange");
    std::vector<Vertex> e;
    e.reserve(elems_.size());
    for (Vertex x : elems_) {
        if (x != out) e.push_back(x);
    }
    e.insert(std::lower_bound(e.begin(), e.end(), in), in);
    return KSubset(std::move(e));
}

std::uint64_t rank(const KSubset& u, std::size_t n) {
    const std::size_t k = u.size();
    if (u[k - 1] >= n) throw std::out_of_range("subset element out of range");
    std::uint64_t r = 0;
    Vertex next = 0;
    for (std::size_t i = 0; i < k; ++i) {
        // Count the subsets that agree on positions < i and have a smaller entry at i.
        for (Vertex x = next; x < u[i]; ++x) r += binomial(n - 1 - x, k - 1 - i);
        next = u[i] + 1;
    }
    return r;
}

KSubset unrank(std::uint64_t index, std::size_t n, std::size_t k) {
    if (k == 0 || k > n) throw std::out_of_range("k out of range for unrank");
    if (index >= binomial(n, k)) throw std::out_of_range("subset index out of range");
    std::vector<Vertex> elems;
    elems.reserve(k);
    Vertex x = 0;
    for (std::size_t i = 0; i < k; ++i) {
        for (;; ++x) {
            std::uint64_t block = binomial(n - 1 - x, k - 1 - i);
            if (index < block) break;
            index -= block;
        }
        elems.push_back(x++);
    }
    return KSubset(std::move(elems));
}

std::vector<KSubset> all_subsets(std::size_t n, std::size_t k) {
    if (k == 0 || k > n) throw std::out_of_range("k out of range");
    std::vector<KSubset> out;
    out.reserve(binomial(n, k));
    std::vector<Vertex> cur(k);
    std::iota(cur.begin(), cur.end(), Vertex{0});
    while (true) {
        out.emplace_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::string to_string(const KSubset& u) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < u.size(); ++i) out << (i ? "," : "") << u[i];
    out << '}';
    return out.str();
}

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> hit(images_.size(), false);
    for (std::size_t x : images_) {
        if (x >= images_.size() || hit[x]) throw std::invalid_argument("not a permutation");
        hit[x] = true;
    }
}

Permutation Permutation::identity(std::size_t k) {
    std::vector<std::size_t> im(k);
    std::iota(im.begin(), im.end(), std::size_t{0});
    return Permutation(std::move(im));
}

Permutation Permutation::k_cycle(std::size_t k) {
    std::vector<std::size_t> im(k);
    for (std::size_t j = 0; j < k; ++j) im[j] = (j + 1) % k;
    return Permutation(std::move(im));
}

Permutation Permutation::transposition(std::size_t k, std::size_t i, std::size_t j) {
    if (i >= k || j >= k) throw std::out_of_range("transposition index out of range");
    auto p = identity(k);
    std::swap(p.images_[i], p.images_[j]);
    return p;
}

Sign Permutation::sign() const {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        for (std::size_t j = i + 1; j < images_.size(); ++j) {
            if (images_[i] > images_[j]) ++inversions;
        }
    }
    return inversions % 2 == 0 ? Sign::Positive : Sign::Negative;
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t j = 0; j < images_.size(); ++j) inv[images_[j]] = j;
    return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
    for (std::size_t j = 0; j < images_.size(); ++j) {
        if (images_[j] != j) return false;
    }
    return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw std::invalid_argument("cannot compose permutations of different sizes");
    std::vector<std::size_t> im(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) im[j] = p(q(j));
    return Permutation(std::move(im));
}

std::vector<Permutation> all_permutations(std::size_t k) {
    std::vector<Permutation> out;
    out.reserve(factorial(k));
    std::vector<std::size_t> im(k);
    std::iota(im.begin(), im.end(), std::size_t{0});
    do {
        out.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

std::uint64_t rank(const Permutation& p) {
    // Lehmer code in the factorial number system.
    const std::size_t k = p.size();
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < k; ++i) {
        std::uint64_t smaller = 0;
        for (std::size_t j = i + 1; j < k; ++j) {
            if (p(j) < p(i)) ++smaller;
        }
        r = r * (k - i) + smaller;
    }
    return r;
}

std::string to_string(const Permutation& p) {
    std::ostringstream out;
    out << '[';
    for (std::size_t j = 0; j < p.size(); ++j) out << (j ? " " : "") << p(j);
    out << ']';
    return out.str();
}

}  // namespace sigwedge
