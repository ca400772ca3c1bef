#pragma once

// Exact integer matrices.
//
// Storage is row-compressed (only nonzeros are kept) because the matrices of
// interest, A(G^k) and the anti-symmetrizer, are n^k on a side but have very
// few nonzeros per row. All arithmetic is checked and throws
// std::overflow_error instead of wrapping.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace sigwedge {

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

class IntMatrix {
  public:
    using Entry = std::int64_t;

    struct Term {
        std::size_t col = 0;
        Entry value = 0;
        friend bool operator==(const Term&, const Term&) = default;
    };

    struct Triplet {
        std::size_t row = 0;
        std::size_t col = 0;
        Entry value = 0;
    };

    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    /// Duplicate coordinates are summed; zero sums are dropped.
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<Entry>> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t nonzeros() const noexcept;

    Entry at(std::size_t r, std::size_t c) const;
    /// Nonzeros of row r sorted by column.
    std::span<const Term> row(std::size_t r) const { return data_.at(r); }
    Entry row_sum(std::size_t r) const;

    IntMatrix transpose() const;
    IntMatrix scaled(Entry factor) const;
    bool is_symmetric() const;
    std::vector<std::vector<Entry>> to_dense() const;

    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::vector<Term>> data_;
};

/// Tensor (Kronecker) product.
IntMatrix kron(const IntMatrix& a, const IntMatrix& b);

/// Integer matrix with an explicit positive denominator. When `root` is set
/// the value is mat / sqrt(denom), otherwise mat / denom; irrational factors
/// are never materialized.
struct ScaledMatrix {
    IntMatrix mat;
    std::int64_t denom = 1;
    bool root = false;

    /// The exact integer value. Requires root == false and every entry to be
    /// divisible by denom; throws std::domain_error otherwise.
    IntMatrix exact() const;
};

}  // namespace sigwedge
