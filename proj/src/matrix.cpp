#include "sigwedge/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sigwedge {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer matrix entry overflow");
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer matrix entry overflow");
    return out;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets)
    : rows_(rows), cols_(cols), data_(rows) {
    for (const auto& t : triplets) {
        if (t.row >= rows || t.col >= cols) throw std::out_of_range("matrix coordinate out of range");
    }
    std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    for (std::size_t i = 0; i < triplets.size();) {
        const std::size_t r = triplets[i].row;
        const std::size_t c = triplets[i].col;
        Entry sum = 0;
        for (; i < triplets.size() && triplets[i].row == r && triplets[i].col == c; ++i) {
            sum = checked_add(sum, triplets[i].value);
        }
        if (sum != 0) data_[r].push_back({c, sum});
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({i, 1});
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<Entry>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.begin()->size() : 0;
    IntMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("ragged matrix literal");
        std::size_t j = 0;
        for (Entry x : row) {
            if (x != 0) m.data_[i].push_back({j, x});
            ++j;
        }
        ++i;
    }
    return m;
}

std::size_t IntMatrix::nonzeros() const noexcept {
    std::size_t total = 0;
    for (const auto& r : data_) total += r.size();
    return total;
}

IntMatrix::Entry IntMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
    const auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Term& t, std::size_t col) { return t.col < col; });
    return (it != row.end() && it->col == c) ? it->value : 0;
}

IntMatrix::Entry IntMatrix::row_sum(std::size_t r) const {
    Entry sum = 0;
    for (const auto& t : row(r)) sum = checked_add(sum, t.value);
    return sum;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (const auto& term : data_[r]) t.data_[term.col].push_back({r, term.value});
    }
    return t;
}

IntMatrix IntMatrix::scaled(Entry factor) const {
    if (factor == 0) return IntMatrix(rows_, cols_);
    IntMatrix out = *this;
    for (auto& row : out.data_) {
        for (auto& term : row) term.value = checked_mul(term.value, factor);
    }
    return out;
}

bool IntMatrix::is_symmetric() const { return rows_ == cols_ && *this == transpose(); }

std::vector<std::vector<IntMatrix::Entry>> IntMatrix::to_dense() const {
    std::vector<std::vector<Entry>> out(rows_, std::vector<Entry>(cols_, 0));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (const auto& t : data_[r]) out[r][t.col] = t.value;
    }
    return out;
}

namespace {

IntMatrix combine(const IntMatrix& a, const IntMatrix& b, IntMatrix::Entry sign_b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
    std::vector<IntMatrix::Triplet> trips;
    trips.reserve(a.nonzeros() + b.nonzeros());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (const auto& t : a.row(r)) trips.push_back({r, t.col, t.value});
        for (const auto& t : b.row(r)) trips.push_back({r, t.col, checked_mul(sign_b, t.value)});
    }
    return IntMatrix(a.rows(), a.cols(), std::move(trips));
}

}  // namespace

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) { return combine(a, b, 1); }
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return combine(a, b, -1); }

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matrix product shape mismatch: " + std::to_string(a.cols()) +
                                    " vs " + std::to_string(b.rows()));
    }
    IntMatrix out(a.rows(), b.cols());
    std::vector<IntMatrix::Entry> acc(b.cols(), 0);
    std::vector<bool> touched(b.cols(), false);
    std::vector<std::size_t> cols;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        cols.clear();
        for (const auto& ta : a.row(r)) {
            for (const auto& tb : b.row(ta.col)) {
                if (!touched[tb.col]) {
                    touched[tb.col] = true;
                    cols.push_back(tb.col);
                }
                acc[tb.col] = checked_add(acc[tb.col], checked_mul(ta.value, tb.value));
            }
        }
        std::sort(cols.begin(), cols.end());
        auto& dst = out.data_[r];
        for (std::size_t c : cols) {
            if (acc[c] != 0) dst.push_back({c, acc[c]});
            acc[c] = 0;
            touched[c] = false;
        }
    }
    return out;
}

IntMatrix kron(const IntMatrix& a, const IntMatrix& b) {
    std::vector<IntMatrix::Triplet> trips;
    trips.reserve(a.nonzeros() * b.nonzeros());
    for (std::size_t ra = 0; ra < a.rows(); ++ra) {
        for (const auto& ta : a.row(ra)) {
            for (std::size_t rb = 0; rb < b.rows(); ++rb) {
                for (const auto& tb : b.row(rb)) {
                    trips.push_back({ra * b.rows() + rb, ta.col * b.cols() + tb.col,
                                     checked_mul(ta.value, tb.value)});
                }
            }
        }
    }
    return IntMatrix(a.rows() * b.rows(), a.cols() * b.cols(), std::move(trips));
}

IntMatrix ScaledMatrix::exact() const {
    if (root) throw std::domain_error("matrix carries an irrational square-root scale");
    if (denom <= 0) throw std::domain_error("denominator must be positive");
    std::vector<IntMatrix::Triplet> trips;
    for (std::size_t r = 0; r < mat.rows(); ++r) {
        for (const auto& t : mat.row(r)) {
            if (t.value % denom != 0) {
                throw std::domain_error("entry " + std::to_string(t.value) + " not divisible by " +
                                        std::to_string(denom));
            }
            trips.push_back({r, t.col, t.value / denom});
        }
    }
    return IntMatrix(mat.rows(), mat.cols(), std::move(trips));
}

}  // namespace sigwedge
