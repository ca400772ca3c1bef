#include "sigwedge/algebra.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <sstream>

#include "sigwedge/combinat.hpp"

namespace sigwedge {

std::uint64_t default_row_limit() {
    constexpr std::uint64_t kDefault = 1'000'000;
    const char* env = std::getenv("SIGWEDGE_MAX_ROWS");
    if (env == nullptr || *env == '\0') return kDefault;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
    if (ec != std::errc() || *ptr != '\0' || value == 0) return kDefault;
    return value;
}

namespace {

std::uint64_t checked_rows(std::size_t n, std::size_t k, std::uint64_t limit) {
    std::uint64_t rows = 0;
    try {
        rows = int_power(n, k);
    } catch (const std::overflow_error&) {
        throw SizeLimitExceeded("n^k overflows");
    }
    if (rows > limit) {
        throw SizeLimitExceeded(std::to_string(n) + "^" + std::to_string(k) + " = " + std::to_string(rows) +
                                " rows exceeds the limit of " + std::to_string(limit));
    }
    return rows;
}

}  // namespace

std::vector<Vertex> tuple_of_index(std::uint64_t index, std::size_t n, std::size_t k) {
    std::vector<Vertex> t(k);
    for (std::size_t j = k; j-- > 0;) {
        t[j] = index % n;
        index /= n;
    }
    return t;
}

std::uint64_t index_of_tuple(std::span<const Vertex> tuple, std::size_t n) {
    std::uint64_t index = 0;
    for (Vertex x : tuple) index = index * n + x;
    return index;
}

IntMatrix adjacency_matrix(const SignedGraph& g) {
    std::vector<IntMatrix::Triplet> trips;
    trips.reserve(2 * g.size());
    for (const auto& e : g.edges()) {
        trips.push_back({e.u, e.v, to_int(e.sign)});
        trips.push_back({e.v, e.u, to_int(e.sign)});
    }
    return IntMatrix(g.order(), g.order(), std::move(trips));
}

IntMatrix cartesian_power(const SignedGraph& g, std::size_t k, std::uint64_t row_limit) {
    if (k < 1) throw std::out_of_range("Cartesian power needs k >= 1");
    const std::size_t n = g.order();
    const std::uint64_t rows = checked_rows(n, k, row_limit);
    std::vector<std::uint64_t> stride(k);
    for (std::size_t j = 0; j < k; ++j) stride[j] = int_power(n, k - 1 - j);

    std::vector<IntMatrix::Triplet> trips;
    for (std::uint64_t idx = 0; idx < rows; ++idx) {
        auto t = tuple_of_index(idx, n, k);
        for (std::size_t j = 0; j < k; ++j) {
            for (const auto& nb : g.neighbors(t[j])) {
                std::uint64_t other = idx - t[j] * stride[j] + nb.vertex * stride[j];
                trips.push_back({idx, other, to_int(nb.sign)});
            }
        }
    }
    return IntMatrix(rows, rows, std::move(trips));
}

IntMatrix cartesian_power_kronecker(const SignedGraph& g, std::size_t k, std::uint64_t row_limit) {
    if (k < 1) throw std::out_of_range("Cartesian power needs k >= 1");
    const std::size_t n = g.order();
    const std::uint64_t rows = checked_rows(n, k, row_limit);
    const IntMatrix a = adjacency_matrix(g);
    const IntMatrix id = IntMatrix::identity(n);
    IntMatrix total(rows, rows);
    for (std::size_t j = 0; j < k; ++j) {
        IntMatrix term = IntMatrix::identity(1);
        for (std::size_t i = 0; i < k; ++i) term = kron(term, i == j ? a : id);
        total = total + term;
    }
    return total;
}

ScaledMatrix alternator(std::size_t n, std::size_t k, std::uint64_t row_limit) {
    if (k < 1 || k > n) throw std::out_of_range("alternator needs 1 <= k <= n");
    const std::uint64_t rows = checked_rows(n, k, row_limit);
    const auto subsets = all_subsets(n, k);
    const auto perms = all_permutations(k);
    std::vector<IntMatrix::Triplet> trips;
    trips.reserve(subsets.size() * perms.size());
    for (std::size_t col = 0; col < subsets.size(); ++col) {
        for (const auto& pi : perms) {
            auto tuple = pi.apply(subsets[col].elems());
            trips.push_back({index_of_tuple(tuple, n), col, to_int(pi.sign())});
        }
    }
    return ScaledMatrix{IntMatrix(rows, subsets.size(), std::move(trips)),
                        static_cast<std::int64_t>(factorial(k)), true};
}

std::string ExteriorIdentityReport::describe() const {
    std::ostringstream out;
    out << "orthogonality=" << (orthogonality ? "ok" : "FAILED")
        << " commutation=" << (commutation ? "ok" : "FAILED")
        << " quotient=" << (quotient_equal ? "ok" : "FAILED");
    return out.str();
}

ExteriorIdentityReport verify_exterior_identities(const SignedGraph& g, const ExteriorPower& wedge,
                                                  std::uint64_t row_limit) {
    const std::size_t n = g.order();
    const std::size_t k = wedge.k;
    const ScaledMatrix alt = alternator(n, k, row_limit);
    const IntMatrix& nmat = alt.mat;
    const IntMatrix nt = nmat.transpose();
    const IntMatrix a = cartesian_power(g, k, row_limit);

    ExteriorIdentityReport report;
    report.orthogonality = (nt * nmat) == IntMatrix::identity(nmat.cols()).scaled(alt.denom);
    const IntMatrix projector = nmat * nt;
    report.commutation = (projector * a) == (a * projector);
    report.quotient_equal = (nt * a * nmat) == adjacency_matrix(wedge.graph).scaled(alt.denom);
    return report;
}

ExteriorIdentityReport verify_exterior_identities(const SignedGraph& g, std::size_t k,
                                                  std::uint64_t row_limit) {
    checked_rows(g.order(), k, row_limit);
    return verify_exterior_identities(g, wedge_power(g, k), row_limit);
}

ScaledMatrix quotient_by_uniform_partition(const IntMatrix& a,
                                           std::span<const std::vector<std::size_t>> cells,
                                           std::size_t cell_size) {
    if (a.rows() != a.cols()) throw std::invalid_argument("quotient needs a square matrix");
    if (cell_size == 0) throw UnsupportedPartition("cell size must be positive");
    constexpr std::size_t kDeleted = static_cast<std::size_t>(-1);
    std::vector<std::size_t> cell_of(a.rows(), kDeleted);
    for (std::size_t c = 0; c < cells.size(); ++c) {
        if (cells[c].size() != cell_size) {
            throw UnsupportedPartition("cell " + std::to_string(c) + " has size " +
                                       std::to_string(cells[c].size()) + ", expected " +
                                       std::to_string(cell_size));
        }
        for (std::size_t idx : cells[c]) {
            if (idx >= a.rows()) throw std::out_of_range("cell index out of range");
            // Disjoint cells of equal size are what makes Q^T Q = I.
            if (cell_of[idx] != kDeleted) throw std::invalid_argument("cells overlap");
            cell_of[idx] = c;
        }
    }
    std::vector<IntMatrix::Triplet> trips;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        if (cell_of[r] == kDeleted) continue;
        for (const auto& t : a.row(r)) {
            if (cell_of[t.col] == kDeleted) continue;
            trips.push_back({cell_of[r], cell_of[t.col], t.value});
        }
    }
    return ScaledMatrix{IntMatrix(cells.size(), cells.size(), std::move(trips)),
                        static_cast<std::int64_t>(cell_size), false};
}

std::vector<std::vector<std::size_t>> alternator_orbit_cells(std::size_t n, std::size_t k) {
    const auto perms = all_permutations(k);
    std::vector<std::vector<std::size_t>> cells;
    for (const auto& v : all_subsets(n, k)) {
        std::vector<std::size_t> cell;
        cell.reserve(perms.size());
        for (const auto& pi : perms) cell.push_back(index_of_tuple(pi.apply(v.elems()), n));
        cells.push_back(std::move(cell));
    }
    return cells;
}

}  // namespace sigwedge
