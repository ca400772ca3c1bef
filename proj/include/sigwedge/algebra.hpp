#pragma once

// Algebraic side of the exterior power: Cartesian powers, the anti-symmetrizer
// and equitable-partition quotients, all in exact integer arithmetic.
//
// Rows of n^k-sized matrices are indexed by k-tuples in mixed-radix order with
// the leftmost coordinate most significant. The anti-symmetrizer
// Alt_{n,k} = N / sqrt(k!) is carried as the integer matrix N with declared
// scale k!, so the identities checked here are
//   N^T N = k! I,   (N N^T) A = A (N N^T),   N^T A N = k! A(wedge^k).

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sigwedge/exterior.hpp"
#include "sigwedge/matrix.hpp"
#include "sigwedge/signed_graph.hpp"

namespace sigwedge {

class SizeLimitExceeded : public std::length_error {
  public:
    using std::length_error::length_error;
};

class UnsupportedPartition : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Largest number of rows (n^k) an algebraic construction may produce.
/// Defaults to 10^6; the SIGWEDGE_MAX_ROWS environment variable overrides it.
std::uint64_t default_row_limit();

std::vector<Vertex> tuple_of_index(std::uint64_t index, std::size_t n, std::size_t k);
std::uint64_t index_of_tuple(std::span<const Vertex> tuple, std::size_t n);

IntMatrix adjacency_matrix(const SignedGraph& g);

/// A(G^k) = sum_j I^(j-1) (x) A (x) I^(k-j), built directly from neighbor lists.
IntMatrix cartesian_power(const SignedGraph& g, std::size_t k,
                          std::uint64_t row_limit = default_row_limit());

/// The same matrix assembled literally as a Kronecker sum; used to cross-check
/// cartesian_power.
IntMatrix cartesian_power_kronecker(const SignedGraph& g, std::size_t k,
                                    std::uint64_t row_limit = default_row_limit());

/// N of shape n^k x C(n,k): column v holds sgn(pi) at row pi(v), for pi in S_k.
/// Returned with denom = k! and root = true.
ScaledMatrix alternator(std::size_t n, std::size_t k, std::uint64_t row_limit = default_row_limit());

struct ExteriorIdentityReport {
    bool orthogonality = false;  ///< N^T N = k! I
    bool commutation = false;    ///< N N^T commutes with A(G^k)
    bool quotient_equal = false; ///< N^T A(G^k) N = k! A(wedge^k G)

    bool all() const { return orthogonality && commutation && quotient_equal; }
    std::string describe() const;
};

/// Checks all three identities against `wedge.graph`.
ExteriorIdentityReport verify_exterior_identities(const SignedGraph& g, const ExteriorPower& wedge,
                                                  std::uint64_t row_limit = default_row_limit());
ExteriorIdentityReport verify_exterior_identities(const SignedGraph& g, std::size_t k,
                                                  std::uint64_t row_limit = default_row_limit());

/// Q^T A Q for the normalized indicator matrix Q of `cells`, all of size
/// cell_size. Indices outside every cell are deleted. Returns the block sums
/// with denom = cell_size.
ScaledMatrix quotient_by_uniform_partition(const IntMatrix& a,
                                           std::span<const std::vector<std::size_t>> cells,
                                           std::size_t cell_size);

/// Cells {pi(v) : pi in S_k} of repeated-free k-tuples, one per k-subset v in
/// rank order; the partition induced by the anti-symmetrizer.
std::vector<std::vector<std::size_t>> alternator_orbit_cells(std::size_t n, std::size_t k);

}  // namespace sigwedge
