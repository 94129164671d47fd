#pragma once

#include <cstdint>
#include <vector>

#include "quiver/linalg.hpp"
#include "quiver/quiver.hpp"

namespace quiver {

/// A finite-dimensional representation over a prime field.
///
/// The map of arrow a : s -> t is a dims[t] x dims[s] matrix acting on column
/// vectors. Entries are canonical residues.
class Representation {
public:
    Representation(Quiver q, PrimeField field, std::vector<Index> dims, std::vector<FpMatrix> maps);

    static Representation zero(const Quiver& q, const PrimeField& field);

    const Quiver& quiver() const { return quiver_; }
    const PrimeField& field() const { return field_; }
    const std::vector<Index>& dims() const { return dims_; }
    Index dim(Index v) const { return dims_[static_cast<std::size_t>(v)]; }
    const std::vector<FpMatrix>& maps() const { return maps_; }
    const FpMatrix& map(Index a) const { return maps_[static_cast<std::size_t>(a)]; }

    DimVector dim_vector() const;
    Index total_dim() const;
    bool is_zero() const { return total_dim() == 0; }

    bool operator==(const Representation&) const = default;

private:
    Quiver quiver_;
    PrimeField field_;
    std::vector<Index> dims_;
    std::vector<FpMatrix> maps_;
};

/// A morphism f : X -> Y, one dims_Y[i] x dims_X[i] matrix per vertex.
using Morphism = std::vector<FpMatrix>;

struct HomExtResult {
    Index hom_dim = 0;
    Index ext_dim = 0;
    std::vector<Morphism> hom_basis;
};

/// Matrix of f -> (f_t X_a - Y_a f_s)_a.
///
/// Columns: vertices ascending, and within vertex i the entries of the
/// dims_Y[i] x dims_X[i] block in column-major order. Rows: arrows in
/// declaration order, and within arrow a : s -> t the entries of the
/// dims_Y[t] x dims_X[s] block in column-major order.
FpMatrix delta_matrix(const Representation& x, const Representation& y);

/// hom = nullity of the delta matrix, ext = dimension of its cokernel.
HomExtResult hom_ext(const Representation& x, const Representation& y, bool with_basis = true);

Index hom_dim(const Representation& x, const Representation& y);
Index end_dim(const Representation& x);

/// Residual f_t X_a - Y_a f_s is zero for every arrow.
bool is_morphism(const Representation& x, const Representation& y, const Morphism& f);

Representation build_simple(const Quiver& q, Index i, const PrimeField& field);

/// Basis of P(i)_j: directed paths i -> j; arrows act by extending paths.
Representation build_projective(const Quiver& q, Index i, const PrimeField& field);

/// Basis of I(i)_j: duals of directed paths j -> i; an arrow a : j -> k sends
/// the dual of a path starting with a to the dual of the remaining path.
Representation build_injective(const Quiver& q, Index i, const PrimeField& field);

/// Block-diagonal sum; X occupies the leading coordinates at every vertex.
Representation direct_sum(const Representation& x, const Representation& y);

/// Independent uniform entries from a mt19937_64 seeded with `seed`, filled
/// arrow by arrow in row-major order.
Representation random_rep(const Quiver& q, const DimVector& x, const PrimeField& field,
                          std::uint64_t seed);

/// Seed of the `stream`-th independent draw derived from `seed` (splitmix64).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

struct GeneralPositionSample {
    Representation rep;
    Index end_dim = 0;
    int best_trial = 0;
    int trials_run = 0;
};

/// Draws up to `trials` random representations (trial k uses
/// derive_seed(seed, k)) and keeps the first one of minimal dim End. Stops
/// early once dim End reaches max(1, <x, x>), which no sample can beat.
GeneralPositionSample general_position_sample(const Quiver& q, const DimVector& x,
                                              const PrimeField& field, int trials,
                                              std::uint64_t seed);

std::vector<Index> to_dims(const DimVector& x);

} // namespace quiver
