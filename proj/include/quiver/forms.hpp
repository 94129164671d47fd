#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "quiver/quiver.hpp"
#include "quiver/scalar.hpp"

namespace quiver {

enum class QuiverType { Finite, Tame, Wild };

std::string_view to_string(QuiverType type);

/// <x, y> = sum_i x_i y_i - sum_arrows x_source y_target.
Integer euler_form(const Quiver& q, const DimVector& x, const DimVector& y);

/// <x, x>.
Integer tits_form(const Quiver& q, const DimVector& x);

/// (x, y) = <x, y> + <y, x>.
Integer symmetric_form(const Quiver& q, const DimVector& x, const DimVector& y);

/// E with x^T E y = <x, y>: E_ij = delta_ij - #(arrows i -> j).
IntMatrix euler_matrix(const Quiver& q);

/// Exact definiteness data for the symmetrized Euler form E + E^T.
struct TypeCertificate {
    QuiverType type = QuiverType::Finite;
    // Diagonal of a congruence diagonalization, in elimination order. A zero
    // pivot is only recorded when its whole row was already zero.
    std::vector<Rational> pivots;
    // Wild only: an integer vector with tits_form < 0.
    std::optional<DimVector> negative_vector;
};

/// Symmetric Gaussian elimination over Q. Finite iff every pivot is positive;
/// Tame iff pivots are nonnegative and zero pivots carry zero rows; Wild
/// otherwise, in which case `negative_vector` is filled in.
TypeCertificate type_certificate(const Quiver& q);

inline QuiverType classify_type(const Quiver& q) { return type_certificate(q).type; }

/// (path_counts)_{ij} = number of directed paths i -> j, including the
/// trivial path when i = j.
IntMatrix path_counts(const Quiver& q);

/// dim P(i): paths starting at i.
DimVector proj_dim_vector(const Quiver& q, Index i);

/// dim I(i): paths ending at i.
DimVector inj_dim_vector(const Quiver& q, Index i);

void require_bound(const Quiver& q, const DimVector& x);

} // namespace quiver
