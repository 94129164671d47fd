#pragma once

#include <cstdint>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace quiver {

namespace mp = boost::multiprecision;

// Expression templates are off so that these compose with Eigen expressions.
using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

// Element of K_0 of the path algebra, indexed by vertex position 0..n-1.
// Entries may be negative.
using DimVector = Vector<Integer>;

inline DimVector make_dim_vector(std::initializer_list<long> coords) {
    DimVector x(static_cast<Index>(coords.size()));
    Index k = 0;
    for (long c : coords) x(k++) = c;
    return x;
}

inline DimVector unit_vector(Index n, Index i) {
    DimVector e = DimVector::Zero(n);
    e(i) = 1;
    return e;
}

inline Integer height(const DimVector& x) { return x.sum(); }

inline bool is_zero_vector(const DimVector& x) {
    for (Index i = 0; i < x.size(); ++i)
        if (x(i) != 0) return false;
    return true;
}

inline bool is_nonnegative(const DimVector& x) {
    for (Index i = 0; i < x.size(); ++i)
        if (x(i) < 0) return false;
    return true;
}

} // namespace quiver
