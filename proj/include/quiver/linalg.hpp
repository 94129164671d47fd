#pragma once

#include <cstdint>
#include <vector>

#include "quiver/error.hpp"
#include "quiver/scalar.hpp"

namespace quiver {

/// The field of rational numbers, arbitrary precision.
struct RationalField {
    using Element = Rational;

    Element zero() const { return Element(0); }
    Element one() const { return Element(1); }
    Element from_integer(const Integer& v) const { return Element(v); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }
    Element inv(const Element& a) const { return Element(1) / a; }
    bool is_zero(const Element& a) const { return a == 0; }

    bool operator==(const RationalField&) const = default;
};

/// Residues modulo a prime p, stored canonically in [0, p).
///
/// The modulus is bounded by 2^24 so that an Eigen int64 product of reduced
/// matrices cannot overflow before the final reduction for inner dimensions
/// up to 2^15.
class PrimeField {
public:
    using Element = std::int64_t;

    static constexpr std::int64_t max_modulus = std::int64_t{1} << 24;

    explicit PrimeField(std::int64_t p = 5);

    std::int64_t modulus() const { return p_; }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element reduce(std::int64_t v) const {
        v %= p_;
        return v < 0 ? v + p_ : v;
    }
    Element from_integer(const Integer& v) const;
    Element add(Element a, Element b) const { return (a + b) % p_; }
    Element sub(Element a, Element b) const { return (a - b + p_) % p_; }
    Element mul(Element a, Element b) const { return (a * b) % p_; }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element inv(Element a) const;
    bool is_zero(Element a) const { return a == 0; }

    bool operator==(const PrimeField&) const = default;

private:
    std::int64_t p_;
};

bool is_prime(std::int64_t p);

template <typename Field>
using ExactMatrix = Matrix<typename Field::Element>;
template <typename Field>
using ExactVector = Vector<typename Field::Element>;

using FpMatrix = ExactMatrix<PrimeField>;

/// Reduced row echelon form together with the pivot columns, in order.
template <typename Field>
struct Echelon {
    ExactMatrix<Field> reduced;
    std::vector<Index> pivot_cols;

    Index rank() const { return static_cast<Index>(pivot_cols.size()); }
};

/// Gauss-Jordan elimination. Pivots are the first nonzero entry scanning
/// columns left to right, so the result is reproducible.
template <typename Field>
Echelon<Field> row_reduce(const Field& field, ExactMatrix<Field> a) {
    Echelon<Field> out;
    const Index rows = a.rows();
    const Index cols = a.cols();
    Index r = 0;
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index pivot = -1;
        for (Index i = r; i < rows; ++i) {
            if (!field.is_zero(a(i, c))) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != r) a.row(pivot).swap(a.row(r));
        const auto scale = field.inv(a(r, c));
        for (Index j = c; j < cols; ++j) a(r, j) = field.mul(a(r, j), scale);
        for (Index i = 0; i < rows; ++i) {
            if (i == r || field.is_zero(a(i, c))) continue;
            const auto factor = a(i, c);
            for (Index j = c; j < cols; ++j) {
                if (field.is_zero(a(r, j))) continue;
                a(i, j) = field.sub(a(i, j), field.mul(factor, a(r, j)));
            }
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.reduced = std::move(a);
    return out;
}

// Specialization hook for the prime field: row operations on whole rows with
// a single modular reduction per entry.
template <>
Echelon<PrimeField> row_reduce<PrimeField>(const PrimeField& field, FpMatrix a);

template <typename Field>
Index rank(const Field& field, const ExactMatrix<Field>& a) {
    return row_reduce(field, a).rank();
}

// Over the prime field the rank only needs forward elimination.
template <>
Index rank<PrimeField>(const PrimeField& field, const FpMatrix& a);

/// Columns form a basis of the right kernel {v : A v = 0}; one column per
/// free variable of the echelon form, with a 1 in that free position.
template <typename Field>
ExactMatrix<Field> kernel_basis(const Field& field, const ExactMatrix<Field>& a) {
    const auto ech = row_reduce(field, a);
    const Index cols = a.cols();
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (Index c : ech.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

    ExactMatrix<Field> basis(cols, cols - ech.rank());
    basis.setConstant(field.zero());
    Index k = 0;
    for (Index f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        basis(f, k) = field.one();
        for (Index r = 0; r < ech.rank(); ++r)
            basis(ech.pivot_cols[static_cast<std::size_t>(r)], k) = field.neg(ech.reduced(r, f));
        ++k;
    }
    return basis;
}

template <typename Field>
Index nullity(const Field& field, const ExactMatrix<Field>& a) {
    return a.cols() - rank(field, a);
}

template <typename Field>
Index cokernel_dim(const Field& field, const ExactMatrix<Field>& a) {
    return a.rows() - rank(field, a);
}

template <typename Field>
ExactMatrix<Field> mat_transpose(const ExactMatrix<Field>& a) {
    return a.transpose();
}

template <typename Field>
ExactMatrix<Field> mat_identity(const Field& field, Index n) {
    ExactMatrix<Field> id(n, n);
    id.setConstant(field.zero());
    for (Index i = 0; i < n; ++i) id(i, i) = field.one();
    return id;
}

template <typename Field>
ExactMatrix<Field> mat_mul(const Field& field, const ExactMatrix<Field>& a,
                           const ExactMatrix<Field>& b) {
    if (a.cols() != b.rows())
        throw Error(Errc::ShapeMismatch, "mat_mul: inner dimensions differ");
    ExactMatrix<Field> out(a.rows(), b.cols());
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < b.cols(); ++j) {
            auto acc = field.zero();
            for (Index k = 0; k < a.cols(); ++k) acc = field.add(acc, field.mul(a(i, k), b(k, j)));
            out(i, j) = acc;
        }
    }
    return out;
}

template <>
FpMatrix mat_mul<PrimeField>(const PrimeField& field, const FpMatrix& a, const FpMatrix& b);

template <typename Field>
ExactMatrix<Field> mat_inverse(const Field& field, const ExactMatrix<Field>& a) {
    if (a.rows() != a.cols())
        throw Error(Errc::ShapeMismatch, "mat_inverse: matrix is not square");
    const Index n = a.rows();
    ExactMatrix<Field> augmented(n, 2 * n);
    augmented.leftCols(n) = a;
    augmented.rightCols(n) = mat_identity(field, n);
    const auto ech = row_reduce(field, augmented);
    if (ech.rank() < n || (n > 0 && ech.pivot_cols.back() >= n))
        throw Error(Errc::SingularMatrix, "mat_inverse: matrix is singular");
    return ech.reduced.rightCols(n);
}

/// A^t for any integer t; negative powers go through the inverse.
template <typename Field>
ExactMatrix<Field> mat_power(const Field& field, const ExactMatrix<Field>& a, long t) {
    if (a.rows() != a.cols())
        throw Error(Errc::ShapeMismatch, "mat_power: matrix is not square");
    ExactMatrix<Field> base = t < 0 ? mat_inverse(field, a) : a;
    unsigned long e = t < 0 ? static_cast<unsigned long>(-t) : static_cast<unsigned long>(t);
    ExactMatrix<Field> result = mat_identity(field, a.rows());
    while (e > 0) {
        if (e & 1UL) result = mat_mul(field, result, base);
        e >>= 1UL;
        if (e > 0) base = mat_mul(field, base, base);
    }
    return result;
}

// Integer matrices: products stay in Eigen; inverses and negative powers are
// only defined for unimodular matrices (the Coxeter matrix is one).
IntMatrix int_inverse(const IntMatrix& a);
IntMatrix int_power(const IntMatrix& a, long t);

inline RationalMatrix to_rational(const IntMatrix& a) { return a.cast<Rational>(); }

FpMatrix to_prime_field(const PrimeField& field, const IntMatrix& a);

} // namespace quiver
