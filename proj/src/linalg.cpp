#include "quiver/linalg.hpp"

#include <string>

namespace quiver {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::int64_t p) : p_(p) {
    if (p >= max_modulus)
        throw Error(Errc::NotPrime, "field modulus " + std::to_string(p) + " exceeds 2^24");
    if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
}

PrimeField::Element PrimeField::from_integer(const Integer& v) const {
    Integer r = v % p_;
    if (r < 0) r += p_;
    return r.convert_to<std::int64_t>();
}

PrimeField::Element PrimeField::inv(Element a) const {
    if (a == 0) throw Error(Errc::SingularMatrix, "division by zero in prime field");
    // Extended Euclid on (a, p).
    std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::int64_t tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = s0 - q * s1;
        s0 = s1;
        s1 = tmp;
    }
    return reduce(s0);
}

namespace {

using RowMajorFp = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Entries stay nonnegative and are reduced lazily: a row absorbs up to
// `limit` updates of size < p^2 before it is reduced again, which keeps the
// inner loop a plain multiply-add.
std::vector<Index> eliminate(const PrimeField& field, RowMajorFp& a, bool full) {
    const std::int64_t p = field.modulus();
    const std::int64_t limit = std::max<std::int64_t>(1, (std::int64_t{1} << 62) / (p * p));
    const Index rows = a.rows();
    const Index cols = a.cols();
    std::vector<std::int64_t> pending(static_cast<std::size_t>(rows), 0);
    auto reduce_tail = [&](Index i, Index from) {
        for (Index j = from; j < cols; ++j) a(i, j) %= p;
        pending[static_cast<std::size_t>(i)] = 0;
    };

    std::vector<Index> pivots;
    Index r = 0;
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index pivot = -1;
        for (Index i = r; i < rows; ++i) {
            a(i, c) %= p;
            if (pivot < 0 && a(i, c) != 0) pivot = i;
        }
        if (pivot < 0) continue;
        if (pivot != r) {
            a.row(pivot).swap(a.row(r));
            std::swap(pending[static_cast<std::size_t>(pivot)], pending[static_cast<std::size_t>(r)]);
        }
        reduce_tail(r, c);
        std::int64_t* pivot_row = &a(r, c);
        const Index len = cols - c;
        const std::int64_t scale = field.inv(pivot_row[0]);
        for (Index j = 0; j < len; ++j) pivot_row[j] = (pivot_row[j] * scale) % p;
        for (Index i = full ? 0 : r + 1; i < rows; ++i) {
            if (i == r) continue;
            const std::int64_t factor = a(i, c) % p;
            if (factor == 0) {
                a(i, c) = 0;
                continue;
            }
            if (pending[static_cast<std::size_t>(i)] == limit) reduce_tail(i, c);
            ++pending[static_cast<std::size_t>(i)];
            const std::int64_t m = p - factor;
            std::int64_t* row = &a(i, c);
            for (Index j = 0; j < len; ++j) row[j] += m * pivot_row[j];
        }
        pivots.push_back(c);
        ++r;
    }
    if (full)
        for (Index i = 0; i < rows; ++i) reduce_tail(i, 0);
    return pivots;
}

} // namespace

template <>
Echelon<PrimeField> row_reduce<PrimeField>(const PrimeField& field, FpMatrix input) {
    RowMajorFp a = std::move(input);
    Echelon<PrimeField> out;
    out.pivot_cols = eliminate(field, a, true);
    out.reduced = a;
    return out;
}

template <>
Index rank<PrimeField>(const PrimeField& field, const FpMatrix& input) {
    // Eliminating along the shorter side does less work.
    RowMajorFp a = input.rows() <= input.cols() ? RowMajorFp(input) : RowMajorFp(input.transpose());
    return static_cast<Index>(eliminate(field, a, false).size());
}

template <>
FpMatrix mat_mul<PrimeField>(const PrimeField& field, const FpMatrix& a, const FpMatrix& b) {
    if (a.cols() != b.rows())
        throw Error(Errc::ShapeMismatch, "mat_mul: inner dimensions differ");
    const std::int64_t p = field.modulus();
    // Inner products of reduced entries stay below 2^63 for a.cols() < 2^15.
    constexpr Index chunk = Index{1} << 14;
    FpMatrix out = FpMatrix::Zero(a.rows(), b.cols());
    for (Index k = 0; k < a.cols(); k += chunk) {
        const Index len = std::min(chunk, a.cols() - k);
        out += a.middleCols(k, len) * b.middleRows(k, len);
        out = out.unaryExpr([p](std::int64_t v) { return v % p; });
    }
    return out;
}

IntMatrix int_inverse(const IntMatrix& a) {
    const RationalMatrix inv = mat_inverse(RationalField{}, to_rational(a));
    IntMatrix out(inv.rows(), inv.cols());
    for (Index i = 0; i < inv.rows(); ++i) {
        for (Index j = 0; j < inv.cols(); ++j) {
            const Rational& v = inv(i, j);
            if (mp::denominator(v) != 1)
                throw Error(Errc::SingularMatrix, "integer matrix is not unimodular");
            out(i, j) = Integer(mp::numerator(v));
        }
    }
    return out;
}

IntMatrix int_power(const IntMatrix& a, long t) {
    if (a.rows() != a.cols())
        throw Error(Errc::ShapeMismatch, "int_power: matrix is not square");
    IntMatrix base = t < 0 ? int_inverse(a) : a;
    unsigned long e = t < 0 ? static_cast<unsigned long>(-t) : static_cast<unsigned long>(t);
    IntMatrix result = IntMatrix::Identity(a.rows(), a.cols());
    while (e > 0) {
        if (e & 1UL) result = (result * base).eval();
        e >>= 1UL;
        if (e > 0) base = (base * base).eval();
    }
    return result;
}

FpMatrix to_prime_field(const PrimeField& field, const IntMatrix& a) {
    FpMatrix out(a.rows(), a.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j) out(i, j) = field.from_integer(a(i, j));
    return out;
}

} // namespace quiver
