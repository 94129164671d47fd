#include "quiver/forms.hpp"

#include "quiver/error.hpp"
#include "quiver/linalg.hpp"

namespace quiver {

std::string_view to_string(QuiverType type) {
    switch (type) {
    case QuiverType::Finite: return "Finite";
    case QuiverType::Tame: return "Tame";
    case QuiverType::Wild: return "Wild";
    }
    return "Unknown";
}

void require_bound(const Quiver& q, const DimVector& x) {
    if (x.size() != q.vertex_count())
        throw Error(Errc::DimensionMismatch, "vector has " + std::to_string(x.size()) +
                                                 " coordinates, quiver has " +
                                                 std::to_string(q.vertex_count()) + " vertices");
}

Integer euler_form(const Quiver& q, const DimVector& x, const DimVector& y) {
    require_bound(q, x);
    require_bound(q, y);
    Integer value = x.dot(y);
    for (const auto& a : q.arrows()) value -= x(a.source) * y(a.target);
    return value;
}

Integer tits_form(const Quiver& q, const DimVector& x) { return euler_form(q, x, x); }

Integer symmetric_form(const Quiver& q, const DimVector& x, const DimVector& y) {
    return euler_form(q, x, y) + euler_form(q, y, x);
}

IntMatrix euler_matrix(const Quiver& q) {
    IntMatrix e = IntMatrix::Identity(q.vertex_count(), q.vertex_count());
    for (const auto& a : q.arrows()) e(a.source, a.target) -= 1;
    return e;
}

namespace {

DimVector primitive_integer_vector(const Vector<Rational>& v) {
    Integer scale = 1;
    for (Index i = 0; i < v.size(); ++i) scale = mp::lcm(scale, Integer(mp::denominator(v(i))));
    DimVector w(v.size());
    Integer g = 0;
    for (Index i = 0; i < v.size(); ++i) {
        w(i) = Integer(mp::numerator(v(i) * Rational(scale)));
        g = mp::gcd(g, w(i));
    }
    if (g > 1) w /= g;
    return w;
}

} // namespace

TypeCertificate type_certificate(const Quiver& q) {
    const Index n = q.vertex_count();
    const IntMatrix e = euler_matrix(q);
    RationalMatrix m = to_rational(IntMatrix(e + e.transpose()));
    // Invariant: m = t * (E + E^T) * t^T.
    RationalMatrix t = RationalMatrix::Identity(n, n);

    TypeCertificate cert;
    bool degenerate = false;
    for (Index k = 0; k < n; ++k) {
        const Rational d = m(k, k);
        if (d < 0) {
            cert.type = QuiverType::Wild;
            cert.negative_vector = primitive_integer_vector(t.row(k).transpose());
            return cert;
        }
        if (d == 0) {
            Index j = k + 1;
            while (j < n && m(k, j) == 0) ++j;
            if (j < n) {
                // On span(e_k, e_j) the form is [[0, c], [c, s]]; a e_k + e_j
                // with a = -(s + 1) / 2c has value -1.
                const Rational a = -(m(j, j) + 1) / (2 * m(k, j));
                cert.type = QuiverType::Wild;
                cert.negative_vector =
                    primitive_integer_vector((a * t.row(k) + t.row(j)).transpose());
                return cert;
            }
            degenerate = true;
            cert.pivots.push_back(d);
            continue;
        }
        cert.pivots.push_back(d);
        for (Index j = k + 1; j < n; ++j) {
            if (m(j, k) == 0) continue;
            const Rational f = m(j, k) / d;
            m.row(j) -= f * m.row(k);
            m.col(j) -= f * m.col(k);
            t.row(j) -= f * t.row(k);
        }
    }
    cert.type = degenerate ? QuiverType::Tame : QuiverType::Finite;
    return cert;
}

IntMatrix path_counts(const Quiver& q) {
    const Index n = q.vertex_count();
    IntMatrix counts = IntMatrix::Zero(n, n);
    // Successors precede a vertex in the canonical order.
    for (Index v : q.canonical_order()) {
        counts(v, v) = 1;
        for (const auto& a : q.arrows())
            if (a.source == v) counts.row(v) += counts.row(a.target);
    }
    return counts;
}

DimVector proj_dim_vector(const Quiver& q, Index i) {
    if (i < 0 || i >= q.vertex_count()) throw Error(Errc::InvalidVertex, "vertex out of range");
    return path_counts(q).row(i).transpose();
}

DimVector inj_dim_vector(const Quiver& q, Index i) {
    if (i < 0 || i >= q.vertex_count()) throw Error(Errc::InvalidVertex, "vertex out of range");
    return path_counts(q).col(i);
}

} // namespace quiver
