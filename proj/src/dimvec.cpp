#include "quiver/dimvec.hpp"

#include <numeric>

#include "quiver/error.hpp"

namespace quiver {

std::string_view to_string(Regularity r) {
    switch (r) {
    case Regularity::Regular: return "Regular";
    case Regularity::NotRegular: return "NotRegular";
    case Regularity::Undetermined: return "Undetermined";
    }
    return "Unknown";
}

std::string_view to_string(RootKind k) {
    switch (k) {
    case RootKind::RealRoot: return "RealRoot";
    case RootKind::ImaginaryRoot: return "ImaginaryRoot";
    case RootKind::NotARoot: return "NotARoot";
    }
    return "Unknown";
}

DimVector simple_reflection(const Quiver& q, Index i, const DimVector& x) {
    require_bound(q, x);
    if (i < 0 || i >= q.vertex_count()) throw Error(Errc::InvalidVertex, "vertex out of range");
    DimVector y = x;
    y(i) = -x(i);
    for (const auto& a : q.arrows()) {
        if (a.source == i) y(i) += x(a.target);
        if (a.target == i) y(i) += x(a.source);
    }
    return y;
}

IntMatrix reflection_matrix(const Quiver& q, Index i) {
    if (i < 0 || i >= q.vertex_count()) throw Error(Errc::InvalidVertex, "vertex out of range");
    IntMatrix s = IntMatrix::Identity(q.vertex_count(), q.vertex_count());
    s(i, i) = -1;
    for (const auto& a : q.arrows()) {
        if (a.source == i) s(i, a.target) += 1;
        if (a.target == i) s(i, a.source) += 1;
    }
    return s;
}

IntMatrix coxeter_matrix(const Quiver& q) {
    IntMatrix phi = IntMatrix::Identity(q.vertex_count(), q.vertex_count());
    for (Index v : q.canonical_order()) phi = (reflection_matrix(q, v) * phi).eval();
    return phi;
}

IntMatrix inverse_coxeter_matrix(const Quiver& q) {
    IntMatrix inv = IntMatrix::Identity(q.vertex_count(), q.vertex_count());
    const auto& order = q.canonical_order();
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        inv = (reflection_matrix(q, *it) * inv).eval();
    return inv;
}

DimVector coxeter_apply(const Quiver& q, const DimVector& x, long t) {
    require_bound(q, x);
    const IntMatrix step = t >= 0 ? coxeter_matrix(q) : inverse_coxeter_matrix(q);
    DimVector y = x;
    for (long k = 0; k < (t >= 0 ? t : -t); ++k) y = (step * y).eval();
    return y;
}

namespace {

std::optional<Index> first_negative(const DimVector& x) {
    for (Index i = 0; i < x.size(); ++i)
        if (x(i) < 0) return i;
    return std::nullopt;
}

} // namespace

RegularityCertificate regularity_check(const Quiver& q, const DimVector& x, long bound) {
    require_bound(q, x);
    if (bound < 1) throw Error(Errc::InvalidArgument, "regularity bound must be at least 1");
    RegularityCertificate cert;
    cert.bound_used = bound;

    auto fail = [&](long t, const DimVector& y, Index v) {
        cert.verdict = Regularity::NotRegular;
        cert.witness = NegativeWitness{t, v, y(v)};
        return cert;
    };
    if (auto v = first_negative(x)) return fail(0, x, *v);

    const IntMatrix phi = coxeter_matrix(q);
    const IntMatrix phi_inv = inverse_coxeter_matrix(q);
    DimVector forward = x;
    DimVector backward = x;
    for (long t = 1; t <= bound; ++t) {
        forward = (phi * forward).eval();
        if (auto v = first_negative(forward)) return fail(t, forward, *v);
        if (!cert.period && forward == x) cert.period = t;
        backward = (phi_inv * backward).eval();
        if (auto v = first_negative(backward)) return fail(-t, backward, *v);
    }
    if (cert.period) {
        cert.verdict = Regularity::Regular;
        return cert;
    }
    auto fwd = spectral_tail_bound(phi, forward);
    auto bwd = spectral_tail_bound(phi_inv, backward);
    if (fwd && bwd) {
        cert.verdict = Regularity::Regular;
        cert.spectral = SpectralCertificate{*fwd, *bwd};
    }
    return cert;
}

Lemma2Result lemma2_scan(const Quiver& q, const DimVector& x, long t_max, long window,
                         long regularity_bound) {
    require_bound(q, x);
    if (t_max < 0 || window < 0) throw Error(Errc::InvalidArgument, "t_max and window must be nonnegative");
    if (is_zero_vector(x)) throw Error(Errc::NotRegularInput, "the zero vector is excluded");
    const auto reg = regularity_check(q, x, regularity_bound);
    if (reg.verdict != Regularity::Regular)
        throw Error(Errc::NotRegularInput,
                    "input vector is " + std::string(to_string(reg.verdict)) + ", not Regular");

    const IntMatrix phi_inv = inverse_coxeter_matrix(q);
    const IntMatrix euler = euler_matrix(q);
    const DimVector ex = euler * x;
    std::vector<Integer> values;
    DimVector y = x;
    for (long t = 0; t <= t_max + window; ++t) {
        values.push_back(y.dot(ex));
        y = (phi_inv * y).eval();
    }

    Lemma2Result result;
    result.window = window;
    long first = -1;
    for (long t = 0; t <= t_max; ++t) {
        if (values[static_cast<std::size_t>(t)] > 0) {
            first = t;
            break;
        }
    }
    if (first < 0)
        throw Error(Errc::NoPositiveT, "no t <= " + std::to_string(t_max) + " with positive pairing");
    result.first_positive_t = first;

    // run[t] = number of consecutive positive values starting at t.
    std::vector<long> run(values.size() + 1, 0);
    for (long t = static_cast<long>(values.size()) - 1; t >= 0; --t)
        run[static_cast<std::size_t>(t)] =
            values[static_cast<std::size_t>(t)] > 0 ? run[static_cast<std::size_t>(t) + 1] + 1 : 0;
    for (long t = first; t <= t_max; ++t) {
        if (run[static_cast<std::size_t>(t)] >= window + 1) {
            result.stable_t = t;
            break;
        }
    }
    const long from = result.stable_t.value_or(first);
    const long to = result.stable_t ? from + window : t_max;
    for (long t = from; t <= to; ++t) result.trace.emplace_back(t, values[static_cast<std::size_t>(t)]);
    return result;
}

bool support_connected(const Quiver& q, const DimVector& x) {
    const Index n = q.vertex_count();
    std::vector<Index> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), Index{0});
    auto find = [&](Index v) {
        while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
        return v;
    };
    for (const auto& a : q.arrows())
        if (x(a.source) != 0 && x(a.target) != 0) parent[static_cast<std::size_t>(find(a.source))] = find(a.target);
    std::optional<Index> root;
    for (Index v = 0; v < n; ++v) {
        if (x(v) == 0) continue;
        if (!root) root = find(v);
        else if (find(v) != *root) return false;
    }
    return root.has_value();
}

RootClass classify_root(const Quiver& q, const DimVector& x) {
    require_bound(q, x);
    if (!is_nonnegative(x) || is_zero_vector(x))
        throw Error(Errc::NonPositiveInput, "root classification needs a nonzero nonnegative vector");
    const Index n = q.vertex_count();
    RootClass rc;
    DimVector y = x;
    while (true) {
        if (y.sum() == 1) {
            rc.kind = RootKind::RealRoot;
            break;
        }
        Index pick = -1;
        for (Index i = 0; i < n; ++i) {
            if (symmetric_form(q, y, unit_vector(n, i)) > 0) {
                pick = i;
                break;
            }
        }
        if (pick < 0) {
            if (support_connected(q, y)) {
                rc.kind = RootKind::ImaginaryRoot;
                rc.zero_root = tits_form(q, y) == 0;
            } else {
                rc.kind = RootKind::NotARoot;
            }
            break;
        }
        DimVector next = simple_reflection(q, pick, y);
        rc.reduction_trace.push_back(pick);
        if (!is_nonnegative(next)) {
            rc.kind = RootKind::NotARoot;
            y = next;
            break;
        }
        y = next;
    }
    rc.reduced = y;
    return rc;
}

bool is_proper_multiple_of_zero_root(const Quiver& q, const DimVector& x) {
    Integer g = 0;
    for (Index i = 0; i < x.size(); ++i) g = mp::gcd(g, x(i));
    for (Integer c = 2; c <= g; ++c) {
        if (g % c != 0) continue;
        const DimVector z = x / c;
        if (tits_form(q, z) != 0) continue;
        if (classify_root(q, z).kind == RootKind::ImaginaryRoot) return true;
    }
    return false;
}

namespace {

void enumerate(Index pos, long remaining, DimVector& current, std::vector<DimVector>& out) {
    if (pos == current.size()) {
        if (!is_zero_vector(current)) out.push_back(current);
        return;
    }
    for (long v = 0; v <= remaining; ++v) {
        current(pos) = v;
        enumerate(pos + 1, remaining - v, current, out);
    }
    current(pos) = 0;
}

} // namespace

std::vector<DimVector> positive_vectors(Index n, long h) {
    std::vector<DimVector> out;
    DimVector current = DimVector::Zero(n);
    enumerate(0, h, current, out);
    return out;
}

std::vector<ConjectureCandidate> conjecture_scan(const Quiver& q, long height_bound,
                                                 long regularity_bound) {
    if (classify_type(q) != QuiverType::Wild)
        throw Error(Errc::NotWild, "the conjecture scan applies to wild quivers only");
    if (height_bound < 1) throw Error(Errc::InvalidArgument, "height bound must be at least 1");
    std::vector<ConjectureCandidate> out;
    for (const auto& x : positive_vectors(q.vertex_count(), height_bound)) {
        if (classify_root(q, x).kind != RootKind::ImaginaryRoot) continue;
        if (is_proper_multiple_of_zero_root(q, x)) continue;
        out.push_back(ConjectureCandidate{x, tits_form(q, x), regularity_check(q, x, regularity_bound)});
    }
    return out;
}

} // namespace quiver
