#include "quiver/functors.hpp"

#include <algorithm>
#include <stdexcept>

#include "quiver/error.hpp"
#include "quiver/forms.hpp"

namespace quiver {

std::string_view to_string(Direction d) { return d == Direction::Forward ? "forward" : "backward"; }

std::string_view to_string(ScanVerdict v) {
    switch (v) {
    case ScanVerdict::PreprojectiveFree: return "PreprojectiveFree";
    case ScanVerdict::PreinjectiveFree: return "PreinjectiveFree";
    case ScanVerdict::SummandFound: return "SummandFound";
    case ScanVerdict::Inconclusive: return "Inconclusive";
    }
    return "Unknown";
}

ReflectionResult reflect_sink(const Representation& x, Index i) {
    const Quiver& q = x.quiver();
    if (i < 0 || i >= q.vertex_count()) throw Error(Errc::InvalidVertex, "vertex out of range");
    if (!q.is_sink(i)) throw Error(Errc::NotASink, "vertex " + std::to_string(i + 1) + " is not a sink");
    const PrimeField& field = x.field();
    const auto in = q.incoming(i);

    std::vector<Index> offsets;
    Index width = 0;
    for (Index a : in) {
        offsets.push_back(width);
        width += x.dim(q.arrow(a).source);
    }
    FpMatrix assembled(x.dim(i), width);
    for (std::size_t k = 0; k < in.size(); ++k)
        assembled.middleCols(offsets[k], x.map(in[k]).cols()) = x.map(in[k]);

    const FpMatrix kernel = kernel_basis(field, assembled);
    const Index rank = width - kernel.cols();

    std::vector<Index> dims = x.dims();
    dims[static_cast<std::size_t>(i)] = kernel.cols();
    std::vector<FpMatrix> maps = x.maps();
    for (std::size_t k = 0; k < in.size(); ++k) {
        const Index src = q.arrow(in[k]).source;
        maps[static_cast<std::size_t>(in[k])] = kernel.middleRows(offsets[k], x.dim(src));
    }
    return ReflectionResult{Representation(q.reflected_at(i), field, std::move(dims), std::move(maps)),
                            x.dim(i) - rank};
}

ReflectionResult reflect_source(const Representation& x, Index i) {
    const Quiver& q = x.quiver();
    if (i < 0 || i >= q.vertex_count()) throw Error(Errc::InvalidVertex, "vertex out of range");
    if (!q.is_source(i))
        throw Error(Errc::NotASource, "vertex " + std::to_string(i + 1) + " is not a source");
    const PrimeField& field = x.field();
    const auto out = q.outgoing(i);

    std::vector<Index> offsets;
    Index height = 0;
    for (Index a : out) {
        offsets.push_back(height);
        height += x.dim(q.arrow(a).target);
    }
    FpMatrix assembled(height, x.dim(i));
    for (std::size_t k = 0; k < out.size(); ++k)
        assembled.middleRows(offsets[k], x.map(out[k]).rows()) = x.map(out[k]);

    // Rows of `projection` span the left kernel, so its kernel is the image.
    const FpMatrix projection = kernel_basis(field, FpMatrix(assembled.transpose())).transpose();
    const Index rank = height - projection.rows();

    std::vector<Index> dims = x.dims();
    dims[static_cast<std::size_t>(i)] = projection.rows();
    std::vector<FpMatrix> maps = x.maps();
    for (std::size_t k = 0; k < out.size(); ++k) {
        const Index tgt = q.arrow(out[k]).target;
        maps[static_cast<std::size_t>(out[k])] = projection.middleCols(offsets[k], x.dim(tgt));
    }
    return ReflectionResult{Representation(q.reflected_at(i), field, std::move(dims), std::move(maps)),
                            x.dim(i) - rank};
}

namespace {

// Reflections carry their own (reoriented) quiver along; after the full sweep
// the orientation is the original one again.
Representation reattach(const Representation& rep, const Quiver& original) {
    if (!(rep.quiver() == original)) throw std::logic_error("sweep did not restore the orientation");
    return Representation(original, rep.field(), rep.dims(), rep.maps());
}

} // namespace

SweepResult coxeter_plus(const Representation& x) {
    SweepResult out{x, {}};
    for (Index v : x.quiver().canonical_order()) {
        auto step = reflect_sink(out.rep, v);
        if (step.defect > 0) out.defects.push_back(Defect{1, v, step.defect});
        out.rep = std::move(step.rep);
    }
    out.rep = reattach(out.rep, x.quiver());
    return out;
}

SweepResult coxeter_minus(const Representation& x) {
    SweepResult out{x, {}};
    const auto& order = x.quiver().canonical_order();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        auto step = reflect_source(out.rep, *it);
        if (step.defect > 0) out.defects.push_back(Defect{1, *it, step.defect});
        out.rep = std::move(step.rep);
    }
    out.rep = reattach(out.rep, x.quiver());
    return out;
}

Representation ar_translate(const Representation& x) {
    auto sweep = coxeter_plus(x);
    if (!sweep.defects.empty())
        throw Error(Errc::ProjectiveSummandPresent,
                    "P(" + std::to_string(sweep.defects.front().vertex + 1) + ") is a direct summand");
    return std::move(sweep.rep);
}

Representation ar_translate_inverse(const Representation& x) {
    auto sweep = coxeter_minus(x);
    if (!sweep.defects.empty())
        throw Error(Errc::InjectiveSummandPresent,
                    "I(" + std::to_string(sweep.defects.front().vertex + 1) + ") is a direct summand");
    return std::move(sweep.rep);
}

namespace {

bool rank_at_most_one(const IntMatrix& m) {
    Index r0 = -1, c0 = -1;
    for (Index j = 0; j < m.cols() && r0 < 0; ++j)
        for (Index i = 0; i < m.rows(); ++i)
            if (m(i, j) != 0) {
                r0 = i;
                c0 = j;
                break;
            }
    if (r0 < 0) return true;
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            if (m(i, j) * m(r0, c0) != m(i, c0) * m(r0, j)) return false;
    return true;
}

// Smallest h with step^h - 1 of rank one. For a Euclidean quiver this is
// step^h = 1 + delta l^T with l invariant under step.
long tame_period(const IntMatrix& step) {
    const Index n = step.rows();
    IntMatrix power = IntMatrix::Identity(n, n);
    for (long h = 1; h <= 10000; ++h) {
        power = (step * power).eval();
        const IntMatrix diff = power - IntMatrix::Identity(n, n);
        if (!diff.isZero() && rank_at_most_one(diff)) return h;
    }
    throw std::logic_error("no Coxeter period found on a Euclidean quiver");
}

} // namespace

int sufficient_sweeps(const Quiver& q, const DimVector& x, Direction direction) {
    require_bound(q, x);
    const QuiverType type = classify_type(q);
    const IntMatrix step = direction == Direction::Forward ? inverse_coxeter_matrix(q) : coxeter_matrix(q);
    const auto fits = [&](const DimVector& y) { return is_nonnegative(DimVector(x - y)); };

    const long period = type == QuiverType::Tame ? tame_period(step) : 0;
    const double x_max = x.size() ? x.maxCoeff().convert_to<double>() : 0;

    long last = -1;
    for (Index i = 0; i < q.vertex_count(); ++i) {
        DimVector y = direction == Direction::Forward ? proj_dim_vector(q, i) : inj_dim_vector(q, i);
        // Tame: step^period y - y is a constant vector along the orbit; when it
        // is nonnegative, each vector dominates the one `period` steps back, so
        // `period` consecutive misses end the orbit.
        bool growing = false;
        if (type == QuiverType::Tame) {
            DimVector z = y;
            for (long k = 0; k < period; ++k) z = (step * z).eval();
            growing = is_nonnegative(DimVector(z - y)) && !is_zero_vector(DimVector(z - y));
            if (!growing) throw std::logic_error("preprojective orbit does not grow on a Euclidean quiver");
        }
        long misses = 0;
        for (long s = 0;; ++s) {
            if (!is_nonnegative(y)) break;
            if (fits(y)) {
                last = std::max(last, s);
                misses = 0;
            } else if (type == QuiverType::Tame && ++misses >= period) {
                break;
            }
            if (type == QuiverType::Wild && y.sum() > x.sum()) {
                // Wild: every later vector is at least rho^s (margin - error) |y|
                // entrywise, so once that exceeds max x nothing later fits.
                const auto tail = spectral_tail_bound(step, y);
                const double y_max = y.maxCoeff().convert_to<double>();
                if (tail && tail->rho * (tail->margin - tail->error_radius) * y_max > x_max) break;
            }
            if (s > 100000) throw std::logic_error("sufficient sweep search did not terminate");
            y = (step * y).eval();
        }
    }
    return static_cast<int>(std::max<long>(1, last + 1));
}

DefectReport defect_scan(const Representation& x, Direction direction, std::optional<int> bound) {
    if (bound && *bound < 1) throw Error(Errc::InvalidArgument, "scan bound must be at least 1");
    const Quiver& q = x.quiver();
    DefectReport report;
    report.direction = direction;
    report.sufficient_bound = sufficient_sweeps(q, x.dim_vector(), direction);
    report.bound = bound.value_or(report.sufficient_bound);

    const IntMatrix step = direction == Direction::Forward ? coxeter_matrix(q) : inverse_coxeter_matrix(q);
    DimVector expected = x.dim_vector();
    Representation current = x;
    const int limit = std::min(report.bound, report.sufficient_bound);
    for (int sweep = 1; sweep <= limit && !current.is_zero(); ++sweep) {
        auto result = direction == Direction::Forward ? coxeter_plus(current) : coxeter_minus(current);
        for (auto d : result.defects) {
            d.step = sweep;
            report.defects.push_back(d);
        }
        current = std::move(result.rep);
        report.steps_run = sweep;
        expected = (step * expected).eval();
        if (report.defects.empty() && !(current.dim_vector() == expected))
            throw std::logic_error("defect-free sweep does not follow the Coxeter transformation");
    }

    if (!report.defects.empty())
        report.verdict = ScanVerdict::SummandFound;
    else if (report.bound >= report.sufficient_bound || current.is_zero())
        report.verdict = direction == Direction::Forward ? ScanVerdict::PreprojectiveFree
                                                         : ScanVerdict::PreinjectiveFree;
    else
        report.verdict = ScanVerdict::Inconclusive;
    return report;
}

SummandScan summand_defect_scan(const Representation& x, std::optional<int> bound) {
    return SummandScan{defect_scan(x, Direction::Forward, bound), defect_scan(x, Direction::Backward, bound)};
}

Lemma9Report demo_lemma9(const Quiver& q, const DimVector& x, const PrimeField& field,
                         std::uint64_t seed, const Lemma9Options& options) {
    require_bound(q, x);
    const auto reg = regularity_check(q, x, options.regularity_bound);
    if (reg.verdict != Regularity::Regular)
        throw Error(Errc::NotRegularInput,
                    "input vector is " + std::string(to_string(reg.verdict)) + ", not Regular");
    const auto scan = lemma2_scan(q, x, options.t_max, 0, options.regularity_bound);

    Lemma9Report report;
    report.t = scan.first_positive_t;

    const DimVector dim_r = coxeter_apply(q, x, -report.t);
    const auto r_sample = general_position_sample(q, dim_r, field, options.trials, derive_seed(seed, 1));
    report.r_end_dim = r_sample.end_dim;
    const Representation& r = r_sample.rep;

    const auto x_sample = general_position_sample(q, x, field, options.trials, derive_seed(seed, 2));
    report.x_end_dim = x_sample.end_dim;

    report.dim_r = dim_r;
    report.dim_x = x;
    report.euler = euler_form(q, report.dim_r, x);
    auto homext = hom_ext(r, x_sample.rep);
    report.hom_dim = homext.hom_dim;
    report.ext_dim = homext.ext_dim;
    if (!homext.hom_basis.empty()) report.witness = homext.hom_basis.front();
    report.r_scan = summand_defect_scan(r);
    report.x_scan = summand_defect_scan(x_sample.rep);
    return report;
}

} // namespace quiver
