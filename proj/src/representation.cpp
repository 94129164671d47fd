#include "quiver/representation.hpp"

#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

#include "quiver/error.hpp"
#include "quiver/forms.hpp"

namespace quiver {

Representation::Representation(Quiver q, PrimeField field, std::vector<Index> dims,
                               std::vector<FpMatrix> maps)
    : quiver_(std::move(q)), field_(field), dims_(std::move(dims)), maps_(std::move(maps)) {
    if (static_cast<Index>(dims_.size()) != quiver_.vertex_count())
        throw Error(Errc::DimensionMismatch, "dimension vector length does not match the quiver");
    for (Index d : dims_)
        if (d < 0) throw Error(Errc::NegativeDimension, "negative dimension in representation");
    if (static_cast<Index>(maps_.size()) != quiver_.arrow_count())
        throw Error(Errc::ShapeMismatch, "one matrix per arrow is required");
    for (Index a = 0; a < quiver_.arrow_count(); ++a) {
        const auto& arrow = quiver_.arrow(a);
        const auto& m = map(a);
        if (m.rows() != dim(arrow.target) || m.cols() != dim(arrow.source))
            throw Error(Errc::ShapeMismatch,
                        "matrix of arrow " + arrow.name + " is " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + ", expected " +
                            std::to_string(dim(arrow.target)) + "x" + std::to_string(dim(arrow.source)));
        for (Index r = 0; r < m.rows(); ++r)
            for (Index c = 0; c < m.cols(); ++c)
                if (m(r, c) < 0 || m(r, c) >= field_.modulus())
                    throw Error(Errc::InvalidArgument,
                                "matrix entry of arrow " + arrow.name + " is not a canonical residue");
    }
}

Representation Representation::zero(const Quiver& q, const PrimeField& field) {
    std::vector<FpMatrix> maps(static_cast<std::size_t>(q.arrow_count()));
    return Representation(q, field, std::vector<Index>(static_cast<std::size_t>(q.vertex_count()), 0),
                          std::move(maps));
}

DimVector Representation::dim_vector() const {
    DimVector x(static_cast<Index>(dims_.size()));
    for (std::size_t i = 0; i < dims_.size(); ++i) x(static_cast<Index>(i)) = dims_[i];
    return x;
}

Index Representation::total_dim() const {
    Index total = 0;
    for (Index d : dims_) total += d;
    return total;
}

std::vector<Index> to_dims(const DimVector& x) {
    std::vector<Index> dims;
    dims.reserve(static_cast<std::size_t>(x.size()));
    for (Index i = 0; i < x.size(); ++i) {
        if (x(i) < 0) throw Error(Errc::NegativeDimension, "dimension vector has a negative entry");
        if (x(i) > 1'000'000) throw Error(Errc::InvalidArgument, "dimension too large to sample");
        dims.push_back(x(i).convert_to<Index>());
    }
    return dims;
}

namespace {

void require_same_context(const Representation& x, const Representation& y) {
    if (!(x.quiver() == y.quiver()))
        throw Error(Errc::ContextMismatch, "representations live over different quivers");
    if (!(x.field() == y.field()))
        throw Error(Errc::ContextMismatch, "representations live over different fields");
}

} // namespace

FpMatrix delta_matrix(const Representation& x, const Representation& y) {
    require_same_context(x, y);
    const Quiver& q = x.quiver();
    const PrimeField& field = x.field();

    std::vector<Index> col_offset;
    Index cols = 0;
    for (Index i = 0; i < q.vertex_count(); ++i) {
        col_offset.push_back(cols);
        cols += x.dim(i) * y.dim(i);
    }
    Index rows = 0;
    for (const auto& a : q.arrows()) rows += x.dim(a.source) * y.dim(a.target);

    FpMatrix delta = FpMatrix::Zero(rows, cols);
    Index row_offset = 0;
    for (Index ai = 0; ai < q.arrow_count(); ++ai) {
        const auto& a = q.arrow(ai);
        const Index s = a.source;
        const Index t = a.target;
        const FpMatrix& xa = x.map(ai);
        const FpMatrix& ya = y.map(ai);
        const Index yt = y.dim(t);
        const Index ys = y.dim(s);
        // Entry (r, c) of f_t X_a - Y_a f_s.
        for (Index c = 0; c < x.dim(s); ++c) {
            for (Index r = 0; r < yt; ++r) {
                const Index row = row_offset + c * yt + r;
                for (Index k = 0; k < x.dim(t); ++k) {
                    auto& entry = delta(row, col_offset[static_cast<std::size_t>(t)] + k * yt + r);
                    entry = field.add(entry, xa(k, c));
                }
                for (Index k = 0; k < ys; ++k) {
                    auto& entry = delta(row, col_offset[static_cast<std::size_t>(s)] + c * ys + k);
                    entry = field.sub(entry, ya(r, k));
                }
            }
        }
        row_offset += x.dim(s) * yt;
    }
    return delta;
}

bool is_morphism(const Representation& x, const Representation& y, const Morphism& f) {
    require_same_context(x, y);
    const Quiver& q = x.quiver();
    const PrimeField& field = x.field();
    if (static_cast<Index>(f.size()) != q.vertex_count()) return false;
    for (Index i = 0; i < q.vertex_count(); ++i) {
        const auto& fi = f[static_cast<std::size_t>(i)];
        if (fi.rows() != y.dim(i) || fi.cols() != x.dim(i)) return false;
    }
    for (Index ai = 0; ai < q.arrow_count(); ++ai) {
        const auto& a = q.arrow(ai);
        const FpMatrix lhs = mat_mul(field, f[static_cast<std::size_t>(a.target)], x.map(ai));
        const FpMatrix rhs = mat_mul(field, y.map(ai), f[static_cast<std::size_t>(a.source)]);
        if (lhs != rhs) return false;
    }
    return true;
}

HomExtResult hom_ext(const Representation& x, const Representation& y, bool with_basis) {
    const FpMatrix delta = delta_matrix(x, y);
    const PrimeField& field = x.field();
    HomExtResult result;
    if (with_basis) {
        const FpMatrix kernel = kernel_basis(field, delta);
        result.hom_dim = kernel.cols();
        result.ext_dim = delta.rows() - (delta.cols() - kernel.cols());
        const Quiver& q = x.quiver();
        for (Index k = 0; k < kernel.cols(); ++k) {
            Morphism f;
            Index offset = 0;
            for (Index i = 0; i < q.vertex_count(); ++i) {
                const Index rows = y.dim(i);
                const Index cols = x.dim(i);
                FpMatrix block(rows, cols);
                for (Index c = 0; c < cols; ++c)
                    for (Index r = 0; r < rows; ++r) block(r, c) = kernel(offset + c * rows + r, k);
                f.push_back(std::move(block));
                offset += rows * cols;
            }
            result.hom_basis.push_back(std::move(f));
        }
    } else {
        const Index r = rank(field, delta);
        result.hom_dim = delta.cols() - r;
        result.ext_dim = delta.rows() - r;
    }
    if (Integer(result.hom_dim - result.ext_dim) !=
        euler_form(x.quiver(), x.dim_vector(), y.dim_vector()))
        throw std::logic_error("hom - ext differs from the Euler form");
    return result;
}

Index hom_dim(const Representation& x, const Representation& y) {
    return hom_ext(x, y, false).hom_dim;
}

Index end_dim(const Representation& x) { return hom_dim(x, x); }

Representation build_simple(const Quiver& q, Index i, const PrimeField& field) {
    if (i < 0 || i >= q.vertex_count()) throw Error(Errc::InvalidVertex, "vertex out of range");
    std::vector<Index> dims(static_cast<std::size_t>(q.vertex_count()), 0);
    dims[static_cast<std::size_t>(i)] = 1;
    std::vector<FpMatrix> maps;
    for (const auto& a : q.arrows()) maps.push_back(FpMatrix::Zero(dims[static_cast<std::size_t>(a.target)],
                                                                   dims[static_cast<std::size_t>(a.source)]));
    return Representation(q, field, std::move(dims), std::move(maps));
}

namespace {

using Path = std::vector<Index>;

// paths[j] lists the directed paths from `start` to j, as arrow sequences.
void collect_paths_from(const Quiver& q, Index v, Path& current, std::vector<std::vector<Path>>& paths) {
    paths[static_cast<std::size_t>(v)].push_back(current);
    for (Index a : q.outgoing(v)) {
        current.push_back(a);
        collect_paths_from(q, q.arrow(a).target, current, paths);
        current.pop_back();
    }
}

// paths[j] lists the directed paths from j to `end`.
void collect_paths_to(const Quiver& q, Index v, Path& reversed, std::vector<std::vector<Path>>& paths) {
    paths[static_cast<std::size_t>(v)].push_back(Path(reversed.rbegin(), reversed.rend()));
    for (Index a : q.incoming(v)) {
        reversed.push_back(a);
        collect_paths_to(q, q.arrow(a).source, reversed, paths);
        reversed.pop_back();
    }
}

std::map<Path, Index> index_paths(const std::vector<Path>& list) {
    std::map<Path, Index> idx;
    for (std::size_t k = 0; k < list.size(); ++k) idx.emplace(list[k], static_cast<Index>(k));
    return idx;
}

} // namespace

Representation build_projective(const Quiver& q, Index i, const PrimeField& field) {
    if (i < 0 || i >= q.vertex_count()) throw Error(Errc::InvalidVertex, "vertex out of range");
    std::vector<std::vector<Path>> paths(static_cast<std::size_t>(q.vertex_count()));
    Path current;
    collect_paths_from(q, i, current, paths);

    std::vector<Index> dims;
    std::vector<std::map<Path, Index>> index;
    for (const auto& list : paths) {
        dims.push_back(static_cast<Index>(list.size()));
        index.push_back(index_paths(list));
    }
    std::vector<FpMatrix> maps;
    for (Index ai = 0; ai < q.arrow_count(); ++ai) {
        const auto& a = q.arrow(ai);
        FpMatrix m = FpMatrix::Zero(dims[static_cast<std::size_t>(a.target)],
                                    dims[static_cast<std::size_t>(a.source)]);
        const auto& sources = paths[static_cast<std::size_t>(a.source)];
        for (std::size_t c = 0; c < sources.size(); ++c) {
            Path extended = sources[c];
            extended.push_back(ai);
            m(index[static_cast<std::size_t>(a.target)].at(extended), static_cast<Index>(c)) = 1;
        }
        maps.push_back(std::move(m));
    }
    return Representation(q, field, std::move(dims), std::move(maps));
}

Representation build_injective(const Quiver& q, Index i, const PrimeField& field) {
    if (i < 0 || i >= q.vertex_count()) throw Error(Errc::InvalidVertex, "vertex out of range");
    std::vector<std::vector<Path>> paths(static_cast<std::size_t>(q.vertex_count()));
    Path reversed;
    collect_paths_to(q, i, reversed, paths);

    std::vector<Index> dims;
    std::vector<std::map<Path, Index>> index;
    for (const auto& list : paths) {
        dims.push_back(static_cast<Index>(list.size()));
        index.push_back(index_paths(list));
    }
    std::vector<FpMatrix> maps;
    for (Index ai = 0; ai < q.arrow_count(); ++ai) {
        const auto& a = q.arrow(ai);
        FpMatrix m = FpMatrix::Zero(dims[static_cast<std::size_t>(a.target)],
                                    dims[static_cast<std::size_t>(a.source)]);
        const auto& sources = paths[static_cast<std::size_t>(a.source)];
        for (std::size_t c = 0; c < sources.size(); ++c) {
            const Path& p = sources[c];
            if (p.empty() || p.front() != ai) continue;
            const Path rest(p.begin() + 1, p.end());
            m(index[static_cast<std::size_t>(a.target)].at(rest), static_cast<Index>(c)) = 1;
        }
        maps.push_back(std::move(m));
    }
    return Representation(q, field, std::move(dims), std::move(maps));
}

Representation direct_sum(const Representation& x, const Representation& y) {
    require_same_context(x, y);
    const Quiver& q = x.quiver();
    std::vector<Index> dims;
    for (Index i = 0; i < q.vertex_count(); ++i) dims.push_back(x.dim(i) + y.dim(i));
    std::vector<FpMatrix> maps;
    for (Index ai = 0; ai < q.arrow_count(); ++ai) {
        const FpMatrix& a = x.map(ai);
        const FpMatrix& b = y.map(ai);
        FpMatrix m = FpMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
        m.topLeftCorner(a.rows(), a.cols()) = a;
        m.bottomRightCorner(b.rows(), b.cols()) = b;
        maps.push_back(std::move(m));
    }
    return Representation(q, x.field(), std::move(dims), std::move(maps));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31U);
}

Representation random_rep(const Quiver& q, const DimVector& x, const PrimeField& field,
                          std::uint64_t seed) {
    require_bound(q, x);
    std::vector<Index> dims = to_dims(x);
    std::mt19937_64 rng(seed);
    // Rejection sampling on the raw engine output keeps the stream portable.
    const auto p = static_cast<std::uint64_t>(field.modulus());
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % p;
    auto draw = [&]() {
        std::uint64_t v = rng();
        while (v >= limit) v = rng();
        return static_cast<std::int64_t>(v % p);
    };
    std::vector<FpMatrix> maps;
    for (const auto& a : q.arrows()) {
        FpMatrix m(dims[static_cast<std::size_t>(a.target)], dims[static_cast<std::size_t>(a.source)]);
        for (Index r = 0; r < m.rows(); ++r)
            for (Index c = 0; c < m.cols(); ++c) m(r, c) = draw();
        maps.push_back(std::move(m));
    }
    return Representation(q, field, std::move(dims), std::move(maps));
}

GeneralPositionSample general_position_sample(const Quiver& q, const DimVector& x,
                                              const PrimeField& field, int trials,
                                              std::uint64_t seed) {
    if (trials < 1) throw Error(Errc::InvalidArgument, "trials must be at least 1");
    require_bound(q, x);
    to_dims(x);
    const Integer q_value = tits_form(q, x);
    const Index floor = is_zero_vector(x) ? 0 : (q_value > 1 ? q_value.convert_to<Index>() : 1);

    std::optional<GeneralPositionSample> best;
    int run = 0;
    for (int k = 0; k < trials; ++k) {
        Representation rep = random_rep(q, x, field, derive_seed(seed, static_cast<std::uint64_t>(k)));
        const Index e = end_dim(rep);
        ++run;
        if (!best || e < best->end_dim) best = GeneralPositionSample{std::move(rep), e, k, 0};
        if (best->end_dim <= floor) break;
    }
    best->trials_run = run;
    return *best;
}

} // namespace quiver
