#include "quiver/io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "quiver/error.hpp"

namespace quiver {

DimVector parse_dim_vector(std::string_view text, Index n) {
    std::vector<long> coords;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view item = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        long v = 0;
        auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc() || end != item.data() + item.size())
            throw Error(Errc::ParseError, "bad dimension vector '" + std::string(text) + "'");
        coords.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (static_cast<Index>(coords.size()) != n)
        throw Error(Errc::DimensionMismatch, "dimension vector has " + std::to_string(coords.size()) +
                                                 " entries, quiver has " + std::to_string(n) + " vertices");
    DimVector x(n);
    for (Index i = 0; i < n; ++i) x(i) = coords[static_cast<std::size_t>(i)];
    return x;
}

std::string format_dim_vector(const DimVector& x) {
    std::string out;
    for (Index i = 0; i < x.size(); ++i) {
        if (i) out += ',';
        out += x(i).str();
    }
    return out;
}

Json integer_to_json(const Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

Json dim_vector_to_json(const DimVector& x) {
    Json out = Json::array();
    for (Index i = 0; i < x.size(); ++i) out.push_back(integer_to_json(x(i)));
    return out;
}

Json representation_to_json(const Representation& x) {
    Json arrows = Json::object();
    const Quiver& q = x.quiver();
    for (Index a = 0; a < q.arrow_count(); ++a) {
        const FpMatrix& m = x.map(a);
        Json rows = Json::array();
        for (Index r = 0; r < m.rows(); ++r) {
            Json row = Json::array();
            for (Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
            rows.push_back(std::move(row));
        }
        arrows[q.arrow(a).name] = std::move(rows);
    }
    return Json{{"field", x.field().modulus()}, {"dims", x.dims()}, {"arrows", std::move(arrows)}};
}

Representation representation_from_json(const Quiver& q, const Json& j) {
    try {
        const PrimeField field(j.at("field").get<std::int64_t>());
        const auto dims = j.at("dims").get<std::vector<Index>>();
        if (static_cast<Index>(dims.size()) != q.vertex_count())
            throw Error(Errc::DimensionMismatch, "dims has the wrong length");
        for (Index d : dims)
            if (d < 0) throw Error(Errc::NegativeDimension, "negative dimension in dims");
        const Json& arrows = j.at("arrows");
        if (arrows.size() != static_cast<std::size_t>(q.arrow_count()))
            throw Error(Errc::ShapeMismatch, "arrow matrices do not match the quiver's arrows");
        std::vector<FpMatrix> maps;
        for (const auto& arrow : q.arrows()) {
            if (!arrows.contains(arrow.name))
                throw Error(Errc::ShapeMismatch, "missing matrix for arrow " + arrow.name);
            const Json& rows = arrows.at(arrow.name);
            const Index r = dims[static_cast<std::size_t>(arrow.target)];
            const Index c = dims[static_cast<std::size_t>(arrow.source)];
            // A 0 x c matrix is written as []; an r x 0 matrix as r empty rows or [].
            if (static_cast<Index>(rows.size()) != r && !(rows.empty() && (r == 0 || c == 0)))
                throw Error(Errc::ShapeMismatch, "matrix for arrow " + arrow.name + " has the wrong shape");
            FpMatrix m = FpMatrix::Zero(r, c);
            for (Index i = 0; i < static_cast<Index>(rows.size()); ++i) {
                const auto row = rows[static_cast<std::size_t>(i)].get<std::vector<std::int64_t>>();
                if (static_cast<Index>(row.size()) != c)
                    throw Error(Errc::ShapeMismatch, "matrix for arrow " + arrow.name + " has the wrong shape");
                for (Index k = 0; k < c; ++k) m(i, k) = row[static_cast<std::size_t>(k)];
            }
            maps.push_back(std::move(m));
        }
        return Representation(q, field, dims, std::move(maps));
    } catch (const Json::exception& e) {
        throw Error(Errc::ParseError, std::string("representation JSON: ") + e.what());
    }
}

Representation load_representation(const Quiver& q, const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::InvalidArgument, "cannot open " + path.string());
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw Error(Errc::ParseError, path.string() + ": " + e.what());
    }
    return representation_from_json(q, j);
}

void save_representation(const Representation& x, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::InvalidArgument, "cannot write " + path.string());
    out << representation_to_json(x).dump() << '\n';
}

} // namespace quiver
