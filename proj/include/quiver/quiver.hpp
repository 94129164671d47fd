#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "quiver/scalar.hpp"

namespace quiver {

/// A named arrow; endpoints are 0-based vertex indices.
struct Arrow {
    std::string name;
    Index source = 0;
    Index target = 0;

    bool operator==(const Arrow&) const = default;
};

/// A finite, connected quiver without oriented cycles.
///
/// Vertices are 0..n-1 in the C++ API and 1..n in files and on the command
/// line. Arrow order is the declaration order and is significant: it fixes
/// the basis ordering of every matrix built from the quiver. Parallel arrows
/// are kept as distinct arrows.
class Quiver {
public:
    /// Checks loops, duplicate names, endpoint range, oriented cycles and
    /// connectivity, in that order, and throws `Error` on the first failure.
    static Quiver validate(Index vertex_count, std::vector<Arrow> arrows);

    Index vertex_count() const { return n_; }
    Index arrow_count() const { return static_cast<Index>(arrows_.size()); }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(Index a) const { return arrows_[static_cast<std::size_t>(a)]; }

    /// Canonical admissible numbering: position k holds a vertex, and no arrow
    /// runs from an earlier position to a later one. Among the vertices that
    /// may come next, the smallest index is taken.
    const std::vector<Index>& canonical_order() const { return order_; }

    bool is_sink(Index i) const;
    bool is_source(Index i) const;

    /// Arrow indices ending (resp. starting) at `i`, in declaration order.
    std::vector<Index> incoming(Index i) const;
    std::vector<Index> outgoing(Index i) const;

    /// Number of arrows i -> j.
    Index multiplicity(Index i, Index j) const;

    /// Reverses every arrow incident to `i`; names and arrow order are kept.
    Quiver reflected_at(Index i) const;

    // Equality ignores the cached order, which is a function of the arrows.
    bool operator==(const Quiver& other) const {
        return n_ == other.n_ && arrows_ == other.arrows_;
    }

private:
    Quiver() = default;

    Index n_ = 0;
    std::vector<Arrow> arrows_;
    std::vector<Index> order_;
};

/// Parses the line-oriented quiver format:
///
///     # comment
///     vertices <n>
///     arrow <name> <source> <target>
///
/// with 1-based vertices. Any deviation throws `Error(ParseError)` naming the
/// line.
Quiver parse_quiver(std::string_view text);
Quiver load_quiver(const std::filesystem::path& path);
std::string format_quiver(const Quiver& q);

} // namespace quiver
