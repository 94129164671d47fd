#include "quiver/quiver.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "quiver/error.hpp"

namespace quiver {

namespace {

std::string vertex_label(Index v) { return std::to_string(v + 1); }

Index find_root(std::vector<Index>& parent, Index v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
        auto& p = parent[static_cast<std::size_t>(v)];
        p = parent[static_cast<std::size_t>(p)];
        v = p;
    }
    return v;
}

} // namespace

Quiver Quiver::validate(Index vertex_count, std::vector<Arrow> arrows) {
    if (vertex_count < 1) throw Error(Errc::InvalidVertex, "a quiver needs at least one vertex");

    std::set<std::string> names;
    for (const auto& a : arrows) {
        if (a.source < 0 || a.source >= vertex_count || a.target < 0 || a.target >= vertex_count)
            throw Error(Errc::InvalidVertex, "arrow " + a.name + " has an endpoint outside 1.." +
                                                 std::to_string(vertex_count));
        if (a.source == a.target)
            throw Error(Errc::LoopArrow, "arrow " + a.name + " is a loop at vertex " +
                                             vertex_label(a.source));
        if (!names.insert(a.name).second)
            throw Error(Errc::DuplicateArrowName, "arrow name " + a.name + " is used twice");
    }

    Quiver q;
    q.n_ = vertex_count;
    q.arrows_ = std::move(arrows);

    // Sinks first: a vertex may be placed once all its successors are placed.
    const auto n = static_cast<std::size_t>(vertex_count);
    std::vector<Index> pending_out(n, 0);
    for (const auto& a : q.arrows_) ++pending_out[static_cast<std::size_t>(a.source)];
    std::vector<bool> placed(n, false);
    while (q.order_.size() < n) {
        Index next = -1;
        for (std::size_t v = 0; v < n; ++v) {
            if (!placed[v] && pending_out[v] == 0) {
                next = static_cast<Index>(v);
                break;
            }
        }
        if (next < 0) throw Error(Errc::CycleDetected, "the quiver contains an oriented cycle");
        placed[static_cast<std::size_t>(next)] = true;
        q.order_.push_back(next);
        for (const auto& a : q.arrows_)
            if (a.target == next) --pending_out[static_cast<std::size_t>(a.source)];
    }

    std::vector<Index> parent(n);
    std::iota(parent.begin(), parent.end(), Index{0});
    for (const auto& a : q.arrows_)
        parent[static_cast<std::size_t>(find_root(parent, a.source))] = find_root(parent, a.target);
    const Index root = find_root(parent, 0);
    for (Index v = 1; v < vertex_count; ++v)
        if (find_root(parent, v) != root)
            throw Error(Errc::Disconnected, "vertex " + vertex_label(v) + " is not connected to vertex 1");
    return q;
}

bool Quiver::is_sink(Index i) const {
    return std::none_of(arrows_.begin(), arrows_.end(), [i](const Arrow& a) { return a.source == i; });
}

bool Quiver::is_source(Index i) const {
    return std::none_of(arrows_.begin(), arrows_.end(), [i](const Arrow& a) { return a.target == i; });
}

std::vector<Index> Quiver::incoming(Index i) const {
    std::vector<Index> out;
    for (Index a = 0; a < arrow_count(); ++a)
        if (arrow(a).target == i) out.push_back(a);
    return out;
}

std::vector<Index> Quiver::outgoing(Index i) const {
    std::vector<Index> out;
    for (Index a = 0; a < arrow_count(); ++a)
        if (arrow(a).source == i) out.push_back(a);
    return out;
}

Index Quiver::multiplicity(Index i, Index j) const {
    return std::count_if(arrows_.begin(), arrows_.end(),
                         [&](const Arrow& a) { return a.source == i && a.target == j; });
}

Quiver Quiver::reflected_at(Index i) const {
    std::vector<Arrow> arrows = arrows_;
    for (auto& a : arrows)
        if (a.source == i || a.target == i) std::swap(a.source, a.target);
    return validate(n_, std::move(arrows));
}

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
    throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + msg);
}

Index parse_count(std::string_view token, std::size_t line) {
    Index value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (token.empty() || ec != std::errc{} || ptr != end || token.front() == '-' || token.front() == '+')
        parse_fail(line, "expected a positive integer, got '" + std::string(token) + "'");
    return value;
}

std::vector<std::string_view> split_tokens(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

} // namespace

Quiver parse_quiver(std::string_view text) {
    std::optional<Index> vertices;
    std::vector<Arrow> arrows;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto tokens = split_tokens(line);
        if (tokens.empty()) continue;

        if (!vertices) {
            if (tokens[0] != "vertices" || tokens.size() != 2)
                parse_fail(line_no, "expected 'vertices <n>'");
            vertices = parse_count(tokens[1], line_no);
            if (*vertices < 1) parse_fail(line_no, "vertex count must be at least 1");
            continue;
        }
        if (tokens[0] != "arrow" || tokens.size() != 4)
            parse_fail(line_no, "expected 'arrow <name> <source> <target>'");
        const Index s = parse_count(tokens[2], line_no);
        const Index t = parse_count(tokens[3], line_no);
        if (s < 1 || s > *vertices || t < 1 || t > *vertices)
            parse_fail(line_no, "arrow endpoint outside 1.." + std::to_string(*vertices));
        arrows.push_back(Arrow{std::string(tokens[1]), s - 1, t - 1});
    }
    if (!vertices) parse_fail(line_no, "missing 'vertices <n>' line");
    return Quiver::validate(*vertices, std::move(arrows));
}

Quiver load_quiver(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::InvalidArgument, "cannot open quiver file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_quiver(buf.str());
}

std::string format_quiver(const Quiver& q) {
    std::ostringstream out;
    out << "vertices " << q.vertex_count() << '\n';
    for (const auto& a : q.arrows())
        out << "arrow " << a.name << ' ' << a.source + 1 << ' ' << a.target + 1 << '\n';
    return out.str();
}

} // namespace quiver
