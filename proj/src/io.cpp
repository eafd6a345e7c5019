#include "sigma_roots/io.hpp"

#include "sigma_roots/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <regex>
#include <sstream>

namespace sigma_roots {

Rational parse_rational(std::string_view text)
{
    static const std::regex pattern(R"(\s*([+-]?[0-9]+)(?:\s*/\s*([0-9]+))?\s*)");
    std::string s(text);
    std::smatch m;
    if (!std::regex_match(s, m, pattern))
        throw ParseError("not a rational number: '" + s + "'");
    using boost::multiprecision::cpp_int;
    cpp_int num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str());
    cpp_int den = m[2].matched ? cpp_int(m[2].str()) : cpp_int(1);
    if (den == 0)
        throw ParseError("zero denominator in '" + s + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& r)
{
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

namespace io {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            return out;
        start = pos + 1;
    }
}

std::int64_t parse_int(std::string_view token, std::string_view what)
{
    token = trim(token);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError("expected an integer for " + std::string(what) + ", got '" + std::string(token) + "'");
    return value;
}

std::size_t parse_vertex(std::int64_t raw, std::size_t k, std::string_view what)
{
    if (raw < 1 || static_cast<std::size_t>(raw) > k)
        throw ParseError(std::string(what) + " " + std::to_string(raw) + " outside 1.." + std::to_string(k));
    return static_cast<std::size_t>(raw - 1);
}

std::string_view strip_parens(std::string_view s)
{
    s = trim(s);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')')
        s = trim(s.substr(1, s.size() - 2));
    return s;
}

std::vector<std::int64_t> parse_int_list(std::string_view text, std::string_view what)
{
    text = strip_parens(text);
    if (text.empty())
        throw ParseError("empty " + std::string(what));
    std::vector<std::int64_t> out;
    for (auto token : split(text, ','))
        out.push_back(parse_int(token, what));
    return out;
}

DimVector checked_dim(std::vector<std::int64_t> entries)
{
    try {
        return DimVector(std::move(entries));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

} // namespace

Quiver parse_quiver_text(std::string_view text)
{
    std::optional<std::size_t> k;
    std::vector<std::int64_t> arrows;
    std::size_t line_no = 0;
    for (auto line : split(text, '\n')) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::istringstream words{std::string(trim(line))};
        std::vector<std::string> tok;
        for (std::string w; words >> w;)
            tok.push_back(w);
        if (tok.empty())
            continue;
        auto where = " (line " + std::to_string(line_no) + ")";
        if (tok[0] == "vertices") {
            if (k)
                throw ParseError("duplicate 'vertices' line" + where);
            if (tok.size() != 2)
                throw ParseError("expected 'vertices K'" + where);
            auto n = parse_int(tok[1], "vertex count");
            if (n < 1)
                throw ParseError("vertex count must be positive" + where);
            k = static_cast<std::size_t>(n);
            arrows.assign(*k * *k, 0);
        } else if (tok[0] == "arrow") {
            if (!k)
                throw ParseError("'arrow' before 'vertices'" + where);
            if (tok.size() != 3 && tok.size() != 4)
                throw ParseError("expected 'arrow I J [M]'" + where);
            auto i = parse_vertex(parse_int(tok[1], "arrow tail"), *k, "arrow tail");
            auto j = parse_vertex(parse_int(tok[2], "arrow head"), *k, "arrow head");
            std::int64_t m = tok.size() == 4 ? parse_int(tok[3], "arrow multiplicity") : 1;
            if (m < 1)
                throw ParseError("arrow multiplicity must be at least 1" + where);
            arrows[i * *k + j] = checked::add(arrows[i * *k + j], m);
        } else {
            throw ParseError("unknown directive '" + tok[0] + "'" + where);
        }
    }
    if (!k)
        throw ParseError("missing 'vertices' line");
    return Quiver(*k, std::move(arrows));
}

Quiver parse_quiver_json(const json& j)
{
    try {
        if (!j.is_object() || !j.contains("vertices"))
            throw ParseError("quiver JSON needs a \"vertices\" field");
        auto n = j.at("vertices").get<std::int64_t>();
        if (n < 1)
            throw ParseError("vertex count must be positive");
        auto k = static_cast<std::size_t>(n);
        std::vector<std::int64_t> arrows(k * k, 0);
        if (j.contains("arrows")) {
            for (const auto& a : j.at("arrows")) {
                if (!a.is_array() || (a.size() != 2 && a.size() != 3))
                    throw ParseError("arrows must be [i, j, m] triples");
                auto from = parse_vertex(a[0].get<std::int64_t>(), k, "arrow tail");
                auto to = parse_vertex(a[1].get<std::int64_t>(), k, "arrow head");
                std::int64_t m = a.size() == 3 ? a[2].get<std::int64_t>() : 1;
                if (m < 1)
                    throw ParseError("arrow multiplicity must be at least 1");
                arrows[from * k + to] = checked::add(arrows[from * k + to], m);
            }
        }
        return Quiver(k, std::move(arrows));
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed quiver JSON: ") + e.what());
    }
}

Quiver parse_quiver(std::string_view text)
{
    auto t = trim(text);
    if (!t.empty() && t.front() == '{') {
        try {
            return parse_quiver_json(json::parse(t));
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("malformed quiver JSON: ") + e.what());
        }
    }
    return parse_quiver_text(text);
}

Quiver parse_quiver_inline(std::string_view text)
{
    std::string s(text);
    if (trim(s).starts_with("{"))
        return parse_quiver(s);
    std::replace(s.begin(), s.end(), ';', '\n');
    return parse_quiver_text(s);
}

std::string quiver_to_text(const Quiver& q)
{
    std::ostringstream os;
    os << "vertices " << q.vertices() << '\n';
    for (std::size_t i = 0; i < q.vertices(); ++i)
        for (std::size_t j = 0; j < q.vertices(); ++j)
            if (q.arrows(i, j) > 0)
                os << "arrow " << i + 1 << ' ' << j + 1 << ' ' << q.arrows(i, j) << '\n';
    return os.str();
}

json to_json(const Quiver& q)
{
    json arrows = json::array();
    for (std::size_t i = 0; i < q.vertices(); ++i)
        for (std::size_t j = 0; j < q.vertices(); ++j)
            if (q.arrows(i, j) > 0)
                arrows.push_back({i + 1, j + 1, q.arrows(i, j)});
    return {{"vertices", q.vertices()}, {"arrows", arrows}};
}

DimVector parse_dim_vector(std::string_view text, std::size_t k)
{
    auto entries = parse_int_list(text, "dimension vector");
    if (entries.size() != k)
        throw ParseError("dimension vector '" + std::string(trim(text)) + "' has " + std::to_string(entries.size()) +
                         " entries, the quiver has " + std::to_string(k) + " vertices");
    return checked_dim(std::move(entries));
}

DimVector parse_bound(std::string_view text, std::size_t k)
{
    auto entries = parse_int_list(text, "bound");
    if (entries.size() == 1 && k != 1)
        entries.assign(k, entries.front());
    if (entries.size() != k)
        throw ParseError("bound has " + std::to_string(entries.size()) + " entries, expected 1 or " +
                         std::to_string(k));
    return checked_dim(std::move(entries));
}

Weight parse_weight(std::string_view text, std::size_t k)
{
    auto body = strip_parens(text);
    if (body.empty())
        throw ParseError("empty weight");
    auto tokens = split(body, ',');
    if (tokens.size() == 1 && k != 1) {
        auto only = parse_rational(tokens.front());
        if (only != 0)
            throw ParseError("a single weight value is only accepted as 0");
        return Weight::zero(k);
    }
    if (tokens.size() != k)
        throw ParseError("weight has " + std::to_string(tokens.size()) + " entries, expected " + std::to_string(k));
    std::vector<Rational> w;
    for (auto t : tokens)
        w.push_back(parse_rational(t));
    return Weight(std::move(w));
}

RepType parse_rep_type(std::string_view text, std::size_t k)
{
    RepType t;
    for (auto piece : split(trim(text), ';')) {
        auto entries = parse_int_list(piece, "representation type part");
        if (entries.size() != k + 1)
            throw ParseError("representation type part '" + std::string(trim(piece)) + "' needs 1 + " +
                             std::to_string(k) + " integers");
        if (entries.front() < 1)
            throw ParseError("multiplicity must be positive");
        auto d = entries.front();
        auto dim = checked_dim(std::vector<std::int64_t>(entries.begin() + 1, entries.end()));
        if (dim.is_zero())
            throw ParseError("representation type part has a zero dimension vector");
        t.parts.push_back({d, std::move(dim)});
    }
    return t;
}

UGraph parse_ugraph_json(const json& j)
{
    try {
        if (!j.is_object() || !j.contains("vertices"))
            throw ParseError("graph JSON needs a \"vertices\" field");
        auto n = j.at("vertices").get<std::int64_t>();
        if (n < 0)
            throw ParseError("vertex count must be nonnegative");
        auto l = static_cast<std::size_t>(n);
        UGraph g(l);
        if (j.contains("edges")) {
            for (const auto& e : j.at("edges")) {
                if (!e.is_array() || (e.size() != 2 && e.size() != 3))
                    throw ParseError("edges must be [i, j, m] triples");
                auto a = parse_vertex(e[0].get<std::int64_t>(), l, "edge end");
                auto b = parse_vertex(e[1].get<std::int64_t>(), l, "edge end");
                if (a == b)
                    throw ParseError("loops go in the \"loops\" array, not in \"edges\"");
                std::int64_t m = e.size() == 3 ? e[2].get<std::int64_t>() : 1;
                if (m < 1)
                    throw ParseError("edge multiplicity must be at least 1");
                g.set_edges(a, b, checked::add(g.edges(a, b), m));
            }
        }
        if (j.contains("loops")) {
            const auto& loops = j.at("loops");
            if (!loops.is_array() || loops.size() != l)
                throw ParseError("\"loops\" must list one count per vertex");
            for (std::size_t v = 0; v < l; ++v) {
                auto m = loops[v].get<std::int64_t>();
                if (m < 0)
                    throw ParseError("loop counts must be nonnegative");
                g.set_loops(v, m);
            }
        }
        return g;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed graph JSON: ") + e.what());
    }
}

UGraph parse_ugraph(std::string_view text)
{
    try {
        return parse_ugraph_json(json::parse(text));
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed graph JSON: ") + e.what());
    }
}

json to_json(const UGraph& g)
{
    json edges = json::array(), loops = json::array();
    for (std::size_t i = 0; i < g.vertices(); ++i) {
        loops.push_back(g.loops(i));
        for (std::size_t j = i + 1; j < g.vertices(); ++j)
            if (g.edges(i, j) > 0)
                edges.push_back({i + 1, j + 1, g.edges(i, j)});
    }
    return {{"vertices", g.vertices()}, {"edges", edges}, {"loops", loops}};
}

json to_json(const DimVector& v) { return json(std::vector<std::int64_t>(v.entries().begin(), v.entries().end())); }

json to_json(const Weight& w)
{
    json r = json::array();
    for (std::size_t i = 0; i < w.size(); ++i)
        r.push_back(to_string(w[i]));
    return r;
}

json to_json(const RepType& t)
{
    json parts = json::array();
    for (const auto& part : t.parts)
        parts.push_back({{"multiplicity", part.multiplicity}, {"dim", to_json(part.dim)}});
    return {{"parts", parts}, {"literal", to_string(t)}};
}

json to_json(const TameSetting& s)
{
    return {{"name", s.name()}, {"graph", to_json(s.graph)}, {"delta", to_json(s.delta)}};
}

json to_json(const Containment& c)
{
    std::vector<std::size_t> map;
    for (auto t : c.embedding.map)
        map.push_back(t + 1);
    return {{"setting", c.setting.name()}, {"delta", to_json(c.setting.delta)}, {"embedding", map}};
}

json to_json(const SigmaVerdict& v)
{
    json witness = json::array();
    for (const auto& b : v.witness)
        witness.push_back(to_json(b));
    return {{"member", v.member}, {"reason", std::string(to_string(v.reason))}, {"witness", witness}};
}

json to_json(const GeneticCert& c)
{
    json parts = json::array();
    for (const auto& part : c.parts)
        parts.push_back({{"coefficient", part.coefficient}, {"dim", to_json(part.dim)}});
    return {{"target", to_json(c.target)}, {"setting", c.setting.name()}, {"parts", parts}, {"depth", c.depth}};
}

json to_json(const ClosureMember& m)
{
    json r = {{"dim", to_json(m.dim)}, {"depth", m.depth}, {"seed", !m.cert.has_value()}};
    r["certificate"] = m.cert ? to_json(*m.cert) : json(nullptr);
    return r;
}

json to_json(const IrreducibleResult& r)
{
    return {{"holds", r.holds},
            {"failing_type", r.failing ? to_json(*r.failing) : json(nullptr)},
            {"types_checked", r.types_checked}};
}

} // namespace io
} // namespace sigma_roots
