#include "wig/document.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

namespace wig {
namespace {

struct Lines {
    std::string_view text;
    std::size_t pos = 0;
    int no = 0; // number of the line most recently returned

    bool eof() const { return pos >= text.size(); }

    std::string_view next() {
        if (eof()) throw ParseError(no + 1, "unexpected end of input");
        const auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) throw ParseError(no + 1, "missing final newline");
        const std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++no;
        if (line.find('\r') != std::string_view::npos)
            throw ParseError(no, "carriage return not allowed");
        return line;
    }
};

std::vector<std::string_view> fields(std::string_view line, int no) {
    if (line.empty()) throw ParseError(no, "empty line");
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto sp = line.find(' ', start);
        const auto piece =
            sp == std::string_view::npos ? line.substr(start) : line.substr(start, sp - start);
        if (piece.empty()) throw ParseError(no, "malformed spacing");
        out.push_back(piece);
        if (sp == std::string_view::npos) break;
        start = sp + 1;
    }
    return out;
}

std::int64_t parse_int(std::string_view tok, int no) {
    std::int64_t v{};
    const auto* end = tok.data() + tok.size();
    const auto [p, ec] = std::from_chars(tok.data(), end, v);
    if (ec != std::errc{} || p != end)
        throw ParseError(no, "malformed integer '" + std::string(tok) + "'");
    // the format is canonical, so the token must round-trip exactly
    if (std::to_string(v) != tok)
        throw ParseError(no, "non-canonical integer '" + std::string(tok) + "'");
    return v;
}

int parse_count(std::string_view tok, int no, const char* what) {
    const std::int64_t v = parse_int(tok, no);
    if (v < 0 || v > 100'000'000)
        throw ParseError(no, std::string(what) + " out of range: " + std::string(tok));
    return static_cast<int>(v);
}

// Sequences the read before taking the line number; passing `in.next()` and
// `in.no` as sibling arguments would leave their order unspecified.
std::vector<std::string_view> next_fields(Lines& in) {
    const std::string_view line = in.next();
    return fields(line, in.no);
}

std::vector<std::string_view> header_fields(Lines& in, std::size_t want, const char* shape) {
    const auto f = next_fields(in);
    if (f.size() != want)
        throw ParseError(in.no, std::string("header must be '") + shape + "'");
    return f;
}

// Local structure is checked line by line above; this net catches anything
// the per-line checks missed, keeping parse and validate in lockstep.
template <typename Rep>
void revalidate(const Rep& rep, int no) {
    try {
        validate(rep);
    } catch (const std::invalid_argument& e) {
        throw ParseError(no, e.what());
    }
}

} // namespace

const char* class_name(GraphClass cls) {
    switch (cls) {
    case GraphClass::Cactus: return "cactus";
    case GraphClass::Interval: return "interval";
    case GraphClass::CircularArc: return "circular-arc";
    case GraphClass::Permutation: return "permutation";
    case GraphClass::Trapezoid: return "trapezoid";
    }
    throw std::logic_error("unhandled graph class");
}

GraphClass class_from_name(std::string_view name) {
    for (GraphClass cls : {GraphClass::Cactus, GraphClass::Interval, GraphClass::CircularArc,
                           GraphClass::Permutation, GraphClass::Trapezoid})
        if (name == class_name(cls)) return cls;
    throw std::invalid_argument("unknown graph class '" + std::string(name) + "'");
}

int InputDocument::n() const {
    return std::visit([](const auto& r) { return r.n; }, rep);
}

InputDocument parse_document(std::string_view text) {
    Lines in{text};
    const auto magic = next_fields(in);
    if (magic.size() != 3 || magic[0] != "wig" || magic[1] != "1")
        throw ParseError(1, "expected 'wig 1 <class>'");
    InputDocument doc;
    try {
        doc.cls = class_from_name(magic[2]);
    } catch (const std::invalid_argument& e) {
        throw ParseError(1, e.what());
    }

    switch (doc.cls) {
    case GraphClass::Interval: {
        const auto hdr = header_fields(in, 1, "n");
        const int n = parse_count(hdr[0], in.no, "vertex count");
        IntervalRep rep;
        rep.n = n;
        rep.intervals.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const auto f = next_fields(in);
            if (f.size() != 2) throw ParseError(in.no, "expected 'l r'");
            const auto l = parse_int(f[0], in.no);
            const auto r = parse_int(f[1], in.no);
            if (l > r) throw ParseError(in.no, "interval has l > r");
            rep.intervals.push_back({l, r});
        }
        revalidate(rep, in.no);
        doc.rep = std::move(rep);
        break;
    }
    case GraphClass::CircularArc: {
        const auto hdr = header_fields(in, 2, "n C");
        const int n = parse_count(hdr[0], in.no, "vertex count");
        ArcRep rep;
        rep.n = n;
        rep.circumference = parse_int(hdr[1], in.no);
        if (rep.circumference < 1)
            throw ParseError(in.no, "circumference must be positive");
        rep.arcs.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const auto f = next_fields(in);
            if (f.size() != 2) throw ParseError(in.no, "expected 's e'");
            const auto s = parse_int(f[0], in.no);
            const auto e = parse_int(f[1], in.no);
            if (s < 0 || s >= rep.circumference || e < 0 || e >= rep.circumference)
                throw ParseError(in.no, "arc endpoint outside the circle");
            if (s == e) throw ParseError(in.no, "arc has s == e");
            rep.arcs.push_back({s, e});
        }
        revalidate(rep, in.no);
        doc.rep = std::move(rep);
        break;
    }
    case GraphClass::Permutation: {
        const auto hdr = header_fields(in, 1, "n");
        const int n = parse_count(hdr[0], in.no, "vertex count");
        PermutationRep rep;
        rep.n = n;
        if (n > 0) {
            const auto f = next_fields(in);
            if (f.size() != static_cast<std::size_t>(n))
                throw ParseError(in.no, "expected " + std::to_string(n) + " values");
            rep.pi.reserve(static_cast<std::size_t>(n));
            for (const auto tok : f) {
                const auto v = parse_int(tok, in.no);
                if (v < 1 || v > n)
                    throw ParseError(in.no, "value " + std::string(tok) + " outside 1.." +
                                                std::to_string(n));
                rep.pi.push_back(static_cast<int>(v));
            }
        }
        revalidate(rep, in.no);
        doc.rep = std::move(rep);
        break;
    }
    case GraphClass::Trapezoid: {
        const auto hdr = header_fields(in, 1, "n");
        const int n = parse_count(hdr[0], in.no, "vertex count");
        TrapezoidRep rep;
        rep.n = n;
        rep.traps.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const auto f = next_fields(in);
            if (f.size() != 4) throw ParseError(in.no, "expected 'a b c d'");
            const auto a = parse_int(f[0], in.no);
            const auto b = parse_int(f[1], in.no);
            const auto c = parse_int(f[2], in.no);
            const auto d = parse_int(f[3], in.no);
            if (a > b || c > d) throw ParseError(in.no, "trapezoid has inverted sides");
            rep.traps.push_back({a, b, c, d});
        }
        revalidate(rep, in.no);
        doc.rep = std::move(rep);
        break;
    }
    case GraphClass::Cactus: {
        const auto hdr = header_fields(in, 2, "n m");
        const int n = parse_count(hdr[0], in.no, "vertex count");
        const int m = parse_count(hdr[1], in.no, "edge count");
        CactusRep rep;
        rep.n = n;
        rep.edges.reserve(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            const auto f = next_fields(in);
            if (f.size() != 3) throw ParseError(in.no, "expected 'u v w'");
            const auto u = parse_int(f[0], in.no);
            const auto v = parse_int(f[1], in.no);
            const auto w = parse_int(f[2], in.no);
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(in.no, "edge endpoint outside 1.." + std::to_string(n));
            if (u == v) throw ParseError(in.no, "self-loop");
            if (w < 1) throw ParseError(in.no, "edge weight must be positive");
            rep.edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), w});
        }
        doc.rep = std::move(rep);
        break;
    }
    }
    if (!in.eof()) throw ParseError(in.no + 1, "trailing data after payload");
    return doc;
}

std::string serialize_document(const InputDocument& doc) {
    std::string out = "wig 1 ";
    out += class_name(doc.cls);
    out += '\n';
    auto put = [&out](std::int64_t v, char sep) {
        out += std::to_string(v);
        out += sep;
    };
    switch (doc.cls) {
    case GraphClass::Interval: {
        const auto& rep = std::get<IntervalRep>(doc.rep);
        put(rep.n, '\n');
        for (const auto& iv : rep.intervals) {
            put(iv.l, ' ');
            put(iv.r, '\n');
        }
        break;
    }
    case GraphClass::CircularArc: {
        const auto& rep = std::get<ArcRep>(doc.rep);
        put(rep.n, ' ');
        put(rep.circumference, '\n');
        for (const auto& a : rep.arcs) {
            put(a.s, ' ');
            put(a.e, '\n');
        }
        break;
    }
    case GraphClass::Permutation: {
        const auto& rep = std::get<PermutationRep>(doc.rep);
        put(rep.n, '\n');
        for (int p = 0; p < rep.n; ++p)
            put(rep.pi[static_cast<std::size_t>(p)], p + 1 == rep.n ? '\n' : ' ');
        break;
    }
    case GraphClass::Trapezoid: {
        const auto& rep = std::get<TrapezoidRep>(doc.rep);
        put(rep.n, '\n');
        for (const auto& t : rep.traps) {
            put(t.a, ' ');
            put(t.b, ' ');
            put(t.c, ' ');
            put(t.d, '\n');
        }
        break;
    }
    case GraphClass::Cactus: {
        const auto& rep = std::get<CactusRep>(doc.rep);
        put(rep.n, ' ');
        put(static_cast<std::int64_t>(rep.edges.size()), '\n');
        for (const auto& e : rep.edges) {
            put(e.u, ' ');
            put(e.v, ' ');
            put(e.w, '\n');
        }
        break;
    }
    }
    return out;
}

InputDocument load_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open input file '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_document(text);
}

void save_document(const InputDocument& doc, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file '" + path + "'");
    out << serialize_document(doc);
    if (!out) throw Error("failed writing '" + path + "'");
}

} // namespace wig
