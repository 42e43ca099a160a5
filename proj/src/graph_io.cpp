#include "becurv/graph_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace becurv {

std::string format_double(double x) {
    char buf[64];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, x);
        if (std::strtod(buf, nullptr) == x) break;
    }
    return buf;
}

namespace {

double parse_positive(const std::string& tok, std::size_t line_no, const char* what) {
    char* end = nullptr;
    double v = std::strtod(tok.c_str(), &end);
    if (end != tok.c_str() + tok.size() || tok.empty())
        throw ParseError("line " + std::to_string(line_no) + ": bad " + what + " '" + tok + "'");
    if (!(v > 0.0))
        throw ParseError("line " + std::to_string(line_no) + ": " + what + " must be positive");
    return v;
}

}  // namespace

WeightedGraph parse_edge_list(const std::string& text, WeightedGraph::Preset preset) {
    WeightedGraph::Builder b;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    bool saw_measure = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        try {
            if (tag == "e") {
                std::string u, v, w;
                if (!(ls >> u >> v))
                    throw ParseError("line " + std::to_string(line_no) + ": e needs two vertices");
                if (ls >> w)
                    b.add_edge(u, v, parse_positive(w, line_no, "edge weight"));
                else
                    b.add_edge(u, v);
            } else if (tag == "v") {
                std::string u;
                if (!(ls >> u))
                    throw ParseError("line " + std::to_string(line_no) + ": v needs a vertex");
                b.add_vertex(u);
            } else if (tag == "m") {
                if (preset != WeightedGraph::Preset::custom)
                    throw ParseError("line " + std::to_string(line_no) +
                                     ": m lines are only legal with the custom preset");
                std::string u, x;
                if (!(ls >> u >> x))
                    throw ParseError("line " + std::to_string(line_no) + ": m needs vertex and value");
                b.set_measure(u, parse_positive(x, line_no, "vertex measure"));
                saw_measure = true;
            } else {
                throw ParseError("line " + std::to_string(line_no) + ": unknown directive '" + tag + "'");
            }
            std::string extra;
            if (ls >> extra)
                throw ParseError("line " + std::to_string(line_no) + ": trailing token '" + extra + "'");
        } catch (const std::invalid_argument& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (preset == WeightedGraph::Preset::custom && !saw_measure)
        throw ParseError("custom preset requires at least one m line");
    return b.build(preset);
}

std::string serialize_edge_list(const WeightedGraph& g) {
    std::string out;
    for (VertexId v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) out += "v " + g.name_of(v) + "\n";
    for (VertexId u = 0; u < g.order(); ++u)
        for (std::size_t k = 0; k < g.neighbors(u).size(); ++k) {
            VertexId v = g.neighbors(u)[k];
            if (v < u) continue;
            out += "e " + g.name_of(u) + " " + g.name_of(v);
            double w = g.edge_weight(u, v);
            if (w != 1.0) out += " " + format_double(w);
            out += "\n";
        }
    if (g.preset() == WeightedGraph::Preset::custom)
        for (VertexId v = 0; v < g.order(); ++v)
            out += "m " + g.name_of(v) + " " + format_double(g.measure(v)) + "\n";
    return out;
}

namespace {

constexpr std::uint64_t kG6MaxOrder = 68719476735ULL;  // 2^36 - 1

void append_sextets(std::string& s, std::uint64_t value, int count) {
    for (int k = count - 1; k >= 0; --k)
        s.push_back(static_cast<char>(((value >> (6 * k)) & 63) + 63));
}

}  // namespace

std::string encode_graph6(const WeightedGraph& g) {
    if (!g.unweighted())
        throw std::invalid_argument("encode_graph6: weighted graphs are not representable");
    const std::uint64_t n = g.order();
    if (n > kG6MaxOrder) throw std::invalid_argument("encode_graph6: graph too large");

    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        append_sextets(out, n, 3);
    } else {
        out.push_back(126);
        out.push_back(126);
        append_sextets(out, n, 6);
    }

    unsigned bit = 0;
    unsigned cur = 0;
    for (VertexId j = 1; j < n; ++j)
        for (VertexId i = 0; i < j; ++i) {
            cur = (cur << 1) | (g.adjacent(i, j) ? 1u : 0u);
            if (++bit == 6) {
                out.push_back(static_cast<char>(cur + 63));
                bit = 0;
                cur = 0;
            }
        }
    if (bit > 0) out.push_back(static_cast<char>((cur << (6 - bit)) + 63));
    return out;
}

WeightedGraph decode_graph6(const std::string& line, WeightedGraph::Preset preset) {
    for (char c : line)
        if (static_cast<unsigned char>(c) < 63 || static_cast<unsigned char>(c) > 126)
            throw ParseError("graph6: character out of range");

    std::size_t pos = 0;
    std::uint64_t n = 0;
    auto take = [&]() -> std::uint64_t {
        if (pos >= line.size()) throw ParseError("graph6: truncated header");
        return static_cast<std::uint64_t>(line[pos++]) - 63;
    };
    if (line.empty()) throw ParseError("graph6: empty line");
    if (line[0] != 126) {
        n = take();
    } else if (line.size() >= 2 && line[1] != 126) {
        ++pos;
        for (int k = 0; k < 3; ++k) n = (n << 6) | take();
        if (n <= 62) throw ParseError("graph6: non-minimal header");
    } else {
        pos += 2;
        for (int k = 0; k < 6; ++k) n = (n << 6) | take();
        if (n <= 258047) throw ParseError("graph6: non-minimal header");
    }
    if (n > kG6MaxOrder) throw ParseError("graph6: vertex count out of range");
    if (n > 100000) throw ParseError("graph6: graph too large for this tool");

    const std::uint64_t nbits = n * (n - 1) / 2;
    const std::uint64_t nbytes = (nbits + 5) / 6;
    if (line.size() - pos != nbytes) throw ParseError("graph6: body length mismatch");

    WeightedGraph::Builder b;
    for (std::uint64_t v = 0; v < n; ++v) b.add_vertex(std::to_string(v));
    std::uint64_t bit_index = 0;
    for (VertexId j = 1; j < n; ++j)
        for (VertexId i = 0; i < j; ++i, ++bit_index) {
            unsigned byte = static_cast<unsigned>(line[pos + bit_index / 6]) - 63;
            if (byte >> (5 - bit_index % 6) & 1)
                b.add_edge(std::to_string(i), std::to_string(j));
        }
    // Padding bits beyond the triangle must be zero.
    for (std::uint64_t k = nbits; k < nbytes * 6; ++k) {
        unsigned byte = static_cast<unsigned>(line[pos + k / 6]) - 63;
        if (byte >> (5 - k % 6) & 1) throw ParseError("graph6: non-zero padding bits");
    }
    return b.build(preset);
}

}  // namespace becurv
