#include "rtf/graph6.hpp"

#include <fstream>
#include <sstream>

namespace rtf {

namespace {

constexpr int kBias = 63;

void append_sextets(std::string& out, const std::vector<bool>& bits) {
    int acc = 0, filled = 0;
    for (bool b : bits) {
        acc = (acc << 1) | (b ? 1 : 0);
        if (++filled == 6) {
            out.push_back(char(acc + kBias));
            acc = 0;
            filled = 0;
        }
    }
    if (filled) out.push_back(char((acc << (6 - filled)) + kBias));
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    long long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + kBias));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(char(((n >> 12) & 63) + kBias));
        out.push_back(char(((n >> 6) & 63) + kBias));
        out.push_back(char((n & 63) + kBias));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(char(((n >> shift) & 63) + kBias));
    }
    std::vector<bool> bits;
    bits.reserve(std::size_t(n * (n - 1) / 2));
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j));
    append_sextets(out, bits);
    return out;
}

Graph graph6_decode(std::string_view s) {
    if (s.empty()) throw graph6_error("graph6: empty input");
    std::size_t pos = 0;
    auto take = [&]() -> int {
        if (pos >= s.size()) throw graph6_error("graph6: truncated header");
        int c = static_cast<unsigned char>(s[pos++]);
        if (c < kBias || c > 126) throw graph6_error("graph6: byte out of range");
        return c;
    };
    long long n;
    int c0 = take();
    if (c0 < 126) {
        n = c0 - kBias;
    } else {
        int c1 = take();
        if (c1 < 126) {
            n = c1 - kBias;
            for (int i = 0; i < 2; ++i) n = (n << 6) | (take() - kBias);
        } else {
            n = 0;
            for (int i = 0; i < 6; ++i) n = (n << 6) | (take() - kBias);
        }
    }
    if (n > 1'000'000) throw graph6_error("graph6: implausible vertex count");
    long long nbits = n * (n - 1) / 2;
    long long nbytes = (nbits + 5) / 6;
    if (std::size_t(pos + nbytes) != s.size())
        throw graph6_error("graph6: body length mismatch");
    Graph g{int(n)};
    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = static_cast<unsigned char>(s[pos + bit / 6]);
            if (byte < kBias || byte > 126) throw graph6_error("graph6: byte out of range");
            if ((byte - kBias) >> (5 - bit % 6) & 1) g.add_edge(i, j);
        }
    // padding bits must be zero
    if (nbits % 6) {
        int last = static_cast<unsigned char>(s.back()) - kBias;
        if (last & ((1 << (6 - nbits % 6)) - 1)) throw graph6_error("graph6: nonzero padding");
    }
    return g;
}

std::vector<Graph> graph6_read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw graph6_error("graph6: cannot open " + path);
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
        if (line.empty()) continue;
        out.push_back(graph6_decode(line));
    }
    return out;
}

void graph6_write_file(const std::string& path, const std::vector<Graph>& graphs) {
    std::ofstream out(path);
    if (!out) throw graph6_error("graph6: cannot open " + path);
    for (const auto& g : graphs) out << graph6_encode(g) << '\n';
}

std::string adjacency_dump(const Graph& g) {
    std::ostringstream os;
    for (int v = 0; v < g.order(); ++v) {
        os << v << ':';
        g.neighbors(v).for_each([&](int u) { os << ' ' << u; });
        os << '\n';
    }
    return os.str();
}

}  // namespace rtf
