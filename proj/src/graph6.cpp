#include "ikg/graph6.hpp"

#include <istream>
#include <ostream>

namespace ikg {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void put_size(std::string& out, long n)
{
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
}

int sextet(std::string_view s, std::size_t pos)
{
    const auto c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126)
        throw Graph6Error("byte value " + std::to_string(c) + " outside graph6 range 63..126", pos);
    return c - 63;
}

}  // namespace

std::string graph6_encode(const SimpleGraph& g)
{
    const int n = g.order();
    std::string out;
    put_size(out, n);
    int acc = 0, used = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = used = 0;
            }
        }
    if (used)
        out.push_back(static_cast<char>((acc << (6 - used)) + 63));
    return out;
}

SimpleGraph graph6_decode(std::string_view line)
{
    std::size_t base = 0;
    if (line.substr(0, kHeader.size()) == kHeader)
        base = kHeader.size();
    if (!line.empty() && line.back() == '\n')
        line.remove_suffix(1);
    if (!line.empty() && line.back() == '\r')
        line.remove_suffix(1);
    if (line.size() <= base)
        throw Graph6Error("empty graph6 line", base);

    std::size_t pos = base;
    long n = 0;
    if (line[pos] != 126) {
        n = sextet(line, pos++);
    } else {
        ++pos;
        int width = 3;
        if (pos < line.size() && line[pos] == 126) {
            ++pos;
            width = 6;
        }
        if (pos + width > line.size())
            throw Graph6Error("truncated order field", line.size());
        for (int k = 0; k < width; ++k)
            n = (n << 6) | sextet(line, pos++);
    }
    if (n > kMaxOrder)
        throw Graph6Error("order " + std::to_string(n) + " exceeds supported maximum " +
                              std::to_string(kMaxOrder),
                          base);

    const long bits = n * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    if (line.size() - pos != body)
        throw Graph6Error("expected " + std::to_string(body) + " adjacency bytes, found " +
                              std::to_string(line.size() - pos),
                          line.size() < pos + body ? line.size() : pos + body);

    SimpleGraph g(static_cast<int>(n));
    long k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            const std::size_t at = pos + static_cast<std::size_t>(k / 6);
            if ((sextet(line, at) >> (5 - k % 6)) & 1)
                g.add_edge(i, j);
        }
    // Padding bits must be zero.
    if (bits % 6 != 0) {
        const std::size_t last = pos + body - 1;
        const int pad = static_cast<int>(6 - bits % 6);
        if (sextet(line, last) & ((1 << pad) - 1))
            throw Graph6Error("nonzero padding bits", last);
    }
    return g;
}

std::vector<SimpleGraph> read_graph6(std::istream& in)
{
    std::vector<SimpleGraph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        out.push_back(graph6_decode(line));
    }
    return out;
}

void write_graph6(std::ostream& out, const std::vector<SimpleGraph>& graphs)
{
    for (const auto& g : graphs)
        out << graph6_encode(g) << '\n';
}

}  // namespace ikg
