#include "ikg/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <cstdio>

namespace ikg {

std::uint64_t CanonicalForm::hash() const
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::uint8_t byte : bytes_) {
        h ^= byte;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string CanonicalForm::hex_hash() const
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash()));
    return buf;
}

namespace {

// Individualization-refinement search over ordered partitions. A partition is
// stored as cell[v] = index of v's cell; cell indices are ordered and every
// refinement step only splits cells, keeping the order of existing cells.
class Search {
public:
    Search(const SimpleGraph& g, std::span<const int> colors) : n_(g.order()), adj_(n_)
    {
        for (Vertex v = 0; v < n_; ++v)
            adj_[v] = g.neighbors(v);
        root_.assign(n_, 0);
        root_cells_ = n_ ? 1 : 0;
        if (!colors.empty()) {
            if (static_cast<int>(colors.size()) != n_)
                throw GraphError("color vector size does not match graph order");
            std::vector<int> distinct(colors.begin(), colors.end());
            std::sort(distinct.begin(), distinct.end());
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            for (Vertex v = 0; v < n_; ++v)
                root_[v] = static_cast<int>(
                    std::lower_bound(distinct.begin(), distinct.end(), colors[v]) -
                    distinct.begin());
            root_cells_ = static_cast<int>(distinct.size());
        }
    }

    void run()
    {
        std::vector<int> cell = root_;
        int cells = root_cells_;
        refine(cell, cells);
        std::vector<Vertex> prefix;
        descend(cell, cells, prefix);
    }

    const std::vector<int>& best_position() const { return best_pos_; }
    const std::vector<VertexSet>& best_rows() const { return best_rows_; }
    std::vector<std::vector<int>>& automorphisms() { return gens_; }

private:
    void refine(std::vector<int>& cell, int& cells)
    {
        std::vector<VertexSet> mask;
        std::vector<int> keys;
        std::vector<int> idx(n_);
        while (cells < n_) {
            mask.assign(cells, 0);
            for (Vertex v = 0; v < n_; ++v)
                mask[cell[v]] |= bit(v);
            const int width = cells + 1;
            keys.assign(static_cast<std::size_t>(n_) * width, 0);
            for (Vertex v = 0; v < n_; ++v) {
                int* k = &keys[static_cast<std::size_t>(v) * width];
                k[0] = cell[v];
                for (int c = 0; c < cells; ++c)
                    k[c + 1] = popcount(adj_[v] & mask[c]);
            }
            std::iota(idx.begin(), idx.end(), 0);
            auto less = [&](int x, int y) {
                const int* kx = &keys[static_cast<std::size_t>(x) * width];
                const int* ky = &keys[static_cast<std::size_t>(y) * width];
                return std::lexicographical_compare(kx, kx + width, ky, ky + width);
            };
            std::sort(idx.begin(), idx.end(), less);
            int next = 0;
            std::vector<int> fresh(n_);
            for (int i = 0; i < n_; ++i) {
                if (i > 0 && less(idx[i - 1], idx[i]))
                    ++next;
                fresh[idx[i]] = next;
            }
            if (next + 1 == cells)
                break;
            cell.swap(fresh);
            cells = next + 1;
        }
    }

    static void individualize(std::vector<int>& cell, int& cells, Vertex v)
    {
        const int c = cell[v];
        for (int& x : cell)
            if (x > c)
                ++x;
        for (std::size_t u = 0; u < cell.size(); ++u)
            if (cell[u] == c && static_cast<Vertex>(u) != v)
                cell[u] = c + 1;
        ++cells;
    }

    int find(std::vector<int>& parent, int x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }

    // Orbits of the group generated by the stored automorphisms that fix every
    // vertex of the prefix.
    std::vector<int> prefix_orbits(const std::vector<Vertex>& prefix)
    {
        std::vector<int> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        for (const auto& g : gens_) {
            bool fixes = std::all_of(prefix.begin(), prefix.end(),
                                     [&](Vertex p) { return g[p] == p; });
            if (!fixes)
                continue;
            for (int v = 0; v < n_; ++v) {
                int a = find(parent, v), b = find(parent, g[v]);
                if (a != b)
                    parent[std::max(a, b)] = std::min(a, b);
            }
        }
        for (int v = 0; v < n_; ++v)
            parent[v] = find(parent, v);
        return parent;
    }

    void descend(const std::vector<int>& cell, int cells, std::vector<Vertex>& prefix)
    {
        if (cells == n_) {
            leaf(cell);
            return;
        }
        // Target: first non-singleton cell.
        std::vector<int> size(cells, 0);
        for (int c : cell)
            ++size[c];
        int target = 0;
        while (size[target] == 1)
            ++target;

        std::vector<Vertex> explored;
        std::size_t gens_seen = static_cast<std::size_t>(-1);
        std::vector<int> orbit;
        for (Vertex w = 0; w < n_; ++w) {
            if (cell[w] != target)
                continue;
            if (!explored.empty()) {
                if (gens_seen != gens_.size()) {
                    orbit = prefix_orbits(prefix);
                    gens_seen = gens_.size();
                }
                bool equivalent = std::any_of(explored.begin(), explored.end(),
                                              [&](Vertex x) { return orbit[x] == orbit[w]; });
                if (equivalent)
                    continue;
            }
            explored.push_back(w);
            std::vector<int> child = cell;
            int child_cells = cells;
            individualize(child, child_cells, w);
            refine(child, child_cells);
            prefix.push_back(w);
            descend(child, child_cells, prefix);
            prefix.pop_back();
        }
    }

    void leaf(const std::vector<int>& pos)
    {
        std::vector<VertexSet> rows(n_, 0);
        for (Vertex u = 0; u < n_; ++u) {
            VertexSet r = 0;
            for (VertexSet s = adj_[u]; s; s &= s - 1)
                r |= bit(pos[std::countr_zero(s)]);
            rows[pos[u]] = r;
        }
        if (first_pos_.empty()) {
            first_pos_ = best_pos_ = pos;
            first_rows_ = best_rows_ = rows;
            return;
        }
        if (rows == first_rows_) {
            record_automorphism(pos, first_pos_);
        } else if (rows == best_rows_) {
            record_automorphism(pos, best_pos_);
        } else if (rows < best_rows_) {
            best_rows_ = std::move(rows);
            best_pos_ = pos;
        }
    }

    void record_automorphism(const std::vector<int>& leaf_pos, const std::vector<int>& ref_pos)
    {
        std::vector<int> ref_inv(n_);
        for (int v = 0; v < n_; ++v)
            ref_inv[ref_pos[v]] = v;
        std::vector<int> g(n_);
        for (int v = 0; v < n_; ++v)
            g[v] = ref_inv[leaf_pos[v]];
        gens_.push_back(std::move(g));
    }

    int n_;
    std::vector<VertexSet> adj_;
    std::vector<int> root_;
    int root_cells_ = 0;
    std::vector<int> first_pos_, best_pos_;
    std::vector<VertexSet> first_rows_, best_rows_;
    std::vector<std::vector<int>> gens_;
};

CanonicalForm encode_form(int n, const std::vector<VertexSet>& rows, std::span<const int> colors,
                          const std::vector<int>& position)
{
    std::vector<std::uint8_t> bytes;
    bytes.reserve(2 + (colors.empty() ? 0 : 4 * n) + (n * n) / 16 + 1);
    bytes.push_back(static_cast<std::uint8_t>(n));
    bytes.push_back(colors.empty() ? 0 : 1);
    if (!colors.empty()) {
        std::vector<int> by_pos(n);
        for (int v = 0; v < n; ++v)
            by_pos[position[v]] = colors[v];
        for (int c : by_pos)
            for (int shift = 24; shift >= 0; shift -= 8)
                bytes.push_back(static_cast<std::uint8_t>((static_cast<unsigned>(c) >> shift) & 0xFF));
    }
    std::uint8_t acc = 0;
    int used = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = static_cast<std::uint8_t>((acc << 1) | ((rows[i] >> j) & 1U));
            if (++used == 8) {
                bytes.push_back(acc);
                acc = 0;
                used = 0;
            }
        }
    if (used)
        bytes.push_back(static_cast<std::uint8_t>(acc << (8 - used)));
    return CanonicalForm(std::move(bytes));
}

}  // namespace

CanonicalLabeling canonical_labeling(const SimpleGraph& g, std::span<const int> colors)
{
    CanonicalLabeling out;
    if (g.order() == 0) {
        out.form = encode_form(0, {}, colors, {});
        return out;
    }
    Search search(g, colors);
    search.run();
    out.position = search.best_position();
    out.form = encode_form(g.order(), search.best_rows(), colors, out.position);
    out.automorphisms = std::move(search.automorphisms());
    return out;
}

CanonicalForm canonical_form(const SimpleGraph& g)
{
    return canonical_labeling(g).form;
}

CanonicalForm canonical_form(const SimpleGraph& g, std::span<const int> colors)
{
    return canonical_labeling(g, colors).form;
}

CanonicalForm canonical_form(const Multigraph& g)
{
    // Encode as a colored simple graph: original vertices carry their loop
    // count; each vertex pair with multiplicity k >= 2 becomes a subdivision
    // vertex colored by k.
    constexpr int kEdgeVertex = 1 << 16;
    const auto classes = g.edge_classes();
    int extra = 0;
    for (const auto& c : classes)
        extra += (c.u != c.v && c.count >= 2);
    const int total = g.order() + extra;
    if (total > kMaxOrder)
        throw GraphError("multigraph too large for canonical encoding");
    SimpleGraph h(total);
    std::vector<int> colors(total);
    for (Vertex v = 0; v < g.order(); ++v)
        colors[v] = g.loops(v);
    int next = g.order();
    for (const auto& c : classes) {
        if (c.u == c.v)
            continue;
        if (c.count == 1) {
            h.add_edge(c.u, c.v);
        } else {
            colors[next] = kEdgeVertex + c.count;
            h.add_edge(c.u, next);
            h.add_edge(c.v, next);
            ++next;
        }
    }
    CanonicalForm inner = canonical_labeling(h, colors).form;
    std::vector<std::uint8_t> bytes{'M', static_cast<std::uint8_t>(g.order())};
    bytes.insert(bytes.end(), inner.bytes().begin(), inner.bytes().end());
    return CanonicalForm(std::move(bytes));
}

SimpleGraph canonical_representative(const SimpleGraph& g)
{
    if (g.order() == 0)
        return g;
    return g.relabeled(canonical_labeling(g).position);
}

bool are_isomorphic(const SimpleGraph& g, const SimpleGraph& h)
{
    if (g.order() != h.order() || g.edge_count() != h.edge_count())
        return false;
    if (degree_sequence(g) != degree_sequence(h))
        return false;
    return canonical_form(g) == canonical_form(h);
}

bool are_isomorphic(const Multigraph& g, const Multigraph& h)
{
    if (g.order() != h.order() || g.edge_count() != h.edge_count())
        return false;
    return canonical_form(g) == canonical_form(h);
}

std::optional<std::vector<Vertex>> find_isomorphism(const SimpleGraph& g, const SimpleGraph& h)
{
    if (g.order() != h.order() || g.edge_count() != h.edge_count())
        return std::nullopt;
    auto lg = canonical_labeling(g);
    auto lh = canonical_labeling(h);
    if (lg.form != lh.form)
        return std::nullopt;
    std::vector<Vertex> h_at(h.order());
    for (Vertex v = 0; v < h.order(); ++v)
        h_at[lh.position[v]] = v;
    std::vector<Vertex> map(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        map[v] = h_at[lg.position[v]];
    return map;
}

bool same_orbit(const SimpleGraph& g, std::span<const int> colors, Vertex x, Vertex y)
{
    if (x == y)
        return true;
    std::vector<int> cx(g.order(), 0), cy;
    if (!colors.empty())
        cx.assign(colors.begin(), colors.end());
    if (cx[x] != cx[y])
        return false;
    // Individualize with a color strictly above every existing one.
    const int mark = *std::max_element(cx.begin(), cx.end()) + 1;
    cy = cx;
    cx[x] = mark;
    cy[y] = mark;
    return canonical_form(g, cx) == canonical_form(g, cy);
}

}  // namespace ikg
