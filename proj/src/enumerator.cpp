#include "ikg/enumerator.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace ikg {

int DegreeSpec::degree_sum() const
{
    return std::accumulate(degrees.begin(), degrees.end(), 0);
}

bool DegreeSpec::satisfiable_shape() const
{
    if (degree_sum() % 2 != 0 || order() > kMaxOrder)
        return false;
    return std::all_of(degrees.begin(), degrees.end(),
                       [this](int d) { return d >= 0 && d < std::max(order(), 1); });
}

DegreeSpec classification_type(int fours, int threes)
{
    DegreeSpec spec;
    spec.degrees.push_back(5);
    spec.degrees.insert(spec.degrees.end(), fours, 4);
    spec.degrees.insert(spec.degrees.end(), threes, 3);
    return spec;
}

namespace {

SimpleGraph with_new_vertex(const SimpleGraph& g, VertexSet nbrs)
{
    const Vertex w = g.order();
    SimpleGraph out(w + 1);
    for (const Edge& e : g.edges())
        out.add_edge(e.u, e.v);
    for (Vertex u : members(nbrs))
        out.add_edge(u, w);
    return out;
}

class Search {
public:
    explicit Search(const DegreeSpec& spec)
        : targets_(spec.degrees),
          n_(spec.order()),
          triangle_free_(spec.triangle_free),
          connected_(spec.connected)
    {
        std::sort(targets_.begin(), targets_.end(), std::greater<>());
        max_target_ = targets_.empty() ? 0 : targets_.front();
        remaining_sum_.assign(n_ + 1, 0);
        for (int k = n_ - 1; k >= 0; --k)
            remaining_sum_[k] = remaining_sum_[k + 1] + targets_[k];
    }

    SimpleGraph root() const { return SimpleGraph(1); }

    /// Accepted children of g, one per isomorphism class.
    std::vector<SimpleGraph> children(const SimpleGraph& g, EnumerationStats& stats) const
    {
        const int k = g.order();
        const int t = targets_[k];
        const int left_after = n_ - k - 1;
        VertexSet open = 0;
        for (Vertex u = 0; u < k; ++u)
            if (g.degree(u) < targets_[u])
                open |= bit(u);
        const int lo = std::max(0, t - left_after);
        const int hi = std::min(t, popcount(open));

        std::vector<SimpleGraph> out;
        std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
        auto consider = [&](VertexSet nbrs) {
            ++stats.candidates;
            SimpleGraph child = with_new_vertex(g, nbrs);
            if (!feasible(child))
                return;
            if (is_canonical_augmentation(child) &&
                seen.insert(canonical_form(child, colors(child))).second)
                out.push_back(std::move(child));
        };

        // Subsets of open vertices of size lo..hi, independent when required.
        auto pick = [&](auto&& self, VertexSet chosen, VertexSet pool, int size) -> void {
            if (size >= lo)
                consider(chosen);
            if (size == hi)
                return;
            while (pool) {
                const Vertex u = std::countr_zero(pool);
                pool &= pool - 1;
                if (size + 1 + popcount(pool) < lo)
                    return;
                const VertexSet next = triangle_free_ ? pool & ~g.neighbors(u) : pool;
                self(self, chosen | bit(u), next, size + 1);
            }
        };
        pick(pick, 0, open, 0);
        return out;
    }

    void explore(const SimpleGraph& g, std::vector<EnumeratedGraph>& out,
                 EnumerationStats& stats) const
    {
        ++stats.nodes;
        if (g.order() == n_) {
            if (complete(g))
                out.push_back({canonical_form(g), canonical_representative(g)});
            return;
        }
        for (const SimpleGraph& c : children(g, stats))
            explore(c, out, stats);
    }

    int order() const { return n_; }

private:
    // Necessary conditions for extending g to a graph meeting the degree spec.
    bool feasible(const SimpleGraph& g) const
    {
        const int k = g.order();
        const int left = n_ - k;
        int deficit_sum = 0, open_count = 0;
        VertexSet open = 0;
        for (Vertex u = 0; u < k; ++u) {
            const int def = targets_[u] - g.degree(u);
            if (def < 0 || def > left)
                return false;
            deficit_sum += def;
            if (def > 0) {
                ++open_count;
                open |= bit(u);
            }
        }
        const int rest = remaining_sum_[k];
        if (deficit_sum > rest || (rest - deficit_sum) % 2 != 0)
            return false;
        const int inner_edges = (rest - deficit_sum) / 2;
        const int inner_cap = triangle_free_ ? left * left / 4 : left * (left - 1) / 2;
        if (inner_edges > inner_cap)
            return false;
        int reach = 0;
        for (int i = k; i < n_; ++i)
            reach += std::min(targets_[i], open_count);
        if (deficit_sum > reach)
            return false;
        if (triangle_free_) {
            // Adjacent vertices cannot share a later neighbor.
            for (Vertex u : members(open))
                for (Vertex v : members(g.neighbors(u) & open & ~(bit(u + 1) - 1)))
                    if (targets_[u] - g.degree(u) + targets_[v] - g.degree(v) > left)
                        return false;
        }
        if (connected_) {
            // A saturated component can never be joined to anything else.
            VertexSet unseen = g.all_vertices();
            while (unseen) {
                VertexSet comp = unseen & (~unseen + 1), frontier = comp;
                while (frontier) {
                    VertexSet next = 0;
                    for (Vertex v : members(frontier))
                        next |= g.neighbors(v);
                    frontier = next & ~comp;
                    comp |= next;
                }
                if (!(comp & open) && (left > 0 || comp != g.all_vertices()))
                    return false;
                unseen &= ~comp;
            }
        }
        return true;
    }

    bool complete(const SimpleGraph& g) const
    {
        for (Vertex u = 0; u < n_; ++u)
            if (g.degree(u) != targets_[u])
                return false;
        if (triangle_free_ && !is_triangle_free(g))
            return false;
        return !connected_ || is_connected(g);
    }

    // Higher targets sort first; within the lowest class, vertices with a larger
    // local invariant sort last, so the canonical deletion vertex is the last
    // canonical position.
    std::vector<int> colors(const SimpleGraph& g) const
    {
        std::vector<int> c(g.order());
        for (Vertex v = 0; v < g.order(); ++v)
            c[v] = (max_target_ - targets_[v]) * (64 * 4096) + invariant(g, v);
        return c;
    }

    static int invariant(const SimpleGraph& g, Vertex v)
    {
        int s = 0;
        for (Vertex u : members(g.neighbors(v)))
            s += g.degree(u);
        return g.degree(v) * 4096 + s;
    }

    bool is_canonical_augmentation(const SimpleGraph& child) const
    {
        const Vertex w = child.order() - 1;
        const std::vector<int> c = colors(child);
        for (Vertex v = 0; v < w; ++v)
            if (targets_[v] == targets_[w] && c[v] > c[w])
                return false;
        const CanonicalLabeling lab = canonical_labeling(child, c);
        Vertex last = 0;
        for (Vertex v = 0; v <= w; ++v)
            if (lab.position[v] == w)
                last = v;
        if (last == w)
            return true;
        // Orbits of the automorphisms found; fall back to an exact test.
        std::vector<int> parent(child.order());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
        for (const auto& a : lab.automorphisms)
            for (Vertex v = 0; v <= w; ++v)
                parent[root(v)] = root(a[v]);
        if (root(last) == root(w))
            return true;
        return same_orbit(child, c, last, w);
    }

    std::vector<int> targets_;
    int n_;
    bool triangle_free_;
    bool connected_;
    int max_target_ = 0;
    std::vector<int> remaining_sum_;
};

void sort_unique(std::vector<EnumeratedGraph>& out)
{
    std::sort(out.begin(), out.end(),
              [](const EnumeratedGraph& x, const EnumeratedGraph& y) { return x.form < y.form; });
    auto dup = std::adjacent_find(out.begin(), out.end(),
                                  [](const EnumeratedGraph& x, const EnumeratedGraph& y) {
                                      return x.form == y.form;
                                  });
    if (dup != out.end())
        throw std::logic_error("enumerate: isomorphism class produced twice");
}

}  // namespace

std::vector<EnumeratedGraph> enumerate(const DegreeSpec& spec, int jobs, EnumerationStats* stats)
{
    if (jobs < 1)
        throw std::invalid_argument("enumerate: jobs must be at least 1");
    EnumerationStats total;
    std::vector<EnumeratedGraph> out;
    if (spec.order() == 0 || !spec.satisfiable_shape()) {
        if (stats)
            *stats = total;
        return out;
    }
    const Search search(spec);

    // Split the tree at the first level wide enough to keep every worker busy.
    std::vector<SimpleGraph> frontier{search.root()};
    if (jobs > 1) {
        while (frontier.size() < 16 * static_cast<std::size_t>(jobs) &&
               frontier.front().order() < search.order()) {
            std::vector<SimpleGraph> next;
            for (const SimpleGraph& g : frontier) {
                ++total.nodes;
                for (SimpleGraph& c : search.children(g, total))
                    next.push_back(std::move(c));
            }
            frontier = std::move(next);
            if (frontier.empty())
                break;
        }
    }

    std::vector<std::vector<EnumeratedGraph>> parts(jobs);
    std::vector<EnumerationStats> part_stats(jobs);
    auto work = [&](int id) {
        for (std::size_t i = id; i < frontier.size(); i += jobs)
            search.explore(frontier[i], parts[id], part_stats[id]);
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (int id = 0; id < jobs; ++id)
            pool.emplace_back(work, id);
    }
    for (int id = 0; id < jobs; ++id) {
        total.nodes += part_stats[id].nodes;
        total.candidates += part_stats[id].candidates;
        for (auto& g : parts[id])
            out.push_back(std::move(g));
    }
    sort_unique(out);
    if (stats)
        *stats = total;
    return out;
}

std::vector<EnumeratedGraph> naive_enumerate(const DegreeSpec& spec)
{
    if (spec.order() > 8)
        throw std::invalid_argument("naive_enumerate: order " + std::to_string(spec.order()) +
                                    " exceeds the limit of 8");
    std::vector<EnumeratedGraph> out;
    if (spec.order() == 0 || !spec.satisfiable_shape())
        return out;
    std::vector<int> targets = spec.degrees;
    std::sort(targets.begin(), targets.end(), std::greater<>());
    const int n = spec.order();
    std::set<CanonicalForm> seen;

    SimpleGraph g(n);
    // Vertex i picks its neighbors among higher labels to reach its target.
    auto place = [&](auto&& self, Vertex i) -> void {
        if (i == n) {
            if (spec.triangle_free && !is_triangle_free(g))
                return;
            if (spec.connected && !is_connected(g))
                return;
            CanonicalForm f = canonical_form(g);
            if (seen.insert(f).second)
                out.push_back({std::move(f), canonical_representative(g)});
            return;
        }
        const int need = targets[i] - g.degree(i);
        if (need < 0)
            return;
        std::vector<Vertex> pool;
        for (Vertex j = i + 1; j < n; ++j)
            if (g.degree(j) < targets[j])
                pool.push_back(j);
        auto choose = [&](auto&& again, std::size_t from, int left) -> void {
            if (left == 0) {
                self(self, i + 1);
                return;
            }
            for (std::size_t x = from; x + left <= pool.size(); ++x) {
                g.add_edge(i, pool[x]);
                again(again, x + 1, left - 1);
                g.remove_edge(i, pool[x]);
            }
        };
        choose(choose, 0, need);
    };
    place(place, 0);
    sort_unique(out);
    return out;
}

}  // namespace ikg
