#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ikg/graph.hpp"

namespace ikg {

/// Totally ordered encoding of an isomorphism class. Equal iff isomorphic.
class CanonicalForm {
public:
    CanonicalForm() = default;
    explicit CanonicalForm(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {}

    const std::vector<std::uint8_t>& bytes() const { return bytes_; }

    /// 64-bit FNV-1a of the bytes; stable across runs and platforms.
    std::uint64_t hash() const;
    std::string hex_hash() const;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b)
    {
        return a.bytes_ <=> b.bytes_;
    }

private:
    std::vector<std::uint8_t> bytes_;
};

struct CanonicalFormHash {
    std::size_t operator()(const CanonicalForm& f) const { return f.hash(); }
};

struct CanonicalLabeling {
    /// position[v] is the canonical label of vertex v.
    std::vector<int> position;
    CanonicalForm form;
    /// Automorphisms met during the search, as maps v -> image(v). They
    /// generate a subgroup of Aut(g); orbit tests that need the full group
    /// go through same_orbit().
    std::vector<std::vector<int>> automorphisms;
};

/// Canonical labeling of a vertex-colored simple graph. Vertices of different
/// color are never mapped to each other; canonical positions are grouped by
/// ascending color value. `colors` may be empty (all vertices alike).
CanonicalLabeling canonical_labeling(const SimpleGraph& g, std::span<const int> colors = {});

CanonicalForm canonical_form(const SimpleGraph& g);
CanonicalForm canonical_form(const SimpleGraph& g, std::span<const int> colors);

/// Loops and edge multiplicities are part of the isomorphism class.
CanonicalForm canonical_form(const Multigraph& g);

/// g relabeled by its canonical labeling.
SimpleGraph canonical_representative(const SimpleGraph& g);

bool are_isomorphic(const SimpleGraph& g, const SimpleGraph& h);
bool are_isomorphic(const Multigraph& g, const Multigraph& h);

/// An isomorphism g -> h as map[v_g] = v_h, if one exists.
std::optional<std::vector<Vertex>> find_isomorphism(const SimpleGraph& g, const SimpleGraph& h);

/// True iff some color-preserving automorphism of g maps x to y.
bool same_orbit(const SimpleGraph& g, std::span<const int> colors, Vertex x, Vertex y);

}  // namespace ikg
