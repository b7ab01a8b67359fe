#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sg {

using Vertex = int;

enum class Sign : std::int8_t { Positive = +1, Negative = -1 };

constexpr Sign operator-(Sign s) {
    return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}

constexpr Sign operator*(Sign a, Sign b) {
    return a == b ? Sign::Positive : Sign::Negative;
}

constexpr char to_char(Sign s) { return s == Sign::Positive ? '+' : '-'; }

inline Sign sign_from_char(char c) {
    if (c == '+') return Sign::Positive;
    if (c == '-') return Sign::Negative;
    throw std::invalid_argument(std::string("invalid sign character '") + c + "'");
}

// Subset of the vertices of an associated graph, kept sorted and duplicate-free.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> vs) : members_(vs) { normalize(); }
    explicit VertexSet(std::vector<Vertex> vs) : members_(std::move(vs)) { normalize(); }

    const std::vector<Vertex>& members() const { return members_; }
    bool contains(Vertex v) const;
    bool empty() const { return members_.empty(); }
    std::size_t size() const { return members_.size(); }
    void insert(Vertex v);

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    void normalize();
    std::vector<Vertex> members_;
};

// A walk is a vertex sequence in which vertices and edges may repeat;
// it is closed when it starts and ends at the same vertex.
struct Walk {
    std::vector<Vertex> sequence;

    bool closed() const {
        return sequence.size() >= 2 && sequence.front() == sequence.back();
    }
};

// Vertex map from a source to a target signed graph. When switch_witness is
// present the map is claimed to be sign-preserving after switching that set
// in the source; is_valid_hom_witness() re-checks the claim.
struct Mapping {
    std::vector<Vertex> image;
    std::optional<VertexSet> switch_witness;
};

struct EdgeSpec {
    Vertex u;
    Vertex v;
    Sign sign;
};

} // namespace sg
