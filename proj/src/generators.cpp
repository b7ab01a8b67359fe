#include "sg/generators.hpp"

#include <algorithm>
#include <stdexcept>

#include "sg/finite_field.hpp"

namespace sg::gen {

namespace {

SignedGraph complete_with_negatives(int n, const std::vector<std::pair<Vertex, Vertex>>& negatives) {
    std::vector<EdgeSpec> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            bool neg = std::find(negatives.begin(), negatives.end(), std::make_pair(u, v)) != negatives.end();
            edges.push_back({u, v, neg ? Sign::Negative : Sign::Positive});
        }
    return SignedGraph::build(n, edges);
}

SignedGraph path_with_signs(const std::vector<Sign>& signs) {
    const int n = static_cast<int>(signs.size()) + 1;
    std::vector<EdgeSpec> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, signs[i]});
    return SignedGraph::build(n, edges);
}

SignedGraph h_gadget_graph() {
    // Vertices x, y, a1, a, a2, d1, d, d2. Positive edges x-a1, a1-a, x-a2,
    // a2-y, a1-y, x-d1, d1-d, x-d2; negative edges a-a2, d-d2, d2-y, y-d1.
    // x and y agree on a1, a2 and disagree on d1, d2.
    const Vertex x = 0, y = 1, a1 = 2, a = 3, a2 = 4, d1 = 5, d = 6, d2 = 7;
    std::vector<EdgeSpec> edges{
        {x, a1, Sign::Positive}, {a1, a, Sign::Positive}, {x, a2, Sign::Positive},
        {a2, y, Sign::Positive}, {a1, y, Sign::Positive}, {x, d1, Sign::Positive},
        {d1, d, Sign::Positive}, {x, d2, Sign::Positive}, {a, a2, Sign::Negative},
        {d, d2, Sign::Negative}, {d2, y, Sign::Negative}, {y, d1, Sign::Negative},
    };
    auto g = SignedGraph::build(8, edges);
    const char* names[] = {"x", "y", "a1", "a", "a2", "d1", "d", "d2"};
    for (Vertex v = 0; v < 8; ++v) g.set_label(v, names[v]);
    return g;
}

// 3-cycle uvwu plus a pendant x at w; the triangle is positive. The primed
// variant switches w.
SignedGraph x_gadget_graph(bool primed) {
    const Vertex u = 0, v = 1, w = 2, x = 3;
    Sign tri = primed ? Sign::Negative : Sign::Positive;
    std::vector<EdgeSpec> edges{
        {u, v, Sign::Positive}, {u, w, tri}, {v, w, tri}, {w, x, tri}};
    auto g = SignedGraph::build(4, edges);
    const char* names[] = {"u", "v", "w", "x"};
    for (Vertex i = 0; i < 4; ++i) g.set_label(i, names[i]);
    return g;
}

SignedGraph y_gadget_graph(bool primed) {
    auto base = x_gadget_graph(primed);
    std::vector<EdgeSpec> edges = base.edges();
    edges.push_back({3, 4, Sign::Positive});
    auto g = SignedGraph::build(5, edges);
    for (Vertex i = 0; i < 4; ++i) g.set_label(i, base.label(i));
    g.set_label(4, "y");
    return g;
}

std::string bound_suffix(const SignedGraph& g, const GadgetTemplate& tmpl,
                         const std::map<std::string, Vertex>& binding) {
    std::string suffix = "^{";
    bool first = true;
    for (const auto& [port, unused] : tmpl.ports) {
        auto it = binding.find(port);
        if (it == binding.end()) continue;
        if (!first) suffix += ",";
        first = false;
        const auto& label = g.label(it->second);
        suffix += label.empty() ? std::to_string(it->second) : label;
    }
    suffix += "}";
    return suffix;
}

} // namespace

SignedGraph paley(int q) {
    if (q % 4 != 1)
        throw std::invalid_argument("paley requires q = 1 (mod 4)");
    auto field = FiniteField::make(q);
    std::vector<EdgeSpec> edges;
    for (int u = 0; u < q; ++u)
        for (int v = u + 1; v < q; ++v)
            edges.push_back({u, v, field.is_square(field.sub(u, v)) ? Sign::Positive : Sign::Negative});
    auto g = SignedGraph::build(q, edges);
    for (int v = 0; v < q; ++v) g.set_label(v, std::to_string(v));
    return g;
}

SignedGraph paley_plus(int q) {
    auto base = paley(q);
    std::vector<EdgeSpec> edges = base.edges();
    for (int v = 0; v < q; ++v) edges.push_back({v, q, Sign::Positive});
    auto g = SignedGraph::build(q + 1, edges);
    for (int v = 0; v < q; ++v) g.set_label(v, base.label(v));
    g.set_label(q, "inf");
    return g;
}

GadgetTemplate named_graph(const std::string& name) {
    if (name == "K4_bad_positive") return {complete_with_negatives(4, {}), {}};
    if (name == "K4_bad_negative") {
        std::vector<std::pair<Vertex, Vertex>> all;
        for (Vertex u = 0; u < 4; ++u)
            for (Vertex v = u + 1; v < 4; ++v) all.emplace_back(u, v);
        return {complete_with_negatives(4, all), {}};
    }
    if (name == "K4_Mminus") return {complete_with_negatives(4, {{0, 1}, {2, 3}}), {}};
    if (name == "K4_Mplus") return {complete_with_negatives(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}), {}};
    if (name == "K6_M") return {complete_with_negatives(6, {{0, 1}, {2, 3}, {4, 5}}), {}};
    if (name == "K6_Mbar") {
        std::vector<std::pair<Vertex, Vertex>> negs;
        std::vector<std::pair<Vertex, Vertex>> matching{{0, 1}, {2, 3}, {4, 5}};
        for (Vertex u = 0; u < 6; ++u)
            for (Vertex v = u + 1; v < 6; ++v)
                if (std::find(matching.begin(), matching.end(), std::make_pair(u, v)) == matching.end())
                    negs.emplace_back(u, v);
        return {complete_with_negatives(6, negs), {}};
    }
    if (name == "P5_M")
        return {path_with_signs({Sign::Negative, Sign::Positive, Sign::Negative,
                                 Sign::Positive, Sign::Negative}),
                {}};
    if (name == "H_gadget") return {h_gadget_graph(), {{"x", 0}, {"y", 1}}};
    if (name == "X_phi")
        return {x_gadget_graph(false), {{"u", 0}, {"v", 1}, {"w", 2}, {"x", 3}}};
    if (name == "X_phi_prime")
        return {x_gadget_graph(true), {{"u", 0}, {"v", 1}, {"w", 2}, {"x", 3}}};
    if (name == "Y_phi")
        return {y_gadget_graph(false), {{"u", 0}, {"v", 1}, {"w", 2}, {"x", 3}, {"y", 4}}};
    if (name == "Y_phi_prime")
        return {y_gadget_graph(true), {{"u", 0}, {"v", 1}, {"w", 2}, {"x", 3}, {"y", 4}}};
    throw std::invalid_argument("unknown named graph '" + name + "'");
}

std::vector<std::string> named_graph_names() {
    return {"K4_bad_positive", "K4_bad_negative", "K4_Mminus", "K4_Mplus",
            "K6_M",            "K6_Mbar",         "P5_M",      "H_gadget",
            "X_phi",           "X_phi_prime",     "Y_phi",     "Y_phi_prime"};
}

SignedGraph pin(const SignedGraph& g, const GadgetTemplate& tmpl,
                const std::map<std::string, Vertex>& binding) {
    const auto& t = tmpl.graph;
    std::vector<Vertex> image(t.order(), -1);
    std::vector<Vertex> bound_targets;
    for (const auto& [port, target] : binding) {
        auto it = tmpl.ports.find(port);
        if (it == tmpl.ports.end())
            throw std::invalid_argument("unknown port '" + port + "'");
        g.check_vertex(target);
        if (std::find(bound_targets.begin(), bound_targets.end(), target) != bound_targets.end())
            throw std::invalid_argument("ports bound to repeated vertex");
        bound_targets.push_back(target);
        image[it->second] = target;
    }

    int next = g.order();
    for (Vertex v = 0; v < t.order(); ++v)
        if (image[v] == -1) image[v] = next++;

    std::vector<EdgeSpec> edges = g.edges();
    for (const auto& e : t.edges()) {
        Vertex u = image[e.u], v = image[e.v];
        if (u < g.order() && v < g.order() && g.has_edge(u, v)) {
            if (g.sign(u, v) != e.sign)
                throw std::invalid_argument("pin would identify edges of opposite sign");
            continue; // identified with an equal-sign edge of g
        }
        edges.push_back({u, v, e.sign});
    }
    auto out = SignedGraph::build(next, edges);
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.has_label(v)) out.set_label(v, g.label(v));

    std::string suffix = bound_suffix(g, tmpl, binding);
    for (Vertex v = 0; v < t.order(); ++v) {
        if (image[v] < g.order() || !t.has_label(v)) continue;
        std::string label = t.label(v) + suffix;
        if (out.find_label(label)) label += "#" + std::to_string(image[v]);
        out.set_label(image[v], label);
    }
    return out;
}

SignedGraph build_tower(int level) {
    if (level < 0 || level > 5) throw std::invalid_argument("tower level must be 0..5");
    auto h = named_graph("H_gadget");

    auto h0 = h.graph; // plain names already
    if (level == 0) return h0;

    auto pin_on = [&](const SignedGraph& base, const std::string& lu, const std::string& lv) {
        auto u = base.find_label(lu);
        auto v = base.find_label(lv);
        if (!u || !v) throw std::logic_error("tower label lookup failed");
        return pin(base, h, {{"x", *u}, {"y", *v}});
    };

    auto h1 = pin_on(h0, "x", "a");
    if (level == 1) return h1;

    if (level == 2) {
        // Glue a copy of h1 at every vertex of h0, identifying the copy's x.
        GadgetTemplate t1{h1, {{"x", 0}}};
        auto acc = h0;
        for (Vertex v = 0; v < h0.order(); ++v) acc = pin(acc, t1, {{"x", v}});
        return acc;
    }

    auto h3 = h0;
    for (const auto& [a, b] : {std::pair<const char*, const char*>{"x", "a"},
                               {"x", "d"},
                               {"y", "a"},
                               {"y", "d"}})
        h3 = pin_on(h3, a, b);
    if (level == 3) return h3;

    auto h4 = h3;
    for (const char* base : {"x,a", "x,d", "y,a", "y,d"}) {
        std::string sfx = std::string("^{") + base + "}";
        h4 = pin_on(h4, "a1" + sfx, "a2" + sfx);
        h4 = pin_on(h4, "d1" + sfx, "d2" + sfx);
    }
    if (level == 4) return h4;

    GadgetTemplate t4{h4, {{"x", 0}}};
    auto acc = h0;
    for (Vertex v = 0; v < h0.order(); ++v) acc = pin(acc, t4, {{"x", v}});
    return acc;
}

SignedGraph star_construction(const SignedGraph& g) {
    const int n = g.order();
    std::vector<EdgeSpec> edges;
    for (const auto& e : g.edges()) {
        edges.push_back(e);
        edges.push_back({e.u + n, e.v + n, e.sign});
    }
    const Vertex inf = 2 * n;
    for (Vertex v = 0; v < n; ++v) {
        edges.push_back({v, inf, Sign::Positive});
        edges.push_back({v + n, inf, Sign::Negative});
    }
    auto out = SignedGraph::build(2 * n + 1, edges);
    out.set_label(inf, "inf");
    return out;
}

SignedGraph attach_vertex_gadgets(const SignedGraph& g, const SignedGraph& a) {
    const int n = g.order();
    const int m = a.order();
    std::vector<EdgeSpec> edges = g.edges();
    int next = n;
    for (Vertex v = 0; v < n; ++v) {
        for (Sign s : {Sign::Positive, Sign::Negative}) {
            for (const auto& e : a.edges()) edges.push_back({next + e.u, next + e.v, e.sign});
            for (Vertex w = 0; w < m; ++w) edges.push_back({v, next + w, s});
            next += m;
        }
    }
    return SignedGraph::build(next, edges);
}

SignedGraph attach_edge_gadgets(const SignedGraph& g, const SignedGraph& a) {
    const int m = a.order();
    std::vector<EdgeSpec> edges = g.edges();
    int next = g.order();
    for (const auto& ge : g.edges()) {
        for (Sign alpha : {Sign::Positive, Sign::Negative}) {
            for (Sign beta : {Sign::Positive, Sign::Negative}) {
                for (const auto& e : a.edges()) edges.push_back({next + e.u, next + e.v, e.sign});
                for (Vertex w = 0; w < m; ++w) {
                    edges.push_back({ge.u, next + w, alpha});
                    edges.push_back({ge.v, next + w, beta});
                }
                next += m;
            }
        }
    }
    return SignedGraph::build(next, edges);
}

std::vector<SignedGraph> enumerate_signatures_mod_switching(const SignedGraph& g) {
    // Spanning forest via the normal-form machinery: force a signature, take
    // the forest edges from a BFS per component.
    const int n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<std::pair<Vertex, Vertex>> tree_edges;
    std::vector<std::pair<Vertex, Vertex>> free_edges;
    for (const auto& comp : connected_components(g)) {
        std::vector<Vertex> stack{comp.front()};
        seen[comp.front()] = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex u : g.neighbors(v))
                if (!seen[u]) {
                    seen[u] = 1;
                    tree_edges.emplace_back(std::min(v, u), std::max(v, u));
                    stack.push_back(u);
                }
        }
    }
    for (const auto& e : g.edges()) {
        auto p = std::make_pair(e.u, e.v);
        if (std::find(tree_edges.begin(), tree_edges.end(), p) == tree_edges.end())
            free_edges.push_back(p);
    }

    std::vector<SignedGraph> out;
    const std::uint64_t total = std::uint64_t{1} << free_edges.size();
    out.reserve(total);
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        std::vector<EdgeSpec> edges;
        edges.reserve(g.edges().size());
        for (const auto& [u, v] : tree_edges) edges.push_back({u, v, Sign::Positive});
        for (std::size_t i = 0; i < free_edges.size(); ++i)
            edges.push_back({free_edges[i].first, free_edges[i].second,
                             (bits >> i & 1) ? Sign::Negative : Sign::Positive});
        out.push_back(SignedGraph::build(n, edges));
    }
    return out;
}

} // namespace sg::gen
