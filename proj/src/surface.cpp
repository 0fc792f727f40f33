#include "skein/surface.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skein {

namespace {

std::string coord_list(const std::vector<long long>& v) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ']';
    return os.str();
}

void check_sizes(const Triangulation& tri, int n, const char* what) {
    if (n != tri.num_edges)
        throw std::invalid_argument(std::string(what) + ": coordinate has " + std::to_string(n) +
                                    " entries, triangulation has " + std::to_string(tri.num_edges) +
                                    " edges");
}

}  // namespace

// ---------------------------------------------------------------------------
// Triangulation

Triangulation Triangulation::torus_datum() { return Triangulation{1, 1, {}, true}; }

Triangulation Triangulation::genus2() {
    return Triangulation{2, 3, {{{0, 1, 2}}, {{0, 1, 2}}}, false};
}

Triangulation Triangulation::genus2_alt() {
    return Triangulation{2, 3, {{{0, 1, 2}}, {{0, 2, 1}}}, false};
}

std::optional<Triangulation> Triangulation::preset(std::string_view name) {
    if (name == "torus") return torus_datum();
    if (name == "genus2") return genus2();
    if (name == "genus2-alt") return genus2_alt();
    return std::nullopt;
}

std::optional<std::string> Triangulation::violation() const {
    if (genus < 1) return "genus must be >= 1";
    if (torus != (genus == 1)) return "torus flag must hold exactly when genus = 1";
    if (torus) {
        if (num_edges != 1) return "torus datum must have exactly one edge";
        if (!faces.empty()) return "torus datum must have no faces";
        return std::nullopt;
    }
    if (num_edges != 3 * (genus - 1))
        return "edge count must be 3*(genus-1) = " + std::to_string(3 * (genus - 1));
    if (static_cast<int>(faces.size()) != 2 * (genus - 1))
        return "face count must be 2*(genus-1) = " + std::to_string(2 * (genus - 1));
    std::vector<int> uses(static_cast<size_t>(num_edges), 0);
    for (size_t f = 0; f < faces.size(); ++f) {
        const auto& [a, b, c] = faces[f];
        for (int e : {a, b, c}) {
            if (e < 0 || e >= num_edges)
                return "face " + std::to_string(f) + " references edge " + std::to_string(e) +
                       " out of range";
            ++uses[static_cast<size_t>(e)];
        }
        if (a == b || b == c || a == c)
            return "face " + std::to_string(f) + " has a repeated edge (self-folded)";
    }
    for (int e = 0; e < num_edges; ++e)
        if (uses[static_cast<size_t>(e)] != 2)
            return "edge " + std::to_string(e) + " occurs in " +
                   std::to_string(uses[static_cast<size_t>(e)]) + " face slots, expected 2";
    return std::nullopt;
}

void Triangulation::validate() const {
    if (auto v = violation()) throw std::invalid_argument("invalid triangulation: " + *v);
}

std::vector<std::array<std::pair<int, int>, 2>> Triangulation::edge_slots() const {
    std::vector<std::array<std::pair<int, int>, 2>> slots(
        static_cast<size_t>(num_edges), {std::pair{-1, -1}, std::pair{-1, -1}});
    std::vector<int> seen(static_cast<size_t>(num_edges), 0);
    for (size_t f = 0; f < faces.size(); ++f)
        for (int p = 0; p < 3; ++p) {
            int e = faces[f][static_cast<size_t>(p)];
            slots[static_cast<size_t>(e)][static_cast<size_t>(seen[static_cast<size_t>(e)]++)] = {
                static_cast<int>(f), p};
        }
    return slots;
}

// ---------------------------------------------------------------------------
// Thurston form

ThurstonForm compute_thurston_form(const Triangulation& tri) {
    tri.validate();
    ThurstonForm form;
    form.num_edges = tri.num_edges;
    form.entries.assign(static_cast<size_t>(tri.num_edges) * tri.num_edges, 0);
    for (const auto& face : tri.faces) {
        // b follows a for the consecutive pairs of the cyclic order.
        for (int k = 0; k < 3; ++k) {
            int a = face[static_cast<size_t>(k)];
            int b = face[static_cast<size_t>((k + 1) % 3)];
            form.entries[static_cast<size_t>(a) * tri.num_edges + b] += 1;
            form.entries[static_cast<size_t>(b) * tri.num_edges + a] -= 1;
        }
    }
    return form;
}

long long pairing_q(const ThurstonForm& form, const std::vector<long long>& n,
                    const std::vector<long long>& m) {
    if (static_cast<int>(n.size()) != form.num_edges || static_cast<int>(m.size()) != form.num_edges)
        throw std::invalid_argument("pairing_q: dimension mismatch");
    long long acc = 0;
    for (int a = 0; a < form.num_edges; ++a)
        for (int b = 0; b < form.num_edges; ++b)
            acc += form.at(a, b) * n[static_cast<size_t>(a)] * m[static_cast<size_t>(b)];
    return acc;
}

// ---------------------------------------------------------------------------
// Coordinates

long long EdgeCoord::sum() const { return std::accumulate(m.begin(), m.end(), 0LL); }

EdgeCoord operator+(const EdgeCoord& a, const EdgeCoord& b) {
    if (a.m.size() != b.m.size()) throw std::invalid_argument("EdgeCoord addition: size mismatch");
    EdgeCoord out = a;
    for (size_t i = 0; i < b.m.size(); ++i) out.m[i] += b.m[i];
    return out;
}

EdgeCoord operator*(long long k, const EdgeCoord& v) {
    EdgeCoord out = v;
    for (auto& x : out.m) x *= k;
    return out;
}

std::string EdgeCoord::to_string() const { return coord_list(m); }

long long DTCoord::degree() const { return std::accumulate(n.begin(), n.end(), 0LL); }

bool DTCoord::is_zero() const {
    auto zero = [](long long x) { return x == 0; };
    return std::all_of(n.begin(), n.end(), zero) && std::all_of(t.begin(), t.end(), zero);
}

DTCoord operator+(const DTCoord& a, const DTCoord& b) {
    if (a.n.size() != b.n.size() || a.t.size() != b.t.size())
        throw std::invalid_argument("DTCoord addition: size mismatch");
    DTCoord out = a;
    for (size_t i = 0; i < b.n.size(); ++i) out.n[i] += b.n[i];
    for (size_t i = 0; i < b.t.size(); ++i) out.t[i] += b.t[i];
    return out;
}

std::string DTCoord::to_string() const { return "(" + coord_list(n) + ";" + coord_list(t) + ")"; }

bool EdgeCoordGradedLess::operator()(const EdgeCoord& a, const EdgeCoord& b) const {
    if (a.sum() != b.sum()) return a.sum() < b.sum();
    return a.m < b.m;
}

bool DTCoordGradedLess::operator()(const DTCoord& a, const DTCoord& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.n != b.n) return a.n < b.n;
    return a.t < b.t;
}

// ---------------------------------------------------------------------------
// Membership

std::optional<std::string> lambda_violation(const Triangulation& tri, const EdgeCoord& m) {
    check_sizes(tri, m.size(), "lambda_member");
    for (int e = 0; e < m.size(); ++e)
        if (m[e] < 0) return "m" + coord_list(m.m) + " is negative on edge " + std::to_string(e);
    for (size_t f = 0; f < tri.faces.size(); ++f) {
        const auto& face = tri.faces[f];
        long long a = m[face[0]], b = m[face[1]], c = m[face[2]];
        if ((a + b + c) % 2 != 0)
            return "odd parity at face " + std::to_string(f) + ": " + std::to_string(a) + "+" +
                   std::to_string(b) + "+" + std::to_string(c);
        if (a > b + c || b > a + c || c > a + b)
            return "triangle inequality fails at face " + std::to_string(f);
    }
    return std::nullopt;
}

bool lambda_member(const Triangulation& tri, const EdgeCoord& m) {
    return !lambda_violation(tri, m).has_value();
}

std::optional<std::string> gamma_violation(const Triangulation& tri, const DTCoord& c) {
    check_sizes(tri, c.size(), "gamma_member");
    if (static_cast<int>(c.t.size()) != tri.num_edges)
        throw std::invalid_argument("gamma_member: twist vector size mismatch");
    for (int e = 0; e < c.size(); ++e)
        if (c.n[static_cast<size_t>(e)] < 0)
            return "n is negative on edge " + std::to_string(e);
    for (size_t f = 0; f < tri.faces.size(); ++f) {
        const auto& face = tri.faces[f];
        long long sum = c.n[static_cast<size_t>(face[0])] + c.n[static_cast<size_t>(face[1])] +
                        c.n[static_cast<size_t>(face[2])];
        if (sum % 2 != 0) return "odd parity of n at face " + std::to_string(f);
    }
    for (int e = 0; e < c.size(); ++e)
        if (c.n[static_cast<size_t>(e)] == 0 && c.t[static_cast<size_t>(e)] < 0)
            return "n = 0 but t < 0 on edge " + std::to_string(e);
    return std::nullopt;
}

bool gamma_member(const Triangulation& tri, const DTCoord& c) {
    return !gamma_violation(tri, c).has_value();
}

std::optional<std::string> triangular_violation(const Triangulation& tri, const DTCoord& c) {
    if (auto v = gamma_violation(tri, c))
        throw std::domain_error("is_triangular: not a Gamma member: " + *v);
    for (size_t f = 0; f < tri.faces.size(); ++f) {
        const auto& face = tri.faces[f];
        long long a = c.n[static_cast<size_t>(face[0])], b = c.n[static_cast<size_t>(face[1])],
                  d = c.n[static_cast<size_t>(face[2])];
        if (a > b + d || b > a + d || d > a + b)
            return "triangle inequality on n fails at face " + std::to_string(f);
    }
    for (int e = 0; e < c.size(); ++e)
        if (c.n[static_cast<size_t>(e)] == 0 && c.t[static_cast<size_t>(e)] != 0)
            return "n = 0 but t != 0 on edge " + std::to_string(e);
    return std::nullopt;
}

bool is_triangular(const Triangulation& tri, const DTCoord& c) {
    return !triangular_violation(tri, c).has_value();
}

// ---------------------------------------------------------------------------
// Twists and embeddings

DTCoord twist(const DTCoord& c, int e) {
    if (e < 0 || e >= c.size()) throw std::invalid_argument("twist: edge out of range");
    if (c.n[static_cast<size_t>(e)] <= 0)
        throw std::domain_error("twist: undefined when n(e) = 0");
    DTCoord out = c;
    out.t[static_cast<size_t>(e)] += 1;
    return out;
}

DTCoord twist_inverse(const DTCoord& c, int e) {
    if (e < 0 || e >= c.size()) throw std::invalid_argument("twist: edge out of range");
    if (c.n[static_cast<size_t>(e)] <= 0)
        throw std::domain_error("twist: undefined when n(e) = 0");
    DTCoord out = c;
    out.t[static_cast<size_t>(e)] -= 1;
    return out;
}

DTCoord embed_edge_coord(const Triangulation& tri, const EdgeCoord& m) {
    if (auto v = lambda_violation(tri, m))
        throw std::domain_error("embed_edge_coord: not a Lambda member: " + *v);
    return DTCoord(m.m, std::vector<long long>(m.m.size(), 0));
}

EdgeCoord omega(const Triangulation& tri) {
    tri.validate();
    return EdgeCoord(std::vector<long long>(static_cast<size_t>(tri.num_edges), 2));
}

// ---------------------------------------------------------------------------
// Normal curves

NormalData normal_reconstruct(const Triangulation& tri, const EdgeCoord& m) {
    if (auto v = lambda_violation(tri, m))
        throw std::domain_error("normal_reconstruct: not a Lambda member: " + *v);
    NormalData data;
    data.counts.reserve(tri.faces.size());
    for (const auto& face : tri.faces) {
        long long a = m[face[0]], b = m[face[1]], c = m[face[2]];
        // Corner between sides (0,1) is cut off by arcs avoiding side 2, etc.
        data.counts.push_back({(a + b - c) / 2, (b + c - a) / 2, (c + a - b) / 2});
    }
    return data;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace

long long count_components(const Triangulation& tri, const EdgeCoord& m) {
    if (auto v = lambda_violation(tri, m))
        throw std::domain_error("count_components: not a Lambda member: " + *v);
    if (tri.torus) return m[0];  // m parallel longitudes

    const NormalData normal = normal_reconstruct(tri, m);
    const auto slots = tri.edge_slots();

    // Flat ids for the intersection points along each edge, oriented by the
    // edge's first face slot; the second slot sees them reversed.
    std::vector<int> offset(static_cast<size_t>(tri.num_edges) + 1, 0);
    for (int e = 0; e < tri.num_edges; ++e)
        offset[static_cast<size_t>(e) + 1] = offset[static_cast<size_t>(e)] + static_cast<int>(m[e]);
    const int total = offset.back();
    if (total == 0) return 0;

    auto point_id = [&](int face, int pos, long long local) {
        int e = tri.faces[static_cast<size_t>(face)][static_cast<size_t>(pos)];
        bool primary = slots[static_cast<size_t>(e)][0] == std::pair{face, pos};
        long long global = primary ? local : m[e] - 1 - local;
        return offset[static_cast<size_t>(e)] + static_cast<int>(global);
    };

    UnionFind uf(total);
    for (size_t f = 0; f < tri.faces.size(); ++f) {
        for (int k = 0; k < 3; ++k) {
            // Corner between sides k and k+1: the innermost arc joins the last
            // point of side k to the first point of side k+1.
            long long arcs = normal.counts[f][static_cast<size_t>(k)];
            int e_k = tri.faces[f][static_cast<size_t>(k)];
            for (long long i = 0; i < arcs; ++i) {
                int u = point_id(static_cast<int>(f), k, m[e_k] - 1 - i);
                int v = point_id(static_cast<int>(f), (k + 1) % 3, i);
                uf.unite(u, v);
            }
        }
    }

    std::vector<bool> seen(static_cast<size_t>(total), false);
    long long components = 0;
    for (int p = 0; p < total; ++p) {
        int r = uf.find(p);
        if (!seen[static_cast<size_t>(r)]) {
            seen[static_cast<size_t>(r)] = true;
            ++components;
        }
    }
    return components;
}

}  // namespace skein
