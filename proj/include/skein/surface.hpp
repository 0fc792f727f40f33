#pragma once

// Combinatorial Dehn-Thurston datum (F, E): boundary triangulations of a
// compact surface F whose double is the closed surface, the Thurston form,
// the coordinate monoids Lambda and Gamma, twists, and normal-curve
// reconstruction. Surfaces are pure combinatorics: faces are ordered edge
// triples, the order encoding the counterclockwise cyclic order of sides.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace skein {

struct Triangulation {
    int genus = 1;
    int num_edges = 1;
    std::vector<std::array<int, 3>> faces;
    bool torus = true;  // the g = 1 degenerate case: one arc, no faces

    /// Annulus datum for the torus: E = {e}, no faces.
    static Triangulation torus_datum();
    /// Two faces (a,b,c),(a,b,c). F is a one-holed torus; its double has
    /// genus 2.
    static Triangulation genus2();
    /// Two faces (a,b,c),(a,c,b). F is a pair of pants; its double has
    /// genus 2.
    static Triangulation genus2_alt();
    /// Resolves "torus", "genus2", "genus2-alt".
    static std::optional<Triangulation> preset(std::string_view name);

    /// First violated invariant, or nullopt when valid.
    std::optional<std::string> violation() const;
    /// Throws std::invalid_argument naming the first violated invariant.
    void validate() const;

    /// The two (face, slot) incidences of each edge, in face-scan order.
    /// Only valid on validated non-torus data.
    std::vector<std::array<std::pair<int, int>, 2>> edge_slots() const;
};

/// Antisymmetric integer form on edges; entries lie in {-2,...,2}.
struct ThurstonForm {
    int num_edges = 0;
    std::vector<long long> entries;  // row-major num_edges x num_edges

    long long at(int a, int b) const { return entries[static_cast<size_t>(a) * num_edges + b]; }
};

/// Q(a,b) = sum over faces of +/-1 according as b follows a in the face's
/// cyclic side order; torus convention: the 1x1 zero matrix.
ThurstonForm compute_thurston_form(const Triangulation& tri);

/// <n, m>_Q = sum_{a,b} Q(a,b) n(a) m(b).
long long pairing_q(const ThurstonForm& form, const std::vector<long long>& n,
                    const std::vector<long long>& m);

/// Intersection numbers of a simple diagram on F with the triangulation arcs.
struct EdgeCoord {
    std::vector<long long> m;

    EdgeCoord() = default;
    explicit EdgeCoord(std::vector<long long> values) : m(std::move(values)) {}
    static EdgeCoord zeros(int num_edges) { return EdgeCoord(std::vector<long long>(num_edges, 0)); }

    long long sum() const;
    int size() const { return static_cast<int>(m.size()); }
    long long operator[](int e) const { return m[static_cast<size_t>(e)]; }

    friend EdgeCoord operator+(const EdgeCoord&, const EdgeCoord&);
    friend EdgeCoord operator*(long long k, const EdgeCoord&);
    friend bool operator==(const EdgeCoord&, const EdgeCoord&) = default;

    std::string to_string() const;  // "[2,1,1]"
};

/// Dehn-Thurston coordinates of a simple diagram on the closed surface:
/// intersection numbers n with the pants curves and twists t.
struct DTCoord {
    std::vector<long long> n;
    std::vector<long long> t;

    DTCoord() = default;
    DTCoord(std::vector<long long> n_, std::vector<long long> t_)
        : n(std::move(n_)), t(std::move(t_)) {}
    static DTCoord zeros(int num_edges) {
        return DTCoord(std::vector<long long>(num_edges, 0), std::vector<long long>(num_edges, 0));
    }

    long long degree() const;  // sum of n
    int size() const { return static_cast<int>(n.size()); }
    bool is_zero() const;

    friend DTCoord operator+(const DTCoord&, const DTCoord&);
    friend bool operator==(const DTCoord&, const DTCoord&) = default;

    std::string to_string() const;  // "([2,1,1];[0,0,0])"
};

/// Graded-lexicographic orders (total degree, then coordinates); additive on
/// the respective monoids, so leading terms multiply.
struct EdgeCoordGradedLess {
    bool operator()(const EdgeCoord& a, const EdgeCoord& b) const;
};
struct DTCoordGradedLess {
    bool operator()(const DTCoord& a, const DTCoord& b) const;
};

std::optional<std::string> lambda_violation(const Triangulation& tri, const EdgeCoord& m);
/// Parity and triangle inequalities at every face; on the torus every
/// nonnegative vector is a member.
bool lambda_member(const Triangulation& tri, const EdgeCoord& m);

std::optional<std::string> gamma_violation(const Triangulation& tri, const DTCoord& c);
/// n >= 0, per-face parity of n, and t(e*) >= 0 wherever n(e) = 0.
bool gamma_member(const Triangulation& tri, const DTCoord& c);

/// Triangle inequalities on n at every face and t(e*) = 0 wherever n(e) = 0.
/// Throws std::domain_error on non-Gamma input.
bool is_triangular(const Triangulation& tri, const DTCoord& c);
std::optional<std::string> triangular_violation(const Triangulation& tri, const DTCoord& c);

/// The twist map along edge e: t(e*) += 1. Defined only when n(e) > 0.
DTCoord twist(const DTCoord& c, int e);
DTCoord twist_inverse(const DTCoord& c, int e);

/// A diagram contained in F has zero twists.
DTCoord embed_edge_coord(const Triangulation& tri, const EdgeCoord& m);

/// Coordinates of the boundary of F: every arc meets a pushoff of the
/// boundary twice, once near each endpoint.
EdgeCoord omega(const Triangulation& tri);

/// Corner-arc counts of the normal-curve reconstruction: counts[f] holds the
/// arcs cutting off the corner between consecutive sides (0,1), (1,2), (2,0)
/// of face f.
struct NormalData {
    std::vector<std::array<long long, 3>> counts;
};

NormalData normal_reconstruct(const Triangulation& tri, const EdgeCoord& m);

/// Number of connected components of the normal multicurve with coordinates
/// m, by tracing corner arcs across the edge gluings. Torus: m parallel
/// longitudes.
long long count_components(const Triangulation& tri, const EdgeCoord& m);

}  // namespace skein
