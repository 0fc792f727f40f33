#pragma once

// The associated graded algebra of the surface skein algebra on triangular
// basis elements, the graded handlebody module, the product and action
// formulas, and twist reduction. Products and actions are defined only on
// triangular inputs; anything else is rejected, never guessed.

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "skein/qring.hpp"
#include "skein/surface.hpp"

namespace skein {

/// Finite formal sum of Dehn-Thurston coordinates with ring coefficients.
/// Keys are held in graded-lexicographic order; no stored coefficient is
/// zero, so equality is structural.
class GradedSurfaceElem {
public:
    using TermMap = std::map<DTCoord, Coeff, DTCoordGradedLess>;

    explicit GradedSurfaceElem(RingCtx ctx) : ctx_(ctx) {}
    static GradedSurfaceElem basis(const RingCtx& ctx, DTCoord key);
    static GradedSurfaceElem term(const RingCtx& ctx, DTCoord key, const Coeff& c);

    const RingCtx& ctx() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    /// Max over keys of the total intersection number; nullopt for zero.
    std::optional<long long> degree() const;
    const std::pair<const DTCoord, Coeff>& leading_term() const;

    void add_term(const DTCoord& key, const Coeff& c);

    GradedSurfaceElem operator-() const;
    friend GradedSurfaceElem operator+(const GradedSurfaceElem&, const GradedSurfaceElem&);
    friend GradedSurfaceElem operator-(const GradedSurfaceElem&, const GradedSurfaceElem&);
    GradedSurfaceElem scaled(const Coeff& c) const;
    friend bool operator==(const GradedSurfaceElem&, const GradedSurfaceElem&);

    std::string to_string(bool spaces = true) const;

private:
    RingCtx ctx_;
    TermMap terms_;
};

/// Finite formal sum of edge coordinates with ring coefficients.
class GradedHandlebodyElem {
public:
    using TermMap = std::map<EdgeCoord, Coeff, EdgeCoordGradedLess>;

    explicit GradedHandlebodyElem(RingCtx ctx) : ctx_(ctx) {}
    static GradedHandlebodyElem basis(const RingCtx& ctx, EdgeCoord key);
    static GradedHandlebodyElem term(const RingCtx& ctx, EdgeCoord key, const Coeff& c);

    const RingCtx& ctx() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    std::optional<long long> degree() const;
    const std::pair<const EdgeCoord, Coeff>& leading_term() const;

    void add_term(const EdgeCoord& key, const Coeff& c);

    GradedHandlebodyElem operator-() const;
    friend GradedHandlebodyElem operator+(const GradedHandlebodyElem&, const GradedHandlebodyElem&);
    friend GradedHandlebodyElem operator-(const GradedHandlebodyElem&, const GradedHandlebodyElem&);
    GradedHandlebodyElem scaled(const Coeff& c) const;
    friend bool operator==(const GradedHandlebodyElem&, const GradedHandlebodyElem&);

    std::string to_string(bool spaces = true) const;

private:
    RingCtx ctx_;
    TermMap terms_;
};

/// <t> = sum of twists; t.n = sum_e t(e*) n(e).
long long twist_total(const DTCoord& c);
long long twist_dot(const std::vector<long long>& t, const std::vector<long long>& n);

/// u(n,t) = (-q^2)^<t> q^(t.n), a monomial unit.
Coeff unit_u(const RingCtx& ctx, const DTCoord& c);

/// C(n,t) C(n',t') = q^(<n,n'>_Q + t.n' - t'.n) C(n+n', t+t') for triangular
/// operands.
std::pair<Coeff, DTCoord> product_basis(const Triangulation& tri, const ThurstonForm& form,
                                        const RingCtx& ctx, const DTCoord& x, const DTCoord& y);

/// Bilinear extension of product_basis; every key of both operands must be
/// triangular.
GradedSurfaceElem product(const Triangulation& tri, const ThurstonForm& form,
                          const GradedSurfaceElem& x, const GradedSurfaceElem& y);

/// C(n,t) * S(m) = u(n,t) q^(2 t.m) q^(<n,m>_Q) S(n+m).
std::pair<Coeff, EdgeCoord> act_basis(const Triangulation& tri, const ThurstonForm& form,
                                      const RingCtx& ctx, const DTCoord& x, const EdgeCoord& m);

/// Bilinear extension of act_basis.
GradedHandlebodyElem act(const Triangulation& tri, const ThurstonForm& form,
                         const GradedSurfaceElem& x, const GradedHandlebodyElem& v);

/// C(n,t) * 1 = u(n,t) S(n).
std::pair<Coeff, EdgeCoord> twist_reduce(const Triangulation& tri, const RingCtx& ctx,
                                         const DTCoord& c);

/// Clears the twist on one edge: coefficient (-q^(n(e)+2))^t(e*), twist
/// zeroed there.
std::pair<Coeff, DTCoord> single_twist_reduce(const Triangulation& tri, const RingCtx& ctx,
                                              const DTCoord& c, int e);

/// Smallest k with (n + k*omega, t) satisfying the triangle inequalities;
/// nullopt when some n(e) = 0 carries a nonzero twist (adding to n alone
/// cannot clear it).
std::optional<long long> coordinate_stabilize(const Triangulation& tri, const DTCoord& c);

}  // namespace skein
