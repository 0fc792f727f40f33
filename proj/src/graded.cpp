#include "skein/graded.hpp"

#include <sstream>
#include <stdexcept>

namespace skein {

namespace {

void check_elem_ctx(const RingCtx& a, const RingCtx& b, const char* what) {
    if (a != b)
        throw std::invalid_argument(std::string(what) + ": mixed ring contexts " + a.to_string() +
                                    " and " + b.to_string());
}

void require_triangular(const Triangulation& tri, const DTCoord& c, const char* what) {
    if (auto v = triangular_violation(tri, c))
        throw std::domain_error(std::string(what) + ": operand " + c.to_string() +
                                " is not triangular: " + *v);
}

/// Pretty unit rendering: "q^-1", "-q^3", "1", "-1"; general coefficients in
/// parentheses.
std::string coeff_display(const Coeff& c, bool spaces) {
    if (!c.ctx().is_root()) {
        if (auto u = c.laurent().as_unit()) {
            auto [exp, sign] = *u;
            std::string s = sign < 0 ? "-" : "";
            if (exp == 0) return s + "1";
            return s + "q^" + std::to_string(exp);
        }
    }
    return "(" + c.to_string(spaces) + ")";
}

template <class TermMap, class KeyPrinter>
std::string render_terms(const TermMap& terms, bool spaces, KeyPrinter key_printer) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    const char* plus = spaces ? " + " : "+";
    bool first = true;
    for (const auto& [key, coeff] : terms) {
        if (!first) os << plus;
        first = false;
        os << coeff_display(coeff, spaces) << (spaces ? " * " : "*") << key_printer(key);
    }
    return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// GradedSurfaceElem

GradedSurfaceElem GradedSurfaceElem::basis(const RingCtx& ctx, DTCoord key) {
    return term(ctx, std::move(key), Coeff::one(ctx));
}

GradedSurfaceElem GradedSurfaceElem::term(const RingCtx& ctx, DTCoord key, const Coeff& c) {
    GradedSurfaceElem out(ctx);
    out.add_term(key, c);
    return out;
}

std::optional<long long> GradedSurfaceElem::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.degree();
}

const std::pair<const DTCoord, Coeff>& GradedSurfaceElem::leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading_term of the zero element");
    return *terms_.rbegin();
}

void GradedSurfaceElem::add_term(const DTCoord& key, const Coeff& c) {
    check_elem_ctx(ctx_, c.ctx(), "GradedSurfaceElem::add_term");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GradedSurfaceElem GradedSurfaceElem::operator-() const {
    GradedSurfaceElem out(ctx_);
    for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
    return out;
}

GradedSurfaceElem operator+(const GradedSurfaceElem& a, const GradedSurfaceElem& b) {
    check_elem_ctx(a.ctx_, b.ctx_, "GradedSurfaceElem addition");
    GradedSurfaceElem out = a;
    for (const auto& [key, c] : b.terms_) out.add_term(key, c);
    return out;
}

GradedSurfaceElem operator-(const GradedSurfaceElem& a, const GradedSurfaceElem& b) {
    return a + (-b);
}

GradedSurfaceElem GradedSurfaceElem::scaled(const Coeff& c) const {
    GradedSurfaceElem out(ctx_);
    for (const auto& [key, coeff] : terms_) out.add_term(key, coeff * c);
    return out;
}

bool operator==(const GradedSurfaceElem& a, const GradedSurfaceElem& b) {
    check_elem_ctx(a.ctx_, b.ctx_, "GradedSurfaceElem comparison");
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [key, c] : a.terms_) {
        if (!(key == it->first) || !(c == it->second)) return false;
        ++it;
    }
    return true;
}

std::string GradedSurfaceElem::to_string(bool spaces) const {
    return render_terms(terms_, spaces, [](const DTCoord& key) {
        return "C" + key.to_string();
    });
}

// ---------------------------------------------------------------------------
// GradedHandlebodyElem

GradedHandlebodyElem GradedHandlebodyElem::basis(const RingCtx& ctx, EdgeCoord key) {
    return term(ctx, std::move(key), Coeff::one(ctx));
}

GradedHandlebodyElem GradedHandlebodyElem::term(const RingCtx& ctx, EdgeCoord key, const Coeff& c) {
    GradedHandlebodyElem out(ctx);
    out.add_term(key, c);
    return out;
}

std::optional<long long> GradedHandlebodyElem::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.sum();
}

const std::pair<const EdgeCoord, Coeff>& GradedHandlebodyElem::leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading_term of the zero element");
    return *terms_.rbegin();
}

void GradedHandlebodyElem::add_term(const EdgeCoord& key, const Coeff& c) {
    check_elem_ctx(ctx_, c.ctx(), "GradedHandlebodyElem::add_term");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GradedHandlebodyElem GradedHandlebodyElem::operator-() const {
    GradedHandlebodyElem out(ctx_);
    for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
    return out;
}

GradedHandlebodyElem operator+(const GradedHandlebodyElem& a, const GradedHandlebodyElem& b) {
    check_elem_ctx(a.ctx_, b.ctx_, "GradedHandlebodyElem addition");
    GradedHandlebodyElem out = a;
    for (const auto& [key, c] : b.terms_) out.add_term(key, c);
    return out;
}

GradedHandlebodyElem operator-(const GradedHandlebodyElem& a, const GradedHandlebodyElem& b) {
    return a + (-b);
}

GradedHandlebodyElem GradedHandlebodyElem::scaled(const Coeff& c) const {
    GradedHandlebodyElem out(ctx_);
    for (const auto& [key, coeff] : terms_) out.add_term(key, coeff * c);
    return out;
}

bool operator==(const GradedHandlebodyElem& a, const GradedHandlebodyElem& b) {
    check_elem_ctx(a.ctx_, b.ctx_, "GradedHandlebodyElem comparison");
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [key, c] : a.terms_) {
        if (!(key == it->first) || !(c == it->second)) return false;
        ++it;
    }
    return true;
}

std::string GradedHandlebodyElem::to_string(bool spaces) const {
    return render_terms(terms_, spaces, [](const EdgeCoord& key) {
        return "S" + key.to_string();
    });
}

// ---------------------------------------------------------------------------
// Formulas

long long twist_total(const DTCoord& c) {
    long long acc = 0;
    for (long long tw : c.t) acc += tw;
    return acc;
}

long long twist_dot(const std::vector<long long>& t, const std::vector<long long>& n) {
    if (t.size() != n.size()) throw std::invalid_argument("twist_dot: size mismatch");
    long long acc = 0;
    for (size_t i = 0; i < t.size(); ++i) acc += t[i] * n[i];
    return acc;
}

Coeff unit_u(const RingCtx& ctx, const DTCoord& c) {
    const long long tt = twist_total(c);
    const long long exp = 2 * tt + twist_dot(c.t, c.n);
    const Int sign = (tt % 2 == 0) ? 1 : -1;
    return Coeff::monomial(ctx, sign, exp);
}

std::pair<Coeff, DTCoord> product_basis(const Triangulation& tri, const ThurstonForm& form,
                                        const RingCtx& ctx, const DTCoord& x, const DTCoord& y) {
    require_triangular(tri, x, "product");
    require_triangular(tri, y, "product");
    const long long exp = pairing_q(form, x.n, y.n) + twist_dot(x.t, y.n) - twist_dot(y.t, x.n);
    return {Coeff::monomial(ctx, 1, exp), x + y};
}

GradedSurfaceElem product(const Triangulation& tri, const ThurstonForm& form,
                          const GradedSurfaceElem& x, const GradedSurfaceElem& y) {
    check_elem_ctx(x.ctx(), y.ctx(), "product");
    GradedSurfaceElem out(x.ctx());
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms()) {
            auto [coeff, key] = product_basis(tri, form, x.ctx(), kx, ky);
            out.add_term(key, cx * cy * coeff);
        }
    return out;
}

std::pair<Coeff, EdgeCoord> act_basis(const Triangulation& tri, const ThurstonForm& form,
                                      const RingCtx& ctx, const DTCoord& x, const EdgeCoord& m) {
    require_triangular(tri, x, "act");
    if (auto v = lambda_violation(tri, m))
        throw std::domain_error("act: handlebody coordinate " + m.to_string() +
                                " is not a Lambda member: " + *v);
    const long long exp = 2 * twist_dot(x.t, m.m) + pairing_q(form, x.n, m.m);
    const Coeff coeff = unit_u(ctx, x) * Coeff::monomial(ctx, 1, exp);
    return {coeff, EdgeCoord(x.n) + m};
}

GradedHandlebodyElem act(const Triangulation& tri, const ThurstonForm& form,
                         const GradedSurfaceElem& x, const GradedHandlebodyElem& v) {
    check_elem_ctx(x.ctx(), v.ctx(), "act");
    GradedHandlebodyElem out(v.ctx());
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [kv, cv] : v.terms()) {
            auto [coeff, key] = act_basis(tri, form, x.ctx(), kx, kv);
            out.add_term(key, cx * cv * coeff);
        }
    return out;
}

std::pair<Coeff, EdgeCoord> twist_reduce(const Triangulation& tri, const RingCtx& ctx,
                                         const DTCoord& c) {
    require_triangular(tri, c, "twist_reduce");
    return {unit_u(ctx, c), EdgeCoord(c.n)};
}

std::pair<Coeff, DTCoord> single_twist_reduce(const Triangulation& tri, const RingCtx& ctx,
                                              const DTCoord& c, int e) {
    require_triangular(tri, c, "single_twist_reduce");
    if (e < 0 || e >= c.size())
        throw std::invalid_argument("single_twist_reduce: edge out of range");
    const long long tw = c.t[static_cast<size_t>(e)];
    const long long exp = (c.n[static_cast<size_t>(e)] + 2) * tw;
    const Int sign = (tw % 2 == 0) ? 1 : -1;
    DTCoord reduced = c;
    reduced.t[static_cast<size_t>(e)] = 0;
    return {Coeff::monomial(ctx, sign, exp), reduced};
}

std::optional<long long> coordinate_stabilize(const Triangulation& tri, const DTCoord& c) {
    if (auto v = gamma_violation(tri, c))
        throw std::domain_error("coordinate_stabilize: not a Gamma member: " + *v);
    for (int e = 0; e < c.size(); ++e)
        if (c.n[static_cast<size_t>(e)] == 0 && c.t[static_cast<size_t>(e)] != 0)
            return std::nullopt;  // the zero-twist condition is unreachable
    long long k = 0;
    for (const auto& face : tri.faces) {
        const long long a = c.n[static_cast<size_t>(face[0])],
                        b = c.n[static_cast<size_t>(face[1])],
                        d = c.n[static_cast<size_t>(face[2])];
        // (a + 2k) <= (b + 2k) + (d + 2k) amounts to k >= (a - b - d) / 2.
        for (long long excess : {a - b - d, b - a - d, d - a - b})
            if (excess > 0) k = std::max(k, (excess + 1) / 2);
    }
    return k;
}

}  // namespace skein
