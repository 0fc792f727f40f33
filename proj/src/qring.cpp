#include "skein/qring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace skein {

std::string RingCtx::to_string() const {
    if (mode == Mode::Generic) return "generic";
    return "root:" + std::to_string(order);
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly LaurentPoly::constant(Int c) { return monomial(std::move(c), 0); }

LaurentPoly LaurentPoly::monomial(Int c, long long exp) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace(exp, std::move(c));
    return p;
}

bool LaurentPoly::is_unit() const { return as_unit().has_value(); }

std::optional<std::pair<long long, int>> LaurentPoly::as_unit() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [exp, c] = *terms_.begin();
    if (c == 1) return std::make_pair(exp, 1);
    if (c == -1) return std::make_pair(exp, -1);
    return std::nullopt;
}

Int LaurentPoly::coefficient(long long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(long long exp, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [exp, c] : terms_) out.terms_.emplace(exp, -c);
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [exp, c] : rhs.terms_) add_term(exp, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [exp, c] : rhs.terms_) add_term(exp, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    LaurentPoly out;
    for (const auto& [ea, ca] : lhs.terms_)
        for (const auto& [eb, cb] : rhs.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

std::string LaurentPoly::to_string(bool spaces) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    const char* plus = spaces ? " + " : "+";
    const char* minus = spaces ? " - " : "-";
    bool first = true;
    // Descending exponent order.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Int c = it->second;
        if (first) {
            if (c < 0) {
                os << '-';
                c = -c;
            }
            first = false;
        } else if (c < 0) {
            os << minus;
            c = -c;
        } else {
            os << plus;
        }
        os << c.str();
        if (it->first != 0) os << "*q^" << it->first;
    }
    return os.str();
}

namespace {

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
    throw std::invalid_argument("invalid Laurent polynomial \"" + std::string(text) +
                                "\": " + why);
}

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) parse_fail(text, "empty input");

    LaurentPoly out;
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
        }
        if (i >= s.size()) parse_fail(text, "dangling sign");

        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);

        Int coeff = digits.empty() ? Int(1) : Int(digits);
        long long exp = 0;
        bool has_q = false;
        if (i < s.size() && (s[i] == '*' || s[i] == 'q')) {
            if (s[i] == '*') {
                ++i;
                if (i >= s.size() || s[i] != 'q') parse_fail(text, "expected q after *");
            }
            ++i;  // consume 'q'
            has_q = true;
            exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string edigits;
                if (i < s.size() && (s[i] == '+' || s[i] == '-')) edigits.push_back(s[i++]);
                if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
                    parse_fail(text, "expected exponent after ^");
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                    edigits.push_back(s[i++]);
                exp = std::stoll(edigits);
            }
        }
        if (digits.empty() && !has_q) parse_fail(text, "term with neither coefficient nor q");
        out.add_term(exp, sign * coeff);
        if (i < s.size() && s[i] != '+' && s[i] != '-')
            parse_fail(text, std::string("unexpected character '") + s[i] + "'");
    }
    return out;
}

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(Int c) {
    IntPoly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& IntPoly::coefficient(long long k) const {
    static const Int kZero = 0;
    if (k < 0 || k >= static_cast<long long>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(k)];
}

IntPoly IntPoly::operator-() const {
    IntPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPoly(std::move(c));
}

std::pair<IntPoly, IntPoly> IntPoly::divmod_monic(const IntPoly& divisor) const {
    if (divisor.is_zero() || divisor.coeffs_.back() != 1)
        throw std::invalid_argument("divmod_monic: divisor must be monic");
    std::vector<Int> rem = coeffs_;
    const long long d = divisor.degree();
    std::vector<Int> quot;
    if (static_cast<long long>(rem.size()) - 1 >= d)
        quot.assign(rem.size() - static_cast<size_t>(d), Int(0));
    for (long long k = static_cast<long long>(rem.size()) - 1 - d; k >= 0; --k) {
        Int factor = rem[static_cast<size_t>(k + d)];
        if (factor == 0) continue;
        quot[static_cast<size_t>(k)] = factor;
        for (long long j = 0; j <= d; ++j)
            rem[static_cast<size_t>(k + j)] -= factor * divisor.coeffs_[static_cast<size_t>(j)];
    }
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

std::string IntPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long long k = degree(); k >= 0; --k) {
        Int c = coeffs_[static_cast<size_t>(k)];
        if (c == 0) continue;
        if (first) {
            if (c < 0) {
                os << '-';
                c = -c;
            }
            first = false;
        } else if (c < 0) {
            os << " - ";
            c = -c;
        } else {
            os << " + ";
        }
        os << c.str();
        if (k != 0) os << "*z^" << k;
    }
    return os.str();
}

IntPoly chebyshev(long long n) {
    if (n < 0) throw std::invalid_argument("chebyshev: n must be nonnegative");
    IntPoly prev = IntPoly::constant(2);  // T_0
    if (n == 0) return prev;
    IntPoly cur = IntPoly::z();  // T_1
    for (long long k = 2; k <= n; ++k) {
        IntPoly next = IntPoly::z() * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

long long euler_phi(long long n) {
    long long result = n;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

IntPoly cyclotomic_polynomial(long long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be >= 1");
    // x^n - 1
    std::vector<Int> c(static_cast<size_t>(n) + 1, Int(0));
    c[0] = -1;
    c[static_cast<size_t>(n)] = 1;
    IntPoly f{std::move(c)};
    for (long long d = 1; d < n; ++d) {
        if (n % d) continue;
        auto [quot, rem] = f.divmod_monic(cyclotomic_polynomial(d));
        if (!rem.is_zero()) throw std::logic_error("cyclotomic_polynomial: inexact division");
        f = std::move(quot);
    }
    return f;
}

// ---------------------------------------------------------------------------
// CyclotomicElem

CyclotomicElem::CyclotomicElem(long long order) : order_(order) {
    if (order < 1) throw std::invalid_argument("CyclotomicElem: order must be >= 1");
}

CyclotomicElem::CyclotomicElem(long long order, std::vector<Int> residue) : order_(order) {
    if (order < 1) throw std::invalid_argument("CyclotomicElem: order must be >= 1");
    IntPoly rem = IntPoly(std::move(residue)).divmod_monic(cyclotomic_polynomial(order)).second;
    residue_ = rem.coefficients();
}

CyclotomicElem CyclotomicElem::one(long long order) { return CyclotomicElem(order, {Int(1)}); }

CyclotomicElem CyclotomicElem::monomial(long long order, const Int& c, long long exp) {
    CyclotomicElem out(order);
    if (c == 0) return out;
    long long e = ((exp % order) + order) % order;
    std::vector<Int> coeffs(static_cast<size_t>(e) + 1, Int(0));
    coeffs[static_cast<size_t>(e)] = c;
    return CyclotomicElem(order, std::move(coeffs));
}

bool CyclotomicElem::is_unit() const {
    if (is_zero()) return false;
    for (long long k = 0; k < order_; ++k) {
        if (*this == monomial(order_, 1, k) || *this == monomial(order_, -1, k)) return true;
    }
    return false;
}

void CyclotomicElem::check_order_match(const CyclotomicElem& a, const CyclotomicElem& b) {
    if (a.order_ != b.order_)
        throw std::invalid_argument("cyclotomic arithmetic: mixed orders " +
                                    std::to_string(a.order_) + " and " + std::to_string(b.order_));
}

CyclotomicElem CyclotomicElem::operator-() const {
    CyclotomicElem out(order_);
    out.residue_ = residue_;
    for (auto& c : out.residue_) c = -c;
    return out;
}

CyclotomicElem operator+(const CyclotomicElem& a, const CyclotomicElem& b) {
    CyclotomicElem::check_order_match(a, b);
    std::vector<Int> c(std::max(a.residue_.size(), b.residue_.size()), Int(0));
    for (size_t i = 0; i < a.residue_.size(); ++i) c[i] += a.residue_[i];
    for (size_t i = 0; i < b.residue_.size(); ++i) c[i] += b.residue_[i];
    return CyclotomicElem(a.order_, std::move(c));
}

CyclotomicElem operator-(const CyclotomicElem& a, const CyclotomicElem& b) { return a + (-b); }

CyclotomicElem operator*(const CyclotomicElem& a, const CyclotomicElem& b) {
    CyclotomicElem::check_order_match(a, b);
    if (a.is_zero() || b.is_zero()) return CyclotomicElem(a.order_);
    std::vector<Int> c(a.residue_.size() + b.residue_.size() - 1, Int(0));
    for (size_t i = 0; i < a.residue_.size(); ++i)
        for (size_t j = 0; j < b.residue_.size(); ++j) c[i + j] += a.residue_[i] * b.residue_[j];
    return CyclotomicElem(a.order_, std::move(c));
}

std::string CyclotomicElem::to_string(bool spaces) const {
    LaurentPoly p;
    for (size_t i = 0; i < residue_.size(); ++i) p.add_term(static_cast<long long>(i), residue_[i]);
    return p.to_string(spaces);
}

CyclotomicElem specialize(const LaurentPoly& p, long long n) {
    if (n < 1) throw std::invalid_argument("specialize: order must be >= 1");
    std::vector<Int> folded(static_cast<size_t>(n), Int(0));
    for (const auto& [exp, c] : p.terms()) folded[static_cast<size_t>(((exp % n) + n) % n)] += c;
    return CyclotomicElem(n, std::move(folded));
}

// ---------------------------------------------------------------------------
// Coeff

Coeff Coeff::zero(const RingCtx& ctx) {
    if (ctx.is_root()) return Coeff(CyclotomicElem(ctx.order));
    return Coeff(LaurentPoly{});
}

Coeff Coeff::one(const RingCtx& ctx) { return integer(ctx, 1); }

Coeff Coeff::integer(const RingCtx& ctx, const Int& v) { return monomial(ctx, v, 0); }

Coeff Coeff::monomial(const RingCtx& ctx, const Int& c, long long exp) {
    if (ctx.is_root()) return Coeff(CyclotomicElem::monomial(ctx.order, c, exp));
    return Coeff(LaurentPoly::monomial(c, exp));
}

Coeff Coeff::from_laurent(const RingCtx& ctx, const LaurentPoly& p) {
    if (ctx.is_root()) return Coeff(specialize(p, ctx.order));
    return Coeff(p);
}

RingCtx Coeff::ctx() const {
    if (const auto* cy = std::get_if<CyclotomicElem>(&value_)) return RingCtx::root(cy->order());
    return RingCtx::generic();
}

bool Coeff::is_zero() const {
    return std::visit([](const auto& v) { return v.is_zero(); }, value_);
}

bool Coeff::is_unit() const {
    return std::visit([](const auto& v) { return v.is_unit(); }, value_);
}

const LaurentPoly& Coeff::laurent() const {
    if (const auto* lp = std::get_if<LaurentPoly>(&value_)) return *lp;
    throw std::invalid_argument("Coeff::laurent: value lives in a root-of-unity ring");
}

const CyclotomicElem& Coeff::cyclotomic() const {
    if (const auto* cy = std::get_if<CyclotomicElem>(&value_)) return *cy;
    throw std::invalid_argument("Coeff::cyclotomic: value lives in the generic ring");
}

void Coeff::check_ctx_match(const Coeff& a, const Coeff& b) {
    if (a.ctx() != b.ctx())
        throw std::invalid_argument("coefficient arithmetic: mixed ring contexts " +
                                    a.ctx().to_string() + " and " + b.ctx().to_string());
}

Coeff Coeff::operator-() const {
    return std::visit([](const auto& v) { return Coeff(-v); }, value_);
}

Coeff operator+(const Coeff& a, const Coeff& b) {
    Coeff::check_ctx_match(a, b);
    if (a.ctx().is_root()) return Coeff(a.cyclotomic() + b.cyclotomic());
    return Coeff(a.laurent() + b.laurent());
}

Coeff operator-(const Coeff& a, const Coeff& b) { return a + (-b); }

Coeff operator*(const Coeff& a, const Coeff& b) {
    Coeff::check_ctx_match(a, b);
    if (a.ctx().is_root()) return Coeff(a.cyclotomic() * b.cyclotomic());
    return Coeff(a.laurent() * b.laurent());
}

bool operator==(const Coeff& a, const Coeff& b) {
    Coeff::check_ctx_match(a, b);
    return a.value_ == b.value_;
}

std::string Coeff::to_string(bool spaces) const {
    return std::visit([spaces](const auto& v) { return v.to_string(spaces); }, value_);
}

Coeff eval_poly(const IntPoly& p, const Coeff& x) {
    const RingCtx ctx = x.ctx();
    Coeff acc = Coeff::zero(ctx);
    for (long long k = p.degree(); k >= 0; --k)
        acc = acc * x + Coeff::integer(ctx, p.coefficient(k));
    return acc;
}

LaurentPoly eval_poly(const IntPoly& p, const LaurentPoly& x) {
    LaurentPoly acc;
    for (long long k = p.degree(); k >= 0; --k)
        acc = acc * x + LaurentPoly::constant(p.coefficient(k));
    return acc;
}

}  // namespace skein
