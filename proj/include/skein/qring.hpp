#pragma once

// Exact coefficient arithmetic: Laurent polynomials in q over the integers,
// specialization at a primitive N-th root of unity (quotient by the N-th
// cyclotomic polynomial), and Chebyshev polynomials of type 2.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace skein {

using Int = boost::multiprecision::cpp_int;

/// Which coefficient ring a computation runs in. Fixed once per computation;
/// operations on values from different contexts are rejected.
struct RingCtx {
    enum class Mode { Generic, Root };

    Mode mode = Mode::Generic;
    long long order = 0;  // N when mode == Root

    static RingCtx generic() { return RingCtx{}; }
    static RingCtx root(long long n) {
        if (n < 1) throw std::invalid_argument("RingCtx::root: order must be >= 1");
        return RingCtx{Mode::Root, n};
    }

    bool is_root() const { return mode == Mode::Root; }
    std::string to_string() const;

    friend bool operator==(const RingCtx&, const RingCtx&) = default;
};

/// Sparse Laurent polynomial in q with arbitrary-precision integer
/// coefficients. Canonical form: no stored coefficient is zero, so equality
/// is structural.
class LaurentPoly {
public:
    LaurentPoly() = default;  // zero

    static LaurentPoly constant(Int c);
    static LaurentPoly monomial(Int c, long long exp);  // c * q^exp
    static LaurentPoly q() { return monomial(1, 1); }
    static LaurentPoly one() { return constant(1); }

    bool is_zero() const { return terms_.empty(); }
    /// Units of Z[q^(+/-1)] are exactly the monomials +/- q^k.
    bool is_unit() const;
    /// (exponent, sign) when the value is +/- q^k, nullopt otherwise.
    std::optional<std::pair<long long, int>> as_unit() const;

    const std::map<long long, Int>& terms() const { return terms_; }
    Int coefficient(long long exp) const;
    void add_term(long long exp, const Int& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// Canonical text form, e.g. "-1*q^3 + 2*q^-1". Constants print bare,
    /// zero prints "0". parse() accepts anything to_string() emits.
    std::string to_string(bool spaces = true) const;
    static LaurentPoly parse(std::string_view text);

private:
    std::map<long long, Int> terms_;  // exponent -> nonzero coefficient
};

/// Dense one-variable integer polynomial in z.
class IntPoly {
public:
    IntPoly() = default;  // zero
    explicit IntPoly(std::vector<Int> coeffs);  // ascending powers, trimmed

    static IntPoly constant(Int c);
    static IntPoly z() { return IntPoly({0, 1}); }

    bool is_zero() const { return coeffs_.empty(); }
    long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }
    const Int& coefficient(long long k) const;
    const std::vector<Int>& coefficients() const { return coeffs_; }

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly&, const IntPoly&);
    friend IntPoly operator-(const IntPoly&, const IntPoly&);
    friend IntPoly operator*(const IntPoly&, const IntPoly&);
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    /// Quotient and remainder by a monic divisor (exact over Z).
    std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& divisor) const;

    std::string to_string() const;  // e.g. "1*z^3 - 3*z^1"

private:
    void trim();
    std::vector<Int> coeffs_;
};

/// T_0 = 2, T_1 = z, T_n = z T_{n-1} - T_{n-2}.
IntPoly chebyshev(long long n);

/// N-th cyclotomic polynomial, computed by exact division of x^N - 1 by the
/// cyclotomic polynomials of the proper divisors of N.
IntPoly cyclotomic_polynomial(long long n);

long long euler_phi(long long n);

/// Element of Z[q] / (Phi_N(q)): the image of q is a primitive N-th root of
/// unity, so the quotient is an integral domain and q^N = 1.
class CyclotomicElem {
public:
    explicit CyclotomicElem(long long order);  // zero
    CyclotomicElem(long long order, std::vector<Int> residue);  // reduces

    long long order() const { return order_; }
    const std::vector<Int>& residue() const { return residue_; }

    static CyclotomicElem one(long long order);
    /// +/- q^exp, exponent taken mod N then reduced mod Phi_N.
    static CyclotomicElem monomial(long long order, const Int& c, long long exp);

    bool is_zero() const { return residue_.empty(); }
    /// Recognizes the monomial units +/- q^k (the images of the units of
    /// Z[q^(+/-1)]); other units of Z[zeta_N] are not searched for.
    bool is_unit() const;

    CyclotomicElem operator-() const;
    friend CyclotomicElem operator+(const CyclotomicElem&, const CyclotomicElem&);
    friend CyclotomicElem operator-(const CyclotomicElem&, const CyclotomicElem&);
    friend CyclotomicElem operator*(const CyclotomicElem&, const CyclotomicElem&);
    friend bool operator==(const CyclotomicElem&, const CyclotomicElem&) = default;

    /// Residue printed in the Laurent text format (exponents 0..phi(N)-1).
    std::string to_string(bool spaces = true) const;

private:
    static void check_order_match(const CyclotomicElem&, const CyclotomicElem&);
    long long order_;
    std::vector<Int> residue_;  // degree < phi(N), trimmed
};

/// Image of p under q -> primitive N-th root of unity.
CyclotomicElem specialize(const LaurentPoly& p, long long n);

/// Coefficient value in the ring selected by a RingCtx. Immutable after
/// construction; mixing contexts throws std::invalid_argument.
class Coeff {
public:
    Coeff() : value_(LaurentPoly{}) {}
    explicit Coeff(LaurentPoly p) : value_(std::move(p)) {}
    explicit Coeff(CyclotomicElem c) : value_(std::move(c)) {}

    static Coeff zero(const RingCtx& ctx);
    static Coeff one(const RingCtx& ctx);
    static Coeff integer(const RingCtx& ctx, const Int& v);
    static Coeff monomial(const RingCtx& ctx, const Int& c, long long exp);
    /// Embeds a generic polynomial, specializing when the context is a root
    /// of unity.
    static Coeff from_laurent(const RingCtx& ctx, const LaurentPoly& p);

    RingCtx ctx() const;
    bool is_zero() const;
    bool is_unit() const;

    const LaurentPoly& laurent() const;
    const CyclotomicElem& cyclotomic() const;

    Coeff operator-() const;
    friend Coeff operator+(const Coeff&, const Coeff&);
    friend Coeff operator-(const Coeff&, const Coeff&);
    friend Coeff operator*(const Coeff&, const Coeff&);
    friend bool operator==(const Coeff&, const Coeff&);

    std::string to_string(bool spaces = true) const;

private:
    static void check_ctx_match(const Coeff&, const Coeff&);
    std::variant<LaurentPoly, CyclotomicElem> value_;
};

/// Substitutes x for z and evaluates in the context ring of x.
Coeff eval_poly(const IntPoly& p, const Coeff& x);
LaurentPoly eval_poly(const IntPoly& p, const LaurentPoly& x);

}  // namespace skein
