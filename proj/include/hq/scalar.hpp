#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "hq/error.hpp"

namespace hq {

using Rational = mpq_class;

std::string rational_str(const Rational& r);

// Dense univariate polynomial over Q, c[i] is the coefficient of t^i.
// Trailing zeros are never stored, so the zero polynomial has no coefficients.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);
    static UPoly constant(const Rational& c);
    static UPoly monomial(const Rational& c, int degree);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    const Rational& lead() const { return c_.back(); }
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator-() const;
    UPoly operator*(const UPoly& o) const;
    UPoly scaled(const Rational& s) const;
    bool operator==(const UPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    UPoly monic() const;
    Rational eval(const Rational& x) const;
    std::string str(const std::string& var) const;

    static void divmod(const UPoly& a, const UPoly& b, UPoly& quot, UPoly& rem);
    static UPoly gcd(const UPoly& a, const UPoly& b);
    // s*a + t*b = g with g = gcd(a, b) monic.
    static UPoly xgcd(const UPoly& a, const UPoly& b, UPoly& s, UPoly& t);

private:
    void trim();
    std::vector<Rational> c_;
};

// Element of Q(q): numerator/denominator coprime, denominator monic.
class RatFunc {
public:
    RatFunc();
    RatFunc(UPoly num, UPoly den);
    explicit RatFunc(const Rational& c);
    static RatFunc q();

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    Rational constant_value() const;

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc inv() const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string str() const;

private:
    void normalize();
    UPoly num_, den_;
};

// The l-th cyclotomic polynomial Phi_l over Q.
const UPoly& cyclotomic_polynomial(int level);

// Element of Q(zeta_l), l odd and > 2, stored reduced modulo Phi_l.
class Cyclo {
public:
    Cyclo(int level, UPoly rep);
    Cyclo(int level, const Rational& c);
    static Cyclo zeta(int level);

    int level() const { return level_; }
    const UPoly& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }
    bool is_constant() const { return rep_.degree() <= 0; }

    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator-() const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo operator/(const Cyclo& o) const;
    Cyclo inv() const;
    bool operator==(const Cyclo& o) const { return level_ == o.level_ && rep_ == o.rep_; }

    std::string str() const;

private:
    void check_level(const Cyclo& o) const;
    int level_;
    UPoly rep_;
};

// Evaluate f at zeta_level. Throws DenominatorVanishes when den(zeta) = 0.
Cyclo specialize(const RatFunc& f, int level);

struct Field {
    enum Kind { Q, Qq, Cyclotomic };
    Kind kind = Q;
    int level = 0;

    static Field rationals() { return {Q, 0}; }
    static Field rational_functions() { return {Qq, 0}; }
    static Field cyclotomic(int l) { return {Cyclotomic, l}; }
    std::string str() const;
    static Field parse(const std::string& s);
    bool operator==(const Field& o) const { return kind == o.kind && level == o.level; }
};

// Runtime-tagged exact scalar. Rational values mix freely with either
// extension field; mixing Q(q) with a cyclotomic field is an error.
class Scalar {
public:
    Scalar() : v_(Rational(0)) {}
    Scalar(long v) : v_(Rational(v)) {}
    Scalar(int v) : v_(Rational(v)) {}
    Scalar(const Rational& r) : v_(r) {}
    Scalar(const RatFunc& f);
    Scalar(const Cyclo& c);

    static Scalar q() { return Scalar(RatFunc::q()); }
    static Scalar zeta(int level) { return Scalar(Cyclo::zeta(level)); }
    static Scalar frac(long n, long d) {
        Rational r(n, d);
        r.canonicalize();
        return Scalar(r);
    }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    const Rational& rational() const { return std::get<Rational>(v_); }
    bool is_ratfunc() const { return std::holds_alternative<RatFunc>(v_); }
    const RatFunc& ratfunc() const { return std::get<RatFunc>(v_); }
    bool is_cyclo() const { return std::holds_alternative<Cyclo>(v_); }
    const Cyclo& cyclo() const { return std::get<Cyclo>(v_); }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
    Scalar inv() const;
    Scalar pow(long e) const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Canonical exact text: "3/2", "(q^2-1)/(q+1)", "z^2+z+1" (cyclotomic in z).
    std::string str() const;

private:
    std::variant<Rational, RatFunc, Cyclo> v_;
};

// Parses the text produced by Scalar::str. The field fixes the meaning of
// the variable: q in Q(q), z in Q(zeta_l); plain Q admits no variable.
Scalar parse_scalar(const std::string& text, const Field& field);

// Smallest field containing the scalar (Q when it is rational).
Field field_of(const Scalar& s);

}  // namespace hq
