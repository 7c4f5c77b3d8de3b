#include "hq/scalar.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace hq {

std::string rational_str(const Rational& r) { return r.get_str(); }

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }

UPoly UPoly::monomial(const Rational& c, int degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return UPoly(std::move(v));
}

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool UPoly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

Rational UPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UPoly(std::move(r));
}

UPoly UPoly::operator-() const {
    std::vector<Rational> r(c_);
    for (auto& x : r) x = -x;
    return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return UPoly(std::move(r));
}

UPoly UPoly::scaled(const Rational& s) const {
    if (s == 0) return {};
    std::vector<Rational> r(c_);
    for (auto& x : r) x *= s;
    return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
    if (is_zero()) return {};
    return scaled(1 / lead());
}

Rational UPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
    return acc;
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& quot, UPoly& rem) {
    if (b.is_zero()) throw Error("DivisionByZero", "polynomial division by zero");
    std::vector<Rational> r = a.c_;
    int db = b.degree();
    std::vector<Rational> qv(std::max(0, a.degree() - db + 1));
    Rational inv_lead = 1 / b.lead();
    for (int i = a.degree(); i >= db; --i) {
        if (r[i] == 0) continue;
        Rational f = r[i] * inv_lead;
        qv[i - db] = f;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.c_[j];
    }
    quot = UPoly(std::move(qv));
    rem = UPoly(std::move(r));
}

namespace {

// Integer primitive part of a rational polynomial, positive leading coefficient.
std::vector<mpz_class> primitive_int(const UPoly& p) {
    mpz_class l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> v;
    v.reserve(p.coeffs().size());
    mpz_class g = 0;
    for (const auto& c : p.coeffs()) {
        mpz_class x = c.get_num() * (l / c.get_den());
        v.push_back(x);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    if (g != 0) {
        if (v.back() < 0) g = -g;
        for (auto& x : v) x /= g;
    }
    return v;
}

void trim_int(std::vector<mpz_class>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

void make_primitive(std::vector<mpz_class>& v) {
    mpz_class g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) return;
    if (v.back() < 0) g = -g;
    for (auto& x : v) x /= g;
}

// Pseudo-remainder of a by b (both integer polynomials, b nonzero).
std::vector<mpz_class> pseudo_rem(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
    int db = static_cast<int>(b.size()) - 1;
    const mpz_class& lb = b.back();
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        int da = static_cast<int>(a.size()) - 1;
        mpz_class la = a.back();
        for (auto& x : a) x *= lb;
        for (int j = 0; j <= db; ++j) a[da - db + j] -= la * b[j];
        trim_int(a);
    }
    return a;
}

}  // namespace

UPoly UPoly::gcd(const UPoly& a, const UPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0) return constant(1);
    // Primitive polynomial remainder sequence over Z, content removed each step.
    std::vector<mpz_class> x = primitive_int(a), y = primitive_int(b);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        std::vector<mpz_class> r = pseudo_rem(x, y);
        make_primitive(r);
        x = std::move(y);
        y = std::move(r);
    }
    std::vector<Rational> out;
    out.reserve(x.size());
    for (const auto& v : x) out.emplace_back(v);
    return UPoly(std::move(out)).monic();
}

UPoly UPoly::xgcd(const UPoly& a, const UPoly& b, UPoly& s, UPoly& t) {
    UPoly r0 = a, r1 = b;
    UPoly s0 = constant(1), s1, t0, t1 = constant(1);
    while (!r1.is_zero()) {
        UPoly qt, rm;
        divmod(r0, r1, qt, rm);
        r0 = std::move(r1);
        r1 = std::move(rm);
        UPoly s2 = s0 - qt * s1, t2 = t0 - qt * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) {
        s = UPoly();
        t = UPoly();
        return r0;
    }
    Rational il = 1 / r0.lead();
    s = s0.scaled(il);
    t = t0.scaled(il);
    return r0.scaled(il);
}

std::string UPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[i];
        if (c == 0) continue;
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? "-" : "+");
        }
        first = false;
        if (i == 0) {
            os << rational_str(a);
            continue;
        }
        if (a != 1) os << rational_str(a) << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

// -------------------------------------------------------------- RatFunc

RatFunc::RatFunc() : num_(), den_(UPoly::constant(1)) {}

RatFunc::RatFunc(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("DivisionByZero", "rational function with zero denominator");
    normalize();
}

RatFunc::RatFunc(const Rational& c) : num_(UPoly::constant(c)), den_(UPoly::constant(1)) {}

RatFunc RatFunc::q() { return RatFunc(UPoly::monomial(1, 1), UPoly::constant(1)); }

Rational RatFunc::constant_value() const { return num_.coeff(0) / den_.coeff(0); }

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = UPoly::constant(1);
        return;
    }
    if (den_.degree() > 0) {
        UPoly g = UPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            UPoly r;
            UPoly::divmod(num_, g, num_, r);
            UPoly::divmod(den_, g, den_, r);
        }
    }
    Rational l = den_.lead();
    if (l != 1) {
        Rational il = 1 / l;
        num_ = num_.scaled(il);
        den_ = den_.scaled(il);
    }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (den_.is_one() && o.den_.is_one()) {
        RatFunc r;
        r.num_ = num_ * o.num_;
        return r;
    }
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::inv() const {
    if (is_zero()) throw Error("DivisionByZero", "inverse of zero in Q(q)");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inv(); }

namespace {

int term_count(const UPoly& p) {
    int n = 0;
    for (const auto& c : p.coeffs())
        if (c != 0) ++n;
    return n;
}

}  // namespace

std::string RatFunc::str() const {
    std::string n = num_.str("q");
    if (den_.is_one()) return n;
    std::string d = den_.str("q");
    bool n_atomic = term_count(num_) == 1;
    bool d_atomic = term_count(den_) == 1 && den_.lead() == 1;
    return (n_atomic ? n : "(" + n + ")") + "/" + (d_atomic ? d : "(" + d + ")");
}

// ------------------------------------------------------------ Cyclotomic

const UPoly& cyclotomic_polynomial(int level) {
    static std::mutex mu;
    static std::map<int, UPoly> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(level);
    if (it != cache.end()) return it->second;
    // Phi_l = (t^l - 1) / prod_{d | l, d < l} Phi_d, built bottom-up.
    std::map<int, UPoly> local;
    for (int d = 1; d <= level; ++d) {
        if (level % d) continue;
        UPoly p = UPoly::monomial(1, d) - UPoly::constant(1);
        for (auto& [e, phi] : local) {
            if (d % e == 0 && e < d) {
                UPoly qt, r;
                UPoly::divmod(p, phi, qt, r);
                p = qt;
            }
        }
        local[d] = p;
    }
    return cache.emplace(level, local[level]).first->second;
}

Cyclo::Cyclo(int level, UPoly rep) : level_(level) {
    if (level < 3 || level % 2 == 0)
        throw Error("InvalidLevel", "cyclotomic level must be odd and > 2, got " + std::to_string(level));
    UPoly qt;
    UPoly::divmod(rep, cyclotomic_polynomial(level), qt, rep_);
}

Cyclo::Cyclo(int level, const Rational& c) : Cyclo(level, UPoly::constant(c)) {}

Cyclo Cyclo::zeta(int level) { return Cyclo(level, UPoly::monomial(1, 1)); }

void Cyclo::check_level(const Cyclo& o) const {
    if (level_ != o.level_)
        throw Error("FieldMismatch", "cyclotomic levels " + std::to_string(level_) + " and " +
                                         std::to_string(o.level_));
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
    check_level(o);
    return Cyclo(level_, rep_ + o.rep_);
}

Cyclo Cyclo::operator-() const { return Cyclo(level_, -rep_); }

Cyclo Cyclo::operator-(const Cyclo& o) const {
    check_level(o);
    return Cyclo(level_, rep_ - o.rep_);
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
    check_level(o);
    return Cyclo(level_, rep_ * o.rep_);
}

Cyclo Cyclo::inv() const {
    if (is_zero()) throw Error("DivisionByZero", "inverse of zero in a cyclotomic field");
    UPoly s, t;
    UPoly g = UPoly::xgcd(rep_, cyclotomic_polynomial(level_), s, t);
    if (g.degree() != 0) throw Error("DivisionByZero", "non-invertible cyclotomic element");
    return Cyclo(level_, s);
}

Cyclo Cyclo::operator/(const Cyclo& o) const { return *this * o.inv(); }

std::string Cyclo::str() const { return rep_.str("z"); }

Cyclo specialize(const RatFunc& f, int level) {
    Cyclo num(level, f.num());
    Cyclo den(level, f.den());
    if (den.is_zero())
        throw Error("DenominatorVanishes",
                    "denominator " + f.den().str("q") + " vanishes at zeta_" + std::to_string(level));
    return num * den.inv();
}

// ----------------------------------------------------------------- Field

std::string Field::str() const {
    switch (kind) {
        case Q: return "Q";
        case Qq: return "Q(q)";
        case Cyclotomic: return "Q(zeta_" + std::to_string(level) + ")";
    }
    return "?";
}

Field Field::parse(const std::string& s) {
    if (s == "Q") return rationals();
    if (s == "Q(q)") return rational_functions();
    const std::string pre = "Q(zeta_";
    if (s.rfind(pre, 0) == 0 && s.size() > pre.size() + 1 && s.back() == ')') {
        int l = std::stoi(s.substr(pre.size(), s.size() - pre.size() - 1));
        return cyclotomic(l);
    }
    throw Error("ParseError", "unknown field tag '" + s + "'");
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(const RatFunc& f) {
    if (f.is_constant())
        v_ = f.constant_value();
    else
        v_ = f;
}

Scalar::Scalar(const Cyclo& c) {
    if (c.is_constant())
        v_ = c.rep().coeff(0);
    else
        v_ = c;
}

bool Scalar::is_zero() const { return is_rational() && rational() == 0; }
bool Scalar::is_one() const { return is_rational() && rational() == 1; }

namespace {

[[noreturn]] void mismatch() {
    throw Error("FieldMismatch", "cannot combine Q(q) and cyclotomic scalars");
}

template <class Op>
Scalar combine(const Scalar& a, const Scalar& b, Op op) {
    if (a.is_rational() && b.is_rational()) return Scalar(op(a.rational(), b.rational()));
    if (a.is_ratfunc() || b.is_ratfunc()) {
        if (a.is_cyclo() || b.is_cyclo()) mismatch();
        RatFunc x = a.is_ratfunc() ? a.ratfunc() : RatFunc(a.rational());
        RatFunc y = b.is_ratfunc() ? b.ratfunc() : RatFunc(b.rational());
        return Scalar(op(x, y));
    }
    int l = a.is_cyclo() ? a.cyclo().level() : b.cyclo().level();
    Cyclo x = a.is_cyclo() ? a.cyclo() : Cyclo(l, a.rational());
    Cyclo y = b.is_cyclo() ? b.cyclo() : Cyclo(l, b.rational());
    return Scalar(op(x, y));
}

}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
    if (o.is_zero()) return *this;
    if (is_zero()) return o;
    return combine(*this, o, [](const auto& x, const auto& y) { return x + y; });
}

Scalar Scalar::operator-(const Scalar& o) const {
    if (o.is_zero()) return *this;
    return combine(*this, o, [](const auto& x, const auto& y) { return x - y; });
}

Scalar Scalar::operator-() const {
    return std::visit([](const auto& x) { return Scalar(-x); }, v_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_zero() || o.is_zero()) return Scalar();
    if (o.is_one()) return *this;
    if (is_one()) return o;
    return combine(*this, o, [](const auto& x, const auto& y) { return x * y; });
}

Scalar Scalar::inv() const {
    if (is_zero()) throw Error("DivisionByZero", "inverse of zero");
    if (is_rational()) return Scalar(Rational(1 / rational()));
    if (is_ratfunc()) return Scalar(ratfunc().inv());
    return Scalar(cyclo().inv());
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_one()) return *this;
    return *this * o.inv();
}

Scalar Scalar::pow(long e) const {
    Scalar base = e < 0 ? inv() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Scalar acc(1);
    while (n) {
        if (n & 1) acc *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    if (v_.index() != o.v_.index()) return false;
    if (is_rational()) return rational() == o.rational();
    if (is_ratfunc()) return ratfunc() == o.ratfunc();
    return cyclo() == o.cyclo();
}

std::string Scalar::str() const {
    if (is_rational()) return rational_str(rational());
    if (is_ratfunc()) return ratfunc().str();
    return cyclo().str();
}

Field field_of(const Scalar& s) {
    if (s.is_ratfunc()) return Field::rational_functions();
    if (s.is_cyclo()) return Field::cyclotomic(s.cyclo().level());
    return Field::rationals();
}

// ---------------------------------------------------------------- Parser

namespace {

class ScalarParser {
public:
    ScalarParser(const std::string& s, const Field& f) : s_(s), f_(f) {}

    Scalar run() {
        Scalar v = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) {
        throw Error("ParseError", "scalar '" + s_ + "': " + why);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    Scalar expr() {
        Scalar v = term();
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }
    Scalar term() {
        Scalar v = unary();
        for (;;) {
            if (eat('*'))
                v *= unary();
            else if (eat('/')) {
                Scalar d = unary();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else
                return v;
        }
    }
    Scalar unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    long integer() {
        skip();
        bool neg = false;
        if (pos_ < s_.size() && s_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer exponent");
        long v = std::stol(s_.substr(start, pos_ - start));
        return neg ? -v : v;
    }
    Scalar power() {
        Scalar b = atom();
        if (eat('^')) {
            bool paren = eat('(');
            long e = integer();
            if (paren && !eat(')')) fail("expected ')'");
            return b.pow(e);
        }
        return b;
    }
    Scalar atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Scalar(Rational(mpz_class(s_.substr(start, pos_ - start))));
        }
        if (c == 'q') {
            ++pos_;
            if (f_.kind != Field::Qq) fail("variable q outside Q(q)");
            return Scalar::q();
        }
        if (c == 'z') {
            ++pos_;
            if (f_.kind != Field::Cyclotomic) fail("variable z outside a cyclotomic field");
            return Scalar::zeta(f_.level);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    const std::string& s_;
    Field f_;
    size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(const std::string& text, const Field& field) {
    return ScalarParser(text, field).run();
}

}  // namespace hq
