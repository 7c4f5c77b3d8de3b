#include "hq/ncpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hq {

int MonomialOrder::weight(const Word& w) const {
    if (weights_.empty()) return static_cast<int>(w.size());
    int s = 0;
    for (Letter l : w) s += weights_[l];
    return s;
}

bool MonomialOrder::less(const Word& a, const Word& b) const {
    int wa = weight(a), wb = weight(b);
    if (wa != wb) return wa < wb;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

NCPoly::NCPoly(const Scalar& c) {
    if (!c.is_zero()) t_.emplace(Word{}, c);
}

NCPoly NCPoly::word(const Word& w, const Scalar& c) {
    NCPoly p;
    if (!c.is_zero()) p.t_.emplace(w, c);
    return p;
}

Scalar NCPoly::coeff(const Word& w) const {
    auto it = t_.find(w);
    return it == t_.end() ? Scalar() : it->second;
}

int NCPoly::degree() const {
    int d = -1;
    for (const auto& [w, c] : t_) d = std::max(d, static_cast<int>(w.size()));
    return d;
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.emplace(w, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.t_) add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.t_) add_term(w, -c);
    return *this;
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
    NCPoly r = *this;
    r += o;
    return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
    NCPoly r = *this;
    r -= o;
    return r;
}

NCPoly NCPoly::operator-() const {
    NCPoly r;
    for (const auto& [w, c] : t_) r.t_.emplace(w, -c);
    return r;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
    NCPoly r;
    for (const auto& [a, ca] : t_)
        for (const auto& [b, cb] : o.t_) r.add_term(concat(a, b), ca * cb);
    return r;
}

NCPoly NCPoly::operator*(const Scalar& s) const {
    if (s.is_zero()) return {};
    NCPoly r;
    for (const auto& [w, c] : t_) r.t_.emplace(w, c * s);
    return r;
}

const Word& NCPoly::leading(const MonomialOrder& ord) const {
    if (t_.empty()) throw Error("ZeroPolynomial", "leading word of zero");
    const Word* best = nullptr;
    for (const auto& [w, c] : t_)
        if (!best || ord.less(*best, w)) best = &w;
    return *best;
}

Word concat(const Word& a, const Word& b) {
    Word w;
    w.reserve(a.size() + b.size());
    w.insert(w.end(), a.begin(), a.end());
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

std::string word_str(const Word& w, const std::vector<std::string>& names) {
    if (w.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += "*";
        s += names.at(w[i]);
    }
    return s;
}

namespace {

bool plain_number(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

std::string NCPoly::str(const std::vector<std::string>& names, const MonomialOrder& ord) const {
    if (t_.empty()) return "0";
    std::vector<const std::pair<const Word, Scalar>*> terms;
    for (const auto& e : t_) terms.push_back(&e);
    std::sort(terms.begin(), terms.end(), [&](auto* a, auto* b) { return ord.less(b->first, a->first); });
    std::ostringstream os;
    bool first = true;
    for (auto* e : terms) {
        const Word& w = e->first;
        Scalar c = e->second;
        bool neg = c.is_rational() && c.rational() < 0;
        if (neg) c = -c;
        std::string cs = c.str();
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        bool simple = c.is_rational() && plain_number(cs);
        std::string coef = simple ? cs : "(" + cs + ")";
        if (w.empty())
            os << coef;
        else if (c.is_one())
            os << word_str(w, names);
        else
            os << coef << "*" << word_str(w, names);
    }
    return os.str();
}

// ---------------------------------------------------------------- parser

namespace {

class PolyParser {
public:
    PolyParser(const std::string& s, const std::vector<std::string>& names, const Field& f)
        : s_(s), names_(names), f_(f) {}

    NCPoly run() {
        NCPoly v = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) {
        throw Error("ParseError", "polynomial '" + s_ + "' at " + std::to_string(pos_) + ": " + why);
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
    NCPoly expr() {
        NCPoly v = term();
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }
    NCPoly term() {
        NCPoly v = unary();
        for (;;) {
            if (eat('*')) {
                v = v * unary();
            } else if (eat('/')) {
                NCPoly d = unary();
                if (d.is_zero() || d.degree() > 0) fail("division by a non-scalar");
                v = v * d.constant_term().inv();
            } else {
                return v;
            }
        }
    }
    NCPoly unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    NCPoly power() {
        NCPoly b = atom();
        if (!eat('^')) return b;
        bool paren = eat('(');
        skip();
        bool neg = eat('-');
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected exponent");
        long e = std::stol(s_.substr(start, pos_ - start));
        if (paren && !eat(')')) fail("expected ')'");
        if (neg) {
            if (b.degree() > 0 || b.is_zero()) fail("negative power of a non-scalar");
            return NCPoly(b.constant_term().pow(-e));
        }
        NCPoly acc(Scalar(1));
        for (long i = 0; i < e; ++i) acc = acc * b;
        return acc;
    }
    NCPoly atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            NCPoly v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return NCPoly(Scalar(Rational(mpz_class(s_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string id = s_.substr(start, pos_ - start);
            for (size_t i = 0; i < names_.size(); ++i)
                if (names_[i] == id) return NCPoly::gen(static_cast<Letter>(i));
            if (id == "q" && f_.kind == Field::Qq) return NCPoly(Scalar::q());
            if (id == "z" && f_.kind == Field::Cyclotomic) return NCPoly(Scalar::zeta(f_.level));
            fail("unknown symbol '" + id + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    const std::string& s_;
    const std::vector<std::string>& names_;
    Field f_;
    size_t pos_ = 0;
};

}  // namespace

NCPoly parse_ncpoly(const std::string& text, const std::vector<std::string>& names, const Field& field) {
    return PolyParser(text, names, field).run();
}

}  // namespace hq
