#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hq/scalar.hpp"

namespace hq {

using Letter = uint16_t;
using Word = std::vector<Letter>;

// Weighted degree first, then lexicographic comparison of letter indices
// (a proper prefix is smaller). With unit weights this is deg-lex.
class MonomialOrder {
public:
    MonomialOrder() = default;
    explicit MonomialOrder(std::vector<int> weights) : weights_(std::move(weights)) {}
    int weight(const Word& w) const;
    bool less(const Word& a, const Word& b) const;
    const std::vector<int>& weights() const { return weights_; }

private:
    std::vector<int> weights_;  // empty means all weights are 1
};

// Finite linear combination of words. Zero coefficients are never stored.
class NCPoly {
public:
    using Terms = std::map<Word, Scalar>;

    NCPoly() = default;
    NCPoly(const Scalar& c);
    static NCPoly word(const Word& w, const Scalar& c = Scalar(1));
    static NCPoly gen(Letter g, const Scalar& c = Scalar(1)) { return word(Word{g}, c); }

    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    const Terms& terms() const& { return t_; }
    Terms terms() && { return std::move(t_); }
    Scalar coeff(const Word& w) const;
    Scalar constant_term() const { return coeff(Word{}); }
    int degree() const;  // word length; -1 for zero

    void add_term(const Word& w, const Scalar& c);
    NCPoly operator+(const NCPoly& o) const;
    NCPoly operator-(const NCPoly& o) const;
    NCPoly operator-() const;
    NCPoly operator*(const NCPoly& o) const;
    NCPoly operator*(const Scalar& s) const;
    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    bool operator==(const NCPoly& o) const { return t_ == o.t_; }
    bool operator!=(const NCPoly& o) const { return !(*this == o); }

    // Leading word under the order; requires a nonzero polynomial.
    const Word& leading(const MonomialOrder& ord) const;

    // Text form such as "X11*X22 - (q)*X12*X21 - 1", largest terms first.
    std::string str(const std::vector<std::string>& names, const MonomialOrder& ord = {}) const;

private:
    Terms t_;
};

Word concat(const Word& a, const Word& b);
std::string word_str(const Word& w, const std::vector<std::string>& names);

// Parses a noncommutative polynomial over the given generator names.
// Scalars follow parse_scalar; juxtaposition is not multiplication, use '*'.
NCPoly parse_ncpoly(const std::string& text, const std::vector<std::string>& names, const Field& field);

}  // namespace hq
