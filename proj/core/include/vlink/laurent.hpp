#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace vlink {

using Coeff = boost::multiprecision::cpp_int;

// Laurent polynomial with exact integer coefficients in a single variable.
// The variable tag ('A' for brackets, 'q' for graded ranks) travels with the
// value; mixing tags in arithmetic is a logic error.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(char var) : var_(var) {}

    static LaurentPoly monomial(Coeff c, int exp, char var = 'A');
    static LaurentPoly zero(char var = 'A') { return LaurentPoly(var); }
    static LaurentPoly one(char var = 'A') { return monomial(1, 0, var); }
    // d = -A^2 - A^-2, the loop value
    static LaurentPoly loop_value();

    char var() const { return var_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<int, Coeff>& terms() const { return terms_; }
    Coeff coeff(int exp) const;
    int min_exp() const;  // throws on zero poly
    int max_exp() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const;

    // multiply by c * var^exp in place
    void mul_monomial(const Coeff& c, int exp);
    LaurentPoly pow(unsigned n) const;

    // var -> var^-1
    LaurentPoly mirror() const;
    // for q-polynomials: substitute q = -A^-2, yielding an A-polynomial
    LaurentPoly substitute_q_to_A() const;

    // canonical text, exponents descending: "A^7+A^3+A^-1-A^-9", "1", "0"
    std::string text() const;
    // parses the canonical grammar (signs, optional integer coefficient,
    // optional variable with optional ^exponent); returns nullopt on error
    static std::optional<LaurentPoly> parse(const std::string& s, char var = 'A');

private:
    void set(int exp, Coeff c);
    char var_ = 'A';
    std::map<int, Coeff> terms_;  // exp -> coeff, zero coeffs never stored
};

// mod-4 residue classification of the exponent support
struct Mod4Class {
    bool uniform = true;
    std::optional<int> residue;  // 0..3; empty for the zero polynomial
    bool operator==(const Mod4Class&) const = default;
};
Mod4Class mod4_class(const LaurentPoly& p);
std::string mod4_text(const Mod4Class& m);

}  // namespace vlink
