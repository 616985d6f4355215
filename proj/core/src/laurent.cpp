#include "vlink/laurent.hpp"

#include <cctype>
#include <sstream>

namespace vlink {

LaurentPoly LaurentPoly::monomial(Coeff c, int exp, char var) {
    LaurentPoly p(var);
    p.set(exp, std::move(c));
    return p;
}

LaurentPoly LaurentPoly::loop_value() {
    LaurentPoly p('A');
    p.set(2, -1);
    p.set(-2, -1);
    return p;
}

void LaurentPoly::set(int exp, Coeff c) {
    if (c == 0)
        terms_.erase(exp);
    else
        terms_[exp] = std::move(c);
}

Coeff LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Coeff(0) : it->second;
}

int LaurentPoly::min_exp() const {
    if (terms_.empty()) throw std::logic_error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (terms_.empty()) throw std::logic_error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

static void check_var(char a, char b) {
    if (a != b) throw std::logic_error("mixed-variable polynomial arithmetic");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_var(var_, o.var_);
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    check_var(var_, o.var_);
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_var(var_, o.var_);
    LaurentPoly r(var_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            auto it = r.terms_.find(e1 + e2);
            if (it == r.terms_.end()) {
                r.terms_.emplace(e1 + e2, c1 * c2);
            } else {
                it->second += c1 * c2;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(var_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    return var_ == o.var_ && terms_ == o.terms_;
}

void LaurentPoly::mul_monomial(const Coeff& c, int exp) {
    if (c == 0) {
        terms_.clear();
        return;
    }
    std::map<int, Coeff> out;
    for (auto& [e, v] : terms_) out.emplace(e + exp, v * c);
    terms_ = std::move(out);
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
    LaurentPoly r = one(var_);
    LaurentPoly base = *this;
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

LaurentPoly LaurentPoly::mirror() const {
    LaurentPoly r(var_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

LaurentPoly LaurentPoly::substitute_q_to_A() const {
    if (var_ != 'q') throw std::logic_error("substitute_q_to_A on non-q polynomial");
    LaurentPoly r('A');
    for (const auto& [e, c] : terms_) {
        // q^e = (-1)^e A^(-2e)
        Coeff cc = (e % 2 == 0) ? c : -c;
        auto it = r.terms_.find(-2 * e);
        if (it == r.terms_.end()) {
            if (cc != 0) r.terms_.emplace(-2 * e, cc);
        } else {
            it->second += cc;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

std::string LaurentPoly::text() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Coeff mag = c < 0 ? Coeff(-c) : c;
        if (c < 0)
            out << '-';
        else if (!first)
            out << '+';
        first = false;
        if (e == 0) {
            out << mag;
        } else {
            if (mag != 1) out << mag;
            out << var_;
            if (e != 1) out << '^' << e;
        }
    }
    return out.str();
}

std::optional<LaurentPoly> LaurentPoly::parse(const std::string& s, char var) {
    LaurentPoly p(var);
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip_ws();
    if (i == s.size()) return std::nullopt;
    if (s.compare(i, 1, "0") == 0 && i + 1 == s.size()) return p;
    bool any = false;
    while (true) {
        skip_ws();
        if (i == s.size()) break;
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (any) {
            return std::nullopt;  // terms must be sign-separated
        }
        Coeff mag = -1;  // -1 marks "no explicit coefficient"
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::string digits;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
            mag = Coeff(digits);
        }
        int exp = 0;
        if (i < s.size() && s[i] == var) {
            ++i;
            exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                bool neg = false;
                if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
                if (i == s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
                    return std::nullopt;
                long v = 0;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                    v = v * 10 + (s[i++] - '0');
                    if (v > 1000000) return std::nullopt;
                }
                exp = static_cast<int>(neg ? -v : v);
            }
        } else if (mag == -1) {
            return std::nullopt;  // neither coefficient nor variable
        }
        if (mag == -1) mag = 1;
        p += monomial(sign * mag, exp, var);
        any = true;
    }
    if (!any) return std::nullopt;
    return p;
}

Mod4Class mod4_class(const LaurentPoly& p) {
    Mod4Class m;
    for (const auto& [e, c] : p.terms()) {
        int r = ((e % 4) + 4) % 4;
        if (!m.residue) {
            m.residue = r;
        } else if (*m.residue != r) {
            m.uniform = false;
            m.residue.reset();
            break;
        }
    }
    return m;
}

std::string mod4_text(const Mod4Class& m) {
    if (!m.uniform) return "mixed";
    if (!m.residue) return "uniform (empty)";
    return "uniform " + std::to_string(*m.residue);
}

}  // namespace vlink
