#include "braidforms/laurent.hpp"

#include <sstream>
#include <vector>

namespace braidforms {

LaurentPoly2 LaurentPoly2::constant(Vars vars, Int c) {
    LaurentPoly2 p(std::move(vars));
    p.add_term(0, 0, std::move(c));
    return p;
}

LaurentPoly2 LaurentPoly2::monomial(Vars vars, Int c, int a, int b) {
    if (vars.univariate() && b != 0)
        throw std::invalid_argument("univariate polynomial cannot carry a second exponent");
    LaurentPoly2 p(std::move(vars));
    p.add_term(a, b, std::move(c));
    return p;
}

bool LaurentPoly2::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0} &&
           terms_.begin()->second == 1;
}

void LaurentPoly2::add_term(int a, int b, Int c) {
    if (c == 0) return;
    auto key = Exponents{a, b};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, std::move(c));
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int LaurentPoly2::var_slot(const std::string& var) const {
    if (var == vars_.x) return 0;
    if (!vars_.y.empty() && var == vars_.y) return 1;
    throw std::invalid_argument("unknown variable '" + var + "'");
}

LaurentPoly2 LaurentPoly2::operator+(const LaurentPoly2& q) const {
    if (vars_ != q.vars_) throw std::invalid_argument("variable mismatch in +");
    LaurentPoly2 r = *this;
    for (const auto& [e, c] : q.terms_) r.add_term(e.first, e.second, c);
    return r;
}

LaurentPoly2 LaurentPoly2::operator-(const LaurentPoly2& q) const {
    if (vars_ != q.vars_) throw std::invalid_argument("variable mismatch in -");
    LaurentPoly2 r = *this;
    for (const auto& [e, c] : q.terms_) r.add_term(e.first, e.second, -c);
    return r;
}

LaurentPoly2 LaurentPoly2::operator-() const {
    LaurentPoly2 r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly2 LaurentPoly2::operator*(const LaurentPoly2& q) const {
    if (vars_ != q.vars_) throw std::invalid_argument("variable mismatch in *");
    LaurentPoly2 r(vars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : q.terms_)
            r.add_term(e1.first + e2.first, e1.second + e2.second, c1 * c2);
    return r;
}

LaurentPoly2 LaurentPoly2::pow(unsigned k) const {
    LaurentPoly2 r = constant(vars_, 1);
    LaurentPoly2 base = *this;
    while (k > 0) {
        if (k & 1u) r = r * base;
        base = base * base;
        k >>= 1u;
    }
    return r;
}

LaurentPoly2 LaurentPoly2::coeff_of(const std::string& var, int k) const {
    int slot = var_slot(var);
    Vars rest = slot == 0 ? Vars{vars_.y.empty() ? vars_.x : vars_.y, ""} : Vars{vars_.x, ""};
    LaurentPoly2 r(rest);
    for (const auto& [e, c] : terms_) {
        int held = slot == 0 ? e.first : e.second;
        int other = slot == 0 ? e.second : e.first;
        if (held == k) r.add_term(other, 0, c);
    }
    return r;
}

LaurentPoly2 LaurentPoly2::substitute_second(const LaurentPoly2& value) const {
    if (vars_.univariate())
        throw std::invalid_argument("substitute_second requires a bivariate polynomial");
    if (!value.vars().univariate() || value.vars().x != vars_.x)
        throw std::invalid_argument("substituted value must be univariate in the first variable");
    Vars out{vars_.x, ""};
    LaurentPoly2 r(out);
    // Group by second-variable exponent, then multiply by value^b.
    std::map<int, LaurentPoly2> slices;
    for (const auto& [e, c] : terms_) {
        auto [it, inserted] = slices.try_emplace(e.second, out);
        it->second.add_term(e.first, 0, c);
    }
    for (const auto& [b, slice] : slices) {
        if (b < 0) throw std::invalid_argument("negative exponent in substitute_second");
        r = r + slice * value.pow(static_cast<unsigned>(b));
    }
    return r;
}

LaurentPoly2 LaurentPoly2::embed(Vars vars, int slot) const {
    if (!vars_.univariate())
        throw std::invalid_argument("embed applies to univariate polynomials");
    if (slot != 0 && slot != 1) throw std::invalid_argument("bad slot");
    LaurentPoly2 r(std::move(vars));
    for (const auto& [e, c] : terms_)
        r.add_term(slot == 0 ? e.first : 0, slot == 1 ? e.first : 0, c);
    return r;
}

std::optional<int> LaurentPoly2::min_exp(const std::string& var) const {
    int slot = var_slot(var);
    std::optional<int> m;
    for (const auto& [e, c] : terms_) {
        int v = slot == 0 ? e.first : e.second;
        if (!m || v < *m) m = v;
    }
    return m;
}

std::optional<int> LaurentPoly2::max_exp(const std::string& var) const {
    int slot = var_slot(var);
    std::optional<int> m;
    for (const auto& [e, c] : terms_) {
        int v = slot == 0 ? e.first : e.second;
        if (!m || v > *m) m = v;
    }
    return m;
}

bool LaurentPoly2::has_negative_exp(const std::string& var) const {
    auto m = min_exp(var);
    return m && *m < 0;
}

namespace {

void render_power(std::ostringstream& out, const std::string& name, int e, bool& first_factor) {
    if (e == 0) return;
    if (!first_factor) out << '*';
    first_factor = false;
    out << name;
    if (e != 1) out << '^' << e;
}

}  // namespace

std::string LaurentPoly2::render() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool first_factor = true;
        if (mag != 1 || (e.first == 0 && e.second == 0)) {
            out << mag.str();
            first_factor = false;
        }
        render_power(out, vars_.x, e.first, first_factor);
        if (!vars_.univariate()) render_power(out, vars_.y, e.second, first_factor);
    }
    return out.str();
}

namespace {

bool looks_like_int(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

int parse_exponent(const std::string& s, size_t& i) {
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw std::invalid_argument("malformed exponent in '" + s + "'");
    return std::stoi(s.substr(start, i - start));
}

}  // namespace

LaurentPoly2 LaurentPoly2::parse(const std::string& text, Vars vars) {
    LaurentPoly2 p(vars);
    std::vector<std::string> tokens;
    {
        std::istringstream in(text);
        std::string tok;
        while (in >> tok) tokens.push_back(tok);
    }
    if (tokens.empty()) throw std::invalid_argument("empty polynomial text");
    if (tokens.size() == 1 && tokens[0] == "0") return p;

    int sign = 1;
    bool expect_term = true;
    for (auto& tok : tokens) {
        if (!expect_term) {
            if (tok == "+") sign = 1;
            else if (tok == "-") sign = -1;
            else throw std::invalid_argument("expected '+' or '-' before '" + tok + "'");
            expect_term = true;
            continue;
        }
        std::string body = tok;
        if (!body.empty() && body[0] == '-') {
            sign = -sign;
            body = body.substr(1);
        }
        // body is a '*'-joined product of an optional integer and powers
        Int coeff = 1;
        int a = 0, b = 0;
        size_t pos = 0;
        bool any = false;
        while (pos < body.size()) {
            size_t star = body.find('*', pos);
            std::string factor = body.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
            pos = star == std::string::npos ? body.size() : star + 1;
            if (factor.empty()) throw std::invalid_argument("empty factor in '" + tok + "'");
            any = true;
            if (looks_like_int(factor)) {
                coeff *= Int(factor);
                continue;
            }
            size_t caret = factor.find('^');
            std::string name = factor.substr(0, caret);
            int e = 1;
            if (caret != std::string::npos) {
                size_t i = caret + 1;
                e = parse_exponent(factor, i);
                if (i != factor.size()) throw std::invalid_argument("trailing junk in '" + factor + "'");
            }
            if (name == vars.x) a += e;
            else if (!vars.y.empty() && name == vars.y) b += e;
            else throw std::invalid_argument("unknown variable '" + name + "'");
        }
        if (!any) throw std::invalid_argument("empty term in polynomial text");
        p.add_term(a, b, sign * coeff);
        sign = 1;
        expect_term = false;
    }
    if (expect_term) throw std::invalid_argument("dangling sign in polynomial text");
    return p;
}

}  // namespace braidforms
