#pragma once

// Exact multivariate polynomials over Q: the carrier of sections of mL.
// Term maps are keyed by exponent vectors in lexicographic order, so
// iteration, printing and leading terms are deterministic.

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "okbody/errors.hpp"
#include "okbody/rational.hpp"

namespace okbody {

using Exp = std::vector<int>;

class MPoly {
public:
    MPoly() = default;
    explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MPoly constant(std::vector<std::string> vars, const Q& c) {
        MPoly p(std::move(vars));
        if (c != 0) p.terms_[Exp(p.vars_.size(), 0)] = c;
        return p;
    }

    static MPoly monomial(std::vector<std::string> vars, Exp e, const Q& c = Q(1)) {
        MPoly p(std::move(vars));
        if (e.size() != p.vars_.size()) throw validation_error("monomial: exponent arity mismatch");
        if (c != 0) p.terms_[std::move(e)] = c;
        return p;
    }

    static MPoly variable(std::vector<std::string> vars, std::size_t index) {
        Exp e(vars.size(), 0);
        e[index] = 1;
        return monomial(std::move(vars), std::move(e));
    }

    // Parses sums of terms like "3*u^2*v - 1/2*w + 7" over the given variables.
    static MPoly parse(const std::string& text, std::vector<std::string> vars);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exp, Q>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t var_count() const { return vars_.size(); }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            (void)c;
            int s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = -1;
        for (const auto& [e, c] : terms_) {
            (void)c;
            int s = 0;
            for (int x : e) s += x;
            if (d < 0) d = s;
            if (s != d) return false;
        }
        return true;
    }

    int min_exponent_of(std::size_t var) const {
        int m = -1;
        for (const auto& [e, c] : terms_) {
            (void)c;
            if (m < 0 || e[var] < m) m = e[var];
        }
        return m < 0 ? 0 : m;
    }

    void add_term(Exp e, const Q& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0) terms_.emplace(std::move(e), c);
            return;
        }
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r(a.vars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exp e = ea;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        }
        return r;
    }
    friend MPoly operator*(const Q& s, const MPoly& a) {
        MPoly r(a.vars_);
        if (s == 0) return r;
        for (const auto& [e, c] : a.terms_) r.terms_[e] = s * c;
        return r;
    }
    friend MPoly operator-(const MPoly& a) { return Q(-1) * a; }
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly pow(int k) const {
        MPoly r = constant(vars_, Q(1));
        for (int i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    // Exact division: quotient if g divides *this, nullopt otherwise.
    std::optional<MPoly> divided_by(const MPoly& g) const {
        if (g.is_zero()) throw validation_error("division by zero polynomial");
        MPoly rem = *this;
        MPoly quot(vars_);
        const auto& glt = *g.terms_.rbegin(); // lex-leading term
        while (!rem.is_zero()) {
            const auto& rlt = *rem.terms_.rbegin();
            Exp e = rlt.first;
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] -= glt.first[i];
                if (e[i] < 0) return std::nullopt;
            }
            Q c = rlt.second / glt.second;
            MPoly m = monomial(vars_, e, c);
            quot = quot + m;
            rem = rem - m * g;
        }
        return quot;
    }

    // Substitutes variable `var` by `value` (a polynomial over target_vars);
    // all other variables must map through `rename` onto target_vars.
    MPoly substitute(const std::vector<MPoly>& images) const {
        if (images.size() != vars_.size()) throw validation_error("substitute: arity mismatch");
        const auto& tvars = images.empty() ? vars_ : images.front().vars_;
        MPoly r(tvars);
        // Power cache per variable keeps repeated exponents cheap.
        std::vector<std::vector<MPoly>> powers(images.size());
        auto power = [&](std::size_t i, int k) -> const MPoly& {
            auto& cache = powers[i];
            if (cache.empty()) cache.push_back(constant(tvars, Q(1)));
            while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
            return cache[static_cast<std::size_t>(k)];
        };
        for (const auto& [e, c] : terms_) {
            MPoly t = constant(tvars, c);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) t = t * power(i, e[i]);
            r = r + t;
        }
        return r;
    }

    // Sets vars_[var] = 1 and removes it from the variable list.
    MPoly dehomogenize(std::size_t var) const {
        std::vector<std::string> tvars;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (i != var) tvars.push_back(vars_[i]);
        MPoly r(tvars);
        for (const auto& [e, c] : terms_) {
            Exp f;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (i != var) f.push_back(e[i]);
            r.add_term(std::move(f), c);
        }
        return r;
    }

    Q eval(const std::vector<Q>& point) const {
        if (point.size() != vars_.size()) throw validation_error("eval: arity mismatch");
        Q s = 0;
        for (const auto& [e, c] : terms_) {
            Q t = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                for (int k = 0; k < e[i]; ++k) t *= point[i];
            s += t;
        }
        return s;
    }

    std::string str() const;

private:
    std::vector<std::string> vars_;
    std::map<Exp, Q> terms_;
};

// Largest k with g^k dividing f exactly.
inline int divisor_order(const MPoly& f, const MPoly& g) {
    if (f.is_zero()) throw validation_error("zero section");
    if (g.is_zero() || g.total_degree() == 0)
        throw validation_error("divisor polynomial must be nonconstant");
    int k = 0;
    MPoly cur = f;
    while (true) {
        auto q = cur.divided_by(g);
        if (!q) return k;
        cur = std::move(*q);
        ++k;
    }
}

// Order of vanishing of a univariate polynomial at t = t0.
inline int order_at(const MPoly& f, const Q& t0) {
    if (f.is_zero()) throw validation_error("order_at: zero polynomial");
    if (f.var_count() != 1) throw validation_error("order_at: univariate input expected");
    if (t0 == 0) return f.min_exponent_of(0);
    MPoly lin = MPoly::variable(f.vars(), 0) - MPoly::constant(f.vars(), t0);
    return divisor_order(f, lin);
}

inline std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Leading (lex-greatest) term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Q a = c;
        if (out.empty()) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            out += q_str(a);
        else if (a == 1)
            out += mono;
        else
            out += q_str(a) + "*" + mono;
    }
    return out;
}

inline MPoly MPoly::parse(const std::string& text, std::vector<std::string> vars) {
    MPoly result(vars);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto parse_uint = [&]() -> std::string {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw parse_error("polynomial: digit expected at position " +
                                            std::to_string(pos) + " in \"" + text + "\"");
        return text.substr(start, pos - start);
    };
    auto parse_name = [&]() -> std::string {
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    };

    skip_ws();
    if (pos == text.size()) throw parse_error("polynomial: empty input");
    bool first = true;
    while (true) {
        skip_ws();
        if (pos == text.size()) break;
        Q sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') sign = -1;
            ++pos;
        } else if (!first) {
            throw parse_error("polynomial: expected '+' or '-' at position " +
                              std::to_string(pos) + " in \"" + text + "\"");
        }
        first = false;

        Q coeff = sign;
        Exp e(vars.size(), 0);
        bool saw_factor = false;
        while (true) {
            skip_ws();
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                std::string num = parse_uint();
                std::string den = "1";
                if (pos < text.size() && text[pos] == '/') {
                    ++pos;
                    den = parse_uint();
                }
                coeff *= q_parse(num + "/" + den);
                saw_factor = true;
            } else if (pos < text.size() &&
                       (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
                std::string name = parse_name();
                auto it = std::find(vars.begin(), vars.end(), name);
                if (it == vars.end())
                    throw parse_error("polynomial: unknown variable \"" + name + "\"");
                int k = 1;
                skip_ws();
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    skip_ws();
                    k = std::stoi(parse_uint());
                }
                e[static_cast<std::size_t>(it - vars.begin())] += k;
                saw_factor = true;
            } else {
                break;
            }
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (!saw_factor)
            throw parse_error("polynomial: term expected at position " + std::to_string(pos) +
                              " in \"" + text + "\"");
        result.add_term(std::move(e), coeff);
    }
    return result;
}

} // namespace okbody
