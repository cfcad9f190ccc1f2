#pragma once
/**
 * Exact multivariate Laurent-polynomial arithmetic.
 *
 * Values live in Z[v1^{±1}, ..., vk^{±1}] for a small set of named variables
 * (typically a, q and the two-variable split a1, a2).  Coefficients are
 * arbitrary-precision integers: the identity checks in this library demand
 * exact equality, and composition-product sums can grow intermediate
 * coefficients well past 64 bits.
 *
 * Terms are kept in a canonical descending lexicographic order on exponent
 * vectors (variables ordered by name), so equal polynomials print and compare
 * identically.  Rendering follows the convention
 *
 *     a^-2*q^2 + a^-2*q^-2 - a^-4
 *
 * This header also provides QuotientPoly, the exact quotient num/(q-q^-1)^k
 * used when evaluating invariants of split links; the (a-a^-1)/(q-q^-1)
 * factor per extra component only divides out at the very end (or never, for
 * genuine multi-component links), so the denominator power is carried
 * symbolically and cleared exactly on demand.
 */

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace homfly {

using BigInt = boost::multiprecision::cpp_int;

class Laurent {
public:
    /// Exponent vectors are compared lexicographically, largest first.
    using Exps = std::vector<int>;
    using TermMap = std::map<Exps, BigInt, std::greater<Exps>>;

    Laurent() = default;

    /// Constant polynomial.
    explicit Laurent(BigInt c) {
        if (c != 0) terms_[{}] = std::move(c);
    }
    explicit Laurent(long c) : Laurent(BigInt(c)) {}

    /// Single variable v^1.
    static Laurent var(const std::string& name) { return mono(1, {{name, 1}}); }

    /// v^e.
    static Laurent var_pow(const std::string& name, int e) {
        return mono(1, {{name, e}});
    }

    /// c * prod v_i^{e_i}.
    static Laurent mono(BigInt c,
                        std::initializer_list<std::pair<std::string, int>> ve) {
        Laurent p;
        if (c == 0) return p;
        std::vector<std::pair<std::string, int>> sorted(ve);
        std::sort(sorted.begin(), sorted.end());
        Exps e;
        for (auto& [name, exp] : sorted) {
            if (!p.vars_.empty() && p.vars_.back() == name)
                throw std::invalid_argument("duplicate variable in monomial");
            p.vars_.push_back(name);
            e.push_back(exp);
        }
        p.terms_[std::move(e)] = std::move(c);
        p.compact();
        return p;
    }

    static Laurent zero() { return Laurent(); }
    static Laurent one() { return Laurent(BigInt(1)); }

    bool is_zero() const { return terms_.empty(); }

    /// True if the polynomial is a single term.
    bool is_monomial() const { return terms_.size() == 1; }

    const std::vector<std::string>& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    /// Coefficient of the given exponent assignment (absent variables: 0).
    BigInt coeff(std::initializer_list<std::pair<std::string, int>> ve) const {
        Laurent probe = mono(1, ve);
        Laurent u1 = *this, u2 = probe;
        unify(u1, u2);
        auto it = u1.terms_.find(u2.terms_.begin()->first);
        return it == u1.terms_.end() ? BigInt(0) : it->second;
    }

    Laurent operator-() const {
        Laurent r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
    Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    friend Laurent operator+(Laurent a, Laurent b) {
        unify(a, b);
        for (auto& [e, c] : b.terms_) {
            auto [it, fresh] = a.terms_.try_emplace(e, c);
            if (!fresh && (it->second += c) == 0) a.terms_.erase(it);
        }
        a.compact();
        return a;
    }

    friend Laurent operator-(Laurent a, const Laurent& b) { return a + (-b); }

    friend Laurent operator*(Laurent a, Laurent b) {
        unify(a, b);
        Laurent r;
        r.vars_ = a.vars_;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exps e(ea.size());
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                BigInt prod = ca * cb;
                auto [jt, fresh] = r.terms_.try_emplace(std::move(e), prod);
                if (!fresh && (jt->second += prod) == 0) r.terms_.erase(jt);
            }
        }
        r.compact();
        return r;
    }

    friend Laurent operator*(Laurent a, const BigInt& c) {
        if (c == 0) return Laurent();
        for (auto& [e, cc] : a.terms_) cc *= c;
        return a;
    }
    friend Laurent operator*(const BigInt& c, Laurent a) {
        return std::move(a) * c;
    }

    Laurent pow(int n) const {
        if (n < 0) throw std::invalid_argument("Laurent::pow: negative power");
        Laurent r = one(), base = *this;
        for (; n > 0; n >>= 1) {
            if (n & 1) r *= base;
            if (n > 1) base *= base;
        }
        return r;
    }

    friend bool operator==(Laurent a, Laurent b) {
        unify(a, b);
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Laurent& a, const Laurent& b) {
        return !(a == b);
    }

    /**
     * Substitute variables by signed monomials (coefficient ±1), e.g.
     * a -> a*q, a -> q^n, (a,q) -> (a^-1,q^-1), a -> a1*a2.  Variables not
     * named in the map are left untouched.  Monomial images keep substitution
     * exact even at negative exponents, which is all this library needs.
     */
    Laurent substitute(
        const std::vector<std::pair<std::string, Laurent>>& images) const {
        for (auto& [name, img] : images) {
            (void)name;
            if (!img.is_monomial())
                throw std::invalid_argument(
                    "substitute: image must be a monomial");
            const BigInt& c = img.terms_.begin()->second;
            if (c != 1 && c != -1)
                throw std::invalid_argument(
                    "substitute: image coefficient must be +-1");
        }
        Laurent r;
        for (const auto& [e, c] : terms_) {
            Laurent term(c);
            for (size_t i = 0; i < vars_.size(); ++i) {
                if (e[i] == 0) continue;
                const Laurent* img = nullptr;
                for (auto& [name, im] : images)
                    if (name == vars_[i]) img = &im;
                Laurent factor =
                    img ? monomial_int_pow(*img, e[i])
                        : var_pow(vars_[i], e[i]);
                term *= factor;
            }
            r += term;
        }
        return r;
    }

    /// q - q^-1 in the given variable name.
    static Laurent q_minus_qinv(const std::string& q = "q") {
        return var_pow(q, 1) - var_pow(q, -1);
    }

    /**
     * Exact division by (q - q^-1).  Groups terms by the exponents of every
     * other variable and long-divides each group as a univariate Laurent
     * polynomial in q.  Returns false (leaving `out` untouched) if any group
     * leaves a remainder.
     */
    bool try_divide_q_minus_qinv(Laurent& out, const std::string& q = "q") const {
        if (is_zero()) {
            out = Laurent();
            return true;
        }
        size_t qi = vars_.size();
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == q) qi = i;
        if (qi == vars_.size()) return false;  // no q at all: q^0 coeffs only

        // other-exponents -> (q exponent -> coefficient)
        std::map<Exps, std::map<int, BigInt>> groups;
        for (const auto& [e, c] : terms_) {
            Exps rest = e;
            int qe = rest[qi];
            rest.erase(rest.begin() + static_cast<long>(qi));
            groups[rest][qe] = c;
        }
        Laurent result;
        for (auto& [rest, coeffs] : groups) {
            // Divide sum c_j q^j by (q - q^-1) = q^-1 (q^2 - 1): shift by one,
            // then synthetic-divide the dense coefficient array by (q^2 - 1).
            int lo = coeffs.begin()->first, hi = coeffs.rbegin()->first;
            int n = hi - lo + 1;
            std::vector<BigInt> dense(static_cast<size_t>(n) + 2);
            for (auto& [qe, c] : coeffs) dense[static_cast<size_t>(qe - lo)] = c;
            // quotient degree range: dense (shifted) has degrees 0..n-1 in
            // y = q^{j-lo}; dividing by y^2-1 top-down.
            std::vector<BigInt> quot(static_cast<size_t>(n), 0);
            for (int d = n - 1; d >= 2; --d) {
                BigInt c = dense[static_cast<size_t>(d)];
                if (c == 0) continue;
                quot[static_cast<size_t>(d - 2)] = c;
                dense[static_cast<size_t>(d)] = 0;
                dense[static_cast<size_t>(d - 2)] += c;
            }
            if (dense[0] != 0 || (n > 1 && dense[1] != 0)) return false;
            // reassemble: quotient in y times q^{lo}, then undo the q^-1 of
            // the divisor: net exponent j - 2 + lo + 1.
            for (int d = 0; d + 2 <= n + 1; ++d) {
                const BigInt& c = quot[static_cast<size_t>(d)];
                if (c == 0) continue;
                Laurent t = mono(c, {{q, d + lo + 1}});
                for (size_t i = 0, ri = 0; i < vars_.size(); ++i) {
                    if (i == qi) continue;
                    if (rest[ri] != 0)
                        t *= var_pow(vars_[i], rest[ri]);
                    ++ri;
                }
                result += t;
            }
        }
        out = std::move(result);
        return true;
    }

    /// Render with deterministic term order, e.g. "a^-2*q^2 + a^-2*q^-2 - a^-4".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            BigInt mag = c < 0 ? BigInt(-c) : c;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            std::string body = term_body(e, mag);
            os << body;
        }
        return os.str();
    }

private:
    std::vector<std::string> vars_;  // sorted by name
    TermMap terms_;                  // exponent vector (parallel to vars_) -> coeff

    /// Drop variables whose exponent is 0 in every term.
    void compact() {
        for (size_t i = vars_.size(); i-- > 0;) {
            bool dead = true;
            for (const auto& [e, c] : terms_)
                if (e[i] != 0) { dead = false; break; }
            if (!dead) continue;
            vars_.erase(vars_.begin() + static_cast<long>(i));
            TermMap next;
            for (auto& [e, c] : terms_) {
                Exps e2 = e;
                e2.erase(e2.begin() + static_cast<long>(i));
                next[std::move(e2)] = c;
            }
            terms_ = std::move(next);
        }
    }

    /// Rewrite both polynomials over the union of their variable sets.
    static void unify(Laurent& a, Laurent& b) {
        if (a.vars_ == b.vars_) return;
        std::vector<std::string> u;
        std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(),
                       b.vars_.end(), std::back_inserter(u));
        a.remap(u);
        b.remap(u);
    }

    void remap(const std::vector<std::string>& u) {
        if (vars_ == u) return;
        std::vector<size_t> pos(vars_.size());
        for (size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::lower_bound(u.begin(), u.end(), vars_[i]);
            pos[i] = static_cast<size_t>(it - u.begin());
        }
        TermMap next;
        for (auto& [e, c] : terms_) {
            Exps e2(u.size(), 0);
            for (size_t i = 0; i < e.size(); ++i) e2[pos[i]] = e[i];
            next[std::move(e2)] = c;
        }
        vars_ = u;
        terms_ = std::move(next);
    }

    /// img^e for a single-term img with coefficient ±1 and any integer e.
    static Laurent monomial_int_pow(const Laurent& img, int e) {
        const auto& [exps, c] = *img.terms_.begin();
        Laurent r;
        r.vars_ = img.vars_;
        Exps pe(exps.size());
        for (size_t i = 0; i < pe.size(); ++i) pe[i] = exps[i] * e;
        BigInt pc = (c == -1 && (e % 2 != 0)) ? BigInt(-1) : BigInt(1);
        r.terms_[std::move(pe)] = pc;
        r.compact();
        return r;
    }

    std::string term_body(const Exps& e, const BigInt& mag) const {
        std::vector<std::string> parts;
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            if (e[i] == 1)
                parts.push_back(vars_[i]);
            else
                parts.push_back(vars_[i] + "^" + std::to_string(e[i]));
        }
        std::ostringstream os;
        if (parts.empty()) {
            os << mag;
            return os.str();
        }
        if (mag != 1) os << mag << "*";
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) os << "*";
            os << parts[i];
        }
        return os.str();
    }
};

/**
 * num / (q - q^-1)^denom_pow, kept exact.  Invariants of c-component links
 * produce denominator power c-1 after normalization; knots clear it entirely.
 */
struct QuotientPoly {
    Laurent num;
    int denom_pow = 0;

    QuotientPoly() = default;
    explicit QuotientPoly(Laurent n, int k = 0) : num(std::move(n)), denom_pow(k) {
        if (k < 0) throw std::invalid_argument("QuotientPoly: negative power");
    }

    static QuotientPoly from_laurent(Laurent p) { return QuotientPoly(std::move(p)); }
    static QuotientPoly one() { return QuotientPoly(Laurent::one()); }
    static QuotientPoly zero() { return QuotientPoly(); }

    bool is_zero() const { return num.is_zero(); }

    /// Divide out as many exact (q - q^-1) factors as the denominator holds.
    void normalize() {
        if (num.is_zero()) {
            denom_pow = 0;
            return;
        }
        Laurent q;
        while (denom_pow > 0 && num.try_divide_q_minus_qinv(q)) {
            num = std::move(q);
            --denom_pow;
        }
    }

    /// The value as a genuine Laurent polynomial; throws if division fails.
    Laurent as_laurent() const {
        QuotientPoly c = *this;
        c.normalize();
        if (c.denom_pow != 0)
            throw std::domain_error(
                "QuotientPoly: non-polynomial value (denominator remains)");
        return c.num;
    }

    friend QuotientPoly operator+(const QuotientPoly& a, const QuotientPoly& b) {
        Laurent d = Laurent::q_minus_qinv();
        int k = std::max(a.denom_pow, b.denom_pow);
        QuotientPoly r(a.num * d.pow(k - a.denom_pow) +
                           b.num * d.pow(k - b.denom_pow),
                       k);
        return r;
    }
    friend QuotientPoly operator-(const QuotientPoly& a, const QuotientPoly& b) {
        QuotientPoly nb = b;
        nb.num = -nb.num;
        return a + nb;
    }
    friend QuotientPoly operator*(const QuotientPoly& a, const QuotientPoly& b) {
        return QuotientPoly(a.num * b.num, a.denom_pow + b.denom_pow);
    }
    friend QuotientPoly operator*(const QuotientPoly& a, const Laurent& p) {
        return QuotientPoly(a.num * p, a.denom_pow);
    }
    friend QuotientPoly operator*(const Laurent& p, const QuotientPoly& a) {
        return a * p;
    }

    /// Exact equality of the represented rational values.
    friend bool operator==(const QuotientPoly& a, const QuotientPoly& b) {
        Laurent d = Laurent::q_minus_qinv();
        int k = std::max(a.denom_pow, b.denom_pow);
        return a.num * d.pow(k - a.denom_pow) == b.num * d.pow(k - b.denom_pow);
    }
    friend bool operator!=(const QuotientPoly& a, const QuotientPoly& b) {
        return !(a == b);
    }

    /// Apply a monomial substitution to the numerator only (the denominator
    /// (q-q^-1)^k must not involve substituted variables).
    QuotientPoly substitute(
        const std::vector<std::pair<std::string, Laurent>>& images) const {
        for (auto& [name, img] : images)
            if (name == "q" && denom_pow != 0)
                throw std::invalid_argument(
                    "QuotientPoly::substitute: cannot substitute q under a "
                    "(q-q^-1) denominator");
        return QuotientPoly(num.substitute(images), denom_pow);
    }

    std::string str() const {
        QuotientPoly c = *this;
        c.normalize();
        if (c.denom_pow == 0) return c.num.str();
        std::ostringstream os;
        os << "(" << c.num.str() << ") / (q-q^-1)";
        if (c.denom_pow > 1) os << "^" << c.denom_pow;
        return os.str();
    }
};

}  // namespace homfly
