#pragma once
/**
 * Multivariate polynomials over the two-element field, specialized for the
 * chain-complex work: few variables (at most 8), low degrees, coefficient
 * arithmetic that is pure XOR.
 *
 * A monomial packs eight exponents into one 64-bit word (one byte per
 * variable); a polynomial is a sorted vector of distinct monomials.  Addition
 * is symmetric difference, so a polynomial equals zero exactly when the
 * vector is empty.  All variables share the same internal degree (2 in the
 * q-grading conventions used by the cube complexes), so the internal degree
 * of a monomial is twice its exponent sum.
 */

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace homfly {

/// Packed exponent vector: byte v holds the exponent of variable v.
using Mono = std::uint64_t;

constexpr int kMaxVars = 8;

inline Mono mono_var(int v, int e = 1) {
    if (v < 0 || v >= kMaxVars || e < 0 || e > 255) {
        throw std::invalid_argument("mono_var: variable or exponent out of range");
    }
    return static_cast<Mono>(e) << (8 * v);
}

inline int mono_exp(Mono m, int v) {
    return static_cast<int>((m >> (8 * v)) & 0xff);
}

/// Total exponent sum.
inline int mono_total(Mono m) {
    int s = 0;
    for (int v = 0; v < kMaxVars; ++v) s += mono_exp(m, v);
    return s;
}

/// Product of monomials.  Exponents stay tiny here, so bytes cannot carry.
inline Mono mono_mul(Mono a, Mono b) { return a + b; }

inline bool mono_divides(Mono a, Mono b) {
    for (int v = 0; v < kMaxVars; ++v) {
        if (mono_exp(a, v) > mono_exp(b, v)) return false;
    }
    return true;
}

/// Polynomial over Z2: sorted, duplicate-free monomial list.
class Z2Poly {
public:
    Z2Poly() = default;
    explicit Z2Poly(Mono m) : monos_{m} {}

    static Z2Poly zero() { return {}; }
    static Z2Poly one() { return Z2Poly(Mono{0}); }
    static Z2Poly var(int v, int e = 1) { return Z2Poly(mono_var(v, e)); }

    static Z2Poly from_monos(std::vector<Mono> ms) {
        Z2Poly p;
        std::sort(ms.begin(), ms.end());
        for (Mono m : ms) {
            // XOR semantics: pairs cancel.
            if (!p.monos_.empty() && p.monos_.back() == m) {
                p.monos_.pop_back();
            } else {
                p.monos_.push_back(m);
            }
        }
        return p;
    }

    const std::vector<Mono>& monos() const { return monos_; }
    bool is_zero() const { return monos_.empty(); }
    bool is_one() const { return monos_.size() == 1 && monos_[0] == 0; }

    /// Internal degree (every variable has degree 2) when homogeneous;
    /// throws otherwise.  The zero polynomial reports -1.
    int internal_degree() const {
        if (monos_.empty()) return -1;
        int d = mono_total(monos_[0]);
        for (Mono m : monos_) {
            if (mono_total(m) != d) {
                throw std::invalid_argument("internal_degree: not homogeneous");
            }
        }
        return 2 * d;
    }

    bool homogeneous() const {
        if (monos_.empty()) return true;
        int d = mono_total(monos_[0]);
        for (Mono m : monos_) {
            if (mono_total(m) != d) return false;
        }
        return true;
    }

    friend Z2Poly operator+(const Z2Poly& a, const Z2Poly& b) {
        Z2Poly r;
        std::set_symmetric_difference(a.monos_.begin(), a.monos_.end(),
                                      b.monos_.begin(), b.monos_.end(),
                                      std::back_inserter(r.monos_));
        return r;
    }
    Z2Poly& operator+=(const Z2Poly& o) { return *this = *this + o; }

    friend Z2Poly operator*(const Z2Poly& a, const Z2Poly& b) {
        std::vector<Mono> prod;
        prod.reserve(a.monos_.size() * b.monos_.size());
        for (Mono x : a.monos_)
            for (Mono y : b.monos_) prod.push_back(mono_mul(x, y));
        return from_monos(std::move(prod));
    }
    Z2Poly& operator*=(const Z2Poly& o) { return *this = *this * o; }

    friend bool operator==(const Z2Poly& a, const Z2Poly& b) {
        return a.monos_ == b.monos_;
    }
    friend bool operator!=(const Z2Poly& a, const Z2Poly& b) {
        return !(a == b);
    }
    friend bool operator<(const Z2Poly& a, const Z2Poly& b) {
        return a.monos_ < b.monos_;
    }

    /// Substitute variable v by a polynomial.
    Z2Poly substitute(int v, const Z2Poly& image) const {
        Z2Poly out;
        for (Mono m : monos_) {
            int e = mono_exp(m, v);
            Mono rest = m - mono_var(v, e);
            Z2Poly term(rest);
            for (int i = 0; i < e; ++i) term *= image;
            out += term;
        }
        return out;
    }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (monos_.empty()) return "0";
        std::string s;
        for (size_t i = 0; i < monos_.size(); ++i) {
            if (i) s += " + ";
            s += mono_str(monos_[i], names);
        }
        return s;
    }

    static std::string mono_str(Mono m, const std::vector<std::string>& names) {
        if (m == 0) return "1";
        std::string s;
        for (int v = 0; v < kMaxVars; ++v) {
            int e = mono_exp(m, v);
            if (e == 0) continue;
            if (!s.empty()) s += "*";
            s += v < static_cast<int>(names.size()) ? names[static_cast<size_t>(v)]
                                                    : "X" + std::to_string(v);
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s;
    }

private:
    std::vector<Mono> monos_;
};

}  // namespace homfly
