#pragma once
/**
 * Z2 polynomial rings with linear quotient relations.
 *
 * Every quotient this project needs has the form Z2[X_0..X_{n-1}] / I with I
 * generated by constant-free *linear* polynomials (edge sums at vertices,
 * edge merges at bivalent points).  Such a quotient is itself a polynomial
 * ring on coordinates of the quotient space, so reduction is plain Gaussian
 * elimination: each independent relation eliminates its highest variable,
 * dependent relations drop out.  Low-numbered variables (the marked edge
 * first) survive as the free coordinates.
 */

#include <stdexcept>
#include <string>
#include <vector>

#include "homfly/z2poly.hpp"

namespace homfly {

class RingZ2 {
public:
    RingZ2() = default;

    /// Free polynomial ring on n variables.
    explicit RingZ2(int n_vars, std::vector<std::string> names = {})
        : n_vars_(n_vars), names_(std::move(names)) {
        if (n_vars < 0 || n_vars > kMaxVars) {
            throw std::invalid_argument("RingZ2: variable count out of range");
        }
        init_free();
    }

    /// Quotient by linear, constant-free relations.
    RingZ2(int n_vars, const std::vector<Z2Poly>& relations,
           std::vector<std::string> names = {})
        : RingZ2(n_vars, std::move(names)) {
        for (const Z2Poly& r : relations) add_relation(r);
    }

    int n_vars() const { return n_vars_; }
    const std::vector<int>& free_vars() const { return free_vars_; }
    int n_relations() const { return n_relations_; }

    std::string var_name(int v) const {
        return v < static_cast<int>(names_.size()) ? names_[static_cast<size_t>(v)]
                                                   : "X" + std::to_string(v);
    }

    /// Fold a new linear relation into the elimination data.  Dependent
    /// relations are dropped silently; nonlinear input is rejected.
    void add_relation(const Z2Poly& rel) {
        for (Mono m : rel.monos()) {
            if (mono_total(m) != 1) {
                throw std::invalid_argument(
                    "RingZ2: relations must be linear and constant-free");
            }
        }
        Z2Poly r = reduce(rel);
        if (r.is_zero()) return;
        // Highest variable present becomes the pivot.
        int pivot = -1;
        for (int v = n_vars_ - 1; v >= 0; --v) {
            if (r.substitute(v, Z2Poly::zero()) != r) {
                pivot = v;
                break;
            }
        }
        Z2Poly image = r + Z2Poly::var(pivot);  // pivot = sum of the others
        // Rewrite existing images in terms of the shrunken free set.
        for (int v = 0; v < n_vars_; ++v) {
            subst_[static_cast<size_t>(v)] =
                subst_[static_cast<size_t>(v)].substitute(pivot, image);
        }
        subst_[static_cast<size_t>(pivot)] = image;
        is_free_[static_cast<size_t>(pivot)] = 0;
        ++n_relations_;
        rebuild_free_list();
    }

    /// Canonical form: substitute every eliminated variable.
    Z2Poly reduce(const Z2Poly& p) const {
        Z2Poly out = p;
        for (int v = 0; v < n_vars_; ++v) {
            if (!is_free_[static_cast<size_t>(v)]) {
                out = out.substitute(v, subst_[static_cast<size_t>(v)]);
            }
        }
        return out;
    }

    bool is_reduced_zero(const Z2Poly& p) const { return reduce(p).is_zero(); }

    /// All monomials of the given total exponent in the free variables.
    std::vector<Mono> degree_basis(int total_exp) const {
        std::vector<Mono> out;
        Mono acc = 0;
        gather(0, total_exp, acc, out);
        return out;
    }

private:
    void init_free() {
        subst_.assign(static_cast<size_t>(n_vars_), Z2Poly());
        is_free_.assign(static_cast<size_t>(n_vars_), 1);
        for (int v = 0; v < n_vars_; ++v) {
            subst_[static_cast<size_t>(v)] = Z2Poly::var(v);
        }
        rebuild_free_list();
    }

    void rebuild_free_list() {
        free_vars_.clear();
        for (int v = 0; v < n_vars_; ++v) {
            if (is_free_[static_cast<size_t>(v)]) free_vars_.push_back(v);
        }
    }

    void gather(size_t idx, int remaining, Mono acc,
                std::vector<Mono>& out) const {
        if (idx == free_vars_.size()) {
            if (remaining == 0) out.push_back(acc);
            return;
        }
        if (idx + 1 == free_vars_.size()) {
            out.push_back(mono_mul(acc, mono_var(free_vars_[idx], remaining)));
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            gather(idx + 1, remaining - e,
                   mono_mul(acc, mono_var(free_vars_[idx], e)), out);
        }
    }

    int n_vars_ = 0;
    int n_relations_ = 0;
    std::vector<std::string> names_;
    std::vector<Z2Poly> subst_;
    std::vector<char> is_free_;
    std::vector<int> free_vars_;
};

}  // namespace homfly
