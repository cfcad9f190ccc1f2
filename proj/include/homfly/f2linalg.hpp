#pragma once
/**
 * Dense linear algebra over the two-element field with bit-packed vectors.
 * Everything the homology computations need: rank, kernel bases, and an
 * incremental row space that can express new vectors as combinations of the
 * vectors already inserted (used to project cycles onto homology classes).
 */

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace homfly {

/// Bit vector of fixed length.
class F2Vec {
public:
    F2Vec() = default;
    explicit F2Vec(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }
    bool get(int i) const { return (w_[static_cast<size_t>(i >> 6)] >> (i & 63)) & 1; }
    void set(int i, bool v = true) {
        std::uint64_t bit = std::uint64_t{1} << (i & 63);
        if (v)
            w_[static_cast<size_t>(i >> 6)] |= bit;
        else
            w_[static_cast<size_t>(i >> 6)] &= ~bit;
    }
    void flip(int i) { w_[static_cast<size_t>(i >> 6)] ^= std::uint64_t{1} << (i & 63); }

    bool is_zero() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    F2Vec& operator^=(const F2Vec& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }

    /// Lowest set bit, or -1.
    int first_bit() const {
        for (size_t k = 0; k < w_.size(); ++k) {
            if (w_[k]) {
                return static_cast<int>(k) * 64 + __builtin_ctzll(w_[k]);
            }
        }
        return -1;
    }

    friend bool operator==(const F2Vec& a, const F2Vec& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

/// Matrix as a list of F2Vec rows; acts on column vectors of length cols().
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(int rows, int cols) : cols_(cols), rows_(static_cast<size_t>(rows), F2Vec(cols)) {}

    int rows() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }
    bool get(int r, int c) const { return rows_[static_cast<size_t>(r)].get(c); }
    void set(int r, int c, bool v = true) { rows_[static_cast<size_t>(r)].set(c, v); }
    void flip(int r, int c) { rows_[static_cast<size_t>(r)].flip(c); }
    const F2Vec& row(int r) const { return rows_[static_cast<size_t>(r)]; }

    /// Matrix-vector product (x has length cols()).
    F2Vec apply(const F2Vec& x) const {
        F2Vec y(rows());
        for (int r = 0; r < rows(); ++r) {
            // Parity of the AND of row r with x.
            bool bit = false;
            for (int c = 0; c < cols_; ++c) {
                if (rows_[static_cast<size_t>(r)].get(c) && x.get(c)) bit = !bit;
            }
            if (bit) y.set(r);
        }
        return y;
    }

    int rank() const {
        std::vector<F2Vec> work = rows_;
        int rk = 0;
        for (int c = 0; c < cols_ && rk < static_cast<int>(work.size()); ++c) {
            int piv = -1;
            for (int r = rk; r < static_cast<int>(work.size()); ++r) {
                if (work[static_cast<size_t>(r)].get(c)) {
                    piv = r;
                    break;
                }
            }
            if (piv < 0) continue;
            std::swap(work[static_cast<size_t>(piv)], work[static_cast<size_t>(rk)]);
            for (int r = 0; r < static_cast<int>(work.size()); ++r) {
                if (r != rk && work[static_cast<size_t>(r)].get(c)) {
                    work[static_cast<size_t>(r)] ^= work[static_cast<size_t>(rk)];
                }
            }
            ++rk;
        }
        return rk;
    }

    /// Basis of { x : M x = 0 }.
    std::vector<F2Vec> kernel_basis() const {
        std::vector<F2Vec> work = rows_;
        std::vector<int> pivot_col;
        int rk = 0;
        for (int c = 0; c < cols_ && rk < static_cast<int>(work.size()); ++c) {
            int piv = -1;
            for (int r = rk; r < static_cast<int>(work.size()); ++r) {
                if (work[static_cast<size_t>(r)].get(c)) {
                    piv = r;
                    break;
                }
            }
            if (piv < 0) continue;
            std::swap(work[static_cast<size_t>(piv)], work[static_cast<size_t>(rk)]);
            for (int r = 0; r < static_cast<int>(work.size()); ++r) {
                if (r != rk && work[static_cast<size_t>(r)].get(c)) {
                    work[static_cast<size_t>(r)] ^= work[static_cast<size_t>(rk)];
                }
            }
            pivot_col.push_back(c);
            ++rk;
        }
        std::vector<char> is_pivot(static_cast<size_t>(cols_), 0);
        for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = 1;
        std::vector<F2Vec> basis;
        for (int f = 0; f < cols_; ++f) {
            if (is_pivot[static_cast<size_t>(f)]) continue;
            F2Vec x(cols_);
            x.set(f);
            for (int r = 0; r < rk; ++r) {
                if (work[static_cast<size_t>(r)].get(f)) x.set(pivot_col[static_cast<size_t>(r)]);
            }
            basis.push_back(std::move(x));
        }
        return basis;
    }

private:
    int cols_ = 0;
    std::vector<F2Vec> rows_;
};

/**
 * Incremental row space with combination tracking.  Vectors inserted with
 * `add` become part of the space; `tracked` inserts additionally record a
 * coordinate slot, and `express` later writes any member of the space as a
 * combination of the tracked vectors (coordinates of the projection to the
 * quotient by the untracked span).
 */
class F2RowSpace {
public:
    explicit F2RowSpace(int n, int max_tracked = 0)
        : n_(n), aug_(max_tracked) {}

    /// Insert an untracked vector; returns true if it enlarged the space.
    bool add(const F2Vec& v) { return insert(v, -1); }

    /// Insert a tracked vector with the given coordinate index.
    bool add_tracked(const F2Vec& v, int slot) { return insert(v, slot); }

    int dim() const { return static_cast<int>(rows_.size()); }

    /**
     * Reduce v against the space.  Returns {residue, coords}: residue is
     * zero iff v lies in the span, and coords marks which tracked slots
     * occur in the combination.
     */
    std::pair<F2Vec, F2Vec> express(const F2Vec& v) const {
        F2Vec main = v, aug(aug_ > 0 ? aug_ : 1);
        for (size_t r = 0; r < rows_.size(); ++r) {
            int p = pivots_[r];
            if (main.get(p)) {
                main ^= rows_[r];
                aug ^= augs_[r];
            }
        }
        return {main, aug};
    }

private:
    bool insert(const F2Vec& v, int slot) {
        F2Vec main = v, aug(aug_ > 0 ? aug_ : 1);
        if (slot >= 0) aug.set(slot);
        for (size_t r = 0; r < rows_.size(); ++r) {
            int p = pivots_[r];
            if (main.get(p)) {
                main ^= rows_[r];
                aug ^= augs_[r];
            }
        }
        int p = main.first_bit();
        if (p < 0) return false;
        rows_.push_back(std::move(main));
        augs_.push_back(std::move(aug));
        pivots_.push_back(p);
        return true;
    }

    int n_;
    int aug_;
    std::vector<F2Vec> rows_;
    std::vector<F2Vec> augs_;
    std::vector<int> pivots_;
};

}  // namespace homfly
