/**
 * @file linalg.hpp
 * @brief Exact linear algebra over an arbitrary field (rationals or rational
 *        functions): reduced row echelon form, affine linear-system solving,
 *        and canonical-form affine subspaces of rational 4-space.
 *
 * The affine-subspace canonical form (directions in reduced echelon with
 * leading 1s, base point zeroed on pivot coordinates) makes structural
 * equality semantic equality, which the table audits rely on.
 */
#pragma once

#include <pvi/ratfunc.hpp>

#include <optional>
#include <string>
#include <vector>

namespace pvi {

template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& x) { return x == 0; }
};

template <>
struct FieldTraits<RatFunc> {
    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(Rational(1)); }
    static bool is_zero(const RatFunc& x) { return x.is_zero(); }
};

/**
 * In-place reduced row echelon form over field F.
 * Returns the pivot column of each surviving nonzero row, top to bottom;
 * zero rows are removed.
 */
template <class F>
inline std::vector<int> rref(std::vector<std::vector<F>>& rows) {
    using T = FieldTraits<F>;
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    const int ncols = static_cast<int>(rows[0].size());
    int r = 0;
    for (int c = 0; c < ncols && r < static_cast<int>(rows.size()); ++c) {
        int sel = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (!T::is_zero(rows[i][c])) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(rows[r], rows[sel]);
        const F inv = T::one() / rows[r][c];
        for (int j = c; j < ncols; ++j) rows[r][j] = rows[r][j] * inv;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == r || T::is_zero(rows[i][c])) continue;
            const F factor = rows[i][c];
            for (int j = c; j < ncols; ++j)
                rows[i][j] = rows[i][j] - factor * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(pivots.size());
    return pivots;
}

/// Solution of A·x = b: one particular solution plus a nullspace basis.
template <class F>
struct LinearSolution {
    std::vector<F> particular;
    std::vector<std::vector<F>> nullspace;
};

/**
 * Solve the affine system A·x = b exactly over F.
 * Returns std::nullopt when inconsistent.  Free variables are set to zero in
 * the particular solution; the nullspace basis has one vector per free
 * variable (unit in that coordinate).
 */
template <class F>
inline std::optional<LinearSolution<F>> solve_linear(
    const std::vector<std::vector<F>>& A, const std::vector<F>& b) {
    using T = FieldTraits<F>;
    if (A.size() != b.size())
        throw AlgebraError("solve_linear: shape mismatch");
    const int n = A.empty() ? 0 : static_cast<int>(A[0].size());
    std::vector<std::vector<F>> aug = A;
    for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    std::vector<int> pivots = rref(aug);
    for (int p : pivots)
        if (p == n) return std::nullopt;  // row (0 ... 0 | 1): inconsistent
    LinearSolution<F> sol;
    sol.particular.assign(n, T::zero());
    std::vector<bool> is_pivot(n, false);
    for (size_t r = 0; r < pivots.size(); ++r) {
        is_pivot[pivots[r]] = true;
        sol.particular[pivots[r]] = aug[r][n];
    }
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        std::vector<F> dir(n, T::zero());
        dir[c] = T::one();
        for (size_t r = 0; r < pivots.size(); ++r)
            dir[pivots[r]] = T::zero() - aug[r][c];
        sol.nullspace.push_back(std::move(dir));
    }
    return sol;
}

/**
 * An affine subspace of rational d-space in canonical form, or the empty
 * set.  Canonical form: direction vectors are the reduced-echelon basis of
 * the direction space (leading entries 1, pivot columns cleared, ordered by
 * pivot), and the base point has zero entries in all pivot coordinates.
 * Structural equality is set equality.
 */
class AffineSubspace {
  public:
    /// The empty subspace (no solutions).
    static AffineSubspace empty_space() { return AffineSubspace(); }

    /// A single point.
    static AffineSubspace point(std::vector<Rational> base) {
        return AffineSubspace(std::move(base), {});
    }

    AffineSubspace(std::vector<Rational> base,
                   std::vector<std::vector<Rational>> directions)
        : empty_(false), base_(std::move(base)), dirs_(std::move(directions)) {
        for (const auto& d : dirs_)
            if (d.size() != base_.size())
                throw AlgebraError("AffineSubspace: dimension mismatch");
        canonicalize();
    }

    bool is_empty() const { return empty_; }
    /// Dimension of the direction space; -1 for the empty set.
    int dimension() const {
        return empty_ ? -1 : static_cast<int>(dirs_.size());
    }
    int ambient_dimension() const {
        return empty_ ? 0 : static_cast<int>(base_.size());
    }
    const std::vector<Rational>& base() const { return base_; }
    const std::vector<std::vector<Rational>>& directions() const {
        return dirs_;
    }

    bool operator==(const AffineSubspace& o) const {
        if (empty_ != o.empty_) return false;
        if (empty_) return true;
        return base_ == o.base_ && dirs_ == o.dirs_;
    }
    bool operator!=(const AffineSubspace& o) const { return !(*this == o); }

    bool contains(const std::vector<Rational>& pt) const {
        if (empty_ || pt.size() != base_.size()) return false;
        std::vector<Rational> v(pt.size());
        for (size_t i = 0; i < pt.size(); ++i) v[i] = pt[i] - base_[i];
        reduce_against_dirs(v);
        for (const auto& x : v)
            if (x != 0) return false;
        return true;
    }

    /// Is every point of `o` a point of this subspace?
    bool contains_subspace(const AffineSubspace& o) const {
        if (o.empty_) return true;
        if (empty_) return false;
        if (!contains(o.base_)) return false;
        for (const auto& d : o.dirs_) {
            std::vector<Rational> v = d;
            reduce_against_dirs(v);
            for (const auto& x : v)
                if (x != 0) return false;
        }
        return true;
    }

    /**
     * Render with the direction coefficients as parameter letters a, b, c,
     * ... — e.g. "(a, 1/8, a, a)" for a line.  Used by reports and goldens.
     */
    std::string pattern_string() const {
        if (empty_) return "(empty)";
        static const char* kLetters[] = {"a", "b", "c", "d"};
        std::string out = "(";
        for (size_t i = 0; i < base_.size(); ++i) {
            if (i) out += ", ";
            std::string entry;
            if (base_[i] != 0) entry = to_string(base_[i]);
            for (size_t k = 0; k < dirs_.size(); ++k) {
                const Rational c = dirs_[k][i];
                if (c == 0) continue;
                const char* letter = k < 4 ? kLetters[k] : "?";
                std::string term;
                if (c == 1)
                    term = letter;
                else if (c == -1)
                    term = std::string("-") + letter;
                else
                    term = to_string(c) + "*" + letter;
                if (entry.empty())
                    entry = term;
                else if (!term.empty() && term[0] == '-')
                    entry += " - " + term.substr(1);
                else
                    entry += " + " + term;
            }
            if (entry.empty()) entry = "0";
            out += entry;
        }
        return out + ")";
    }

  private:
    AffineSubspace() : empty_(true) {}

    bool empty_;
    std::vector<Rational> base_;
    std::vector<std::vector<Rational>> dirs_;

    void canonicalize() {
        std::vector<int> pivots = rref(dirs_);
        for (size_t r = 0; r < pivots.size(); ++r) {
            const Rational c = base_[pivots[r]];
            if (c == 0) continue;
            for (size_t j = 0; j < base_.size(); ++j)
                base_[j] -= c * dirs_[r][j];
        }
    }

    void reduce_against_dirs(std::vector<Rational>& v) const {
        for (const auto& d : dirs_) {
            size_t pivot = 0;
            while (pivot < d.size() && d[pivot] == 0) ++pivot;
            if (pivot == d.size()) continue;
            const Rational c = v[pivot];
            if (c == 0) continue;
            for (size_t j = 0; j < v.size(); ++j) v[j] -= c * d[j];
        }
    }
};

/// Smallest affine subspace containing all the given points.
inline AffineSubspace affine_span(
    const std::vector<std::vector<Rational>>& points) {
    if (points.empty()) return AffineSubspace::empty_space();
    std::vector<std::vector<Rational>> dirs;
    for (size_t i = 1; i < points.size(); ++i) {
        std::vector<Rational> d(points[i].size());
        for (size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
        dirs.push_back(std::move(d));
    }
    return AffineSubspace(points[0], std::move(dirs));
}

}  // namespace pvi
