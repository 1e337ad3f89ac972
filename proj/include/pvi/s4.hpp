#pragma once
/**
 * The S₄ symmetry of the four-parameter curve family.
 *
 * Three involutive generators act simultaneously on the plane coordinates
 * (λ, t) by birational substitutions and on coefficient quadruples by slot
 * permutations:
 *
 *   x1: (λ,t) ↦ (1−λ, 1−t)            (q₀,q₁,q₂,q₃) ↦ (q₀,q₂,q₁,q₃)
 *   x2: (λ,t) ↦ (1/λ, 1/t)            (q₀,q₁,q₂,q₃) ↦ (q₁,q₀,q₂,q₃)
 *   x3: (λ,t) ↦ ((t−λ)/(t−1), t/(t−1)) (q₀,q₁,q₂,q₃) ↦ (q₀,q₃,q₂,q₁)
 *
 * The three slot transpositions generate the full symmetric group on the
 * four coefficient slots (24 elements).  Words act left-to-right, and the
 * λ-substitution of x3 mixes λ and t, so curve transforms substitute both
 * coordinates simultaneously.  The defining equivariance is
 *
 *   transform_curve(g, N_β) ∼ N_{quadruple_action(g, β)}   (up to unit).
 */

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "pvi/curve.hpp"
#include "pvi/multipoly.hpp"
#include "pvi/polyops.hpp"
#include "pvi/rational.hpp"
#include "pvi/ratfunc.hpp"

namespace pvi {

/**
 * A symmetry element: the slot permutation it induces (result[i] = q[perm[i]])
 * and its canonical word over the generator digits '1','2','3' (shortest,
 * then lexicographically least; "" is the identity).
 */
struct S4Element {
    std::array<int, 4> perm{0, 1, 2, 3};
    std::string word;

    bool operator==(const S4Element& o) const { return perm == o.perm; }
    bool operator!=(const S4Element& o) const { return perm != o.perm; }
    bool operator<(const S4Element& o) const { return perm < o.perm; }

    bool is_identity() const { return perm == std::array<int, 4>{0, 1, 2, 3}; }

    /// Multiplicative order, read off the cycle structure.
    int order() const {
        std::array<bool, 4> seen{};
        int result = 1;
        for (int i = 0; i < 4; ++i) {
            if (seen[i]) continue;
            int len = 0, j = i;
            while (!seen[j]) {
                seen[j] = true;
                j = perm[j];
                ++len;
            }
            result = result / std::gcd(result, len) * len;
        }
        return result;
    }
};

/// Slot permutation of generator g ∈ {1, 2, 3}.
inline std::array<int, 4> generator_perm(int g) {
    switch (g) {
        case 1: return {0, 2, 1, 3};
        case 2: return {1, 0, 2, 3};
        case 3: return {0, 3, 2, 1};
    }
    throw AlgebraError("generator_perm: generator must be 1, 2 or 3");
}

/**
 * The coordinate substitutions of generator g as a pair of Möbius maps
 * (λ-map, t-map); the λ-map of x3 has coefficients involving t.
 */
inline std::pair<MobiusMap, MobiusMap> generator_maps(
    int g, const RatFunc& t = RatFunc::var("t")) {
    const RatFunc one(Rational(1));
    const RatFunc zero;
    switch (g) {
        case 1:
            return {MobiusMap(-one, one, zero, one),
                    MobiusMap(-one, one, zero, one)};
        case 2:
            return {MobiusMap(zero, one, one, zero),
                    MobiusMap(zero, one, one, zero)};
        case 3:
            return {MobiusMap(-one, t, zero, t - one),
                    MobiusMap(one, zero, one, -one)};
    }
    throw AlgebraError("generator_maps: generator must be 1, 2 or 3");
}

/**
 * The full 24-element group, enumerated once by breadth-first search over
 * generator words; every element carries its canonical word.
 */
class S4Group {
public:
    static const S4Group& instance() {
        static const S4Group group;
        return group;
    }

    /// All 24 elements, identity first, ordered by (word length, word).
    const std::vector<S4Element>& elements() const { return elements_; }

    const S4Element& identity() const { return elements_.front(); }

    S4Element generator(int g) const {
        return element_by_perm(generator_perm(g));
    }

    /// Canonical element of an arbitrary word over the digits 1..3.
    S4Element from_word(const std::string& word) const {
        std::array<int, 4> p{0, 1, 2, 3};
        for (char c : word) {
            if (c < '1' || c > '3')
                throw AlgebraError("from_word: bad generator digit");
            p = composed(p, generator_perm(c - '0'));
        }
        return element_by_perm(p);
    }

    /// a then b (left-to-right composition).
    S4Element compose(const S4Element& a, const S4Element& b) const {
        return element_by_perm(composed(a.perm, b.perm));
    }

    S4Element inverse(const S4Element& a) const {
        std::array<int, 4> inv{};
        for (int i = 0; i < 4; ++i) inv[a.perm[i]] = i;
        return element_by_perm(inv);
    }

    S4Element element_by_perm(const std::array<int, 4>& p) const {
        auto it = index_.find(p);
        if (it == index_.end())
            throw AlgebraError("element_by_perm: not a permutation of 0..3");
        return elements_[it->second];
    }

private:
    S4Group() {
        std::map<std::array<int, 4>, std::string> canon;
        std::deque<std::array<int, 4>> queue;
        const std::array<int, 4> id{0, 1, 2, 3};
        canon[id] = "";
        queue.push_back(id);
        while (!queue.empty()) {
            const auto p = queue.front();
            queue.pop_front();
            for (int g = 1; g <= 3; ++g) {
                const auto q = composed(p, generator_perm(g));
                if (canon.find(q) == canon.end()) {
                    canon[q] = canon[p] + static_cast<char>('0' + g);
                    queue.push_back(q);
                }
            }
        }
        for (const auto& [p, w] : canon) {
            S4Element e;
            e.perm = p;
            e.word = w;
            elements_.push_back(e);
        }
        std::sort(elements_.begin(), elements_.end(),
                  [](const S4Element& a, const S4Element& b) {
                      if (a.word.size() != b.word.size())
                          return a.word.size() < b.word.size();
                      return a.word < b.word;
                  });
        for (std::size_t i = 0; i < elements_.size(); ++i)
            index_[elements_[i].perm] = i;
    }

    /// Apply a then b on quadruple slots: (a·b)[i] = a[b[i]].
    static std::array<int, 4> composed(const std::array<int, 4>& a,
                                       const std::array<int, 4>& b) {
        std::array<int, 4> r{};
        for (int i = 0; i < 4; ++i) r[i] = a[b[i]];
        return r;
    }

    std::vector<S4Element> elements_;
    std::map<std::array<int, 4>, std::size_t> index_;
};

/// Slot permutation action on a quadruple (α or β alike).
inline Quadruple quadruple_action(const S4Element& g, const Quadruple& q) {
    return Quadruple(q[g.perm[0]], q[g.perm[1]], q[g.perm[2]], q[g.perm[3]]);
}

namespace detail {

/// Strip at most `max_power` factors of f from p (the copies introduced by
/// denominator clearing; genuine extra copies in p are left alone).
inline MultiPoly strip_cleared_factor(MultiPoly p, const MultiPoly& f,
                                      int max_power) {
    for (int i = 0; i < max_power && divides(f, p); ++i) p = exact_divide(p, f);
    return p;
}

/// One generator step of a curve transform: substitute both coordinates
/// simultaneously, clear denominators, cancel spurious denominator factors,
/// and return the primitive part.  Pure polynomial arithmetic throughout.
inline MultiPoly transform_curve_step(int g, const MultiPoly& P) {
    const auto [lmap, tmap] = generator_maps(g);
    const RatFunc limage = lmap.applied_to("lambda");
    const RatFunc timage = tmap.applied_to("t");

    // Rename both coordinates first so the two substitutions cannot
    // interfere, then clear each denominator in turn.
    MultiPoly work = P.rename("lambda", "lsub").rename("t", "tsub");
    const auto [c1, e1] = work.substitute_cleared("lsub", limage.num(),
                                                  limage.den());
    const auto [c2, e2] = c1.substitute_cleared("tsub", timage.num(),
                                                timage.den());
    MultiPoly cleared = c2;
    if (cleared.is_zero())
        throw AlgebraError("transform_curve: degenerate substitution");
    if (!limage.den().is_constant())
        cleared = strip_cleared_factor(cleared, limage.den().unit_normalized(),
                                       e1);
    if (!timage.den().is_constant())
        cleared = strip_cleared_factor(cleared, timage.den().unit_normalized(),
                                       e2);
    return cleared.unit_normalized();
}

}  // namespace detail

/**
 * Image of the curve P(λ,t) = 0 under a symmetry element: the generator
 * substitutions of its word are applied left-to-right, both coordinates
 * simultaneously, clearing denominators and taking the primitive part after
 * each step.
 */
inline MultiPoly transform_curve(const S4Element& g, MultiPoly P) {
    for (char c : g.word) P = detail::transform_curve_step(c - '0', P);
    return P;
}

/// A subgroup given by its elements and an isomorphism-type label.
struct Subgroup {
    std::vector<S4Element> elements;
    std::string label;
};

/**
 * Isomorphism-type label from the order and the multiset of element orders
 * (sufficient to distinguish every subgroup of the 24-element group):
 * 1, S2, Z3, S2xS2 / Z4, S3, D4, A4, S4.
 */
inline std::string subgroup_label(const std::vector<S4Element>& elements) {
    const std::size_t n = elements.size();
    switch (n) {
        case 1: return "1";
        case 2: return "S2";
        case 3: return "Z3";
        case 4: {
            bool has4 = false;
            for (const auto& e : elements)
                if (e.order() == 4) has4 = true;
            return has4 ? "Z4" : "S2xS2";
        }
        case 6: return "S3";
        case 8: return "D4";
        case 12: return "A4";
        case 24: return "S4";
    }
    throw AlgebraError("subgroup_label: size " + std::to_string(n) +
                       " is not a subgroup order here");
}

inline Subgroup make_subgroup(std::vector<S4Element> elements) {
    std::sort(elements.begin(), elements.end(),
              [](const S4Element& a, const S4Element& b) {
                  if (a.word.size() != b.word.size())
                      return a.word.size() < b.word.size();
                  return a.word < b.word;
              });
    Subgroup s;
    s.label = subgroup_label(elements);
    s.elements = std::move(elements);
    return s;
}

/// {g : transform_curve(g, P) equals P up to unit}.
inline Subgroup stabilizer_of_curve(const MultiPoly& P) {
    const MultiPoly ref = P.unit_normalized();
    std::vector<S4Element> result;
    for (const auto& g : S4Group::instance().elements())
        if (transform_curve(g, P).unit_normalized() == ref)
            result.push_back(g);
    return make_subgroup(std::move(result));
}

/// {g : quadruple_action(g, α) = α} (pointwise).
inline Subgroup stabilizer_of_alpha(const AlphaQuadruple& alpha) {
    std::vector<S4Element> result;
    for (const auto& g : S4Group::instance().elements())
        if (quadruple_action(g, alpha) == alpha) result.push_back(g);
    return make_subgroup(std::move(result));
}

/// {g : g permutes the given set of quadruples}.
inline Subgroup set_stabilizer(const std::vector<Quadruple>& set) {
    std::vector<S4Element> result;
    for (const auto& g : S4Group::instance().elements()) {
        bool closed = true;
        for (const auto& q : set) {
            const Quadruple image = quadruple_action(g, q);
            bool found = false;
            for (const auto& r : set)
                if (image == r) found = true;
            if (!found) {
                closed = false;
                break;
            }
        }
        if (closed) result.push_back(g);
    }
    return make_subgroup(std::move(result));
}

/// Distinct unit-normalized images of P under the full group.
inline std::vector<MultiPoly> curve_orbit(const MultiPoly& P) {
    std::vector<MultiPoly> orbit;
    for (const auto& g : S4Group::instance().elements()) {
        const MultiPoly image = transform_curve(g, P).unit_normalized();
        bool found = false;
        for (const auto& q : orbit)
            if (q == image) found = true;
        if (!found) orbit.push_back(image);
    }
    return orbit;
}

/// Distinct images of a quadruple under the full group.
inline std::vector<Quadruple> quadruple_orbit(const Quadruple& q) {
    std::vector<Quadruple> orbit;
    for (const auto& g : S4Group::instance().elements()) {
        const Quadruple image = quadruple_action(g, q);
        bool found = false;
        for (const auto& r : orbit)
            if (r == image) found = true;
        if (!found) orbit.push_back(image);
    }
    return orbit;
}

}  // namespace pvi
