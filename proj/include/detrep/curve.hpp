#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "detrep/frobenius.hpp"
#include "detrep/linform.hpp"
#include "detrep/unipoly.hpp"

#include <type_traits>

// Restriction of determinantal representations to parametrized rational
// curves, rank profiles over the parameter line, saturated image/kernel
// sheaf bases, and the reconstruction pipeline producing the two
// candidate bundles of a representation together with the transpose
// disambiguation.

namespace detrep {

/// Affine parametrization t -> (f_1(t), ..., f_g(t)) of a rational curve
/// inside the ambient space of the linear forms. Coordinates must not
/// all vanish and must not share a nonconstant factor.
template <class K>
class ParamCurve {
  public:
    explicit ParamCurve(std::vector<UniPoly<K>> coords) : coords_(std::move(coords)) {
        UniPoly<K> g;
        for (const auto& c : coords_) {
            if (c.is_zero()) continue;
            g = g.is_zero() ? c.monic() : unipoly_gcd(g, c);
        }
        if (g.is_zero()) throw PreconditionError("curve with identically zero coordinates");
        if (g.degree() > 0) throw PreconditionError("curve coordinates share a nonconstant factor");
    }

    std::size_t ambient() const { return coords_.size(); }
    const std::vector<UniPoly<K>>& coords() const { return coords_; }

    std::size_t degree() const {
        int d = 0;
        for (const auto& c : coords_) d = std::max(d, c.degree());
        return static_cast<std::size_t>(d);
    }

    std::vector<K> evaluate(const K& t) const {
        std::vector<K> p(coords_.size());
        for (std::size_t i = 0; i < coords_.size(); ++i) p[i] = coords_[i].evaluate(t);
        return p;
    }

  private:
    std::vector<UniPoly<K>> coords_;
};

/// Finite list of exact ambient points standing in for sampled curve
/// points; no zero vectors, pairwise projectively distinct.
template <class K>
class PointCloudCurve {
  public:
    explicit PointCloudCurve(std::vector<std::vector<K>> points) : points_(std::move(points)) {
        for (const auto& p : points_) {
            if (points_.empty() || p.size() != points_.front().size())
                throw DimensionMismatch("point cloud with mixed ambient dimensions");
            bool nonzero = false;
            for (const auto& x : p) nonzero = nonzero || !x.is_zero();
            if (!nonzero) throw PreconditionError("point cloud contains the zero vector");
        }
        for (std::size_t a = 0; a < points_.size(); ++a)
            for (std::size_t b = a + 1; b < points_.size(); ++b)
                if (projectively_equal(points_[a], points_[b]))
                    throw PreconditionError("point cloud contains projectively equal points");
    }

    static bool projectively_equal(const std::vector<K>& u, const std::vector<K>& v) {
        for (std::size_t i = 0; i < u.size(); ++i)
            for (std::size_t j = 0; j < u.size(); ++j)
                if (u[i] * v[j] != u[j] * v[i]) return false;
        return true;
    }

    std::size_t ambient() const { return points_.empty() ? 0 : points_.front().size(); }
    const std::vector<std::vector<K>>& points() const { return points_; }

  private:
    std::vector<std::vector<K>> points_;
};

/// Pullback of the matrix of forms along the parametrization; restricting
/// then evaluating at t equals evaluating the forms at the curve point.
template <class K>
Matrix<UniPoly<K>> restrict_to_param_curve(const LinFormMatrix<K>& m, const ParamCurve<K>& c) {
    if (m.ambient() != c.ambient()) throw DimensionMismatch("curve ambient mismatch");
    Matrix<UniPoly<K>> r(m.size(), m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            r(i, j) = m.at(i, j).compose(c.coords());
    return r;
}

/// Substitutes the curve coordinates into a multivariate polynomial.
template <class K>
UniPoly<K> compose_with_curve(const MultiPoly<K>& f, const std::vector<UniPoly<K>>& coords) {
    if (f.nvars() != coords.size()) throw DimensionMismatch("curve ambient mismatch");
    UniPoly<K> acc;
    for (const auto& [e, c] : f.terms()) {
        UniPoly<K> term = UniPoly<K>::constant(c);
        for (std::size_t i = 0; i < coords.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) term = term * coords[i];
        acc += term;
    }
    return acc;
}

/// True iff the determinant hypersurface pulls back to zero along the
/// curve, i.e. the curve lies inside it.
template <class K>
bool containment_check(const LinFormMatrix<K>& m, const ParamCurve<K>& c) {
    if (m.ambient() != c.ambient()) throw DimensionMismatch("curve ambient mismatch");
    return compose_with_curve(determinant_hypersurface(m), c.coords()).is_zero();
}

template <class K>
Matrix<K> evaluate_matrix(const Matrix<UniPoly<K>>& m, const K& t) {
    Matrix<K> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = m(i, j).evaluate(t);
    return r;
}

template <class K>
Matrix<RatFunc<K>> lift_to_ratfunc(const Matrix<UniPoly<K>>& m) {
    Matrix<RatFunc<K>> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = RatFunc<K>(m(i, j));
    return r;
}

/// Rank over the rational function field.
template <class K>
std::size_t generic_rank(const Matrix<UniPoly<K>>& m) {
    return mat_rank(lift_to_ratfunc(m));
}

/// Cofactor-expansion determinant of a square polynomial matrix.
template <class K>
UniPoly<K> unipoly_det(const Matrix<UniPoly<K>>& m) {
    if (!m.is_square()) throw DimensionMismatch("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) throw DimensionMismatch("determinant of empty matrix");
    if (n == 1) return m(0, 0);
    UniPoly<K> acc;
    std::vector<std::size_t> rest;
    for (std::size_t i = 1; i < n; ++i) rest.push_back(i);
    std::vector<std::size_t> cols(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = j;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        std::vector<std::size_t> sub_cols;
        for (std::size_t c = 0; c < n; ++c)
            if (c != j) sub_cols.push_back(c);
        const UniPoly<K> minor = unipoly_det(m.submatrix(rest, sub_cols));
        const UniPoly<K> contrib = m(0, j) * minor;
        acc = (j % 2 == 0) ? acc + contrib : acc - contrib;
    }
    return acc;
}

/// Monic gcd of all k x k minors; the zero polynomial when every minor
/// vanishes identically.
template <class K>
UniPoly<K> minor_gcd(const Matrix<UniPoly<K>>& m, std::size_t k) {
    UniPoly<K> g;
    subsetdetail::for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
        if (g.is_one()) return;
        subsetdetail::for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
            if (g.is_one()) return;
            const UniPoly<K> d = unipoly_det(m.submatrix(rows, cols));
            if (d.is_zero()) return;
            g = g.is_zero() ? d.monic() : unipoly_gcd(g, d);
        });
    });
    return g;
}

namespace moddetail {

template <class K>
struct ModSplit {
    UniPoly<K> f1, f2;
};

template <class K>
struct ModEchelon {
    std::size_t rank = 0;
    Matrix<UniPoly<K>> reduced;          // rref over the quotient ring
    std::vector<std::size_t> pivot_cols; // per echelon row
};

/// Row reduction of m over the quotient ring F[t]/(d), reporting a proper
/// factor split when a zero divisor shows up (dynamic evaluation).
template <class K>
std::variant<ModSplit<K>, ModEchelon<K>> eliminate_mod(const Matrix<UniPoly<K>>& m,
                                                       const UniPoly<K>& d) {
    internal_check(d.degree() >= 1, "quotient modulus must be nonconstant");
    Matrix<UniPoly<K>> w(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            w(i, j) = unipoly_divmod(m(i, j), d).second;

    auto reduce = [&](const UniPoly<K>& f) { return unipoly_divmod(f, d).second; };

    ModEchelon<K> ech;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        UniPoly<K> inv;
        bool found = false;
        for (; p < m.rows(); ++p) {
            const UniPoly<K>& u = w(p, col);
            if (u.is_zero()) continue;
            auto [g, s, t_cof] = unipoly_xgcd(u, d);
            (void)t_cof;
            if (g.degree() == 0) { // unit: s * u = 1 mod d
                inv = reduce(s);
                found = true;
                break;
            }
            // 0 < deg g < deg d since u is reduced and nonzero
            auto [q, r] = unipoly_divmod(d, g);
            internal_check(r.is_zero(), "zero-divisor gcd must divide the modulus");
            return ModSplit<K>{g, q.monic()};
        }
        if (!found) continue;
        if (p != row) w.swap_rows(p, row);
        for (std::size_t j = col; j < m.cols(); ++j) w(row, j) = reduce(w(row, j) * inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || w(i, col).is_zero()) continue;
            const UniPoly<K> f = w(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                w(i, j) = reduce(w(i, j) - f * w(row, j));
        }
        ech.pivot_cols.push_back(col);
        ++row;
    }
    ech.rank = row;
    ech.reduced = std::move(w);
    return ech;
}

} // namespace moddetail

/// Rank of m at the roots of d, computed by elimination over F[t]/(d).
/// The modulus may split into factors with different ranks; each final
/// factor is reported separately.
template <class K>
std::vector<std::pair<UniPoly<K>, std::size_t>> rank_mod(const Matrix<UniPoly<K>>& m,
                                                         const UniPoly<K>& d) {
    auto res = moddetail::eliminate_mod(m, d);
    if (auto* split = std::get_if<moddetail::ModSplit<K>>(&res)) {
        auto left = rank_mod(m, split->f1);
        auto right = rank_mod(m, split->f2);
        left.insert(left.end(), right.begin(), right.end());
        return left;
    }
    return {{d.monic(), std::get<moddetail::ModEchelon<K>>(res).rank}};
}

/// Rank profile: the generic rank over the function field together with
/// the locus where it drops, read off the gcd of the maximal nonvanishing
/// minors.
template <class K>
struct RankProfile {
    std::size_t generic_rank = 0;
    std::vector<std::pair<UniPoly<K>, std::size_t>> drop_locus; // (monic factor, rank at its roots)
};

namespace curvedetail {

template <class K>
int cmp_unipoly(const UniPoly<K>& a, const UniPoly<K>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = a.degree(); i >= 0; --i) {
        const K ca = a.coeff_at(static_cast<std::size_t>(i));
        const K cb = b.coeff_at(static_cast<std::size_t>(i));
        if (ca != cb) return ca < cb ? -1 : 1;
    }
    return 0;
}

} // namespace curvedetail

template <class K>
RankProfile<K> rank_profile(const Matrix<UniPoly<K>>& m) {
    RankProfile<K> profile;
    profile.generic_rank = generic_rank(m);
    const std::size_t k = profile.generic_rank;
    if (k == 0) return profile;

    UniPoly<K> g = minor_gcd(m, k);
    internal_check(!g.is_zero(), "maximal minors cannot all vanish at the generic rank");
    if (g.degree() == 0) return profile;
    g = squarefree_part(g);

    UniPoly<K> opaque = g;
    if constexpr (std::is_same_v<K, Rat>) {
        // exact evaluation at rational roots; anything unfactored stays
        // with the quotient-ring path
        auto [roots, rem] = extract_rational_roots(g);
        for (const auto& [root, mult] : roots) {
            (void)mult;
            const std::size_t rk = mat_rank(evaluate_matrix(m, root));
            profile.drop_locus.emplace_back(
                UniPoly<K>(std::vector<K>{-root, K(1)}), rk);
        }
        opaque = rem;
    }
    if (opaque.degree() >= 1) {
        for (auto& [factor, rk] : rank_mod(m, opaque))
            profile.drop_locus.emplace_back(std::move(factor), rk);
    }

    std::sort(profile.drop_locus.begin(), profile.drop_locus.end(),
              [](const auto& a, const auto& b) {
                  return curvedetail::cmp_unipoly(a.first, b.first) < 0;
              });
    for (const auto& [factor, rk] : profile.drop_locus) {
        (void)factor;
        internal_check(rk < k, "drop locus root does not drop the rank");
    }
    return profile;
}

/// Saturated polynomial basis of a rank-k subsheaf of the trivial bundle:
/// full column rank at every parameter value, i.e. the k x k minors have
/// trivial gcd. degree_invariant records every removed degree (column
/// contents plus surgery factors).
template <class K>
struct SheafBasis {
    Matrix<UniPoly<K>> basis;
    bool saturated = false;
    std::size_t degree_invariant = 0;
};

namespace curvedetail {

/// Canonical scaling and ordering of basis columns: the first nonzero
/// entry of each column is made monic, columns sort by pivot row then
/// entrywise.
template <class K>
void normalize_basis_columns(Matrix<UniPoly<K>>& b) {
    std::vector<std::vector<UniPoly<K>>> cols;
    for (std::size_t j = 0; j < b.cols(); ++j) {
        auto col = b.col(j);
        std::size_t pivot = 0;
        while (pivot < col.size() && col[pivot].is_zero()) ++pivot;
        internal_check(pivot < col.size(), "zero column in sheaf basis");
        const K s = K(1) / col[pivot].leading();
        for (auto& e : col) e = e.scaled(s);
        cols.push_back(std::move(col));
    }
    std::sort(cols.begin(), cols.end(), [](const auto& a, const auto& b2) {
        std::size_t pa = 0, pb = 0;
        while (pa < a.size() && a[pa].is_zero()) ++pa;
        while (pb < b2.size() && b2[pb].is_zero()) ++pb;
        if (pa != pb) return pa < pb;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const int c = cmp_unipoly(a[i], b2[i]);
            if (c != 0) return c < 0;
        }
        return false;
    });
    for (std::size_t j = 0; j < b.cols(); ++j) b.set_col(j, cols[j]);
}

/// Strips column contents, then repairs every remaining rank drop by
/// local surgery: a column combination vanishing along a drop factor is
/// divided by that factor and replaces one participating column. The
/// minor-gcd degree strictly decreases each round.
template <class K>
void saturate_columns(Matrix<UniPoly<K>>& basis, std::size_t& degree_invariant) {
    const std::size_t k = basis.cols();
    for (std::size_t j = 0; j < k; ++j) {
        auto [col, content] = column_primitive_part(basis.col(j));
        degree_invariant += static_cast<std::size_t>(content.degree());
        basis.set_col(j, col);
    }
    int prev_deg = -1;
    while (true) {
        UniPoly<K> g = minor_gcd(basis, k);
        internal_check(!g.is_zero(), "basis lost full column rank during saturation");
        if (g.degree() == 0) return;
        internal_check(prev_deg < 0 || g.degree() < prev_deg,
                       "saturation failed to make progress");
        prev_deg = g.degree();

        UniPoly<K> phi = squarefree_part(g);
        std::vector<UniPoly<K>> v;
        while (true) {
            auto res = moddetail::eliminate_mod(basis, phi);
            if (auto* split = std::get_if<moddetail::ModSplit<K>>(&res)) {
                phi = split->f1; // handle one factor now, the rest next round
                continue;
            }
            const auto& ech = std::get<moddetail::ModEchelon<K>>(res);
            internal_check(ech.rank < k, "no kernel mod a drop factor");
            // kernel vector for the first free column
            std::vector<bool> is_pivot(k, false);
            for (auto c : ech.pivot_cols) is_pivot[c] = true;
            std::size_t free_col = 0;
            while (is_pivot[free_col]) ++free_col;
            v.assign(k, UniPoly<K>());
            v[free_col] = UniPoly<K>::constant(K(1));
            for (std::size_t pi = 0; pi < ech.pivot_cols.size(); ++pi)
                v[ech.pivot_cols[pi]] = -ech.reduced(pi, free_col);
            break;
        }

        // replace the last participating column by (basis * v) / phi
        std::size_t target = k;
        for (std::size_t j = k; j-- > 0;)
            if (!v[j].is_zero()) {
                target = j;
                break;
            }
        internal_check(target < k, "empty kernel vector");
        std::vector<UniPoly<K>> w(basis.rows());
        bool all_zero = true;
        for (std::size_t i = 0; i < basis.rows(); ++i) {
            UniPoly<K> comb;
            for (std::size_t j = 0; j < k; ++j) comb += basis(i, j) * v[j];
            auto [quot, rem] = unipoly_divmod(comb, phi);
            internal_check(rem.is_zero(), "surgery combination not divisible by the drop factor");
            all_zero = all_zero && quot.is_zero();
            w[i] = std::move(quot);
        }
        internal_check(!all_zero, "surgery produced a zero column");
        degree_invariant += static_cast<std::size_t>(phi.degree());
        auto [col, content] = column_primitive_part(w);
        degree_invariant += static_cast<std::size_t>(content.degree());
        basis.set_col(target, col);
    }
}

} // namespace curvedetail

/// Saturated basis of the image sheaf: generic-rank many columns spanning
/// the column space over the function field, contents removed, rank drops
/// repaired, full column rank at every parameter value.
template <class K>
SheafBasis<K> image_sheaf_basis(const Matrix<UniPoly<K>>& m) {
    bool nonzero = false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            nonzero = nonzero || !m(i, j).is_zero();
    if (!nonzero) throw ZeroMatrix("image sheaf of the zero matrix");

    const Matrix<RatFunc<K>> lifted = lift_to_ratfunc(m);
    const std::size_t k = mat_rank(lifted);

    // greedy column selection over the function field
    std::vector<std::size_t> chosen;
    for (std::size_t j = 0; j < m.cols() && chosen.size() < k; ++j) {
        std::vector<std::size_t> cand = chosen;
        cand.push_back(j);
        std::vector<std::size_t> all_rows(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i) all_rows[i] = i;
        if (mat_rank(lifted.submatrix(all_rows, cand)) == cand.size()) chosen = cand;
    }
    internal_check(chosen.size() == k, "column selection missed the generic rank");

    SheafBasis<K> sb;
    sb.basis = Matrix<UniPoly<K>>(m.rows(), k);
    for (std::size_t jj = 0; jj < k; ++jj)
        for (std::size_t i = 0; i < m.rows(); ++i)
            sb.basis(i, jj) = m(i, chosen[jj]);

    curvedetail::saturate_columns(sb.basis, sb.degree_invariant);
    curvedetail::normalize_basis_columns(sb.basis);
    sb.saturated = minor_gcd(sb.basis, k).is_one();
    internal_check(sb.saturated, "saturation postcondition failed");
    return sb;
}

/// Saturated basis of the right kernel sheaf; throws TrivialKernel when
/// the kernel is generically trivial.
template <class K>
SheafBasis<K> kernel_sheaf_basis(const Matrix<UniPoly<K>>& m) {
    const Matrix<RatFunc<K>> lifted = lift_to_ratfunc(m);
    const Matrix<RatFunc<K>> kern = mat_kernel(lifted);
    if (kern.cols() == 0) throw TrivialKernel("matrix has trivial generic kernel");

    SheafBasis<K> sb;
    sb.basis = Matrix<UniPoly<K>>(kern.rows(), kern.cols());
    for (std::size_t j = 0; j < kern.cols(); ++j) {
        UniPoly<K> den_lcm = UniPoly<K>::constant(K(1));
        for (std::size_t i = 0; i < kern.rows(); ++i)
            den_lcm = unipoly_lcm(den_lcm, kern(i, j).den());
        for (std::size_t i = 0; i < kern.rows(); ++i) {
            auto [q, r] = unipoly_divmod(den_lcm, kern(i, j).den());
            internal_check(r.is_zero(), "lcm division not exact");
            sb.basis(i, j) = kern(i, j).num() * q;
        }
    }

    curvedetail::saturate_columns(sb.basis, sb.degree_invariant);
    curvedetail::normalize_basis_columns(sb.basis);
    sb.saturated = minor_gcd(sb.basis, sb.basis.cols()).is_one();
    internal_check(sb.saturated, "saturation postcondition failed");
    return sb;
}

/// Total vanishing degree of the induced map onto the saturated image:
/// the degree of the gcd of the maximal minors of the matrix expressing
/// the input columns in the saturated image basis. Requires the generic
/// rank to be full or exactly one below the row count.
template <class K>
std::size_t cokernel_degree(const Matrix<UniPoly<K>>& m) {
    const Matrix<RatFunc<K>> lifted = lift_to_ratfunc(m);
    const std::size_t k = mat_rank(lifted);
    if (m.rows() > k + 1) throw RankTooLow("generic rank deficit exceeds 1");
    if (k == 0) throw RankTooLow("zero matrix");

    const SheafBasis<K> sb = image_sheaf_basis(m);
    const auto x = solve_columns(lift_to_ratfunc(sb.basis), lifted);
    internal_check(x.has_value(), "columns must lie in the image sheaf span");
    Matrix<UniPoly<K>> coords(k, m.cols());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            internal_check((*x)(i, j).is_polynomial(),
                           "coordinates in a saturated basis must be polynomial");
            coords(i, j) = (*x)(i, j).num();
        }
    const UniPoly<K> g = minor_gcd(coords, k);
    internal_check(!g.is_zero(), "expression matrix lost rank");
    return static_cast<std::size_t>(g.degree());
}

/// Exact image basis and kernel dimension of the evaluated matrix at each
/// cloud point.
template <class K>
struct FiberImage {
    std::vector<K> point;
    Matrix<K> image_basis;
    std::size_t kernel_dim = 0;
};

template <class K>
std::vector<FiberImage<K>> fiber_image_at_points(const LinFormMatrix<K>& m,
                                                 const PointCloudCurve<K>& pc) {
    if (m.ambient() != pc.ambient()) throw DimensionMismatch("point cloud ambient mismatch");
    std::vector<FiberImage<K>> out;
    out.reserve(pc.points().size());
    for (const auto& p : pc.points()) {
        const Matrix<K> fiber = evaluate_at_point(m, p);
        Matrix<K> rt = transpose(fiber);
        const auto pivots = rref_in_place(rt);
        Matrix<K> image(m.size(), pivots.size());
        for (std::size_t c = 0; c < pivots.size(); ++c)
            for (std::size_t i = 0; i < m.size(); ++i)
                image(i, c) = rt(c, i);
        out.push_back(FiberImage<K>{p, std::move(image), m.size() - pivots.size()});
    }
    return out;
}

enum class Disambiguation { Plain, Transpose, Undecided };

/// The two candidate bundles cut out by a determinantal representation
/// restricted to the curve, with the transpose ambiguity resolved against
/// a reference representation when one is available.
template <class K>
struct ReconstructionReport {
    SheafBasis<K> candidate_plain;     // image sheaf of alpha restricted
    SheafBasis<K> candidate_transpose; // image sheaf of alpha^t restricted
    SheafBasis<K> kernel_line;
    RankProfile<K> rank_profile;
    bool containment_ok = false;
    Disambiguation disambiguation = Disambiguation::Undecided;
};

/// Reconstruction pipeline: checks containment, computes the rank
/// profile (the generic rank must equal size-1), produces both candidate
/// image sheaves and the kernel line, and disambiguates via the
/// equivalence decomposition when a reference representation is given.
/// Without a reference the transpose choice needs line-bundle degree
/// bookkeeping that the rational-curve model does not carry, so it is
/// reported Undecided.
template <class K>
ReconstructionReport<K> reconstruct_bundle_pair(const LinFormMatrix<K>& alpha,
                                                const ParamCurve<K>& c,
                                                const LinFormMatrix<K>* reference = nullptr) {
    if (!containment_check(alpha, c))
        throw NotContained("curve is not contained in the determinant hypersurface");
    if (!entry_independence_check(alpha))
        throw PreconditionError("reconstruction requires independent entries");

    const std::size_t r = alpha.size() - 1;
    const Matrix<UniPoly<K>> restricted = restrict_to_param_curve(alpha, c);

    ReconstructionReport<K> report;
    report.rank_profile = rank_profile(restricted);
    if (report.rank_profile.generic_rank != r)
        throw RankUnexpected("generic rank along the curve differs from size-1");
    report.containment_ok = true;

    report.candidate_plain = image_sheaf_basis(restricted);
    report.candidate_transpose =
        image_sheaf_basis(restrict_to_param_curve(transpose(alpha), c));
    report.kernel_line = kernel_sheaf_basis(restricted);

    if (reference != nullptr) {
        const FrobeniusOutcome<K> outcome = frobenius_decompose(alpha, *reference);
        if (outcome.certificate)
            report.disambiguation = outcome.certificate->transposed ? Disambiguation::Transpose
                                                                    : Disambiguation::Plain;
    }
    return report;
}

} // namespace detrep
