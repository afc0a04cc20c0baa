#pragma once

#include <cstdint>
#include <vector>

#include "detrep/curve.hpp"
#include "detrep/linform.hpp"
#include "detrep/rng.hpp"

// Seeded instance generators powering the property suites. Integer
// entries are drawn from [-5, 5] to keep intermediate rational sizes
// bounded at desk scale; the bound is a parameter below for the few
// places that want a different one.

namespace detrep {

inline constexpr long long kGenCoeffBound = 5;

template <class K>
Matrix<K> random_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                        long long bound = kGenCoeffBound) {
    Matrix<K> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = K(rng.int_in(-bound, bound));
    return m;
}

template <class K>
Matrix<K> random_invertible_matrix(Rng& rng, std::size_t n, long long bound = kGenCoeffBound) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Matrix<K> m = random_matrix<K>(rng, n, n, bound);
        if (!mat_det(m).is_zero()) return m;
    }
    throw InternalError("failed to draw an invertible matrix");
}

template <class K>
struct FrobeniusInstance {
    LinFormMatrix<K> a, b;
    Matrix<K> s0, t0;
    bool transposed = false;
};

/// B with independent entries (coordinate forms mixed by a random
/// invertible change), random invertible integer S0, T0, and
/// A = S0*B*T0 or A = S0*B^t*T0. Reproducible from the seed.
template <class K>
FrobeniusInstance<K> gen_frobenius_instance(std::size_t r, std::size_t g, bool transposed,
                                            std::uint64_t seed) {
    const std::size_t n = r + 1;
    if (g < n * n) throw BadDimensions("need ambient dimension at least (r+1)^2");
    Rng rng(seed);

    FrobeniusInstance<K> inst;
    inst.transposed = transposed;

    Matrix<K> mixing;
    do {
        mixing = random_matrix<K>(rng, n * n, n * n);
    } while (mat_det(mixing).is_zero());

    inst.b = LinFormMatrix<K>(n, g);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t v = 0; v < n * n; ++v)
                inst.b.at(i, j).coeff[v] = mixing(i * n + j, v);

    inst.s0 = random_invertible_matrix<K>(rng, n);
    inst.t0 = random_invertible_matrix<K>(rng, n);
    inst.a = mul_right(mul_left(inst.s0, transposed ? transpose(inst.b) : inst.b), inst.t0);
    return inst;
}

template <class K>
struct CurveInstance {
    LinFormMatrix<K> rep;
    std::vector<UniPoly<K>> curve_coords;

    ParamCurve<K> curve() const { return ParamCurve<K>(curve_coords); }
};

namespace gendetail {

template <class K>
UniPoly<K> random_unipoly(Rng& rng, std::size_t max_deg, long long bound = kGenCoeffBound) {
    std::vector<K> c(max_deg + 1);
    for (auto& x : c) x = K(rng.int_in(-bound, bound));
    return UniPoly<K>(std::move(c));
}

/// Full rank at every parameter value: the minors of the stacked matrix
/// have trivial common factor.
template <class K>
bool everywhere_full_rank(const Matrix<UniPoly<K>>& m, std::size_t k) {
    if (generic_rank(m) != k) return false;
    const UniPoly<K> g = minor_gcd(m, k);
    return !g.is_zero() && g.degree() == 0;
}

} // namespace gendetail

/// Planted-factorization generator: the restricted matrix is a product
/// U(t) * V(t) of everywhere-full-rank factors, so it has rank exactly r
/// at every parameter value and determinant zero; the product lifts to
/// linear forms along a curve whose coordinate functions start with the
/// monomial basis 1, t, ..., t^degree. Entry independence is arranged
/// with kernel corrections on the extra coordinates whenever the ambient
/// dimension allows it.
template <class K>
CurveInstance<K> gen_curve_instance(std::size_t r, std::size_t g, std::size_t curve_degree,
                                    std::uint64_t seed) {
    const std::size_t n = r + 1;
    if (g < 3) throw BadDimensions("need ambient dimension at least 3");
    if (curve_degree < 1) throw BadDimensions("need curve degree at least 1");
    if (curve_degree > g - 1)
        throw LiftFailed("curve degree exceeds ambient dimension minus one: no linear-form lift");

    // the classical conic: the catalecticant on the rational normal curve
    if (r == 1 && g == 3 && curve_degree == 2) {
        CurveInstance<K> inst;
        inst.rep = LinFormMatrix<K>(2, 3);
        inst.rep.at(0, 0).coeff[0] = K(1);
        inst.rep.at(0, 1).coeff[1] = K(1);
        inst.rep.at(1, 0).coeff[1] = K(1);
        inst.rep.at(1, 1).coeff[2] = K(1);
        inst.curve_coords = {UniPoly<K>{1}, UniPoly<K>{0, 1}, UniPoly<K>{0, 0, 1}};
        return inst;
    }

    Rng rng(seed);
    const std::size_t d = curve_degree;
    const std::size_t deg_u = (d + 1) / 2;
    const std::size_t deg_v = d - deg_u;

    for (int attempt = 0; attempt < 200; ++attempt) {
        // everywhere-full-rank factors
        Matrix<UniPoly<K>> u(n, r), v(r, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < r; ++j)
                u(i, j) = gendetail::random_unipoly<K>(rng, deg_u);
        if (!gendetail::everywhere_full_rank(u, r)) continue;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < n; ++j)
                v(i, j) = gendetail::random_unipoly<K>(rng, deg_v);
        if (!gendetail::everywhere_full_rank(transpose(v), r)) continue;

        Matrix<UniPoly<K>> prod(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                UniPoly<K> acc;
                for (std::size_t k = 0; k < r; ++k) acc += u(i, k) * v(k, j);
                prod(i, j) = std::move(acc);
            }

        // curve coordinates: monomial basis plus random extras of degree <= d
        std::vector<UniPoly<K>> coords;
        for (std::size_t k = 0; k <= d; ++k) coords.push_back(UniPoly<K>::monomial(k));
        std::vector<UniPoly<K>> extras;
        for (std::size_t k = d + 1; k < g; ++k) {
            extras.push_back(gendetail::random_unipoly<K>(rng, d));
            coords.push_back(extras.back());
        }

        // coefficient-copy lift onto the monomial coordinates
        CurveInstance<K> inst;
        inst.rep = LinFormMatrix<K>(n, g);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k <= d; ++k)
                    inst.rep.at(i, j).coeff[k] = prod(i, j).coeff_at(k);

        // kernel corrections: e_{d+1+m} - copy(extras[m]) pulls back to 0,
        // and its unit coordinate forces independence when added
        if (g >= n * n) {
            std::vector<std::vector<K>> rows;
            std::size_t next_extra = 0;
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i)
                for (std::size_t j = 0; j < n && ok; ++j) {
                    std::vector<K> cand = inst.rep.at(i, j).coeff;
                    Matrix<K> trial(rows.size() + 1, g);
                    for (std::size_t rr = 0; rr < rows.size(); ++rr)
                        for (std::size_t cc = 0; cc < g; ++cc) trial(rr, cc) = rows[rr][cc];
                    for (std::size_t cc = 0; cc < g; ++cc) trial(rows.size(), cc) = cand[cc];
                    if (mat_rank(trial) != rows.size() + 1) {
                        if (next_extra >= extras.size()) {
                            ok = false;
                            break;
                        }
                        const std::size_t var = d + 1 + next_extra;
                        cand[var] += K(1);
                        for (std::size_t k = 0; k <= d; ++k)
                            cand[k] -= extras[next_extra].coeff_at(k);
                        ++next_extra;
                        inst.rep.at(i, j) = LinearForm<K>(cand);
                    }
                    rows.push_back(inst.rep.at(i, j).coeff);
                }
            if (!ok || !entry_independence_check(inst.rep)) continue;
        }

        inst.curve_coords = std::move(coords);

        // postconditions of the construction, verified before returning
        const ParamCurve<K> curve(inst.curve_coords);
        if (!containment_check(inst.rep, curve)) continue;
        const RankProfile<K> profile = rank_profile(restrict_to_param_curve(inst.rep, curve));
        if (profile.generic_rank != r || !profile.drop_locus.empty()) continue;
        return inst;
    }
    throw LiftFailed("requested dimensions admit no independent linear-form lift");
}

} // namespace detrep
