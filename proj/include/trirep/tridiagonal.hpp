#pragma once

// Symmetric tridiagonal eigenproblems by Sturm-sequence bisection and inverse
// iteration. `diag` has length n, `off` has length n-1 (off(i) couples i, i+1).

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Core>

#include "trirep/errors.hpp"

namespace trirep {

template <typename Scalar>
struct SymmetricTridiagonal {
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> diag;
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> off;

    Eigen::Index size() const { return diag.size(); }

    void check() const {
        if (diag.size() == 0)
            throw DomainError("tridiagonal matrix is empty");
        if (off.size() != diag.size() - 1)
            throw DomainError("tridiagonal off-diagonal length must be size - 1");
    }
};

/// Number of eigenvalues strictly below x.
template <typename Scalar>
Eigen::Index sturm_count(const SymmetricTridiagonal<Scalar>& t, Scalar x) {
    const Scalar tiny = std::numeric_limits<Scalar>::min() / std::numeric_limits<Scalar>::epsilon();
    Eigen::Index count = 0;
    Scalar q = t.diag(0) - x;
    if (q < 0)
        ++count;
    for (Eigen::Index i = 1; i < t.size(); ++i) {
        if (std::abs(q) < tiny)
            q = -tiny;
        q = t.diag(i) - x - t.off(i - 1) * t.off(i - 1) / q;
        if (q < 0)
            ++count;
    }
    return count;
}

template <typename Scalar>
std::pair<Scalar, Scalar> gershgorin_bounds(const SymmetricTridiagonal<Scalar>& t) {
    Scalar lo = std::numeric_limits<Scalar>::max();
    Scalar hi = std::numeric_limits<Scalar>::lowest();
    for (Eigen::Index i = 0; i < t.size(); ++i) {
        Scalar r = 0;
        if (i > 0)
            r += std::abs(t.off(i - 1));
        if (i + 1 < t.size())
            r += std::abs(t.off(i));
        lo = std::min(lo, t.diag(i) - r);
        hi = std::max(hi, t.diag(i) + r);
    }
    const Scalar pad = std::numeric_limits<Scalar>::epsilon() * std::max(std::abs(lo), std::abs(hi)) + Scalar(1e-300);
    return {lo - pad, hi + pad};
}

/// Eigenvalue number k (0-based, ascending) by bisection.
template <typename Scalar>
Scalar bisect_eigenvalue(const SymmetricTridiagonal<Scalar>& t, Eigen::Index k, Scalar lo, Scalar hi) {
    for (int iter = 0; iter < 400; ++iter) {
        const Scalar mid = lo + (hi - lo) / 2;
        if (mid <= lo || mid >= hi)
            break;
        if (sturm_count(t, mid) > k)
            hi = mid;
        else
            lo = mid;
    }
    return lo + (hi - lo) / 2;
}

/// Eigenvalues with indices [first, first + count), ascending.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> tridiagonal_eigenvalues(const SymmetricTridiagonal<Scalar>& t,
                                                                 Eigen::Index first, Eigen::Index count) {
    t.check();
    if (first < 0 || count < 0 || first + count > t.size())
        throw DomainError("tridiagonal_eigenvalues: index range out of bounds");
    const auto [lo, hi] = gershgorin_bounds(t);
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> values(count);
    Scalar floor = lo;
    for (Eigen::Index j = 0; j < count; ++j) {
        values(j) = bisect_eigenvalue(t, first + j, floor, hi);
        floor = values(j) - std::numeric_limits<Scalar>::epsilon() * (std::abs(values(j)) + 1);
        floor = std::max(floor, lo);
    }
    return values;
}

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> tridiagonal_eigenvalues(const SymmetricTridiagonal<Scalar>& t) {
    return tridiagonal_eigenvalues(t, 0, t.size());
}

/// Solve (T - shift) x = rhs by Gaussian elimination with partial pivoting.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> solve_shifted(const SymmetricTridiagonal<Scalar>& t, Scalar shift,
                                                       Eigen::Matrix<Scalar, Eigen::Dynamic, 1> rhs) {
    const Eigen::Index n = t.size();
    using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    // Row i of U holds u0 (diagonal), u1, u2 (second superdiagonal from pivoting).
    Vec u0 = t.diag.array() - shift, u1 = Vec::Zero(n), u2 = Vec::Zero(n), sub = Vec::Zero(n);
    for (Eigen::Index i = 0; i + 1 < n; ++i)
        u1(i) = t.off(i);
    for (Eigen::Index i = 0; i + 1 < n; ++i)
        sub(i) = t.off(i);
    const Scalar tiny = std::numeric_limits<Scalar>::epsilon() * (t.diag.cwiseAbs().maxCoeff() + std::abs(shift) + 1);

    for (Eigen::Index i = 0; i + 1 < n; ++i) {
        Scalar a = u0(i), b = u1(i), c = u2(i);
        const Scalar l = sub(i), d = u0(i + 1), e = (i + 2 < n) ? u1(i + 1) : Scalar(0);
        if (std::abs(l) > std::abs(a)) {
            std::swap(rhs(i), rhs(i + 1));
            const Scalar m = a / l;
            u0(i) = l;
            u1(i) = d;
            u2(i) = e;
            u0(i + 1) = b - m * d;
            if (i + 2 < n)
                u1(i + 1) = c - m * e;
            rhs(i + 1) -= m * rhs(i);
        } else {
            if (a == 0)
                a = tiny;
            const Scalar m = l / a;
            u0(i) = a;
            u0(i + 1) = d - m * b;
            if (i + 2 < n)
                u1(i + 1) = e - m * c;
            rhs(i + 1) -= m * rhs(i);
        }
    }
    if (u0(n - 1) == 0)
        u0(n - 1) = tiny;
    Vec x(n);
    for (Eigen::Index i = n - 1; i >= 0; --i) {
        Scalar s = rhs(i);
        if (i + 1 < n)
            s -= u1(i) * x(i + 1);
        if (i + 2 < n)
            s -= u2(i) * x(i + 2);
        Scalar piv = u0(i);
        if (piv == 0)
            piv = tiny;
        x(i) = s / piv;
    }
    return x;
}

/// Unit eigenvector for a converged eigenvalue by inverse iteration.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> inverse_iteration(const SymmetricTridiagonal<Scalar>& t, Scalar eigenvalue,
                                                           int iterations = 4) {
    t.check();
    const Eigen::Index n = t.size();
    using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    // A deterministic start vector with no special symmetry.
    Vec v(n);
    for (Eigen::Index i = 0; i < n; ++i)
        v(i) = Scalar(1) + Scalar(0.1) * std::sin(Scalar(0.7) * Scalar(i) + Scalar(0.3));
    v.normalize();
    const Scalar scale = t.diag.cwiseAbs().maxCoeff() + (n > 1 ? t.off.cwiseAbs().maxCoeff() : Scalar(0)) + 1;
    const Scalar shift = eigenvalue + Scalar(4) * std::numeric_limits<Scalar>::epsilon() * scale;
    for (int it = 0; it < iterations; ++it) {
        Vec w = solve_shifted(t, shift, v);
        const Scalar norm = w.norm();
        if (!std::isfinite(norm) || norm == 0)
            throw Error("inverse_iteration: iteration did not converge");
        v = w / norm;
    }
    // Fix the sign so the first significant component is positive.
    const Scalar cut = Scalar(1e-9) * v.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < n; ++i) {
        if (std::abs(v(i)) > cut) {
            if (v(i) < 0)
                v = -v;
            break;
        }
    }
    return v;
}

} // namespace trirep
