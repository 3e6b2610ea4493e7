// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <utility>
#include <vector>

#include "ladder_spec.hpp"
#include "rational.hpp"

// First-principles checks that know nothing about closed forms or circuit
// reductions: effective resistance straight from an exact grounded-Laplacian
// solve, spanning trees from an exact determinant, and the floating-point
// eigenvalue/trigonometric identities for the Kirchhoff index.

namespace ladder {

/// The n-rung ladder as an explicit vertex and edge list.
class LadderGraph {
public:
    explicit LadderGraph(int rungs) : spec_(rungs) {
        vertices_ = spec_.vertices();
        const int n = spec_.n();
        edges_.reserve(static_cast<std::size_t>(spec_.edge_count()));
        for (int i = 1; i < n; ++i) edges_.emplace_back(p(i), p(i + 1));
        for (int i = 1; i < n; ++i) edges_.emplace_back(q(i), q(i + 1));
        for (int i = 1; i <= n; ++i) edges_.emplace_back(p(i), q(i));
        degree_.assign(static_cast<std::size_t>(spec_.vertex_count()), 0);
        for (const auto& [a, b] : edges_) {
            ++degree_[static_cast<std::size_t>(index_of(a))];
            ++degree_[static_cast<std::size_t>(index_of(b))];
        }
    }

    const LadderSpec& spec() const { return spec_; }
    int n() const { return spec_.n(); }
    int vertex_count() const { return spec_.vertex_count(); }
    int edge_count() const { return spec_.edge_count(); }
    const std::vector<VertexRef>& vertices() const { return vertices_; }
    const std::vector<std::pair<VertexRef, VertexRef>>& edges() const { return edges_; }

    /// Row index: p_i -> i-1, q_i -> n+i-1.
    int index_of(VertexRef v) const {
        spec_.require(v);
        return (v.side == Side::P ? 0 : spec_.n()) + v.index - 1;
    }

    int degree(VertexRef v) const { return degree_[static_cast<std::size_t>(index_of(v))]; }

private:
    LadderSpec spec_;
    std::vector<VertexRef> vertices_;
    std::vector<std::pair<VertexRef, VertexRef>> edges_;
    std::vector<int> degree_;
};

/// Graph Laplacian D - A as a dense integer matrix.
inline std::vector<std::vector<Integer>> laplacian(const LadderGraph& g) {
    const auto m = static_cast<std::size_t>(g.vertex_count());
    std::vector<std::vector<Integer>> lap(m, std::vector<Integer>(m, Integer(0)));
    for (const auto& [a, b] : g.edges()) {
        const auto ia = static_cast<std::size_t>(g.index_of(a));
        const auto ib = static_cast<std::size_t>(g.index_of(b));
        lap[ia][ia] += 1;
        lap[ib][ib] += 1;
        lap[ia][ib] -= 1;
        lap[ib][ia] -= 1;
    }
    return lap;
}

namespace detail {

/// Exact solve of A x = rhs for integer A. Forward elimination is
/// fraction-free (each 2x2-determinant update divides exactly by the
/// previous pivot, so entries stay integers of modest size); back
/// substitution then runs over rationals on the integer triangle.
inline std::vector<Rational> solve_integer_system(std::vector<std::vector<Integer>> a,
                                                  std::vector<Integer> rhs) {
    const std::size_t m = a.size();
    for (std::size_t i = 0; i < m; ++i) {
        a[i].push_back(std::move(rhs[i]));
    }
    Integer prev_pivot = 1;
    for (std::size_t k = 0; k < m; ++k) {
        std::size_t pivot = k;
        while (pivot < m && a[pivot][k].is_zero()) ++pivot;
        if (pivot == m) {
            throw SingularSystem("solve_integer_system: no pivot in column " +
                                 std::to_string(k));
        }
        if (pivot != k) std::swap(a[pivot], a[k]);
        for (std::size_t i = k + 1; i < m; ++i) {
            for (std::size_t j = k + 1; j <= m; ++j) {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev_pivot;
            }
            a[i][k] = 0;
        }
        prev_pivot = a[k][k];
    }
    std::vector<Rational> x(m);
    for (std::size_t i = m; i-- > 0;) {
        Rational acc(a[i][m]);
        for (std::size_t j = i + 1; j < m; ++j) {
            acc -= Rational(a[i][j]) * x[j];
        }
        x[i] = acc / Rational(a[i][i]);
    }
    return x;
}

} // namespace detail

/// Effective resistance from the Laplacian: ground b (delete its row and
/// column), solve L' v = e_a exactly, and read off v_a.
inline Rational resistance_exact(const LadderGraph& g, VertexRef a, VertexRef b) {
    if (a == b) {
        g.index_of(a);
        return Rational(0);
    }
    const auto full = laplacian(g);
    const auto m = full.size();
    const auto ia = static_cast<std::size_t>(g.index_of(a));
    const auto ib = static_cast<std::size_t>(g.index_of(b));
    std::vector<std::vector<Integer>> grounded;
    grounded.reserve(m - 1);
    for (std::size_t r = 0; r < m; ++r) {
        if (r == ib) continue;
        std::vector<Integer> row;
        row.reserve(m - 1);
        for (std::size_t c = 0; c < m; ++c) {
            if (c == ib) continue;
            row.push_back(full[r][c]);
        }
        grounded.push_back(std::move(row));
    }
    const std::size_t ia_grounded = ia - (ia > ib ? 1 : 0);
    std::vector<Integer> rhs(m - 1, Integer(0));
    rhs[ia_grounded] = 1;
    return detail::solve_integer_system(std::move(grounded), std::move(rhs))[ia_grounded];
}

/// Kirchhoff index the slow, honest way: one grounded solve per vertex pair.
inline Rational kirchhoff_by_sum(const LadderGraph& g) {
    const auto verts = g.vertices();
    Rational total = 0;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            total += resistance_exact(g, verts[i], verts[j]);
        }
    }
    return total;
}

/// Number of spanning trees: determinant of the Laplacian with the last
/// row and column deleted, by fraction-free elimination (the final pivot is
/// the determinant; row swaps only flip its sign).
inline Integer spanning_trees(const LadderGraph& g) {
    auto full = laplacian(g);
    const std::size_t m = full.size() - 1;
    std::vector<std::vector<Integer>> a(m);
    for (std::size_t r = 0; r < m; ++r) {
        a[r].assign(full[r].begin(), full[r].begin() + static_cast<std::ptrdiff_t>(m));
    }
    Integer prev_pivot = 1;
    int sign = 1;
    for (std::size_t k = 0; k < m; ++k) {
        std::size_t pivot = k;
        while (pivot < m && a[pivot][k].is_zero()) ++pivot;
        if (pivot == m) return 0;
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < m; ++i) {
            for (std::size_t j = k + 1; j < m; ++j) {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev_pivot;
            }
            a[i][k] = 0;
        }
        prev_pivot = a[k][k];
    }
    return sign * a[m - 1][m - 1];
}

// ---------------------------------------------------------------------------
// Floating-point spectral identities. The ladder Laplacian's eigenvalues are
// known in closed form; these sums give the Kirchhoff index a third,
// numerically independent route.

/// Kirchhoff index as n(n^2-1)/3 + n sum_{k=0}^{n-1} 1/(1 + 2 sin^2(k pi/2n)).
inline double kirchhoff_spectral(int n) {
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
        const double s = std::sin(k * std::numbers::pi / (2.0 * n));
        sum += 1.0 / (1.0 + 2.0 * s * s);
    }
    const double nn = n;
    return nn * (nn * nn - 1.0) / 3.0 + nn * sum;
}

/// The same index split into rail and rung contributions:
/// n + (n/2) sum_{k=1}^{n-1} 1/sin^2 + n sum_{k=1}^{n-1} 1/(1 + 2 sin^2).
inline double kirchhoff_spectral_split(int n) {
    double inv_sin2 = 0.0;
    double shifted = 0.0;
    for (int k = 1; k < n; ++k) {
        const double s = std::sin(k * std::numbers::pi / (2.0 * n));
        inv_sin2 += 1.0 / (s * s);
        shifted += 1.0 / (1.0 + 2.0 * s * s);
    }
    const double nn = n;
    return nn + nn / 2.0 * inv_sin2 + nn * shifted;
}

/// sum_{k=0}^{n-1} 1/(1 + 2 sin^2(k pi / 2n)); the k = 0 term contributes 1.
inline double trig_sum_shifted(int n) {
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
        const double s = std::sin(k * std::numbers::pi / (2.0 * n));
        sum += 1.0 / (1.0 + 2.0 * s * s);
    }
    return sum;
}

/// sum_{k=1}^{n-1} 1/sin^2(k pi / 2n), which equals 2(n^2 - 1)/3 exactly.
inline double trig_sum_inverse_sin2(int n) {
    double sum = 0.0;
    for (int k = 1; k < n; ++k) {
        const double s = std::sin(k * std::numbers::pi / (2.0 * n));
        sum += 1.0 / (s * s);
    }
    return sum;
}

/// Left Riemann sum (pi/2n) sum_{k=0}^{n-1} 1/(1 + 2 sin^2(k pi/2n)) for
/// the integral of 1/(1 + 2 sin^2) over [0, pi/2], whose value is
/// pi / (2 sqrt(3)).
inline double riemann_left(int n) {
    return std::numbers::pi / (2.0 * n) * trig_sum_shifted(n);
}

// ---------------------------------------------------------------------------
// Hyperbolic-cotangent shadows: float approximations of exact quantities,
// used as cheap cross-checks at sizes where the exact values still fit a
// double.

/// r(p_n, q_n) ~ -1 - sqrt(3) coth(n ln(2 - sqrt(3))).
inline double last_rung_coth(int n) {
    const double s3 = std::sqrt(3.0);
    const double log_alpha = std::log(2.0 - s3);
    return -1.0 - s3 / std::tanh(n * log_alpha);
}

/// Kirchhoff index ~ (n^2/3)(n - sqrt(3) coth(n ln(2 - sqrt(3)))).
inline double kirchhoff_coth(int n) {
    const double s3 = std::sqrt(3.0);
    const double log_alpha = std::log(2.0 - s3);
    const double nn = n;
    return nn * nn / 3.0 * (nn - s3 / std::tanh(nn * log_alpha));
}

/// gen_fib(2n) ~ -2 sqrt(3) gen_fib(n)^2 coth(n ln(2 - sqrt(3))).
inline double gen_fib_doubled_coth(int n, double gen_fib_n) {
    const double s3 = std::sqrt(3.0);
    const double log_alpha = std::log(2.0 - s3);
    return -2.0 * s3 * gen_fib_n * gen_fib_n / std::tanh(n * log_alpha);
}

} // namespace ladder
