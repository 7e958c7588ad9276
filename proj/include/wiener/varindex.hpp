// Szeged index, variable (alpha-parametrized) Wiener and Szeged indices,
// and sign-change scanning for the critical exponents of their difference.
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "blocks.hpp"
#include "graph.hpp"

namespace wiener {

// Per edge uv (lexicographic order): how many vertices lie strictly closer
// to u than to v, and vice versa.
inline auto edge_split_counts(const Graph& g) -> std::vector<std::pair<int, int>> {
    if (!is_connected(g)) throw std::invalid_argument("edge splits undefined on disconnected graph");
    auto d = distance_matrix(g);
    std::vector<std::pair<int, int>> out;
    for (auto [u, v] : g.edges()) {
        int nu = 0, nv = 0;
        for (int x = 0; x < g.n; ++x) {
            if (d(x, u) < d(x, v)) ++nu;
            if (d(x, v) < d(x, u)) ++nv;
        }
        out.emplace_back(nu, nv);
    }
    return out;
}

inline auto szeged(const Graph& g) -> std::int64_t {
    std::int64_t total = 0;
    for (auto [nu, nv] : edge_split_counts(g)) total += std::int64_t{nu} * nv;
    return total;
}

namespace detail {

struct KahanSum {
    double total = 0, carry = 0;

    void add(double x) {
        double y = x - carry;
        double t = total + y;
        carry = (t - total) - y;
        total = t;
    }
};

}  // namespace detail

inline auto variable_wiener(const Graph& g, double alpha) -> double {
    if (!is_connected(g)) throw std::invalid_argument("wiener undefined on disconnected graph");
    auto d = distance_matrix(g);
    detail::KahanSum sum;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) sum.add(std::pow(static_cast<double>(d(u, v)), alpha));
    return sum.total;
}

inline auto variable_szeged(const Graph& g, double alpha) -> double {
    detail::KahanSum sum;
    for (auto [nu, nv] : edge_split_counts(g)) sum.add(std::pow(static_cast<double>(nu) * nv, alpha));
    return sum.total;
}

inline auto szeged_wiener_gap(const Graph& g, double alpha) -> double {
    return variable_szeged(g, alpha) - variable_wiener(g, alpha);
}

struct CriticalExponents {
    std::vector<double> roots;  // sign-change witnesses, ascending; a lower bound on the root count
    bool degenerate = false;    // complete input, gap identically zero
};

// Uniform grid scan for sign changes of the Szeged-Wiener gap, each bracket
// refined by bisection.  Reports "at least k roots": tangential zeros that
// never cross are invisible by design.
inline auto critical_exponents(const Graph& g, double lo = 0.0, double hi = 4.0, int steps = 4096)
    -> CriticalExponents {
    if (!is_connected(g)) throw std::invalid_argument("wiener undefined on disconnected graph");
    if (!(lo < hi) || steps < 1) throw std::invalid_argument("bad scan range");
    CriticalExponents out;
    if (g.edge_count() == std::int64_t{g.n} * (g.n - 1) / 2) {
        out.degenerate = true;
        return out;
    }
    auto h = [&](double a) { return szeged_wiener_gap(g, a); };
    double prev_x = lo, prev_h = h(lo);
    for (int i = 1; i <= steps; ++i) {
        double x = lo + (hi - lo) * i / steps;
        double hx = h(x);
        if (prev_h == 0.0) {
            if (out.roots.empty() || out.roots.back() != prev_x) out.roots.push_back(prev_x);
        } else if (hx != 0.0 && (prev_h < 0) != (hx < 0)) {
            double a = prev_x, b = x;
            while (b - a > 1e-9) {
                double mid = 0.5 * (a + b);
                double hm = h(mid);
                if (hm == 0.0) {
                    a = b = mid;
                } else if ((hm < 0) == (prev_h < 0)) {
                    a = mid;
                } else {
                    b = mid;
                }
            }
            out.roots.push_back(0.5 * (a + b));
        }
        prev_x = x;
        prev_h = hx;
    }
    if (prev_h == 0.0 && (out.roots.empty() || out.roots.back() != prev_x)) out.roots.push_back(prev_x);
    return out;
}

// Variable Wiener index of the clique-joined tree, the minimizer among
// l-apex trees of order n for positive alpha: every pair is at distance 1
// or 2 and the counts depend only on n and l.
inline auto min_apex_variable_wiener(int n, int l, double alpha) -> double {
    if (l < 1 || n < l + 2) throw std::invalid_argument("apex formula needs l >= 1, n >= l + 2");
    double dn = n, dl = l;
    double far_pairs = dn * dn - 2 * dn * dl - 3 * dn + dl * dl + 3 * dl + 2;
    double near_pairs = 2 * dn * dl + 2 * dn - dl * dl - 3 * dl - 2;
    return far_pairs * std::pow(2.0, alpha - 1) + near_pairs / 2;
}

// Variable Wiener index of the dumbbell with clique sizes 3 and 1 on a path
// of n-4 vertices, the maximizer among apex trees of order n.
inline auto max_apex_variable_wiener(int n, double alpha) -> double {
    if (n < 5) throw std::invalid_argument("apex dumbbell formula needs n >= 5");
    detail::KahanSum s;
    s.add(1.0);
    for (int i = 1; i <= n - 2; ++i) s.add((n - i) * std::pow(static_cast<double>(i), alpha));
    return s.total;
}

// Szeged-Wiener gap of the clique-minus-cycle-plus-path family, evaluated
// from its pair and edge multisets.  The multi-root examples in this family
// need orders in the hundreds, past the adjacency type's 64-vertex cap, and
// this closed form keeps them checkable.  Distances: C(k,2)-k pairs at 1,
// k pairs at 2, k*(1+i) cross pairs for i = 0..l, path gaps.  Splits:
// C(k,2)-2k clique edges 3*3, k clique edges 2*2, k apex edges (l+3)*1,
// path edges (k+i+1)*(l-i) for i = 0..l-1.
inline auto cambie_haslegrave_gap(long long k, long long l, double alpha) -> double {
    if (k < 5 || l < 1) throw std::invalid_argument("cambie_haslegrave needs k >= 5, l >= 1");
    double kd = static_cast<double>(k);
    detail::KahanSum w;
    w.add(kd * (kd - 1) / 2 - kd);
    w.add(kd * std::pow(2.0, alpha));
    for (long long i = 1; i <= l + 1; ++i) w.add(kd * std::pow(static_cast<double>(i), alpha));
    for (long long d = 1; d <= l; ++d)
        w.add(static_cast<double>(l + 1 - d) * std::pow(static_cast<double>(d), alpha));
    detail::KahanSum sz;
    sz.add((kd * (kd - 1) / 2 - 2 * kd) * std::pow(9.0, alpha));
    sz.add(kd * std::pow(4.0, alpha));
    sz.add(kd * std::pow(static_cast<double>(l) + 3, alpha));
    for (long long i = 0; i + 1 <= l; ++i)
        sz.add(std::pow(static_cast<double>(k + i + 1) * static_cast<double>(l - i), alpha));
    return sz.total - w.total;
}

// Equality Sz = W computed two ways: the raw integer comparison and the
// block-structure characterization.  Disagreement would mean a defect in one
// of the routes, so it is loud.
inline auto classify_equality(const Graph& g) -> bool {
    if (!is_connected(g)) throw std::invalid_argument("wiener undefined on disconnected graph");
    bool numeric = szeged(g) == wiener_index(g);
    bool structural = blocks(g).all_blocks_complete;
    if (numeric != structural) throw std::logic_error("szeged equality routes disagree");
    return numeric;
}

}  // namespace wiener
