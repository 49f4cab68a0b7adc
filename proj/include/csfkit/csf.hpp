#ifndef CSFKIT_CSF_HPP
#define CSFKIT_CSF_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "csfkit/expansion.hpp"
#include "csfkit/graph.hpp"
#include "csfkit/newton.hpp"

namespace csfkit {

inline constexpr std::uint64_t kDefaultOracleBudget = std::uint64_t{1} << 24;

/// Thrown when an oracle run would enumerate more edge subsets than allowed.
class oracle_budget_error : public std::runtime_error {
public:
    oracle_budget_error(std::size_t edge_count, std::uint64_t budget)
        : std::runtime_error("csf_oracle: 2^" + std::to_string(edge_count) +
                             " edge subsets exceed the enumeration budget of " +
                             std::to_string(budget) + " subsets") {}
};

namespace detail {

/// Component sizes of (V, S) for the edge subset encoded by `mask`.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
    }
    int component_size(int x) { return size_[find(x)]; }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
};

}  // namespace detail

/// Brute-force chromatic symmetric function via the edge-subset power-sum
/// expansion  X_G = sum_{S subseteq E} (-1)^{|S|} p_{lambda(S)},  where
/// lambda(S) lists the connected-component sizes of (V, S).  Independent of
/// every closed-form expansion in this library, so it can serve as their
/// oracle.  Refuses graphs whose subset count exceeds `budget`.
inline ESym csf_oracle(const Graph& g, std::uint64_t budget = kDefaultOracleBudget) {
    const std::size_t m = g.edge_count();
    if (m >= 63 || (std::uint64_t{1} << m) > budget)
        throw oracle_budget_error(m, budget);
    const int n = g.vertex_count();

    std::map<Partition, mpz_class> signed_counts;
    const std::uint64_t subsets = std::uint64_t{1} << m;
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        detail::UnionFind uf(n);
        int picked = 0;
        for (std::size_t e = 0; e < m; ++e) {
            if (mask >> e & 1) {
                uf.unite(g.edges()[e].first, g.edges()[e].second);
                ++picked;
            }
        }
        std::vector<Part> sizes;
        for (int v = 0; v < n; ++v) {
            if (uf.find(v) == v) sizes.push_back(uf.component_size(v));
        }
        std::sort(sizes.begin(), sizes.end(), std::greater<Part>());
        signed_counts[Partition(std::move(sizes))] += (picked % 2 == 0) ? 1 : -1;
    }

    std::vector<ESym> rows = power_rows_to_elementary(n);
    ESym out(n);
    for (const auto& [lambda, count] : signed_counts) {
        if (count == 0) continue;
        ESym plambda = ESym::unit();
        for (Part p : lambda.parts())
            plambda = multiply(plambda, rows[static_cast<std::size_t>(p)]);
        out = add(out, scale(plambda, Rational(count)));
    }
    return out;
}

/// X_{P_n} = sum_{I |= n} w_I e_I as a free-algebra element.  Only the
/// nonvanishing terms are materialized: w_I = 0 exactly when I has a
/// non-leading part 1, so the survivors are a leading part followed by a
/// composition with parts >= 2.
inline CompExpansion csf_path(Part n) {
    if (n < 0) throw std::invalid_argument("csf_path: n must be >= 0");
    CompExpansion out(n);
    if (n == 0) return CompExpansion::unit();
    for (Part head = 1; head <= n; ++head) {
        for (const Composition& rest : enumerate_no_ones(n - head)) {
            Composition I = Composition::concat(Composition({head}), rest);
            out.add_term(I, rat(w_weight(I)));
        }
    }
    return out;
}

namespace detail {

/// Cache of path expansions 0..n.
inline std::vector<CompExpansion> path_table(Part n) {
    std::vector<CompExpansion> table;
    table.reserve(static_cast<std::size_t>(n) + 1);
    for (Part i = 0; i <= n; ++i) table.push_back(csf_path(i));
    return table;
}

}  // namespace detail

/// X_{S(abc)} = X_{P_n} + sum_{i=1}^{c} (X_{P_i} X_{P_{n-i}} - X_{P_{b+i}} X_{P_{n-b-i}})
/// with n = a+b+c+1.  The spider is leg-symmetric; legs are sorted so that
/// a >= b >= c, which the formula assumes.
inline ESym csf_spider_abc(Part a, Part b, Part c) {
    std::vector<Part> legs = {a, b, c};
    std::sort(legs.begin(), legs.end(), std::greater<Part>());
    a = legs[0], b = legs[1], c = legs[2];
    if (c < 1) throw std::invalid_argument("csf_spider_abc: legs must be >= 1");
    const Part n = a + b + c + 1;
    auto paths = detail::path_table(n);
    auto path = [&](Part i) -> const CompExpansion& { return paths[static_cast<std::size_t>(i)]; };
    auto P = [&](Part i) { return multiply(path(i), path(n - i)); };
    CompExpansion x = path(n);
    for (Part i = 1; i <= c; ++i) {
        x = add(x, P(i));
        x = subtract(x, P(b + i));
    }
    return project(x);
}

/// X_{T_{abc}} = 2 P_0 + sum_{i=1}^{c+1} (P_i - P_{b+i})
///             + sum_{i=1}^{c} (P_i - P_{b+i+1}) - P_{a+1}
/// with P_i = X_{P_i} X_{P_{n-i}} and n = a+b+c+3.  Legs sorted to a >= b >= c >= 1;
/// degenerate legs are left to the oracle.
inline ESym csf_trinacria(Part a, Part b, Part c) {
    std::vector<Part> legs = {a, b, c};
    std::sort(legs.begin(), legs.end(), std::greater<Part>());
    a = legs[0], b = legs[1], c = legs[2];
    if (c < 1) throw std::invalid_argument("csf_trinacria: legs must be >= 1 (use the oracle for degenerate legs)");
    const Part n = a + b + c + 3;
    auto paths = detail::path_table(n);
    auto path = [&](Part i) -> const CompExpansion& { return paths[static_cast<std::size_t>(i)]; };

    // Net multiplicity of each convolution P_i.
    std::map<Part, std::int64_t> mult;
    mult[0] += 2;
    for (Part i = 1; i <= c + 1; ++i) {
        mult[i] += 1;
        mult[b + i] -= 1;
    }
    for (Part i = 1; i <= c; ++i) {
        mult[i] += 1;
        mult[b + i + 1] -= 1;
    }
    mult[a + 1] -= 1;

    CompExpansion x(n);
    for (const auto& [i, m] : mult) {
        if (m == 0) continue;
        x = add(x, scale(multiply(path(i), path(n - i)), rat(m)));
    }
    return project(x);
}

/// The triple-deletion identities.  T = {t1,t2,t3} must be stable in g.
/// Edge e^j joins the two vertices of T other than t_j; G_S adds {e^j : j in S}.
/// Returns true iff  X_{G12} = X_{G1} + X_{G23} - X_{G3}  and
/// X_{G123} = X_{G13} + X_{G23} - X_{G3}  hold exactly under the oracle.
inline bool verify_triple_deletion(const Graph& g, int t1, int t2, int t3,
                                   std::uint64_t budget = kDefaultOracleBudget) {
    if (t1 == t2 || t1 == t3 || t2 == t3)
        throw std::invalid_argument("verify_triple_deletion: vertices must be distinct");
    if (g.adjacent(t1, t2) || g.adjacent(t1, t3) || g.adjacent(t2, t3))
        throw std::invalid_argument("verify_triple_deletion: triple is not stable");
    const Edge e1{t2, t3}, e2{t1, t3}, e3{t1, t2};
    auto xg = [&](std::vector<Edge> extra) { return csf_oracle(g.with_edges(extra), budget); };
    ESym x12 = xg({e1, e2});
    ESym x1 = xg({e1});
    ESym x23 = xg({e2, e3});
    ESym x3 = xg({e3});
    if (!(x12 == add(x1, subtract(x23, x3)))) return false;
    ESym x123 = xg({e1, e2, e3});
    ESym x13 = xg({e1, e3});
    return x123 == add(x13, subtract(x23, x3));
}

}  // namespace csfkit

#endif
