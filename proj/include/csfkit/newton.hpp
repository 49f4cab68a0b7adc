#ifndef CSFKIT_NEWTON_HPP
#define CSFKIT_NEWTON_HPP

#include <vector>

#include "csfkit/expansion.hpp"

namespace csfkit {

/// Elementary-basis expansions of the power sums p_1..p_n via the Newton
/// recurrence  p_k = (-1)^{k-1} k e_k + sum_{i=1}^{k-1} (-1)^{k-1-i} e_{k-i} p_i.
/// Index 0 holds the unit.
inline std::vector<ESym> power_rows_to_elementary(Part n) {
    std::vector<ESym> rows;
    rows.reserve(static_cast<std::size_t>(n) + 1);
    rows.push_back(ESym::unit());
    for (Part k = 1; k <= n; ++k) {
        ESym pk(k);
        pk.add_term(Partition({k}), rat(k % 2 == 1 ? k : -k));
        for (Part i = 1; i < k; ++i) {
            ESym en_minus_i(k - i);
            en_minus_i.add_term(Partition({k - i}), rat((k - 1 - i) % 2 == 0 ? 1 : -1));
            pk = add(pk, multiply(en_minus_i, rows[static_cast<std::size_t>(i)]));
        }
        rows.push_back(std::move(pk));
    }
    return rows;
}

/// p_lambda in the elementary basis: product of the single-row conversions.
inline ESym power_to_elementary(const Partition& lambda) {
    Part maxPart = lambda.empty() ? 0 : lambda.parts().front();
    std::vector<ESym> rows = power_rows_to_elementary(maxPart);
    ESym out = ESym::unit();
    for (Part p : lambda.parts()) out = multiply(out, rows[static_cast<std::size_t>(p)]);
    return out;
}

}  // namespace csfkit

#endif
