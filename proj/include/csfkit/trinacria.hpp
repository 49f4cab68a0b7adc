#ifndef CSFKIT_TRINACRIA_HPP
#define CSFKIT_TRINACRIA_HPP

#include <stdexcept>

#include "csfkit/csf.hpp"
#include "csfkit/expansion.hpp"

namespace csfkit {

/// r_i = i/(i-1), defined for i >= 2.  Satisfies 1 < r_i <= 2.
inline Rational r_ratio(Part i) {
    if (i < 2) throw std::invalid_argument("r_ratio: need i >= 2");
    return rat(i, i - 1);
}

/// delta_x = 4*chi(x=2) + (3/2)*chi(x=3).
inline Rational delta_of(Part x) {
    if (x == 2) return rat(4);
    if (x == 3) return rat(3, 2);
    return rat(0);
}

namespace detail {

/// prod_i (k_i - 1); equals w_{1K} with a 1 prepended.
inline std::int64_t product_parts_minus_one(const Composition& K) {
    std::int64_t p = 1;
    for (Part part : K.parts()) p *= part - 1;
    return p;
}

inline void require_no_ones(const Composition& K, Part n, const char* who) {
    if (K.size() != n || !K.all_parts_at_least(2))
        throw std::invalid_argument(std::string(who) + ": composition " + K.to_string() +
                                    " is not in W_" + std::to_string(n));
}

}  // namespace detail

/// f(K) = 2 r_{k_1} + 4 r_{k_2} chi(k_1=2) + (3/2) r_{k_2} chi(k_1=3)
///        - r_{k_1} sum_{l=1}^{3} l r_{j_1} chi(K = IJ with J |= b+l),
/// where j_1 is the leading part of the suffix of size b+l.  Requires
/// K in W_{2b+7}.
inline Rational f_coeff(const Composition& K, Part b) {
    if (b < 1) throw std::invalid_argument("f_coeff: need b >= 1");
    detail::require_no_ones(K, 2 * b + 7, "f_coeff");
    const Part k1 = K.first();
    Rational f = rat(2) * r_ratio(k1);
    if (k1 == 2 || k1 == 3) f += delta_of(k1) * r_ratio(K.at(1));
    for (int l = 1; l <= 3; ++l) {
        auto split = prefix_part_count(K, K.size() - (b + l));
        if (!split) continue;
        const Part j1 = K.at(*split);
        f -= r_ratio(k1) * rat(l) * r_ratio(j1);
    }
    return f;
}

/// Y_2 = sum_{K in W_{2b+5}} (2 + chi(k_1=2)) w_{1K} e_K
///     - sum_{l=1}^{3} sum_{K in W_{2b+5}(b+6-l)} l w_{1K} e_K.
inline CompExpansion compute_Y2(Part b) {
    if (b < 1) throw std::invalid_argument("compute_Y2: need b >= 1");
    const Part n = 2 * b + 5;
    CompExpansion y2(n);
    for (const Composition& K : enumerate_no_ones(n)) {
        std::int64_t c = 2 + (K.first() == 2 ? 1 : 0);
        for (int l = 1; l <= 3; ++l) {
            if (has_prefix_of_size(K, b + 6 - l)) c -= l;
        }
        y2.add_term(K, rat(c * detail::product_parts_minus_one(K)));
    }
    return y2;
}

/// Y_1 = Y_11 + Y_12 + Y_13 - sum_{l=1}^{6} sum_{K in W_{2b+6}(b+l)} min(l,7-l) w_K e_K
/// with  Y_11 = sum (2 w_K + w_{2K}) e_K,  Y_12 = sum (w_{4I} + w_I) e_{2I},
/// Y_13 = sum w_{3I} e_{3I}.
inline CompExpansion compute_Y1(Part b) {
    if (b < 1) throw std::invalid_argument("compute_Y1: need b >= 1");
    const Part n = 2 * b + 6;
    CompExpansion y1(n);
    for (const Composition& K : enumerate_no_ones(n)) {
        std::int64_t lK = 0;
        for (int l : prefix_L(K, b)) lK += std::min(l, 7 - l);
        const std::int64_t wK = w_weight(K);
        const std::int64_t w2K = 2 * detail::product_parts_minus_one(K);
        y1.add_term(K, rat((2 - lK) * wK + w2K));
    }
    for (const Composition& I : enumerate_no_ones(n - 2)) {
        const std::int64_t w4I = 4 * detail::product_parts_minus_one(I);
        y1.add_term(Composition::concat(Composition({2}), I), rat(w4I + w_weight(I)));
    }
    for (const Composition& I : enumerate_no_ones(n - 3)) {
        const std::int64_t w3I = 3 * detail::product_parts_minus_one(I);
        y1.add_term(Composition::concat(Composition({3}), I), rat(w3I));
    }
    return y1;
}

/// Y_0 = sum_{K in W_{2b+7}} f(K) e_K prod_i (k_i - 1).  The products clear
/// every denominator; a non-integer coefficient indicates a transcription
/// bug, so it is a hard error.
inline CompExpansion compute_Y0(Part b) {
    if (b < 1) throw std::invalid_argument("compute_Y0: need b >= 1");
    const Part n = 2 * b + 7;
    CompExpansion y0(n);
    for (const Composition& K : enumerate_no_ones(n)) {
        Rational coeff = f_coeff(K, b) * rat(detail::product_parts_minus_one(K));
        if (!is_integer(coeff))
            throw std::logic_error("compute_Y0: non-integer coefficient at " + K.to_string());
        y0.add_term(K, coeff);
    }
    return y0;
}

/// The unsimplified four-sum form of Y_0 from the decomposition proof:
/// sum 2 w_K e_K + sum 4 w_I e_{2I} + sum 3 w_I e_{3I}
/// - sum_{l=1}^{3} sum_{(I,J) in W_{b+7-l} x W_{b+l}} l w_I w_J e_{IJ}.
/// Kept as an independent route so the two can be checked against each other.
inline CompExpansion compute_Y0_foursum(Part b) {
    if (b < 1) throw std::invalid_argument("compute_Y0_foursum: need b >= 1");
    const Part n = 2 * b + 7;
    CompExpansion y0(n);
    for (const Composition& K : enumerate_no_ones(n))
        y0.add_term(K, rat(2 * w_weight(K)));
    for (const Composition& I : enumerate_no_ones(n - 2))
        y0.add_term(Composition::concat(Composition({2}), I), rat(4 * w_weight(I)));
    for (const Composition& I : enumerate_no_ones(n - 3))
        y0.add_term(Composition::concat(Composition({3}), I), rat(3 * w_weight(I)));
    for (Part l = 1; l <= 3; ++l) {
        for (const Composition& I : enumerate_no_ones(b + 7 - l)) {
            const std::int64_t wI = w_weight(I);
            for (const Composition& J : enumerate_no_ones(b + l)) {
                y0.add_term(Composition::concat(I, J), rat(-l * wI * w_weight(J)));
            }
        }
    }
    return y0;
}

/// The e_1-graded pieces of X_{T_{(b+2)b2}}.
struct YDecomposition {
    Part b = 0;
    CompExpansion Y2;  // degree 2b+5
    CompExpansion Y1;  // degree 2b+6
    CompExpansion Y0;  // degree 2b+7
};

inline YDecomposition decompose_trinacria(Part b) {
    return {b, compute_Y2(b), compute_Y1(b), compute_Y0(b)};
}

/// Y_2 e_1^2 + Y_1 e_1 + Y_0 as a symmetric function; equals X_{T_{(b+2)b2}}.
inline ESym reconstruct(const YDecomposition& d) {
    ESym e1(1);
    e1.add_term(Partition({1}), rat(1));
    ESym x = multiply(multiply(project(d.Y2), e1), e1);
    x = add(x, multiply(project(d.Y1), e1));
    return add(x, project(d.Y0));
}

inline ESym reconstruct(Part b) { return reconstruct(decompose_trinacria(b)); }

}  // namespace csfkit

#endif
