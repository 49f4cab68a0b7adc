#ifndef CSFKIT_CERTIFY_Y0_HPP
#define CSFKIT_CERTIFY_Y0_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "csfkit/certificate.hpp"
#include "csfkit/trinacria.hpp"

namespace csfkit {

/// Refined classes of the f-sign characterization; NONNEG marks f(K) >= 0.
enum class Y0Class { A, B1, B2, C1, C2, C3, D1, D2, D3, D4, E1, E2, E3, E4, E5, NONNEG };

inline std::string to_string(Y0Class c) {
    switch (c) {
        case Y0Class::A: return "A";
        case Y0Class::B1: return "B1";
        case Y0Class::B2: return "B2";
        case Y0Class::C1: return "C1";
        case Y0Class::C2: return "C2";
        case Y0Class::C3: return "C3";
        case Y0Class::D1: return "D1";
        case Y0Class::D2: return "D2";
        case Y0Class::D3: return "D3";
        case Y0Class::D4: return "D4";
        case Y0Class::E1: return "E1";
        case Y0Class::E2: return "E2";
        case Y0Class::E3: return "E3";
        case Y0Class::E4: return "E4";
        case Y0Class::E5: return "E5";
        case Y0Class::NONNEG: return "NONNEG";
    }
    return "?";
}

namespace detail {

/// l_K in {2,3} for members of K_0 (at most one of the two suffix sizes can
/// occur when all parts are >= 2).
inline std::optional<int> y0_suffix_l(const Composition& K, Part b) {
    const bool two = has_suffix_of_size(K, b + 2);
    const bool three = has_suffix_of_size(K, b + 3);
    if (two && three)
        throw std::logic_error("y0_suffix_l: suffixes of size b+2 and b+3 coexist at " + K.to_string());
    if (two) return 2;
    if (three) return 3;
    return std::nullopt;
}

struct Y0Split {
    int l;           // l_K
    Composition I;   // prefix factor, size b+7-l
    Composition J;   // suffix factor, size b+l
};

inline Y0Split y0_split(const Composition& K, Part b) {
    auto l = y0_suffix_l(K, b);
    if (!l) throw std::invalid_argument("y0_split: " + K.to_string() + " has no suffix of size b+2 or b+3");
    auto pc = prefix_part_count(K, K.size() - (b + *l));
    return {*l, K.take(*pc), K.drop(*pc)};
}

}  // namespace detail

/// phi(K) = JI for the unique factorization K = IJ with |J| = b + l_K.
inline Composition phi(const Composition& K, Part b) {
    detail::Y0Split s = detail::y0_split(K, b);
    return Composition::concat(s.J, s.I);
}

/// F(K) = f(K) + f(phi(K)).
inline Rational F_value(const Composition& K, Part b) {
    return f_coeff(K, b) + f_coeff(phi(K, b), b);
}

/// The closed form of F(K) for l_K + i_1 >= 5:
///   sum_{h in {i,j}} (2 r_{h_1} + delta_{h_1} r_{h_2})
///   - l_K r_{i_1} r_{j_1} - r_{i_1} r_{j_2} chi(1 in L_K)
///   - (7 - l_K - i_1) r_{j_1} r_{i_2} chi(i_1 <= 4),
/// where the second part after j_1 is read inside JI (it is i_1 when J is a
/// single part).  Kept separate from F_value so the two can be compared.
inline Rational F_closed_form(const Composition& K, Part b) {
    detail::Y0Split s = detail::y0_split(K, b);
    const Part i1 = s.I.first();
    if (s.l + i1 < 5) throw std::invalid_argument("F_closed_form: requires l_K + i_1 >= 5");
    const Part j1 = s.J.first();
    Rational F = rat(2) * r_ratio(i1) + rat(2) * r_ratio(j1);
    if (i1 == 2 || i1 == 3) F += delta_of(i1) * r_ratio(s.I.at(1));
    if (j1 == 2 || j1 == 3) {
        const Part second_of_JI = s.J.length() >= 2 ? s.J.at(1) : i1;
        F += delta_of(j1) * r_ratio(second_of_JI);
    }
    F -= rat(s.l) * r_ratio(i1) * r_ratio(j1);
    if (s.l == 3 && j1 == 2) F -= r_ratio(i1) * r_ratio(s.J.at(1));
    if (i1 <= 4) F -= rat(7 - s.l - i1) * r_ratio(j1) * r_ratio(s.I.at(1));
    return F;
}

/// The refined sign classification of f on W_{2b+7}: the five negative
/// families A, B, C, D, E, split further the way the repair proof uses them.
inline Y0Class classify_Kminus(const Composition& K, Part b) {
    detail::require_no_ones(K, 2 * b + 7, "classify_Kminus");
    auto l = detail::y0_suffix_l(K, b);
    if (!l) return Y0Class::NONNEG;
    detail::Y0Split s = detail::y0_split(K, b);
    const Part i1 = s.I.first();
    const Part j1 = s.J.first();

    if (i1 >= 4) {
        if (s.l == 2 && i1 == 4) {
            const Part i2 = s.I.at(1);
            if (j1 == 3 && i2 >= 3) return Y0Class::E1;
            if (i2 == 2 && j1 >= 4) return K.at(2) == 2 ? Y0Class::E2 : Y0Class::E3;
            if (i2 == 3 && (j1 == 4 || j1 == 5)) return Y0Class::E4;
        }
        return Y0Class::E5;
    }
    if (s.l == 2) {
        // f = (3/2) r_{i_2} - 3 here, so negativity additionally needs
        // i_2 >= 3; with i_2 = 2 the coefficient vanishes exactly.
        if (i1 == 3 && j1 == 2 && s.I.at(1) >= 3)
            return s.J.at(1) >= 3 ? Y0Class::B1 : Y0Class::B2;
        return Y0Class::NONNEG;
    }
    // l_K = 3
    if (i1 == 2) {
        const Part i2 = s.I.at(1);
        if (j1 == 2) {
            const Part j2 = s.J.at(1);
            if (j2 == 2) return Y0Class::D1;
            if (j2 == 3) return Y0Class::D2;
            if (j2 == 4 && i2 >= 4) return Y0Class::D3;
            return Y0Class::D4;
        }
        if (j1 == 3 && i2 >= 6) return Y0Class::A;
        return Y0Class::NONNEG;
    }
    // i1 == 3
    const Part i2 = s.I.at(1);
    if (j1 <= 3 * i2 - 3) {
        if (j1 == 2) return Y0Class::C2;
        if (j1 == 4) return Y0Class::C3;
        return Y0Class::C1;
    }
    return Y0Class::NONNEG;
}

/// Documented negative control: drop the donor f(V) from the D3 repair
/// inequality.  The repair genuinely needs it once D3 is nonempty (b >= 3).
struct Y0Mutation {
    bool skip_D3_donor = false;
};

/// Executes the Y_0 progressive-repair proof for a given b: checks the sign
/// characterization of f, the coarse solution F = f + f(phi(.)), the S_2/S_3
/// characterizations, the involution xi with its repair inequalities, donor
/// membership in H and donor distinctness, and finally e-positivity of Y_0
/// itself.
inline CertificateReport certify_Y0(Part b, const Y0Mutation& mutation = {}) {
    if (b < 1) throw std::invalid_argument("certify_Y0: need b >= 1");
    CertificateReport report;
    report.b = b;
    report.target = "Y0";

    const Part n = 2 * b + 7;
    const std::vector<Composition> W = enumerate_no_ones(n);

    std::map<Composition, Rational> f;
    std::map<Composition, Y0Class> label;
    std::vector<Composition> K0, Kminus;
    for (const Composition& K : W) {
        f.emplace(K, f_coeff(K, b));
        label.emplace(K, classify_Kminus(K, b));
        if (detail::y0_suffix_l(K, b)) K0.push_back(K);
        if (f.at(K) < 0) Kminus.push_back(K);
    }

    {
        StepRecord& rec = report.step("prop-f-sign");
        for (const Composition& K : W) {
            bool negative = f.at(K) < 0;
            bool labeled = label.at(K) != Y0Class::NONNEG;
            rec.require(negative == labeled,
                        "sign characterization fails at " + K.to_string() + " (class " +
                            to_string(label.at(K)) + ", f = " + to_fraction_string(f.at(K)) + ")");
        }
    }

    {
        StepRecord& rec = report.step("outside-K0-nonneg");
        for (const Composition& K : W) {
            if (detail::y0_suffix_l(K, b)) continue;
            rec.require(f.at(K) >= 0, "f < 0 outside K_0 at " + K.to_string());
        }
    }

    std::set<Composition> phi_image;
    {
        StepRecord& rec = report.step("phi-injective");
        for (const Composition& K : K0) {
            rec.require(phi_image.insert(phi(K, b)).second, "phi image collision at " + K.to_string());
        }
    }

    {
        StepRecord& rec = report.step("phi-image-nonneg");
        for (const Composition& K : Kminus) {
            Composition H = phi(K, b);
            rec.require(f.at(H) >= 0, "f(phi(K)) < 0 at K = " + K.to_string());
        }
    }

    std::map<Composition, Rational> F;
    for (const Composition& K : K0) F.emplace(K, f.at(K) + f.at(phi(K, b)));

    {
        StepRecord& rec = report.step("F-closed-form");
        for (const Composition& K : K0) {
            detail::Y0Split s = detail::y0_split(K, b);
            if (s.l + s.I.first() < 5) continue;
            rec.require(F.at(K) == F_closed_form(K, b), "closed form of F fails at " + K.to_string());
        }
    }

    {
        StepRecord& rec = report.step("S2-characterization");
        for (const Composition& K : K0) {
            detail::Y0Split s = detail::y0_split(K, b);
            if (s.l != 2) continue;
            const Part i1 = s.I.first();
            const Part j1 = s.J.first();
            const Part i2 = s.I.length() >= 2 ? s.I.at(1) : 0;
            bool case1 = i1 == 4 && i2 == 2 && j1 >= 4;
            bool case2 = i1 == 4 && i2 == 3 && (j1 == 4 || j1 == 5);
            bool in_S2 = f.at(K) < 0 && F.at(K) < 0;
            rec.require(in_S2 == (case1 || case2), "S2 membership mismatch at " + K.to_string());
            if (case1 || case2) {
                Rational expect = (rat(8) - rat(2) * r_ratio(j1) -
                                   rat(3) * r_ratio(i2) * r_ratio(j1)) / rat(3);
                rec.require(F.at(K) == expect, "S2 F-formula fails at " + K.to_string());
            }
        }
    }

    {
        StepRecord& rec = report.step("S3-characterization");
        for (const Composition& K : K0) {
            detail::Y0Split s = detail::y0_split(K, b);
            if (s.l != 3) continue;
            const Part i1 = s.I.first();
            const Part j1 = s.J.first();
            const Part i2 = s.I.length() >= 2 ? s.I.at(1) : 0;
            const Part j2 = s.J.length() >= 2 ? s.J.at(1) : 0;
            bool case1 = i1 == 3 && j1 == 2 && 5 * i2 - j2 - 3 <= 0;
            bool case2 = i1 == 3 && j1 == 4 && i2 >= 3;
            bool case3 = i1 == 2 && j1 == 2 && j2 >= 3;
            bool in_S3 = f.at(K) < 0 && F.at(K) < 0;
            rec.require(in_S3 == (case1 || case2 || case3), "S3 membership mismatch at " + K.to_string());
            if (case1)
                rec.require(F.at(K) == (rat(5) * r_ratio(j2) - r_ratio(i2) - rat(4)) / rat(2),
                            "S3 case-1 F-formula fails at " + K.to_string());
            if (case2)
                rec.require(F.at(K) == (r_ratio(i2) - rat(2)) / rat(6),
                            "S3 case-2 F-formula fails at " + K.to_string());
            if (case3)
                rec.require(F.at(K) == rat(2) * (r_ratio(j2) - rat(2)),
                            "S3 case-3 F-formula fails at " + K.to_string());
        }
    }

    // Pattern maps of the repair step, each with its inverse so the pairing
    // can be checked as a genuine involution.  The D2 partner 3P22Q can have
    // f = 0 (when p_1 = 2), so partners are validated by factor pattern, not
    // by their sign class.
    auto cat = [](const Composition& a, const Composition& c2, const Composition& d,
                  const Composition& e) {
        return Composition::concat(Composition::concat(a, c2), Composition::concat(d, e));
    };
    auto xi_C2 = [&](const Composition& K) {  // 3P2Q <-> 3Q2P
        detail::Y0Split s = detail::y0_split(K, b);
        return cat(Composition({3}), s.J.drop(1), Composition({2}), s.I.drop(1));
    };
    auto map_C3 = [&](const Composition& K) {  // 3P4Q -> 4P3Q
        detail::Y0Split s = detail::y0_split(K, b);
        return cat(Composition({4}), s.I.drop(1), Composition({3}), s.J.drop(1));
    };
    auto inv_E1 = [&](const Composition& K) {  // 4P3Q -> 3P4Q
        detail::Y0Split s = detail::y0_split(K, b);
        return cat(Composition({3}), s.I.drop(1), Composition({4}), s.J.drop(1));
    };
    auto map_D2 = [&](const Composition& K) {  // 2P23Q -> 3P22Q
        detail::Y0Split s = detail::y0_split(K, b);
        return cat(Composition({3}), s.I.drop(1), Composition({2, 2}), s.J.drop(2));
    };
    auto inv_B2pattern = [&](const Composition& K) {  // 3P22Q -> 2P23Q
        detail::Y0Split s = detail::y0_split(K, b);
        return cat(Composition({2}), s.I.drop(1), Composition({2, 3}), s.J.drop(2));
    };
    auto map_D3 = [&](const Composition& K) {  // 2P24Q -> 422QP
        detail::Y0Split s = detail::y0_split(K, b);
        return cat(Composition({4, 2, 2}), s.J.drop(2), s.I.drop(1), Composition{});
    };
    auto inv_E2 = [&](const Composition& K) {  // 422QP -> 2P24Q
        detail::Y0Split s = detail::y0_split(K, b);
        return cat(Composition({2}), s.J, Composition({2, 4}), s.I.drop(3));
    };

    auto in_H = [&](const Composition& U) {
        return f.count(U) && f.at(U) >= 0 && phi_image.count(U) == 0;
    };

    // Every negative f-value is covered by one repair unit: the unit's member
    // compositions all share an underlying partition, the sum of their
    // f-values clears the claimed bound, no two units share a member, and
    // together they absorb all of K^-.  Donors must in addition come from H.
    struct RepairUnit {
        std::string origin;
        std::vector<Composition> members;
        Rational total;
        bool strict;
    };
    std::vector<RepairUnit> units;

    {
        StepRecord& rec = report.step("xi-involution");
        auto with_phi = [&](std::initializer_list<Composition> drivers) {
            std::vector<Composition> members;
            for (const Composition& K : drivers) {
                members.push_back(K);
                members.push_back(phi(K, b));
            }
            return members;
        };
        auto sum_f = [&](const std::vector<Composition>& members) {
            Rational total(0);
            for (const Composition& K : members) total += f.at(K);
            return total;
        };
        auto push_unit = [&](const std::string& origin, std::vector<Composition> members,
                             bool strict) {
            units.push_back(RepairUnit{origin, members, sum_f(members), strict});
        };

        for (const Composition& K : Kminus) {
            const Y0Class cls = label.at(K);
            const std::string where = to_string(cls) + " " + K.to_string();
            switch (cls) {
                case Y0Class::A:
                case Y0Class::B1:
                case Y0Class::C1:
                case Y0Class::D1:
                case Y0Class::E5:
                    rec.pass();
                    push_unit("F1 " + where, with_phi({K}), false);
                    break;
                case Y0Class::D4: {
                    detail::Y0Split s = detail::y0_split(K, b);
                    // K = 2 P 2 j2 Q  ->  U = 2 2 Q j2 P
                    Composition U = cat(Composition({2, 2}), s.J.drop(2),
                                        Composition({s.J.at(1)}), s.I.drop(1));
                    rec.require(in_H(U), "donor outside H at " + where);
                    auto members = with_phi({K});
                    members.push_back(U);
                    push_unit("F2 " + where, members, true);
                    break;
                }
                case Y0Class::E3:
                case Y0Class::E4: {
                    detail::Y0Split s = detail::y0_split(K, b);
                    // K = 4 S T  ->  U = S 4 T
                    Composition U = cat(s.I.drop(1), Composition({4}), s.J, Composition{});
                    rec.require(in_H(U), "donor outside H at " + where);
                    auto members = with_phi({K});
                    members.push_back(U);
                    push_unit("F2 " + where, members, true);
                    break;
                }
                case Y0Class::C2: {
                    Composition K1 = xi_C2(K);
                    rec.require(label.count(K1) && label.at(K1) == Y0Class::C2 && xi_C2(K1) == K,
                                "xi is not a C2 involution at " + where);
                    if (K < K1) break;  // the partner drives this pair
                    push_unit("C2 " + where, K == K1 ? with_phi({K}) : with_phi({K, K1}), true);
                    break;
                }
                case Y0Class::C3: {
                    Composition K1 = map_C3(K);
                    rec.require(label.count(K1) && label.at(K1) == Y0Class::E1 && inv_E1(K1) == K,
                                "xi does not pair C3 with E1 at " + where);
                    push_unit("C3 " + where, with_phi({K, K1}), true);
                    break;
                }
                case Y0Class::D2: {
                    Composition K1 = map_D2(K);
                    // The partner has the 3P22Q pattern; its f-value is
                    // (3/2)(r_{p_1} - 2) <= 0, reaching 0 when p_1 = 2.
                    bool pattern_ok = f.count(K1) && inv_B2pattern(K1) == K && f.at(K1) <= 0 &&
                                      (label.at(K1) == Y0Class::B2 || f.at(K1) == 0);
                    rec.require(pattern_ok, "xi does not pair D2 with the 3P22Q pattern at " + where);
                    push_unit("D2 " + where, with_phi({K, K1}), true);
                    break;
                }
                case Y0Class::D3: {
                    Composition K1 = map_D3(K);
                    rec.require(label.count(K1) && label.at(K1) == Y0Class::E2 && inv_E2(K1) == K,
                                "xi does not pair D3 with E2 at " + where);
                    detail::Y0Split s = detail::y0_split(K, b);
                    Composition V = cat(Composition({2, 2}), s.J.drop(2),
                                        Composition({4}), s.I.drop(1));
                    auto members = with_phi({K, K1});
                    if (!mutation.skip_D3_donor) {
                        rec.require(in_H(V), "donor outside H at " + where);
                        members.push_back(V);
                    }
                    push_unit("D3 " + where, members, false);
                    break;
                }
                case Y0Class::B2:
                case Y0Class::E1:
                case Y0Class::E2:
                    rec.pass();  // partner classes; claimed by their drivers
                    break;
                case Y0Class::NONNEG:
                    rec.fail("NONNEG label inside K^- at " + K.to_string());
                    break;
            }
        }
    }

    {
        StepRecord& rec = report.step("repair-inequalities");
        for (const RepairUnit& u : units) {
            bool ok = u.strict ? u.total > 0 : u.total >= 0;
            rec.require(ok, "unit sum " + std::string(u.strict ? "<= 0" : "< 0") + " for " + u.origin);
        }
    }

    {
        StepRecord& rec = report.step("unit-disjointness");
        std::set<Composition> spent;
        for (const RepairUnit& u : units) {
            Partition rho = underlying_partition(u.members.front());
            bool homogeneous = true;
            for (const Composition& K : u.members) {
                if (underlying_partition(K) != rho) homogeneous = false;
                rec.require(spent.insert(K).second, "composition spent twice: " + K.to_string() +
                                                        " (unit " + u.origin + ")");
            }
            rec.require(homogeneous, "unit mixes underlying partitions: " + u.origin);
        }
    }

    {
        StepRecord& rec = report.step("kminus-coverage");
        std::set<Composition> spent;
        for (const RepairUnit& u : units)
            spent.insert(u.members.begin(), u.members.end());
        for (const Composition& K : Kminus) {
            rec.require(spent.count(K) > 0, "negative composition left unrepaired: " + K.to_string());
        }
    }

    {
        StepRecord& rec = report.step("final-e-positive");
        PositivityResult pos = is_e_positive(project(compute_Y0(b)));
        rec.require(pos.positive, "Y0 has a negative e-coefficient");
        if (!pos.positive) report.witness = pos.witness;
    }

    report.finalize();
    return report;
}

}  // namespace csfkit

#endif
