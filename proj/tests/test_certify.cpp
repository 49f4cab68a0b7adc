#include <gtest/gtest.h>

#include "csfkit/certify_y0.hpp"
#include "csfkit/certify_y1.hpp"
#include "csfkit/certify_y2.hpp"
#include "csfkit/json_io.hpp"

using namespace csfkit;

namespace {

std::string failure_digest(const CertificateReport& r) {
    std::string out;
    for (const StepRecord& s : r.steps) {
        if (s.passed()) continue;
        out += s.name + ": ";
        for (const auto& f : s.failures) out += f + "; ";
    }
    return out;
}

}  // namespace

TEST(CertifyY2, VerifiedSmall) {
    for (Part b : {1, 2, 4}) {
        CertificateReport r = certify_Y2(b);
        EXPECT_TRUE(r.verified) << "b = " << b << " " << failure_digest(r);
    }
}

TEST(CertifyY2, MutantRejected) {
    CertificateReport r = certify_Y2(2, Y2Mutation{.drop_chi_k1_eq_2 = true});
    EXPECT_FALSE(r.verified);
}

TEST(CertifyY1, VerifiedSmall) {
    for (Part b : {1, 2, 3, 5}) {
        CertificateReport r = certify_Y1(b);
        EXPECT_TRUE(r.verified) << "b = " << b << " " << failure_digest(r);
    }
}

TEST(CertifyY1, MutantRejected) {
    CertificateReport r = certify_Y1(2, Y1Mutation{.drop_Y12_from_s = true});
    EXPECT_FALSE(r.verified);
}

TEST(CertifyY1, ChargeGroupValues) {
    // Singleton I3J group with i_1 = 3 (b = 1):  c = 3 i_1 - 7 = 2.
    {
        ChargeGroup g{Y1Family::F5, "test", true, {}, {}, {}};
        g.A = {FactoredComposition{{}, Composition{3}, Composition{3}, Composition{2}}};
        g.C = {FactoredComposition{{}, Composition{3}, {}, Composition{2}}};
        EXPECT_EQ(c_value(g, 1), rat(2));
        Composition IJ{3, 2};
        EXPECT_EQ(s_value(g, 1), c_value(g, 1) * rat(w_prime(IJ)));
    }
    // Singleton I22J group with i_1 = 2 (b = 1):  c = 3 (i_1 - 2) = 0.
    {
        ChargeGroup g{Y1Family::F5, "test", false, {}, {}, {}};
        g.A = {FactoredComposition{{}, Composition{2}, Composition{2, 2}, Composition{2}}};
        g.B = {FactoredComposition{{}, Composition{2}, Composition{2}, Composition{2}}};
        EXPECT_EQ(c_value(g, 1), rat(0));
        Composition IJ{2, 2};
        EXPECT_EQ(s_value(g, 1), c_value(g, 1) * rat(w_prime(IJ)));
    }
    // The F6 quadruple with k = 4 and i_1 = 2 (b = 5):  c = (17k - 27)(i_1 - 1) = 41.
    {
        Composition I{2}, J{2, 3};
        ChargeGroup g{Y1Family::F6, "test", true, {}, {}, {}};
        g.A = {FactoredComposition{Composition{2}, I, Composition{4, 3}, J},
               FactoredComposition{Composition{3}, I, Composition{4, 2}, J},
               FactoredComposition{Composition{4}, I, Composition{2, 3}, J},
               FactoredComposition{Composition{4}, I, Composition{3, 2}, J}};
        g.B = {FactoredComposition{Composition{3}, I, Composition{4}, J},
               FactoredComposition{Composition{4}, I, Composition{3}, J}};
        g.C = {FactoredComposition{Composition{2}, I, Composition{4}, J},
               FactoredComposition{Composition{4}, I, Composition{2}, J}};
        EXPECT_EQ(c_value(g, 5), rat(41));
        Composition IJ{2, 2, 3};
        EXPECT_EQ(s_value(g, 5), rat(41) * rat(w_prime(IJ)));
    }
}

TEST(CertifyY0, VerifiedSmall) {
    for (Part b : {1, 2, 3, 6}) {
        CertificateReport r = certify_Y0(b);
        EXPECT_TRUE(r.verified) << "b = " << b << " " << failure_digest(r);
    }
}

TEST(CertifyY0, MutantRejected) {
    // D3 is nonempty for b = 3 and b >= 5 (its inner factor has size b-3,
    // which cannot be 1), and the dropped donor bites exactly there.
    CertificateReport r3 = certify_Y0(3, Y0Mutation{.skip_D3_donor = true});
    EXPECT_FALSE(r3.verified);
    CertificateReport r5 = certify_Y0(5, Y0Mutation{.skip_D3_donor = true});
    EXPECT_FALSE(r5.verified);
}

TEST(CertifyY0, PhiAndFValues) {
    EXPECT_EQ(phi(Composition{5, 4}, 1), Composition({4, 5}));
    EXPECT_EQ(f_coeff(Composition{4, 5}, 1), rat(8, 3));
    EXPECT_EQ(F_value(Composition{5, 4}, 1), rat(1, 6));
    EXPECT_THROW(phi(Composition{9}, 1), std::invalid_argument);
}

TEST(CertifyY0, Classification) {
    EXPECT_EQ(classify_Kminus(Composition{6, 3}, 1), Y0Class::E5);
    EXPECT_EQ(f_coeff(Composition{6, 3}, 1), rat(-6, 5));
    EXPECT_EQ(classify_Kminus(Composition{3, 6}, 1), Y0Class::NONNEG);
    // 2 r_3 + (3/2) r_6; cross-checked against the four-sum route, whose
    // e_{[3,6]} coefficient is 2 w_{36} + 3 w_6 = 48 = (24/5) * 10.
    EXPECT_EQ(f_coeff(Composition{3, 6}, 1), rat(24, 5));
    EXPECT_EQ(classify_Kminus(Composition{9}, 1), Y0Class::NONNEG);
    EXPECT_EQ(f_coeff(Composition{9}, 1), rat(9, 4));
    EXPECT_THROW(classify_Kminus(Composition{4, 4}, 1), std::invalid_argument);
}

TEST(CertifyY0, ClassificationMatchesSign) {
    for (Part b = 1; b <= 5; ++b) {
        for (const Composition& K : enumerate_no_ones(2 * b + 7)) {
            EXPECT_EQ(classify_Kminus(K, b) != Y0Class::NONNEG, f_coeff(K, b) < 0)
                << "b = " << b << " K = " << K.to_string();
        }
    }
}

TEST(CertifyY0, ClosedFormOfF) {
    for (Part b = 1; b <= 4; ++b) {
        for (const Composition& K : enumerate_no_ones(2 * b + 7)) {
            if (!has_suffix_of_size(K, b + 2) && !has_suffix_of_size(K, b + 3)) continue;
            int l = has_suffix_of_size(K, b + 2) ? 2 : 3;
            auto pc = prefix_part_count(K, K.size() - (b + l));
            if (l + K.take(*pc).first() < 5) continue;
            EXPECT_EQ(F_value(K, b), F_closed_form(K, b)) << K.to_string();
        }
    }
}

TEST(Reports, JsonSchema) {
    CertificateReport r = certify_Y0(1);
    json doc = report_to_json(r);
    EXPECT_EQ(doc["b"], 1);
    EXPECT_EQ(doc["target"], "Y0");
    EXPECT_TRUE(doc["verified"].get<bool>());
    EXPECT_TRUE(doc["witness"].is_null());
    ASSERT_FALSE(doc["steps"].empty());
    for (const auto& step : doc["steps"]) {
        EXPECT_TRUE(step.contains("name"));
        EXPECT_TRUE(step.contains("checked"));
        EXPECT_TRUE(step["failures"].is_array());
    }
    bool saw_prop_f_sign = false;
    for (const auto& step : doc["steps"]) {
        if (step["name"] == "prop-f-sign") {
            saw_prop_f_sign = true;
            EXPECT_EQ(step["checked"], 21);  // |W_9|
        }
    }
    EXPECT_TRUE(saw_prop_f_sign);
}
