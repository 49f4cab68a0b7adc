#ifndef CSFKIT_CERTIFY_Y2_HPP
#define CSFKIT_CERTIFY_Y2_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "csfkit/certificate.hpp"
#include "csfkit/trinacria.hpp"

namespace csfkit {

/// Documented negative control: evaluate the defining coefficient of Y_2 as
/// a flat 2 instead of 2 + chi(k_1 = 2).  A certifier worth trusting must
/// reject the mutated formula.
struct Y2Mutation {
    bool drop_chi_k1_eq_2 = false;
};

/// Executes the Y_2 rearrangement proof for a given b: builds the eleven-set
/// decomposition of W_{2b+5}, checks the swap bijection phi(IJ) = JI, the
/// claimed c_K values, and that the resulting manifestly nonnegative
/// expansion reproduces Y_2.
inline CertificateReport certify_Y2(Part b, const Y2Mutation& mutation = {}) {
    if (b < 1) throw std::invalid_argument("certify_Y2: need b >= 1");
    CertificateReport report;
    report.b = b;
    report.target = "Y2";

    const Part n = 2 * b + 5;
    const std::vector<Composition> W = enumerate_no_ones(n);

    // The eleven sets of the decomposition, built from their defining
    // factorizations I||J with |I| = b+2..b+5.
    auto glue = [](Part szI, auto&& keepI, Part szJ, auto&& keepJ) {
        std::set<Composition> out;
        for (const Composition& I : enumerate_no_ones(szI)) {
            if (!keepI(I)) continue;
            for (const Composition& J : enumerate_no_ones(szJ)) {
                if (keepJ(J)) out.insert(Composition::concat(I, J));
            }
        }
        return out;
    };
    auto any = [](const Composition&) { return true; };

    std::set<Composition> A2 = glue(b + 2, any, b + 3, [](const Composition& J) { return J.first() >= 4; });
    std::set<Composition> A30 = glue(b + 3, [](const Composition& I) { return I.first() == 2; },
                                     b + 2, [](const Composition& J) { return J.first() >= 3; });
    std::set<Composition> A31 = glue(b + 3, [](const Composition& I) { return I.first() == 2; },
                                     b + 2, [](const Composition& J) { return J.first() == 2; });
    std::set<Composition> A32 = glue(b + 3, [](const Composition& I) { return I.first() == 3; }, b + 2, any);
    std::set<Composition> A = glue(b + 3, [](const Composition& I) { return I.first() >= 4; }, b + 2, any);
    std::set<Composition> A40 = glue(b + 4, [](const Composition& I) { return I.first() >= 3; }, b + 1, any);
    std::set<Composition> A41 = glue(b + 4, [](const Composition& I) { return I.first() == 2 && I.last() == 2; },
                                     b + 1, any);
    std::set<Composition> B = glue(b + 4, [](const Composition& I) { return I.first() == 2 && I.last() >= 3; },
                                   b + 1, any);
    std::set<Composition> A5 = glue(b + 5, [](const Composition& I) { return I.last() == 3; }, b, any);
    std::set<Composition> C = glue(b + 5, [](const Composition& I) { return I.last() >= 4; }, b, any);
    std::set<Composition> D;
    for (const Composition& K : W) {
        bool prefixed = false;
        for (Part delta = 2; delta <= 5; ++delta) {
            if (has_prefix_of_size(K, b + delta)) prefixed = true;
        }
        if (!prefixed) D.insert(K);
    }

    const std::vector<const std::set<Composition>*> sets =
        {&A2, &A30, &A31, &A32, &A, &A40, &A41, &B, &A5, &C, &D};

    {
        StepRecord& rec = report.step("partition-into-eleven-sets");
        std::map<Composition, int> cover;
        for (const auto* s : sets)
            for (const Composition& K : *s) ++cover[K];
        for (const Composition& K : W) {
            auto it = cover.find(K);
            int hits = it == cover.end() ? 0 : it->second;
            rec.require(hits == 1, K.to_string() + " covered " + std::to_string(hits) + " times");
        }
        for (const auto& [K, hits] : cover) {
            if (!std::binary_search(W.begin(), W.end(), K))
                rec.fail(K.to_string() + " generated outside W");
        }
    }

    // phi swaps the factors around the prefix of size b+3.
    auto phi = [&](const Composition& K) {
        auto pc = prefix_part_count(K, b + 3);
        return Composition::concat(K.drop(*pc), K.take(*pc));
    };
    {
        StepRecord& rec = report.step("phi-maps-swap-classes");
        auto image_equals = [&](const std::set<Composition>& from, const std::set<Composition>& to,
                                const std::string& label) {
            std::set<Composition> image;
            for (const Composition& K : from) image.insert(phi(K));
            rec.require(image == to, "phi(" + label + ") does not match its target class");
        };
        image_equals(A31, A41, "A31");
        image_equals(A32, A5, "A32");
        image_equals(A, A2, "A");
    }

    // c_K = 2 + chi(k_1 = 2) - sum of l over prefixes of size b+6-l.
    auto c_of = [&](const Composition& K) {
        std::int64_t c = mutation.drop_chi_k1_eq_2 ? 2 : 2 + (K.first() == 2 ? 1 : 0);
        for (int l = 1; l <= 3; ++l) {
            if (has_prefix_of_size(K, b + 6 - l)) c -= l;
        }
        return c;
    };
    {
        StepRecord& rec = report.step("c-value-case-table");
        for (const Composition& K : A31)
            rec.require(c_of(K) + c_of(phi(K)) == 0, "c_K + c_H != 0 at " + K.to_string());
        for (const Composition& K : A32)
            rec.require(c_of(K) + c_of(phi(K)) == 0, "c_K + c_H != 0 at " + K.to_string());
        for (const Composition& K : A)
            rec.require(c_of(K) + c_of(phi(K)) == 1, "c_K + c_H != 1 at " + K.to_string());
        for (const Composition& K : A30)
            rec.require(c_of(K) == 0, "c_K != 0 at " + K.to_string());
        for (const Composition& K : A40)
            rec.require(c_of(K) == 0, "c_K != 0 at " + K.to_string());
        for (const Composition& K : B)
            rec.require(c_of(K) == 1, "c_K != 1 at " + K.to_string());
        for (const Composition& K : C)
            rec.require(c_of(K) == 1 + (K.first() == 2 ? 1 : 0), "c_K mismatch at " + K.to_string());
        for (const Composition& K : D)
            rec.require(c_of(K) == 2 + (K.first() == 2 ? 1 : 0), "c_K mismatch at " + K.to_string());
    }

    // Assemble the positive expansion of the lemma and compare with Y_2.
    {
        StepRecord& rec = report.step("positive-expansion-reproduces-Y2");
        CompExpansion assembled(n);
        auto w1 = [](const Composition& K) { return detail::product_parts_minus_one(K); };
        for (const Composition& K : A) assembled.add_term(K, rat(w1(K)));
        for (const Composition& K : B) assembled.add_term(K, rat(w1(K)));
        for (const Composition& K : C)
            assembled.add_term(K, rat((1 + (K.first() == 2 ? 1 : 0)) * w1(K)));
        for (const Composition& K : D)
            assembled.add_term(K, rat((2 + (K.first() == 2 ? 1 : 0)) * w1(K)));
        for (const auto& [K, coeff] : assembled.terms())
            rec.require(coeff >= 0, "negative coefficient in positive expansion at " + K.to_string());

        // Cross-check the expansion against the defining formula, both of
        // which carry the mutation switch so a transcription error on either
        // side is caught.
        CompExpansion y2 = compute_Y2(b);
        if (mutation.drop_chi_k1_eq_2) {
            y2 = CompExpansion(n);
            for (const Composition& K : W)
                y2.add_term(K, rat(c_of(K) * w1(K)));
        }
        ESym lhs = project(assembled);
        ESym rhs = project(y2);
        if (lhs == rhs) {
            rec.pass();
        } else {
            ESym diff = subtract(lhs, rhs);
            rec.fail("assembled expansion differs from Y2, e.g. at e" +
                     diff.terms().begin()->first.to_string());
        }
    }

    {
        StepRecord& rec = report.step("final-e-positive");
        PositivityResult pos = is_e_positive(project(compute_Y2(b)));
        rec.require(pos.positive, "Y2 has a negative e-coefficient");
        if (!pos.positive) report.witness = pos.witness;
    }

    report.finalize();
    return report;
}

}  // namespace csfkit

#endif
