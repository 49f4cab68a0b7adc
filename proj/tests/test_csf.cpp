#include <gtest/gtest.h>

#include <array>
#include <vector>

#include "csfkit/csf.hpp"

using namespace csfkit;

namespace {

ESym esym_of(std::initializer_list<std::pair<Partition, Rational>> terms, Part degree) {
    ESym f(degree);
    for (const auto& [k, c] : terms) f.add_term(k, c);
    return f;
}

Graph without_triangle(const Graph& g) {
    std::vector<Edge> rest;
    for (Edge e : g.edges()) {
        bool tri = e.first <= 2 && e.second <= 2;
        if (!tri) rest.push_back(e);
    }
    return Graph(g.vertex_count(), rest);
}

}  // namespace

TEST(OracleAnchors, SpecValues) {
    EXPECT_EQ(csf_oracle(Graph::path(3)),
              esym_of({{Partition{3}, rat(3)}, {Partition{2, 1}, rat(1)}}, 3));

    EXPECT_EQ(csf_oracle(Graph::trinacria(0, 0, 0)), esym_of({{Partition{3}, rat(6)}}, 3));

    ESym claw = esym_of({{Partition{4}, rat(4)},
                         {Partition{3, 1}, rat(5)},
                         {Partition{2, 2}, rat(-2)},
                         {Partition{2, 1, 1}, rat(1)}},
                        4);
    EXPECT_EQ(csf_oracle(Graph::spider(Partition{1, 1, 1})), claw);
}

TEST(PathFormula, SpecValues) {
    CompExpansion p2 = csf_path(2);
    EXPECT_EQ(p2.coeff(Composition{2}), rat(2));
    EXPECT_EQ(p2.coeff(Composition{1, 1}), rat(0));
    EXPECT_EQ(p2.term_count(), 1u);

    CompExpansion p3 = csf_path(3);
    EXPECT_EQ(p3.coeff(Composition{3}), rat(3));
    EXPECT_EQ(p3.coeff(Composition{1, 2}), rat(1));
    EXPECT_EQ(p3.term_count(), 2u);

    EXPECT_EQ(project(csf_path(4)),
              esym_of({{Partition{4}, rat(4)}, {Partition{3, 1}, rat(2)}, {Partition{2, 2}, rat(2)}}, 4));

    EXPECT_EQ(csf_path(0), CompExpansion::unit());
}

TEST(PathFormula, MatchesOracle) {
    for (Part n = 1; n <= 9; ++n) {
        EXPECT_EQ(project(csf_path(n)), csf_oracle(Graph::path(static_cast<int>(n)))) << "n = " << n;
    }
}

TEST(SpiderFormula, SpecValues) {
    ESym claw = csf_oracle(Graph::spider(Partition{1, 1, 1}));
    EXPECT_EQ(csf_spider_abc(1, 1, 1), claw);
    EXPECT_EQ(csf_spider_abc(2, 1, 1), csf_oracle(Graph::spider(Partition{2, 1, 1})));
    EXPECT_EQ(csf_spider_abc(3, 2, 1), csf_oracle(Graph::spider(Partition{3, 2, 1})));
    EXPECT_THROW(csf_spider_abc(2, 1, 0), std::invalid_argument);
    // leg order must not matter
    EXPECT_EQ(csf_spider_abc(1, 3, 2), csf_spider_abc(3, 2, 1));
}

TEST(TrinacriaFormula, SpecValues) {
    ESym net = csf_trinacria(1, 1, 1);
    EXPECT_EQ(net, csf_oracle(Graph::trinacria(1, 1, 1)));
    EXPECT_FALSE(is_e_positive(net).positive);

    EXPECT_FALSE(is_e_positive(csf_trinacria(2, 2, 2)).positive);

    ESym t312 = csf_trinacria(3, 1, 2);
    EXPECT_EQ(t312, csf_oracle(Graph::trinacria(3, 1, 2)));
    EXPECT_TRUE(is_e_positive(t312).positive);

    EXPECT_THROW(csf_trinacria(1, 1, 0), std::invalid_argument);
    EXPECT_EQ(csf_trinacria(2, 1, 3), csf_trinacria(3, 2, 1));
}

TEST(TrinacriaFormula, MatchesOracleSmall) {
    for (Part a = 1; a <= 3; ++a) {
        for (Part b = 1; b <= a; ++b) {
            for (Part c = 1; c <= b; ++c) {
                EXPECT_EQ(csf_trinacria(a, b, c), csf_oracle(Graph::trinacria(a, b, c)))
                    << a << b << c;
            }
        }
    }
}

TEST(TripleDeletion, SpecInstances) {
    // Smallest instance: three isolated vertices.
    EXPECT_TRUE(verify_triple_deletion(Graph(3), 0, 1, 2));

    // A path with alternating vertices.
    EXPECT_TRUE(verify_triple_deletion(Graph::path(5), 0, 2, 4));

    // The triple behind the trinacria-to-spider reduction at (1,1,1):
    // the triangle vertices, with the triangle edges removed.
    Graph base = without_triangle(Graph::trinacria(1, 1, 1));
    EXPECT_TRUE(verify_triple_deletion(base, 0, 1, 2));
}

TEST(TripleDeletion, AllThreeLabelings) {
    std::vector<Graph> bases = {Graph::path(6), without_triangle(Graph::trinacria(2, 1, 1))};
    std::vector<std::array<int, 3>> triples = {{0, 2, 4}, {0, 1, 2}};
    for (std::size_t i = 0; i < bases.size(); ++i) {
        auto [t1, t2, t3] = triples[i];
        EXPECT_TRUE(verify_triple_deletion(bases[i], t1, t2, t3));
        EXPECT_TRUE(verify_triple_deletion(bases[i], t2, t3, t1));
        EXPECT_TRUE(verify_triple_deletion(bases[i], t3, t1, t2));
    }
}

TEST(TripleDeletion, RejectsNonStableTriple) {
    EXPECT_THROW(verify_triple_deletion(Graph::path(4), 0, 1, 3), std::invalid_argument);
    EXPECT_THROW(verify_triple_deletion(Graph::path(4), 0, 0, 2), std::invalid_argument);
}

TEST(Oracle, OutputShape) {
    std::vector<Graph> corpus = {Graph::path(6),           Graph::cycle(5),
                                 Graph::spider(Partition{3, 2, 1}), Graph::trinacria(2, 1, 1),
                                 Graph(4, {{0, 1}, {2, 3}})};
    for (const Graph& g : corpus) {
        ESym x = csf_oracle(g);
        const Part n = g.vertex_count();
        EXPECT_EQ(x.degree(), n);
        for (const auto& [lam, c] : x.terms()) {
            EXPECT_EQ(lam.size(), n);
            EXPECT_TRUE(is_integer(c)) << lam.to_string();
        }
        Rational ones = x.coeff(Partition(std::vector<Part>(static_cast<std::size_t>(n), 1)));
        EXPECT_TRUE(is_integer(ones));
        EXPECT_GE(ones, 0);
    }
}
