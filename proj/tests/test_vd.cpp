#include <doctest.h>

#include <stdexcept>

#include "circ/homology.hpp"
#include "circ/vd.hpp"
#include "oracles.hpp"

using namespace circ;

namespace {

SimplicialComplex octahedron() { return independence_complex(build(6, {3})); }
SimplicialComplex paley() { return independence_complex(from_complement(17, {1, 2, 4, 8})); }

std::vector<std::vector<int>> all_nonempty_sets(int n) {
    std::vector<std::vector<int>> out;
    for (int mask = 1; mask < (1 << (n / 2)); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < n / 2; ++i) {
            if ((mask >> i) & 1) s.push_back(i + 1);
        }
        out.push_back(s);
    }
    return out;
}

}  // namespace

TEST_CASE("small vertex decomposable complexes") {
    CHECK(is_vd_recursive(SimplicialComplex::empty_face_complex(3)));
    CHECK(is_vd_recursive(SimplicialComplex::simplex(4, 0b1111)));
    CHECK(is_vd_recursive(SimplicialComplex(5, {bit(0), bit(2), bit(4)})));
    CHECK(is_vd_recursive(SimplicialComplex(4, {0b0011, 0b0110, 0b1100})));
    CHECK_FALSE(is_vd_recursive(SimplicialComplex(4, {0b0011, 0b1100})));
    CHECK(is_vd_recursive(octahedron()));
    CHECK(is_vd_recursive(paley()));
    CHECK_THROWS_AS(is_vd_recursive(independence_complex(build(6, {1}))), std::invalid_argument);
}

TEST_CASE("one-dimensional complexes are vertex decomposable iff connected") {
    for (int n = 3; n <= 16; ++n) {
        for (const auto& sbar : all_nonempty_sets(n)) {
            const auto c = independence_complex(from_complement(n, sbar));
            if (!c.is_pure() || c.dim() != 1) continue;
            REQUIRE(is_vd_recursive(c) == is_connected(c));
        }
    }
}

TEST_CASE("vd implies Cohen-Macaulay for pure circulant complexes, n <= 14") {
    for (int n = 3; n <= 14; ++n) {
        for (const auto& sbar : all_nonempty_sets(n)) {
            const auto c = independence_complex(from_complement(n, sbar));
            if (!c.is_pure()) continue;
            if (is_vd_recursive(c)) REQUIRE(is_cohen_macaulay(c, Field::rationals()));
        }
    }
}

TEST_CASE("decomposition chain") {
    const auto chain = vd_decomposition(octahedron());
    REQUIRE(chain.has_value());
    CHECK(chain->order.size() == 3);
    CHECK(popcount(chain->terminal) == 3);
    CHECK(octahedron().has_face(chain->terminal));
    CHECK_FALSE(vd_decomposition(SimplicialComplex(4, {0b0011, 0b1100})).has_value());
}

TEST_CASE("family shedding sequence") {
    SUBCASE("sequence shape") {
        const auto seq = theorem1_sequence(3);
        CHECK(seq.size() == 21);
        CHECK(seq.front() == 1);
        CHECK(seq.back() == 23);
        for (int v : seq) {
            CHECK(v != 8);
            CHECK(v != 16);
        }
        CHECK(theorem1_sequence(4).size() == 45);
        CHECK_THROWS_AS(theorem1_sequence(2), std::invalid_argument);
    }
    SUBCASE("m = 3 and m = 4 walks succeed") {
        for (int m : {3, 4}) {
            const auto c = independence_complex(family_graph(m));
            const auto outcome = verify_shedding_sequence(c, theorem1_sequence(m));
            INFO("m=" << m << " reason=" << outcome.reason);
            CHECK(outcome.ok());
            CHECK(outcome.steps.size() == theorem1_sequence(m).size());
            CHECK(outcome.terminal == (bit(0) | bit(1 << m) | bit(1 << (m + 1))));
            for (const auto& s : outcome.steps) {
                CHECK(s.connected);
                CHECK(s.link_dim == 1);
            }
            const auto cert = outcome.certificate(theorem1_sequence(m));
            CHECK(cert.terminal == outcome.terminal);
            CHECK(cert.step_links.size() == cert.order.size());
        }
    }
    SUBCASE("first link for m = 3 is the 10-vertex link of vertex 1") {
        const auto c = independence_complex(family_graph(3));
        const auto outcome = verify_shedding_sequence(c, theorem1_sequence(3));
        CHECK(outcome.steps.front().vertex == 1);
        CHECK(outcome.steps.front().link_vertices == 10);
        CHECK(outcome.steps.front().link_edges == 16);
    }
    SUBCASE("putting 8 first breaks the walk") {
        // 8 takes the place of 1, so the walk would have to end at {0,1,16}.
        const auto c = independence_complex(family_graph(3));
        auto order = theorem1_sequence(3);
        order.front() = 8;
        const auto outcome = verify_shedding_sequence(c, order);
        CHECK_FALSE(outcome.ok());
        CHECK(*outcome.failed_step == 15);
        CHECK(outcome.steps[15].vertex == 18);
        CHECK_FALSE(outcome.steps[15].connected);
        CHECK(outcome.reason == "link of 18 is disconnected");
    }
    SUBCASE("8 first and 23 kept is another valid order") {
        const auto c = independence_complex(family_graph(3));
        std::vector<int> order{8};
        for (int v : theorem1_sequence(3)) {
            if (v != 23) order.push_back(v);
        }
        const auto outcome = verify_shedding_sequence(c, order);
        CHECK(outcome.ok());
        CHECK(outcome.terminal == (bit(0) | bit(16) | bit(23)));
    }
}

TEST_CASE("shedding walk argument checks") {
    const auto oct = octahedron();
    CHECK_THROWS_AS(verify_shedding_sequence(oct, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(verify_shedding_sequence(oct, {0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(verify_shedding_sequence(oct, {0, 1, 9}), std::invalid_argument);
    CHECK_THROWS_AS(verify_shedding_sequence(independence_complex(build(6, {1, 2})), {}), std::invalid_argument);
    const auto tri = SimplicialComplex::simplex(3, 0b111);
    const auto outcome = verify_shedding_sequence(tri, {});
    CHECK(outcome.ok());
    CHECK(outcome.terminal == 0b111);
}

TEST_CASE("octahedron walks") {
    const auto oct = octahedron();
    // Deleting 0 leaves the four triangles around 3.
    const auto good = verify_shedding_sequence(oct, {0, 1, 2});
    CHECK(good.ok());
    CHECK(good.terminal == (bit(3) | bit(4) | bit(5)));
    // Deleting the cone point 3 is allowed, but it leaves a 4-cycle where the link of 1 is two points.
    const auto bad = verify_shedding_sequence(oct, {0, 3, 1});
    CHECK_FALSE(bad.ok());
    CHECK(*bad.failed_step == 2);
    CHECK(bad.steps[1].connected);
    CHECK(bad.steps[2].link_dim == 0);
}

TEST_CASE("recursive test and sequence search agree on pure 2-dimensional connected circulants, n <= 17") {
    int checked = 0;
    for (int n = 3; n <= 17; ++n) {
        for (const auto& sbar : all_nonempty_sets(n)) {
            const auto c = independence_complex(from_complement(n, sbar));
            if (!c.is_pure() || c.dim() != 2 || !is_connected(c)) continue;
            const bool vd = is_vd_recursive(c);
            const auto seq = find_shedding_sequence(c);
            INFO("n=" << n);
            REQUIRE(vd == seq.has_value());
            if (seq) REQUIRE(verify_shedding_sequence(c, *seq).ok());
            const auto chain = vd_decomposition(c);
            REQUIRE(chain.has_value() == vd);
            if (chain) REQUIRE(verify_shedding_sequence(c, chain->order).ok());
            ++checked;
        }
    }
    CHECK(checked > 20);
}
