#include <qplane/decomposition.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace qplane;

TEST_CASE("decomposition labels and invariant dimensions", "[decomposition]") {
    for (int n : {3, 5}) {
        CycFieldPtr f = CycField::make(n);
        Decomposition d = decompose(f);
        REQUIRE(static_cast<int>(d.summands.size()) == n);
        for (int i = 0; i < n; ++i) {
            const ModuleSummand& s = d.summands[static_cast<std::size_t>(i)];
            CHECK(s.label == n - i);
            CHECK(s.congruence_class == n - i - 1);
            CHECK(static_cast<int>(s.basis.size()) == n);
            CHECK(static_cast<int>(s.invariant_basis.size()) == s.label);
            for (const auto& k : s.basis)
                CHECK((k.first + k.second) % n == s.congruence_class);
        }
    }
}

TEST_CASE("invariant-subspace lattices are chains", "[decomposition]") {
    for (int n : {3, 5}) {
        CycFieldPtr f = CycField::make(n);
        Decomposition d = decompose(f);
        for (const ModuleSummand& s : d.summands) {
            std::vector<Subspace> lattice = invariant_subspaces(s);
            std::vector<int> dims;
            for (const Subspace& sub : lattice) dims.push_back(sub.dim());
            if (s.label == n)
                CHECK(dims == std::vector<int>{0, n});
            else
                CHECK(dims == std::vector<int>{0, s.label, n});
        }
    }
}

TEST_CASE("summand generator matrices satisfy the H relations",
          "[decomposition]") {
    CycFieldPtr f = CycField::make(5);
    Decomposition d = decompose(f);
    for (const ModuleSummand& s : d.summands) {
        std::vector<CycMatrix> g = s.generator_matrices();
        CHECK(g[0] * g[1] == f->q_power(2) * (g[1] * g[0]));
        CHECK(g[0] * g[2] == f->q_power(-2) * (g[2] * g[0]));
        CycScalar denom_inv = (f->q() - f->q_power(-1)).inv();
        CycMatrix kinv = g[0].pow(f->n() - 1);
        CHECK(g[1] * g[2] - g[2] * g[1] == denom_inv * (g[0] - kinv));
        CHECK(g[0].pow(f->n()) == CycMatrix::identity(f, f->n()));
        CHECK(g[1].pow(f->n()).is_zero());
        CHECK(g[2].pow(f->n()).is_zero());
    }
}

TEST_CASE("projection onto summands sums back to the element",
          "[decomposition]") {
    std::mt19937 rng(10u);
    CycFieldPtr f = CycField::make(5);
    Decomposition d = decompose(f);
    for (int trial = 0; trial < 10; ++trial) {
        PlaneElement u = testing::random_plane(f, rng, 6);
        PlaneElement sum(f);
        for (const auto& [label, part] : summand_of(d, u)) {
            (void)label;
            sum += part;
        }
        CHECK(sum == u);
        // each part stays inside its summand under the action
        for (const auto& [label, part] : summand_of(d, u)) {
            PlaneElement moved = act(HElement::x_plus(f), part) +
                                 act(HElement::x_minus(f), part);
            for (const auto& [lbl2, p2] : summand_of(d, moved)) {
                (void)p2;
                CHECK(lbl2 == label);
            }
        }
    }
}
