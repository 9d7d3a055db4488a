#include <qplane/rep_structure.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "test_util.hpp"

using namespace qplane;

namespace {

std::vector<int> chain_for(const std::vector<SubmoduleChain>& chains,
                           int top) {
    for (const SubmoduleChain& c : chains)
        if (c.top_dim == top) return c.dims;
    FAIL("no chain with the requested head dimension");
    return {};
}

}  // namespace

TEST_CASE("regular representation satisfies the H relations",
          "[rep_structure]") {
    for (int n : {3, 5}) {
        CycFieldPtr f = CycField::make(n);
        const RegularRep& r = h_structure(f).regular();
        const int d = h_dim(n);
        CHECK(r.k * r.x_plus == f->q_power(2) * (r.x_plus * r.k));
        CHECK(r.k * r.x_minus == f->q_power(-2) * (r.x_minus * r.k));
        CHECK(r.k.pow(n) == CycMatrix::identity(f, d));
        CHECK(r.x_plus.pow(n).is_zero());
        CHECK(r.x_minus.pow(n).is_zero());
    }
}

TEST_CASE("radical dimension matches the block-model prediction",
          "[rep_structure]") {
    for (int n : {3, 5}) {
        CycFieldPtr f = CycField::make(n);
        long predicted = 0;
        for (const BlockShape& s : block_shapes(n))
            predicted += s.radical_dimension();
        CHECK(h_structure(f).radical().dim() == predicted);
    }
    CHECK(h_structure(CycField::make(3)).radical().dim() == 13);
}

TEST_CASE("radical elements are nilpotent and form an ideal (sampled)",
          "[rep_structure]") {
    CycFieldPtr f = CycField::make(3);
    const HStructure& hs = h_structure(f);
    const std::vector<HElement>& rad = hs.radical_elements();
    REQUIRE(static_cast<int>(rad.size()) == 13);
    std::mt19937 rng(13u);
    std::uniform_int_distribution<std::size_t> pick(0, rad.size() - 1);
    for (int trial = 0; trial < 10; ++trial) {
        const HElement& r = rad[pick(rng)];
        // nilpotency: r^dim falls to zero well before the bound
        HElement p = r;
        bool nil = false;
        for (int i = 0; i < 27 && !nil; ++i) {
            p = p * r;
            nil = p.is_zero();
        }
        CHECK(nil);
        // two-sided ideal: products with random elements stay in the radical
        HElement u = testing::random_hopf(f, rng, 2);
        for (const HElement& prod : {u * r, r * u}) {
            CycMatrix row = h_coords(prod);
            CHECK(hs.radical().contains(row));
        }
    }
}

TEST_CASE("block decomposition of H", "[rep_structure]") {
    for (int n : {3, 5}) {
        CycFieldPtr f = CycField::make(n);
        const HStructure& hs = h_structure(f);
        std::vector<long> dims;
        long total = 0;
        for (const BlockInfo& b : hs.blocks()) {
            dims.push_back(b.dimension);
            total += b.dimension;
            CHECK(b.dimension == b.shape.complex_dimension());
            // the defining idempotent really is idempotent and central
            CHECK(b.idempotent * b.idempotent == b.idempotent);
            for (const HElement& g :
                 {HElement::k(f), HElement::x_plus(f), HElement::x_minus(f)})
                CHECK(g * b.idempotent == b.idempotent * g);
        }
        CHECK(total == static_cast<long>(n) * n * n);
        std::sort(dims.begin(), dims.end());
        if (n == 3) CHECK(dims == std::vector<long>{9, 18});
        if (n == 5) CHECK(dims == std::vector<long>{25, 50, 50});
    }
}

TEST_CASE("PIM submodule chains", "[rep_structure]") {
    {
        std::vector<SubmoduleChain> chains = pim_chains(CycField::make(3));
        REQUIRE(chains.size() == 3);
        CHECK(chain_for(chains, 3) == std::vector<int>{0, 3});
        CHECK(chain_for(chains, 2) == std::vector<int>{0, 2, 3, 4, 6});
        CHECK(chain_for(chains, 1) == std::vector<int>{0, 1, 3, 5, 6});
    }
    {
        std::vector<SubmoduleChain> chains = pim_chains(CycField::make(5));
        REQUIRE(chains.size() == 5);
        CHECK(chain_for(chains, 5) == std::vector<int>{0, 5});
        CHECK(chain_for(chains, 4) == std::vector<int>{0, 4, 5, 6, 10});
        CHECK(chain_for(chains, 3) == std::vector<int>{0, 3, 5, 7, 10});
        CHECK(chain_for(chains, 2) == std::vector<int>{0, 2, 5, 8, 10});
        CHECK(chain_for(chains, 1) == std::vector<int>{0, 1, 5, 9, 10});
    }
}

TEST_CASE("middle modules for distinct parameters are non-isomorphic",
          "[rep_structure]") {
    CycFieldPtr f = CycField::make(3);
    const HStructure& hs = h_structure(f);
    for (const PimInfo& pim : hs.pims()) {
        if (pim.top_dim == 3) continue;
        REQUIRE(pim.middles.size() >= 2);
        for (std::size_t i = 0; i < pim.middles.size(); ++i)
            for (std::size_t j = i + 1; j < pim.middles.size(); ++j)
                CHECK(!detail::find_intertwiner(f, pim.middles[i].gens,
                                                pim.middles[j].gens));
    }
}

TEST_CASE("every plane summand matches a middle chain module",
          "[rep_structure]") {
    for (int n : {3, 5}) {
        CycFieldPtr f = CycField::make(n);
        const HStructure& hs = h_structure(f);
        Decomposition d = decompose(f);
        std::vector<SummandMatch> matches = match_summands_to_chains(d);
        REQUIRE(matches.size() == d.summands.size());
        for (std::size_t i = 0; i < matches.size(); ++i) {
            const SummandMatch& m = matches[i];
            const ModuleSummand& s = d.summands[i];
            REQUIRE(m.label == s.label);
            std::vector<CycMatrix> a = s.generator_matrices();
            std::vector<CycMatrix> b;
            if (m.label == n) {
                CHECK(!m.lambda.has_value());
                b = hs.pim(n).gens;
            } else {
                REQUIRE(m.lambda.has_value());
                b = middle_module(f, hs.pim(m.label), *m.lambda).gens;
            }
            // the intertwiner is invertible and commutes with the action
            REQUIRE(m.intertwiner.rows() == n);
            REQUIRE(m.intertwiner.cols() == n);
            CHECK(m.intertwiner.rank() == n);
            for (int g = 0; g < 3; ++g)
                CHECK(m.intertwiner * a[static_cast<std::size_t>(g)] ==
                      b[static_cast<std::size_t>(g)] * m.intertwiner);
        }
    }
}
