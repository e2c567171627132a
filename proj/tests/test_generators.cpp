#include <doctest.h>

#include "fsjump/generators.hpp"
#include "fsjump/invariants.hpp"
#include "fsjump/serialize.hpp"

using namespace fsjump;

TEST_CASE("rng is reproducible per case") {
    Rng a = Rng::for_case(7, 3), b = Rng::for_case(7, 3), c = Rng::for_case(7, 4);
    bool differs = false;
    for (int i = 0; i < 100; ++i) {
        const auto va = a.below(1000);
        CHECK(va == b.below(1000));
        differs |= va != c.below(1000);
    }
    CHECK(differs);
    Rng r = Rng::for_case(1, 1);
    for (int i = 0; i < 1000; ++i) {
        CHECK(r.below(7) < 7);
        const auto v = r.between(3, 5);
        CHECK((v >= 3 && v <= 5));
    }
}

TEST_CASE("universe atoms are distinct") {
    const auto u = make_universe(12);
    CHECK(AtomSet(u).size() == 12);
}

TEST_CASE("samples are deterministic in the seed") {
    FuzzConfig cfg;
    cfg.cases = 50;
    const auto s1 = sample_fiber_pairs(cfg), s2 = sample_fiber_pairs(cfg);
    REQUIRE(s1.size() == 50);
    for (std::size_t i = 0; i < s1.size(); ++i) {
        CHECK(to_text(s1[i].p) == to_text(s2[i].p));
        CHECK(to_text(s1[i].q) == to_text(s2[i].q));
    }
    cfg.seed = 1;
    const auto s3 = sample_fiber_pairs(cfg);
    bool differs = false;
    for (std::size_t i = 0; i < s1.size(); ++i) differs |= to_text(s1[i].p) != to_text(s3[i].p);
    CHECK(differs);
}

TEST_CASE("generated ground truth is sound") {
    FuzzConfig cfg;
    cfg.cases = 500;
    std::size_t related = 0;
    for (const auto& fp : sample_fiber_pairs(cfg)) {
        CHECK(fp.p.x().range() == fp.basepoint.range());
        CHECK(fp.q.x().range() == fp.basepoint.range());
        CHECK((e_invariant(fp.p) == e_invariant(fp.q)) == fp.related);
        related += fp.related;
    }
    CHECK(related > 100);
    CHECK(related < 400);

    for (std::uint64_t i = 0; i < 300; ++i) {
        Rng rng = Rng::for_case(9, i);
        const auto [p, family] = random_ppoint(rng, cfg);
        CHECK(e_invariant(p) == family);
    }
}

TEST_CASE("scrambles keep the class") {
    FuzzConfig cfg;
    for (std::uint64_t i = 0; i < 300; ++i) {
        Rng rng = Rng::for_case(10, i);
        const auto rows = random_zrows(rng, cfg);
        CHECK(fs2_invariant(ZCode(scramble_zrows(rng, rows, cfg))) == fs2_invariant(ZCode(rows)));
        const YSeqCode y = random_word_yseq(rng, cfg);
        CHECK(rel_G(y, scramble_word_yseq(rng, y)));
    }
}

TEST_CASE("campaign samples mix related and unrelated pairs") {
    FuzzConfig cfg;
    cfg.cases = 400;
    const auto fs2 = jump(jump(atom_eq()));
    std::size_t related = 0;
    for (const auto& [a, b] : sample_zrow_pairs(cfg)) related += fs2.decide(a, b);
    CHECK(related > 50);
    CHECK(related < 350);

    related = 0;
    for (const auto& [a, b] : sample_ff_pairs(cfg)) related += rel_F(a.first, b.first) && rel_F(a.second, b.second);
    CHECK(related > 50);
    CHECK(related < 350);
}

TEST_CASE("config validation") {
    FuzzConfig cfg;
    cfg.cases = 0;
    CHECK_NOTHROW(cfg.validate());
    cfg.max_period = 0;
    CHECK_THROWS(cfg.validate());
}
