#include <doctest.h>

#include <set>

#include "fsjump/errors.hpp"
#include "fsjump/invariants.hpp"
#include "test_support.hpp"

using namespace fsjump;
using fsjump::testing::TestRng;

namespace {

const Atom a = Atom::rational(1);
const Atom b = Atom::rational(2);

AtomSeqCode cyc(AtomList l) { return AtomSeqCode::cyclic(std::move(l)); }

// Number of nonempty families of nonempty subsets of an n-set, by listing
// every family as a bitmask over the 2^n - 1 nonempty subsets. A family is
// admissible iff it is nonempty; its union is then some nonempty range.
std::uint64_t families_by_bitmask(unsigned n) {
    const unsigned subsets = (1U << n) - 1;
    std::set<std::uint64_t> seen;
    for (std::uint64_t fam = 1; fam < (std::uint64_t{1} << subsets); ++fam) {
        unsigned uni = 0;
        for (unsigned s = 0; s < subsets; ++s)
            if (fam >> s & 1U) uni |= s + 1;
        if (uni != 0) seen.insert(fam);
    }
    return seen.size();
}

std::uint64_t ranges_by_bitmask(unsigned n) {
    std::set<unsigned> seen;
    for (unsigned r = 1; r < (1U << n); ++r) seen.insert(r);
    return seen.size();
}

}  // namespace

TEST_CASE("f_invariant") {
    CHECK(f_invariant(cyc({b, a})) == AtomSet{a, b});
    CHECK(f_invariant(AtomSeqCode::pair_merge(ZCode({{a}, {a, b}}))) == AtomSet{a, b});
    TestRng rng(31);
    for (int t = 0; t < 1000; ++t) {
        const auto x = rng.aseq(3, 3), y = rng.aseq(3, 3);
        CHECK((f_invariant(x) == f_invariant(y)) == rel_F(x, y));
    }
}

TEST_CASE("e_invariant") {
    const Atom blue = Atom::rational(10), red = Atom::rational(11), green = Atom::rational(12),
               yellow = Atom::rational(13);
    const PPoint p = p_membership(cyc({blue, red, green, yellow}),
                                  YSeqCode({BinSeqCode::word("0011"), BinSeqCode::word("1110"),
                                            BinSeqCode::word("0101")}));
    CHECK(e_invariant(p) == SetOfAtomSets{{green, yellow}, {blue, red, green}, {red, yellow}});
    const PPoint dup = p_membership(cyc({blue, red, green, yellow}),
                                    YSeqCode({BinSeqCode::word("0011"), BinSeqCode::word("1110"),
                                              BinSeqCode::word("0101"), BinSeqCode::word("0011")}));
    CHECK(e_invariant(dup) == e_invariant(p));

    TestRng rng(32);
    const AtomSeqCode x = cyc({a, b, a});
    const std::vector<const char*> pool{"101", "010", "1", "101101"};
    auto gen = [&] {
        std::vector<BinSeqCode> e{BinSeqCode::word("1")};
        for (int i = rng.range(0, 3); i > 0; --i) e.push_back(BinSeqCode::word(pool[rng.range(0, 3)]));
        rng.shuffle(e);
        return p_membership(x, YSeqCode(std::move(e)));
    };
    for (int t = 0; t < 1000; ++t) {
        const PPoint p1 = gen(), p2 = gen();
        CHECK((e_invariant(p1) == e_invariant(p2)) == rel_E(p1, p2));
    }
}

TEST_CASE("fs2_invariant") {
    CHECK(fs2_invariant(ZCode({{a}, {a, b}})) == SetOfAtomSets{{a}, {a, b}});
    CHECK(fs2_invariant(ZCode({{a}, {a}, {a}})) == SetOfAtomSets{{a}});
    TestRng rng(33);
    const auto fs2 = jump(jump(atom_eq()));
    for (int t = 0; t < 1000; ++t) {
        const ZCode z1 = rng.zcode(2, 3, 3), z2 = rng.zcode(2, 3, 3);
        CHECK((fs2_invariant(z1) == fs2_invariant(z2)) == fs2.decide(z1.rows(), z2.rows()));
    }
}

TEST_CASE("g_invariant") {
    const auto g1 = g_invariant(YSeqCode({BinSeqCode::word("1010"), BinSeqCode::word("10")}));
    CHECK(g1 == std::vector<BinSeqCode>{BinSeqCode::word("10")});
    const auto g2 = g_invariant(YSeqCode({BinSeqCode::word("10"), BinSeqCode::word("01")}));
    CHECK(g2.size() == 2);

    TestRng rng(34);
    auto gen = [&] {
        std::vector<BinSeqCode> e;
        for (int i = rng.range(1, 3); i > 0; --i) e.push_back(BinSeqCode::word(rng.bits(1, 2)));
        return YSeqCode(std::move(e));
    };
    for (int t = 0; t < 1000; ++t) {
        const YSeqCode y1 = gen(), y2 = gen();
        CHECK((g_invariant(y1) == g_invariant(y2)) == rel_G(y1, y2));
    }
}

TEST_CASE("invariants ignore entry order") {
    TestRng rng(35);
    for (int t = 0; t < 300; ++t) {
        AtomList l = rng.atom_list(4, 5);
        AtomList l2 = l;
        rng.shuffle(l2);
        CHECK(f_invariant(cyc(l)) == f_invariant(cyc(l2)));
        std::vector<AtomList> rows = rng.zcode(3, 4, 3).rows();
        std::vector<AtomList> rows2 = rows;
        rng.shuffle(rows2);
        CHECK(fs2_invariant(ZCode(rows)) == fs2_invariant(ZCode(rows2)));
    }
}

TEST_CASE("invariants separate classes exhaustively on desk-scale universes") {
    // Every cyclic code over n atoms with period <= n, compared pairwise
    // against the forall-exists formula.
    for (unsigned n = 1; n <= 3; ++n) {
        std::vector<AtomSeqCode> codes;
        std::vector<unsigned> digits;
        for (unsigned len = 1; len <= n; ++len) {
            digits.assign(len, 0);
            while (true) {
                AtomList l;
                for (unsigned d : digits) l.push_back(Atom::rational(d));
                codes.push_back(cyc(l));
                unsigned pos = 0;
                while (pos < len && ++digits[pos] == n) digits[pos++] = 0;
                if (pos == len) break;
            }
        }
        const auto fs1 = jump(atom_eq());
        for (const auto& x : codes)
            for (const auto& y : codes)
                REQUIRE((f_invariant(x) == f_invariant(y)) == fs1.decide(x.entries(), y.entries()));
    }
}

TEST_CASE("class counts match the bitmask oracle and the closed forms") {
    for (unsigned n = 1; n <= 3; ++n) {
        const auto f = count_classes(Level::F, n, n);
        const auto e = count_classes(Level::E, n, n);
        CHECK(f == ranges_by_bitmask(n));
        CHECK(e == families_by_bitmask(n));
        CHECK(f == closed_form_count(Level::F, n));
        CHECK(e == closed_form_count(Level::E, n));
    }
    CHECK(count_classes(Level::F, 2, 2) == 3);
    CHECK(count_classes(Level::E, 2, 2) == 7);
    CHECK(count_classes(Level::E, 3, 3) == 127);
    // Longer periods add codes but no classes.
    CHECK(count_classes(Level::E, 2, 5) == 7);
}

TEST_CASE("class counts are monotone in n") {
    std::uint64_t prev_f = 0, prev_e = 0;
    for (unsigned n = 1; n <= 3; ++n) {
        const auto f = count_classes(Level::F, n, 3);
        const auto e = count_classes(Level::E, n, 3);
        CHECK(f >= prev_f);
        CHECK(e >= prev_e);
        prev_f = f;
        prev_e = e;
    }
}

TEST_CASE("count_classes rejects bad arguments") {
    CHECK_THROWS_AS(count_classes(Level::F, 0, 3), InvalidCode);
    CHECK_THROWS_AS(count_classes(Level::F, 3, 2), InvalidCode);
    CHECK_THROWS_AS(count_classes(Level::E, 4, 6), ResourceLimit);
    CHECK_THROWS_AS(count_classes(Level::E, 3, 3, 100), ResourceLimit);
}

TEST_CASE("growth table") {
    const auto rows = growth_table({1, 2, 3}, 3);
    REQUIRE(rows.size() == 6);
    const std::uint64_t expected[] = {1, 3, 7, 1, 7, 127};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].count == expected[i]);
        CHECK(rows[i].match);
    }
    const std::string text = format_growth_table(rows);
    CHECK(text.rfind("level\tn\tcount\tclosed-form\tmatch\n", 0) == 0);
    CHECK(text.find("E\t3\t127\t127\tyes") != std::string::npos);
}
