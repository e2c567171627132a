#include "fsjump/generators.hpp"

#include <algorithm>

#include "fsjump/errors.hpp"

namespace fsjump {

void FuzzConfig::validate() const {
    if (atom_universe == 0) throw InvalidCode("atom_universe must be positive");
    if (max_period == 0) throw InvalidCode("max_period must be positive");
    if (max_entries == 0) throw InvalidCode("max_entries must be positive");
    if (n_cmp == 0) throw InvalidCode("n_cmp must be positive");
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

Rng Rng::for_case(std::uint64_t seed, std::uint64_t case_index, std::uint64_t stream) {
    return Rng(splitmix64(splitmix64(seed) ^ splitmix64(case_index) ^ splitmix64(~stream)));
}

std::uint64_t Rng::below(std::uint64_t n) {
    // 2^64 mod n draws at the bottom are rejected so the rest split evenly.
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        const std::uint64_t x = engine_();
        if (x >= threshold) return x % n;
    }
}

Atom universe_atom(unsigned i) {
    switch (i % 3) {
        case 0:
            return Atom::rational(static_cast<std::int64_t>(i) + 1, 2);
        case 1:
            return Atom::tag(static_cast<int>(i % 2), Atom::rational(i));
        default:
            return Atom::word("1" + std::string(i, '0'));
    }
}

std::vector<Atom> make_universe(unsigned size) {
    std::vector<Atom> out;
    out.reserve(size);
    for (unsigned i = 0; i < size; ++i) out.push_back(universe_atom(i));
    return out;
}

AtomSeqCode canonical_basepoint(const AtomSet& range) { return AtomSeqCode::cyclic(range.elements()); }

AtomSet random_nonempty_subset(Rng& rng, const std::vector<Atom>& from) {
    std::vector<Atom> picked;
    while (picked.empty())
        for (const auto& a : from)
            if (rng.coin()) picked.push_back(a);
    return AtomSet(std::move(picked));
}

AtomList random_enumeration(Rng& rng, const AtomSet& range, unsigned max_len) {
    const std::size_t n = range.size();
    const std::size_t len = rng.between(n, std::max<std::size_t>(n, max_len));
    AtomList out(range.begin(), range.end());
    while (out.size() < len) out.push_back(range.elements()[rng.below(n)]);
    rng.shuffle(out);
    return out;
}

namespace {

void cover(Rng& rng, const AtomSet& range, std::vector<AtomSet>& family) {
    AtomSet covered;
    for (const auto& s : family) covered = covered.unite(s);
    for (const auto& a : range)
        if (!covered.contains(a)) {
            auto& target = family[rng.below(family.size())];
            target = target.unite(AtomSet{a});
        }
}

void add_repeats(Rng& rng, std::vector<AtomSet>& family) {
    const std::size_t extra = rng.below(3);
    const std::size_t base = family.size();
    for (std::size_t i = 0; i < extra; ++i) family.push_back(family[rng.below(base)]);
    rng.shuffle(family);
}

}  // namespace

std::vector<AtomSet> random_family(Rng& rng, const AtomSet& range, unsigned max_entries) {
    const std::size_t m = rng.between(1, std::max(1U, max_entries));
    std::vector<AtomSet> family;
    for (std::size_t i = 0; i < m; ++i) family.push_back(random_nonempty_subset(rng, range.elements()));
    cover(rng, range, family);
    add_repeats(rng, family);
    return family;
}

PPoint realize_cyclic(Rng& rng, const AtomSet& range, const std::vector<AtomSet>& family,
                      const FuzzConfig& cfg) {
    const AtomList x = random_enumeration(rng, range, cfg.max_period);
    std::vector<BinSeqCode> entries;
    for (const auto& a : family) {
        std::string w;
        for (const auto& atom : x) w.push_back(a.contains(atom) ? '1' : '0');
        const std::size_t reps = rng.between(1, 2);
        std::string word;
        for (std::size_t r = 0; r < reps; ++r) word += w;
        entries.push_back(BinSeqCode::word(word));
    }
    return p_membership(AtomSeqCode::cyclic(x), YSeqCode(std::move(entries)));
}

namespace {

PPoint realize_pair_merge(Rng& rng, const AtomSet& range, const std::vector<AtomSet>& family,
                          const FuzzConfig& cfg) {
    const std::size_t s = rng.between(1, std::max(1U, cfg.max_entries));
    std::vector<AtomSet> row_sets;
    for (std::size_t i = 0; i < s; ++i) row_sets.push_back(random_nonempty_subset(rng, range.elements()));
    cover(rng, range, row_sets);
    std::vector<AtomList> rows;
    for (const auto& r : row_sets) rows.push_back(random_enumeration(rng, r, cfg.max_period));
    const AtomSeqCode x = AtomSeqCode::pair_merge(ZCode(std::move(rows)));
    std::vector<BinSeqCode> entries;
    for (const auto& a : family) entries.push_back(BinSeqCode::pullback(x, a));
    return p_membership(x, YSeqCode(std::move(entries)));
}

}  // namespace

PPoint realize(Rng& rng, const AtomSet& range, const std::vector<AtomSet>& family, const FuzzConfig& cfg) {
    if (rng.coin()) return realize_cyclic(rng, range, family, cfg);
    return realize_pair_merge(rng, range, family, cfg);
}

namespace {

std::vector<AtomSet> mutate_family(Rng& rng, const AtomSet& range, std::vector<AtomSet> family,
                                   unsigned max_entries) {
    switch (rng.below(3)) {
        case 0:  // replace one member
            family[rng.below(family.size())] = random_nonempty_subset(rng, range.elements());
            break;
        case 1:  // add a member
            family.push_back(random_nonempty_subset(rng, range.elements()));
            break;
        default:  // drop a member
            if (family.size() > 1) family.erase(family.begin() + static_cast<std::ptrdiff_t>(rng.below(family.size())));
            else family = random_family(rng, range, max_entries);
            break;
    }
    cover(rng, range, family);
    rng.shuffle(family);
    return family;
}

}  // namespace

FiberPair random_fiber_pair(Rng& rng, const FuzzConfig& cfg) {
    const auto universe = make_universe(cfg.atom_universe);
    const bool same = rng.coin();
    AtomSet range = random_nonempty_subset(rng, universe);
    // A one-atom range carries a single family, so it can only give related
    // pairs.
    while (!same && universe.size() > 1 && range.size() < 2) range = random_nonempty_subset(rng, universe);
    const auto first = random_family(rng, range, cfg.max_entries);
    std::vector<AtomSet> second = first;
    if (same) {
        add_repeats(rng, second);
    } else {
        for (int attempt = 0; attempt < 16 && SetOfAtomSets(second) == SetOfAtomSets(first); ++attempt)
            second = mutate_family(rng, range, first, cfg.max_entries);
    }
    PPoint p = realize(rng, range, first, cfg);
    PPoint q = realize(rng, range, second, cfg);
    const bool related = SetOfAtomSets(first) == SetOfAtomSets(second);
    return {canonical_basepoint(range), std::move(p), std::move(q), related};
}

std::pair<PPoint, SetOfAtomSets> random_ppoint(Rng& rng, const FuzzConfig& cfg) {
    const auto universe = make_universe(cfg.atom_universe);
    const AtomSet range = random_nonempty_subset(rng, universe);
    const auto family = random_family(rng, range, cfg.max_entries);
    return {realize(rng, range, family, cfg), SetOfAtomSets(family)};
}

AtomSeqCode random_cyclic(Rng& rng, const FuzzConfig& cfg) {
    const auto universe = make_universe(cfg.atom_universe);
    return AtomSeqCode::cyclic(random_enumeration(rng, random_nonempty_subset(rng, universe), cfg.max_period));
}

std::vector<AtomList> random_zrows(Rng& rng, const FuzzConfig& cfg) {
    const auto universe = make_universe(cfg.atom_universe);
    const std::size_t s = rng.between(1, cfg.max_entries);
    std::vector<AtomList> rows;
    for (std::size_t i = 0; i < s; ++i)
        rows.push_back(random_enumeration(rng, random_nonempty_subset(rng, universe), cfg.max_period));
    return rows;
}

std::vector<AtomList> scramble_zrows(Rng& rng, const std::vector<AtomList>& rows, const FuzzConfig& cfg) {
    std::vector<AtomList> out;
    for (const auto& r : rows) out.push_back(random_enumeration(rng, AtomSet(r), cfg.max_period));
    const std::size_t extra = rng.below(3);
    for (std::size_t i = 0; i < extra; ++i) out.push_back(out[rng.below(rows.size())]);
    rng.shuffle(out);
    return out;
}

namespace {

std::string random_bits(Rng& rng, unsigned max_len) {
    const std::size_t len = rng.between(1, max_len);
    std::string w;
    for (std::size_t i = 0; i < len; ++i) w.push_back(rng.coin() ? '1' : '0');
    return w;
}

}  // namespace

YSeqCode random_word_yseq(Rng& rng, const FuzzConfig& cfg) {
    // Short words keep G-collisions between independent draws frequent.
    const unsigned max_len = std::min(cfg.max_period, 3U);
    const std::size_t m = rng.between(1, cfg.max_entries);
    std::vector<BinSeqCode> entries;
    for (std::size_t i = 0; i < m; ++i) entries.push_back(BinSeqCode::word(random_bits(rng, max_len)));
    return YSeqCode(std::move(entries));
}

YSeqCode scramble_word_yseq(Rng& rng, const YSeqCode& y) {
    std::vector<BinSeqCode> out;
    for (const auto& e : y.entries()) {
        std::string w;
        const std::size_t reps = rng.between(1, 3);
        for (std::size_t r = 0; r < reps; ++r) w += e.as_word().bits();
        out.push_back(BinSeqCode::word(w));
    }
    const std::size_t extra = rng.below(3);
    const std::size_t base = out.size();
    for (std::size_t i = 0; i < extra; ++i) out.push_back(out[rng.below(base)]);
    rng.shuffle(out);
    return YSeqCode(std::move(out));
}

}  // namespace fsjump

namespace fsjump {

namespace {

enum Stream : std::uint64_t { kFiber = 1, kZRows, kWordY, kFF, kFG };

AtomSeqCode related_or_not(Rng& rng, const AtomSeqCode& x, const FuzzConfig& cfg) {
    if (rng.coin()) return AtomSeqCode::cyclic(random_enumeration(rng, x.range(), cfg.max_period));
    return random_cyclic(rng, cfg);
}

YSeqCode related_or_not(Rng& rng, const YSeqCode& y, const FuzzConfig& cfg) {
    if (rng.coin()) return scramble_word_yseq(rng, y);
    if (rng.coin()) return random_word_yseq(rng, cfg);
    // Near miss: one entry replaced.
    std::vector<BinSeqCode> entries = scramble_word_yseq(rng, y).entries();
    entries[rng.below(entries.size())] = random_word_yseq(rng, cfg).entries().front();
    return YSeqCode(std::move(entries));
}

}  // namespace

std::vector<FiberPair> sample_fiber_pairs(const FuzzConfig& cfg) {
    std::vector<FiberPair> out;
    out.reserve(cfg.cases);
    for (std::uint64_t i = 0; i < cfg.cases; ++i) {
        Rng rng = Rng::for_case(cfg.seed, i, kFiber);
        out.push_back(random_fiber_pair(rng, cfg));
    }
    return out;
}

std::vector<std::pair<std::vector<AtomList>, std::vector<AtomList>>> sample_zrow_pairs(const FuzzConfig& cfg) {
    std::vector<std::pair<std::vector<AtomList>, std::vector<AtomList>>> out;
    out.reserve(cfg.cases);
    for (std::uint64_t i = 0; i < cfg.cases; ++i) {
        Rng rng = Rng::for_case(cfg.seed, i, kZRows);
        auto rows = random_zrows(rng, cfg);
        std::vector<AtomList> other;
        switch (rng.below(3)) {
            case 0:
                other = scramble_zrows(rng, rows, cfg);
                break;
            case 1:
                other = random_zrows(rng, cfg);
                break;
            default:
                other = scramble_zrows(rng, rows, cfg);
                other[rng.below(other.size())] = random_zrows(rng, cfg).front();
                break;
        }
        out.emplace_back(std::move(rows), std::move(other));
    }
    return out;
}

std::vector<std::pair<YSeqCode, YSeqCode>> sample_word_y_pairs(const FuzzConfig& cfg) {
    std::vector<std::pair<YSeqCode, YSeqCode>> out;
    out.reserve(cfg.cases);
    for (std::uint64_t i = 0; i < cfg.cases; ++i) {
        Rng rng = Rng::for_case(cfg.seed, i, kWordY);
        YSeqCode y = random_word_yseq(rng, cfg);
        YSeqCode other = related_or_not(rng, y, cfg);
        out.emplace_back(std::move(y), std::move(other));
    }
    return out;
}

std::vector<std::pair<FFPoint, FFPoint>> sample_ff_pairs(const FuzzConfig& cfg) {
    std::vector<std::pair<FFPoint, FFPoint>> out;
    out.reserve(cfg.cases);
    for (std::uint64_t i = 0; i < cfg.cases; ++i) {
        Rng rng = Rng::for_case(cfg.seed, i, kFF);
        FFPoint a{random_cyclic(rng, cfg), random_cyclic(rng, cfg)};
        FFPoint b{related_or_not(rng, a.first, cfg), related_or_not(rng, a.second, cfg)};
        out.emplace_back(std::move(a), std::move(b));
    }
    return out;
}

std::vector<std::pair<FGPoint, FGPoint>> sample_fg_pairs(const FuzzConfig& cfg) {
    std::vector<std::pair<FGPoint, FGPoint>> out;
    out.reserve(cfg.cases);
    for (std::uint64_t i = 0; i < cfg.cases; ++i) {
        Rng rng = Rng::for_case(cfg.seed, i, kFG);
        FGPoint a{random_cyclic(rng, cfg), random_word_yseq(rng, cfg)};
        FGPoint b{related_or_not(rng, a.first, cfg), related_or_not(rng, a.second, cfg)};
        out.emplace_back(std::move(a), std::move(b));
    }
    return out;
}

}  // namespace fsjump
