#pragma once

// Seedable generators that build points forward from known ground truth:
// choose an atom universe and a covering family of subsets, then realize the
// family as a P-point through some enumeration. Relatedness under E is then
// known by construction.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fsjump/atom_set.hpp"
#include "fsjump/codes.hpp"
#include "fsjump/relations.hpp"

namespace fsjump {

struct FuzzConfig {
    std::uint64_t seed = 0;
    std::uint64_t cases = 1000;
    unsigned atom_universe = 4;
    unsigned max_period = 6;
    unsigned max_entries = 5;
    Index n_cmp = kDefaultCompareBound;

    /// Throws InvalidCode when a count other than `cases` is zero.
    void validate() const;
};

/// mt19937_64 seeded per case from SplitMix64(seed, case index), so every
/// case is reproducible on its own. Bounded draws use rejection sampling
/// rather than std::uniform_int_distribution, whose output is
/// implementation-defined.
class Rng {
public:
    static Rng for_case(std::uint64_t seed, std::uint64_t case_index, std::uint64_t stream = 0);

    explicit Rng(std::uint64_t state) : engine_(state) {}

    /// Uniform in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n);
    /// Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
    bool coin() { return below(2) == 1; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Fixed, pairwise distinct atoms of all three kinds.
Atom universe_atom(unsigned i);
std::vector<Atom> make_universe(unsigned size);

/// Sorted cyclic enumeration of a set: the canonical fiber basepoint.
AtomSeqCode canonical_basepoint(const AtomSet& range);

AtomSet random_nonempty_subset(Rng& rng, const std::vector<Atom>& from);
/// A cyclic list that enumerates exactly `range`, of length between |range|
/// and max(|range|, max_len).
AtomList random_enumeration(Rng& rng, const AtomSet& range, unsigned max_len);
/// A list of nonempty subsets of `range` (repeats allowed) whose union is
/// `range`, with between 1 and max_entries distinct members where possible.
std::vector<AtomSet> random_family(Rng& rng, const AtomSet& range, unsigned max_entries);

/// Realizes a covering family over `range` as a P-point. Picks at random
/// between a cyclic x with explicit words (sometimes of doubled length) and a
/// PairMerge x with pullback entries. Entry order and repetition follow
/// `family`.
PPoint realize(Rng& rng, const AtomSet& range, const std::vector<AtomSet>& family, const FuzzConfig& cfg);
/// Same, forcing a cyclic x.
PPoint realize_cyclic(Rng& rng, const AtomSet& range, const std::vector<AtomSet>& family, const FuzzConfig& cfg);

struct FiberPair {
    AtomSeqCode basepoint;
    PPoint p;
    PPoint q;
    /// Ground truth for p E q, from the chosen families.
    bool related;
};

/// Two points in the fiber of a canonical basepoint. About half the pairs
/// realize one family twice (different enumerations, orders, repetitions);
/// the rest realize a mutated family over the same range.
FiberPair random_fiber_pair(Rng& rng, const FuzzConfig& cfg);

/// A random P-point together with its family.
std::pair<PPoint, SetOfAtomSets> random_ppoint(Rng& rng, const FuzzConfig& cfg);

AtomSeqCode random_cyclic(Rng& rng, const FuzzConfig& cfg);
std::vector<AtomList> random_zrows(Rng& rng, const FuzzConfig& cfg);
/// Rows permuted, duplicated and internally re-enumerated: same FS^2 class.
std::vector<AtomList> scramble_zrows(Rng& rng, const std::vector<AtomList>& rows, const FuzzConfig& cfg);
/// A y made only of cyclic words.
YSeqCode random_word_yseq(Rng& rng, const FuzzConfig& cfg);
/// Entries permuted, duplicated and rewritten as powers: same G class.
YSeqCode scramble_word_yseq(Rng& rng, const YSeqCode& y);

/// Sample campaigns: cfg.cases pairs each, case i drawn from its own
/// substream so the result depends only on (seed, i). Roughly half of each
/// sample is related by construction.
std::vector<FiberPair> sample_fiber_pairs(const FuzzConfig& cfg);
std::vector<std::pair<std::vector<AtomList>, std::vector<AtomList>>> sample_zrow_pairs(const FuzzConfig& cfg);
std::vector<std::pair<YSeqCode, YSeqCode>> sample_word_y_pairs(const FuzzConfig& cfg);

using FFPoint = std::pair<AtomSeqCode, AtomSeqCode>;
using FGPoint = std::pair<AtomSeqCode, YSeqCode>;
std::vector<std::pair<FFPoint, FFPoint>> sample_ff_pairs(const FuzzConfig& cfg);
std::vector<std::pair<FGPoint, FGPoint>> sample_fg_pairs(const FuzzConfig& cfg);

}  // namespace fsjump
