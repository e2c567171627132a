#pragma once

// Complete invariants for F, E, G and the second jump of equality, plus the
// brute-force class counter used for the growth table.

#include <cstdint>
#include <string>
#include <vector>

#include "fsjump/atom_set.hpp"
#include "fsjump/codes.hpp"
#include "fsjump/relations.hpp"

namespace fsjump {

AtomSet f_invariant(const AtomSeqCode& x);
SetOfAtomSets e_invariant(const PPoint& p);
SetOfAtomSets fs2_invariant(const ZCode& z);
SetOfAtomSets fs2_invariant(const std::vector<AtomList>& rows);

/// Representatives of the G-classes of y's entries, one per class, sorted.
///
/// Words are already canonical. Pullbacks are kept as (base, set & range),
/// which is canonical among entries sharing a base; a valid P-point has all
/// its pullbacks along one base. Propagates IncomparableCodes.
std::vector<BinSeqCode> g_invariant(const YSeqCode& y, Index n_cmp = kDefaultCompareBound);

enum class Level { F, E };

std::string to_string(Level level);

/// Default cap on enumerated candidates in count_classes.
inline constexpr std::uint64_t kDefaultEnumerationCap = 20'000'000;

/// Counts the classes of F (level F) or E (level E) among all codes over the
/// atom universe {0, ..., n-1} whose periods are at most max_period.
///
/// Level F enumerates every cyclic x. Level E enumerates every cyclic x, every
/// word of length <= max_period usable as a y entry for it, and every set of
/// such entries (order and repetition in y never change the carved family),
/// validating each candidate through p_membership. Throws InvalidCode unless
/// n >= 1 and max_period >= n; ResourceLimit when the candidate count would
/// exceed cap.
std::uint64_t count_classes(Level level, unsigned n, unsigned max_period,
                            std::uint64_t cap = kDefaultEnumerationCap);

/// 2^n - 1 for F, 2^(2^n - 1) - 1 for E.
std::uint64_t closed_form_count(Level level, unsigned n);

struct GrowthRow {
    Level level;
    unsigned n;
    std::uint64_t count;
    std::uint64_t closed_form;
    bool match;
};

std::vector<GrowthRow> growth_table(const std::vector<unsigned>& ns, unsigned max_period,
                                    std::uint64_t cap = kDefaultEnumerationCap);

/// Plain-text table with columns level, n, count, closed-form, match.
std::string format_growth_table(const std::vector<GrowthRow>& rows);

}  // namespace fsjump
