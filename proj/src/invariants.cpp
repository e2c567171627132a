#include "fsjump/invariants.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fsjump {

AtomSet f_invariant(const AtomSeqCode& x) { return x.range(); }

SetOfAtomSets e_invariant(const PPoint& p) { return carved_family(p); }

SetOfAtomSets fs2_invariant(const std::vector<AtomList>& rows) {
    std::vector<AtomSet> sets;
    sets.reserve(rows.size());
    for (const auto& r : rows) sets.emplace_back(r);
    return SetOfAtomSets(std::move(sets));
}

SetOfAtomSets fs2_invariant(const ZCode& z) { return fs2_invariant(z.rows()); }

std::vector<BinSeqCode> g_invariant(const YSeqCode& y, Index n_cmp) {
    std::vector<BinSeqCode> reps;
    for (const auto& e : y.entries()) {
        auto same = std::find_if(reps.begin(), reps.end(),
                                 [&](const BinSeqCode& r) { return binseq_eq(r, e, n_cmp); });
        if (same == reps.end())
            reps.push_back(e);
        else if (e < *same)
            *same = e;
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

std::string to_string(Level level) { return level == Level::F ? "F" : "E"; }

std::uint64_t closed_form_count(Level level, unsigned n) {
    if (n == 0 || n > 6) throw ResourceLimit("closed form only tabulated for 1 <= n <= 6");
    const std::uint64_t subsets = (std::uint64_t{1} << n) - 1;
    if (level == Level::F) return subsets;
    return (std::uint64_t{1} << subsets) - 1;
}

namespace {

// All sequences of length 1..max_len over `alphabet` symbols, as index lists.
template <class Visit>
void for_each_word(unsigned alphabet, unsigned max_len, Visit&& visit) {
    std::vector<unsigned> digits;
    for (unsigned len = 1; len <= max_len; ++len) {
        digits.assign(len, 0);
        while (true) {
            visit(digits);
            unsigned pos = 0;
            while (pos < len && ++digits[pos] == alphabet) digits[pos++] = 0;
            if (pos == len) break;
        }
    }
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
    return a * b;
}

std::uint64_t count_sequences(unsigned alphabet, unsigned max_len) {
    std::uint64_t total = 0, power = 1;
    for (unsigned len = 1; len <= max_len; ++len) {
        power = saturating_mul(power, alphabet);
        total = total > UINT64_MAX - power ? UINT64_MAX : total + power;
    }
    return total;
}

}  // namespace

std::uint64_t count_classes(Level level, unsigned n, unsigned max_period, std::uint64_t cap) {
    if (n < 1) throw InvalidCode("atom universe must be nonempty");
    if (max_period < n) throw InvalidCode("max_period must be at least the universe size");

    std::vector<Atom> universe;
    for (unsigned i = 0; i < n; ++i) universe.push_back(Atom::rational(i));

    const std::uint64_t xs = count_sequences(n, max_period);
    std::uint64_t candidates = xs;
    if (level == Level::E) {
        // Each x contributes at most one candidate per family of nonempty
        // subsets of its range.
        const unsigned subsets = (1U << std::min(n, 6U)) - 1;
        candidates = n > 6 ? UINT64_MAX : saturating_mul(xs, std::uint64_t{1} << subsets);
    }
    if (candidates > cap)
        throw ResourceLimit("enumeration of " + std::to_string(candidates) + " candidates exceeds cap " +
                            std::to_string(cap));

    auto to_code = [&](const std::vector<unsigned>& digits) {
        AtomList entries;
        for (unsigned d : digits) entries.push_back(universe[d]);
        return AtomSeqCode::cyclic(std::move(entries));
    };

    if (level == Level::F) {
        std::set<AtomSet> classes;
        for_each_word(n, max_period, [&](const auto& digits) { classes.insert(f_invariant(to_code(digits))); });
        return classes.size();
    }

    const BinSeqCode all_ones = BinSeqCode::word("1");
    std::set<SetOfAtomSets> classes;
    for_each_word(n, max_period, [&](const auto& digits) {
        const AtomSeqCode x = to_code(digits);

        // Admissible entries for x, one representative word per carved set.
        // Pairing a word with "1" isolates clauses 2 and 3 for that word.
        std::vector<std::pair<AtomSet, BinSeqCode>> entries;
        for_each_word(2, max_period, [&](const auto& bits) {
            std::string w;
            for (unsigned b : bits) w.push_back(b ? '1' : '0');
            const BinSeqCode entry = BinSeqCode::word(w);
            try {
                p_membership(x, YSeqCode({entry, all_ones}));
            } catch (const ClauseViolation&) {
                return;
            }
            AtomSet a = carve(x, entry);
            auto seen = std::find_if(entries.begin(), entries.end(), [&](const auto& e) { return e.first == a; });
            if (seen == entries.end()) entries.emplace_back(std::move(a), entry);
        });

        const std::size_t k = entries.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
            std::vector<BinSeqCode> ys;
            for (std::size_t i = 0; i < k; ++i)
                if (mask >> i & 1U) ys.push_back(entries[i].second);
            try {
                classes.insert(e_invariant(p_membership(x, YSeqCode(std::move(ys)))));
            } catch (const ClauseViolation&) {
                // Family does not cover range(x).
            }
        }
    });
    return classes.size();
}

std::vector<GrowthRow> growth_table(const std::vector<unsigned>& ns, unsigned max_period, std::uint64_t cap) {
    std::vector<GrowthRow> rows;
    for (Level level : {Level::F, Level::E})
        for (unsigned n : ns) {
            const std::uint64_t c = count_classes(level, n, std::max(max_period, n), cap);
            const std::uint64_t closed = closed_form_count(level, n);
            rows.push_back({level, n, c, closed, c == closed});
        }
    return rows;
}

std::string format_growth_table(const std::vector<GrowthRow>& rows) {
    std::ostringstream out;
    out << "level\tn\tcount\tclosed-form\tmatch\n";
    for (const auto& r : rows)
        out << to_string(r.level) << '\t' << r.n << '\t' << r.count << '\t' << r.closed_form << '\t'
            << (r.match ? "yes" : "no") << '\n';
    return out.str();
}

}  // namespace fsjump
