#include "fsjump/relations.hpp"

#include <map>
#include <numeric>

namespace fsjump {

EqRel<Atom> atom_eq() {
    return {"=R", [](const Atom& a, const Atom& b) { return a == b; }, {}};
}

EqRel<BinSeqCode> binseq_equality(Index n_cmp) {
    return {"=2^N", [n_cmp](const BinSeqCode& u, const BinSeqCode& v) { return binseq_eq(u, v, n_cmp); }, {}};
}

// Decided by range sets instead of the two-sided forall-exists formula; the
// two agree because {x(n)} is exactly range_set(x).
bool rel_F(const AtomSeqCode& x, const AtomSeqCode& x2) { return x.range() == x2.range(); }

EqRel<AtomSeqCode> relation_F() { return {"F", rel_F, {}}; }

bool rel_G(const YSeqCode& y, const YSeqCode& y2, Index n_cmp) {
    return jump(binseq_equality(n_cmp)).decide(y.entries(), y2.entries());
}

EqRel<YSeqCode> relation_G(Index n_cmp) {
    return {"G", [n_cmp](const YSeqCode& a, const YSeqCode& b) { return rel_G(a, b, n_cmp); }, {}};
}

AtomSet carve(const AtomSeqCode& x, const BinSeqCode& entry) {
    if (!entry.is_word()) {
        if (entry.base() != x) throw StructuralMismatch("pullback entry over a different base");
        return entry.set().intersect(x.range());
    }
    if (auto c = entry.constant()) return *c ? x.range() : AtomSet{};
    if (!x.is_cyclic()) throw StructuralMismatch("non-constant cyclic word over a PairMerge sequence");
    // x and the word are jointly periodic with period lcm(p, L).
    const CyclicWord& w = entry.as_word();
    const Index span = std::lcm<Index>(x.period(), w.length());
    std::vector<Atom> picked;
    for (Index m = 0; m < span; ++m)
        if (w.bit(m)) picked.push_back(x.value_at(m));
    return AtomSet(std::move(picked));
}

AtomSet carve(const PPoint& p, Index n) { return carve(p.x(), p.y().at(n)); }

namespace {

void check_shape(const AtomSeqCode& x, const BinSeqCode& entry, Index k) {
    const std::string where = "y entry " + std::to_string(k) + ": ";
    if (x.is_cyclic()) {
        // Pullbacks over a cyclic base are normalized to words on construction.
        if (!entry.is_word()) throw StructuralMismatch(where + "pullback over a non-cyclic base");
        return;
    }
    if (entry.is_word()) {
        if (!entry.constant()) throw StructuralMismatch(where + "cyclic word over a PairMerge sequence");
        return;
    }
    if (entry.base() != x) throw StructuralMismatch(where + "pullback base differs from x");
}

// Clause 3 for a word over a cyclic x: both coordinates are periodic with
// period lcm(p, L), so a conflict exists iff one exists below that bound.
void check_clause3(const AtomSeqCode& x, const BinSeqCode& entry, Index k) {
    if (!entry.is_word() || entry.constant()) return;
    const CyclicWord& w = entry.as_word();
    const Index span = std::lcm<Index>(x.period(), w.length());
    std::map<Atom, std::pair<Index, bool>> first_seen;
    for (Index l = 0; l < span; ++l) {
        const Atom a = x.value_at(l);
        const bool b = w.bit(l);
        auto [it, inserted] = first_seen.try_emplace(a, l, b);
        if (!inserted && it->second.second != b)
            throw ClauseViolation(3, {k, it->second.first, l},
                                  "clause 3: x(" + std::to_string(it->second.first) + ") = x(" +
                                      std::to_string(l) + ") but y(" + std::to_string(k) +
                                      ") differs there");
    }
}

}  // namespace

PPoint p_membership(AtomSeqCode x, YSeqCode y) {
    AtomSet covered;
    for (Index k = 0; k < y.size(); ++k) {
        const BinSeqCode& entry = y.entries()[k];
        check_shape(x, entry, k);
        check_clause3(x, entry, k);
        AtomSet a = carve(x, entry);
        if (a.empty())
            throw ClauseViolation(2, {k}, "clause 2: A_" + std::to_string(k) + " is empty");
        covered = covered.unite(a);
    }
    const Index bound = x.saturation_bound();
    for (Index m = 0; m < bound; ++m)
        if (!covered.contains(x.value_at(m)))
            throw ClauseViolation(1, {m}, "clause 1: x(" + std::to_string(m) + ") lies in no A_k");
    return PPoint(std::move(x), std::move(y));
}

SetOfAtomSets carved_family(const PPoint& p) {
    std::vector<AtomSet> sets;
    sets.reserve(p.y().size());
    for (Index n = 0; n < p.y().size(); ++n) sets.push_back(carve(p, n));
    return SetOfAtomSets(std::move(sets));
}

bool rel_E(const PPoint& p, const PPoint& q) { return carved_family(p) == carved_family(q); }

EqRel<PPoint> relation_E() { return {"E", rel_E, {}}; }

EqRel<PPoint> restrict_to_fiber(const AtomSeqCode& x0) {
    AtomSet base_range = x0.range();
    EqRel<PPoint> out;
    out.name = "E|fiber";
    out.decide = rel_E;
    out.domain = [base_range](const PPoint& p) { return p.x().range() == base_range; };
    return out;
}

}  // namespace fsjump
