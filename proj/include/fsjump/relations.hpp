#pragma once

// Equivalence relations on codes: base equalities, the Friedman-Stanley
// jump, products, the relations F, G, E and membership in P.
//
// Quantifiers over N are replaced by finite bounds that are exact for the
// code algebra; each bound is justified next to where it is used.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "fsjump/atom_set.hpp"
#include "fsjump/codes.hpp"
#include "fsjump/errors.hpp"

namespace fsjump {

/// A named, decidable equivalence relation on codes of type Code, with an
/// optional domain predicate.
template <class Code>
struct EqRel {
    using code_type = Code;

    std::string name;
    std::function<bool(const Code&, const Code&)> decide;
    std::function<bool(const Code&)> domain;

    bool in_domain(const Code& c) const { return !domain || domain(c); }

    /// decide() after checking both points are in the domain.
    bool relates(const Code& a, const Code& b) const {
        if (!in_domain(a) || !in_domain(b)) throw DomainViolation(name + ": point outside the domain");
        return decide(a, b);
    }
};

/// Equality on atoms, the stand-in for =_R.
EqRel<Atom> atom_eq();

/// Equality on 2^N.
EqRel<BinSeqCode> binseq_equality(Index n_cmp = kDefaultCompareBound);

namespace detail {

template <class Code>
bool every_entry_matched(const EqRel<Code>& base, const CycList<Code>& from, const CycList<Code>& to) {
    for (const auto& a : from) {
        bool found = false;
        for (const auto& b : to)
            if (base.decide(a, b)) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

}  // namespace detail

/// The jump E+: x E+ y iff every x(n) is E-related to some y(m) and vice
/// versa. For cyclic lists, n and m need only range over the listed entries,
/// since every later index repeats one of them.
template <class Code>
EqRel<CycList<Code>> jump(EqRel<Code> base) {
    EqRel<CycList<Code>> out;
    out.name = "(" + base.name + ")+";
    out.decide = [base](const CycList<Code>& x, const CycList<Code>& y) {
        return detail::every_entry_matched(base, x, y) && detail::every_entry_matched(base, y, x);
    };
    out.domain = [base](const CycList<Code>& x) {
        if (x.empty()) return false;
        for (const auto& a : x)
            if (!base.in_domain(a)) return false;
        return true;
    };
    return out;
}

/// The pointwise product E1 x E2.
template <class A, class B>
EqRel<std::pair<A, B>> product(EqRel<A> first, EqRel<B> second) {
    EqRel<std::pair<A, B>> out;
    out.name = first.name + " x " + second.name;
    out.decide = [first, second](const std::pair<A, B>& p, const std::pair<A, B>& q) {
        return first.decide(p.first, q.first) && second.decide(p.second, q.second);
    };
    out.domain = [first, second](const std::pair<A, B>& p) {
        return first.in_domain(p.first) && second.in_domain(p.second);
    };
    return out;
}

/// x F x' iff x and x' enumerate the same set of atoms.
bool rel_F(const AtomSeqCode& x, const AtomSeqCode& x2);
EqRel<AtomSeqCode> relation_F();

/// y G y' iff every entry of each is binseq-equal to some entry of the other.
/// Propagates IncomparableCodes.
bool rel_G(const YSeqCode& y, const YSeqCode& y2, Index n_cmp = kDefaultCompareBound);
EqRel<YSeqCode> relation_G(Index n_cmp = kDefaultCompareBound);

/// A point (x, y) of R^N x (2^N)^N that satisfies the three clauses of P.
/// Only p_membership can build one.
class PPoint {
public:
    const AtomSeqCode& x() const noexcept { return x_; }
    const YSeqCode& y() const noexcept { return y_; }

    friend bool operator==(const PPoint&, const PPoint&) = default;

private:
    PPoint(AtomSeqCode x, YSeqCode y) : x_(std::move(x)), y_(std::move(y)) {}
    friend PPoint p_membership(AtomSeqCode x, YSeqCode y);

    AtomSeqCode x_;
    YSeqCode y_;
};

/// A_n = {x(m) : y(n)(m) = 1} for a single entry of y, without any
/// validation of the pair.
AtomSet carve(const AtomSeqCode& x, const BinSeqCode& entry);
/// A_n for a validated point; n is reduced mod the length of the y list.
AtomSet carve(const PPoint& p, Index n);

/// Validates (x, y) against the clauses of P.
///
/// Allowed shapes: x Cyclic with CycW entries; x PairMerge with entries that
/// are pullbacks along x itself, or the constant words "0"/"1" that pullbacks
/// normalize to. Anything else raises StructuralMismatch. Clause failures
/// raise ClauseViolation carrying a witness:
///   clause 1: {m}, an index whose value is in no A_k;
///   clause 2: {k}, an entry with empty A_k;
///   clause 3: {k, l1, l2} with x(l1) = x(l2) but y(k)(l1) != y(k)(l2).
PPoint p_membership(AtomSeqCode x, YSeqCode y);

/// {A_n : n in N} as a canonical set of sets.
SetOfAtomSets carved_family(const PPoint& p);

/// (x, y) E (x', y') iff they carve the same family of atom sets.
bool rel_E(const PPoint& p, const PPoint& q);
EqRel<PPoint> relation_E();

/// E restricted to the points whose first coordinate is F-related to x0.
/// relates() raises DomainViolation outside the fiber.
EqRel<PPoint> restrict_to_fiber(const AtomSeqCode& x0);

}  // namespace fsjump
