#pragma once

// Finitary codes for points of R^N, 2^N, (2^N)^N and (R^N)^N.
//
// The algebra is closed: every map used by the reductions lands back in
// {Cyclic, PairMerge} x {CycW, Pullback}, so every relation stays decidable.

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "fsjump/atom.hpp"
#include "fsjump/atom_set.hpp"

namespace fsjump {

/// Default search bound for CycW-vs-Pullback comparisons.
inline constexpr Index kDefaultCompareBound = 4096;

/// Cantor pairing e(i, j) = (i + j)(i + j + 1)/2 + j.
Index cantor_pair(Index i, Index j);
std::pair<Index, Index> cantor_unpair(Index n);

/// A cyclic sequence over some code type: x(n) = entries[n mod entries.size()].
template <class T>
using CycList = std::vector<T>;

using AtomList = CycList<Atom>;

/// A point z of (R^N)^N: z(i) = rows[i mod s], each row a cyclic atom list.
class ZCode {
public:
    /// Throws InvalidCode on an empty row list or an empty row.
    explicit ZCode(std::vector<AtomList> rows);

    const std::vector<AtomList>& rows() const noexcept { return rows_; }
    std::size_t size() const noexcept { return rows_.size(); }
    const AtomList& row(Index i) const { return rows_[i % rows_.size()]; }
    const Atom& at(Index i, Index j) const {
        const auto& r = row(i);
        return r[j % r.size()];
    }

    friend bool operator==(const ZCode&, const ZCode&) = default;
    friend auto operator<=>(const ZCode& a, const ZCode& b) {
        return std::lexicographical_compare_three_way(a.rows_.begin(), a.rows_.end(), b.rows_.begin(),
                                                      b.rows_.end());
    }

private:
    std::vector<AtomList> rows_;
};

/// A point x of R^N.
class AtomSeqCode {
public:
    /// x(n) = entries[n mod len]. Throws InvalidCode on an empty list.
    static AtomSeqCode cyclic(AtomList entries);
    /// x(e(i, j)) = z(i)(j).
    static AtomSeqCode pair_merge(ZCode z);

    bool is_cyclic() const noexcept { return rep_.index() == 0; }
    /// Cyclic variant only.
    const AtomList& entries() const { return std::get<AtomList>(rep_); }
    Index period() const { return entries().size(); }
    /// PairMerge variant only.
    const ZCode& z() const { return std::get<ZCode>(rep_); }

    Atom value_at(Index n) const;
    /// B such that {x(n) : n in N} = {x(n) : n < B}.
    Index saturation_bound() const;
    AtomSet range() const;

    friend bool operator==(const AtomSeqCode&, const AtomSeqCode&) = default;
    friend auto operator<=>(const AtomSeqCode& a, const AtomSeqCode& b) {
        if (auto c = a.rep_.index() <=> b.rep_.index(); c != 0) return c;
        if (a.is_cyclic())
            return std::lexicographical_compare_three_way(a.entries().begin(), a.entries().end(),
                                                          b.entries().begin(), b.entries().end());
        return a.z() <=> b.z();
    }

private:
    explicit AtomSeqCode(AtomList e) : rep_(std::move(e)) {}
    explicit AtomSeqCode(ZCode z) : rep_(std::move(z)) {}

    std::variant<AtomList, ZCode> rep_;
};

inline Atom value_at(const AtomSeqCode& x, Index n) { return x.value_at(n); }
inline Index saturation_bound(const AtomSeqCode& x) { return x.saturation_bound(); }
inline AtomSet range_set(const AtomSeqCode& x) { return x.range(); }

/// A point of 2^N: either an explicit cyclic word, or the pullback
/// b(k) = [x(k) in set] of an atom set along a PairMerge sequence.
///
/// Construction normalizes: a pullback over a Cyclic base becomes a CycW of
/// length period(base) (before primitive-root reduction), and a pullback
/// whose set meets the base range fully or not at all becomes "1" or "0".
/// The stored set of a surviving pullback is intersected with range(base).
class BinSeqCode {
public:
    static BinSeqCode word(CyclicWord w) { return BinSeqCode(std::move(w)); }
    static BinSeqCode word(std::string_view bits) { return BinSeqCode(CyclicWord(bits)); }
    static BinSeqCode pullback(const AtomSeqCode& base, const AtomSet& set);

    bool is_word() const noexcept { return rep_.index() == 0; }
    const CyclicWord& as_word() const { return std::get<CyclicWord>(rep_); }
    const AtomSeqCode& base() const { return std::get<Pull>(rep_).base; }
    const AtomSet& set() const { return std::get<Pull>(rep_).set; }

    bool bit_at(Index k) const;
    /// The constant value if this is the word "0" or "1".
    std::optional<bool> constant() const;

    friend bool operator==(const BinSeqCode&, const BinSeqCode&) = default;
    friend std::strong_ordering operator<=>(const BinSeqCode& a, const BinSeqCode& b);

private:
    struct Pull {
        AtomSeqCode base;
        AtomSet set;
        friend bool operator==(const Pull&, const Pull&) = default;
    };

    explicit BinSeqCode(CyclicWord w) : rep_(std::move(w)) {}
    explicit BinSeqCode(Pull p) : rep_(std::move(p)) {}

    std::variant<CyclicWord, Pull> rep_;
};

/// Equality of the denoted sequences.
///
/// CycW/CycW and Pullback/Pullback are decided exactly. A CycW against a
/// non-constant pullback is refuted by scanning k < n_cmp; if no
/// disagreement turns up, IncomparableCodes is thrown rather than guessing.
bool binseq_eq(const BinSeqCode& u, const BinSeqCode& v, Index n_cmp = kDefaultCompareBound);

/// A point y of (2^N)^N: y(n) = entries[n mod len].
class YSeqCode {
public:
    /// Throws InvalidCode on an empty list.
    explicit YSeqCode(std::vector<BinSeqCode> entries);

    const std::vector<BinSeqCode>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    const BinSeqCode& at(Index n) const { return entries_[n % entries_.size()]; }

    friend bool operator==(const YSeqCode&, const YSeqCode&) = default;

private:
    std::vector<BinSeqCode> entries_;
};

/// Prefix-free bit serialization of an atom.
std::string encode_atom_bits(const Atom& a);
/// Decodes one atom from the bit source starting at `start`; `consumed`
/// receives the number of bits read. Throws InvalidCode on malformed input.
Atom decode_atom_bits(const std::function<bool(Index)>& bit, Index start, Index& consumed);

/// Injection R -> 2^N: the cyclic word "1" followed by the atom's
/// serialization. Distinct atoms give distinct sequences because no codeword
/// of a prefix-free code is a proper prefix of another.
BinSeqCode atom_to_binseq(const Atom& a);
/// Inverse of atom_to_binseq on its image.
Atom binseq_to_atom(const BinSeqCode& b);

}  // namespace fsjump
