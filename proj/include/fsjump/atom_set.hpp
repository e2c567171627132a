#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <iterator>
#include <vector>

#include "fsjump/atom.hpp"

namespace fsjump {

/// Finite set of atoms, kept sorted and duplicate-free so that set equality
/// is storage equality.
class AtomSet {
public:
    using const_iterator = std::vector<Atom>::const_iterator;

    AtomSet() = default;
    explicit AtomSet(std::vector<Atom> elements) : elems_(std::move(elements)) { normalize(); }
    AtomSet(std::initializer_list<Atom> elements) : elems_(elements) { normalize(); }

    std::size_t size() const noexcept { return elems_.size(); }
    bool empty() const noexcept { return elems_.empty(); }
    const_iterator begin() const noexcept { return elems_.begin(); }
    const_iterator end() const noexcept { return elems_.end(); }
    const std::vector<Atom>& elements() const noexcept { return elems_; }

    bool contains(const Atom& a) const { return std::binary_search(elems_.begin(), elems_.end(), a); }
    bool includes(const AtomSet& other) const {
        return std::includes(elems_.begin(), elems_.end(), other.begin(), other.end());
    }

    AtomSet intersect(const AtomSet& other) const {
        AtomSet out;
        std::set_intersection(begin(), end(), other.begin(), other.end(), std::back_inserter(out.elems_));
        return out;
    }
    AtomSet unite(const AtomSet& other) const {
        AtomSet out;
        std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out.elems_));
        return out;
    }

    friend bool operator==(const AtomSet&, const AtomSet&) = default;
    /// Cardinality first, then lexicographic on the sorted elements.
    friend std::strong_ordering operator<=>(const AtomSet& a, const AtomSet& b) {
        if (auto c = a.size() <=> b.size(); c != 0) return c;
        return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
    }

private:
    void normalize() {
        std::sort(elems_.begin(), elems_.end());
        elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    }

    std::vector<Atom> elems_;
};

/// Finite set of finite sets of atoms: the hereditarily finite invariant
/// for E and for the second jump of equality.
class SetOfAtomSets {
public:
    using const_iterator = std::vector<AtomSet>::const_iterator;

    SetOfAtomSets() = default;
    explicit SetOfAtomSets(std::vector<AtomSet> members) : sets_(std::move(members)) {
        std::sort(sets_.begin(), sets_.end());
        sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
    }
    SetOfAtomSets(std::initializer_list<AtomSet> members)
        : SetOfAtomSets(std::vector<AtomSet>(members)) {}

    std::size_t size() const noexcept { return sets_.size(); }
    bool empty() const noexcept { return sets_.empty(); }
    const_iterator begin() const noexcept { return sets_.begin(); }
    const_iterator end() const noexcept { return sets_.end(); }
    bool contains(const AtomSet& s) const { return std::binary_search(sets_.begin(), sets_.end(), s); }

    /// Union of all members.
    AtomSet flatten() const {
        AtomSet out;
        for (const auto& s : sets_) out = out.unite(s);
        return out;
    }

    friend bool operator==(const SetOfAtomSets&, const SetOfAtomSets&) = default;
    friend std::strong_ordering operator<=>(const SetOfAtomSets& a, const SetOfAtomSets& b) {
        if (auto c = a.size() <=> b.size(); c != 0) return c;
        return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
    }

private:
    std::vector<AtomSet> sets_;
};

}  // namespace fsjump
