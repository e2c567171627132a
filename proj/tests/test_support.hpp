#pragma once

// Random code generators for unit tests. Independent of the library's own
// generators so that properties are not checked against the code that made
// the samples.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "fsjump/codes.hpp"

namespace fsjump::testing {

class TestRng {
public:
    explicit TestRng(std::uint64_t seed) : eng_(seed) {}

    int range(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
    bool coin() { return range(0, 1) == 1; }

    std::string bits(int min_len, int max_len) {
        std::string w;
        const int len = range(min_len, max_len);
        for (int i = 0; i < len; ++i) w.push_back(coin() ? '1' : '0');
        return w;
    }

    Atom atom(int depth = 2) {
        switch (range(0, depth > 0 ? 2 : 1)) {
            case 0:
                return Atom::rational(range(-4, 4), range(1, 4));
            case 1:
                return Atom::word(bits(1, 5));
            default:
                return Atom::tag(range(0, 1), atom(depth - 1));
        }
    }

    /// Atom from a small pool, so that collisions are common.
    Atom pooled(int pool) { return Atom::rational(range(0, pool - 1)); }

    AtomList atom_list(int pool, int max_len) {
        AtomList out;
        const int len = range(1, max_len);
        for (int i = 0; i < len; ++i) out.push_back(pooled(pool));
        return out;
    }

    ZCode zcode(int pool, int max_rows, int max_len) {
        std::vector<AtomList> rows;
        const int s = range(1, max_rows);
        for (int i = 0; i < s; ++i) rows.push_back(atom_list(pool, max_len));
        return ZCode(std::move(rows));
    }

    AtomSeqCode aseq(int pool, int max_len) {
        if (coin()) return AtomSeqCode::cyclic(atom_list(pool, max_len));
        return AtomSeqCode::pair_merge(zcode(pool, 3, max_len));
    }

    AtomSet atom_set(int pool) {
        std::vector<Atom> v;
        for (int i = 0; i < pool; ++i)
            if (coin()) v.push_back(Atom::rational(i));
        return AtomSet(std::move(v));
    }

    BinSeqCode binseq(int pool, int max_len) {
        if (coin()) return BinSeqCode::word(bits(1, max_len));
        return BinSeqCode::pullback(AtomSeqCode::pair_merge(zcode(pool, 3, max_len)), atom_set(pool));
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        std::shuffle(v.begin(), v.end(), eng_);
    }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

}  // namespace fsjump::testing
