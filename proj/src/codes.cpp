#include "fsjump/codes.hpp"

#include <cmath>
#include <numeric>

#include "fsjump/errors.hpp"

namespace fsjump {

Index cantor_pair(Index i, Index j) {
    const Index d = i + j;
    return d * (d + 1) / 2 + j;
}

std::pair<Index, Index> cantor_unpair(Index n) {
    // d is the largest integer with d(d+1)/2 <= n; the floating estimate is
    // corrected in both directions.
    auto d = static_cast<Index>((std::sqrt(8.0L * static_cast<long double>(n) + 1.0L) - 1.0L) / 2.0L);
    while (d * (d + 1) / 2 > n) --d;
    while ((d + 1) * (d + 2) / 2 <= n) ++d;
    const Index j = n - d * (d + 1) / 2;
    return {d - j, j};
}

ZCode::ZCode(std::vector<AtomList> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw InvalidCode("zlist needs at least one row");
    for (const auto& r : rows_)
        if (r.empty()) throw InvalidCode("zlist row needs at least one atom");
}

AtomSeqCode AtomSeqCode::cyclic(AtomList entries) {
    if (entries.empty()) throw InvalidCode("cyclic sequence needs at least one atom");
    return AtomSeqCode(std::move(entries));
}

AtomSeqCode AtomSeqCode::pair_merge(ZCode z) { return AtomSeqCode(std::move(z)); }

Atom AtomSeqCode::value_at(Index n) const {
    if (is_cyclic()) return entries()[n % entries().size()];
    const auto [i, j] = cantor_unpair(n);
    return z().at(i, j);
}

Index AtomSeqCode::saturation_bound() const {
    if (is_cyclic()) return period();
    // Every value z(i)(j) equals z(i mod s)(j mod p_i), and that cell sits at
    // index e(i mod s, j mod p_i); the bound covers all such cells.
    Index top = 0;
    const auto& rows = z().rows();
    for (Index i = 0; i < rows.size(); ++i)
        for (Index j = 0; j < rows[i].size(); ++j) top = std::max(top, cantor_pair(i, j));
    return top + 1;
}

AtomSet AtomSeqCode::range() const {
    if (is_cyclic()) return AtomSet(entries());
    std::vector<Atom> all;
    for (const auto& r : z().rows()) all.insert(all.end(), r.begin(), r.end());
    return AtomSet(std::move(all));
}

BinSeqCode BinSeqCode::pullback(const AtomSeqCode& base, const AtomSet& set) {
    if (base.is_cyclic()) {
        std::string bits;
        bits.reserve(base.period());
        for (const auto& a : base.entries()) bits.push_back(set.contains(a) ? '1' : '0');
        return BinSeqCode(CyclicWord(bits));
    }
    const AtomSet range = base.range();
    AtomSet carved = set.intersect(range);
    if (carved.empty()) return BinSeqCode(CyclicWord("0"));
    if (carved == range) return BinSeqCode(CyclicWord("1"));
    return BinSeqCode(Pull{base, std::move(carved)});
}

bool BinSeqCode::bit_at(Index k) const {
    if (is_word()) return as_word().bit(k);
    return set().contains(base().value_at(k));
}

std::optional<bool> BinSeqCode::constant() const {
    if (is_word() && as_word().is_constant()) return as_word().bit(0);
    return std::nullopt;
}

std::strong_ordering operator<=>(const BinSeqCode& a, const BinSeqCode& b) {
    if (auto c = a.rep_.index() <=> b.rep_.index(); c != 0) return c;
    if (a.is_word()) return a.as_word() <=> b.as_word();
    if (auto c = a.base() <=> b.base(); c != 0) return c;
    return a.set() <=> b.set();
}

namespace {

bool pullbacks_equal(const BinSeqCode& u, const BinSeqCode& v) {
    if (u.base() == v.base()) return u.set() == v.set();
    // Both bases are PairMerge. b(e(i, j)) depends on (i mod s, j mod p_i),
    // so the pair of sequences is periodic in i with period lcm(s, s') and,
    // for fixed i, periodic in j with the lcm of the two row periods.
    const ZCode& z = u.base().z();
    const ZCode& w = v.base().z();
    const Index rows = std::lcm<Index>(z.size(), w.size());
    for (Index i = 0; i < rows; ++i) {
        const Index cols = std::lcm<Index>(z.row(i).size(), w.row(i).size());
        for (Index j = 0; j < cols; ++j) {
            const Index k = cantor_pair(i, j);
            if (u.bit_at(k) != v.bit_at(k)) return false;
        }
    }
    return true;
}

}  // namespace

bool binseq_eq(const BinSeqCode& u, const BinSeqCode& v, Index n_cmp) {
    if (u.is_word() && v.is_word()) return u.as_word() == v.as_word();
    if (!u.is_word() && !v.is_word()) return pullbacks_equal(u, v);
    // A surviving pullback is never constant, so it differs from either
    // constant word.
    if (u.constant() || v.constant()) return false;
    for (Index k = 0; k < n_cmp; ++k)
        if (u.bit_at(k) != v.bit_at(k)) return false;
    throw IncomparableCodes("no disagreement between cyclic word and pullback below " +
                            std::to_string(n_cmp));
}

YSeqCode::YSeqCode(std::vector<BinSeqCode> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw InvalidCode("ylist needs at least one entry");
}

// Atom bit layout (prefix-free, built recursively from prefix-free parts):
//   rational: 00 sign gamma(|num| + 1) gamma(den)
//   tag:      01 bit atom
//   word:     10 gamma(len) bits
// gamma(v), v >= 1, is Elias gamma: (width - 1) zeros then v in binary.
namespace {

void put_gamma(std::string& out, std::uint64_t v) {
    int width = 0;
    for (std::uint64_t t = v; t != 0; t >>= 1) ++width;
    out.append(static_cast<std::size_t>(width - 1), '0');
    for (int b = width - 1; b >= 0; --b) out.push_back(((v >> b) & 1U) ? '1' : '0');
}

void put_atom(std::string& out, const Atom& a) {
    switch (a.kind()) {
        case Atom::Kind::Rational: {
            const auto& r = a.as_rational();
            out += "00";
            out.push_back(r.numerator() < 0 ? '1' : '0');
            const std::uint64_t mag = r.numerator() < 0 ? static_cast<std::uint64_t>(-r.numerator())
                                                        : static_cast<std::uint64_t>(r.numerator());
            put_gamma(out, mag + 1);
            put_gamma(out, static_cast<std::uint64_t>(r.denominator()));
            break;
        }
        case Atom::Kind::Tag:
            out += "01";
            out.push_back(a.tag_bit() ? '1' : '0');
            put_atom(out, a.tag_inner());
            break;
        case Atom::Kind::Word:
            out += "10";
            put_gamma(out, a.as_word().length());
            out += a.as_word().bits();
            break;
    }
}

struct BitReader {
    const std::function<bool(Index)>& bit;
    Index pos;

    bool next() { return bit(pos++); }

    std::uint64_t gamma() {
        int zeros = 0;
        while (!next()) {
            if (++zeros > 63) throw InvalidCode("malformed gamma code");
        }
        std::uint64_t v = 1;
        for (int i = 0; i < zeros; ++i) v = (v << 1) | (next() ? 1U : 0U);
        return v;
    }

    Atom atom(int depth) {
        if (depth > 4096) throw InvalidCode("atom nesting too deep");
        const bool hi = next();
        const bool lo = next();
        if (!hi && !lo) {
            const bool negative = next();
            const std::uint64_t mag = gamma() - 1;
            const std::uint64_t den = gamma();
            if (mag > static_cast<std::uint64_t>(INT64_MAX) || den > static_cast<std::uint64_t>(INT64_MAX))
                throw InvalidCode("rational out of range");
            const auto num = static_cast<std::int64_t>(mag);
            return Atom::rational(negative ? -num : num, static_cast<std::int64_t>(den));
        }
        if (!hi && lo) {
            const int b = next() ? 1 : 0;
            return Atom::tag(b, atom(depth + 1));
        }
        if (hi && !lo) {
            const std::uint64_t len = gamma();
            if (len > (Index{1} << 24)) throw InvalidCode("word atom too long");
            std::string bits;
            bits.reserve(len);
            for (std::uint64_t i = 0; i < len; ++i) bits.push_back(next() ? '1' : '0');
            return Atom::word(bits);
        }
        throw InvalidCode("unknown atom kind in bit serialization");
    }
};

}  // namespace

std::string encode_atom_bits(const Atom& a) {
    std::string out;
    put_atom(out, a);
    return out;
}

Atom decode_atom_bits(const std::function<bool(Index)>& bit, Index start, Index& consumed) {
    BitReader reader{bit, start};
    Atom a = reader.atom(0);
    consumed = reader.pos - start;
    return a;
}

BinSeqCode atom_to_binseq(const Atom& a) { return BinSeqCode::word("1" + encode_atom_bits(a)); }

Atom binseq_to_atom(const BinSeqCode& b) {
    // The stored word may be a primitive root shorter than the original
    // "1" + code; reading the periodic sequence from index 1 still yields
    // the code, which is self-delimiting.
    if (!b.bit_at(0)) throw InvalidCode("not in the image of atom_to_binseq");
    Index consumed = 0;
    return decode_atom_bits([&b](Index k) { return b.bit_at(k); }, 1, consumed);
}

}  // namespace fsjump
