#include "fsjump/atom.hpp"

#include <limits>
#include <numeric>
#include <vector>

#include "fsjump/errors.hpp"

namespace fsjump {

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    constexpr auto kMin = std::numeric_limits<std::int64_t>::min();
    if (denominator == 0) throw InvalidCode("rational with zero denominator");
    if (numerator == kMin || denominator == kMin) throw InvalidCode("rational out of range");
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    const std::int64_t g = std::gcd(numerator, denominator);
    num_ = numerator / g;
    den_ = denominator / g;
}

std::string CyclicWord::primitive_root(std::string_view bits) {
    // The smallest period of w is n - border(w); w is a proper power exactly
    // when that period divides n.
    const std::size_t n = bits.size();
    std::vector<std::size_t> border(n + 1, 0);
    for (std::size_t i = 1, k = 0; i < n; ++i) {
        while (k > 0 && bits[i] != bits[k]) k = border[k];
        if (bits[i] == bits[k]) ++k;
        border[i + 1] = k;
    }
    const std::size_t period = n - border[n];
    if (period < n && n % period == 0) return std::string(bits.substr(0, period));
    return std::string(bits);
}

CyclicWord::CyclicWord(std::string_view bits) {
    if (bits.empty()) throw InvalidCode("empty cyclic word");
    for (char c : bits)
        if (c != '0' && c != '1') throw InvalidCode("cyclic word with non-bit character");
    bits_ = primitive_root(bits);
}

Atom Atom::tag(int bit, Atom inner) {
    if (bit != 0 && bit != 1) throw InvalidCode("tag bit must be 0 or 1");
    return Atom(std::make_shared<const TagNode>(TagNode{bit, std::move(inner)}));
}

Atom Atom::word(CyclicWord w) { return Atom(std::move(w)); }

int Atom::tag_bit() const { return std::get<TagRef>(rep_)->bit; }

const Atom& Atom::tag_inner() const { return std::get<TagRef>(rep_)->inner; }

std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
    if (auto c = a.rep_.index() <=> b.rep_.index(); c != 0) return c;
    switch (a.kind()) {
        case Atom::Kind::Rational:
            return a.as_rational() <=> b.as_rational();
        case Atom::Kind::Tag: {
            const auto& ta = std::get<Atom::TagRef>(a.rep_);
            const auto& tb = std::get<Atom::TagRef>(b.rep_);
            if (ta == tb) return std::strong_ordering::equal;
            if (auto c = ta->bit <=> tb->bit; c != 0) return c;
            return ta->inner <=> tb->inner;
        }
        case Atom::Kind::Word:
            return a.as_word() <=> b.as_word();
    }
    return std::strong_ordering::equal;
}

}  // namespace fsjump
