#pragma once

// Atoms stand in for reals. Only equality on the reals is ever used, so any
// set of terms with decidable equality and enough room for an injection
// R x {0,1} -> R will do.

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

namespace fsjump {

using Index = std::uint64_t;

/// A rational number kept in lowest terms with a positive denominator, so
/// that equality is structural.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t numerator, std::int64_t denominator = 1);

    std::int64_t numerator() const noexcept { return num_; }
    std::int64_t denominator() const noexcept { return den_; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend auto operator<=>(const Rational&, const Rational&) = default;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// A periodic binary sequence b(k) = w[k mod |w|] for a finite nonempty word w.
///
/// The word is always stored as its primitive root (the shortest word whose
/// powers give w), which makes equality of the denoted sequences the same as
/// equality of the stored words. Rotations are distinct sequences.
class CyclicWord {
public:
    /// Throws InvalidCode if bits is empty or contains anything but '0'/'1'.
    explicit CyclicWord(std::string_view bits);

    static std::string primitive_root(std::string_view bits);

    const std::string& bits() const noexcept { return bits_; }
    std::size_t length() const noexcept { return bits_.size(); }
    bool bit(Index k) const noexcept { return bits_[k % bits_.size()] == '1'; }

    /// Set when the sequence is constantly 0 or constantly 1.
    bool is_constant() const noexcept { return bits_.size() == 1; }

    friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
    friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;

private:
    std::string bits_;
};

class Atom {
public:
    enum class Kind : std::uint8_t { Rational = 0, Tag = 1, Word = 2 };

    Atom() : rep_(Rational{}) {}
    Atom(Rational r) : rep_(r) {}
    static Atom rational(std::int64_t numerator, std::int64_t denominator = 1) {
        return Atom(Rational(numerator, denominator));
    }
    static Atom tag(int bit, Atom inner);
    static Atom word(CyclicWord w);
    static Atom word(std::string_view bits) { return word(CyclicWord(bits)); }

    Kind kind() const noexcept { return static_cast<Kind>(rep_.index()); }

    const Rational& as_rational() const { return std::get<Rational>(rep_); }
    int tag_bit() const;
    const Atom& tag_inner() const;
    const CyclicWord& as_word() const { return std::get<CyclicWord>(rep_); }

    friend bool operator==(const Atom& a, const Atom& b) { return (a <=> b) == 0; }
    /// Variant kind first, then the fields lexicographically.
    friend std::strong_ordering operator<=>(const Atom& a, const Atom& b);

private:
    struct TagNode;
    using TagRef = std::shared_ptr<const TagNode>;

    std::variant<Rational, TagRef, CyclicWord> rep_;

    explicit Atom(TagRef t) : rep_(std::move(t)) {}
    explicit Atom(CyclicWord w) : rep_(std::move(w)) {}
};

struct Atom::TagNode {
    int bit;
    Atom inner;
};

/// The injection R x {0,1} -> R used to interleave two sequences.
inline Atom iota(const Atom& a, int bit) { return Atom::tag(bit, a); }

}  // namespace fsjump
