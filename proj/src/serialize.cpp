#include "fsjump/serialize.hpp"

#include <cctype>
#include <charconv>

#include "fsjump/errors.hpp"

namespace fsjump {

std::string to_text(const Atom& a) {
    switch (a.kind()) {
        case Atom::Kind::Rational:
            return "(rat " + std::to_string(a.as_rational().numerator()) + " " +
                   std::to_string(a.as_rational().denominator()) + ")";
        case Atom::Kind::Tag:
            return "(tag " + std::to_string(a.tag_bit()) + " " + to_text(a.tag_inner()) + ")";
        case Atom::Kind::Word:
            return "(word " + a.as_word().bits() + ")";
    }
    return {};
}

namespace {

std::string join_atoms(const char* head, const std::vector<Atom>& atoms) {
    std::string out = "(";
    out += head;
    for (const auto& a : atoms) out += " " + to_text(a);
    return out + ")";
}

}  // namespace

std::string to_text(const AtomList& entries) { return join_atoms("cyc", entries); }

std::string to_text(const std::vector<AtomList>& rows) {
    std::string out = "(zlist";
    for (const auto& r : rows) out += " " + to_text(r);
    return out + ")";
}

std::string to_text(const ZCode& z) { return to_text(z.rows()); }

std::string to_text(const AtomSeqCode& x) {
    if (x.is_cyclic()) return to_text(x.entries());
    return "(pairmerge " + to_text(x.z()) + ")";
}

std::string to_text(const AtomSet& s) { return join_atoms("set", s.elements()); }

std::string to_text(const BinSeqCode& b) {
    if (b.is_word()) return "(cw " + b.as_word().bits() + ")";
    return "(pull " + to_text(b.base()) + " " + to_text(b.set()) + ")";
}

std::string to_text(const YSeqCode& y) {
    std::string out = "(ylist";
    for (const auto& e : y.entries()) out += " " + to_text(e);
    return out + ")";
}

std::string to_text(const PPoint& p) { return "(p " + to_text(p.x()) + " " + to_text(p.y()) + ")"; }

std::string to_text(const Term& t) {
    return std::visit([](const auto& v) { return to_text(v); }, t);
}

namespace {

struct Token {
    enum Kind { Open, Close, Word, End } kind;
    std::string_view text;
    std::size_t pos;
};

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) { advance(); }

    void finish() {
        if (tok_.kind != Token::End) fail("trailing input");
    }

    std::string_view peek_head() {
        if (tok_.kind != Token::Open) fail("expected '('");
        // Look past '(' without consuming it.
        std::size_t p = tok_.pos + 1;
        while (p < src_.size() && std::isspace(static_cast<unsigned char>(src_[p]))) ++p;
        std::size_t q = p;
        while (q < src_.size() && !is_delim(src_[q])) ++q;
        return src_.substr(p, q - p);
    }

    Atom atom() {
        const std::size_t at = tok_.pos;
        const std::string_view head = open();
        try {
            if (head == "rat") {
                const auto num = integer();
                const std::size_t den_pos = tok_.pos;
                const auto den = integer();
                if (den <= 0) fail_at(den_pos, "denominator must be positive");
                close();
                return Atom::rational(num, den);
            }
            if (head == "tag") {
                const std::string_view b = word();
                if (b != "0" && b != "1") fail("tag bit must be 0 or 1");
                Atom inner = atom();
                close();
                return Atom::tag(b == "1" ? 1 : 0, std::move(inner));
            }
            if (head == "word") {
                const std::string_view b = bits();
                close();
                return Atom::word(b);
            }
        } catch (const InvalidCode& e) {
            fail_at(at, e.what());
        }
        fail_at(at, "unknown atom form '" + std::string(head) + "'");
    }

    AtomList atom_list_body() {
        AtomList out;
        while (tok_.kind == Token::Open) out.push_back(atom());
        return out;
    }

    AtomList cyc() {
        const std::size_t at = tok_.pos;
        if (open() != "cyc") fail_at(at, "expected (cyc ...)");
        AtomList entries = atom_list_body();
        if (entries.empty()) fail("cyc needs at least one atom");
        close();
        return entries;
    }

    ZCode zcode() {
        const std::size_t at = tok_.pos;
        if (open() != "zlist") fail_at(at, "expected (zlist ...)");
        std::vector<AtomList> rows;
        while (tok_.kind == Token::Open) rows.push_back(cyc());
        if (rows.empty()) fail("zlist needs at least one row");
        close();
        return ZCode(std::move(rows));
    }

    AtomSeqCode aseq() {
        const std::size_t at = tok_.pos;
        const std::string_view head = peek_head();
        if (head == "cyc") return AtomSeqCode::cyclic(cyc());
        if (head == "pairmerge") {
            open();
            ZCode z = zcode();
            close();
            return AtomSeqCode::pair_merge(std::move(z));
        }
        fail_at(at, "expected (cyc ...) or (pairmerge ...)");
    }

    BinSeqCode binseq() {
        const std::size_t at = tok_.pos;
        const std::string_view head = open();
        if (head == "cw") {
            const std::string_view b = bits();
            close();
            return BinSeqCode::word(b);
        }
        if (head == "pull") {
            AtomSeqCode base = aseq();
            const std::size_t set_at = tok_.pos;
            if (open() != "set") fail_at(set_at, "expected (set ...)");
            AtomList elems = atom_list_body();
            close();
            close();
            return BinSeqCode::pullback(base, AtomSet(std::move(elems)));
        }
        fail_at(at, "expected (cw ...) or (pull ...)");
    }

    YSeqCode yseq() {
        const std::size_t at = tok_.pos;
        if (open() != "ylist") fail_at(at, "expected (ylist ...)");
        std::vector<BinSeqCode> entries;
        while (tok_.kind == Token::Open) entries.push_back(binseq());
        if (entries.empty()) fail("ylist needs at least one entry");
        close();
        return YSeqCode(std::move(entries));
    }

    PPoint ppoint() {
        const std::size_t at = tok_.pos;
        if (open() != "p") fail_at(at, "expected (p ...)");
        AtomSeqCode x = aseq();
        YSeqCode y = yseq();
        close();
        return p_membership(std::move(x), std::move(y));
    }

    Term term() {
        const std::size_t at = tok_.pos;
        const std::string_view head = peek_head();
        if (head == "rat" || head == "tag" || head == "word") return atom();
        if (head == "cyc" || head == "pairmerge") return aseq();
        if (head == "zlist") return zcode();
        if (head == "cw" || head == "pull") return binseq();
        if (head == "ylist") return yseq();
        if (head == "p") return ppoint();
        fail_at(at, "unknown form '" + std::string(head) + "'");
    }

private:
    static bool is_delim(char c) {
        return c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c));
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(tok_.pos, msg); }
    [[noreturn]] static void fail_at(std::size_t pos, const std::string& msg) { throw ParseError(pos, msg); }

    void advance() {
        std::size_t p = next_;
        while (p < src_.size() && std::isspace(static_cast<unsigned char>(src_[p]))) ++p;
        if (p == src_.size()) {
            tok_ = {Token::End, {}, p};
            next_ = p;
            return;
        }
        if (src_[p] == '(' || src_[p] == ')') {
            tok_ = {src_[p] == '(' ? Token::Open : Token::Close, src_.substr(p, 1), p};
            next_ = p + 1;
            return;
        }
        std::size_t q = p;
        while (q < src_.size() && !is_delim(src_[q])) ++q;
        tok_ = {Token::Word, src_.substr(p, q - p), p};
        next_ = q;
    }

    std::string_view open() {
        if (tok_.kind != Token::Open) fail("expected '('");
        advance();
        return word();
    }

    void close() {
        if (tok_.kind != Token::Close) fail("expected ')'");
        advance();
    }

    std::string_view word() {
        if (tok_.kind != Token::Word) fail("expected a token");
        const std::string_view w = tok_.text;
        advance();
        return w;
    }

    std::int64_t integer() {
        const std::size_t at = tok_.pos;
        const std::string_view w = word();
        std::int64_t v = 0;
        const auto [end, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
        if (ec != std::errc{} || end != w.data() + w.size()) fail_at(at, "expected an integer");
        return v;
    }

    std::string_view bits() {
        const std::size_t at = tok_.pos;
        if (tok_.kind != Token::Word) fail("expected a nonempty bit string");
        const std::string_view w = word();
        for (char c : w)
            if (c != '0' && c != '1') fail_at(at, "expected a nonempty bit string");
        return w;
    }

    std::string_view src_;
    std::size_t next_ = 0;
    Token tok_{Token::End, {}, 0};
};

template <class T, class Fn>
T parse_whole(std::string_view text, Fn&& fn) {
    Parser p(text);
    T out = fn(p);
    p.finish();
    return out;
}

}  // namespace

Atom parse_atom(std::string_view text) {
    return parse_whole<Atom>(text, [](Parser& p) { return p.atom(); });
}
AtomSeqCode parse_aseq(std::string_view text) {
    return parse_whole<AtomSeqCode>(text, [](Parser& p) { return p.aseq(); });
}
ZCode parse_zcode(std::string_view text) {
    return parse_whole<ZCode>(text, [](Parser& p) { return p.zcode(); });
}
BinSeqCode parse_binseq(std::string_view text) {
    return parse_whole<BinSeqCode>(text, [](Parser& p) { return p.binseq(); });
}
YSeqCode parse_yseq(std::string_view text) {
    return parse_whole<YSeqCode>(text, [](Parser& p) { return p.yseq(); });
}
PPoint parse_ppoint(std::string_view text) {
    return parse_whole<PPoint>(text, [](Parser& p) { return p.ppoint(); });
}
Term parse_term(std::string_view text) {
    return parse_whole<Term>(text, [](Parser& p) { return p.term(); });
}

std::string echo(std::string_view text) { return to_text(parse_term(text)); }

}  // namespace fsjump
