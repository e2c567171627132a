#pragma once

// Canonical text form for codes. Grammar (whitespace-insensitive between
// tokens):
//
//   atom   := "(rat " int " " posint ")" | "(tag " bit " " atom ")" | "(word " bits ")"
//   aseq   := "(cyc" {" " atom}+ ")" | "(pairmerge " zcode ")"
//   binseq := "(cw " bits ")" | "(pull " aseq " (set" {" " atom}* "))"
//   yseq   := "(ylist" {" " binseq}+ ")"
//   zcode  := "(zlist" {" " "(cyc" {" " atom}+ ")"}+ ")"
//   ppoint := "(p " aseq " " yseq ")"
//
// Parsing canonicalizes (lowest-terms rationals, primitive words, normalized
// pullbacks, validated P-points); printing emits single-space canonical text.

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "fsjump/codes.hpp"
#include "fsjump/relations.hpp"

namespace fsjump {

std::string to_text(const Atom& a);
std::string to_text(const AtomSeqCode& x);
std::string to_text(const ZCode& z);
std::string to_text(const BinSeqCode& b);
std::string to_text(const YSeqCode& y);
std::string to_text(const PPoint& p);
std::string to_text(const AtomSet& s);
/// A bare atom list prints as the cyclic sequence it denotes.
std::string to_text(const AtomList& entries);
/// A bare list of rows prints as the zlist it denotes.
std::string to_text(const std::vector<AtomList>& rows);

template <class A, class B>
std::string to_text(const std::pair<A, B>& p) {
    return "<" + to_text(p.first) + ", " + to_text(p.second) + ">";
}

Atom parse_atom(std::string_view text);
AtomSeqCode parse_aseq(std::string_view text);
ZCode parse_zcode(std::string_view text);
BinSeqCode parse_binseq(std::string_view text);
YSeqCode parse_yseq(std::string_view text);
/// Also validates membership in P; ClauseViolation and StructuralMismatch
/// propagate.
PPoint parse_ppoint(std::string_view text);

using Term = std::variant<Atom, AtomSeqCode, ZCode, BinSeqCode, YSeqCode, PPoint>;

/// Parses any top-level form, dispatching on its head keyword.
Term parse_term(std::string_view text);
std::string to_text(const Term& t);

/// parse_term followed by to_text.
std::string echo(std::string_view text);

}  // namespace fsjump
