#pragma once

// Reductions as executable maps on codes, a verifier for the reduction
// property x E x' <=> f(x) F f(x'), and the assembled chain
//
//   ((=R)+)+  <=B  E  <=B  F x G  <=B  (=R)+ x (=R)+  <=B  (=R)+
//
// in which the second link is the hypothetical one.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fsjump/codes.hpp"
#include "fsjump/errors.hpp"
#include "fsjump/generators.hpp"
#include "fsjump/invariants.hpp"
#include "fsjump/relations.hpp"
#include "fsjump/serialize.hpp"

namespace fsjump {

template <class Source, class Target>
struct ReductionRecord {
    std::string name;
    EqRel<Source> source;
    EqRel<Target> target;
    std::function<Target(const Source&)> map;
};

struct Violation {
    std::size_t index;
    std::optional<bool> source_related;
    std::optional<bool> target_related;
    std::string detail;
};

struct VerificationReport {
    std::string name;
    std::size_t checked = 0;
    std::vector<Violation> violations;
    /// Extra findings printed in text output (witnesses, frequencies).
    std::vector<std::string> notes;

    bool passed() const noexcept { return violations.empty(); }
    std::string status() const { return passed() ? "pass" : "fail"; }
};

template <class T>
std::string describe(const T& v) {
    if constexpr (requires { to_text(v); })
        return to_text(v);
    else
        return "<code>";
}

/// Checks the reduction iff on every pair. Points outside the source domain,
/// map failures and target-domain failures are recorded as violations of
/// that pair; the report keeps input order.
template <class S, class T>
VerificationReport check_reduction(const ReductionRecord<S, T>& r, const std::vector<std::pair<S, S>>& pairs) {
    VerificationReport report;
    report.name = r.name;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& [a, b] = pairs[i];
        ++report.checked;
        if (!r.source.in_domain(a) || !r.source.in_domain(b)) {
            report.violations.push_back({i, std::nullopt, std::nullopt, "outside source domain"});
            continue;
        }
        const bool src = r.source.decide(a, b);
        try {
            const T fa = r.map(a);
            const T fb = r.map(b);
            if (!r.target.in_domain(fa) || !r.target.in_domain(fb)) {
                report.violations.push_back({i, src, std::nullopt, "image outside target domain"});
                continue;
            }
            const bool tgt = r.target.decide(fa, fb);
            if (src != tgt)
                report.violations.push_back(
                    {i, src, tgt, describe(a) + " vs " + describe(b) + " -> " + describe(fa) + " vs " + describe(fb)});
        } catch (const Error& e) {
            report.violations.push_back({i, src, std::nullopt, e.what()});
        }
    }
    return report;
}

template <class S>
ReductionRecord<S, S> identity_reduction(EqRel<S> rel) {
    return {"id", rel, rel, [](const S& s) { return s; }};
}

/// r2 after r1. Throws TypeMismatch unless r1's target is r2's source.
template <class S, class M, class T>
ReductionRecord<S, T> compose(const ReductionRecord<S, M>& r1, const ReductionRecord<M, T>& r2) {
    if (r1.target.name != r2.source.name)
        throw TypeMismatch("cannot compose: " + r1.target.name + " is not " + r2.source.name);
    auto f = r1.map;
    auto g = r2.map;
    return {r2.name + " . " + r1.name, r1.source, r2.target, [f, g](const S& s) { return g(f(s)); }};
}

/// Raw fiber map: entry n of the output is the word of length period(x0)
/// whose bit k is y(n)(k') for the first k' < saturation_bound(x) with
/// x(k') = x0(k). Clause 3 makes the choice of k' irrelevant. Throws
/// NoWitness if some x0(k) does not occur in x.
YSeqCode fiber_map(const AtomSeqCode& x0, const PPoint& p);

/// The reduction of E restricted to the fiber of x0 to G. x0 must be cyclic
/// (StructuralMismatch otherwise); the map raises DomainViolation on points
/// outside the fiber.
ReductionRecord<PPoint, YSeqCode> fiber_reduction(const AtomSeqCode& x0, Index n_cmp = kDefaultCompareBound);

/// z |-> (x, y) with x(e(i, j)) = z(i)(j) and y(n) the pullback of
/// range(z(n)) along x.
PPoint embed_fs2(const ZCode& z);
ReductionRecord<std::vector<AtomList>, PPoint> embed_fs2_reduction();

/// (x, y) |-> z with z(2n) = iota(x(n), 0), z(2n+1) = iota(y(n), 1), as a
/// cyclic list of length 2 lcm(|x|, |y|). Both inputs must be cyclic.
AtomSeqCode pair_interleave(const AtomSeqCode& x, const AtomSeqCode& y);
ReductionRecord<std::pair<AtomSeqCode, AtomSeqCode>, AtomSeqCode> interleave_reduction();

/// y |-> the cyclic list of WordAtoms of y's canonical entries. Entries that
/// remain pullbacks raise IncomparableCodes.
AtomSeqCode g_to_f(const YSeqCode& y);
ReductionRecord<YSeqCode, AtomSeqCode> g_to_f_reduction(Index n_cmp = kDefaultCompareBound);

/// (x, y) |-> (x, g_to_f(y)).
ReductionRecord<std::pair<AtomSeqCode, YSeqCode>, std::pair<AtomSeqCode, AtomSeqCode>> product_g_to_f_reduction(
    Index n_cmp = kDefaultCompareBound);

/// E <=B E+ via a |-> the one-entry sequence (a).
template <class Code>
ReductionRecord<Code, CycList<Code>> const_jump_embedding(EqRel<Code> rel) {
    return {"const_jump(" + rel.name + ")", rel, jump(rel), [](const Code& a) { return CycList<Code>{a}; }};
}

enum class LinkStatus { Verified, Violated, Hypothetical };

std::string to_string(LinkStatus s);

struct ChainLink {
    std::string from;
    std::string to;
    std::string via;
    LinkStatus status;
    std::optional<VerificationReport> report;
};

struct ChainReport {
    std::vector<ChainLink> links;
    std::vector<GrowthRow> growth;
    std::string status;

    bool ok() const;
};

inline constexpr const char* kChainVerified = "counterexample structure verified";
inline constexpr const char* kChainBroken = "implemented link violated";

struct ChainOptions {
    /// Test hook: corrupts one output atom of the interleaving map.
    bool inject_fault = false;
};

/// Verifies every implemented link on cfg.cases sampled pairs, marks the
/// E -> F x G link hypothetical and attaches the class-count growth table
/// for n = 1, 2, 3.
ChainReport chain_report(const FuzzConfig& cfg, ChainOptions options = {});

}  // namespace fsjump
