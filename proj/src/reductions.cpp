#include "fsjump/reductions.hpp"

#include <map>
#include <numeric>

namespace fsjump {

YSeqCode fiber_map(const AtomSeqCode& x0, const PPoint& p) {
    // First index of each value of x below its saturation bound; every value
    // of x occurs there.
    std::map<Atom, Index> first_index;
    const Index bound = p.x().saturation_bound();
    for (Index k = 0; k < bound; ++k) first_index.try_emplace(p.x().value_at(k), k);

    std::vector<Index> witness;
    witness.reserve(x0.period());
    for (Index k = 0; k < x0.period(); ++k) {
        auto it = first_index.find(x0.value_at(k));
        if (it == first_index.end())
            throw NoWitness("x0(" + std::to_string(k) + ") does not occur in x");
        witness.push_back(it->second);
    }

    std::vector<BinSeqCode> out;
    out.reserve(p.y().size());
    for (const auto& entry : p.y().entries()) {
        std::string bits;
        bits.reserve(witness.size());
        for (Index k2 : witness) bits.push_back(entry.bit_at(k2) ? '1' : '0');
        out.push_back(BinSeqCode::word(bits));
    }
    return YSeqCode(std::move(out));
}

ReductionRecord<PPoint, YSeqCode> fiber_reduction(const AtomSeqCode& x0, Index n_cmp) {
    if (!x0.is_cyclic()) throw StructuralMismatch("fiber basepoint must be a cyclic code");
    EqRel<PPoint> source = restrict_to_fiber(x0);
    return {"fiber_reduction", source, relation_G(n_cmp), [x0, source](const PPoint& p) {
                if (!source.in_domain(p)) throw DomainViolation("point outside the fiber of x0");
                return fiber_map(x0, p);
            }};
}

PPoint embed_fs2(const ZCode& z) {
    const AtomSeqCode x = AtomSeqCode::pair_merge(z);
    std::vector<BinSeqCode> entries;
    entries.reserve(z.size());
    // y(n)(e(i, j)) = 1 iff z(i)(j) occurs in z(n), i.e. x(e(i, j)) lies in
    // range(z(n)).
    for (const auto& row : z.rows()) entries.push_back(BinSeqCode::pullback(x, AtomSet(row)));
    return p_membership(x, YSeqCode(std::move(entries)));
}

ReductionRecord<std::vector<AtomList>, PPoint> embed_fs2_reduction() {
    return {"embed_fs2", jump(jump(atom_eq())), relation_E(),
            [](const std::vector<AtomList>& rows) { return embed_fs2(ZCode(rows)); }};
}

AtomSeqCode pair_interleave(const AtomSeqCode& x, const AtomSeqCode& y) {
    if (!x.is_cyclic() || !y.is_cyclic()) throw StructuralMismatch("pair_interleave needs cyclic inputs");
    const Index len = std::lcm(x.period(), y.period());
    AtomList out;
    out.reserve(2 * len);
    for (Index n = 0; n < len; ++n) {
        out.push_back(iota(x.value_at(n), 0));
        out.push_back(iota(y.value_at(n), 1));
    }
    return AtomSeqCode::cyclic(std::move(out));
}

ReductionRecord<std::pair<AtomSeqCode, AtomSeqCode>, AtomSeqCode> interleave_reduction() {
    auto source = product(relation_F(), relation_F());
    source.domain = [](const std::pair<AtomSeqCode, AtomSeqCode>& p) {
        return p.first.is_cyclic() && p.second.is_cyclic();
    };
    return {"pair_interleave", source, relation_F(),
            [](const std::pair<AtomSeqCode, AtomSeqCode>& p) { return pair_interleave(p.first, p.second); }};
}

AtomSeqCode g_to_f(const YSeqCode& y) {
    AtomList out;
    out.reserve(y.size());
    for (const auto& e : y.entries()) {
        if (!e.is_word()) throw IncomparableCodes("g_to_f: entry is a pullback with no canonical word form");
        out.push_back(Atom::word(e.as_word()));
    }
    return AtomSeqCode::cyclic(std::move(out));
}

ReductionRecord<YSeqCode, AtomSeqCode> g_to_f_reduction(Index n_cmp) {
    return {"g_to_f", relation_G(n_cmp), relation_F(), g_to_f};
}

ReductionRecord<std::pair<AtomSeqCode, YSeqCode>, std::pair<AtomSeqCode, AtomSeqCode>> product_g_to_f_reduction(
    Index n_cmp) {
    return {"id x g_to_f", product(relation_F(), relation_G(n_cmp)), product(relation_F(), relation_F()),
            [](const std::pair<AtomSeqCode, YSeqCode>& p) { return std::pair{p.first, g_to_f(p.second)}; }};
}

std::string to_string(LinkStatus s) {
    switch (s) {
        case LinkStatus::Verified:
            return "VERIFIED";
        case LinkStatus::Violated:
            return "VIOLATED";
        case LinkStatus::Hypothetical:
            return "HYPOTHETICAL";
    }
    return {};
}

bool ChainReport::ok() const {
    for (const auto& l : links)
        if (l.status == LinkStatus::Violated) return false;
    for (const auto& r : growth)
        if (!r.match) return false;
    return true;
}

namespace {

ChainLink verified_link(std::string from, std::string to, std::string via, VerificationReport report) {
    const LinkStatus s = report.passed() ? LinkStatus::Verified : LinkStatus::Violated;
    return {std::move(from), std::move(to), std::move(via), s, std::move(report)};
}

}  // namespace

ChainReport chain_report(const FuzzConfig& cfg, ChainOptions options) {
    cfg.validate();
    ChainReport out;

    out.links.push_back(verified_link("((=R)+)+", "E", "embed_fs2",
                                      check_reduction(embed_fs2_reduction(), sample_zrow_pairs(cfg))));

    // The conclusion of the conjecture; no map is claimed to exist.
    out.links.push_back({"E", "F x G", "conjectured reduction", LinkStatus::Hypothetical, std::nullopt});

    out.links.push_back(verified_link("F x G", "F x F", "id x g_to_f",
                                      check_reduction(product_g_to_f_reduction(cfg.n_cmp), sample_fg_pairs(cfg))));

    auto interleave = interleave_reduction();
    if (options.inject_fault) {
        auto honest = interleave.map;
        interleave.map = [honest](const std::pair<AtomSeqCode, AtomSeqCode>& p) {
            AtomList entries = honest(p).entries();
            entries.front() = iota(entries.front().tag_inner(), 1 - entries.front().tag_bit());
            return AtomSeqCode::cyclic(std::move(entries));
        };
    }
    out.links.push_back(
        verified_link("F x F", "F", "pair_interleave", check_reduction(interleave, sample_ff_pairs(cfg))));

    out.growth = growth_table({1, 2, 3}, cfg.max_period);
    out.status = out.ok() ? kChainVerified : kChainBroken;
    return out;
}

}  // namespace fsjump
