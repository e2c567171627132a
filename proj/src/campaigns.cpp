#include "fsjump/campaigns.hpp"

#include <sstream>

#include <json.hpp>

namespace fsjump {

namespace {

const std::vector<std::pair<std::string, Target>>& target_table() {
    static const std::vector<std::pair<std::string, Target>> table{
        {"claim", Target::Claim},           {"star", Target::Star},   {"remark", Target::Remark},
        {"embed", Target::Embed},           {"interleave", Target::Interleave},
        {"gtof", Target::GToF},             {"constjump", Target::ConstJump},
    };
    return table;
}

void absorb(VerificationReport& into, const VerificationReport& from, std::size_t index) {
    into.checked += from.checked;
    for (auto v : from.violations) {
        v.index = index;
        into.violations.push_back(std::move(v));
    }
}

void absorb_all(VerificationReport& into, const VerificationReport& from, const std::string& prefix) {
    into.checked += from.checked;
    for (auto v : from.violations) {
        v.detail = prefix + ": " + v.detail;
        into.violations.push_back(std::move(v));
    }
}

}  // namespace

std::optional<Target> parse_target(std::string_view name) {
    for (const auto& [n, t] : target_table())
        if (n == name) return t;
    return std::nullopt;
}

std::string to_string(Target t) {
    for (const auto& [n, tt] : target_table())
        if (tt == t) return n;
    return {};
}

const std::vector<std::string>& target_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [n, t] : target_table()) out.push_back(n);
        return out;
    }();
    return names;
}

VerificationReport verify_identity_law(const FuzzConfig& cfg) {
    VerificationReport report;
    report.name = "identity";
    for (std::uint64_t i = 0; i < cfg.cases; ++i) {
        Rng rng = Rng::for_case(cfg.seed, i, 101);
        const AtomSet range = random_nonempty_subset(rng, make_universe(cfg.atom_universe));
        const PPoint p = realize_cyclic(rng, range, random_family(rng, range, cfg.max_entries), cfg);
        ++report.checked;
        try {
            const YSeqCode out = fiber_reduction(p.x(), cfg.n_cmp).map(p);
            bool same = out.size() == p.y().size();
            for (std::size_t n = 0; same && n < out.size(); ++n)
                same = binseq_eq(out.at(n), p.y().at(n), cfg.n_cmp);
            if (!same) report.violations.push_back({i, true, false, "f(x, y) != y for " + to_text(p)});
        } catch (const Error& e) {
            report.violations.push_back({i, std::nullopt, std::nullopt, e.what()});
        }
    }
    return report;
}

VerificationReport verify_claim(const FuzzConfig& cfg) {
    VerificationReport report;
    report.name = "claim";
    std::size_t related = 0;
    const auto pairs = sample_fiber_pairs(cfg);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& fp = pairs[i];
        related += fp.related ? 1 : 0;
        // Ground truth from the generated families, independent of carve().
        if ((e_invariant(fp.p) == e_invariant(fp.q)) != fp.related)
            report.violations.push_back({i, fp.related, std::nullopt, "e_invariant disagrees with generated family"});
        const auto record = fiber_reduction(fp.basepoint, cfg.n_cmp);
        auto sub = check_reduction(record, std::vector<std::pair<PPoint, PPoint>>{{fp.p, fp.q}});
        if (sub.passed()) {
            const bool g = record.target.decide(record.map(fp.p), record.map(fp.q));
            if (g != fp.related)
                sub.violations.push_back({i, fp.related, g, "G verdict disagrees with ground truth"});
        }
        absorb(report, sub, i);
    }
    report.notes.push_back("related=" + std::to_string(related) +
                           " unrelated=" + std::to_string(pairs.size() - related));
    return report;
}

VerificationReport verify_star(const FuzzConfig& cfg) {
    VerificationReport report;
    report.name = "star";
    std::size_t comparisons = 0, matches = 0;
    const auto pairs = sample_fiber_pairs(cfg);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& fp = pairs[i];
        ++report.checked;
        try {
            const YSeqCode fpv = fiber_map(fp.basepoint, fp.p);
            const YSeqCode fqv = fiber_map(fp.basepoint, fp.q);
            for (Index n = 0; n < fp.p.y().size(); ++n)
                for (Index m = 0; m < fp.q.y().size(); ++m) {
                    ++comparisons;
                    const bool sets_equal = carve(fp.p, n) == carve(fp.q, m);
                    const bool codes_equal = binseq_eq(fpv.at(n), fqv.at(m), cfg.n_cmp);
                    matches += sets_equal ? 1 : 0;
                    if (sets_equal != codes_equal)
                        report.violations.push_back({i, sets_equal, codes_equal,
                                                     "entries n=" + std::to_string(n) + " m=" + std::to_string(m)});
                }
        } catch (const Error& e) {
            report.violations.push_back({i, std::nullopt, std::nullopt, e.what()});
        }
    }
    report.notes.push_back("entry comparisons=" + std::to_string(comparisons) +
                           " equal carves=" + std::to_string(matches));
    return report;
}

VerificationReport verify_remark(const FuzzConfig& cfg) {
    VerificationReport report;
    report.name = "remark";
    std::optional<std::string> converse;
    std::size_t e_related = 0;

    auto check_pair = [&](std::size_t i, const PPoint& p, const PPoint& q) {
        ++report.checked;
        for (const PPoint* pt : {&p, &q})
            if (carved_family(*pt).flatten() != pt->x().range())
                report.violations.push_back({i, std::nullopt, std::nullopt, "union of A_n != range(x)"});
        const bool e = rel_E(p, q);
        const bool f = rel_F(p.x(), q.x());
        e_related += e ? 1 : 0;
        if (e && !f) report.violations.push_back({i, e, f, "E-related points with F-unrelated bases"});
        if (f && !e && !converse)
            converse = "converse fails at pair " + std::to_string(i) + ": " + to_text(p) + " vs " + to_text(q);
    };

    // Half fiber pairs (F-related bases), half independent points.
    const auto fiber = sample_fiber_pairs(cfg);
    for (std::size_t i = 0; i < fiber.size(); ++i) {
        if (i % 2 == 0) {
            check_pair(i, fiber[i].p, fiber[i].q);
        } else {
            Rng rng = Rng::for_case(cfg.seed, i, 102);
            const auto a = random_ppoint(rng, cfg);
            const auto b = random_ppoint(rng, cfg);
            check_pair(i, a.first, b.first);
        }
    }
    report.notes.push_back("E-related pairs=" + std::to_string(e_related));
    if (converse)
        report.notes.push_back(*converse);
    else if (cfg.cases > 0)
        report.violations.push_back({0, std::nullopt, std::nullopt, "no F-related, E-unrelated pair exhibited"});
    return report;
}

VerificationReport verify_embed(const FuzzConfig& cfg) {
    const auto pairs = sample_zrow_pairs(cfg);
    VerificationReport report = check_reduction(embed_fs2_reduction(), pairs);
    std::size_t related = 0;
    const auto fs2 = jump(jump(atom_eq()));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        related += fs2.decide(pairs[i].first, pairs[i].second) ? 1 : 0;
        for (const auto* rows : {&pairs[i].first, &pairs[i].second}) {
            const ZCode z(*rows);
            if (e_invariant(embed_fs2(z)) != fs2_invariant(z))
                report.violations.push_back({i, std::nullopt, std::nullopt, "e_invariant(embed(z)) != fs2_invariant(z)"});
        }
    }
    report.notes.push_back("related=" + std::to_string(related) +
                           " unrelated=" + std::to_string(pairs.size() - related));
    return report;
}

VerificationReport verify_interleave(const FuzzConfig& cfg) {
    const auto pairs = sample_ff_pairs(cfg);
    VerificationReport report = check_reduction(interleave_reduction(), pairs);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& [x, y] = pairs[i].first;
        const AtomSeqCode out = pair_interleave(x, y);
        // Splitting the output range by tag recovers both input ranges.
        std::vector<Atom> left, right;
        bool untagged = false;
        for (const auto& a : out.range()) {
            if (a.kind() != Atom::Kind::Tag) {
                untagged = true;
                continue;
            }
            (a.tag_bit() == 0 ? left : right).push_back(a.tag_inner());
        }
        if (untagged || AtomSet(left) != x.range() || AtomSet(right) != y.range())
            report.violations.push_back({i, std::nullopt, std::nullopt, "tag split does not recover the inputs"});
    }
    return report;
}

VerificationReport verify_g_to_f(const FuzzConfig& cfg) {
    return check_reduction(g_to_f_reduction(cfg.n_cmp), sample_word_y_pairs(cfg));
}

VerificationReport verify_const_jump(const FuzzConfig& cfg) {
    VerificationReport report;
    report.name = "const_jump";
    const auto universe = make_universe(cfg.atom_universe);
    std::vector<std::pair<Atom, Atom>> atoms;
    std::vector<std::pair<AtomSeqCode, AtomSeqCode>> seqs;
    for (std::uint64_t i = 0; i < cfg.cases; ++i) {
        Rng rng = Rng::for_case(cfg.seed, i, 103);
        atoms.emplace_back(universe[rng.below(universe.size())], universe[rng.below(universe.size())]);
        const AtomSeqCode x = random_cyclic(rng, cfg);
        const AtomSeqCode other = rng.coin() ? AtomSeqCode::cyclic(random_enumeration(rng, x.range(), cfg.max_period))
                                             : random_cyclic(rng, cfg);
        seqs.emplace_back(x, other);
    }
    absorb_all(report, check_reduction(const_jump_embedding(atom_eq()), atoms), "=R");
    absorb_all(report, check_reduction(const_jump_embedding(relation_F()), seqs), "F");
    return report;
}

VerificationReport run_campaign(Target target, const FuzzConfig& cfg) {
    cfg.validate();
    VerificationReport r;
    switch (target) {
        case Target::Claim: {
            r = verify_claim(cfg);
            const auto id = verify_identity_law(cfg);
            absorb_all(r, id, "identity");
            r.notes.push_back("identity law checks=" + std::to_string(id.checked));
            break;
        }
        case Target::Star:
            r = verify_star(cfg);
            break;
        case Target::Remark:
            r = verify_remark(cfg);
            break;
        case Target::Embed:
            r = verify_embed(cfg);
            break;
        case Target::Interleave:
            r = verify_interleave(cfg);
            break;
        case Target::GToF:
            r = verify_g_to_f(cfg);
            break;
        case Target::ConstJump:
            r = verify_const_jump(cfg);
            break;
    }
    r.name = to_string(target);
    return r;
}

std::optional<Format> parse_format(std::string_view name) {
    if (name == "text") return Format::Text;
    if (name == "machine") return Format::Machine;
    return std::nullopt;
}

namespace {

std::string verdict(const std::optional<bool>& v) {
    if (!v) return "n/a";
    return *v ? "related" : "unrelated";
}

nlohmann::json violations_json(const VerificationReport& r) {
    auto out = nlohmann::json::array();
    for (const auto& v : r.violations)
        out.push_back({{"index", v.index},
                       {"source", verdict(v.source_related)},
                       {"target", verdict(v.target_related)},
                       {"detail", v.detail}});
    return out;
}

nlohmann::json report_json(const VerificationReport& r) {
    return {{"name", r.name}, {"checked", r.checked}, {"violations", violations_json(r)}, {"status", r.status()}};
}

nlohmann::json growth_json(const std::vector<GrowthRow>& rows) {
    auto out = nlohmann::json::array();
    for (const auto& g : rows)
        out.push_back({{"level", to_string(g.level)},
                       {"n", g.n},
                       {"count", g.count},
                       {"closed_form", g.closed_form},
                       {"match", g.match}});
    return out;
}

void text_body(std::ostringstream& out, const VerificationReport& r, const std::string& indent) {
    for (const auto& n : r.notes) out << indent << "note: " << n << '\n';
    for (const auto& v : r.violations)
        out << indent << "violation: case " << v.index << ": source=" << verdict(v.source_related)
            << " target=" << verdict(v.target_related) << ": " << v.detail << '\n';
}

}  // namespace

std::string format_report(const VerificationReport& r, Format format) {
    if (format == Format::Machine) return report_json(r).dump() + "\n";
    std::ostringstream out;
    out << "verify " << r.name << ": checked=" << r.checked << " violations=" << r.violations.size()
        << " status=" << r.status() << '\n';
    text_body(out, r, "  ");
    return out.str();
}

std::string format_growth(const std::vector<GrowthRow>& rows, Format format) {
    if (format == Format::Machine) return growth_json(rows).dump() + "\n";
    return format_growth_table(rows);
}

std::string format_chain(const ChainReport& chain, Format format) {
    if (format == Format::Machine) {
        std::size_t checked = 0;
        auto violations = nlohmann::json::array();
        auto links = nlohmann::json::array();
        for (const auto& l : chain.links) {
            nlohmann::json link{{"from", l.from}, {"to", l.to}, {"via", l.via}, {"status", to_string(l.status)}};
            if (l.report) {
                checked += l.report->checked;
                link["report"] = report_json(*l.report);
                for (auto v : violations_json(*l.report)) {
                    v["link"] = l.from + " -> " + l.to;
                    violations.push_back(std::move(v));
                }
            }
            links.push_back(std::move(link));
        }
        nlohmann::json j{{"name", "chain"},
                         {"checked", checked},
                         {"violations", violations},
                         {"status", chain.status},
                         {"links", links},
                         {"growth", growth_json(chain.growth)}};
        return j.dump() + "\n";
    }
    std::ostringstream out;
    out << "chain:";
    for (std::size_t i = 0; i < chain.links.size(); ++i)
        out << (i == 0 ? " " + chain.links[i].from : std::string()) << " <=B " << chain.links[i].to;
    out << '\n';
    for (const auto& l : chain.links) {
        out << "link " << l.from << " -> " << l.to << " via " << l.via << ": " << to_string(l.status);
        if (l.report) {
            out << " (checked=" << l.report->checked << " violations=" << l.report->violations.size() << ")\n";
            text_body(out, *l.report, "  ");
        } else {
            out << " (conclusion of the conjecture; not verified)\n";
        }
    }
    out << "growth of class counts (F = (=R)+, E; jump growth at desk scale):\n";
    out << format_growth_table(chain.growth);
    out << "status: " << chain.status << '\n';
    return out.str();
}

}  // namespace fsjump
