#pragma once

// Property campaigns behind `fsjump verify <target>` and the report
// formatters shared by the CLI and the acceptance suite.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fsjump/generators.hpp"
#include "fsjump/invariants.hpp"
#include "fsjump/reductions.hpp"

namespace fsjump {

enum class Target { Claim, Star, Remark, Embed, Interleave, GToF, ConstJump };

std::optional<Target> parse_target(std::string_view name);
std::string to_string(Target t);
const std::vector<std::string>& target_names();

/// Runs cfg.cases generated cases for the target. Deterministic in cfg.
VerificationReport run_campaign(Target target, const FuzzConfig& cfg);

/// Single targets, exposed for the acceptance suite.
VerificationReport verify_identity_law(const FuzzConfig& cfg);
VerificationReport verify_claim(const FuzzConfig& cfg);
VerificationReport verify_star(const FuzzConfig& cfg);
VerificationReport verify_remark(const FuzzConfig& cfg);
VerificationReport verify_embed(const FuzzConfig& cfg);
VerificationReport verify_interleave(const FuzzConfig& cfg);
VerificationReport verify_g_to_f(const FuzzConfig& cfg);
VerificationReport verify_const_jump(const FuzzConfig& cfg);

enum class Format { Text, Machine };

std::optional<Format> parse_format(std::string_view name);

/// Text: one summary line, then one line per note and per violation.
/// Machine: one JSON object with fields name, checked, violations[], status.
std::string format_report(const VerificationReport& report, Format format);
std::string format_chain(const ChainReport& chain, Format format);
std::string format_growth(const std::vector<GrowthRow>& rows, Format format);

}  // namespace fsjump
