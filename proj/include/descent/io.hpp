#pragma once

#include <string>
#include <utility>
#include <vector>

#include "descent/characters.hpp"
#include "descent/constant_table.hpp"
#include "descent/domino.hpp"
#include "descent/tableaux.hpp"
#include "descent/verify.hpp"

namespace descent::io {

enum class Format : std::uint8_t { Json, Csv };

Format parse_format(const std::string& name);

/// Kinds accepted by compute_table, in documented order.
const std::vector<std::string>& compute_kinds();
/// Largest n accepted for a kind; throws usage_error for an unknown kind.
int compute_bound(const std::string& kind);

/// Builds and serializes one table. Throws usage_error for an unknown kind or
/// n outside [1, compute_bound(kind)].
std::string compute_table(const std::string& kind, int n, Format format);

// JSON tables are dense; CSV tables list nonzero entries only.
std::string render_constant_table(const ConstantTable& table, Format format);
std::string render_d_table(const DTable& table, const std::string& kind, int n, Format format);
std::string render_kostka_table(int n, Format format);
std::string render_character_table(const CharacterTable& table, Format format);
std::string render_kronecker_table(const KroneckerTable& table, const std::string& kind, int n, Format format);
std::string render_m2_table(int n, Format format);
std::string render_m3_table(int n, Format format);

/// {"shape", "mode", "labels": row-wise label grid, "pairing": row-wise domino index grid}
std::string render_domino_tableau(const DominoTableau& t);

inline constexpr int kReportSchemaVersion = 1;

std::string render_report(const VerificationReport& report, bool timing);
std::string render_reports(const std::vector<VerificationReport>& reports, bool timing);

/// Parses a verify-all config: a JSON object mapping identity id to max n.
/// Throws usage_error on malformed input.
std::vector<std::pair<std::string, int>> parse_config(const std::string& text);
/// Every identity at its default n.
std::vector<std::pair<std::string, int>> default_config();

}  // namespace descent::io
