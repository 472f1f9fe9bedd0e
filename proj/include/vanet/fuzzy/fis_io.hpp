#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "vanet/fuzzy/fis.hpp"

namespace vanet::fuzzy {

/// Parse error carrying the 1-based line of the offending statement.
class FisParseError : public FisError {
public:
    FisParseError(std::string source, std::size_t line, const std::string& message);

    const std::string& source() const noexcept { return source_; }
    std::size_t line() const noexcept { return line_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string source_;
    std::size_t line_;
    std::string detail_;
};

// Text format, one statement per line, '#' starts a comment:
//
//   [system]
//   name = f802_11p
//   type = mamdani
//   and = min
//   or = max
//   defuzzifier = centroid
//   resolution = 4096
//   normalize_inputs = false
//
//   [input S]
//   unit = m/s
//   range = 0 27.78
//   term R = triangle 0 0 8.3
//
//   [output F]
//   ...
//
//   [rules]
//   rule R1 = if S is R and SG is M and RG is M then F is B
//
// Shapes are `ramp TH1 TH2`, `triangle a b c` and `trapezoid a b c d`.

FisDefinition parse_fis(std::string_view text, const std::string& source = "<string>");
FisDefinition load_fis(const std::filesystem::path& path);

std::string format_fis(const FisDefinition& fis);

/// `rule <name> = if ... then ...` exactly as it appears in the [rules] section.
std::string format_rule(const FisDefinition& fis, const Rule& rule);

}  // namespace vanet::fuzzy
