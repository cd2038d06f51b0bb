#pragma once

#include <string>
#include <vector>

#include "rtf/constructions.hpp"
#include "rtf/formulas.hpp"
#include "rtf/rt_exact.hpp"
#include "rtf/structure.hpp"

namespace rtf {

enum class OutputFormat { text, csv, json };
OutputFormat parse_format(const std::string& name);

struct CompareRow {
    std::string family;
    int n = 0;
    Ratio delta{0, 1};
    std::int64_t edges = 0;
    Ratio density{0, 1};   // e / n^2
    Ratio formula{0, 1};
    Ratio gap{0, 1};       // |density - formula|
    int alpha = 0;
    Ratio alpha_ratio{0, 1};
    bool ledger_ok = false;
    bool freeness_ok = false;
};

CompareRow compare_row(const ConstructionReport& report);

// one row per construction; exact ledger families have gap exactly zero
std::string compare_report(const std::vector<ConstructionReport>& reports,
                           OutputFormat format);

// builder-facing table: predicted versus actual edges plus the verdicts
std::string construction_csv(const ConstructionReport& report);

// structured-text certificate dumps
std::string to_text(const AlphaCertificate& cert);
std::string to_text(const CliqueCertificate& cert);
std::string to_text(const TrianglePacking& packing);
std::string to_text(const CutResult& cut);
std::string to_text(const PPartiteDistance& dist);
std::string to_text(const ShearerVerdict& verdict);
std::string to_text(const ConstructionReport& report);
std::string to_text(const DrcOutcome& out);
std::string to_text(const DrcExpectation& est);
std::string to_text(const RtResult& result);
std::string to_text(const ExtractorResult& result);

}  // namespace rtf
