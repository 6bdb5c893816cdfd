#pragma once

#include <filesystem>
#include <string>

#include "vdyn/multikreweras.hpp"
#include "vdyn/orbits.hpp"
#include "vdyn/pstrict.hpp"
#include "vdyn/rowmotion.hpp"
#include "vdyn/verify.hpp"

namespace vdyn {

// Labeling: {"ell", "q", "fibers": {"A": [...], "B": [...], "C": [...]}}
Json to_json(const PStrictLabeling& f);
PStrictLabeling labeling_from_json(const Json& j);

// Word: {"ell", "q", "blocks": [[nA, nB, nC], ...]}
Json to_json(const MultiKrewerasWord& w);
MultiKrewerasWord word_from_json(const Json& j);

// P-partition of V x [k]: {"poset": "VxK", "k", "ell", "values": {"(p,i)": v}}
Json to_json(const PPartition& f);
PPartition ppartition_from_json(const Json& j);

Json to_json(const LinearExtension& ext);
Json to_json(const KrewerasWord& w);

Json to_json(const OrbitReport& r);
OrbitReport orbit_report_from_json(const Json& j);

Json to_json(const VerificationReport& r);
VerificationReport verification_report_from_json(const Json& j);

enum class ReportFormat { kJson, kCsv };
ReportFormat parse_report_format(const std::string& name);

std::string to_csv(const OrbitReport& r);
std::string to_csv(const VerificationReport& r);
/// Reads the orbit-size field of a CSV orbit report back.
std::vector<std::uint64_t> orbit_sizes_from_csv(const std::string& csv);

void export_report(const OrbitReport& r, const std::filesystem::path& path, ReportFormat format);
void export_report(const VerificationReport& r, const std::filesystem::path& path,
                   ReportFormat format);

}  // namespace vdyn
