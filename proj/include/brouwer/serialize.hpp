#pragma once

#include <json.hpp>

#include "brouwer/certificates.hpp"
#include "brouwer/conjecture.hpp"
#include "brouwer/corpus.hpp"
#include "brouwer/signed_graphs.hpp"
#include "brouwer/spectral.hpp"

namespace brouwer {

inline constexpr int kSchemaVersion = 1;

nlohmann::ordered_json to_json(const ExcessProfile& p);
nlohmann::ordered_json to_json(const Spectrum& s);
nlohmann::ordered_json to_json(const Certificate& c);
nlohmann::ordered_json to_json(const CoverageReport& c);
nlohmann::ordered_json to_json(const CorpusReport& r);
nlohmann::ordered_json to_json(const CorpusViolation& v);
nlohmann::ordered_json to_json(const McRecord& r);
nlohmann::ordered_json to_json(const McSummary& s);
nlohmann::ordered_json verdict_rows_json(const ExcessProfile& p, const CoverageReport& c);

// One CSV row per trial; header: n,trial,seed,kstar,max_excess,excess_at_predicted_k
std::string mc_csv(const std::vector<McRecord>& records);

}  // namespace brouwer
