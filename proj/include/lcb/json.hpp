#pragma once

#include <iosfwd>
#include <span>

#include <json.hpp>

#include "lcb/exact.hpp"
#include "lcb/extremal.hpp"
#include "lcb/report.hpp"
#include "lcb/sweep.hpp"
#include "lcb/weights.hpp"

namespace lcb {

/// Integers that fit in 64 bits serialize as numbers, wider ones as decimal strings.
nlohmann::ordered_json int_json(Int v);
/// {"num", "den", "approx"}; only num/den are authoritative.
nlohmann::ordered_json ratio_json(const ExactRatio& r);

nlohmann::ordered_json weights_json(const WeightMap& w);
nlohmann::ordered_json certificate_json(const EqualityCertificate& c);
nlohmann::ordered_json report_json(const BoundReport& r);
nlohmann::ordered_json dominance_json(const Dominance& d);
nlohmann::ordered_json cross_validation_json(const CrossValidation& cv);
nlohmann::ordered_json finding_json(const Finding& f);
nlohmann::ordered_json summary_json(const SweepSummary& s);

/// graph6,n,m,t,kind,count,bound_num,bound_den,equality,certificate
void write_slack_csv(std::ostream& out, std::span<const Evaluation> rows);

}  // namespace lcb
