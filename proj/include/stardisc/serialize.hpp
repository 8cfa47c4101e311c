#pragma once

// JSON forms of results, certificates, witnesses, and bench rows.  Corners in
// certificates and witnesses are integer counter vectors so they round-trip
// exactly.

#include <iosfwd>
#include <span>

#include <json.hpp>

#include "stardisc/adversary.hpp"
#include "stardisc/bench.hpp"
#include "stardisc/discrepancy.hpp"

namespace stardisc {

using Json = nlohmann::ordered_json;

Json to_json(const DiscrepancyResult& r);
Json to_json(const ChainParameters& p);
Json to_json(const ChainCertificate& cert);
Json to_json(const ViolationWitness& w);
Json to_json(const Refutation& r);
Json to_json(const BenchRow& row);

// Rebuilds a certificate.  Step records may carry explicit "before"/"after"
// counter vectors; when absent they are replayed from the step indices.
// Parameters are taken verbatim (not re-validated) so that verify_certificate
// can judge them.  Throws parse_error on malformed input.
ChainCertificate certificate_from_json(const Json& j);

void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows);

}  // namespace stardisc
