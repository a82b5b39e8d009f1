#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "heatcoef/catalog.hpp"
#include "heatcoef/heat.hpp"
#include "heatcoef/oracle.hpp"
#include "heatcoef/pi_scaled.hpp"
#include "heatcoef/zeta.hpp"

namespace heatcoef::record {

inline constexpr const char* kSchemaVersion = "heatcoef.record/1";

/// {"coeff": "p/q", "pi_half_exp": h, "decimal": "..."}.
nlohmann::json exact_json(const PiScaledRational& value, int precision);
/// Inverse of exact_json; ignores the decimal rendering.
PiScaledRational parse_exact(const nlohmann::json& j);

nlohmann::json space_json(const SpaceDescriptor& desc, int precision);
nlohmann::json params_json(const SpectralParams& params);

/// Envelope {"schema_version", "command", "space", "params", "payload"}.
nlohmann::json envelope(const std::string& command, const SpaceDescriptor& desc, const SpectralParams& params,
                        int precision, nlohmann::json payload);

nlohmann::json catalog_payload(const std::vector<SpaceDescriptor>& spaces, int precision);
nlohmann::json poly_payload(const SpaceDescriptor& desc, int precision);
/// Coefficients scaled by chi(1) Vol.
nlohmann::json coeffs_payload(const CoefficientTable& table, const SpectralParams& params, int precision);
nlohmann::json residues_payload(const std::vector<std::pair<Rational, PiScaledRational>>& residues, int precision);
nlohmann::json special_payload(const ZetaResult& result, int precision);
nlohmann::json verify_payload(const VerificationReport& report, int precision);

/// Exact values of a "coeffs" record's payload, in k order.
std::vector<PiScaledRational> parse_coefficients(const nlohmann::json& record);

/// One exact value per row: label, coeff_num, coeff_den, pi_half_exp, decimal.
struct ExactRow {
  std::string label;
  PiScaledRational value;
};
void write_exact_csv(std::ostream& os, const std::string& label_header, const std::vector<ExactRow>& rows,
                     int precision);
void write_verify_csv(std::ostream& os, const VerificationReport& report, int precision);
void write_catalog_csv(std::ostream& os, const std::vector<SpaceDescriptor>& spaces);

}  // namespace heatcoef::record
