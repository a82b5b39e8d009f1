#include "heatcoef/record.hpp"

#include <ostream>

#include "heatcoef/error.hpp"

namespace heatcoef::record {

using nlohmann::json;

json exact_json(const PiScaledRational& value, int precision) {
  return {{"coeff", value.coeff().str()},
          {"pi_half_exp", value.pi_half_exponent()},
          {"decimal", value.decimal(precision)}};
}

PiScaledRational parse_exact(const json& j) {
  if (!j.is_object() || !j.contains("coeff") || !j.contains("pi_half_exp")) {
    throw InvalidArgument("exact value must carry 'coeff' and 'pi_half_exp'");
  }
  return {Rational::parse(j.at("coeff").get<std::string>()), j.at("pi_half_exp").get<int>()};
}

json space_json(const SpaceDescriptor& desc, int precision) {
  json factors = json::array();
  for (const auto& f : desc.factors) factors.push_back({{"r2_coeff", f.r2_coeff.str()}, {"constant", f.constant.str()}});
  return {{"name", desc.name()},
          {"family", to_string(desc.family)},
          {"n", desc.n ? json(*desc.n) : json(nullptr)},
          {"d", desc.d},
          {"rho0", desc.rho0.str()},
          {"c_g", exact_json(desc.c_g, precision)},
          {"a_g", desc.a_g_kind ? json(to_string(*desc.a_g_kind)) : json(nullptr)},
          {"density", to_string(desc.density_kind)},
          {"factors", factors},
          {"polynomial_degree", desc.polynomial.degree()},
          {"degree_check", degree_check(desc)}};
}

json params_json(const SpectralParams& params) {
  return {{"chi_dim", params.chi_dim}, {"volume", params.volume.str()}, {"n0", params.n0}};
}

json envelope(const std::string& command, const SpaceDescriptor& desc, const SpectralParams& params, int precision,
              json payload) {
  return {{"schema_version", kSchemaVersion},
          {"command", command},
          {"space", space_json(desc, precision)},
          {"params", params_json(params)},
          {"payload", std::move(payload)}};
}

json catalog_payload(const std::vector<SpaceDescriptor>& spaces, int precision) {
  json list = json::array();
  for (const auto& s : spaces) list.push_back(space_json(s, precision));
  return {{"spaces", list}};
}

json poly_payload(const SpaceDescriptor& desc, int precision) {
  json coeffs = json::array();
  for (std::size_t j = 0; j < desc.polynomial.coeffs.size(); ++j) {
    coeffs.push_back({{"j", j}, {"value", exact_json(PiScaledRational(desc.polynomial.coeffs[j]), precision)}});
  }
  return {{"degree", desc.polynomial.degree()}, {"coefficients", coeffs}};
}

json coeffs_payload(const CoefficientTable& table, const SpectralParams& params, int precision) {
  const PiScaledRational scale(params.scale());
  json coeffs = json::array();
  for (const auto& e : table.entries) {
    coeffs.push_back({{"k", e.k}, {"branch", to_string(e.branch)}, {"value", exact_json(e.value * scale, precision)}});
  }
  return {{"k_max", table.k_max}, {"coefficients", coeffs}};
}

json residues_payload(const std::vector<std::pair<Rational, PiScaledRational>>& residues, int precision) {
  json list = json::array();
  for (const auto& [s, value] : residues) {
    list.push_back({{"kind", "residue"}, {"location", s.str()}, {"value", exact_json(value, precision)}});
  }
  return {{"residues", list}};
}

json special_payload(const ZetaResult& result, int precision) {
  return {{"kind", "special_value"},
          {"location", result.location.str()},
          {"value", exact_json(result.value, precision)},
          {"n0_term", result.n0_term}};
}

json verify_payload(const VerificationReport& report, int precision) {
  json rows = json::array();
  for (const auto& r : report.rows) {
    json row{{"k", r.k}, {"extracted", r.extracted.str(precision)}, {"error_estimate", r.error_estimate.str(3)}};
    row["exact"] = r.exact ? exact_json(*r.exact, precision) : json(nullptr);
    row["rel_error"] = r.rel_error ? json(r.rel_error->str(3)) : json(nullptr);
    if (r.pass) row["pass"] = *r.pass;
    rows.push_back(std::move(row));
  }
  json payload{{"tolerance", report.tolerance},
               {"config",
                {{"decimal_digits", report.config.decimal_digits},
                 {"tail_epsilon", report.config.tail_epsilon},
                 {"t_grid", report.config.t_grid},
                 {"richardson_depth", report.config.richardson_depth}}},
               {"rows", rows}};
  if (report.pass) payload["pass"] = *report.pass;
  return payload;
}

std::vector<PiScaledRational> parse_coefficients(const json& record) {
  std::vector<PiScaledRational> out;
  for (const auto& c : record.at("payload").at("coefficients")) out.push_back(parse_exact(c.at("value")));
  return out;
}

void write_exact_csv(std::ostream& os, const std::string& label_header, const std::vector<ExactRow>& rows,
                     int precision) {
  os << label_header << ",coeff_num,coeff_den,pi_half_exp,decimal\n";
  for (const auto& r : rows) {
    os << r.label << ',' << r.value.coeff().numerator().get_str() << ','
       << r.value.coeff().denominator().get_str() << ',' << r.value.pi_half_exponent() << ','
       << r.value.decimal(precision) << '\n';
  }
}

void write_verify_csv(std::ostream& os, const VerificationReport& report, int precision) {
  os << "k,coeff_num,coeff_den,pi_half_exp,exact_decimal,extracted,rel_error,pass\n";
  for (const auto& r : report.rows) {
    os << r.k << ',';
    if (r.exact) {
      os << r.exact->coeff().numerator().get_str() << ',' << r.exact->coeff().denominator().get_str() << ','
         << r.exact->pi_half_exponent() << ',' << r.exact->decimal(precision);
    } else {
      os << ",,,";
    }
    os << ',' << r.extracted.str(precision) << ',' << (r.rel_error ? r.rel_error->str(3) : "") << ','
       << (r.pass ? (*r.pass ? "true" : "false") : "") << '\n';
  }
}

void write_catalog_csv(std::ostream& os, const std::vector<SpaceDescriptor>& spaces) {
  os << "name,family,n,d,rho0,c_g_coeff,c_g_pi_half_exp,a_g,density,degree,degree_check\n";
  for (const auto& s : spaces) {
    os << s.name() << ',' << to_string(s.family) << ',' << (s.n ? std::to_string(*s.n) : "") << ',' << s.d << ','
       << s.rho0.str() << ',' << s.c_g.coeff().str() << ',' << s.c_g.pi_half_exponent() << ','
       << (s.a_g_kind ? std::string(to_string(*s.a_g_kind)) : "") << ',' << to_string(s.density_kind) << ','
       << s.polynomial.degree() << ',' << (degree_check(s) ? "true" : "false") << '\n';
  }
}

}  // namespace heatcoef::record
