#include "heatcoef/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "heatcoef/catalog.hpp"
#include "heatcoef/error.hpp"
#include "heatcoef/heat.hpp"
#include "heatcoef/oracle.hpp"
#include "heatcoef/record.hpp"
#include "heatcoef/zeta.hpp"

namespace heatcoef::cli {

namespace {

using nlohmann::json;

struct CommonOptions {
  std::string family;
  std::optional<int> n;
  std::string format = "json";
  int precision = 30;
  std::string volume = "1";
  int chi_dim = 1;
  int n0 = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App* app, CommonOptions& o, bool family_required) {
  auto* fam = app->add_option("--family", o.family, "so | su | sp | f4")
                  ->check(CLI::IsMember({"so", "su", "sp", "f4"}, CLI::ignore_case));
  if (family_required) fam->required();
  app->add_option("--n", o.n, "Family parameter (omit for f4)");
  app->add_option("--format", o.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  app->add_option("--precision", o.precision, "Significant digits of decimal renderings")
      ->check(CLI::Range(1, 10000));
  app->add_option("--volume", o.volume, "Vol(Gamma\\G), decimal or p/q");
  app->add_option("--chi-dim", o.chi_dim, "chi(1)");
  app->add_option("--n0", o.n0, "Multiplicity of the zero eigenvalue");
}

SpectralParams params_of(const CommonOptions& o) {
  SpectralParams p{o.chi_dim, Rational::parse(o.volume), o.n0};
  p.validate();
  return p;
}

SpaceDescriptor space_of(const CommonOptions& o) { return describe(parse_family(o.family), o.n); }

std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  int line_no = 0;
  auto trim = [](std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return std::string();
    return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(line_no) + ": expected key=value");
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

template <typename T>
void apply_config(const std::map<std::string, std::string>& kv, const std::string& key, const CLI::Option* flag,
                  T& target) {
  if (flag->count() > 0) return;
  const auto it = kv.find(key);
  if (it == kv.end()) return;
  std::istringstream in(it->second);
  T value{};
  if (!(in >> value) || !(in >> std::ws).eof()) throw UsageError("config: bad value for '" + key + "'");
  target = value;
}

void emit_exact(std::ostream& out, const CommonOptions& o, const json& record, const std::string& label_header,
                const std::vector<record::ExactRow>& rows) {
  if (o.format == "csv") {
    record::write_exact_csv(out, label_header, rows, o.precision);
  } else {
    out << record.dump(2) << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact heat-kernel coefficients on compact rank-1 locally symmetric spaces", "heatcoef"};
  app.require_subcommand(1);

  CommonOptions catalog_o, poly_o, zeta_o, coeffs_o, verify_o;
  int max_d = 20;
  auto* catalog = app.add_subcommand("catalog", "List admissible spaces, or describe one");
  add_common(catalog, catalog_o, false);
  catalog->add_option("--max-d", max_d, "Largest dimension listed")->check(CLI::PositiveNumber);

  auto* poly = app.add_subcommand("poly", "Coefficients a_2j of the Plancherel polynomial P(r)");
  add_common(poly, poly_o, true);

  bool residues = false;
  std::optional<int> special;
  std::optional<int> residue_count;
  auto* zeta = app.add_subcommand("zeta", "Residues or special values of the spectral zeta function");
  add_common(zeta, zeta_o, true);
  auto* residues_flag = zeta->add_flag("--residues", residues, "Residues at the poles");
  auto* special_opt = zeta->add_option("--special", special, "zeta(-N)")->check(CLI::NonNegativeNumber);
  residues_flag->excludes(special_opt);
  zeta->add_option("--kmax", residue_count, "Odd dimension: residues at s = d/2 - k for k <= K")
      ->check(CLI::NonNegativeNumber);

  int coeffs_kmax = 4;
  auto* coeffs = app.add_subcommand("coeffs", "Heat coefficients A_0..A_K");
  add_common(coeffs, coeffs_o, true);
  coeffs->add_option("--kmax", coeffs_kmax, "Largest k")->check(CLI::NonNegativeNumber);

  int verify_kmax = 3;
  int digits = 60;
  double tol = 1e-8;
  std::optional<double> t0;
  double ratio = 0.5;
  int depth = 10;
  std::string config_path;
  auto* verify_cmd = app.add_subcommand("verify", "Check A_k against quadrature of the heat kernel");
  add_common(verify_cmd, verify_o, true);
  auto* kmax_flag = verify_cmd->add_option("--kmax", verify_kmax, "Largest k")->check(CLI::NonNegativeNumber);
  auto* digits_flag = verify_cmd->add_option("--digits", digits, "Working precision in decimal digits");
  auto* tol_flag = verify_cmd->add_option("--tol", tol, "Relative tolerance per coefficient");
  auto* t0_flag = verify_cmd->add_option("--t0", t0, "Largest t of the extraction grid");
  auto* ratio_flag = verify_cmd->add_option("--grid-ratio", ratio, "Ratio between successive t");
  auto* depth_flag = verify_cmd->add_option("--depth", depth, "Richardson depth");
  auto* precision_flag = verify_cmd->get_option("--precision");
  verify_cmd->add_option("--config", config_path, "key=value file of defaults (flags override)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kUsageError;
  }

  try {
    if (catalog->parsed()) {
      const CommonOptions& o = catalog_o;
      if (o.family.empty()) {
        const auto spaces = admissible_spaces(max_d);
        if (o.format == "csv") {
          record::write_catalog_csv(out, spaces);
        } else {
          json rec{{"schema_version", record::kSchemaVersion},
                   {"command", "catalog"},
                   {"payload", record::catalog_payload(spaces, o.precision)}};
          out << rec.dump(2) << '\n';
        }
      } else {
        const auto desc = space_of(o);
        if (o.format == "csv") {
          record::write_catalog_csv(out, {desc});
        } else {
          out << record::envelope("catalog", desc, params_of(o), o.precision, json::object()).dump(2) << '\n';
        }
      }
      return kOk;
    }

    if (poly->parsed()) {
      const auto desc = space_of(poly_o);
      std::vector<record::ExactRow> rows;
      for (std::size_t j = 0; j < desc.polynomial.coeffs.size(); ++j) {
        rows.push_back({std::to_string(j), PiScaledRational(desc.polynomial.coeffs[j])});
      }
      emit_exact(out, poly_o,
                 record::envelope("poly", desc, params_of(poly_o), poly_o.precision,
                                  record::poly_payload(desc, poly_o.precision)),
                 "j", rows);
      return kOk;
    }

    if (zeta->parsed()) {
      if (!residues && !special) throw UsageError("zeta needs --residues or --special N");
      const auto desc = space_of(zeta_o);
      const auto params = params_of(zeta_o);
      const PiScaledRational scale(params.scale());
      if (residues) {
        std::vector<std::pair<Rational, PiScaledRational>> list;
        if (desc.is_cotangent()) throw NotCovered(desc.name() + ": cotangent case not covered by closed forms");
        if (desc.is_odd_dimensional()) {
          const int count = residue_count.value_or((desc.d + 1) / 2 + 2);
          for (int k = 0; k <= count; ++k) {
            list.emplace_back(Rational(desc.d, 2) - Rational(k), residue_at_half(desc, k) * scale);
          }
        } else {
          for (int m = 1; m <= desc.d / 2; ++m) list.emplace_back(Rational(m), residue_at(desc, m) * scale);
        }
        std::vector<record::ExactRow> rows;
        for (const auto& [s, v] : list) rows.push_back({s.str(), v});
        emit_exact(out, zeta_o,
                   record::envelope("zeta", desc, params, zeta_o.precision,
                                    record::residues_payload(list, zeta_o.precision)),
                   "s", rows);
      } else {
        ZetaResult r = special_value(desc, *special, params);
        r.value *= scale;
        if (zeta_o.format == "csv") {
          out << "s,coeff_num,coeff_den,pi_half_exp,decimal,n0_term\n"
              << r.location.str() << ',' << r.value.coeff().numerator().get_str() << ','
              << r.value.coeff().denominator().get_str() << ',' << r.value.pi_half_exponent() << ','
              << r.value.decimal(zeta_o.precision) << ',' << r.n0_term << '\n';
        } else {
          out << record::envelope("zeta", desc, params, zeta_o.precision,
                                  record::special_payload(r, zeta_o.precision))
                     .dump(2)
              << '\n';
        }
      }
      return kOk;
    }

    if (coeffs->parsed()) {
      const auto desc = space_of(coeffs_o);
      const auto params = params_of(coeffs_o);
      const auto table = coefficient_table(desc, coeffs_kmax, params);
      std::vector<record::ExactRow> rows;
      for (const auto& e : table.entries) {
        rows.push_back({std::to_string(e.k), e.value * PiScaledRational(params.scale())});
      }
      emit_exact(out, coeffs_o,
                 record::envelope("coeffs", desc, params, coeffs_o.precision,
                                  record::coeffs_payload(table, params, coeffs_o.precision)),
                 "k", rows);
      return kOk;
    }

    if (verify_cmd->parsed()) {
      CommonOptions& o = verify_o;
      if (!config_path.empty()) {
        const auto kv = read_config(config_path);
        apply_config(kv, "kmax", kmax_flag, verify_kmax);
        apply_config(kv, "digits", digits_flag, digits);
        apply_config(kv, "tol", tol_flag, tol);
        double t0_value = 0.0;
        if (t0_flag->count() == 0 && kv.count("t0")) {
          apply_config(kv, "t0", t0_flag, t0_value);
          t0 = t0_value;
        }
        apply_config(kv, "grid_ratio", ratio_flag, ratio);
        apply_config(kv, "depth", depth_flag, depth);
        apply_config(kv, "precision", precision_flag, o.precision);
      }
      const auto desc = space_of(o);
      const auto params = params_of(o);
      const double start = t0.value_or(QuadratureConfig::defaults_for(desc, digits).t_grid.front());
      const QuadratureConfig config = QuadratureConfig::geometric(digits, start, ratio, depth);
      config.validate();
      const auto report = verify(desc, params, verify_kmax, tol, config);
      if (o.format == "csv") {
        record::write_verify_csv(out, report, o.precision);
      } else {
        out << record::envelope("verify", desc, params, o.precision, record::verify_payload(report, o.precision))
                   .dump(2)
            << '\n';
      }
      if (report.pass && !*report.pass) {
        err << "verification failed for " << desc.name() << '\n';
        return kVerificationFailed;
      }
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const PrecisionExhausted& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace heatcoef::cli
