// g1lp: command-line front end for the genus-one zero-configuration toolkit.
//
// Subcommands: spacing, check-nlp, sine-witness, bounds, zeta
// {import,gaps,hrrh,region}.  Global knobs follow the precedence defaults <
// G1LP_PRECISION_BITS < --config file < explicit flags.  All reports are
// deterministic byte-for-byte for a fixed input and configuration.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "g1lp/bounds.hpp"
#include "g1lp/errors.hpp"
#include "g1lp/hankel.hpp"
#include "g1lp/numeric.hpp"
#include "g1lp/report.hpp"
#include "g1lp/run_config.hpp"
#include "g1lp/sine_probe.hpp"
#include "g1lp/zero_model.hpp"
#include "g1lp/zeta.hpp"

namespace {

using namespace g1lp;

// Zero files are sniffed: a leading '{' means the JSON configuration schema,
// anything else the plain-text form "re [im [mult]]" per line with '#'
// comments.
ZeroConfig load_zero_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open zero file: " + path, 0);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad JSON zero file: ") + e.what(), 0);
    }
    return ZeroConfig::from_json(j);
  }
  std::vector<Zero> zeros;
  std::istringstream lines(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() > 3) {
      throw ParseError("expected 're [im [mult]]'", line_no);
    }
    Zero z;
    try {
      z.re = parse_double(tokens[0]);
      z.im = tokens.size() > 1 ? parse_double(tokens[1]) : 0.0;
      z.multiplicity = tokens.size() > 2 ? std::stoi(tokens[2]) : 1;
    } catch (const std::exception&) {
      throw ParseError("bad zero line: '" + line + "'", line_no);
    }
    zeros.push_back(z);
  }
  return ZeroConfig(std::move(zeros));
}

std::vector<double> load_grid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open grid file: " + path, 0);
  std::vector<double> xs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      try {
        xs.push_back(parse_double(tok));
      } catch (const std::exception&) {
        throw ParseError("bad grid value: '" + tok + "'", line_no);
      }
    }
  }
  return xs;
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error("cannot write output file: " + out_path);
  out << payload;
}

std::string json_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

// key,value rows for the scalar reports when CSV output is selected.
std::string kv_csv(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::string s = "key,value\n";
  for (const auto& [k, v] : rows) s += k + "," + v + "\n";
  return s;
}

int scan_exit_code(const ScanReport& scan) {
  if (scan.any_not_psd) return 1;
  if (scan.any_inconclusive || scan.verdicts.empty()) return 3;
  return 0;
}

struct GlobalFlags {
  std::string config_file;
  std::optional<int> precision_bits;
  std::optional<double> tolerance;
  std::optional<double> delta_factor;
  std::optional<int> grid_points_per_gap;
  std::optional<std::string> format;
  std::optional<std::string> threads;
  std::optional<long> seed;  // reserved: nothing random in v1
  std::string out_path;
};

RunConfig resolve_config(const GlobalFlags& g) {
  RunConfig rc;
  rc.apply_env();
  if (!g.config_file.empty()) rc.apply_file(g.config_file);
  if (g.precision_bits) rc.precision_bits = *g.precision_bits;
  if (g.tolerance) rc.tolerance = *g.tolerance;
  if (g.delta_factor) rc.delta_factor = *g.delta_factor;
  if (g.grid_points_per_gap) rc.grid_points_per_gap = *g.grid_points_per_gap;
  if (g.format) {
    if (*g.format == "csv") {
      rc.output_format = OutputFormat::Csv;
    } else if (*g.format == "json") {
      rc.output_format = OutputFormat::Json;
    } else {
      throw DomainError("--format must be csv or json");
    }
  }
  if (g.threads) {
    rc.threads = *g.threads == "auto" ? 0 : std::stoi(*g.threads);
  }
  rc.validate();
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"genus-one zero-configuration toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalFlags g;
  app.add_option("--config", g.config_file, "INI config file (key = value)");
  app.add_option("--precision-bits", g.precision_bits, "extended-precision mantissa bits (>= 53)");
  app.add_option("--tolerance", g.tolerance, "PSD tolerance (< 0 selects the scale-aware default)");
  app.add_option("--delta-factor", g.delta_factor, "pole-exclusion radius factor");
  app.add_option("--grid-points-per-gap", g.grid_points_per_gap, "interior points per gap in the default grid");
  app.add_option("--format", g.format, "output format: csv or json");
  app.add_option("--threads", g.threads, "worker threads (integer or auto)");
  app.add_option("--seed", g.seed, "reserved; no randomized defaults in v1");
  app.add_option("-o,--output", g.out_path, "write the report to a file instead of stdout");

  // spacing
  auto* sp = app.add_subcommand("spacing", "spacing constant, minimal height, aperture");
  std::string sp_input;
  sp->add_option("input", sp_input, "zero file (JSON or 're [im [mult]]' lines)")->required();

  // check-nlp
  auto* nlp = app.add_subcommand("check-nlp", "Hankel positivity scan");
  std::string nlp_input, nlp_grid;
  int nlp_order = 1;
  nlp->add_option("input", nlp_input, "zero file")->required();
  nlp->add_option("--order", nlp_order, "Hankel order N")->required();
  nlp->add_option("--grid", nlp_grid, "abscissa file (default: auto grid)");

  // sine-witness
  auto* sw = app.add_subcommand("sine-witness", "search for a certified negative probe value");
  std::string sw_input, sw_mode;
  std::optional<int> sw_order;
  sw->add_option("input", sw_input, "zero file")->required();
  sw->add_option("--mode", sw_mode, "sin or taylor")->required();
  sw->add_option("--order", sw_order, "Taylor degree (taylor mode)");

  // bounds
  auto* bd = app.add_subcommand("bounds", "closed-form bound evaluation");
  std::string bd_which;
  double bd_tol = 1e-12, bd_kappa = 0.0, bd_C = 0.0, bd_gamma = 0.0, bd_re_half = 0.0, bd_M = 0.0;
  long long bd_j = 0, bd_N = 0;
  bd->add_option("--which", bd_which, "thm1|refined|thm2|thm3|corollary1|corollary2")->required();
  bd->add_option("--tol", bd_tol, "bisection tolerance (refined)");
  bd->add_option("--kappa", bd_kappa, "aperture (thm2)");
  bd->add_option("--C", bd_C, "spacing constant (thm3)");
  bd->add_option("--gamma", bd_gamma, "spacing exponent (thm3)");
  bd->add_option("--j", bd_j, "gap index (thm3)");
  bd->add_option("--re-half", bd_re_half, "|Re(lambda_{floor(j/2)})| (thm3)");
  bd->add_option("--N", bd_N, "matrix order (corollary2)");
  bd->add_option("--M", bd_M, "spacing constant (corollary2)");

  // zeta
  auto* zt = app.add_subcommand("zeta", "zero-table pipeline");
  zt->require_subcommand(1);

  auto* zi = zt->add_subcommand("import", "parse and normalize a height table");
  std::string zi_input;
  zi->add_option("input", zi_input, "height table (one decimal per line)")->required();

  auto* zg = zt->add_subcommand("gaps", "consecutive gap table in the squared coordinates");
  std::string zg_input;
  std::optional<std::size_t> zg_limit;
  zg->add_option("input", zg_input, "height table")->required();
  zg->add_option("--limit", zg_limit, "first L zeros (default: all)");

  auto* zh = zt->add_subcommand("hrrh", "Hankel positivity scan on the mapped zeros");
  std::string zh_input, zh_grid;
  int zh_order = 1;
  std::optional<std::size_t> zh_limit;
  std::vector<std::string> zh_sigma;
  zh->add_option("input", zh_input, "height table")->required();
  zh->add_option("--order", zh_order, "Hankel order N")->required();
  zh->add_option("--limit", zh_limit, "first L zeros (default: all)");
  zh->add_option("--sigma", zh_sigma, "off-line override k=sigma (1-based index), repeatable");
  zh->add_option("--grid", zh_grid, "abscissa file (default: auto grid)");

  auto* zr = zt->add_subcommand("region", "zero-free-region boundary curve");
  std::string zr_kind;
  double zr_lo = 0.0, zr_hi = 0.0;
  int zr_samples = 100;
  std::optional<long long> zr_N;
  std::optional<double> zr_M;
  zr->add_option("--kind", zr_kind, "hrrh1|hrrhn|ford")->required();
  zr->add_option("--t-lo", zr_lo, "lower end of the t range")->required();
  zr->add_option("--t-hi", zr_hi, "upper end of the t range")->required();
  zr->add_option("--samples", zr_samples, "number of samples (default 100)");
  zr->add_option("--N", zr_N, "matrix order (hrrhn)");
  zr->add_option("--M", zr_M, "spacing constant (hrrhn)");

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig rc = resolve_config(g);
    bool csv = rc.output_format == OutputFormat::Csv;

    if (sp->parsed()) {
      ZeroConfig cfg = load_zero_config(sp_input);
      SpacingReport rep = spacing_report(cfg);
      if (csv) {
        emit(kv_csv({{"c", format_double(rep.c)},
                     {"b", format_double(rep.b)},
                     {"kappa", format_double(rep.kappa)}}),
             g.out_path);
      } else {
        emit(json_text(envelope("spacing", rep.to_json())), g.out_path);
      }
      return 0;
    }

    if (nlp->parsed()) {
      ZeroConfig cfg = load_zero_config(nlp_input);
      std::vector<double> grid =
          nlp_grid.empty() ? default_grid(cfg, rc.grid_points_per_gap, rc.delta_factor)
                           : load_grid_file(nlp_grid);
      ScanOptions opts;
      opts.tolerance = rc.tolerance;
      opts.coeff.delta_factor = rc.delta_factor;
      opts.threads = rc.threads;
      ScanReport scan = nlp_scan(cfg, nlp_order, grid, opts);
      if (csv) {
        std::ostringstream os;
        write_verdicts_csv(scan, os);
        emit(os.str(), g.out_path);
      } else {
        emit(json_text(envelope("check-nlp", scan.to_json())), g.out_path);
      }
      return scan_exit_code(scan);
    }

    if (sw->parsed()) {
      ZeroConfig cfg = load_zero_config(sw_input);
      ProbeMode mode;
      if (sw_mode == "sin") {
        mode = ProbeMode::SinSum;
      } else if (sw_mode == "taylor") {
        mode = ProbeMode::TaylorSum;
      } else {
        throw DomainError("--mode must be sin or taylor");
      }
      if (mode == ProbeMode::TaylorSum && !sw_order) {
        throw DomainError("taylor mode requires --order");
      }
      WitnessOptions opts;
      opts.probe.coeff.delta_factor = rc.delta_factor;
      opts.probe.max_precision_bits = rc.precision_bits > 53 ? rc.precision_bits : 4096;
      opts.threads = rc.threads;
      auto witness = witness_search(cfg, mode, sw_order, opts);
      if (witness) {
        if (csv) {
          emit(kv_csv({{"x", format_double(witness->x)},
                       {"t", format_double(witness->t)},
                       {"N", witness->order ? std::to_string(*witness->order) : "inf"},
                       {"value", format_double(witness->value)}}),
               g.out_path);
        } else {
          emit(json_text(envelope("sine-witness", witness->to_json())), g.out_path);
        }
        return 0;
      }
      if (csv) {
        emit("none\n", g.out_path);
      } else {
        nlohmann::json none;
        none["witness"] = nullptr;
        emit(json_text(envelope("sine-witness", none)), g.out_path);
      }
      return 1;
    }

    if (bd->parsed()) {
      BoundReport rep;
      if (bd_which == "thm1") {
        rep.name = BoundName::Thm1;
        rep.value = thm1_bound();
      } else if (bd_which == "refined") {
        rep.name = BoundName::Refined;
        rep.inputs["tol"] = bd_tol;
        rep.value = refined_kappa_bound(bd_tol);
      } else if (bd_which == "thm2") {
        rep.name = BoundName::Thm2N;
        rep.inputs["kappa"] = bd_kappa;
        rep.value = thm2_N_bound(bd_kappa);
      } else if (bd_which == "thm3") {
        rep.name = BoundName::Thm3;
        rep.inputs["C"] = bd_C;
        rep.inputs["gamma"] = bd_gamma;
        rep.inputs["j"] = static_cast<double>(bd_j);
        rep.inputs["re_half"] = bd_re_half;
        rep.value = thm3_bound(bd_C, bd_gamma, bd_j, bd_re_half);
      } else if (bd_which == "corollary1") {
        rep.name = BoundName::Corollary1;
        rep.value = corollary_offset(RegionKind::HRRH1);
      } else if (bd_which == "corollary2") {
        rep.name = BoundName::Corollary2;
        rep.inputs["N"] = static_cast<double>(bd_N);
        rep.inputs["M"] = bd_M;
        RegionParams params;
        params.N = bd_N;
        params.M = bd_M;
        rep.value = corollary_offset(RegionKind::HRRHN, params);
        rep.notes = "M is caller-supplied; only its existence is established";
      } else {
        throw DomainError("--which must be one of thm1|refined|thm2|thm3|corollary1|corollary2");
      }
      if (csv) {
        std::ostringstream os;
        write_bound_csv(rep, os);
        emit(os.str(), g.out_path);
      } else {
        emit(json_text(envelope("bounds", rep.to_json())), g.out_path);
      }
      return 0;
    }

    if (zi->parsed()) {
      ZetaZeroTable table = parse_odlyzko_file(zi_input, rc.precision_bits);
      std::ostringstream os;
      serialize_table(table, os);
      emit(os.str(), g.out_path);
      std::cerr << "imported " << table.count() << " heights from " << zi_input << "\n";
      return 0;
    }

    if (zg->parsed()) {
      ZetaZeroTable table = parse_odlyzko_file(zg_input, rc.precision_bits);
      LambdaConfig lc = to_lambda(table);
      std::size_t limit = zg_limit.value_or(table.count());
      LambdaGapReport rep = lambda_spacing_report(lc, limit);
      if (csv) {
        std::ostringstream os;
        write_gaps_csv(rep, os);
        emit(os.str(), g.out_path);
        std::cerr << "min_gap=" << format_double(rep.min_gap) << " argmin_j=" << rep.argmin + 1
                  << " exceeds_159=" << (rep.min_gap > 159.0 ? "PASS" : "FAIL") << "\n";
      } else {
        emit(json_text(envelope("zeta-gaps", rep.to_json())), g.out_path);
      }
      return 0;
    }

    if (zh->parsed()) {
      ZetaZeroTable table = parse_odlyzko_file(zh_input, rc.precision_bits);
      if (zh_limit && *zh_limit < table.count()) {
        table.heights.resize(*zh_limit);
      }
      std::map<std::size_t, double> overrides;
      for (const auto& tok : zh_sigma) {
        std::size_t eq = tok.find('=');
        if (eq == std::string::npos) throw DomainError("--sigma expects k=sigma");
        std::size_t k = std::stoull(tok.substr(0, eq));
        if (k == 0) throw DomainError("--sigma index is 1-based");
        overrides[k - 1] = parse_double(tok.substr(eq + 1));
      }
      LambdaConfig lc = to_lambda(table, overrides);
      ScanOptions opts;
      opts.tolerance = rc.tolerance;
      opts.coeff.delta_factor = rc.delta_factor;
      opts.threads = rc.threads;
      std::vector<double> grid = zh_grid.empty() ? std::vector<double>{} : load_grid_file(zh_grid);
      HrrhReport rep = hrrh_check(lc, zh_order, grid, opts);
      if (csv) {
        std::ostringstream os;
        write_verdicts_csv(rep.scan, os);
        emit(os.str(), g.out_path);
        std::cerr << rep.caveat << "\n";
      } else {
        emit(json_text(envelope("zeta-hrrh", rep.to_json())), g.out_path);
      }
      return scan_exit_code(rep.scan);
    }

    if (zr->parsed()) {
      RegionKind kind;
      if (zr_kind == "hrrh1") {
        kind = RegionKind::HRRH1;
      } else if (zr_kind == "hrrhn") {
        kind = RegionKind::HRRHN;
      } else if (zr_kind == "ford") {
        kind = RegionKind::Ford;
      } else {
        throw DomainError("--kind must be hrrh1, hrrhn, or ford");
      }
      RegionParams params;
      params.N = zr_N;
      params.M = zr_M;
      auto curve = region_curve(kind, params, zr_lo, zr_hi, zr_samples);
      if (csv) {
        std::ostringstream os;
        write_region_csv(curve, os);
        emit(os.str(), g.out_path);
      } else {
        nlohmann::json jc = nlohmann::json::array();
        for (const auto& [t, re] : curve) jc.push_back({t, re});
        nlohmann::json payload;
        payload["kind"] = to_string(kind);
        payload["curve"] = jc;
        emit(json_text(envelope("zeta-region", payload)), g.out_path);
      }
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const MonotonicityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
