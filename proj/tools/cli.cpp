#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "tesserae/automaton.hpp"
#include "tesserae/error.hpp"
#include "tesserae/gf.hpp"
#include "tesserae/ising.hpp"
#include "tesserae/oracle.hpp"
#include "tesserae/polyomino.hpp"
#include "tesserae/spectral.hpp"
#include "tesserae/strip.hpp"

namespace tesserae::cli {

namespace {

using json = nlohmann::json;

class UsageError : public Error {
 public:
  using Error::Error;
};

// Report floats carry 12 significant digits.
double round12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

json big_list(const std::vector<BigInt>& values) {
  json out = json::array();
  for (const BigInt& v : values) out.push_back(v.get_str());
  return out;
}

json poly_json(const IntPoly& p) {
  std::vector<BigInt> c = p.coeffs();
  if (c.empty()) c.emplace_back(0);
  return big_list(c);
}

TileSet load_tiles(const std::string& spec) {
  if (spec.empty()) throw UsageError("--tiles is required for this command");
  for (const std::string& name : preset_names()) {
    if (name == spec) return preset(spec);
  }
  std::ifstream in(spec);
  if (!in) throw TileError("'" + spec + "' is neither a preset nor a readable tile file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_tile_file(buffer.str());
}

struct BetaChoice {
  bool fylfot = false;
  double value = 0.0;
};

BetaChoice parse_beta(const std::string& text) {
  if (text == "ln2/2") return {true, fylfot_beta()};
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0') throw UsageError("--beta must be 'ln2/2' or a decimal");
  return {false, v};
}

void require_length(const RunConfig& c) {
  if (c.length < 0) throw UsageError("--length must be nonnegative");
}

json gf_json(const RationalGF& g) {
  json out;
  out["num"] = poly_json(g.num());
  out["den"] = poly_json(g.den());
  out["num_text"] = to_string(g.num());
  out["den_text"] = to_string(g.den());
  out["step"] = g.step();
  return out;
}

json run(const RunConfig& c, std::ostream& out, bool& emitted_raw) {
  json r;
  r["command"] = c.command;
  const std::string& cmd = c.command;

  if (cmd == "ising-bound") {
    const BetaChoice beta = parse_beta(c.beta);
    r["grid"] = c.grid;
    if (beta.fylfot) {
      const IsingBound b = t_tetromino_bound(c.grid);
      r["beta"] = round12(b.beta);
      r["sigma_ising"] = round12(b.sigma_ising);
      r["sigma_lower"] = round12(b.sigma_lower);
      r["err_estimate"] = round12(b.err_estimate);
      r["eight_cell_bound"] = round12(eight_cell_bound());
      r["strip_bound"] = round12(std::log(3.0) / 16.0);
    } else {
      const double value = onsager_entropy(beta.value, c.grid);
      r["beta"] = round12(beta.value);
      r["sigma_ising"] = round12(value);
      const std::size_t other = c.grid >= 128 ? c.grid / 2 : c.grid * 2;
      r["err_estimate"] = round12(std::fabs(value - onsager_entropy(beta.value, other)));
    }
    return r;
  }
  if (cmd == "fylfot") {
    const BigInt sum = fylfot_sum(c.width, c.length);
    r["p"] = c.width;
    r["q"] = c.length;
    r["sum"] = sum.get_str();
    r["sigma_per_site"] =
        round12(std::log(sum.get_d()) / (16.0 * c.width * c.length));
    return r;
  }

  const TileSet tiles = load_tiles(c.tiles);
  r["tiles"] = c.tiles;
  if (cmd == "upper") {
    r["sigma_upper"] = round12(entropy_upper(tiles));
    r["variants"] = tiles.variants().size();
    r["area"] = tiles.uniform_area();
    return r;
  }

  if (c.width < 1) throw UsageError("--width must be at least 1");
  r["width"] = c.width;
  if (cmd == "oracle") {
    require_length(c);
    const BigInt brute = brute_force_count(tiles, c.width, c.length, c.max_cells);
    const BigInt fast = count_rect(build_automaton(tiles, c.width), static_cast<std::size_t>(c.length));
    r["length"] = c.length;
    r["brute_force"] = brute.get_str();
    r["automaton"] = fast.get_str();
    r["agree"] = brute == fast;
    return r;
  }

  const TransferAutomaton automaton = trim_reachable(build_automaton(tiles, c.width));
  if (c.dot || cmd == "automaton-dot") {
    if (c.format == Format::kJson) {
      r["dot"] = to_dot(automaton);
      r["states"] = automaton.size();
      return r;
    }
    out << to_dot(automaton);
    emitted_raw = true;
    return r;
  }
  if (cmd == "count") {
    require_length(c);
    r["length"] = c.length;
    r["count"] = count_rect(automaton, static_cast<std::size_t>(c.length)).get_str();
    return r;
  }
  if (cmd == "series") {
    require_length(c);
    r["length"] = c.length;
    r["series"] = big_list(series(automaton, static_cast<std::size_t>(c.length)).terms);
    return r;
  }

  const StripSolution strip = solve_strip(tiles, c.width);
  if (cmd == "gf") {
    r.update(gf_json(strip.gf));
    r["recurrence"] = {{"coeffs", big_list(strip.recurrence.coeffs)},
                       {"valid_from", strip.recurrence.valid_from}};
    r["states"] = strip.automaton.size();
    return r;
  }
  if (cmd == "faultfree") {
    require_length(c);
    const RationalGF g = faultfree(strip.gf);
    r.update(gf_json(g));
    std::vector<BigInt> terms = expand(g, static_cast<std::size_t>(c.length));
    terms.erase(terms.begin());
    r["expansion"] = big_list(terms);
    const RootEstimate root = dominant_root(g);
    r["lambda"] = round12(root.value);
    r["lambda_decimal"] = root.decimal(20);
    return r;
  }
  if (cmd == "entropy") {
    const EntropyReport e = entropy_report(strip.gf, c.width);
    r["step"] = strip.gf.step();
    r["lambda"] = round12(e.lambda);
    r["lambda_decimal"] = e.lambda_decimal;
    r["sites_per_step"] = e.sites_per_step;
    r["sigma_lower"] = round12(e.sigma_lower);
    r["sigma_upper"] = round12(entropy_upper(tiles));
    return r;
  }
  throw UsageError("unknown command '" + cmd + "'");
}

void write_text(const json& r, std::ostream& out) {
  for (const auto& [key, value] : r.items()) {
    out << key << ": ";
    if (value.is_string()) {
      out << value.get<std::string>();
    } else if (value.is_number_float()) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.12g", value.get<double>());
      out << buf;
    } else if (value.is_array()) {
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (i > 0) out << ", ";
        out << (value[i].is_string() ? value[i].get<std::string>() : value[i].dump());
      }
    } else {
      out << value.dump();
    }
    out << '\n';
  }
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{
      "count", "series", "gf", "faultfree", "entropy", "upper",
      "ising-bound", "fylfot", "automaton-dot", "oracle"};
  return names;
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out,
                                    std::ostream& err, int& exit_code) {
  RunConfig config;
  bool json_output = false;
  CLI::App app{"Exact polyomino strip tiling counts, generating functions and entropy bounds",
               "tesserae"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--tiles", config.tiles, "Preset name or tile file path");
  app.add_option("--width", config.width, "Strip width m (fylfot: lattice rows p)");
  app.add_option("--length", config.length,
                 "Rectangle length n (faultfree: expansion terms; fylfot: lattice columns q)");
  app.add_option("--grid", config.grid, "Quadrature nodes per axis, a power of two");
  app.add_option("--beta", config.beta, "Inverse temperature: 'ln2/2' or a decimal");
  app.add_flag("--json", json_output, "Emit a JSON report");
  app.add_flag("--dot", config.dot, "Emit the trimmed automaton as Graphviz DOT");
  for (const std::string& name : commands()) app.add_subcommand(name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    exit_code = app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    return std::nullopt;
  }
  config.command = app.get_subcommands().front()->get_name();
  config.format = json_output ? Format::kJson : Format::kText;
  if (const char* cap = std::getenv("TESSERAE_MAX_CELLS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(cap, &end, 10);
    if (end == cap || *end != '\0') {
      err << "error: TESSERAE_MAX_CELLS must be a nonnegative integer\n";
      exit_code = kExitUsage;
      return std::nullopt;
    }
    config.max_cells = v;
  }
  return config;
}

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    bool emitted_raw = false;
    const json report = run(config, out, emitted_raw);
    if (emitted_raw) return kExitOk;
    if (config.format == Format::kJson) {
      out << report.dump(2) << '\n';
    } else {
      write_text(report, out);
    }
    return kExitOk;
  } catch (const TileError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadTiles;
  } catch (const NoTilingsError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNoTilings;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace tesserae::cli
