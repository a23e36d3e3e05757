// Copyright 2026 The growthlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "growthlab/alexander.hpp"
#include "growthlab/engine.hpp"
#include "growthlab/errors.hpp"
#include "growthlab/group_spec.hpp"
#include "growthlab/growth.hpp"
#include "growthlab/spectra.hpp"
#include "growthlab/witness.hpp"

namespace growthlab::cli {

namespace {

using nlohmann::ordered_json;

std::string read_group_text(const std::string& group) {
  if (group.empty()) throw Error(ErrorCode::kInvalidSpec, "--group is required");
  if (group.front() == '{') return group;
  std::ifstream in(group);
  if (!in) throw Error(ErrorCode::kInvalidSpec, "cannot read group file '" + group + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

EnginePtr load_engine(const RunConfig& config) {
  return make_engine(parse_group_spec(read_group_text(config.group)));
}

const SemidirectEngine& as_semidirect(const EnginePtr& engine, const char* command) {
  if (engine->family() != Family::kSemidirect) {
    throw Error(ErrorCode::kPrecondition, std::string(command) + " needs a semidirect group");
  }
  return static_cast<const SemidirectEngine&>(*engine);
}

std::string fixed(double value, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

IntegerMatrix parse_matrix(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw Error(ErrorCode::kSyntax, std::string("malformed matrix: ") + e.what());
  }
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::kSyntax, "matrix must be a nonempty array of rows");
  const std::size_t n = j.size();
  IntegerMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n) throw Error(ErrorCode::kPrecondition, "matrix must be square");
    for (std::size_t c = 0; c < n; ++c) {
      const auto& e = j[r][c];
      if (e.is_number_integer()) {
        m(r, c) = Integer(e.dump());
      } else if (e.is_string()) {
        try {
          m(r, c) = Integer(e.get<std::string>());
        } catch (const std::invalid_argument&) {
          throw Error(ErrorCode::kSyntax, "matrix entries must be integers");
        }
      } else {
        throw Error(ErrorCode::kSyntax, "matrix entries must be integers");
      }
    }
  }
  return m;
}

ordered_json vector_json(const IntegerVector& v) {
  ordered_json a = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (fits_int64(v(i))) {
      a.push_back(v(i).get_si());
    } else {
      a.push_back(v(i).get_str());
    }
  }
  return a;
}

ordered_json matrix_json(const IntegerMatrix& m) {
  ordered_json a = ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) a.push_back(vector_json(m.row(r).transpose()));
  return a;
}

void cmd_growth(const RunConfig& config, std::ostream& out, int& status) {
  EnginePtr engine = load_engine(config);
  std::vector<Element> gens;
  for (const auto& w : parse_word_list(config.gens, ',')) gens.push_back(engine->evaluate(w));
  GrowthOptions options;
  options.budget = config.budget;
  options.threads = config.threads;
  GrowthTable table = ball_sizes(*engine, gens, config.radius, options);
  std::vector<double> est = upper_estimates(table);
  out << "n\tgamma\tupper_estimate\n";
  for (std::size_t n = 0; n < table.counts.size(); ++n) {
    out << n << '\t' << table.counts[n] << '\t' << (n == 0 ? std::string("-") : fixed(est[n - 1])) << '\n';
  }
  if (!table.complete) {
    throw Error(ErrorCode::kBudgetExceeded, "visited-state budget of " + std::to_string(config.budget) +
                                                " exhausted after radius " +
                                                std::to_string(table.counts.size() - 1));
  }
  status = kOk;
}

void cmd_alexander(const RunConfig& config, std::ostream& out) {
  std::vector<Word> relators = parse_word_list(config.relators, ';');
  LaurentPoly delta = alexander_polynomial(relators);
  out << "Delta = " << delta.to_string() << "; monic_both_ends=" << (monic_both_ends(delta) ? "true" : "false")
      << "; degree=" << delta.degree() << '\n';
  out << "kernel=" << kernel_verdict_name(fg_kernel_obstruction(delta)) << '\n';
}

void cmd_rewrite(const RunConfig& config, std::ostream& out) {
  RewrittenRelator r = rs_rewrite(parse_word(config.relator));
  out << "terms =";
  for (const auto& t : r.terms) out << " (" << t.subscript << "," << (t.exponent > 0 ? "+1" : "-1") << ")";
  out << '\n' << "abelianized = " << abelianize(r).to_string() << '\n';
}

void cmd_spectra(const RunConfig& config, std::ostream& out) {
  if (config.matrix.empty() == config.poly.empty()) {
    throw Error(ErrorCode::kPrecondition, "spectra needs exactly one of --matrix or --poly");
  }
  ordered_json j;
  if (!config.matrix.empty()) {
    IntegerMatrix m = parse_matrix(config.matrix);
    Classification cls = classify_abelian_by_cyclic(m);
    j["char_poly"] = cls.char_poly.to_string();
    j["roots_of_unity"] = cls.kind == GrowthClass::kVirtuallyNilpotent;
    j["spectral_radius"] = cls.radius.value;
    j["spectral_radius_bracket"] = {cls.radius.lower, cls.radius.upper};
    j["threshold"] = cls.threshold;
    j["log_base"] = "natural";
    if (cls.kind == GrowthClass::kVirtuallyNilpotent) {
      j["classification"] = "VirtuallyNilpotent";
      auto v = fixed_vector_of_power(m, cls.periodic_order);
      j["periodic_witness"] = {{"v", vector_json(*v)}, {"n", cls.periodic_order}};
    } else {
      j["classification"] = "Exponential";
      j["gap_verified"] = cls.gap_verified;
    }
  } else {
    IntPoly p = parse_poly(config.poly);
    if (p.degree() < 1) throw Error(ErrorCode::kPrecondition, "polynomial must have degree >= 1");
    const bool unity = all_roots_of_unity(p);
    RadiusBracket radius = spectral_radius(p);
    const double threshold = mahler_gap_threshold(static_cast<unsigned>(p.degree()));
    j["char_poly"] = p.to_string();
    j["roots_of_unity"] = unity;
    j["spectral_radius"] = radius.value;
    j["spectral_radius_bracket"] = {radius.lower, radius.upper};
    j["threshold"] = threshold;
    j["log_base"] = "natural";
    j["classification"] = unity ? "VirtuallyNilpotent" : "Exponential";
    if (!unity) j["gap_verified"] = radius.lower >= threshold;
  }
  out << j.dump(2) << '\n';
}

void cmd_witness(const RunConfig& config, std::ostream& out) {
  EnginePtr engine = load_engine(config);
  const SemidirectEngine& group = as_semidirect(engine, "witness");
  std::vector<Word> gens = parse_word_list(config.gens, ',');
  Certificate cert = analyze(group, gens, config.u, config.d, config.threads);
  const bool ok = reverify(group, cert);
  const GroupEngine& base = group.base();

  ordered_json j;
  j["branch"] = certificate_kind_name(cert.kind);
  if (cert.case_index) {
    j["case"] = {(*cert.case_index)[0] + 1, (*cert.case_index)[1] + 1, (*cert.case_index)[2] + 1};
  }
  j["u_param"] = cert.u_param;
  j["d"] = cert.d;
  switch (cert.kind) {
    case CertificateKind::kNonCyclicPair:
    case CertificateKind::kKernelChainEscape:
    case CertificateKind::kSpectralExponential:
    case CertificateKind::kPeriodicConjugacy:
      j["u"] = cert.u.to_string();
      j["v"] = cert.v.to_string();
      j["u_in_gens"] = cert.u_in_gens.to_string();
      j["v_in_gens"] = cert.v_in_gens.to_string();
      j["max_gen_length"] = cert.max_gen_length;
      break;
    default:
      break;
  }
  if (cert.kind == CertificateKind::kKernelChainEscape || cert.kind == CertificateKind::kSpectralExponential ||
      cert.kind == CertificateKind::kPeriodicConjugacy) {
    j["depth"] = cert.depth;
  }
  if (cert.matrix.size() > 0) j["matrix"] = matrix_json(cert.matrix);
  if (!cert.relation.empty()) {
    ordered_json rel = ordered_json::array();
    for (const auto& c : cert.relation) rel.push_back(c.get_str());
    j["relation"] = rel;
  }
  if (cert.kind == CertificateKind::kSpectralExponential) j["spectral_radius"] = cert.radius.value;
  if (cert.kind == CertificateKind::kPeriodicConjugacy) {
    j["k"] = base.to_word(*cert.k).to_string();
    j["n"] = cert.n;
    j["c"] = base.to_word(*cert.c).to_string();
  }
  if (cert.bound) j["bound"] = *cert.bound;
  j["reason"] = cert.reason;
  j["diagnostics"] = cert.diagnostics;
  j["reverified"] = ok;

  if (config.format == Format::kJson) {
    out << j.dump(2) << '\n';
    return;
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() == "diagnostics") {
      for (const auto& d : cert.diagnostics) out << "diagnostic: " << d << '\n';
      continue;
    }
    out << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
  }
}

void cmd_pcc(const RunConfig& config, std::ostream& out) {
  EnginePtr engine = load_engine(config);
  const SemidirectEngine& group = as_semidirect(engine, "pcc");
  PccResult r = pcc_scan(group, config.max_period, config.max_length);
  const GroupEngine& base = group.base();
  ordered_json j;
  j["found"] = r.witness.has_value();
  if (r.witness) {
    j["k"] = base.to_word(r.witness->k).to_string();
    j["n"] = r.witness->n;
    j["c"] = base.to_word(r.witness->c).to_string();
    j["verified"] = verify_periodic_conjugacy(group, *r.witness);
  } else {
    j["scope"] = r.exact ? "exact" : "none within bounds";
  }
  j["max_period"] = config.max_period;
  j["max_length"] = config.max_length;
  out << j.dump(2) << '\n';
}

int exit_code_for(ErrorCode code) {
  return code == ErrorCode::kBudgetExceeded ? kBudget : kValidation;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (!config.out.empty()) {
    file.open(config.out);
    if (!file) {
      err << "ERR precondition cannot open output file '" << config.out << "'\n";
      return kValidation;
    }
    sink = &file;
  }
  int status = kOk;
  try {
    switch (config.command) {
      case Command::kGrowth:
        cmd_growth(config, *sink, status);
        break;
      case Command::kAlexander:
        cmd_alexander(config, *sink);
        break;
      case Command::kSpectra:
        cmd_spectra(config, *sink);
        break;
      case Command::kWitness:
        cmd_witness(config, *sink);
        break;
      case Command::kPcc:
        cmd_pcc(config, *sink);
        break;
      case Command::kRewrite:
        cmd_rewrite(config, *sink);
        break;
    }
  } catch (const Error& e) {
    sink->flush();
    err << "ERR " << error_code_name(e.code()) << ' ' << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return status;
}

int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Growth-rate experiments on groups and mapping tori"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  RunConfig config;

  auto positive = CLI::PositiveNumber;

  auto* growth = app.add_subcommand("growth", "Ball sizes of a generating set");
  growth->add_option("--group", config.group, "Group JSON file")->required();
  growth->add_option("--gens", config.gens, "Comma-separated generator words")->required();
  growth->add_option("--radius", config.radius, "Largest radius")->required();
  growth->add_option("--budget", config.budget, "Cap on visited elements")->check(positive);
  growth->add_option("--threads", config.threads, "Worker threads")->check(positive);
  growth->add_option("--out", config.out, "Output TSV file");

  auto* alexander = app.add_subcommand("alexander", "Alexander polynomial of <t, x | relators>");
  alexander->add_option("--relators", config.relators, "Semicolon-separated relators")->required();
  alexander->add_option("--out", config.out, "Output file");

  auto* spectra = app.add_subcommand("spectra", "Spectral classification of an integer matrix or polynomial");
  spectra->add_option("--matrix", config.matrix, "Matrix as [[a,b],[c,d]]");
  spectra->add_option("--poly", config.poly, "Polynomial such as t^2-3t+1");
  spectra->add_option("--out", config.out, "Output JSON file");

  bool json = false;
  auto* witness = app.add_subcommand("witness", "Certificate search for a generating set of a mapping torus");
  witness->add_option("--group", config.group, "Group JSON file")->required();
  witness->add_option("--gens", config.gens, "Comma-separated generator words")->required();
  witness->add_option("--u", config.u, "Growth bound assumed for non-small 2-generator kernel subgroups")
      ->check(CLI::Range(1.0, 1e300));
  witness->add_option("--d", config.d, "Rank cap for small abelian subgroups")->check(positive);
  witness->add_option("--threads", config.threads, "Worker threads")->check(positive);
  witness->add_flag("--json", json, "JSON output");
  witness->add_option("--out", config.out, "Output file");

  auto* pcc = app.add_subcommand("pcc", "Periodic conjugacy class scan");
  pcc->add_option("--group", config.group, "Group JSON file")->required();
  pcc->add_option("--max-period", config.max_period, "Largest n")->check(positive);
  pcc->add_option("--max-length", config.max_length, "Largest word length")->check(positive);
  pcc->add_option("--out", config.out, "Output file");

  auto* rewrite = app.add_subcommand("rewrite", "Reidemeister-Schreier rewrite of a relator over {t, x}");
  rewrite->add_option("--relator", config.relator, "Relator word")->required();
  rewrite->add_option("--out", config.out, "Output file");

  std::vector<std::string> argv_storage{"growthlab"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "ERR syntax " << e.what() << '\n';
    return kValidation;
  }

  if (growth->parsed()) {
    config.command = Command::kGrowth;
    config.format = Format::kTsv;
  } else if (alexander->parsed()) {
    config.command = Command::kAlexander;
  } else if (spectra->parsed()) {
    config.command = Command::kSpectra;
    config.format = Format::kJson;
  } else if (witness->parsed()) {
    config.command = Command::kWitness;
    config.format = json ? Format::kJson : Format::kText;
  } else if (pcc->parsed()) {
    config.command = Command::kPcc;
    config.format = Format::kJson;
  } else {
    config.command = Command::kRewrite;
  }
  return run(config, out, err);
}

}  // namespace growthlab::cli
