#include "qsing/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "qsing/errors.hpp"
#include "qsing/plurigenera.hpp"
#include "qsing/rep_format.hpp"
#include "qsing/report.hpp"
#include "qsing/selftest.hpp"
#include "qsing/sympower.hpp"

namespace qsing::cli {

using nlohmann::json;

namespace {

std::vector<PlurigenusInput> parse_pm_list(const std::string &text) {
  std::vector<PlurigenusInput> rows;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw InvalidInput("--pm entries must look like M=P, got '" + item + "'");
    try {
      std::size_t used_m = 0, used_p = 0;
      const auto m_text = item.substr(0, eq), p_text = item.substr(eq + 1);
      if (m_text.starts_with('-') || p_text.starts_with('-'))
        throw std::invalid_argument("negative");
      const auto m = std::stoull(m_text, &used_m);
      const auto p = std::stoull(p_text, &used_p);
      if (used_m != m_text.size() || used_p != p_text.size())
        throw std::invalid_argument("trailing");
      rows.push_back({m, p});
    } catch (const std::logic_error &) {
      throw InvalidInput("--pm entries must be nonnegative integers M=P, got '" + item + "'");
    }
  }
  if (rows.empty())
    throw InvalidInput("--pm needs at least one M=P entry");
  return rows;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InvalidInput("cannot read rep file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string sympower_output(int n, int d, bool table, const std::string &format) {
  const auto v = sympower::verdict(n, d);
  if (format == "json") {
    json result = {{"verdict", report::to_json(v)}};
    if (table) {
      json rows = json::array();
      for (const auto &r : sympower::class_table(n, d))
        rows.push_back(report::to_json(r));
      result["class_table"] = rows;
    }
    return report::dump(report::envelope(
        "sympower", {{"dim", n}, {"points", d}, {"table", table}}, std::move(result)));
  }
  std::string s = report::verdict_markdown(
      "S^" + std::to_string(d) + " X, dim X = " + std::to_string(n) + " (C^" +
          std::to_string(n * d) + " / S_" + std::to_string(d) + ")",
      v);
  if (table)
    s += "\n" + report::class_table_markdown(sympower::class_table(n, d));
  return s;
}

std::string analyze_output(const std::string &path, const std::string &format) {
  const auto rep = parse_rep(read_file(path));
  const auto closed = close_group(rep, closure_cap_from_environment());
  const auto v = analyze(closed);
  if (format == "json")
    return report::dump(report::envelope("analyze", {{"rep", rep_to_json(rep)}},
                                         {{"verdict", report::to_json(v)}}));
  return report::verdict_markdown("C^" + std::to_string(rep.dimension()) + " / G (root order " +
                                      std::to_string(rep.root_order()) + ")",
                                  v);
}

std::string plurigenera_output(int n, int d, const std::string &pm,
                               const std::optional<std::string> &kappa_text,
                               const std::string &format) {
  const auto table = plurigenus_table(n, d, parse_pm_list(pm));
  std::optional<KodairaDim> kappa, scaled;
  if (kappa_text) {
    kappa = KodairaDim::parse(*kappa_text);
    scaled = kodaira_scale(*kappa, d);
  }
  std::optional<double> slope;
  try {
    slope = growth_exponent_check(table);
  } catch (const InvalidInput &) {
    // fewer than 3 usable rows: slope omitted
  }

  if (format == "json") {
    json result = {{"table", report::to_json(table)},
                   {"kappa_x", kappa ? json(kappa->to_string()) : json(nullptr)},
                   {"kappa_sigma", scaled ? json(scaled->to_string()) : json(nullptr)},
                   {"growth_slope", slope ? json(*slope) : json(nullptr)}};
    return report::dump(report::envelope(
        "plurigenera",
        {{"dim", n}, {"points", d}, {"pm", pm}, {"kappa", kappa_text ? json(*kappa_text) : json()}},
        std::move(result)));
  }
  std::ostringstream os;
  os << "# Plurigenera of S^" << d << " X, dim X = " << n << "\n\n";
  os << report::plurigenus_markdown(table);
  if (kappa)
    os << "\n- kappa(X): " << kappa->to_string() << "\n- kappa(S^" << d
       << " X): " << scaled->to_string() << "\n";
  if (slope)
    os << (kappa ? "" : "\n") << "- fitted growth slope: " << *slope << "\n";
  return os.str();
}

std::string genus_output(const std::string &regime_text, int d, const std::string &format) {
  const auto regime =
      regime_text == "general" ? GenusRegime::GeneralType : GenusRegime::NonnegativeKodaira;
  const auto g = genus_bound(regime, d);
  if (format == "json")
    return report::dump(report::envelope("genus-bound", {{"regime", regime_text}, {"points", d}},
                                         {{"minimal_genus", g}}));
  return "minimal genus: " + std::to_string(g) + "\n";
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Quotient-singularity and plurigenus calculator for symmetric powers", "qsing"};
  app.require_subcommand(1);

  std::string format = "md";
  const auto add_format = [&](CLI::App *sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "md"}));
  };

  int n = 0, d = 0;
  bool table = false;
  auto *sym = app.add_subcommand("sympower", "Classify C^{nd}/S_d, the local model of S^d X");
  sym->add_option("--dim", n, "dim X")->required();
  sym->add_option("--points", d, "d")->required();
  sym->add_flag("--table", table, "Include the per-class age table");
  add_format(sym);

  std::string rep_path;
  auto *an = app.add_subcommand("analyze", "Classify C^N/G for a monomial group G");
  an->add_option("--rep", rep_path, "Representation file (JSON)")->required();
  add_format(an);

  std::string pm;
  std::optional<std::string> kappa;
  auto *pl = app.add_subcommand("plurigenera", "Plurigenus table of the symmetric power");
  pl->add_option("--dim", n, "dim X")->required();
  pl->add_option("--points", d, "d")->required();
  pl->add_option("--pm", pm, "M1=P1,M2=P2,... plurigenera of X")->required();
  pl->add_option("--kappa", kappa, "Kodaira dimension of X (integer or -inf; write --kappa=-inf)");
  add_format(pl);

  std::string regime;
  auto *gb = app.add_subcommand("genus-bound", "Minimal genus of a curve through d general points");
  gb->add_option("--regime", regime, "nonneg | general")
      ->required()
      ->check(CLI::IsMember({"nonneg", "general"}));
  gb->add_option("--points", d, "d")->required();
  add_format(gb);

  SelftestOptions st;
  auto *self = app.add_subcommand("selftest", "Oracle, closed-form and Burnside cross-checks");
  self->add_option("--max-dim", st.max_dim, "Largest dim X")->capture_default_str();
  self->add_option("--max-points", st.max_points, "Largest d")->capture_default_str();
  self->add_option("--tolerance", st.tolerance, "Exponent recovery tolerance")->capture_default_str();
  add_format(self);

  std::vector<const char *> argv{"qsing"};
  for (const auto &a : args)
    argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError &e) {
    err << "error: usage: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    std::string output;
    int code = kSuccess;
    if (*sym) {
      output = sympower_output(n, d, table, format);
    } else if (*an) {
      output = analyze_output(rep_path, format);
    } else if (*pl) {
      output = plurigenera_output(n, d, pm, kappa, format);
    } else if (*gb) {
      output = genus_output(regime, d, format);
    } else if (*self) {
      const auto rep = run_selftest(st);
      output = format == "json"
                   ? report::dump(report::envelope("selftest",
                                                   {{"max_dim", st.max_dim},
                                                    {"max_points", st.max_points},
                                                    {"tolerance", st.tolerance}},
                                                   report::to_json(rep)))
                   : report::selftest_markdown(rep);
      if (!rep.passed()) {
        code = kVerificationFailed;
        std::size_t count = 0;
        for (const auto &c : rep.checks)
          count += c.discrepancies.size();
        err << "error: verification: " << count << " discrepancies\n";
      }
    }
    out << output;
    return code;
  } catch (const QuasiReflectionError &e) {
    err << "error: quasi-reflection: " << e.what() << "\n";
    return kDomainError;
  } catch (const GroupTooLarge &e) {
    err << "error: group-too-large: " << e.what() << "\n";
    return kDomainError;
  } catch (const DomainError &e) {
    err << "error: domain: " << e.what() << "\n";
    return kDomainError;
  } catch (const InvalidInput &e) {
    err << "error: usage: " << e.what() << "\n";
    return kUsageError;
  }
}

} // namespace qsing::cli
