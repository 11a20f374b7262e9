// ybhecke: Yang-Baxter bases, Schubert/Grothendieck tables and verification
// suites from the command line.
//
// Exit codes: 0 success, 2 usage or configuration error, 3 verification failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ybhecke/hecke/verify.hpp"
#include "ybhecke/io/format.hpp"
#include "ybhecke/io/json.hpp"
#include "ybhecke/schubgroth.hpp"
#include "ybhecke/suites.hpp"

using namespace ybhecke;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitFailure = 3;

enum class Format { text, json, latex };

struct RunConfig {
  int n = 3;
  std::string family = "T";
  bool family_set = false;
  std::string params;
  std::string spectral;
  std::uint64_t seed = 1;
  int probes = 10;
  Format format = Format::text;
  bool shorthand = false;
  bool force = false;
  std::string out;
  std::optional<int> max_rank;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int guard(const RunConfig& c, int default_guard) { return c.max_rank.value_or(default_guard); }

void require_rank(const RunConfig& c, const std::string& cmd, int default_guard) {
  int hi = guard(c, default_guard);
  if (c.n < 1 || c.n > hi) throw ConfigError(cmd + ": n must be in 1.." + std::to_string(hi) + " (YB_HECKE_MAX_N raises the guard)");
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

OperatorFamily make_family(const RunConfig& c) {
  Family tag = parse_family(c.family);
  if (c.params.empty()) return OperatorFamily(tag);
  if (tag != Family::T) throw ConfigError("--params only applies to the T family");
  auto parts = split_list(c.params);
  if (parts.size() != 2) throw ConfigError("--params expects two expressions 'q1,q2'");
  return OperatorFamily(tag, parse_rational(parts[0]), parse_rational(parts[1]));
}

SpectralParams make_spectral(const RunConfig& c) {
  if (c.spectral.empty()) return SpectralParams::formal(c.n);
  auto parts = split_list(c.spectral);
  if (static_cast<int>(parts.size()) != c.n) throw ConfigError("--spectral expects exactly n comma-separated expressions");
  SpectralParams u;
  for (const auto& p : parts) u.u.push_back(parse_rational(p));
  return u;
}

Style style_of(const RunConfig& c) { return c.format == Format::latex ? Style::latex : Style::text; }

std::string poly_name(PolyTable::Kind kind) { return kind == PolyTable::Kind::schubert ? "X" : "G"; }

int cmd_table(const RunConfig& c, PolyTable::Kind kind, std::ostream& os) {
  require_rank(c, kind == PolyTable::Kind::schubert ? "schubert" : "grothendieck", kTableMaxRank);
  int cap = std::max(c.n, kTableMaxRank);
  PolyTable t = kind == PolyTable::Kind::schubert ? schubert_table(c.n, cap) : grothendieck_table(c.n, cap);
  if (c.format == Format::json) {
    os << to_json(t).dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& mu : t.ordered()) {
    if (c.format == Format::latex)
      os << poly_name(kind) << "_{" << mu.to_string() << "} = " << render(t[mu], Style::latex) << "\n";
    else
      os << poly_name(kind) << "_" << mu.to_string() << " = " << render(t[mu]) << "\n";
  }
  return kExitOk;
}

int cmd_yb(const RunConfig& c, const std::string& perm, const std::string& basis, std::ostream& os) {
  require_rank(c, "yb", 5);
  if (basis != "standard" && basis != "rothe") throw ConfigError("--basis must be 'standard' or 'rothe'");
  Permutation mu = Permutation::parse(perm);
  if (mu.rank() != c.n) throw ConfigError("permutation " + perm + " does not have rank n = " + std::to_string(c.n));
  AlgebraSpec alg(make_family(c), c.n);
  SpectralParams u = make_spectral(c);
  bool rothe = basis == "rothe";
  HeckeElement y = rothe ? yb_element_rothe(alg, mu, u) : yb_element(alg, mu, u);
  Style st = style_of(c);
  std::string factors = factor_sequence(alg.tag(), mu, rothe, st);
  if (c.format == Format::json) {
    Json j = {{"permutation", mu.to_string()}, {"basis", basis}, {"factors", factors}, {"element", to_json(y)}};
    os << j.dump(2) << "\n";
    return kExitOk;
  }
  if (rothe || c.shorthand) os << "factors: " << factors << "\n";
  if (c.format == Format::latex) os << "Y_{" << mu.to_string() << "} = " << render(y, Style::latex) << "\n";
  else os << "Y_" << mu.to_string() << " = " << render(y) << "\n";
  return kExitOk;
}

int cmd_gram(const RunConfig& c, std::ostream& os) {
  require_rank(c, "gram", 4);
  OperatorFamily fam = make_family(c);
  bool symbolic_t = fam.tag == Family::T && !(fam.q1.is_constant() && fam.q2.is_constant());
  if (symbolic_t && c.n > guard(c, 3) && !c.force)
    throw ConfigError("gram: symbolic T family is limited to n <= 3 (use --force)");
  AlgebraSpec alg(fam, c.n);
  SpectralParams u = make_spectral(c);
  GramMatrix g = yb_gram(alg, u);
  Report rep = verify_orthogonality(alg, u, &g);
  Style st = style_of(c);
  if (c.format == Format::json) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < g.perms.size(); ++i)
      for (std::size_t j = 0; j < g.perms.size(); ++j)
        if (!g.entries[i][j].is_zero())
          entries.push_back({{"row", g.perms[i].to_string()}, {"col", g.perms[j].to_string()}, {"value", to_json(g.entries[i][j])}});
    Json j = {{"family", alg.name()}, {"n", c.n}, {"size", g.perms.size()}, {"entries", entries},
              {"violations", rep.failures.size()}, {"report", to_json(rep)}};
    os << j.dump(2) << "\n";
  } else {
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < g.perms.size(); ++i)
      for (std::size_t j = 0; j < g.perms.size(); ++j) {
        if (g.entries[i][j].is_zero()) continue;
        ++nonzero;
        if (st == Style::latex)
          os << "\\langle Y_{" << g.perms[i].to_string() << "}, Y_{" << g.perms[j].to_string() << "} \\rangle = "
             << render(g.entries[i][j], Style::latex) << "\n";
        else
          os << "<Y_" << g.perms[i].to_string() << ", Y_" << g.perms[j].to_string() << "> = " << render(g.entries[i][j]) << "\n";
      }
    os << "gram " << alg.name() << " n=" << c.n << ": " << g.perms.size() << "x" << g.perms.size() << ", " << nonzero
       << " nonzero entries, " << rep.failures.size() << " violations\n";
    for (const auto& w : rep.failures) os << "  violation " << w.check << ": " << w.detail << "\n";
  }
  return rep.passed() ? kExitOk : kExitFailure;
}

int cmd_verify(const RunConfig& c, const std::string& suite, const std::vector<int>& shape, const std::string& mode,
               std::ostream& os) {
  SuiteConfig sc;
  sc.n = c.n;
  if (c.family_set || !c.params.empty()) sc.family = make_family(c);
  sc.seed = c.seed;
  sc.probes = c.probes;
  sc.max_rank = c.max_rank;
  sc.force = c.force;
  if (!shape.empty()) sc.shape = shape;
  if (!mode.empty()) {
    if (mode == "qpow") sc.mode = AppendixMode::qpow;
    else if (mode == "linear") sc.mode = AppendixMode::linear;
    else throw ConfigError("--mode must be 'qpow' or 'linear'");
  }
  if (!c.spectral.empty()) throw ConfigError("--spectral is not used by verify (suites run on formal parameters)");
  std::vector<Report> reports = run_suite(suite, sc);

  bool all_passed = true;
  int checks = 0, passed = 0;
  for (const auto& r : reports) {
    all_passed = all_passed && r.passed();
    checks += r.checks;
    passed += r.passed() ? 1 : 0;
  }
  if (c.format == Format::json) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    Json j = {{"suite", suite}, {"n", c.n}, {"seed", c.seed}, {"passed", all_passed}, {"checks", checks}, {"suites", arr}};
    os << j.dump(2) << "\n";
  } else {
    constexpr std::size_t kMaxWitnesses = 20;
    for (const auto& r : reports) {
      os << (r.passed() ? "PASS " : "FAIL ") << r.suite << " (" << r.checks << " checks";
      if (r.seed) os << ", seed " << *r.seed;
      os << ")\n";
      for (std::size_t k = 0; k < r.failures.size() && k < kMaxWitnesses; ++k)
        os << "  witness " << r.failures[k].check << ": " << r.failures[k].detail << "\n";
      if (r.failures.size() > kMaxWitnesses) os << "  ... " << r.failures.size() - kMaxWitnesses << " more failures\n";
      for (const auto& note : r.notes) os << "  note: " << note << "\n";
    }
    os << "summary: " << passed << "/" << reports.size() << " reports passed, " << checks << " checks, seed " << c.seed << "\n";
  }
  return all_passed ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Yang-Baxter bases of type-A Hecke algebras; Schubert and Grothendieck polynomials"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig c;
  std::string format = "text";
  app.add_option("-n,--rank", c.n, "Rank n of the symmetric group")->capture_default_str();
  app.add_option("--family", c.family, "Operator family: sigma, partial, s, pi, pibar, T")->capture_default_str();
  app.add_option("--params", c.params, "T-family specialization 'q1,q2' (RationalFunction literals)");
  app.add_option("--spectral", c.spectral, "Spectral specialization 'u1,...,un' (RationalFunction literals)");
  app.add_option("--seed", c.seed, "Seed for randomized probes")->capture_default_str();
  app.add_option("--probes", c.probes, "Probe count for randomized checks")->capture_default_str()->check(CLI::Range(1, 1000));
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}))->capture_default_str();
  app.add_flag("--shorthand", c.shorthand, "Print the factor sequence in (ji)Dk shorthand");
  app.add_flag("--force", c.force, "Lift the n <= 3 limit for symbolic T-family Gram matrices");
  app.add_option("--out", c.out, "Write output to FILE instead of stdout");

  auto* schubert = app.add_subcommand("schubert", "Double Schubert polynomials X_mu(x, y)");
  auto* grothendieck = app.add_subcommand("grothendieck", "Double Grothendieck polynomials G_mu(x, y)");

  auto* yb = app.add_subcommand("yb", "Yang-Baxter element Y_mu on the standard basis");
  std::string perm, basis = "standard";
  yb->add_option("permutation", perm, "Permutation in window notation, e.g. 35142")->required();
  yb->add_option("--basis", basis, "Construction: standard (reduced word) or rothe")->capture_default_str();

  auto* gram = app.add_subcommand("gram", "Pairing matrix <Y_mu, Y_nu> and its orthogonality check");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  std::vector<int> shape;
  std::string mode;
  std::string suites_help = "Suite:";
  for (const auto& s : suite_names()) suites_help += " " + s;
  verify->add_option("suite", suite, suites_help)->required();
  verify->add_option("--shape", shape, "Young shape for the appendix suite, e.g. --shape 2 2")->expected(1, 9);
  verify->add_option("--mode", mode, "Appendix specialization: qpow or linear");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  c.format = format == "json" ? Format::json : format == "latex" ? Format::latex : Format::text;
  c.family_set = app.count("--family") > 0;

  std::ostringstream os;
  int rc = kExitOk;
  try {
    c.max_rank = env_max_rank();
    if (*schubert) rc = cmd_table(c, PolyTable::Kind::schubert, os);
    else if (*grothendieck) rc = cmd_table(c, PolyTable::Kind::grothendieck, os);
    else if (*yb) rc = cmd_yb(c, perm, basis, os);
    else if (*gram) {
      if (!c.family_set) c.family = "T";
      rc = cmd_gram(c, os);
    } else if (*verify) rc = cmd_verify(c, suite, shape, mode, os);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  if (c.out.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(c.out);
    if (!f) {
      std::cerr << "error: cannot open " << c.out << "\n";
      return kExitConfig;
    }
    f << os.str();
  }
  return rc;
}
