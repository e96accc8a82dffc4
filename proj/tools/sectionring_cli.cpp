#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sectionring/field.hpp"
#include "sectionring/plot.hpp"
#include "sectionring/report.hpp"

namespace sr = sectionring;
using sr::Rational;

namespace {

struct Usage : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Rational parse_rational(const std::string& text, const std::string& flag) {
  auto r = Rational::parse(text);
  if (!r) throw Usage("malformed rational for " + flag + ": '" + text + "'");
  return *r;
}

std::array<Rational, 5> parse_curve(const std::string& spec) {
  std::array<Rational, 5> a;
  std::istringstream is(spec);
  std::string item;
  std::size_t k = 0;
  while (std::getline(is, item, ',')) {
    if (k >= 5) throw Usage("curve spec needs exactly 5 coefficients a1,a2,a3,a4,a6");
    a[k++] = parse_rational(item, "--curve");
  }
  if (k != 5) throw Usage("curve spec needs exactly 5 coefficients a1,a2,a3,a4,a6");
  return a;
}

template <class K>
sr::WeierstrassCurve<K> make_curve(const std::array<Rational, 5>& a) {
  return sr::WeierstrassCurve<K>(
      sr::FieldOps<K>::from_rational(a[0]), sr::FieldOps<K>::from_rational(a[1]),
      sr::FieldOps<K>::from_rational(a[2]), sr::FieldOps<K>::from_rational(a[3]),
      sr::FieldOps<K>::from_rational(a[4]));
}

template <class K>
sr::CurvePoint<K> parse_point(const sr::WeierstrassCurve<K>& e, const std::string& spec,
                              const std::string& flag) {
  if (spec == "O" || spec == "o") return sr::CurvePoint<K>::at_infinity();
  auto comma = spec.find(',');
  if (comma == std::string::npos) throw Usage(flag + " needs \"x,y\" or \"O\"");
  K x = sr::FieldOps<K>::from_rational(parse_rational(spec.substr(0, comma), flag));
  K y = sr::FieldOps<K>::from_rational(parse_rational(spec.substr(comma + 1), flag));
  auto p = sr::CurvePoint<K>::affine(x, y);
  if (!e.on_curve(p)) throw Usage(flag + ": point " + spec + " is not on the curve");
  return p;
}

/// SECTION_RING_FIELD=q (exact rationals, default) or fp[:prime].
bool prime_field_mode(std::int64_t* prime) {
  const char* env = std::getenv("SECTION_RING_FIELD");
  if (!env || std::string(env) == "q") return false;
  std::string spec(env);
  if (spec.rfind("fp", 0) != 0) throw Usage("SECTION_RING_FIELD must be q or fp[:prime]");
  *prime = spec.size() > 3 && spec[2] == ':' ? std::stoll(spec.substr(3)) : 1000003;
  return true;
}

int emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw Usage("cannot write " + out);
  f << text;
  return 0;
}

struct Cli {
  sr::JobConfig job;
  std::string alpha;  // one-point weight, via --alpha
  std::string plot_file;
  std::int64_t sweep_q = 0;
  std::int64_t alpha_max = 6;
  std::string oracle;
  bool json = false;
  bool degree_set = false;

  std::array<Rational, 5> coeffs() const { return parse_curve(job.curve); }

  sr::ReportContext context(const Rational& a1, const std::optional<Rational>& a2,
                            bool ineffective) const {
    auto a = coeffs();
    return {sr::divisor_desc(a1, a2, ineffective),
            sr::weierstrass_equation(a[0], a[1], a[2], a[3], a[4]), a2 ? 2 : 1};
  }
};

/// (alpha, nullopt) for one-point jobs, (alpha1, alpha2) for two-point ones.
std::pair<Rational, std::optional<Rational>> job_weights(const Cli& cli) {
  if (!cli.alpha.empty()) {
    if (!cli.job.alpha2.empty())
      throw Usage("give either --alpha or the --alpha1/--alpha2 pair, not both");
    return {parse_rational(cli.alpha, "--alpha"), std::nullopt};
  }
  Rational a1 = parse_rational(cli.job.alpha1, "--alpha1");
  if (cli.job.alpha2.empty()) return {a1, std::nullopt};
  return {a1, parse_rational(cli.job.alpha2, "--alpha2")};
}

int run_present(const Cli& cli) {
  auto [a1, a2] = job_weights(cli);
  if (a1.sign() <= 0 || (a2 && a2->sign() <= 0))
    throw Usage("divisor is not effective; use the explore subcommand for D = a1 P1 - a2 P2");

  std::vector<sr::LabeledGenerator> gens;
  std::vector<sr::RelationLeader> rels;
  sr::LatticePlot plot;
  if (a2) {
    auto pres = sr::two_point_presentation(a1, *a2);
    gens = pres.gens;
    rels = pres.rels;
    plot = sr::plot_two_point(pres);
  } else {
    auto pres = sr::one_point_presentation(a1);
    gens = pres.gens;
    rels = pres.rels;
    std::int64_t window = cli.degree_set ? cli.job.max_degree : 0;
    for (const auto& g : pres.gens) window = std::max(window, g.degree() + 1);
    plot = sr::plot_one_point(pres, window);
  }

  auto ctx = cli.context(a1, a2, false);
  if (cli.job.format == "json") return emit(sr::presentation_json(ctx, gens, rels, nullptr), cli.job.out);
  if (cli.job.format == "svg") return emit(sr::svg_plot(plot), cli.job.out);
  return emit(sr::presentation_text(ctx, gens, rels), cli.job.out);
}

template <class K>
int run_verify_field(const Cli& cli) {
  auto [a1, a2] = job_weights(cli);
  if (a1.sign() <= 0 || (a2 && a2->sign() <= 0))
    throw Usage("divisor is not effective; use the explore subcommand for D = a1 P1 - a2 P2");
  auto e = make_curve<K>(cli.coeffs());
  auto p1 = parse_point(e, cli.job.p1, "--p1");

  sr::VerifyReport rep;
  std::vector<sr::LabeledGenerator> gens;
  std::vector<sr::RelationLeader> rels;
  if (a2) {
    auto p2 = parse_point(e, cli.job.p2, "--p2");
    if (p1 == p2) throw Usage("--p1 and --p2 must be distinct points");
    auto pres = sr::two_point_presentation(a1, *a2);
    gens = pres.gens;
    rels = pres.rels;
    rep = sr::verify_two_point(e, p1, p2, a1, *a2, cli.job.max_degree);
  } else {
    auto pres = sr::one_point_presentation(a1);
    gens = pres.gens;
    rels = pres.rels;
    rep = sr::verify_one_point(e, p1, a1, cli.job.max_degree);
  }

  auto ctx = cli.context(a1, a2, false);
  if (cli.job.format == "json")
    emit(sr::presentation_json(ctx, gens, rels, &rep), cli.job.out);
  else
    emit(sr::presentation_text(ctx, gens, rels) + "\n" + sr::verify_text(ctx, rep), cli.job.out);
  return rep.ok ? 0 : 1;
}

int run_verify(const Cli& cli) {
  if (!cli.oracle.empty() && cli.oracle != "monoid")
    throw Usage("unknown oracle '" + cli.oracle + "'; supported: monoid");

  if (cli.sweep_q > 0) {
    auto entries = sr::one_point_sweep(sr::sweep_alphas(cli.sweep_q, cli.alpha_max), true);
    emit(cli.job.format == "json" ? sr::sweep_json(entries) : sr::sweep_table(entries),
         cli.job.out);
    for (const auto& entry : entries)
      if (!entry.ok()) return 1;
    return 0;
  }

  if (cli.oracle == "monoid") {
    auto [a1, a2] = job_weights(cli);
    if (a2) throw Usage("the monoid oracle covers one-point divisors only");
    if (a1.sign() <= 0) throw Usage("--alpha must be positive");
    auto entry = sr::compare_one_point_with_monoid(a1);
    emit(cli.job.format == "json" ? sr::sweep_json({entry}) : sr::sweep_table({entry}),
         cli.job.out);
    return entry.ok() ? 0 : 1;
  }

  std::int64_t prime = 0;
  if (prime_field_mode(&prime)) {
    sr::Fp::set_modulus(prime);
    return run_verify_field<sr::Fp>(cli);
  }
  return run_verify_field<Rational>(cli);
}

template <class K>
int run_explore_field(const Cli& cli) {
  auto [a1, a2] = job_weights(cli);
  if (!a2) throw Usage("explore needs --alpha1 and --alpha2 (weights of P1 and -P2)");
  Rational mag2 = a2->sign() < 0 ? -*a2 : *a2;
  if (a1.sign() <= 0 || mag2.sign() == 0 || !(a1 > mag2))
    throw Usage("explore needs alpha1 > alpha2 > 0");

  auto e = make_curve<K>(cli.coeffs());
  auto p1 = parse_point(e, cli.job.p1, "--p1");
  auto p2 = parse_point(e, cli.job.p2, "--p2");
  if (p1 == p2) throw Usage("--p1 and --p2 must be distinct points");

  auto chk = sr::conjecture_check(e, p1, p2, a1, mag2, cli.job.max_degree);
  auto ctx = cli.context(a1, mag2, true);
  emit(cli.job.format == "json" ? sr::explore_json(ctx, chk) : sr::explore_text(ctx, chk),
       cli.job.out);

  if (!cli.plot_file.empty()) {
    auto plot = sr::plot_strip(chk.scan);
    bool svg = cli.plot_file.size() >= 4 &&
               cli.plot_file.compare(cli.plot_file.size() - 4, 4, ".svg") == 0;
    emit(svg ? sr::svg_plot(plot) : sr::ascii_plot(plot), cli.plot_file);
  }
  return chk.match() ? 0 : 1;
}

int run_explore(const Cli& cli) {
  std::int64_t prime = 0;
  if (prime_field_mode(&prime)) {
    sr::Fp::set_modulus(prime);
    return run_explore_field<sr::Fp>(cli);
  }
  return run_explore_field<Rational>(cli);
}

int run_plot(const Cli& cli) {
  auto [a1, a2] = job_weights(cli);
  sr::LatticePlot plot;
  if (!a2) {
    if (a1.sign() <= 0) throw Usage("--alpha must be positive");
    auto pres = sr::one_point_presentation(a1);
    std::int64_t window = cli.degree_set ? cli.job.max_degree : 0;
    for (const auto& g : pres.gens) window = std::max(window, g.degree() + 1);
    plot = sr::plot_one_point(pres, window);
  } else if (a2->sign() < 0) {
    Rational mag2 = -*a2;
    if (!(a1 > mag2) || mag2.sign() <= 0) throw Usage("strip plot needs alpha1 > -alpha2 > 0");
    plot = sr::plot_strip(sr::conjecture_generators(a1, mag2, cli.job.max_degree));
  } else {
    if (a1.sign() <= 0 || a2->sign() <= 0) throw Usage("weights must be nonzero");
    plot = sr::plot_two_point(sr::two_point_presentation(a1, *a2));
  }

  bool svg = cli.job.format == "svg" ||
             (cli.job.out.size() >= 4 &&
              cli.job.out.compare(cli.job.out.size() - 4, 4, ".svg") == 0);
  return emit(svg ? sr::svg_plot(plot) : sr::ascii_plot(plot), cli.job.out);
}

void add_common(CLI::App* cmd, Cli& cli) {
  cmd->add_option("--alpha", cli.alpha, "weight of the single point P");
  cmd->add_option("--alpha1", cli.job.alpha1, "weight of P1");
  cmd->add_option("--alpha2", cli.job.alpha2, "weight of P2");
  cmd->add_option("--max-degree", cli.job.max_degree, "largest graded degree")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--curve", cli.job.curve, "Weierstrass coefficients a1,a2,a3,a4,a6");
  cmd->add_option("--p1", cli.job.p1, "first point, \"x,y\" or \"O\"");
  cmd->add_option("--p2", cli.job.p2, "second point, \"x,y\" or \"O\"");
  cmd->add_option("--out", cli.job.out, "write output to this file");
  cmd->add_flag("--json", cli.json, "emit the JSON report");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal presentations of section rings of Q-divisors on elliptic curves"};
  app.require_subcommand(1);

  Cli cli;
  int rc = 0;

  auto* present = app.add_subcommand("present", "closed-form generators and relation leaders");
  add_common(present, cli);
  auto* verify = app.add_subcommand("verify", "closed form against a brute-force oracle");
  add_common(verify, cli);
  verify->add_option("--sweep-q", cli.sweep_q, "sweep all alpha = p/q with q up to this bound")
      ->check(CLI::PositiveNumber);
  verify->add_option("--alpha-max", cli.alpha_max, "sweep ceiling for alpha")
      ->check(CLI::PositiveNumber);
  verify->add_option("--oracle", cli.oracle, "oracle to compare against (monoid)");
  auto* explore = app.add_subcommand("explore", "conjectured generators of an ineffective ring");
  add_common(explore, cli);
  explore->add_option("--plot", cli.plot_file, "also write the lattice diagram here");
  auto* plot = app.add_subcommand("plot", "lattice diagram of a section ring");
  add_common(plot, cli);
  plot->add_flag_callback("--svg", [&cli]() { cli.job.format = "svg"; },
                          "force SVG output on stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    for (auto* cmd : {present, verify, explore, plot})
      if (cmd->parsed()) {
        cli.job.command = cmd->get_name();
        cli.degree_set = cmd->count("--max-degree") > 0;
        if (cli.json) cli.job.format = "json";
        const char* env = std::getenv("SECTION_RING_FIELD");
        if (env) cli.job.field = env;
      }
    if (present->parsed()) rc = run_present(cli);
    else if (verify->parsed()) rc = run_verify(cli);
    else if (explore->parsed()) rc = run_explore(cli);
    else if (plot->parsed()) rc = run_plot(cli);
  } catch (const sr::HypothesisViolation& e) {
    std::cerr << "hypothesis violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
