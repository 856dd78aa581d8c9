#include "weyl/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "weyl/bounds.hpp"
#include "weyl/curvature/functionals.hpp"
#include "weyl/curvature/yamabe.hpp"
#include "weyl/descriptor_io.hpp"
#include "weyl/errors.hpp"
#include "weyl/nu.hpp"

namespace weyl::cli {

namespace {

enum class Format { Table, Machine };

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

std::string machine_exact(const PiQuantity& q) {
  const Rational& c = q.coefficient();
  return to_string(c.numerator()) + "/" + to_string(c.denominator()) + "·π^2";
}

std::string table_exact(const PiQuantity& q) { return q.coefficient().str() + "·π²"; }

// Table rows keep insertion order; machine rows are emitted sorted by key.
class Report {
 public:
  void add(const std::string& key, const std::string& value) {
    table_.emplace_back(key, value);
    machine_[key] = value;
  }
  void add_table(const std::string& key, const std::string& value) { table_.emplace_back(key, value); }
  void add_machine(const std::string& key, const std::string& value) { machine_[key] = value; }

  void add_exact(const std::string& key, const PiQuantity& q) {
    add_table(key, table_exact(q) + "  (" + fmt_double(q.to_double()) + ")");
    add_machine(key, machine_exact(q));
    add_machine(key + ".float", fmt_double(q.to_double()));
  }

  void add_rational(const std::string& key, const Rational& r) {
    add_table(key, r.str() + (r.is_integer() ? "" : "  (" + fmt_double(r.to_double()) + ")"));
    add_machine(key, to_string(r.numerator()) + "/" + to_string(r.denominator()));
    add_machine(key + ".float", fmt_double(r.to_double()));
  }

  void add_interval(const std::string& key, const PiInterval& v, bool exact) {
    std::string t;
    if (exact) {
      t = "exact " + table_exact(v.lower()) + "  (" + fmt_double(v.lower().to_double()) + ")";
    } else {
      t = "[" + table_exact(v.lower()) + ", " + (v.upper() ? table_exact(*v.upper()) : std::string("+inf")) + "]  (" +
          fmt_double(v.lower().to_double()) + ", " + (v.upper() ? fmt_double(v.upper()->to_double()) : "+inf") + ")";
    }
    add_table(key, t);
    add_machine(key + ".exact", exact ? "yes" : "no");
    add_machine(key + ".lower", machine_exact(v.lower()));
    add_machine(key + ".lower.float", fmt_double(v.lower().to_double()));
    add_machine(key + ".upper", v.upper() ? machine_exact(*v.upper()) : "+inf");
    add_machine(key + ".upper.float", v.upper() ? fmt_double(v.upper()->to_double()) : "+inf");
  }

  void write(std::ostream& out, Format f) const {
    if (f == Format::Machine) {
      for (const auto& [k, v] : machine_) out << k << '=' << v << '\n';
      return;
    }
    std::size_t width = 0;
    for (const auto& row : table_) width = std::max(width, row.first.size());
    for (const auto& [k, v] : table_) out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  }

 private:
  std::vector<std::pair<std::string, std::string>> table_;
  std::map<std::string, std::string> machine_;
};

template <class T>
std::string opt_str(const std::optional<T>& v) {
  if (!v) return "unknown";
  if constexpr (std::is_same_v<T, H1Order>) {
    return v->str();
  } else {
    return std::to_string(*v);
  }
}

struct Input {
  OrbifoldDescriptor descriptor;
  std::vector<BuildingBlock> blocks;  ///< empty when read from a file
};

Input load_input(const std::string& text, const CatalogOptions& options) {
  if (std::filesystem::is_regular_file(text)) return {read_descriptor_file(text), {}};
  auto blocks = parse_sum_expression(text, options);
  return {sum_descriptor(blocks), blocks};
}

struct HypothesisFlags {
  std::string yamabe = "unknown";
  std::string b2plus = "unknown";
  std::string b2minus = "unknown";
  std::string harmonic = "unknown";
  std::string itoh = "unknown";
  std::string seshadri;
  bool manifold = false;
  bool exclude = false;

  void attach(CLI::App* app) {
    app->add_option("--yamabe", yamabe, "Yamabe sign: positive, zero, negative or unknown");
    app->add_option("--b2plus", b2plus, "b2+ > 0: yes, no or unknown");
    app->add_option("--b2minus", b2minus, "b2- > 0: yes, no or unknown");
    app->add_option("--harmonic-wplus", harmonic, "harmonic nonzero W+: yes, no or unknown");
    app->add_option("--itoh", itoh, "s - 6 w- >= 0: yes, no or unknown");
    app->add_option("--seshadri-c2", seshadri, "c^2 with s + c|W| >= 0 (rational)");
    app->add_flag("--manifold", manifold, "the space is a manifold");
    app->add_flag("--exclude-s4-rp4", exclude, "not homeomorphic to S^4 or RP^4");
  }

  Hypotheses resolve() const {
    Hypotheses h;
    h.yamabe_sign = parse_yamabe_sign(yamabe);
    h.b2_plus_positive = parse_tri(b2plus);
    h.b2_minus_positive = parse_tri(b2minus);
    h.harmonic_wplus_nonzero = parse_tri(harmonic);
    h.itoh = parse_tri(itoh);
    h.is_manifold = manifold;
    h.excluded_s4_rp4 = exclude;
    if (!seshadri.empty()) h.seshadri_c2 = Rational::parse(seshadri);
    return h;
  }
};

void describe_bound(Report& r, const BoundResult& b, const std::string& prefix) {
  const std::string key = prefix + bound_letter(b.tag);
  std::string t = std::string("(") + bound_letter(b.tag) + ") " + std::string(bound_name(b.tag)) + ": " +
                  (b.applies ? "applies" : "does not apply");
  if (b.value) t += ", " + table_exact(*b.value) + " (" + fmt_double(b.value->to_double()) + ")";
  if (!b.equality_case.empty()) t += ", equality: " + b.equality_case;
  if (!b.missing.empty()) {
    t += ", missing: ";
    for (std::size_t i = 0; i < b.missing.size(); ++i) t += (i ? "; " : "") + b.missing[i];
  }
  r.add_table("bound", t);
  r.add_machine(key + ".name", std::string(bound_name(b.tag)));
  r.add_machine(key + ".applies", b.applies ? "yes" : "no");
  r.add_machine(key + ".value", b.value ? machine_exact(*b.value) : "unknown");
  r.add_machine(key + ".float", b.value ? fmt_double(b.value->to_double()) : "unknown");
  r.add_machine(key + ".equality", b.equality_case.empty() ? "none" : b.equality_case);
  std::string used, missing;
  for (const auto& h : b.hypotheses_used) used += (used.empty() ? "" : ",") + h;
  for (const auto& m : b.missing) missing += (missing.empty() ? "" : ",") + m;
  r.add_machine(key + ".hypotheses", used.empty() ? "none" : used);
  r.add_machine(key + ".missing", missing.empty() ? "none" : missing);
}

Report invariants_report(const OrbifoldDescriptor& d) {
  Report r;
  r.add("name", d.name);
  r.add("euler", std::to_string(d.euler));
  r.add("signature", std::to_string(d.signature));
  r.add("points", render_points(d.points));
  Rational chi = chi_orb(d);
  Rational tau = tau_orb(d);
  r.add_rational("chi_orb", chi);
  r.add_rational("tau_orb", tau);
  r.add_rational("2chi_orb+3tau_orb", Rational(2) * chi + Rational(3) * tau);
  r.add_rational("2chi_orb-3tau_orb", Rational(2) * chi - Rational(3) * tau);
  r.add("b1", opt_str(d.b1));
  r.add("b2_plus", opt_str(d.b2_plus));
  r.add("b2_minus", opt_str(d.b2_minus));
  r.add("h1_order", opt_str(d.h1_order));
  r.add("pi1", d.pi1.str());
  r.add("pi1_orb", d.pi1_orb.str());
  r.add("large_index_subgroups", std::string(tri_name(has_large_index_subgroups(d))));
  for (const auto& c : check_cover_data(d)) {
    std::string key = "cover." + std::to_string(c.degree);
    r.add(key + ".consistent", c.consistent ? "yes" : "no");
    r.add(key + ".expected", "(" + c.expected_chi_orb.str() + ", " + c.expected_tau_orb.str() + ")");
  }
  return r;
}

Report bounds_report(const OrbifoldDescriptor& d, const Hypotheses& h) {
  Report r;
  r.add("name", d.name);
  for (const auto& b : enumerate_bounds(d, h)) describe_bound(r, b, "bound.");
  BoundResult best = best_bound(d, h);
  std::string t = std::string("(") + bound_letter(best.tag) + ") " + std::string(bound_name(best.tag));
  if (best.value) t += " = " + table_exact(*best.value) + " (" + fmt_double(best.value->to_double()) + ")";
  r.add_table("best", t);
  r.add_machine("best.tag", std::string(1, bound_letter(best.tag)));
  r.add_machine("best.value", best.value ? machine_exact(*best.value) : "unknown");
  r.add_machine("best.float", best.value ? fmt_double(best.value->to_double()) : "unknown");
  r.add_machine("best.equality", best.equality_case.empty() ? "none" : best.equality_case);
  return r;
}

Report obstruct_report(const OrbifoldDescriptor& d, Tri harmonic) {
  Report r;
  r.add("name", d.name);
  ObstructionVerdict v = selfdual_psc_obstruction(d, harmonic);
  r.add("verdict", v.obstructed ? "Obstructed" : "NotDecided");
  for (std::size_t i = 0; i < v.reasons.size(); ++i) {
    r.add_table("reason", v.reasons[i].theorem + ": " + v.reasons[i].inequality);
    r.add_machine("reason." + std::to_string(i + 1) + ".theorem", v.reasons[i].theorem);
    r.add_machine("reason." + std::to_string(i + 1) + ".witness", v.reasons[i].inequality);
  }
  try {
    r.add("stabilization_threshold", std::to_string(stabilization_threshold(d)));
  } catch (const DomainError& e) {
    if (e.code() != ErrorCode::HypothesisNotMet) throw;
    r.add("stabilization_threshold", "unknown");
  }
  return r;
}

void add_derivation(Report& r, const NuValue& v) {
  for (std::size_t i = 0; i < v.derivation.size(); ++i) {
    r.add_table("step", v.derivation[i]);
    r.add_machine("derivation." + std::to_string(i + 1), v.derivation[i]);
  }
}

Report catalog_report(const CatalogOptions& options) {
  Report r;
  for (const auto& b : catalog_listing(options)) {
    const std::string k = "block." + b.name();
    r.add_table(b.name(), "nu " + b.nu.str() + ", nu_plus " + b.nu_plus.str() +
                              ", self-dual " + std::string(tri_name(b.admits_selfdual)) + ", self-dual psc " +
                              std::string(tri_name(b.admits_selfdual_psc)) +
                              (b.is_zero_filler ? ", zero filler" : "") + "; " + b.basis);
    r.add_machine(k + ".nu", b.nu.str());
    r.add_machine(k + ".nu_plus", b.nu_plus.str());
    r.add_machine(k + ".admits_selfdual", std::string(tri_name(b.admits_selfdual)));
    r.add_machine(k + ".admits_selfdual_psc", std::string(tri_name(b.admits_selfdual_psc)));
    r.add_machine(k + ".zero_filler", b.is_zero_filler ? "yes" : "no");
    r.add_machine(k + ".basis", b.basis);
    for (std::size_t i = 0; i < b.notes.size(); ++i) r.add_machine(k + ".note." + std::to_string(i + 1), b.notes[i]);
  }
  return r;
}

curvature::CatalogMetric load_metric(const std::string& name, std::optional<double> cutoff) {
  if (cutoff) {
    if (name != "cp2-fs") throw std::invalid_argument("--cutoff applies only to cp2-fs");
    if (!(*cutoff > 0.0)) throw std::invalid_argument("--cutoff must be positive");
    return curvature::cp2_fubini_study(*cutoff);
  }
  return curvature::catalog_metric(name);
}

Report verify_report(const curvature::CatalogMetric& m, int res, int samples, unsigned threads) {
  Report r;
  auto rep = curvature::integrate(m, res, threads);
  auto id = curvature::verify_identities(rep, m.euler, m.signature);
  r.add("metric", m.name);
  r.add("resolution", std::to_string(rep.resolution));
  r.add("volume", fmt_double(rep.volume));
  r.add("int_s2", fmt_double(rep.int_s2));
  r.add("int_r0_norm2", fmt_double(rep.int_r0_norm2));
  r.add("int_wplus2", fmt_double(rep.int_wplus2));
  r.add("int_wminus2", fmt_double(rep.int_wminus2));
  r.add("estimated_quadrature_error", fmt_double(rep.estimated_quadrature_error));
  r.add("gauss_bonnet_target", fmt_double(id.gauss_bonnet_target));
  r.add("signature_target", fmt_double(id.signature_target));
  r.add("residual1", fmt_double(id.residual1));
  r.add("residual2", fmt_double(id.residual2));
  if (m.kahler && samples > 0) {
    auto k = curvature::check_kahler_eigenstructure(m, samples);
    r.add("kahler.samples", std::to_string(k.samples));
    r.add("kahler.spectrum_deviation", fmt_double(k.max_spectrum_deviation));
    r.add("kahler.det_deviation", fmt_double(k.max_det_deviation));
  }
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weyl functional bounds, nu invariants and curvature checks for 4-orbifolds", "weylcalc"};
  app.require_subcommand(0, 1);
  app.fallthrough();
  std::string format = "table";
  bool list_catalog = false;
  bool literal_ale = false;
  app.add_option("--format", format, "output format: table or machine")
      ->check(CLI::IsMember({"table", "machine"}));
  app.add_flag("--list-catalog", list_catalog, "list every building block with its values");
  app.add_flag("--paper-literal-ale", literal_ale, "enable D- and E-type ALE blocks with the group-order formula");

  std::string input;
  auto* inv = app.add_subcommand("invariants", "topological and orbifold invariants");
  inv->add_option("input", input, "descriptor file or connected-sum expression")->required();

  HypothesisFlags hyp;
  auto* bnd = app.add_subcommand("bounds", "every lower bound for the self-dual Weyl functional");
  bnd->add_option("input", input, "descriptor file or connected-sum expression")->required();
  hyp.attach(bnd);

  std::string obstruct_harmonic = "unknown";
  auto* obs = app.add_subcommand("obstruct", "obstructions to self-dual metrics of positive scalar curvature");
  obs->add_option("input", input, "descriptor file or connected-sum expression")->required();
  obs->add_option("--harmonic-wplus", obstruct_harmonic, "harmonic nonzero W+: yes, no or unknown");

  auto* nu = app.add_subcommand("nu", "nu of a connected sum");
  nu->add_option("expression", input, "connected-sum expression")->required();

  std::string use_bound;
  HypothesisFlags nuplus_hyp;
  nuplus_hyp.yamabe = "positive";
  auto* nup = app.add_subcommand("nuplus", "nu_plus of a connected sum");
  nup->add_option("expression", input, "connected-sum expression")->required();
  nup->add_option("--use-bound", use_bound, "letter of the W+ bound for the sum (default: best)");
  nuplus_hyp.attach(nup);

  std::string metric_name;
  int res = 24;
  int samples = 64;
  unsigned threads = 0;
  std::optional<double> cutoff;
  auto* ver = app.add_subcommand("verify", "integrate the curvature functionals of a catalog metric");
  ver->add_option("--metric", metric_name, "s4, s2xs2(a,b), cp2-fs or flat-box")->required();
  ver->add_option("--res", res, "Gauss-Legendre points per direction")->check(CLI::Range(2, 200));
  ver->add_option("--cutoff", cutoff, "radial cutoff of the cp2-fs chart");
  ver->add_option("--samples", samples, "sample points for the Kahler eigenvalue check")->check(CLI::Range(0, 100000));
  ver->add_option("--threads", threads, "worker threads (0: hardware)");

  curvature::YamabeOptions yopt;
  std::optional<int> perturb_index;
  double perturb_amplitude = 0.0;
  auto* yam = app.add_subcommand("yamabe", "estimate the Yamabe constant by descent");
  yam->add_option("--metric", metric_name, "s4, s2xs2(a,b), cp2-fs or flat-box")->required();
  yam->add_option("--res", yopt.resolution, "Gauss-Legendre points per direction")->check(CLI::Range(2, 64));
  yam->add_option("--cutoff", cutoff, "radial cutoff of the cp2-fs chart");
  yam->add_option("--steps", yopt.step_count, "maximum descent steps")->check(CLI::NonNegativeNumber);
  yam->add_option("--lr", yopt.learning_rate, "initial step length")->check(CLI::PositiveNumber);
  yam->add_option("--tol", yopt.tolerance, "relative decrease tolerance")->check(CLI::PositiveNumber);
  yam->add_option("--perturb-index", perturb_index, "start from 1 + a*y_i");
  yam->add_option("--perturb-amplitude", perturb_amplitude, "the amplitude a");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  const Format f = format == "machine" ? Format::Machine : Format::Table;
  CatalogOptions options;
  options.paper_literal_ale = literal_ale;
  try {
    Report r;
    if (list_catalog) {
      catalog_report(options).write(out, f);
      if (app.get_subcommands().empty()) return 0;
    } else if (app.get_subcommands().empty()) {
      err << "usage error: a command is required\n" << app.help();
      return 2;
    }
    if (inv->parsed()) {
      r = invariants_report(load_input(input, options).descriptor);
    } else if (bnd->parsed()) {
      Hypotheses h = hyp.resolve();
      r = bounds_report(load_input(input, options).descriptor, h);
    } else if (obs->parsed()) {
      r = obstruct_report(load_input(input, options).descriptor, parse_tri(obstruct_harmonic));
    } else if (nu->parsed()) {
      auto blocks = parse_sum_expression(input, options);
      NuValue v = nu_connected_sum(blocks);
      r.add("expression", input);
      r.add_interval("nu", v.interval, v.exact);
      add_derivation(r, v);
    } else if (nup->parsed()) {
      auto blocks = parse_sum_expression(input, options);
      OrbifoldDescriptor sum = sum_descriptor(blocks);
      Hypotheses h = nuplus_hyp.resolve();
      std::optional<BoundResult> bound;
      if (use_bound.empty()) {
        if (blocks.size() > 1) bound = best_bound(sum, h);
      } else {
        if (use_bound.size() != 1) throw std::invalid_argument("--use-bound takes one letter a-m");
        for (const auto& b : enumerate_bounds(sum, h)) {
          if (bound_letter(b.tag) == use_bound[0]) bound = b;
        }
        if (!bound) throw std::invalid_argument("no bound with letter '" + use_bound + "'");
        if (!bound->applies) {
          throw DomainError(ErrorCode::HypothesisNotMet,
                            "bound (" + use_bound + ") " + std::string(bound_name(bound->tag)) + " does not apply");
        }
      }
      NuValue v = nu_plus_connected_sum(blocks, bound);
      r.add("expression", input);
      r.add_interval("nu_plus", v.interval, v.exact);
      add_derivation(r, v);
    } else if (ver->parsed()) {
      r = verify_report(load_metric(metric_name, cutoff), res, samples, threads);
    } else if (yam->parsed()) {
      if (perturb_index) yopt.start = curvature::Perturbation{*perturb_index, perturb_amplitude};
      auto m = load_metric(metric_name, cutoff);
      auto y = curvature::yamabe_descent(m, yopt);
      r.add("metric", m.name);
      r.add("resolution", std::to_string(yopt.resolution));
      r.add("initial_value", fmt_double(y.initial_value));
      r.add("estimate", fmt_double(y.estimate));
      r.add("accepted_steps", std::to_string(y.steps));
      r.add("stationary", y.stationary ? "yes" : "no");
      r.add("wplus_bound_from_estimate", fmt_double(wplus_from_yamabe(y.estimate)));
    }
    r.write(out, f);
    return 0;
  } catch (const DomainError& e) {
    err << "error: " << error_name(e.code()) << ": " << e.detail() << " (input: " << (input.empty() ? metric_name : input)
        << ")\n";
    return 1;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "invalid input: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace weyl::cli
