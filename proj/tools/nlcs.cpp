// nlcs: figure tables, verification suites and single-state statistics for
// coherent states of polynomially deformed su(2) / su(1,1).

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nlcs/errors.hpp"
#include "nlcs/figures.hpp"
#include "nlcs/statistics.hpp"
#include "nlcs/verify.hpp"

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kBadInput = 2, kNoConvergence = 3 };

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) throw nlcs::InvalidSpec("cannot parse number '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw nlcs::InvalidSpec("empty number list");
  return out;
}

nlcs::GridSpec parse_grid(const std::string& text) {
  std::stringstream ss(text);
  std::string a, b, c;
  if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c)) {
    throw nlcs::InvalidSpec("grid must be min:max:n");
  }
  nlcs::GridSpec g;
  g.xbar_min = std::stod(a);
  g.xbar_max = std::stod(b);
  g.points = std::stoi(c);
  return g;
}

nlcs::Family parse_family(const std::string& s) {
  if (s == "su2-pcs") return nlcs::Family::Su2PCS;
  if (s == "su11-bgcs") return nlcs::Family::Su11BGCS;
  if (s == "su11-pcs") return nlcs::Family::Su11PCS;
  throw nlcs::InvalidSpec("unknown family '" + s + "'");
}

// Coefficients from --p and --coeffs. Without --coeffs: p=1 gives (1),
// p=2 gives (1,2).
std::vector<double> deformation_coeffs(int p, const std::string& coeffs) {
  if (!coeffs.empty()) {
    auto c = parse_list(coeffs);
    if (p != 0 && static_cast<int>(c.size()) != p) {
      throw nlcs::InvalidSpec("--p does not match the number of --coeffs");
    }
    return c;
  }
  if (p == 0 || p == 1) return {1.0};
  if (p == 2) return {1.0, 2.0};
  throw nlcs::InvalidSpec("--coeffs is required for p > 2");
}

int cmd_figure(const std::string& id, const std::string& grid, const std::string& labels,
               std::optional<double> xbar, const std::string& format, const std::string& out,
               double eps) {
  nlcs::FigureRequest req;
  req.figure_id = id;
  const auto& info = nlcs::find_figure(id);
  if (!grid.empty()) req.grid = parse_grid(grid);
  if (!labels.empty()) req.labels = parse_list(labels);
  req.xbar = xbar;
  req.format = format == "jsonl" ? nlcs::TableFormat::JSONL : nlcs::TableFormat::CSV;
  req.eps = eps;
  if (info.quantity != nlcs::Quantity::PhotonDist && xbar) {
    throw nlcs::InvalidSpec("--xbar applies to photon distributions only");
  }
  const std::string table = nlcs::render_figure(req);
  if (out.empty()) {
    std::cout << table;
  } else {
    nlcs::write_file_atomically(out, table);
  }
  return kOk;
}

int cmd_verify(const std::string& suite_name, const std::string& family, int p,
               const std::string& coeffs, std::optional<double> label) {
  using nlcs::verify::Suite;
  Suite suite = Suite::All;
  if (suite_name == "algebra") suite = Suite::Algebra;
  else if (suite_name == "stats") suite = Suite::Stats;
  else if (suite_name == "laplace") suite = Suite::Laplace;
  else if (suite_name == "berry") suite = Suite::Berry;

  std::vector<nlcs::DeformationSpec> extra;
  if (!family.empty() || !coeffs.empty() || label) {
    const auto kind = parse_family(family.empty() ? "su2-pcs" : family) == nlcs::Family::Su2PCS
                          ? nlcs::AlgebraKind::Su2Like
                          : nlcs::AlgebraKind::Su11Like;
    extra.push_back(nlcs::DeformationSpec::unchecked_sign(kind, deformation_coeffs(p, coeffs),
                                                          label.value_or(1.0)));
  }

  bool all_passed = true;
  for (const auto& r : nlcs::verify::run_suite(suite, extra)) {
    all_passed = all_passed && r.passed;
    std::printf("%s  %-64s max=%-12.4g tol=%-9.3g %s\n", r.passed ? "PASS" : "FAIL",
                r.name.c_str(), r.max_error, r.tolerance, r.detail.c_str());
  }
  std::printf("%s\n", all_passed ? "all properties passed" : "verification FAILED");
  return all_passed ? kOk : kVerifyFailed;
}

int cmd_stats(const std::string& family, int p, const std::string& coeffs, double label,
              double re, double im, std::optional<double> xbar, const std::string& format,
              long n_max) {
  const auto fam = parse_family(family);
  const auto kind =
      fam == nlcs::Family::Su2PCS ? nlcs::AlgebraKind::Su2Like : nlcs::AlgebraKind::Su11Like;
  nlcs::DeformationSpec def(kind, deformation_coeffs(p, coeffs), label);
  nlcs::validate_unitarity(def);
  const nlcs::CSSpec spec = xbar ? nlcs::CSSpec::from_series_variable(fam, def, *xbar)
                                 : nlcs::CSSpec(fam, def, nlcs::cplx(re, im));
  const auto rec = nlcs::stat_record(spec, n_max);

  if (format == "json") {
    nlohmann::ordered_json j;
    j["family"] = family;
    j["xbar"] = rec.xbar;
    j["mean"] = rec.mean_n;
    j["I"] = rec.intensity_corr ? nlohmann::ordered_json(*rec.intensity_corr)
                                : nlohmann::ordered_json("undefined");
    j["Q"] = rec.mandel_q;
    j["omega"] = rec.metric;
    j["photon_dist"] = rec.photon_dist;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "family=" << family << " xbar=" << nlcs::format_number(rec.xbar)
              << " mean=" << nlcs::format_number(rec.mean_n) << " I="
              << (rec.intensity_corr ? nlcs::format_number(*rec.intensity_corr) : "undefined")
              << " Q=" << nlcs::format_number(rec.mandel_q)
              << " omega=" << nlcs::format_number(rec.metric) << " P=";
    for (std::size_t n = 0; n < rec.photon_dist.size(); ++n) {
      std::cout << (n ? "," : "") << nlcs::format_number(rec.photon_dist[n]);
    }
    std::cout << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coherent states of polynomially deformed su(2) and su(1,1)"};
  app.require_subcommand(1);

  auto* fig = app.add_subcommand("figure", "write the plot data of one figure");
  std::string fig_id, grid, labels, out, fig_format = "csv";
  std::optional<double> fig_xbar;
  double eps = nlcs::kDefaultCoefficientEps;
  fig->add_option("id", fig_id, "figure id, e.g. su2-mandel or nsu11-bgcs-metric")->required();
  fig->add_option("--grid", grid, "curve grid min:max:n");
  fig->add_option("--labels", labels, "comma-separated representation labels");
  fig->add_option("--xbar", fig_xbar, "series variable for distributions");
  fig->add_option("--format", fig_format)->check(CLI::IsMember({"csv", "jsonl"}));
  fig->add_option("--out", out, "output path (stdout if absent)");
  fig->add_option("--eps", eps, "coefficient truncation tolerance")->check(CLI::PositiveNumber);

  auto* ver = app.add_subcommand("verify", "run invariant suites");
  std::string suite = "all", v_family, v_coeffs;
  int v_p = 0;
  std::optional<double> v_label;
  ver->add_option("--suite", suite)->check(
      CLI::IsMember({"algebra", "stats", "laplace", "berry", "all"}));
  ver->add_option("--family", v_family, "su2-pcs|su11-bgcs|su11-pcs (adds a deformation)");
  ver->add_option("--p", v_p);
  ver->add_option("--coeffs", v_coeffs, "a1,a2,...");
  ver->add_option("--label", v_label);

  auto* st = app.add_subcommand("stats", "statistics of one coherent state");
  std::string s_family = "su2-pcs", s_coeffs, s_format = "kv";
  int s_p = 0;
  double s_label = 1.0, re = 0.0, im = 0.0;
  long n_max = 20;
  std::optional<double> s_xbar;
  st->add_option("--family", s_family)->check(
      CLI::IsMember({"su2-pcs", "su11-bgcs", "su11-pcs"}));
  st->add_option("--p", s_p);
  st->add_option("--coeffs", s_coeffs, "a1,a2,...");
  st->add_option("--label", s_label);
  st->add_option("--amplitude-re", re);
  st->add_option("--amplitude-im", im);
  st->add_option("--xbar", s_xbar, "series variable (overrides the amplitude, zero phase)");
  st->add_option("--format", s_format)->check(CLI::IsMember({"kv", "json"}));
  st->add_option("--nmax", n_max, "largest n of the printed distribution");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kBadInput;
  }

  try {
    if (*fig) return cmd_figure(fig_id, grid, labels, fig_xbar, fig_format, out, eps);
    if (*ver) return cmd_verify(suite, v_family, v_p, v_coeffs, v_label);
    return cmd_stats(s_family, s_p, s_coeffs, s_label, re, im, s_xbar, s_format, n_max);
  } catch (const nlcs::ConvergenceFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNoConvergence;
  } catch (const nlcs::DivergentSeries& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNoConvergence;
  } catch (const nlcs::QuadratureFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNoConvergence;
  } catch (const nlcs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: bad number: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: number out of range: " << e.what() << "\n";
    return kBadInput;
  }
}
