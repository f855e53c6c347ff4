#include "nlcs/figures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "nlcs/errors.hpp"

namespace nlcs {

namespace {

std::string quantity_suffix(Quantity q) {
  switch (q) {
    case Quantity::PhotonDist:
      return "photdist";
    case Quantity::MeanPhoton:
      return "mphotnumb";
    case Quantity::IntensityCorr:
      return "intcorr";
    case Quantity::Mandel:
      return "mandel";
    case Quantity::Metric:
      return "metric";
  }
  return "";
}

std::string family_prefix(Family f) {
  switch (f) {
    case Family::Su2PCS:
      return "su2";
    case Family::Su11BGCS:
      return "su11-bgcs";
    case Family::Su11PCS:
      return "su11-pcs";
  }
  return "";
}

std::vector<FigureInfo> build_catalog() {
  std::vector<FigureInfo> out;
  for (Family f : {Family::Su2PCS, Family::Su11BGCS, Family::Su11PCS}) {
    for (Quantity q : {Quantity::PhotonDist, Quantity::MeanPhoton,
                       Quantity::IntensityCorr, Quantity::Mandel,
                       Quantity::Metric}) {
      for (bool nonlinear : {false, true}) {
        std::string id = (nonlinear ? "n" : "") + family_prefix(f) + "-" +
                         quantity_suffix(q);
        out.push_back({std::move(id), f, nonlinear, q});
      }
    }
  }
  return out;
}

std::string label_column(double label) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "label_%g", label);
  return buf;
}

double curve_value(const FigureInfo& info, const CSSpec& spec) {
  switch (info.quantity) {
    case Quantity::MeanPhoton:
      return mean_photon(spec);
    case Quantity::IntensityCorr:
      if (spec.series_variable() == 0.0) return std::nan("");
      return intensity_correlation(spec);
    case Quantity::Mandel:
      return mandel_q(spec);
    case Quantity::Metric:
      return metric_factor(spec);
    case Quantity::PhotonDist:
      break;
  }
  throw DomainError("curve_value: distributions are not curves");
}

class TableWriter {
 public:
  TableWriter(TableFormat format, std::vector<std::string> columns)
      : format_(format), columns_(std::move(columns)) {
    if (format_ == TableFormat::CSV) {
      for (std::size_t i = 0; i < columns_.size(); ++i) {
        out_ << (i ? "," : "") << columns_[i];
      }
      out_ << '\n';
    }
  }

  void row(const std::vector<double>& values) {
    if (format_ == TableFormat::CSV) {
      for (std::size_t i = 0; i < values.size(); ++i) {
        out_ << (i ? "," : "") << format_number(values[i]);
      }
      out_ << '\n';
      return;
    }
    nlohmann::ordered_json rec;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (std::isfinite(values[i])) {
        rec[columns_[i]] = values[i];
      } else {
        rec[columns_[i]] = nullptr;
      }
    }
    out_ << rec.dump() << '\n';
  }

  std::string str() const { return out_.str(); }

 private:
  TableFormat format_;
  std::vector<std::string> columns_;
  std::ostringstream out_;
};

}  // namespace

const std::vector<FigureInfo>& figure_catalog() {
  static const std::vector<FigureInfo> catalog = build_catalog();
  return catalog;
}

const FigureInfo& find_figure(std::string_view id) {
  for (const auto& info : figure_catalog()) {
    if (info.id == id) return info;
  }
  throw DomainError("unknown figure id '" + std::string(id) + "'");
}

GridSpec default_grid(const FigureInfo& info) {
  GridSpec grid;
  if (info.family == Family::Su11PCS && !info.nonlinear) grid.xbar_max = 0.95;
  return grid;
}

double default_distribution_xbar(const FigureInfo& info) {
  return info.family == Family::Su11PCS && !info.nonlinear ? 0.5 : 1.0;
}

DeformationSpec figure_deformation(const FigureInfo& info, double label) {
  const AlgebraKind kind = info.family == Family::Su2PCS ? AlgebraKind::Su2Like
                                                         : AlgebraKind::Su11Like;
  std::vector<double> coeffs{1.0};
  if (info.nonlinear) coeffs.push_back(2.0);
  return DeformationSpec(kind, std::move(coeffs), label);
}

std::string render_figure(const FigureRequest& req) {
  const FigureInfo& info = find_figure(req.figure_id);
  GridSpec grid = req.grid.value_or(default_grid(info));
  if (req.labels) grid.labels = *req.labels;
  grid.validate();

  std::vector<std::string> columns;
  columns.push_back(info.quantity == Quantity::PhotonDist ? "n" : "xbar");
  for (double l : grid.labels) columns.push_back(label_column(l));
  TableWriter table(req.format, columns);

  if (info.quantity == Quantity::PhotonDist) {
    const double xbar = req.xbar.value_or(default_distribution_xbar(info));
    std::vector<std::vector<double>> dists;
    std::size_t rows = 0;
    for (double l : grid.labels) {
      const auto spec = CSSpec::from_series_variable(
          info.family, figure_deformation(info, l), xbar);
      const auto v = coefficients(spec, req.eps);
      std::vector<double> p;
      for (const auto& c : v.coeffs) p.push_back(std::norm(c));
      rows = std::max(rows, p.size());
      dists.push_back(std::move(p));
    }
    // Trailing rows that are exactly zero for every label carry nothing.
    while (rows > 1) {
      bool all_zero = true;
      for (const auto& p : dists) {
        if (rows - 1 < p.size() && p[rows - 1] != 0.0) all_zero = false;
      }
      if (!all_zero) break;
      --rows;
    }
    for (std::size_t n = 0; n < rows; ++n) {
      std::vector<double> values{static_cast<double>(n)};
      for (const auto& p : dists) values.push_back(n < p.size() ? p[n] : 0.0);
      table.row(values);
    }
    return table.str();
  }

  for (double x : grid.xbars()) {
    std::vector<double> values{x};
    for (double l : grid.labels) {
      const auto spec =
          CSSpec::from_series_variable(info.family, figure_deformation(info, l), x);
      values.push_back(curve_value(info, spec));
    }
    table.row(values);
  }
  return table.str();
}

std::string format_number(double v) {
  if (!std::isfinite(v)) return "nan";
  if (v == 0.0) v = 0.0;  // fold -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_file_atomically(const std::string& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open '" + tmp.string() + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error("write to '" + tmp.string() + "' failed");
  }
  fs::rename(tmp, target);
}

}  // namespace nlcs
