#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nlcs/coherent_state.hpp"
#include "nlcs/statistics.hpp"

namespace nlcs {

enum class Quantity { PhotonDist, MeanPhoton, IntensityCorr, Mandel, Metric };

// One plot of the catalog: a family, linear or cubic (Higgs) deformation,
// and the plotted quantity. Curves are drawn per representation label.
struct FigureInfo {
  std::string id;
  Family family;
  bool nonlinear;
  Quantity quantity;
};

const std::vector<FigureInfo>& figure_catalog();

/// Throws DomainError for an unknown id.
const FigureInfo& find_figure(std::string_view id);

enum class TableFormat { CSV, JSONL };

struct FigureRequest {
  std::string figure_id;
  std::optional<GridSpec> grid;     // curves; defaults per figure
  std::optional<double> xbar;       // distributions; defaults per figure
  std::optional<std::vector<double>> labels;
  TableFormat format = TableFormat::CSV;
  double eps = kDefaultCoefficientEps;
};

GridSpec default_grid(const FigureInfo& info);
double default_distribution_xbar(const FigureInfo& info);

/// Deformation used for one curve: coefficients (1) or (1, 2).
DeformationSpec figure_deformation(const FigureInfo& info, double label);

/// Renders the full table for a request. Identical requests render
/// identical bytes.
std::string render_figure(const FigureRequest& req);

/// Fixed 17-significant-digit rendering; non-finite values render as "nan".
std::string format_number(double v);

/// Writes content to path through a temporary file and a rename.
void write_file_atomically(const std::string& path, std::string_view content);

}  // namespace nlcs
