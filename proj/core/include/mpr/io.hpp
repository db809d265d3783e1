#pragma once

#include "mpr/balanced_matrix.hpp"
#include "mpr/edge.hpp"
#include "mpr/multigraph.hpp"
#include "mpr/series.hpp"
#include "mpr/verify.hpp"
#include "mpr/walk.hpp"

#include <string>
#include <vector>

namespace mpr {

/// {"q": int, "rows": [[int]]}. The outer count p is not part of the format.
std::string matrix_to_json(const BalancedMatrix& f);
/// Accepts a single matrix object or an array of them.
std::vector<BalancedMatrix> matrices_from_json(const std::string& text, int p);
/// {"inner": int, "outer": [ids], "edges": [[start, end]]}.
std::string graph_to_json(const DirectedMultigraph& g);
DirectedMultigraph graph_from_json(const std::string& text);

std::string read_text_file(const std::string& path);

/// Machine-readable verification report. Keys are emitted in a fixed order
/// so equal reports serialize to equal bytes.
std::string report_to_json(const VerifyReport& report);

/// {"I1":..., "I4":..., "I6":..., "DL":..., "DT":...}; absent keys stay unset.
LipatovConstants lipatov_from_json(const std::string& text);
LipatovConstants load_lipatov(const std::string& path);
std::string lipatov_to_json(const LipatovConstants& c);

std::string coefficient_table_to_json(const CoefficientTable& t);
std::string beta_stats_to_json(const BetaStats& b, const VisitConvention& c);

}  // namespace mpr
