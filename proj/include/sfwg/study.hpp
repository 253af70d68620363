#ifndef SFWG_STUDY_HPP
#define SFWG_STUDY_HPP

#include <optional>

#include "sfwg/cases.hpp"
#include "sfwg/norms.hpp"

namespace sfwg {

enum class MeshFamily { Triangular, Rectangular, Polygonal };

MeshFamily mesh_family_from_string(const std::string& s);  // "tri" | "rect" | "poly"
std::string to_string(MeshFamily family);

Mesh generate_mesh(MeshFamily family, int n);

/// One refinement level of a convergence study: the four table errors plus
/// observed rates (log2 ratios against the previous level).
struct ErrorRow {
  int n = 0;
  bool ok = false;
  std::string failure;
  double e_phi_energy = 0.0;
  double e_u_energy = 0.0;
  double e_phi_l2 = 0.0;
  double e_u_l2 = 0.0;
  std::optional<double> rate_phi_energy;
  std::optional<double> rate_u_energy;
  std::optional<double> rate_phi_l2;
  std::optional<double> rate_u_l2;
  double solver_residual = 0.0;
};

struct StudyConfig {
  int case_id = 1;
  MeshFamily family = MeshFamily::Triangular;
  int k = 2;
  std::vector<int> levels;  // strictly increasing, each double the previous
  double penalty_exponent = 1.0;
  double cut_ratio = 0.25;  // polygonal family only
};

struct StudyReport {
  StudyConfig config;
  std::vector<ErrorRow> rows;
};

/// Runs the full study: one mesh, solve and error evaluation per level.
/// A failing level is recorded in its row; the study continues.
StudyReport run_study(const StudyConfig& config);

std::string emit_csv(const StudyReport& report);
std::string emit_markdown(const StudyReport& report);

/// Parses a CSV produced by emit_csv (config echo comment included).
StudyReport parse_report_csv(const std::string& text);

// ------------------------------------------------------------- reference

/// One degree-section row of an embedded reference table.
struct ReferenceRow {
  int k = 0;
  int n = 0;
  double e_phi_energy, e_u_energy, e_phi_l2, e_u_l2;
  std::optional<double> rate_phi_energy, rate_u_energy, rate_phi_l2, rate_u_l2;
};

struct ReferenceTable {
  std::string id;  // "table1" .. "table8"
  int case_id = 0;
  MeshFamily family = MeshFamily::Triangular;
  std::vector<ReferenceRow> rows;
};

/// Loads data/reference/<id>.csv (directory overridable for tools/tests).
ReferenceTable load_reference_table(const std::string& id, const std::string& dir = {});

struct Verdict {
  std::string what;
  bool gated = true;  // informational rows are reported but not gated
  bool pass = false;
  double expected = 0.0;
  double observed = 0.0;
  std::string detail;
};

/// Per-cell verdicts. Policy: rates within +-0.2 of the reference; absolute
/// errors within a factor of 3 on the triangular/rectangular families;
/// the polygonal family compares rates only. The phi-energy column is
/// informational. Throws std::invalid_argument on a config/table mismatch.
std::vector<Verdict> compare_to_reference(const StudyReport& report, const ReferenceTable& table);

bool all_gated_pass(const std::vector<Verdict>& verdicts);

}  // namespace sfwg

#endif
