#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spassoc/agreement.hpp"
#include "spassoc/panel.hpp"
#include "spassoc/simulate.hpp"
#include "spassoc/weight_graph.hpp"

namespace spassoc::io {

/// File-level failure (missing file, malformed row). Messages carry
/// "path:line:" context where a line is known.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shortest decimal string that parses back to exactly the same double;
/// locale-independent. Used for every numeric CSV field so outputs are
/// byte-stable.
std::string format_double(double value);

// ---------------------------------------------------------------------------
// Readers
// ---------------------------------------------------------------------------

struct EdgeListFile {
    std::vector<std::pair<int, int>> edges;
    int max_vertex = -1;  // -1 when the file lists no edges
};

/// Reads an edge-list CSV with header `src,dst`: 0-based integer ids, one
/// undirected edge per row, either orientation accepted.
EdgeListFile read_edge_list(const std::string& path);

/// Reads a panel CSV. Wide format starts with header
/// `region_0,...,region_{n-1}` followed by one row per time point; long
/// format starts with header `region,time,value` and lists one value per
/// row, covering every (region, time) pair exactly once. The header picks
/// the format.
PanelMatrix read_panel(const std::string& path);

/// Reads a headerless square numeric CSV (an inner-product matrix over
/// time coordinates).
Eigen::MatrixXd read_metric_matrix(const std::string& path);

/// One row of a significance CSV, mirroring write_significance.
struct SignificanceRecord {
    int region = 0;
    std::string statistic;
    double centered_deviation = 0.0;
    int sign = 0;
    double p_raw = 1.0;
    std::optional<double> p_mc;
    double p_adj = 1.0;
    bool sig_05 = false;
    bool sig_01 = false;
};

std::vector<SignificanceRecord> read_significance(const std::string& path);

// ---------------------------------------------------------------------------
// Writers
// ---------------------------------------------------------------------------

/// Columns of the per-region significance CSV; vectors must share one
/// length (p_mc may be absent, rendered as a blank field).
struct SignificanceOutput {
    std::string statistic;
    Eigen::VectorXd centered_deviation;
    Eigen::VectorXi sign;
    Eigen::VectorXd p_raw;
    std::optional<Eigen::VectorXd> p_mc;
    Eigen::VectorXd p_adj;
    std::vector<bool> sig_05;
    std::vector<bool> sig_01;
};

/// Writes `region,statistic,centered_deviation,sign,p_raw,p_mc,p_adj,
/// sig_05,sig_01`, one row per region.
void write_significance(const std::string& path,
                        const SignificanceOutput& output);

/// Columns of the global-test CSV (single data row).
struct GlobalOutput {
    std::string statistic;
    double gamma = 0.0;
    double center = 0.0;
    double deviation = 0.0;
    double upsilon_sq = 0.0;
    double p_raw = 1.0;
    std::optional<double> p_mc;
};

/// Writes `statistic,gamma,center,deviation,upsilon_sq,p_raw,p_mc`.
void write_global(const std::string& path, const GlobalOutput& output);

/// Writes `mode,kernel,c,power,se,replicates`, one row per curve point.
void write_power_curve(const std::string& path, const PowerCurve& curve);

/// Writes a `metric,value` report: the four agreement counts, mcc, and
/// rand_index.
void write_compare_report(const std::string& path, const AgreementTable& table,
                          double mcc_value, double rand_value);

/// Writes `src,dst` rows with src < dst (or src == dst for an identity
/// relation), ascending by (src, dst).
void write_edge_list(const std::string& path, const WeightGraph& graph);

// ---------------------------------------------------------------------------
// Run manifests
// ---------------------------------------------------------------------------

/// FNV-1a 64-bit digest of a file's bytes, as 16 lowercase hex digits.
std::string file_digest_hex(const std::string& path);

/// Key-value sidecar describing a run: command, parameters, input file
/// digests, seed, artifact version. Keys keep insertion order so the file
/// is byte-stable; nothing time- or machine-dependent is recorded.
class RunManifest {
  public:
    explicit RunManifest(std::string command);

    void set(const std::string& key, const std::string& value);
    void set(const std::string& key, const char* value);
    void set(const std::string& key, double value);
    void set(const std::string& key, std::int64_t value);
    void set(const std::string& key, std::uint64_t value);
    /// Records `<key>_digest=fnv1a:<hex>` for an input file.
    void add_input(const std::string& key, const std::string& path);

    /// Writes `<output_path>.manifest`.
    void write_sidecar(const std::string& output_path) const;

  private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace spassoc::io
