#pragma once

// Verification sweeps: closed-form predictions against brute force, with
// deterministic reports (JSON / CSV / text) and an on-disk SpechtData store.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "csext/combinatorics.hpp"
#include "csext/specht.hpp"

namespace csext {

inline constexpr const char* kToolVersion = "0.3.0";

enum class RowStatus { Match, Mismatch, Skipped };

const char* to_string(RowStatus s) noexcept;
RowStatus row_status_from_string(const std::string& s);

struct SweepRow {
  std::string check;  // "weight", "rad", "ext"
  int p = 0;
  int size = 0;       // rank n for weight rows, degree m otherwise
  std::string lambda;
  std::string mu;
  std::string predicted;
  std::string observed;
  std::string detail;
  RowStatus status = RowStatus::Match;
  std::string reason;  // ScopeError reason for skipped rows

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct ReportSummary {
  std::size_t matches = 0;
  std::size_t mismatches = 0;
  std::size_t skipped = 0;
  std::map<std::string, std::size_t> counters;  // auxiliary tallies
  double wall_seconds = 0.0;

  friend bool operator==(const ReportSummary&, const ReportSummary&) = default;
};

struct Report {
  std::string version = kToolVersion;
  nlohmann::json config = nlohmann::json::object();
  std::vector<SweepRow> rows;
  ReportSummary summary;

  bool ok() const noexcept { return summary.mismatches == 0; }
  void recount();
  /// Appends rows and counters of `other`; configs are collected under "parts".
  void merge(const Report& other);
};

struct CombSweepConfig {
  std::vector<int> primes{2, 3, 5, 7};
  int n_max = 8;
  int max_entry = 6;
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct SymSweepConfig {
  int p = 3;
  int m = 4;
  unsigned threads = 0;
};

/// Every dominant weight of rank <= n_max with entries in [0, max_entry] and
/// last entry 0: weight-side quantities against their partition-side
/// counterparts under conjugation, plus hat's structural invariants.
Report sweep_comb(const CombSweepConfig& config);

/// Radical and Ext^1 predictions for all partitions of m against Gram ranks
/// and intertwiner solves.
Report sweep_sym(const SymSweepConfig& config, SpechtCache& cache);

struct TableEntry {
  Partition lambda;
  int chi = 0;
  bool p_regular = false;
  bool cs = false;
  bool big = false;
  std::optional<Partition> tilde;
};

struct WeightTableEntry {
  Weight lambda;
  int psi = 0;
  bool cs = false;
  bool big = false;
  std::optional<Weight> hat;
};

std::vector<TableEntry> cs_table(Prime p, int m);
/// p-restricted weights of Lambda^+(n, m).
std::vector<WeightTableEntry> cs_weight_table(Prime p, int n, int m);

std::string to_json(const Report& report, bool include_wall_time = true);
Report report_from_json(const std::string& text);
std::string to_csv(const Report& report);
std::string to_text(const Report& report);

/// One file per (shape, p) holding a self-describing header line followed by
/// the raw matrices. Stale format versions read as misses; corrupt entries
/// are reported and read as misses so the caller recomputes and overwrites.
class SpechtStore {
 public:
  static constexpr int kFormatVersion = 1;

  explicit SpechtStore(std::filesystem::path dir);

  std::optional<SpechtData> get(const Partition& lambda, Prime p) const;
  void put(const SpechtData& data) const;
  std::filesystem::path path_for(const Partition& lambda, Prime p) const;

  /// Routes cache misses through this store (load, else compute and save).
  void attach(SpechtCache& cache) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace csext
