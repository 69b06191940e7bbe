#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "latred/bounds.hpp"
#include "latred/lll.hpp"
#include "latred/potential.hpp"

namespace latred {

// Trace files are JSON. Indices are 1-based in the file ("pos" of a swap is
// the lower index of the exchanged pair); big integers and high-precision
// reals are decimal strings. A kernel trace records the matrix A as input
// digest together with K, so the extended basis and hence the whole run can
// be replayed from the original input file.

/// Apply recorded events to a basis: the replay oracle.
IntMatrix replay_events(IntMatrix basis, const std::vector<ReductionEvent>& events);

nlohmann::json events_to_json(const std::vector<ReductionEvent>& events);
std::vector<ReductionEvent> events_from_json(const nlohmann::json& events);

/// Per-swap potential rows {step, k, before, after} for every k = 1..n,
/// computed from the exact checkpoint norms.
nlohmann::json potentials_to_json(const ReductionTrace& trace, std::size_t n);

nlohmann::json bound_report_to_json(const BoundReport& report);

/// Assemble a full trace document. `bounds` may be null (plain reductions).
nlohmann::json make_trace_json(const std::string& kind, const std::string& input_digest,
                               const std::string& output_digest, std::size_t n,
                               std::size_t m, std::optional<std::size_t> k,
                               const std::optional<BigInt>& scale_k, const BigRat& delta,
                               const ReductionTrace& trace, const nlohmann::json& bounds);

void write_trace_file(const std::string& path, const nlohmann::json& doc);
nlohmann::json load_trace_file(const std::string& path);

// Per-k analysis of a trace with potential rows.
struct TraceAnalysis {
  struct KRow {
    std::size_t k = 0;
    HiReal total_drop;      // Pi_k(input) - Pi_k(output)
    HiReal min_decrease;    // smallest per-swap drop (0 when no swaps)
    std::size_t decrease_violations = 0;  // drops below log2(2/sqrt(3)) - slack
    HiReal swap_bound;      // total_drop / log2(2/sqrt(3))
    bool bound_ok = false;  // measured swaps <= swap_bound + slack
  };
  std::size_t swap_count = 0;
  std::vector<KRow> rows;
  HiReal min_bound_over_k;
  bool all_ok() const {
    for (const auto& r : rows)
      if (r.decrease_violations > 0 || !r.bound_ok) return false;
    return true;
  }
};

/// Checks the recorded per-swap decreases (every one must be at least
/// log2(2/sqrt(3)) - 1e-9) and the potential swap bound per k. Throws
/// InputError when the trace has swaps but no potential rows.
TraceAnalysis analyze_trace(const nlohmann::json& doc,
                            std::optional<std::size_t> k_filter = std::nullopt);

std::string analysis_to_text(const TraceAnalysis& analysis);
std::string analysis_to_csv(const TraceAnalysis& analysis);

}  // namespace latred
