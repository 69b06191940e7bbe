#include "latred/trace.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace latred {

IntMatrix replay_events(IntMatrix basis, const std::vector<ReductionEvent>& events) {
  for (const auto& ev : events) {
    if (ev.kind == ReductionEvent::Kind::Translate) {
      basis.sub_col_multiple(ev.pos, ev.other, ev.coeff);
    } else {
      basis.swap_cols(ev.pos, ev.pos + 1);
    }
  }
  return basis;
}

nlohmann::json events_to_json(const std::vector<ReductionEvent>& events) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& ev : events) {
    nlohmann::json e;
    e["step"] = ev.step;
    if (ev.kind == ReductionEvent::Kind::Translate) {
      e["kind"] = "translate";
      e["pos"] = ev.pos + 1;
      e["j"] = ev.other + 1;
      e["q"] = ev.coeff.get_str();
    } else {
      e["kind"] = "swap";
      e["pos"] = ev.pos + 1;
    }
    arr.push_back(std::move(e));
  }
  return arr;
}

std::vector<ReductionEvent> events_from_json(const nlohmann::json& events) {
  std::vector<ReductionEvent> out;
  for (const auto& e : events) {
    ReductionEvent ev;
    ev.step = e.at("step").get<std::size_t>();
    const std::string kind = e.at("kind").get<std::string>();
    std::size_t pos = e.at("pos").get<std::size_t>();
    if (pos < 1) throw InputError("event position must be 1-based");
    ev.pos = pos - 1;
    if (kind == "translate") {
      ev.kind = ReductionEvent::Kind::Translate;
      ev.other = e.at("j").get<std::size_t>() - 1;
      ev.coeff = BigInt(e.at("q").get<std::string>());
    } else if (kind == "swap") {
      ev.kind = ReductionEvent::Kind::Swap;
    } else {
      throw InputError("unknown event kind: " + kind);
    }
    out.push_back(std::move(ev));
  }
  return out;
}

nlohmann::json potentials_to_json(const ReductionTrace& trace, std::size_t n) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& cp : trace.checkpoints) {
    for (std::size_t k = 1; k <= n; ++k) {
      nlohmann::json row;
      row["step"] = cp.step;
      row["k"] = k;
      row["before"] = potential_k(cp.norms_before, k).to_string();
      row["after"] = potential_k(cp.norms_after, k).to_string();
      arr.push_back(std::move(row));
    }
  }
  return arr;
}

nlohmann::json bound_report_to_json(const BoundReport& report) {
  nlohmann::json b;
  b["n"] = report.n;
  b["k"] = report.k;
  b["log_norm_A"] = report.log_norm_a.to_string();
  b["bound_theorem2"] = report.bound_theorem2.to_string();
  b["bound_classical"] = report.bound_classical.to_string();
  b["bound_potential_min_k"] = report.bound_potential_min_k.to_string();
  b["measured_swaps"] = report.measured_swaps;
  b["principal_minor_nonzero"] = report.principal_minor_nonzero;
  return b;
}

nlohmann::json make_trace_json(const std::string& kind, const std::string& input_digest,
                               const std::string& output_digest, std::size_t n,
                               std::size_t m, std::optional<std::size_t> k,
                               const std::optional<BigInt>& scale_k, const BigRat& delta,
                               const ReductionTrace& trace, const nlohmann::json& bounds) {
  nlohmann::json doc;
  doc["format"] = "latred-trace-v1";
  doc["kind"] = kind;
  doc["input_digest"] = input_digest;
  doc["output_digest"] = output_digest;
  doc["n"] = n;
  doc["m"] = m;
  if (k)
    doc["k"] = *k;
  else
    doc["k"] = nullptr;
  if (scale_k)
    doc["K"] = scale_k->get_str();
  else
    doc["K"] = nullptr;
  doc["delta"] = delta.get_str();
  doc["swap_count"] = trace.swap_count;
  doc["events"] = events_to_json(trace.events);
  doc["potentials"] = potentials_to_json(trace, n);
  doc["bounds"] = bounds;
  return doc;
}

void write_trace_file(const std::string& path, const nlohmann::json& doc) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << doc.dump(2) << '\n';
}

nlohmann::json load_trace_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed trace file: ") + e.what());
  }
  return doc;
}

TraceAnalysis analyze_trace(const nlohmann::json& doc,
                            std::optional<std::size_t> k_filter) {
  TraceAnalysis analysis;
  analysis.swap_count = doc.at("swap_count").get<std::size_t>();
  const std::size_t n = doc.at("n").get<std::size_t>();
  if (k_filter && (*k_filter < 1 || *k_filter > n)) throw InputError("k out of range");

  // Collect per-k potential rows ordered by step.
  std::map<std::size_t, std::map<std::size_t, std::pair<HiReal, HiReal>>> by_k;
  for (const auto& row : doc.at("potentials")) {
    std::size_t k = row.at("k").get<std::size_t>();
    std::size_t step = row.at("step").get<std::size_t>();
    by_k[k][step] = {HiReal::parse(row.at("before").get<std::string>()),
                     HiReal::parse(row.at("after").get<std::string>())};
  }
  if (analysis.swap_count > 0 && by_k.empty())
    throw InputError("trace has no potential checkpoints");

  const HiReal kappa = log2_two_over_sqrt3();
  const HiReal prop1_threshold = kappa - HiReal(1e-9);
  const HiReal thm1_slack(1e-6);
  bool first_bound = true;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k_filter && k != *k_filter) continue;
    TraceAnalysis::KRow row;
    row.k = k;
    auto it = by_k.find(k);
    if (it != by_k.end() && !it->second.empty()) {
      if (it->second.size() != analysis.swap_count)
        throw InputError("trace is missing potential checkpoints");
      bool first = true;
      for (const auto& [step, pot] : it->second) {
        HiReal dec = pot.first - pot.second;
        if (dec < prop1_threshold) ++row.decrease_violations;
        if (first || dec < row.min_decrease) row.min_decrease = dec;
        first = false;
      }
      // Potentials only move at swaps: the run total is first-before minus
      // last-after.
      row.total_drop = it->second.begin()->second.first -
                       it->second.rbegin()->second.second;
    } else if (analysis.swap_count > 0) {
      throw InputError("trace is missing potential checkpoints");
    }
    row.swap_bound = row.total_drop / kappa;
    row.bound_ok = HiReal(static_cast<long>(analysis.swap_count)) <=
                   row.swap_bound + thm1_slack;
    if (first_bound || row.swap_bound < analysis.min_bound_over_k)
      analysis.min_bound_over_k = row.swap_bound;
    first_bound = false;
    analysis.rows.push_back(std::move(row));
  }
  return analysis;
}

std::string analysis_to_text(const TraceAnalysis& analysis) {
  std::ostringstream out;
  out << "swaps: " << analysis.swap_count << "\n";
  for (const auto& r : analysis.rows) {
    out << "k=" << r.k << "  total_drop=" << r.total_drop.to_double()
        << "  min_decrease=" << r.min_decrease.to_double()
        << "  decrease_violations=" << r.decrease_violations
        << "  swap_bound=" << r.swap_bound.to_double()
        << "  bound_ok=" << (r.bound_ok ? "yes" : "no") << "\n";
  }
  if (!analysis.rows.empty())
    out << "min swap bound over k: " << analysis.min_bound_over_k.to_double() << "\n";
  out << (analysis.all_ok() ? "all bounds satisfied" : "VIOLATIONS FOUND") << "\n";
  return out.str();
}

std::string analysis_to_csv(const TraceAnalysis& analysis) {
  std::ostringstream out;
  out << "k,swaps,total_drop,min_decrease,decrease_violations,swap_bound,bound_ok\n";
  char buf[64];
  for (const auto& r : analysis.rows) {
    out << r.k << ',' << analysis.swap_count << ',';
    std::snprintf(buf, sizeof buf, "%.6f", r.total_drop.to_double());
    out << buf << ',';
    std::snprintf(buf, sizeof buf, "%.6f", r.min_decrease.to_double());
    out << buf << ',' << r.decrease_violations << ',';
    std::snprintf(buf, sizeof buf, "%.6f", r.swap_bound.to_double());
    out << buf << ',' << (r.bound_ok ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace latred
