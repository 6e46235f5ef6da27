#include "infsim/experiment.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace infsim {
namespace {

std::string fmt_g(double v, const char* spec = "%.12g") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

std::string label_value(double v) { return fmt_g(v, "%g"); }

void require_writable(const std::ofstream& out,
                      const std::filesystem::path& path) {
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
}

}  // namespace

std::vector<SweepPoint> expand_sweep(const ExperimentSpec& spec) {
  const auto window_sizes = spec.sweep_window_size.empty()
                                ? std::vector<int>{spec.base.window_size}
                                : spec.sweep_window_size;
  const auto alpha_is = spec.sweep_alpha_i.empty()
                            ? std::vector<double>{spec.base.alpha_i}
                            : spec.sweep_alpha_i;
  const auto rates = spec.sweep_sampling_rate.empty()
                         ? std::vector<double>{spec.base.sampling_rate_bps}
                         : spec.sweep_sampling_rate;
  const auto policies = spec.sweep_policy.empty()
                            ? std::vector<PolicyKind>{spec.base.policy}
                            : spec.sweep_policy;

  std::vector<SweepPoint> points;
  std::vector<std::string> errors;
  for (int m : window_sizes) {
    for (double alpha_i : alpha_is) {
      for (double rate : rates) {
        for (PolicyKind policy : policies) {
          SweepPoint point;
          point.config = spec.base;
          point.config.window_size = m;
          point.config.alpha_i = alpha_i;
          point.config.sampling_rate_bps = rate;
          point.config.policy = policy;

          std::vector<std::string> parts;
          if (!spec.sweep_window_size.empty())
            parts.push_back("M=" + std::to_string(m));
          if (!spec.sweep_alpha_i.empty())
            parts.push_back("alpha_i=" + label_value(alpha_i));
          if (!spec.sweep_sampling_rate.empty())
            parts.push_back("rate=" + label_value(rate));
          if (!spec.sweep_policy.empty())
            parts.push_back(std::string("policy=") + to_string(policy));
          if (parts.empty()) {
            point.label = "base";
          } else {
            std::string label = parts.front();
            for (std::size_t i = 1; i < parts.size(); ++i)
              label += "," + parts[i];
            point.label = label;
          }

          for (const auto& err : config_errors(point.config)) {
            errors.push_back(point.label + ": " + err);
          }
          points.push_back(std::move(point));
        }
      }
    }
  }
  if (!errors.empty()) throw ConfigError(std::move(errors));
  return points;
}

std::string sanitize_label(const std::string& label) {
  std::string out;
  out.reserve(label.size());
  for (char c : label) {
    const bool keep = std::isalnum(static_cast<unsigned char>(c)) ||
                      c == '.' || c == '-' || c == '_';
    out.push_back(keep ? c : '_');
  }
  return out;
}

void write_summary_csv(const std::filesystem::path& path,
                       const std::vector<SweepOutcome>& outcomes) {
  std::ofstream out(path, std::ios::trunc);
  require_writable(out, path);
  out << "sweep_label,policy,sampling_rate_bps,M,alpha_i,"
         "violation_probability,avg_aoi_s,rmse_s\n";
  for (const auto& o : outcomes) {
    const ScenarioConfig& cfg = o.point.config;
    const double effective_alpha_i =
        cfg.policy == PolicyKind::greedy ? 0.0 : cfg.alpha_i;
    out << o.point.label << ',' << to_string(cfg.policy) << ','
        << fmt_g(cfg.sampling_rate_bps) << ',' << cfg.window_size << ','
        << fmt_g(effective_alpha_i) << ','
        << fmt_g(o.summary.violation_probability) << ','
        << fmt_g(o.summary.avg_aoi_s) << ',' << fmt_g(o.summary.rmse_s)
        << '\n';
  }
}

void write_ccdf_csv(const std::filesystem::path& path,
                    const std::vector<SweepOutcome>& outcomes) {
  std::ofstream out(path, std::ios::trunc);
  require_writable(out, path);
  out << "sweep_label,policy,threshold_s,ccdf\n";
  for (const auto& o : outcomes) {
    for (const auto& [threshold, prob] : o.summary.ccdf) {
      out << o.point.label << ',' << to_string(o.point.config.policy) << ','
          << fmt_g(threshold) << ',' << fmt_g(prob) << '\n';
    }
  }
}

void write_trace_csv(const std::filesystem::path& path,
                     const SlotTrace& trace) {
  std::ofstream out(path, std::ios::trunc);
  require_writable(out, path);
  out << "run,slot,subnet,aoi_s,action_id,pred_mean_s,pred_var_s2,"
         "next_aoi_s,rate_pkts,arrivals,delivered,queue_len";
  for (int b = 0; b < trace.num_rbs; ++b) out << ",interference_w_rb" << b;
  out << '\n';
  for (std::size_t i = 0; i < trace.rows.size(); ++i) {
    const SlotTraceRow& row = trace.rows[i];
    out << row.run << ',' << row.slot << ',' << row.subnet << ','
        << fmt_g(row.aoi_s) << ',' << row.action_id << ',';
    if (row.has_prediction) {
      out << fmt_g(row.pred_mean_s) << ',' << fmt_g(row.pred_var_s2);
    } else {
      out << ',';
    }
    out << ',' << fmt_g(row.next_aoi_s) << ',' << fmt_g(row.rate_pkts) << ','
        << row.arrivals << ',' << row.delivered << ',' << row.queue_len;
    for (double v : trace.interference(i)) out << ',' << fmt_g(v);
    out << '\n';
  }
}

std::vector<SweepOutcome> run_experiment(const ExperimentSpec& spec,
                                         std::ostream& log) {
  const auto points = expand_sweep(spec);
  std::filesystem::create_directories(spec.output_dir);

  std::vector<SweepOutcome> outcomes;
  outcomes.reserve(points.size());
  for (const auto& point : points) {
    SimulationResult result = run_simulation(point.config, spec.write_trace);
    if (spec.write_trace) {
      write_trace_csv(
          spec.output_dir / ("trace_" + sanitize_label(point.label) + ".csv"),
          result.trace);
    }
    log << "[" << point.label << "] policy=" << to_string(point.config.policy)
        << " violation_probability="
        << fmt_g(result.summary.violation_probability)
        << " avg_aoi_s=" << fmt_g(result.summary.avg_aoi_s)
        << " rmse_s=" << fmt_g(result.summary.rmse_s)
        << " samples=" << result.summary.num_aoi_samples << std::endl;
    outcomes.push_back({point, std::move(result.summary)});
  }
  write_summary_csv(spec.output_dir / "summary.csv", outcomes);
  write_ccdf_csv(spec.output_dir / "ccdf.csv", outcomes);
  return outcomes;
}

}  // namespace infsim
