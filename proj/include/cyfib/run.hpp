#pragma once

// Front-end logic behind the `cyfib` command: resolve the input surface(s),
// enumerate, serialize, and optionally verify and draw.

#include <cstdint>
#include <algorithm>
#include <fstream>
#include <future>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyfib/enumerate.hpp"
#include "cyfib/figure.hpp"
#include "cyfib/report.hpp"
#include "cyfib/verify.hpp"

namespace cyfib {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,        // bad flags, unreadable input, unwritable output
  kExitInvalidData = 2,  // surface data fails validation
  kExitDefect = 3,       // internal cross-check failed
};

struct PresetSelector {
  std::string name;  // "p2" or "delpezzo"
  std::int64_t d = 1;
  std::int64_t k = 9;
  std::int64_t m = 1;
};

struct RunConfig {
  std::optional<PresetSelector> preset;
  std::vector<std::string> input_files;
  std::optional<BaseSurface> inline_surface;
  Format format = Format::Text;
  std::optional<std::string> figure_path;
  std::optional<std::string> output_path;
  bool verify = false;
  std::int64_t scan_box = kDefaultScanBox;
};

struct RunResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

inline BaseSurface resolve_preset(const PresetSelector& p) {
  if (p.name == "p2") return preset_projective_plane(p.d);
  if (p.name == "delpezzo") return preset_del_pezzo_submultiple(p.k, p.m);
  throw std::invalid_argument("unknown preset '" + p.name + "' (expected p2 or delpezzo)");
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
  if (!out.flush()) throw std::runtime_error("failed writing '" + path + "'");
}

inline std::string verification_text(const Verification& v) {
  std::string s = "verify    scan 0 <= b <= a <= " + std::to_string(v.box) + ": " +
                  (v.ok() ? "ok" : "DISAGREEMENT") + " (" + std::to_string(v.scanned_zero) +
                  " residual-zero pairs)\n";
  for (const auto& p : v.problems) s += "verify    " + p + "\n";
  return s;
}

/// Enumerates one surface and renders it in the configured format.
inline RunResult run_one(const BaseSurface& surface, const RunConfig& cfg, bool compact_json = false) {
  RunResult res;
  EnumerationReport rep;
  try {
    rep = enumerate_all(surface);
  } catch (const InvalidSurface& e) {
    res.exit_code = kExitInvalidData;
    res.err = std::string(e.what()) + "\n";
    return res;
  } catch (const std::logic_error& e) {
    res.exit_code = kExitDefect;
    res.err = std::string("internal defect: ") + e.what() + "\n";
    return res;
  }

  std::optional<Verification> check;
  if (cfg.verify) {
    check = verify_report(rep, cfg.scan_box);
    if (!check->ok()) res.exit_code = kExitDefect;
  }

  switch (cfg.format) {
    case Format::Json: {
      Json j = report_to_json(rep);
      if (check) {
        j["verification"] = {{"box", check->box},
                             {"residual_zero_pairs", check->scanned_zero},
                             {"ok", check->ok()},
                             {"problems", check->problems}};
      }
      res.out = (compact_json ? j.dump() : j.dump(2)) + "\n";
      break;
    }
    case Format::Csv:
      res.out = report_to_csv(rep);
      if (check) res.err += verification_text(*check);
      break;
    case Format::Text:
      res.out = report_to_text(rep);
      if (check) res.out += verification_text(*check);
      break;
  }

  if (cfg.figure_path) {
    try {
      write_file(*cfg.figure_path, render_svg(rep));
    } catch (const std::exception& e) {
      res.exit_code = std::max(res.exit_code, static_cast<int>(kExitUsage));
      res.err += std::string(e.what()) + "\n";
    }
  }
  return res;
}

inline RunResult run(const RunConfig& cfg) {
  RunResult res;
  const int sources = (cfg.preset ? 1 : 0) + (cfg.input_files.empty() ? 0 : 1) +
                      (cfg.inline_surface ? 1 : 0);
  if (sources != 1) {
    res.exit_code = kExitUsage;
    res.err = "exactly one input source is required: a preset, --input files, or inline numbers\n";
    return res;
  }
  if (cfg.scan_box < 0) {
    res.exit_code = kExitUsage;
    res.err = "--scan-box must be non-negative\n";
    return res;
  }
  if (cfg.input_files.size() > 1 && (cfg.figure_path || cfg.output_path)) {
    res.exit_code = kExitUsage;
    res.err = "--figure and --output take a single input\n";
    return res;
  }

  if (cfg.input_files.size() > 1) {
    // Independent surfaces run concurrently; each report is emitted whole, in input order.
    std::vector<std::future<RunResult>> jobs;
    for (const auto& path : cfg.input_files) {
      jobs.push_back(std::async(std::launch::async, [&cfg, path] {
        try {
          RunResult one = run_one(parse_surface_descriptor(read_file(path)), cfg, true);
          if (!one.err.empty()) one.err = path + ": " + one.err;
          return one;
        } catch (const std::runtime_error& e) {
          return RunResult{kExitUsage, "", path + ": " + e.what() + "\n"};
        } catch (const std::invalid_argument& e) {
          return RunResult{kExitInvalidData, "", path + ": " + e.what() + "\n"};
        }
      }));
    }
    for (auto& job : jobs) {
      RunResult one = job.get();
      res.exit_code = std::max(res.exit_code, one.exit_code);
      res.out += one.out;
      res.err += one.err;
    }
    return res;
  }

  BaseSurface surface;
  try {
    if (cfg.preset) surface = resolve_preset(*cfg.preset);
    else if (cfg.inline_surface) surface = *cfg.inline_surface;
    else surface = parse_surface_descriptor(read_file(cfg.input_files.front()));
  } catch (const std::runtime_error& e) {
    return {kExitUsage, "", std::string(e.what()) + "\n"};
  } catch (const std::invalid_argument& e) {
    return {kExitInvalidData, "", std::string(e.what()) + "\n"};
  }

  res = run_one(surface, cfg);
  if (cfg.output_path && !res.out.empty()) {
    try {
      write_file(*cfg.output_path, res.out);
      res.out.clear();
    } catch (const std::exception& e) {
      res.exit_code = std::max(res.exit_code, static_cast<int>(kExitUsage));
      res.err += std::string(e.what()) + "\n";
    }
  }
  return res;
}

}  // namespace cyfib
