// cyfib: enumerate the pairs (a, b) for which P(L^a + L^b + O_B) can carry an
// anticanonical Calabi-Yau elliptic fibration over a polarized surface (B, L).

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cyfib/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Enumerate and classify the pairs (a, b) admitting Calabi-Yau elliptic fibrations"};

  std::string preset;
  std::int64_t d = 1, k = 9, m = 1;
  std::optional<std::int64_t> l2, c1l, c1sq, c2, n0, r, s;
  std::string name = "custom";
  std::vector<std::string> inputs;
  std::string format = "text";
  std::string figure, output;
  bool verify = false;
  std::int64_t scan_box = cyfib::kDefaultScanBox;

  app.add_option("--preset", preset, "Preset surface")->check(CLI::IsMember({"p2", "delpezzo"}));
  app.add_option("--d", d, "P2 preset: L = d * line");
  app.add_option("--k", k, "del Pezzo preset: degree K^2");
  app.add_option("--m", m, "del Pezzo preset: L = -K / m");
  app.add_option("--l2", l2, "L^2");
  app.add_option("--c1l", c1l, "c1(B).L");
  app.add_option("--c1sq", c1sq, "c1(B)^2");
  app.add_option("--c2", c2, "deg c2(B)");
  app.add_option("--n0", n0, "least n with nL + K_B ample for all n >= n0");
  app.add_option("--r", r, "proportionality r in r L == s c1(B)");
  app.add_option("--s", s, "proportionality s in r L == s c1(B)");
  app.add_option("--name", name, "label for inline surface data");
  app.add_option("--input", inputs, "surface descriptor JSON file(s); several run as a batch");
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--figure", figure, "write an SVG picture of the octant");
  app.add_option("--output", output, "write the report to a file instead of stdout");
  app.add_flag("--verify", verify, "cross-check against a brute-force residual scan");
  app.add_option("--scan-box", scan_box, "scan box for --verify (0 <= b <= a <= box)");

  CLI11_PARSE(app, argc, argv);

  cyfib::RunConfig cfg;
  cfg.format = *cyfib::parse_format(format);
  cfg.verify = verify;
  cfg.scan_box = scan_box;
  cfg.input_files = inputs;
  if (!figure.empty()) cfg.figure_path = figure;
  if (!output.empty()) cfg.output_path = output;
  if (!preset.empty()) cfg.preset = cyfib::PresetSelector{preset, d, k, m};

  const bool any_inline = l2 || c1l || c1sq || c2 || n0 || r || s;
  if (any_inline) {
    if (!(l2 && c1l && c1sq && c2 && n0)) {
      std::cerr << "inline surface data needs --l2, --c1l, --c1sq, --c2 and --n0\n";
      return cyfib::kExitUsage;
    }
    if (r.has_value() != s.has_value()) {
      std::cerr << "--r and --s must be given together\n";
      return cyfib::kExitUsage;
    }
    cyfib::BaseSurface surface;
    surface.name = name;
    surface.L2 = *l2;
    surface.c1L = *c1l;
    surface.c1sq = *c1sq;
    surface.c2 = *c2;
    surface.n0 = *n0;
    if (r) surface.proportionality = cyfib::Proportionality{*r, *s};
    cfg.inline_surface = surface;
  }

  try {
    const cyfib::RunResult res = cyfib::run(cfg);
    std::cout << res.out;
    std::cerr << res.err;
    return res.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "internal defect: " << e.what() << "\n";
    return cyfib::kExitDefect;
  }
}
