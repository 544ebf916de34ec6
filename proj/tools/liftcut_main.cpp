#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "liftcut/bench.hpp"
#include "liftcut/bnc.hpp"
#include "liftcut/cutgen.hpp"
#include "liftcut/polyoracle.hpp"

using nlohmann::json;

namespace {

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void write_output(const json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(path);
    out << j.dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lifted cutting planes for concave mixed-integer sets"};
  app.require_subcommand(1);

  // gen: emit a random benchmark instance.
  auto* gen = app.add_subcommand("gen", "generate a benchmark instance");
  std::string gen_kind = "wta";
  int gen_n = 4, gen_m = 4;
  double gen_param = 0.4;
  uint64_t gen_seed = 1;
  std::string gen_out;
  gen->add_option("--problem", gen_kind, "eum or wta")->check(CLI::IsMember({"eum", "wta"}));
  gen->add_option("-n", gen_n, "first dimension");
  gen->add_option("-m", gen_m, "second dimension");
  gen->add_option("--param", gen_param, "lambda (eum) or rho (wta)");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("-o,--output", gen_out, "output path (default stdout)");

  // cut: instance + context json -> cuts from every requested family.
  auto* cut = app.add_subcommand("cut", "emit lifted cuts for an instance and context");
  std::string cut_instance, cut_context, cut_out;
  bool cut_exact = true;
  cut->add_option("instance", cut_instance, "instance json")->required();
  cut->add_option("context", cut_context, "context json {s,k,S0,S1}")->required();
  cut->add_flag("--approximate,!--exact", cut_exact,
                "use upper approximations even where exact values exist");
  cut->add_option("-o,--output", cut_out, "output path (default stdout)");

  // verify: instance + cuts json -> validity and face dimension report.
  auto* verify = app.add_subcommand("verify", "check cuts against the enumeration oracle");
  std::string ver_instance, ver_cuts, ver_out;
  verify->add_option("instance", ver_instance, "instance json")->required();
  verify->add_option("cuts", ver_cuts, "cuts json (array)")->required();
  verify->add_option("-o,--output", ver_out, "output path (default stdout)");

  // solve: problem json -> solution + stats.
  auto* solve = app.add_subcommand("solve", "branch-and-cut solve of a problem json");
  std::string solve_problem, solve_cuts = "both", solve_out;
  bool solve_exact = true, solve_no_oa = false;
  double solve_tl = 600.0;
  uint64_t solve_seed = 0;
  solve->add_option("problem", solve_problem, "problem json")->required();
  solve->add_option("--cuts", solve_cuts, "none|single|two|both")
      ->check(CLI::IsMember({"none", "single", "two", "both"}));
  solve->add_flag("--no-oa", solve_no_oa, "disable gradient cuts");
  solve->add_flag("--approximate,!--exact-lifting", solve_exact,
                  "use upper approximations in two-phase cuts");
  solve->add_option("--time-limit", solve_tl, "seconds");
  solve->add_option("--seed", solve_seed, "recorded in stats");
  solve->add_option("-o,--output", solve_out, "output path (default stdout)");

  // bench: grid run, CSV + summary table.
  auto* bench = app.add_subcommand("bench", "run the experiment grid");
  std::string bench_problem = "wta", bench_csv, bench_grid;
  int bench_reps = 3;
  uint64_t bench_seed = 1;
  double bench_tl = 600.0;
  bool bench_no_times = false;
  bench->add_option("--problem", bench_problem, "eum or wta")
      ->check(CLI::IsMember({"eum", "wta"}));
  bench->add_option("--grid", bench_grid,
                    "semicolon-separated cells n,m,param (default a small desk grid)");
  bench->add_option("--reps", bench_reps, "instances per cell");
  bench->add_option("--seed", bench_seed, "base seed");
  bench->add_option("--time-limit", bench_tl, "per-solve seconds");
  bench->add_flag("--no-times", bench_no_times,
                  "write 0 in the T/ST columns for byte-reproducible CSV");
  bench->add_option("--csv", bench_csv, "CSV output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      json j = gen_kind == "eum"
                   ? liftcut::gen_eum(gen_n, gen_m, gen_param, gen_seed).to_json()
                   : liftcut::gen_wta(gen_n, gen_m, gen_param, gen_seed).to_json();
      write_output(j, gen_out);
      return 0;
    }

    if (*cut) {
      auto inst = std::make_shared<liftcut::InstanceX>(
          liftcut::InstanceX::from_json(read_json(cut_instance)));
      auto ctx = liftcut::LiftContext::from_json(read_json(cut_context), inst);
      json cuts = json::array();
      cuts.push_back(liftcut::single_phase_cut(ctx).to_json());
      cuts.push_back(liftcut::two_phase_cut_I(ctx, cut_exact).to_json());
      cuts.push_back(liftcut::two_phase_cut_II(ctx, cut_exact).to_json());
      write_output(cuts, cut_out);
      return 0;
    }

    if (*verify) {
      auto inst = liftcut::InstanceX::from_json(read_json(ver_instance));
      json report = json::array();
      for (const auto& cj : read_json(ver_cuts)) {
        liftcut::Cut c = liftcut::Cut::from_json(cj);
        json entry;
        entry["family"] = c.family;
        auto viol = liftcut::check_validity(c, inst);
        entry["valid"] = !viol.has_value();
        if (viol) {
          entry["violation"] = viol->amount;
          entry["violator"] = viol->x;
        } else {
          entry["face_dimension"] = liftcut::face_dimension(c, inst);
        }
        report.push_back(entry);
      }
      write_output(report, ver_out);
      return 0;
    }

    if (*solve) {
      liftcut::Problem problem = liftcut::problem_from_json(read_json(solve_problem));
      liftcut::BncConfig cfg;
      cfg.use_oa = !solve_no_oa;
      if (solve_cuts == "single" || solve_cuts == "both")
        cfg.families.insert(liftcut::CutFamily::Single);
      if (solve_cuts == "two" || solve_cuts == "both") {
        cfg.families.insert(liftcut::CutFamily::TwoI);
        cfg.families.insert(liftcut::CutFamily::TwoII);
      }
      cfg.prefer_exact = solve_exact;
      cfg.time_limit = solve_tl;
      cfg.seed = solve_seed;
      auto res = liftcut::branch_and_cut(problem, cfg);
      json j;
      j["objective"] = res.objective;
      j["x"] = res.x;
      j["stats"] = res.stats.to_json();
      write_output(j, solve_out);
      return 0;
    }

    if (*bench) {
      liftcut::BenchConfig cfg;
      cfg.problem = bench_problem;
      cfg.instances_per_cell = bench_reps;
      cfg.seed = bench_seed;
      cfg.time_limit = bench_tl;
      cfg.report_times = !bench_no_times;
      if (bench_grid.empty()) {
        if (bench_problem == "wta")
          cfg.grid = {{4, 4, 0.3}, {4, 4, 0.4}, {5, 5, 0.4}};
        else
          cfg.grid = {{12, 4, 0.4}, {12, 4, 1.0}, {15, 5, 0.6}};
      } else {
        std::stringstream ss(bench_grid);
        std::string cell;
        while (std::getline(ss, cell, ';')) {
          int n, m;
          double param;
          if (std::sscanf(cell.c_str(), "%d,%d,%lf", &n, &m, &param) != 3)
            throw std::runtime_error("bad grid cell: " + cell);
          cfg.grid.emplace_back(n, m, param);
        }
      }
      liftcut::BncConfig oa;
      liftcut::BncConfig single, two, comb;
      oa.use_oa = true;
      single = oa;
      single.families = {liftcut::CutFamily::Single};
      two = oa;
      two.families = {liftcut::CutFamily::TwoI, liftcut::CutFamily::TwoII};
      comb = oa;
      comb.families = {liftcut::CutFamily::Single, liftcut::CutFamily::TwoI,
                       liftcut::CutFamily::TwoII};
      if (bench_problem == "eum") {
        // Binary problem: the families separate exactly at integral points.
        oa.use_oa = true;
        single.use_oa = false;
        two.use_oa = false;
        comb.use_oa = false;
      }
      cfg.settings = {{"OA", oa}, {"+Single", single}, {"+Two", two}, {"+Comb", comb}};
      auto out = liftcut::run_experiment(cfg);
      if (bench_csv.empty()) {
        std::cout << out.csv << "\n" << out.table;
      } else {
        std::ofstream f(bench_csv);
        f << out.csv;
        std::cout << out.table;
      }
      return 0;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
