// Command-line front end. Talks to the library exclusively through the
// C API in psm.h; all results are printed as JSON on stdout.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "psm.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

bool g_pretty = false;

void print_json(const char* text) {
  if (g_pretty) {
    auto parsed = nlohmann::ordered_json::parse(text, nullptr, false);
    if (!parsed.is_discarded()) {
      std::cout << parsed.dump(2) << "\n";
      return;
    }
  }
  std::cout << text << "\n";
}

int finish(psm_status st, char* out) {
  if (st == PSM_OK) {
    print_json(out);
    psm_string_free(out);
    return kExitOk;
  }
  std::cerr << "error: " << psm_last_error() << "\n";
  return st == PSM_ERR_PARSE ? kExitUsage : kExitDomain;
}

std::vector<long long> parse_int_list(const std::string& text) {
  std::vector<long long> out;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',') {
      if (!cur.empty()) {
        out.push_back(std::stoll(cur));
        cur.clear();
      }
    } else {
      cur += ch;
    }
  }
  return out;
}

struct Grid {
  long long a_max = 8;
  long long d_max = 3;
  long long denom_bound = 6;
  long long triple_bound = 30;

  void apply_pair(const std::string& key, const std::string& value) {
    long long v = std::stoll(value);
    if (key == "a_max") a_max = v;
    else if (key == "d_max") d_max = v;
    else if (key == "denom_bound") denom_bound = v;
    else if (key == "triple_bound") triple_bound = v;
    else throw CLI::ValidationError("unknown grid key '" + key + "'");
  }

  void apply_spec(const std::string& text) {
    std::string item;
    for (char ch : text + ",") {
      if (ch == ',') {
        if (!item.empty()) {
          auto eq = item.find('=');
          if (eq == std::string::npos)
            throw CLI::ValidationError("grid entry '" + item + "' is not key=value");
          apply_pair(item.substr(0, eq), item.substr(eq + 1));
          item.clear();
        }
      } else if (!isspace(static_cast<unsigned char>(ch))) {
        item += ch;
      }
    }
  }

  void apply_config_file(const std::string& path) {
    FILE* f = std::fopen(path.c_str(), "r");
    if (!f) throw CLI::ValidationError("cannot open config file '" + path + "'");
    char buf[256];
    while (std::fgets(buf, sizeof buf, f)) {
      std::string line(buf);
      while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      apply_pair(line.substr(0, eq), line.substr(eq + 1));
    }
    std::fclose(f);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical semigroups from arithmetic progressions, rational "
               "intervals, and proportionally modular inequalities"};
  app.require_subcommand(1);
  app.add_flag("--pretty", g_pretty, "Indented human-readable JSON");

  long long a = 0, d = 0, k = 0, b = 0, c = 0, p = 0, m = 0, q = 0;
  std::string lo, hi, alpha, beta, gens_text, config_path, grid_text;

  auto* cmd_gaps = app.add_subcommand("gaps", "Gap set of S(AP(a,d;k))");
  cmd_gaps->add_option("--a", a)->required();
  cmd_gaps->add_option("--d", d)->required();
  cmd_gaps->add_option("--k", k)->required();

  auto* cmd_frob = app.add_subcommand("frobenius", "Frobenius number of S(AP(a,d;k))");
  cmd_frob->add_option("--a", a)->required();
  cmd_frob->add_option("--d", d)->required();
  cmd_frob->add_option("--k", k)->required();

  auto* cmd_fi = app.add_subcommand("from-interval", "Semigroup generated by [lo, hi]");
  cmd_fi->add_option("--lo", lo, "lower endpoint p/q")->required();
  cmd_fi->add_option("--hi", hi, "upper endpoint p/q or inf")->required();

  auto* cmd_fp = app.add_subcommand("from-pm", "Semigroup of a*x mod b <= c*x");
  cmd_fp->add_option("--a", a)->required();
  cmd_fp->add_option("--b", b)->required();
  cmd_fp->add_option("--c", c)->required();

  auto* cmd_pd = app.add_subcommand("pm-dual", "Dual triple (b+c-a, b, c)");
  cmd_pd->add_option("--a", a)->required();
  cmd_pd->add_option("--b", b)->required();
  cmd_pd->add_option("--c", c)->required();

  auto* cmd_id = app.add_subcommand("interval-dual", "Dual interval [hi/(hi-1), lo/(lo-1)]");
  cmd_id->add_option("--lo", lo)->required();
  cmd_id->add_option("--hi", hi)->required();

  auto* cmd_bz = app.add_subcommand("bezout", "Proper Bezout sequence from lo to hi");
  cmd_bz->add_option("--lo", lo)->required();
  cmd_bz->add_option("--hi", hi)->required();

  auto* cmd_ipm = app.add_subcommand("is-pm", "Proportional-modularity test");
  cmd_ipm->add_option("--gens", gens_text, "comma-separated generators")->required();

  auto* cmd_ch = app.add_subcommand(
      "characterize", "Admissible (alpha, beta) regions for S(AP(a,d;k))");
  cmd_ch->add_option("--a", a)->required();
  cmd_ch->add_option("--d", d)->required();
  cmd_ch->add_option("--k", k)->required();
  cmd_ch->add_option("--alpha", alpha, "test a single alpha (with --beta)");
  cmd_ch->add_option("--beta", beta, "test a single beta (p/q or inf)");

  auto* cmd_ct = app.add_subcommand(
      "characterize-triple", "Admissible (p, q) for S(p,m,q) = S(AP(a,d;k))");
  cmd_ct->add_option("--a", a)->required();
  cmd_ct->add_option("--d", d)->required();
  cmd_ct->add_option("--k", k)->required();
  cmd_ct->add_option("--m", m)->required();
  cmd_ct->add_option("--p", p, "test a single p (with --q)");
  cmd_ct->add_option("--q", q, "test a single q");

  auto* cmd_vf = app.add_subcommand("verify", "Brute-force verification sweep");
  auto* opt_amax = cmd_vf->add_option("--a-max", a, "largest a");
  auto* opt_dmax = cmd_vf->add_option("--d-max", d, "largest d");
  auto* opt_den = cmd_vf->add_option("--denom-bound", b, "denominator bound for region scans");
  auto* opt_tb = cmd_vf->add_option("--triple-bound", c, "bound for (a,b,c) conversion sweep");
  cmd_vf->add_option("--config", config_path, "key=value grid config file");

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  char* out = nullptr;
  psm_status st = PSM_OK;

  try {
    if (cmd_gaps->parsed()) {
      st = psm_gaps_json(a, d, k, &out);
    } else if (cmd_frob->parsed()) {
      st = psm_frobenius_json(a, d, k, &out);
    } else if (cmd_fi->parsed()) {
      st = psm_from_interval_json(lo.c_str(), hi.c_str(), &out);
    } else if (cmd_fp->parsed()) {
      st = psm_from_pm_json(a, b, c, &out);
    } else if (cmd_pd->parsed()) {
      st = psm_pm_dual_json(a, b, c, &out);
    } else if (cmd_id->parsed()) {
      st = psm_interval_dual_json(lo.c_str(), hi.c_str(), &out);
    } else if (cmd_bz->parsed()) {
      st = psm_bezout_json(lo.c_str(), hi.c_str(), &out);
    } else if (cmd_ipm->parsed()) {
      std::vector<long long> gens = parse_int_list(gens_text);
      st = psm_is_pm_json(gens.data(), gens.size(), &out);
    } else if (cmd_ch->parsed()) {
      if (!alpha.empty() || !beta.empty()) {
        if (alpha.empty() || beta.empty()) {
          std::cerr << "error: --alpha and --beta must be given together\n";
          return kExitUsage;
        }
        int inside = 0;
        st = psm_characterize_point(a, d, k, alpha.c_str(), beta.c_str(), &inside);
        if (st == PSM_OK) {
          std::cout << nlohmann::ordered_json{{"inside", inside != 0}}.dump() << "\n";
          return kExitOk;
        }
      } else {
        st = psm_characterize_json(a, d, k, &out);
      }
    } else if (cmd_ct->parsed()) {
      if (cmd_ct->count("--p") > 0 || cmd_ct->count("--q") > 0) {
        if (cmd_ct->count("--p") == 0 || cmd_ct->count("--q") == 0) {
          std::cerr << "error: --p and --q must be given together\n";
          return kExitUsage;
        }
        int inside = 0;
        st = psm_characterize_triple(a, d, k, p, m, q, &inside);
        if (st == PSM_OK) {
          std::cout << nlohmann::ordered_json{{"inside", inside != 0}}.dump() << "\n";
          return kExitOk;
        }
      } else {
        st = psm_triple_regions_json(a, d, k, m, &out);
      }
    } else if (cmd_vf->parsed()) {
      Grid grid;
      if (!config_path.empty()) grid.apply_config_file(config_path);
      if (const char* env = std::getenv("PSM_GRID")) grid.apply_spec(env);
      if (opt_amax->count()) grid.a_max = a;
      if (opt_dmax->count()) grid.d_max = d;
      if (opt_den->count()) grid.denom_bound = b;
      if (opt_tb->count()) grid.triple_bound = c;
      st = psm_verify_json(grid.a_max, grid.d_max, grid.denom_bound,
                           grid.triple_bound, &out);
      if (st == PSM_OK) {
        std::cout << out;  // already newline-terminated JSON lines
        psm_string_free(out);
        return kExitOk;
      }
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (out != nullptr || st != PSM_OK) return finish(st, out);
  return kExitOk;
}
