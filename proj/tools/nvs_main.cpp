#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nvs/config.hpp"
#include "nvs/genfun.hpp"
#include "nvs/mzv_num.hpp"
#include "nvs/ninth.hpp"
#include "nvs/partition.hpp"
#include "nvs/rect_values.hpp"
#include "nvs/relations.hpp"
#include "nvs/schur_zeta.hpp"
#include "nvs/suites.hpp"
#include "nvs/zeta_trunc.hpp"

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoi(item));
  return out;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

int cmd_verify(const std::string& suite, const nvs::SuiteOptions& opt,
               const std::string& json_path) {
  nvs::Report report = nvs::run_suite(suite, opt);
  report.print_text(std::cout);
  if (!json_path.empty()) report.write_json(json_path);
  return report.all_pass() ? 0 : 1;
}

int cmd_eval_ninth(const std::string& shape_text, int r,
                   const std::string& route, bool hash_only, int slack,
                   const std::string& json_path, bool show_diagram) {
  nvs::SkewShape shape = nvs::SkewShape::parse(shape_text);
  if (show_diagram) std::cout << nvs::content_diagram(shape, 0);
  nvs::NinthContext ctx = nvs::make_context(shape, slack);
  if (r > 0) {
    if (!ctx.fits(shape.outer(), r)) {
      // widen the context so the requested superscript is usable
      ctx.N = r + shape.outer().part(1) + slack / 2 + 1;
      ctx.r = r;
    } else {
      ctx.r = r;
    }
  }
  nvs::SymbolicXPlus x(ctx.N);
  nvs::SparsePoly value;
  if (route == "minor") {
    value = nvs::s_minor(ctx, shape, ctx.r, x);
  } else if (route == "jt") {
    value = nvs::det_expand(nvs::jt_matrix(ctx, shape, ctx.r, x));
  } else if (route == "dualjt") {
    value = nvs::det_expand(nvs::dual_jt_matrix(ctx, shape, ctx.r, x));
  } else if (route == "giambelli") {
    auto [sign, g] = nvs::giambelli_matrix(ctx, shape, ctx.r, x);
    value = nvs::det_expand(g);
    if (sign < 0) value = -value;
  } else {
    std::cerr << "unknown route " << route << "\n";
    return 2;
  }
  std::string text = value.str();
  if (!json_path.empty()) {
    // shapes serialize as integer arrays
    nlohmann::json j;
    j["shape"] = {{"outer", shape.outer().parts()},
                  {"inner", shape.inner().parts()}};
    j["r"] = ctx.r;
    j["route"] = route;
    j["value"] = text;
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "cannot write " << json_path << "\n";
      return 1;
    }
    out << j.dump(2) << "\n";
  }
  if (hash_only)
    std::cout << "fnv1a:" << std::hex << fnv1a(text) << "\n";
  else
    std::cout << text << "\n";
  return 0;
}

int cmd_eval_zeta(const std::string& shape_text, const std::string& entries,
                  const std::string& diag, int m, long trunc_m, int prec) {
  nvs::SkewShape shape = nvs::SkewShape::parse(shape_text);
  if (!entries.empty()) {
    auto exps = parse_int_list(entries);
    nvs::Rational v = nvs::schur_zeta_ssyt_entries(shape, exps, trunc_m);
    std::cout << nvs::to_string(v) << "\n";
    return 0;
  }
  auto abc = parse_int_list(diag);
  if (abc.size() != 3) {
    std::cerr << "--diag expects alpha,beta,gamma\n";
    return 2;
  }
  nvs::DiagIndex idx =
      nvs::DiagIndex::three_zone(abc[0], abc[1], abc[2]).shifted(m);
  nvs::HP v = nvs::schur_zeta_det_hp(shape, idx, trunc_m);
  std::cout << v.str(prec) << "  (truncation M=" << trunc_m << ", " << prec
            << " digits)\n";
  return 0;
}

int cmd_eval_rect(int m, int p, int q, const std::string& abc_text, int prec) {
  auto abc = parse_int_list(abc_text);
  if (abc.size() != 3) {
    std::cerr << "--abc expects alpha,beta,gamma\n";
    return 2;
  }
  const nvs::ZetaTable& zt = nvs::default_zeta_table();
  nvs::MzvEngine engine(nvs::global_config().mzv_match_n,
                        nvs::global_config().tail_order);
  nvs::RectangleValue rv =
      nvs::rectangle_value(m, p, q, abc[0], abc[1], abc[2], zt, engine);
  std::cout << rv.value.str(prec) << "  (route: " << rv.route << ", " << prec
            << " digits)\n";
  return 0;
}

int cmd_table_zetastar(int amax, int cmax, const std::string& out_path,
                       bool as_json, int prec) {
  const nvs::ZetaTable& zt = nvs::default_zeta_table();
  std::ostringstream os;
  if (as_json) {
    os << "{\n";
    bool first = true;
    for (int a = 0; a <= amax; ++a)
      for (int c = 0; c <= cmax; ++c) {
        if (!first) os << ",\n";
        first = false;
        os << "  \"zetastar(1^" << a << ",2,1^" << c << ")\": \""
           << nvs::explicit_121_stuffle(a, c, zt).str(prec) << "\"";
      }
    os << "\n}\n";
  } else {
    os << "a,c,zetastar\n";
    for (int a = 0; a <= amax; ++a)
      for (int c = 0; c <= cmax; ++c)
        os << a << "," << c << ","
           << nvs::explicit_121_stuffle(a, c, zt).str(prec) << "\n";
  }
  if (out_path.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 1;
    }
    out << os.str();
  }
  return 0;
}

int cmd_table_rect(int pmax, int qmax, int m, const std::string& abc_text,
                   const std::string& out_path, int prec) {
  auto abc = parse_int_list(abc_text);
  if (abc.size() != 3) {
    std::cerr << "--abc expects alpha,beta,gamma\n";
    return 2;
  }
  const nvs::ZetaTable& zt = nvs::default_zeta_table();
  nvs::MzvEngine engine(nvs::global_config().mzv_match_n,
                        nvs::global_config().tail_order);
  std::ostringstream os;
  os << "p,q,value\n";
  for (int p = 1; p <= pmax; ++p)
    for (int q = 1; q <= qmax; ++q)
      os << p << "," << q << ","
         << nvs::rectangle_value(m, p, q, abc[0], abc[1], abc[2], zt, engine)
                .value.str(prec)
         << "\n";
  if (out_path.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 1;
    }
    out << os.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact identities for ninth-variation Schur functions and "
               "Schur multiple zeta values"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "key-value config file");

  // verify ------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all", mode = "exact", json_path;
  nvs::SuiteOptions opt;
  verify->add_option("--suite", suite, "suite name")
      ->check(CLI::IsMember(nvs::suite_names()));
  verify->add_option("--max-cells", opt.max_cells, "shape weight cap");
  verify->add_option("--mode", mode)->check(CLI::IsMember({"exact", "modular"}));
  verify->add_option("--seed", opt.seed, "random seed");
  verify->add_option("--trials", opt.trials, "modular trials");
  verify->add_option("--json", json_path, "write a JSON report");

  // eval ----------------------------------------------------------------
  auto* eval = app.add_subcommand("eval", "evaluate a single object");
  eval->require_subcommand(1);
  auto* eval_ninth = eval->add_subcommand("ninth");
  std::string shape_text = "2,1", route = "minor";
  int r_opt = 0;
  bool hash_only = false;
  eval_ninth->add_option("--shape", shape_text, "outer[/inner]")->required();
  eval_ninth->add_option("--r", r_opt, "superscript r");
  eval_ninth->add_option("--route", route)
      ->check(CLI::IsMember({"minor", "jt", "dualjt", "giambelli"}));
  eval_ninth->add_flag("--hash", hash_only, "print a canonical hash");
  bool show_diagram = false;
  eval_ninth->add_flag("--diagram", show_diagram, "print the content diagram");
  std::string ninth_json;
  eval_ninth->add_option("--json", ninth_json, "write shape and value as JSON");

  auto* eval_zeta = eval->add_subcommand("zeta");
  std::string entries, diag = "1,2,1";
  int m_shift = 0, prec = 0;
  long trunc_m = -1;
  eval_zeta->add_option("--shape", shape_text)->required();
  eval_zeta->add_option("--entries", entries, "explicit exponent tableau");
  eval_zeta->add_option("--diag", diag, "three-zone diagonal alpha,beta,gamma");
  eval_zeta->add_option("--m", m_shift, "diagonal shift");
  eval_zeta->add_option("--M", trunc_m, "truncation");
  eval_zeta->add_option("--prec", prec, "digits");

  auto* eval_rect = eval->add_subcommand("rect");
  int rp = 1, rq = 1, rm = 0;
  std::string abc = "1,2,1";
  eval_rect->add_option("--m", rm)->required();
  eval_rect->add_option("--p", rp)->required();
  eval_rect->add_option("--q", rq)->required();
  eval_rect->add_option("--abc", abc);
  eval_rect->add_option("--prec", prec);

  // table ---------------------------------------------------------------
  auto* table = app.add_subcommand("table", "emit value tables");
  table->require_subcommand(1);
  auto* table_zs = table->add_subcommand("zetastar");
  int amax = 3, cmax = 3;
  std::string out_path;
  bool as_json = false;
  table_zs->add_option("--amax", amax);
  table_zs->add_option("--cmax", cmax);
  table_zs->add_option("--out", out_path);
  table_zs->add_flag("--json", as_json);
  auto* table_rect = table->add_subcommand("rect");
  int pmax = 3, qmax = 3;
  table_rect->add_option("--pmax", pmax);
  table_rect->add_option("--qmax", qmax);
  table_rect->add_option("--m", rm);
  table_rect->add_option("--abc", abc);
  table_rect->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    nvs::Config cfg = config_path.empty() ? nvs::Config()
                                          : nvs::Config::load_file(config_path);
    cfg.apply_env_overrides();
    nvs::apply_config(cfg);
    if (prec <= 0) prec = cfg.precision_digits;
    if (trunc_m < 0) trunc_m = cfg.truncation_m;
    opt.mode = mode;
    opt.slack = cfg.context_slack;
    opt.truncation_m = cfg.truncation_m;
    opt.mzv_match_n = cfg.mzv_match_n;
    if (verify->parsed()) return cmd_verify(suite, opt, json_path);
    if (eval_ninth->parsed())
      return cmd_eval_ninth(shape_text, r_opt, route, hash_only, opt.slack,
                            ninth_json, show_diagram);
    if (eval_zeta->parsed())
      return cmd_eval_zeta(shape_text, entries, diag, m_shift, trunc_m, prec);
    if (eval_rect->parsed()) return cmd_eval_rect(rm, rp, rq, abc, prec);
    if (table_zs->parsed())
      return cmd_table_zetastar(amax, cmax, out_path, as_json, prec);
    if (table_rect->parsed())
      return cmd_table_rect(pmax, qmax, rm, abc, out_path, prec);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
