#include <opd/algcheck.hpp>
#include <opd/catalog.hpp>
#include <opd/dsl.hpp>
#include <opd/quad.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::json;
using namespace opd;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// "NAME", "dup(NAME)", or "FILE#NAME" (a DSL file and a block inside it).
Presentation load_presentation(const std::string& spec) {
  auto hash = spec.find('#');
  if (hash != std::string::npos) {
    std::string path = spec.substr(0, hash);
    std::string name = spec.substr(hash + 1);
    for (auto& np : parse_operads(read_file(path)))
      if (np.name == name) return np.pres;
    throw std::runtime_error("no operad named '" + name + "' in " + path);
  }
  return eval_expr(spec);
}

json presentation_json(const Presentation& p) {
  json gens = json::array();
  for (int i = 0; i < p.gens.size(); ++i)
    gens.push_back({{"name", p.gens.names[i]}, {"tag", p.gens.tags[i]}});
  json action = json::array();
  if (p.gens.action) {
    for (int i = 0; i < p.gens.action->rows; ++i) {
      json row = json::array();
      for (int j = 0; j < p.gens.action->cols; ++j) row.push_back(rat_str(p.gens.action->at(i, j)));
      action.push_back(row);
    }
  }
  int n = p.gens.size();
  json rels = json::array();
  for (int r = 0; r < p.relations.basis.rows; ++r) {
    json rel = json::array();
    for (int c = 0; c < p.relations.basis.cols; ++c) {
      const Rat& coeff = p.relations.basis.at(r, c);
      if (coeff == 0) continue;
      int u = c / (n * n), i = (c / n) % n, j = c % n;
      rel.push_back({std::to_string(i), std::to_string(j), std::to_string(u), rat_str(coeff)});
    }
    rels.push_back(rel);
  }
  return {{"generators", gens},
          {"action", action},
          {"ambient_dim", p.relations.ambient_dim},
          {"relations", rels},
          {"closure_rank", p.relations.rank()}};
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

struct Common {
  std::string source;  // catalog name, expression, or FILE#NAME
  std::string json_path;
  bool print = false;
  bool ns = false;
};

void add_source_opts(CLI::App* cmd, Common& c) {
  cmd->add_option("expr", c.source, "catalog name, expression, or FILE#NAME");
  cmd->add_option("--catalog", c.source, "catalog name, expression, or FILE#NAME");
  cmd->add_option("--json", c.json_path, "write a JSON report to this path");
  cmd->add_flag("--print", c.print, "print the resulting presentation");
  cmd->add_flag("--ns", c.ns, "require nonsymmetric input");
}

Presentation load_common(const Common& c) {
  if (c.source.empty()) throw CLI::ValidationError("an input presentation is required");
  Presentation p = load_presentation(c.source);
  if (c.ns && p.gens.mode != Mode::nonsymmetric)
    throw std::runtime_error("input '" + c.source + "' is not nonsymmetric");
  return p;
}

void emit_presentation(const Common& c, const std::string& cmd, const std::string& name,
                       const Presentation& p) {
  if (c.print || c.json_path.empty()) std::cout << print_operad(name, p);
  if (!c.json_path.empty())
    write_json(c.json_path, {{"command", cmd}, {"input", c.source}, {"result", presentation_json(p)}});
}

const NamedAlgebra& pick_algebra(const std::vector<NamedAlgebra>& algs, const std::string& name) {
  if (algs.empty()) throw std::runtime_error("no algebra blocks in file");
  if (name.empty()) return algs.front();
  for (const auto& a : algs)
    if (a.name == name) return a;
  throw std::runtime_error("no algebra named '" + name + "'");
}

const Mat& pick_map(const NamedAlgebra& a, const std::string& name) {
  auto it = a.maps.find(name);
  if (it == a.maps.end()) throw std::runtime_error("no map named '" + name + "' in algebra " + a.name);
  return it->second;
}

std::map<std::string, std::string> parse_binding(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::runtime_error("binding entries look like gen=op");
    auto trim = [](std::string s) {
      auto a = s.find_first_not_of(" \t");
      auto b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string k = trim(item.substr(0, eq)), v = trim(item.substr(eq + 1));
    if (k.empty() || v.empty()) throw std::runtime_error("binding entries look like gen=op");
    out[k] = v;
  }
  return out;
}

std::string alg_block(const std::string& name, const FinAlgebra& a) {
  std::ostringstream out;
  out << "algebra " << name << " {\n  dim " << a.dim << ";\n";
  for (const auto& [op, t] : a.ops) {
    out << "  op " << op << " tensor [";
    for (int i = 0; i < a.dim; ++i) {
      out << (i ? ", [" : "[");
      for (int j = 0; j < a.dim; ++j) {
        out << (j ? ", [" : "[");
        for (int k = 0; k < a.dim; ++k)
          out << (k ? ", " : "") << t[(i * a.dim + j) * a.dim + k];
        out << "]";
      }
      out << "]";
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

int report_bool(const std::string& cmd, const std::string& label, bool pass,
                const std::string& json_path, json extra = json::object()) {
  std::cout << label << " : " << (pass ? "PASS" : "FAIL") << "\n";
  if (!json_path.empty()) {
    json j = {{"command", cmd}, {"result", pass}};
    j.update(extra);
    write_json(json_path, j);
  }
  return pass ? kExitTrue : kExitFalse;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculator for replicators, successors, and Koszul duals of binary quadratic operads"};
  app.require_subcommand(1);

  Common dup_c, tri_c, bsu_c, tsu_c, dual_c, dc_c, tdc_c;
  auto* dup_cmd = app.add_subcommand("dup", "duplicator of a presentation");
  auto* tri_cmd = app.add_subcommand("tri", "triplicator of a presentation");
  auto* bsu_cmd = app.add_subcommand("bsu", "bisuccessor of a presentation");
  auto* tsu_cmd = app.add_subcommand("tsu", "trisuccessor of a presentation");
  auto* dual_cmd = app.add_subcommand("dual", "Koszul dual of a presentation");
  add_source_opts(dup_cmd, dup_c);
  add_source_opts(tri_cmd, tri_c);
  add_source_opts(bsu_cmd, bsu_c);
  add_source_opts(tsu_cmd, tsu_c);
  add_source_opts(dual_cmd, dual_c);

  std::string eq_left, eq_right, eq_map, eq_json;
  auto* eq_cmd = app.add_subcommand("eq", "presentation equality through a generator map");
  eq_cmd->add_option("--left", eq_left, "left expression")->required();
  eq_cmd->add_option("--right", eq_right, "right expression")->required();
  eq_cmd->add_option("--map", eq_map, "right generators -> left generators")->required();
  eq_cmd->add_option("--json", eq_json, "write a JSON report");

  std::string mo_src, mo_dst, mo_map, mo_json;
  auto* mo_cmd = app.add_subcommand("morphism", "verify an operad morphism on generators");
  mo_cmd->add_option("--src", mo_src, "source expression")->required();
  mo_cmd->add_option("--dst", mo_dst, "target expression")->required();
  mo_cmd->add_option("--map", mo_map, "source generators -> target generators")->required();
  mo_cmd->add_option("--json", mo_json, "write a JSON report");

  auto* dc_cmd = app.add_subcommand("duality-check", "Du(P)! = BSu(P!)");
  auto* tdc_cmd = app.add_subcommand("tridality-check", "Tri(P)! = TSu(P!)");
  add_source_opts(dc_cmd, dc_c);
  add_source_opts(tdc_cmd, tdc_c);

  std::string ac_file, ac_alg, ac_operad, ac_bind, ac_json;
  auto* ac_cmd = app.add_subcommand("alg-check", "check a finite-dimensional algebra against a presentation");
  ac_cmd->add_option("file", ac_file, "algebra file")->required();
  ac_cmd->add_option("--algebra", ac_alg, "algebra block name (default: first)");
  ac_cmd->add_option("--operad", ac_operad, "presentation expression")->required();
  ac_cmd->add_option("--bind", ac_bind, "generator=op bindings, semicolon separated");
  ac_cmd->add_option("--json", ac_json, "write a JSON report");

  std::string av_file, av_alg, av_op, av_map, av_json, av_weight = "1";
  bool av_tri = false;
  auto* av_cmd = app.add_subcommand("avg-check", "check an average operator on an algebra");
  av_cmd->add_option("file", av_file, "algebra file")->required();
  av_cmd->add_option("--algebra", av_alg, "algebra block name (default: first)");
  av_cmd->add_option("--op", av_op, "operation name")->required();
  av_cmd->add_option("--map", av_map, "operator name from the file")->required();
  av_cmd->add_flag("--tri", av_tri, "check the tri-average identities");
  av_cmd->add_option("--weight", av_weight, "tri-average weight (default 1)");
  av_cmd->add_option("--json", av_json, "write a JSON report");

  std::string rp_file, rp_alg, rp_map, rp_json;
  bool rp_tri = false;
  auto* rp_cmd = app.add_subcommand("replicate", "split every operation through an average operator");
  rp_cmd->add_option("file", rp_file, "algebra file")->required();
  rp_cmd->add_option("--algebra", rp_alg, "algebra block name (default: first)");
  rp_cmd->add_option("--map", rp_map, "operator name from the file")->required();
  rp_cmd->add_flag("--tri", rp_tri, "tri splitting (adds the _perp ops)");
  rp_cmd->add_option("--json", rp_json, "write a JSON report");

  auto* cat_cmd = app.add_subcommand("catalog", "built-in presentations");
  auto* cat_list = cat_cmd->add_subcommand("list", "names and provenance");
  std::string cat_name, cat_json;
  auto* cat_show = cat_cmd->add_subcommand("show", "print one entry");
  cat_show->add_option("name", cat_name, "entry name")->required();
  auto* cat_verify = cat_cmd->add_subcommand("verify-all", "run the identity table");
  cat_verify->add_option("--json", cat_json, "write a JSON report");
  cat_cmd->require_subcommand(1);

  std::string pa_file, pa_json;
  bool pa_print = false;
  auto* pa_cmd = app.add_subcommand("parse", "parse a DSL file and report");
  pa_cmd->add_option("file", pa_file, "operad or algebra file")->required();
  pa_cmd->add_flag("--print", pa_print, "print the canonical form");
  pa_cmd->add_option("--json", pa_json, "write a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitTrue : kExitUsage;
  }

  try {
    if (*dup_cmd) {
      emit_presentation(dup_c, "dup", "Du", duplicator(load_common(dup_c)));
    } else if (*tri_cmd) {
      emit_presentation(tri_c, "tri", "Tri", triplicator(load_common(tri_c)));
    } else if (*bsu_cmd) {
      emit_presentation(bsu_c, "bsu", "BSu", bisuccessor(load_common(bsu_c)));
    } else if (*tsu_cmd) {
      emit_presentation(tsu_c, "tsu", "TSu", trisuccessor(load_common(tsu_c)));
    } else if (*dual_cmd) {
      emit_presentation(dual_c, "dual", "Dual", koszul_dual(load_common(dual_c)));
    } else if (*eq_cmd) {
      Presentation l = load_presentation(eq_left);
      Presentation r = load_presentation(eq_right);
      GenMap m = parse_genmap(eq_map, r.gens, l.gens);
      bool pass = equal_presentations(r, l, m);
      return report_bool("eq", eq_left + " = " + eq_right, pass, eq_json,
                         {{"left", eq_left}, {"right", eq_right}});
    } else if (*mo_cmd) {
      Presentation s = load_presentation(mo_src);
      Presentation d = load_presentation(mo_dst);
      GenMap m = parse_genmap(mo_map, s.gens, d.gens);
      bool pass = verify_morphism(s, d, m);
      return report_bool("morphism", mo_src + " -> " + mo_dst, pass, mo_json,
                         {{"src", mo_src}, {"dst", mo_dst}});
    } else if (*dc_cmd || *tdc_cmd) {
      const Common& c = *dc_cmd ? dc_c : tdc_c;
      Presentation p = load_common(c);
      DualityReport rep = *dc_cmd ? duality_check(p) : tridality_check(p);
      std::string label = *dc_cmd ? "Du(" + c.source + ")! = BSu(" + c.source + "!)"
                                  : "Tri(" + c.source + ")! = TSu(" + c.source + "!)";
      json extra = {{"applicable", rep.applicable},
                    {"replicated_rank", rep.replicated_rank},
                    {"ambient_dim", rep.ambient_dim}};
      if (!rep.applicable)
        std::cout << "zero relation space: successor span has rank " << rep.replicated_rank
                  << " in ambient dimension " << rep.ambient_dim << "\n";
      return report_bool(*dc_cmd ? "duality-check" : "tridality-check", label, rep.holds,
                         c.json_path, extra);
    } else if (*ac_cmd) {
      auto algs = parse_algebras(read_file(ac_file));
      const NamedAlgebra& a = pick_algebra(algs, ac_alg);
      Presentation p = load_presentation(ac_operad);
      bool pass = check_algebra(a.alg, p, parse_binding(ac_bind));
      return report_bool("alg-check", a.name + " |= " + ac_operad, pass, ac_json,
                         {{"algebra", a.name}, {"operad", ac_operad}});
    } else if (*av_cmd) {
      auto algs = parse_algebras(read_file(av_file));
      const NamedAlgebra& a = pick_algebra(algs, av_alg);
      const Mat& p = pick_map(a, av_map);
      bool pass = av_tri ? is_tri_average(a.alg, av_op, p, Rat(av_weight))
                         : is_di_average(a.alg, av_op, p);
      std::string label = std::string(av_tri ? "tri" : "di") + "-average " + av_map + " on " + av_op;
      return report_bool("avg-check", label, pass, av_json,
                         {{"algebra", a.name}, {"op", av_op}, {"map", av_map}, {"tri", av_tri}});
    } else if (*rp_cmd) {
      auto algs = parse_algebras(read_file(rp_file));
      const NamedAlgebra& a = pick_algebra(algs, rp_alg);
      const Mat& p = pick_map(a, rp_map);
      FinAlgebra out = rp_tri ? replicate_tri(a.alg, p) : replicate_di(a.alg, p);
      std::string name = a.name + (rp_tri ? "_tri" : "_di");
      std::cout << alg_block(name, out);
      if (!rp_json.empty()) {
        json ops = json::array();
        for (const auto& [op, t] : out.ops) {
          json flat = json::array();
          for (const Rat& v : t) flat.push_back(rat_str(v));
          ops.push_back({{"name", op}, {"tensor", flat}});
        }
        write_json(rp_json, {{"command", "replicate"}, {"result", {{"dim", out.dim}, {"ops", ops}}}});
      }
    } else if (*cat_cmd) {
      if (*cat_list) {
        for (const auto& e : catalog_entries()) std::cout << e.name << "\t" << e.provenance << "\n";
      } else if (*cat_show) {
        const CatalogEntry& e = catalog_get(cat_name);
        std::cout << print_operad(e.name, e.pres);
      } else {
        auto results = run_identity_table();
        bool all = true;
        json rows = json::array();
        for (const auto& r : results) {
          all = all && r.pass;
          std::cout << (r.pass ? "PASS " : "FAIL ") << r.row.note << "\n";
          rows.push_back({{"note", r.row.note}, {"pass", r.pass}});
        }
        std::cout << (all ? "all identities verified" : "some identities FAILED") << "\n";
        if (!cat_json.empty())
          write_json(cat_json, {{"command", "catalog verify-all"}, {"result", all}, {"rows", rows}});
        return all ? kExitTrue : kExitFalse;
      }
    } else if (*pa_cmd) {
      std::string text = read_file(pa_file);
      json blocks = json::array();
      if (text.find("algebra") != std::string::npos && text.find("operad") == std::string::npos) {
        for (const auto& a : parse_algebras(text)) {
          std::cout << "algebra " << a.name << ": dim " << a.alg.dim << ", " << a.alg.ops.size()
                    << " ops, " << a.maps.size() << " maps\n";
          blocks.push_back({{"name", a.name}, {"kind", "algebra"}, {"dim", a.alg.dim}});
        }
      } else {
        for (const auto& np : parse_operads(text)) {
          if (pa_print)
            std::cout << print_operad(np.name, np.pres);
          else
            std::cout << "operad " << np.name << ": " << np.pres.gens.size() << " generators, rank "
                      << np.pres.relations.rank() << " of " << np.pres.relations.ambient_dim << "\n";
          blocks.push_back(
              {{"name", np.name}, {"kind", "operad"}, {"result", presentation_json(np.pres)}});
        }
      }
      if (!pa_json.empty()) write_json(pa_json, {{"command", "parse"}, {"blocks", blocks}});
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitTrue;
}
