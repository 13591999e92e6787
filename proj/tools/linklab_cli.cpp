// Command-line interface: builds the scenario links, computes mu-bar tables,
// runs the Seifert-condition checkers, verifies the Lagrangian-triviality
// theorem, and applies surgery move scripts.
//
// Exit codes: 0 = all checks pass, 1 = a checked condition failed,
// 2 = invalid input.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "linklab/linklab.hpp"

using namespace linklab;
using nlohmann::json;

namespace {

int parse_sign(const std::string& s, const std::string& what) {
  if (s == "+" || s == "+1" || s == "1") return 1;
  if (s == "-" || s == "-1") return -1;
  throw CLI::ValidationError(what + " must be + or -");
}

std::pair<int, int> parse_parallels(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw CLI::ValidationError("--parallels expects k,j");
  int k = std::stoi(s.substr(0, comma));
  int j = std::stoi(s.substr(comma + 1));
  if (k < 1 || j < 1) throw CLI::ValidationError("--parallels entries must be >= 1");
  return {k, j};
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    out << j.dump(2) << "\n";
  }
}

void print_condition_text(const ConditionReport& rep) {
  std::cout << rep.condition << ": " << (rep.pass ? "pass" : "fail") << "\n";
  for (const auto& w : rep.witnesses)
    std::cout << "  " << w.what << " at " << w.where << " = " << w.value << "\n";
}

void print_mu_text(const MilnorReport& rep) {
  std::cout << "mu-bar table (max length " << rep.max_length << ")\n";
  for (const auto& v : rep.values) {
    std::cout << "  mu(";
    for (size_t i = 0; i < v.sequence.size(); ++i)
      std::cout << (i ? "," : "") << v.sequence[i];
    std::cout << ") = " << v.value;
    if (v.modulus != 0) std::cout << " (mod " << v.modulus << ")";
    std::cout << "\n";
  }
  if (rep.first_nonvanishing) {
    std::cout << "first nonvanishing: mu(";
    for (size_t i = 0; i < rep.first_nonvanishing->sequence.size(); ++i)
      std::cout << (i ? "," : "") << rep.first_nonvanishing->sequence[i];
    std::cout << ") = " << rep.first_nonvanishing->value << "\n";
  } else {
    std::cout << "all values vanish\n";
  }
}

ScenarioSpec scenario_from_options(const std::string& family, const std::string& parallels,
                                   const std::string& clasp_inner,
                                   const std::string& clasp_outer) {
  ScenarioSpec spec;
  spec.family = family;
  auto [k, j] = parse_parallels(parallels);
  spec.parallels_1 = k;
  spec.parallels_2 = j;
  spec.clasp_inner = parse_sign(clasp_inner, "--clasp-inner");
  spec.clasp_outer = parse_sign(clasp_outer, "--clasp-outer");
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linklab: universal surgery links, mu-bar invariants, and Seifert conditions"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // ---- build ----
  auto* build = app.add_subcommand("build", "Construct a primitive or a universal link");
  std::string b_family, b_primitive, b_parallels = "2,2", b_inner = "+", b_outer = "-",
              b_out;
  build->add_option("--family", b_family, "2a | 2b | 2b-simplified | 2c");
  build->add_option("--primitive", b_primitive, "unknot | hopf | whitehead-link | borromean");
  build->add_option("--parallels", b_parallels, "k,j parallel copy counts");
  build->add_option("--clasp-inner", b_inner, "inner clasp sign (+/-)");
  build->add_option("--clasp-outer", b_outer, "outer clasp sign (+/-)");
  build->add_option("--out", b_out, "output file (default stdout)");

  // ---- mu ----
  auto* mu = app.add_subcommand("mu", "mu-bar table of a diagram");
  std::string m_in;
  int m_maxlen = 0;
  mu->add_option("--in", m_in, "diagram JSON file")->required();
  mu->add_option("--max-length", m_maxlen, "maximum sequence length (default: components)");

  // ---- check ----
  auto* check = app.add_subcommand("check", "Seifert-condition checkers");
  std::string c_system, c_in, c_condition, c_parallels = "2,2", c_inner = "+", c_outer = "-";
  check->add_option("--system", c_system, "fig9 | banded | natural");
  check->add_option("--in", c_in, "curve system JSON file");
  check->add_option("--condition", c_condition,
                    "good-block | extended | trivial | trivial-plus")
      ->required();
  check->add_option("--parallels", c_parallels, "k,j for banded/natural");
  check->add_option("--clasp-inner", c_inner, "inner clasp sign");
  check->add_option("--clasp-outer", c_outer, "outer clasp sign");

  // ---- theorem1 ----
  auto* th = app.add_subcommand("theorem1", "Lagrangian-triviality verification pipeline");
  std::string t_parallels = "2,2", t_inner = "+", t_outer = "-";
  th->add_option("--parallels", t_parallels, "k,j total copy counts");
  th->add_option("--clasp-inner", t_inner, "inner WhL clasp sign");
  th->add_option("--clasp-outer", t_outer, "outer Wh clasp sign");

  // ---- fig9 ----
  auto* f9 = app.add_subcommand("fig9", "Extended-form example checks");

  // ---- kirby ----
  auto* kb = app.add_subcommand("kirby", "Apply a surgery move script");
  std::string k_in, k_script, k_out;
  kb->add_option("--in", k_in, "surgery presentation JSON")->required();
  kb->add_option("--script", k_script, "move script JSON")->required();
  kb->add_option("--out", k_out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build) {
      Diagram d;
      if (!b_primitive.empty()) {
        std::string name = b_primitive == "whitehead-link" ? "whitehead_link" : b_primitive;
        d = build_primitive({name, parse_sign(b_inner, "--clasp-inner"), 1});
      } else if (!b_family.empty()) {
        d = build_universal_link(scenario_from_options(b_family, b_parallels, b_inner, b_outer));
      } else {
        std::cerr << "build: need --family or --primitive\n";
        return 2;
      }
      emit(to_json(d), b_out);
      return 0;
    }

    if (*mu) {
      Diagram d = diagram_from_json(load_json(m_in));
      require_valid(d);
      int maxlen = m_maxlen > 0 ? m_maxlen : static_cast<int>(d.components.size());
      MilnorReport rep = mu_table(d, maxlen);
      if (format == "json")
        std::cout << to_json(rep).dump(2) << "\n";
      else
        print_mu_text(rep);
      return 0;
    }

    if (*check) {
      CurveSystem cs;
      if (c_system == "fig9") {
        cs = fig9_example();
      } else if (c_system == "banded" || c_system == "natural") {
        ScenarioSpec spec =
            scenario_from_options("2b-simplified", c_parallels, c_inner, c_outer);
        cs = c_system == "banded" ? banded_system(spec) : natural_system(spec);
      } else if (!c_in.empty()) {
        cs = curve_system_from_json(load_json(c_in));
      } else {
        std::cerr << "check: need --system or --in\n";
        return 2;
      }
      ConditionReport rep;
      if (c_condition == "good-block")
        rep = is_good_block_form(seifert_matrix_of(cs));
      else if (c_condition == "extended")
        rep = is_extended_form(seifert_matrix_of(cs));
      else if (c_condition == "trivial")
        rep = check_lagrangian_trivial(cs);
      else if (c_condition == "trivial-plus")
        rep = check_lagrangian_trivial_plus(cs);
      else {
        std::cerr << "check: unknown condition " << c_condition << "\n";
        return 2;
      }
      if (format == "json")
        std::cout << to_json(rep).dump(2) << "\n";
      else
        print_condition_text(rep);
      return rep.pass ? 0 : 1;
    }

    if (*th) {
      ScenarioSpec spec = scenario_from_options("2b-simplified", t_parallels, t_inner, t_outer);
      Theorem1Report rep = verify_theorem1(spec);
      if (format == "json")
        std::cout << to_json(rep).dump(2) << "\n";
      else {
        std::cout << "lagrangian components: " << rep.lagrangian_component_count << "\n"
                  << "banded Lagrangian homotopically trivial: "
                  << (rep.banded_lagrangian_trivial ? "yes" : "no") << "\n"
                  << "natural Lagrangian homotopically trivial: "
                  << (rep.natural_lagrangian_trivial ? "yes" : "no") << "\n";
        print_condition_text(rep.plus_verdict);
        std::cout << "handle slides preserve 0-framings: "
                  << (rep.surgery_framings_preserved ? "yes" : "no") << "\n"
                  << "handle slides preserve H1: " << (rep.surgery_h1_preserved ? "yes" : "no")
                  << "\n";
      }
      bool ok = rep.banded_lagrangian_trivial && !rep.natural_lagrangian_trivial &&
                !rep.plus_verdict.pass && rep.surgery_framings_preserved &&
                rep.surgery_h1_preserved;
      return ok ? 0 : 1;
    }

    if (*f9) {
      CurveSystem cs = fig9_example();
      SeifertMatrix v = seifert_matrix_of(cs);
      ConditionReport ext = is_extended_form(v);
      ConditionReport good = is_good_block_form(v);
      ConditionReport plus = check_lagrangian_trivial_plus(cs);
      bool ok = ext.pass && !good.pass && plus.pass;
      if (format == "json") {
        std::cout << json{{"matrix", to_json(v)},
                          {"extended_form", to_json(ext)},
                          {"good_block_form", to_json(good)},
                          {"trivial_plus", to_json(plus)}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << "Seifert matrix:\n";
        for (const auto& row : v.entries) {
          std::cout << " ";
          for (auto e : row) std::cout << " " << e;
          std::cout << "\n";
        }
        print_condition_text(ext);
        print_condition_text(good);
        print_condition_text(plus);
      }
      return ok ? 0 : 1;
    }

    if (*kb) {
      SurgeryPresentation sp = surgery_from_json(load_json(k_in));
      require_valid(sp.diagram);
      json script = load_json(k_script);
      for (const auto& mv : script) {
        std::string kind = mv.at("move").get<std::string>();
        if (kind == "slide") {
          sp = handle_slide(sp, mv.at("component").get<std::string>(),
                            mv.at("over").get<std::string>(), mv.value("band_pos", 0),
                            mv.value("band_pos_over", 0));
        } else if (kind == "blow") {
          std::string dir = mv.at("direction").get<std::string>();
          if (dir == "down") {
            sp = blow_down(sp, mv.at("component").get<std::string>());
          } else {
            BlowSite site;
            site.unknot_label = mv.at("label").get<std::string>();
            site.sign = mv.at("sign").get<int>();
            if (mv.contains("targets"))
              for (const auto& t : mv.at("targets"))
                site.targets.push_back({t.at("component").get<std::string>(),
                                        t.at("pos").get<int>(), t.value("dir", 1)});
            sp = blow_up(sp, site);
          }
        } else {
          std::cerr << "kirby: unknown move " << kind << "\n";
          return 2;
        }
      }
      json out = to_json(sp);
      out["h1"] = to_json(h1_surgery(sp));
      emit(out, k_out);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
