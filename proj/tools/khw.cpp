// Command-line surface for the Khovanov width toolkit: homology tables,
// widths, tangle twisting, Turaev genus, quasi-alternating search, and the
// verification suites.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "khw/io.hpp"
#include "khw/parse.hpp"
#include "khw/suites.hpp"

using namespace khw;

namespace {

struct GlobalOpts {
  std::string ring = "Z";
  int budget = 22;
  bool reduced = false;
  int basepoint = -1;
  std::string format = "json";
  uint64_t seed = 0;
  std::string cache_dir;

  Ring parse_ring() const {
    if (ring == "Z") return Ring::z();
    if (ring == "Q") return Ring::q();
    if (ring == "F2") return Ring::f2();
    if (ring.rfind("Fp:", 0) == 0) return Ring::fp(std::stoi(ring.substr(3)));
    if (ring.size() > 1 && ring[0] == 'F') return Ring::fp(std::stoi(ring.substr(1)));
    throw parse_error("unknown ring `" + ring + "` (use Z, Q, F2 or Fp:<p>)");
  }
  HomologyOptions homology_opts() const {
    HomologyOptions o;
    o.budget = budget;
    o.reduced = reduced;
    return o;
  }
};

LinkDiagram load_input(const std::string& text, const GlobalOpts& g) {
  LinkDiagram d = parse_input(text);
  if (g.basepoint >= 0) d.basepoint = g.basepoint;
  if (g.reduced && d.basepoint < 0) d.basepoint = d.edge_labels().at(0);
  return d;
}

void print_homology(const BigradedGroups& h, const Ring& ring, const std::string& format) {
  if (format == "poincare") {
    std::cout << h.poincare() << "\n";
  } else if (format == "csv") {
    std::cout << homology_to_csv(h);
  } else {
    std::cout << homology_to_json(h, ring).dump(1) << "\n";
  }
}

int print_suite(const SuiteReport& rep) {
  for (const auto& c : rep.cases)
    std::printf("%-6s %s%s%s\n", c.pass ? "pass" : "FAIL", c.name.c_str(),
                c.detail.empty() ? "" : "  -- ", c.detail.c_str());
  std::printf("%s: %d/%zu cases passed\n", rep.suite.c_str(), rep.passed(),
              rep.cases.size());
  return rep.pass() ? 0 : 1;
}

nlohmann::json certificate_to_json(const QACertificate& c) {
  nlohmann::json j;
  j["det"] = c.det;
  switch (c.kind) {
    case QACertificate::UnknotLeaf: j["leaf"] = "unknot"; break;
    case QACertificate::AlternatingLeaf: j["leaf"] = "alternating-base"; break;
    case QACertificate::Resolution:
      j["crossing"] = c.crossing;
      j["children"] = {certificate_to_json(c.children[0]), certificate_to_json(c.children[1])};
      break;
  }
  j["diagram"] = diagram_to_json(c.diagram);
  return j;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Khovanov width toolkit for link diagrams and closed 3-braids"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOpts g;
  app.add_option("--ring", g.ring, "coefficients: Z, Q, F2 or Fp:<p>");
  app.add_option("--budget", g.budget, "crossing budget")->check(CLI::PositiveNumber);
  app.add_flag("--reduced", g.reduced, "reduced homology (needs a basepoint)");
  app.add_option("--basepoint", g.basepoint, "basepoint edge label");
  app.add_option("--format", g.format, "output format: json, csv or poincare")
      ->check(CLI::IsMember({"json", "csv", "poincare"}));
  app.add_option("--seed", g.seed, "seed for the randomized suites");
  app.add_option("--cache-dir", g.cache_dir, "content-addressed result cache directory");

  std::string input, tangle_text, suite_name;
  int at_crossing = 0, qa_depth = 64, max_q = 8;
  std::string n_range = "-2..2";

  auto* cmd_hom = app.add_subcommand("homology", "bigraded homology table");
  cmd_hom->add_option("input", input, "braid:..., pd:..., or form:...")->required();

  auto* cmd_width = app.add_subcommand("width", "delta-thickness and width");
  cmd_width->add_option("input", input)->required();

  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  cmd_verify
      ->add_option("suite", suite_name,
                   "torus, threebraid, twist, turaev, qa, axioms, mod2, polynomials")
      ->required();
  cmd_verify->add_option("--max-q", max_q, "torus suite: largest |q|");
  cmd_verify->add_option("--n-range", n_range, "threebraid suite: n range as a..b");

  auto* cmd_twist = app.add_subcommand("twist", "replace a crossing by a rational tangle");
  cmd_twist->add_option("input", input)->required();
  cmd_twist->add_option("--at", at_crossing, "crossing index")->required();
  cmd_twist->add_option("--tangle", tangle_text, "comma separated twist vector, e.g. 2,3,4")
      ->required();

  auto* cmd_turaev = app.add_subcommand("turaev", "Turaev surface genus of the diagram");
  cmd_turaev->add_option("input", input)->required();

  auto* cmd_predict = app.add_subcommand("predict", "closed-form predictions for a normal form");
  cmd_predict->add_option("form", input, "Murasugi normal form, e.g. \"h^2 * s2^-3\"")
      ->required();

  auto* cmd_qa = app.add_subcommand("qa", "quasi-alternating certificate search");
  cmd_qa->add_option("input", input)->required();
  cmd_qa->add_option("--depth", qa_depth, "search depth limit");

  CLI11_PARSE(app, argc, argv);

  try {
    Ring ring = g.parse_ring();
    HomologyOptions opt = g.homology_opts();

    if (cmd_hom->parsed()) {
      LinkDiagram d = load_input(input, g);
      BigradedGroups h = homology_cached(d, ring, opt, g.cache_dir);
      print_homology(h, ring, g.format);
    } else if (cmd_width->parsed()) {
      LinkDiagram d = load_input(input, g);
      BigradedGroups h = homology_cached(d, ring, opt, g.cache_dir);
      ThicknessInterval t = thickness(h);
      if (g.format == "json") {
        nlohmann::json j{{"delta_min", t.delta_min},
                         {"delta_max", t.delta_max},
                         {"width", t.width()},
                         {"ring", ring.str()}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << t.width() << "\n";
      }
    } else if (cmd_verify->parsed()) {
      HomologyOptions vopt;
      vopt.budget = g.budget;
      if (suite_name == "torus") return print_suite(suite_torus(max_q, vopt));
      if (suite_name == "threebraid") {
        auto dots = n_range.find("..");
        if (dots == std::string::npos) throw parse_error("--n-range expects a..b");
        int lo = std::stoi(n_range.substr(0, dots));
        int hi = std::stoi(n_range.substr(dots + 2));
        return print_suite(suite_threebraid(lo, hi, vopt));
      }
      return print_suite(run_suite(suite_name, g.seed, vopt));
    } else if (cmd_twist->parsed()) {
      LinkDiagram d = load_input(input, g);
      RationalTangle tau;
      for (detail_parse::Cursor cur{tangle_text}; !cur.done();) {
        tau.terms.push_back(cur.integer());
        cur.eat(',');
      }
      tau.validate();
      nlohmann::json j;
      j["tangle"] = tau.str();
      j["before"] = thickness(homology(d, ring, opt)).width();
      if (tau.alternating()) {
        AltTangleReport rep = verify_alt_tangle(d, at_crossing, tau, ring, opt);
        j["preserving"] = rep.precondition;
        if (rep.precondition) {
          j["after"] = rep.width_after;
          j["stages"] = rep.stage_widths;
          j["pass"] = rep.pass;
        } else {
          LinkDiagram t = twist(d, at_crossing, tau);
          j["after"] = thickness(homology(t, ring, opt)).width();
        }
      } else {
        LinkDiagram t = twist(d, at_crossing, tau);
        j["preserving"] = false;
        j["after"] = thickness(homology(t, ring, opt)).width();
      }
      std::cout << j.dump(1) << "\n";
    } else if (cmd_turaev->parsed()) {
      LinkDiagram d = load_input(input, g);
      TuraevReport r = turaev_genus_of_diagram(d);
      nlohmann::json j{{"c", r.c}, {"s0", r.s0}, {"s1", r.s1}, {"genus", r.genus}};
      std::cout << j.dump() << "\n";
    } else if (cmd_predict->parsed()) {
      MurasugiForm f = parse_form(input);
      nlohmann::json j;
      j["form"] = f.str();
      nlohmann::json p;
      if (auto t = predicted_thickness(f))
        p["thickness"] = {{"delta_min", t->delta_min}, {"delta_max", t->delta_max}};
      else
        p["thickness"] = "n=0: compute directly";
      if (auto w = predicted_width(f))
        p["width"] = *w;
      else
        p["width"] = "n=0: compute directly";
      p["qa"] = predicted_qa(f);
      if (auto tr = predicted_turaev(f))
        p["turaev"] = {{"lower", tr->first}, {"upper", tr->second}};
      else
        p["turaev"] = "n=0: compute directly";
      j["predicted"] = p;
      std::cout << j.dump(1) << "\n";
    } else if (cmd_qa->parsed()) {
      LinkDiagram d = load_input(input, g);
      QAResult r = qa_search(d, qa_depth);
      nlohmann::json j;
      j["certified"] = r.certified;
      if (r.certified) {
        j["valid"] = validate_certificate(*r.certificate);
        j["certificate"] = certificate_to_json(*r.certificate);
      } else {
        j["verdict"] = "unknown";
      }
      std::cout << j.dump(1) << "\n";
    }
  } catch (const budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
