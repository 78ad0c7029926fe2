#include "invcurve/cli/app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "invcurve/cli/dsl.hpp"
#include "invcurve/darboux/darboux.hpp"
#include "invcurve/forms/forms.hpp"
#include "invcurve/lv/lv.hpp"
#include "invcurve/minimality/minimality.hpp"
#include "invcurve/numeric/numeric.hpp"

namespace invcurve {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SystemOptions {
  std::string path;
  std::vector<std::string> sets;
};

void add_system_options(CLI::App* cmd, SystemOptions& opts) {
  cmd->add_option("--system", opts.path, "system file in the DSL")->required();
  cmd->add_option("--set", opts.sets, "specialize a parameter, name=value")->take_all();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

mpq_class parse_rational(const std::string& text) {
  Scalar s;
  try {
    s = dsl::parse_scalar(text);
  } catch (const Error&) {
    throw UsageError("not a rational number: " + text);
  }
  if (!s.is_rational()) throw UsageError("not a rational number: " + text);
  return s.to_rational();
}

struct LoadedSystem {
  std::string text;
  std::map<std::string, mpq_class> sets;
  VectorField field;
};

LoadedSystem load(const SystemOptions& opts) {
  LoadedSystem out;
  out.text = read_file(opts.path);
  for (const auto& item : opts.sets) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--set expects name=value, got " + item);
    out.sets[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
  }
  out.field = dsl::to_vector_field(dsl::parse_system(out.text), out.sets);
  return out;
}

ordered_json system_input(const LoadedSystem& sys) {
  ordered_json in;
  in["system"] = sys.field.to_string();
  ordered_json sets = ordered_json::object();
  for (const auto& [k, v] : sys.sets) sets[k] = v.get_str();
  in["set"] = sets;
  return in;
}

ordered_json strings(const std::vector<Scalar>& xs) {
  ordered_json out = ordered_json::array();
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

ordered_json points_json(const std::vector<std::vector<Scalar>>& points) {
  ordered_json out = ordered_json::array();
  for (const auto& p : points) out.push_back(strings(p));
  return out;
}

ordered_json darboux_json(const DarbouxReport& r) {
  ordered_json out;
  out["degree_bound"] = r.degree_bound;
  out["completeness"] = completeness_name(r.completeness);
  out["curves"] = ordered_json::array();
  for (const auto& c : r.curves) {
    out["curves"].push_back(
        {{"polynomial", c.poly.to_string()}, {"cofactor", c.cofactor.to_string()}, {"field", c.field.to_string()}});
  }
  out["branching_conditions"] = strings(r.branching_conditions);
  out["pencils"] = ordered_json::array();
  for (const auto& p : r.pencils) {
    ordered_json basis = ordered_json::array();
    for (const auto& b : p.basis) basis.push_back(b.to_string());
    out["pencils"].push_back({{"cofactor", p.cofactor.to_string()}, {"basis", basis}});
  }
  return out;
}

ordered_json minimality_json(const MinimalityReport& r) {
  ordered_json out;
  out["verdict"] = verdict_name(r.verdict);
  out["witness"] = r.witness ? strings(*r.witness) : ordered_json(nullptr);
  out["singular_points"] = points_json(r.singular_points);
  out["curves"] = darboux_json(r.curves_checked);
  return out;
}

ordered_json caveats_json(const std::vector<std::string>& caveats) { return ordered_json(caveats); }

void emit(std::ostream& out, const std::string& command, ordered_json input, ordered_json result,
          ordered_json caveats = ordered_json::array()) {
  ordered_json doc;
  doc["command"] = command;
  doc["input"] = std::move(input);
  doc["result"] = std::move(result);
  doc["caveats"] = std::move(caveats);
  out << doc.dump(2) << "\n";
}

DForm parse_form(const std::vector<std::string>& terms, const std::vector<std::string>& vars) {
  DForm form;
  bool first = true;
  for (const auto& item : terms) {
    auto colon = item.rfind(':');
    if (colon == std::string::npos) throw UsageError("--term expects coefficient:vars, got " + item);
    RatFunc coefficient = dsl::parse_ratfunc(item.substr(0, colon), vars);
    DForm::Index index;
    std::stringstream ss(item.substr(colon + 1));
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (name.empty()) continue;
      auto it = std::find(vars.begin(), vars.end(), name);
      if (it == vars.end()) throw UsageError("unknown variable " + name + " in --term");
      index.push_back(static_cast<unsigned>(it - vars.begin()));
    }
    DForm term = DForm::term(vars, coefficient, index);
    if (first) {
      form = term;
      first = false;
    } else if (term.arity() != form.arity()) {
      throw UsageError("all --term entries must have the same degree");
    } else {
      form = form + term;
    }
  }
  if (first) throw UsageError("forms-check needs at least one --term");
  return form;
}

Scalar scalar_arg(const std::string& text) {
  try {
    return dsl::parse_scalar(text);
  } catch (const Error&) {
    throw UsageError("not a scalar expression: " + text);
  }
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariant curves and strong minimality of planar polynomial vector fields", "invcurve"};
  app.require_subcommand(1);

  SystemOptions sys_opts;

  auto* lie = app.add_subcommand("lie", "Lie derivative of an expression along the system");
  add_system_options(lie, sys_opts);
  std::string expression;
  lie->add_option("--expr", expression, "expression in the system variables")->required();

  auto* darboux = app.add_subcommand("darboux", "invariant algebraic curves up to a degree bound");
  add_system_options(darboux, sys_opts);
  unsigned max_degree = 0;
  darboux->add_option("--max-degree", max_degree)->default_val(2);

  auto* singular = app.add_subcommand("singular", "rational singular points");
  add_system_options(singular, sys_opts);

  auto* minimality = app.add_subcommand("minimality", "singular-point criterion for strong minimality");
  add_system_options(minimality, sys_opts);
  minimality->add_option("--max-degree", max_degree)->default_val(3);

  auto* forms = app.add_subcommand("forms-check", "is a differential form invariant");
  add_system_options(forms, sys_opts);
  std::vector<std::string> terms;
  forms->add_option("--term", terms, "coefficient:vars, e.g. 1+b/y:y or 1/(x*y):x,y")->required()->take_all();

  auto* analyze = app.add_subcommand("lv-analyze", "full analysis of a Lotka-Volterra system");
  std::string a = "a", b = "b", c = "c", d = "d", variant = "classical";
  analyze->add_option("--a", a)->default_val("a");
  analyze->add_option("--b", b)->default_val("b");
  analyze->add_option("--c", c)->default_val("c");
  analyze->add_option("--d", d)->default_val("d");
  analyze->add_option("--variant", variant)->check(CLI::IsMember({"classical", "2d"}))->default_val("classical");
  analyze->add_option("--max-degree", max_degree)->default_val(3);

  auto* ortho = app.add_subcommand("lv-ortho", "affine relations between two normalized systems");
  std::string b1, d1, b2, d2;
  ortho->add_option("--b1", b1)->required();
  ortho->add_option("--d1", d1)->required();
  ortho->add_option("--b2", b2)->required();
  ortho->add_option("--d2", d2)->required();

  auto* simulate = app.add_subcommand("simulate", "fixed-step RK4 trajectory");
  add_system_options(simulate, sys_opts);
  double x0 = 0, y0 = 0, t_end = 1, step = 1e-3;
  bool csv = false;
  simulate->add_option("--x0", x0)->required();
  simulate->add_option("--y0", y0)->required();
  simulate->add_option("--t-end", t_end)->default_val(1.0);
  simulate->add_option("--step", step)->default_val(1e-3);
  simulate->add_flag("--csv", csv, "emit t,x,y rows");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (lie->parsed()) {
      LoadedSystem sys = load(sys_opts);
      RatFunc f = dsl::parse_ratfunc(expression, sys.field.variables());
      RatFunc l = lie_derivative(sys.field, f);
      ordered_json in = system_input(sys);
      in["expr"] = f.to_string();
      ordered_json result;
      result["lie_derivative"] = l.to_string();
      std::optional<MultiPoly> cofactor;
      if (f.is_polynomial() && !f.is_zero() && sys.field.is_polynomial()) cofactor = is_invariant(sys.field, f.as_polynomial());
      result["invariant"] = cofactor.has_value();
      result["cofactor"] = cofactor ? ordered_json(cofactor->to_string()) : ordered_json(nullptr);
      emit(out, "lie", in, result);
    } else if (darboux->parsed()) {
      LoadedSystem sys = load(sys_opts);
      DarbouxReport r = darboux_search(sys.field, max_degree);
      ordered_json in = system_input(sys);
      in["max_degree"] = max_degree;
      emit(out, "darboux", in, darboux_json(r), caveats_json(r.caveats));
    } else if (singular->parsed()) {
      LoadedSystem sys = load(sys_opts);
      SingularPointSet pts = singular_points(sys.field);
      ordered_json result;
      result["points"] = points_json(pts.points);
      result["nonrational_discarded"] = pts.nonrational_discarded;
      result["certified"] = pts.certified;
      std::vector<std::string> caveats;
      if (pts.nonrational_discarded) caveats.push_back("NONRATIONAL_POINTS_DISCARDED");
      if (!pts.certified) caveats.push_back("SINGULAR_POINTS_UNCERTIFIED");
      emit(out, "singular", system_input(sys), result, caveats_json(caveats));
    } else if (minimality->parsed()) {
      LoadedSystem sys = load(sys_opts);
      MinimalityReport r = check_strong_minimality(sys.field, max_degree);
      ordered_json in = system_input(sys);
      in["max_degree"] = max_degree;
      emit(out, "minimality", in, minimality_json(r), caveats_json(r.caveats));
    } else if (forms->parsed()) {
      LoadedSystem sys = load(sys_opts);
      DForm w = parse_form(terms, sys.field.variables());
      DForm l = lie_derivative_form(sys.field, w);
      ordered_json in = system_input(sys);
      in["form"] = w.to_string();
      ordered_json result;
      result["lie_derivative"] = l.to_string();
      result["invariant"] = l.is_zero();
      emit(out, "forms-check", in, result);
    } else if (analyze->parsed()) {
      LVSystem lvs = LVSystem::make(scalar_arg(a), scalar_arg(b), scalar_arg(c), scalar_arg(d),
                                    variant == "2d" ? LVSystem::Variant::TwoD : LVSystem::Variant::Classical);
      VectorField s = lvs.field();
      MinimalityReport r = check_strong_minimality(s, max_degree);
      ordered_json in;
      in["a"] = lvs.a.to_string();
      in["b"] = lvs.b.to_string();
      in["c"] = lvs.c.to_string();
      in["d"] = lvs.d.to_string();
      in["variant"] = variant;
      in["max_degree"] = max_degree;
      ordered_json result;
      result["system"] = lvs.to_string();
      result["field"] = s.to_string();
      result["minimality"] = minimality_json(r);
      if (lvs.variant == LVSystem::Variant::Classical) {
        result["normalized"] = lv_scale_transform(lvs).target.to_string();
        if (lvs.b == lvs.d) {
          InvariantCurve fam = invariant_family_b_eq_d(lvs.a, lvs.b, lvs.c);
          result["family"] = {{"polynomial", fam.poly.to_string()},
                              {"cofactor", fam.cofactor.to_string()},
                              {"field", fam.field.to_string()}};
        }
      }
      emit(out, "lv-analyze", in, result, caveats_json(r.caveats));
    } else if (ortho->parsed()) {
      Scalar sb1 = scalar_arg(b1), sd1 = scalar_arg(d1), sb2 = scalar_arg(b2), sd2 = scalar_arg(d2);
      auto sols = enumerate_transform_solutions(sb1, sd1, sb2, sd2);
      ordered_json in{{"b1", sb1.to_string()}, {"d1", sd1.to_string()}, {"b2", sb2.to_string()}, {"d2", sd2.to_string()}};
      ordered_json list = ordered_json::array();
      for (const auto& sol : sols) {
        list.push_back({{"case", case_name(sol.tag)},
                        {"e", sol.e.to_string()},
                        {"f", sol.f.to_string()},
                        {"constraints", strings(sol.constraints)}});
      }
      emit(out, "lv-ortho", in, {{"solutions", list}});
    } else if (simulate->parsed()) {
      LoadedSystem sys = load(sys_opts);
      Trajectory t = integrate_rk4(sys.field, {x0, y0}, t_end, step);
      if (csv) {
        out << "t,x,y\n";
        for (std::size_t i = 0; i < t.times.size(); ++i) {
          out << format_double(t.times[i]) << "," << format_double(t.states[i][0]) << ","
              << format_double(t.states[i][1]) << "\n";
        }
      } else {
        ordered_json in = system_input(sys);
        in["start"] = {x0, y0};
        in["t_end"] = t_end;
        in["step"] = step;
        ordered_json result;
        result["stop_reason"] = stop_reason_name(t.stop);
        result["steps"] = t.times.size() - 1;
        result["final_time"] = t.times.back();
        result["final_state"] = {t.states.back()[0], t.states.back()[1]};
        emit(out, "simulate", in, result);
      }
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << kind_name(e.kind()) << ": " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace invcurve
