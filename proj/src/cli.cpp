#include "arrfree/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "arrfree/io.hpp"
#include "arrfree/render.hpp"

namespace arrfree {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::FieldMismatch:
      return kExitFieldMismatch;
    case ErrorKind::SelfCheck:
      return kExitSelfCheck;
    case ErrorKind::NotDrawable:
      return kExitNotDrawable;
    case ErrorKind::Parse:
    case ErrorKind::DivisionByZero:
    case ErrorKind::InvalidArgument:
      return kExitParse;
  }
  return kExitParse;
}

namespace {

struct Options {
  std::string input;
  bool md = false;
  bool json = false;
  int line = 0;
  bool all_lines = false;
  bool all = false;
  int max_size = -1;
  int max_states = 4000;
  std::string samples;
  bool symbolic = false;
  bool recursive = false;
  int l_max = 12;
  std::string name;
  std::string param;
  bool svg = false;
  int infinity_line = 0;
  bool generic_chart = false;
  std::string viewport;
  int width = 600;
  std::string output;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

std::optional<Scalar> param_of(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_scalar(text);
}

void emit(std::ostream& out, const Options& o, const Json& j, const std::string& title) {
  if (o.md) {
    out << json_to_markdown(j, title);
  } else {
    out << j.dump(2) << "\n";
  }
}

void add_format_flags(CLI::App* sub, Options& o) {
  sub->add_flag("--json", o.json, "JSON report (default)");
  sub->add_flag("--md", o.md, "Markdown report");
}

CLI::App* input_command(CLI::App& app, const std::string& name, const std::string& help, Options& o) {
  CLI::App* sub = app.add_subcommand(name, help);
  sub->add_option("input", o.input, "arrangement file or catalog:name[?lambda=value]")->required();
  add_format_flags(sub, o);
  return sub;
}

Json analyze(const Arrangement& a) {
  LatticeData l = compute_lattice(a);
  FreenessResult r = is_free(a, l);
  Json j{{"field", field_to_json(a.ctx())}, {"size", a.size()}};
  j["charpoly"] = charpoly_to_json(r.chi);
  j["freeness"] = freeness_to_json(a, r);
  j["s_membership"] = r.is_free() ? Json(s_membership(l, r)) : Json();
  j["max_n"] = l.max_n();
  j["lattice"] = lattice_to_json(l);
  return j;
}

Json freeness(const Arrangement& a, const Options& o) {
  LatticeData l = compute_lattice(a);
  FreenessResult r;
  if (o.line > 0) {
    if (o.line > a.size()) fail(ErrorKind::InvalidArgument, "line number out of range");
    r = yoshinaga_test(a, l, char_poly(l), o.line - 1);
  } else {
    r = is_free(a, l);
  }
  Json j = freeness_to_json(a, r);
  if (o.all_lines) {
    CharPoly c = char_poly(l);
    Json per = Json::array();
    for (int h = 0; h < a.size(); ++h) {
      FreenessResult y = yoshinaga_test(a, l, c, h);
      per.push_back(Json{{"line", h + 1},
                         {"verdict", to_string(y.verdict)},
                         {"restriction_exponents",
                          Json::array({y.restriction_exponents->e1, y.restriction_exponents->e2})}});
    }
    j["per_line"] = per;
  }
  return j;
}

Json inductive(const Arrangement& a) {
  auto c = is_inductively_free(a);
  Json j{{"inductively_free", c.has_value()}};
  if (c) {
    j["verified"] = verify_chain(*c);
    j["chain"] = chain_to_json(*c);
  }
  return j;
}

Json recursive(const Arrangement& a, const Options& o) {
  RecursiveVerdict v = recursive_freeness_bounded(a, {o.max_size, o.max_states});
  Json j = recursive_to_json(v);
  if (v.chain) j["verified"] = verify_chain(*v.chain);
  return j;
}

Json additions(const Arrangement& a, const Options& o) {
  LatticeData l = compute_lattice(a);
  auto cands = o.all ? addition_candidates(a, l) : free_additions(a, l);
  Json arr = Json::array();
  for (const auto& c : cands) arr.push_back(addition_to_json(c));
  return Json{{"size", a.size()}, {"count", arr.size()}, {"additions", arr}};
}

Json deletions(const Arrangement& a, const Options& o) {
  LatticeData l = compute_lattice(a);
  auto cands = o.all ? deletion_candidates(a, l) : free_deletions(a, l);
  Json arr = Json::array();
  for (const auto& d : cands) arr.push_back(deletion_to_json(d));
  return Json{{"size", a.size()}, {"count", arr.size()}, {"deletions", arr}};
}

RenderOptions render_options(const Options& o) {
  RenderOptions r;
  if (o.infinity_line > 0) r.infinity_line = o.infinity_line - 1;
  r.generic_chart = o.generic_chart;
  if (!o.viewport.empty()) {
    auto parts = split(o.viewport, ',');
    if (parts.size() != 4) fail(ErrorKind::Parse, "viewport needs xmin,xmax,ymin,ymax");
    try {
      r.viewport = Viewport{std::stod(parts[0]), std::stod(parts[1]), std::stod(parts[2]), std::stod(parts[3])};
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, "malformed viewport " + o.viewport);
    }
  }
  r.width = o.width;
  return r;
}

void write_text(std::ostream& out, const Options& o, const std::string& text) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.output);
  if (!f) fail(ErrorKind::InvalidArgument, "cannot write " + o.output);
  f << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact freeness analysis of line arrangements in the projective plane", "arrfree"};
  app.require_subcommand(1);

  auto* c_analyze = input_command(app, "analyze", "lattice, characteristic polynomial and freeness", o);
  auto* c_charpoly = input_command(app, "charpoly", "characteristic polynomial and candidate exponents", o);
  auto* c_free = input_command(app, "freeness", "freeness verdict with certificate", o);
  c_free->add_option("--line", o.line, "force the restriction test on this line (1-based)");
  c_free->add_flag("--all-lines", o.all_lines, "run the restriction test on every line");
  auto* c_ind = input_command(app, "inductive", "inductive freeness chain", o);
  auto* c_rec = input_command(app, "recursive", "bounded recursive freeness search", o);
  c_rec->add_option("--max-size", o.max_size, "largest arrangement visited (default |A|+3)");
  c_rec->add_option("--max-states", o.max_states, "state budget");
  auto* c_add = input_command(app, "additions", "free one-line additions", o);
  c_add->add_flag("--all", o.all, "include refuted candidates");
  auto* c_del = input_command(app, "deletions", "free one-line deletions", o);
  c_del->add_flag("--all", o.all, "include refuted candidates");
  auto* c_aut = input_command(app, "aut", "lattice automorphism group", o);

  auto* c_scan = app.add_subcommand("scan-family", "classify members of a one-parameter family");
  c_scan->add_option("name", o.name, "family name")->required();
  c_scan->add_option("--samples", o.samples, "comma separated parameter values");
  c_scan->add_flag("--symbolic", o.symbolic, "add the row over the function field");
  c_scan->add_flag("--recursive", o.recursive, "run the recursive search per sample");
  c_scan->add_option("--max-size", o.max_size, "recursive search bound");
  add_format_flags(c_scan, o);

  auto* c_prof = app.add_subcommand("classify-profiles", "admissible (size, min exponent, profile) triples");
  c_prof->add_option("--max", o.l_max, "largest arrangement size")->check(CLI::Range(2, 64));
  add_format_flags(c_prof, o);

  auto* c_cat = app.add_subcommand("catalog", "named arrangements");
  c_cat->require_subcommand(1);
  auto* c_list = c_cat->add_subcommand("list", "list entries");
  add_format_flags(c_list, o);
  auto* c_get = c_cat->add_subcommand("get", "print an entry");
  c_get->add_option("name", o.name)->required();
  c_get->add_option("--param", o.param, "parameter value, or t for the symbolic family");
  c_get->add_flag("--svg", o.svg, "SVG drawing instead of JSON");
  add_format_flags(c_get, o);
  auto* c_check = c_cat->add_subcommand("check", "recompute and compare documented invariants");
  c_check->add_option("name", o.name)->required();
  c_check->add_option("--param", o.param, "parameter value");
  add_format_flags(c_check, o);

  auto* c_render = input_command(app, "render", "SVG drawing in an affine chart", o);
  c_render->add_option("--infinity-line", o.infinity_line, "line sent to infinity (1-based)");
  c_render->add_flag("--generic-chart", o.generic_chart, "send a line outside the arrangement to infinity");
  c_render->add_option("--viewport", o.viewport, "xmin,xmax,ymin,ymax");
  c_render->add_option("--width", o.width, "drawing width in pixels");
  c_render->add_option("-o,--output", o.output, "output file");

  std::vector<const char*> argv{"arrfree"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (c_analyze->parsed()) {
      emit(out, o, analyze(load_input(o.input)), "analyze " + o.input);
    } else if (c_charpoly->parsed()) {
      emit(out, o, charpoly_to_json(char_poly(load_input(o.input))), "charpoly " + o.input);
    } else if (c_free->parsed()) {
      emit(out, o, freeness(load_input(o.input), o), "freeness " + o.input);
    } else if (c_ind->parsed()) {
      emit(out, o, inductive(load_input(o.input)), "inductive " + o.input);
    } else if (c_rec->parsed()) {
      emit(out, o, recursive(load_input(o.input), o), "recursive " + o.input);
    } else if (c_add->parsed()) {
      emit(out, o, additions(load_input(o.input), o), "additions " + o.input);
    } else if (c_del->parsed()) {
      emit(out, o, deletions(load_input(o.input), o), "deletions " + o.input);
    } else if (c_aut->parsed()) {
      emit(out, o, automorphisms_to_json(lattice_automorphisms(compute_lattice(load_input(o.input)))),
           "aut " + o.input);
    } else if (c_scan->parsed()) {
      std::vector<Quad> samples;
      for (const auto& s : split(o.samples, ',')) {
        Scalar v = parse_scalar(s);
        if (v.is_parametric()) fail(ErrorKind::Parse, "sample must be a constant: " + s);
        samples.push_back(v.as_quad());
      }
      ScanOptions so;
      so.symbolic = o.symbolic;
      so.recursive = o.recursive;
      so.recursive_options.max_size = o.max_size;
      emit(out, o, scan_to_json(scan_family(catalog_family(o.name), samples, so)), "scan-family " + o.name);
    } else if (c_prof->parsed()) {
      Json arr = Json::array();
      for (const auto& p : classify_profiles(o.l_max)) arr.push_back(profile_triple_to_json(p));
      emit(out, o, Json{{"max", o.l_max}, {"triples", arr}}, "classify-profiles");
    } else if (c_list->parsed()) {
      Json arr = Json::array();
      for (const auto& e : catalog_list()) {
        arr.push_back(Json{{"name", e.name}, {"parameter", e.takes_parameter}, {"description", e.description}});
      }
      emit(out, o, Json{{"entries", arr}}, "catalog");
    } else if (c_get->parsed()) {
      Arrangement a = catalog_get(o.name, param_of(o.param));
      if (o.svg) {
        write_text(out, o, render_svg(a));
      } else {
        emit(out, o, arrangement_to_json(a), o.name);
      }
    } else if (c_check->parsed()) {
      SelfCheckReport r = catalog_selfcheck(o.name, param_of(o.param));
      emit(out, o, selfcheck_to_json(r), "check " + o.name);
      if (!r.ok()) {
        for (const auto& f : r.failures) err << "self-check failed: " << f << "\n";
        return kExitSelfCheck;
      }
    } else if (c_render->parsed()) {
      write_text(out, o, render_svg(load_input(o.input), render_options(o)));
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitOk;
}

}  // namespace arrfree
