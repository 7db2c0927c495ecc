#include "valtree/apprtype.hpp"
#include "valtree/diskoids.hpp"
#include "valtree/errors.hpp"
#include "valtree/newton.hpp"
#include "valtree/parse.hpp"
#include "valtree/suite.hpp"
#include "valtree/valuation.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace valtree;

namespace {

struct Globals {
  int depth = 64;
  std::string order = "16";
  int samples = 8;
  std::uint64_t seed = 1;
  bool timing = false;
};

// A literal failure inside an argument of a call, re-anchored in the whole text.
[[noreturn]] void rethrow_at(const ParseError& e, std::size_t offset) {
  std::string msg = e.what();
  auto cut = msg.rfind(" at position ");
  if (cut != std::string::npos) msg.resize(cut);
  throw ParseError(msg, offset + e.position());
}

template <class F>
auto inside(std::size_t offset, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError& e) {
    rethrow_at(e, offset);
  }
}

std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

Rational parse_rational(const std::string& s) {
  QuasiCut c = parse_radius(s);
  if (!c.is_elem()) throw ParseError("expected a rational", 0);
  return c.value();
}

CallSyntax expect_call(const std::string& text, const char* name, std::size_t nargs) {
  CallSyntax c = parse_call(text);
  if (c.name != name) throw ParseError(std::string("expected ") + name + "(...)", 0);
  if (nargs && c.args.size() != nargs)
    throw ParseError(std::string(name) + " takes " + std::to_string(nargs) + " arguments", 0);
  return c;
}

// nest(canonical, scale=.., shift=.., offset=.., skip=..) or `nest canonical key=value ...`
Nest parse_nest(const std::string& text) {
  std::string t = trim(text);
  std::vector<std::string> args;
  std::vector<std::size_t> offs;
  if (t.rfind("nest(", 0) == 0) {
    CallSyntax c = parse_call(t);
    args = c.args;
    offs = c.offsets;
  } else {
    std::istringstream in(t);
    std::string w;
    std::size_t pos = 0;
    while (in >> w) {
      pos = t.find(w, pos);
      args.push_back(w);
      offs.push_back(pos);
      pos += w.size();
    }
    if (!args.empty() && args[0] == "nest") {
      args.erase(args.begin());
      offs.erase(offs.begin());
    }
  }
  if (args.empty() || trim(args[0]) != "canonical") throw ParseError("unknown nest family (only `canonical`)", 0);
  Nest::Params p;
  for (std::size_t i = 1; i < args.size(); ++i) {
    std::string a = args[i];
    auto eq = a.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value", offs[i]);
    std::string key = trim(a.substr(0, eq)), val = a.substr(eq + 1);
    std::size_t at = offs[i] + eq + 1;
    if (key == "scale") p.scale = inside(at, [&] { return parse_rational(val); });
    else if (key == "shift") p.shift = inside(at, [&] { return parse_rational(val); });
    else if (key == "offset") p.offset = inside(at, [&] { return parse_puiseux(val); });
    else if (key == "skip") {
      Rational s = inside(at, [&] { return parse_rational(val); });
      if (s.get_den() != 1 || s < 0) throw ParseError("skip must be a nonnegative integer", at);
      p.skip = static_cast<int>(s.get_num().get_si());
    } else
      throw ParseError("unknown nest parameter `" + key + "`", offs[i]);
  }
  if (p.scale == 0) throw DomainError("nest scale must be nonzero");
  return Nest(p);
}

PointedBall parse_ball(const std::string& text) {
  CallSyntax c = expect_call(trim(text), "ball", 2);
  return {inside(c.offsets[0], [&] { return parse_puiseux(c.args[0]); }),
          inside(c.offsets[1], [&] { return parse_radius(c.args[1]); })};
}

ParamVal parse_val(const std::string& text) {
  std::string t = trim(text);
  if (t.rfind("nest", 0) == 0) return ParamVal::limit(parse_nest(t));
  if (t.rfind("limit(", 0) == 0) {
    CallSyntax c = expect_call(t, "limit", 1);
    return ParamVal::limit(inside(c.offsets[0], [&] { return parse_nest(c.args[0]); }));
  }
  CallSyntax c = expect_call(t, "mono", 2);
  return ParamVal::mono(inside(c.offsets[0], [&] { return parse_puiseux(c.args[0]); }),
                        inside(c.offsets[1], [&] { return parse_radius(c.args[1]); }));
}

// diskoid(<poly>, <radius>) over every root, or orbit(<poly>, k, <radius>) for one conjugacy group.
Diskoid parse_diskoid(const std::string& text, const Rational& order) {
  std::string t = trim(text);
  if (t.rfind("orbit(", 0) == 0) {
    CallSyntax c = expect_call(t, "orbit", 3);
    Poly f = inside(c.offsets[0], [&] { return parse_poly(c.args[0]); });
    Rational k = inside(c.offsets[1], [&] { return parse_rational(c.args[1]); });
    QuasiCut r = inside(c.offsets[2], [&] { return parse_radius(c.args[2]); });
    if (k.get_den() != 1 || k < 0) throw ParseError("root index must be a nonnegative integer", c.offsets[1]);
    return orbit_to_diskoid(f, k.get_num().get_ui(), r, order);
  }
  CallSyntax c = expect_call(t, "diskoid", 2);
  return diskoid_of_poly(inside(c.offsets[0], [&] { return parse_poly(c.args[0]); }),
                         inside(c.offsets[1], [&] { return parse_radius(c.args[1]); }), order);
}

ApprType parse_appr(const std::string& text) {
  std::string t = trim(text);
  if (t == "empty") return ApprType::empty();
  if (t.rfind("nest", 0) == 0) return appr_from_nest(parse_nest(t));
  return appr_from_ball(parse_ball(t));
}

json value_json(const ExtValue& v) {
  json j;
  if (v.is_inf()) {
    j["m"] = 0;
    j["gamma"] = "inf";
  } else {
    j["m"] = v.m();
    j["gamma"] = to_string(v.gamma());
    if (v.m() != 0) j["radius"] = v.delta()->to_string();
  }
  j["text"] = v.to_string();
  return j;
}

json groups_json(const std::vector<RootGroup>& gs) {
  json arr = json::array();
  for (const auto& g : gs) {
    json roots = json::array();
    for (const auto& r : g.roots) roots.push_back(r.to_string());
    arr.push_back({{"e", g.e}, {"size", g.size()}, {"roots", roots}});
  }
  return arr;
}

json diskoid_json(const Diskoid& d) {
  json roots = json::array(), skel = json::array();
  for (const auto& r : d.roots) roots.push_back(r.to_string());
  for (const auto& b : skeleton(d)) skel.push_back(b.to_string());
  return {{"text", d.to_string()}, {"e", d.e}, {"lc_val", to_string(d.lc_val)}, {"radius", d.radius.to_string()},
          {"roots", roots}, {"skeleton", skel}};
}

struct Failure {
  int code;
  json body;
};

Failure failure(int code, const char* type, const std::string& msg) {
  return {code, json{{"error", {{"type", type}, {"message", msg}}}}};
}

}  // namespace

int main(int argc, char** argv) {
  Globals G;
  if (const char* d = std::getenv("VALTREE_DEPTH")) G.depth = std::atoi(d);

  CLI::App app{"valuations on K[x], K = Q(t), through Puiseux-series balls"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--depth", G.depth, "nest depth for limits and order tests (env VALTREE_DEPTH)");
  app.add_option("--order", G.order, "Newton-Puiseux expansion order");
  app.add_option("--samples", G.samples, "random points for sampling oracles");
  app.add_option("--seed", G.seed, "seed for sampling oracles");
  app.add_flag("--timing", G.timing, "add elapsed seconds to the report");

  std::map<std::string, std::string> s;  // string options by name
  std::function<json()> action;
  int exit_code = 0;

  auto opt = [&](CLI::App* sub, const std::string& name, const std::string& help, bool required = true) {
    auto* o = sub->add_option("--" + name, s[name], help);
    if (required) o->required();
  };
  auto cmd = [&](const std::string& name, const std::string& help, std::function<json()> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  auto order = [&] { return parse_rational(G.order); };
  auto cfg = [&] { return EvalConfig{G.depth, order()}; };

  auto* c_eval = cmd("eval", "evaluate a valuation on a polynomial", [&]() -> json {
    ParamVal v = parse_val(s["val"]);
    Poly f = parse_poly(s["poly"]);
    json out;
    if (v.is_mono()) {
      ExtValue r = eval(v, f, cfg());
      out["value"] = value_json(r);
    } else {
      LimitTrace tr = limit_eval(v.nest(), f, cfg());
      out["value"] = value_json(tr.value);
      out["certificate"] = tr.certificate;
      json pre = json::array();
      for (const auto& p : tr.prefix) pre.push_back(p.to_string());
      out["prefix"] = pre;
    }
    out["input"] = {{"val", v.to_string()}, {"poly", f.to_string()}};
    return out;
  });
  opt(c_eval, "val", "mono(<center>, <radius>) or nest(canonical, ...)");
  opt(c_eval, "poly", "polynomial in x");

  auto* c_cmp = cmd("compare", "order two valuations", [&]() -> json {
    ParamVal a = parse_val(s["lhs"]), b = parse_val(s["rhs"]);
    Tri ab = val_leq(a, b, G.depth), ba = val_leq(b, a, G.depth);
    std::string ord = "UNKNOWN";
    if (ab == Tri::Yes && ba == Tri::Yes) ord = "EQ";
    else if (ab == Tri::Yes && ba == Tri::No) ord = "LT";
    else if (ab == Tri::No && ba == Tri::Yes) ord = "GT";
    else if (ab == Tri::No && ba == Tri::No) ord = "INCOMPARABLE";
    if (ord == "UNKNOWN") exit_code = 4;
    return {{"order", ord}, {"input", {{"lhs", a.to_string()}, {"rhs", b.to_string()}}}};
  });
  opt(c_cmp, "lhs", "valuation");
  opt(c_cmp, "rhs", "valuation");

  auto* c_cls = cmd("classify", "residue-transcendental / value-transcendental / valuation-algebraic", [&]() -> json {
    ParamVal v = parse_val(s["val"]);
    return {{"classification", to_string(classify(v))}, {"input", {{"val", v.to_string()}}}};
  });
  opt(c_cls, "val", "valuation");

  auto* c_beq = cmd("ball-eq", "pointed-ball equality", [&]() -> json {
    PointedBall a = parse_ball(s["lhs"]), b = parse_ball(s["rhs"]);
    return {{"equal", ball_eq(a, b)}, {"input", {{"lhs", a.to_string()}, {"rhs", b.to_string()}}}};
  });
  opt(c_beq, "lhs", "ball(<center>, <radius>)");
  opt(c_beq, "rhs", "ball(<center>, <radius>)");

  auto* c_bleq = cmd("ball-leq", "pointed-ball order, with a distinguishing polynomial when it fails", [&]() -> json {
    PointedBall a = parse_ball(s["lhs"]), b = parse_ball(s["rhs"]);
    json out{{"leq", pointed_leq(a, b)}};
    if (!out["leq"].get<bool>()) {
      Poly w = distinguishing_witness(a, b);
      out["witness"] = w.to_string();
      out["witness_values"] = {value_json(eval(ParamVal::mono(a.center, a.radius), w)),
                               value_json(eval(ParamVal::mono(b.center, b.radius), w))};
    }
    out["input"] = {{"lhs", a.to_string()}, {"rhs", b.to_string()}};
    return out;
  });
  opt(c_bleq, "lhs", "ball");
  opt(c_bleq, "rhs", "ball");

  int terms = 8;
  auto* c_nest = cmd("nest-check", "verify strict descent of a nest and list its first balls", [&]() -> json {
    Nest n = parse_nest(s["nest"]);
    bool ok = nest_check(n, terms);
    json balls = json::array();
    for (int i = 0; i < terms; ++i) balls.push_back(n.ball(i).to_string());
    return {{"descending", ok}, {"support", support_string(n.support_cut())}, {"balls", balls},
            {"input", {{"nest", n.to_string()}}}};
  });
  opt(c_nest, "nest", "nest(canonical, ...) or `nest canonical key=value ...`");
  c_nest->add_option("--terms", terms, "number of balls to check and list");

  auto* c_wn = cmd("weneed", "case analysis of a monomial value against its ball", [&]() -> json {
    PuiseuxElt a = parse_puiseux(s["center"]);
    QuasiCut d = parse_radius(s["radius"]);
    Poly f = parse_poly(s["poly"]);
    WeneedReport r = weneed_check(a, d, f, 10, G.seed);
    json S = json::array();
    for (int n : r.s) S.push_back(n);
    json out{{"value", value_json(r.value)}, {"case", std::string(1, r.which)}, {"ok", r.ok}, {"argmin", S}};
    if (r.min_v) out["min"] = value_json(*r.min_v);
    if (!r.witness.empty()) out["witness"] = r.witness;
    out["checks"] = r.checks;
    out["detail"] = r.detail;
    out["oracle"] = "direct evaluation at the center and sampled ball points";
    out["input"] = {{"center", a.to_string()}, {"radius", d.to_string()}, {"poly", f.to_string()}};
    return out;
  });
  opt(c_wn, "center", "Puiseux element");
  opt(c_wn, "radius", "radius");
  opt(c_wn, "poly", "polynomial");

  auto* c_dm = cmd("diskoid-member", "membership in D(f, radius)", [&]() -> json {
    Poly f = parse_poly(s["poly"]);
    QuasiCut d = parse_radius(s["radius"]);
    PuiseuxElt c = parse_puiseux(s["point"]);
    Diskoid D = diskoid_of_poly(f, d, order());
    return {{"member", disk_member(D, c)}, {"diskoid", diskoid_json(D)},
            {"groups", groups_json(puiseux_roots(f, order()))},
            {"input", {{"poly", f.to_string()}, {"radius", d.to_string()}, {"point", c.to_string()}}}};
  });
  opt(c_dm, "poly", "polynomial");
  opt(c_dm, "radius", "radius");
  opt(c_dm, "point", "Puiseux element");

  int root_index = 0;
  auto* c_do = cmd("diskoid-of-orbit", "union of conjugate balls around one root of f", [&]() -> json {
    Poly f = parse_poly(s["poly"]);
    QuasiCut d = parse_radius(s["radius"]);
    if (root_index < 0) throw DomainError("root index must be nonnegative");
    Diskoid D = orbit_to_diskoid(f, static_cast<std::size_t>(root_index), d, order());
    return {{"diskoid", diskoid_json(D)}, {"groups", groups_json(puiseux_roots(f, order()))},
            {"input", {{"poly", f.to_string()}, {"root_index", root_index}, {"radius", d.to_string()}}}};
  });
  opt(c_do, "poly", "polynomial");
  opt(c_do, "radius", "radius");
  c_do->add_option("--root-index", root_index, "root in group order")->required();

  auto* c_dl = cmd("disk-leq", "diskoid order D <= E (D contains E, radius grows)", [&]() -> json {
    Diskoid a = parse_diskoid(s["lhs"], order()), b = parse_diskoid(s["rhs"], order());
    return {{"leq", disk_leq(a, b, G.samples, G.seed)},
            {"oracle", "skeleton containment cross-checked on sampled points"},
            {"input", {{"lhs", a.to_string()}, {"rhs", b.to_string()}}}};
  });
  opt(c_dl, "lhs", "diskoid(<poly>, <radius>) or orbit(<poly>, k, <radius>)");
  opt(c_dl, "rhs", "diskoid(<poly>, <radius>) or orbit(<poly>, k, <radius>)");

  auto* c_sv = cmd("support-val", "v_F(g) for the conjugacy group of a root of f", [&]() -> json {
    Poly f = parse_poly(s["poly"]), g = parse_poly(s["of"]);
    auto groups = puiseux_roots(f, order());
    std::size_t k = static_cast<std::size_t>(std::max(root_index, 0));
    for (const auto& grp : groups) {
      if (k < grp.size()) {
        return {{"value", to_string(support_val(grp, g))}, {"e", grp.e}, {"group_size", grp.size()},
                {"input", {{"poly", f.to_string()}, {"root_index", root_index}, {"of", g.to_string()}}}};
      }
      k -= grp.size();
    }
    throw DomainError("root index out of range");
  });
  opt(c_sv, "poly", "polynomial f");
  opt(c_sv, "of", "polynomial g");
  c_sv->add_option("--root-index", root_index, "root in group order");

  auto* c_ap = cmd("appr", "approximation type of a ball or nest", [&]() -> json {
    ApprType a = parse_appr(s["from"]);
    return {{"kind", a.kind_name()}, {"support", support_string(appr_support(a))},
            {"classification", to_string(appr_classify(a))}, {"text", a.to_string()},
            {"input", {{"from", trim(s["from"])}}}};
  });
  opt(c_ap, "from", "ball(...) or nest(...)");

  auto* c_am = cmd("appr-member", "is a ball in an approximation type", [&]() -> json {
    ApprType a = parse_appr(s["appr"]);
    PointedBall b = parse_ball(s["ball"]);
    Tri t = appr_member(a, b, G.depth);
    if (t == Tri::Unknown) exit_code = 4;
    return {{"member", to_string(t)}, {"input", {{"appr", a.to_string()}, {"ball", b.to_string()}}}};
  });
  opt(c_am, "appr", "ball(...) or nest(...)");
  opt(c_am, "ball", "ball(...)");

  std::vector<int> only;
  bool as_json = false;
  auto* c_suite = cmd("suite", "run the acceptance corpora", [&]() -> json {
    auto results = run_suite(G.seed == 1 ? 20240601 : G.seed, only);
    int failed = 0;
    json arr = json::array();
    for (const auto& r : results) {
      failed += !r.pass;
      json e{{"criterion", r.id}, {"name", r.name}, {"pass", r.pass}, {"cases", r.cases}, {"detail", r.detail}};
      if (G.timing) e["seconds"] = r.seconds;
      arr.push_back(e);
      if (!as_json)
        std::printf("%-4s %2d  %s\n      %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.detail.c_str());
    }
    if (failed) exit_code = 1;
    if (!as_json) {
      std::printf("%zu/%zu criteria pass\n", results.size() - static_cast<std::size_t>(failed), results.size());
      return nullptr;
    }
    return {{"criteria", arr}, {"passed", results.size() - static_cast<std::size_t>(failed)}};
  });
  c_suite->add_option("--only", only, "criterion numbers to run");
  c_suite->add_flag("--json", as_json, "JSON report instead of a table");

  Failure fail{0, nullptr};
  try {
    app.parse(argc, argv);
    auto t0 = std::chrono::steady_clock::now();
    json out = action();
    if (!out.is_null()) {
      if (G.timing) out["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      std::cout << out.dump() << "\n";
    }
    return exit_code;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    fail = failure(2, "usage", e.what());
  } catch (const ParseError& e) {
    fail = failure(2, "parse", e.what());
    fail.body["error"]["position"] = e.position();
  } catch (const StabilizationDepthExceeded& e) {
    fail = failure(4, "depth_exceeded", e.what());
  } catch (const IndeterminateValuation& e) {
    fail = failure(4, "indeterminate", e.what());
  } catch (const UnsupportedCoefficientField& e) {
    fail = failure(3, "unsupported_coefficient_field", e.what());
  } catch (const DomainError& e) {
    fail = failure(3, "domain", e.what());
  } catch (const Error& e) {
    fail = failure(3, "error", e.what());
  }
  std::cout << fail.body.dump() << "\n";
  return fail.code;
}
